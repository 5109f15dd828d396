#include "symcoh/charring.hpp"

#include <algorithm>
#include <numeric>

namespace symcoh {

namespace {

// Offset of mu below the anchor in simple-root coordinates, if integral.
std::optional<std::vector<int>> offset_below(const RootSystem& rs, const Weight& anchor,
                                             const Weight& mu) {
    RatVec c = rs.simple_coords(anchor - mu);
    std::vector<int> out(c.size());
    for (size_t i = 0; i < c.size(); ++i) {
        if (!is_integer(c[i])) return std::nullopt;
        out[i] = static_cast<int>(to_integer(c[i]));
    }
    return out;
}

std::vector<int> direction_coords(const RootSystem& rs, const Weight& dir) {
    auto c = offset_below(rs, dir, Weight::zero(rs.rank()));
    if (!c || std::any_of(c->begin(), c->end(), [](int x) { return x < 0; }) ||
        std::all_of(c->begin(), c->end(), [](int x) { return x == 0; }))
        throw std::invalid_argument(
            "denominator weight is not a nonzero element of the positive root cone");
    return *c;
}

}  // namespace

FormalCharacter::FormalCharacter(const RootSystem& rs, Weight anchor, int cutoff)
    : rs_(&rs), anchor_(std::move(anchor)), cutoff_(cutoff) {
    if (cutoff < 0) throw std::invalid_argument("FormalCharacter: negative cutoff");
    const int r = rs.rank();
    binom_.assign(cutoff_ + 2, std::vector<unsigned long long>(r + 1, 1));
    for (int k = 1; k <= cutoff_ + 1; ++k)
        for (int j = 1; j <= r; ++j) {
            binom_[k][j] = binom_[k - 1][j] + binom_[k][j - 1];
            if (binom_[k][j] > 4'000'000'000'000ULL)
                throw std::invalid_argument("FormalCharacter: truncation simplex too large");
        }
    const unsigned long long size = binom_[cutoff_][r];  // C(cutoff + r, r)
    if (size > 40'000'000)
        throw std::invalid_argument("FormalCharacter: truncation simplex too large");
    coeff_.assign(static_cast<size_t>(size), 0);
}

void FormalCharacter::set_leading(long long value) { coeff_[0] = value; }

size_t FormalCharacter::offset_index(const std::vector<int>& offset) const {
    // Lexicographic rank on the simplex {sum <= cutoff}: the block of points
    // with first coordinate < c_0 has size C(h+r, r) - C(h-c_0+r, r).
    size_t idx = 0;
    int budget = cutoff_;
    const int r = rs_->rank();
    for (int i = 0; i < r; ++i) {
        const int rem = r - i;
        idx += static_cast<size_t>(binom_[budget][rem] - binom_[budget - offset[i]][rem]);
        budget -= offset[i];
    }
    return idx;
}

bool FormalCharacter::next_offset(std::vector<int>& offset) const {
    const int r = rs_->rank();
    int sum = std::accumulate(offset.begin(), offset.end(), 0);
    if (sum < cutoff_) {
        ++offset[r - 1];
        return true;
    }
    // Budget exhausted: clear the tail and carry into the previous coordinate.
    for (int i = r - 1; i >= 0; --i) {
        if (offset[i] > 0) {
            if (i == 0) return false;
            offset[i] = 0;
            ++offset[i - 1];
            return true;
        }
    }
    return false;
}

long long FormalCharacter::coeff_at_offset(const std::vector<int>& offset) const {
    int sum = 0;
    for (int x : offset) {
        if (x < 0) return 0;
        sum += x;
    }
    if (sum > cutoff_) throw TruncationWindowError("coefficient beyond the truncation cutoff");
    return coeff_[offset_index(offset)];
}

long long FormalCharacter::coeff_at(const Weight& mu) const {
    auto offset = offset_below(*rs_, anchor_, mu);
    if (!offset) return 0;
    for (int x : *offset)
        if (x < 0) return 0;
    return coeff_at_offset(*offset);
}

void FormalCharacter::mul_geometric(const std::vector<int>& dir) {
    const int r = rs_->rank();
    if (std::accumulate(dir.begin(), dir.end(), 0) == 0)
        throw std::invalid_argument("mul_geometric: zero direction");
    // In-place ascending pass: lex order visits c - dir before c.
    std::vector<int> offset(r, 0), below(r);
    size_t idx = 0;
    do {
        bool in_cone = true;
        for (int i = 0; i < r; ++i) {
            below[i] = offset[i] - dir[i];
            if (below[i] < 0) in_cone = false;
        }
        if (in_cone) coeff_[idx] += coeff_[offset_index(below)];
        ++idx;
    } while (next_offset(offset));
}

void FormalCharacter::mul_one_minus(const std::vector<int>& dir) {
    const int r = rs_->rank();
    std::vector<long long> old = coeff_;
    std::vector<int> offset(r, 0), below(r);
    size_t idx = 0;
    do {
        bool in_cone = true;
        for (int i = 0; i < r; ++i) {
            below[i] = offset[i] - dir[i];
            if (below[i] < 0) in_cone = false;
        }
        if (in_cone) coeff_[idx] = old[idx] - old[offset_index(below)];
        ++idx;
    } while (next_offset(offset));
}

FormalCharacter FormalCharacter::product(const FormalCharacter& other) const {
    if (rs_ != other.rs_) throw std::invalid_argument("product: mismatched root systems");
    FormalCharacter out(*rs_, anchor_ + other.anchor_, std::min(cutoff_, other.cutoff_));
    const int r = rs_->rank();
    std::vector<int> a(r, 0);
    size_t ia = 0;
    do {
        if (coeff_[ia] != 0) {
            std::vector<int> b(r, 0), sum(r);
            size_t ib = 0;
            do {
                if (other.coeff_[ib] != 0) {
                    int total = 0;
                    for (int i = 0; i < r; ++i) {
                        sum[i] = a[i] + b[i];
                        total += sum[i];
                    }
                    if (total <= out.cutoff_)
                        out.coeff_[out.offset_index(sum)] += coeff_[ia] * other.coeff_[ib];
                }
                ++ib;
            } while (other.next_offset(b));
        }
        ++ia;
    } while (next_offset(a));
    return out;
}

FormalCharacter verma_character(const RootSystem& rs, const Weight& lambda, int cutoff) {
    FormalCharacter chr(rs, lambda, cutoff);
    chr.set_leading(1);
    for (const auto& alpha : rs.positive_roots()) chr.mul_geometric(alpha);
    return chr;
}

FormalCharacter support_character(const RootSystem& rs, const CellLocalData& data, int cutoff) {
    FormalCharacter chr(rs, data.lambda_prime, cutoff);
    chr.set_leading(1);
    for (const Weight& w : data.pos_denoms) chr.mul_geometric(direction_coords(rs, w));
    for (const Weight& w : data.neg_denoms) chr.mul_geometric(direction_coords(rs, w));
    for (const Weight& w : data.double_denoms) {
        auto dir = direction_coords(rs, w);
        chr.mul_geometric(dir);
        chr.mul_geometric(dir);
    }
    return chr;
}

int extraction_margin(const RootSystem& rs) {
    int margin = 0;
    for (const auto& alpha : rs.positive_roots())
        margin += std::accumulate(alpha.begin(), alpha.end(), 0);
    return margin;
}

long long multiplicity_extraction(const RootSystem& rs, const FormalCharacter& chr,
                                  const Weight& mu) {
    if (!rs.is_dominant(mu) || !mu.is_integral())
        throw std::invalid_argument("multiplicity_extraction: mu must be dominant integral");
    RatVec raw = rs.simple_coords(chr.anchor() - mu);
    std::vector<int> offset(raw.size());
    bool integral = true, in_cone = true;
    int height = 0;
    for (size_t i = 0; i < raw.size(); ++i) {
        if (!is_integer(raw[i])) {
            integral = false;
        } else {
            offset[i] = static_cast<int>(to_integer(raw[i]));
            if (offset[i] < 0) in_cone = false;
            height += offset[i];
        }
    }
    if (!integral || !in_cone) return 0;  // exactly zero: outside the support cone
    if (height + extraction_margin(rs) > chr.cutoff())
        throw TruncationWindowError("mu outside the reliable extraction window");

    FormalCharacter sharpened = chr;
    for (const auto& alpha : rs.positive_roots()) sharpened.mul_one_minus(alpha);
    return sharpened.coeff_at_offset(offset);
}

std::optional<CellLocalData> closed_orbit_cell_data(const SymmetricPair& pair,
                                                    const std::vector<int>& word,
                                                    const Weight& lambda, const Coweight& zeta) {
    require_special_lattice(pair, lambda);
    const RootSystem& rs = pair.rs();

    std::vector<Weight> tangent;
    for (int idx : pair.phi1_positive())
        tangent.push_back(rs.apply_word(word, rs.weight_of_positive_root(idx)));
    for (int i = 0; i < pair.rank_restricted(); ++i)
        tangent.push_back(rs.apply_word(word, pair.restricted_simple()[i]));

    CellLocalData data;
    data.lambda_prime = rs.apply_word(word, lambda);
    for (const Weight& gamma : tangent) {
        Rat s = coweight_pairing(rs, gamma, zeta);
        if (s == 0) throw std::invalid_argument("closed_orbit_cell_data: zeta pairs to zero");
        if (s > 0) {
            data.pos_denoms.push_back(gamma);
        } else {
            data.neg_denoms.push_back(-gamma);
            data.lambda_prime += gamma;
        }
    }

    // Each direction must lie in the downward cone for the series to exist.
    auto representable = [&rs](const Weight& w) {
        RatVec c = rs.simple_coords(w);
        for (const Rat& q : c)
            if (!is_integer(q) || q < 0) return false;
        return true;
    };
    for (const Weight& w : data.pos_denoms)
        if (!representable(w)) return std::nullopt;
    for (const Weight& w : data.neg_denoms)
        if (!representable(w)) return std::nullopt;
    return data;
}

}  // namespace symcoh
