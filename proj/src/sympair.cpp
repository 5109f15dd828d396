#include "symcoh/sympair.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace symcoh {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

bool SymmetricPair::root_is_fixed(int pos_idx) const { return fixed_root_[pos_idx]; }

Weight SymmetricPair::theta_apply(const Weight& lambda) const {
    return Weight(mat_vec(theta_, lambda.f));
}

std::vector<int> SymmetricPair::theta_root(const std::vector<int>& alpha) const {
    RatVec c(alpha.begin(), alpha.end());
    RatVec image = mat_vec(theta_simple_, c);
    std::vector<int> out(image.size());
    for (size_t i = 0; i < image.size(); ++i) {
        if (!is_integer(image[i])) throw std::logic_error("theta_root: non-integral image");
        out[i] = static_cast<int>(to_integer(image[i]));
    }
    return out;
}

std::optional<RatVec> SymmetricPair::special_coords(const Weight& lambda) const {
    RatMat basis(ambient_rank(), RatVec(r_));
    for (int j = 0; j < r_; ++j)
        for (int i = 0; i < ambient_rank(); ++i) basis[i][j] = otilde_[j][i];
    return solve_unique(basis, lambda.f);
}

bool SymmetricPair::in_special_lattice(const Weight& lambda) const {
    auto c = special_coords(lambda);
    if (!c) return false;
    return std::all_of(c->begin(), c->end(), [](const Rat& q) { return is_integer(q); });
}

Weight SymmetricPair::weight_from_special(const std::vector<Int>& coords) const {
    if (static_cast<int>(coords.size()) != r_)
        throw std::invalid_argument("weight_from_special: need " + std::to_string(r_) + " coordinates");
    Weight w = Weight::zero(ambient_rank());
    for (int i = 0; i < r_; ++i) w += Rat(coords[i]) * otilde_[i];
    return w;
}

std::optional<Weight> SymmetricPair::weight_from_units(const std::vector<Int>& units) const {
    if (static_cast<int>(units.size()) != r_) return std::nullopt;
    std::vector<Int> coords(r_);
    for (int i = 0; i < r_; ++i) {
        if (units[i] % unit_scale_[i] != 0) return std::nullopt;
        coords[i] = units[i] / unit_scale_[i];
    }
    return weight_from_special(coords);
}

std::optional<std::vector<Int>> SymmetricPair::r_cone_member(IndexSet J, const Weight& delta) const {
    RatMat basis(ambient_rank(), RatVec(r_));
    for (int j = 0; j < r_; ++j)
        for (int i = 0; i < ambient_rank(); ++i) basis[i][j] = atilde_[j][i];
    auto k = solve_unique(basis, delta.f);
    if (!k) return std::nullopt;
    std::vector<Int> out(r_);
    for (int i = 0; i < r_; ++i) {
        if (!is_integer((*k)[i])) return std::nullopt;
        out[i] = to_integer((*k)[i]);
        const bool in_j = (J >> i) & 1;
        if (in_j && out[i] <= 0) return std::nullopt;
        if (!in_j && out[i] > 0) return std::nullopt;
    }
    return out;
}

bool SymmetricPair::omega_cone_member(IndexSet J, const Weight& nu) const {
    auto c = special_coords(nu);
    if (!c) return false;
    for (int i = 0; i < r_; ++i) {
        if (!is_integer((*c)[i])) return false;
        const bool in_j = (J >> i) & 1;
        if (in_j && !((*c)[i] < -rho_coeffs_[i])) return false;
        if (!in_j && !((*c)[i] > -rho_coeffs_[i])) return false;
    }
    return true;
}

SymmetricPair build_pair(SatakeSpec input) {
    SymmetricPair pair;
    pair.spec_ = std::move(input);
    const SatakeSpec& spec = pair.spec_;
    const RootSystem& rs = spec.rs;
    const int n = rs.rank();

    std::vector<bool> black(n, false);
    for (int d : spec.delta0) {
        require(d >= 0 && d < n, spec.name + ": delta0 index out of range");
        require(!black[d], spec.name + ": duplicate delta0 index");
        black[d] = true;
    }
    require(static_cast<int>(spec.thetabar.size()) == n, spec.name + ": thetabar must cover all nodes");
    for (int i = 0; i < n; ++i) {
        int t = spec.thetabar[i];
        require(t >= 0 && t < n, spec.name + ": thetabar index out of range");
        if (black[i]) {
            require(t == i, spec.name + ": thetabar must fix blackened nodes");
        } else {
            require(!black[t], spec.name + ": thetabar must preserve the white nodes");
            require(spec.thetabar[t] == i, spec.name + ": thetabar is not an involution");
        }
    }

    const auto& C = rs.cartan();
    std::vector<int> d0;
    for (int i = 0; i < n; ++i)
        if (black[i]) d0.push_back(i);
    const int n0 = static_cast<int>(d0.size());

    // theta on the simple-root basis.  On Delta_0 it is the identity; on
    // Delta_1, theta(a) = -thetabar(a) - sum m_d d with the m determined by
    // <theta(a), d^vee> = <a, d^vee> over the (invertible) Delta_0 block.
    RatMat theta_simple(n, RatVec(n, 0));
    for (int i : d0) theta_simple[i][i] = 1;
    RatMat block(n0, RatVec(n0));
    for (int p = 0; p < n0; ++p)
        for (int q = 0; q < n0; ++q) block[p][q] = C[d0[p]][d0[q]];
    for (int a = 0; a < n; ++a) {
        if (black[a]) continue;
        const int tb = spec.thetabar[a];
        RatVec rhs(n0);
        for (int p = 0; p < n0; ++p) rhs[p] = -Rat(C[d0[p]][a]) - Rat(C[d0[p]][tb]);
        RatVec m(n0, 0);
        if (n0 > 0) {
            auto sol = solve_unique(block, rhs);
            require(sol.has_value(), spec.name + ": Delta_0 Cartan block is singular");
            m = *sol;
            for (const Rat& mi : m)
                require(is_integer(mi) && mi >= 0,
                        spec.name + ": the m coefficients must be nonnegative integers");
        }
        theta_simple[tb][a] = -1;
        for (int p = 0; p < n0; ++p) theta_simple[d0[p]][a] -= m[p];
    }

    // theta must square to the identity...
    {
        RatMat sq = mat_mul(theta_simple, theta_simple);
        require(sq == identity_matrix(n), spec.name + ": theta is not an involution");
    }
    // ...preserve the invariant form...
    {
        RatMat bform(n, RatVec(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) bform[i][j] = Rat(rs.symmetrizer()[i]) * Rat(C[i][j]);
        RatMat t = transpose(theta_simple);
        require(mat_mul(t, mat_mul(bform, theta_simple)) == bform,
                spec.name + ": theta does not preserve the invariant form");
    }

    RatMat cmat(n, RatVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) cmat[i][j] = C[i][j];
    RatMat theta_fund = mat_mul(cmat, mat_mul(theta_simple, *inverse(cmat)));

    pair.theta_ = std::move(theta_fund);
    pair.theta_simple_ = std::move(theta_simple);

    // ...and permute the roots, sending moved positive roots to negatives.
    const auto& pos = rs.positive_roots();
    pair.fixed_root_.resize(pos.size());
    for (size_t k = 0; k < pos.size(); ++k) {
        std::vector<int> image = pair.theta_root(pos[k]);
        auto idx = rs.signed_root_index(image);
        require(idx.has_value(), pair.spec_.name + ": theta does not permute the root system");
        pair.fixed_root_[k] = (image == pos[k]);
        if (!pair.fixed_root_[k]) {
            require(idx->second < 0,
                    pair.spec_.name + ": theta sends a moved positive root to a positive root");
            pair.phi1_pos_.push_back(static_cast<int>(k));
        }
    }

    // Restricted simple roots, one representative per distinct value, in
    // simple-root order of first occurrence.
    for (int a = 0; a < n; ++a) {
        if (black[a]) continue;
        Weight at = rs.simple_root(a) - Weight(mat_vec(pair.theta_, rs.simple_root(a).f));
        bool known = false;
        for (const auto& seen : pair.atilde_)
            if (seen == at) { known = true; break; }
        if (!known) {
            pair.atilde_.push_back(at);
            pair.rep_.push_back(a);
        }
    }
    pair.r_ = static_cast<int>(pair.atilde_.size());
    require(pair.r_ >= 1, pair.spec_.name + ": no white nodes (restricted rank zero)");
    {
        RatMat m(pair.r_, RatVec(n));
        for (int i = 0; i < pair.r_; ++i) m[i] = pair.atilde_[i].f;
        require(matrix_rank(m) == pair.r_,
                pair.spec_.name + ": restricted simple roots are dependent");
    }

    // Special basis by the three diagram cases.
    for (int i = 0; i < pair.r_; ++i) {
        const int a = pair.rep_[i];
        const int tb = pair.spec_.thetabar[a];
        Weight minus_alpha = -rs.simple_root(a);
        if (tb != a) {
            pair.otilde_.push_back(rs.fundamental_weight(a) + rs.fundamental_weight(tb));
            pair.unit_scale_.push_back(1);
        } else if (pair.theta_apply(rs.simple_root(a)) != minus_alpha) {
            pair.otilde_.push_back(rs.fundamental_weight(a));
            pair.unit_scale_.push_back(1);
        } else {
            pair.otilde_.push_back(Rat(2) * rs.fundamental_weight(a));
            pair.unit_scale_.push_back(2);
        }
    }

    for (int i = 0; i < pair.r_; ++i) {
        Rat num = rs.inner(rs.rho(), pair.atilde_[i]);
        Rat den = rs.inner(pair.otilde_[i], pair.atilde_[i]);
        require(den != 0, pair.spec_.name + ": degenerate special pairing");
        Rat rho_i = num / den;
        require(rho_i > 0, pair.spec_.name + ": rho coefficient not positive");
        pair.rho_coeffs_.push_back(rho_i);
    }

    // atilde in the special basis; integrality is structural, negativity is
    // only recorded (see the region enumeration, which assumes neither).
    pair.atilde_special_.assign(pair.r_, std::vector<Int>(pair.r_));
    for (int j = 0; j < pair.r_; ++j) {
        auto c = pair.special_coords(pair.atilde_[j]);
        require(c.has_value(), pair.spec_.name + ": atilde outside the special lattice span");
        for (int i = 0; i < pair.r_; ++i) {
            require(is_integer((*c)[i]),
                    pair.spec_.name + ": atilde has non-integral special coordinates");
            pair.atilde_special_[i][j] = to_integer((*c)[i]);
            if (pair.atilde_special_[i][j] < 0) {
                std::ostringstream os;
                os << "atilde_" << (j + 1) << " has negative coordinate on otilde_" << (i + 1);
                pair.warnings_.push_back(os.str());
            }
        }
    }

    return pair;
}

namespace {

SatakeSpec split_spec(char family, int rank, const std::string& name) {
    SatakeSpec s;
    s.rs = RootSystem::build(family, rank);
    s.thetabar.resize(rank);
    for (int i = 0; i < rank; ++i) s.thetabar[i] = i;
    s.name = name;
    return s;
}

SatakeSpec one_white_spec(char family, int rank, int white, const std::string& name) {
    SatakeSpec s;
    s.rs = RootSystem::build(family, rank);
    s.thetabar.resize(rank);
    for (int i = 0; i < rank; ++i) s.thetabar[i] = i;
    for (int i = 0; i < rank; ++i)
        if (i != white) s.delta0.push_back(i);
    s.name = name;
    return s;
}

void require_n(bool ok, const std::string& name) {
    if (!ok) throw std::invalid_argument("catalog: invalid parameter n for " + name);
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = {
        {"A1-split", false, 0, "split A1 (PGL2/PSO2, the projective plane)"},
        {"P2", false, 0, "alias of A1-split"},
        {"A1xA1", false, 0, "group case PGL2 x PGL2 / PGL2"},
        {"AII", false, 0, "SL4/Sp4 (A3, middle node white)"},
        {"AIV", true, 2, "SL_{n+1}/GL_n type (A_n, white ends joined)"},
        {"BII", true, 2, "SO_{2n+1}/SO_{2n} (B_n, first node white)"},
        {"CII", true, 2, "Sp_{2n}/Sp_2 x Sp_{2n-2} (C_n, second node white)"},
        {"DII", true, 4, "SO_{2n}/SO_{2n-1} (D_n, first node white)"},
        {"FII", false, 0, "F4/Spin9, the Cayley plane"},
        {"conics", false, 0, "split A2 (PGL3/PSO3, complete conics)"},
        {"split-A", true, 1, "split A_n (PGL_{n+1}/PSO_{n+1})"},
        {"CnH4", true, 4, "Sp_{2n}/Sp_4 x Sp_{2n-4} (C_n)"},
    };
    return entries;
}

SymmetricPair catalog(const std::string& name, int n) {
    if (name == "A1-split" || name == "P2") return build_pair(split_spec('A', 1, name));
    if (name == "conics") return build_pair(split_spec('A', 2, name));
    if (name == "split-A") {
        require_n(n >= 1, name);
        return build_pair(split_spec('A', n, name + "(" + std::to_string(n) + ")"));
    }
    if (name == "A1xA1") {
        SatakeSpec s;
        s.rs = RootSystem::build_from_cartan("A1xA1", {{2, 0}, {0, 2}});
        s.thetabar = {1, 0};
        s.name = name;
        return build_pair(std::move(s));
    }
    if (name == "AII") return build_pair(one_white_spec('A', 3, 1, name));
    if (name == "AIV") {
        require_n(n >= 2, name);
        SatakeSpec s;
        s.rs = RootSystem::build('A', n);
        s.thetabar.resize(n);
        for (int i = 0; i < n; ++i) s.thetabar[i] = i;
        s.thetabar[0] = n - 1;
        s.thetabar[n - 1] = 0;
        for (int i = 1; i + 1 < n; ++i) s.delta0.push_back(i);
        s.name = name + "(" + std::to_string(n) + ")";
        return build_pair(std::move(s));
    }
    if (name == "BII") {
        require_n(n >= 2, name);
        return build_pair(one_white_spec('B', n, 0, name + "(" + std::to_string(n) + ")"));
    }
    if (name == "CII") {
        require_n(n >= 2, name);
        return build_pair(one_white_spec('C', n, 1, name + "(" + std::to_string(n) + ")"));
    }
    if (name == "DII") {
        require_n(n >= 4, name);
        return build_pair(one_white_spec('D', n, 0, name + "(" + std::to_string(n) + ")"));
    }
    if (name == "FII") return build_pair(one_white_spec('F', 4, 3, name));
    if (name == "CnH4") {
        require_n(n >= 4, name);
        SatakeSpec s;
        s.rs = RootSystem::build('C', n);
        s.thetabar.resize(n);
        for (int i = 0; i < n; ++i) s.thetabar[i] = i;
        s.delta0 = {0, 2};
        for (int i = 4; i < n; ++i) s.delta0.push_back(i);
        s.name = name + "(" + std::to_string(n) + ")";
        return build_pair(std::move(s));
    }
    throw std::invalid_argument("catalog: unknown pair '" + name + "'");
}

}  // namespace symcoh
