#include "symcoh/rootsys.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace symcoh {

Weight& Weight::operator+=(const Weight& o) {
    assert(f.size() == o.f.size());
    for (size_t i = 0; i < f.size(); ++i) f[i] += o.f[i];
    return *this;
}

Weight& Weight::operator-=(const Weight& o) {
    assert(f.size() == o.f.size());
    for (size_t i = 0; i < f.size(); ++i) f[i] -= o.f[i];
    return *this;
}

Weight operator*(const Rat& c, Weight a) {
    for (auto& x : a.f) x *= c;
    return a;
}

Weight Weight::operator-() const {
    Weight w(*this);
    for (auto& x : w.f) x = -x;
    return w;
}

bool Weight::is_integral() const {
    return std::all_of(f.begin(), f.end(), [](const Rat& q) { return is_integer(q); });
}

std::string Weight::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i];
    os << ")";
    return os.str();
}

namespace {

std::vector<std::vector<int>> cartan_for_family(char family, int rank) {
    auto chain = [&](int n) {
        std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
        for (int i = 0; i < n; ++i) c[i][i] = 2;
        for (int i = 0; i + 1 < n; ++i) c[i][i + 1] = c[i + 1][i] = -1;
        return c;
    };
    switch (family) {
        case 'A': {
            if (rank < 1) throw std::invalid_argument("family A needs rank >= 1");
            return chain(rank);
        }
        case 'B': {
            if (rank < 2) throw std::invalid_argument("family B needs rank >= 2");
            auto c = chain(rank);
            c[rank - 1][rank - 2] = -2;  // last node short
            return c;
        }
        case 'C': {
            if (rank < 2) throw std::invalid_argument("family C needs rank >= 2");
            auto c = chain(rank);
            c[rank - 2][rank - 1] = -2;  // last node long
            return c;
        }
        case 'D': {
            if (rank < 4) throw std::invalid_argument("family D needs rank >= 4");
            auto c = chain(rank);
            c[rank - 1][rank - 2] = c[rank - 2][rank - 1] = 0;
            c[rank - 1][rank - 3] = c[rank - 3][rank - 1] = -1;
            return c;
        }
        case 'F': {
            if (rank != 4) throw std::invalid_argument("family F needs rank = 4");
            auto c = chain(4);
            c[2][1] = -2;  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
            return c;
        }
        default:
            throw std::invalid_argument(std::string("unknown family '") + family + "'");
    }
}

size_t expected_root_count(char family, int rank) {
    switch (family) {
        case 'A': return static_cast<size_t>(rank) * (rank + 1) / 2;
        case 'B':
        case 'C': return static_cast<size_t>(rank) * rank;
        case 'D': return static_cast<size_t>(rank) * (rank - 1);
        case 'F': return 24;
        default: return 0;
    }
}

}  // namespace

RootSystem RootSystem::build(char family, int rank) {
    RootSystem rs;
    rs.family_ = family;
    rs.rank_ = rank;
    rs.label_ = std::string(1, family) + std::to_string(rank);
    rs.cartan_ = cartan_for_family(family, rank);
    rs.finish_build();
    const size_t expect = expected_root_count(family, rank);
    if (expect && rs.positive_roots_.size() != expect)
        throw std::logic_error("positive root count mismatch for " + rs.label_);
    return rs;
}

RootSystem RootSystem::build_from_cartan(std::string label, std::vector<std::vector<int>> cartan) {
    RootSystem rs;
    rs.family_ = 'X';
    rs.rank_ = static_cast<int>(cartan.size());
    rs.label_ = std::move(label);
    rs.cartan_ = std::move(cartan);
    for (int i = 0; i < rs.rank_; ++i) {
        if (static_cast<int>(rs.cartan_[i].size()) != rs.rank_ || rs.cartan_[i][i] != 2)
            throw std::invalid_argument("invalid Cartan matrix");
        for (int j = 0; j < rs.rank_; ++j)
            if (i != j && rs.cartan_[i][j] > 0) throw std::invalid_argument("invalid Cartan matrix");
    }
    rs.finish_build();
    return rs;
}

void RootSystem::finish_build() {
    const int n = rank_;

    // Minimal positive integer symmetrizer d with d_i C[i][j] = d_j C[j][i],
    // propagated over each connected component of the diagram.
    {
        RatVec d(n, 0);
        for (int start = 0; start < n; ++start) {
            if (d[start] != 0) continue;
            d[start] = 1;
            std::deque<int> q{start};
            while (!q.empty()) {
                int i = q.front();
                q.pop_front();
                for (int j = 0; j < n; ++j) {
                    if (i == j || cartan_[i][j] == 0) continue;
                    Rat dj = d[i] * Rat(cartan_[i][j]) / Rat(cartan_[j][i]);
                    if (d[j] == 0) {
                        d[j] = dj;
                        q.push_back(j);
                    } else if (d[j] != dj) {
                        throw std::invalid_argument("Cartan matrix is not symmetrizable");
                    }
                }
            }
        }
        Int lcm_den = 1, gcd_num = 0;
        for (auto& x : d) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(x));
        for (auto& x : d) x *= lcm_den;
        for (auto& x : d) gcd_num = boost::multiprecision::gcd(gcd_num, numerator(x));
        symmetrizer_.assign(n, 1);
        for (int i = 0; i < n; ++i) symmetrizer_[i] = numerator(d[i]) / gcd_num;
    }

    // Positive roots by closure from the simple roots, using root strings:
    // beta + alpha_i is a root iff p - <beta, alpha_i^vee> > 0 where p is the
    // number of consecutive roots below beta in the alpha_i direction.
    {
        std::set<std::vector<int>> roots;
        for (int i = 0; i < n; ++i) {
            std::vector<int> e(n, 0);
            e[i] = 1;
            roots.insert(e);
        }
        bool changed = true;
        while (changed) {
            changed = false;
            for (auto beta : std::set<std::vector<int>>(roots)) {
                for (int i = 0; i < n; ++i) {
                    int pairing = 0;
                    for (int j = 0; j < n; ++j) pairing += cartan_[i][j] * beta[j];
                    int p = 0;
                    auto down = beta;
                    while (true) {
                        down[i] -= 1;
                        if (std::any_of(down.begin(), down.end(), [](int x) { return x < 0; })) break;
                        if (std::all_of(down.begin(), down.end(), [](int x) { return x == 0; })) break;
                        if (!roots.count(down)) break;
                        ++p;
                    }
                    if (p - pairing > 0) {
                        auto up = beta;
                        up[i] += 1;
                        if (roots.insert(up).second) changed = true;
                    }
                }
            }
        }
        positive_roots_.assign(roots.begin(), roots.end());
        std::sort(positive_roots_.begin(), positive_roots_.end(),
                  [](const std::vector<int>& a, const std::vector<int>& b) {
                      int ha = std::accumulate(a.begin(), a.end(), 0);
                      int hb = std::accumulate(b.begin(), b.end(), 0);
                      if (ha != hb) return ha < hb;
                      return a < b;
                  });
        for (size_t k = 0; k < positive_roots_.size(); ++k) root_index_[positive_roots_[k]] = static_cast<int>(k);
    }

    {
        RatMat c(n, RatVec(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) c[i][j] = cartan_[i][j];
        auto inv = inverse(c);
        if (!inv) throw std::invalid_argument("Cartan matrix is singular");
        cartan_inv_ = *inv;
    }

    gram_fund_.assign(n, RatVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) gram_fund_[i][j] = cartan_inv_[j][i] * Rat(symmetrizer_[j]);

    root_half_norm_.resize(positive_roots_.size());
    coroot_row_.resize(positive_roots_.size());
    for (size_t k = 0; k < positive_roots_.size(); ++k) {
        const auto& c = positive_roots_[k];
        Rat norm = 0;  // (alpha, alpha) = c^T (D C) c
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) norm += Rat(symmetrizer_[i]) * Rat(cartan_[i][j]) * c[i] * c[j];
        root_half_norm_[k] = norm / 2;
        coroot_row_[k].resize(n);
        for (int i = 0; i < n; ++i) {
            Rat u = Rat(c[i]) * Rat(symmetrizer_[i]) / root_half_norm_[k];
            if (!is_integer(u)) throw std::logic_error("non-integral coroot pairing row");
            coroot_row_[k][i] = to_integer(u);
        }
    }

    rho_ = Weight(RatVec(n, 1));

    // Longest element: the chain of simple reflections taking -rho to rho.
    {
        Weight x = -rho_;
        while (true) {
            int i = -1;
            for (int j = 0; j < n; ++j)
                if (x[j] < 0) { i = j; break; }
            if (i < 0) break;
            x = reflect(i, x);
            w0_word_.push_back(i);
        }
    }
}

Weight RootSystem::fundamental_weight(int i) const {
    Weight w = Weight::zero(rank_);
    w[i] = 1;
    return w;
}

Weight RootSystem::weight_of_root(const std::vector<int>& c) const {
    Weight w = Weight::zero(rank_);
    for (int j = 0; j < rank_; ++j)
        for (int i = 0; i < rank_; ++i) w[j] += Rat(cartan_[j][i]) * c[i];
    return w;
}

Weight RootSystem::simple_root(int i) const {
    std::vector<int> c(rank_, 0);
    c[i] = 1;
    return weight_of_root(c);
}

Rat RootSystem::pair_coroot(const Weight& lambda, const std::vector<int>& alpha) const {
    auto idx = signed_root_index(alpha);
    if (!idx) throw std::invalid_argument("pair_coroot: not a root");
    Rat v = pair_coroot_pos(lambda, idx->first);
    return idx->second > 0 ? v : -v;
}

Rat RootSystem::pair_coroot_pos(const Weight& lambda, int idx) const {
    Rat v = 0;
    for (int i = 0; i < rank_; ++i) v += Rat(coroot_row_[idx][i]) * lambda[i];
    return v;
}

Rat RootSystem::inner(const Weight& a, const Weight& b) const {
    Rat v = 0;
    for (int i = 0; i < rank_; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < rank_; ++j) v += a[i] * b[j] * gram_fund_[i][j];
    }
    return v;
}

RatVec RootSystem::simple_coords(const Weight& w) const { return mat_vec(cartan_inv_, w.f); }

Weight RootSystem::from_simple_coords(const RatVec& c) const {
    Weight w = Weight::zero(rank_);
    for (int j = 0; j < rank_; ++j)
        for (int i = 0; i < rank_; ++i) w[j] += cartan_[j][i] * c[i];
    return w;
}

Rat RootSystem::height(const Weight& w) const {
    RatVec c = simple_coords(w);
    Rat h = 0;
    for (auto& x : c) h += x;
    return h;
}

bool RootSystem::is_dominant(const Weight& w) const {
    return std::all_of(w.f.begin(), w.f.end(), [](const Rat& q) { return q >= 0; });
}

bool RootSystem::is_root(const std::vector<int>& c) const { return signed_root_index(c).has_value(); }

std::optional<std::pair<int, int>> RootSystem::signed_root_index(const std::vector<int>& c) const {
    auto it = root_index_.find(c);
    if (it != root_index_.end()) return std::make_pair(it->second, 1);
    std::vector<int> neg(c.size());
    for (size_t i = 0; i < c.size(); ++i) neg[i] = -c[i];
    it = root_index_.find(neg);
    if (it != root_index_.end()) return std::make_pair(it->second, -1);
    return std::nullopt;
}

Weight RootSystem::reflect(int i, const Weight& w) const {
    Weight r = w;
    const Rat fi = w[i];
    if (fi == 0) return r;
    for (int j = 0; j < rank_; ++j) r[j] -= fi * cartan_[j][i];
    return r;
}

Weight RootSystem::apply_word(const std::vector<int>& word, const Weight& w) const {
    Weight r = w;
    for (int i : word) r = reflect(i, r);
    return r;
}

std::vector<int> RootSystem::apply_word_root(const std::vector<int>& word, std::vector<int> alpha) const {
    for (int i : word) {
        int pairing = 0;
        for (int j = 0; j < rank_; ++j) pairing += cartan_[i][j] * alpha[j];
        alpha[i] -= pairing;
    }
    return alpha;
}

int RootSystem::inversion_count(const std::vector<int>& word) const {
    int count = 0;
    for (const auto& alpha : positive_roots_) {
        auto image = apply_word_root(word, alpha);
        bool neg = std::all_of(image.begin(), image.end(), [](int x) { return x <= 0; });
        if (neg) ++count;
    }
    return count;
}

WeylElement RootSystem::weyl_element(std::vector<int> word) const {
    for (int i : word)
        if (i < 0 || i >= rank_) throw std::invalid_argument("weyl_element: bad generator index");
    WeylElement w;
    w.length = inversion_count(word);
    w.word = std::move(word);
    return w;
}

std::optional<DotDominant> RootSystem::dot_dominant(const Weight& nu) const {
    const int n = rank_;
    Weight x = nu + rho_;
    std::vector<int> word;

    bool integral = x.is_integral();
    if (integral) {
        // Integer fast path; coordinates stay far below the int64 range for
        // the weight sizes this library handles.
        std::vector<std::int64_t> v(n);
        for (int i = 0; i < n; ++i) v[i] = static_cast<std::int64_t>(to_integer(x[i]));
        while (true) {
            int i = -1;
            for (int j = 0; j < n; ++j)
                if (v[j] < 0) { i = j; break; }
            if (i < 0) break;
            const std::int64_t fi = v[i];
            for (int j = 0; j < n; ++j) v[j] -= fi * cartan_[j][i];
            word.push_back(i);
        }
        for (int j = 0; j < n; ++j)
            if (v[j] == 0) return std::nullopt;
        for (int j = 0; j < n; ++j) x[j] = v[j];
    } else {
        while (true) {
            int i = -1;
            for (int j = 0; j < n; ++j)
                if (x[j] < 0) { i = j; break; }
            if (i < 0) break;
            x = reflect(i, x);
            word.push_back(i);
        }
        for (int j = 0; j < n; ++j)
            if (x[j] == 0) return std::nullopt;
    }

    // Length by direct inversion counting over the positive roots.
    int l = 0;
    const Weight shifted = nu + rho_;
    for (size_t k = 0; k < positive_roots_.size(); ++k)
        if (pair_coroot_pos(shifted, static_cast<int>(k)) < 0) ++l;
    assert(l == static_cast<int>(word.size()));

    return DotDominant{x - rho_, l, std::move(word)};
}

std::vector<Weight> RootSystem::dot_orbit(const Weight& mu) const {
    if (!is_dominant(mu)) throw std::invalid_argument("dot_orbit: mu not dominant");
    const Weight start = mu + rho_;
    for (size_t k = 0; k < positive_roots_.size(); ++k)
        if (pair_coroot_pos(start, static_cast<int>(k)) == 0)
            throw std::invalid_argument("dot_orbit: mu + rho singular");

    std::set<Weight> seen{start};
    std::deque<Weight> queue{start};
    while (!queue.empty()) {
        Weight x = queue.front();
        queue.pop_front();
        for (int i = 0; i < rank_; ++i) {
            Weight y = reflect(i, x);
            if (seen.insert(y).second) queue.push_back(y);
        }
    }
    std::vector<Weight> orbit;
    orbit.reserve(seen.size());
    for (const auto& x : seen) orbit.push_back(x - rho_);
    return orbit;
}

Weight RootSystem::longest_act(const Weight& nu) const { return apply_word(w0_word_, nu); }

Int RootSystem::weyl_dim(const Weight& mu) const {
    if (!is_dominant(mu) || !mu.is_integral())
        throw std::invalid_argument("weyl_dim: mu must be dominant integral");
    Rat dim = 1;
    const Weight shifted = mu + rho_;
    for (size_t k = 0; k < positive_roots_.size(); ++k) {
        Rat num = 0, den = 0;
        for (int i = 0; i < rank_; ++i) {
            const Rat ci_di = Rat(positive_roots_[k][i]) * Rat(symmetrizer_[i]);
            num += shifted[i] * ci_di;
            den += rho_[i] * ci_di;
        }
        dim *= num / den;
    }
    if (!is_integer(dim)) throw std::logic_error("weyl_dim: non-integral result");
    return to_integer(dim);
}

Int RootSystem::weyl_order() const {
    auto fact = [](int n) {
        Int f = 1;
        for (int i = 2; i <= n; ++i) f *= i;
        return f;
    };
    switch (family_) {
        case 'A': return fact(rank_ + 1);
        case 'B':
        case 'C': return fact(rank_) * (Int(1) << rank_);
        case 'D': return fact(rank_) * (Int(1) << (rank_ - 1));
        case 'F': return 1152;
        default: return Int(enumerate_weyl().size());
    }
}

std::vector<std::vector<int>> RootSystem::enumerate_weyl() const {
    std::vector<std::vector<int>> words;
    std::set<Weight> seen{rho_};
    std::deque<std::pair<Weight, std::vector<int>>> queue{{rho_, {}}};
    while (!queue.empty()) {
        auto [x, word] = queue.front();
        queue.pop_front();
        words.push_back(word);
        for (int i = 0; i < rank_; ++i) {
            Weight y = reflect(i, x);
            if (seen.insert(y).second) {
                auto w2 = word;
                w2.push_back(i);
                queue.emplace_back(std::move(y), std::move(w2));
            }
        }
    }
    return words;
}

}  // namespace symcoh
