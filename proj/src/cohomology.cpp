#include "symcoh/cohomology.hpp"

#include <stdexcept>

namespace symcoh {

Coweight default_coweight(const RootSystem& rs) { return Coweight(rs.rank(), 1); }

Rat coweight_pairing(const RootSystem& rs, const Weight& gamma, const Coweight& zeta) {
    RatVec c = rs.simple_coords(gamma);
    Rat v = 0;
    for (int i = 0; i < rs.rank(); ++i) v += c[i] * zeta[i];
    return v;
}

void require_special_lattice(const SymmetricPair& pair, const Weight& lambda) {
    if (static_cast<int>(lambda.f.size()) != pair.ambient_rank())
        throw std::invalid_argument("lambda has the wrong rank");
    if (!pair.in_special_lattice(lambda))
        throw std::invalid_argument("lambda is not in the special lattice of " + pair.name());
}

std::vector<std::pair<Weight, std::vector<Int>>> signed_cone_region(const SymmetricPair& pair,
                                                                    const Weight& lambda,
                                                                    IndexSet J) {
    const int r = pair.rank_restricted();
    auto clam = pair.special_coords(lambda);
    if (!clam) throw std::invalid_argument("lambda outside the special span");

    // Constraints on k in Z^r: sign pattern from R_J, strict Omega_J bounds on
    // c = c_lambda + M k turned into integer inequalities.
    std::vector<LinearConstraint> cons;
    const auto& M = pair.atilde_in_special();
    for (int i = 0; i < r; ++i) {
        LinearConstraint sign;
        sign.a.assign(r, 0);
        if ((J >> i) & 1) {
            sign.a[i] = -1;  // k_i >= 1
            sign.b = -1;
        } else {
            sign.a[i] = 1;  // k_i <= 0
            sign.b = 0;
        }
        cons.push_back(std::move(sign));

        LinearConstraint omega;
        omega.a.assign(r, 0);
        if ((J >> i) & 1) {
            // c_i < -rho_i  <=>  (M k)_i <= strict_floor(-rho_i - c_i(lambda))
            for (int j = 0; j < r; ++j) omega.a[j] = M[i][j];
            omega.b = strict_floor(-pair.rho_coefficients()[i] - (*clam)[i]);
        } else {
            // c_i > -rho_i  <=>  -(M k)_i <= strict_floor(rho_i + c_i(lambda))
            for (int j = 0; j < r; ++j) omega.a[j] = -M[i][j];
            omega.b = strict_floor(pair.rho_coefficients()[i] + (*clam)[i]);
        }
        cons.push_back(std::move(omega));
    }

    std::vector<std::pair<Weight, std::vector<Int>>> out;
    for (auto& k : enumerate_integer_points(cons, r)) {
        Weight nu = lambda;
        for (int j = 0; j < r; ++j) nu += Rat(k[j]) * pair.restricted_simple()[j];
        out.emplace_back(std::move(nu), std::move(k));
    }
    return out;
}

long long euler_multiplicity(const SymmetricPair& pair, const Weight& lambda, const Weight& mu) {
    require_special_lattice(pair, lambda);
    const RootSystem& rs = pair.rs();
    if (!mu.is_integral() || !rs.is_dominant(mu))
        throw std::invalid_argument("euler_multiplicity: mu must be dominant integral");

    long long acc = 0;
    const IndexSet all = (IndexSet(1) << pair.rank_restricted()) - 1;
    for (const Weight& nu : rs.dot_orbit(mu)) {
        const Weight delta = nu - lambda;
        // The R_J sign pattern determines J uniquely when delta lies in the
        // atilde lattice at all, so at most one summand fires per nu.
        for (IndexSet J = 0; J <= all; ++J) {
            auto k = pair.r_cone_member(J, delta);
            if (!k) continue;
            if (pair.omega_cone_member(J, nu)) {
                auto dd = rs.dot_dominant(nu);
                if (dd) {
                    const int popcount = __builtin_popcount(J);
                    acc += ((dd->length + popcount) % 2 == 0) ? 1 : -1;
                }
            }
            break;
        }
    }
    return acc;
}

VirtualModule euler_character(const SymmetricPair& pair, const Weight& lambda) {
    require_special_lattice(pair, lambda);
    const RootSystem& rs = pair.rs();
    VirtualModule chi;
    const IndexSet all = (IndexSet(1) << pair.rank_restricted()) - 1;
    for (IndexSet J = 0; J <= all; ++J) {
        const int popcount = __builtin_popcount(J);
        for (const auto& [nu, k] : signed_cone_region(pair, lambda, J)) {
            auto dd = rs.dot_dominant(nu);
            if (!dd) continue;
            chi.add(dd->nu_plus, ((dd->length + popcount) % 2 == 0) ? 1 : -1);
        }
    }
    return chi;
}

CohomologyTable bound_cohomology(const SymmetricPair& pair, const Weight& lambda) {
    require_special_lattice(pair, lambda);
    const RootSystem& rs = pair.rs();
    CohomologyTable table;
    const IndexSet all = (IndexSet(1) << pair.rank_restricted()) - 1;
    for (IndexSet J = 0; J <= all; ++J) {
        const int popcount = __builtin_popcount(J);
        for (const auto& [nu, k] : signed_cone_region(pair, lambda, J)) {
            auto dd = rs.dot_dominant(nu);
            if (!dd) continue;
            const int d = dd->length + popcount;
            if (d > pair.dimension())
                throw std::logic_error("bound_cohomology: degree above dim X");
            table.add(d, dd->nu_plus, 1);
        }
    }
    return table;
}

IndexSet negative_atilde_set(const SymmetricPair& pair, const std::vector<int>& word,
                             const Coweight& zeta) {
    const RootSystem& rs = pair.rs();
    IndexSet J = 0;
    for (int i = 0; i < pair.rank_restricted(); ++i) {
        Weight image = rs.apply_word(word, pair.restricted_simple()[i]);
        Rat p = coweight_pairing(rs, image, zeta);
        if (p == 0)
            throw std::invalid_argument("zeta pairs to zero with w(atilde_" + std::to_string(i + 1) + ")");
        if (p < 0) J |= IndexSet(1) << i;
    }
    return J;
}

int cell_multiplicity(const SymmetricPair& pair, const Weight& lambda, const WeylElement& w,
                      const Weight& mu, const Coweight& zeta) {
    require_special_lattice(pair, lambda);
    const RootSystem& rs = pair.rs();
    for (const Rat& z : zeta)
        if (z <= 0) throw std::invalid_argument("cell_multiplicity: zeta must be dominant regular");
    const Weight shifted = mu + rs.rho();
    for (int k = 0; k < rs.num_positive_roots(); ++k)
        if (rs.pair_coroot_pos(shifted, k) == 0)
            throw std::invalid_argument("cell_multiplicity: mu + rho singular");

    const IndexSet J = negative_atilde_set(pair, w.word, zeta);
    // Apply w^{-1}: the reversed word.
    std::vector<int> inv(w.word.rbegin(), w.word.rend());
    Weight delta = rs.apply_word(inv, shifted) - (lambda + rs.rho());
    return pair.r_cone_member(J, delta) ? 1 : 0;
}

int cell_codimension(const SymmetricPair& pair, const WeylElement& w, const Coweight& zeta) {
    for (const Rat& z : zeta)
        if (z <= 0) throw std::invalid_argument("cell_codimension: zeta must be dominant regular");
    const IndexSet J = negative_atilde_set(pair, w.word, zeta);
    return __builtin_popcount(J) + w.length;
}

int wspecial_sign(const SymmetricPair& pair, const Weight& lambda, int i) {
    if (i < 0 || i >= pair.rank_restricted())
        throw std::invalid_argument("wspecial_sign: bad restricted index");
    if (!pair.is_special(lambda)) throw std::invalid_argument("wspecial_sign: lambda not special");
    const RootSystem& rs = pair.rs();
    const Weight shifted = lambda + rs.rho();
    for (int k = 0; k < rs.num_positive_roots(); ++k)
        if (rs.pair_coroot_pos(shifted, k) == 0)
            throw std::invalid_argument("wspecial_sign: lambda + rho singular");
    int s = sgn(rs.inner(shifted, pair.restricted_simple()[i]));
    if (s == 0) throw std::logic_error("wspecial_sign: zero pairing for regular special weight");
    return s;
}

}  // namespace symcoh
