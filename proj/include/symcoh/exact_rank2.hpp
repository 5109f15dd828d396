#pragma once

#include <set>

#include "symcoh/cohomology.hpp"

namespace symcoh {

/// One theta-moved positive root of the Sp_{2n}/Sp_4 x Sp_{2n-4} pair with
/// the closed-form value of <nu + rho, alpha^vee> at nu = x omega_2 + y omega_4.
struct SpTableRow {
    std::vector<int> root;  // simple-root coordinates in C_n
    Rat value;
};

/// The case table of pairings over Phi_1^+ for the Sp family (n >= 4).
std::vector<SpTableRow> sp_table1(int n, const Rat& x, const Rat& y);

/// nu + rho regular at nu = x omega_2 + y omega_4, by the four closed-form
/// window conditions.
bool sp_regular(int n, long long x, long long y);

/// Exact cohomology of L_lambda on the Sp_{2n}/Sp_4 x Sp_{2n-4} variety,
/// lambda = x omega_2 + y omega_4, by the seven-degree region table.
/// `pair` must be the CnH4 catalog pair for the same n.
CohomologyTable sp_cohomology(const SymmetricPair& pair, long long x, long long y);

/// Exact cohomology on the variety of complete conics for
/// lambda = 2 l1 omega_1 + 2 l2 omega_2 (degrees 0..5; 1 and 4 vanish).
CohomologyTable conics_cohomology(long long l1, long long l2);

/// Degrees d with H^d nonzero, by the closed-form predicates in (l1, l2).
std::set<int> conics_nonvanishing(long long l1, long long l2);

/// The ambient A2 system used by the conics formulas.
const RootSystem& conics_root_system();

}  // namespace symcoh
