#pragma once

#include <map>

#include "symcoh/rootsys.hpp"

namespace symcoh::oracles {

/// Independent brute-force decomposition of Sym^m(Sym^2 k^2) into SL_2
/// irreducibles: highest weight (in units of omega) -> multiplicity.
/// Computed by expanding the monomial weights of Sym^m over the three weights
/// of Sym^2 k^2 and stripping highest weights; never touches the Euler or
/// cohomology code paths.
std::map<long long, long long> sym_m_of_sym2(int m);

}  // namespace symcoh::oracles
