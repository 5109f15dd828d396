#pragma once

#include "symcoh/region.hpp"
#include "symcoh/sympair.hpp"
#include "symcoh/virtmod.hpp"

namespace symcoh {

/// A one-parameter subgroup given by its pairings with the simple roots;
/// dominant regular means all entries positive.
using Coweight = RatVec;

/// The canonical choice: the sum of the fundamental coweights,
/// <alpha_i, zeta> = 1 for every simple root.
Coweight default_coweight(const RootSystem& rs);

/// <gamma, zeta> of an arbitrary weight against a coweight.
Rat coweight_pairing(const RootSystem& rs, const Weight& gamma, const Coweight& zeta);

/// Lattice points of (lambda + R_J) intersect Omega_J, as weights together
/// with their atilde-coordinates k.  Throws UnboundedRegionError if the
/// region has a recession direction.
std::vector<std::pair<Weight, std::vector<Int>>> signed_cone_region(const SymmetricPair& pair,
                                                                    const Weight& lambda,
                                                                    IndexSet J);

/// Multiplicity of [L(mu)] in the Euler characteristic of L_lambda,
/// evaluated over the dot orbit W*mu.  Exact integer.
long long euler_multiplicity(const SymmetricPair& pair, const Weight& lambda, const Weight& mu);

/// The full Euler characteristic as a virtual module, evaluated by signed
/// region enumeration over all J.
VirtualModule euler_character(const SymmetricPair& pair, const Weight& lambda);

/// The degreewise upper bound: the same enumeration bucketed at
/// d = l(nu) + |J| with multiplicity +1 per lattice point.
CohomologyTable bound_cohomology(const SymmetricPair& pair, const Weight& lambda);

/// 0/1 multiplicity of L(mu) in the support cohomology of the closed-orbit
/// cell attached to w, for a one-parameter subgroup zeta.
int cell_multiplicity(const SymmetricPair& pair, const Weight& lambda, const WeylElement& w,
                      const Weight& mu, const Coweight& zeta);

/// Codimension of the closed-orbit cell attached to w:
/// #{i : <w(atilde_i), zeta> < 0} + l(w).
int cell_codimension(const SymmetricPair& pair, const WeylElement& w, const Coweight& zeta);

/// Sign of (lambda + rho, atilde_i) for special lambda with lambda + rho
/// regular; +1 or -1.
int wspecial_sign(const SymmetricPair& pair, const Weight& lambda, int i);

/// The index set {i : <w(atilde_i), zeta> < 0}; throws on a zero pairing.
IndexSet negative_atilde_set(const SymmetricPair& pair, const std::vector<int>& word,
                             const Coweight& zeta);

/// Validates that lambda lies in the special lattice; throws otherwise.
void require_special_lattice(const SymmetricPair& pair, const Weight& lambda);

}  // namespace symcoh
