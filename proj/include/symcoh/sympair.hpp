#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symcoh/rootsys.hpp"

namespace symcoh {

/// Satake-diagram input: ambient root system, the set of blackened nodes
/// Delta_0, and the diagram involution on the white nodes Delta_1.
struct SatakeSpec {
    RootSystem rs;
    std::vector<int> delta0;    // 0-based simple-root indices
    std::vector<int> thetabar;  // size = rank; thetabar[i] = i for i in delta0
    std::string name;
};

/// Subsets of the restricted index set {0..r-1} as bitmasks.
using IndexSet = std::uint32_t;

/// A symmetric pair: the involution theta on the weight space and everything
/// derived from it (restricted simple roots, the special weight basis, the
/// constants rho_i), plus membership tests for the signed cones used by the
/// Euler and bound formulas.
class SymmetricPair {
  public:
    const SatakeSpec& spec() const { return spec_; }
    const RootSystem& rs() const { return spec_.rs; }
    const std::string& name() const { return spec_.name; }
    int rank_restricted() const { return r_; }
    int ambient_rank() const { return spec_.rs.rank(); }

    const std::vector<Weight>& restricted_simple() const { return atilde_; }
    const std::vector<int>& restricted_reps() const { return rep_; }
    const std::vector<Weight>& special_basis() const { return otilde_; }
    const std::vector<Rat>& rho_coefficients() const { return rho_coeffs_; }
    /// Scale of the special basis at its representative node: the coefficient
    /// of omega_{alpha_i} in otilde_i (1 or 2).  CLI lambda units divide by it.
    const std::vector<Int>& unit_scale() const { return unit_scale_; }

    /// Indices into rs().positive_roots() of the theta-moved positive roots.
    const std::vector<int>& phi1_positive() const { return phi1_pos_; }
    bool root_is_fixed(int pos_idx) const;
    /// dim X = |Phi_1^+| + r.
    int dimension() const { return static_cast<int>(phi1_pos_.size()) + r_; }

    Weight theta_apply(const Weight& lambda) const;
    bool is_special(const Weight& lambda) const { return theta_apply(lambda) == -lambda; }
    /// theta image of a root, in simple-root coordinates.
    std::vector<int> theta_root(const std::vector<int>& alpha) const;

    /// Coordinates of lambda in the special basis, if it lies in its Q-span.
    std::optional<RatVec> special_coords(const Weight& lambda) const;
    /// True iff lambda = sum of integer multiples of the otilde_i.
    bool in_special_lattice(const Weight& lambda) const;
    Weight weight_from_special(const std::vector<Int>& coords) const;
    std::optional<Weight> weight_from_units(const std::vector<Int>& units) const;

    /// delta = sum k_i atilde_i with k_i > 0 on J and k_i <= 0 off J.
    std::optional<std::vector<Int>> r_cone_member(IndexSet J, const Weight& delta) const;
    /// nu = sum c_i otilde_i with integer c_i, c_i < -rho_i on J and
    /// c_i > -rho_i off J (strict on both sides).
    bool omega_cone_member(IndexSet J, const Weight& nu) const;

    /// Integer matrix M with atilde_j = sum_i M[i][j] otilde_i.
    const std::vector<std::vector<Int>>& atilde_in_special() const { return atilde_special_; }

    /// Non-fatal structural observations recorded during the build
    /// (e.g. an atilde_i with a negative special coordinate).
    const std::vector<std::string>& warnings() const { return warnings_; }

    friend SymmetricPair build_pair(SatakeSpec spec);

  private:
    SymmetricPair() = default;

    SatakeSpec spec_;
    int r_ = 0;
    RatMat theta_;       // on fundamental coordinates
    RatMat theta_simple_;  // on simple-root coordinates
    std::vector<Weight> atilde_;
    std::vector<int> rep_;
    std::vector<Weight> otilde_;
    std::vector<Rat> rho_coeffs_;
    std::vector<Int> unit_scale_;
    std::vector<std::vector<Int>> atilde_special_;
    std::vector<int> phi1_pos_;
    std::vector<bool> fixed_root_;
    std::vector<std::string> warnings_;
};

/// Derives theta from the Satake data (solving the blackened-block linear
/// system for the m coefficients), validates the structure, and computes all
/// derived quantities.  Throws std::invalid_argument on structurally invalid
/// input: a non-involutive diagram map, negative or non-integral m, dependent
/// restricted roots, or a theta that fails to be an isometric involution
/// permuting the roots.
SymmetricPair build_pair(SatakeSpec spec);

struct CatalogEntry {
    std::string name;
    bool parameterized;
    int min_n;
    std::string description;
};

/// Built-in pairs: the eight rank-one Satake diagrams, the split types, and
/// the Sp_2n / Sp_4 x Sp_2n-4 family.  Parameterized names take n.
const std::vector<CatalogEntry>& catalog_entries();
SymmetricPair catalog(const std::string& name, int n = 0);

}  // namespace symcoh
