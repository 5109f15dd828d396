#pragma once

#include <optional>
#include <stdexcept>

#include "symcoh/cohomology.hpp"
#include "symcoh/rootsys.hpp"
#include "symcoh/sympair.hpp"

namespace symcoh {

/// Raised when a coefficient is requested beyond the reliable truncation
/// window; extraction refuses rather than returning a truncated value.
class TruncationWindowError : public std::domain_error {
  public:
    explicit TruncationWindowError(const std::string& what) : std::domain_error(what) {}
};

/// A truncated integer series sum coeff[c] e^{anchor - sum c_i alpha_i} with
/// support in the downward simple-root cone, stored on the simplex
/// {c in Z_{>=0}^rank : sum c_i <= cutoff}.  Coefficients at heights within
/// the cutoff are exact under the provided multiplications.
class FormalCharacter {
  public:
    FormalCharacter(const RootSystem& rs, Weight anchor, int cutoff);

    const RootSystem& rs() const { return *rs_; }
    const Weight& anchor() const { return anchor_; }
    int cutoff() const { return cutoff_; }

    void set_leading(long long value);  // coefficient of e^{anchor}

    /// Coefficient at offset c (simple-root coordinates below the anchor);
    /// zero outside the cone, TruncationWindowError beyond the cutoff.
    long long coeff_at_offset(const std::vector<int>& offset) const;
    /// Coefficient at an absolute weight.
    long long coeff_at(const Weight& mu) const;

    /// Multiply by the geometric series 1/(1 - e^{-dir}); dir must be a
    /// nonzero element of Z_{>=0} Delta given in simple-root coordinates.
    void mul_geometric(const std::vector<int>& dir);
    /// Multiply by (1 - e^{-dir}).
    void mul_one_minus(const std::vector<int>& dir);
    /// Product of two characters: anchors add, cutoffs truncate to the min.
    FormalCharacter product(const FormalCharacter& other) const;

    size_t table_size() const { return coeff_.size(); }

  private:
    size_t offset_index(const std::vector<int>& offset) const;
    bool next_offset(std::vector<int>& offset) const;

    const RootSystem* rs_;
    Weight anchor_;
    int cutoff_;
    std::vector<long long> coeff_;
    std::vector<std::vector<unsigned long long>> binom_;  // binom_[k][r] = C(k + r, r)
};

/// [M(lambda)] = e^lambda / prod_{alpha > 0} (1 - e^{-alpha}), truncated.
FormalCharacter verma_character(const RootSystem& rs, const Weight& lambda, int cutoff);

/// Local data of a Bialynicki-Birula cell: the shifted fiber weight and the
/// denominator directions of the support-cohomology character, split by the
/// sign of their pairing with the one-parameter subgroup.  Every listed
/// weight must lie in Z_{>=0} Delta.
struct CellLocalData {
    Weight lambda_prime;
    std::vector<Weight> pos_denoms;     // attracting directions gamma, factors 1/(1 - e^{-gamma})
    std::vector<Weight> neg_denoms;     // repelling directions, negated
    std::vector<Weight> double_denoms;  // Levi pairs, squared factors
};

/// e^{lambda'} over the product of the listed denominators (the double ones
/// squared), truncated at the cutoff.
FormalCharacter support_character(const RootSystem& rs, const CellLocalData& data, int cutoff);

/// [M : L(mu)] = coefficient of e^mu in prod_{alpha > 0}(1 - e^{-alpha}) [M],
/// for dominant mu inside the truncation window (with margin the height of
/// the full positive-root sum); refuses with TruncationWindowError otherwise.
long long multiplicity_extraction(const RootSystem& rs, const FormalCharacter& chr,
                                  const Weight& mu);

/// Margin the extraction needs below the cutoff.
int extraction_margin(const RootSystem& rs);

/// Cell data for the closed-orbit cell attached to w: tangent directions are
/// the w-images of the moved positive roots together with the w-images of the
/// restricted simple roots (the boundary-divisor directions).  Returns
/// nullopt when some direction falls outside Z_{>=0} Delta and the character
/// is not representable as a downward series.
std::optional<CellLocalData> closed_orbit_cell_data(const SymmetricPair& pair,
                                                    const std::vector<int>& word,
                                                    const Weight& lambda, const Coweight& zeta);

}  // namespace symcoh
