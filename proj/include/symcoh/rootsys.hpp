#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symcoh/linalg.hpp"
#include "symcoh/rational.hpp"

namespace symcoh {

/// A weight of the ambient torus, stored by its exact rational coordinates in
/// the fundamental-weight basis.  All arithmetic is exact; equality and
/// ordering are coordinate-wise.
struct Weight {
    RatVec f;

    Weight() = default;
    explicit Weight(RatVec coords) : f(std::move(coords)) {}
    static Weight zero(int rank) { return Weight(RatVec(rank, 0)); }

    int rank() const { return static_cast<int>(f.size()); }
    const Rat& operator[](int i) const { return f[i]; }
    Rat& operator[](int i) { return f[i]; }

    bool operator==(const Weight& o) const { return f == o.f; }
    bool operator!=(const Weight& o) const { return f != o.f; }
    bool operator<(const Weight& o) const { return f < o.f; }

    Weight& operator+=(const Weight& o);
    Weight& operator-=(const Weight& o);
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator*(const Rat& c, Weight a);
    Weight operator-() const;

    bool is_integral() const;
    std::string str() const;
};

/// An element of the Weyl group, stored as a word in the simple reflections
/// (not necessarily reduced) together with the length of a reduced expression.
struct WeylElement {
    std::vector<int> word;  // applied right to left: w = s[k-1] ... s[1] s[0]
    int length = 0;
};

/// Result of moving a weight to the dominant chamber by the dot action.
struct DotDominant {
    Weight nu_plus;         // w(nu + rho) - rho, dominant
    int length;             // #{alpha > 0 : <nu + rho, alpha^vee> < 0}
    std::vector<int> word;  // the reflections applied, in application order
};

/// Cartan data and positive-root combinatorics of the ambient group.  Roots
/// are stored by integer coordinates in the simple-root basis, graded by
/// height then ordered lexicographically; weights use the fundamental basis.
/// The W-invariant form is the symmetrized Cartan form with minimal positive
/// integer symmetrizers, so all pairings are exact rationals.
class RootSystem {
  public:
    RootSystem() = default;  // empty; assign from build()
    static RootSystem build(char family, int rank);
    // Direct-sum systems needed by the Satake catalog (e.g. A1 x A1).
    static RootSystem build_from_cartan(std::string label,
                                        std::vector<std::vector<int>> cartan);

    const std::string& label() const { return label_; }
    char family() const { return family_; }
    int rank() const { return rank_; }
    const std::vector<std::vector<int>>& cartan() const { return cartan_; }
    const std::vector<Int>& symmetrizer() const { return symmetrizer_; }
    const std::vector<std::vector<int>>& positive_roots() const { return positive_roots_; }
    int num_positive_roots() const { return static_cast<int>(positive_roots_.size()); }

    const Weight& rho() const { return rho_; }
    Weight fundamental_weight(int i) const;
    Weight simple_root(int i) const;
    /// Weight of a root given by simple-root coordinates.
    Weight weight_of_root(const std::vector<int>& simple_coords) const;
    Weight weight_of_positive_root(int idx) const { return weight_of_root(positive_roots_[idx]); }

    /// <lambda, alpha^vee> for a root alpha in simple-root coordinates.
    Rat pair_coroot(const Weight& lambda, const std::vector<int>& alpha) const;
    Rat pair_coroot_pos(const Weight& lambda, int idx) const;
    /// W-invariant inner product on the weight space.
    Rat inner(const Weight& a, const Weight& b) const;

    /// Simple-root coordinates of a weight (always defined over Q).
    RatVec simple_coords(const Weight& w) const;
    Weight from_simple_coords(const RatVec& c) const;
    /// Sum of the simple-root coordinates ("height" for root-lattice elements).
    Rat height(const Weight& w) const;

    bool is_dominant(const Weight& w) const;
    bool is_root(const std::vector<int>& simple_coords) const;
    /// Index into positive_roots() if +-alpha is positive, with sign; nullopt otherwise.
    std::optional<std::pair<int, int>> signed_root_index(const std::vector<int>& simple_coords) const;

    Weight reflect(int i, const Weight& w) const;
    Weight apply_word(const std::vector<int>& word, const Weight& w) const;
    /// Simple-root coordinates of w(alpha) for a root alpha.
    std::vector<int> apply_word_root(const std::vector<int>& word, std::vector<int> alpha) const;
    /// #{alpha > 0 : w(alpha) < 0}.
    int inversion_count(const std::vector<int>& word) const;
    WeylElement weyl_element(std::vector<int> word) const;

    /// Dominant representative under the dot action together with its length;
    /// absent when nu + rho is singular.
    std::optional<DotDominant> dot_dominant(const Weight& nu) const;
    /// Full dot orbit {w(mu + rho) - rho : w in W} of a dominant mu with
    /// mu + rho regular, in canonical (sorted) order.
    std::vector<Weight> dot_orbit(const Weight& mu) const;
    /// Linear action of the longest element.
    Weight longest_act(const Weight& nu) const;
    const std::vector<int>& longest_word() const { return w0_word_; }

    /// dim L(mu) by the Weyl dimension formula; mu dominant integral.
    Int weyl_dim(const Weight& mu) const;
    Int weyl_order() const;

    /// All Weyl group elements as reduced words (breadth-first, deterministic).
    std::vector<std::vector<int>> enumerate_weyl() const;

  private:
    void finish_build();

    std::string label_;
    char family_ = 0;
    int rank_ = 0;
    std::vector<std::vector<int>> cartan_;
    std::vector<Int> symmetrizer_;
    std::vector<std::vector<int>> positive_roots_;
    std::map<std::vector<int>, int> root_index_;
    RatMat cartan_inv_;
    RatMat gram_fund_;                          // (omega_i, omega_j)
    std::vector<Rat> root_half_norm_;           // (alpha, alpha)/2 per positive root
    std::vector<std::vector<Int>> coroot_row_;  // <lambda, alpha^vee> = coroot_row . lambda.f
    Weight rho_;
    std::vector<int> w0_word_;
};

}  // namespace symcoh
