#pragma once

#include <map>
#include <set>

#include "symcoh/rootsys.hpp"

namespace symcoh {

/// A finite integer combination of irreducibles [L(mu)], keyed by dominant
/// integral highest weights in canonical (sorted) order.  Zero entries are
/// purged so equality is structural.
class VirtualModule {
  public:
    using Map = std::map<Weight, long long>;

    void add(const Weight& mu, long long mult);
    long long multiplicity(const Weight& mu) const;
    const Map& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    VirtualModule& operator+=(const VirtualModule& o);
    VirtualModule& operator-=(const VirtualModule& o);
    friend VirtualModule operator+(VirtualModule a, const VirtualModule& b) { return a += b; }
    friend VirtualModule operator-(VirtualModule a, const VirtualModule& b) { return a -= b; }
    bool operator==(const VirtualModule& o) const { return entries_ == o.entries_; }

    /// Entrywise a <= b.
    static bool leq(const VirtualModule& a, const VirtualModule& b);

  private:
    Map entries_;
};

/// Cohomology multiplicities bucketed by degree; only nonzero degrees are
/// stored and all multiplicities are nonnegative.
class CohomologyTable {
  public:
    using Map = std::map<int, VirtualModule>;

    void add(int degree, const Weight& mu, long long mult);
    const Map& by_degree() const { return table_; }
    const VirtualModule* degree(int d) const;
    std::set<int> support() const;
    VirtualModule alternating_sum() const;
    bool operator==(const CohomologyTable& o) const { return table_ == o.table_; }

    /// Entrywise a[d] <= b[d] for every degree.
    static bool leq(const CohomologyTable& a, const CohomologyTable& b);

  private:
    Map table_;
};

}  // namespace symcoh
