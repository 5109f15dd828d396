#pragma once

#include <stdexcept>
#include <vector>

#include "symcoh/rational.hpp"

namespace symcoh {

/// a . k <= b with integer coefficients.
struct LinearConstraint {
    std::vector<Int> a;
    Int b;
};

/// Raised when a lattice region required to be finite has a recession
/// direction; callers treat this as a structural error.
class UnboundedRegionError : public std::runtime_error {
  public:
    explicit UnboundedRegionError(const std::string& what) : std::runtime_error(what) {}
};

/// All integer points of {k : a.k <= b for all constraints}, enumerated by
/// Fourier-Motzkin bounding boxes over exact rationals and filtered against
/// the original constraints.  Deterministic (lexicographic) order.  Throws
/// UnboundedRegionError if any coordinate is unbounded on the region.
std::vector<std::vector<Int>> enumerate_integer_points(const std::vector<LinearConstraint>& cons,
                                                       int nvars);

}  // namespace symcoh
