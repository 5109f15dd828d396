#pragma once

#include <optional>
#include <vector>

#include "symcoh/rational.hpp"

namespace symcoh {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

RatMat identity_matrix(int n);
RatMat mat_mul(const RatMat& a, const RatMat& b);
RatVec mat_vec(const RatMat& a, const RatVec& v);
RatMat transpose(const RatMat& a);
int matrix_rank(RatMat a);

// Inverse of a square matrix; nullopt if singular.
std::optional<RatMat> inverse(const RatMat& a);

// Exact solution of A x = b for an m x n matrix A of full column rank.
// Returns nullopt if the system is inconsistent or underdetermined.
std::optional<RatVec> solve_unique(const RatMat& a, const RatVec& b);

}  // namespace symcoh
