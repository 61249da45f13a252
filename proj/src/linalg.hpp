#pragma once

#include <optional>
#include <vector>

#include "rational.hpp"

namespace piforge {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>; // row-major, rectangular

// In-place reduced row echelon form; returns the pivot column of each pivot
// row, in order.
std::vector<int> rref(RatMat& a);

// One solution of A x = b with free variables set to 0, or nullopt when the
// system is inconsistent.
std::optional<RatVec> solve_linear(const RatMat& a, const RatVec& b);

// Basis of the right nullspace of A (each vector has size = #columns).
std::vector<RatVec> nullspace(const RatMat& a);

} // namespace piforge
