#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace locert {

using BigInt = boost::multiprecision::cpp_int;
using BigMatrix = std::vector<std::vector<BigInt>>;

/// Diagonal of the Smith normal form of an integer matrix: the nonzero
/// invariant factors d1 | d2 | ... | dr, all positive. The number of
/// entries is the rank.
std::vector<BigInt> smith_invariants(BigMatrix m);

/// Exact determinant of a square matrix (fraction-free Bareiss elimination).
BigInt determinant(BigMatrix m);

}  // namespace locert
