#pragma once

// Reference computations used only by the tests. Nothing here shares code
// with the product engine or the tableau module.

#include <map>
#include <vector>

#include "lrlab/numeric.hpp"
#include "lrlab/partition.hpp"

namespace oracle {

using lrlab::BigInt;
using lrlab::Partition;

/// Monomial exponent vector -> coefficient.
using Polynomial = std::map<std::vector<int>, BigInt>;

/// s_λ(x_1..x_d) as a sum over semistandard tableaux with entries <= d.
Polynomial schur_polynomial(const Partition& shape, int d);

Polynomial multiply(const Polynomial& p, const Polynomial& q);

/// Expands a symmetric polynomial in d variables into Schur polynomials by
/// peeling off the lexicographically largest monomial.
std::map<std::vector<int>, BigInt> schur_expand(Polynomial p, int d);

/// c^C_{AB} for every C with at most d rows, from s_A s_B.
std::map<std::vector<int>, BigInt> lr_by_symmetric_functions(const Partition& a, const Partition& b);

/// Number of semistandard tableaux of the shape with entries <= d.
BigInt count_ssyt(const Partition& shape, int d);

/// Shapes C with C/A a vertical strip of r cells.
std::vector<Partition> vertical_strips(const Partition& a, int r);

/// Dominance by prefix sums of zero-padded parts (equal weights assumed).
bool dominates_by_prefix(const Partition& a, const Partition& b);

}  // namespace oracle
