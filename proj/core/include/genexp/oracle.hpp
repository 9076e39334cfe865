#ifndef GENEXP_ORACLE_HPP
#define GENEXP_ORACLE_HPP

// Brute-force weight multiplicity polynomials straight from the alternating
// sum over the Weyl group of t-counted vector partitions into positive
// roots.  Deliberately independent of the crystal combinatorics so the two
// can be checked against each other.

#include <vector>

#include "genexp/partition.hpp"
#include "genexp/polynomial.hpp"

namespace genexp {

enum class LieType { A, C };

// Number of positive roots / the root list size for the given rank: type A
// uses the gl_n convention (coordinates of length n, roots e_i - e_j), type
// C the standard one (e_i - e_j, e_i + e_j, 2 e_i).
std::vector<std::vector<int>> positive_roots(LieType type, int n);

// Sum of t^{number of roots used, with multiplicity} over all ways of
// writing beta (length-n coordinate vector) as a nonnegative integer
// combination of positive roots.
SparsePolynomial t_kostant_partition(LieType type, int n, const std::vector<int>& beta);

// The t-weight multiplicity sum_w (-1)^{l(w)} P_t(w(lambda+rho) - (mu+rho)).
// lambda is padded to n coordinates (throws when it has more than n parts);
// mu must be dominant: weakly decreasing, and nonnegative for type C.
SparsePolynomial lusztig_t_analogue(LieType type, int n, const Partition& lambda,
                                    const std::vector<int>& mu);

// Specialization at the zero weight: mu = ((|lambda|/n)^n) for type A (zero
// polynomial when n does not divide |lambda|), mu = 0 for type C.
SparsePolynomial lusztig_t_analogue_zero(LieType type, int n, const Partition& lambda);

}  // namespace genexp

#endif
