#ifndef GENEXP_GENEXP_HPP
#define GENEXP_GENEXP_HPP

// Generalized exponents attached to the zero weight space, for type A
// (gl_n, partitions with n | size) and type C (sp_2n, partitions of even
// size).  Every polynomial here is a weighted count of explicit tableaux,
// so all routes can be cross-checked against the alternating-sum formula in
// oracle.hpp and against each other.

#include <vector>

#include "genexp/partition.hpp"
#include "genexp/polynomial.hpp"
#include "genexp/tableau.hpp"

namespace genexp {

// --- type A ---

// Sum of t^{sum_i i*eps_i(b)} over the zero-weight tableaux b of shape
// lambda over n letters; zero when n does not divide |lambda| or the shape
// has more than n rows.
SparsePolynomial genexp_A(const Partition& lambda, int n);

// Same set with the statistic sum_i (n-i)*eps_i(b); equals genexp_A as a
// polynomial even though the statistics differ elementwise.
SparsePolynomial genexp_A_reversed(const Partition& lambda, int n);

// Refinement keeping each eps_i separate: sum of prod_i t_i^{eps_i(b)}.
// Specializing t_i -> t^i recovers genexp_A.
SparsePolynomial genexp_A_multi(const Partition& lambda, int n);

// --- type C: King tableaux and distinguished fillings ---

// A King tableau of rank n is semistandard over the ordered alphabet
// 1 < 1' < 2 < 2' < ... < n < n', encoded as 1..2n via k -> 2k-1 and
// k' -> 2k, whose row i entries are at least i (encoded: at least 2i-1).
bool is_king_tableau(const Tableau& t, int n);

// The zero-weight King tableaux of shape lambda: each letter k appears as
// often as k'.  Empty when |lambda| is odd or the shape exceeds n rows.
std::vector<Tableau> enumerate_king_zero(const Partition& lambda, int n);

// Distinguished fillings over 1..2n: phi_i = 0 and eps_i even for every odd
// i < 2n; with_flag additionally requires row i entries >= 2i-1.
bool is_distinguished_star(const Tableau& t, int n, bool with_flag);

// Lowering bijection from zero-weight King tableaux onto the flagged
// distinguished fillings: apply f_{2i-1} until phi_{2i-1} = 0 for each
// i = 1..n (the odd-index operators commute).  distinguished_to_king is the
// inverse; both throw std::invalid_argument on inputs outside their domain.
Tableau king_to_distinguished(const Tableau& t, int n);
Tableau distinguished_to_king(const Tableau& t, int n);

// Charge of a filling over 1..2n: sum_{i=1}^{2n-1} (2n-i) * ceil(eps_i/2).
long long charge_C(const Tableau& t, int n);

// The same value written as half the weighted size of eps* + mu*, where
// eps* reverses the eps profile and mu* records the parities of the even-
// index eps.  Agrees with charge_C exactly on fillings whose odd-index eps
// are all even, which includes every distinguished filling.
long long charge_C_dual(const Tableau& t, int n);

// Generalized exponent polynomial of the zero weight space for sp_2n:
// sum over zero-weight King tableaux T of t^{charge of the distinguished
// filling attached to T}.
SparsePolynomial genexp_C(const Partition& lambda, int n);

// Refinement: the distinguished filling b contributes
// prod_{i=1}^{2n-1} t_{2n-i}^{ceil(eps_i(b)/2)}.  Specializing t_i -> t^i
// recovers genexp_C.
SparsePolynomial genexp_C_multi(const Partition& lambda, int n);

// Independent route through the symplectic branching rule: walks the
// gl_2n-highest weights nu with even parts, extracts the shape-lambda
// images of the branching witnesses under the companion map and the
// R-matrix swap, and weights each distinct image by a phi-side statistic.
// Must agree with genexp_C; the two computations share no code path.
SparsePolynomial genexp_C_sundaram(const Partition& lambda, int n);

// genexp_C(lambda, n+1) - genexp_C(lambda, n), which is conjectured (and
// checked here) to have nonnegative coefficients; throws std::logic_error
// if a negative coefficient ever appears.
SparsePolynomial growth_delta(const Partition& lambda, int n);

// --- stable (large rank) series ---

// Raises t by every odd-index operator until eps_i = 0 for all odd i.
Tableau stable_raise(const Tableau& t);

// True when eps_i = 0 and phi_i is even for every odd i up to the alphabet
// (the profile is extended so that phi_m counts the letters m).
bool is_stable_distinguished(const Tableau& t);

// sum_{i=1}^{m} i * ceil(phi_i(b)/2) over the extended profile.
long long stable_statistic(const Tableau& t);

// Stable series of generalized exponents: the rank-independent limit of the
// type-C polynomials, graded by the statistic above over the stable
// distinguished fillings of shape lambda.  Exact up to degree `cutoff`; the
// alphabet is chosen from the cutoff and the computation is repeated with
// two more letters as a stabilization check (std::logic_error on mismatch).
TruncatedSeries stable_C(const Partition& lambda, int cutoff);

// Stable series for the orthogonal types; both equal the symplectic series
// of the conjugate shape.
TruncatedSeries stable_B(const Partition& lambda, int cutoff);
TruncatedSeries stable_D(const Partition& lambda, int cutoff);

// Refinement of stable_C keeping one variable per letter: each filling
// contributes prod_i t_i^{ceil(phi_i/2)}, kept when its total degree under
// t_i -> t^i is at most the cutoff.
SparsePolynomial stable_C_multi(const Partition& lambda, int cutoff);

}  // namespace genexp

#endif
