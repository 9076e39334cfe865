#ifndef GENEXP_LR_MAPS_HPP
#define GENEXP_LR_MAPS_HPP

// Maps between the standard models of Littlewood-Richardson coefficients:
// lattice skew tableaux, companion tableaux, tensor highest weight elements,
// the combinatorial R-matrix on highest elements, and the conjugation
// symmetry c^nu_{lambda delta} = c^{nu'}_{lambda' delta'} realized on
// tableaux.

#include "genexp/partition.hpp"
#include "genexp/skew.hpp"
#include "genexp/tableau.hpp"

namespace genexp {

// True when highest(delta) tensor T is a highest weight element, i.e.
// eps_i(T) <= delta_i - delta_{i+1} for every i.
bool lr_membership(const Tableau& t, const Partition& delta);

// The companion of a lattice skew tableau tau of shape nu/lambda and weight
// delta: row k lists the rows of tau holding the letter k, in weakly
// increasing order.  The result has shape delta, content nu - lambda and
// satisfies lr_membership(result, lambda).
Tableau companion_tableau(const SkewTableau& tau, int alphabet);

// Inverse of companion_tableau for the given skew shape: row r of the result
// receives the letter k once for each entry r (1-based) in row k of t.
SkewTableau companion_inverse(const Tableau& t, const Partition& outer,
                              const Partition& inner, int alphabet);

struct RMatrixResult {
    Partition delta;  // shape of the input tableau
    Tableau image;    // shape lambda; highest(delta) tensor image is highest
};

// Combinatorial R-matrix on highest weight tensor elements: given T of shape
// delta with highest(lambda) tensor T a highest weight element of weight nu,
// produces the unique T-hat of shape lambda with highest(delta) tensor T-hat
// highest of the same weight.  Throws std::invalid_argument when the input
// tensor is not highest and std::logic_error if the factor exchange fails to
// produce a highest element.
RMatrixResult r_matrix_highest(const Partition& lambda, const Tableau& t);

// Shape-transposing bijection carrying lr_membership(., delta) tableaux of
// shape lambda to lr_membership(., delta') tableaux of shape lambda', where
// nu = delta + content and the result records nu'.  Three steps: the
// involution of crystal.hpp, a transpose of the raw grid, and a renumbering
// that sends the k-th occurrence (in reading order by rows) of the letter i
// to rev(delta)_i + k, rev(delta) being delta padded to the alphabet and
// reversed.  Applying the same procedure with delta' inverts it.
Tableau conjugation_symmetry(const Tableau& t, const Partition& delta);

// Littlewood-Richardson coefficient c^nu_{lambda delta}, counted as the
// number of tableaux of shape lambda and content nu - delta satisfying
// lr_membership(., delta).
long long lr_coefficient(const Partition& lambda, const Partition& delta,
                         const Partition& nu);

}  // namespace genexp

#endif
