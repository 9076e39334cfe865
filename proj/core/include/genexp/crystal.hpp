#ifndef GENEXP_CRYSTAL_HPP
#define GENEXP_CRYSTAL_HPP

// Type A crystal operators on reading words, tableaux and two-fold tensor
// products, plus the Schuetzenberger-Lusztig involution. Conventions, fixed
// once here and relied on everywhere:
//   * words are Japanese readings (see tableau.hpp);
//   * in the i-bracketing an i cancels an i+1 to its RIGHT;
//   * eps_i is the largest excess of i+1 over i among word prefixes,
//     phi_i the largest excess of i over i+1 among word suffixes;
//   * e_i turns the rightmost uncancelled i+1 into an i, f_i turns the
//     leftmost uncancelled i into an i+1.
// Under these rules concatenating reading words realizes the tensor rule
// "e_i acts on the left factor iff phi_i(left) >= eps_i(right)", and
// eps_i(highest weight tableau) = 0.

#include <functional>
#include <optional>
#include <vector>

#include "genexp/partition.hpp"
#include "genexp/tableau.hpp"

namespace genexp {

int eps_on_word(const std::vector<int>& word, int i);
int phi_on_word(const std::vector<int>& word, int i);

// Position acted on by e_i / f_i, if any.
std::optional<size_t> raise_position(const std::vector<int>& word, int i);
std::optional<size_t> lower_position(const std::vector<int>& word, int i);

// Index k of the vectors <-> operator index k+1.
struct EpsPhiProfile {
    std::vector<int> eps, phi;
};

EpsPhiProfile eps_phi_profile(const std::vector<int>& word, int max_index);
// Profile for i = 1 .. alphabet-1. Callers that need indices past the
// alphabet (the letter counts make phi_m positive even though m+1 never
// occurs) should use eps_phi_profile on the word with a larger max_index.
EpsPhiProfile eps_phi(const Tableau& t);

std::optional<Tableau> crystal_e(const Tableau& t, int i);
std::optional<Tableau> crystal_f(const Tableau& t, int i);

struct RaisePath {
    std::vector<int> word;  // operator indices in the order applied
    Tableau highest;
};

// Greedy raising, smallest operator index first.
RaisePath to_highest_weight(const Tableau& t);

// The shape- and alphabet-preserving involution S determined by
// S(e_i x) = f_{m-i} S(x) and S(highest) = lowest. Computed by recording a
// raising word a_1, ..., a_k on t and replaying e_{m-a_k}, ..., e_{m-a_1}
// starting from the lowest weight tableau. Coincides with the classical
// evacuation of the tableau.
Tableau lusztig_involution(const Tableau& t);

// Two-fold tensor product; both factors must share one alphabet. The word
// of left (x) right is the concatenation of the factors' words.
struct TensorElement {
    Tableau left, right;

    bool operator==(const TensorElement&) const = default;
};

int tensor_eps(const TensorElement& x, int i);
int tensor_phi(const TensorElement& x, int i);
std::optional<TensorElement> tensor_e(const TensorElement& x, int i);
std::optional<TensorElement> tensor_f(const TensorElement& x, int i);

struct TensorRaisePath {
    std::vector<int> word;
    TensorElement highest;
};

TensorRaisePath tensor_to_highest(const TensorElement& x);

// The involution on the connected crystal component of x: raise to the
// component's highest element recording the word, then replay the reversed
// complemented word starting from the component's lowest element.
TensorElement tensor_xi(const TensorElement& x);

// Crystal commutor sigma(b (x) c) = xi(xi(c) (x) xi(b)). Total on all
// inputs, but only its restriction to highest weight elements is exercised
// by the rest of the library (see r_matrix_highest); treat other inputs as
// experimental.
TensorElement commutor(const TensorElement& x);

}  // namespace genexp

#endif
