#ifndef GENEXP_SKEW_HPP
#define GENEXP_SKEW_HPP

// Skew semistandard tableaux, jeu de taquin rectification, and enumeration
// of Littlewood-Richardson (lattice) skew tableaux with optional per-letter
// row bounds.

#include <functional>
#include <optional>
#include <vector>

#include "genexp/partition.hpp"
#include "genexp/tableau.hpp"

namespace genexp {

// A semistandard filling of the skew shape outer/inner.  Row r stores the
// entries of cells (r, inner_r) .. (r, outer_r - 1), left to right.  Rows
// weakly increase, columns strictly increase, entries lie in 1..alphabet.
class SkewTableau {
public:
    SkewTableau(Partition outer, Partition inner, std::vector<std::vector<int>> rows,
                int alphabet);

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int alphabet() const { return alphabet_; }
    bool empty() const;

    // Entry at absolute cell (r, c), 0-based; c must satisfy
    // inner_r <= c < outer_r.
    int cell(int r, int c) const;

    // Reading word: columns right to left, each scanned top to bottom.
    std::vector<int> reading_word() const;
    // Absolute (row, col) positions aligned with reading_word().
    std::vector<std::pair<int, int>> reading_cells() const;

    // Multiplicity of each letter 1..alphabet.
    std::vector<int> weight() const;

    bool operator==(const SkewTableau& o) const;
    bool operator<(const SkewTableau& o) const;

private:
    Partition outer_;
    Partition inner_;
    std::vector<std::vector<int>> rows_;
    int alphabet_;
};

// Jeu de taquin rectification.  Repeatedly picks a removable cell of the
// inner shape (a cell whose removal keeps the inner shape a partition) and
// slides it out.  When a hole has neighbours both to the right and below,
// the smaller entry moves into the hole; on a tie the entry below moves.
// The result does not depend on the order in which inner cells are chosen.
//
// pick, when given, chooses among the currently removable inner cells: it
// receives their count k and must return an index in [0, k).  Cells are
// offered in increasing row order.  By default the last (bottom) one is
// taken.  Exposing the choice lets callers confirm order independence.
Tableau rectify(const SkewTableau& skew, const std::function<int(int)>& pick = {});

// Crystal operators on skew tableaux via the reading word; they commute
// with rectification.
std::optional<SkewTableau> skew_e(const SkewTableau& t, int i);
std::optional<SkewTableau> skew_f(const SkewTableau& t, int i);

// True when every raising operator kills the reading word, i.e. the word is
// a lattice word read right to left.  Equivalent to the rectification being
// the highest weight tableau of the weight's shape.
bool is_lattice(const SkewTableau& t);

struct LrSkewOptions {
    // Exact multiplicity of each letter 1..alphabet, when constrained.
    std::optional<std::vector<int>> weight;
    // When set to n, odd letters are confined to upper rows: letter 2i+1
    // (including 1, with i = 0) may appear only in rows <= n + i (1-based).
    std::optional<int> sundaram_rank;
};

// Enumerates lattice skew semistandard tableaux of shape outer/inner over
// 1..alphabet satisfying the options, invoking visit on each.  Cells are
// filled in reading order (columns right to left, top to bottom) so the
// lattice property can be enforced on prefixes.
void enumerate_lr_skew(const Partition& outer, const Partition& inner, int alphabet,
                       const LrSkewOptions& options,
                       const std::function<void(const SkewTableau&)>& visit);

}  // namespace genexp

#endif
