#ifndef GENEXP_TABLEAU_HPP
#define GENEXP_TABLEAU_HPP

// Semistandard Young tableaux over the alphabet {1, ..., m}, their reading
// words, and a generic enumerator. The reading convention used throughout
// the library scans columns right to left and each column top to bottom
// ("Japanese reading"); all word-based algorithms in crystal.hpp assume it.

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "genexp/partition.hpp"

namespace genexp {

class Tableau {
public:
    // Rows top to bottom; validates shape, row/column conditions and that
    // entries lie in {1, ..., alphabet}. alphabet is capped at 255.
    Tableau(std::vector<std::vector<int>> rows, int alphabet);

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int alphabet() const { return alphabet_; }
    Partition shape() const;
    bool empty() const { return rows_.empty(); }
    int cell(int r, int c) const { return rows_[r][c]; }

    // Copy with one entry changed; the copy is validated from scratch.
    Tableau replaced(int r, int c, int value) const;

    // Letter multiplicities, index k <-> letter k+1, length = alphabet.
    std::vector<int> weight() const;

    // Japanese reading: columns right to left, top to bottom within each.
    std::vector<int> reading_word() const;
    // The (row, col) source of each reading-word position.
    std::vector<std::pair<int, int>> reading_cells() const;

    bool operator==(const Tableau&) const = default;
    bool operator<(const Tableau& other) const;

private:
    std::vector<std::vector<int>> rows_;
    int alphabet_ = 1;
};

// Row r filled with the letter r (1-based): the unique tableau with
// eps_i = 0 for every i.
Tableau highest_weight_tableau(const Partition& shape, int alphabet);
// Column of height h filled with m-h+1, ..., m: phi_i = 0 for every i.
Tableau lowest_weight_tableau(const Partition& shape, int alphabet);

struct SsytOptions {
    // Exact letter multiplicities, length = alphabet.
    std::optional<std::vector<int>> content;
    // 1-based minimum entry per row (missing rows unconstrained).
    std::vector<int> row_min;
};

// Row-major depth-first enumeration; tableaux are visited in increasing
// row-word lexicographic order.
void enumerate_ssyt(const Partition& shape, int alphabet, const SsytOptions& options,
                    const std::function<void(const Tableau&)>& visit);

long long count_ssyt(const Partition& shape, int alphabet, const SsytOptions& options = {});

}  // namespace genexp

#endif
