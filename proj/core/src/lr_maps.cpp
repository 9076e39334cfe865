#include "genexp/lr_maps.hpp"

#include <stdexcept>

#include "genexp/crystal.hpp"

namespace genexp {

bool lr_membership(const Tableau& t, const Partition& delta) {
    const std::vector<int> word = t.reading_word();
    for (int i = 1; i < t.alphabet(); ++i)
        if (eps_on_word(word, i) > delta.part(i) - delta.part(i + 1)) return false;
    return true;
}

Tableau companion_tableau(const SkewTableau& tau, int alphabet) {
    std::vector<std::vector<int>> rows(static_cast<size_t>(tau.alphabet()));
    for (int r = 0; r < tau.outer().length(); ++r) {
        const int lo = tau.inner().part(r + 1), hi = tau.outer().part(r + 1);
        for (int c = lo; c < hi; ++c)
            rows[static_cast<size_t>(tau.cell(r, c) - 1)].push_back(r + 1);
    }
    while (!rows.empty() && rows.back().empty()) rows.pop_back();
    return Tableau(std::move(rows), alphabet);
}

SkewTableau companion_inverse(const Tableau& t, const Partition& outer,
                              const Partition& inner, int alphabet) {
    std::vector<std::vector<int>> rows(static_cast<size_t>(outer.length()));
    for (size_t k = 0; k < t.rows().size(); ++k) {
        for (int r : t.rows()[k]) {
            if (r < 1 || r > outer.length())
                throw std::invalid_argument("companion entry outside the skew shape");
            rows[static_cast<size_t>(r - 1)].push_back(static_cast<int>(k) + 1);
        }
    }
    return SkewTableau(outer, inner, std::move(rows), alphabet);
}

RMatrixResult r_matrix_highest(const Partition& lambda, const Tableau& t) {
    const int m = t.alphabet();
    const TensorElement x{highest_weight_tableau(lambda, m), t};
    for (int i = 1; i < m; ++i)
        if (tensor_eps(x, i) != 0)
            throw std::invalid_argument("tensor element is not highest weight");

    const TensorElement y = commutor(x);
    if (!(y.left.shape() == t.shape()) || !(y.right.shape() == lambda))
        throw std::logic_error("factor exchange changed the shapes");
    if (!(y.left == highest_weight_tableau(y.left.shape(), m)))
        throw std::logic_error("factor exchange did not produce a highest element");
    return {t.shape(), y.right};
}

Tableau conjugation_symmetry(const Tableau& t, const Partition& delta) {
    const int m = t.alphabet();
    if (delta.length() > m)
        throw std::invalid_argument("delta has more parts than the alphabet");
    if (!lr_membership(t, delta))
        throw std::invalid_argument("tableau fails lr_membership for delta");

    const Tableau s = lusztig_involution(t);

    // Raw transpose; rows become strictly increasing, columns weak.
    std::vector<std::vector<int>> grid;
    if (!s.empty()) {
        grid.resize(static_cast<size_t>(s.rows()[0].size()));
        for (const auto& row : s.rows())
            for (size_t j = 0; j < row.size(); ++j) grid[j].push_back(row[j]);
    }

    // Renumber: the k-th row (top to bottom) holding the letter i receives
    // rev(delta)_i + k in its place.  Strict rows mean at most one cell per
    // row carries a given letter.
    std::vector<int> rev(static_cast<size_t>(m));
    for (int j = 1; j <= m; ++j) rev[static_cast<size_t>(j - 1)] = delta.part(m - j + 1);
    std::vector<int> seen(static_cast<size_t>(m), 0);
    for (auto& row : grid)
        for (int& v : row) v = rev[static_cast<size_t>(v - 1)] + ++seen[static_cast<size_t>(v - 1)];

    const int new_alphabet = std::max(1, delta.part(1) + (t.empty() ? 0 : t.weight()[0]));
    return Tableau(std::move(grid), new_alphabet);
}

long long lr_coefficient(const Partition& lambda, const Partition& delta,
                         const Partition& nu) {
    if (lambda.size() + delta.size() != nu.size()) return 0;
    if (!nu.contains(lambda) || !nu.contains(delta)) return 0;

    const int alphabet = std::max(1, nu.length());
    SsytOptions options;
    std::vector<int> content(static_cast<size_t>(alphabet), 0);
    for (int i = 1; i <= nu.length(); ++i)
        content[static_cast<size_t>(i - 1)] = nu.part(i) - delta.part(i);
    options.content = std::move(content);

    long long count = 0;
    enumerate_ssyt(lambda, alphabet, options, [&](const Tableau& t) {
        if (lr_membership(t, delta)) ++count;
    });
    return count;
}

}  // namespace genexp
