#ifndef GENEXP_TEST_HELPERS_HPP
#define GENEXP_TEST_HELPERS_HPP

// Shared reference oracles for the test binaries.  Everything here is
// computed from first principles, independently of the library code paths it
// is used to check.

#include <cstdlib>
#include <numeric>
#include <vector>

#include "genexp/partition.hpp"
#include "genexp/skew.hpp"
#include "genexp/tableau.hpp"

namespace genexp::testing {

// Number of semistandard tableaux of the given shape over 1..alphabet, by
// the hook content formula.  Keep shapes small; the running product is
// reduced by gcd at every cell but still lives in long long.
inline long long hook_content_count(const Partition& shape, int alphabet) {
    if (shape.length() > alphabet) return 0;
    long long num = 1;
    long long den = 1;
    const Partition conj = conjugate(shape);
    for (int r = 0; r < shape.length(); ++r) {
        for (int c = 0; c < shape.parts()[r]; ++c) {
            num *= alphabet + c - r;
            den *= (shape.parts()[r] - c) + (conj.parts()[c] - r) - 1;
            const long long g = std::gcd(num, den);
            num /= g;
            den /= g;
        }
    }
    return num / den;
}

// Schutzenberger evacuation built directly from its classical description:
// complement the entries through the alphabet, rotate the filled diagram by
// a half turn inside its bounding rectangle, and rectify the resulting skew
// tableau.
inline Tableau evacuation_reference(const Tableau& t) {
    if (t.empty()) return t;
    const int m = t.alphabet();
    const std::vector<int> lambda = t.shape().parts();
    const int height = static_cast<int>(lambda.size());
    const int width = lambda[0];

    std::vector<int> outer_parts(height, width);
    std::vector<int> inner_parts;
    std::vector<std::vector<int>> rows(height);
    for (int r = 0; r < height; ++r) {
        const int source = height - 1 - r;
        const int gap = width - lambda[source];
        if (gap > 0) inner_parts.push_back(gap);
        for (int c = lambda[source] - 1; c >= 0; --c) {
            rows[r].push_back(m + 1 - t.cell(source, c));
        }
    }
    const SkewTableau rotated(Partition(outer_parts), Partition(inner_parts),
                              rows, m);
    return rectify(rotated);
}

// Counts the multisets of the given vectors summing to target.  Every vector
// must have positive potential under the weights (a strictly positive linear
// functional); the recursion bounds copy counts through that potential, so
// it terminates without any positivity assumption on intermediate sums.
inline long long decomposition_count_from(
    const std::vector<std::vector<int>>& vectors,
    const std::vector<long long>& weights, std::vector<long long>& target,
    long long potential, std::size_t from) {
    if (potential == 0) {
        for (long long v : target) {
            if (v != 0) return 0;
        }
        return 1;
    }
    if (from == vectors.size()) return 0;
    long long phi = 0;
    for (std::size_t i = 0; i < vectors[from].size(); ++i) {
        phi += weights[i] * vectors[from][i];
    }
    long long total = 0;
    int copies = 0;
    while (potential - copies * phi >= 0) {
        total += decomposition_count_from(vectors, weights, target,
                                          potential - copies * phi, from + 1);
        ++copies;
        for (std::size_t i = 0; i < vectors[from].size(); ++i) {
            target[i] -= vectors[from][i];
        }
    }
    for (std::size_t i = 0; i < vectors[from].size(); ++i) {
        target[i] += copies * vectors[from][i];
    }
    return total;
}

inline long long decomposition_count(const std::vector<std::vector<int>>& vectors,
                                     const std::vector<int>& beta,
                                     const std::vector<long long>& weights) {
    std::vector<long long> target(beta.begin(), beta.end());
    long long potential = 0;
    for (std::size_t i = 0; i < target.size(); ++i) {
        potential += weights[i] * target[i];
    }
    if (potential < 0) return 0;
    return decomposition_count_from(vectors, weights, target, potential, 0);
}

// Strictly positive weights making every positive root have positive
// potential: n-i+1 for coordinate i (1-based).
inline std::vector<long long> root_weights(int n) {
    std::vector<long long> w(n);
    for (int i = 0; i < n; ++i) w[i] = n - i + 1;
    return w;
}

// All partitions of every size up to max_size with at most max_length parts.
inline std::vector<Partition> partitions_up_to(int max_size, int max_length) {
    std::vector<Partition> out;
    for (int s = 0; s <= max_size; ++s) {
        enumerate_partitions(s, max_length, s == 0 ? 1 : s,
                             [&](const Partition& p) { out.push_back(p); });
    }
    return out;
}

inline std::vector<Tableau> all_ssyt(const Partition& shape, int alphabet) {
    std::vector<Tableau> out;
    enumerate_ssyt(shape, alphabet, {},
                   [&](const Tableau& t) { out.push_back(t); });
    return out;
}

}  // namespace genexp::testing

#endif
