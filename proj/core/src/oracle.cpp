#include "genexp/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>

namespace genexp {

std::vector<std::vector<int>> positive_roots(LieType type, int n) {
    if (n < 1) throw std::invalid_argument("rank must be positive");
    std::vector<std::vector<int>> roots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::vector<int> r(n, 0);
            r[i] = 1;
            r[j] = -1;
            roots.push_back(r);
        }
    if (type == LieType::C) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                std::vector<int> r(n, 0);
                r[i] = 1;
                r[j] = 1;
                roots.push_back(r);
            }
        for (int i = 0; i < n; ++i) {
            std::vector<int> r(n, 0);
            r[i] = 2;
            roots.push_back(r);
        }
    }
    return roots;
}

namespace {

// Vector partition counter over a fixed root order, one memo map per level
// so repeated tails are shared between all queries of one Weyl sum.
struct KostantCounter {
    LieType type;
    int n;
    std::vector<std::vector<int>> roots;
    std::vector<std::map<std::vector<int>, SparsePolynomial>> memo;

    KostantCounter(LieType type_, int n_)
        : type(type_), n(n_), roots(positive_roots(type_, n_)), memo(roots.size() + 1) {}

    // Every positive root has nonnegative coordinate prefix sums, so a
    // representable vector keeps all prefix sums nonnegative; the last
    // prefix sum is invariant (type A) or drops by even steps (type C).
    bool query_feasible(const std::vector<int>& beta) const {
        long long p = 0;
        for (int k = 0; k < n; ++k) {
            p += beta[k];
            if (p < 0) return false;
        }
        return type == LieType::A ? p == 0 : p % 2 == 0;
    }

    // Largest c with gamma - c * roots[k] keeping all prefix sums
    // nonnegative; gamma itself already does.
    int max_multiplicity(size_t k, const std::vector<int>& gamma) const {
        const std::vector<int>& r = roots[k];
        int first = -1, last = -1;
        for (int i = 0; i < n; ++i)
            if (r[i] != 0) {
                if (first < 0) first = i;
                last = i;
            }
        long long p = 0;
        long long cap = INT32_MAX;
        if (r[last] < 0) {
            // e_first - e_last: prefixes first..last-1 shrink by c.
            for (int i = 0; i <= last; ++i) {
                p += gamma[i];
                if (i >= first && i < last) cap = std::min(cap, p);
            }
        } else {
            // e_first + e_last or 2 e_first: prefixes first..last-1 shrink
            // by c, prefixes last..n-1 by 2c.
            for (int i = 0; i < n; ++i) {
                p += gamma[i];
                if (i >= first && i < last) cap = std::min(cap, p);
                if (i >= last) cap = std::min(cap, p / 2);
            }
        }
        return static_cast<int>(cap);
    }

    const SparsePolynomial& count(size_t k, const std::vector<int>& gamma) {
        auto [it, inserted] = memo[k].try_emplace(gamma);
        if (!inserted) return it->second;
        SparsePolynomial result;
        if (k == 0) {
            const bool zero = std::all_of(gamma.begin(), gamma.end(), [](int v) { return v == 0; });
            if (zero) result = SparsePolynomial::constant(1);
        } else {
            const int cmax = max_multiplicity(k - 1, gamma);
            std::vector<int> rest = gamma;
            for (int c = 0; c <= cmax; ++c) {
                if (c > 0)
                    for (int i = 0; i < n; ++i) rest[i] -= roots[k - 1][i];
                result = result + count(k - 1, rest) * SparsePolynomial::t_pow(c);
            }
        }
        it->second = std::move(result);
        return it->second;
    }

    SparsePolynomial query(const std::vector<int>& beta) {
        if (!query_feasible(beta)) return {};
        return count(roots.size(), beta);
    }
};

int permutation_sign(const std::vector<int>& idx) {
    int inv = 0;
    for (size_t a = 0; a < idx.size(); ++a)
        for (size_t b = a + 1; b < idx.size(); ++b)
            if (idx[a] > idx[b]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

}  // namespace

SparsePolynomial t_kostant_partition(LieType type, int n, const std::vector<int>& beta) {
    if (static_cast<int>(beta.size()) != n)
        throw std::invalid_argument("beta must have one coordinate per rank");
    KostantCounter counter(type, n);
    return counter.query(beta);
}

SparsePolynomial lusztig_t_analogue(LieType type, int n, const Partition& lambda,
                                    const std::vector<int>& mu) {
    if (lambda.length() > n)
        throw std::invalid_argument("lambda has more parts than the rank");
    if (static_cast<int>(mu.size()) != n)
        throw std::invalid_argument("mu must have one coordinate per rank");
    for (int k = 0; k + 1 < n; ++k)
        if (mu[k] < mu[k + 1]) throw std::invalid_argument("mu is not dominant");
    if (type == LieType::C && n > 0 && mu[n - 1] < 0)
        throw std::invalid_argument("mu is not dominant");

    std::vector<long long> x(n), target(n);
    for (int k = 0; k < n; ++k) {
        const int rho = type == LieType::A ? n - 1 - k : n - k;
        x[k] = lambda.part(k + 1) + rho;
        target[k] = mu[k] + rho;
    }

    KostantCounter counter(type, n);
    SparsePolynomial total;
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<int> beta(n);
    do {
        const int perm_sign = permutation_sign(idx);
        const unsigned masks = type == LieType::C ? 1u << n : 1u;
        for (unsigned mask = 0; mask < masks; ++mask) {
            int sign = perm_sign;
            bool in_range = true;
            for (int k = 0; k < n && in_range; ++k) {
                long long v = x[idx[k]];
                if (mask & (1u << k)) {
                    v = -v;
                    sign = -sign;
                }
                const long long b = v - target[k];
                if (b < INT32_MIN || b > INT32_MAX) in_range = false;
                beta[k] = static_cast<int>(b);
            }
            if (!in_range) throw std::overflow_error("weight coordinates too large");
            total = total + counter.query(beta) * sign;
        }
    } while (std::next_permutation(idx.begin(), idx.end()));
    return total;
}

SparsePolynomial lusztig_t_analogue_zero(LieType type, int n, const Partition& lambda) {
    if (type == LieType::A) {
        if (lambda.size() % n != 0) return {};
        return lusztig_t_analogue(type, n, lambda,
                                  std::vector<int>(n, lambda.size() / n));
    }
    return lusztig_t_analogue(type, n, lambda, std::vector<int>(n, 0));
}

}  // namespace genexp
