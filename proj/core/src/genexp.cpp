#include "genexp/genexp.hpp"

#include <functional>
#include <set>
#include <stdexcept>
#include <utility>

#include "genexp/crystal.hpp"
#include "genexp/extremal.hpp"
#include "genexp/lr_maps.hpp"
#include "genexp/skew.hpp"

namespace genexp {

namespace {

void require_rank(int n) {
    if (n < 1) throw std::invalid_argument("rank must be positive");
}

Monomial t_monomial(long long power) {
    if (power == 0) return {};
    return {{0, static_cast<int>(power)}};
}

void require_alphabet_2n(const Tableau& t, int n) {
    for (const auto& row : t.rows()) {
        for (int v : row) {
            if (v > 2 * n) {
                throw std::invalid_argument("entry outside the alphabet 1..2n");
            }
        }
    }
}

// Profile of the reading word for operator indices 1..2n-1.
EpsPhiProfile profile_2n(const Tableau& t, int n) {
    return eps_phi_profile(t.reading_word(), 2 * n - 1);
}

void for_each_zero_weight_A(const Partition& lambda, int n,
                            const std::function<void(const EpsPhiProfile&)>& visit) {
    require_rank(n);
    if (lambda.length() > n || lambda.size() % n != 0) return;
    SsytOptions options;
    options.content = std::vector<int>(n, lambda.size() / n);
    enumerate_ssyt(lambda, n, options,
                   [&](const Tableau& t) { visit(eps_phi(t)); });
}

// Depth-first search over the zero-weight King tableaux of a shape.  Rows
// are filled left to right, top to bottom; the zero-weight condition is
// enforced as soon as a letter pair's multiplicities become final.  The
// letters 2q-1 and 2q may only appear in rows 1..q (row q+1 already requires
// entries >= 2q+1), so for q up to the number of rows the pair is final at
// the end of row q, and the remaining pairs are final at the leaf.
class KingZeroSearch {
public:
    KingZeroSearch(const Partition& shape, int n,
                   std::function<void(const std::vector<std::vector<int>>&)> emit)
        : shape_(shape.parts()), n_(n), emit_(std::move(emit)) {
        rows_.resize(shape_.size());
        for (std::size_t r = 0; r < shape_.size(); ++r) {
            rows_[r].assign(shape_[r], 0);
        }
        counts_.assign(2 * n + 1, 0);
    }

    void run() {
        if (static_cast<int>(shape_.size()) > n_) return;
        descend(0, 0);
    }

private:
    void descend(std::size_t r, int c) {
        if (r == shape_.size()) {
            for (int q = 1; q <= n_; ++q) {
                if (counts_[2 * q - 1] != counts_[2 * q]) return;
            }
            emit_(rows_);
            return;
        }
        if (c == shape_[r]) {
            if (counts_[2 * r + 1] != counts_[2 * r + 2]) return;
            descend(r + 1, 0);
            return;
        }
        // Letters of the current row's own pair, encoded.
        const int own_even = 2 * static_cast<int>(r) + 2;
        int lo = own_even - 1;
        if (c > 0) lo = std::max(lo, rows_[r][c - 1]);
        if (r > 0) lo = std::max(lo, rows_[r - 1][c] + 1);
        for (int v = lo; v <= 2 * n_; ++v) {
            // Placing (r+1)' here freezes the count of unprimed r+1, so a
            // surplus prime could never be matched again.
            if (v == own_even && counts_[own_even] >= counts_[own_even - 1]) {
                continue;
            }
            // Moving past the row's own pair freezes both of its counts.
            if (v > own_even && (c == 0 || rows_[r][c - 1] <= own_even) &&
                counts_[own_even - 1] != counts_[own_even]) {
                break;
            }
            rows_[r][c] = v;
            ++counts_[v];
            // Unmatched copies of the row's unprimed letter can only be
            // matched by primes later in this same row.
            if (counts_[own_even - 1] - counts_[own_even] <= shape_[r] - c - 1) {
                descend(r, c + 1);
            }
            --counts_[v];
        }
        rows_[r][c] = 0;
    }

    std::vector<int> shape_;
    int n_;
    std::function<void(const std::vector<std::vector<int>>&)> emit_;
    std::vector<std::vector<int>> rows_;
    std::vector<int> counts_;  // counts_[v] = multiplicity of the letter v
};

std::vector<int> japanese_word(const std::vector<std::vector<int>>& rows) {
    std::vector<int> word;
    const int width = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    for (int c = width - 1; c >= 0; --c) {
        for (const auto& row : rows) {
            if (c >= static_cast<int>(row.size())) break;
            word.push_back(row[c]);
        }
    }
    return word;
}

// In-word version of the King-to-distinguished lowering: the odd-index
// operators touch disjoint letter pairs, so one ascending sweep suffices.
void lower_odd_in_place(std::vector<int>& word, int n) {
    for (int i = 1; i < 2 * n; i += 2) {
        while (auto pos = lower_position(word, i)) word[*pos] = i + 1;
    }
}

long long charge_from_word(const std::vector<int>& word, int n) {
    const EpsPhiProfile prof = eps_phi_profile(word, 2 * n - 1);
    long long total = 0;
    for (int i = 1; i <= 2 * n - 1; ++i) {
        total += static_cast<long long>(2 * n - i) * ((prof.eps[i - 1] + 1) / 2);
    }
    return total;
}

}  // namespace

SparsePolynomial genexp_A(const Partition& lambda, int n) {
    SparsePolynomial out;
    for_each_zero_weight_A(lambda, n, [&](const EpsPhiProfile& prof) {
        long long power = 0;
        for (int i = 1; i < n; ++i) {
            power += static_cast<long long>(i) * prof.eps[i - 1];
        }
        out.add_term(t_monomial(power), 1);
    });
    return out;
}

SparsePolynomial genexp_A_reversed(const Partition& lambda, int n) {
    SparsePolynomial out;
    for_each_zero_weight_A(lambda, n, [&](const EpsPhiProfile& prof) {
        long long power = 0;
        for (int i = 1; i < n; ++i) {
            power += static_cast<long long>(n - i) * prof.eps[i - 1];
        }
        out.add_term(t_monomial(power), 1);
    });
    return out;
}

SparsePolynomial genexp_A_multi(const Partition& lambda, int n) {
    SparsePolynomial out;
    for_each_zero_weight_A(lambda, n, [&](const EpsPhiProfile& prof) {
        Monomial m;
        for (int i = 1; i < n; ++i) {
            if (prof.eps[i - 1] > 0) m.push_back({i, prof.eps[i - 1]});
        }
        out.add_term(m, 1);
    });
    return out;
}

bool is_king_tableau(const Tableau& t, int n) {
    require_rank(n);
    const auto& rows = t.rows();
    if (static_cast<int>(rows.size()) > n) return false;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r][0] < 2 * static_cast<int>(r) + 1) return false;
        if (rows[r].back() > 2 * n) return false;
    }
    return true;
}

std::vector<Tableau> enumerate_king_zero(const Partition& lambda, int n) {
    require_rank(n);
    std::vector<Tableau> out;
    if (lambda.size() % 2 != 0 || lambda.length() > n) return out;
    KingZeroSearch search(lambda, n,
                          [&](const std::vector<std::vector<int>>& rows) {
                              out.emplace_back(rows, 2 * n);
                          });
    search.run();
    return out;
}

bool is_distinguished_star(const Tableau& t, int n, bool with_flag) {
    require_rank(n);
    const auto& rows = t.rows();
    for (const auto& row : rows) {
        if (row.back() > 2 * n) return false;
    }
    const EpsPhiProfile prof = profile_2n(t, n);
    for (int i = 1; i <= 2 * n - 1; i += 2) {
        if (prof.phi[i - 1] != 0) return false;
        if (prof.eps[i - 1] % 2 != 0) return false;
    }
    if (with_flag) {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r][0] < 2 * static_cast<int>(r) + 1) return false;
        }
    }
    return true;
}

Tableau king_to_distinguished(const Tableau& t, int n) {
    require_rank(n);
    if (t.alphabet() != 2 * n || !is_king_tableau(t, n)) {
        throw std::invalid_argument("not a King tableau over the alphabet 1..2n");
    }
    const std::vector<int> w = t.weight();
    for (int k = 1; k <= n; ++k) {
        if (w[2 * k - 2] != w[2 * k - 1]) {
            throw std::invalid_argument("King tableau does not have zero weight");
        }
    }
    Tableau cur = t;
    for (int i = 1; i < 2 * n; i += 2) {
        while (auto next = crystal_f(cur, i)) cur = *next;
    }
    return cur;
}

Tableau distinguished_to_king(const Tableau& t, int n) {
    require_rank(n);
    if (t.alphabet() != 2 * n || !is_distinguished_star(t, n, true)) {
        throw std::invalid_argument("not a flagged distinguished filling");
    }
    const std::vector<int> w = t.weight();
    Tableau cur = t;
    for (int k = 1; k <= n; ++k) {
        const int diff = w[2 * k - 1] - w[2 * k - 2];
        // diff = eps_{2k-1}(t), nonnegative and even on distinguished input.
        for (int step = 0; step < diff / 2; ++step) {
            auto next = crystal_e(cur, 2 * k - 1);
            if (!next) {
                throw std::logic_error("raising failed on a distinguished filling");
            }
            cur = *next;
        }
    }
    if (!is_king_tableau(cur, n)) {
        throw std::logic_error("inverse lowering left the King family");
    }
    return cur;
}

long long charge_C(const Tableau& t, int n) {
    require_rank(n);
    require_alphabet_2n(t, n);
    return charge_from_word(t.reading_word(), n);
}

long long charge_C_dual(const Tableau& t, int n) {
    require_rank(n);
    require_alphabet_2n(t, n);
    const EpsPhiProfile prof = profile_2n(t, n);
    WeightVector star;
    for (int i = 1; i <= 2 * n - 1; ++i) {
        star.set_coord(i, prof.eps[2 * n - i - 1]);
    }
    WeightVector mu;
    for (int i = 1; i <= n - 1; ++i) {
        mu.set_coord(2 * i, prof.eps[2 * n - 2 * i - 1] % 2);
    }
    const long long total = (star + mu).weighted_size();
    if (total % 2 != 0) {
        throw std::logic_error("dual charge expression is odd on this filling");
    }
    return total / 2;
}

SparsePolynomial genexp_C(const Partition& lambda, int n) {
    require_rank(n);
    SparsePolynomial out;
    if (lambda.size() % 2 != 0 || lambda.length() > n) return out;
    KingZeroSearch search(lambda, n,
                          [&](const std::vector<std::vector<int>>& rows) {
                              std::vector<int> word = japanese_word(rows);
                              lower_odd_in_place(word, n);
                              out.add_term(t_monomial(charge_from_word(word, n)), 1);
                          });
    search.run();
    return out;
}

SparsePolynomial genexp_C_multi(const Partition& lambda, int n) {
    require_rank(n);
    SparsePolynomial out;
    if (lambda.size() % 2 != 0 || lambda.length() > n) return out;
    KingZeroSearch search(lambda, n,
                          [&](const std::vector<std::vector<int>>& rows) {
                              std::vector<int> word = japanese_word(rows);
                              lower_odd_in_place(word, n);
                              const EpsPhiProfile prof = eps_phi_profile(word, 2 * n - 1);
                              Monomial m;
                              for (int i = 2 * n - 1; i >= 1; --i) {
                                  const int e = (prof.eps[i - 1] + 1) / 2;
                                  if (e > 0) m.push_back({2 * n - i, e});
                              }
                              out.add_term(m, 1);
                          });
    search.run();
    return out;
}

namespace {

// The phi-side statistic attached to a branching witness of shape lambda.
long long branching_statistic(const Tableau& b, int n) {
    const EpsPhiProfile prof = eps_phi_profile(b.reading_word(), 2 * n - 1);
    long long total = 0;
    for (int i = 1; i <= 2 * n - 1; ++i) {
        const int parity = (i % 2 == 0) ? prof.phi[i - 1] % 2 : 0;
        total += static_cast<long long>(i) * (prof.phi[i - 1] + parity);
    }
    if (total % 2 != 0) {
        throw std::logic_error("branching statistic is odd");
    }
    return total / 2;
}

// All shape-lambda tableaux produced by the branching pipeline at the
// gl_2n-highest weight nu: lattice skew tableaux of shape nu/lambda whose
// weight delta has even column multiplicities and whose odd letters obey
// the sp_2n row bound, sent through the companion map and then swapped by
// the R-matrix so that the lambda-shaped factor carries the free
// information.
void collect_branching_images(const Partition& lambda, const Partition& nu,
                              int n,
                              const std::function<void(const Tableau&)>& visit) {
    const int rest = nu.size() - lambda.size();
    enumerate_partitions(rest, 2 * n, nu.first(), [&](const Partition& delta) {
        if (!in_P11(delta) || !nu.contains(delta)) return;
        LrSkewOptions options;
        std::vector<int> weight(2 * n, 0);
        for (int i = 1; i <= delta.length(); ++i) weight[i - 1] = delta.part(i);
        options.weight = std::move(weight);
        options.sundaram_rank = n;
        enumerate_lr_skew(nu, lambda, 2 * n, options, [&](const SkewTableau& tau) {
            visit(r_matrix_highest(lambda, companion_tableau(tau, 2 * n)).image);
        });
    });
}

}  // namespace

SparsePolynomial genexp_C_sundaram(const Partition& lambda, int n) {
    require_rank(n);
    SparsePolynomial out;
    if (lambda.size() % 2 != 0 || lambda.length() > n) return out;
    const long long limit = 2 * max_power(lambda, n);
    std::set<Tableau> seen;
    for (long long s = lambda.size(); s <= limit; s += 2) {
        // nu runs over the even-part partitions of s in at most 2n rows.
        enumerate_partitions(static_cast<int>(s) / 2, 2 * n,
                             static_cast<int>(s) / 2,
                             [&](const Partition& half) {
                                 std::vector<int> doubled;
                                 doubled.reserve(half.length());
                                 for (int part : half.parts()) doubled.push_back(2 * part);
                                 const Partition nu(std::move(doubled));
                                 if (!nu.contains(lambda)) return;
                                 collect_branching_images(
                                     lambda, nu, n, [&](const Tableau& image) {
                                         if (!seen.insert(image).second) return;
                                         out.add_term(
                                             t_monomial(branching_statistic(image, n)), 1);
                                     });
                             });
    }
    return out;
}

SparsePolynomial growth_delta(const Partition& lambda, int n) {
    const SparsePolynomial d = genexp_C(lambda, n + 1) - genexp_C(lambda, n);
    if (!d.nonnegative()) {
        throw std::logic_error("rank growth dropped a coefficient");
    }
    return d;
}

Tableau stable_raise(const Tableau& t) {
    Tableau cur = t;
    for (int i = 1; i < cur.alphabet(); i += 2) {
        while (auto next = crystal_e(cur, i)) cur = *next;
    }
    return cur;
}

bool is_stable_distinguished(const Tableau& t) {
    const EpsPhiProfile prof = eps_phi_profile(t.reading_word(), t.alphabet());
    for (int i = 1; i <= t.alphabet(); i += 2) {
        if (prof.eps[i - 1] != 0 || prof.phi[i - 1] % 2 != 0) return false;
    }
    return true;
}

long long stable_statistic(const Tableau& t) {
    const EpsPhiProfile prof = eps_phi_profile(t.reading_word(), t.alphabet());
    long long total = 0;
    for (int i = 1; i <= t.alphabet(); ++i) {
        total += static_cast<long long>(i) * ((prof.phi[i - 1] + 1) / 2);
    }
    return total;
}

namespace {

int stable_alphabet(const Partition& lambda, int cutoff) {
    const int rows_even = lambda.length() + lambda.length() % 2;
    return std::max({2 * cutoff, rows_even, 2});
}

// Enumerates the stable distinguished fillings of shape lambda over m
// letters: raise every tableau whose letters come in balanced odd/even
// pairs.  The raising map is a bijection onto the stable fillings; the
// seen-set guards its injectivity.
void for_each_stable_distinguished(const Partition& lambda, int m,
                                   const std::function<void(const Tableau&)>& visit) {
    if (lambda.size() % 2 != 0 || lambda.length() > m) return;
    std::set<Tableau> seen;
    std::vector<int> content(m, 0);
    std::function<void(int, int)> place = [&](int pair, int remaining) {
        if (pair == m / 2) {
            if (remaining != 0) return;
            SsytOptions options;
            options.content = content;
            enumerate_ssyt(lambda, m, options, [&](const Tableau& t) {
                const Tableau raised = stable_raise(t);
                if (!seen.insert(raised).second) {
                    throw std::logic_error(
                        "raising collided on two balanced tableaux");
                }
                visit(raised);
            });
            return;
        }
        for (int d = 0; d <= remaining; ++d) {
            content[2 * pair] = d;
            content[2 * pair + 1] = d;
            place(pair + 1, remaining - d);
        }
    };
    place(0, lambda.size() / 2);
}

TruncatedSeries stable_C_at(const Partition& lambda, int cutoff, int m) {
    TruncatedSeries s(cutoff);
    for_each_stable_distinguished(lambda, m, [&](const Tableau& b) {
        const long long stat = stable_statistic(b);
        if (stat <= cutoff) s.set_coeff(stat, s.coeff(stat) + 1);
    });
    return s;
}

SparsePolynomial stable_C_multi_at(const Partition& lambda, int cutoff, int m) {
    SparsePolynomial out;
    for_each_stable_distinguished(lambda, m, [&](const Tableau& b) {
        const EpsPhiProfile prof = eps_phi_profile(b.reading_word(), b.alphabet());
        Monomial mono;
        long long degree = 0;
        for (int i = 1; i <= b.alphabet(); ++i) {
            const int e = (prof.phi[i - 1] + 1) / 2;
            if (e > 0) {
                mono.push_back({i, e});
                degree += static_cast<long long>(i) * e;
            }
        }
        if (degree <= cutoff) out.add_term(mono, 1);
    });
    return out;
}

}  // namespace

TruncatedSeries stable_C(const Partition& lambda, int cutoff) {
    const int m = stable_alphabet(lambda, cutoff);
    const TruncatedSeries first = stable_C_at(lambda, cutoff, m);
    const TruncatedSeries second = stable_C_at(lambda, cutoff, m + 2);
    if (!(first == second)) {
        throw std::logic_error("series did not stabilize at the chosen alphabet");
    }
    return first;
}

TruncatedSeries stable_B(const Partition& lambda, int cutoff) {
    return stable_C(conjugate(lambda), cutoff);
}

TruncatedSeries stable_D(const Partition& lambda, int cutoff) {
    return stable_C(conjugate(lambda), cutoff);
}

SparsePolynomial stable_C_multi(const Partition& lambda, int cutoff) {
    const int m = stable_alphabet(lambda, cutoff);
    const SparsePolynomial first = stable_C_multi_at(lambda, cutoff, m);
    const SparsePolynomial second = stable_C_multi_at(lambda, cutoff, m + 2);
    if (!(first == second)) {
        throw std::logic_error("series did not stabilize at the chosen alphabet");
    }
    return first;
}

}  // namespace genexp
