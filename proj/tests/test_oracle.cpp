#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <stdexcept>
#include <vector>

#include "genexp/oracle.hpp"
#include "genexp/partition.hpp"
#include "genexp/polynomial.hpp"
#include "test_helpers.hpp"

using namespace genexp;

TEST_CASE("positive root systems have the right cardinalities") {
    for (int n = 1; n <= 5; ++n) {
        CHECK(positive_roots(LieType::A, n).size() ==
              static_cast<std::size_t>(n * (n - 1) / 2));
        CHECK(positive_roots(LieType::C, n).size() ==
              static_cast<std::size_t>(n * n));
    }
    for (LieType type : {LieType::A, LieType::C}) {
        for (const auto& root : positive_roots(type, 3)) {
            int first = 0;
            for (int v : root) {
                if (v != 0) {
                    first = v;
                    break;
                }
            }
            CHECK(first > 0);  // positive in the root order
        }
    }
    const auto roots = positive_roots(LieType::A, 4);
    const std::set<std::vector<int>> distinct(roots.begin(), roots.end());
    CHECK(distinct.size() == roots.size());
}

TEST_CASE("graded decomposition counts") {
    CHECK(t_kostant_partition(LieType::A, 3, {0, 0, 0}) ==
          SparsePolynomial::constant(1));
    CHECK(t_kostant_partition(LieType::A, 3, {1, -1, 0}) ==
          SparsePolynomial::t_pow(1));
    CHECK(t_kostant_partition(LieType::C, 2, {0, 2}).is_zero() == false);
    CHECK(t_kostant_partition(LieType::A, 2, {-1, 1}).is_zero());
    // evaluating at 1 counts multisets of positive roots with the given sum
    for (LieType type : {LieType::A, LieType::C}) {
        const int n = 3;
        const auto roots = positive_roots(type, n);
        const auto weights = testing::root_weights(n);
        for (int a = -2; a <= 2; ++a) {
            for (int b = -2; b <= 2; ++b) {
                for (int c = -2; c <= 2; ++c) {
                    const std::vector<int> beta = {a, b, c};
                    CHECK(t_kostant_partition(type, n, beta).evaluate_at_one() ==
                          testing::decomposition_count(roots, beta, weights));
                }
            }
        }
    }
}

TEST_CASE("weight multiplicity polynomials at pinned values") {
    // zero weight vector gives the trivial polynomial
    CHECK(lusztig_t_analogue(LieType::A, 2, Partition(), {0, 0}) ==
          SparsePolynomial::constant(1));
    // adjoint of rank 2 type A at the zero weight
    CHECK(lusztig_t_analogue(LieType::A, 3, Partition({2, 1}), {1, 1, 1}) ==
          SparsePolynomial::t_pow(1) + SparsePolynomial::t_pow(2));
    CHECK(lusztig_t_analogue_zero(LieType::A, 3, Partition({2, 1})) ==
          SparsePolynomial::t_pow(1) + SparsePolynomial::t_pow(2));
    // symplectic rank 2: the two fundamental weights
    CHECK(lusztig_t_analogue_zero(LieType::C, 2, Partition({1, 1})) ==
          SparsePolynomial::t_pow(2));
    CHECK(lusztig_t_analogue_zero(LieType::C, 2, Partition({2})) ==
          SparsePolynomial::t_pow(1) + SparsePolynomial::t_pow(3));
    // highest weight itself has multiplicity one
    CHECK(lusztig_t_analogue(LieType::A, 3, Partition({3, 1}), {3, 1, 0}) ==
          SparsePolynomial::constant(1));
    CHECK(lusztig_t_analogue(LieType::C, 3, Partition({2, 1}), {2, 1, 0}) ==
          SparsePolynomial::constant(1));
    // weights outside the dominance cone vanish
    CHECK(lusztig_t_analogue(LieType::A, 2, Partition({1, 1}), {2, 0}).is_zero());
}

TEST_CASE("zero weight conventions per type") {
    // type A uses the balanced weight when the size is divisible by the rank
    CHECK(lusztig_t_analogue_zero(LieType::A, 2, Partition({1})).is_zero());
    CHECK(lusztig_t_analogue_zero(LieType::A, 2, Partition({2})) ==
          SparsePolynomial::t_pow(1));
    // type C uses the origin; odd sizes vanish
    CHECK(lusztig_t_analogue_zero(LieType::C, 2, Partition({1})).is_zero());
    CHECK(lusztig_t_analogue_zero(LieType::C, 2, Partition({2, 1})).is_zero());
}

TEST_CASE("multiplicity polynomials have nonnegative coefficients") {
    for (const Partition& lambda : testing::partitions_up_to(5, 3)) {
        const SparsePolynomial a = lusztig_t_analogue_zero(LieType::A, 3, lambda);
        CHECK(a.nonnegative());
        const SparsePolynomial c = lusztig_t_analogue_zero(LieType::C, 3, lambda);
        CHECK(c.nonnegative());
    }
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(
        lusztig_t_analogue(LieType::A, 2, Partition({2}), {0, 1}),
        std::invalid_argument);
    CHECK_THROWS_AS(
        lusztig_t_analogue_zero(LieType::C, 2, Partition({1, 1, 1})),
        std::invalid_argument);
    // for type A an impossible box count short-circuits to zero instead
    CHECK(lusztig_t_analogue_zero(LieType::A, 2, Partition({1, 1, 1})) ==
          SparsePolynomial());
    CHECK_THROWS_AS(
        lusztig_t_analogue(LieType::C, 2, Partition({2}), {1}),
        std::invalid_argument);
}
