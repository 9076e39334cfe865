#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "genexp/extremal.hpp"
#include "genexp/genexp.hpp"
#include "genexp/partition.hpp"
#include "genexp/polynomial.hpp"
#include "test_helpers.hpp"

using namespace genexp;

namespace {

const Partition kStaircase({7, 6, 5, 3, 1});

}  // namespace

TEST_CASE("column count sequences at pinned shapes") {
    const ExtremalSequences seq = extremal_sequences(kStaircase, 5);
    CHECK(seq.a == std::vector<int>({1, 2, 2, 1, 1}));
    CHECK(seq.s == std::vector<int>({1, 3, 5, 6, 7}));
    CHECK(seq.b == std::vector<int>({2, 2, 2, 0, 2}));
    CHECK(seq.c == std::vector<int>({2, 2, 2, 0, 1}));

    const ExtremalSequences tall = extremal_sequences(Partition({4, 3, 1, 1, 1}), 5);
    CHECK(tall.a == std::vector<int>({1, 0, 0, 2, 1}));
    CHECK(tall.b == std::vector<int>({2, 0, 0, 2, 0}));
    CHECK(tall.c == tall.b);

    const ExtremalSequences wide = extremal_sequences(Partition({9, 7, 5, 4, 3, 1, 1}), 7);
    CHECK(wide.a == std::vector<int>({1, 0, 2, 1, 1, 2, 2}));
    CHECK(wide.b == std::vector<int>({2, 0, 2, 0, 2, 2, 2}));
    CHECK(wide.c == std::vector<int>({2, 0, 2, 0, 1, 2, 2}));
}

TEST_CASE("degree extremes at pinned shapes") {
    CHECK(min_power(kStaircase, 5) == 13);
    CHECK(max_power(kStaircase, 5) == 70);
    CHECK(min_power(Partition({4, 3, 1, 1, 1}), 5) == 7);
    CHECK(min_power(Partition({9, 7, 5, 4, 3, 1, 1}), 7) == 18);
    CHECK(min_power(Partition({1, 1}), 2) == 2);
    CHECK(min_power(Partition({2}), 2) == 1);
    CHECK(max_power(Partition({2}), 2) == 3);
    for (int n = 2; n <= 5; ++n) {
        CHECK(max_power(Partition({2}), n) == 2 * n - 1);
        CHECK(max_power(Partition({1, 1}), n) == 2 * n - 2);
    }
    CHECK_THROWS_AS(min_power(Partition({1}), 2), std::invalid_argument);
    CHECK_THROWS_AS(min_power(Partition({1, 1, 1}), 2), std::invalid_argument);
    CHECK_THROWS_AS(max_power(Partition({3}), 2), std::invalid_argument);
}

TEST_CASE("first rows of minimal fillings") {
    CHECK(sigma_min_row(kStaircase, 5) ==
          std::vector<int>({6, 6, 7, 7, 8, 8, 10}));
    CHECK(sigma_min_row(Partition({4, 3, 1, 1, 1}), 5) ==
          std::vector<int>({6, 6, 9, 9}));
    CHECK(sigma_min_row(Partition({9, 7, 5, 4, 3, 1, 1}), 7) ==
          std::vector<int>({8, 8, 10, 10, 12, 13, 13, 14, 14}));
    CHECK(sigma_min_row(Partition({1, 1}), 2) == std::vector<int>({3}));
    CHECK(sigma_min_row(Partition({2}), 2) == std::vector<int>({4, 4}));
}

TEST_CASE("minimal fillings at pinned shapes") {
    const Tableau big = sigma_min(kStaircase, 5);
    CHECK(big.rows() == std::vector<std::vector<int>>({{6, 6, 7, 7, 8, 8, 10},
                                                       {7, 7, 8, 8, 9, 10},
                                                       {8, 8, 9, 9, 10},
                                                       {9, 10, 10},
                                                       {10}}));
    CHECK(charge_C(big, 5) == 13);
    CHECK(row_charge(sigma_min_row(kStaircase, 5), 5) == 13);
    CHECK(is_distinguished_star(big, 5, true));

    const Tableau tall = sigma_min(Partition({4, 3, 1, 1, 1}), 5);
    CHECK(tall.rows() == std::vector<std::vector<int>>(
                             {{6, 6, 9, 9}, {7, 10, 10}, {8}, {9}, {10}}));
    CHECK(charge_C(tall, 5) == 7);

    const Tableau wide = sigma_min(Partition({9, 7, 5, 4, 3, 1, 1}), 7);
    CHECK(wide.rows() ==
          std::vector<std::vector<int>>({{8, 8, 10, 10, 12, 13, 13, 14, 14},
                                         {9, 9, 11, 12, 13, 14, 14},
                                         {10, 10, 12, 13, 14},
                                         {11, 11, 13, 14},
                                         {12, 12, 14},
                                         {13},
                                         {14}}));
    CHECK(charge_C(wide, 7) == 18);
    CHECK(is_distinguished_star(wide, 7, true));

    CHECK(sigma_min(Partition({1, 1}), 2) == Tableau({{3}, {4}}, 4));
    CHECK(sigma_min(Partition({2}), 2) == Tableau({{4, 4}}, 4));
}

TEST_CASE("minimal fillings are consistent on a sweep") {
    for (int n = 2; n <= 4; ++n) {
        for (const Partition& lambda : testing::partitions_up_to(8, n)) {
            if (lambda.size() % 2 != 0 || lambda.empty()) continue;
            const Tableau t = sigma_min(lambda, n);
            CHECK(t.shape() == lambda);
            CHECK(is_distinguished_star(t, n, true));
            CHECK(charge_C(t, n) == min_power(lambda, n));
            CHECK(row_charge(sigma_min_row(lambda, n), n) ==
                  min_power(lambda, n));
            CHECK(row_in_sigma(sigma_min_row(lambda, n), lambda, n));
            CHECK(min_power(lambda, n) >= lambda.size() / 2);
            CHECK(min_power(lambda, n) <= max_power(lambda, n));
        }
    }
}

TEST_CASE("a second filling shares the minimal charge on the staircase") {
    const Tableau other({{6, 6, 7, 7, 8, 8, 10},
                         {7, 7, 8, 8, 9, 9},
                         {8, 8, 9, 10, 10},
                         {9, 10, 10},
                         {10}},
                        10);
    CHECK(is_distinguished_star(other, 5, true));
    CHECK(charge_C(other, 5) == 13);
    CHECK_FALSE(other == sigma_min(kStaircase, 5));
}

TEST_CASE("degree extremes bound the polynomials") {
    for (int n = 2; n <= 3; ++n) {
        for (const Partition& lambda : testing::partitions_up_to(6, n)) {
            if (lambda.size() % 2 != 0 || lambda.empty()) continue;
            const SparsePolynomial p = genexp_C(lambda, n);
            REQUIRE(!p.is_zero());
            CHECK(p.min_degree() == min_power(lambda, n));
            CHECK(p.max_degree() == max_power(lambda, n));
        }
    }
}

TEST_CASE("column structure describes the blocks") {
    const auto columns = column_structure(kStaircase, 5);
    REQUIRE(columns.size() == 7);
    const std::vector<int> heights = {5, 4, 4, 3, 3, 2, 1};
    const std::vector<int> row = sigma_min_row(kStaircase, 5);
    for (std::size_t j = 0; j < columns.size(); ++j) {
        CHECK(columns[j].height == heights[j]);
        CHECK(columns[j].top == row[j]);
        if (columns[j].special) CHECK(columns[j].block >= 0);
        if (columns[j].odd_special) {
            CHECK(columns[j].special);
            CHECK((columns[j].top - columns[j].height) % 2 == 0);
        }
    }
    // every complete block covers the columns between two odd heights
    for (const ColumnInfo& info : columns) {
        if (info.block >= 0 && !info.in_incomplete) {
            CHECK(info.height >= 1);
        }
    }
}

TEST_CASE("positional bounds and membership") {
    CHECK(row_entry_bounds(kStaircase, 5) ==
          std::vector<int>({6, 7, 7, 8, 8, 9, 10}));
    CHECK(row_entry_bounds(Partition({9, 7, 5, 4, 3, 1, 1}), 7) ==
          std::vector<int>({8, 10, 10, 11, 12, 13, 13, 14, 14}));
    CHECK(row_in_sigma({6, 6, 7, 7, 8, 8, 10}, kStaircase, 5));
    CHECK(row_in_sigma({6, 7, 7, 8, 8, 9, 10}, kStaircase, 5));
    CHECK_FALSE(row_in_sigma({7, 7, 7, 8, 8, 9, 10}, kStaircase, 5));
    CHECK_FALSE(row_in_sigma({6, 6, 7, 7, 8, 8}, kStaircase, 5));
    CHECK_FALSE(row_in_sigma({6, 6, 7, 7, 8, 10, 8}, kStaircase, 5));
    CHECK_FALSE(row_in_sigma({0, 6, 7, 7, 8, 8, 10}, kStaircase, 5));
}

TEST_CASE("row charge expression") {
    CHECK(row_charge({4, 4}, 2) == 1);
    CHECK(row_charge({3}, 2) == 2);
    CHECK(row_charge({6, 6, 7, 7, 8, 8, 10}, 5) == 13);
    CHECK(row_charge({8, 8, 10, 10, 12, 13, 13, 14, 14}, 7) == 18);
    CHECK(row_charge({7, 7, 7, 9, 10, 11, 11, 12, 14}, 7) == 35);
    CHECK(row_charge({}, 3) == 0);
}

TEST_CASE("exhaustive row minimum agrees with the closed formula") {
    for (int n = 2; n <= 3; ++n) {
        for (const Partition& lambda : testing::partitions_up_to(6, n)) {
            if (lambda.size() % 2 != 0 || lambda.empty()) continue;
            CHECK(min_row_charge_bruteforce(lambda, n) == min_power(lambda, n));
        }
    }
    CHECK(min_row_charge_bruteforce(Partition({4, 3, 1, 1, 1}), 5) == 7);
}

TEST_CASE("rewriting moves respect their charge contracts") {
    CHECK(lattice_moves_check({6, 6, 7, 7, 8, 8, 10}, kStaircase, 5) >= 0);
    CHECK(lattice_moves_check({6, 7, 7, 8, 8, 9, 10}, kStaircase, 5) > 0);
    CHECK(lattice_moves_check({7, 7, 7, 9, 10, 11, 11, 12, 14},
                              Partition({9, 7, 5, 4, 3, 1, 1}), 7) > 0);
    int checked = 0;
    for (int n = 2; n <= 3; ++n) {
        for (const Partition& lambda : testing::partitions_up_to(5, n)) {
            if (lambda.size() % 2 != 0 || lambda.empty()) continue;
            checked +=
                lattice_moves_check(sigma_min_row(lambda, n), lambda, n);
            checked += lattice_moves_check(row_entry_bounds(lambda, n), lambda, n);
        }
    }
    CHECK(checked > 0);
}

TEST_CASE("every move path descends to the minimal row") {
    const Partition lambda({9, 7, 5, 4, 3, 1, 1});
    const int n = 7;
    const std::vector<int> start = {7, 7, 7, 9, 10, 11, 11, 12, 14};
    REQUIRE(row_in_sigma(start, lambda, n));

    std::set<std::vector<int>> visited;
    std::vector<std::vector<int>> queue;
    visited.insert(row_multiplicities(start, n));
    queue.push_back(row_multiplicities(start, n));
    long long best = row_charge(start, n);
    while (!queue.empty()) {
        const std::vector<int> mults = queue.back();
        queue.pop_back();
        for (const RowMove& move : legal_row_moves(mults, lambda, n)) {
            if (visited.insert(move.result).second) {
                best = std::min(
                    best, row_charge(row_from_multiplicities(move.result), n));
                queue.push_back(move.result);
            }
        }
    }
    CHECK(best == min_power(lambda, n));
    CHECK(visited.count(row_multiplicities(sigma_min_row(lambda, n), n)) == 1);
}
