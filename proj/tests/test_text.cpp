#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "genexp/partition.hpp"
#include "genexp/skew.hpp"
#include "genexp/tableau.hpp"
#include "genexp/text.hpp"

using namespace genexp;

TEST_CASE("partition text forms") {
    CHECK(format_partition(Partition()) == "-");
    CHECK(format_partition(Partition({7, 6, 5, 3, 1})) == "7,6,5,3,1");
    CHECK(parse_partition("-") == Partition());
    CHECK(parse_partition("") == Partition());
    CHECK(parse_partition("4,2,2") == Partition({4, 2, 2}));
    CHECK_THROWS_AS(parse_partition("2,3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("a"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("3,,1"), std::invalid_argument);
    CHECK(parse_partition("3,0") == Partition({3}));  // trailing zero stripped
}

TEST_CASE("tableau text forms") {
    const Tableau t({{1, 1, 3, 4}, {2, 3, 4}, {3}}, 4);
    CHECK(format_tableau(t) == "1,1,3,4/2,3,4/3");
    CHECK(parse_tableau("1,1,3,4/2,3,4/3", 4) == t);
    const Tableau empty({}, 3);
    CHECK(format_tableau(empty) == "-");
    CHECK(parse_tableau("-", 3) == empty);
    CHECK_THROWS_AS(parse_tableau("2,1/1", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_tableau("1,5", 4), std::invalid_argument);
}

TEST_CASE("barred rendering pairs the letters") {
    // odd 2k-1 prints as k, even 2k prints as k'
    const Tableau t({{1, 2}, {3, 4}}, 4);
    CHECK(format_tableau_barred(t) == "1,1'/2,2'");
    const Tableau col({{3}, {4}}, 4);
    CHECK(format_tableau_barred(col) == "2/2'");
}

TEST_CASE("skew text forms") {
    const SkewTableau s(Partition({5, 4, 4, 2}), Partition({3, 3, 1}),
                        {{1, 1}, {2}, {1, 2, 3}, {1, 2}}, 3);
    const std::string text = "5,4,4,2|3,3,1|1,1/2/1,2,3/1,2";
    CHECK(format_skew(s) == text);
    CHECK(parse_skew(text, 3) == s);
    const SkewTableau trivial(Partition(), Partition(), {}, 2);
    CHECK(parse_skew(format_skew(trivial), 2) == trivial);
    // a fully cancelled row in the middle stays as an empty slot
    const SkewTableau gap(Partition({2, 2, 1}), Partition({2, 2}), {{}, {}, {1}},
                          2);
    CHECK(parse_skew(format_skew(gap), 2) == gap);
    CHECK_THROWS_AS(parse_skew("2,1|1", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_skew("-|-|1", 2), std::invalid_argument);
}

TEST_CASE("monomial text forms") {
    CHECK(format_monomial(Monomial{}) == "1");
    CHECK(format_monomial(Monomial{{0, 1}}) == "t");
    CHECK(format_monomial(Monomial{{0, 3}}) == "t^3");
    CHECK(format_monomial(Monomial{{2, 1}, {4, 2}}) == "t_2*t_4^2");
    CHECK(parse_monomial("1") == Monomial{});
    CHECK(parse_monomial("t^3") == Monomial{{0, 3}});
    CHECK(parse_monomial("t_2*t_4^2") == Monomial{{2, 1}, {4, 2}});
    CHECK_THROWS_AS(parse_monomial("t_4*t_2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_monomial("t^0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_monomial("x"), std::invalid_argument);
}
