#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "genexp/polynomial.hpp"

using namespace genexp;

TEST_CASE("construction and term access") {
    CHECK(SparsePolynomial().is_zero());
    CHECK(SparsePolynomial::constant(0).is_zero());
    const SparsePolynomial p = SparsePolynomial::t_pow(3);
    CHECK(p.coeff_t(3) == 1);
    CHECK(p.coeff_t(2) == 0);
    const SparsePolynomial q = SparsePolynomial::var_pow(2, 1);
    CHECK(q.coeff(Monomial{{2, 1}}) == 1);
    CHECK_THROWS_AS(SparsePolynomial::var_pow(-1, 2), std::invalid_argument);
    CHECK_THROWS_AS(SparsePolynomial::var_pow(1, -2), std::invalid_argument);
}

TEST_CASE("add_term accumulates and cancels") {
    SparsePolynomial p;
    p.add_term(Monomial{{0, 2}}, 3);
    p.add_term(Monomial{{0, 2}}, -3);
    CHECK(p.is_zero());
    p.add_term(Monomial{}, 5);
    CHECK(p.coeff_t(0) == 5);
    CHECK(p == SparsePolynomial::constant(5));
}

TEST_CASE("arithmetic") {
    const SparsePolynomial t = SparsePolynomial::t_pow(1);
    const SparsePolynomial t2 = SparsePolynomial::t_pow(2);
    CHECK((t + t) == t * 2);
    CHECK((t * t) == t2);
    CHECK((t + t2) - t2 == t);
    const SparsePolynomial mixed =
        SparsePolynomial::var_pow(2, 1) * SparsePolynomial::var_pow(4, 2);
    CHECK(mixed.coeff(Monomial{{2, 1}, {4, 2}}) == 1);
    CHECK(((t + SparsePolynomial::constant(1)) *
           (t - SparsePolynomial::constant(1))) ==
          t2 - SparsePolynomial::constant(1));
}

TEST_CASE("degrees and the variable predicate") {
    SparsePolynomial p = SparsePolynomial::t_pow(2) + SparsePolynomial::t_pow(5);
    CHECK(p.single_variable());
    CHECK(p.min_degree() == 2);
    CHECK(p.max_degree() == 5);
    CHECK(SparsePolynomial::constant(4).min_degree() == 0);
    CHECK_THROWS_AS(SparsePolynomial().min_degree(), std::logic_error);
    CHECK_FALSE(SparsePolynomial::var_pow(2, 1).single_variable());
    CHECK_THROWS_AS(SparsePolynomial::var_pow(2, 1).max_degree(),
                    std::logic_error);
}

TEST_CASE("substitutions and evaluations") {
    const SparsePolynomial p =
        SparsePolynomial::t_pow(1) + SparsePolynomial::t_pow(2) * 3;
    CHECK(p.substitute_t_squared() ==
          SparsePolynomial::t_pow(2) + SparsePolynomial::t_pow(4) * 3);
    CHECK(p.evaluate_at_one() == 4);
    CHECK(p.nonnegative());
    CHECK_FALSE((p - SparsePolynomial::t_pow(1) * 2).nonnegative());
    // principal specialization sends t_i to t^i
    const SparsePolynomial multi =
        SparsePolynomial::var_pow(2, 1) * SparsePolynomial::var_pow(4, 2) +
        SparsePolynomial::var_pow(3, 1);
    CHECK(multi.specialize_principal() ==
          SparsePolynomial::t_pow(10) + SparsePolynomial::t_pow(3));
}

TEST_CASE("printing") {
    CHECK(SparsePolynomial().to_string() == "0");
    CHECK(SparsePolynomial::constant(1).to_string() == "1");
    CHECK(SparsePolynomial::t_pow(1).to_string() == "t");
    CHECK(SparsePolynomial::t_pow(2).to_string() == "t^2");
    CHECK((SparsePolynomial::t_pow(1) + SparsePolynomial::t_pow(2) * 2)
              .to_string() == "t + 2*t^2");
    CHECK((SparsePolynomial::constant(1) - SparsePolynomial::t_pow(1))
              .to_string() == "1 - t");
    CHECK((SparsePolynomial::var_pow(2, 1) * SparsePolynomial::var_pow(4, 2))
              .to_string() == "t_2*t_4^2");
}

TEST_CASE("series construction and truncation") {
    CHECK_THROWS_AS(TruncatedSeries(-1), std::invalid_argument);
    const SparsePolynomial p =
        SparsePolynomial::t_pow(2) + SparsePolynomial::t_pow(9);
    const TruncatedSeries s = TruncatedSeries::from_polynomial(p, 5);
    CHECK(s.coeff(2) == 1);
    CHECK(s.coeff(5) == 0);
    CHECK(s.cutoff() == 5);
    CHECK(s.to_polynomial() == SparsePolynomial::t_pow(2));
    TruncatedSeries u(4);
    u.set_coeff(3, 2);
    u.set_coeff(3, u.coeff(3) + 1);
    CHECK(u.coeff(3) == 3);
    u.set_coeff(3, 7);  // set replaces, it does not accumulate
    CHECK(u.coeff(3) == 7);
    CHECK(u.truncate(2).cutoff() == 2);
}

TEST_CASE("series arithmetic respects the cutoff") {
    TruncatedSeries a(3);
    a.set_coeff(0, 1);
    a.set_coeff(2, 1);
    TruncatedSeries b(3);
    b.set_coeff(1, 1);
    b.set_coeff(3, 4);
    const TruncatedSeries sum = a + b;
    CHECK(sum.coeff(0) == 1);
    CHECK(sum.coeff(1) == 1);
    CHECK(sum.coeff(3) == 4);
    const TruncatedSeries prod = a * b;
    CHECK(prod.coeff(1) == 1);
    CHECK(prod.coeff(3) == 5);  // t*t^2 and 1*4t^3
    const TruncatedSeries other(2);
    CHECK_THROWS_AS((void)(a + other), CutoffMismatchError);
    CHECK_THROWS_AS((void)(a * other), CutoffMismatchError);
    CHECK_THROWS_AS((void)(a == other), CutoffMismatchError);
}

TEST_CASE("geometric inverse products") {
    // 1/((1-t^2)(1-t^4)) counts partitions into parts 2 and 4.
    const TruncatedSeries s = series_inverse_product({2, 4}, 8);
    CHECK(s.coeff(0) == 1);
    CHECK(s.coeff(1) == 0);
    CHECK(s.coeff(2) == 1);
    CHECK(s.coeff(4) == 2);
    CHECK(s.coeff(6) == 2);
    CHECK(s.coeff(8) == 3);
    const TruncatedSeries ones = series_inverse_product({1}, 5);
    for (int k = 0; k <= 5; ++k) CHECK(ones.coeff(k) == 1);
    CHECK_THROWS_AS(series_inverse_product({0}, 3), std::invalid_argument);
}
