#ifndef GENEXP_POLYNOMIAL_HPP
#define GENEXP_POLYNOMIAL_HPP

// Exact polynomials in t and in the graded variable family t_1, t_2, ...
// Variable 0 is the principal variable t; variable i >= 1 is t_i and sits
// in degree i under the principal specialization t_i -> t^i. Coefficients
// are exact 64-bit integers; everything downstream is counting, so any
// overflow would be a logic error rather than a numerical concern.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace genexp {

// Sorted (variable, exponent) pairs with positive exponents.
using Monomial = std::vector<std::pair<int, int>>;

class SparsePolynomial {
public:
    SparsePolynomial() = default;

    static SparsePolynomial constant(long long c);
    static SparsePolynomial var_pow(int var, int exp);
    // t^k, the single-variable convenience.
    static SparsePolynomial t_pow(int k) { return var_pow(0, k); }

    bool is_zero() const { return terms_.empty(); }
    long long coeff(const Monomial& m) const;
    long long coeff_t(int k) const;
    const std::map<Monomial, long long>& terms() const { return terms_; }

    void add_term(const Monomial& m, long long c);

    SparsePolynomial operator+(const SparsePolynomial&) const;
    SparsePolynomial operator-(const SparsePolynomial&) const;
    SparsePolynomial operator*(const SparsePolynomial&) const;
    SparsePolynomial operator*(long long scalar) const;
    bool operator==(const SparsePolynomial&) const = default;

    // True when only variable 0 occurs.
    bool single_variable() const;
    // Lowest/highest exponent of t; require a nonzero single-variable value.
    int min_degree() const;
    int max_degree() const;

    // t -> t^2 on a single-variable polynomial.
    SparsePolynomial substitute_t_squared() const;
    // t_i -> t^i for every i >= 1; variable 0 passes through.
    SparsePolynomial specialize_principal() const;

    long long evaluate_at_one() const;
    bool nonnegative() const;

    // "0", "1 + t^2", "2*t_2*t_4^2", ... with terms in key order.
    std::string to_string() const;

private:
    std::map<Monomial, long long> terms_;  // nonzero coefficients only
};

class CutoffMismatchError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// A power series in t known exactly up to and including degree `cutoff`.
// Mixing different cutoffs is almost always a bug in the calling code, so
// comparison and arithmetic insist on equal cutoffs; use truncate() first.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int cutoff);
    static TruncatedSeries from_polynomial(const SparsePolynomial& p, int cutoff);

    int cutoff() const { return cutoff_; }
    long long coeff(int k) const;
    void set_coeff(int k, long long c);

    TruncatedSeries operator+(const TruncatedSeries&) const;
    TruncatedSeries operator*(const TruncatedSeries&) const;
    bool operator==(const TruncatedSeries&) const;

    // New series with a smaller (or equal) cutoff.
    TruncatedSeries truncate(int new_cutoff) const;
    SparsePolynomial to_polynomial() const;
    std::string to_string() const;

private:
    int cutoff_;
    std::vector<long long> coeffs_;  // degrees 0..cutoff
};

// prod_d 1/(1 - t^d) over the given degrees, up to the cutoff.
TruncatedSeries series_inverse_product(const std::vector<int>& degrees, int cutoff);

}  // namespace genexp

#endif
