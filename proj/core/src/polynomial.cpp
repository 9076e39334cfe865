#include "genexp/polynomial.hpp"

#include <algorithm>

namespace genexp {

SparsePolynomial SparsePolynomial::constant(long long c) {
    SparsePolynomial p;
    p.add_term({}, c);
    return p;
}

SparsePolynomial SparsePolynomial::var_pow(int var, int exp) {
    if (var < 0) throw std::invalid_argument("variable ids are nonnegative");
    if (exp < 0) throw std::invalid_argument("exponents are nonnegative");
    SparsePolynomial p;
    if (exp == 0)
        p.add_term({}, 1);
    else
        p.add_term({{var, exp}}, 1);
    return p;
}

long long SparsePolynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
}

long long SparsePolynomial::coeff_t(int k) const {
    return k == 0 ? coeff({}) : coeff({{0, k}});
}

void SparsePolynomial::add_term(const Monomial& m, long long c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted && (it->second += c) == 0) terms_.erase(it);
}

SparsePolynomial SparsePolynomial::operator+(const SparsePolynomial& other) const {
    SparsePolynomial r = *this;
    for (const auto& [m, c] : other.terms_) r.add_term(m, c);
    return r;
}

SparsePolynomial SparsePolynomial::operator-(const SparsePolynomial& other) const {
    SparsePolynomial r = *this;
    for (const auto& [m, c] : other.terms_) r.add_term(m, -c);
    return r;
}

namespace {

Monomial merge_monomials(const Monomial& a, const Monomial& b) {
    Monomial m;
    m.reserve(a.size() + b.size());
    auto ia = a.begin(), ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
            m.push_back(*ia++);
        } else if (ia == a.end() || ib->first < ia->first) {
            m.push_back(*ib++);
        } else {
            m.emplace_back(ia->first, ia->second + ib->second);
            ++ia, ++ib;
        }
    }
    return m;
}

}  // namespace

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& other) const {
    SparsePolynomial r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : other.terms_)
            r.add_term(merge_monomials(ma, mb), ca * cb);
    return r;
}

SparsePolynomial SparsePolynomial::operator*(long long scalar) const {
    SparsePolynomial r;
    if (scalar == 0) return r;
    for (const auto& [m, c] : terms_) r.add_term(m, c * scalar);
    return r;
}

bool SparsePolynomial::single_variable() const {
    for (const auto& [m, c] : terms_)
        for (const auto& [var, exp] : m)
            if (var != 0) return false;
    return true;
}

int SparsePolynomial::min_degree() const {
    if (is_zero() || !single_variable())
        throw std::logic_error("min_degree needs a nonzero polynomial in t alone");
    // The zero-degree monomial is the empty one and sorts first.
    const Monomial& m = terms_.begin()->first;
    return m.empty() ? 0 : m[0].second;
}

int SparsePolynomial::max_degree() const {
    if (is_zero() || !single_variable())
        throw std::logic_error("max_degree needs a nonzero polynomial in t alone");
    const Monomial& m = terms_.rbegin()->first;
    return m.empty() ? 0 : m[0].second;
}

SparsePolynomial SparsePolynomial::substitute_t_squared() const {
    if (!single_variable())
        throw std::logic_error("t -> t^2 substitution needs a polynomial in t alone");
    SparsePolynomial r;
    for (const auto& [m, c] : terms_)
        r.add_term(m.empty() ? m : Monomial{{0, 2 * m[0].second}}, c);
    return r;
}

SparsePolynomial SparsePolynomial::specialize_principal() const {
    SparsePolynomial r;
    for (const auto& [m, c] : terms_) {
        long long degree = 0;
        for (const auto& [var, exp] : m)
            degree += static_cast<long long>(std::max(var, 1)) * exp;
        r.add_term(degree == 0 ? Monomial{} : Monomial{{0, static_cast<int>(degree)}}, c);
    }
    return r;
}

long long SparsePolynomial::evaluate_at_one() const {
    long long s = 0;
    for (const auto& [m, c] : terms_) s += c;
    return s;
}

bool SparsePolynomial::nonnegative() const {
    for (const auto& [m, c] : terms_)
        if (c < 0) return false;
    return true;
}

std::string SparsePolynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        if (!out.empty()) out += c < 0 ? " - " : " + ";
        else if (c < 0) out += "-";
        const long long abs_c = c < 0 ? -c : c;
        std::string vars;
        for (const auto& [var, exp] : m) {
            if (!vars.empty()) vars += "*";
            vars += var == 0 ? "t" : "t_" + std::to_string(var);
            if (exp != 1) vars += "^" + std::to_string(exp);
        }
        if (vars.empty()) {
            out += std::to_string(abs_c);
        } else {
            if (abs_c != 1) out += std::to_string(abs_c) + "*";
            out += vars;
        }
    }
    return out;
}

TruncatedSeries::TruncatedSeries(int cutoff) : cutoff_(cutoff) {
    if (cutoff < 0) throw std::invalid_argument("series cutoff must be nonnegative");
    coeffs_.assign(cutoff + 1, 0);
}

TruncatedSeries TruncatedSeries::from_polynomial(const SparsePolynomial& p, int cutoff) {
    if (!p.single_variable())
        throw std::invalid_argument("series conversion needs a polynomial in t alone");
    TruncatedSeries s(cutoff);
    for (const auto& [m, c] : p.terms()) {
        const int deg = m.empty() ? 0 : m[0].second;
        if (deg <= cutoff) s.coeffs_[deg] = c;
    }
    return s;
}

long long TruncatedSeries::coeff(int k) const {
    if (k < 0 || k > cutoff_) throw std::out_of_range("series coefficient beyond cutoff");
    return coeffs_[k];
}

void TruncatedSeries::set_coeff(int k, long long c) {
    if (k < 0 || k > cutoff_) throw std::out_of_range("series coefficient beyond cutoff");
    coeffs_[k] = c;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& other) const {
    if (cutoff_ != other.cutoff_)
        throw CutoffMismatchError("adding series with different cutoffs");
    TruncatedSeries r(cutoff_);
    for (int k = 0; k <= cutoff_; ++k) r.coeffs_[k] = coeffs_[k] + other.coeffs_[k];
    return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& other) const {
    if (cutoff_ != other.cutoff_)
        throw CutoffMismatchError("multiplying series with different cutoffs");
    TruncatedSeries r(cutoff_);
    for (int i = 0; i <= cutoff_; ++i) {
        if (coeffs_[i] == 0) continue;
        for (int j = 0; i + j <= cutoff_; ++j)
            r.coeffs_[i + j] += coeffs_[i] * other.coeffs_[j];
    }
    return r;
}

bool TruncatedSeries::operator==(const TruncatedSeries& other) const {
    if (cutoff_ != other.cutoff_)
        throw CutoffMismatchError("comparing series with different cutoffs");
    return coeffs_ == other.coeffs_;
}

TruncatedSeries TruncatedSeries::truncate(int new_cutoff) const {
    if (new_cutoff > cutoff_)
        throw CutoffMismatchError("cannot extend a truncated series");
    TruncatedSeries r(new_cutoff);
    std::copy(coeffs_.begin(), coeffs_.begin() + new_cutoff + 1, r.coeffs_.begin());
    return r;
}

SparsePolynomial TruncatedSeries::to_polynomial() const {
    SparsePolynomial p;
    for (int k = 0; k <= cutoff_; ++k)
        if (coeffs_[k] != 0) p.add_term(k == 0 ? Monomial{} : Monomial{{0, k}}, coeffs_[k]);
    return p;
}

std::string TruncatedSeries::to_string() const {
    std::string body = to_polynomial().to_string();
    return body + " + O(t^" + std::to_string(cutoff_ + 1) + ")";
}

TruncatedSeries series_inverse_product(const std::vector<int>& degrees, int cutoff) {
    TruncatedSeries r(cutoff);
    r.set_coeff(0, 1);
    // Multiply by 1/(1 - t^d) one degree at a time: a running partial-sum
    // recurrence, coeff[k] += coeff[k - d].
    for (int d : degrees) {
        if (d <= 0) throw std::invalid_argument("inverse product needs positive degrees");
        for (int k = d; k <= cutoff; ++k) r.set_coeff(k, r.coeff(k) + r.coeff(k - d));
    }
    return r;
}

}  // namespace genexp
