#ifndef SAW_POLYNOMIAL_HPP
#define SAW_POLYNOMIAL_HPP

#include "saw/bigint.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace saw {

// Polynomial with exact nonnegative integer coefficients, indexed by
// exponent. Holds two-port gadget series g(x), two-terminal series f_H(x),
// bipartite h(x), and truncations of walk partition functions.
// Trailing zeros are normalized away; the zero polynomial has no terms.
class CountPolynomial {
public:
    CountPolynomial() = default;
    explicit CountPolynomial(std::vector<BigInt> coeffs);
    CountPolynomial(std::initializer_list<long> coeffs);

    static CountPolynomial identity();               // x
    static CountPolynomial monomial(std::size_t exponent, BigInt coefficient = 1);

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is reported as 0.
    std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
    const std::vector<BigInt>& coefficients() const { return coeffs_; }
    BigInt coefficient(std::size_t exponent) const {
        return exponent < coeffs_.size() ? coeffs_[exponent] : BigInt(0);
    }
    std::size_t min_degree() const;                  // smallest exponent with nonzero coefficient

    bool operator==(const CountPolynomial& other) const { return coeffs_ == other.coeffs_; }
    bool operator!=(const CountPolynomial& other) const { return !(*this == other); }

    // Horner evaluation in double; monotone nondecreasing on x >= 0.
    double evaluate(double x) const;
    BigRat evaluate_exact(const BigRat& x) const;
    double evaluate_derivative(double x) const;

    CountPolynomial operator+(const CountPolynomial& other) const;
    CountPolynomial operator*(const CountPolynomial& other) const;

    // Exact composition this(other(x)).
    CountPolynomial compose(const CountPolynomial& other) const;
    CountPolynomial power(std::size_t n) const;

    // Drops every term of exponent > max_degree.
    CountPolynomial truncated(std::size_t max_degree) const;

    // Divides by x^k; requires the k lowest coefficients to vanish
    // (exponent reindexing, never arithmetic division).
    CountPolynomial shifted_down(std::size_t k) const;

    std::string to_pretty_string() const;            // "x^2 + 5x^3 + ..."

private:
    void normalize();
    std::vector<BigInt> coeffs_;
};

// Unique x > 0 with |p(x) - target| <= tol for p nonzero, p(0) = 0.
// Brackets by doubling from 1 (at most 64 doublings), bisects to a width
// 1e-3 interval, then polishes with Newton. Throws NonPositiveTarget or
// NoBracket.
double monotone_solve(const CountPolynomial& p, double target, double tol = 1e-12);

} // namespace saw

#endif
