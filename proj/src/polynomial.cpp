#include "saw/polynomial.hpp"

#include "saw/errors.hpp"

#include <cmath>
#include <sstream>
#include <string>

namespace saw {

CountPolynomial::CountPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    for (const BigInt& c : coeffs_) {
        if (c < 0) throw SawError(ErrorCode::BadInput, "negative coefficient in counting polynomial");
    }
    normalize();
}

CountPolynomial::CountPolynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) {
        if (c < 0) throw SawError(ErrorCode::BadInput, "negative coefficient in counting polynomial");
        coeffs_.emplace_back(c);
    }
    normalize();
}

CountPolynomial CountPolynomial::identity() { return monomial(1); }

CountPolynomial CountPolynomial::monomial(std::size_t exponent, BigInt coefficient) {
    std::vector<BigInt> c(exponent + 1, BigInt(0));
    c[exponent] = std::move(coefficient);
    return CountPolynomial(std::move(c));
}

void CountPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::size_t CountPolynomial::min_degree() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != 0) return i;
    }
    return 0;
}

double CountPolynomial::evaluate(double x) const {
    double acc = 0.0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * x + to_double(coeffs_[i]);
    }
    return acc;
}

BigRat CountPolynomial::evaluate_exact(const BigRat& x) const {
    BigRat acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * x + BigRat(coeffs_[i]);
    }
    acc.canonicalize();
    return acc;
}

double CountPolynomial::evaluate_derivative(double x) const {
    double acc = 0.0;
    for (std::size_t i = coeffs_.size(); i-- > 1;) {
        acc = acc * x + static_cast<double>(i) * to_double(coeffs_[i]);
    }
    return acc;
}

CountPolynomial CountPolynomial::operator+(const CountPolynomial& other) const {
    std::vector<BigInt> out(std::max(coeffs_.size(), other.coeffs_.size()), BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) out[i] += other.coeffs_[i];
    return CountPolynomial(std::move(out));
}

CountPolynomial CountPolynomial::operator*(const CountPolynomial& other) const {
    if (is_zero() || other.is_zero()) return CountPolynomial();
    std::vector<BigInt> out(coeffs_.size() + other.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
            if (other.coeffs_[j] == 0) continue;
            out[i + j] += coeffs_[i] * other.coeffs_[j];
        }
    }
    return CountPolynomial(std::move(out));
}

CountPolynomial CountPolynomial::compose(const CountPolynomial& other) const {
    CountPolynomial acc;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * other;
        if (coeffs_[i] != 0) acc = acc + monomial(0, coeffs_[i]);
    }
    return acc;
}

CountPolynomial CountPolynomial::power(std::size_t n) const {
    CountPolynomial result = monomial(0, 1);
    CountPolynomial base = *this;
    while (n > 0) {
        if (n & 1) result = result * base;
        base = base * base;
        n >>= 1;
    }
    return result;
}

CountPolynomial CountPolynomial::truncated(std::size_t max_degree) const {
    if (coeffs_.size() <= max_degree + 1) return *this;
    std::vector<BigInt> out(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(max_degree + 1));
    return CountPolynomial(std::move(out));
}

CountPolynomial CountPolynomial::shifted_down(std::size_t k) const {
    for (std::size_t i = 0; i < k && i < coeffs_.size(); ++i) {
        if (coeffs_[i] != 0) {
            throw SawError(ErrorCode::BadInput, "exponent shift would drop a nonzero term");
        }
    }
    if (coeffs_.size() <= k) return CountPolynomial();
    std::vector<BigInt> out(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end());
    return CountPolynomial(std::move(out));
}

std::string CountPolynomial::to_pretty_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!first) out << " + ";
        first = false;
        if (i == 0) {
            out << to_decimal(coeffs_[i]);
            continue;
        }
        if (coeffs_[i] != 1) out << to_decimal(coeffs_[i]);
        out << "x";
        if (i > 1) out << "^" << i;
    }
    return out.str();
}

double monotone_solve(const CountPolynomial& p, double target, double tol) {
    if (!(target > 0.0) || !std::isfinite(target)) {
        throw SawError(ErrorCode::NonPositiveTarget, "monotone_solve target must be positive and finite");
    }
    if (p.is_zero() || p.coefficient(0) != 0) {
        throw SawError(ErrorCode::BadInput, "monotone_solve requires a nonzero polynomial with p(0) = 0");
    }

    double lo = 0.0;
    double hi = 1.0;
    int doublings = 0;
    while (p.evaluate(hi) < target) {
        hi *= 2.0;
        if (++doublings > 64) {
            throw SawError(ErrorCode::NoBracket, "target not bracketed after 64 doublings");
        }
    }

    // Bisection down to a narrow bracket; derivative is strictly positive
    // there, so Newton afterwards cannot escape.
    while (hi - lo > 1e-3) {
        double mid = 0.5 * (lo + hi);
        if (p.evaluate(mid) < target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }

    double x = 0.5 * (lo + hi);
    for (int iter = 0; iter < 200; ++iter) {
        double f = p.evaluate(x) - target;
        if (std::fabs(f) <= tol) return x;
        double d = p.evaluate_derivative(x);
        double step = (d > 0.0) ? f / d : 0.0;
        double next = x - step;
        if (!(next > lo) || !(next < hi) || d <= 0.0) {
            // fall back to bisection on the maintained bracket
            if (f < 0.0) lo = x; else hi = x;
            next = 0.5 * (lo + hi);
        } else {
            if (f < 0.0) lo = x; else hi = x;
        }
        x = next;
    }
    return x;
}

} // namespace saw
