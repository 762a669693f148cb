#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "optapprox/errors.hpp"

namespace optapprox {

using Complex = std::complex<double>;

// Polynomial over C in the monomial basis, coefficient of z^k at index k.
// Doubles as a truncated power series. Trailing coefficients of modulus
// <= 1e-14 * max|coeff| are trimmed so repeated products do not grow
// spurious degree; the zero polynomial is the single coefficient 0.
class Poly {
  public:
    Poly() : coeffs_{Complex{0.0}} {}
    Poly(std::initializer_list<Complex> cs) : coeffs_(cs) { normalize(); }
    explicit Poly(std::vector<Complex> cs) : coeffs_(std::move(cs)) { normalize(); }

    static Poly one() { return Poly{Complex{1.0}}; }

    // c * z^k
    static Poly monomial(std::size_t k, Complex c = Complex{1.0}) {
        std::vector<Complex> cs(k + 1, Complex{0.0});
        cs[k] = c;
        return Poly{std::move(cs)};
    }

    std::size_t degree() const { return coeffs_.size() - 1; }
    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == Complex{0.0}; }

    // Coefficient of z^k; zero beyond the degree.
    Complex coeff(std::size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : Complex{0.0};
    }
    const std::vector<Complex>& coeffs() const { return coeffs_; }

    // Horner evaluation.
    Complex operator()(Complex z) const {
        Complex y = coeffs_.back();
        for (std::size_t i = coeffs_.size() - 1; i-- > 0;) y = coeffs_[i] + z * y;
        return y;
    }

  private:
    std::vector<Complex> coeffs_;

    void normalize() {
        if (coeffs_.empty()) {
            coeffs_.assign(1, Complex{0.0});
            return;
        }
        double scale = 0.0;
        for (const Complex& c : coeffs_) scale = std::max(scale, std::abs(c));
        const double tol = 1e-14 * scale;
        while (coeffs_.size() > 1 && std::abs(coeffs_.back()) <= tol) coeffs_.pop_back();
        if (coeffs_.size() == 1 && std::abs(coeffs_[0]) <= tol) coeffs_[0] = Complex{0.0};
    }
};

inline Poly operator*(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) return Poly{};
    std::vector<Complex> r(p.degree() + q.degree() + 1, Complex{0.0});
    for (std::size_t i = 0; i <= p.degree(); ++i)
        for (std::size_t j = 0; j <= q.degree(); ++j) r[i + j] += p.coeff(i) * q.coeff(j);
    return Poly{std::move(r)};
}

inline Poly operator*(Complex s, const Poly& p) {
    std::vector<Complex> r(p.coeffs());
    for (Complex& c : r) c *= s;
    return Poly{std::move(r)};
}

inline Poly operator*(const Poly& p, Complex s) { return s * p; }

inline Poly operator+(const Poly& p, const Poly& q) {
    std::vector<Complex> r(std::max(p.degree(), q.degree()) + 1);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = p.coeff(i) + q.coeff(i);
    return Poly{std::move(r)};
}

inline Poly operator-(const Poly& p) { return Complex{-1.0} * p; }

inline Poly operator-(const Poly& p, const Poly& q) {
    std::vector<Complex> r(std::max(p.degree(), q.degree()) + 1);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = p.coeff(i) - q.coeff(i);
    return Poly{std::move(r)};
}

// Derivative; the derivative of a constant is the zero polynomial.
inline Poly derivative(const Poly& p) {
    if (p.degree() == 0) return Poly{};
    std::vector<Complex> r(p.degree());
    for (std::size_t i = 1; i <= p.degree(); ++i) r[i - 1] = double(i) * p.coeff(i);
    return Poly{std::move(r)};
}

inline Complex evaluate(const Poly& p, Complex z) { return p(z); }

// First N+1 Taylor coefficients b_0..b_N of 1/f, from the convolution
// recurrence sum_{j=0}^{k} b_j a_{k-j} = 0 (k >= 1), b_0 = 1/a_0.
inline std::vector<Complex> reciprocal_coeffs(const Poly& f, std::size_t N) {
    const Complex a0 = f.coeff(0);
    if (a0 == Complex{0.0}) throw ZeroConstantTerm{};
    std::vector<Complex> b(N + 1, Complex{0.0});
    b[0] = 1.0 / a0;
    const std::size_t t = f.degree();
    for (std::size_t k = 1; k <= N; ++k) {
        Complex s{0.0};
        const std::size_t jlo = k > t ? k - t : 0;
        for (std::size_t j = jlo; j < k; ++j) s += b[j] * f.coeff(k - j);
        b[k] = -s / a0;
    }
    return b;
}

// Expand leading * prod_i (z - z_i)^{r_i}.
inline Poly expand_roots(const std::vector<std::pair<Complex, int>>& roots, Complex leading) {
    Poly p{leading};
    for (const auto& [z, r] : roots) {
        const Poly factor{-z, Complex{1.0}};
        for (int i = 0; i < r; ++i) p = p * factor;
    }
    return p;
}

}  // namespace optapprox
