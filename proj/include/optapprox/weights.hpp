#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "optapprox/errors.hpp"
#include "optapprox/poly.hpp"

namespace optapprox {

// The two diagonal norm conventions on coefficient space:
//   Coefficient   : ||g||^2 = sum_m (m+1)^alpha |g_m|^2
//   PaperIntegral : ||g||^2 = |g(0)|^2 + sum_{m>=1} Lambda_{1-alpha}(m) |g_m|^2
enum class WeightKind { Coefficient, PaperIntegral };

inline double harmonic(int n) {
    double h = 0.0;
    for (int j = 1; j <= n; ++j) h += 1.0 / j;
    return h;
}

// H_0..H_n with H_0 = 0.
inline std::vector<double> harmonic_table(int n) {
    std::vector<double> h(static_cast<std::size_t>(n) + 1, 0.0);
    for (int j = 1; j <= n; ++j) h[j] = h[j - 1] + 1.0 / j;
    return h;
}

// Lambda_beta(k) = k * prod_{l=1}^{k} l/(l+beta). The product runs in
// log space for k > 512 to avoid gradual underflow at large beta.
inline double lambda_beta(long k, double beta) {
    if (k < 1) throw DomainError("lambda_beta: k must be >= 1");
    if (beta <= -1.0) throw DomainError("lambda_beta: beta must be > -1");
    if (k <= 512) {
        double prod = 1.0;
        for (long l = 1; l <= k; ++l) prod *= double(l) / (double(l) + beta);
        return double(k) * prod;
    }
    double logsum = 0.0;
    for (long l = 1; l <= k; ++l) logsum += std::log(double(l) / (double(l) + beta));
    return double(k) * std::exp(logsum);
}

// phi_alpha(s) = s^{1-alpha} for alpha < 1, log+(s) for alpha = 1.
inline double phi_alpha(double s, double alpha) {
    if (alpha > 1.0) throw DomainError("phi_alpha: alpha must be <= 1");
    if (s < 0.0) throw DomainError("phi_alpha: s must be >= 0");
    if (alpha == 1.0) return s <= 1.0 ? 0.0 : std::log(s);
    return std::pow(s, 1.0 - alpha);
}

namespace detail {

inline void validate_weight_params(WeightKind kind, double alpha) {
    if (kind == WeightKind::PaperIntegral && alpha >= 2.0)
        throw DomainError("PaperIntegral weights require alpha < 2");
}

inline double weight_value(WeightKind kind, double alpha, std::size_t m) {
    if (kind == WeightKind::Coefficient) return std::pow(double(m) + 1.0, alpha);
    if (m == 0) return 1.0;
    return lambda_beta(long(m), 1.0 - alpha);
}

}  // namespace detail

// Immutable positive weight sequence w_0..w_{count-1}; indices beyond the
// precomputed table are evaluated on demand (same formula, same result).
class Weights {
  public:
    Weights(WeightKind kind, double alpha, std::size_t count) : kind_(kind), alpha_(alpha) {
        detail::validate_weight_params(kind, alpha);
        w_.reserve(count);
        if (kind == WeightKind::Coefficient) {
            for (std::size_t m = 0; m < count; ++m) w_.push_back(std::pow(double(m) + 1.0, alpha));
        } else {
            const double beta = 1.0 - alpha;
            double prod = 1.0;
            double logsum = 0.0;
            for (std::size_t m = 0; m < count; ++m) {
                if (m == 0) {
                    w_.push_back(1.0);
                    continue;
                }
                const double ratio = double(m) / (double(m) + beta);
                prod *= ratio;
                logsum += std::log(ratio);
                w_.push_back(m <= 512 ? double(m) * prod : double(m) * std::exp(logsum));
            }
        }
    }

    WeightKind kind() const { return kind_; }
    double alpha() const { return alpha_; }
    std::size_t size() const { return w_.size(); }

    double weight(std::size_t m) const {
        return m < w_.size() ? w_[m] : detail::weight_value(kind_, alpha_, m);
    }

    Weights extended(std::size_t count) const {
        return count <= w_.size() ? *this : Weights(kind_, alpha_, count);
    }

  private:
    WeightKind kind_;
    double alpha_;
    std::vector<double> w_;
};

inline Weights weight_sequence(WeightKind kind, double alpha, std::size_t count) {
    return Weights(kind, alpha, count);
}

// ||g||^2_w = sum_m w_m |g_m|^2, Kahan-compensated.
inline double weighted_norm_sq(const Poly& g, const Weights& w) {
    double sum = 0.0, comp = 0.0;
    for (std::size_t m = 0; m <= g.degree(); ++m) {
        const double term = w.weight(m) * std::norm(g.coeff(m));
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}

// <g,h>_w = sum_m w_m g_m conj(h_m), Kahan-compensated per component.
inline Complex weighted_inner(const Poly& g, const Poly& h, const Weights& w) {
    double sre = 0.0, cre = 0.0, sim = 0.0, cim = 0.0;
    const std::size_t top = std::min(g.degree(), h.degree());
    for (std::size_t m = 0; m <= top; ++m) {
        const Complex term = w.weight(m) * g.coeff(m) * std::conj(h.coeff(m));
        double y = term.real() - cre;
        double t = sre + y;
        cre = (t - sre) - y;
        sre = t;
        y = term.imag() - cim;
        t = sim + y;
        cim = (t - sim) - y;
        sim = t;
    }
    return {sre, sim};
}

}  // namespace optapprox
