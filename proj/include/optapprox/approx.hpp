#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "optapprox/errors.hpp"
#include "optapprox/gram.hpp"
#include "optapprox/linalg.hpp"
#include "optapprox/poly.hpp"
#include "optapprox/weights.hpp"

namespace optapprox {

enum class Family {
    Optimal,
    ClosedFormOneMinusZ,
    RieszFamily,
    Taylor,
    Cesaro,
    RieszType,
    PhiWeighted,
    PowerLift,
    Product,
};

inline std::string_view family_name(Family f) {
    switch (f) {
        case Family::Optimal: return "optimal";
        case Family::ClosedFormOneMinusZ: return "closedform";
        case Family::RieszFamily: return "rieszmean";
        case Family::Taylor: return "taylor";
        case Family::Cesaro: return "cesaro";
        case Family::RieszType: return "riesz";
        case Family::PhiWeighted: return "phi";
        case Family::PowerLift: return "powerlift";
        case Family::Product: return "product";
    }
    return "?";
}

inline Family family_from_name(std::string_view s) {
    if (s == "optimal") return Family::Optimal;
    if (s == "closedform") return Family::ClosedFormOneMinusZ;
    if (s == "rieszmean") return Family::RieszFamily;
    if (s == "taylor") return Family::Taylor;
    if (s == "cesaro") return Family::Cesaro;
    if (s == "riesz") return Family::RieszType;
    if (s == "phi") return Family::PhiWeighted;
    if (s == "powerlift") return Family::PowerLift;
    if (s == "product") return Family::Product;
    throw DomainError("unknown family: " + std::string(s));
}

// A degree-<=n candidate p together with the norm convention it was
// measured under and the achieved ||p f - 1||^2.
struct Approximant {
    Poly p;
    Family family = Family::Optimal;
    int n = 0;
    double alpha = 0.0;
    WeightKind kind = WeightKind::PaperIntegral;
    double residual_norm_sq = 0.0;
};

// ||p f - 1||^2 under w.
inline double residual(const Poly& p, const Poly& f, const Weights& w) {
    return weighted_norm_sq(p * f - Poly::one(), w);
}

// Best scalar multiple of a shape polynomial s: the lambda minimizing
// ||lambda s f - 1||, i.e. <1, s f>_w / ||s f||^2_w.
inline Complex best_scale(const Poly& shape, const Poly& f, const Weights& w) {
    const Poly sf = shape * f;
    const double denom = weighted_norm_sq(sf, w);
    if (denom == 0.0) throw ZeroFunction{};
    return w.weight(0) * std::conj(sf.coeff(0)) / denom;
}

// The minimizer of ||p f - 1|| over polynomials of degree <= n: solve the
// (n+1) x (n+1) normal system for c_0..c_n in one pass.
inline Approximant optimal_approximant(const Poly& f, int n, double alpha, WeightKind kind) {
    const Weights w = weight_sequence(kind, alpha, f.degree() + std::size_t(n) + 2);
    const NormalSystem sys = build_normal_system(f, n, w);
    Poly p{cholesky_solve(sys)};
    const double r = residual(p, f, w);
    return {std::move(p), Family::Optimal, n, alpha, kind, r};
}

// c_k/c_0 for k = 1..n; reference tables normalize p(0) to 1.
inline std::vector<Complex> optimal_ratios(const Poly& f, int n, double alpha, WeightKind kind) {
    const Weights w = weight_sequence(kind, alpha, f.degree() + std::size_t(n) + 2);
    const std::vector<Complex> c = cholesky_solve(build_normal_system(f, n, w));
    double cmax = 0.0;
    for (const Complex& v : c) cmax = std::max(cmax, std::abs(v));
    if (std::abs(c[0]) <= 1e-14 * cmax)
        throw DomainError("optimal_ratios: approximant vanishes at the origin");
    std::vector<Complex> ratios(c.size() - 1);
    for (std::size_t k = 1; k < c.size(); ++k) ratios[k - 1] = c[k] / c[0];
    return ratios;
}

// Shape (c_0 = 1) of the optimal approximant for f = 1-z under the
// integral-norm weights with beta = 1-alpha:
//   c_k = [sum_{j=k+1}^{n+1} t_j] / [sum_{j=1}^{n+1} t_j],
//   t_j = (1/j) prod_{l=2}^{j} (1 + beta/l).
inline Poly closed_form_one_minus_z(int n, double beta) {
    if (n < 1) throw DomainError("closed_form_one_minus_z: n must be >= 1");
    if (beta <= -1.0) throw DomainError("closed_form_one_minus_z: beta must be > -1");
    std::vector<double> t(std::size_t(n) + 2, 0.0);
    double prod = 1.0;
    for (int j = 1; j <= n + 1; ++j) {
        if (j >= 2) prod *= 1.0 + beta / j;
        t[std::size_t(j)] = prod / j;
    }
    std::vector<double> tail(std::size_t(n) + 3, 0.0);
    for (int j = n + 1; j >= 1; --j) tail[std::size_t(j)] = tail[std::size_t(j) + 1] + t[std::size_t(j)];
    std::vector<Complex> c(std::size_t(n) + 1);
    for (int k = 0; k <= n; ++k) c[std::size_t(k)] = tail[std::size_t(k) + 1] / tail[1];
    return Poly{std::move(c)};
}

// The three explicit mean polynomials for f = 1-z: generalized Riesz mean
// (Dirichlet), modified Cesaro mean (Hardy), and the Bergman variant.
inline Poly riesz_family(int n, double alpha) {
    if (n < 1) throw DomainError("riesz_family: n must be >= 1");
    const std::vector<double> H = harmonic_table(n + 1);
    std::vector<Complex> c(std::size_t(n) + 1);
    if (alpha == 1.0) {
        for (int k = 0; k <= n; ++k) c[std::size_t(k)] = 1.0 - H[std::size_t(k)] / H[std::size_t(n) + 1];
    } else if (alpha == 0.0) {
        const double denom = n + 1.0 + H[std::size_t(n) + 1];
        for (int k = 0; k <= n; ++k) c[std::size_t(k)] = 1.0 - (k + H[std::size_t(k)]) / denom;
    } else if (alpha == -1.0) {
        const double denom = (n + 1.0) * (n + 8.0) + 4.0 * H[std::size_t(n) + 1];
        for (int k = 0; k <= n; ++k)
            c[std::size_t(k)] = 1.0 - (k * (k + 7.0) + 4.0 * H[std::size_t(k)]) / denom;
    } else {
        throw UnsupportedAlpha("riesz_family: closed form known for alpha in {1, 0, -1} only");
    }
    return Poly{std::move(c)};
}

inline Poly taylor_section(const std::vector<Complex>& b, int n) {
    if (b.size() < std::size_t(n) + 1) throw DomainError("taylor_section: need n+1 coefficients");
    return Poly{std::vector<Complex>(b.begin(), b.begin() + n + 1)};
}

// Classical (C,1) mean of the Taylor section: (1 - k/(n+1)) b_k.
inline Poly cesaro_section(const std::vector<Complex>& b, int n) {
    if (b.size() < std::size_t(n) + 1) throw DomainError("cesaro_section: need n+1 coefficients");
    std::vector<Complex> c(std::size_t(n) + 1);
    for (int k = 0; k <= n; ++k) c[std::size_t(k)] = (1.0 - double(k) / (n + 1.0)) * b[std::size_t(k)];
    return Poly{std::move(c)};
}

// Riesz-type section (1 - H_k/H_{n+1}) b_k.
inline Poly riesz_type(const std::vector<Complex>& b, int n) {
    if (n < 1) throw DomainError("riesz_type: n must be >= 1");
    if (b.size() < std::size_t(n) + 1) throw DomainError("riesz_type: need n+1 coefficients");
    const std::vector<double> H = harmonic_table(n + 1);
    std::vector<Complex> c(std::size_t(n) + 1);
    for (int k = 0; k <= n; ++k)
        c[std::size_t(k)] = (1.0 - H[std::size_t(k)] / H[std::size_t(n) + 1]) * b[std::size_t(k)];
    return Poly{std::move(c)};
}

// Rate-weighted section: c_0 = 1/a_0, c_k = (1 - phi_alpha(k)/phi_alpha(n+1)) b_k.
inline Poly phi_weighted(const Poly& f, int n, double alpha) {
    if (alpha > 1.0) throw DomainError("phi_weighted: alpha must be <= 1");
    if (n < 1) throw DomainError("phi_weighted: n must be >= 1");
    const std::vector<Complex> b = reciprocal_coeffs(f, std::size_t(n));
    const double denom = phi_alpha(double(n) + 1.0, alpha);
    std::vector<Complex> c(std::size_t(n) + 1);
    c[0] = b[0];
    for (int k = 1; k <= n; ++k)
        c[std::size_t(k)] = (1.0 - phi_alpha(double(k), alpha) / denom) * b[std::size_t(k)];
    return Poly{std::move(c)};
}

// f = leading * prod (z - z_i)^{r_i}.
struct FactoredPoly {
    std::vector<std::pair<Complex, int>> roots;
    Complex leading{1.0};

    Poly expand() const { return expand_roots(roots, leading); }
};

// Candidate for f with repeated roots outside the open disk: with radical
// g = prod (z - z_i), cofactor h = K^{-1} prod (z - z_i)^{gamma - r_i} and
// gamma = max r_i, f h = g^gamma; lift an order-n approximant q for g to
// p = q^gamma h. The radical approximant is the solver's optimal one by
// default; use_phi_weighted switches to the explicit phi-weighted section.
inline Approximant power_lift(const FactoredPoly& f, int n, double alpha, WeightKind kind,
                              bool use_phi_weighted = false) {
    if (f.roots.empty()) throw DomainError("power_lift: factored input has no roots");
    if (f.leading == Complex{0.0}) throw ZeroFunction{};
    int gamma = 0;
    for (const auto& [z, r] : f.roots) {
        if (r < 1) throw DomainError("power_lift: multiplicities must be >= 1");
        if (std::abs(z) < 1.0 - 1e-12) throw RootInsideDisk{};
        gamma = std::max(gamma, r);
    }
    const int s = int(f.roots.size());
    if (n <= s) throw DomainError("power_lift: order must exceed the number of distinct roots");

    Poly g{Complex{1.0}};
    Poly h{1.0 / f.leading};
    for (const auto& [z, r] : f.roots) {
        const Poly factor{-z, Complex{1.0}};
        g = g * factor;
        for (int i = 0; i < gamma - r; ++i) h = h * factor;
    }
    const Poly q = use_phi_weighted ? phi_weighted(g, n, alpha)
                                    : optimal_approximant(g, n, alpha, kind).p;
    Poly p = h;
    for (int i = 0; i < gamma; ++i) p = p * q;

    const Poly fx = f.expand();
    const Weights w = weight_sequence(kind, alpha, p.degree() + fx.degree() + 2);
    const double r = residual(p, fx, w);
    return {std::move(p), Family::PowerLift, n, alpha, kind, r};
}

// Candidate for f = h * g with h carrying the unit-circle zeros and g
// zero-free on the closed disk (supplied through its reciprocal series):
// p_m = q_m T_m(1/g) with q_m the optimal approximant for h. The residual
// is measured against h times the series reconstructed from g_recip,
// truncated at degree m + deg h + guard.
inline Approximant product_approximant(const Poly& h, const std::vector<Complex>& g_recip, int m,
                                       double alpha, WeightKind kind, int guard = -1) {
    if (m < 1) throw DomainError("product_approximant: m must be >= 1");
    if (g_recip.size() < std::size_t(m) + 1)
        throw DomainError("product_approximant: need m+1 coefficients of 1/g");
    if (guard < 0) guard = 2 * m;

    const Approximant qm = optimal_approximant(h, m, alpha, kind);
    const Poly p = qm.p * taylor_section(g_recip, m);

    const std::size_t cut =
        std::min(std::size_t(m) + h.degree() + std::size_t(guard), g_recip.size() - 1);
    const Poly g{reciprocal_coeffs(Poly{std::vector<Complex>(g_recip)}, cut)};
    const Poly f = h * g;
    const Weights w = weight_sequence(kind, alpha, p.degree() + f.degree() + 2);
    const double r = residual(p, f, w);
    return {p, Family::Product, m, alpha, kind, r};
}

// Uniform constructor for the families that need only (f, n). Shape-only
// families are scaled by their best scalar multiple so the reported
// residual corresponds to the stored polynomial.
inline Approximant family_approximant(Family fam, const Poly& f, int n, double alpha,
                                      WeightKind kind) {
    const Weights w = weight_sequence(kind, alpha, 2 * (f.degree() + std::size_t(n)) + 4);
    const auto finish = [&](Poly p) {
        const double r = residual(p, f, w);
        return Approximant{std::move(p), fam, n, alpha, kind, r};
    };
    switch (fam) {
        case Family::Optimal:
            return optimal_approximant(f, n, alpha, kind);
        case Family::ClosedFormOneMinusZ: {
            const Poly s = closed_form_one_minus_z(n, 1.0 - alpha);
            return finish(best_scale(s, f, w) * s);
        }
        case Family::RieszFamily: {
            const Poly s = riesz_family(n, alpha);
            return finish(best_scale(s, f, w) * s);
        }
        case Family::Taylor:
            return finish(taylor_section(reciprocal_coeffs(f, std::size_t(n)), n));
        case Family::Cesaro:
            return finish(cesaro_section(reciprocal_coeffs(f, std::size_t(n)), n));
        case Family::RieszType:
            return finish(riesz_type(reciprocal_coeffs(f, std::size_t(n)), n));
        case Family::PhiWeighted:
            return finish(phi_weighted(f, n, alpha));
        case Family::PowerLift:
        case Family::Product:
            throw DomainError("family needs factored input; call power_lift/product_approximant");
    }
    throw DomainError("unknown family");
}

}  // namespace optapprox
