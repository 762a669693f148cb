#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <vector>

#include "optapprox/approx.hpp"
#include "optapprox/errors.hpp"
#include "optapprox/poly.hpp"

namespace optapprox {

// Zero set of one approximating polynomial. max_residual is the largest
// |p(root)| / (max|coeff| * max(1,|root|)^deg) over the set; roots are
// sorted by argument, then modulus, for deterministic output.
struct RootSet {
    int n = 0;
    std::optional<Family> family;
    std::vector<Complex> roots;
    double max_residual = 0.0;
};

namespace detail {

inline double normalized_root_residual(const Poly& p, Complex r, double maxcoeff) {
    return std::abs(p(r)) / (maxcoeff * std::pow(std::max(1.0, std::abs(r)), double(p.degree())));
}

}  // namespace detail

// Aberth-Ehrlich simultaneous iteration. Initial guesses are equi-angular
// on the Cauchy-bound circle with a 0.3 rad offset to break symmetry;
// convergence when the largest correction is <= 1e-13 (relative to the
// iterate's size). A stalled run is restarted with a rotated start, up to
// three times.
inline RootSet find_roots(const Poly& p) {
    const int d = int(p.degree());
    if (d < 1) throw DomainError("find_roots: degree must be >= 1");
    const Complex lead = p.coeff(std::size_t(d));
    double maxcoeff = 0.0, maxratio = 0.0;
    for (int i = 0; i <= d; ++i) maxcoeff = std::max(maxcoeff, std::abs(p.coeff(std::size_t(i))));
    for (int i = 0; i < d; ++i)
        maxratio = std::max(maxratio, std::abs(p.coeff(std::size_t(i)) / lead));
    const double radius = 1.0 + maxratio;
    const Poly dp = derivative(p);

    std::vector<Complex> z(static_cast<std::size_t>(d));
    for (int restart = 0; restart < 3; ++restart) {
        const double offset = 0.3 + 0.7 * restart;
        for (int i = 0; i < d; ++i) {
            const double theta = 2.0 * std::numbers::pi * i / d + offset;
            z[std::size_t(i)] = radius * Complex{std::cos(theta), std::sin(theta)};
        }
        bool converged = false;
        for (int iter = 0; iter < 500 && !converged; ++iter) {
            double maxcorr = 0.0;
            for (int i = 0; i < d; ++i) {
                const Complex pv = p(z[std::size_t(i)]);
                if (pv == Complex{0.0}) continue;
                const Complex dv = dp(z[std::size_t(i)]);
                Complex corr;
                if (dv == Complex{0.0}) {
                    corr = Complex{1e-8, 1e-8};  // nudge off a critical point
                } else {
                    const Complex newton = pv / dv;
                    Complex repel{0.0};
                    for (int j = 0; j < d; ++j)
                        if (j != i) repel += 1.0 / (z[std::size_t(i)] - z[std::size_t(j)]);
                    const Complex denom = 1.0 - newton * repel;
                    corr = denom == Complex{0.0} ? newton : newton / denom;
                }
                z[std::size_t(i)] -= corr;
                maxcorr = std::max(maxcorr,
                                   std::abs(corr) / std::max(1.0, std::abs(z[std::size_t(i)])));
            }
            converged = maxcorr <= 1e-13;
        }
        double maxres = 0.0;
        for (const Complex& r : z)
            maxres = std::max(maxres, detail::normalized_root_residual(p, r, maxcoeff));
        if (converged || maxres <= 1e-8) {
            std::sort(z.begin(), z.end(), [](Complex a, Complex b) {
                const double ta = std::arg(a), tb = std::arg(b);
                if (ta != tb) return ta < tb;
                return std::abs(a) < std::abs(b);
            });
            RootSet rs;
            rs.n = d;
            rs.roots = std::move(z);
            rs.max_residual = maxres;
            return rs;
        }
    }
    throw ConvergenceFailure("find_roots: Aberth iteration stalled after 3 restarts");
}

// Zero sets of one family across orders; computed from the family
// polynomials themselves (zero sets do not depend on normalization).
inline std::vector<RootSet> zero_set_sweep(const Poly& f, Family family, double alpha,
                                           WeightKind kind, const std::vector<int>& ns) {
    std::vector<RootSet> out;
    out.reserve(ns.size());
    for (int n : ns) {
        RootSet rs = find_roots(family_approximant(family, f, n, alpha, kind).p);
        rs.n = n;
        rs.family = family;
        out.push_back(std::move(rs));
    }
    return out;
}

// For each of arc_count equal arcs of the unit circle, the distance from
// the arc midpoint to the nearest pooled root. Decreasing distances under
// larger pools certify boundary clustering.
inline std::vector<double> clustering_stats(const std::vector<RootSet>& sets, int arc_count) {
    if (arc_count < 1) throw DomainError("clustering_stats: arc_count must be >= 1");
    std::vector<double> dist(std::size_t(arc_count), HUGE_VAL);
    for (int a = 0; a < arc_count; ++a) {
        const double theta = 2.0 * std::numbers::pi * (a + 0.5) / arc_count;
        const Complex mid{std::cos(theta), std::sin(theta)};
        for (const RootSet& rs : sets)
            for (const Complex& r : rs.roots)
                dist[std::size_t(a)] = std::min(dist[std::size_t(a)], std::abs(r - mid));
    }
    return dist;
}

}  // namespace optapprox
