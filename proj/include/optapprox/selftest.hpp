#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "optapprox/approx.hpp"
#include "optapprox/decay.hpp"
#include "optapprox/roots.hpp"

namespace optapprox {

struct SelftestItem {
    std::string name;
    bool passed = false;
    double max_error = 0.0;
    double tolerance = 0.0;
};

namespace selftest_detail {

inline const Poly& one_minus_z() {
    static const Poly f{Complex{1.0}, Complex{-1.0}};
    return f;
}

// Reference coefficient ratios for f = 1-z in the Dirichlet case, n = 1..4:
// exact rationals that the tridiagonal recurrence produces.
inline std::vector<std::vector<double>> golden_ratios() {
    return {{1.0 / 3.0},
            {5.0 / 11.0, 2.0 / 11.0},
            {13.0 / 25.0, 7.0 / 25.0, 3.0 / 25.0},
            {77.0 / 137.0, 47.0 / 137.0, 27.0 / 137.0, 12.0 / 137.0}};
}

inline SelftestItem check(std::string name, double err, double tol) {
    return {std::move(name), err <= tol, err, tol};
}

}  // namespace selftest_detail

// The golden checks behind `selftest`: the reference ratio tables and
// integer matrices, the Taylor-section failure identity, the closed forms,
// the explicit Taylor zero sets, and a seeded determinant-vs-Cholesky
// agreement run.
inline std::vector<SelftestItem> run_selftest(std::uint64_t seed) {
    using selftest_detail::check;
    std::vector<SelftestItem> items;
    const Poly& f = selftest_detail::one_minus_z();

    const auto golden = selftest_detail::golden_ratios();
    for (int n = 1; n <= 4; ++n) {
        const auto ratios = optimal_ratios(f, n, 1.0, WeightKind::PaperIntegral);
        double err = 0.0;
        for (int k = 0; k < n; ++k)
            err = std::max(err, std::abs(ratios[std::size_t(k)] -
                                         Complex{golden[std::size_t(n) - 1][std::size_t(k)]}));
        items.push_back(check("optimal ratios, order " + std::to_string(n), err, 1e-12));
    }

    {
        const Weights w = weight_sequence(WeightKind::PaperIntegral, 1.0, 16);
        for (int n = 1; n <= 4; ++n) {
            const NormalSystem sys = build_normal_system(f, n, w);
            double err = 0.0;
            for (int j = 1; j <= n; ++j)
                for (int k = 1; k <= n; ++k) {
                    double expected = 0.0;
                    if (j == k) expected = 2.0 * j + 1.0;
                    else if (k == j - 1 || k == j + 1) expected = -double(std::max(j, k));
                    err = std::max(err, std::abs(sys.entry(j, k) - Complex{expected}));
                }
            items.push_back(check("gram matrix block, order " + std::to_string(n), err, 0.0));
        }
    }

    {
        const Weights w = weight_sequence(WeightKind::Coefficient, 1.0, 128);
        double err = 0.0;
        for (int n = 0; n <= 100; ++n) {
            const Poly tn = taylor_section(reciprocal_coeffs(f, std::size_t(n)), n);
            err = std::max(err, std::abs(residual(tn, f, w) - double(n + 2)));
        }
        items.push_back(check("taylor section residual equals n+2", err, 0.0));
    }

    {
        double err = 0.0;
        for (int n : {10, 25, 50}) {
            const RootSet rs =
                find_roots(taylor_section(reciprocal_coeffs(f, std::size_t(n)), n));
            for (const Complex& r : rs.roots) {
                double best = HUGE_VAL;
                for (int k = 1; k <= n; ++k) {
                    const double theta = 2.0 * std::numbers::pi * k / (n + 1);
                    best = std::min(best, std::abs(r - Complex{std::cos(theta), std::sin(theta)}));
                }
                err = std::max(err, best);
            }
        }
        items.push_back(check("taylor zeros are roots of unity", err, 1e-8));
    }

    {
        double err = 0.0;
        for (double alpha : {-1.0, 0.0, 1.0}) {
            for (int n = 1; n <= 25; ++n) {
                const Poly s = closed_form_one_minus_z(n, 1.0 - alpha);
                const auto ratios = optimal_ratios(f, n, alpha, WeightKind::PaperIntegral);
                for (int k = 1; k <= n; ++k)
                    err = std::max(err, std::abs(ratios[std::size_t(k) - 1] - s.coeff(std::size_t(k))));
            }
        }
        items.push_back(check("closed form matches solver", err, 1e-9));
    }

    {
        double err = 0.0;
        for (double alpha : {-1.0, 0.0, 1.0}) {
            for (int n = 1; n <= 25; ++n) {
                const Poly a = riesz_family(n, alpha);
                const Poly b = closed_form_one_minus_z(n, 1.0 - alpha);
                for (std::size_t k = 0; k <= std::size_t(n); ++k)
                    err = std::max(err, std::abs(a.coeff(k) - b.coeff(k)));
            }
        }
        items.push_back(check("riesz mean closed forms agree", err, 1e-12));
    }

    {
        std::mt19937 rng(static_cast<std::uint32_t>(seed));
        std::uniform_real_distribution<double> unit(-1.0, 1.0);
        std::uniform_int_distribution<int> degree_dist(1, 4), order_dist(1, 10);
        double err = 0.0;
        for (int rep = 0; rep < 40; ++rep) {
            const int t = degree_dist(rng);
            std::vector<Complex> cs(std::size_t(t) + 1);
            for (Complex& c : cs) c = Complex{unit(rng), unit(rng)};
            if (std::abs(cs[0]) < 0.25) cs[0] += Complex{1.0};
            const Poly g{std::move(cs)};
            const int n = order_dist(rng);
            const double alpha = std::vector<double>{-1.0, 0.0, 1.0}[std::size_t(rep % 3)];
            const WeightKind kind =
                rep % 2 == 0 ? WeightKind::PaperIntegral : WeightKind::Coefficient;
            const Weights w = weight_sequence(kind, alpha, g.degree() + std::size_t(n) + 2);
            const NormalSystem sys = build_normal_system(g, n, w);
            const auto direct = cramer_solve(sys);
            const auto ratios = optimal_ratios(g, n, alpha, kind);
            for (std::size_t k = 0; k < direct.size(); ++k)
                err = std::max(err, std::abs(direct[k] - ratios[k]));
        }
        items.push_back(check("determinant ratios match solver (seeded)", err, 1e-9));
    }

    {
        double err = std::abs(harmonic(0)) + std::abs(harmonic(1) - 1.0) +
                     std::abs(harmonic(4) - 25.0 / 12.0);
        for (int k : {1, 2, 7, 100, 1000}) err = std::max(err, std::abs(lambda_beta(k, 0.0) - k));
        err = std::max(err, std::abs(lambda_beta(5, 1.0) - 5.0 / 6.0));
        items.push_back(check("harmonic numbers and moment kernel", err, 1e-12));
    }

    return items;
}

}  // namespace optapprox
