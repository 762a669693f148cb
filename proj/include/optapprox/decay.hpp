#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "optapprox/approx.hpp"
#include "optapprox/errors.hpp"
#include "optapprox/poly.hpp"
#include "optapprox/weights.hpp"

namespace optapprox {

// One point of a decay measurement: scaled = dist_sq * phi_alpha(n+1).
// phi_1(1) = 0 makes the n = 0 scaling degenerate; such records carry
// scale_degenerate and are skipped by tail statistics.
struct DecayRecord {
    int n = 0;
    double dist_sq = 0.0;
    double scaled = 0.0;
    Family family = Family::Optimal;
    double alpha = 0.0;
    WeightKind kind = WeightKind::PaperIntegral;
    bool scale_degenerate = false;
};

// dist^2 for the optimal family via Pythagoras, ||1||^2 - ||p f||^2; the
// direct residual sum cancels badly once dist^2 is tiny against ||1||^2.
inline double optimal_dist_sq(const Poly& f, int n, double alpha, WeightKind kind) {
    const Weights w = weight_sequence(kind, alpha, f.degree() + std::size_t(n) + 2);
    const Poly p{cholesky_solve(build_normal_system(f, n, w))};
    const double proj = weighted_norm_sq(p * f, w);
    return std::max(0.0, w.weight(0) - proj);
}

namespace detail {

inline DecayRecord make_record(int n, double dist_sq, Family family, double alpha,
                               WeightKind kind) {
    DecayRecord rec;
    rec.n = n;
    rec.dist_sq = dist_sq;
    rec.family = family;
    rec.alpha = alpha;
    rec.kind = kind;
    if (alpha <= 1.0) {
        const double phi = phi_alpha(double(n) + 1.0, alpha);
        rec.scale_degenerate = phi == 0.0;
        rec.scaled = rec.scale_degenerate ? 0.0 : dist_sq * phi;
    } else {
        rec.scale_degenerate = true;
    }
    return rec;
}

inline void check_orders(const std::vector<int>& ns) {
    if (ns.empty()) throw DomainError("decay_table: empty order list");
    for (std::size_t i = 0; i + 1 < ns.size(); ++i)
        if (ns[i] >= ns[i + 1]) throw DomainError("decay_table: orders must be strictly increasing");
}

}  // namespace detail

// Generic sweep: make(n) supplies ||p_n f - 1||^2 per order.
template <class DistSq>
std::vector<DecayRecord> decay_table(const std::vector<int>& ns, Family family, double alpha,
                                     WeightKind kind, DistSq&& dist_sq_of) {
    detail::check_orders(ns);
    std::vector<DecayRecord> out;
    out.reserve(ns.size());
    for (int n : ns) out.push_back(detail::make_record(n, dist_sq_of(n), family, alpha, kind));
    return out;
}

inline std::vector<DecayRecord> decay_table(const Poly& f, Family family, double alpha,
                                            WeightKind kind, const std::vector<int>& ns) {
    return decay_table(ns, family, alpha, kind, [&](int n) {
        if (family == Family::Optimal) return optimal_dist_sq(f, n, alpha, kind);
        return family_approximant(family, f, n, alpha, kind).residual_norm_sq;
    });
}

struct ComparabilityStats {
    double min_scaled = 0.0;
    double max_scaled = 0.0;
    double ratio = 0.0;
};

// Tail statistics of the scaled values; a ratio near 1 certifies the
// phi rate empirically.
inline ComparabilityStats comparability_stats(const std::vector<DecayRecord>& records,
                                              int tail_start) {
    ComparabilityStats st;
    std::size_t count = 0;
    for (const DecayRecord& r : records) {
        if (r.n < tail_start || r.scale_degenerate) continue;
        if (count == 0) {
            st.min_scaled = st.max_scaled = r.scaled;
        } else {
            st.min_scaled = std::min(st.min_scaled, r.scaled);
            st.max_scaled = std::max(st.max_scaled, r.scaled);
        }
        ++count;
    }
    if (count < 3) throw InsufficientData("comparability_stats: fewer than 3 tail records");
    st.ratio = st.min_scaled > 0.0 ? st.max_scaled / st.min_scaled
                                   : (st.max_scaled == 0.0 ? 1.0 : HUGE_VAL);
    return st;
}

struct ControlPoint {
    int k = 0;
    double value = 0.0;  // |S_k| (k+1)^alpha
};

// S_k = sum_i phi_alpha(i) b_i a_{k-i} for t < k <= K; boundedness of
// |S_k| (k+1)^alpha is what the phi-weighted construction rests on.
inline std::vector<ControlPoint> control_lemma_check(const Poly& f, double alpha, int K) {
    if (alpha > 1.0) throw DomainError("control_lemma_check: alpha must be <= 1");
    const int t = int(f.degree());
    if (K <= t) throw DomainError("control_lemma_check: K must exceed deg f");
    const std::vector<Complex> b = reciprocal_coeffs(f, std::size_t(K));
    std::vector<ControlPoint> out;
    out.reserve(std::size_t(K - t));
    for (int k = t + 1; k <= K; ++k) {
        Complex s{0.0};
        for (int i = k - t; i <= k; ++i)
            s += phi_alpha(double(i), alpha) * b[std::size_t(i)] * f.coeff(std::size_t(k - i));
        out.push_back({k, std::abs(s) * std::pow(double(k) + 1.0, alpha)});
    }
    return out;
}

// A(T) norm of an analytic polynomial: sum of coefficient moduli.
inline double wiener_norm(const Poly& p) {
    if (p.is_zero()) return 0.0;
    double s = 0.0;
    for (const Complex& c : p.coeffs()) s += std::abs(c);
    return s;
}

}  // namespace optapprox
