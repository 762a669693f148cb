#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "optapprox/errors.hpp"
#include "optapprox/poly.hpp"
#include "optapprox/weights.hpp"

namespace optapprox {

// Normal equations for projecting 1 onto f*Pol_n under a diagonal weight:
//   G[j][k] = <z^k f, z^j f>_w = sum_m w_m a_{m-k} conj(a_{m-j}),
//   rhs[j]  = <1, z^j f>_w     = w_0 conj(a_0) for j = 0, else 0.
// G is Hermitian positive definite and vanishes for |j-k| > deg f, so the
// lower triangle is stored as a row-major band of width h+1 and the upper
// triangle is mirrored on access.
struct NormalSystem {
    int n = 0;               // degree bound; the system is (n+1) x (n+1)
    int half_bandwidth = 0;  // h = min(deg f, n)
    std::vector<Complex> band;
    std::vector<Complex> rhs;

    int size() const { return n + 1; }

    Complex entry(int j, int k) const {
        if (k > j) return std::conj(entry(k, j));
        if (j - k > half_bandwidth) return Complex{0.0};
        return band[std::size_t(j) * (half_bandwidth + 1) + std::size_t(k - j + half_bandwidth)];
    }

    Complex& band_at(int j, int k) {
        return band[std::size_t(j) * (half_bandwidth + 1) + std::size_t(k - j + half_bandwidth)];
    }
};

inline NormalSystem build_normal_system(const Poly& f, int n, const Weights& w) {
    if (f.is_zero()) throw ZeroFunction{};
    if (n < 0) throw DomainError("build_normal_system: n must be >= 0");
    const int t = int(f.degree());
    NormalSystem sys;
    sys.n = n;
    sys.half_bandwidth = std::min(t, n);
    sys.band.assign(std::size_t(n + 1) * (sys.half_bandwidth + 1), Complex{0.0});
    sys.rhs.assign(std::size_t(n) + 1, Complex{0.0});
    sys.rhs[0] = w.weight(0) * std::conj(f.coeff(0));
    for (int j = 0; j <= n; ++j) {
        for (int k = std::max(0, j - sys.half_bandwidth); k <= j; ++k) {
            const int d = j - k;
            Complex s{0.0};
            for (int i = d; i <= t; ++i)
                s += f.coeff(std::size_t(i)) * std::conj(f.coeff(std::size_t(i - d))) *
                     w.weight(std::size_t(i + k));
            sys.band_at(j, k) = s;
        }
    }
    return sys;
}

// True iff every entry with |j-k| > t is exactly zero.
inline bool assert_bandwidth(const NormalSystem& sys, int t) {
    for (int j = 0; j <= sys.n; ++j)
        for (int k = 0; k < j - t; ++k)
            if (sys.entry(j, k) != Complex{0.0}) return false;
    return true;
}

}  // namespace optapprox
