#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "optapprox/errors.hpp"
#include "optapprox/gram.hpp"

namespace optapprox {

// G = L L* with L lower triangular in the same banded layout as the
// source system; diagonal entries of L are real and positive.
class BandedCholesky {
  public:
    static BandedCholesky factor(const NormalSystem& sys) {
        BandedCholesky ch;
        ch.n_ = sys.n;
        ch.h_ = sys.half_bandwidth;
        ch.low_.assign(std::size_t(ch.n_ + 1) * (ch.h_ + 1), Complex{0.0});
        double maxdiag = 0.0;
        for (int j = 0; j <= ch.n_; ++j) maxdiag = std::max(maxdiag, sys.entry(j, j).real());
        for (int j = 0; j <= ch.n_; ++j) {
            for (int k = std::max(0, j - ch.h_); k <= j; ++k) {
                Complex s = sys.entry(j, k);
                for (int m = std::max(0, j - ch.h_); m < k; ++m)
                    s -= ch.at(j, m) * std::conj(ch.at(k, m));
                if (k == j) {
                    const double d = s.real();
                    if (!(d > 1e-14 * maxdiag)) throw NotPositiveDefinite{};
                    ch.at(j, j) = std::sqrt(d);
                } else {
                    ch.at(j, k) = s / ch.at(k, k).real();
                }
            }
        }
        return ch;
    }

    std::vector<Complex> solve(const std::vector<Complex>& b) const {
        std::vector<Complex> y(b.size());
        for (int j = 0; j <= n_; ++j) {
            Complex s = b[std::size_t(j)];
            for (int m = std::max(0, j - h_); m < j; ++m) s -= at(j, m) * y[std::size_t(m)];
            y[std::size_t(j)] = s / at(j, j).real();
        }
        for (int j = n_; j >= 0; --j) {
            Complex s = y[std::size_t(j)];
            for (int m = j + 1; m <= std::min(n_, j + h_); ++m)
                s -= std::conj(at(m, j)) * y[std::size_t(m)];
            y[std::size_t(j)] = s / at(j, j).real();
        }
        return y;
    }

    Complex entry(int j, int k) const {
        if (k > j || j - k > h_) return Complex{0.0};
        return low_[std::size_t(j) * (h_ + 1) + std::size_t(k - j + h_)];
    }

    int size() const { return n_ + 1; }
    int half_bandwidth() const { return h_; }

  private:
    int n_ = 0;
    int h_ = 0;
    std::vector<Complex> low_;

    Complex& at(int j, int k) { return low_[std::size_t(j) * (h_ + 1) + std::size_t(k - j + h_)]; }
    Complex at(int j, int k) const { return entry(j, k); }
};

// Solve G c = rhs for the full coefficient vector c_0..c_n.
inline std::vector<Complex> cholesky_solve(const NormalSystem& sys) {
    return BandedCholesky::factor(sys).solve(sys.rhs);
}

// Determinant by LU with partial pivoting; a is row-major n x n, consumed.
inline Complex lu_determinant(std::vector<Complex> a, int n) {
    Complex det{1.0};
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        double best = std::abs(a[std::size_t(col) * n + col]);
        for (int r = col + 1; r < n; ++r) {
            const double v = std::abs(a[std::size_t(r) * n + col]);
            if (v > best) {
                best = v;
                pivot = r;
            }
        }
        if (best == 0.0) return Complex{0.0};
        if (pivot != col) {
            for (int c = 0; c < n; ++c)
                std::swap(a[std::size_t(pivot) * n + c], a[std::size_t(col) * n + c]);
            det = -det;
        }
        const Complex p = a[std::size_t(col) * n + col];
        det *= p;
        for (int r = col + 1; r < n; ++r) {
            const Complex factor = a[std::size_t(r) * n + col] / p;
            if (factor == Complex{0.0}) continue;
            for (int c = col; c < n; ++c)
                a[std::size_t(r) * n + c] -= factor * a[std::size_t(col) * n + c];
        }
    }
    return det;
}

// Coefficient ratios c_k/c_0, k = 1..n, as ratios of determinants of the
// j,k >= 1 sub-block with the k-th column replaced by -G[j][0]. Determinant
// route is an independent cross-check of the Cholesky path; per-column
// determinants make it O(n^4), so it is capped at n <= 64.
inline std::vector<Complex> cramer_solve(const NormalSystem& sys) {
    const int n = sys.n;
    if (n > 64) throw DomainError("cramer_solve: cross-check limited to n <= 64");
    if (n == 0) return {};
    std::vector<Complex> base(std::size_t(n) * n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) base[std::size_t(j) * n + k] = sys.entry(j + 1, k + 1);
    double scale = 1.0;
    for (int j = 0; j < n; ++j) {
        double rowmax = 0.0;
        for (int k = 0; k < n; ++k)
            rowmax = std::max(rowmax, std::abs(base[std::size_t(j) * n + k]));
        scale *= rowmax;
    }
    const Complex det_m = lu_determinant(base, n);
    if (std::abs(det_m) <= 1e-12 * scale) throw SingularSystem{};
    std::vector<Complex> ratios(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        std::vector<Complex> mk = base;
        for (int j = 0; j < n; ++j) mk[std::size_t(j) * n + k] = -sys.entry(j + 1, 0);
        ratios[std::size_t(k)] = lu_determinant(std::move(mk), n) / det_m;
    }
    return ratios;
}

}  // namespace optapprox
