#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "optapprox/decay.hpp"
#include "optapprox/gram.hpp"
#include "optapprox/roots.hpp"

namespace optapprox {

// 17 significant digits: round-trips double exactly. Negative zero is
// printed as 0 so conjugation artifacts do not leak into the output.
inline std::string fmt_double(double x) {
    if (x == 0.0) return "0";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline std::string_view kind_name(WeightKind k) {
    return k == WeightKind::Coefficient ? "coeff" : "paper";
}

inline WeightKind kind_from_name(std::string_view s) {
    if (s == "coeff") return WeightKind::Coefficient;
    if (s == "paper") return WeightKind::PaperIntegral;
    throw DomainError("unknown weight kind: " + std::string(s));
}

inline void write_decay_csv(std::ostream& os, const std::vector<DecayRecord>& records) {
    os << "family,alpha,kind,n,dist_sq,scaled\n";
    for (const DecayRecord& r : records)
        os << family_name(r.family) << ',' << fmt_double(r.alpha) << ',' << kind_name(r.kind)
           << ',' << r.n << ',' << fmt_double(r.dist_sq) << ',' << fmt_double(r.scaled) << '\n';
}

inline void write_roots_csv(std::ostream& os, const std::vector<RootSet>& sets) {
    os << "family,n,index,re,im,modulus\n";
    for (const RootSet& rs : sets) {
        std::size_t idx = 0;
        for (const Complex& r : rs.roots) {
            os << (rs.family ? family_name(*rs.family) : std::string_view{""}) << ',' << rs.n
               << ',' << idx++ << ',' << fmt_double(r.real()) << ',' << fmt_double(r.imag())
               << ',' << fmt_double(std::abs(r)) << '\n';
        }
    }
}

// Full matrix plus right-hand side; rhs lines carry col = -1.
inline void write_gram_csv(std::ostream& os, const NormalSystem& sys) {
    os << "part,row,col,re,im\n";
    for (int j = 0; j <= sys.n; ++j)
        for (int k = 0; k <= sys.n; ++k) {
            const Complex v = sys.entry(j, k);
            os << "G," << j << ',' << k << ',' << fmt_double(v.real()) << ','
               << fmt_double(v.imag()) << '\n';
        }
    for (int j = 0; j <= sys.n; ++j)
        os << "rhs," << j << ",-1," << fmt_double(sys.rhs[std::size_t(j)].real()) << ','
           << fmt_double(sys.rhs[std::size_t(j)].imag()) << '\n';
}

// Scatter plot of pooled zero sets on the viewport [-2.2, 2.2]^2 with a
// unit-circle guide; markers fade from light (small n) to black (large n).
inline void write_zeros_svg(std::ostream& os, const std::vector<RootSet>& sets) {
    const double lo = -2.2, hi = 2.2, size = 600.0;
    const auto px = [&](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2f", (v - lo) / (hi - lo) * size);
        return std::string(buf);
    };
    int nmin = 0, nmax = 0;
    bool first = true;
    for (const RootSet& rs : sets) {
        if (first) {
            nmin = nmax = rs.n;
            first = false;
        }
        nmin = std::min(nmin, rs.n);
        nmax = std::max(nmax, rs.n);
    }
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" "
          "viewBox=\"0 0 600 600\">\n"
       << "  <rect width=\"600\" height=\"600\" fill=\"white\"/>\n"
       << "  <circle cx=\"" << px(0.0) << "\" cy=\"" << px(0.0) << "\" r=\""
       << fmt_double(size / (hi - lo)) << "\" fill=\"none\" stroke=\"#bbbbbb\"/>\n";
    for (const RootSet& rs : sets) {
        const int shade =
            nmax == nmin ? 0 : 180 - (180 * (rs.n - nmin)) / std::max(1, nmax - nmin);
        for (const Complex& r : rs.roots) {
            os << "  <circle cx=\"" << px(r.real()) << "\" cy=\"" << px(-r.imag())
               << "\" r=\"3\" fill=\"rgb(" << shade << ',' << shade << ',' << shade << ")\"/>\n";
        }
    }
    os << "</svg>\n";
}

// Temp file plus rename so readers never observe partial output.
inline void atomic_write(const std::filesystem::path& path, const std::string& content) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string());
        out << content;
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace optapprox
