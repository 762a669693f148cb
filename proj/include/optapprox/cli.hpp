#pragma once

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "optapprox/approx.hpp"
#include "optapprox/decay.hpp"
#include "optapprox/errors.hpp"
#include "optapprox/export.hpp"
#include "optapprox/roots.hpp"
#include "optapprox/selftest.hpp"
#include "optapprox/version.hpp"

namespace optapprox::cli {

enum class Command { Approximant, Decay, Zeros, Gram, Selftest };

inline std::string_view command_name(Command c) {
    switch (c) {
        case Command::Approximant: return "approximant";
        case Command::Decay: return "decay";
        case Command::Zeros: return "zeros";
        case Command::Gram: return "gram";
        case Command::Selftest: return "selftest";
    }
    return "?";
}

struct RunConfig {
    Command command = Command::Selftest;
    std::vector<Complex> coeffs;                      // --f
    std::vector<std::pair<Complex, int>> roots;       // --roots
    double alpha = 1.0;
    WeightKind kind = WeightKind::PaperIntegral;
    Family family = Family::Optimal;
    std::vector<int> ns;
    std::string format;
    std::string out;
    std::uint64_t seed = 12345;
};

// ---- value parsers ------------------------------------------------------

inline double parse_double_strict(const std::string& s) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw UsageError("not a number: '" + s + "'");
    }
    if (pos != s.size()) throw UsageError("trailing characters in number: '" + s + "'");
    return v;
}

// Accepts 1, -2.5, 3e-2, i, -i, 2i, 1+2i, 0.5-0.866i.
inline Complex parse_complex(const std::string& token) {
    std::string s = token;
    if (s.empty()) throw UsageError("empty number");
    if (s.back() == 'i' || s.back() == 'I') {
        s.pop_back();
        std::size_t split = std::string::npos;
        for (std::size_t i = s.size(); i-- > 1;) {
            if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
                split = i;
                break;
            }
        }
        const auto imag_part = [](const std::string& im) {
            if (im.empty() || im == "+") return 1.0;
            if (im == "-") return -1.0;
            return parse_double_strict(im);
        };
        if (split == std::string::npos) return {0.0, imag_part(s)};
        return {parse_double_strict(s.substr(0, split)), imag_part(s.substr(split))};
    }
    return {parse_double_strict(s), 0.0};
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

inline std::vector<Complex> parse_coeff_list(const std::string& spec) {
    std::vector<Complex> out;
    for (const std::string& tok : split(spec, ',')) out.push_back(parse_complex(tok));
    return out;
}

// z[:mult] pairs, comma separated.
inline std::vector<std::pair<Complex, int>> parse_root_list(const std::string& spec) {
    std::vector<std::pair<Complex, int>> out;
    for (const std::string& tok : split(spec, ',')) {
        const auto parts = split(tok, ':');
        if (parts.empty() || parts.size() > 2) throw UsageError("bad root spec: '" + tok + "'");
        const Complex z = parse_complex(parts[0]);
        if (z == Complex{0.0}) throw UsageError("root at the origin is not allowed");
        int mult = 1;
        if (parts.size() == 2) {
            try {
                std::size_t pos = 0;
                mult = std::stoi(parts[1], &pos);
                if (pos != parts[1].size()) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw UsageError("bad multiplicity: '" + parts[1] + "'");
            }
            if (mult < 1) throw UsageError("multiplicity must be >= 1");
        }
        out.emplace_back(z, mult);
    }
    return out;
}

// A, or A..B, or A..B:+k (arithmetic step), or A..B:*k (geometric step).
inline std::vector<int> parse_n_range(const std::string& spec) {
    const auto parse_int = [](const std::string& s) {
        try {
            std::size_t pos = 0;
            const int v = std::stoi(s, &pos);
            if (pos != s.size()) throw std::invalid_argument("");
            return v;
        } catch (const std::exception&) {
            throw UsageError("bad order: '" + s + "'");
        }
    };
    const std::size_t dots = spec.find("..");
    if (dots == std::string::npos) return {parse_int(spec)};
    const int a = parse_int(spec.substr(0, dots));
    std::string rest = spec.substr(dots + 2);
    char mode = '+';
    int step = 1;
    const std::size_t colon = rest.find(':');
    if (colon != std::string::npos) {
        const std::string stepspec = rest.substr(colon + 1);
        rest = rest.substr(0, colon);
        if (stepspec.size() < 2 || (stepspec[0] != '+' && stepspec[0] != '*'))
            throw UsageError("step must be :+k or :*k");
        mode = stepspec[0];
        step = parse_int(stepspec.substr(1));
    }
    const int b = parse_int(rest);
    if (a > b) throw UsageError("empty order range");
    if (mode == '+' && step < 1) throw UsageError("additive step must be >= 1");
    if (mode == '*' && step < 2) throw UsageError("geometric step must be >= 2");
    std::vector<int> out;
    for (long v = a; v <= b; v = mode == '+' ? v + step : v * step) out.push_back(int(v));
    return out;
}

// ---- f construction -----------------------------------------------------

// Root specs build f = prod (1 - z/z_k)^{r_k}, normalized to f(0) = 1.
inline Poly poly_from_root_spec(const std::vector<std::pair<Complex, int>>& roots) {
    Poly f = Poly::one();
    for (const auto& [z, r] : roots) {
        const Poly factor{Complex{1.0}, -1.0 / z};
        for (int i = 0; i < r; ++i) f = f * factor;
    }
    return f;
}

inline Poly config_poly(const RunConfig& cfg) {
    if (!cfg.coeffs.empty()) {
        Poly f{std::vector<Complex>(cfg.coeffs)};
        if (f.is_zero()) throw DomainError("f must be nonzero");
        return f;
    }
    if (!cfg.roots.empty()) return poly_from_root_spec(cfg.roots);
    throw UsageError("one of --f or --roots is required");
}

// Same function in the K prod (z - z_k)^{r_k} form expected by power_lift.
inline FactoredPoly config_factored(const RunConfig& cfg) {
    if (cfg.roots.empty()) throw UsageError("--roots is required for the powerlift family");
    FactoredPoly fac;
    fac.roots = cfg.roots;
    Complex lead{1.0};
    for (const auto& [z, r] : cfg.roots)
        for (int i = 0; i < r; ++i) lead *= -1.0 / z;
    fac.leading = lead;
    return fac;
}

inline constexpr double kCircleSplitTol = 1e-6;

// For the product construction f = h * g: h collects the unit-circle
// zeros, g the rest. Coefficient input is factored numerically first.
inline void split_circle_factors(const RunConfig& cfg, Poly& h, Poly& g) {
    if (!cfg.roots.empty()) {
        std::vector<std::pair<Complex, int>> on, off;
        for (const auto& [z, r] : cfg.roots)
            (std::abs(std::abs(z) - 1.0) <= kCircleSplitTol ? on : off).emplace_back(z, r);
        h = poly_from_root_spec(on);
        g = poly_from_root_spec(off);
        return;
    }
    const Poly f = config_poly(cfg);
    const RootSet rs = find_roots(f);
    std::vector<std::pair<Complex, int>> on, off;
    for (const Complex& z : rs.roots)
        (std::abs(std::abs(z) - 1.0) <= kCircleSplitTol ? on : off).emplace_back(z, 1);
    h = expand_roots(on, Complex{1.0});
    g = expand_roots(off, f.coeff(f.degree()));
}

inline Approximant make_approximant(const RunConfig& cfg, int n) {
    switch (cfg.family) {
        case Family::PowerLift:
            return power_lift(config_factored(cfg), n, cfg.alpha, cfg.kind);
        case Family::Product: {
            Poly h, g;
            split_circle_factors(cfg, h, g);
            const std::size_t len = std::size_t(n) + h.degree() + std::size_t(2 * n) + 1;
            return product_approximant(h, reciprocal_coeffs(g, len), n, cfg.alpha, cfg.kind);
        }
        default:
            return family_approximant(cfg.family, config_poly(cfg), n, cfg.alpha, cfg.kind);
    }
}

// ---- output -------------------------------------------------------------

inline nlohmann::json complex_json(Complex c) { return {c.real(), c.imag()}; }

inline nlohmann::json config_json(const RunConfig& cfg) {
    nlohmann::json j;
    j["command"] = std::string(command_name(cfg.command));
    j["alpha"] = cfg.alpha;
    j["kind"] = std::string(kind_name(cfg.kind));
    j["family"] = std::string(family_name(cfg.family));
    if (!cfg.coeffs.empty()) {
        nlohmann::json arr = nlohmann::json::array();
        for (const Complex& c : cfg.coeffs) arr.push_back(complex_json(c));
        j["f"] = arr;
    }
    if (!cfg.roots.empty()) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& [z, r] : cfg.roots)
            arr.push_back({{"root", complex_json(z)}, {"multiplicity", r}});
        j["roots"] = arr;
    }
    j["n"] = cfg.ns;
    j["format"] = cfg.format;
    j["out"] = cfg.out;
    j["seed"] = cfg.seed;
    j["artifact_version"] = std::string(kArtifactVersion);
    return j;
}

inline void emit(const RunConfig& cfg, const std::string& payload) {
    if (cfg.out.empty())
        std::cout << payload;
    else
        atomic_write(cfg.out, payload);
}

inline std::string approximant_csv(const std::vector<Approximant>& results) {
    std::ostringstream os;
    os << "family,alpha,kind,n,k,coeff_re,coeff_im,residual_norm_sq\n";
    for (const Approximant& a : results)
        for (std::size_t k = 0; k <= a.p.degree(); ++k)
            os << family_name(a.family) << ',' << fmt_double(a.alpha) << ',' << kind_name(a.kind)
               << ',' << a.n << ',' << k << ',' << fmt_double(a.p.coeff(k).real()) << ','
               << fmt_double(a.p.coeff(k).imag()) << ',' << fmt_double(a.residual_norm_sq)
               << '\n';
    return os.str();
}

inline nlohmann::json approximant_json_entry(const Approximant& a) {
    nlohmann::json e;
    e["family"] = std::string(family_name(a.family));
    e["n"] = a.n;
    e["alpha"] = a.alpha;
    e["kind"] = std::string(kind_name(a.kind));
    e["residual_norm_sq"] = a.residual_norm_sq;
    nlohmann::json coeffs = nlohmann::json::array();
    for (std::size_t k = 0; k <= a.p.degree(); ++k) coeffs.push_back(complex_json(a.p.coeff(k)));
    e["coefficients"] = coeffs;
    double cmax = 0.0;
    for (std::size_t k = 0; k <= a.p.degree(); ++k) cmax = std::max(cmax, std::abs(a.p.coeff(k)));
    if (std::abs(a.p.coeff(0)) > 1e-14 * cmax) {
        nlohmann::json ratios = nlohmann::json::array();
        for (std::size_t k = 1; k <= a.p.degree(); ++k)
            ratios.push_back(complex_json(a.p.coeff(k) / a.p.coeff(0)));
        e["ratios"] = ratios;
    }
    return e;
}

// ---- commands -----------------------------------------------------------

inline int run_approximant(const RunConfig& cfg) {
    std::vector<Approximant> results;
    for (int n : cfg.ns) results.push_back(make_approximant(cfg, n));
    if (cfg.format == "csv") {
        emit(cfg, approximant_csv(results));
    } else {
        nlohmann::json j;
        j["config"] = config_json(cfg);
        j["results"] = nlohmann::json::array();
        for (const Approximant& a : results) j["results"].push_back(approximant_json_entry(a));
        emit(cfg, j.dump(2) + "\n");
    }
    return 0;
}

inline int run_decay(const RunConfig& cfg) {
    std::vector<DecayRecord> records;
    if (cfg.family == Family::Optimal) {
        const Poly f = config_poly(cfg);
        records = decay_table(f, Family::Optimal, cfg.alpha, cfg.kind, cfg.ns);
    } else {
        records = decay_table(cfg.ns, cfg.family, cfg.alpha, cfg.kind, [&](int n) {
            return make_approximant(cfg, n).residual_norm_sq;
        });
    }
    if (cfg.format == "json") {
        nlohmann::json j;
        j["config"] = config_json(cfg);
        j["records"] = nlohmann::json::array();
        for (const DecayRecord& r : records)
            j["records"].push_back({{"family", std::string(family_name(r.family))},
                                    {"alpha", r.alpha},
                                    {"kind", std::string(kind_name(r.kind))},
                                    {"n", r.n},
                                    {"dist_sq", r.dist_sq},
                                    {"scaled", r.scaled}});
        emit(cfg, j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        write_decay_csv(os, records);
        emit(cfg, os.str());
    }
    return 0;
}

inline int run_zeros(const RunConfig& cfg) {
    std::vector<RootSet> sets;
    for (int n : cfg.ns) {
        RootSet rs = find_roots(make_approximant(cfg, n).p);
        rs.n = n;
        rs.family = cfg.family;
        sets.push_back(std::move(rs));
    }
    std::ostringstream os;
    if (cfg.format == "svg") {
        write_zeros_svg(os, sets);
        emit(cfg, os.str());
    } else if (cfg.format == "json") {
        nlohmann::json j;
        j["config"] = config_json(cfg);
        j["sets"] = nlohmann::json::array();
        for (const RootSet& rs : sets) {
            nlohmann::json roots = nlohmann::json::array();
            for (const Complex& r : rs.roots) roots.push_back(complex_json(r));
            j["sets"].push_back({{"family", std::string(family_name(*rs.family))},
                                 {"n", rs.n},
                                 {"max_residual", rs.max_residual},
                                 {"roots", roots}});
        }
        emit(cfg, j.dump(2) + "\n");
    } else {
        write_roots_csv(os, sets);
        emit(cfg, os.str());
    }
    return 0;
}

inline int run_gram(const RunConfig& cfg) {
    if (cfg.ns.size() != 1) throw UsageError("gram needs a single --n value");
    const Poly f = config_poly(cfg);
    const int n = cfg.ns[0];
    const Weights w = weight_sequence(cfg.kind, cfg.alpha, f.degree() + std::size_t(n) + 2);
    const NormalSystem sys = build_normal_system(f, n, w);
    if (cfg.format == "json") {
        nlohmann::json j;
        j["config"] = config_json(cfg);
        j["n"] = sys.n;
        j["half_bandwidth"] = sys.half_bandwidth;
        nlohmann::json rows = nlohmann::json::array();
        for (int r = 0; r <= sys.n; ++r) {
            nlohmann::json row = nlohmann::json::array();
            for (int c = 0; c <= sys.n; ++c) row.push_back(complex_json(sys.entry(r, c)));
            rows.push_back(row);
        }
        j["G"] = rows;
        nlohmann::json rhs = nlohmann::json::array();
        for (const Complex& v : sys.rhs) rhs.push_back(complex_json(v));
        j["rhs"] = rhs;
        emit(cfg, j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        write_gram_csv(os, sys);
        emit(cfg, os.str());
    }
    return 0;
}

inline std::string selftest_report_json(const RunConfig& cfg,
                                        const std::vector<SelftestItem>& items) {
    nlohmann::json j;
    j["config"] = config_json(cfg);
    j["items"] = nlohmann::json::array();
    bool all = true;
    for (const SelftestItem& it : items) {
        all = all && it.passed;
        j["items"].push_back({{"name", it.name},
                              {"passed", it.passed},
                              {"max_error", it.max_error},
                              {"tolerance", it.tolerance}});
    }
    j["all_passed"] = all;
    return j.dump(2) + "\n";
}

inline int run_selftest(const RunConfig& cfg) {
    const std::vector<SelftestItem> items = ::optapprox::run_selftest(cfg.seed);
    int failures = 0;
    for (const SelftestItem& it : items) {
        if (!it.passed) ++failures;
        std::cout << (it.passed ? "PASS " : "FAIL ") << it.name
                  << " (max error " << fmt_double(it.max_error) << ", tolerance "
                  << fmt_double(it.tolerance) << ")\n";
    }
    std::cout << (failures == 0 ? "all checks passed" : "some checks FAILED") << " ("
              << items.size() - std::size_t(failures) << "/" << items.size() << ")\n";
    if (!cfg.out.empty()) atomic_write(cfg.out, selftest_report_json(cfg, items));
    return failures == 0 ? 0 : 3;
}

inline int run(const RunConfig& cfg) {
    switch (cfg.command) {
        case Command::Approximant: return run_approximant(cfg);
        case Command::Decay: return run_decay(cfg);
        case Command::Zeros: return run_zeros(cfg);
        case Command::Gram: return run_gram(cfg);
        case Command::Selftest: return run_selftest(cfg);
    }
    throw UsageError("unknown command");
}

// ---- argument wiring ----------------------------------------------------

namespace detail {

struct RawOptions {
    std::string f, roots, n, family = "optimal", kind = "paper", format, out;
    double alpha = 1.0;
    std::uint64_t seed = 12345;
};

struct Subcommands {
    CLI::App* approximant = nullptr;
    CLI::App* decay = nullptr;
    CLI::App* zeros = nullptr;
    CLI::App* gram = nullptr;
    CLI::App* selftest = nullptr;
};

inline void add_function_options(CLI::App* sub, RawOptions& raw) {
    sub->add_option("--f", raw.f, "coefficients a0,a1,... (complex like 0.5-0.866i allowed)");
    sub->add_option("--roots", raw.roots, "roots z:mult,... ; builds f = prod (1-z/z_k)^mult");
    sub->add_option("--alpha", raw.alpha, "space parameter alpha");
    sub->add_option("--kind", raw.kind, "weight kind: coeff|paper")
        ->check(CLI::IsMember({"coeff", "paper"}));
}

inline void add_family_option(CLI::App* sub, RawOptions& raw) {
    sub->add_option("--family", raw.family,
                    "optimal|taylor|cesaro|riesz|phi|powerlift|product|closedform|rieszmean");
}

inline void add_output_options(CLI::App* sub, RawOptions& raw,
                               const std::vector<std::string>& formats) {
    sub->add_option("--format", raw.format, "output format")->check(CLI::IsMember(formats));
    sub->add_option("--out", raw.out, "output path (stdout when omitted)");
}

inline Subcommands configure_app(CLI::App& app, RawOptions& raw) {
    app.require_subcommand(1);
    Subcommands subs;
    subs.approximant = app.add_subcommand("approximant", "compute approximants");
    subs.decay = app.add_subcommand("decay", "residual decay table");
    subs.zeros = app.add_subcommand("zeros", "zero-set sweep");
    subs.gram = app.add_subcommand("gram", "dump the normal system");
    subs.selftest = app.add_subcommand("selftest", "run the golden checks");
    for (CLI::App* sub : {subs.approximant, subs.decay, subs.zeros, subs.gram}) {
        add_function_options(sub, raw);
        sub->add_option("--n", raw.n, "order or range A..B[:+k|:*k]");
    }
    for (CLI::App* sub : {subs.approximant, subs.decay, subs.zeros}) add_family_option(sub, raw);
    add_output_options(subs.approximant, raw, {"csv", "json"});
    add_output_options(subs.decay, raw, {"csv", "json"});
    add_output_options(subs.zeros, raw, {"csv", "json", "svg"});
    add_output_options(subs.gram, raw, {"csv", "json"});
    add_output_options(subs.selftest, raw, {"json"});
    subs.selftest->add_option("--seed", raw.seed, "seed for the randomized checks");
    return subs;
}

}  // namespace detail

// Parses a full argument vector (no program name). Throws UsageError on
// any malformed input, including unknown flags.
inline RunConfig parse_args(const std::vector<std::string>& args) {
    CLI::App app{"optimal polynomial approximants in Dirichlet-type spaces"};
    detail::RawOptions raw;
    const detail::Subcommands subs = detail::configure_app(app, raw);

    std::vector<const char*> argv;
    argv.push_back("optapprox");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    RunConfig cfg;
    if (subs.approximant->parsed()) cfg.command = Command::Approximant;
    else if (subs.decay->parsed()) cfg.command = Command::Decay;
    else if (subs.zeros->parsed()) cfg.command = Command::Zeros;
    else if (subs.gram->parsed()) cfg.command = Command::Gram;
    else cfg.command = Command::Selftest;

    cfg.alpha = raw.alpha;
    cfg.kind = kind_from_name(raw.kind);
    try {
        cfg.family = family_from_name(raw.family);
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    cfg.seed = raw.seed;
    cfg.out = raw.out;

    if (cfg.command != Command::Selftest) {
        if (!raw.f.empty() && !raw.roots.empty())
            throw UsageError("--f and --roots are mutually exclusive");
        if (raw.f.empty() && raw.roots.empty())
            throw UsageError("one of --f or --roots is required");
        if (!raw.f.empty()) cfg.coeffs = parse_coeff_list(raw.f);
        if (!raw.roots.empty()) cfg.roots = parse_root_list(raw.roots);
        if (!cfg.coeffs.empty()) {
            bool nonzero = false;
            for (const Complex& c : cfg.coeffs) nonzero = nonzero || c != Complex{0.0};
            if (!nonzero) throw UsageError("--f parses to the zero polynomial");
        }
        if (raw.n.empty()) {
            if (cfg.command != Command::Zeros) throw UsageError("--n is required");
            for (int n = 1; n <= 50; ++n) cfg.ns.push_back(n);
        } else {
            cfg.ns = parse_n_range(raw.n);
        }
    }

    if (raw.format.empty()) {
        switch (cfg.command) {
            case Command::Approximant:
            case Command::Selftest: cfg.format = "json"; break;
            default: cfg.format = "csv"; break;
        }
    } else {
        cfg.format = raw.format;
    }
    return cfg;
}

// Full CLI entry: parse, run, map errors to exit codes
// (1 usage, 2 domain, 3 numeric).
inline int dispatch(int argc, char** argv) {
    std::vector<std::string> args;
    bool wants_help = argc <= 1;
    for (int i = 1; i < argc; ++i) {
        args.emplace_back(argv[i]);
        if (args.back() == "-h" || args.back() == "--help") wants_help = true;
    }
    if (wants_help) {
        CLI::App app{"optimal polynomial approximants in Dirichlet-type spaces"};
        detail::RawOptions raw;
        detail::configure_app(app, raw);
        try {
            app.parse(argc, argv);
        } catch (const CLI::ParseError& e) {
            return app.exit(e);
        }
        return 0;
    }
    try {
        return run(parse_args(args));
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 1;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return 2;
    } catch (const NumericError& e) {
        std::cerr << "numeric error: " << e.what() << '\n';
        return 3;
    }
}

}  // namespace optapprox::cli
