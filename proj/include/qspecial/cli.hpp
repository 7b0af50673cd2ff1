#pragma once

/**
 * @file cli.hpp
 * @brief Command-line front end: `table` (number tables as CSV/JSON),
 *        `verify` (the identity grid), `cf` (continued-fraction display).
 *
 * Exit codes are a stable contract: 0 success, 2 usage/parameter error,
 * 3 verification failure or internal disagreement. Rationals are emitted as
 * separate numerator/denominator digit strings, never as decimals.
 */

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <qspecial/families.hpp>
#include <qspecial/verify.hpp>

namespace qspecial {

enum class Route { Inversion, Determinant, Partitions, Compositions };

inline const char* route_name(Route r) {
    switch (r) {
        case Route::Inversion: return "inversion";
        case Route::Determinant: return "determinant";
        case Route::Partitions: return "partitions";
        case Route::Compositions: return "compositions";
    }
    return "?";
}

inline std::optional<Route> route_from_name(const std::string& s) {
    for (Route r : {Route::Inversion, Route::Determinant, Route::Partitions,
                    Route::Compositions})
        if (s == route_name(r)) return r;
    return std::nullopt;
}

enum class OutputFormat { Csv, Json };

inline int default_threads() {
    if (const char* env = std::getenv("QSPECIAL_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return static_cast<int>(std::clamp(hc, 1u, 8u));
}

struct RunConfig {
    std::string command;  // table | verify | cf
    std::optional<FamilySpec> family;
    std::vector<FamilyKind> verify_kinds = all_family_kinds();
    int nmax = 10;
    std::vector<Route> routes = {Route::Inversion};
    OutputFormat format = OutputFormat::Csv;
    int depth = 5;
    bool check = false;
    bool corrupt = false;
    unsigned seed = 12345;
    int threads = default_threads();
};

namespace cli_detail {

inline BigRat route_value(Route r, const ReciprocalFamily& fam, const FrameSeq& prefix, int n) {
    switch (r) {
        case Route::Inversion: return prefix[n];
        case Route::Determinant: return f_via_determinant(fam, n);
        case Route::Partitions: return f_via_partitions(fam, n);
        case Route::Compositions: return f_via_compositions(fam, n);
    }
    throw std::logic_error("unknown route");
}

inline std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

}  // namespace cli_detail

/// Emits rows (n, normalized number, raw f_n, route label) for n = 0..nmax.
/// All requested routes are evaluated; any disagreement is exit 3.
inline int cmd_table(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (!cfg.family) {
        err << "table: a family must be selected (--family)\n";
        return 2;
    }
    if (cfg.nmax < 0) {
        err << "table: nmax must be >= 0\n";
        return 2;
    }
    if (cfg.routes.empty()) {
        err << "table: at least one route is required\n";
        return 2;
    }
    const bool enumerative =
        std::any_of(cfg.routes.begin(), cfg.routes.end(), [](Route r) {
            return r == Route::Partitions || r == Route::Compositions;
        });
    if (enumerative && cfg.nmax > 20) {
        err << "table: enumeration routes are limited to nmax <= 20\n";
        return 2;
    }

    Family fam = [&] {
        Family f = instantiate(*cfg.family);
        return cfg.corrupt ? f.corrupted() : f;
    }();

    std::string route_label;
    for (const Route r : cfg.routes) {
        if (!route_label.empty()) route_label += "+";
        route_label += route_name(r);
    }

    const FrameSeq prefix = fam.raw_prefix(cfg.nmax);
    struct Row {
        int n;
        BigRat value, f;
    };
    std::vector<Row> rows;
    for (int n = 0; n <= cfg.nmax; ++n) {
        const BigRat f0 = cli_detail::route_value(cfg.routes.front(), fam.recip, prefix, n);
        for (size_t i = 1; i < cfg.routes.size(); ++i) {
            const BigRat fi = cli_detail::route_value(cfg.routes[i], fam.recip, prefix, n);
            if (!(fi == f0)) {
                err << "table: route disagreement at n=" << n << ": "
                    << route_name(cfg.routes.front()) << " gives " << f0 << ", "
                    << route_name(cfg.routes[i]) << " gives " << fi << "\n";
                return 3;
            }
        }
        rows.push_back({n, fam.normalize(n, f0), f0});
    }

    if (cfg.format == OutputFormat::Csv) {
        out << "n,value_num,value_den,f_num,f_den,route\n";
        for (const Row& r : rows)
            out << r.n << ',' << r.value.numerator() << ',' << r.value.denominator() << ','
                << r.f.numerator() << ',' << r.f.denominator() << ',' << route_label << "\n";
    } else {
        out << "[\n";
        for (size_t i = 0; i < rows.size(); ++i) {
            const Row& r = rows[i];
            out << "  {\"n\": " << r.n << ", \"value_num\": \"" << r.value.numerator()
                << "\", \"value_den\": \"" << r.value.denominator() << "\", \"f_num\": \""
                << r.f.numerator() << "\", \"f_den\": \"" << r.f.denominator()
                << "\", \"route\": \"" << cli_detail::json_escape(route_label) << "\"}"
                << (i + 1 < rows.size() ? "," : "") << "\n";
        }
        out << "]\n";
    }
    return 0;
}

/// Runs the identity grid; prints per-check pass/fail counts. Exit 0 iff
/// everything passed, 3 on any mismatch, 2 for an empty selection.
inline int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.verify_kinds.empty()) {
        err << "verify: nothing to verify (empty family selection)\n";
        return 2;
    }
    VerifyOptions opts;
    opts.kinds = cfg.verify_kinds;
    opts.threads = cfg.threads;
    opts.corrupt = cfg.corrupt;
    opts.seed = cfg.seed;
    const VerifyReport report = run_verification(opts);

    out << "instances: " << report.instances << "\n";
    out << std::left << std::setw(28) << "check" << std::right << std::setw(8) << "pass"
        << std::setw(8) << "fail" << "\n";
    for (const CheckResult& c : report.checks)
        out << std::left << std::setw(28) << c.name << std::right << std::setw(8) << c.passed
            << std::setw(8) << c.failed << "\n";
    if (!report.all_passed()) {
        for (const CheckResult& c : report.checks)
            if (c.failed > 0) out << "first failure [" << c.name << "]: " << c.first_failure << "\n";
        out << "result: FAIL\n";
        return 3;
    }
    out << "result: PASS\n";
    return 0;
}

namespace cli_detail {

inline void print_node(std::ostream& out, int level, const Poly& num, const Poly& den, int s) {
    out << "node " << level << ": num = " << num.regrade(s).str()
        << ", den = " << den.regrade(s).str() << "\n";
}

}  // namespace cli_detail

/// Prints the continued-fraction node list and the depth-k convergent as an
/// exact P/Q pair (in the presentation variable x, regraded for the even and
/// cubic families). --check verifies the depth-appropriate contract.
inline int cmd_cf(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (!cfg.family) {
        err << "cf: a family must be selected (--family)\n";
        return 2;
    }
    if (cfg.depth < 0) {
        err << "cf: depth must be >= 0\n";
        return 2;
    }
    Family fam = [&] {
        Family f = instantiate(*cfg.family);
        return cfg.corrupt ? f.corrupted() : f;
    }();
    const int s = fam.grade();
    const Poly y = Poly::monomial(1);
    out << "family: " << fam.name << "\n";
    out << "depth: " << cfg.depth << "\n";

    if (fam.gh) {
        const GHForm& gh = *fam.gh;
        const CoefficientWindow& w = gh.window();
        if (!w.is_finite() && w.lo() == 1) {
            for (int k = 1; k <= cfg.depth; ++k) {
                const Poly num = (k == 1) ? -(Poly(gh.h(1)) * y)
                                          : -(Poly(gh.g(k - 1) * gh.h(k)) * y);
                const Poly den = Poly(gh.g(k)) + Poly(gh.h(k)) * y;
                cli_detail::print_node(out, k, num, den, s);
            }
            const RatFunc conv = cf_convergent(gh, cfg.depth);
            out << "P = " << conv.num.regrade(s).str() << "\n";
            out << "Q = " << conv.den.regrade(s).str() << "\n";
            if (cfg.check) {
                // against the family's own coefficient path, so a corrupted
                // coefficient table cannot slip through
                const TruncSeries series = to_series(conv, cfg.depth);
                const FrameSeq f = fam.raw_prefix(cfg.depth);
                bool ok = true;
                for (int n = 0; n <= cfg.depth && ok; ++n) ok = series.coeff(n) == f[n];
                out << "congruence check (order " << cfg.depth << "): "
                    << (ok ? "PASS" : "FAIL") << "\n";
                if (!ok) return 3;
            }
            return 0;
        }
        if (w.is_finite() && w.lo() < *w.hi()) {
            const int r = w.lo(), R = *w.hi();
            const int full = R - r + 1;
            if (cfg.depth < 1 || cfg.depth > full) {
                err << "cf: depth must be in [1, " << full << "] for window [" << r << "," << R
                    << "]\n";
                return 2;
            }
            BigRat hr = 1, gr = 1;
            for (int i = 1; i <= r; ++i) {
                hr *= gh.h(i);
                gr *= gh.g(i);
            }
            for (int k = 1; k <= cfg.depth; ++k) {
                Poly num, den;
                if (k == 1) {
                    num = -Poly::monomial(r, hr);
                    den = Poly(gr) + Poly::monomial(r, hr);
                } else {
                    const BigRat lead = (k == 2) ? gr : gh.g(r + k - 2);
                    num = -(Poly(lead * gh.h(r + k - 1)) * y);
                    den = Poly(gh.g(r + k - 1)) + Poly(gh.h(r + k - 1)) * y;
                }
                cli_detail::print_node(out, k, num, den, s);
            }
            const RatFunc conv = cf_convergent_finite(gh, cfg.depth);
            out << "P = " << conv.num.regrade(s).str() << "\n";
            out << "Q = " << conv.den.regrade(s).str() << "\n";
            if (cfg.check) {
                const RatFunc fullconv = cf_convergent_finite(gh, full);
                Poly series = Poly(1);
                for (int j = r; j <= R; ++j)
                    series += Poly::monomial(j, BigRat(1)) * fam.recip.coeff(j);
                const bool ok = fullconv.num * series == fullconv.den;
                out << "cross-multiplication check (full depth " << full << "): "
                    << (ok ? "PASS" : "FAIL") << "\n";
                if (!ok) return 3;
            }
            return 0;
        }
        err << "cf: window [" << w.lo() << ",inf) has no continued-fraction form\n";
        return 2;
    }

    if (fam.spec.kind == FamilyKind::DetHyperharmonic) {
        if (cfg.depth < 1) {
            err << "cf: depth must be >= 1 for the hyperharmonic tower\n";
            return 2;
        }
        const std::vector<CFNode> nodes = hh_cf_nodes(fam.spec.r_hh, cfg.depth);
        for (size_t i = 0; i < nodes.size(); ++i)
            cli_detail::print_node(out, static_cast<int>(i + 1), nodes[i].num, nodes[i].den, 1);
        const TruncSeries series = eval_generic_cf(Poly(0), nodes, cfg.depth);
        out << "series:";
        for (int n = 0; n <= series.order(); ++n) out << " " << series.coeff(n);
        out << "\n";
        if (cfg.check) {
            const FrameSeq f = fam.raw_prefix(cfg.depth);
            bool ok = true;
            for (int n = 0; n <= cfg.depth && ok; ++n) ok = series.coeff(n) == f[n];
            out << "tower check (n <= " << cfg.depth << "): " << (ok ? "PASS" : "FAIL") << "\n";
            if (!ok) return 3;
        }
        return 0;
    }

    err << "cf: family " << fam.name << " has no continued-fraction support\n";
    return 2;
}

inline int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.command == "table") return cmd_table(cfg, out, err);
        if (cfg.command == "verify") return cmd_verify(cfg, out, err);
        if (cfg.command == "cf") return cmd_cf(cfg, out, err);
        err << "unknown command: " << cfg.command << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << cfg.command << ": " << e.what() << "\n";
        return 2;
    }
}

}  // namespace qspecial
