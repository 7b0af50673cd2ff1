#pragma once

/**
 * @file verify.hpp
 * @brief The cross-route verification grid: every family instance on the
 *        standard parameter grid is pushed through all applicable identity
 *        checks, exactly. One mismatch anywhere is a failure.
 */

#include <atomic>
#include <map>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include <qspecial/families.hpp>
#include <qspecial/framework.hpp>

namespace qspecial {

struct VerifyOptions {
    std::vector<FamilyKind> kinds;  // empty = nothing to verify
    int threads = 1;
    bool corrupt = false;  // negative-control hook
    unsigned seed = 12345;

    // depth bounds (kept at the documented defaults by the CLI)
    int nmax_route = 20;
    int nmax_enum = 12;
    int nmax_orth = 30;
    int nmax_weighted = 25;
    int nmax_congruence = 15;
    int nmax_qn = 12;
    int nmax_signfact = 10;
    int max_tower_depth = 8;
};

inline std::vector<FamilyKind> all_family_kinds() {
    return {FamilyKind::QBernoulli,       FamilyKind::QCauchy,
            FamilyKind::QEulerFirst,      FamilyKind::QEulerSecond,
            FamilyKind::LehmerIncomplete, FamilyKind::DetHyperharmonic,
            FamilyKind::RestrictedDetHH,  FamilyKind::ShiftedDetHH,
            FamilyKind::RestrictedShiftedDetHH};
}

struct CheckResult {
    std::string name;
    long passed = 0;
    long failed = 0;
    std::string first_failure;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    long instances = 0;

    bool all_passed() const {
        for (const auto& c : checks)
            if (c.failed > 0) return false;
        return true;
    }
};

/// The standard grid: q in {1, 1/2, 2}, N in {0..3} as permitted, windows
/// {[1,inf), [1,4], [2,4], [2,5]}, r_hh in {0..3}, m in {1..3}, ell in {1..4}.
inline std::vector<FamilySpec> default_grid(const std::vector<FamilyKind>& kinds) {
    const std::vector<BigRat> qs = {BigRat(1), BigRat(1, 2), BigRat(2)};
    struct Win {
        int r;
        std::optional<int> R;
    };
    const std::vector<Win> windows = {{1, std::nullopt}, {1, 4}, {2, 4}, {2, 5}};

    std::vector<FamilySpec> grid;
    auto push_q_kind = [&](FamilyKind kind, int n_lo) {
        for (int N = n_lo; N <= 3; ++N)
            for (const BigRat& q : qs)
                for (const Win& w : windows) {
                    FamilySpec s;
                    s.kind = kind;
                    s.N = N;
                    s.q = q;
                    s.r = w.r;
                    s.R = w.R;
                    grid.push_back(s);
                }
    };
    for (FamilyKind kind : kinds) {
        switch (kind) {
            case FamilyKind::QBernoulli:
            case FamilyKind::QCauchy: push_q_kind(kind, 1); break;
            case FamilyKind::QEulerFirst:
            case FamilyKind::QEulerSecond:
            case FamilyKind::LehmerIncomplete: push_q_kind(kind, 0); break;
            case FamilyKind::DetHyperharmonic:
                for (int r = 0; r <= 3; ++r) {
                    FamilySpec s;
                    s.kind = kind;
                    s.r_hh = r;
                    grid.push_back(s);
                }
                break;
            case FamilyKind::RestrictedDetHH:
                for (int r = 0; r <= 3; ++r)
                    for (int ell = 1; ell <= 4; ++ell) {
                        FamilySpec s;
                        s.kind = kind;
                        s.r_hh = r;
                        s.ell = ell;
                        grid.push_back(s);
                    }
                break;
            case FamilyKind::ShiftedDetHH:
                for (int r = 0; r <= 3; ++r)
                    for (int m = 1; m <= 3; ++m) {
                        FamilySpec s;
                        s.kind = kind;
                        s.r_hh = r;
                        s.m = m;
                        grid.push_back(s);
                    }
                break;
            case FamilyKind::RestrictedShiftedDetHH:
                for (int r = 0; r <= 3; ++r)
                    for (int m = 1; m <= 3; ++m)
                        for (int ell = 1; ell <= 4; ++ell) {
                            FamilySpec s;
                            s.kind = kind;
                            s.r_hh = r;
                            s.m = m;
                            s.ell = ell;
                            grid.push_back(s);
                        }
                break;
        }
    }
    return grid;
}

namespace verify_detail {

struct Tally {
    long passed = 0;
    long failed = 0;
    std::string first_failure;

    void expect(bool ok, const std::string& context) {
        if (ok) {
            ++passed;
        } else {
            ++failed;
            if (first_failure.empty()) first_failure = context;
        }
    }
};

using Report = std::map<std::string, Tally>;

inline std::string mismatch(const std::string& label, int n, const std::string& what,
                            const BigRat& lhs, const BigRat& rhs) {
    return label + " n=" + std::to_string(n) + " " + what + ": " + lhs.str() +
           " != " + rhs.str();
}

inline void check_route_equivalence(const Family& fam, const VerifyOptions& o, Report& rep) {
    Tally& routes = rep["route-equivalence"];
    const FrameSeq f = fam.raw_prefix(o.nmax_route);
    for (int n = 0; n <= o.nmax_route; ++n) {
        BigRat det = f_via_determinant(fam.recip, n);
        routes.expect(det == f[n],
                      mismatch(fam.name, n, "inversion vs determinant", f[n], det));
        if (n <= o.nmax_enum) {
            BigRat part = f_via_partitions(fam.recip, n);
            BigRat comp = f_via_compositions(fam.recip, n);
            routes.expect(part == f[n],
                          mismatch(fam.name, n, "inversion vs partitions", f[n], part));
            routes.expect(comp == f[n],
                          mismatch(fam.name, n, "inversion vs compositions", f[n], comp));
        }
    }
}

inline void check_inverse_routes(const Family& fam, const VerifyOptions& o, Report& rep) {
    Tally& t = rep["inverse-consistency"];
    const FrameSeq f = fam.raw_prefix(o.nmax_enum);
    for (int n = 1; n <= o.nmax_enum; ++n) {
        const BigRat want = fam.recip.coeff(n);
        BigRat det = a_via_f_determinant(f, n);
        BigRat comp = a_via_f_compositions(f, n);
        t.expect(det == want, mismatch(fam.name, n, "a via determinant", det, want));
        t.expect(comp == want, mismatch(fam.name, n, "a via compositions", comp, want));
    }
}

inline void check_orthogonality(const Family& fam, const VerifyOptions& o, Report& rep) {
    Tally& t = rep["orthogonality"];
    const FrameSeq f = fam.raw_prefix(o.nmax_orth);
    for (int n = 0; n <= o.nmax_orth; ++n) {
        BigRat acc = 0;
        for (int k = 0; k <= n; ++k) acc += f[k] * fam.recip.coeff(n - k);
        t.expect(acc == BigRat(n == 0 ? 1 : 0), mismatch(fam.name, n, "delta sum", acc,
                                                         BigRat(n == 0 ? 1 : 0)));
    }
}

/// The orthogonality identity restated through the normalized numbers and
/// their displayed factorial weights: the masked sum of
/// number_k * weight(n-k) plus the number_n/(s n)! term. The weights are
/// rebuilt from q-integers directly, independent of coeff().
inline void check_weighted_orthogonality(const Family& fam, const VerifyOptions& o,
                                         Report& rep) {
    const FamilySpec& s = fam.spec;
    if (s.kind == FamilyKind::DetHyperharmonic || s.kind == FamilyKind::RestrictedDetHH ||
        s.kind == FamilyKind::ShiftedDetHH || s.kind == FamilyKind::RestrictedShiftedDetHH)
        return;  // no factorial-weight shape for the OGF families
    Tally& t = rep["orthogonality-weighted"];

    auto weight = [&](int j) -> BigRat {  // displayed weight at window index j
        switch (s.kind) {
            case FamilyKind::QBernoulli:
                return q_factorial(s.N, s.q) / q_factorial(s.N + j, s.q);
            case FamilyKind::QCauchy: {
                BigRat v = q_integer(s.N, s.q) / q_integer(s.N + j, s.q);
                return j % 2 == 0 ? v : -v;
            }
            case FamilyKind::QEulerFirst:
                return q_factorial(2 * s.N, s.q) / q_factorial(2 * s.N + 2 * j, s.q);
            case FamilyKind::QEulerSecond:
                return q_factorial(2 * s.N + 1, s.q) / q_factorial(2 * s.N + 2 * j + 1, s.q);
            default:  // LehmerIncomplete
                return q_factorial(3 * s.N + 3 * j, s.q).reciprocal();
        }
    };

    const int grade = fam.grade();
    const FrameSeq f = fam.raw_prefix(o.nmax_weighted);
    for (int n = 0; n <= o.nmax_weighted; ++n) {
        // number_n / (s n)! term (index n-k = 0), then the window band
        BigRat acc = fam.normalize(n, f[n]) /
                     BigRat(BigInt::factorial(static_cast<unsigned long>(grade) * n));
        const int kmin = s.R ? std::max(0, n - *s.R) : 0;
        const int kmax = n - s.r;
        for (int k = kmin; k <= kmax; ++k)
            acc += fam.normalize(k, f[k]) /
                   BigRat(BigInt::factorial(static_cast<unsigned long>(grade) * k)) *
                   weight(n - k);
        t.expect(acc == BigRat(n == 0 ? 1 : 0),
                 mismatch(fam.name, n, "weighted delta sum", acc, BigRat(n == 0 ? 1 : 0)));
    }
}

inline void check_continued_fractions(const Family& fam, const VerifyOptions& o, Report& rep) {
    if (!fam.gh) return;
    const CoefficientWindow& w = fam.gh->window();
    if (!w.is_finite() && w.lo() == 1) {
        Tally& cong = rep["cf-congruence"];
        const FrameSeq f = fam.raw_prefix(o.nmax_congruence);
        for (int n = 0; n <= o.nmax_congruence; ++n) {
            const TruncSeries s = to_series(cf_convergent(*fam.gh, n), n);
            bool ok = true;
            for (int k = 0; k <= n && ok; ++k) ok = s.coeff(k) == f[k];
            cong.expect(ok, fam.name + " n=" + std::to_string(n) + " convergent congruence");
        }

        Tally& qn = rep["qn-structure"];
        for (int n = 0; n <= o.nmax_qn; ++n) {
            RatFunc c = cf_convergent(*fam.gh, n);
            BigRat gprod = 1;
            for (int j = 1; j <= n; ++j) gprod *= fam.gh->g(j);
            Poly expect_q;
            for (int j = 0; j <= n; ++j)
                expect_q += Poly::monomial(j, BigRat(1)) * fam.gh->coeff_ratio(j);
            qn.expect(c.num == Poly(gprod) && c.den == Poly(gprod) * expect_q,
                      fam.name + " n=" + std::to_string(n) + " Q_n structure");
        }
    }
    if (w.is_finite() && w.lo() < *w.hi()) {
        Tally& t = rep["cf-finite-exact"];
        RatFunc full = cf_convergent_finite(*fam.gh, *w.hi() - w.lo() + 1);
        Poly series = Poly(1);
        for (int j = w.lo(); j <= *w.hi(); ++j)
            series += Poly::monomial(j, BigRat(1)) * fam.recip.coeff(j);
        t.expect(full.num * series == full.den,
                 fam.name + " finite CF cross-multiplication");
    }
}

/// Positive-entry determinant forms (alternating-sign families): the band
/// entries are rebuilt from the defining q-integer and hyperharmonic
/// formulas, not from coeff().
inline void check_sign_factoring(const Family& fam, const VerifyOptions& o, Report& rep) {
    const FamilySpec& s = fam.spec;
    std::function<BigRat(int)> entry;
    switch (s.kind) {
        case FamilyKind::QCauchy:
            entry = [&](int j) { return q_integer(s.N, s.q) / q_integer(s.N + j, s.q); };
            break;
        case FamilyKind::DetHyperharmonic:
        case FamilyKind::RestrictedDetHH:
        case FamilyKind::ShiftedDetHH:
        case FamilyKind::RestrictedShiftedDetHH:
            entry = [&](int j) { return hyperharmonic(s.m + j - 1, s.r_hh); };
            break;
        default: return;
    }
    Tally& t = rep["sign-factoring"];
    const FrameSeq f = fam.raw_prefix(o.nmax_signfact);
    for (int n = 1; n <= o.nmax_signfact; ++n) {
        std::vector<BigRat> band(n, BigRat(0));
        for (int j = 1; j <= n; ++j)
            if (fam.recip.window().contains(j)) band[j - 1] = entry(j);
        const BigRat pos = det_bareiss(toeplitz_hessenberg(band, n));
        t.expect(pos == f[n],
                 mismatch(fam.name, n, "positive-entry determinant", pos, f[n]));
    }
}

inline void check_hyperharmonic_forms(const Family& fam, const VerifyOptions& o, Report& rep) {
    const FamilySpec& s = fam.spec;
    const int order = 10;
    switch (s.kind) {
        case FamilyKind::DetHyperharmonic: {
            Tally& gf = rep["hh-closed-gf"];
            const TruncSeries closed = hh_closed_gf(s.r_hh, order);
            for (int j = 0; j <= order; ++j)
                gf.expect(closed.coeff(j) == fam.recip.coeff(j),
                          mismatch(fam.name, j, "closed generating form", closed.coeff(j),
                                   fam.recip.coeff(j)));

            Tally& tower = rep["hh-cf-tower"];
            const FrameSeq f = fam.raw_prefix(o.max_tower_depth);
            for (int depth = 1; depth <= o.max_tower_depth; ++depth) {
                const TruncSeries cf = hh_cf_tower(s.r_hh, depth, depth);
                for (int n = 0; n <= depth; ++n)
                    tower.expect(cf.coeff(n) == f[n],
                                 mismatch(fam.name, n,
                                          "tower depth " + std::to_string(depth), cf.coeff(n),
                                          f[n]));
            }
            break;
        }
        case FamilyKind::ShiftedDetHH: {
            Tally& gf = rep["hh-closed-gf"];
            const TruncSeries closed = hh_shifted_closed_gf(s.r_hh, s.m, order);
            for (int j = 0; j <= order; ++j)
                gf.expect(closed.coeff(j) == fam.recip.coeff(j),
                          mismatch(fam.name, j, "shifted closed form", closed.coeff(j),
                                   fam.recip.coeff(j)));
            break;
        }
        case FamilyKind::RestrictedDetHH:
        case FamilyKind::RestrictedShiftedDetHH: {
            Tally& gf = rep["hh-closed-gf"];
            const TruncSeries closed =
                to_series(hh_restricted_shifted_closed_gf(s.r_hh, s.m, s.ell), order);
            for (int j = 0; j <= order; ++j)
                gf.expect(closed.coeff(j) == fam.recip.coeff(j),
                          mismatch(fam.name, j, "restricted closed form", closed.coeff(j),
                                   fam.recip.coeff(j)));

            Tally& ru = rep["restricted-vs-unrestricted"];
            const Family unrestricted =
                s.kind == FamilyKind::RestrictedDetHH
                    ? make_det_hyperharmonic(s.r_hh)
                    : make_det_hyperharmonic_shifted(s.r_hh, s.m);
            for (int n = 0; n <= s.ell; ++n)
                ru.expect(fam.raw_f(n) == unrestricted.raw_f(n),
                          mismatch(fam.name, n, "restricted vs unrestricted", fam.raw_f(n),
                                   unrestricted.raw_f(n)));
            break;
        }
        default: break;
    }
}

inline void check_partition_identity(unsigned seed, Report& rep) {
    Tally& t = rep["worked-identity"];
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
    for (int trial = 0; trial < 5; ++trial) {
        const BigRat a2(num(rng), den(rng)), a3(num(rng), den(rng)), a4(num(rng), den(rng));
        ReciprocalFamily fam(CoefficientWindow::finite(2, 4), 1, [=](int j) {
            if (j == 2) return a2;
            if (j == 3) return a3;
            if (j == 4) return a4;
            return BigRat(0);
        });
        const FrameSeq f = f_inversion_prefix(fam, 6);
        const BigRat expect = -pow(a2, 3) + pow(a3, 2) + BigRat(2) * a2 * a4;
        const std::string label = "window [2,4] (" + a2.str() + "," + a3.str() + "," + a4.str() + ")";
        t.expect(f[6] == expect, mismatch(label, 6, "f_6 expansion", f[6], expect));
        t.expect(f_via_partitions(fam, 6) == expect,
                 mismatch(label, 6, "partition route", f_via_partitions(fam, 6), expect));
        const BigRat zero = -f[6] - pow(f[2], 3) + pow(f[3], 2) + BigRat(2) * f[2] * f[4];
        t.expect(zero == BigRat(0), mismatch(label, 6, "f-relation", zero, BigRat(0)));
    }
}

inline Report run_instance(const FamilySpec& spec, const VerifyOptions& o) {
    Report rep;
    Family fam = instantiate(spec);
    if (o.corrupt) fam = fam.corrupted();
    check_route_equivalence(fam, o, rep);
    check_inverse_routes(fam, o, rep);
    check_orthogonality(fam, o, rep);
    check_weighted_orthogonality(fam, o, rep);
    check_continued_fractions(fam, o, rep);
    check_sign_factoring(fam, o, rep);
    check_hyperharmonic_forms(fam, o, rep);
    return rep;
}

}  // namespace verify_detail

/// Runs the grid for the selected kinds. Instances fan out across worker
/// threads; reports are merged in instance order, so the output (including
/// the first reported failure) is deterministic.
inline VerifyReport run_verification(const VerifyOptions& opts) {
    const std::vector<FamilySpec> grid = default_grid(opts.kinds);
    std::vector<verify_detail::Report> reports(grid.size());

    const int threads =
        std::max(1, std::min<int>(opts.threads, static_cast<int>(grid.size()) + 1));
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= grid.size()) return;
            reports[i] = verify_detail::run_instance(grid[i], opts);
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    verify_detail::Report merged;
    verify_detail::check_partition_identity(opts.seed, merged);
    for (const auto& rep : reports)
        for (const auto& [name, tally] : rep) {
            auto& m = merged[name];
            m.passed += tally.passed;
            m.failed += tally.failed;
            if (m.first_failure.empty()) m.first_failure = tally.first_failure;
        }

    VerifyReport out;
    out.instances = static_cast<long>(grid.size());
    for (const auto& [name, tally] : merged)
        out.checks.push_back({name, tally.passed, tally.failed, tally.first_failure});
    return out;
}

}  // namespace qspecial
