#pragma once

/**
 * @file families.hpp
 * @brief The number families: q-hypergeometric Bernoulli, q-Cauchy, both
 *        q-Euler kinds, incomplete q-Lehmer-Euler, and the determinantal
 *        hyperharmonic variants, each expressed as a reciprocal coefficient
 *        family (plus a generator pair when one exists).
 *
 * Factorial normalization lives here, not in the framework: the framework
 * always works with f_n, families multiply by (s*n)! where s is the grade.
 */

#include <optional>
#include <string>
#include <vector>

#include <qspecial/framework.hpp>

namespace qspecial {

enum class FamilyKind {
    QBernoulli,
    QCauchy,
    QEulerFirst,
    QEulerSecond,
    LehmerIncomplete,
    DetHyperharmonic,
    RestrictedDetHH,
    ShiftedDetHH,
    RestrictedShiftedDetHH,
};

inline const char* kind_name(FamilyKind k) {
    switch (k) {
        case FamilyKind::QBernoulli: return "qbernoulli";
        case FamilyKind::QCauchy: return "qcauchy";
        case FamilyKind::QEulerFirst: return "qeuler-first";
        case FamilyKind::QEulerSecond: return "qeuler-second";
        case FamilyKind::LehmerIncomplete: return "lehmer";
        case FamilyKind::DetHyperharmonic: return "dethh";
        case FamilyKind::RestrictedDetHH: return "dethh-restricted";
        case FamilyKind::ShiftedDetHH: return "dethh-shifted";
        case FamilyKind::RestrictedShiftedDetHH: return "dethh-restricted-shifted";
    }
    return "?";
}

inline std::optional<FamilyKind> kind_from_name(const std::string& s) {
    for (FamilyKind k :
         {FamilyKind::QBernoulli, FamilyKind::QCauchy, FamilyKind::QEulerFirst,
          FamilyKind::QEulerSecond, FamilyKind::LehmerIncomplete, FamilyKind::DetHyperharmonic,
          FamilyKind::RestrictedDetHH, FamilyKind::ShiftedDetHH,
          FamilyKind::RestrictedShiftedDetHH})
        if (s == kind_name(k)) return k;
    return std::nullopt;
}

/// Named instantiation parameters. Which fields matter depends on the kind:
/// N and q for the q-families, (r, R) for window truncation, r_hh/m/ell for
/// the hyperharmonic variants.
struct FamilySpec {
    FamilyKind kind = FamilyKind::QBernoulli;
    int N = 1;
    BigRat q = 1;
    int r = 1;
    std::optional<int> R;  // nullopt = unbounded
    int m = 1;
    int ell = 1;
    int r_hh = 0;

    std::string label() const {
        std::string s = kind_name(kind);
        switch (kind) {
            case FamilyKind::QBernoulli:
            case FamilyKind::QCauchy:
            case FamilyKind::QEulerFirst:
            case FamilyKind::QEulerSecond:
            case FamilyKind::LehmerIncomplete:
                s += " N=" + std::to_string(N) + " q=" + q.str() + " window=[" +
                     std::to_string(r) + "," + (R ? std::to_string(*R) : "inf") + "]";
                break;
            case FamilyKind::DetHyperharmonic:
                s += " rhh=" + std::to_string(r_hh);
                break;
            case FamilyKind::RestrictedDetHH:
                s += " rhh=" + std::to_string(r_hh) + " ell=" + std::to_string(ell);
                break;
            case FamilyKind::ShiftedDetHH:
                s += " rhh=" + std::to_string(r_hh) + " m=" + std::to_string(m);
                break;
            case FamilyKind::RestrictedShiftedDetHH:
                s += " rhh=" + std::to_string(r_hh) + " m=" + std::to_string(m) +
                     " ell=" + std::to_string(ell);
                break;
        }
        return s;
    }
};

namespace detail {

// Over the rationals [k]_q = 0 only at q = -1 with k even, so vanishing
// denominators can be ruled out at construction. For finite index ranges the
// check is exact; unbounded ranges need only the q = -1 rule.
inline void require_q_regular(const BigRat& q, int first, std::optional<int> last,
                              const std::string& who) {
    if (last) {
        for (int k = first; k <= *last; ++k)
            if (q_integer(k, q).is_zero())
                throw std::domain_error(who + ": [" + std::to_string(k) + "]_q = 0 at q = " +
                                        q.str());
        return;
    }
    if (q == BigRat(-1)) {
        int k = (first % 2 == 0) ? first : first + 1;
        throw std::domain_error(who + ": [" + std::to_string(k) + "]_q = 0 at q = -1");
    }
}

// H_n^{(r)} with the empty-sum convention H_0^{(r)} = 0, used by the closed
// generating forms (boundary terms at m = 1).
inline BigRat hyperharmonic0(int n, int r) {
    return n == 0 ? BigRat(0) : hyperharmonic(n, r);
}

}  // namespace detail

/// A fully instantiated family: the coefficient view, the generator pair
/// when the family has one, and the factorial normalization.
struct Family {
    FamilySpec spec;
    std::string name;
    ReciprocalFamily recip;
    std::optional<GHForm> gh;
    bool factorial_normalized = true;

    int grade() const { return recip.grade(); }

    FrameSeq raw_prefix(int n) const { return f_inversion_prefix(recip, n); }
    BigRat raw_f(int n) const { return f_via_inversion(recip, n); }

    /// raw f_n -> the named number (multiplies by (s*n)! for EGF families).
    BigRat normalize(int n, const BigRat& f) const {
        if (!factorial_normalized) return f;
        return f * BigRat(BigInt::factorial(static_cast<unsigned long>(grade()) * n));
    }
    BigRat number(int n) const { return normalize(n, raw_f(n)); }

    /// Test hook: same family with a_r bumped by 1 (negative control).
    Family corrupted() const {
        Family bad = *this;
        const ReciprocalFamily orig = recip;
        const int at = recip.window().lo();
        bad.recip = ReciprocalFamily(orig.window(), orig.grade(), [orig, at](int j) {
            BigRat v = orig.coeff(j);
            return j == at ? v + BigRat(1) : v;
        });
        bad.name += " [corrupted]";
        return bad;
    }
};

/// raw framework coefficient and the factorial-normalized number together.
struct NormalizedValue {
    BigRat raw_f;
    BigRat number;
};

inline NormalizedValue evaluate(const Family& fam, int n) {
    BigRat f = fam.raw_f(n);
    BigRat num = fam.normalize(n, f);
    return {std::move(f), std::move(num)};
}

// ---------------------------------------------------------------------------
// q-families
// ---------------------------------------------------------------------------

inline Family make_q_bernoulli(int N, const BigRat& q,
                               CoefficientWindow w = CoefficientWindow::unbounded()) {
    if (N < 1) throw std::domain_error("qbernoulli: N must be >= 1");
    detail::require_q_regular(q, N + 1, w.hi() ? std::optional<int>(N + *w.hi()) : std::nullopt,
                              "qbernoulli");
    // [N]_q!/[N+j]_q! reduced to 1/([N+1]_q ... [N+j]_q)
    auto a = [N, q](int j) {
        BigRat den = 1;
        for (int i = N + 1; i <= N + j; ++i) den *= q_integer(i, q);
        return den.reciprocal();
    };
    auto g = [N, q](int j) { return q_integer(N + j, q); };
    auto h = [](int) { return BigRat(1); };
    FamilySpec spec{FamilyKind::QBernoulli, N, q, w.lo(), w.hi()};
    return Family{spec, spec.label(), ReciprocalFamily(w, 1, a), GHForm(w, 1, g, h), true};
}

inline Family make_q_cauchy(int N, const BigRat& q,
                            CoefficientWindow w = CoefficientWindow::unbounded()) {
    if (N < 1) throw std::domain_error("qcauchy: N must be >= 1");
    detail::require_q_regular(q, N + 1, w.hi() ? std::optional<int>(N + *w.hi()) : std::nullopt,
                              "qcauchy");
    auto a = [N, q](int j) {
        BigRat v = q_integer(N, q) / q_integer(N + j, q);
        return (j % 2 == 0) ? v : -v;
    };
    auto g = [N, q](int j) { return q_integer(N + j, q); };
    auto h = [N, q](int j) { return -q_integer(N + j - 1, q); };
    FamilySpec spec{FamilyKind::QCauchy, N, q, w.lo(), w.hi()};
    return Family{spec, spec.label(), ReciprocalFamily(w, 1, a), GHForm(w, 1, g, h), true};
}

inline Family make_q_euler_first(int N, const BigRat& q,
                                 CoefficientWindow w = CoefficientWindow::unbounded()) {
    if (N < 0) throw std::domain_error("qeuler-first: N must be >= 0");
    detail::require_q_regular(q, 2 * N + 1,
                              w.hi() ? std::optional<int>(2 * N + 2 * *w.hi()) : std::nullopt,
                              "qeuler-first");
    // [2N]_q!/[2N+2j]_q! reduced to 1/([2N+1]_q ... [2N+2j]_q)
    auto a = [N, q](int j) {
        BigRat den = 1;
        for (int i = 2 * N + 1; i <= 2 * N + 2 * j; ++i) den *= q_integer(i, q);
        return den.reciprocal();
    };
    auto g = [N, q](int j) {
        return q_integer(2 * N + 2 * j - 1, q) * q_integer(2 * N + 2 * j, q);
    };
    auto h = [](int) { return BigRat(1); };
    FamilySpec spec{FamilyKind::QEulerFirst, N, q, w.lo(), w.hi()};
    return Family{spec, spec.label(), ReciprocalFamily(w, 2, a), GHForm(w, 2, g, h), true};
}

inline Family make_q_euler_second(int N, const BigRat& q,
                                  CoefficientWindow w = CoefficientWindow::unbounded()) {
    if (N < 0) throw std::domain_error("qeuler-second: N must be >= 0");
    detail::require_q_regular(q, 2 * N + 2,
                              w.hi() ? std::optional<int>(2 * N + 2 * *w.hi() + 1) : std::nullopt,
                              "qeuler-second");
    // [2N+1]_q!/[2N+2j+1]_q! reduced to 1/([2N+2]_q ... [2N+2j+1]_q)
    auto a = [N, q](int j) {
        BigRat den = 1;
        for (int i = 2 * N + 2; i <= 2 * N + 2 * j + 1; ++i) den *= q_integer(i, q);
        return den.reciprocal();
    };
    auto g = [N, q](int j) {
        return q_integer(2 * N + 2 * j, q) * q_integer(2 * N + 2 * j + 1, q);
    };
    auto h = [](int) { return BigRat(1); };
    FamilySpec spec{FamilyKind::QEulerSecond, N, q, w.lo(), w.hi()};
    return Family{spec, spec.label(), ReciprocalFamily(w, 2, a), GHForm(w, 2, g, h), true};
}

/// Incomplete q-Lehmer-Euler family: coefficients 1/[3N+3j]_q! on the
/// window, grade 3. The generator pair absorbs [3N]_q! into g_1 so that
/// g_1...g_j = [3N+3j]_q! exactly, matching the displayed continued fraction
/// (first denominator [3N+3r]_q!).
inline Family make_lehmer_incomplete(int N, const BigRat& q, CoefficientWindow w) {
    if (N < 0) throw std::domain_error("lehmer: N must be >= 0");
    // coefficients are reciprocal full factorials, so every index from 2 up
    // to [3N+3R]_q must be nonzero
    detail::require_q_regular(q, 2,
                              w.hi() ? std::optional<int>(3 * N + 3 * *w.hi()) : std::nullopt,
                              "lehmer");
    auto a = [N, q](int j) { return q_factorial(3 * N + 3 * j, q).reciprocal(); };
    auto g = [N, q](int j) {
        if (j == 1) return q_factorial(3 * N + 3, q);
        return q_integer(3 * N + 3 * j - 2, q) * q_integer(3 * N + 3 * j - 1, q) *
               q_integer(3 * N + 3 * j, q);
    };
    auto h = [](int) { return BigRat(1); };
    FamilySpec spec{FamilyKind::LehmerIncomplete, N, q, w.lo(), w.hi()};
    return Family{spec, spec.label(), ReciprocalFamily(w, 3, a), GHForm(w, 3, g, h), true};
}

// ---------------------------------------------------------------------------
// Determinantal hyperharmonic families (ordinary generating functions, no
// factorial normalization, no generator pair -- their continued fraction
// support goes through the generic evaluator only).
// ---------------------------------------------------------------------------

inline Family make_det_hyperharmonic_full(int r_hh, int m, CoefficientWindow w, FamilyKind kind) {
    if (r_hh < 0) throw std::domain_error("dethh: order must be >= 0");
    if (m < 1) throw std::domain_error("dethh: shift m must be >= 1");
    auto a = [r_hh, m](int j) {
        BigRat v = hyperharmonic(m + j - 1, r_hh);
        return (j % 2 == 0) ? v : -v;
    };
    FamilySpec spec;
    spec.kind = kind;
    spec.r_hh = r_hh;
    spec.m = m;
    spec.ell = w.hi().value_or(1);
    spec.r = w.lo();
    spec.R = w.hi();
    return Family{spec, spec.label(), ReciprocalFamily(w, 1, a), std::nullopt, false};
}

inline Family make_det_hyperharmonic(int r_hh) {
    return make_det_hyperharmonic_full(r_hh, 1, CoefficientWindow::unbounded(),
                                       FamilyKind::DetHyperharmonic);
}
inline Family make_det_hyperharmonic_restricted(int r_hh, int ell) {
    return make_det_hyperharmonic_full(r_hh, 1, CoefficientWindow::finite(1, ell),
                                       FamilyKind::RestrictedDetHH);
}
inline Family make_det_hyperharmonic_shifted(int r_hh, int m) {
    return make_det_hyperharmonic_full(r_hh, m, CoefficientWindow::unbounded(),
                                       FamilyKind::ShiftedDetHH);
}
inline Family make_det_hyperharmonic_restricted_shifted(int r_hh, int m, int ell) {
    return make_det_hyperharmonic_full(r_hh, m, CoefficientWindow::finite(1, ell),
                                       FamilyKind::RestrictedShiftedDetHH);
}

inline Family instantiate(const FamilySpec& s) {
    auto window = [&] {
        return s.R ? CoefficientWindow::finite(s.r, *s.R) : CoefficientWindow::unbounded(s.r);
    };
    switch (s.kind) {
        case FamilyKind::QBernoulli: return make_q_bernoulli(s.N, s.q, window());
        case FamilyKind::QCauchy: return make_q_cauchy(s.N, s.q, window());
        case FamilyKind::QEulerFirst: return make_q_euler_first(s.N, s.q, window());
        case FamilyKind::QEulerSecond: return make_q_euler_second(s.N, s.q, window());
        case FamilyKind::LehmerIncomplete: return make_lehmer_incomplete(s.N, s.q, window());
        case FamilyKind::DetHyperharmonic: return make_det_hyperharmonic(s.r_hh);
        case FamilyKind::RestrictedDetHH:
            return make_det_hyperharmonic_restricted(s.r_hh, s.ell);
        case FamilyKind::ShiftedDetHH: return make_det_hyperharmonic_shifted(s.r_hh, s.m);
        case FamilyKind::RestrictedShiftedDetHH:
            return make_det_hyperharmonic_restricted_shifted(s.r_hh, s.m, s.ell);
    }
    throw std::domain_error("instantiate: unknown family kind");
}

// ---------------------------------------------------------------------------
// Scalar number operations
// ---------------------------------------------------------------------------

inline BigRat q_bernoulli(int N, int n, const BigRat& q) {
    return make_q_bernoulli(N, q).number(n);
}

inline BigRat q_cauchy(int N, int n, const BigRat& q) { return make_q_cauchy(N, q).number(n); }

/// E_{N,n}; zero for odd n (even series).
inline BigRat q_euler_first(int N, int n, const BigRat& q) {
    if (n < 0) throw std::domain_error("qeuler-first: n must be >= 0");
    if (n % 2 != 0) return 0;
    return make_q_euler_first(N, q).number(n / 2);
}

inline BigRat q_euler_second(int N, int n, const BigRat& q) {
    if (n < 0) throw std::domain_error("qeuler-second: n must be >= 0");
    if (n % 2 != 0) return 0;
    return make_q_euler_second(N, q).number(n / 2);
}

/// W*_{3n} for the window [r, R] (R may be unbounded).
inline BigRat lehmer_incomplete(int N, int r, std::optional<int> R, int n, const BigRat& q) {
    CoefficientWindow w = R ? CoefficientWindow::finite(r, *R) : CoefficientWindow::unbounded(r);
    return make_lehmer_incomplete(N, q, w).number(n);
}

inline BigRat det_hyperharmonic(int r_hh, int n) { return make_det_hyperharmonic(r_hh).number(n); }
inline BigRat det_hyperharmonic_restricted(int r_hh, int ell, int n) {
    return make_det_hyperharmonic_restricted(r_hh, ell).number(n);
}
inline BigRat det_hyperharmonic_shifted(int r_hh, int m, int n) {
    return make_det_hyperharmonic_shifted(r_hh, m).number(n);
}
inline BigRat det_hyperharmonic_restricted_shifted(int r_hh, int m, int ell, int n) {
    return make_det_hyperharmonic_restricted_shifted(r_hh, m, ell).number(n);
}

// ---------------------------------------------------------------------------
// Closed generating forms for the hyperharmonic families
// ---------------------------------------------------------------------------

/// 1 - log(1+x)/(1+x)^r as a truncated series; its coefficients are
/// 1, (-1)^j H_j^{(r)}.
inline TruncSeries hh_closed_gf(int r, int order) {
    TruncSeries one = TruncSeries::from_poly(Poly(1), order);
    return one - log1p_series(order) * binomial_pow_series(-r, order);
}

inline bool hh_gf_consistency(int r, int order) {
    const TruncSeries s = hh_closed_gf(r, order);
    if (!s.coeff(0).is_one()) return false;
    for (int j = 1; j <= order; ++j) {
        BigRat want = hyperharmonic(j, r);
        if (j % 2 != 0) want = -want;
        if (!(s.coeff(j) == want)) return false;
    }
    return true;
}

/// Partial polylogarithm sum L_k^{(r)}(z) = sum_{i=1..k} z^i/i^r, evaluated
/// at z = -x, as a polynomial in x.
inline Poly polylog_partial_neg(int k, int r) {
    std::vector<BigRat> c(k + 1, BigRat(0));
    for (int i = 1; i <= k; ++i) {
        BigRat den = pow(BigRat(i), static_cast<unsigned long>(r));
        c[i] = BigRat((i % 2 == 0) ? 1 : -1) / den;
    }
    return Poly(std::move(c));
}

/// Closed generating form of the restricted shifted family as an exact
/// rational function over (1+x)^r:
///
///   1 - x sum_{i=1..r} H_{m-1}^{(i)}/(1+x)^{r-i+1}
///     - (-x)^{l+1} sum_{i=1..r} H_{m+l-1}^{(i)}/(1+x)^{r-i+1}
///     + (L_{l+m-1}^{(1)}(-x) - L_{m-1}^{(1)}(-x)) / ((-x)^{m-1} (1+x)^r).
///
/// Derived by Abel summation on H_n^{(r)} = H_{n-1}^{(r)} + H_n^{(r-1)}; it
/// reduces to the shifted form as l -> infinity. Expanded, it equals the
/// polynomial 1 + sum_{j=1..l} (-1)^j H_{m+j-1}^{(r)} x^j.
inline RatFunc hh_restricted_shifted_closed_gf(int r_hh, int m, int ell) {
    if (m < 1 || ell < 1)
        throw std::domain_error("hh_restricted_shifted_closed_gf: need m >= 1 and ell >= 1");
    const Poly x = Poly::monomial(1);
    const Poly onepx = Poly(1) + x;
    std::vector<Poly> onepx_pow(r_hh + 1);  // (1+x)^0..(1+x)^r
    onepx_pow[0] = Poly(1);
    for (int i = 1; i <= r_hh; ++i) onepx_pow[i] = onepx_pow[i - 1] * onepx;

    Poly num = onepx_pow[r_hh];
    const Poly neg_x_lp1 = Poly::monomial(ell + 1, BigRat((ell + 1) % 2 == 0 ? 1 : -1));
    for (int i = 1; i <= r_hh; ++i) {
        const Poly& w = onepx_pow[i - 1];
        num -= x * detail::hyperharmonic0(m - 1, i) * w;
        num -= neg_x_lp1 * detail::hyperharmonic0(m + ell - 1, i) * w;
    }
    // (L_{l+m-1}(-x) - L_{m-1}(-x)) / (-x)^{m-1}: the difference has
    // valuation m, so the shift is an exact polynomial division.
    const Poly diff = polylog_partial_neg(ell + m - 1, 1) - polylog_partial_neg(m - 1, 1);
    std::vector<BigRat> shifted(ell + 1, BigRat(0));
    const int parity = (m - 1) % 2;
    for (int j = 1; j <= ell; ++j) {
        BigRat c = diff.coeff(j + m - 1);
        shifted[j] = parity ? -c : c;
    }
    num += Poly(std::move(shifted));
    return RatFunc{num, onepx_pow[r_hh]};
}

/// True iff the closed form matches 1 + sum_{j<=l} (-1)^j H_{m+j-1}^{(r)} x^j
/// through the order (with zero coefficients past l).
inline bool hh_restricted_shifted_gf_consistency(int r_hh, int m, int ell, int order) {
    const TruncSeries s = to_series(hh_restricted_shifted_closed_gf(r_hh, m, ell), order);
    if (!s.coeff(0).is_one()) return false;
    for (int j = 1; j <= order; ++j) {
        BigRat want = 0;
        if (j <= ell) {
            want = hyperharmonic(m + j - 1, r_hh);
            if (j % 2 != 0) want = -want;
        }
        if (!(s.coeff(j) == want)) return false;
    }
    return true;
}

/// Shifted closed generating form (the l -> infinity limit), built from its
/// own display: 1 + (F_{m-1}(x) - log(1+x))/((-x)^{m-1}(1+x)^r)
///                - x sum_{j=1..r} H_{m-1}^{(j)}/(1+x)^{r-j+1}.
inline TruncSeries hh_shifted_closed_gf(int r_hh, int m, int order) {
    if (m < 1) throw std::domain_error("hh_shifted_closed_gf: need m >= 1");
    const int ext = order + m - 1;
    // F_{m-1} - log(1+x) has valuation m; divide by (-x)^{m-1} exactly.
    const TruncSeries log_ext = log1p_series(ext);
    TruncSeries shifted(order);
    const int parity = (m - 1) % 2;
    for (int j = 1; j <= order; ++j) {
        BigRat c = -log_ext.coeff(j + m - 1);
        shifted.set_coeff(j, parity ? -c : c);
    }
    TruncSeries res = TruncSeries::from_poly(Poly(1), order) +
                      shifted * binomial_pow_series(-r_hh, order);
    const TruncSeries xs = TruncSeries::from_poly(Poly::monomial(1), order);
    for (int j = 1; j <= r_hh; ++j) {
        TruncSeries term = xs * binomial_pow_series(-(r_hh - j + 1), order);
        BigRat w = detail::hyperharmonic0(m - 1, j);
        for (int k = 0; k <= order; ++k) res.set_coeff(k, res.coeff(k) - w * term.coeff(k));
    }
    return res;
}

// ---------------------------------------------------------------------------
// The indirect continued fraction for h_n^{(r)} (outer nodes with polynomial
// partial quotients, then the Cauchy-number tail).
// ---------------------------------------------------------------------------

/// Node list of the depth-m tower
///   1/(1 - x/((1+x)^r + x(1+x)^r/(2-x + 2^2 x/(3-2x + ... (m-1)^2 x/(m-(m-1)x))))).
inline std::vector<CFNode> hh_cf_nodes(int r_hh, int depth) {
    if (depth < 1) throw std::domain_error("hh_cf_nodes: depth must be >= 1");
    const Poly x = Poly::monomial(1);
    Poly onepx_r = Poly(1);
    for (int i = 0; i < r_hh; ++i) onepx_r *= Poly(1) + x;
    std::vector<CFNode> nodes;
    nodes.push_back({Poly(1), Poly(1)});
    nodes.push_back({-x, onepx_r});
    if (depth >= 2) {
        nodes.push_back({x * onepx_r, Poly(2) - x});
        for (int k = 2; k < depth; ++k)
            nodes.push_back({Poly(BigRat(static_cast<long>(k) * k)) * x,
                             Poly(k + 1) - Poly(BigRat(k)) * x});
    }
    return nodes;
}

/// Evaluates the tower; the first `depth` coefficients equal h_n^{(r)}
/// (coefficients beyond x^depth are not guaranteed).
inline TruncSeries hh_cf_tower(int r_hh, int depth, int order) {
    return eval_generic_cf(Poly(0), hh_cf_nodes(r_hh, depth), order);
}

}  // namespace qspecial
