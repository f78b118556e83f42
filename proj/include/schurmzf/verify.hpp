#pragma once

#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "schurmzf/jacobi_trudi.hpp"
#include "schurmzf/lattice_paths.hpp"
#include "schurmzf/partition.hpp"
#include "schurmzf/pieri.hpp"
#include "schurmzf/report.hpp"
#include "schurmzf/rims.hpp"
#include "schurmzf/series.hpp"
#include "schurmzf/ssyt.hpp"
#include "schurmzf/tableau.hpp"

namespace schurmzf {

struct VerifyOptions {
    bool exact = true;
    double tol = 1e-8;
    int threads = 1;
    long long budget = 50000000;
    DiagMode diag_mode = DiagMode::Full;
    bool symmetrize = true;           // pieri: apply the stated symmetrization
    std::vector<Symbol> sym_symbols;  // optional override of the symmetrized set
    std::vector<long> trend_bounds;   // float mode: extra truncation depths
};

/// Deterministic fallback exponents when no assignment file is given:
/// the values 2,3,4,5 cycle over the symbols in the order listed.
inline Assignment default_assignment(const std::vector<Symbol>& symbols, bool exact) {
    Assignment a;
    int k = 0;
    for (const Symbol& sym : symbols) {
        if (a.count(sym)) continue;
        std::int64_t value = 2 + (k++ % 4);
        a[sym] = exact ? Exponent::make_exact(value)
                       : Exponent::make_approx({static_cast<double>(value), 0.0});
    }
    return a;
}

inline std::vector<Symbol> row_major_symbols(const VarTableau& t) {
    std::vector<Symbol> out;
    for (const auto& row : t.rows)
        for (const Symbol& sym : row)
            if (std::find(out.begin(), out.end(), sym) == out.end()) out.push_back(sym);
    return out;
}

namespace detail {

template <class Mode>
CheckLine make_check(const std::string& name, const typename Mode::Scalar& lhs,
                     const typename Mode::Scalar& rhs, double tol) {
    CheckLine line;
    line.name = name;
    line.lhs_decimal = ScalarOps<Mode>::decimal(lhs);
    line.rhs_decimal = ScalarOps<Mode>::decimal(rhs);
    line.lhs_rational = ScalarOps<Mode>::exact(lhs);
    line.rhs_rational = ScalarOps<Mode>::exact(rhs);
    auto diff = ScalarOps<Mode>::abs_diff(lhs, rhs);
    if constexpr (std::is_same_v<Mode, ExactMode>) {
        line.abs_diff = rational_string(diff);
        mpq_class denom = std::max(abs(lhs), abs(rhs));
        line.rel_diff = sgn(denom) == 0 ? "0" : decimal_string(mpq_class(diff / denom), 17);
        line.pass = sgn(diff) == 0;
        (void)tol;
    } else {
        double denom = std::max(ScalarOps<Mode>::magnitude(lhs), ScalarOps<Mode>::magnitude(rhs));
        double rel = denom == 0.0 ? 0.0 : diff / denom;
        line.abs_diff = decimal_string(diff);
        line.rel_diff = decimal_string(rel);
        line.pass = denom < 1e-300 ? diff <= tol : rel <= tol;
    }
    return line;
}

inline void finalize(VerificationReport& report, bool exact) {
    report.pass = !report.checks.empty();
    for (const CheckLine& line : report.checks) report.pass = report.pass && line.pass;
    if (report.status.empty())
        report.status = report.pass ? (exact ? "exact_pass" : "float_pass") : "fail";
}

template <class Fn>
VerificationReport timed(Fn&& fn) {
    auto start = std::chrono::steady_clock::now();
    VerificationReport report = fn();
    auto stop = std::chrono::steady_clock::now();
    report.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    return report;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Extended Jacobi-Trudi families.
// ---------------------------------------------------------------------------

/// Supported determinant families, named by shape pattern. H side: mn = (m,n),
/// mn1 = (m,n,{1}^{X-2}), mn2 = (m,n,{2}^{X-2}). E side: the conjugates
/// e-mn1 = (X,{2}^{n-1},{1}^{m-n}) and e-mn2 = ({X}^2,{2}^{n-2},{1}^{m-n}).
inline std::string detect_jt_family(const Partition& shape) {
    auto fits_h = [](const Partition& p) -> std::string {
        int r = p.rows();
        if (r <= 2) return "mn";
        bool all_one = true, all_two = true;
        for (int i = 3; i <= r; ++i) {
            if (p.part(i) != 1) all_one = false;
            if (p.part(i) != 2) all_two = false;
        }
        if (all_one) return "mn1";
        if (all_two && p.part(2) >= 2) return "mn2";
        return {};
    };
    if (std::string f = fits_h(shape); !f.empty()) return f;
    if (std::string f = fits_h(shape.conjugate()); !f.empty())
        return f == "mn2" ? "e-mn2" : "e-mn1";
    throw input_error("shape " + shape.to_string() + " fits no extended Jacobi-Trudi family");
}

namespace detail {

template <class Mode>
VerificationReport verify_extended_jt_impl(const std::string& family, const VarTableau& t,
                                           const TypedAssignment<Mode>& a, long bound,
                                           const VerifyOptions& opt) {
    using Scalar = typename Mode::Scalar;
    Evaluator<Mode> ev;
    const bool e_side = family.rfind("e-", 0) == 0;
    const bool with_error = family == "mn2" || family == "e-mn2";
    const RimFlavor flavor = e_side ? RimFlavor::E : RimFlavor::H;

    Scalar lhs = sum_diag<Mode>(
        t, [&](const VarTableau& u) { return ev.schur_zeta(u, a, bound); }, opt.diag_mode);
    Scalar rhs = sum_diag<Mode>(
        t,
        [&](const VarTableau& u) {
            const DetSpec spec = e_side ? jt_matrix(u) : jts_matrix(u);
            Scalar value = det_eval(ev, spec, a, bound);
            if (with_error) value += jtse_def(ev, u, a, bound, flavor);
            return value;
        },
        opt.diag_mode);

    VerificationReport report;
    report.identity = "extended-jt:" + family;
    report.shape = t.shape.to_string();
    report.bound = bound;
    report.mode = Mode::name();
    report.checks.push_back(make_check<Mode>("sum_diag_zeta=sum_diag_det", lhs, rhs, opt.tol));

    if (!with_error) {
        Scalar err = jtse_def(ev, t, a, bound, flavor);
        report.checks.push_back(
            make_check<Mode>(e_side ? "jte_def=0" : "jtse_def=0", err, Mode::zero(), opt.tol));
    } else {
        const Partition hshape = e_side ? t.shape.conjugate() : t.shape;
        const int m = hshape.part(1), n = hshape.part(2), X = hshape.rows();
        Scalar rec = e_side ? jte_recursive(ev, m, n, X, t, a, bound)
                            : jtse_recursive(ev, m, n, X, t, a, bound);
        Scalar def = jtse_def(ev, t, a, bound, flavor);
        report.checks.push_back(make_check<Mode>(
            e_side ? "jte_recursive=jte_def" : "jtse_recursive=jtse_def", rec, def, opt.tol));
    }

    report.counts.emplace_back("diag_terms", sum_diag_term_count(t.shape, opt.diag_mode));
    report.counts.emplace_back("ssyt", count_ssyt(t.shape, bound).get_si());
    report.counts.emplace_back("rim_decompositions",
                               static_cast<long long>((e_side ? enumerate_e_rims(t.shape)
                                                              : enumerate_h_rims(t.shape))
                                                          .size()));
    finalize(report, opt.exact);
    return report;
}

}  // namespace detail

inline VerificationReport verify_extended_jt(const std::string& family, const VarTableau& t,
                                             const Assignment& a, long bound,
                                             const VerifyOptions& opt) {
    require_total(t, a);
    return detail::timed([&] {
        if (opt.exact)
            return detail::verify_extended_jt_impl<ExactMode>(
                family, t, narrow_assignment<ExactMode>(a), bound, opt);
        return detail::verify_extended_jt_impl<FloatMode>(
            family, t, narrow_assignment<FloatMode>(a), bound, opt);
    });
}

// ---------------------------------------------------------------------------
// Diagonal symmetrization lemma.
// ---------------------------------------------------------------------------

namespace detail {

template <class Mode>
VerificationReport verify_lemma_diag_impl(const VarTableau& t, const TypedAssignment<Mode>& a,
                                          long bound, const VerifyOptions& opt) {
    Evaluator<Mode> ev;
    auto lhs = sum_diag<Mode>(
        t, [&](const VarTableau& u) { return ev.schur_zeta(u, a, bound); }, opt.diag_mode);
    auto rhs = sum_diag<Mode>(
        t, [&](const VarTableau& u) { return rim_alt_sum(ev, u, a, bound, RimFlavor::H); },
        opt.diag_mode);

    VerificationReport report;
    report.identity = "lemma-diag";
    report.shape = t.shape.to_string();
    report.bound = bound;
    report.mode = Mode::name();
    report.checks.push_back(
        make_check<Mode>("sum_diag_zeta=sum_diag_rim_alt_sum", lhs, rhs, opt.tol));
    report.counts.emplace_back("diag_terms", sum_diag_term_count(t.shape, opt.diag_mode));
    report.counts.emplace_back("h_rims",
                               static_cast<long long>(enumerate_h_rims(t.shape).size()));
    report.counts.emplace_back("ssyt", count_ssyt(t.shape, bound).get_si());
    finalize(report, opt.exact);
    return report;
}

}  // namespace detail

inline VerificationReport verify_lemma_diag(const VarTableau& t, const Assignment& a, long bound,
                                            const VerifyOptions& opt) {
    require_total(t, a);
    return detail::timed([&] {
        if (opt.exact)
            return detail::verify_lemma_diag_impl<ExactMode>(t, narrow_assignment<ExactMode>(a),
                                                             bound, opt);
        return detail::verify_lemma_diag_impl<FloatMode>(t, narrow_assignment<FloatMode>(a),
                                                         bound, opt);
    });
}

// ---------------------------------------------------------------------------
// Lattice path identity.
// ---------------------------------------------------------------------------

namespace detail {

template <class Mode>
VerificationReport verify_path_identity_impl(const VarTableau& t,
                                             const TypedAssignment<Mode>& a, long bound,
                                             const VerifyOptions& opt) {
    Evaluator<Mode> ev;
    PathCensus<Mode> census = path_census(ev, t, a, bound, opt.budget);
    auto zeta = ev.schur_zeta(t, a, bound);
    auto x = rim_alt_sum(ev, t, a, bound, RimFlavor::H);

    VerificationReport report;
    report.identity = "path:rim-cancellation";
    report.shape = t.shape.to_string();
    report.bound = bound;
    report.mode = Mode::name();
    report.checks.push_back(make_check<Mode>("nonintersecting_sum=zeta",
                                             census.nonintersecting_signed, zeta, opt.tol));
    report.checks.push_back(make_check<Mode>(
        "rim_alt_sum-intersecting_sum=zeta",
        typename Mode::Scalar(x - census.intersecting_signed), zeta, opt.tol));
    report.checks.push_back(
        make_check<Mode>("pattern_sum=rim_alt_sum", census.all_signed, x, opt.tol));
    auto diag_of_intersecting = sum_diag<Mode>(
        t,
        [&](const VarTableau& u) {
            return path_census(ev, u, a, bound, opt.budget).intersecting_signed;
        },
        opt.diag_mode);
    report.checks.push_back(make_check<Mode>("sum_diag_intersecting=0", diag_of_intersecting,
                                             Mode::zero(), opt.tol));
    report.counts.emplace_back("pattern_tuples", census.tuples);
    report.counts.emplace_back("intersecting_tuples", census.intersecting);
    report.notes.emplace_back("nonintersecting_types_all_identity",
                              census.nonintersecting_all_identity ? "true" : "false");
    finalize(report, opt.exact);
    return report;
}

}  // namespace detail

inline VerificationReport verify_path_identity(const VarTableau& t, const Assignment& a,
                                               long bound, const VerifyOptions& opt) {
    require_total(t, a);
    return detail::timed([&] {
        if (opt.exact)
            return detail::verify_path_identity_impl<ExactMode>(
                t, narrow_assignment<ExactMode>(a), bound, opt);
        return detail::verify_path_identity_impl<FloatMode>(
            t, narrow_assignment<FloatMode>(a), bound, opt);
    });
}

// ---------------------------------------------------------------------------
// Star versus non-star determinant identity.
// ---------------------------------------------------------------------------

namespace detail {

template <class Mode>
VerificationReport verify_star_nonstar_impl(const VarTableau& t,
                                            const TypedAssignment<Mode>& a, long bound,
                                            const VerifyOptions& opt) {
    using Scalar = typename Mode::Scalar;
    Evaluator<Mode> ev;
    auto star_side = [&](long depth) {
        return sum_diag<Mode>(
            t, [&](const VarTableau& u) { return det_eval(ev, jts_matrix(u), a, depth); },
            opt.diag_mode);
    };
    auto nonstar_side = [&](long depth) {
        return sum_diag<Mode>(
            t, [&](const VarTableau& u) { return det_eval(ev, jt_matrix(u), a, depth); },
            opt.diag_mode);
    };

    VerificationReport report;
    report.identity = "star-nonstar";
    report.shape = t.shape.to_string();
    report.bound = bound;
    report.mode = Mode::name();
    Scalar lhs = star_side(bound), rhs = nonstar_side(bound);
    report.checks.push_back(make_check<Mode>("sum_diag_jts=sum_diag_jt", lhs, rhs, opt.tol));
    Scalar zeta_route = sum_diag<Mode>(
        t, [&](const VarTableau& u) { return ev.schur_zeta(u, a, bound); }, opt.diag_mode);
    report.checks.push_back(make_check<Mode>("sum_diag_jts=sum_diag_zeta", lhs, zeta_route,
                                             opt.tol));

    if constexpr (std::is_same_v<Mode, FloatMode>) {
        if (!opt.trend_bounds.empty()) {
            // Convergence trend: both sides agree at every depth and the
            // successive truncation increments shrink.
            std::vector<double> lhs_values, rhs_values;
            bool trend_ok = true;
            for (std::size_t i = 0; i < opt.trend_bounds.size(); ++i) {
                long depth = opt.trend_bounds[i];
                Scalar l = star_side(depth), r = nonstar_side(depth);
                lhs_values.push_back(std::abs(l));
                rhs_values.push_back(std::abs(r));
                CheckLine line = make_check<Mode>(
                    "agree_at_N=" + std::to_string(depth), l, r, opt.tol);
                trend_ok = trend_ok && line.pass;
                report.checks.push_back(std::move(line));
                if (i > 0) {
                    double lgap = std::abs(lhs_values[i] - lhs_values[i - 1]);
                    double rgap = std::abs(rhs_values[i] - rhs_values[i - 1]);
                    report.notes.emplace_back(
                        "tail_gap_N=" + std::to_string(depth),
                        decimal_string(lgap) + "," + decimal_string(rgap));
                }
            }
            for (std::size_t i = 2; i < lhs_values.size(); ++i) {
                double prev = std::abs(lhs_values[i - 1] - lhs_values[i - 2]);
                double cur = std::abs(lhs_values[i] - lhs_values[i - 1]);
                CheckLine line;
                line.name = "tail_decreasing_at_" + std::to_string(opt.trend_bounds[i]);
                line.lhs_decimal = decimal_string(cur);
                line.rhs_decimal = decimal_string(prev);
                line.abs_diff = decimal_string(std::abs(prev - cur));
                line.rel_diff = "0";
                line.pass = cur < prev;
                report.checks.push_back(std::move(line));
            }
        }
    }

    report.counts.emplace_back("diag_terms", sum_diag_term_count(t.shape, opt.diag_mode));
    finalize(report, opt.exact);
    return report;
}

}  // namespace detail

/// Shape (m,2,{1}^{X-2}): the weak-chain determinant of the tableau equals the
/// strict-chain determinant of the same tableau under diagonal symmetrization.
inline VerificationReport verify_star_nonstar(const VarTableau& t, const Assignment& a,
                                              long bound, const VerifyOptions& opt) {
    require_total(t, a);
    const Partition& shape = t.shape;
    bool fits = shape.rows() >= 2 && shape.part(2) == 2;
    for (int i = 3; i <= shape.rows(); ++i)
        if (shape.part(i) != 1) fits = false;
    if (!fits)
        throw input_error("star-nonstar expects shape (m,2,{1}^{X-2}), got " + shape.to_string());
    return detail::timed([&] {
        if (opt.exact)
            return detail::verify_star_nonstar_impl<ExactMode>(t, narrow_assignment<ExactMode>(a),
                                                               bound, opt);
        return detail::verify_star_nonstar_impl<FloatMode>(t, narrow_assignment<FloatMode>(a),
                                                           bound, opt);
    });
}

}  // namespace schurmzf
