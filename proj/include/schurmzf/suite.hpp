#pragma once

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "schurmzf/io.hpp"
#include "schurmzf/verify.hpp"
#include "schurmzf/verify_pieri.hpp"

namespace schurmzf {

struct CriterionResult {
    int index = 0;
    std::string name;
    bool pass = true;
    double elapsed_ms = 0.0;
    double limit_ms = 0.0;
    std::vector<std::string> failures;
    std::vector<std::string> notes;
};

namespace suite_detail {

inline std::vector<Partition> partitions_up_to(int max_size, bool include_empty = false) {
    std::vector<Partition> shapes;
    std::vector<int> acc;
    std::function<void(int, int)> gen = [&](int left, int maxpart) {
        if (!acc.empty() || include_empty) shapes.push_back(Partition(acc));
        for (int p = std::min(left, maxpart); p >= 1; --p) {
            acc.push_back(p);
            gen(left - p, p);
            acc.pop_back();
        }
    };
    gen(max_size, max_size);
    return shapes;
}

inline VarTableau diagonal_constant_tableau(const Partition& shape) {
    std::vector<SymbolWord> rows;
    for (int i = 1; i <= shape.rows(); ++i) {
        SymbolWord row;
        for (int j = 1; j <= shape.part(i); ++j)
            row.push_back("d" + std::to_string(j - i + shape.rows()));
        rows.push_back(std::move(row));
    }
    return {shape, rows};
}

template <class Fn>
CriterionResult run_criterion(int index, const std::string& name, double limit_ms, Fn&& fn) {
    CriterionResult result;
    result.index = index;
    result.name = name;
    result.limit_ms = limit_ms;
    auto start = std::chrono::steady_clock::now();
    try {
        fn(result);
    } catch (const std::exception& e) {
        result.failures.push_back(std::string("exception: ") + e.what());
    }
    auto stop = std::chrono::steady_clock::now();
    result.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    if (result.elapsed_ms > limit_ms)
        result.failures.push_back("time limit exceeded: " + std::to_string(result.elapsed_ms) +
                                  " ms > " + std::to_string(limit_ms) + " ms");
    result.pass = result.failures.empty();
    return result;
}

inline void expect(CriterionResult& r, bool ok, const std::string& what) {
    if (!ok) r.failures.push_back(what);
}

}  // namespace suite_detail

/// Runs the full acceptance battery. Every tolerance and truncation depth is
/// pinned here; exact mode means rational difference literally zero.
inline std::vector<CriterionResult> run_acceptance_suite(int threads = 1) {
    using namespace suite_detail;
    std::vector<CriterionResult> results;
    VerifyOptions exact_opt;
    exact_opt.threads = threads;

    // 1. Finite-depth determinant identity for diagonal-constant tableaux.
    results.push_back(run_criterion(1, "diagonal-constant determinant identity", 5000, [&](CriterionResult& r) {
        Evaluator<ExactMode> ev;
        for (const char* name : {"2,2", "3,2", "3,2,1", "2,2,1"}) {
            Partition shape = Partition::parse(name);
            VarTableau t = diagonal_constant_tableau(shape);
            for (int offset = 0; offset < 3; ++offset) {
                TypedAssignment<ExactMode> a;
                for (const Symbol& sym : t.symbols()) {
                    int d = std::stoi(sym.substr(1));
                    a[sym] = 1 + (d + offset) % 3;
                }
                for (long bound = 2; bound <= 4; ++bound) {
                    auto zeta = ev.schur_zeta(t, a, bound);
                    expect(r, zeta == det_eval(ev, jts_matrix(t), a, bound),
                           std::string(name) + " weak-chain det mismatch at N=" +
                               std::to_string(bound));
                    expect(r, zeta == det_eval(ev, jt_matrix(t), a, bound),
                           std::string(name) + " strict-chain det mismatch at N=" +
                               std::to_string(bound));
                }
            }
        }
    }));

    // 2. Diagonal symmetrization lemma over every shape with at most 7 boxes.
    results.push_back(run_criterion(2, "diagonal lemma |shape| <= 7", 30000, [&](CriterionResult& r) {
        Evaluator<ExactMode> ev;
        std::mt19937 rng(1234);
        for (const Partition& shape : partitions_up_to(7)) {
            VarTableau t = VarTableau::canonical(shape);
            TypedAssignment<ExactMode> a;
            for (const Symbol& sym : t.symbols())
                a[sym] = std::uniform_int_distribution<int>(1, 4)(rng);
            const long bound = 3;
            auto lhs = sum_diag<ExactMode>(
                t, [&](const VarTableau& u) { return ev.schur_zeta(u, a, bound); });
            auto rhs = sum_diag<ExactMode>(t, [&](const VarTableau& u) {
                return rim_alt_sum(ev, u, a, bound, RimFlavor::H);
            });
            expect(r, lhs == rhs, "mismatch on shape " + shape.to_string());
        }
    }));

    // 3. Lattice path cancellation on the (2,2) square at depth 2.
    results.push_back(run_criterion(3, "path identity on (2,2)", 1000, [&](CriterionResult& r) {
        Evaluator<ExactMode> ev;
        VarTableau t(Partition::parse("2,2"), {{"a", "b"}, {"c", "d"}});
        auto half_pow = [](std::int64_t e) {
            mpz_class p;
            mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e));
            mpq_class q(mpz_class(1), p);
            q.canonicalize();
            return q;
        };
        for (auto [A, B, C, D] : std::vector<std::array<std::int64_t, 4>>{
                 {2, 3, 4, 5}, {3, 1, 2, 2}}) {
            TypedAssignment<ExactMode> a{{"a", A}, {"b", B}, {"c", C}, {"d", D}};
            auto census = path_census(ev, t, a, 2);
            expect(r, census.intersecting_signed == half_pow(D) - half_pow(A),
                   "closed form of the crossing sum");
            expect(r, census.nonintersecting_signed == ev.schur_zeta(t, a, 2),
                   "disjoint tuples do not sum to the tableau sum");
            expect(r,
                   rim_alt_sum(ev, t, a, 2, RimFlavor::H) - census.intersecting_signed ==
                       ev.schur_zeta(t, a, 2),
                   "rim sum minus crossings misses the tableau sum");
            auto diag = sum_diag<ExactMode>(t, [&](const VarTableau& u) {
                return path_census(ev, u, a, 2).intersecting_signed;
            });
            expect(r, diag == 0, "diagonal sum of crossings is nonzero");
        }
        TypedAssignment<ExactMode> equal{{"a", 4}, {"b", 2}, {"c", 3}, {"d", 4}};
        expect(r, path_census(ev, t, equal, 2).intersecting_signed == 0,
               "crossing sum does not vanish for a=d");
    }));

    // 4. Extended Jacobi-Trudi families, both orientations, at depth 4.
    results.push_back(run_criterion(4, "extended determinant families", 60000, [&](CriterionResult& r) {
        struct Case { const char* shape; const char* family; };
        for (Case c : {Case{"3,2", "mn"}, Case{"3,2,1", "mn1"}, Case{"3,2,2", "mn2"},
                       Case{"2,2,1", "e-mn1"}, Case{"3,2,1", "e-mn1"},
                       Case{"3,3,1", "e-mn2"}}) {
            Partition shape = Partition::parse(c.shape);
            VarTableau t = VarTableau::canonical(shape);
            Assignment a = default_assignment(row_major_symbols(t), true);
            auto report = verify_extended_jt(c.family, t, a, 4, exact_opt);
            expect(r, report.pass && report.status == "exact_pass",
                   std::string(c.family) + " on " + c.shape + ": " +
                       report.primary().abs_diff);
        }
    }));

    // 5. Star versus non-star determinants of the 2x2 square: exact at depths
    //    2..6 for three assignments, then the float convergence trend.
    results.push_back(run_criterion(5, "star/non-star determinant identity", 30000, [&](CriterionResult& r) {
        VarTableau t(Partition::parse("2,2"), {{"a", "b"}, {"c", "d"}});
        std::vector<Assignment> assignments;
        for (auto [A, B, C, D] : std::vector<std::array<std::int64_t, 4>>{
                 {2, 3, 4, 5}, {1, 2, 2, 3}, {3, 3, 2, 2}}) {
            assignments.push_back(Assignment{{"a", Exponent::make_exact(A)},
                                             {"b", Exponent::make_exact(B)},
                                             {"c", Exponent::make_exact(C)},
                                             {"d", Exponent::make_exact(D)}});
        }
        for (const Assignment& a : assignments)
            for (long bound = 2; bound <= 6; ++bound) {
                auto report = verify_star_nonstar(t, a, bound, exact_opt);
                expect(r, report.pass,
                       "exact mismatch at N=" + std::to_string(bound) + ": " +
                           report.primary().abs_diff);
            }
        VerifyOptions fopt;
        fopt.exact = false;
        fopt.tol = 1e-8;
        fopt.trend_bounds = {10, 20, 40};
        Assignment fa{{"a", Exponent::make_approx({2.0, 0.0})},
                      {"b", Exponent::make_approx({3.0, 0.0})},
                      {"c", Exponent::make_approx({2.5, 0.0})},
                      {"d", Exponent::make_approx({2.0, 0.0})}};
        auto report = verify_star_nonstar(t, fa, 40, fopt);
        expect(r, report.pass, "float trend check failed");
    }));

    // 6. Pushing rule fidelity for (3,2,1) with two boxes.
    results.push_back(run_criterion(6, "pushing rule fidelity", 1000, [&](CriterionResult& r) {
        VarTableau t = VarTableau::canonical(Partition::parse("3,2,1"));
        const std::vector<std::vector<SymbolWord>> expected_h{
            {{"t1", "t2", "s13"}, {"s11", "s12"}, {"s21", "s22"}, {"s31"}},
            {{"t1", "s12", "t2"}, {"s11", "s22", "s13"}, {"s21"}, {"s31"}},
            {{"t1", "s12", "s13", "t2"}, {"s11", "s22"}, {"s21"}, {"s31"}},
            {{"s11", "t1", "t2"}, {"s21", "s12", "s13"}, {"s31", "s22"}},
            {{"s11", "t1", "s13", "t2"}, {"s21", "s12"}, {"s31", "s22"}},
            {{"s11", "s12", "t1", "t2"}, {"s21", "s22", "s13"}, {"s31"}},
            {{"s11", "s12", "s13", "t1", "t2"}, {"s21", "s22"}, {"s31"}},
        };
        const std::vector<std::vector<SymbolWord>> expected_e{
            {{"t1", "s11", "s12", "s13"}, {"t2", "s21", "s22"}, {"s31"}},
            {{"t1", "s11", "s12", "s13"}, {"s21", "s22"}, {"t2", "s31"}},
            {{"t1", "s11", "s12", "s13"}, {"s21", "s22"}, {"s31"}, {"t2"}},
            {{"s11", "s12", "s13"}, {"t1", "s21", "s22"}, {"t2", "s31"}},
            {{"s11", "s12", "s13"}, {"t1", "s21", "s22"}, {"s31"}, {"t2"}},
            {{"s11", "s12", "s13"}, {"s21", "s22"}, {"t1", "s31"}, {"t2"}},
            {{"s11", "s12", "s13"}, {"s21", "s22"}, {"s31"}, {"t1"}, {"t2"}},
        };
        auto check_side = [&](RimFlavor flavor, const std::vector<std::vector<SymbolWord>>& want,
                              const char* label) {
            auto outcomes = push(t, {"t1", "t2"}, flavor);
            expect(r, outcomes.size() == 7, std::string(label) + ": wrong count");
            for (std::size_t i = 0; i < outcomes.size() && i < want.size(); ++i)
                expect(r, outcomes[i].tableau.rows == want[i],
                       std::string(label) + ": tableau " + std::to_string(i + 1) +
                           " differs");
        };
        check_side(RimFlavor::H, expected_h, "row push");
        check_side(RimFlavor::E, expected_e, "column push");
    }));

    // 7. Hook Pieri products, both orientations, exact at depth 4.
    results.push_back(run_criterion(7, "hook Pieri products", 60000, [&](CriterionResult& r) {
        struct Case { const char* kind; int ell, k, m; };
        for (Case c : {Case{"hook_h", 2, 1, 1}, Case{"hook_h", 2, 2, 2},
                       Case{"hook_e", 1, 2, 1}, Case{"hook_e", 2, 2, 2}}) {
            PieriParams p;
            p.kind = c.kind;
            p.ell = c.ell;
            p.k = c.k;
            p.m = c.m;
            Assignment a = default_pieri_assignment(p, true);
            auto report = verify_pieri(p, a, 4, exact_opt);
            std::ostringstream label;
            label << c.kind << "(" << c.ell << "," << c.k << "," << c.m << ")";
            expect(r, report.pass && report.status == "exact_pass",
                   label.str() + ": " + report.primary().abs_diff);
            r.notes.push_back(label.str() + " sym_terms=" +
                              std::to_string(report.counts[0].second));
        }
    }));

    // 8. Hook-column error terms: vanishing specializations and a generic
    //    nonzero witness.
    results.push_back(run_criterion(8, "hook-column error vanishing", 30000, [&](CriterionResult& r) {
        Evaluator<ExactMode> ev;
        for (int k : {2, 3}) {
            for (std::int64_t base : {2, 3}) {
                TypedAssignment<ExactMode> a;
                for (int i = 1; i <= k; ++i) a["x" + std::to_string(i)] = base;
                a["y"] = 4;
                for (int i = 1; i < k; ++i) a["z" + std::to_string(i)] = base;
                a["z" + std::to_string(k)] = 5;
                expect(r, pieri_error_k(ev, k, a, 5) == 0,
                       "specialized error nonzero for k=" + std::to_string(k) +
                           " a=" + std::to_string(base));
            }
        }
        TypedAssignment<ExactMode> generic{{"x1", 2}, {"x2", 3}, {"y", 4},
                                           {"z1", 5}, {"z2", 2}};
        mpq_class residue = pieri_error_k(ev, 2, generic, 4);
        expect(r, residue != 0, "generic error unexpectedly vanished");
        r.notes.push_back("generic k=2 error at N=4: " + rational_string(residue));
        TypedAssignment<ExactMode> klm{{"x1", 2}, {"x2", 2}, {"y1", 3}, {"y2", 4},
                                       {"z1", 2}, {"z2", 5}, {"z3", 3}};
        expect(r, pieri_error_klm(ev, 2, 2, 3, klm, 5) == 0,
               "generalized error nonzero under its specialization");
    }));

    // 9. Constant-exponent products against the classical rule and the
    //    polynomial oracle.
    results.push_back(run_criterion(9, "constant-exponent products", 10000, [&](CriterionResult& r) {
        for (RimFlavor flavor : {RimFlavor::H, RimFlavor::E}) {
            PieriParams p;
            p.kind = "constant_s";
            p.shape = Partition::parse("2,1");
            p.s = 2;
            p.m = 2;
            p.flavor = flavor;
            auto report = verify_pieri(p, default_pieri_assignment(p, true), 6, exact_opt);
            expect(r, report.pass && report.status == "exact_pass",
                   std::string(flavor == RimFlavor::H ? "row" : "column") +
                       " multiplier failed");
        }
    }));

    // 10. The (3,2,1) x (1) product under the six-symbol symmetrization.
    results.push_back(run_criterion(10, "(3,2,1) x (1) full symmetrization", 120000, [&](CriterionResult& r) {
        PieriParams p;
        p.kind = "m2_hook_h";
        p.m = 3;
        p.X = 3;
        p.ell = 1;
        Assignment a = default_pieri_assignment(p, true);
        auto report = verify_pieri(p, a, 4, exact_opt);
        expect(r, report.pass && report.status == "exact_pass",
               "720-term symmetrization failed: " + report.primary().abs_diff);
        expect(r, report.counts[0].second == 720, "expected 720 permutation terms");
    }));

    // 11. Oracle battery: enumeration counts and the constant-exponent
    //     identification across both evaluation pipelines.
    results.push_back(run_criterion(11, "oracle battery", 30000, [&](CriterionResult& r) {
        std::vector<Partition> shapes = partitions_up_to(6);
        int pairs = 0;
        for (std::size_t i = 0; i < shapes.size() && pairs < 40; ++i)
            for (long bound : {3L, 5L}) {
                if (pairs++ >= 40) break;
                long count = 0;
                for (SsytEnumerator en(shapes[i], bound); en.valid(); en.advance()) ++count;
                expect(r, count_ssyt(shapes[i], bound) == count,
                       "count mismatch on " + shapes[i].to_string());
            }
        Evaluator<ExactMode> ev;
        for (const Partition& shape : shapes) {
            std::vector<SymbolWord> rows;
            for (int i = 1; i <= shape.rows(); ++i)
                rows.push_back(SymbolWord(static_cast<std::size_t>(shape.part(i)), "s"));
            VarTableau t(shape, rows);
            for (std::int64_t s : {2, 3}) {
                TypedAssignment<ExactMode> a{{"s", s}};
                for (long bound = 1; bound <= 6; ++bound)
                    expect(r, ev.schur_zeta(t, a, bound) == ev.schur_poly(shape, s, bound),
                           "identification fails on " + shape.to_string());
            }
        }
    }));

    return results;
}

/// Prints one pass/fail line per criterion; returns the number of failures.
inline int print_suite_results(const std::vector<CriterionResult>& results, std::ostream& out) {
    int failed = 0;
    for (const CriterionResult& r : results) {
        out << (r.pass ? "[PASS]" : "[FAIL]") << " criterion " << r.index << ": " << r.name
            << " (" << static_cast<long>(r.elapsed_ms) << " ms, limit "
            << static_cast<long>(r.limit_ms) << " ms)\n";
        for (const std::string& note : r.notes) out << "       note: " << note << "\n";
        for (const std::string& failure : r.failures) out << "       " << failure << "\n";
        if (!r.pass) ++failed;
    }
    out << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
        << "\n";
    return failed;
}

inline nlohmann::ordered_json suite_json(const std::vector<CriterionResult>& results) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const CriterionResult& r : results) {
        nlohmann::ordered_json j;
        j["criterion"] = r.index;
        j["name"] = r.name;
        j["pass"] = r.pass;
        j["elapsed_ms"] = r.elapsed_ms;
        j["limit_ms"] = r.limit_ms;
        j["failures"] = r.failures;
        j["notes"] = r.notes;
        arr.push_back(std::move(j));
    }
    return arr;
}

}  // namespace schurmzf
