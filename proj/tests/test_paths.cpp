#include <catch2/catch_amalgamated.hpp>

#include <functional>

#include "schurmzf/lattice_paths.hpp"
#include "schurmzf/verify.hpp"

using namespace schurmzf;

namespace {

mpq_class inv_pow2(std::int64_t e) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e));
    mpq_class q(mpz_class(1), p);
    q.canonicalize();
    return q;
}

}  // namespace

TEST_CASE("path census of the (2,2) square at depth two") {
    VarTableau t(Partition::parse("2,2"), {{"a", "b"}, {"c", "d"}});
    Evaluator<ExactMode> ev;

    // two instantiations; the crossing sum is 2^{-d} - 2^{-a}
    for (auto [A, B, C, D] : std::vector<std::array<std::int64_t, 4>>{
             {2, 3, 4, 5}, {1, 2, 3, 4}}) {
        TypedAssignment<ExactMode> a{{"a", A}, {"b", B}, {"c", C}, {"d", D}};
        PathCensus<ExactMode> census = path_census(ev, t, a, 2);
        CHECK(census.intersecting_signed == inv_pow2(D) - inv_pow2(A));
        CHECK(census.nonintersecting_signed == ev.schur_zeta(t, a, 2));
        CHECK(census.all_signed == rim_alt_sum(ev, t, a, 2, RimFlavor::H));
        CHECK(census.nonintersecting_all_identity);
    }

    // vanishes when a = d
    TypedAssignment<ExactMode> equal{{"a", 3}, {"b", 2}, {"c", 4}, {"d", 3}};
    CHECK(path_census(ev, t, equal, 2).intersecting_signed == 0);
}

TEST_CASE("single rows admit no crossings") {
    VarTableau t = VarTableau::canonical(Partition::parse("3"));
    Evaluator<ExactMode> ev;
    TypedAssignment<ExactMode> a{{"s11", 2}, {"s12", 3}, {"s13", 1}};
    PathCensus<ExactMode> census = path_census(ev, t, a, 4);
    CHECK(census.intersecting == 0);
    CHECK(census.intersecting_signed == 0);
    CHECK(census.all_signed == ev.zeta_star({2, 3, 1}, 4));
}

TEST_CASE("census matches the rim sum on small shapes") {
    Evaluator<ExactMode> ev;
    std::vector<int> acc;
    std::function<void(int, int)> gen = [&](int left, int maxpart) {
        if (!acc.empty()) {
            Partition shape(acc);
            VarTableau t = VarTableau::canonical(shape);
            TypedAssignment<ExactMode> a;
            int k = 0;
            for (const Symbol& sym : t.symbols()) a[sym] = 1 + (k++ % 3);
            for (long bound = 1; bound <= 3; ++bound) {
                PathCensus<ExactMode> census = path_census(ev, t, a, bound);
                REQUIRE(census.all_signed == rim_alt_sum(ev, t, a, bound, RimFlavor::H));
                REQUIRE(census.nonintersecting_signed == ev.schur_zeta(t, a, bound));
            }
        }
        for (int p = std::min(left, maxpart); p >= 1; --p) {
            acc.push_back(p);
            gen(left - p, p);
            acc.pop_back();
        }
    };
    gen(6, 6);
}

TEST_CASE("path identity verifier") {
    VerifyOptions opt;
    VarTableau t(Partition::parse("2,2"), {{"a", "b"}, {"c", "d"}});
    Assignment a{{"a", Exponent::make_exact(2)},
                 {"b", Exponent::make_exact(3)},
                 {"c", Exponent::make_exact(4)},
                 {"d", Exponent::make_exact(5)}};
    auto report = verify_path_identity(t, a, 2, opt);
    CHECK(report.pass);
    CHECK(report.checks.size() == 4);

    VerifyOptions tiny = opt;
    tiny.budget = 3;
    CHECK_THROWS_AS(verify_path_identity(t, a, 2, tiny), budget_error);
}
