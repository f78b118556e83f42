#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "schurmzf/pieri.hpp"
#include "schurmzf/verify_pieri.hpp"

using namespace schurmzf;

namespace {

std::vector<std::vector<SymbolWord>> row_lists(const std::vector<PushOutcome>& outcomes) {
    std::vector<std::vector<SymbolWord>> out;
    for (const PushOutcome& o : outcomes) out.push_back(o.tableau.rows);
    return out;
}

}  // namespace

TEST_CASE("row pushes into (3,2,1) reproduce the seven tableaux") {
    VarTableau t = VarTableau::canonical(Partition::parse("3,2,1"));
    auto outcomes = push_h(t, {"t1", "t2"});
    REQUIRE(outcomes.size() == 7);

    std::vector<std::vector<SymbolWord>> expected{
        {{"t1", "t2", "s13"}, {"s11", "s12"}, {"s21", "s22"}, {"s31"}},
        {{"t1", "s12", "t2"}, {"s11", "s22", "s13"}, {"s21"}, {"s31"}},
        {{"t1", "s12", "s13", "t2"}, {"s11", "s22"}, {"s21"}, {"s31"}},
        {{"s11", "t1", "t2"}, {"s21", "s12", "s13"}, {"s31", "s22"}},
        {{"s11", "t1", "s13", "t2"}, {"s21", "s12"}, {"s31", "s22"}},
        {{"s11", "s12", "t1", "t2"}, {"s21", "s22", "s13"}, {"s31"}},
        {{"s11", "s12", "s13", "t1", "t2"}, {"s21", "s22"}, {"s31"}},
    };
    CHECK(row_lists(outcomes) == expected);

    std::vector<std::vector<int>> placements;
    for (const PushOutcome& o : outcomes) placements.push_back(o.positions);
    CHECK(placements == std::vector<std::vector<int>>{
                            {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {4, 5}});
}

TEST_CASE("column pushes into (3,2,1) reproduce the seven tableaux") {
    VarTableau t = VarTableau::canonical(Partition::parse("3,2,1"));
    auto outcomes = push_e(t, {"t1", "t2"});
    REQUIRE(outcomes.size() == 7);

    std::vector<std::vector<SymbolWord>> expected{
        {{"t1", "s11", "s12", "s13"}, {"t2", "s21", "s22"}, {"s31"}},
        {{"t1", "s11", "s12", "s13"}, {"s21", "s22"}, {"t2", "s31"}},
        {{"t1", "s11", "s12", "s13"}, {"s21", "s22"}, {"s31"}, {"t2"}},
        {{"s11", "s12", "s13"}, {"t1", "s21", "s22"}, {"t2", "s31"}},
        {{"s11", "s12", "s13"}, {"t1", "s21", "s22"}, {"s31"}, {"t2"}},
        {{"s11", "s12", "s13"}, {"s21", "s22"}, {"t1", "s31"}, {"t2"}},
        {{"s11", "s12", "s13"}, {"s21", "s22"}, {"s31"}, {"t1"}, {"t2"}},
    };
    CHECK(row_lists(outcomes) == expected);
}

TEST_CASE("single box pushes") {
    VarTableau t(Partition::parse("2,1"), {{"s11", "s12"}, {"s21"}});
    auto h = push_h(t, {"t"});
    std::multiset<std::string> h_shapes;
    for (const PushOutcome& o : h) h_shapes.insert(o.shape.to_string());
    CHECK(h_shapes == std::multiset<std::string>{"2,1,1", "2,2", "3,1"});
    // the pushed box displaces the old column top
    CHECK(h.front().tableau.rows ==
          std::vector<SymbolWord>{{"t", "s12"}, {"s11"}, {"s21"}});

    auto e = push_e(t, {"t"});
    std::multiset<std::string> e_shapes;
    for (const PushOutcome& o : e) e_shapes.insert(o.shape.to_string());
    CHECK(e_shapes == std::multiset<std::string>{"3,1", "2,2", "2,1,1"});

    VarTableau box(Partition::parse("1"), {{"s"}});
    CHECK(push_h(box, {"t"}).size() == 2);
    CHECK(push_e(box, {"t"}).size() == 2);
}

TEST_CASE("push outcomes grow the shape by one strip") {
    VarTableau t = VarTableau::canonical(Partition::parse("3,3,1"));
    for (int r = 1; r <= 3; ++r) {
        SymbolWord boxes;
        for (int i = 1; i <= r; ++i) boxes.push_back("t" + std::to_string(i));
        for (const PushOutcome& o : push_h(t, boxes)) {
            CHECK(o.shape.size() == t.shape.size() + r);
            // no two added boxes in the same column
            std::set<int> cols;
            for (int i = 1; i <= o.shape.rows(); ++i)
                for (int j = 1; j <= o.shape.part(i); ++j)
                    if (o.tableau.at(i, j).front() == 't') CHECK(cols.insert(j).second);
        }
        for (const PushOutcome& o : push_e(t, boxes)) {
            CHECK(o.shape.size() == t.shape.size() + r);
            std::set<int> rows;
            for (int i = 1; i <= o.shape.rows(); ++i)
                for (int j = 1; j <= o.shape.part(i); ++j)
                    if (o.tableau.at(i, j).front() == 't') CHECK(rows.insert(i).second);
        }
    }
}

TEST_CASE("symmetrization term structure") {
    TypedAssignment<ExactMode> a{{"p", 2}, {"q", 3}, {"r", 5}};
    long calls = 0;
    auto f = [&](const TypedAssignment<ExactMode>& b, Evaluator<ExactMode>&) {
        ++calls;
        return mpq_class(b.at("p") * 100 + b.at("q") * 10 + b.at("r"));
    };
    mpq_class total = sum_sym<ExactMode>({"p", "q", "r"}, a, f);
    CHECK(calls == 6);
    CHECK(total == 6 * (2 + 3 + 5) * 111 / 3);  // each value visits each slot twice

    calls = 0;
    CHECK(sum_sym<ExactMode>({}, a, f) == mpq_class(235));
    CHECK(calls == 1);

    // equal values still contribute |S|! slots
    TypedAssignment<ExactMode> same{{"p", 2}, {"q", 2}, {"r", 2}};
    CHECK(sum_sym<ExactMode>({"p", "q", "r"}, same, f) == 6 * mpq_class(222));

    // thread split agrees with the serial order
    mpq_class threaded = sum_sym<ExactMode>({"p", "q", "r"}, a, f, 3);
    CHECK(threaded == total);
}

TEST_CASE("hook column product error vanishes under the stated specialization") {
    Evaluator<ExactMode> ev;
    for (int k : {1, 2, 3}) {
        TypedAssignment<ExactMode> a;
        for (int i = 1; i <= k; ++i) a["x" + std::to_string(i)] = 2;
        a["y"] = 4;
        for (int i = 1; i < k; ++i) a["z" + std::to_string(i)] = 2;
        a["z" + std::to_string(k)] = 5;
        for (long bound = 1; bound <= 5; ++bound)
            CHECK(pieri_error_k(ev, k, a, bound) == 0);
    }

    // generic exponents leave a residue
    TypedAssignment<ExactMode> generic{{"x1", 2}, {"x2", 3}, {"y", 4}, {"z1", 5}, {"z2", 2}};
    CHECK(pieri_error_k(ev, 2, generic, 4) != 0);

    // the (k,l,m) generalization with leading z's pinned to the x value
    TypedAssignment<ExactMode> a{{"x1", 2}, {"x2", 2}, {"y1", 3}, {"y2", 4},
                                 {"z1", 2},  {"z2", 5}, {"z3", 3}};
    CHECK(pieri_error_klm(ev, 2, 2, 3, a, 4) == 0);
}

TEST_CASE("classical box addition shapes") {
    auto names = [](const std::vector<Partition>& v) {
        std::vector<std::string> out;
        for (const Partition& p : v) out.push_back(p.to_string());
        return out;
    };
    CHECK(names(pieri_shapes(Partition::parse("2,1"), 1, true)) ==
          std::vector<std::string>{"2,1,1", "2,2", "3,1"});
    CHECK(names(pieri_shapes(Partition::parse("2,1"), 2, true)) ==
          std::vector<std::string>{"2,2,1", "3,1,1", "3,2", "4,1"});
    CHECK(names(pieri_shapes(Partition::parse("2,1"), 2, false)) ==
          std::vector<std::string>{"2,1,1,1", "2,2,1", "3,1,1", "3,2"});

    // push outcomes hit exactly the classical list, once each
    VarTableau t = VarTableau::canonical(Partition::parse("2,1"));
    auto outcomes = push_h(t, {"u", "v"});
    std::vector<Partition> got;
    for (const PushOutcome& o : outcomes) got.push_back(o.shape);
    std::sort(got.begin(), got.end());
    CHECK(got == pieri_shapes(Partition::parse("2,1"), 2, true));
}

TEST_CASE("hook row Pieri identity at small parameters") {
    VerifyOptions opt;
    for (auto [ell, k, m] : std::vector<std::array<int, 3>>{{2, 1, 1}, {2, 2, 2}, {3, 1, 2}}) {
        PieriParams p;
        p.kind = "hook_h";
        p.ell = ell;
        p.k = k;
        p.m = m;
        Assignment a = default_pieri_assignment(p, true);
        auto report = verify_pieri(p, a, 4, opt);
        INFO("hook_h ell=" << ell << " k=" << k << " m=" << m);
        CHECK(report.pass);
        CHECK(report.status == "exact_pass");
    }
}

TEST_CASE("hook column Pieri identity directly and by transposing the row case") {
    VerifyOptions opt;
    PieriParams p;
    p.kind = "hook_e";
    p.ell = 1;
    p.k = 2;
    p.m = 1;
    Assignment a = default_pieri_assignment(p, true);
    auto report = verify_pieri(p, a, 4, opt);
    CHECK(report.pass);

    // transposing all inputs turns the column push into the row push: the
    // outcomes correspond placement by placement as transposed tableaux.
    VarTableau hook = hook_tableau("x1", {"y1"}, {"x2"});
    auto outcomes_e = push_e(hook, {"z1"});
    auto outcomes_h = push_h(hook.transpose(), {"z1"});
    REQUIRE(outcomes_e.size() == outcomes_h.size());
    for (std::size_t i = 0; i < outcomes_e.size(); ++i) {
        CHECK(outcomes_e[i].positions == outcomes_h[i].positions);
        CHECK(outcomes_e[i].tableau.rows == outcomes_h[i].tableau.transpose().rows);
    }
}

TEST_CASE("single permutation terms differ; only symmetrized sums agree") {
    PieriParams p;
    p.kind = "hook_h";
    p.ell = 2;
    p.k = 1;
    p.m = 1;
    Assignment a = default_pieri_assignment(p, true);
    VerifyOptions unsym;
    unsym.symmetrize = false;
    auto report = verify_pieri(p, a, 4, unsym);
    CHECK_FALSE(report.pass);
    CHECK(report.status == "fail");
}

TEST_CASE("constant exponent products collapse to the classical rule") {
    VerifyOptions opt;
    for (RimFlavor flavor : {RimFlavor::H, RimFlavor::E}) {
        PieriParams p;
        p.kind = "constant_s";
        p.shape = Partition::parse("2,1");
        p.s = 2;
        p.m = 2;
        p.flavor = flavor;
        auto report = verify_pieri(p, default_pieri_assignment(p, true), 6, opt);
        CHECK(report.pass);
        CHECK(report.checks.size() == 4);
    }
}

TEST_CASE("budget guard") {
    PieriParams p;
    p.kind = "m2_hook_h";
    p.m = 3;
    p.X = 3;
    p.ell = 1;
    VerifyOptions opt;
    opt.budget = 100;
    CHECK_THROWS_AS(verify_pieri(p, default_pieri_assignment(p, true), 4, opt), budget_error);
}
