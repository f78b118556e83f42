#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "schurmzf/jacobi_trudi.hpp"
#include "schurmzf/rims.hpp"

using namespace schurmzf;

namespace {

// joins a reading word for compact comparisons
std::string joined(const SymbolWord& word) {
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) out += ',';
        out += word[i];
    }
    return out;
}

// signature of a decomposition: sign plus the H reading words of the ribbons
std::multiset<std::pair<int, std::vector<std::string>>> signatures(
    const std::vector<RimDecomposition>& decs, const VarTableau& t, RimFlavor flavor) {
    std::multiset<std::pair<int, std::vector<std::string>>> out;
    for (const RimDecomposition& dec : decs) {
        std::vector<std::string> words;
        for (const Ribbon& ribbon : dec.ribbons)
            if (!ribbon.empty()) words.push_back(joined(reading_word(ribbon, t, flavor)));
        out.insert({dec.sign, words});
    }
    return out;
}

void check_tiling(const Partition& lambda, const std::vector<RimDecomposition>& decs) {
    for (const RimDecomposition& dec : decs) {
        std::set<Cell> covered;
        for (const Ribbon& ribbon : dec.ribbons) {
            for (std::size_t k = 0; k < ribbon.cells.size(); ++k) {
                REQUIRE(lambda.has_cell(ribbon.cells[k]));
                if (k > 0)
                    REQUIRE(ribbon.cells[k].diagonal() == ribbon.cells[k - 1].diagonal() + 1);
                REQUIRE(covered.insert(ribbon.cells[k]).second);
            }
        }
        REQUIRE(static_cast<int>(covered.size()) == lambda.size());
        std::set<int> image(dec.sigma.begin(), dec.sigma.end());
        REQUIRE(static_cast<int>(image.size()) == lambda.rows());
    }
}

}  // namespace

TEST_CASE("h-rim decompositions of small shapes") {
    CHECK(enumerate_h_rims(Partition::parse("1")).size() == 1);
    CHECK(enumerate_h_rims(Partition::parse("1")).front().sign == 1);
    CHECK(enumerate_h_rims(Partition()).size() == 1);

    auto square = enumerate_h_rims(Partition::parse("2,2"));
    VarTableau t(Partition::parse("2,2"), {{"a", "b"}, {"c", "d"}});
    REQUIRE(square.size() == 2);
    auto sigs = signatures(square, t, RimFlavor::H);
    decltype(sigs) expected{{1, {"a,b", "c,d"}}, {-1, {"a", "c,d,b"}}};
    CHECK(sigs == expected);

    check_tiling(Partition::parse("2,2"), square);
}

TEST_CASE("h-rim decompositions of (2,2,2) match the six displayed products") {
    Partition lambda = Partition::parse("2,2,2");
    VarTableau t(lambda, {{"a", "b"}, {"c", "d"}, {"e", "f"}});
    auto decs = enumerate_h_rims(lambda);
    REQUIRE(decs.size() == 6);
    auto sigs = signatures(decs, t, RimFlavor::H);
    decltype(sigs) expected{
        {1, {"a,b", "c,d", "e,f"}},      {-1, {"a,b", "c", "e,f,d"}},
        {-1, {"c,a", "e,f,d,b"}},        {-1, {"a", "c,d,b", "e,f"}},
        {1, {"c,a,b", "e,f,d"}},         {1, {"a", "c", "e,f,d,b"}},
    };
    CHECK(sigs == expected);
    check_tiling(lambda, decs);
}

TEST_CASE("tiling, bijectivity and sign bookkeeping on all shapes up to 8 boxes") {
    std::vector<int> acc;
    std::function<void(int, int)> gen = [&](int left, int maxpart) {
        Partition lambda(acc);
        auto decs = enumerate_h_rims(lambda);
        CHECK(!decs.empty());
        check_tiling(lambda, decs);
        // distinct types: the decomposition-to-permutation map is injective
        std::set<std::vector<int>> types;
        for (const RimDecomposition& dec : decs) REQUIRE(types.insert(dec.sigma).second);
        for (int p = std::min(left, maxpart); p >= 1; --p) {
            acc.push_back(p);
            gen(left - p, p);
            acc.pop_back();
        }
    };
    gen(8, 8);
}

TEST_CASE("the worked H-rim decomposition of (4,3,3,2)") {
    Partition lambda = Partition::parse("4,3,3,2");
    VarTableau t(lambda, {{"a", "b", "c", "d"}, {"e", "f", "g"}, {"h", "i", "j"}, {"k", "l"}});
    auto decs = enumerate_h_rims(lambda);

    const std::string wanted = "1 1 3 3 / 3 3 3 / 3 4 4 / 4 4";
    const RimDecomposition* found = nullptr;
    for (const RimDecomposition& dec : decs)
        if (dec.label_grid(lambda) == wanted) found = &dec;
    REQUIRE(found != nullptr);

    CHECK(joined(reading_word(found->ribbons[0], t, RimFlavor::H)) == "a,b");
    CHECK(found->ribbons[1].empty());
    CHECK(joined(reading_word(found->ribbons[2], t, RimFlavor::H)) == "h,e,f,g,c,d");
    CHECK(joined(reading_word(found->ribbons[3], t, RimFlavor::H)) == "k,l,i,j");
    // type (1243) as a map: 1->2, 2->4, 4->3, 3->1
    CHECK(found->sigma == std::vector<int>{2, 4, 1, 3});
    CHECK(found->sign == -1);  // 4-cycle
}

TEST_CASE("e-rim decompositions by conjugation") {
    // a column transposes to one row, so exactly one decomposition
    auto col2 = enumerate_e_rims(Partition::parse("1,1"));
    REQUIRE(col2.size() == 1);
    VarTableau t(Partition::parse("1,1"), {{"a"}, {"c"}});
    CHECK(joined(reading_word(col2.front().ribbons[0], t, RimFlavor::E)) == "a,c");

    CHECK(enumerate_e_rims(Partition::parse("2,2")).size() == 2);
    CHECK(enumerate_e_rims(Partition::parse("1")).size() == 1);

    // sign-preserving bijection with the H decompositions of the conjugate
    for (const char* shape : {"3,1", "2,2,1", "3,2,2"}) {
        Partition lambda = Partition::parse(shape);
        auto e = enumerate_e_rims(lambda);
        auto h = enumerate_h_rims(lambda.conjugate());
        REQUIRE(e.size() == h.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            CHECK(e[i].sign == h[i].sign);
            CHECK(e[i].sigma == h[i].sigma);
            for (const Ribbon& ribbon : e[i].ribbons)
                if (!ribbon.empty())
                    CHECK(ribbon.cells.front().row >= ribbon.cells.back().row);
        }
        // every nonempty E ribbon starts at (1, i)
        for (const RimDecomposition& dec : e)
            for (std::size_t i = 0; i < dec.ribbons.size(); ++i)
                if (!dec.ribbons[i].empty())
                    CHECK(dec.ribbons[i].cells.back() == Cell{1, static_cast<int>(i + 1)});
    }
}

TEST_CASE("E reading words descend the first column") {
    Partition lambda = Partition::parse("4,3,3,2");
    VarTableau t(lambda, {{"a", "b", "c", "d"}, {"e", "f", "g"}, {"h", "i", "j"}, {"k", "l"}});
    auto decs = enumerate_e_rims(lambda);
    bool seen_column = false;
    for (const RimDecomposition& dec : decs)
        for (const Ribbon& ribbon : dec.ribbons)
            if (!ribbon.empty() && joined(reading_word(ribbon, t, RimFlavor::E)) == "a,e,h")
                seen_column = true;
    CHECK(seen_column);
}

TEST_CASE("rim alternating sum against the two-term (m,n) expression") {
    Evaluator<ExactMode> ev;
    for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {4, 3}}) {
        Partition lambda(std::vector<int>{m, n});
        VarTableau t = VarTableau::canonical(lambda);
        TypedAssignment<ExactMode> a;
        int v = 0;
        for (const Symbol& sym : t.symbols()) a[sym] = 1 + (v++ % 3);
        long bound = 4;

        SymbolWord row1 = t.rows[0], row2 = t.rows[1];
        SymbolWord head(row1.begin(), row1.begin() + n - 1);
        SymbolWord hook = row2;
        hook.insert(hook.end(), row1.begin() + n - 1, row1.end());
        mpq_class expected =
            ev.zeta_star(resolve_word<ExactMode>(row1, a), bound) *
                ev.zeta_star(resolve_word<ExactMode>(row2, a), bound) -
            ev.zeta_star(resolve_word<ExactMode>(head, a), bound) *
                ev.zeta_star(resolve_word<ExactMode>(hook, a), bound);
        CHECK(rim_alt_sum(ev, t, a, bound, RimFlavor::H) == expected);

        // the 2x2 sign pattern: exactly one +1 and one -1 decomposition
        auto decs = enumerate_h_rims(lambda);
        REQUIRE(decs.size() == 2);
        CHECK(decs[0].sign + decs[1].sign == 0);
    }
}

TEST_CASE("rim alternating sum of a single row is the weak chain sum") {
    Evaluator<ExactMode> ev;
    VarTableau t = VarTableau::canonical(Partition::parse("4"));
    TypedAssignment<ExactMode> a{{"s11", 2}, {"s12", 1}, {"s13", 3}, {"s14", 2}};
    CHECK(rim_alt_sum(ev, t, a, 5, RimFlavor::H) ==
          ev.zeta_star(resolve_word<ExactMode>(t.rows[0], a), 5));
}
