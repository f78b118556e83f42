#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "schurmzf/partition.hpp"
#include "schurmzf/ssyt.hpp"

using namespace schurmzf;

namespace {

long exhaust(const Partition& shape, long bound, bool check_validity = true) {
    long count = 0;
    std::vector<int> prev;
    for (SsytEnumerator en(shape, bound); en.valid(); en.advance()) {
        if (check_validity) {
            for (int i = 1; i <= shape.rows(); ++i) {
                for (int j = 1; j <= shape.part(i); ++j) {
                    int v = en.entry(i, j);
                    REQUIRE(v >= 1);
                    REQUIRE(v <= bound);
                    if (j > 1) REQUIRE(en.entry(i, j - 1) <= v);
                    if (i > 1 && shape.has_cell(i - 1, j)) REQUIRE(en.entry(i - 1, j) < v);
                }
            }
        }
        if (!prev.empty()) REQUIRE(prev < en.entries());  // strict lexicographic order
        prev = en.entries();
        ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("ssyt enumeration on pinned cases") {
    SsytEnumerator only(Partition::parse("2,2"), 2);
    REQUIRE(only.valid());
    CHECK(only.entries() == std::vector<int>{1, 1, 2, 2});
    CHECK_FALSE(only.advance());

    CHECK(exhaust(Partition::parse("1,1"), 1) == 0);  // strict column needs two values
    CHECK(exhaust(Partition::parse("2,1"), 3) == 8);
    CHECK(exhaust(Partition(), 3) == 1);  // the empty tableau
    CHECK(exhaust(Partition::parse("2,1"), 0) == 0);
}

TEST_CASE("hook content oracle on pinned cases") {
    CHECK(count_ssyt(Partition::parse("1"), 7) == 7);
    CHECK(count_ssyt(Partition::parse("2,1"), 3) == 8);
    CHECK(count_ssyt(Partition::parse("2,2"), 2) == 1);
    CHECK(count_ssyt(Partition::parse("1,1,1"), 2) == 0);
    CHECK(count_ssyt(Partition(), 0) == 1);
}

TEST_CASE("enumeration count equals hook content product") {
    // all partitions with at most 8 boxes
    std::vector<Partition> shapes;
    std::vector<int> acc;
    std::function<void(int, int)> gen = [&](int left, int maxpart) {
        shapes.push_back(Partition(acc));
        for (int p = std::min(left, maxpart); p >= 1; --p) {
            acc.push_back(p);
            gen(left - p, p);
            acc.pop_back();
        }
    };
    gen(8, 8);
    for (const Partition& shape : shapes)
        for (long bound = 0; bound <= 6; ++bound)
            REQUIRE(count_ssyt(shape, bound) == exhaust(shape, bound, false));
}
