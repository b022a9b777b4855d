#include "eqprod/error.hpp"
#include "eqprod/thresholds.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace eqprod;

namespace {

const std::vector<std::uint64_t> kS0Table = {39, 24, 25, 26, 28, 30, 31, 34, 35, 37, 39, 41, 43, 44, 46, 48, 49, 51};
const std::vector<std::uint64_t> kSStarTable = {19, 23, 23, 26, 27, 29, 31, 32, 35, 36,
                                                38, 40, 42, 44, 45, 47, 49, 50, 52};

} // namespace

TEST_CASE("has_r_family")
{
    CHECK(has_r_family(19, 3, 2));
    CHECK_FALSE(has_r_family(18, 3, 2));
    CHECK_FALSE(has_r_family(2, 3, 2));
    CHECK_THROWS_AS(has_r_family(19, 3, 1), Error);
}

TEST_CASE("s_r_0 examples")
{
    CHECK(s_r_0(3, 3) == 39u);
    CHECK(s_r_0(4, 4) == 24u);

    std::uint64_t brute = 0;
    for (std::uint64_t s = 1; brute == 0; ++s)
        if (!oracle::families(s, 3, 2).empty())
            brute = s;
    CHECK(brute == 13);
    CHECK(s_r_0(3, 2) == brute);
    CHECK_FALSE(s_r_0(3, 3, 38).has_value());
}

TEST_CASE("s_r_star examples")
{
    CHECK(s_r_star(4, 3) == 23);
    CHECK(s_r_star(7, 6) == 27);
    CHECK(s_r_star(21, 20) == 52);

    ThresholdEngine engine;
    std::optional<std::uint64_t> certified;
    CHECK(engine.s_r_star(3, 2, &certified) == 19);
    CHECK(certified == 200u);
    CHECK(engine.s_r_star(4, 3, &certified) == 23);
    CHECK_FALSE(certified);
}

TEST_CASE("s_r_star reports cap exhaustion")
{
    try {
        s_r_star(4, 3, ThresholdOptions{.cap = 30});
        FAIL("expected SearchBudgetExceeded");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SearchBudgetExceeded);
    }
}

TEST_CASE("tables")
{
    ThresholdEngine engine;
    const auto s0 = table_s_n0(20, engine);
    REQUIRE(s0.size() == kS0Table.size());
    for (std::size_t i = 0; i < s0.size(); ++i) {
        CHECK(s0[i].n == i + 3);
        CHECK(s0[i].r == i + 3);
        CHECK(s0[i].s0 == kS0Table[i]);
        REQUIRE(s0[i].witness);
        CHECK(s0[i].witness->members.size() >= s0[i].r);
        CHECK(s0[i].witness->triple.s == kS0Table[i]);
    }
    const auto star = table_s_star(21, engine);
    REQUIRE(star.size() == kSStarTable.size());
    for (std::size_t i = 0; i < star.size(); ++i) {
        CHECK(star[i].r == star[i].n - 1);
        CHECK(star[i].sstar == kSStarTable[i]);
        CHECK(*star[i].s0 <= *star[i].sstar);
    }
    CHECK(star[0].certified_to == 200u);
    CHECK_THROWS_AS(table_s_n0(21, engine), Error);
    CHECK_THROWS_AS(table_s_star(2, engine), Error);
}

TEST_CASE("threshold inequality on computed values")
{
    ThresholdEngine engine;
    for (std::uint64_t n = 4; n <= 14; ++n) {
        for (std::uint64_t r : {n - 2, n - 1, n}) {
            if (r < 2)
                continue;
            const auto s0 = engine.s_r_0(n, r);
            REQUIRE(s0);
            const auto star_n = engine.s_r_star(n, r);
            const auto star_next = engine.s_r_star(n + 1, r);
            CHECK(star_next <= *s0 + 1);
            CHECK(*s0 + 1 <= star_n + 1);
            CHECK(*s0 <= star_n);
        }
    }
}

TEST_CASE("s_r_star is exactly the start of the covered tail")
{
    ThresholdEngine engine;
    for (std::uint64_t n = 4; n <= 12; ++n) {
        const std::uint64_t r = n - 1;
        const auto star = engine.s_r_star(n, r);
        const auto below = *engine.s_r_0(n - 1, r);
        for (std::uint64_t s = star; s <= below + 1; ++s)
            CHECK(engine.has_r_family(s, n, r));
        CHECK_FALSE(engine.has_r_family(star - 1, n, r));
        // The tail construction also covers sums well past the scan window.
        for (std::uint64_t s = below + 2; s <= below + 15; ++s)
            CHECK(engine.has_r_family(s, n, r));
    }
}

TEST_CASE("n = 3 tail is scanned up to the ceiling")
{
    for (std::uint64_t s = 19; s <= 200; ++s)
        CHECK(has_r_family(s, 3, 2));
}

TEST_CASE("conjectures")
{
    ThresholdEngine engine;
    const auto rows = check_conjectures(12, engine);
    auto find = [&](const std::string& name, std::uint64_t n) {
        auto it = std::find_if(rows.begin(), rows.end(),
                               [&](const ConjectureRow& r) { return r.conjecture == name && r.n == n; });
        REQUIRE(it != rows.end());
        return *it;
    };
    const auto c1 = find("1", 7);
    CHECK(c1.lhs == 27);
    CHECK(c1.rhs == 26 + 1);
    CHECK(c1.hold);

    // r is held fixed on both sides: s_7^*(8) against s_7^*(7) + 1.
    const auto b8 = find("2b", 8);
    CHECK(b8.r == 7);
    CHECK(b8.lhs == 29);
    CHECK(b8.rhs == engine.s_r_star(7, 7) + 1);
    CHECK(b8.hold);
    const auto b12 = find("2b", 12);
    CHECK(b12.lhs == 36);
    CHECK(b12.hold);

    std::size_t c1_count = 0, a = 0, b = 0, c = 0;
    for (const auto& row : rows) {
        CHECK_MESSAGE(row.hold, row.conjecture << " n=" << row.n);
        c1_count += row.conjecture == "1";
        a += row.conjecture == "2a";
        b += row.conjecture == "2b";
        c += row.conjecture == "2c";
    }
    CHECK(c1_count == 7);
    CHECK(a == 4);
    CHECK(b == 6);
    CHECK(c == 3);
}

TEST_CASE("results do not depend on the worker count")
{
    ThresholdEngine serial;
    ThresholdEngine parallel(ThresholdOptions{.par = {6}});
    CHECK(table_s_star(16, serial) == table_s_star(16, parallel));
    CHECK(to_csv(table_s_n0(14, serial)) == to_csv(table_s_n0(14, parallel)));
}

TEST_CASE("disjoint threshold scan")
{
    CHECK(disjoint_threshold_scan(3, 2, 100) == 23);
}

TEST_CASE("csv and b-file output")
{
    ThresholdEngine engine;
    const auto recs = table_s_star(5, engine);
    CHECK(to_bfile(recs) == "3 19\n4 23\n5 23\n");
    CHECK(to_csv(recs).starts_with("n,r,s0,sstar\n3,2,13,19\n4,3,"));
    const auto s0 = table_s_n0(4, engine);
    CHECK(to_csv(s0) == "n,r,s0,sstar\n3,3,39,\n4,4,24,\n");
    CHECK(to_bfile(s0) == "3 39\n4 24\n");
}
