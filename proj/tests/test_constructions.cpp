#include <dgraceful/constructions.hpp>
#include <dgraceful/errors.hpp>

#include "oracle.hpp"

#include <doctest.h>

#include <set>

using namespace dgraceful;

namespace
{
    // 1-based gap bookkeeping along a path or cycle x_1, x_2, ..., x_n; on a
    // cycle x_{n+1} is x_1.
    auto x(const Labeling & l, long long t) -> Label
    {
        const auto n = static_cast<long long>(l.labels.size());
        return l.labels.at(((t - 1) % n + n) % n);
    }

    auto epsilon(const Labeling & l, long long i) -> Label
    {
        return std::abs(x(l, 2 * i - 1) - x(l, 2 * i));
    }

    auto rho(const Labeling & l, long long i) -> Label
    {
        return std::abs(x(l, 2 * i) - x(l, 2 * i + 1));
    }

    auto block_gaps(const Labeling & l, long long from, long long to) -> std::set<Label>
    {
        std::set<Label> result;
        for (auto i = from ; i <= to ; ++i) {
            result.insert(epsilon(l, i));
            result.insert(rho(l, i));
        }
        return result;
    }

    auto interval(Label lo, Label hi) -> std::set<Label>
    {
        std::set<Label> result;
        for (auto v = lo ; v <= hi ; ++v)
            result.insert(v);
        return result;
    }

    auto certified(const Labeling & l, bool alpha) -> bool
    {
        return oracle::is_d_graceful(l.graph, l.labels, l.d) && (! alpha || verify_alpha(l));
    }
}

TEST_CASE("path labellings")
{
    CHECK(label_path(4, 2).labels == std::vector<Label>{ 0, 5, 1, 3, 2 });
    CHECK(label_path(1, 1).labels == std::vector<Label>{ 0, 1 });

    for (int d : { 2, 3, 6, 9, 18 }) {
        auto l = label_path(18, d);
        CHECK(l.graph.vertex_count() == 19);
        CHECK(l.m == 18 / d);
        CHECK(certified(l, true));
    }

    CHECK_THROWS_AS(label_path(18, 4), NotAdmissible);
    CHECK_THROWS_AS(label_path(0, 1), InvalidParameter);
}

TEST_CASE("path, m even: odd-indexed labels fill [0, dm/2] and the gaps come in blocks")
{
    for (int e = 2 ; e <= 60 ; e += 2)
        for (int d : divisors(e)) {
            const long long m = e / d;
            if (m % 2 != 0)
                continue;
            auto l = label_path(e, d);

            std::set<Label> odd;
            for (long long i = 0 ; i <= d * m / 2 ; ++i)
                odd.insert(x(l, 2 * i + 1));
            CHECK(odd == interval(0, d * m / 2));

            for (long long j = 1 ; j <= d ; ++j)
                CHECK(block_gaps(l, (j - 1) * m / 2 + 1, j * m / 2)
                        == interval((d - j) * (m + 1) + 1, (d - j + 1) * (m + 1) - 1));
        }
}

TEST_CASE("star labellings")
{
    CHECK(label_star(4, 2).labels == std::vector<Label>{ 0, 1, 2, 4, 5 });
    CHECK(label_star(3, 3).labels == std::vector<Label>{ 0, 1, 3, 5 });
    CHECK(label_star(5, 1).labels == std::vector<Label>{ 0, 1, 2, 3, 4, 5 });
    CHECK_THROWS_AS(label_star(5, 2), NotAdmissible);
}

TEST_CASE("C_4k, d = 2")
{
    CHECK(label_cycle_4k_d2(1).labels == std::vector<Label>{ 0, 5, 1, 2 });

    auto c8 = label_cycle_4k_d2(2);
    std::set<Label> odd, even;
    for (int t = 1 ; t <= 8 ; ++t)
        (t % 2 ? odd : even).insert(x(c8, t));
    CHECK(odd == interval(0, 3));
    CHECK(even == std::set<Label>{ 4, 5, 8, 9 });

    CHECK(certified(label_cycle_4k_d2(4), true));
    CHECK_THROWS_AS(label_cycle_4k_d2(0), InvalidParameter);

    for (long long k = 1 ; k <= 25 ; ++k) {
        auto l = label_cycle_4k_d2(static_cast<int>(k));
        CHECK(block_gaps(l, 1, k) == interval(2 * k + 2, 4 * k + 1));
        CHECK(block_gaps(l, k + 1, 2 * k) == interval(1, 2 * k));
    }
}

TEST_CASE("C_4k, d = 4")
{
    auto c4 = label_cycle_4k_d4(1);
    CHECK(c4.labels == std::vector<Label>{ 0, 7, 2, 3 });
    CHECK(oracle::gaps(c4.graph, c4.labels) == std::vector<Label>{ 7, 5, 1, 3 });

    auto c8 = label_cycle_4k_d4(2);
    CHECK(c8.d == 4);
    CHECK(c8.m == 2);
    CHECK(required_gaps(4, 2) == std::vector<Label>{ 1, 2, 4, 5, 7, 8, 10, 11 });
    CHECK(certified(c8, true));
    CHECK(certified(label_cycle_4k_d4(4), true));

    for (long long k = 2 ; k <= 24 ; k += 2) {
        auto l = label_cycle_4k_d4(static_cast<int>(k));
        CHECK(block_gaps(l, 1, k / 2) == interval(3 * k + 4, 4 * k + 3));
        CHECK(block_gaps(l, k / 2 + 1, k) == interval(2 * k + 3, 3 * k + 2));
        CHECK(block_gaps(l, k + 1, 3 * k / 2 - 1) == interval(k + 3, 2 * k));
        auto last = interval(1, k);
        last.insert({ k + 2, 2 * k + 1 });
        CHECK(block_gaps(l, 3 * k / 2, 2 * k) == last);
    }
    for (long long k = 1 ; k <= 25 ; k += 2) {
        auto l = label_cycle_4k_d4(static_cast<int>(k));
        CHECK(block_gaps(l, 1, (k - 1) / 2) == interval(3 * k + 5, 4 * k + 3));
        auto second = interval(2 * k + 3, 3 * k + 2);
        second.insert(3 * k + 4);
        CHECK(block_gaps(l, (k + 1) / 2, k) == second);
        CHECK(block_gaps(l, k + 1, (3 * k - 1) / 2) == interval(k + 2, 2 * k));
        auto last = interval(1, k);
        last.insert(2 * k + 1);
        CHECK(block_gaps(l, (3 * k + 1) / 2, 2 * k) == last);
    }
}

TEST_CASE("C_2k, k odd, d = 2")
{
    CHECK(label_cycle_2k_odd_d2(3).labels == std::vector<Label>{ 0, 5, 2, 3, 1, 7 });
    CHECK(label_cycle_2k_odd_d2(5).labels == std::vector<Label>{ 0, 11, 1, 3, 7, 4, 5, 10, 2, 9 });
    CHECK(label_cycle_2k_odd_d2(7).labels
            == std::vector<Label>{ 0, 15, 1, 14, 11, 4, 10, 5, 7, 6, 2, 13, 3, 12 });

    auto c26 = label_cycle_2k_odd_d2(13);
    CHECK(c26.graph.vertex_count() == 26);
    CHECK(certified(c26, false));

    // t = 4 exercises the empty third branch
    CHECK(certified(label_cycle_2k_odd_d2(9), false));
    CHECK(certified(label_cycle_2k_odd_d2(11), false));
    CHECK(certified(label_cycle_2k_odd_d2(15), false));

    CHECK_THROWS_AS(label_cycle_2k_odd_d2(4), InvalidParameter);
    CHECK_THROWS_AS(label_cycle_2k_odd_d2(1), InvalidParameter);
}

TEST_CASE("C_2k, k = 1 mod 4: the gap blocks")
{
    for (long long t = 4 ; t <= 24 ; t += 4) {
        auto l = label_cycle_2k_odd_d2(static_cast<int>(2 * t + 1));
        CHECK(block_gaps(l, 1, t / 2) == interval(3 * t + 4, 4 * t + 3));
        CHECK(epsilon(l, t / 2 + 1) == t / 2 + 1);
        CHECK(rho(l, t + 1) == t / 2);
        CHECK(rho(l, 2 * t + 1) == 3 * t + 3);

        auto mid = block_gaps(l, t / 2 + 2, t);
        mid.insert({ rho(l, t / 2 + 1), epsilon(l, t + 1) });
        CHECK(mid == interval(t + 2, 2 * t + 1));

        // t/2 even
        CHECK(block_gaps(l, t + 2, 5 * t / 4) == interval(2, t / 2 - 1));
        CHECK(epsilon(l, 5 * t / 4 + 1) == 1);
    }
}

TEST_CASE("C_2k, k = 1 mod 4 with t/2 odd: the low gap blocks")
{
    for (long long t = 6 ; t <= 26 ; t += 4) {
        auto l = label_cycle_2k_odd_d2(static_cast<int>(2 * t + 1));
        const auto q = 5 * t / 4;
        auto low = block_gaps(l, t + 2, q);
        low.insert(epsilon(l, q + 1));
        CHECK(low == interval(2, t / 2 - 1));
        CHECK(rho(l, q + 1) == 1);
    }
}

TEST_CASE("ladder labellings")
{
    // ids: (0,0)=0, (0,1)=1, (1,0)=2, (1,1)=3
    auto l4 = label_ladder_d2(2);
    CHECK(l4.labels == std::vector<Label>{ 0, 2, 5, 1 });
    std::set<Label> gaps;
    for (auto g : oracle::gaps(l4.graph, l4.labels))
        gaps.insert(g);
    CHECK(gaps == std::set<Label>{ 1, 2, 4, 5 });

    auto l16 = label_ladder_d2(8);
    CHECK(l16.graph.size() == 22);
    CHECK(l16.m == 11);
    CHECK(certified(l16, true));

    CHECK_THROWS_AS(label_ladder_d2(3), NotAdmissible);
    CHECK_THROWS_AS(label_ladder_d2(5), NotAdmissible);
}

TEST_CASE("construct dispatches and re-verifies")
{
    auto p = construct({ ConstructionFamily::Path, 18, 6 });
    CHECK(p.d == 6);
    CHECK(p.m == 3);
    CHECK(verify_d_graceful(p).ok);

    CHECK(construct({ ConstructionFamily::Cycle4kD2, 1, 2 }).labels == label_cycle_4k_d2(1).labels);
    CHECK_THROWS_AS(construct({ ConstructionFamily::LadderD2, 5, 2 }), NotAdmissible);
    CHECK_THROWS_AS(construct({ ConstructionFamily::Cycle4kD4, 3, 2 }), NotAdmissible);

    for (auto name : { "path", "star", "cycle4k-d2", "cycle4k-d4", "cycle2k-odd", "ladder-d2" })
        CHECK(construction_family_name(*construction_family_from_name(name)) == name);
    CHECK_FALSE(construction_family_from_name("wheel"));
}
