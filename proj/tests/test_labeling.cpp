#include <dgraceful/labeling.hpp>
#include <dgraceful/constructions.hpp>
#include <dgraceful/errors.hpp>

#include "oracle.hpp"

#include <doctest.h>

#include <algorithm>

using namespace dgraceful;

namespace
{
    auto has_kind(const GracefulReport & r, ViolationKind k) -> bool
    {
        return std::any_of(r.violations.begin(), r.violations.end(), [&] (const Violation & v) { return v.kind == k; });
    }

    auto sorted(std::vector<Label> v) -> std::vector<Label>
    {
        std::sort(v.begin(), v.end());
        return v;
    }

    const std::vector<Label> c6_plain{ 0, 2, 3, 6, 1, 7 };
    const std::vector<Label> c6_alpha{ 0, 5, 2, 3, 1, 7 };
    const std::vector<Label> k5_s{ 0, 1, 4, 9, 11 };
    const std::vector<Label> k5_s_prime{ 0, 1, 3, 11, 20 };
}

TEST_CASE("admissible divisors")
{
    CHECK(admissible_divisors(build_path(18)) == std::vector<int>{ 1, 2, 3, 6, 9, 18 });
    CHECK(admissible_divisors(build_path(1)) == std::vector<int>{ 1 });
    CHECK(admissible_divisors(build_cycle(10)) == std::vector<int>{ 1, 2, 5, 10 });
    CHECK(divisors(36) == std::vector<int>{ 1, 2, 3, 4, 6, 9, 12, 18, 36 });
}

TEST_CASE("required and forbidden gaps")
{
    CHECK(required_gaps(2, 3) == std::vector<Label>{ 1, 2, 3, 5, 6, 7 });
    CHECK(forbidden_gaps(2, 3) == std::vector<Label>{ 4 });
    CHECK(required_gaps(4, 1) == std::vector<Label>{ 1, 3, 5, 7 });
    CHECK(forbidden_gaps(1, 5).empty());
    for (int d = 1 ; d <= 8 ; ++d)
        for (int m = 1 ; m <= 8 ; ++m)
            CHECK(required_gaps(d, m).size() == static_cast<std::size_t>(d * m));
}

TEST_CASE("C_6 labelled (0,2,3,6,1,7) is 2-graceful")
{
    auto r = verify_d_graceful(make_labeling(build_cycle(6), c6_plain, 2));
    CHECK(r.ok);
    CHECK(r.spectrum.realized == std::vector<Label>{ 2, 1, 3, 5, 6, 1 + 6 });
    CHECK(sorted(r.spectrum.realized) == required_gaps(2, 3));
}

TEST_CASE("K_5 labellings")
{
    auto s = verify_d_graceful(make_labeling(build_complete(5), k5_s, 2));
    CHECK(s.ok);
    CHECK(sorted(s.spectrum.realized) == required_gaps(2, 5));
    CHECK(std::find(s.spectrum.required.begin(), s.spectrum.required.end(), 6) == s.spectrum.required.end());

    auto s_prime = verify_d_graceful(make_labeling(build_complete(5), k5_s_prime, 2));
    CHECK_FALSE(s_prime.ok);
    REQUIRE(s_prime.violations.size() == 1);
    CHECK(s_prime.violations.front().kind == ViolationKind::LabelOutOfRange);
    CHECK(s_prime.violations.front().detail.find("20") != std::string::npos);
}

TEST_CASE("P_3 graceful")
{
    auto r = verify_d_graceful(make_labeling(build_path(2), { 1, 0, 2 }, 1));
    CHECK(r.ok);
    CHECK(sorted(r.spectrum.realized) == std::vector<Label>{ 1, 2 });
}

TEST_CASE("violation kinds")
{
    auto c6 = build_cycle(6);

    SUBCASE("d does not divide e")
    {
        CHECK_THROWS_AS(make_labeling(c6, c6_plain, 4), NotAdmissible);
        auto r = verify_d_graceful(Labeling{ c6, c6_plain, 4, 1 });
        CHECK(has_kind(r, ViolationKind::DivisorMismatch));
    }

    SUBCASE("wrong number of labels")
    {
        CHECK(has_kind(verify_d_graceful(Labeling{ c6, { 0, 1 }, 2, 3 }), ViolationKind::LabelCount));
    }

    SUBCASE("repeated label")
    {
        auto r = verify_d_graceful(make_labeling(c6, { 0, 2, 3, 6, 2, 7 }, 2));
        CHECK(has_kind(r, ViolationKind::NonInjective));
        CHECK(r.spectrum.realized.empty());
    }

    SUBCASE("gap defects are all listed")
    {
        // gaps 1, 1, 1, 1, 1, 5: gap 1 repeats, 2, 3, 6, 7 missing
        auto r = verify_d_graceful(make_labeling(c6, { 0, 1, 2, 3, 4, 5 }, 2));
        CHECK_FALSE(r.ok);
        CHECK(has_kind(r, ViolationKind::DuplicateGap));
        CHECK(std::count_if(r.violations.begin(), r.violations.end(),
                    [] (auto & v) { return v.kind == ViolationKind::MissingGap; }) == 4);
    }

    SUBCASE("forbidden gap")
    {
        // C_4, d = 2, m = 2: gap 3 is forbidden
        auto r = verify_d_graceful(make_labeling(build_cycle(4), { 0, 3, 1, 5 }, 2));
        CHECK(has_kind(r, ViolationKind::ForbiddenGap));
    }
}

TEST_CASE("alpha check")
{
    auto c6 = build_cycle(6);
    CHECK(verify_alpha(make_labeling(c6, c6_alpha, 2)));
    // parts {0,2,4} -> {0,3,1} and {1,3,5} -> {2,6,7} interleave
    CHECK_FALSE(verify_alpha(make_labeling(c6, c6_plain, 2)));

    CHECK(verify_alpha(make_labeling(build_star(3), { 7, 1, 0, 3 }, 1)));
    CHECK_FALSE(verify_alpha(make_labeling(build_star(3), { 7, 1, 12, 3 }, 1)));
    CHECK(verify_alpha(make_labeling(build_star(3), { 0, 1, 2, 3 }, 1)));

    CHECK_THROWS_AS(verify_alpha(make_labeling(build_cycle(5), { 0, 1, 2, 3, 4 }, 5)), PreconditionFailed);
}

TEST_CASE("difference set view of K_v")
{
    auto s = verify_rds_view(make_labeling(build_complete(5), k5_s, 2));
    CHECK(s.ok);
    CHECK(s.group_order == 24);
    CHECK(s.subgroup_order == 4);

    // not 2-graceful, still a relative difference set
    auto s_prime = verify_rds(k5_s_prime, 24, 4);
    CHECK(s_prime.ok);

    CHECK(verify_rds_view(make_labeling(build_complete(2), { 0, 1 }, 1)).ok);

    // 20 ordered differences cannot cover the 16 non-subgroup elements of Z_20 once each
    auto z20 = verify_rds(k5_s, 20, 4);
    CHECK_FALSE(z20.ok);

    CHECK_FALSE(verify_rds(std::vector<Label>{ 0, 1, 2, 3, 4 }, 24, 4).ok);
    CHECK_FALSE(verify_rds(std::vector<Label>{ 0, 24 }, 24, 4).distinct);
    CHECK_THROWS_AS(verify_rds_view(make_labeling(build_cycle(6), c6_plain, 2)), PreconditionFailed);
    CHECK_THROWS_AS(verify_rds(k5_s, 24, 5), InvalidParameter);
}

TEST_CASE("every d-graceful K_v labelling is a relative difference set")
{
    for (int v = 2 ; v <= 4 ; ++v) {
        auto g = build_complete(v);
        for (int d : admissible_divisors(g))
            for (auto & f : oracle::all_d_graceful(g, d))
                CHECK(verify_rds_view(make_labeling(g, f, d)).ok);
    }
}

TEST_CASE("verifier agrees with the definition on every small labelling")
{
    for (auto & g : { build_path(3), build_cycle(4), build_star(3), build_cycle(3), build_ladder(2), build_path(4) }) {
        for (int d : admissible_divisors(g)) {
            const int m = g.size() / d;
            oracle::for_each_injection(g.vertex_count(), max_label(d, m), [&] (const oracle::Labels & f) {
                    bool ours = verify_d_graceful(make_labeling(g, f, d)).ok;
                    CHECK(ours == oracle::is_d_graceful(g, f, d));
                    if (d == 1)
                        CHECK(ours == oracle::is_graceful(g, f));
                    if (d == g.size())
                        CHECK(ours == oracle::is_odd_graceful(g, f));
                    });
        }
    }
}

TEST_CASE("complement preserves gracefulness and alpha")
{
    std::vector<Labeling> sample;
    for (int e = 1 ; e <= 24 ; ++e)
        for (int d : divisors(e)) {
            sample.push_back(label_path(e, d));
            sample.push_back(label_star(e, d));
        }
    for (int k = 1 ; k <= 8 ; ++k) {
        sample.push_back(label_cycle_4k_d2(k));
        sample.push_back(label_cycle_4k_d4(k));
    }
    for (int k = 2 ; k <= 12 ; k += 2)
        sample.push_back(label_ladder_d2(k));

    for (auto & l : sample) {
        auto c = complement(l);
        CHECK(verify_d_graceful(c).ok);
        CHECK(verify_alpha(c));
        CHECK(complement(c).labels == l.labels);
    }
}
