#include "loopcell/generators.hpp"
#include "loopcell/tubular.hpp"

#include <catch_amalgamated.hpp>

using namespace loopcell;

TEST_CASE("bundle rank") {
    CHECK(bundle_rank(1, 1, 2) == 1);
    CHECK(bundle_rank(3, 2, 1) == 0);
    CHECK(bundle_rank(2, 1, 5) == 8);
    CHECK_THROWS_AS(bundle_rank(1, 1, 0), std::invalid_argument);
}

TEST_CASE("tubular point validation") {
    CHECK_NOTHROW(TubularPoint(1, 1, 2, {Rat(1, 2)}, {{Rat(1, 3)}, {Rat(2, 3)}},
                               {{Rat(1, 8), Rat(-1, 8)}}));
    // row sums must vanish
    CHECK_THROWS_AS(TubularPoint(1, 1, 2, {Rat(1, 2)}, {{Rat(1, 3)}, {Rat(2, 3)}},
                                 {{Rat(1, 8), Rat(1, 8)}}),
                    std::invalid_argument);
    // degenerate eta
    CHECK_THROWS_AS(TubularPoint(1, 1, 2, {Rat(1, 2)}, {{Rat(1, 3)}, {Rat(1, 3)}},
                                 {{Rat(0), Rat(0)}}),
                    std::invalid_argument);
}

TEST_CASE("sphere and disk membership by exact comparison") {
    TubularPoint zero(1, 1, 2, {Rat(1, 2)}, {{Rat(1, 3)}, {Rat(2, 3)}}, {{Rat(0), Rat(0)}});
    CHECK(sphere_disk_membership(zero) == DiskRegion::interior);

    // |w|^2 = 2/64 = 1/32 < 1/16 = (d/2)^2
    TubularPoint inside(1, 1, 2, {Rat(1, 2)}, {{Rat(1, 3)}, {Rat(2, 3)}},
                        {{Rat(1, 8), Rat(-1, 8)}});
    CHECK(sphere_disk_membership(inside) == DiskRegion::interior);

    // rows (3/20, -3/20) and (4/20, -4/20): |w|^2 = 1/8 > 1/16
    TubularPoint outside(2, 1, 2, {Rat(1, 2), Rat(1, 2)}, {{Rat(1, 3)}, {Rat(2, 3)}},
                         {{Rat(3, 20), Rat(-3, 20)}, {Rat(1, 5), Rat(-1, 5)}});
    CHECK(sphere_disk_membership(outside) == DiskRegion::outside);
    CHECK_THROWS_AS(exp_tubular(outside), std::domain_error);
}

TEST_CASE("exp_tubular displaces the base point columnwise") {
    TubularPoint zero(1, 1, 3, {Rat(1, 2)}, {{Rat(1, 4)}, {Rat(1, 2)}, {Rat(3, 4)}},
                      {{Rat(0), Rat(0), Rat(0)}});
    Configuration at_zero = exp_tubular(zero);
    REQUIRE(at_zero.size() == 3);
    CHECK(fiber_multiplicity(at_zero) == 3);
    for (const auto& p : at_zero.points)
        CHECK(p.x == Vec{Rat(1, 2)});

    // w = [3/25, -3/25]: (6/25)^2 <= (1/4)^2, two distinct columns
    TubularPoint b(1, 1, 2, {Rat(1, 2)}, {{Rat(1, 3)}, {Rat(2, 3)}},
                   {{Rat(3, 25), Rat(-3, 25)}});
    Configuration image = exp_tubular(b);
    REQUIRE(image.size() == 2);
    CHECK(image.points[0].x == Vec{Rat(1, 2) + Rat(3, 25)});
    CHECK(image.points[1].x == Vec{Rat(1, 2) - Rat(3, 25)});
    CHECK(fiber_multiplicity(image) == 1);
    CHECK(in_filtration(image, 1));
}

TEST_CASE("multiplicity is r exactly on the zero section") {
    Rng rng(23);
    for (int n = 0; n < 100; ++n) {
        Rng case_rng = rng.fork(static_cast<std::uint64_t>(n));
        int k = static_cast<int>(case_rng.range(1, 3));
        int m = static_cast<int>(case_rng.range(1, 2));
        int r = static_cast<int>(case_rng.range(1, 4));
        TubularPoint b = gen::tubular_point(case_rng, k, m, r, n % 3 == 0);
        Configuration image = exp_tubular(b);
        REQUIRE(image.size() == static_cast<size_t>(r));
        if (b.w_is_zero())
            REQUIRE(fiber_multiplicity(image) == static_cast<size_t>(r));
        else
            REQUIRE(fiber_multiplicity(image) <= static_cast<size_t>(r) - 1);
    }
}

TEST_CASE("rational sphere points hit the boundary exactly") {
    Rng rng(29);
    for (int n = 0; n < 100; ++n) {
        Rng case_rng = rng.fork(static_cast<std::uint64_t>(n));
        int k = static_cast<int>(case_rng.range(1, 3));
        int r = static_cast<int>(case_rng.range(2, 5));
        if (!sphere_point_feasible(k, r))
            k = 2;
        int m = static_cast<int>(case_rng.range(1, 2));
        Vec x = case_rng.vec_in_unit(k, 16);
        auto eta = gen::distinct_points(case_rng, m, static_cast<size_t>(r));
        TubularPoint b = rational_sphere_point(k, m, r, x, eta, case_rng.next_u64());
        REQUIRE(sphere_disk_membership(b) == DiskRegion::boundary);
        REQUIRE(in_filtration(exp_tubular(b), r - 1));
    }
}

TEST_CASE("no exact sphere points exist for k = 1, r in {2, 3}") {
    CHECK_FALSE(sphere_point_feasible(1, 2));
    CHECK_FALSE(sphere_point_feasible(1, 3));
    CHECK(sphere_point_feasible(1, 4));
    CHECK(sphere_point_feasible(2, 2));
    CHECK_THROWS_AS(
        rational_sphere_point(1, 1, 2, {Rat(1, 2)}, {{Rat(1, 3)}, {Rat(2, 3)}}, 1),
        std::domain_error);
    CHECK_THROWS_AS(
        rational_sphere_point(2, 1, 1, {Rat(1, 2), Rat(1, 2)}, {{Rat(1, 3)}}, 1),
        std::domain_error);
}
