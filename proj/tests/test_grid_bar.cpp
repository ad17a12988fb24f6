#include "loopcell/generators.hpp"
#include "loopcell/grid_bar.hpp"

#include <catch_amalgamated.hpp>

using namespace loopcell;

namespace {
BarSimplex window_line(std::vector<Rat> walls, std::vector<Rat> xs) {
    std::vector<RelPoint> pts;
    for (auto& x : xs)
        pts.push_back({{x}, {Rat(1, 2)}});
    return BarSimplex(GridWalls(1, {std::move(walls)}), BarVariant::window,
                      RelConfig(1, 1, std::move(pts)));
}
}  // namespace

TEST_CASE("wall validation") {
    CHECK_THROWS_AS(GridWalls(1, {{}}), std::invalid_argument);
    CHECK_THROWS_AS(GridWalls(1, {{Rat(1, 5)}}), std::invalid_argument);
    CHECK_THROWS_AS(GridWalls(1, {{Rat(2, 5), Rat(2, 5)}}), std::invalid_argument);
    CHECK_NOTHROW(GridWalls(2, {{Rat(3, 10)}, {Rat(2, 5), Rat(7, 10)}}));
}

TEST_CASE("simplices reject points on wall slabs") {
    // k = 1: a slab is just the wall coordinate
    CHECK_THROWS_AS(window_line({Rat(3, 10), Rat(7, 10)}, {Rat(3, 10)}), std::invalid_argument);
    // window variant rejects points outside the window
    CHECK_THROWS_AS(window_line({Rat(3, 10), Rat(7, 10)}, {Rat(4, 5)}), std::invalid_argument);
    // k = 2: on the wall but out of the band on the other axis is fine
    BarSimplex ok(GridWalls(2, {{Rat(2, 5)}, {Rat(2, 5)}}), BarVariant::relative,
                  RelConfig(2, 1, {{{Rat(2, 5), Rat(1, 10)}, {Rat(1, 2)}}}));
    CHECK(ok.config.size() == 1);
    CHECK_THROWS_AS(BarSimplex(GridWalls(2, {{Rat(2, 5)}, {Rat(2, 5)}}), BarVariant::relative,
                               RelConfig(2, 1, {{{Rat(2, 5), Rat(1, 2)}, {Rat(1, 2)}}})),
                    std::invalid_argument);
}

TEST_CASE("outer faces delete the trimmed particles") {
    BarSimplex s = window_line({Rat(3, 10), Rat(1, 2), Rat(7, 10)}, {Rat(2, 5)});
    // removing the last wall keeps x = 2/5 (it is below t_1 = 1/2)
    BarSimplex top = bar_face(s, 0, 2);
    REQUIRE(top.config.size() == 1);
    CHECK(top.walls.walls[0] == std::vector<Rat>{Rat(3, 10), Rat(1, 2)});
    // removing wall 0 deletes it, since 2/5 < 1/2
    BarSimplex bottom = bar_face(s, 0, 0);
    CHECK(bottom.config.size() == 0);
    // inner face never deletes
    BarSimplex inner = bar_face(s, 0, 1);
    CHECK(inner.config.size() == 1);

    CHECK_THROWS_AS(bar_face(s, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(bar_face(s, 0, 3), std::invalid_argument);
    CHECK_THROWS_AS(bar_face(window_line({Rat(1, 2)}, {}), 0, 0), std::invalid_argument);
}

TEST_CASE("semi-simplicial identities hold exactly") {
    Rng rng(41);
    for (int n = 0; n < 150; ++n) {
        Rng case_rng = rng.fork(static_cast<std::uint64_t>(n));
        int k = static_cast<int>(case_rng.range(1, 2));
        BarVariant variant = n % 2 == 0 ? BarVariant::window : BarVariant::relative;
        BarSimplex s = gen::bar_simplex(case_rng, k, 1, variant);
        for (size_t axis = 0; axis < static_cast<size_t>(k); ++axis) {
            size_t p = s.walls.p(axis);
            if (p < 2)
                continue;
            for (size_t j = 1; j <= p; ++j)
                for (size_t i = 0; i < j; ++i)
                    REQUIRE(bar_face(bar_face(s, axis, j), axis, i) ==
                            bar_face(bar_face(s, axis, i), axis, j - 1));
        }
        if (k == 2 && s.walls.p(0) >= 1 && s.walls.p(1) >= 1)
            REQUIRE(bar_face(bar_face(s, 0, 0), 1, 0) == bar_face(bar_face(s, 1, 0), 0, 0));
    }
}

TEST_CASE("f and g compare the two simplex flavors") {
    Rng rng(43);
    for (int n = 0; n < 100; ++n) {
        Rng case_rng = rng.fork(static_cast<std::uint64_t>(n));
        int k = static_cast<int>(case_rng.range(1, 2));
        BarSimplex w = gen::bar_simplex(case_rng, k, 1, BarVariant::window);
        REQUIRE(map_f(map_g(w)) == w);  // f o g = id
        REQUIRE(fiber_multiplicity(map_g(w).config) == fiber_multiplicity(w.config));

        BarSimplex x = gen::bar_simplex(case_rng, k, 1, BarVariant::relative);
        BarSimplex fw = map_f(x);
        // f commutes with every face map
        for (size_t axis = 0; axis < static_cast<size_t>(k); ++axis) {
            size_t p = x.walls.p(axis);
            if (p < 1)
                continue;
            for (size_t i = 0; i <= p; ++i)
                REQUIRE(bar_face(fw, axis, i) == map_f(bar_face(x, axis, i)));
        }
    }
}

TEST_CASE("retract_outward interpolates from the identity to g o f") {
    Rng rng(47);
    for (int n = 0; n < 100; ++n) {
        Rng case_rng = rng.fork(static_cast<std::uint64_t>(n));
        int k = static_cast<int>(case_rng.range(1, 2));
        BarSimplex s = gen::bar_simplex(case_rng, k, 1, BarVariant::relative);
        REQUIRE(retract_outward(Rat(0), s) == s);
        REQUIRE(retract_outward(Rat(1), s) == map_g(map_f(s)));
        Rat t(case_rng.range(1, 96), 97);
        BarSimplex mid = retract_outward(t, s);
        REQUIRE(fiber_multiplicity(mid.config) <= fiber_multiplicity(s.config));
        for (const auto& pt : s.config.points)
            if (detail::in_window(pt.x, s.walls))
                REQUIRE(std::find(mid.config.points.begin(), mid.config.points.end(), pt) !=
                        mid.config.points.end());
    }
}

TEST_CASE("augmentation forgets the walls") {
    Rng rng(53);
    for (int n = 0; n < 60; ++n) {
        Rng case_rng = rng.fork(static_cast<std::uint64_t>(n));
        int k = static_cast<int>(case_rng.range(1, 2));
        BarSimplex s = gen::bar_simplex(case_rng, k, 1, BarVariant::relative);
        REQUIRE(augment(s) == s.config);
        for (size_t axis = 0; axis < static_cast<size_t>(k); ++axis) {
            size_t p = s.walls.p(axis);
            if (p >= 2)
                REQUIRE(augment(bar_face(s, axis, 1)) == augment(s));
        }
        // g o f only deletes points
        for (const auto& pt : augment(map_g(map_f(s))).points)
            REQUIRE(std::find(s.config.points.begin(), s.config.points.end(), pt) !=
                    s.config.points.end());
    }
}
