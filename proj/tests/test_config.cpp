#include "loopcell/config.hpp"
#include "loopcell/generators.hpp"

#include <catch_amalgamated.hpp>

using namespace loopcell;

namespace {

// the two-dimensional pattern of the k = m = 1 picture: three x-columns with
// 2, 4, 2 points
Configuration column_pattern() {
    std::vector<ConfPoint> pts;
    auto col = [&](const Rat& x, std::initializer_list<Rat> ys) {
        for (const auto& y : ys)
            pts.push_back({{x}, {y}});
    };
    col(Rat(1, 8), {Rat(1, 4), Rat(3, 8)});
    col(Rat(3, 8), {Rat(1, 16), Rat(3, 8), Rat(19, 40), Rat(31, 40)});
    col(Rat(5, 8), {Rat(2, 5), Rat(5, 8)});
    return Configuration(1, 1, std::move(pts), true);
}

}  // namespace

TEST_CASE("configuration validation") {
    CHECK_THROWS_AS(Configuration(1, 1, {}, true), std::invalid_argument);
    CHECK_NOTHROW(Configuration(1, 1, {}, false));
    CHECK_THROWS_AS(Configuration(1, 1, {{{Rat(1, 2)}, {Rat(1, 2)}}, {{Rat(1, 2)}, {Rat(1, 2)}}}, true),
                    std::invalid_argument);
    CHECK_THROWS_AS(Configuration(1, 1, {{{Rat(0)}, {Rat(1, 2)}}}, true), std::invalid_argument);
    // unordered configurations are canonically sorted
    Configuration a(1, 1, {{{Rat(3, 4)}, {Rat(1, 2)}}, {{Rat(1, 4)}, {Rat(1, 2)}}}, false);
    Configuration b(1, 1, {{{Rat(1, 4)}, {Rat(1, 2)}}, {{Rat(3, 4)}, {Rat(1, 2)}}}, false);
    CHECK(a == b);
}

TEST_CASE("fiber multiplicity counts the largest column") {
    CHECK(fiber_multiplicity(Configuration(1, 1, {}, false)) == 0);
    CHECK(fiber_multiplicity(column_pattern()) == 4);

    // distinct x-coordinates give multiplicity one
    Rng rng(3);
    for (int n = 0; n < 30; ++n) {
        Rng case_rng = rng.fork(static_cast<std::uint64_t>(n));
        auto conf = gen::configuration(case_rng, 2, 1, std::vector<size_t>{1, 1, 1, 1});
        REQUIRE(fiber_multiplicity(conf) == 1);
    }
}

TEST_CASE("filtration membership") {
    Configuration fig = column_pattern();
    CHECK(in_filtration(fig, 4));
    CHECK_FALSE(in_filtration(fig, 3));
    CHECK(in_filtration(fig, static_cast<long long>(fig.size())));

    Configuration two_in_fiber(1, 1, {{{Rat(1, 2)}, {Rat(1, 4)}}, {{Rat(1, 2)}, {Rat(3, 4)}}}, true);
    CHECK_FALSE(in_filtration(two_in_fiber, 1));
    CHECK_THROWS_AS(in_filtration(fig, -1), std::invalid_argument);
}

TEST_CASE("act applies cubes to the x-coordinates") {
    Cube left(1, {{Rat(0), Rat(1, 2)}});
    Cube right(1, {{Rat(1, 2), Rat(1)}});
    CubeTuple op(1, {left, right});
    Configuration p(1, 1, {{{Rat(1, 2)}, {Rat(1, 3)}}}, true);
    Configuration q(1, 1, {{{Rat(1, 2)}, {Rat(2, 3)}}}, true);
    Configuration moved = act(op, {p, q});
    REQUIRE(moved.size() == 2);
    CHECK(moved.points[0].x == Vec{Rat(1, 4)});
    CHECK(moved.points[1].x == Vec{Rat(3, 4)});
    CHECK(moved.points[0].y == Vec{Rat(1, 3)});

    CHECK(act(CubeTuple::identity(1), {p}) == p);
    CHECK_THROWS_AS(act(op, {p}), std::invalid_argument);
    CHECK_THROWS_AS(act(op, {p, Configuration(1, 1, {}, false)}), std::invalid_argument);
    CHECK_THROWS_AS(act(op, {p, Configuration(1, 2, {{{Rat(1, 2)}, {Rat(1, 3), Rat(1, 4)}}}, true)}),
                    std::invalid_argument);
}

TEST_CASE("act preserves the fiberwise filtration exactly") {
    Rng rng(17);
    for (int n = 0; n < 120; ++n) {
        Rng case_rng = rng.fork(static_cast<std::uint64_t>(n));
        int k = static_cast<int>(case_rng.range(1, 2));
        int m = static_cast<int>(case_rng.range(1, 2));
        size_t arity = 1 + case_rng.below(3);
        CubeTuple op = gen::cube_tuple(case_rng, k, arity);
        std::vector<Configuration> parts;
        size_t expected = 0;
        for (size_t i = 0; i < arity; ++i) {
            parts.push_back(gen::configuration(case_rng, k, m, 5));
            expected = std::max(expected, fiber_multiplicity(parts.back()));
        }
        Configuration moved = act(op, parts);
        REQUIRE(fiber_multiplicity(moved) == expected);
        for (long long r = 0; r <= static_cast<long long>(expected) + 1; ++r)
            REQUIRE(in_filtration(moved, r) == (static_cast<size_t>(r) >= expected));
    }
}
