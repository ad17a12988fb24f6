#include "loopcell/cubes.hpp"
#include "loopcell/generators.hpp"

#include <catch_amalgamated.hpp>

using namespace loopcell;

namespace {
Cube interval_cube(std::initializer_list<std::pair<Rat, Rat>> ivs) {
    return Cube(static_cast<int>(ivs.size()), std::vector<std::pair<Rat, Rat>>(ivs));
}
}  // namespace

TEST_CASE("apply_point evaluates the affine embedding") {
    Cube id = Cube::identity(1);
    CHECK(apply_point(id, {Rat(1, 3)}) == Vec{Rat(1, 3)});

    Cube half = interval_cube({{Rat(0), Rat(1, 2)}});
    CHECK(apply_point(half, {Rat(1, 2)}) == Vec{Rat(1, 4)});

    Cube box = interval_cube({{Rat(1, 4), Rat(3, 4)}, {Rat(0), Rat(1, 2)}});
    CHECK(apply_point(box, {Rat(1, 2), Rat(1, 2)}) == Vec{Rat(1, 2), Rat(1, 4)});

    CHECK_THROWS_AS(apply_point(id, Vec{Rat(1, 2), Rat(1, 2)}), std::invalid_argument);
    CHECK_THROWS_AS(apply_point(id, Vec{Rat(1)}), std::invalid_argument);
    CHECK_THROWS_AS(apply_point(id, Vec{Rat(0)}), std::invalid_argument);
}

TEST_CASE("cube validation") {
    CHECK_THROWS_AS(interval_cube({{Rat(1, 2), Rat(1, 2)}}), std::invalid_argument);
    CHECK_THROWS_AS(interval_cube({{Rat(-1, 4), Rat(1, 2)}}), std::invalid_argument);
    CHECK_THROWS_AS(interval_cube({{Rat(1, 2), Rat(5, 4)}}), std::invalid_argument);
    CHECK_THROWS_AS(CubeTuple(1, {}), std::invalid_argument);
    // overlapping interiors
    CHECK_THROWS_AS(CubeTuple(1, {interval_cube({{Rat(0), Rat(2, 3)}}),
                                  interval_cube({{Rat(1, 3), Rat(1)}})}),
                    std::invalid_argument);
    // touching endpoints are allowed
    CHECK_NOTHROW(CubeTuple(1, {interval_cube({{Rat(0), Rat(1, 2)}}),
                                interval_cube({{Rat(1, 2), Rat(1)}})}));
}

TEST_CASE("compose respects the unit and interval arithmetic") {
    CubeTuple c(1, {interval_cube({{Rat(1, 8), Rat(3, 8)}}), interval_cube({{Rat(1, 2), Rat(3, 4)}})});
    CHECK(compose(CubeTuple::identity(1), {c}) == c);

    CubeTuple outer(1, {interval_cube({{Rat(0), Rat(1, 2)}}), interval_cube({{Rat(1, 2), Rat(1)}})});
    std::vector<CubeTuple> inner{CubeTuple(1, {interval_cube({{Rat(0), Rat(1, 2)}})}),
                                 CubeTuple(1, {interval_cube({{Rat(0), Rat(1, 2)}})})};
    CubeTuple expected(1, {interval_cube({{Rat(0), Rat(1, 4)}}),
                           interval_cube({{Rat(1, 2), Rat(3, 4)}})});
    CHECK(compose(outer, inner) == expected);

    CHECK_THROWS_AS(compose(outer, {inner[0]}), std::invalid_argument);
}

TEST_CASE("compose is associative on seeded triples") {
    Rng rng(2024);
    for (int n = 0; n < 100; ++n) {
        Rng case_rng = rng.fork(static_cast<std::uint64_t>(n));
        int k = static_cast<int>(case_rng.range(1, 3));
        auto [a, bs] = gen::composable_pair(case_rng, k, 3);
        CubeTuple ab = compose(a, bs);
        std::vector<CubeTuple> cs;
        std::vector<std::vector<CubeTuple>> blocks(bs.size());
        for (size_t i = 0; i < bs.size(); ++i)
            for (size_t j = 0; j < bs[i].arity(); ++j) {
                blocks[i].push_back(gen::cube_tuple(case_rng, k, 1 + case_rng.below(3)));
                cs.push_back(blocks[i].back());
            }
        std::vector<CubeTuple> bc;
        for (size_t i = 0; i < bs.size(); ++i)
            bc.push_back(compose(bs[i], blocks[i]));
        REQUIRE(compose(ab, cs) == compose(a, bc));
    }
}

TEST_CASE("permute is a right action") {
    CubeTuple t(1, {interval_cube({{Rat(0), Rat(1, 4)}}), interval_cube({{Rat(1, 2), Rat(1)}})});
    CHECK(permute(t, {0, 1}) == t);
    CubeTuple swapped(1, {interval_cube({{Rat(1, 2), Rat(1)}}), interval_cube({{Rat(0), Rat(1, 4)}})});
    CHECK(permute(t, {1, 0}) == swapped);
    CHECK_THROWS_AS(permute(t, {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(permute(t, {0}), std::invalid_argument);

    Rng rng(7);
    for (int n = 0; n < 50; ++n) {
        Rng case_rng = rng.fork(static_cast<std::uint64_t>(n));
        CubeTuple tuple = gen::cube_tuple(case_rng, 2, 1 + case_rng.below(5));
        auto sigma = case_rng.permutation(tuple.arity());
        auto tau = case_rng.permutation(tuple.arity());
        std::vector<size_t> st(sigma.size());
        for (size_t i = 0; i < sigma.size(); ++i)
            st[i] = sigma[tau[i]];
        REQUIRE(permute(permute(tuple, sigma), tau) == permute(tuple, st));
    }
}

TEST_CASE("stabilize appends identity intervals") {
    CHECK(stabilize(CubeTuple::identity(1), 2) == CubeTuple::identity(3));
    CubeTuple t(1, {interval_cube({{Rat(0), Rat(1, 2)}})});
    CubeTuple expected(2, {interval_cube({{Rat(0), Rat(1, 2)}, {Rat(0), Rat(1)}})});
    CHECK(stabilize(t, 1) == expected);
    CHECK_THROWS_AS(stabilize(t, -1), std::invalid_argument);

    Rng rng(11);
    for (int n = 0; n < 50; ++n) {
        Rng case_rng = rng.fork(static_cast<std::uint64_t>(n));
        auto [a, bs] = gen::composable_pair(case_rng, 1, 3);
        std::vector<CubeTuple> bs_stab;
        for (const auto& b : bs)
            bs_stab.push_back(stabilize(b, 2));
        REQUIRE(stabilize(compose(a, bs), 2) == compose(stabilize(a, 2), bs_stab));
    }
}

TEST_CASE("center of a cube") {
    CHECK(center(Cube::identity(3)) == Vec{Rat(1, 2), Rat(1, 2), Rat(1, 2)});
    CHECK(center(interval_cube({{Rat(0), Rat(1, 2)}})) == Vec{Rat(1, 4)});

    Rng rng(13);
    for (int n = 0; n < 50; ++n) {
        Rng case_rng = rng.fork(static_cast<std::uint64_t>(n));
        CubeTuple t = gen::cube_tuple(case_rng, 2, 4);
        for (size_t i = 0; i < t.arity(); ++i)
            for (size_t j = i + 1; j < t.arity(); ++j)
                REQUIRE(center(t.cubes[i]) != center(t.cubes[j]));
    }
}
