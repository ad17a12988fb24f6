#pragma once

#include "loopcell/grid_bar.hpp"
#include "loopcell/snf.hpp"
#include "loopcell/tubular.hpp"

namespace loopcell {
namespace gen {

// n disjoint cubes by recursive axis-aligned splitting of I^k, shrunk inside
// their regions (occasionally keeping a shared face, so touching endpoints
// get exercised too).
inline CubeTuple cube_tuple(Rng& rng, int k, size_t n) {
    using Box = std::vector<std::pair<Rat, Rat>>;
    std::vector<Box> regions{Box(static_cast<size_t>(k), {Rat(0), Rat(1)})};
    while (regions.size() < n) {
        size_t pick = rng.below(regions.size());
        Box box = regions[pick];
        regions.erase(regions.begin() + static_cast<std::ptrdiff_t>(pick));
        size_t axis = rng.below(static_cast<std::uint64_t>(k));
        Rat cut = rng.rat_between(box[axis].first, box[axis].second, 16);
        Box left = box, right = box;
        left[axis].second = cut;
        right[axis].first = cut;
        regions.push_back(std::move(left));
        regions.push_back(std::move(right));
    }
    std::vector<Cube> cubes;
    cubes.reserve(n);
    for (auto& box : regions) {
        Box ivs(static_cast<size_t>(k));
        for (size_t a = 0; a < ivs.size(); ++a) {
            Rat lo = box[a].first, hi = box[a].second;
            Rat nlo = rng.chance(1, 4) ? lo : rng.rat_between(lo, hi, 16);
            Rat nhi = rng.chance(1, 4) ? hi : rng.rat_between(nlo, hi, 16);
            if (!(nlo < nhi))
                nhi = hi;
            ivs[a] = {nlo, nhi};
        }
        cubes.emplace_back(k, std::move(ivs));
    }
    return CubeTuple(k, std::move(cubes));
}

// outer tuple plus matching inner tuples, for composition laws
struct ComposablePair {
    CubeTuple outer;
    std::vector<CubeTuple> inner;
};

inline ComposablePair composable_pair(Rng& rng, int k, size_t max_arity = 4) {
    size_t n = 1 + rng.below(max_arity);
    CubeTuple outer = cube_tuple(rng, k, n);
    std::vector<CubeTuple> inner;
    inner.reserve(n);
    for (size_t i = 0; i < n; ++i)
        inner.push_back(cube_tuple(rng, k, 1 + rng.below(max_arity)));
    return {std::move(outer), std::move(inner)};
}

// configuration with controlled fiber structure: `groups` distinct x-values
// with the given multiplicities
inline Configuration configuration(Rng& rng, int k, int m, const std::vector<size_t>& groups,
                                   bool ordered = true) {
    std::vector<ConfPoint> pts;
    std::vector<Vec> xs;
    for (size_t g = 0; g < groups.size(); ++g) {
        Vec x;
        do {
            x = rng.vec_in_unit(k);
        } while (std::find(xs.begin(), xs.end(), x) != xs.end());
        xs.push_back(x);
        std::vector<Vec> ys;
        for (size_t i = 0; i < groups[g]; ++i) {
            Vec y;
            do {
                y = rng.vec_in_unit(m);
            } while (std::find(ys.begin(), ys.end(), y) != ys.end());
            ys.push_back(y);
            pts.push_back({x, y});
        }
    }
    if (ordered) {
        auto perm = rng.permutation(pts.size());
        std::vector<ConfPoint> shuffled;
        shuffled.reserve(pts.size());
        for (size_t i : perm)
            shuffled.push_back(pts[i]);
        pts = std::move(shuffled);
    }
    return Configuration(k, m, std::move(pts), ordered);
}

inline Configuration configuration(Rng& rng, int k, int m, size_t max_points = 6,
                                   bool ordered = true) {
    size_t n = 1 + rng.below(max_points);
    std::vector<size_t> groups;
    size_t left = n;
    while (left > 0) {
        size_t take = 1 + rng.below(std::min<size_t>(left, 3));
        groups.push_back(take);
        left -= take;
    }
    return configuration(rng, k, m, groups, ordered);
}

inline std::vector<Vec> distinct_points(Rng& rng, int m, size_t count) {
    std::vector<Vec> pts;
    while (pts.size() < count) {
        Vec y = rng.vec_in_unit(m);
        if (std::find(pts.begin(), pts.end(), y) == pts.end())
            pts.push_back(std::move(y));
    }
    return pts;
}

// Tubular point inside the disk; with zero_w the zero section is hit exactly.
inline TubularPoint tubular_point(Rng& rng, int k, int m, int r, bool zero_w) {
    Vec x = rng.vec_in_unit(k, 16);
    auto eta = distinct_points(rng, m, static_cast<size_t>(r));
    std::vector<Vec> w(static_cast<size_t>(k), Vec(static_cast<size_t>(r), Rat(0)));
    if (!zero_w) {
        bool nonzero = false;
        for (auto& row : w) {
            Rat sum = 0;
            for (size_t j = 0; j + 1 < row.size(); ++j) {
                row[j] = rng.rat_signed(8);
                sum += row[j];
                if (row[j] != 0)
                    nonzero = true;
            }
            row[row.size() - 1] = -sum;
        }
        if (nonzero) {
            // scale so the squared norm fits inside (d(x)/2)^2
            Rat rho = boundary_distance(x) / 2;
            Rat total = 0;
            for (const auto& row : w)
                total += sq_norm(row);
            Int denom = ceil_isqrt(total / (rho * rho)) + 1 + Int(rng.below(3));
            Rat scale = Rat(1, denom);
            for (auto& row : w)
                for (auto& e : row)
                    e *= scale;
        }
    }
    return TubularPoint(k, m, r, std::move(x), std::move(eta), std::move(w));
}

// canonical labeled configuration; raw entries may include basepoints
inline SphereLabeledConfig labeled_config(Rng& rng, int k, int m, size_t max_entries = 5) {
    size_t n = rng.below(max_entries + 1);
    auto ys = distinct_points(rng, m, n);
    std::vector<LabeledEntry> entries;
    for (auto& y : ys) {
        if (rng.chance(1, 4))
            entries.push_back({std::move(y), std::nullopt});
        else
            entries.push_back({std::move(y), rng.vec_in_unit(k)});
    }
    return SphereLabeledConfig(k, m, std::move(entries));
}

// relative configuration with some shared fibers in both directions
inline RelConfig rel_config(Rng& rng, int k, int m, size_t max_points = 6) {
    size_t n = rng.below(max_points + 1);
    std::vector<RelPoint> pts;
    std::vector<Vec> xs, ys;
    for (size_t i = 0; i < n; ++i) {
        Vec x = (!xs.empty() && rng.chance(1, 3)) ? xs[rng.below(xs.size())] : rng.vec_in_unit(k);
        Vec y = (!ys.empty() && rng.chance(1, 3)) ? ys[rng.below(ys.size())] : rng.vec_in_unit(m);
        RelPoint p{x, y};
        if (std::find(pts.begin(), pts.end(), p) != pts.end())
            continue;
        xs.push_back(p.x);
        ys.push_back(p.y);
        pts.push_back(std::move(p));
    }
    return RelConfig(k, m, std::move(pts));
}

inline GridWalls grid_walls(Rng& rng, int k, size_t max_p = 3, size_t min_walls = 1) {
    std::vector<std::vector<Rat>> walls(static_cast<size_t>(k));
    for (auto& axis : walls) {
        size_t count = std::max(min_walls, 1 + rng.below(max_p + 1));
        while (axis.size() < count) {
            Rat t = rng.rat_between(Rat(1, 4), Rat(3, 4), 32);
            if (std::find(axis.begin(), axis.end(), t) == axis.end())
                axis.push_back(t);
        }
        std::sort(axis.begin(), axis.end());
    }
    return GridWalls(k, std::move(walls));
}

// point strictly between two adjacent walls on every axis (so inside the
// window and off every slab)
inline Vec window_point(Rng& rng, const GridWalls& w) {
    Vec x(static_cast<size_t>(w.k));
    for (size_t j = 0; j < x.size(); ++j) {
        const auto& axis = w.walls[j];
        if (axis.size() == 1) {
            // degenerate window: the only admissible coordinate is the wall
            // itself, which the slab forbids; nudge within (1/4, 3/4) instead
            x[j] = rng.chance(1, 2) ? rng.rat_between(Rat(1, 4), axis[0], 32)
                                    : rng.rat_between(axis[0], Rat(3, 4), 32);
        } else {
            size_t gap = rng.below(axis.size() - 1);
            x[j] = rng.rat_between(axis[gap], axis[gap + 1], 32);
        }
    }
    return x;
}

inline BarSimplex bar_simplex(Rng& rng, int k, int m, BarVariant variant, size_t max_p = 3,
                              size_t max_points = 5) {
    // window simplices need two walls per axis to hold any point at all
    GridWalls walls = grid_walls(rng, k, max_p, variant == BarVariant::window ? 2 : 1);
    bool window_possible = true;
    for (size_t j = 0; j < static_cast<size_t>(k); ++j)
        window_possible = window_possible && walls.walls[j].size() >= 2;

    std::vector<RelPoint> pts;
    size_t n = rng.below(max_points + 1);
    for (size_t i = 0; i < n; ++i) {
        Vec x;
        if (variant == BarVariant::window || (window_possible && rng.chance(1, 2))) {
            if (!window_possible)
                break;
            x = window_point(rng, walls);
        } else if (rng.chance(1, 2)) {
            // a coordinate outside the [1/4, 3/4] band: slab-safe anywhere
            x = rng.vec_in_unit(k, 32);
            size_t axis = rng.below(static_cast<std::uint64_t>(k));
            x[axis] = rng.chance(1, 2) ? rng.rat_between(Rat(0), Rat(1, 4), 32)
                                       : rng.rat_between(Rat(3, 4), Rat(1), 32);
        } else {
            // inside the band but outside the window, off all walls
            x.resize(static_cast<size_t>(k));
            for (size_t j = 0; j < x.size(); ++j) {
                const auto& axis = walls.walls[j];
                if (rng.chance(1, 2))
                    x[j] = rng.rat_between(Rat(1, 4), axis.front(), 32);
                else
                    x[j] = rng.rat_between(axis.back(), Rat(3, 4), 32);
            }
        }
        RelPoint p{std::move(x), rng.vec_in_unit(m, 32)};
        if (std::find(pts.begin(), pts.end(), p) == pts.end())
            pts.push_back(std::move(p));
    }
    return BarSimplex(std::move(walls), variant, RelConfig(k, m, std::move(pts)));
}

// sparse integer matrix for SNF round-trips
inline IMatrix sparse_matrix(Rng& rng, size_t max_dim = 40) {
    size_t rows = 1 + rng.below(max_dim);
    size_t cols = 1 + rng.below(max_dim);
    IMatrix m(rows, std::vector<Int>(cols, 0));
    size_t fill = 1 + rng.below(rows * cols / 6 + 1);
    for (size_t i = 0; i < fill; ++i) {
        size_t r = rng.below(rows), c = rng.below(cols);
        long long v = rng.range(-9, 9);
        if (v != 0)
            m[r][c] = v;
    }
    return m;
}

}  // namespace gen
}  // namespace loopcell
