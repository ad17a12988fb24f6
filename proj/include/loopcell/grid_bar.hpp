#pragma once

#include "loopcell/scanning.hpp"

namespace loopcell {

// Grid walls of P_k(p_1,...,p_k): per axis j a strictly increasing list
// t^j_0 < ... < t^j_{p_j}, all in the open interval (1/4, 3/4).
struct GridWalls {
    int k = 0;
    std::vector<std::vector<Rat>> walls;  // walls[j] has p_j + 1 >= 1 entries

    GridWalls(int k_, std::vector<std::vector<Rat>> ws) : k(k_), walls(std::move(ws)) {
        if (k < 1)
            throw std::invalid_argument("GridWalls: k must be positive");
        if (walls.size() != static_cast<size_t>(k))
            throw std::invalid_argument("GridWalls: need one wall list per axis");
        for (const auto& axis : walls) {
            if (axis.empty())
                throw std::invalid_argument("GridWalls: each axis needs at least one wall");
            for (const auto& t : axis)
                if (!(t > Rat(1, 4) && t < Rat(3, 4)))
                    throw std::invalid_argument("GridWalls: walls must lie in (1/4, 3/4)");
            for (size_t i = 0; i + 1 < axis.size(); ++i)
                if (!(axis[i] < axis[i + 1]))
                    throw std::invalid_argument("GridWalls: walls must strictly increase");
        }
    }

    size_t p(size_t axis) const { return walls[axis].size() - 1; }

    bool operator==(const GridWalls& o) const { return k == o.k && walls == o.walls; }
};

enum class BarVariant {
    window,    // simplex of the bar construction B^{E_k}: points confined to the wall window
    relative,  // simplex of the comparison object X: only wall-slab disjointness
};

namespace detail {

// The slab of wall t on the given axis is [1/4,3/4]^{axis} x {t} x
// [1/4,3/4]^{k-axis-1} x I^m; a point avoids it unless its axis coordinate
// equals t and every other coordinate lies in [1/4, 3/4].
inline bool hits_slab(const Vec& x, size_t axis, const Rat& t) {
    if (x[axis] != t)
        return false;
    for (size_t j = 0; j < x.size(); ++j) {
        if (j == axis)
            continue;
        if (x[j] < Rat(1, 4) || x[j] > Rat(3, 4))
            return false;
    }
    return true;
}

inline bool in_window(const Vec& x, const GridWalls& w) {
    for (size_t j = 0; j < x.size(); ++j)
        if (x[j] < w.walls[j].front() || x[j] > w.walls[j].back())
            return false;
    return true;
}

}  // namespace detail

// Simplex of the k-fold semi-simplicial object: walls plus a configuration.
// Both variants store the configuration as a (canonical) RelConfig; the
// window variant additionally confines points to prod_j [t^j_0, t^j_{p_j}].
struct BarSimplex {
    GridWalls walls;
    BarVariant variant;
    RelConfig config;

    BarSimplex(GridWalls w, BarVariant var, RelConfig conf)
        : walls(std::move(w)), variant(var), config(std::move(conf)) {
        if (config.k != walls.k)
            throw std::invalid_argument("BarSimplex: wall/configuration dimension mismatch");
        for (const auto& p : config.points) {
            for (size_t j = 0; j < static_cast<size_t>(walls.k); ++j)
                for (const auto& t : walls.walls[j])
                    if (detail::hits_slab(p.x, j, t))
                        throw std::invalid_argument("BarSimplex: point lies on a wall slab");
            if (variant == BarVariant::window && !detail::in_window(p.x, walls))
                throw std::invalid_argument("BarSimplex: window simplex has a point outside the window");
        }
    }

    // Window-variant payload as a configuration in I^k x I^m.
    Configuration window_configuration() const {
        if (variant != BarVariant::window)
            throw std::invalid_argument("window_configuration: not a window simplex");
        std::vector<ConfPoint> pts;
        pts.reserve(config.size());
        for (const auto& p : config.points)
            pts.push_back({p.x, p.y});
        return Configuration(config.k, config.m, std::move(pts), /*ordered=*/false);
    }

    bool operator==(const BarSimplex& o) const {
        return walls == o.walls && variant == o.variant && config == o.config;
    }
};

// i-th face in direction `axis`: forget wall t^axis_i. In the window variant
// the outer faces additionally delete the particles beyond the new extreme
// wall; relative faces never delete.
inline BarSimplex bar_face(const BarSimplex& s, size_t axis, size_t index) {
    if (axis >= static_cast<size_t>(s.walls.k))
        throw std::invalid_argument("bar_face: axis out of range");
    const auto& axis_walls = s.walls.walls[axis];
    size_t p = axis_walls.size() - 1;
    if (p < 1)
        throw std::invalid_argument("bar_face: face undefined when p_j = 0");
    if (index > p)
        throw std::invalid_argument("bar_face: face index out of range");

    auto new_walls = s.walls.walls;
    new_walls[axis].erase(new_walls[axis].begin() + static_cast<std::ptrdiff_t>(index));

    std::vector<RelPoint> pts;
    for (const auto& pt : s.config.points) {
        if (s.variant == BarVariant::window) {
            if (index == 0 && pt.x[axis] < axis_walls[1])
                continue;
            if (index == p && pt.x[axis] > axis_walls[p - 1])
                continue;
        }
        pts.push_back(pt);
    }
    return BarSimplex(GridWalls(s.walls.k, std::move(new_walls)), s.variant,
                      RelConfig(s.config.k, s.config.m, std::move(pts)));
}

// f: delete the points outside the wall window and regard the rest as a
// window simplex. Commutes with all face maps.
inline BarSimplex map_f(const BarSimplex& s) {
    if (s.variant != BarVariant::relative)
        throw std::invalid_argument("map_f: expects a relative simplex");
    std::vector<RelPoint> pts;
    for (const auto& p : s.config.points)
        if (detail::in_window(p.x, s.walls))
            pts.push_back(p);
    return BarSimplex(s.walls, BarVariant::window, RelConfig(s.config.k, s.config.m, std::move(pts)));
}

// g: regard a window configuration as a relative one. f o g = id on the nose.
inline BarSimplex map_g(const BarSimplex& s) {
    if (s.variant != BarVariant::window)
        throw std::invalid_argument("map_g: expects a window simplex");
    return BarSimplex(s.walls, BarVariant::relative, s.config);
}

// Homotopy from the identity to g o f: window points stay fixed, every other
// point moves out radially from the cube center c = (1/2,...,1/2) fast enough
// to exit I^k at t = 1 (a point sitting exactly at c, which has no outward
// ray, leaves along the first axis). At isolated rational t a pushed point can
// graze a wall slab or an existing point; the simplex constructor reports
// those degenerate parameters rather than accepting an invalid simplex.
inline BarSimplex retract_outward(const Rat& t, const BarSimplex& s) {
    if (t < 0 || t > 1)
        throw std::invalid_argument("retract_outward: t must lie in [0,1]");
    if (s.variant != BarVariant::relative)
        throw std::invalid_argument("retract_outward: expects a relative simplex");
    Vec c(static_cast<size_t>(s.config.k), Rat(1, 2));
    std::vector<RelPoint> pts;
    pts.reserve(s.config.size());
    for (const auto& p : s.config.points) {
        if (detail::in_window(p.x, s.walls)) {
            pts.push_back(p);
            continue;
        }
        Rat sup = sup_dist(p.x, c);
        Vec moved(p.x);
        if (sup == 0) {
            moved[0] += t * Rat(3, 4);
        } else {
            Rat factor = Rat(1) + t / (2 * sup);  // sup-norm reaches sup + t/2
            for (size_t i = 0; i < moved.size(); ++i)
                moved[i] = c[i] + (p.x[i] - c[i]) * factor;
        }
        pts.push_back({std::move(moved), p.y});
    }
    return BarSimplex(s.walls, BarVariant::relative, RelConfig(s.config.k, s.config.m, std::move(pts)));
}

// The augmentation: forget all walls.
inline RelConfig augment(const BarSimplex& s) {
    if (s.variant != BarVariant::relative)
        throw std::invalid_argument("augment: expects a relative simplex");
    return s.config;
}

}  // namespace loopcell
