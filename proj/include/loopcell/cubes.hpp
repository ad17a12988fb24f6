#pragma once

#include "loopcell/rational.hpp"

#include <numeric>
#include <utility>

namespace loopcell {

// One rectilinear embedding I^k -> I^k: per-axis translation plus positive
// dilation, stored by the image interval (lo_i, hi_i) on each axis.
struct Cube {
    int k = 0;
    std::vector<std::pair<Rat, Rat>> intervals;

    Cube(int k_, std::vector<std::pair<Rat, Rat>> ivs) : k(k_), intervals(std::move(ivs)) {
        if (k <= 0)
            throw std::invalid_argument("Cube: dimension must be positive");
        if (intervals.size() != static_cast<size_t>(k))
            throw std::invalid_argument("Cube: interval count != k");
        for (const auto& [lo, hi] : intervals)
            if (!(Rat(0) <= lo && lo < hi && hi <= Rat(1)))
                throw std::invalid_argument("Cube: need 0 <= lo < hi <= 1 on every axis");
    }

    static Cube identity(int k) {
        return Cube(k, std::vector<std::pair<Rat, Rat>>(static_cast<size_t>(k), {Rat(0), Rat(1)}));
    }

    bool operator==(const Cube& o) const { return k == o.k && intervals == o.intervals; }
};

// Open interiors disjoint; closed endpoints may touch.
inline bool interiors_disjoint(const Cube& a, const Cube& b) {
    for (int i = 0; i < a.k; ++i) {
        const auto& [alo, ahi] = a.intervals[static_cast<size_t>(i)];
        const auto& [blo, bhi] = b.intervals[static_cast<size_t>(i)];
        if (ahi <= blo || bhi <= alo)
            return true;
    }
    return false;
}

// A point of E_k(n), n >= 1. E_k(0) is empty, so empty tuples are rejected.
struct CubeTuple {
    int k = 0;
    std::vector<Cube> cubes;

    CubeTuple(int k_, std::vector<Cube> cs) : k(k_), cubes(std::move(cs)) {
        if (cubes.empty())
            throw std::invalid_argument("CubeTuple: n = 0 is not an operation");
        for (const auto& c : cubes)
            if (c.k != k)
                throw std::invalid_argument("CubeTuple: mixed dimensions");
        for (size_t i = 0; i < cubes.size(); ++i)
            for (size_t j = i + 1; j < cubes.size(); ++j)
                if (!interiors_disjoint(cubes[i], cubes[j]))
                    throw std::invalid_argument("CubeTuple: cube interiors overlap");
    }

    size_t arity() const { return cubes.size(); }

    static CubeTuple identity(int k) { return CubeTuple(k, {Cube::identity(k)}); }

    bool operator==(const CubeTuple& o) const { return k == o.k && cubes == o.cubes; }
};

// Evaluate the embedding at an interior point of I^k.
inline Vec apply_point(const Cube& c, const Vec& p) {
    if (p.size() != static_cast<size_t>(c.k))
        throw std::invalid_argument("apply_point: dimension mismatch");
    if (!in_open_unit(p))
        throw std::invalid_argument("apply_point: point not strictly inside (0,1)^k");
    Vec out(p.size());
    for (size_t i = 0; i < p.size(); ++i) {
        const auto& [lo, hi] = c.intervals[i];
        out[i] = lo + (hi - lo) * p[i];
    }
    return out;
}

inline Vec center(const Cube& c) {
    Vec out(static_cast<size_t>(c.k));
    for (size_t i = 0; i < out.size(); ++i)
        out[i] = (c.intervals[i].first + c.intervals[i].second) / 2;
    return out;
}

// Operadic composition. Result cube (i,j) is outer_i applied to inner[i]_j,
// listed in block order.
inline CubeTuple compose(const CubeTuple& outer, const std::vector<CubeTuple>& inner) {
    if (inner.size() != outer.arity())
        throw std::invalid_argument("compose: inner count != outer arity");
    std::vector<Cube> result;
    for (size_t i = 0; i < outer.arity(); ++i) {
        if (inner[i].k != outer.k)
            throw std::invalid_argument("compose: dimension mismatch");
        const Cube& oc = outer.cubes[i];
        for (const Cube& ic : inner[i].cubes) {
            std::vector<std::pair<Rat, Rat>> ivs(static_cast<size_t>(outer.k));
            for (size_t a = 0; a < ivs.size(); ++a) {
                const auto& [lo, hi] = oc.intervals[a];
                Rat w = hi - lo;
                ivs[a] = {lo + w * ic.intervals[a].first, lo + w * ic.intervals[a].second};
            }
            result.emplace_back(outer.k, std::move(ivs));
        }
    }
    try {
        return CubeTuple(outer.k, std::move(result));
    } catch (const std::invalid_argument& e) {
        // disjointness of the composite is a theorem for valid inputs
        throw internal_error(std::string("compose: result invalid: ") + e.what());
    }
}

inline bool is_permutation(const std::vector<size_t>& sigma) {
    std::vector<bool> seen(sigma.size(), false);
    for (size_t v : sigma) {
        if (v >= sigma.size() || seen[v])
            return false;
        seen[v] = true;
    }
    return true;
}

// Right action: permute(t, sigma)[i] = t[sigma(i)], so that
// permute(permute(t, sigma), tau) = permute(t, sigma o tau).
inline CubeTuple permute(const CubeTuple& t, const std::vector<size_t>& sigma) {
    if (sigma.size() != t.arity() || !is_permutation(sigma))
        throw std::invalid_argument("permute: not a permutation of the tuple indices");
    std::vector<Cube> cubes;
    cubes.reserve(t.arity());
    for (size_t i = 0; i < sigma.size(); ++i)
        cubes.push_back(t.cubes[sigma[i]]);
    return CubeTuple(t.k, std::move(cubes));
}

// Block permutation sigma<n_1,...,n_n> matching the right-action convention:
// flat position (i, j) of the result maps to block sigma(i), offset j, in a
// layout whose q-th block has size sizes[sigma^{-1}(q)]. With it,
//   compose(permute(outer, s), inner)
//     == permute(compose(outer, inner o s^{-1}), block_permutation(s, sizes))
// where sizes[i] = inner[i].arity().
inline std::vector<size_t> block_permutation(const std::vector<size_t>& sigma,
                                             const std::vector<size_t>& sizes) {
    if (sigma.size() != sizes.size() || !is_permutation(sigma))
        throw std::invalid_argument("block_permutation: bad permutation");
    size_t n = sigma.size();
    std::vector<size_t> inv(n);
    for (size_t i = 0; i < n; ++i)
        inv[sigma[i]] = i;
    // offsets in the permuted layout: block q has size sizes[inv[q]]
    std::vector<size_t> offset(n, 0);
    for (size_t q = 1; q < n; ++q)
        offset[q] = offset[q - 1] + sizes[inv[q - 1]];
    std::vector<size_t> flat;
    flat.reserve(std::accumulate(sizes.begin(), sizes.end(), size_t{0}));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < sizes[i]; ++j)
            flat.push_back(offset[sigma[i]] + j);
    return flat;
}

// E_k -> E_{k+m}: each cube gains m trailing identity intervals.
inline CubeTuple stabilize(const CubeTuple& t, int m) {
    if (m < 0)
        throw std::invalid_argument("stabilize: m must be non-negative");
    std::vector<Cube> cubes;
    cubes.reserve(t.arity());
    for (const Cube& c : t.cubes) {
        auto ivs = c.intervals;
        for (int a = 0; a < m; ++a)
            ivs.emplace_back(Rat(0), Rat(1));
        cubes.emplace_back(t.k + m, std::move(ivs));
    }
    return CubeTuple(t.k + m, std::move(cubes));
}

}  // namespace loopcell
