#pragma once

#include "loopcell/config.hpp"

#include <optional>

namespace loopcell {

// Entry of a labeled configuration in I^m with labels in S^k. The label is
// either a point of I^k or the basepoint (nullopt); basepoint entries are
// dropped by canonicalization.
struct LabeledEntry {
    Vec y;                       // point in (0,1)^m
    std::optional<Vec> x;        // label: point in (0,1)^k, or basepoint

    bool operator==(const LabeledEntry& o) const { return y == o.y && x == o.x; }
};

// Canonical labeled configuration: no basepoint entries, sorted by y,
// y-points pairwise distinct.
struct SphereLabeledConfig {
    int k = 0, m = 0;
    std::vector<LabeledEntry> entries;

    SphereLabeledConfig(int k_, int m_, std::vector<LabeledEntry> raw) : k(k_), m(m_) {
        if (k < 1 || m < 1)
            throw std::invalid_argument("SphereLabeledConfig: k, m must be positive");
        for (auto& e : raw) {
            if (e.y.size() != static_cast<size_t>(m) || !in_open_unit(e.y))
                throw std::invalid_argument("SphereLabeledConfig: y must lie in (0,1)^m");
            if (e.x) {
                if (e.x->size() != static_cast<size_t>(k) || !in_open_unit(*e.x))
                    throw std::invalid_argument("SphereLabeledConfig: label must lie in (0,1)^k");
                entries.push_back(std::move(e));
            }
        }
        std::sort(entries.begin(), entries.end(), [](const LabeledEntry& a, const LabeledEntry& b) {
            return std::lexicographical_compare(a.y.begin(), a.y.end(), b.y.begin(), b.y.end());
        });
        for (size_t i = 0; i + 1 < entries.size(); ++i)
            if (entries[i].y == entries[i + 1].y)
                throw std::invalid_argument("SphereLabeledConfig: y-points must be distinct");
    }

    bool operator==(const SphereLabeledConfig& o) const {
        return k == o.k && m == o.m && entries == o.entries;
    }
};

struct RelPoint {
    Vec x;  // point of R^k, arbitrary rationals
    Vec y;  // point of (0,1)^m

    bool operator==(const RelPoint& o) const { return x == o.x && y == o.y; }
    bool operator<(const RelPoint& o) const {
        if (x != o.x)
            return std::lexicographical_compare(x.begin(), x.end(), o.x.begin(), o.x.end());
        return std::lexicographical_compare(y.begin(), y.end(), o.y.begin(), o.y.end());
    }
};

// Configuration in (R^k, R^k \ I^k) x I^m, stored by its canonical
// representative: only points whose x lies in the open cube I^k are kept.
struct RelConfig {
    int k = 0, m = 0;
    std::vector<RelPoint> points;

    RelConfig(int k_, int m_, std::vector<RelPoint> raw) : k(k_), m(m_) {
        if (k < 1 || m < 1)
            throw std::invalid_argument("RelConfig: k, m must be positive");
        for (auto& p : raw) {
            if (p.x.size() != static_cast<size_t>(k) || p.y.size() != static_cast<size_t>(m))
                throw std::invalid_argument("RelConfig: point dimension mismatch");
            if (!in_open_unit(p.y))
                throw std::invalid_argument("RelConfig: y must lie in (0,1)^m");
            if (in_open_unit(p.x))
                points.push_back(std::move(p));  // points outside I^k vanish
        }
        std::sort(points.begin(), points.end());
        for (size_t i = 0; i + 1 < points.size(); ++i)
            if (points[i] == points[i + 1])
                throw std::invalid_argument("RelConfig: points must be pairwise distinct");
    }

    size_t size() const { return points.size(); }

    bool operator==(const RelConfig& o) const {
        return k == o.k && m == o.m && points == o.points;
    }
};

// Multiplicity of the C^[r] filtration: most points over one exact x in I^k.
inline size_t fiber_multiplicity(const RelConfig& conf) {
    std::map<Vec, size_t> groups;
    for (const auto& p : conf.points)
        ++groups[p.x];
    size_t best = 0;
    for (const auto& [x, c] : groups)
        best = std::max(best, c);
    return best;
}

// Most points over one exact y; the scanning fibers of R^k x I^m -> I^m.
inline size_t max_points_per_y(const RelConfig& conf) {
    std::map<Vec, size_t> groups;
    for (const auto& p : conf.points)
        ++groups[p.y];
    size_t best = 0;
    for (const auto& [y, c] : groups)
        best = std::max(best, c);
    return best;
}

// rho: labeled entry (y, x) becomes the point (x, y). The image has at most
// one point per y-fiber since y-points of the input are distinct.
inline RelConfig rho(const SphereLabeledConfig& lambda) {
    std::vector<RelPoint> pts;
    pts.reserve(lambda.entries.size());
    for (const auto& e : lambda.entries)
        pts.push_back({*e.x, e.y});
    return RelConfig(lambda.k, lambda.m, std::move(pts));
}

// The scaling radius eta(xi): half the second-smallest sup-distance from the
// cube center c = (1/2,...,1/2) within a y-fiber, minimized over fibers with
// at least two points. nullopt means +infinity (every fiber a singleton, no
// push needed). In every multi-point fiber all non-closest points then sit at
// sup-distance >= 2 eta from c.
inline std::optional<Rat> eta_radius(const RelConfig& xi) {
    Vec c(static_cast<size_t>(xi.k), Rat(1, 2));
    std::map<Vec, std::vector<Rat>> fibers;
    for (const auto& p : xi.points)
        fibers[p.y].push_back(sup_dist(p.x, c));
    std::optional<Rat> eta;
    for (auto& [y, dists] : fibers) {
        if (dists.size() < 2)
            continue;
        std::sort(dists.begin(), dists.end());
        Rat half_second = dists[1] / 2;
        if (!eta || half_second < *eta)
            eta = half_second;
    }
    return eta;
}

// The radial rescaling phi^R_t recentered at c: fixes the closed sup-ball of
// radius R, scales u = x - c by 1 + t (|u| - R) C(R) outside it. The slope
// C(R) = max(4, (1-4R)/(4R^2)) makes every point with |u| >= 2R leave I^k at
// t = 1, which is exactly what eta_radius guarantees for the points that must
// vanish. (No constant slope can expel points arbitrarily close to radius R;
// only the 2R gap matters.)
inline Rat push_slope(const Rat& radius) {
    Rat c(4);
    if (radius > 0 && radius < Rat(1, 4)) {
        Rat steep = (Rat(1) - 4 * radius) / (4 * radius * radius);
        if (steep > c)
            c = steep;
    }
    return c;
}

// H(t, xi) = (phi_t^{eta(xi)} x id)_* xi, canonicalized. Pure in (t, xi).
inline RelConfig scan_homotopy(const Rat& t, const RelConfig& xi) {
    if (t < 0 || t > 1)
        throw std::invalid_argument("scan_homotopy: t must lie in [0,1]");
    auto eta = eta_radius(xi);
    if (!eta || t == 0)
        return xi;
    Rat radius = *eta;
    Rat slope = push_slope(radius);
    Vec c(static_cast<size_t>(xi.k), Rat(1, 2));
    std::vector<RelPoint> pts;
    pts.reserve(xi.size());
    for (const auto& p : xi.points) {
        Vec u(p.x);
        for (size_t i = 0; i < u.size(); ++i)
            u[i] -= c[i];
        Rat s = sup_dist(p.x, c);
        if (s <= radius) {
            pts.push_back(p);
            continue;
        }
        Rat factor = Rat(1) + t * (s - radius) * slope;
        Vec moved(c);
        for (size_t i = 0; i < u.size(); ++i)
            moved[i] += u[i] * factor;
        pts.push_back({std::move(moved), p.y});
    }
    return RelConfig(xi.k, xi.m, std::move(pts));
}

// h: the t = 1 endpoint of the homotopy, reread as a labeled configuration.
// Surviving point (x, y) becomes the entry (y, label x); empty fibers are
// omitted. On canonical rho-images this is exactly the identity, because all
// fibers are singletons and nothing is pushed.
inline SphereLabeledConfig collapse(const RelConfig& xi) {
    RelConfig scanned = scan_homotopy(Rat(1), xi);
    if (max_points_per_y(scanned) > 1)
        throw internal_error("collapse: scan endpoint left a fiber with two points");
    std::vector<LabeledEntry> entries;
    entries.reserve(scanned.size());
    for (const auto& p : scanned.points)
        entries.push_back({p.y, p.x});
    return SphereLabeledConfig(xi.k, xi.m, std::move(entries));
}

}  // namespace loopcell
