#pragma once

#include "loopcell/cubes.hpp"

#include <algorithm>
#include <map>

namespace loopcell {

// A point of I^k x I^m with exact coordinates.
struct ConfPoint {
    Vec x;  // k coordinates, each in (0,1)
    Vec y;  // m coordinates, each in (0,1)

    bool operator==(const ConfPoint& o) const { return x == o.x && y == o.y; }
    bool operator<(const ConfPoint& o) const {
        if (x != o.x)
            return std::lexicographical_compare(x.begin(), x.end(), o.x.begin(), o.x.end());
        return std::lexicographical_compare(y.begin(), y.end(), o.y.begin(), o.y.end());
    }
};

// Finite configuration in I^k x I^m. Ordered configurations keep list order
// and reject n = 0; unordered ones are stored canonically sorted and may be
// empty.
struct Configuration {
    int k = 0;
    int m = 0;
    bool ordered = true;
    std::vector<ConfPoint> points;

    Configuration(int k_, int m_, std::vector<ConfPoint> pts, bool ordered_ = true)
        : k(k_), m(m_), ordered(ordered_), points(std::move(pts)) {
        if (k < 0 || m < 0)
            throw std::invalid_argument("Configuration: negative dimension");
        if (ordered && points.empty())
            throw std::invalid_argument("Configuration: ordered model rejects n = 0");
        for (const auto& p : points) {
            if (p.x.size() != static_cast<size_t>(k) || p.y.size() != static_cast<size_t>(m))
                throw std::invalid_argument("Configuration: point dimension mismatch");
            if (!in_open_unit(p.x) || !in_open_unit(p.y))
                throw std::invalid_argument("Configuration: coordinates must lie in (0,1)");
        }
        if (!ordered)
            std::sort(points.begin(), points.end());
        for (size_t i = 0; i + 1 < points.size(); ++i)
            for (size_t j = i + 1; j < points.size(); ++j)
                if (points[i] == points[j])
                    throw std::invalid_argument("Configuration: points must be pairwise distinct");
    }

    size_t size() const { return points.size(); }

    bool operator==(const Configuration& o) const {
        return k == o.k && m == o.m && ordered == o.ordered && points == o.points;
    }
};

// Largest number of points sharing one exact x-value (the fiber {x} x I^m).
inline size_t fiber_multiplicity(const Configuration& conf) {
    std::map<Vec, size_t> groups;
    for (const auto& p : conf.points)
        ++groups[p.x];
    size_t best = 0;
    for (const auto& [x, c] : groups)
        best = std::max(best, c);
    return best;
}

inline bool in_filtration(const Configuration& conf, long long r) {
    if (r < 0)
        throw std::invalid_argument("in_filtration: r must be non-negative");
    return static_cast<long long>(fiber_multiplicity(conf)) <= r;
}

// Left E_k-module action: apply cube i to the x-coordinates of part i and
// take the union of the images, in block order.
inline Configuration act(const CubeTuple& op, const std::vector<Configuration>& parts) {
    if (parts.size() != op.arity())
        throw std::invalid_argument("act: part count != operation arity");
    int m = -1;
    bool all_ordered = true;
    for (const auto& part : parts) {
        if (part.k != op.k)
            throw std::invalid_argument("act: configuration dimension mismatch");
        if (part.size() == 0)
            throw std::invalid_argument("act: parts must be nonempty");
        if (m < 0)
            m = part.m;
        else if (part.m != m)
            throw std::invalid_argument("act: mixed fiber dimensions");
        all_ordered = all_ordered && part.ordered;
    }
    std::vector<ConfPoint> pts;
    for (size_t i = 0; i < parts.size(); ++i)
        for (const auto& p : parts[i].points)
            pts.push_back({apply_point(op.cubes[i], p.x), p.y});
    try {
        return Configuration(op.k, m, std::move(pts), all_ordered);
    } catch (const std::invalid_argument& e) {
        // distinctness follows from disjoint cube interiors
        throw internal_error(std::string("act: result invalid: ") + e.what());
    }
}

}  // namespace loopcell
