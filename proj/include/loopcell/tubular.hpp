#pragma once

#include "loopcell/config.hpp"
#include "loopcell/rng.hpp"

namespace loopcell {

// Fiber rank of the k-fold Whitney sum of the standard-representation bundle
// over C_r(I^m): k copies of R^{r-1}.
inline long long bundle_rank(int k, int m, int r) {
    if (k < 0 || m < 0)
        throw std::invalid_argument("bundle_rank: negative dimension");
    if (r < 1)
        throw std::invalid_argument("bundle_rank: r must be at least 1");
    return static_cast<long long>(k) * (r - 1);
}

// d(x, boundary of I^k) = min_i min(x_i, 1 - x_i), for interior x.
inline Rat boundary_distance(const Vec& x) {
    if (x.empty())
        throw std::invalid_argument("boundary_distance: empty point");
    Rat best = -1;
    for (const auto& c : x) {
        Rat d = std::min(c, Rat(1) - c);
        if (best < 0 || d < best)
            best = d;
    }
    return best;
}

// A point of the disk bundle D(k phi_{m,r}): base (x, eta) together with a
// k x r displacement matrix w whose rows sum to zero (each row is a vector in
// the orthogonal complement of the diagonal in R^r).
struct TubularPoint {
    int k = 0, m = 0, r = 0;
    Vec x;                   // base point in I^k
    std::vector<Vec> eta;    // r pairwise distinct points in I^m
    std::vector<Vec> w;      // k rows of r rationals, each row summing to 0

    TubularPoint(int k_, int m_, int r_, Vec x_, std::vector<Vec> eta_, std::vector<Vec> w_)
        : k(k_), m(m_), r(r_), x(std::move(x_)), eta(std::move(eta_)), w(std::move(w_)) {
        if (k < 1 || m < 1 || r < 1)
            throw std::invalid_argument("TubularPoint: k, m, r must be positive");
        if (x.size() != static_cast<size_t>(k) || !in_open_unit(x))
            throw std::invalid_argument("TubularPoint: base x must lie in (0,1)^k");
        if (eta.size() != static_cast<size_t>(r))
            throw std::invalid_argument("TubularPoint: eta must list r points");
        for (const auto& p : eta) {
            if (p.size() != static_cast<size_t>(m) || !in_open_unit(p))
                throw std::invalid_argument("TubularPoint: eta points must lie in (0,1)^m");
        }
        for (size_t i = 0; i < eta.size(); ++i)
            for (size_t j = i + 1; j < eta.size(); ++j)
                if (eta[i] == eta[j])
                    throw std::invalid_argument("TubularPoint: degenerate eta (duplicate points)");
        if (w.size() != static_cast<size_t>(k))
            throw std::invalid_argument("TubularPoint: w must have k rows");
        for (const auto& row : w) {
            if (row.size() != static_cast<size_t>(r))
                throw std::invalid_argument("TubularPoint: w rows must have r entries");
            Rat s = 0;
            for (const auto& e : row)
                s += e;
            if (s != 0)
                throw std::invalid_argument("TubularPoint: w rows must sum to zero");
        }
    }

    Rat sq_total() const {
        Rat s = 0;
        for (const auto& row : w)
            s += sq_norm(row);
        return s;
    }

    bool w_is_zero() const {
        for (const auto& row : w)
            for (const auto& e : row)
                if (e != 0)
                    return false;
        return true;
    }
};

enum class DiskRegion { interior, boundary, outside };

// Classify |w|^2 against (d(x, boundary)/2)^2 exactly.
inline DiskRegion sphere_disk_membership(const TubularPoint& b) {
    Rat radius_sq = boundary_distance(b.x) / 2;
    radius_sq *= radius_sq;
    Rat s = b.sq_total();
    if (s < radius_sq)
        return DiskRegion::interior;
    if (s == radius_sq)
        return DiskRegion::boundary;
    return DiskRegion::outside;
}

// Flat exponential: point j of the result is (x + w_col_j, eta_j). Requires
// the disk condition, which keeps all displaced points inside I^k.
inline Configuration exp_tubular(const TubularPoint& b) {
    if (sphere_disk_membership(b) == DiskRegion::outside)
        throw std::domain_error("exp_tubular: displacement exceeds the disk radius");
    std::vector<ConfPoint> pts;
    pts.reserve(static_cast<size_t>(b.r));
    for (int j = 0; j < b.r; ++j) {
        Vec xj(b.x);
        for (int i = 0; i < b.k; ++i)
            xj[static_cast<size_t>(i)] += b.w[static_cast<size_t>(i)][static_cast<size_t>(j)];
        pts.push_back({std::move(xj), b.eta[static_cast<size_t>(j)]});
    }
    try {
        return Configuration(b.k, b.m, std::move(pts), /*ordered=*/true);
    } catch (const std::invalid_argument& e) {
        throw internal_error(std::string("exp_tubular: result invalid: ") + e.what());
    }
}

// True when exact rational points on the sphere bundle exist. For k = 1 and
// r in {2, 3} they provably do not, for any rational radius: 2a^2 = rho^2
// forces sqrt(2) rational, and a^2+b^2+c^2 = rho^2 with a+b+c = 0 reduces to
// 3u^2 + v^2 = 2 rho^2, which has no rational solutions (descent mod 3).
inline bool sphere_point_feasible(int k, int r) { return r >= 2 && (k >= 2 || r >= 4); }

// Exact sample of S(k phi_{m,r}) over base (x, eta): a displacement matrix
// with |w|^2 equal to (d(x, boundary)/2)^2 on the nose. Built from two
// "transposition slots" (+t at one column, -t at another, inside one row)
// whose magnitudes come from a Pythagorean parametrization of the circle
// c1^2 + c2^2 = 1/2.
inline TubularPoint rational_sphere_point(int k, int m, int r, const Vec& x,
                                          const std::vector<Vec>& eta, std::uint64_t seed) {
    if (r < 2)
        throw std::domain_error("rational_sphere_point: sphere is empty for r < 2");
    if (!sphere_point_feasible(k, r))
        throw std::domain_error(
            "rational_sphere_point: no exact rational sphere points exist for k = 1, r in {2, 3}");
    Rng rng(seed);
    Rat rho = boundary_distance(x) / 2;

    long long p = rng.range(2, 6);
    long long q = rng.range(1, p - 1);
    Rat u((p * p - q * q), (p * p + q * q));
    Rat v(2 * p * q, (p * p + q * q));
    Rat c1 = (u + v) / 2, c2 = (u - v) / 2;  // c1^2 + c2^2 = 1/2, both nonzero

    std::vector<Vec> w(static_cast<size_t>(k), Vec(static_cast<size_t>(r), Rat(0)));
    auto place = [&](size_t row, size_t ca, size_t cb, const Rat& t) {
        w[row][ca] += t;
        w[row][cb] -= t;
    };
    if (k >= 2) {
        size_t row1 = rng.below(static_cast<std::uint64_t>(k));
        size_t row2 = (row1 + 1 + rng.below(static_cast<std::uint64_t>(k - 1))) % static_cast<size_t>(k);
        size_t a = rng.below(static_cast<std::uint64_t>(r));
        size_t b = (a + 1 + rng.below(static_cast<std::uint64_t>(r - 1))) % static_cast<size_t>(r);
        place(row1, a, b, rho * c1);
        size_t c = rng.below(static_cast<std::uint64_t>(r));
        size_t d = (c + 1 + rng.below(static_cast<std::uint64_t>(r - 1))) % static_cast<size_t>(r);
        place(row2, c, d, rho * c2);
    } else {
        // k = 1 and r >= 4: two disjoint column pairs in the single row
        auto cols = rng.permutation(static_cast<size_t>(r));
        place(0, cols[0], cols[1], rho * c1);
        place(0, cols[2], cols[3], rho * c2);
    }
    TubularPoint out(k, m, r, x, eta, std::move(w));
    if (sphere_disk_membership(out) != DiskRegion::boundary)
        throw internal_error("rational_sphere_point: output missed the sphere");
    return out;
}

}  // namespace loopcell
