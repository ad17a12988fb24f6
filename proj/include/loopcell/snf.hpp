#pragma once

#include "loopcell/rational.hpp"

namespace loopcell {

using IMatrix = std::vector<std::vector<Int>>;

inline IMatrix identity_matrix(size_t n) {
    IMatrix id(n, std::vector<Int>(n, 0));
    for (size_t i = 0; i < n; ++i)
        id[i][i] = 1;
    return id;
}

inline void check_rectangular(const IMatrix& m) {
    for (const auto& row : m)
        if (row.size() != (m.empty() ? 0 : m[0].size()))
            throw std::invalid_argument("matrix rows have unequal lengths");
}

inline IMatrix mat_mul(const IMatrix& a, const IMatrix& b) {
    size_t n = a.size(), p = a.empty() ? 0 : a[0].size(), q = b.empty() ? 0 : b[0].size();
    if (p != b.size())
        throw std::invalid_argument("mat_mul: shape mismatch");
    IMatrix out(n, std::vector<Int>(q, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < p; ++k) {
            if (a[i][k] == 0)
                continue;
            for (size_t j = 0; j < q; ++j)
                out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

// Fraction-free determinant (Bareiss). Exact over cpp_int.
inline Int bareiss_det(IMatrix a) {
    size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n)
            throw std::invalid_argument("bareiss_det: matrix not square");
    if (n == 0)
        return 1;
    Int sign = 1, prev = 1;
    for (size_t t = 0; t + 1 < n; ++t) {
        if (a[t][t] == 0) {
            size_t pivot = t;
            while (pivot < n && a[pivot][t] == 0)
                ++pivot;
            if (pivot == n)
                return 0;
            std::swap(a[t], a[pivot]);
            sign = -sign;
        }
        for (size_t i = t + 1; i < n; ++i)
            for (size_t j = t + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[t][t] - a[i][t] * a[t][j]) / prev;
        prev = a[t][t];
    }
    return sign * a[n - 1][n - 1];
}

struct SnfResult {
    IMatrix u, s, v;  // u * input * v = s, with u, v unimodular
    int det_u = 1;    // tracked determinants, always +1 or -1
    int det_v = 1;

    // diagonal entries d_1 | d_2 | ... including trailing zeros
    std::vector<Int> diagonal() const {
        std::vector<Int> d;
        size_t n = std::min(s.size(), s.empty() ? 0 : s[0].size());
        for (size_t i = 0; i < n; ++i)
            d.push_back(s[i][i]);
        return d;
    }
};

// Smith normal form by elementary row/column operations, pivoting on the
// smallest nonzero entry and folding non-divisible entries into the pivot.
inline SnfResult smith_normal_form(const IMatrix& input) {
    check_rectangular(input);
    size_t rows = input.size(), cols = input.empty() ? 0 : input[0].size();
    SnfResult res;
    res.s = input;
    res.u = identity_matrix(rows);
    res.v = identity_matrix(cols);
    IMatrix& s = res.s;

    auto row_swap = [&](size_t a, size_t b) {
        if (a == b)
            return;
        std::swap(s[a], s[b]);
        std::swap(res.u[a], res.u[b]);
        res.det_u = -res.det_u;
    };
    auto col_swap = [&](size_t a, size_t b) {
        if (a == b)
            return;
        for (size_t i = 0; i < rows; ++i)
            std::swap(s[i][a], s[i][b]);
        for (size_t i = 0; i < cols; ++i)
            std::swap(res.v[i][a], res.v[i][b]);
        res.det_v = -res.det_v;
    };
    auto row_add = [&](size_t dst, size_t src, const Int& q) {  // row dst += q * row src
        for (size_t j = 0; j < cols; ++j)
            s[dst][j] += q * s[src][j];
        for (size_t j = 0; j < rows; ++j)
            res.u[dst][j] += q * res.u[src][j];
    };
    auto col_add = [&](size_t dst, size_t src, const Int& q) {  // col dst += q * col src
        for (size_t i = 0; i < rows; ++i)
            s[i][dst] += q * s[i][src];
        for (size_t i = 0; i < cols; ++i)
            res.v[i][dst] += q * res.v[i][src];
    };
    auto row_negate = [&](size_t a) {
        for (size_t j = 0; j < cols; ++j)
            s[a][j] = -s[a][j];
        for (size_t j = 0; j < rows; ++j)
            res.u[a][j] = -res.u[a][j];
        res.det_u = -res.det_u;
    };

    size_t t = 0;
    size_t bound = std::min(rows, cols);
    while (t < bound) {
        // smallest nonzero entry of the trailing submatrix
        size_t pr = t, pc = t;
        Int best = 0;
        for (size_t i = t; i < rows; ++i)
            for (size_t j = t; j < cols; ++j) {
                if (s[i][j] == 0)
                    continue;
                Int a = abs(s[i][j]);
                if (best == 0 || a < best) {
                    best = a;
                    pr = i;
                    pc = j;
                }
            }
        if (best == 0)
            break;
        row_swap(t, pr);
        col_swap(t, pc);
        if (s[t][t] < 0)
            row_negate(t);

        bool clean = true;
        for (size_t i = t + 1; i < rows; ++i) {
            if (s[i][t] == 0)
                continue;
            Int q = s[i][t] / s[t][t];
            row_add(i, t, -q);
            if (s[i][t] != 0)
                clean = false;  // remainder left, smaller pivot available next pass
        }
        for (size_t j = t + 1; j < cols; ++j) {
            if (s[t][j] == 0)
                continue;
            Int q = s[t][j] / s[t][t];
            col_add(j, t, -q);
            if (s[t][j] != 0)
                clean = false;
        }
        if (!clean)
            continue;

        // enforce the divisibility chain: fold any entry the pivot misses
        bool fold = false;
        for (size_t i = t + 1; i < rows && !fold; ++i)
            for (size_t j = t + 1; j < cols && !fold; ++j)
                if (s[i][j] % s[t][t] != 0) {
                    row_add(t, i, 1);
                    fold = true;
                }
        if (fold)
            continue;
        ++t;
    }
    return res;
}

}  // namespace loopcell
