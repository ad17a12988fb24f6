#pragma once

#include "loopcell/config_complex.hpp"
#include "loopcell/tubular.hpp"

namespace loopcell {

// Reduced F2 dimensions of the Thom space of k phi_{m,r}. Over F2 the Thom
// isomorphism needs no orientation, so this is the homology of C_r(R^m)
// shifted up by the bundle rank k(r-1). For r = 1 the bundle has rank 0 over
// a contractible base and Th = S^0, a single class in degree 0.
struct ThomDims {
    int k = 0, m = 0, r = 0;
    std::map<int, long long> dims;  // degree -> dim of reduced H_*(Th; F2)
};

inline ThomDims thom_dims(int k, int m, int r, int d_max) {
    if (k < 1 || m < 1)
        throw std::invalid_argument("thom_dims: k and m must be positive");
    if (r < 1)
        throw std::invalid_argument("thom_dims: r must be at least 1");
    ThomDims out{k, m, r, {}};
    long long shift = bundle_rank(k, m, r);
    auto betti = config_betti(r, m);
    for (size_t i = 0; i < betti.size(); ++i) {
        long long degree = shift + static_cast<long long>(i);
        if (degree > d_max)
            break;
        if (betti[i] != 0)
            out.dims[static_cast<int>(degree)] = betti[i];
    }
    return out;
}

// Matrix of a permutation acting on the standard representation R^{r-1},
// written in the basis u_i = e_i - e_r, i = 1..r-1.
inline IMatrix standard_rep_matrix(int r, const std::vector<size_t>& sigma) {
    if (sigma.size() != static_cast<size_t>(r) || !is_permutation(sigma))
        throw std::invalid_argument("standard_rep_matrix: not a permutation of {0..r-1}");
    size_t n = static_cast<size_t>(r) - 1;
    IMatrix mat(n, std::vector<Int>(n, 0));
    // sigma . u_i = e_{sigma(i)} - e_{sigma(r-1)} = u_{sigma(i)} - u_{sigma(r-1)}, u_{r-1} := 0
    for (size_t i = 0; i < n; ++i) {
        size_t si = sigma[i], sr = sigma[n];
        if (si < n)
            mat[si][i] += 1;
        if (sr < n)
            mat[sr][i] -= 1;
    }
    return mat;
}

// Determinant of sigma acting on the fiber (R^{r-1})^k, computed from the
// explicit standard-representation matrix; equals sign(sigma)^k.
inline int monodromy_sign(int k, int r, const std::vector<size_t>& sigma) {
    if (k < 0)
        throw std::invalid_argument("monodromy_sign: k must be non-negative");
    if (r < 1)
        throw std::invalid_argument("monodromy_sign: r must be at least 1");
    if (r == 1)
        return 1;
    Int det = bareiss_det(standard_rep_matrix(r, sigma));
    if (det != 1 && det != -1)
        throw internal_error("monodromy_sign: permutation matrix with |det| != 1");
    if (k % 2 == 0)
        return 1;
    return det == 1 ? 1 : -1;
}

// k phi_{m,r} is orientable iff every loop in the base acts with determinant
// +1 on the fiber. Transposition loops exist whenever m >= 2 and r >= 2 and
// act by (-1)^k; for m = 1 the base is contractible.
inline bool orientable(int k, int m, int r) {
    if (k < 1 || m < 1)
        throw std::invalid_argument("orientable: k and m must be positive");
    if (r < 1)
        throw std::invalid_argument("orientable: r must be at least 1");
    return k % 2 == 0 || r <= 1 || m == 1;
}

}  // namespace loopcell
