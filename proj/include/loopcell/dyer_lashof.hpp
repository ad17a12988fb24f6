#pragma once

#include "loopcell/rational.hpp"

#include <map>

namespace loopcell {

// An iterated operation Q^{i_1} ... Q^{i_s} x on a degree-n generator,
// outermost first. Admissible means, for operations on E_m-algebras:
//   |y| < i <= |y| + m - 1   (strict lower bound: Q^{|y|} is squaring and is
//                             absorbed into the polynomial structure; higher
//                             operations vanish), and
//   i_j <= 2 i_{j+1}         (Adem-reducible compositions are rewritten).
// In lower indexing Q^{|y|+e}y = zeta_e y this reads 1 <= e_1 <= ... <= e_s
// <= m - 1, the classical basis of the free E_m-algebra. Dropping the Adem
// condition over-counts from weight 4 on when m >= 3: it would break the
// Euler characteristic of C_4(R^3), which the stratification pins to 1.
struct DLMonomial {
    int gen_degree = 0;
    std::vector<int> ops;  // outermost first

    long long degree() const {
        long long d = gen_degree;
        for (int i : ops)
            d += i;
        return d;
    }

    long long weight() const { return 1LL << ops.size(); }

    bool is_admissible(int m) const {
        long long below = gen_degree;  // degree of the element each op is applied to
        long long inner = -1;          // upper index of the op applied just before
        for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
            if (!(below < *it && *it <= below + m - 1))
                return false;
            if (inner >= 0 && *it > 2 * inner)
                return false;
            below += *it;
            inner = *it;
        }
        return true;
    }
};

// All admissible monomials with degree <= d_max and weight <= weight_max.
inline std::vector<DLMonomial> admissible_monomials(int m, int n, long long weight_max,
                                                    long long d_max) {
    if (m < 1 || n < 1)
        throw std::invalid_argument("admissible_monomials: m and n must be positive");
    std::vector<DLMonomial> out;
    // grow inside-out: from y of degree `deg` and weight `wt`, apply Q^i
    struct Frame {
        long long deg, wt, outer;  // outer = upper index of the outermost op, -1 for none
        std::vector<int> ops;      // innermost first while building
    };
    std::vector<Frame> stack{{n, 1, -1, {}}};
    while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        if (f.deg <= d_max && f.wt <= weight_max) {
            DLMonomial mono;
            mono.gen_degree = n;
            mono.ops.assign(f.ops.rbegin(), f.ops.rend());
            out.push_back(std::move(mono));
        } else {
            continue;
        }
        if (f.wt * 2 > weight_max)
            continue;
        for (long long i = f.deg + 1; i <= f.deg + m - 1; ++i) {
            if (f.deg + i > d_max)
                break;
            if (f.outer >= 0 && i > 2 * f.outer)
                break;
            Frame g{f.deg + i, f.wt * 2, i, f.ops};
            g.ops.push_back(static_cast<int>(i));
            stack.push_back(std::move(g));
        }
    }
    return out;
}

// Bigraded dimensions of the reduced free graded-commutative F2-algebra on
// the admissible monomials; keys are (degree, weight), products add both.
struct DLBasis {
    int m = 0, n = 0;
    long long weight_max = 0, d_max = 0;
    std::map<std::pair<long long, long long>, long long> dims;

    long long dim(long long degree, long long weight) const {
        auto it = dims.find({degree, weight});
        return it == dims.end() ? 0 : it->second;
    }

    long long dim_in_degree(long long degree) const {
        long long total = 0;
        for (const auto& [key, v] : dims)
            if (key.first == degree)
                total += v;
        return total;
    }
};

inline DLBasis dl_basis(int m, int n, long long weight_max, long long d_max) {
    if (weight_max < 1 || d_max < 0)
        throw std::invalid_argument("dl_basis: bounds must be positive");
    DLBasis out{m, n, weight_max, d_max, {}};
    auto gens = admissible_monomials(m, n, weight_max, d_max);
    // polynomial algebra: unbounded knapsack over the generators
    std::map<std::pair<long long, long long>, long long> dims{{{0, 0}, 1}};
    for (const auto& g : gens) {
        long long gd = g.degree(), gw = g.weight();
        // iterate in increasing (degree, weight) so multiples accumulate
        std::map<std::pair<long long, long long>, long long> next = dims;
        for (long long deg = gd; deg <= d_max; ++deg)
            for (long long wt = gw; wt <= weight_max; ++wt) {
                auto lower = next.find({deg - gd, wt - gw});
                if (lower != next.end() && lower->second != 0)
                    next[{deg, wt}] += lower->second;
            }
        dims = std::move(next);
    }
    dims.erase({0, 0});
    out.dims = std::move(dims);
    return out;
}

}  // namespace loopcell
