#pragma once

#include "loopcell/snf.hpp"

#include <map>
#include <string>
#include <tuple>

namespace loopcell {

enum class Coeff { Z, F2 };

// Boundary matrix in (row, col, value) triples; rows index the target basis.
struct SparseMatrix {
    size_t rows = 0, cols = 0;
    std::vector<std::tuple<size_t, size_t, Int>> triples;

    IMatrix dense() const {
        IMatrix m(rows, std::vector<Int>(cols, 0));
        for (const auto& [r, c, v] : triples) {
            if (r >= rows || c >= cols)
                throw std::invalid_argument("SparseMatrix: triple out of range");
            m[r][c] += v;
        }
        return m;
    }
};

// Rank over F2 via bitset Gaussian elimination.
inline size_t f2_rank(const SparseMatrix& m) {
    size_t words = (m.cols + 63) / 64;
    std::vector<std::vector<std::uint64_t>> bits(m.rows, std::vector<std::uint64_t>(words, 0));
    for (const auto& [r, c, v] : m.triples) {
        if (r >= m.rows || c >= m.cols)
            throw std::invalid_argument("f2_rank: triple out of range");
        if (v % 2 != 0)
            bits[r][c / 64] ^= (std::uint64_t{1} << (c % 64));
    }
    size_t rank = 0;
    for (size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        size_t w = col / 64;
        std::uint64_t mask = std::uint64_t{1} << (col % 64);
        size_t pivot = rank;
        while (pivot < m.rows && !(bits[pivot][w] & mask))
            ++pivot;
        if (pivot == m.rows)
            continue;
        std::swap(bits[rank], bits[pivot]);
        for (size_t i = 0; i < m.rows; ++i) {
            if (i != rank && (bits[i][w] & mask))
                for (size_t j = w; j < words; ++j)
                    bits[i][j] ^= bits[rank][j];
        }
        ++rank;
    }
    return rank;
}

inline size_t rank_z(const SparseMatrix& m) {
    auto snf = smith_normal_form(m.dense());
    size_t r = 0;
    for (const auto& d : snf.diagonal())
        if (d != 0)
            ++r;
    return r;
}

// Graded chain complex with sparse boundaries d_d : C_d -> C_{d-1}.
// boundaries[d] is the boundary out of degree d; boundaries[0] maps to zero.
// d o d = 0 is checked at construction.
struct ChainComplex {
    Coeff coeff = Coeff::F2;
    std::vector<std::vector<std::string>> basis;  // basis[d] = labels in degree d
    std::vector<SparseMatrix> boundaries;

    ChainComplex(Coeff c, std::vector<std::vector<std::string>> b, std::vector<SparseMatrix> bd)
        : coeff(c), basis(std::move(b)), boundaries(std::move(bd)) {
        if (boundaries.size() != basis.size())
            throw std::invalid_argument("ChainComplex: need one boundary per degree");
        for (size_t d = 0; d < basis.size(); ++d) {
            size_t expect_rows = d == 0 ? 0 : basis[d - 1].size();
            if (boundaries[d].cols != basis[d].size() || boundaries[d].rows != expect_rows)
                throw std::invalid_argument("ChainComplex: boundary shape mismatch in degree " +
                                            std::to_string(d));
        }
        for (size_t d = 1; d + 1 < basis.size(); ++d) {
            if (!composes_to_zero(boundaries[d], boundaries[d + 1]))
                throw std::invalid_argument("ChainComplex: d o d != 0 between degrees " +
                                            std::to_string(d + 1) + " and " + std::to_string(d - 1));
        }
    }

    size_t top_degree() const { return basis.empty() ? 0 : basis.size() - 1; }

    bool composes_to_zero(const SparseMatrix& outer, const SparseMatrix& inner) const {
        // outer * inner, accumulated exactly and reduced per the coefficient ring
        std::map<std::pair<size_t, size_t>, Int> acc;
        std::map<size_t, std::vector<std::pair<size_t, Int>>> outer_by_col;
        for (const auto& [r, c, v] : outer.triples)
            outer_by_col[c].push_back({r, v});
        for (const auto& [r, c, v] : inner.triples) {
            auto it = outer_by_col.find(r);
            if (it == outer_by_col.end())
                continue;
            for (const auto& [rr, vv] : it->second)
                acc[{rr, c}] += vv * v;
        }
        for (const auto& [rc, v] : acc) {
            if (coeff == Coeff::F2 ? (v % 2 != 0) : (v != 0))
                return false;
        }
        return true;
    }
};

// Betti numbers per degree; over Z also the torsion divisors of H_d (the
// diagonal entries > 1 of the Smith form of the incoming boundary).
struct HomologyResult {
    std::vector<long long> betti;
    std::vector<std::vector<Int>> torsion;  // empty lists over F2
};

inline HomologyResult homology(const ChainComplex& c) {
    size_t degrees = c.basis.size();
    HomologyResult out;
    out.betti.assign(degrees, 0);
    out.torsion.assign(degrees, {});
    std::vector<size_t> ranks(degrees + 1, 0);
    std::vector<std::vector<Int>> divisors(degrees + 1);
    for (size_t d = 1; d < degrees; ++d) {
        if (c.coeff == Coeff::F2) {
            ranks[d] = f2_rank(c.boundaries[d]);
        } else {
            auto snf = smith_normal_form(c.boundaries[d].dense());
            for (const auto& v : snf.diagonal())
                if (v != 0) {
                    ++ranks[d];
                    if (v != 1 && v != -1)
                        divisors[d].push_back(v < 0 ? Int(-v) : v);
                }
        }
    }
    for (size_t d = 0; d < degrees; ++d) {
        long long n = static_cast<long long>(c.basis[d].size());
        long long incoming = d + 1 < degrees ? static_cast<long long>(ranks[d + 1]) : 0;
        out.betti[d] = n - static_cast<long long>(ranks[d]) - incoming;
        if (out.betti[d] < 0)
            throw internal_error("homology: negative Betti number");
        if (c.coeff == Coeff::Z && d + 1 < degrees)
            out.torsion[d] = divisors[d + 1];
    }
    return out;
}

}  // namespace loopcell
