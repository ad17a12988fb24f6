#pragma once

#include "loopcell/chain_complex.hpp"

#include <functional>

namespace loopcell {

namespace fox_neuwirth {

// A stratum of C_n(R^d): sort the points lexicographically and record, for
// each consecutive pair, the first coordinate where they differ (1..d). The
// stratum is an open cell of dimension n d - sum(word_i - 1); together with a
// basepoint these cells assemble the one-point compactification of C_n(R^d).
using Word = std::vector<int>;

inline long long cell_dim(const Word& w, int n, int d) {
    long long dim = static_cast<long long>(n) * d;
    for (int b : w)
        dim -= (b - 1);
    return dim;
}

inline std::string word_label(const Word& w) {
    if (w.empty())
        return "()";
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(w[i]);
    }
    return s;
}

// Mod-2 boundary of a cell: a separator of depth l < d degenerates by the two
// adjacent level-(l+1) blocks meeting at coordinate l; their level-(l+1)
// sub-blocks interleave, each shuffle contributing one codimension-one face.
inline std::map<Word, int> cell_boundary(const Word& w, int d) {
    int n = static_cast<int>(w.size()) + 1;
    std::map<Word, int> out;
    for (int i = 0; i < n - 1; ++i) {
        int l = w[static_cast<size_t>(i)];
        if (l >= d)
            continue;  // deepening would collide two points
        // maximal runs around separator i whose inner separators all exceed l
        int a = i;
        while (a > 0 && w[static_cast<size_t>(a - 1)] > l)
            --a;
        int e = i + 1;
        while (e < n - 1 && w[static_cast<size_t>(e)] > l)
            ++e;
        // split [a..i] and [i+1..e] into level-(l+1) sub-blocks; a fragment is
        // the list of internal separator depths of one sub-block
        auto split = [&](int from, int to) {
            std::vector<Word> frags(1);
            for (int s = from; s < to; ++s) {
                if (w[static_cast<size_t>(s)] == l + 1)
                    frags.emplace_back();
                else
                    frags.back().push_back(w[static_cast<size_t>(s)]);
            }
            return frags;
        };
        std::vector<Word> segs_a = split(a, i);
        std::vector<Word> segs_b = split(i + 1, e);

        Word prefix(w.begin(), w.begin() + a);
        Word suffix(w.begin() + e, w.end());

        std::function<void(size_t, size_t, Word&)> shuffle = [&](size_t ia, size_t ib, Word& acc) {
            if (ia == segs_a.size() && ib == segs_b.size()) {
                Word face = prefix;
                face.insert(face.end(), acc.begin(), acc.end());
                face.insert(face.end(), suffix.begin(), suffix.end());
                out[face] ^= 1;
                return;
            }
            // consecutive sub-blocks of the merged block are separated at
            // depth l+1; ia + ib counts the segments already placed
            auto place = [&](const Word& frag, size_t na, size_t nb) {
                Word saved = acc;
                if (ia + ib > 0)
                    acc.push_back(l + 1);
                acc.insert(acc.end(), frag.begin(), frag.end());
                shuffle(na, nb, acc);
                acc = saved;
            };
            if (ia < segs_a.size())
                place(segs_a[ia], ia + 1, ib);
            if (ib < segs_b.size())
                place(segs_b[ib], ia, ib + 1);
        };
        Word acc;
        shuffle(0, 0, acc);
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second == 0)
            it = out.erase(it);
        else
            ++it;
    }
    return out;
}

}  // namespace fox_neuwirth

// F2 chain complex whose degree-i homology is H_i(C_n(R^d); F2): the dual of
// the compactified Fox-Neuwirth complex, reindexed by codimension (Poincare
// duality over F2 for the open nd-manifold C_n(R^d)).
inline ChainComplex config_complex(int n, int d) {
    if (n < 1 || d < 1)
        throw std::invalid_argument("config_complex: n and d must be positive");
    long long cell_count = 1;
    for (int i = 0; i < n - 1; ++i) {
        cell_count *= d;
        if (cell_count > 4096)
            throw std::invalid_argument("config_complex: parameters exceed desk scale (d^(n-1) > 4096)");
    }

    using fox_neuwirth::Word;
    long long top = static_cast<long long>(d - 1) * (n - 1);  // highest interesting degree
    std::vector<std::vector<Word>> cells_by_degree(static_cast<size_t>(top) + 1);
    std::map<Word, std::pair<size_t, size_t>> index;  // word -> (degree, position)

    std::vector<Word> all;
    Word cur(static_cast<size_t>(n - 1), 1);
    while (true) {
        all.push_back(cur);
        int pos = n - 2;
        while (pos >= 0 && cur[static_cast<size_t>(pos)] == d)
            cur[static_cast<size_t>(pos--)] = 1;
        if (pos < 0)
            break;
        ++cur[static_cast<size_t>(pos)];
    }
    for (const auto& w : all) {
        long long codim = static_cast<long long>(n) * d - fox_neuwirth::cell_dim(w, n, d);
        auto& bucket = cells_by_degree[static_cast<size_t>(codim)];
        index[w] = {static_cast<size_t>(codim), bucket.size()};
        bucket.push_back(w);
    }

    std::vector<std::vector<std::string>> basis(cells_by_degree.size());
    for (size_t deg = 0; deg < cells_by_degree.size(); ++deg)
        for (const auto& w : cells_by_degree[deg])
            basis[deg].push_back(fox_neuwirth::word_label(w));

    std::vector<SparseMatrix> boundaries(cells_by_degree.size());
    for (size_t deg = 0; deg < cells_by_degree.size(); ++deg) {
        boundaries[deg].rows = deg == 0 ? 0 : basis[deg - 1].size();
        boundaries[deg].cols = basis[deg].size();
    }
    // The Fox-Neuwirth differential lowers cell dimension, i.e. raises
    // codimension; its transpose is the boundary of the dual complex.
    for (const auto& w : all) {
        auto [deg_w, pos_w] = index[w];
        for (const auto& [face, parity] : fox_neuwirth::cell_boundary(w, d)) {
            if (parity == 0)
                continue;
            auto [deg_f, pos_f] = index.at(face);
            if (deg_f != deg_w + 1)
                throw internal_error("config_complex: face is not codimension one");
            boundaries[deg_f].triples.push_back({pos_w, pos_f, Int(1)});
        }
    }
    return ChainComplex(Coeff::F2, std::move(basis), std::move(boundaries));
}

// Betti numbers of C_n(R^d) over F2, degrees 0..(d-1)(n-1).
inline std::vector<long long> config_betti(int n, int d) {
    return homology(config_complex(n, d)).betti;
}

}  // namespace loopcell
