#pragma once

#include "loopcell/dyer_lashof.hpp"
#include "loopcell/thom.hpp"

namespace loopcell {

// First page of the rank-completion filtration: row p is the reduced F2
// homology of Th(k phi_{m,p}), recorded against total degree p + q.
struct E1Page {
    int k = 0, m = 0, p_max = 0, d_max = 0;
    std::map<std::pair<int, int>, long long> entries;  // (p, q) -> dim

    long long dim(int p, int q) const {
        auto it = entries.find({p, q});
        return it == entries.end() ? 0 : it->second;
    }
};

inline E1Page e1_page(int k, int m, int p_max, int d_max) {
    if (p_max < 1)
        throw std::invalid_argument("e1_page: p_max must be at least 1");
    if (d_max < 0)
        throw std::invalid_argument("e1_page: d_max must be non-negative");
    E1Page page{k, m, p_max, d_max, {}};
    for (int p = 1; p <= p_max; ++p) {
        auto th = thom_dims(k, m, p, d_max);
        for (const auto& [degree, dim] : th.dims) {
            if (degree > d_max)
                continue;
            long long lo = static_cast<long long>(k) * (p - 1);
            long long hi = lo + static_cast<long long>(m - 1) * (p - 1);
            if (degree < lo || degree > hi)
                throw internal_error("e1_page: entry outside the support window");
            page.entries[{p, degree - p}] = dim;  // total degree p + q = degree
        }
    }
    return page;
}

// Degreewise comparison of two independent pipelines: per degree d, the sum
// over p of dim H~_{d-k}(Th(k phi_{m,p}); F2) -- configuration-space homology
// through the Thom shift -- against the dimension of the free E_m-algebra
// basis on a degree-k generator. Every weight unit carries degree at least k,
// so p <= d/k exhausts the contributions.
struct SnaithRow {
    int degree = 0;
    long long thom_side = 0, dl_side = 0;

    bool matches() const { return thom_side == dl_side; }
};

struct SnaithReport {
    int k = 0, m = 0, d_max = 0;
    std::vector<SnaithRow> rows;
    bool pass = true;
};

inline SnaithReport snaith_check(int k, int m, int d_max) {
    if (k < 1)
        throw std::invalid_argument("snaith_check: k must be at least 1");
    if (m < 1)
        throw std::invalid_argument("snaith_check: m must be at least 1");
    if (d_max < 1)
        throw std::invalid_argument("snaith_check: d_max must be at least 1");
    SnaithReport report{k, m, d_max, {}, true};
    long long weight_cap = d_max / k + 1;
    DLBasis dl = dl_basis(m, k, weight_cap, d_max);
    std::vector<ThomDims> thom;
    for (int p = 1; p <= d_max / k; ++p)
        thom.push_back(thom_dims(k, m, p, d_max));
    for (int d = 1; d <= d_max; ++d) {
        SnaithRow row;
        row.degree = d;
        for (const auto& th : thom) {
            auto it = th.dims.find(d - k);
            if (it != th.dims.end())
                row.thom_side += it->second;
        }
        row.dl_side = dl.dim_in_degree(d);
        report.pass = report.pass && row.matches();
        report.rows.push_back(row);
    }
    return report;
}

// Cell structure of the filtration stages: stage r contributes the reduced
// generator degrees of Th(k phi_{m,r}). For m = 1 each stage carries exactly
// one cell, of dimension k(r-1).
struct CellStage {
    int r = 0;
    std::vector<int> degrees;  // with multiplicity
};

struct CellStructure {
    int k = 0, m = 0;
    std::vector<CellStage> stages;
};

inline CellStructure cell_report(int k, int m, int r_max, int d_max) {
    if (r_max < 1)
        throw std::invalid_argument("cell_report: r_max must be at least 1");
    CellStructure out{k, m, {}};
    for (int r = 1; r <= r_max; ++r) {
        CellStage stage;
        stage.r = r;
        auto th = thom_dims(k, m, r, d_max);
        for (const auto& [degree, dim] : th.dims)
            for (long long i = 0; i < dim; ++i)
                stage.degrees.push_back(degree);
        if (m == 1) {
            long long expect = static_cast<long long>(k) * (r - 1);
            if (expect <= d_max &&
                (stage.degrees.size() != 1 || stage.degrees[0] != expect))
                throw internal_error("cell_report: m = 1 stage is not a single k(r-1) cell");
        }
        out.stages.push_back(std::move(stage));
    }
    return out;
}

}  // namespace loopcell
