#pragma once

#include "loopcell/chain_complex.hpp"
#include "loopcell/config.hpp"
#include "loopcell/grid_bar.hpp"
#include "loopcell/spectral.hpp"
#include "loopcell/tubular.hpp"

#include <json.hpp>

#include <sstream>

namespace loopcell {

using Json = nlohmann::ordered_json;

// ---- rationals: strings "p/q" (bare integers accepted on input) ----

inline Json rat_to_json(const Rat& q) { return rat_str(q); }

inline Rat rat_from_json(const Json& j) {
    if (!j.is_string())
        throw std::invalid_argument("expected rational as a \"p/q\" string");
    return parse_rat(j.get<std::string>());
}

inline Json vec_to_json(const Vec& v) {
    Json arr = Json::array();
    for (const auto& c : v)
        arr.push_back(rat_to_json(c));
    return arr;
}

inline Vec vec_from_json(const Json& j) {
    if (!j.is_array())
        throw std::invalid_argument("expected an array of rationals");
    Vec v;
    for (const auto& e : j)
        v.push_back(rat_from_json(e));
    return v;
}

// ---- cubes ----

inline Json to_json(const Cube& c) {
    Json ivs = Json::array();
    for (const auto& [lo, hi] : c.intervals)
        ivs.push_back(Json::array({rat_to_json(lo), rat_to_json(hi)}));
    return Json{{"k", c.k}, {"intervals", ivs}};
}

inline Cube cube_from_json(const Json& j) {
    std::vector<std::pair<Rat, Rat>> ivs;
    for (const auto& e : j.at("intervals"))
        ivs.emplace_back(rat_from_json(e.at(0)), rat_from_json(e.at(1)));
    return Cube(j.at("k").get<int>(), std::move(ivs));
}

inline Json to_json(const CubeTuple& t) {
    Json cubes = Json::array();
    for (const auto& c : t.cubes)
        cubes.push_back(to_json(c));
    return Json{{"k", t.k}, {"cubes", cubes}};
}

inline CubeTuple cube_tuple_from_json(const Json& j) {
    std::vector<Cube> cubes;
    for (const auto& e : j.at("cubes"))
        cubes.push_back(cube_from_json(e));
    return CubeTuple(j.at("k").get<int>(), std::move(cubes));
}

// ---- configurations ----

inline Json to_json(const Configuration& conf) {
    Json pts = Json::array();
    for (const auto& p : conf.points)
        pts.push_back(Json{{"x", vec_to_json(p.x)}, {"y", vec_to_json(p.y)}});
    return Json{{"k", conf.k}, {"m", conf.m}, {"ordered", conf.ordered}, {"points", pts}};
}

inline Configuration configuration_from_json(const Json& j) {
    std::vector<ConfPoint> pts;
    for (const auto& e : j.at("points"))
        pts.push_back({vec_from_json(e.at("x")), vec_from_json(e.at("y"))});
    bool ordered = j.contains("ordered") ? j.at("ordered").get<bool>() : !pts.empty();
    return Configuration(j.at("k").get<int>(), j.at("m").get<int>(), std::move(pts), ordered);
}

// ---- tubular points ----

inline Json to_json(const TubularPoint& b) {
    Json eta = Json::array();
    for (const auto& p : b.eta)
        eta.push_back(vec_to_json(p));
    Json w = Json::array();
    for (const auto& row : b.w)
        w.push_back(vec_to_json(row));
    return Json{{"k", b.k}, {"m", b.m}, {"r", b.r},
                {"x", vec_to_json(b.x)}, {"eta", eta}, {"w", w}};
}

inline TubularPoint tubular_point_from_json(const Json& j) {
    std::vector<Vec> eta, w;
    for (const auto& e : j.at("eta"))
        eta.push_back(vec_from_json(e));
    for (const auto& e : j.at("w"))
        w.push_back(vec_from_json(e));
    return TubularPoint(j.at("k").get<int>(), j.at("m").get<int>(), j.at("r").get<int>(),
                        vec_from_json(j.at("x")), std::move(eta), std::move(w));
}

// ---- relative configurations (scan traces) ----

inline Json to_json(const RelConfig& conf) {
    Json pts = Json::array();
    for (const auto& p : conf.points)
        pts.push_back(Json{{"x", vec_to_json(p.x)}, {"y", vec_to_json(p.y)}});
    return Json{{"k", conf.k}, {"m", conf.m}, {"points", pts}};
}

// ---- integer matrices (Smith normal form) ----

inline Json to_json(const IMatrix& m) {
    Json rows = Json::array();
    for (const auto& row : m) {
        Json r = Json::array();
        for (const auto& v : row)
            r.push_back(v.str());
        rows.push_back(r);
    }
    return rows;
}

inline Int int_from_json(const Json& j) {
    if (j.is_string())
        return Int(j.get<std::string>());
    if (j.is_number_integer())
        return Int(j.get<long long>());
    throw std::invalid_argument("expected an integer (number or string)");
}

// {"rows": R, "cols": C, "triples": [[r, c, v], ...]}
inline IMatrix matrix_from_json(const Json& j) {
    size_t rows = j.at("rows").get<size_t>();
    size_t cols = j.at("cols").get<size_t>();
    IMatrix m(rows, std::vector<Int>(cols, 0));
    for (const auto& t : j.at("triples")) {
        size_t r = t.at(0).get<size_t>(), c = t.at(1).get<size_t>();
        if (r >= rows || c >= cols)
            throw std::invalid_argument("matrix triple out of range");
        m[r][c] += int_from_json(t.at(2));
    }
    return m;
}

// ---- chain complexes ----

inline Json to_json(const ChainComplex& c) {
    Json degrees = Json::array();
    for (size_t d = 0; d < c.basis.size(); ++d)
        degrees.push_back(Json{{"degree", d}, {"labels", c.basis[d]}});
    Json bnds = Json::array();
    for (size_t d = 0; d < c.boundaries.size(); ++d) {
        Json triples = Json::array();
        for (const auto& [r, col, v] : c.boundaries[d].triples)
            triples.push_back(Json::array({r, col, v.str()}));
        bnds.push_back(Json{{"degree", d}, {"triples", triples}});
    }
    return Json{{"coefficients", c.coeff == Coeff::F2 ? "F2" : "Z"},
                {"degrees", degrees},
                {"boundaries", bnds}};
}

inline Json to_json(const HomologyResult& h) {
    Json torsion = Json::array();
    for (const auto& divs : h.torsion) {
        Json t = Json::array();
        for (const auto& d : divs)
            t.push_back(d.str());
        torsion.push_back(t);
    }
    return Json{{"betti", h.betti}, {"torsion", torsion}};
}

// ---- spectral reports ----

inline Json to_json(const ThomDims& t) {
    Json dims = Json::array();
    for (const auto& [deg, dim] : t.dims)
        dims.push_back(Json{{"degree", deg}, {"dim", dim}});
    return Json{{"k", t.k}, {"m", t.m}, {"r", t.r}, {"dims", dims}};
}

inline Json to_json(const E1Page& page) {
    Json entries = Json::array();
    for (const auto& [pq, dim] : page.entries)
        entries.push_back(Json{{"p", pq.first},
                               {"q", pq.second},
                               {"total", pq.first + pq.second},
                               {"dim", dim}});
    return Json{{"k", page.k}, {"m", page.m}, {"p_max", page.p_max},
                {"d_max", page.d_max}, {"entries", entries}};
}

inline std::string to_tsv(const E1Page& page) {
    std::ostringstream out;
    out << "p\tq\ttotal\tdim\n";
    for (const auto& [pq, dim] : page.entries)
        out << pq.first << "\t" << pq.second << "\t" << pq.first + pq.second << "\t" << dim << "\n";
    return out.str();
}

inline Json to_json(const SnaithReport& report) {
    Json rows = Json::array();
    for (const auto& row : report.rows)
        rows.push_back(Json{{"degree", row.degree},
                            {"thom_side", row.thom_side},
                            {"dl_side", row.dl_side},
                            {"match", row.matches()}});
    return Json{{"k", report.k}, {"m", report.m}, {"d_max", report.d_max},
                {"pass", report.pass}, {"rows", rows}};
}

inline std::string to_tsv(const SnaithReport& report) {
    std::ostringstream out;
    out << "degree\tthom_side\tdl_side\tmatch\n";
    for (const auto& row : report.rows)
        out << row.degree << "\t" << row.thom_side << "\t" << row.dl_side << "\t"
            << (row.matches() ? "yes" : "no") << "\n";
    return out.str();
}

inline Json to_json(const CellStructure& cs) {
    Json stages = Json::array();
    for (const auto& stage : cs.stages)
        stages.push_back(Json{{"r", stage.r}, {"degrees", stage.degrees}});
    return Json{{"k", cs.k}, {"m", cs.m}, {"stages", stages}};
}

}  // namespace loopcell
