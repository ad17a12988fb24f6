#pragma once

#include "loopcell/config_complex.hpp"
#include "loopcell/generators.hpp"
#include "loopcell/serialization.hpp"
#include "loopcell/spectral.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <future>
#include <semaphore>
#include <thread>

namespace loopcell {

struct SuiteResult {
    std::string name;
    bool pass = true;
    long long checks = 0;
    std::vector<std::string> failures;  // first few, deterministic
    double seconds = 0.0;
};

namespace detail {

struct Checker {
    SuiteResult result;

    explicit Checker(std::string name) { result.name = std::move(name); }

    void check(bool ok, const std::string& what) {
        ++result.checks;
        if (!ok) {
            result.pass = false;
            if (result.failures.size() < 8)
                result.failures.push_back(what);
        }
    }

    template <typename F>
    void guard(F&& body) {
        try {
            body();
        } catch (const std::exception& e) {
            result.pass = false;
            if (result.failures.size() < 8)
                result.failures.push_back(std::string("exception: ") + e.what());
        }
    }
};

}  // namespace detail

struct RunConfig {
    std::uint64_t seed = 0x10c4117ULL;
    long long cases_operad = 500;
    long long cases_filtration = 500;
    long long cases_tubular = 200;
    long long cases_bar = 200;
    long long cases_scanning = 200;
    long long cases_snf = 200;
    int d_max = 6;
    int r_max = 5;
    std::string format = "tsv";  // tsv | json

    void validate() const {
        if (cases_operad < 1 || cases_filtration < 1 || cases_tubular < 1 || cases_bar < 1 ||
            cases_scanning < 1 || cases_snf < 1)
            throw std::invalid_argument("RunConfig: case counts must be positive");
        if (d_max < 1 || r_max < 1)
            throw std::invalid_argument("RunConfig: degree and rank bounds must be positive");
        if (format != "tsv" && format != "json")
            throw std::invalid_argument("RunConfig: format must be tsv or json");
    }
};

// ---- suite 1: operad axioms, exact rational equality ----

inline SuiteResult run_operad_axioms(std::uint64_t seed, long long cases) {
    detail::Checker c("operad axioms");
    auto t0 = std::chrono::steady_clock::now();
    Rng rng(seed);
    for (long long n = 0; n < cases; ++n) {
        c.guard([&] {
            Rng case_rng = rng.fork(static_cast<std::uint64_t>(n));
            int k = static_cast<int>(case_rng.range(1, 3));

            auto [a, bs] = gen::composable_pair(case_rng, k);
            CubeTuple ab = compose(a, bs);
            std::vector<CubeTuple> cs;
            cs.reserve(ab.arity());
            std::vector<std::vector<CubeTuple>> cs_blocks(bs.size());
            for (size_t i = 0; i < bs.size(); ++i)
                for (size_t j = 0; j < bs[i].arity(); ++j) {
                    cs_blocks[i].push_back(gen::cube_tuple(case_rng, k, 1 + case_rng.below(4)));
                    cs.push_back(cs_blocks[i].back());
                }
            CubeTuple lhs = compose(ab, cs);
            std::vector<CubeTuple> bc;
            bc.reserve(bs.size());
            for (size_t i = 0; i < bs.size(); ++i)
                bc.push_back(compose(bs[i], cs_blocks[i]));
            c.check(lhs == compose(a, bc), "associativity failed");

            // unit laws
            std::vector<CubeTuple> ids(a.arity(), CubeTuple::identity(k));
            c.check(compose(CubeTuple::identity(k), {a}) == a, "left unit failed");
            c.check(compose(a, ids) == a, "right unit failed");

            // equivariance under the documented right-action convention
            auto sigma = case_rng.permutation(a.arity());
            std::vector<size_t> inv(sigma.size());
            for (size_t i = 0; i < sigma.size(); ++i)
                inv[sigma[i]] = i;
            std::vector<CubeTuple> permuted_inner;
            permuted_inner.reserve(bs.size());
            for (size_t q = 0; q < bs.size(); ++q)
                permuted_inner.push_back(bs[inv[q]]);
            std::vector<size_t> sizes(bs.size());
            for (size_t i = 0; i < bs.size(); ++i)
                sizes[i] = bs[i].arity();
            CubeTuple eq_lhs = compose(permute(a, sigma), bs);
            CubeTuple eq_rhs =
                permute(compose(a, permuted_inner), block_permutation(sigma, sizes));
            c.check(eq_lhs == eq_rhs, "equivariance failed");

            // the group action composes contravariantly under the right action
            auto tau = case_rng.permutation(ab.arity());
            auto rho_perm = case_rng.permutation(ab.arity());
            std::vector<size_t> st(tau.size());
            for (size_t i = 0; i < tau.size(); ++i)
                st[i] = tau[rho_perm[i]];
            c.check(permute(permute(ab, tau), rho_perm) == permute(ab, st),
                    "permutation action failed");

            // evaluation is natural with respect to composition
            Vec p = case_rng.vec_in_unit(k);
            size_t flat = 0;
            for (size_t i = 0; i < bs.size(); ++i)
                for (size_t j = 0; j < bs[i].arity(); ++j, ++flat) {
                    Vec direct = apply_point(ab.cubes[flat], p);
                    Vec nested = apply_point(a.cubes[i], apply_point(bs[i].cubes[j], p));
                    c.check(direct == nested, "apply_point naturality failed");
                }

            // stabilization commutes with composition
            int extra = static_cast<int>(case_rng.range(0, 2));
            std::vector<CubeTuple> bs_stab;
            for (const auto& b : bs)
                bs_stab.push_back(stabilize(b, extra));
            c.check(stabilize(ab, extra) == compose(stabilize(a, extra), bs_stab),
                    "stabilize/compose compatibility failed");

            // centers of a valid tuple are pairwise distinct
            for (size_t i = 0; i < ab.arity(); ++i)
                for (size_t j = i + 1; j < ab.arity(); ++j)
                    c.check(center(ab.cubes[i]) != center(ab.cubes[j]), "coincident centers");
        });
    }
    c.result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return c.result;
}

// ---- suite 2: the module action respects the fiberwise filtration ----

inline SuiteResult run_filtration_invariance(std::uint64_t seed, long long cases) {
    detail::Checker c("filtration invariance");
    auto t0 = std::chrono::steady_clock::now();
    Rng rng(seed);
    for (long long n = 0; n < cases; ++n) {
        c.guard([&] {
            Rng case_rng = rng.fork(static_cast<std::uint64_t>(n));
            int k = static_cast<int>(case_rng.range(1, 2));
            int m = static_cast<int>(case_rng.range(1, 2));
            size_t arity = 1 + case_rng.below(3);
            CubeTuple op = gen::cube_tuple(case_rng, k, arity);
            std::vector<Configuration> parts;
            size_t expected = 0;
            for (size_t i = 0; i < arity; ++i) {
                parts.push_back(gen::configuration(case_rng, k, m, 5, case_rng.chance(1, 2)));
                expected = std::max(expected, fiber_multiplicity(parts.back()));
            }
            Configuration moved = act(op, parts);
            c.check(fiber_multiplicity(moved) == expected,
                    "act changed the maximal fiber multiplicity");
            long long r = static_cast<long long>(expected);
            c.check(in_filtration(moved, r), "act left F^[max]");
            if (r >= 1)
                c.check(!in_filtration(moved, r - 1), "act dropped below its own multiplicity");

            // associativity of the action with operadic composition
            auto [outer, inner] = gen::composable_pair(case_rng, k, 2);
            std::vector<Configuration> nested_parts;
            std::vector<std::vector<Configuration>> blocks(inner.size());
            for (size_t i = 0; i < inner.size(); ++i)
                for (size_t j = 0; j < inner[i].arity(); ++j) {
                    blocks[i].push_back(gen::configuration(case_rng, k, m, 3, true));
                    nested_parts.push_back(blocks[i].back());
                }
            std::vector<Configuration> acted_blocks;
            for (size_t i = 0; i < inner.size(); ++i)
                acted_blocks.push_back(act(inner[i], blocks[i]));
            c.check(act(compose(outer, inner), nested_parts) == act(outer, acted_blocks),
                    "act does not compose");
        });
    }
    c.result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return c.result;
}

// ---- suite 3: tubular neighborhood invariants ----

inline SuiteResult run_tubular_invariants(std::uint64_t seed, long long cases) {
    detail::Checker c("tubular invariants");
    auto t0 = std::chrono::steady_clock::now();
    Rng rng(seed);
    for (long long n = 0; n < cases; ++n) {
        c.guard([&] {
            Rng case_rng = rng.fork(static_cast<std::uint64_t>(n));
            int k = static_cast<int>(case_rng.range(1, 3));
            int m = static_cast<int>(case_rng.range(1, 2));
            int r = static_cast<int>(case_rng.range(1, 4));
            bool zero_w = n % 4 == 0;
            TubularPoint b = gen::tubular_point(case_rng, k, m, r, zero_w);
            c.check(sphere_disk_membership(b) != DiskRegion::outside,
                    "generator left the disk bundle");
            Configuration image = exp_tubular(b);
            c.check(image.size() == static_cast<size_t>(r), "exp image has wrong cardinality");
            size_t mult = fiber_multiplicity(image);
            if (b.w_is_zero())
                c.check(mult == static_cast<size_t>(r), "zero section missed full multiplicity");
            else
                c.check(mult <= static_cast<size_t>(r - 1),
                        "nonzero displacement kept full multiplicity");

            // exact sphere points classify as boundary and exp into F^[r-1]
            int sk = static_cast<int>(case_rng.range(1, 3));
            int sr = static_cast<int>(case_rng.range(2, 5));
            if (!sphere_point_feasible(sk, sr))
                sk = 2;
            Vec x = case_rng.vec_in_unit(sk, 16);
            auto eta = gen::distinct_points(case_rng, m, static_cast<size_t>(sr));
            TubularPoint s = rational_sphere_point(sk, m, sr, x, eta, case_rng.next_u64());
            c.check(sphere_disk_membership(s) == DiskRegion::boundary,
                    "sphere sample not on the boundary");
            Configuration s_image = exp_tubular(s);
            c.check(in_filtration(s_image, sr - 1), "sphere sample exp not in F^[r-1]");
        });
    }
    c.result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return c.result;
}

// ---- suite 4: grid bar construction identities ----

inline SuiteResult run_bar_identities(std::uint64_t seed, long long cases) {
    detail::Checker c("bar identities");
    auto t0 = std::chrono::steady_clock::now();
    Rng rng(seed);
    for (long long n = 0; n < cases; ++n) {
        c.guard([&] {
            Rng case_rng = rng.fork(static_cast<std::uint64_t>(n));
            int k = static_cast<int>(case_rng.range(1, 2));
            int m = 1;
            BarVariant variant = n % 2 == 0 ? BarVariant::window : BarVariant::relative;
            BarSimplex s = gen::bar_simplex(case_rng, k, m, variant);

            // semi-simplicial identities on one axis: d_i d_j = d_{j-1} d_i, i < j
            for (size_t axis = 0; axis < static_cast<size_t>(k); ++axis) {
                size_t p = s.walls.p(axis);
                if (p < 2)
                    continue;
                for (size_t j = 1; j <= p; ++j)
                    for (size_t i = 0; i < j; ++i)
                        c.check(bar_face(bar_face(s, axis, j), axis, i) ==
                                    bar_face(bar_face(s, axis, i), axis, j - 1),
                                "same-axis simplicial identity failed");
            }
            // faces on different axes commute
            if (k == 2 && s.walls.p(0) >= 1 && s.walls.p(1) >= 1) {
                size_t i = case_rng.below(s.walls.p(0) + 1);
                size_t j = case_rng.below(s.walls.p(1) + 1);
                c.check(bar_face(bar_face(s, 0, i), 1, j) == bar_face(bar_face(s, 1, j), 0, i),
                        "cross-axis faces do not commute");
            }

            if (variant == BarVariant::window) {
                c.check(map_f(map_g(s)) == s, "f o g is not the identity");
                c.check(fiber_multiplicity(map_g(s).config) == fiber_multiplicity(s.config),
                        "g changed the fiber multiplicity");
            } else {
                BarSimplex gf = map_g(map_f(s));
                c.check(retract_outward(Rat(0), s) == s, "retract at t = 0 moved something");
                c.check(retract_outward(Rat(1), s) == gf, "retract endpoint is not g o f");
                Rat t(case_rng.range(1, 96), 97);
                BarSimplex mid = retract_outward(t, s);
                c.check(fiber_multiplicity(mid.config) <= fiber_multiplicity(s.config),
                        "retract increased fiber multiplicity");
                for (const auto& pt : s.config.points)
                    if (detail::in_window(pt.x, s.walls))
                        c.check(std::find(mid.config.points.begin(), mid.config.points.end(),
                                          pt) != mid.config.points.end(),
                                "retract moved a window point");
                // the augmentation forgets walls and is monotone under f
                c.check(augment(s) == s.config, "augmentation altered the configuration");
                for (const auto& pt : augment(gf).points)
                    c.check(std::find(s.config.points.begin(), s.config.points.end(), pt) !=
                                s.config.points.end(),
                            "g o f created a point");
                // inner faces leave the configuration untouched
                for (size_t axis = 0; axis < static_cast<size_t>(k); ++axis) {
                    size_t p = s.walls.p(axis);
                    if (p >= 2) {
                        size_t i = 1 + case_rng.below(p - 1);
                        c.check(augment(bar_face(s, axis, i)) == augment(s),
                                "inner face changed the configuration");
                    }
                }
            }
        });
    }
    c.result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return c.result;
}

// ---- suite 5: scanning maps ----

inline SuiteResult run_scanning_suite(std::uint64_t seed, long long cases) {
    detail::Checker c("scanning maps");
    auto t0 = std::chrono::steady_clock::now();
    Rng rng(seed);
    for (long long n = 0; n < cases; ++n) {
        c.guard([&] {
            Rng case_rng = rng.fork(static_cast<std::uint64_t>(n));
            int k = static_cast<int>(case_rng.range(1, 2));
            int m = static_cast<int>(case_rng.range(1, 2));

            SphereLabeledConfig lambda = gen::labeled_config(case_rng, k, m);
            RelConfig image = rho(lambda);
            c.check(max_points_per_y(image) <= 1, "rho image has a crowded fiber");
            c.check(collapse(image) == lambda, "collapse o rho is not the identity");

            RelConfig xi = gen::rel_config(case_rng, k, m);
            c.check(scan_homotopy(Rat(0), xi) == xi, "scan homotopy not the identity at t = 0");
            size_t mult = fiber_multiplicity(xi);
            for (int step = 0; step <= 9; ++step) {
                RelConfig moved = scan_homotopy(Rat(step, 9), xi);
                c.check(fiber_multiplicity(moved) <= mult,
                        "scan homotopy increased fiber multiplicity");
            }
            c.check(max_points_per_y(scan_homotopy(Rat(1), xi)) <= 1,
                    "scan endpoint left a crowded fiber");
        });
    }
    c.result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return c.result;
}

// ---- suite 6: Smith normal form round-trips ----

inline SuiteResult run_snf_roundtrip(std::uint64_t seed, long long cases) {
    detail::Checker c("smith normal form");
    auto t0 = std::chrono::steady_clock::now();
    Rng rng(seed);
    for (long long n = 0; n < cases; ++n) {
        c.guard([&] {
            Rng case_rng = rng.fork(static_cast<std::uint64_t>(n));
            IMatrix m = gen::sparse_matrix(case_rng);
            SnfResult snf = smith_normal_form(m);
            c.check(mat_mul(mat_mul(snf.u, m), snf.v) == snf.s, "U M V != S");
            Int du = bareiss_det(snf.u), dv = bareiss_det(snf.v);
            c.check(du == snf.det_u && (du == 1 || du == -1), "U not unimodular");
            c.check(dv == snf.det_v && (dv == 1 || dv == -1), "V not unimodular");
            auto diag = snf.diagonal();
            for (size_t i = 0; i < snf.s.size(); ++i)
                for (size_t j = 0; j < snf.s[i].size(); ++j)
                    if (i != j)
                        c.check(snf.s[i][j] == 0, "S not diagonal");
            for (size_t i = 0; i + 1 < diag.size(); ++i) {
                c.check(diag[i] >= 0, "negative diagonal entry");
                if (diag[i] == 0)
                    c.check(diag[i + 1] == 0, "zero before nonzero on the diagonal");
                else
                    c.check(diag[i + 1] % diag[i] == 0, "divisibility chain broken");
            }
        });
    }
    // complexes validate d o d = 0 on construction; build a few as a gate
    c.guard([&] {
        for (auto [n2, d2] : {std::pair{3, 2}, {4, 2}, {5, 2}, {3, 3}, {4, 3}}) {
            ChainComplex complex = config_complex(n2, d2);
            c.check(!complex.basis.empty(), "empty configuration complex");
        }
    });
    c.result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return c.result;
}

// ---- suite 7: configuration model gate ----

inline SuiteResult run_config_model_gate() {
    detail::Checker c("configuration model gate");
    auto t0 = std::chrono::steady_clock::now();
    c.guard([&] {
        for (int n = 1; n <= 6; ++n) {
            auto betti = config_betti(n, 1);
            c.check(betti == std::vector<long long>{1},
                    "C_" + std::to_string(n) + "(R^1) is not acyclic");
        }
        for (int d = 1; d <= 4; ++d) {
            auto betti = config_betti(2, d);
            c.check(betti == std::vector<long long>(static_cast<size_t>(d), 1),
                    "C_2(R^" + std::to_string(d) + ") has wrong homology");
        }
        for (int d : {2, 3})
            for (int n = 1; n <= 5; ++n) {
                auto betti = config_betti(n, d);
                long long window = static_cast<long long>(d - 1) * (n - 1);
                c.check(static_cast<long long>(betti.size()) == window + 1,
                        "homology extends beyond (d-1)(n-1)");
                DLBasis dl = dl_basis(d, 1, n, n + window + 3);
                for (long long i = 0; i <= window; ++i)
                    c.check(betti[static_cast<size_t>(i)] == dl.dim(i + n, n),
                            "C_" + std::to_string(n) + "(R^" + std::to_string(d) +
                                ") disagrees with the operation basis in degree " +
                                std::to_string(i));
                for (long long i = window + 1; i <= window + 3; ++i)
                    c.check(dl.dim(i + n, n) == 0, "operation basis extends beyond the window");
            }
    });
    c.result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return c.result;
}

// ---- suite 8: one cell per stage over the interval ----

inline SuiteResult run_cell_structure_check(int r_max = 5) {
    detail::Checker c("cell structure (m = 1)");
    auto t0 = std::chrono::steady_clock::now();
    c.guard([&] {
        for (int k = 1; k <= 3; ++k) {
            CellStructure cs = cell_report(k, 1, r_max, k * (r_max - 1) + 1);
            c.check(cs.stages.size() == static_cast<size_t>(r_max), "missing stages");
            for (const auto& stage : cs.stages) {
                c.check(stage.degrees.size() == 1, "stage is not a single cell");
                c.check(stage.degrees[0] == k * (stage.r - 1), "cell dimension is not k(r-1)");
            }
        }
    });
    c.result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return c.result;
}

// ---- suite 9: stable consistency of the two homology pipelines ----

inline SuiteResult run_snaith_suite(int d_max = 6) {
    detail::Checker c("snaith consistency");
    auto t0 = std::chrono::steady_clock::now();
    c.guard([&] {
        for (auto [k, m] : {std::pair{1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
            SnaithReport report = snaith_check(k, m, d_max);
            for (const auto& row : report.rows)
                c.check(row.matches(), "mismatch at (k,m,d) = (" + std::to_string(k) + "," +
                                           std::to_string(m) + "," + std::to_string(row.degree) +
                                           ")");
        }
    });
    c.result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return c.result;
}

// ---- suite 10: orientability against explicit monodromy ----

inline SuiteResult run_orientability_suite() {
    detail::Checker c("orientability");
    auto t0 = std::chrono::steady_clock::now();
    c.guard([&] {
        for (int k = 1; k <= 2; ++k)
            for (int m : {2, 3})
                for (int r = 1; r <= 4; ++r) {
                    bool expect = true;
                    for (size_t a = 0; a + 1 < static_cast<size_t>(r); ++a)
                        for (size_t b = a + 1; b < static_cast<size_t>(r); ++b) {
                            std::vector<size_t> tau(static_cast<size_t>(r));
                            for (size_t i = 0; i < tau.size(); ++i)
                                tau[i] = i;
                            std::swap(tau[a], tau[b]);
                            expect = expect && monodromy_sign(k, r, tau) == 1;
                        }
                    c.check(orientable(k, m, r) == expect,
                            "orientability disagrees with monodromy at (k,m,r) = (" +
                                std::to_string(k) + "," + std::to_string(m) + "," +
                                std::to_string(r) + ")");
                }
    });
    c.result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return c.result;
}

// ---- runner and report ----

inline unsigned verify_thread_cap() {
    if (const char* env = std::getenv("LOOPCELL_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1)
            return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

inline std::vector<SuiteResult> run_all(const RunConfig& cfg) {
    cfg.validate();
    std::vector<std::function<SuiteResult()>> suites = {
        [&] { return run_operad_axioms(cfg.seed + 1, cfg.cases_operad); },
        [&] { return run_filtration_invariance(cfg.seed + 2, cfg.cases_filtration); },
        [&] { return run_tubular_invariants(cfg.seed + 3, cfg.cases_tubular); },
        [&] { return run_bar_identities(cfg.seed + 4, cfg.cases_bar); },
        [&] { return run_scanning_suite(cfg.seed + 5, cfg.cases_scanning); },
        [&] { return run_snf_roundtrip(cfg.seed + 6, cfg.cases_snf); },
        [&] { return run_config_model_gate(); },
        [&] { return run_cell_structure_check(cfg.r_max); },
        [&] { return run_snaith_suite(cfg.d_max); },
        [&] { return run_orientability_suite(); },
    };
    unsigned cap = verify_thread_cap();
    std::vector<SuiteResult> results(suites.size());
    if (cap <= 1) {
        for (size_t i = 0; i < suites.size(); ++i)
            results[i] = suites[i]();
        return results;
    }
    std::counting_semaphore<64> slots(std::min<unsigned>(cap, 64));
    std::vector<std::future<SuiteResult>> futures;
    futures.reserve(suites.size());
    for (auto& suite : suites)
        futures.push_back(std::async(std::launch::async, [&slots, &suite] {
            slots.acquire();
            SuiteResult r = suite();
            slots.release();
            return r;
        }));
    for (size_t i = 0; i < futures.size(); ++i)
        results[i] = futures[i].get();
    return results;
}

// Deterministic report: no wall-clock content, byte-identical per seed.
inline std::string render_report(const std::vector<SuiteResult>& results,
                                 const std::string& format) {
    bool all = true;
    for (const auto& r : results)
        all = all && r.pass;
    if (format == "json") {
        Json out;
        Json rows = Json::array();
        for (const auto& r : results) {
            rows.push_back(Json{{"suite", r.name},
                                {"status", r.pass ? "pass" : "fail"},
                                {"checks", r.checks},
                                {"failures", r.failures}});
        }
        out = Json{{"suites", rows}, {"overall", all ? "pass" : "fail"}};
        return out.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "suite\tstatus\tchecks\n";
    for (const auto& r : results) {
        out << r.name << "\t" << (r.pass ? "pass" : "fail") << "\t" << r.checks << "\n";
        for (const auto& f : r.failures)
            out << "  ! " << f << "\n";
    }
    out << "overall\t" << (all ? "pass" : "fail") << "\n";
    return out.str();
}

}  // namespace loopcell
