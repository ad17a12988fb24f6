// loopcell: exact little-cubes geometry, filtered configuration spaces,
// scanning maps, and the F2 homology engine behind them, as one binary.

#include "loopcell/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace loopcell;

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed JSON in ") + path + ": " + e.what());
    }
    return j;
}

int emit_suites(const std::vector<SuiteResult>& results, const std::string& format) {
    std::cout << render_report(results, format);
    bool all = true;
    for (const auto& r : results) {
        all = all && r.pass;
        std::cerr << (r.pass ? "pass " : "FAIL ") << r.name << " (" << r.checks << " checks, "
                  << r.seconds << " s)\n";
    }
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"configuration-space models of iterated loop space filtrations"};
    app.require_subcommand(1);
    std::function<int()> action;

    // ---- operad ----
    auto* operad = app.add_subcommand("operad", "little cubes operad");
    operad->require_subcommand(1);
    {
        auto* selftest = operad->add_subcommand("selftest", "exact operad axiom checks");
        auto cases = std::make_shared<long long>(500);
        auto seed = std::make_shared<std::uint64_t>(1);
        selftest->add_option("--cases", *cases, "number of seeded cases")->check(CLI::Range(1, 1000000));
        selftest->add_option("--seed", *seed, "rng seed");
        selftest->callback([=, &action] {
            action = [=] { return emit_suites({run_operad_axioms(*seed, *cases)}, "tsv"); };
        });
    }

    // ---- config ----
    auto* config = app.add_subcommand("config", "configurations in I^k x I^m");
    config->require_subcommand(1);
    {
        auto* mult = config->add_subcommand("multiplicity", "maximal fiber cardinality");
        auto file = std::make_shared<std::string>();
        mult->add_option("file", *file, "configuration JSON")->required();
        mult->callback([=, &action] {
            action = [=] {
                auto conf = configuration_from_json(read_json_file(*file));
                std::cout << fiber_multiplicity(conf) << "\n";
                return 0;
            };
        });

        auto* filt = config->add_subcommand("filtration", "membership in F^[r]");
        auto ffile = std::make_shared<std::string>();
        auto r = std::make_shared<long long>(0);
        filt->add_option("file", *ffile, "configuration JSON")->required();
        filt->add_option("--r", *r, "filtration index")->required()->check(CLI::NonNegativeNumber);
        filt->callback([=, &action] {
            action = [=] {
                auto conf = configuration_from_json(read_json_file(*ffile));
                std::cout << (in_filtration(conf, *r) ? "true" : "false") << "\n";
                return 0;
            };
        });

        auto* exp = config->add_subcommand("exp", "exponential of a disk-bundle point");
        auto efile = std::make_shared<std::string>();
        exp->add_option("file", *efile, "tubular point JSON")->required();
        exp->callback([=, &action] {
            action = [=] {
                auto b = tubular_point_from_json(read_json_file(*efile));
                std::cout << to_json(exp_tubular(b)).dump(2) << "\n";
                return 0;
            };
        });
    }

    // ---- scan ----
    auto* scan = app.add_subcommand("scan", "scanning comparison maps");
    scan->require_subcommand(1);
    {
        auto* demo = scan->add_subcommand("demo", "JSON trace of the scaling homotopy");
        auto k = std::make_shared<int>(1);
        auto m = std::make_shared<int>(1);
        auto seed = std::make_shared<std::uint64_t>(1);
        auto steps = std::make_shared<int>(8);
        demo->add_option("--k", *k)->check(CLI::Range(1, 1000000));
        demo->add_option("--m", *m)->check(CLI::Range(1, 1000000));
        demo->add_option("--seed", *seed);
        demo->add_option("--steps", *steps)->check(CLI::Range(1, 1000000));
        demo->callback([=, &action] {
            action = [=] {
                Rng rng(*seed);
                RelConfig xi = gen::rel_config(rng, *k, *m);
                auto eta = eta_radius(xi);
                Json trace = Json::array();
                for (int i = 0; i <= *steps; ++i) {
                    Rat t(i, *steps);
                    trace.push_back(Json{{"t", rat_str(t)}, {"config", to_json(scan_homotopy(t, xi))}});
                }
                Json out{{"k", *k},
                         {"m", *m},
                         {"seed", *seed},
                         {"eta", eta ? Json(rat_str(*eta)) : Json("inf")},
                         {"trace", trace}};
                std::cout << out.dump(2) << "\n";
                return 0;
            };
        });
    }

    // ---- bar ----
    auto* bar = app.add_subcommand("bar", "grid bar construction");
    bar->require_subcommand(1);
    {
        auto* check = bar->add_subcommand("check", "semi-simplicial identity suite");
        auto k = std::make_shared<int>(2);
        auto cases = std::make_shared<long long>(200);
        auto seed = std::make_shared<std::uint64_t>(4);
        check->add_option("--k", *k)->check(CLI::Range(1, 3));
        check->add_option("--cases", *cases)->check(CLI::Range(1, 1000000));
        check->add_option("--seed", *seed);
        check->callback([=, &action] {
            action = [=] { return emit_suites({run_bar_identities(*seed, *cases)}, "tsv"); };
        });
    }

    // ---- homology ----
    auto* hom = app.add_subcommand("homology", "chain complexes and Smith normal form");
    hom->require_subcommand(1);
    {
        auto* conf = hom->add_subcommand("conf", "F2 homology of C_n(R^d)");
        auto n = std::make_shared<int>(2);
        auto d = std::make_shared<int>(2);
        conf->add_option("--n", *n)->required()->check(CLI::Range(1, 1000000));
        conf->add_option("--d", *d)->required()->check(CLI::Range(1, 1000000));
        conf->callback([=, &action] {
            action = [=] {
                auto complex = config_complex(*n, *d);
                auto h = homology(complex);
                Json cells = Json::array();
                for (size_t deg = 0; deg < complex.basis.size(); ++deg)
                    cells.push_back(complex.basis[deg].size());
                std::cout << Json{{"n", *n}, {"d", *d}, {"cells", cells}, {"betti", h.betti}}.dump(2)
                          << "\n";
                return 0;
            };
        });

        auto* thom = hom->add_subcommand("thom", "reduced F2 homology of Th(k phi_{m,r})");
        auto k = std::make_shared<int>(1);
        auto m = std::make_shared<int>(1);
        auto r = std::make_shared<int>(1);
        auto dmax = std::make_shared<int>(12);
        thom->add_option("--k", *k)->required()->check(CLI::Range(1, 1000000));
        thom->add_option("--m", *m)->required()->check(CLI::Range(1, 1000000));
        thom->add_option("--r", *r)->required()->check(CLI::Range(1, 1000000));
        thom->add_option("--max-degree", *dmax)->check(CLI::Range(1, 1000000));
        thom->callback([=, &action] {
            action = [=] {
                std::cout << to_json(thom_dims(*k, *m, *r, *dmax)).dump(2) << "\n";
                return 0;
            };
        });

        auto* snf = hom->add_subcommand("snf", "Smith normal form of an integer matrix");
        auto file = std::make_shared<std::string>();
        snf->add_option("file", *file, "matrix JSON: {rows, cols, triples}")->required();
        snf->callback([=, &action] {
            action = [=] {
                IMatrix m2 = matrix_from_json(read_json_file(*file));
                SnfResult res = smith_normal_form(m2);
                Json diag = Json::array();
                for (const auto& v : res.diagonal())
                    diag.push_back(v.str());
                std::cout << Json{{"diagonal", diag},
                                  {"u", to_json(res.u)},
                                  {"s", to_json(res.s)},
                                  {"v", to_json(res.v)}}
                                 .dump(2)
                          << "\n";
                return 0;
            };
        });
    }

    // ---- spectral ----
    auto* spectral = app.add_subcommand("spectral", "filtration bookkeeping");
    spectral->require_subcommand(1);
    {
        auto* e1 = spectral->add_subcommand("e1", "first page of the rank filtration");
        auto k = std::make_shared<int>(1);
        auto m = std::make_shared<int>(1);
        auto pmax = std::make_shared<int>(4);
        auto dmax = std::make_shared<int>(8);
        auto format = std::make_shared<std::string>("json");
        e1->add_option("--k", *k)->required()->check(CLI::Range(1, 1000000));
        e1->add_option("--m", *m)->required()->check(CLI::Range(1, 1000000));
        e1->add_option("--max-rank", *pmax)->check(CLI::Range(1, 1000000));
        e1->add_option("--max-degree", *dmax)->check(CLI::Range(1, 1000000));
        e1->add_option("--format", *format)->check(CLI::IsMember({"json", "tsv"}));
        e1->callback([=, &action] {
            action = [=] {
                E1Page page = e1_page(*k, *m, *pmax, *dmax);
                if (*format == "tsv")
                    std::cout << to_tsv(page);
                else
                    std::cout << to_json(page).dump(2) << "\n";
                return 0;
            };
        });

        auto* snaith = spectral->add_subcommand("snaith", "two-pipeline consistency check");
        auto sk = std::make_shared<int>(1);
        auto sm = std::make_shared<int>(1);
        auto sdmax = std::make_shared<int>(6);
        auto sformat = std::make_shared<std::string>("tsv");
        snaith->add_option("--k", *sk)->required()->check(CLI::Range(1, 1000000));
        snaith->add_option("--m", *sm)->required()->check(CLI::Range(1, 1000000));
        snaith->add_option("--max-degree", *sdmax)->check(CLI::Range(1, 1000000));
        snaith->add_option("--format", *sformat)->check(CLI::IsMember({"json", "tsv"}));
        snaith->callback([=, &action] {
            action = [=] {
                SnaithReport report = snaith_check(*sk, *sm, *sdmax);
                if (*sformat == "tsv")
                    std::cout << to_tsv(report);
                else
                    std::cout << to_json(report).dump(2) << "\n";
                return report.pass ? 0 : 1;
            };
        });

        auto* cells = spectral->add_subcommand("cells", "stagewise cell structure");
        auto ck = std::make_shared<int>(1);
        auto cm = std::make_shared<int>(1);
        auto rmax = std::make_shared<int>(5);
        auto cdmax = std::make_shared<int>(-1);
        cells->add_option("--k", *ck)->required()->check(CLI::Range(1, 1000000));
        cells->add_option("--m", *cm)->required()->check(CLI::Range(1, 1000000));
        cells->add_option("--r-max", *rmax)->check(CLI::Range(1, 1000000));
        cells->add_option("--max-degree", *cdmax);
        cells->callback([=, &action] {
            action = [=] {
                int dmax2 = *cdmax > 0 ? *cdmax : (*ck + *cm - 1) * (*rmax - 1) + 1;
                std::cout << to_json(cell_report(*ck, *cm, *rmax, dmax2)).dump(2) << "\n";
                return 0;
            };
        });
    }

    // ---- verify ----
    {
        auto* verify = app.add_subcommand("verify", "run every acceptance suite");
        auto cfg = std::make_shared<RunConfig>();
        auto cases = std::make_shared<long long>(0);
        verify->add_option("--seed", cfg->seed, "rng seed");
        verify->add_option("--cases", *cases, "override every per-suite case count");
        verify->add_option("--max-degree", cfg->d_max, "degree bound for the consistency suites");
        verify->add_option("--max-rank", cfg->r_max, "stage bound for the cell report");
        verify->add_option("--format", cfg->format, "tsv or json");
        verify->callback([=, &action] {
            action = [=] {
                RunConfig run = *cfg;
                if (*cases != 0) {
                    if (*cases < 0)
                        throw std::invalid_argument("--cases must be positive");
                    run.cases_operad = run.cases_filtration = *cases;
                    run.cases_tubular = run.cases_bar = run.cases_scanning = run.cases_snf = *cases;
                }
                run.validate();
                return emit_suites(run_all(run), run.format);
            };
        });
    }

    try {
        app.parse(argc, argv);
        return action ? action() : 2;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const internal_error& e) {
        std::cerr << "internal invariant violated: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
