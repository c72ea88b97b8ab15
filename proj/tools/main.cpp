// ineqlab command line: runs the verification suites, evaluates the deficit
// functions pointwise, and emits machine-readable reports.
//
// Exit codes: 0 all checks pass, 1 verification failure, 2 usage/config error.

#include <cstdio>
#include <exception>
#include <fstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ineqlab/deficit.hpp"
#include "ineqlab/parallel.hpp"
#include "ineqlab/report.hpp"
#include "ineqlab/suites.hpp"

using namespace ineqlab;

namespace {

void print_rows(const std::vector<report::Row>& rows, bool verbose) {
    int failed = 0;
    for (const auto& r : rows) {
        if (!r.pass) ++failed;
        if (verbose || !r.pass)
            std::printf("%-52s %s lhs=%.12g rhs=%.12g tol=%.3g\n", r.name.c_str(),
                        r.pass ? "pass" : "FAIL", r.lhs, r.rhs, r.tolerance);
    }
    std::printf("%zu checks, %d failed\n", rows.size(), failed);
}

int emit(const std::vector<report::Row>& rows, const std::string& json_path,
         const std::string& csv_path, bool verbose) {
    print_rows(rows, verbose);
    if (!json_path.empty()) report::write_json(json_path, rows);
    if (!csv_path.empty()) report::write_csv(csv_path, rows);
    return report::all_pass(rows) ? 0 : 1;
}

std::vector<functionals::TestFunction> load_corpus(const std::string& spec) {
    if (spec == "standard") return functionals::standard_corpus();
    std::ifstream is(spec);
    if (!is) throw config_error("cannot open corpus file: " + spec);
    nlohmann::json j;
    is >> j;
    std::vector<functionals::TestFunction> out;
    for (const auto& e : j.at("functions")) out.push_back(functionals::TestFunction::from_json(e));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical verification lab for Gaussian functional inequalities"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "worker thread count (0 = library default)");

    std::string json_out, csv_out;
    bool verbose = false;

    // specfun check
    auto* sc = app.add_subcommand("specfun", "scalar special function checks");
    auto* sc_check = sc->add_subcommand("check", "run the specfun identity battery");
    double sc_tol_scale = 1.0;
    sc_check->add_option("--tolerance-scale", sc_tol_scale,
                         "scale all tolerances (a tiny value injects failures)");
    sc_check->add_option("--json", json_out, "write JSON report");
    sc_check->add_option("--csv", csv_out, "write CSV report");
    sc_check->add_flag("-v,--verbose", verbose, "print passing rows too");

    // deficit eval / deficit pde
    auto* de = app.add_subcommand("deficit", "pointwise deficit-function evaluation");
    auto* de_eval = de->add_subcommand("eval", "evaluate F(s,x) or J(s,x)");
    double ev_p = 1.5, ev_s = 1.0, ev_x = 1.0, ev_q = 0.0;
    bool ev_closed = false;
    de_eval->add_option("--p", ev_p, "exponent p")->required();
    de_eval->add_option("--s", ev_s, "first argument")->required();
    de_eval->add_option("--x", ev_x, "second argument")->required();
    de_eval->add_option("--q", ev_q, "exponent q (selects J instead of F)");
    de_eval->add_flag("--closed-form", ev_closed, "use the p = 4/3 or 6/5 closed form");
    de_eval->add_option("--json", json_out, "write JSON report");

    auto* de_pde = de->add_subcommand("pde", "finite-difference PDE residual");
    double pd_p = 1.5, pd_s = 1.0, pd_x = 1.0, pd_q = 0.0, pd_h = 1e-3;
    bool pd_closed = false;
    de_pde->add_option("--p", pd_p)->required();
    de_pde->add_option("--s", pd_s)->required();
    de_pde->add_option("--x", pd_x)->required();
    de_pde->add_option("--q", pd_q, "exponent q (selects the J equation)");
    de_pde->add_option("--step", pd_h, "relative finite-difference step");
    de_pde->add_flag("--closed-form", pd_closed);

    // ineq verify
    auto* iv = app.add_subcommand("ineq", "inequality suite");
    auto* iv_run = iv->add_subcommand("verify", "run the inequality suite over a corpus");
    std::string iv_corpus = "standard";
    bool iv_serial = false;
    iv_run->add_option("--corpus", iv_corpus, "corpus: 'standard' or a JSON file");
    iv_run->add_option("--json", json_out);
    iv_run->add_option("--csv", csv_out);
    iv_run->add_flag("--serial", iv_serial, "use the serial reference kernels");
    iv_run->add_flag("-v,--verbose", verbose);

    // mc verify
    auto* mv = app.add_subcommand("mc", "Monte Carlo identity suite");
    auto* mv_run = mv->add_subcommand("verify", "run the Monte Carlo suite");
    std::uint64_t mv_seed = 1;
    std::size_t mv_paths = 100000;
    int mv_steps = 1024;
    bool mv_serial = false;
    mv_run->add_option("--seed", mv_seed);
    mv_run->add_option("--paths", mv_paths);
    mv_run->add_option("--steps", mv_steps);
    mv_run->add_flag("--serial", mv_serial, "use the serial reference kernels");
    mv_run->add_option("--json", json_out);
    mv_run->add_option("--csv", csv_out);
    mv_run->add_flag("-v,--verbose", verbose);

    // verify {identities|inequalities|mc} [--manifest]
    auto* vf = app.add_subcommand("verify", "run a named suite");
    std::string vf_suite;
    std::string vf_manifest;
    vf->add_option("suite", vf_suite, "identities | inequalities | mc");
    vf->add_option("--manifest", vf_manifest, "JSON run manifest");
    vf->add_option("--json", json_out);
    vf->add_option("--csv", csv_out);
    vf->add_flag("-v,--verbose", verbose);

    // report merge
    auto* rp = app.add_subcommand("report", "report file utilities");
    auto* rp_merge = rp->add_subcommand("merge", "merge JSON reports");
    std::string merge_out;
    std::vector<std::string> merge_in;
    rp_merge->add_option("output", merge_out, "output JSON path")->required();
    rp_merge->add_option("inputs", merge_in, "input JSON reports")->required();
    rp_merge->add_option("--csv", csv_out, "also write a CSV projection");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        par::set_threads(threads);

        if (sc_check->parsed())
            return emit(suites::specfun_suite(sc_tol_scale), json_out, csv_out, verbose);

        if (de_eval->parsed()) {
            double value = 0.0;
            deficit::EvalInfo info;
            if (ev_closed) {
                value = deficit::closed_form_f(ev_p, ev_s, ev_x);
                std::printf("F_closed(p=%g; s=%g, x=%g) = %.15g\n", ev_p, ev_s, ev_x, value);
            } else if (ev_q > 0.0) {
                const auto par = deficit::HoelderParams::make(ev_p, ev_q);
                value = deficit::j_fun(par, ev_s, ev_x, {}, &info);
                std::printf("J(p=%g, q=%g; s=%g, x=%g) = %.15g  (kernel evaluations: %ld)\n", ev_p,
                            ev_q, ev_s, ev_x, value, info.evaluations);
            } else {
                const auto par = deficit::BecknerParams::make(ev_p);
                value = deficit::big_f(par, ev_s, ev_x, {}, &info);
                std::printf("F(p=%g; s=%g, x=%g) = %.15g  (kernel evaluations: %ld)\n", ev_p, ev_s,
                            ev_x, value, info.evaluations);
            }
            if (!json_out.empty()) {
                nlohmann::json j{{"p", ev_p},
                                 {"s", ev_s},
                                 {"x", ev_x},
                                 {"value", value},
                                 {"evaluations", info.evaluations}};
                if (ev_q > 0.0) j["q"] = ev_q;
                std::ofstream(json_out) << j.dump(2) << "\n";
            }
            return 0;
        }

        if (de_pde->parsed()) {
            double res;
            if (pd_closed)
                res = deficit::closed_form_pde_residual(pd_p, pd_s, pd_x);
            else if (pd_q > 0.0)
                res = deficit::pde_residual_j(deficit::HoelderParams::make(pd_p, pd_q), pd_s, pd_x,
                                              pd_h);
            else
                res = deficit::pde_residual_f(deficit::BecknerParams::make(pd_p), pd_s, pd_x, pd_h);
            std::printf("pde residual = %.6g (h=%g)\n", res, pd_h);
            return 0;
        }

        if (iv_run->parsed())
            return emit(suites::inequality_suite(load_corpus(iv_corpus), !iv_serial), json_out,
                        csv_out, verbose);

        if (mv_run->parsed())
            return emit(suites::mc_suite_standard(mv_seed, mv_paths, mv_steps, !mv_serial),
                        json_out, csv_out, verbose);

        if (vf->parsed()) {
            report::RunManifest man;
            man.suite = vf_suite;
            if (!vf_manifest.empty()) {
                std::ifstream is(vf_manifest);
                if (!is) throw config_error("cannot open manifest: " + vf_manifest);
                nlohmann::json j;
                is >> j;
                man = report::RunManifest::from_json(j);
            }
            if (!json_out.empty()) man.output_json = json_out;
            if (!csv_out.empty()) man.output_csv = csv_out;
            par::set_threads(man.threads);
            std::vector<report::Row> rows;
            if (man.suite == "identities") {
                rows = suites::identity_suite();
                auto sf = suites::specfun_suite(man.tolerance_scale);
                rows.insert(rows.end(), sf.begin(), sf.end());
            } else if (man.suite == "inequalities") {
                rows = suites::inequality_suite(load_corpus(man.corpus));
            } else if (man.suite == "mc") {
                rows = suites::mc_suite_standard(man.seed, man.paths, man.steps);
            } else {
                throw config_error("unknown suite: " + man.suite);
            }
            return emit(rows, man.output_json, man.output_csv, verbose);
        }

        if (rp_merge->parsed()) {
            std::vector<report::Row> rows;
            for (const auto& p : merge_in) {
                auto r = report::read_json(p);
                rows.insert(rows.end(), r.begin(), r.end());
            }
            report::write_json(merge_out, rows);
            if (!csv_out.empty()) report::write_csv(csv_out, rows);
            std::printf("merged %zu rows into %s\n", rows.size(), merge_out.c_str());
            return report::all_pass(rows) ? 0 : 1;
        }

        std::fprintf(stderr, "no action selected\n");
        return 2;
    } catch (const config_error& e) {
        std::fprintf(stderr, "configuration error: %s\n", e.what());
        return 2;
    } catch (const domain_error& e) {
        std::fprintf(stderr, "domain error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
