// Command-line front end: every pipeline behind verb-style subcommands with
// stable text/JSON output. Data goes to stdout, diagnostics to stderr.
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <unistd.h>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "specturan/enumerate.hpp"
#include "specturan/extremal.hpp"
#include "specturan/parallel.hpp"
#include "specturan/spectral.hpp"

using namespace specturan;

namespace {

struct CommonOpts {
    int threads = 0;
    std::uint64_t seed = 0;
    std::string format = "json";
    SolverOptions solver;
    int ceiling = 0;

    ExtremalOptions extremal() const {
        ExtremalOptions opts;
        opts.solver = solver;
        opts.threads = threads;
        opts.ceiling_override = ceiling;
        return opts;
    }
};

void add_common(CLI::App* cmd, CommonOpts& common) {
    cmd->add_option("--threads", common.threads, "worker threads (0 = all cores)");
    cmd->add_option("--seed", common.seed, "random seed (default 0)");
    cmd->add_option("--restarts", common.solver.restarts, "solver restarts");
    cmd->add_option("--tol-residual", common.solver.tol_residual, "eigenequation residual tolerance");
    cmd->add_option("--tol-stall", common.solver.tol_stall, "objective stall tolerance");
    cmd->add_option("--max-iter", common.solver.max_iter, "max iterations per restart");
    cmd->add_option("--ceiling", common.ceiling, "raise the enumeration ceiling");
    cmd->add_option("--format", common.format, "output format: json or csv");
}

void sync_seed(CommonOpts& common) { common.solver.seed = common.seed; }

FamilySpec parse_family(const std::string& text) {
    if (text == "triangle-free" || text == "k3-free") return make_family({complete_graph(3, 2)});
    std::vector<Hypergraph> members;
    std::stringstream ss(text);
    std::string path;
    while (std::getline(ss, path, ',')) {
        if (!path.empty()) members.push_back(read_hgr_file(path));
    }
    return make_family(std::move(members));
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (!part.empty()) out.push_back(std::stoi(part));
    }
    return out;
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (!part.empty()) out.push_back(std::stod(part));
    }
    return out;
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

int emit_report(const VerificationReport& report, const CommonOpts& common) {
    write_output(common.format == "csv" ? report.to_csv() : report.to_json(), "");
    return report.pass ? 0 : 1;
}

}  // namespace

namespace {

// --h is a data option here, so help is long-form only
CLI::App* add_verb(CLI::App& app, const std::string& name, const std::string& desc) {
    CLI::App* cmd = app.add_subcommand(name, desc);
    cmd->set_help_flag("--help", "print help");
    return cmd;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized subgraph counts, Q-Lagrangian polynomials and (p,Q)-spectral radii"};
    app.set_help_flag("--help", "print help");
    app.require_subcommand(1);

    // --- gen ---------------------------------------------------------------
    auto* gen = add_verb(app, "gen", "write a named generator as HGR");
    std::string gen_kind = "complete";
    int gen_n = 0, gen_l = 2, gen_r = 2;
    std::string gen_out;
    gen->add_option("--kind", gen_kind, "complete | turan | cycle | c5-blowup")->required();
    gen->add_option("--n", gen_n, "vertex count")->required();
    gen->add_option("--l", gen_l, "part count (turan)");
    gen->add_option("--r", gen_r, "uniformity");
    gen->add_option("-o,--output", gen_out, "output file (default stdout)");

    // --- count ---------------------------------------------------------------
    auto* count = add_verb(app, "count", "embedding/copy counts and Q-degree table");
    std::string count_q, count_h;
    CommonOpts count_common;
    count->add_option("--q", count_q, "pattern HGR file")->required();
    count->add_option("--h", count_h, "host HGR file")->required();
    add_common(count, count_common);

    // --- derive ------------------------------------------------------------
    auto* derive = add_verb(app, "derive", "write the weighted derived s-graph D(Q,H)");
    std::string derive_q, derive_h, derive_out;
    derive->add_option("--q", derive_q, "pattern HGR file")->required();
    derive->add_option("--h", derive_h, "host HGR file")->required();
    derive->add_option("-o,--output", derive_out, "output file (default stdout)");

    // --- specrad -----------------------------------------------------------
    auto* specrad = add_verb(app, "specrad", "(p,Q)-spectral radius as JSON");
    std::string sr_q, sr_h, sr_w;
    double sr_p = 2.0;
    CommonOpts sr_common;
    specrad->add_option("--q", sr_q, "pattern HGR file");
    specrad->add_option("--h", sr_h, "host HGR file");
    specrad->add_option("--w", sr_w, "weighted s-graph file (alternative to --q/--h)");
    specrad->add_option("--p", sr_p, "norm exponent p >= 1");
    add_common(specrad, sr_common);

    // --- sweep -------------------------------------------------------------
    auto* sweep = add_verb(app, "sweep", "lambda^(p) over a p grid as CSV");
    std::string sw_q, sw_h, sw_w, sw_plist = "1,1.5,2,3,6,12";
    CommonOpts sw_common;
    sweep->add_option("--q", sw_q, "pattern HGR file");
    sweep->add_option("--h", sw_h, "host HGR file");
    sweep->add_option("--w", sw_w, "weighted s-graph file");
    sweep->add_option("--p-list", sw_plist, "ascending comma-separated p values");
    add_common(sweep, sw_common);

    // --- density -----------------------------------------------------------
    auto* density = add_verb(app, "density", "exact extremal maxima per order as CSV");
    std::string de_q, de_family = "triangle-free", de_plot;
    int de_nmin = 0, de_nmax = 0;
    double de_p = 2.0;
    CommonOpts de_common;
    density->add_option("--q", de_q, "pattern HGR file")->required();
    density->add_option("--family", de_family, "'triangle-free' or comma-separated HGR files");
    density->add_option("--n-min", de_nmin, "first order")->required();
    density->add_option("--n-max", de_nmax, "last order")->required();
    density->add_option("--p", de_p, "norm exponent");
    density->add_option("--plot", de_plot, "also write two-column TSV plot data here");
    add_common(density, de_common);

    // --- verify ------------------------------------------------------------
    auto* verify = add_verb(app, "verify", "run a named verification harness");
    verify->require_subcommand(1);

    auto* v_pentagon = add_verb(*verify, "pentagon", "spectral pentagon maximizer check");
    int vp_n = 9;
    double vp_p = 2.0;
    CommonOpts vp_common;
    v_pentagon->add_option("--n", vp_n, "order")->required();
    v_pentagon->add_option("--p", vp_p, "norm exponent");
    add_common(v_pentagon, vp_common);

    auto* v_turan = add_verb(*verify, "turan", "spectral Turan maximizer check");
    int vt_l = 2, vt_s = 2, vt_n = 6;
    double vt_p = 2.0;
    CommonOpts vt_common;
    v_turan->add_option("--l", vt_l, "parts of the Turan graph")->required();
    v_turan->add_option("--s", vt_s, "clique order s")->required();
    v_turan->add_option("--n", vt_n, "order")->required();
    v_turan->add_option("--p", vt_p, "norm exponent");
    add_common(v_turan, vt_common);

    auto* v_flat = add_verb(*verify, "flat", "Q-flat density bound checks");
    std::string vf_q, vf_h, vf_pi;
    double vf_p = 2.0;
    CommonOpts vf_common;
    v_flat->add_option("--q", vf_q, "pattern HGR file")->required();
    v_flat->add_option("--h", vf_h, "host HGR file")->required();
    v_flat->add_option("--pi", vf_pi, "exact density, e.g. 120/3125")->required();
    v_flat->add_option("--p", vf_p, "norm exponent");
    add_common(v_flat, vf_common);

    auto* v_blowup = add_verb(*verify, "blowup", "exact blow-up polynomial inequality");
    std::string vb_q, vb_h, vb_sizes;
    CommonOpts vb_common;
    v_blowup->add_option("--q", vb_q, "pattern HGR file")->required();
    v_blowup->add_option("--h", vb_h, "base HGR file")->required();
    v_blowup->add_option("--sizes", vb_sizes, "comma-separated class sizes")->required();
    add_common(v_blowup, vb_common);

    auto* v_stab = add_verb(*verify, "stability", "extremal-graph stability probes");
    std::string vs_q, vs_family = "triangle-free", vs_pi;
    int vs_n = 8;
    double vs_p = 2.0, vs_eps = 0.1;
    CommonOpts vs_common;
    v_stab->add_option("--q", vs_q, "pattern HGR file")->required();
    v_stab->add_option("--family", vs_family, "'triangle-free' or HGR files");
    v_stab->add_option("--n", vs_n, "order")->required();
    v_stab->add_option("--p", vs_p, "norm exponent (> 1)");
    v_stab->add_option("--eps", vs_eps, "degree slack epsilon");
    v_stab->add_option("--pi", vs_pi, "exact density, e.g. 120/3125")->required();
    add_common(v_stab, vs_common);

    auto* v_mono = add_verb(*verify, "monotone", "sequence laws over an order range");
    std::string vm_q, vm_family = "triangle-free";
    int vm_nmin = 5, vm_nmax = 8;
    double vm_p = 2.0;
    CommonOpts vm_common;
    v_mono->add_option("--q", vm_q, "pattern HGR file")->required();
    v_mono->add_option("--family", vm_family, "'triangle-free' or HGR files");
    v_mono->add_option("--n-min", vm_nmin, "first order")->required();
    v_mono->add_option("--n-max", vm_nmax, "last order")->required();
    v_mono->add_option("--p", vm_p, "norm exponent");
    add_common(v_mono, vm_common);

    // --- enumerate -----------------------------------------------------------
    auto* enumerate = add_verb(app, "enumerate", "stream pairwise non-isomorphic r-graphs");
    int en_n = 0, en_r = 2;
    long long en_limit = -1;
    std::string en_pred = "all", en_resume;
    bool en_checkpoints = false;
    CommonOpts en_common;
    enumerate->add_option("--n", en_n, "order")->required();
    enumerate->add_option("--r", en_r, "uniformity");
    enumerate->add_option("--predicate", en_pred, "all | triangle-free | free:FILE[,FILE...]");
    enumerate->add_option("--resume", en_resume, "checkpoint token to resume after");
    enumerate->add_flag("--emit-checkpoints", en_checkpoints, "print checkpoint comments");
    enumerate->add_option("--limit", en_limit, "stop after this many records");
    add_common(enumerate, en_common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*gen) {
            GeneratorSpec spec;
            spec.n = gen_n;
            spec.l = gen_l;
            spec.r = gen_r;
            if (gen_kind == "complete") spec.kind = GeneratorSpec::Kind::Complete;
            else if (gen_kind == "turan") spec.kind = GeneratorSpec::Kind::Turan;
            else if (gen_kind == "cycle") spec.kind = GeneratorSpec::Kind::Cycle;
            else if (gen_kind == "c5-blowup") spec.kind = GeneratorSpec::Kind::C5Blowup;
            else throw std::invalid_argument("unknown generator kind: " + gen_kind);
            write_output(to_hgr(generate(spec)), gen_out);
            return 0;
        }

        if (*count) {
            sync_seed(count_common);
            Hypergraph q = read_hgr_file(count_q);
            Hypergraph h = read_hgr_file(count_h);
            count_t embeddings = count_embeddings(q, h);
            count_t aut = aut_order(q);
            count_t copies = embeddings / aut;
            std::vector<count_t> degrees(h.n, 0);
            if (q.n <= h.n) {
                WeightedSGraph d = derive_weighted(q, h);
                for (const auto& [key, weight] : d.edges)
                    for (int v : key) degrees[v] += weight;
            }
            bool tty_table = count->get_option("--format")->count() == 0 && isatty(1);
            if (tty_table) {
                std::cout << "embeddings   " << embeddings << "\naut order    " << aut
                          << "\ncopies       " << copies << "\n\nvertex  q-degree\n";
                for (int v = 0; v < h.n; ++v) std::cout << v << "\t" << degrees[v] << '\n';
            } else if (count_common.format == "csv") {
                std::cout << "embeddings,aut,copies\n"
                          << embeddings << ',' << aut << ',' << copies << '\n';
                std::cout << "vertex,q_degree\n";
                for (int v = 0; v < h.n; ++v) std::cout << v << ',' << degrees[v] << '\n';
            } else {
                nlohmann::ordered_json j;
                j["embeddings"] = embeddings;
                j["aut"] = aut;
                j["copies"] = copies;
                j["q_degree"] = degrees;
                j["min_q_degree"] =
                    degrees.empty() ? 0 : *std::min_element(degrees.begin(), degrees.end());
                std::cout << j.dump(2) << '\n';
            }
            return 0;
        }

        if (*derive) {
            Hypergraph q = read_hgr_file(derive_q);
            Hypergraph h = read_hgr_file(derive_h);
            write_output(to_wsg(derive_weighted(q, h)), derive_out);
            return 0;
        }

        if (*specrad) {
            sync_seed(sr_common);
            WeightedSGraph w;
            if (!sr_w.empty()) {
                w = read_wsg_file(sr_w);
            } else if (!sr_q.empty() && !sr_h.empty()) {
                w = derive_weighted(read_hgr_file(sr_q), read_hgr_file(sr_h));
            } else {
                throw std::invalid_argument("specrad needs --w or both --q and --h");
            }
            SpectralResult res = sr_p == 1.0 ? spectral_radius_p1(w, sr_common.solver)
                                             : spectral_radius(w, sr_p, sr_common.solver);
            std::cout << res.to_json(sr_p) << '\n';
            return 0;
        }

        if (*sweep) {
            sync_seed(sw_common);
            WeightedSGraph w;
            if (!sw_w.empty()) {
                w = read_wsg_file(sw_w);
            } else if (!sw_q.empty() && !sw_h.empty()) {
                w = derive_weighted(read_hgr_file(sw_q), read_hgr_file(sw_h));
            } else {
                throw std::invalid_argument("sweep needs --w or both --q and --h");
            }
            std::vector<double> ps = parse_double_list(sw_plist);
            SweepReport report = p_sweep(w, ps, sw_common.solver);
            std::cout << report.to_csv();
            for (const auto& v : report.violations) std::cerr << "violation: " << v << '\n';
            return 0;
        }

        if (*density) {
            sync_seed(de_common);
            Hypergraph q = read_hgr_file(de_q);
            FamilySpec family = parse_family(de_family);
            DensityRun run =
                density_sequence(q, family, de_nmin, de_nmax, de_p, de_common.extremal());
            std::cout << run.to_csv();
            if (!de_plot.empty()) write_output(run.to_plot_tsv(), de_plot);
            return 0;
        }

        if (*verify) {
            if (*v_pentagon) {
                sync_seed(vp_common);
                return emit_report(pentagon_check(vp_n, vp_p, vp_common.extremal()), vp_common);
            }
            if (*v_turan) {
                sync_seed(vt_common);
                return emit_report(turan_check(vt_l, vt_s, vt_n, vt_p, vt_common.extremal()),
                                   vt_common);
            }
            if (*v_flat) {
                sync_seed(vf_common);
                return emit_report(flat_bounds_check(read_hgr_file(vf_q), read_hgr_file(vf_h),
                                                     parse_rational(vf_pi), vf_p,
                                                     vf_common.extremal()),
                                   vf_common);
            }
            if (*v_blowup) {
                sync_seed(vb_common);
                return emit_report(blowup_inequality_check(read_hgr_file(vb_q),
                                                           read_hgr_file(vb_h),
                                                           parse_int_list(vb_sizes)),
                                   vb_common);
            }
            if (*v_stab) {
                sync_seed(vs_common);
                return emit_report(stability_check(read_hgr_file(vs_q), parse_family(vs_family),
                                                   vs_n, vs_p, vs_eps, parse_rational(vs_pi),
                                                   vs_common.extremal()),
                                   vs_common);
            }
            if (*v_mono) {
                sync_seed(vm_common);
                DensityRun run = density_sequence(read_hgr_file(vm_q), parse_family(vm_family),
                                                  vm_nmin, vm_nmax, vm_p, vm_common.extremal());
                return emit_report(verify_monotone(run), vm_common);
            }
        }

        if (*enumerate) {
            EnumerationOptions opts;
            opts.ceiling_override = en_common.ceiling;
            if (en_pred == "triangle-free") {
                auto family = std::make_shared<FamilySpec>(make_family({complete_graph(3, 2)}));
                opts.predicate = [family](const Hypergraph& h) { return is_free(h, *family); };
                opts.hereditary = true;
            } else if (en_pred.rfind("free:", 0) == 0) {
                auto family = std::make_shared<FamilySpec>(parse_family(en_pred.substr(5)));
                opts.predicate = [family](const Hypergraph& h) { return is_free(h, *family); };
                opts.hereditary = true;
            } else if (en_pred != "all") {
                throw std::invalid_argument("unknown predicate: " + en_pred);
            }
            EnumerationStream stream(en_n, en_r, opts, en_resume);
            long long emitted = 0;
            while (auto g = stream.next()) {
                std::cout << to_hgr(*g);
                if (en_checkpoints) std::cout << "# checkpoint: " << stream.checkpoint() << '\n';
                std::cout << '\n';
                if (en_limit >= 0 && ++emitted >= en_limit) break;
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
