#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "folrig/extension.hpp"
#include "folrig/pipeline.hpp"

using namespace folrig;

namespace {

struct CommonOpts {
    std::uint64_t seed = 12345;
    std::vector<std::uint64_t> primes = {101, 103};
    int trials = 8;
    std::string dump_dir;
    bool json_out = false;
    bool timing = false;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
    cmd->add_option("--seed", c.seed, "RNG seed for the slice certificates");
    cmd->add_option("--primes", c.primes, "starting primes for the finite-field reductions");
    cmd->add_option("--trials", c.trials, "slice trials per prime");
    cmd->add_option("--dump-dir", c.dump_dir, "directory for stage dumps");
    cmd->add_flag("--json", c.json_out, "machine-readable output");
    cmd->add_flag("--timing", c.timing, "include timings in reports (breaks byte-stability)");
}

PipelineOptions pipeline_options(const CommonOpts& c) {
    PipelineOptions o;
    o.seed = c.seed;
    o.primes = c.primes;
    o.trials = c.trials;
    o.dump_dir = c.dump_dir;
    o.with_timing = c.timing;
    return o;
}

SliceOptions slice_options(const CommonOpts& c) {
    SliceOptions o;
    o.seed = c.seed;
    o.primes = c.primes;
    o.trials = c.trials;
    return o;
}

void emit_report(const VerdictReport& rep, const CommonOpts& c) {
    if (c.json_out) {
        std::cout << rep.to_json(c.timing).dump(2) << "\n";
        return;
    }
    std::cout << rep.algebra_id << ": n=" << rep.n << " q=" << rep.q << " degree=" << rep.degree
              << " omega_nonzero=" << (rep.omega_nonzero ? "yes" : "no");
    if (rep.omega_nonzero) {
        std::cout << " pluecker=" << (rep.pluecker ? "pass" : "fail")
                  << " integrable=" << (rep.integrable ? "pass" : "fail")
                  << " split_certified=" << (rep.split_certified ? "yes" : "no") << " H1=" << rep.h1
                  << " rigid=" << (rep.rigid ? "yes" : "no");
    }
    if (!rep.note.empty()) std::cout << "  (" << rep.note << ")";
    std::cout << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for split-tangent-sheaf distributions on projective space"};
    app.require_subcommand(1);

    std::string spec_path;
    int opt_n = 0, opt_m = 1, opt_k = 1;
    CommonOpts common;

    auto* omega_cmd = app.add_subcommand("omega", "build omega(g) from an algebra spec and print it");
    omega_cmd->add_option("spec", spec_path, "algebra spec JSON")->required();
    add_common(omega_cmd, common);

    auto* check_cmd = app.add_subcommand("check", "descends / Pluecker / integrability checks");
    check_cmd->add_option("spec", spec_path, "algebra spec JSON")->required();
    add_common(check_cmd, common);

    auto* sing_cmd = app.add_subcommand("singdim", "codimension certificates for sing(omega), sing(d omega)");
    sing_cmd->add_option("spec", spec_path, "algebra spec JSON")->required();
    add_common(sing_cmd, common);

    auto* coh_cmd = app.add_subcommand("cohomology", "H^k(g, sl(n+1)/g) for k = 0,1,2");
    coh_cmd->add_option("spec", spec_path, "algebra spec JSON")->required();
    coh_cmd->add_option("-k", opt_k, "cohomology degree (default 1)");
    add_common(coh_cmd, common);

    auto* ext_cmd = app.add_subcommand("extend", "solve the weighted-chain extension system at n");
    ext_cmd->add_option("-n", opt_n, "ambient dimension (>= 5)")->required();
    add_common(ext_cmd, common);

    auto* pipe_cmd = app.add_subcommand("pipeline", "full rigidity pipeline for one algebra");
    pipe_cmd->add_option("spec", spec_path, "algebra spec JSON")->required();
    add_common(pipe_cmd, common);

    auto* table_cmd = app.add_subcommand("table1", "run the whole desk-scale catalogue");
    add_common(table_cmd, common);

    auto* pb_cmd = app.add_subcommand("pullback", "re-check a pulled-back distribution");
    pb_cmd->add_option("spec", spec_path, "algebra spec JSON")->required();
    pb_cmd->add_option("-m", opt_m, "extra dimensions (default 1)");
    add_common(pb_cmd, common);

    CLI11_PARSE(app, argc, argv);

    try {
        if (omega_cmd->parsed()) {
            auto g = parse_algebra_spec(spec_path);
            auto dist = omega_from_fields(g.fields());
            if (!dist) {
                std::cout << "omega(g) = 0 (degenerate algebra)\n";
                return 0;
            }
            std::cout << dist->omega.str();
            return 0;
        }
        if (check_cmd->parsed()) {
            auto g = parse_algebra_spec(spec_path);
            auto dist = omega_from_fields(g.fields());
            if (!dist) {
                std::cout << "omega(g) = 0 (degenerate algebra)\n";
                return 0;
            }
            auto desc = check_descends(dist->omega);
            auto pl = check_pluecker(dist->omega);
            auto in = check_integrability(dist->omega);
            if (common.json_out) {
                nlohmann::ordered_json j;
                j["descends"] = desc.ok;
                j["degree"] = desc.degree;
                j["pluecker"] = pl.pass;
                j["integrable"] = in.pass;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "descends=" << (desc.ok ? "ok" : desc.violation)
                          << " degree=" << desc.degree << " pluecker=" << (pl.pass ? "pass" : "fail")
                          << " integrable=" << (in.pass ? "pass" : "fail") << "\n";
            }
            return 0;
        }
        if (sing_cmd->parsed()) {
            auto g = parse_algebra_spec(spec_path);
            auto dist = omega_from_fields(g.fields());
            if (!dist) {
                std::cout << "omega(g) = 0 (degenerate algebra)\n";
                return 0;
            }
            auto rep = codim_report(*dist, slice_options(common));
            std::cout << rep.to_json().dump(2) << "\n";
            return 0;
        }
        if (coh_cmd->parsed()) {
            auto g = parse_algebra_spec(spec_path);
            QuotientModule m = [&]() {
                try {
                    return quotient_module(g, 0);
                } catch (const std::domain_error&) {
                    return quotient_module(g);
                }
            }();
            int dim = cohomology_dim(m, opt_k);
            if (common.json_out) {
                nlohmann::ordered_json j;
                j["k"] = opt_k;
                j["dim"] = dim;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "dim H^" << opt_k << " = " << dim << "\n";
            }
            return 0;
        }
        if (ext_cmd->parsed()) {
            auto sys = build_extension_system(opt_n);
            auto sols = solve_extension_system(sys);
            nlohmann::ordered_json j;
            j["n"] = opt_n;
            j["unknowns"] = sys.num_unknowns;
            auto arr = nlohmann::ordered_json::array();
            for (const auto& sol : sols) {
                nlohmann::ordered_json e;
                auto vals = nlohmann::ordered_json::array();
                long rad = 0;
                for (const auto& v : sol) {
                    vals.push_back(v.str());
                    if (v.radicand()) rad = v.radicand();
                }
                e["values"] = vals;
                e["radicand"] = rad;
                auto verdict = lie_closure_verdict(sys, sol);
                e["lie_closed"] = verdict.closed;
                if (verdict.failing_bracket) {
                    e["failing_bracket"] = {verdict.failing_bracket->first, verdict.failing_bracket->second};
                }
                if (verdict.y23_coefficient) e["y2_y3_coefficient"] = verdict.y23_coefficient->str();
                arr.push_back(e);
            }
            j["solutions"] = arr;
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (pipe_cmd->parsed()) {
            auto g = parse_algebra_spec(spec_path);
            auto rep = run_pipeline(g, spec_path, pipeline_options(common));
            emit_report(rep, common);
            return 0;
        }
        if (table_cmd->parsed()) {
            auto rows = table1(pipeline_options(common));
            if (common.json_out) {
                auto arr = nlohmann::ordered_json::array();
                for (const auto& r : rows) arr.push_back(r.to_json(common.timing));
                std::cout << arr.dump(2) << "\n";
            } else {
                for (const auto& r : rows) emit_report(r, common);
            }
            return 0;
        }
        if (pb_cmd->parsed()) {
            auto g = parse_algebra_spec(spec_path);
            auto dist = omega_from_fields(g.fields());
            if (!dist) {
                std::cout << "omega(g) = 0 (degenerate algebra)\n";
                return 0;
            }
            Distribution pb = pullback_linear(*dist, opt_m);
            auto desc = check_descends(pb.omega);
            nlohmann::ordered_json j;
            j["n"] = pb.n;
            j["q"] = pb.q;
            j["degree"] = pb.degree;
            j["descends"] = desc.ok;
            j["pluecker"] = check_pluecker(pb.omega).pass;
            j["integrable"] = check_integrability(pb.omega).pass;
            std::cout << j.dump(2) << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
