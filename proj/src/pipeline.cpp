#include "folrig/pipeline.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>

namespace folrig {

namespace {

void dump_text(const std::string& dir, const std::string& name, const std::string& text) {
    if (dir.empty()) return;
    std::filesystem::create_directories(dir);
    std::ofstream out(std::filesystem::path(dir) / name);
    out << text;
}

}  // namespace

nlohmann::ordered_json VerdictReport::to_json(bool with_timing) const {
    nlohmann::ordered_json j;
    j["algebra_id"] = algebra_id;
    j["n"] = n;
    j["q"] = q;
    j["degree"] = degree;
    j["omega_nonzero"] = omega_nonzero;
    j["pluecker"] = pluecker;
    j["integrable"] = integrable;
    j["splitting_degrees"] = splitting_degrees;
    if (codim) j["codim"] = codim->to_json();
    else j["codim"] = nullptr;
    j["h0"] = h0;
    j["h1"] = h1;
    j["split_certified"] = split_certified;
    j["rigid"] = rigid;
    j["note"] = note;
    if (with_timing) j["timing_ms"] = timing_ms;
    return j;
}

VerdictReport run_pipeline(const LieAlgebraData& g, const std::string& algebra_id,
                           const PipelineOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    VerdictReport rep;
    rep.algebra_id = algebra_id;
    rep.n = g.n;
    rep.q = g.n - g.dim();
    if (g.n > opts.max_pipeline_n)
        rep.note = "n exceeds the configured full-pipeline cap; expect long runtimes";

    auto dist = omega_from_fields(g.fields());
    if (!dist) {
        rep.omega_nonzero = false;
        rep.note = "omega(g) vanishes identically; no distribution induced";
        return rep;
    }
    rep.omega_nonzero = true;
    rep.q = dist->q;
    rep.degree = dist->degree;
    if (dist->splitting_degrees) rep.splitting_degrees = *dist->splitting_degrees;
    dump_text(opts.dump_dir, algebra_id + ".omega.txt", dist->omega.str());

    auto desc = check_descends(dist->omega);
    if (!desc.ok) {
        rep.note = "omega does not descend: " + desc.violation;
        return rep;
    }
    rep.pluecker = check_pluecker(dist->omega).pass;
    rep.integrable = check_integrability(dist->omega).pass;
    if (opts.dump_dir.size() && rep.q == 1)
        dump_text(opts.dump_dir, algebra_id + ".domega.txt", exterior_derivative(dist->omega).str());

    SliceOptions sopts;
    sopts.primes = opts.primes;
    sopts.trials = opts.trials;
    sopts.seed = opts.seed;
    rep.codim = codim_report(*dist, sopts);
    rep.split_certified = rep.pluecker && rep.integrable && rep.codim->main.certified &&
                          rep.codim->welldef.certified;

    // H^1(g, sl(n+1)/g); prefer the graded complement when a grading element
    // is designated and usable
    QuotientModule mod = [&]() {
        if (opts.grading_element) return quotient_module(g, opts.grading_element);
        try {
            return quotient_module(g, 0);
        } catch (const std::domain_error&) {
            return quotient_module(g);
        }
    }();
    rep.h0 = cohomology_dim(mod, 0);
    rep.h1 = cohomology_dim(mod, 1);
    rep.rigid = rep.split_certified && rep.h1 == 0;

    auto t1 = std::chrono::steady_clock::now();
    rep.timing_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (!opts.dump_dir.empty())
        dump_text(opts.dump_dir, algebra_id + ".report.json", rep.to_json(opts.with_timing).dump(2) + "\n");
    return rep;
}

std::vector<VerdictReport> table1(const PipelineOptions& opts) {
    std::vector<VerdictReport> out;
    auto run = [&](const LieAlgebraData& g, const std::string& id) {
        out.push_back(run_pipeline(g, id, opts));
    };
    for (int q : {2, 3}) run(chain_algebra(q + 2, q + 1), "aff_sym(" + std::to_string(q + 2) + ")");
    for (int r : {5, 6}) run(sl2_sym_algebra(r), "sl2_sym(" + std::to_string(r) + ")");
    for (int n : {3, 4, 5, 6}) run(chain_algebra(n, 2), "infinito(" + std::to_string(n) + ")");
    run(g_extension_algebra(6), "g6");
    run(g_extension_algebra(7), "g7");

    // pull-back spot check: the diagonal family on P^3 read on P^4 and P^5
    {
        auto diag = diagonal_algebra(default_diagonal_weights(3, 1));
        auto dist = omega_from_fields(diag.fields());
        for (int m : {1, 2}) {
            VerdictReport rep;
            rep.algebra_id = "pullback(diagonal3,+" + std::to_string(m) + ")";
            if (!dist) {
                rep.note = "base omega vanished";
                out.push_back(rep);
                continue;
            }
            Distribution pb = pullback_linear(*dist, m);
            rep.n = pb.n;
            rep.q = pb.q;
            rep.degree = pb.degree;
            rep.omega_nonzero = true;
            auto desc = check_descends(pb.omega);
            rep.pluecker = desc.ok && check_pluecker(pb.omega).pass;
            rep.integrable = desc.ok && check_integrability(pb.omega).pass;
            if (pb.splitting_degrees) rep.splitting_degrees = *pb.splitting_degrees;
            rep.note = desc.ok ? "pull-back keeps degree " + std::to_string(pb.degree)
                               : "pull-back failed to descend";
            out.push_back(rep);
        }
    }
    return out;
}

}  // namespace folrig
