#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "folrig/extension.hpp"
#include "folrig/pipeline.hpp"

using namespace folrig;

namespace {

PipelineOptions fast_options() {
    PipelineOptions opts;
    opts.trials = 3;
    return opts;
}

}  // namespace

TEST_CASE("pipeline on the chain algebra at n = 4 reports rigid") {
    auto rep = run_pipeline(chain_algebra(4, 2), "infinito(4)", fast_options());
    CHECK(rep.omega_nonzero);
    CHECK(rep.n == 4);
    CHECK(rep.q == 1);
    CHECK(rep.degree == 3);
    CHECK(rep.pluecker);
    CHECK(rep.integrable);
    CHECK(rep.splitting_degrees == std::vector<int>{0, 0, 0});
    CHECK(rep.split_certified);
    CHECK(rep.h1 == 0);
    CHECK(rep.rigid);
}

TEST_CASE("pipeline on sl2_sym(4) is a non-verdict: the codimension hypothesis fails") {
    auto rep = run_pipeline(sl2_sym_algebra(4), "sl2_sym(4)", fast_options());
    CHECK(rep.omega_nonzero);
    CHECK(rep.q == 1);
    CHECK(rep.pluecker);
    CHECK(rep.integrable);
    REQUIRE(rep.codim);
    CHECK_FALSE(rep.codim->main.certified);
    CHECK_FALSE(rep.split_certified);
    CHECK_FALSE(rep.rigid);
    CHECK(rep.h1 == 0);  // the cohomology itself vanishes (semisimple)
}

TEST_CASE("pipeline on the diagonal family certifies the split hypothesis, no rigidity claim") {
    auto rep = run_pipeline(diagonal_algebra(default_diagonal_weights(3, 1)), "diagonal(3,1)",
                            fast_options());
    CHECK(rep.omega_nonzero);
    CHECK(rep.split_certified);
    CHECK(rep.h1 == 2);
    CHECK_FALSE(rep.rigid);
}

TEST_CASE("reports are byte-identical for a fixed seed") {
    PipelineOptions opts = fast_options();
    opts.seed = 4242;
    auto a = run_pipeline(chain_algebra(3, 2), "infinito(3)", opts);
    auto b = run_pipeline(chain_algebra(3, 2), "infinito(3)", opts);
    CHECK(a.to_json(false).dump() == b.to_json(false).dump());
}

TEST_CASE("degenerate omega is a reported non-verdict") {
    // the rational Lie-closed extension tuple on P^8 has omega(g) = 0
    auto sys = build_extension_system(8);
    std::vector<FieldElem> sol{FieldElem(0), FieldElem(-5), FieldElem(5), FieldElem(-3)};
    auto g = structure_constants(extension_basis(sys, sol));
    auto rep = run_pipeline(g, "extension8-closed", fast_options());
    CHECK_FALSE(rep.omega_nonzero);
    CHECK_FALSE(rep.rigid);
    CHECK(rep.note.find("vanishes") != std::string::npos);
}

TEST_CASE("table rows cover the catalogue and the pull-back spot checks") {
    PipelineOptions opts = fast_options();
    opts.trials = 2;
    auto rows = table1(opts);
    REQUIRE(rows.size() == 12);
    int rigid_count = 0;
    for (const auto& r : rows) {
        if (r.algebra_id.rfind("pullback", 0) == 0) {
            CHECK(r.pluecker);
            CHECK(r.integrable);
            CHECK(r.degree == 2);
        } else {
            CHECK(r.omega_nonzero);
            if (r.rigid) ++rigid_count;
        }
    }
    // aff_sym(4..5), sl2_sym(5..6), infinito(3..6), g6, g7 are all rigid
    CHECK(rigid_count == 10);
}
