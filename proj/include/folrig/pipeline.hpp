#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "folrig/cohomology.hpp"
#include "folrig/singdim.hpp"

namespace folrig {

struct PipelineOptions {
    std::uint64_t seed = 12345;
    std::vector<std::uint64_t> primes = {101, 103};
    int trials = 8;
    std::string dump_dir;        // empty: no dumps
    bool with_timing = false;    // timings make reports non-reproducible
    int max_pipeline_n = 7;      // larger n allowed per-stage with a warning
    std::optional<int> grading_element;  // basis index for the graded complement
};

// Machine-readable outcome of the rigidity pipeline for one algebra.
struct VerdictReport {
    std::string algebra_id;
    int n = 0, q = 0, degree = 0;
    bool omega_nonzero = false;
    bool pluecker = false;
    bool integrable = false;
    std::vector<int> splitting_degrees;
    std::optional<CodimReport> codim;
    int h1 = -1;                 // -1: not computed
    int h0 = -1;
    bool split_certified = false;
    bool rigid = false;          // split hypothesis certified AND H^1 = 0
    std::string note;
    double timing_ms = 0.0;

    nlohmann::ordered_json to_json(bool with_timing) const;
};

// omega(g) -> descends -> Pluecker -> integrability -> codimension
// certificates -> quotient module -> H^1 -> verdict
VerdictReport run_pipeline(const LieAlgebraData& g, const std::string& algebra_id,
                           const PipelineOptions& opts);

// the desk-scale catalogue: aff_sym(4..5), sl2_sym(5..6), the chain family at
// n = 3..6, the two extension algebras, and a linear pull-back spot check
std::vector<VerdictReport> table1(const PipelineOptions& opts);

}  // namespace folrig
