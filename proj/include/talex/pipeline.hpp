#pragma once

#include <optional>
#include <string>
#include <vector>

#include "talex/knot_io.hpp"
#include "talex/twisted_alexander.hpp"

namespace talex {

enum class PipelineStage { Alexander, Metabelian, Full };

struct PipelineOptions {
    PipelineStage stage = PipelineStage::Full;
    long modulus = 0;  // 0 = lcm(4, |Delta(-1)|)
    std::optional<std::string> pivot_name;
    std::optional<std::vector<long>> rep_exponents;  // explicit class override
    std::optional<size_t> class_index;               // 1-based selection
};

struct ClassRow {
    MetabelianClass cls;
    TwistedAlexResult standard_twisted;  // Delta^{alpha (x) rho}
    TwistedAlexResult adjoint_twisted;   // Delta^{alpha (x) Ad rho}
    FactorizationReport factorization;
};

struct PipelineReport {
    std::string name;
    std::vector<std::string> generators;
    Abelianization alpha;
    Laurent alexander{1};  // over Q
    mpz_class determinant;
    bool determinant_odd = true;
    long working_modulus = 0;  // 0 when enumeration was skipped
    long solution_count = 0;
    std::vector<MetabelianClass> classes;
    std::vector<ClassRow> rows;  // filled for PipelineStage::Full
    std::vector<std::string> warnings;
};

// Alexander polynomial -> determinant -> metabelian enumeration -> twisted
// invariants -> factorization report, deterministic over identical inputs.
PipelineReport run_pipeline(const KnotInput& input, const PipelineOptions& opts = {});

}  // namespace talex
