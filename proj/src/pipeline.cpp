#include "talex/pipeline.hpp"

#include <algorithm>

namespace talex {

PipelineReport run_pipeline(const KnotInput& input, const PipelineOptions& opts) {
    PipelineReport report;
    report.name = input.name;
    report.warnings = input.warnings;

    const Presentation p = input.presentation();
    p.validate();
    report.generators = p.generators;
    report.alpha = abelianization(p);

    std::optional<size_t> pivot;
    if (opts.pivot_name) {
        const int idx = p.generator_index(*opts.pivot_name);
        if (idx < 0) throw Error("unknown pivot generator '" + *opts.pivot_name + "'");
        pivot = static_cast<size_t>(idx);
    }

    report.alexander = alexander_polynomial(p, report.alpha, 1);
    report.determinant = knot_determinant(report.alexander);
    report.determinant_odd = mpz_odd_p(report.determinant.get_mpz_t()) != 0;
    if (!report.determinant_odd)
        report.warnings.push_back("determinant is even; input is not a classical knot presentation");

    if (opts.stage == PipelineStage::Alexander) return report;

    if (input.kind != KnotInput::Kind::Lin)
        throw Error("metabelian enumeration needs a Lin presentation input");
    if (!report.determinant.fits_slong_p()) throw Error("determinant too large to enumerate");
    const long n = report.determinant.get_si();
    if (n == 0) throw Error("vanishing determinant; no metabelian modulus");

    const long m = opts.modulus == 0 ? default_working_modulus(n) : opts.modulus;
    if (m % 4 != 0 || m % n != 0)
        throw Error("modulus " + std::to_string(m) + " is too small: needs lcm(4," + std::to_string(n) +
                    ") | m");
    report.working_modulus = m;

    const MetabelianEnumeration enumeration = enumerate_metabelian(*input.lin, n, m);
    report.solution_count = enumeration.solution_count;

    std::vector<MetabelianClass> selected;
    std::optional<std::vector<long>> rep_override = opts.rep_exponents;
    if (!rep_override) rep_override = input.rep_exponents;
    if (rep_override) {
        if (rep_override->size() != static_cast<size_t>(2 * input.lin->genus))
            throw Error("exponent override needs 2*genus entries");
        MetabelianClass cls = canonical_class(*rep_override, n);
        if (std::all_of(cls.exponents.begin(), cls.exponents.end(), [](long v) { return v == 0; }))
            throw Error("exponent override is the zero vector (reducible)");
        if (!check_relations(p, metabelian_representation(cls, m)))
            throw Error("exponent override does not satisfy the Lin relation system mod " +
                        std::to_string(n));
        selected.push_back(std::move(cls));
    } else {
        for (const auto& [cls, rho] : enumeration.classes) selected.push_back(cls);
        if (opts.class_index) {
            if (*opts.class_index < 1 || *opts.class_index > selected.size())
                throw Error("class index out of range (have " + std::to_string(selected.size()) +
                            " classes)");
            selected = {selected[*opts.class_index - 1]};
        }
    }
    report.classes = selected;

    if (opts.stage == PipelineStage::Metabelian) return report;

    for (const MetabelianClass& cls : selected) {
        ClassRow row;
        row.cls = cls;
        const Representation rho = metabelian_representation(cls, m);
        row.standard_twisted = wada_invariant(p, report.alpha, rho, pivot);
        row.factorization = verify_factorization(*input.lin, cls, m, pivot);
        row.adjoint_twisted = row.factorization.adjoint_twisted;
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace talex
