#include "talex/serialize.hpp"

#include <sstream>

namespace talex {

namespace {

std::string tpow(long e) {
    if (e == 1) return "t";
    return "t^" + std::to_string(e);
}

Json mpz_to_json(const mpz_class& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

}  // namespace

Json cyclo_to_json(const Cyclo& c) {
    Json coords = Json::array();
    for (const Rational& q : c.coords()) coords.push_back(q.get_str());
    return Json{{"m", c.modulus()}, {"coords", coords}};
}

Json poly_to_json(const Laurent& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back(Json::array({e, cyclo_to_json(c)}));
    return terms;
}

std::string cyclo_to_string(const Cyclo& c) {
    if (c.is_zero()) return "0";
    const std::string zname = "z" + std::to_string(c.modulus());
    std::string out;
    for (size_t k = 0; k < c.coords().size(); ++k) {
        const Rational& q = c.coords()[k];
        if (q == 0) continue;
        Rational mag = abs(q);
        std::string body;
        if (k == 0) {
            body = mag.get_str();
        } else {
            std::string zpow = k == 1 ? zname : zname + "^" + std::to_string(k);
            body = mag == 1 ? zpow : mag.get_str() + "*" + zpow;
        }
        if (out.empty())
            out = (q < 0 ? "-" : "") + body;
        else
            out += (q < 0 ? " - " : " + ") + body;
    }
    return out;
}

std::string poly_to_string(const Laurent& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        bool negative = false;
        std::string body;
        if (c.is_rational()) {
            Rational q = c.rational_value();
            negative = q < 0;
            Rational mag = abs(q);
            if (e == 0)
                body = mag.get_str();
            else
                body = mag == 1 ? tpow(e) : mag.get_str() + "*" + tpow(e);
        } else {
            body = "(" + cyclo_to_string(c) + ")";
            if (e != 0) body += "*" + tpow(e);
        }
        if (out.empty())
            out = (negative ? "-" : "") + body;
        else
            out += (negative ? " - " : " + ") + body;
    }
    return out;
}

Json representation_to_json(const Representation& rho,
                            const std::vector<std::string>& generator_names,
                            const std::string& class_label) {
    Json gens = Json::object();
    for (size_t g = 0; g < rho.images.size(); ++g) {
        Json matrix = Json::array();
        for (size_t i = 0; i < rho.images[g].rows(); ++i) {
            Json row = Json::array();
            for (size_t j = 0; j < rho.images[g].cols(); ++j)
                row.push_back(cyclo_to_json(rho.images[g].at(i, j)));
            matrix.push_back(row);
        }
        gens[generator_names.at(g)] = matrix;
    }
    Json out{{"dimension", rho.dimension}, {"modulus", rho.modulus}, {"generators", gens}};
    if (!class_label.empty()) out["class"] = class_label;
    return out;
}

Json twisted_result_to_json(const TwistedAlexResult& r,
                            const std::vector<std::string>& generator_names) {
    Json out{{"numerator", poly_to_json(r.numerator)},
             {"denominator", poly_to_json(r.denominator)},
             {"denominator_str", poly_to_string(r.denominator)},
             {"numerator_str", poly_to_string(r.numerator)},
             {"pivot", generator_names.at(r.pivot)}};
    if (r.reduced) {
        out["reduced"] = poly_to_json(*r.reduced);
        out["reduced_str"] = poly_to_string(*r.reduced);
        out["rational"] = nullptr;
    } else {
        out["reduced"] = nullptr;
        out["rational"] = Json{{"numerator", poly_to_json(r.rational->numerator())},
                               {"numerator_str", poly_to_string(r.rational->numerator())},
                               {"denominator", poly_to_json(r.rational->denominator())},
                               {"denominator_str", poly_to_string(r.rational->denominator())}};
    }
    return out;
}

namespace {

std::string twisted_result_to_text(const TwistedAlexResult& r) {
    if (r.reduced) return poly_to_string(*r.reduced);
    return "(" + poly_to_string(r.rational->numerator()) + ") / (" +
           poly_to_string(r.rational->denominator()) + ")";
}

}  // namespace

Json factorization_to_json(const FactorizationReport& r) {
    // Generator names only matter for the pivot rendering; Lin order.
    std::vector<std::string> names;
    for (size_t i = 1; i < r.cls.exponents.size() + 1; ++i) names.push_back("x" + std::to_string(i));
    names.push_back("mu");
    Json out{{"class", r.cls.label()},
             {"assoc_class", r.assoc_cls.label()},
             {"modulus", r.working_modulus},
             {"alexander", poly_to_json(r.alexander)},
             {"alexander_str", poly_to_string(r.alexander)},
             {"rho_hat", twisted_result_to_json(r.rho_hat, names)},
             {"adjoint", twisted_result_to_json(r.adjoint_twisted, names)},
             {"theorem_holds", r.theorem_holds},
             {"p_even_symmetric", r.p_even_symmetric},
             {"rho_hat_even_degrees", r.rho_hat_even},
             {"q_vanishes_at_one", r.q_vanishes_at_one},
             {"diagnostic", r.diagnostic}};
    if (r.extra_factor) {
        out["extra_factor"] = poly_to_json(*r.extra_factor);
        out["extra_factor_str"] = poly_to_string(*r.extra_factor);
    } else {
        out["extra_factor"] = nullptr;
    }
    return out;
}

Json pipeline_to_json(const PipelineReport& r, PipelineStage stage) {
    Json out{{"knot", r.name},
             {"generators", r.generators},
             {"alexander", poly_to_json(r.alexander)},
             {"alexander_str", poly_to_string(r.alexander)},
             {"determinant", mpz_to_json(r.determinant)},
             {"determinant_odd", r.determinant_odd},
             {"warnings", r.warnings}};
    Json alpha = Json::array();
    for (long a : r.alpha) alpha.push_back(a);
    out["abelianization"] = alpha;
    if (stage == PipelineStage::Alexander) return out;

    out["modulus"] = r.working_modulus;
    out["solution_count"] = r.solution_count;
    out["class_count"] = r.classes.size();
    Json classes = Json::array();
    for (const auto& cls : r.classes) {
        Json c{{"label", cls.label()}, {"n", cls.n}};
        Json exps = Json::array();
        for (long e : cls.exponents) exps.push_back(e);
        c["exponents"] = exps;
        c["representation"] =
            representation_to_json(metabelian_representation(cls, r.working_modulus), r.generators,
                                   cls.label());
        classes.push_back(c);
    }
    out["classes"] = classes;
    if (stage == PipelineStage::Metabelian) return out;

    Json rows = Json::array();
    for (const ClassRow& row : r.rows) {
        rows.push_back(Json{{"class", row.cls.label()},
                            {"twisted", twisted_result_to_json(row.standard_twisted, r.generators)},
                            {"twisted_adjoint", twisted_result_to_json(row.adjoint_twisted, r.generators)},
                            {"factorization", factorization_to_json(row.factorization)}});
    }
    out["rows"] = rows;
    return out;
}

std::string pipeline_to_text(const PipelineReport& r, PipelineStage stage, bool adjoint_in_twisted) {
    std::ostringstream os;
    os << "knot: " << r.name << "\n";
    os << "alexander: " << poly_to_string(r.alexander) << "\n";
    os << "determinant: " << r.determinant.get_str() << (r.determinant_odd ? "" : "  [warning: even]")
       << "\n";
    for (const auto& w : r.warnings) os << "warning: " << w << "\n";
    if (stage == PipelineStage::Alexander) return os.str();

    os << "working modulus: " << r.working_modulus << "\n";
    os << "solution count mod " << (r.classes.empty() ? r.determinant.get_str()
                                                      : std::to_string(r.classes.front().n))
       << ": " << r.solution_count << "\n";
    os << "metabelian classes: " << r.classes.size() << "\n";
    if (stage == PipelineStage::Metabelian) {
        for (size_t i = 0; i < r.classes.size(); ++i)
            os << "  [" << i + 1 << "] " << r.classes[i].label() << "\n";
        return os.str();
    }

    for (size_t i = 0; i < r.rows.size(); ++i) {
        const ClassRow& row = r.rows[i];
        os << "[class " << i + 1 << "] " << row.cls.label() << "\n";
        if (adjoint_in_twisted) {
            os << "  twisted (adjoint): " << twisted_result_to_text(row.adjoint_twisted) << "\n";
        } else {
            os << "  twisted          : " << twisted_result_to_text(row.standard_twisted) << "\n";
            os << "  twisted (adjoint): " << twisted_result_to_text(row.adjoint_twisted) << "\n";
            const FactorizationReport& f = row.factorization;
            os << "  associated class : " << f.assoc_cls.label() << "\n";
            os << "  rho_hat invariant: " << twisted_result_to_text(f.rho_hat) << "\n";
            os << "  extra factor P   : "
               << (f.extra_factor ? poly_to_string(*f.extra_factor) : std::string("(none)")) << "\n";
            os << "  theorem_holds=" << (f.theorem_holds ? "yes" : "NO")
               << " p_even_symmetric=" << (f.p_even_symmetric ? "yes" : "NO")
               << " rho_hat_even=" << (f.rho_hat_even ? "yes" : "NO")
               << " q_vanishes_at_one=" << (f.q_vanishes_at_one ? "yes" : "NO") << "\n";
            if (!f.diagnostic.empty()) os << "  diagnostic: " << f.diagnostic << "\n";
        }
    }
    return os.str();
}

}  // namespace talex
