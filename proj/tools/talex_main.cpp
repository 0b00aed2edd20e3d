// Command-line front end: parse presentation files, run the invariant
// pipeline, and print text or JSON reports.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "talex/builtins.hpp"
#include "talex/pipeline.hpp"
#include "talex/serialize.hpp"

namespace {

struct CommonOpts {
    std::string format = "text";
    std::string pivot;
    long modulus = 0;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    cmd->add_option("--pivot", opts.pivot, "Distinguished generator for Wada's formula");
    cmd->add_option("--modulus", opts.modulus,
                    "Cyclotomic working modulus (default lcm(4, |Delta(-1)|))");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw talex::Error("cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<long> parse_rep_flag(const std::string& text) {
    std::string body = text;
    if (body.rfind("k=", 0) == 0) body = body.substr(2);
    std::vector<long> exps;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            exps.push_back(std::stol(item, &used));
            if (used != item.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw talex::Error("bad --rep entry '" + item + "'");
        }
    }
    if (exps.empty()) throw talex::Error("empty --rep exponent list");
    return exps;
}

talex::PipelineOptions make_options(const CommonOpts& common, talex::PipelineStage stage,
                                    const std::string& rep_flag, size_t class_index) {
    talex::PipelineOptions opts;
    opts.stage = stage;
    opts.modulus = common.modulus;
    if (!common.pivot.empty()) opts.pivot_name = common.pivot;
    if (!rep_flag.empty()) opts.rep_exponents = parse_rep_flag(rep_flag);
    if (class_index > 0) opts.class_index = class_index;
    return opts;
}

int emit_report(const talex::PipelineReport& report, const CommonOpts& common,
                talex::PipelineStage stage, bool adjoint_only, bool check_findings) {
    if (common.format == "json")
        std::cout << talex::pipeline_to_json(report, stage).dump(2) << "\n";
    else
        std::cout << talex::pipeline_to_text(report, stage, adjoint_only);
    if (check_findings)
        for (const auto& row : report.rows)
            if (!row.factorization.all_checks()) return 2;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Twisted Alexander polynomials of knots for metabelian SL(2,C) representations"};
    app.require_subcommand(1);

    CommonOpts alexander_opts, metabelian_opts, twisted_opts, verify_opts, run_opts, examples_opts;
    std::string alexander_file, metabelian_file, twisted_file, verify_file, run_name;
    std::string twisted_rep, verify_rep;
    size_t twisted_class = 0, verify_class = 0;
    bool twisted_adjoint = false;

    CLI::App* cmd_alexander =
        app.add_subcommand("alexander", "Alexander polynomial and knot determinant");
    cmd_alexander->add_option("file", alexander_file, "Presentation file")->required();
    add_common(cmd_alexander, alexander_opts);

    CLI::App* cmd_metabelian =
        app.add_subcommand("metabelian", "Enumerate irreducible metabelian classes");
    cmd_metabelian->add_option("file", metabelian_file, "Presentation file")->required();
    add_common(cmd_metabelian, metabelian_opts);

    CLI::App* cmd_twisted = app.add_subcommand("twisted", "Twisted Alexander polynomials");
    cmd_twisted->add_option("file", twisted_file, "Presentation file")->required();
    cmd_twisted->add_option("--class", twisted_class, "1-based class index");
    cmd_twisted->add_option("--rep", twisted_rep, "Explicit exponent vector, e.g. k=1,2");
    cmd_twisted->add_flag("--adjoint", twisted_adjoint, "Report the adjoint invariant only");
    add_common(cmd_twisted, twisted_opts);

    CLI::App* cmd_verify = app.add_subcommand("verify", "Check the adjoint factorization");
    cmd_verify->add_option("file", verify_file, "Presentation file")->required();
    cmd_verify->add_option("--class", verify_class, "1-based class index");
    cmd_verify->add_option("--rep", verify_rep, "Explicit exponent vector, e.g. k=1,2");
    add_common(cmd_verify, verify_opts);

    CLI::App* cmd_examples = app.add_subcommand("examples", "List the built-in knots");
    add_common(cmd_examples, examples_opts);

    CLI::App* cmd_run = app.add_subcommand("run", "Full pipeline on a built-in knot");
    cmd_run->add_option("name", run_name, "Built-in knot name")->required();
    add_common(cmd_run, run_opts);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_examples->parsed()) {
            if (examples_opts.format == "json") {
                talex::Json out = talex::Json::array();
                for (const auto& name : talex::builtin_names()) out.push_back(name);
                std::cout << out.dump(2) << "\n";
            } else {
                for (const auto& name : talex::builtin_names()) std::cout << name << "\n";
            }
            return 0;
        }
        if (cmd_alexander->parsed()) {
            const talex::KnotInput input = talex::parse_input(read_file(alexander_file));
            const auto opts = make_options(alexander_opts, talex::PipelineStage::Alexander, "", 0);
            return emit_report(talex::run_pipeline(input, opts), alexander_opts,
                               talex::PipelineStage::Alexander, false, false);
        }
        if (cmd_metabelian->parsed()) {
            const talex::KnotInput input = talex::parse_input(read_file(metabelian_file));
            const auto opts = make_options(metabelian_opts, talex::PipelineStage::Metabelian, "", 0);
            return emit_report(talex::run_pipeline(input, opts), metabelian_opts,
                               talex::PipelineStage::Metabelian, false, false);
        }
        if (cmd_twisted->parsed()) {
            const talex::KnotInput input = talex::parse_input(read_file(twisted_file));
            const auto opts =
                make_options(twisted_opts, talex::PipelineStage::Full, twisted_rep, twisted_class);
            return emit_report(talex::run_pipeline(input, opts), twisted_opts,
                               talex::PipelineStage::Full, twisted_adjoint, false);
        }
        if (cmd_verify->parsed()) {
            const talex::KnotInput input = talex::parse_input(read_file(verify_file));
            const auto opts =
                make_options(verify_opts, talex::PipelineStage::Full, verify_rep, verify_class);
            return emit_report(talex::run_pipeline(input, opts), verify_opts,
                               talex::PipelineStage::Full, false, true);
        }
        if (cmd_run->parsed()) {
            const talex::KnotInput input = talex::builtin(run_name);
            const auto opts = make_options(run_opts, talex::PipelineStage::Full, "", 0);
            return emit_report(talex::run_pipeline(input, opts), run_opts,
                               talex::PipelineStage::Full, false, true);
        }
    } catch (const talex::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
