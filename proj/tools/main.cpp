#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "fewprod/degeneracy.hpp"
#include "fewprod/errors.hpp"
#include "fewprod/experiment.hpp"
#include "fewprod/good_set.hpp"
#include "fewprod/mult_group.hpp"
#include "fewprod/poly.hpp"
#include "fewprod/serialize.hpp"
#include "fewprod/set_arith.hpp"

namespace {

using fewprod::json;

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

// Sets arrive as a comma list of rationals ("1,2,3/2") or as @file.json
// holding a sorted array of rational strings.
fewprod::GroundSet load_set(const std::string& text, bool allow_zero_elements) {
    if (!text.empty() && text[0] == '@')
        return fewprod::set_from_json(load_json_file(text.substr(1)), allow_zero_elements);
    return allow_zero_elements ? fewprod::GroundSet::parse(text, fewprod::allow_zero)
                               : fewprod::GroundSet::parse(text);
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

fewprod::Mode parse_mode(const std::string& mode) {
    if (mode == "additive" || mode == "add") return fewprod::Mode::additive;
    if (mode == "multiplicative" || mode == "mul") return fewprod::Mode::multiplicative;
    throw CLI::ValidationError("mode must be additive or multiplicative");
}

struct PolyArgs {
    std::string text;
    std::size_t vars = 0;

    fewprod::SparsePoly parse() const { return fewprod::poly_parse(text, vars); }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic for polynomial images, degeneracy, and few-product sets"};
    app.require_subcommand(1);

    std::string set_text, set_b_text, mode_text = "additive", curves_path, instance_path;
    std::string config_path, report_path, csv_override, json_override;
    std::uint64_t k = 1, iterations = 1;
    PolyArgs poly;

    // degen check|decompose|bound
    auto* degen = app.add_subcommand("degen", "degeneracy analysis of a polynomial");
    degen->require_subcommand(1);
    auto* degen_check = degen->add_subcommand("check", "support rank and degeneracy verdict");
    degen_check->add_option("--poly", poly.text, "polynomial, e.g. \"x1*x2 + 3\"")->required();
    degen_check->add_option("--vars", poly.vars, "number of variables")->required();
    auto* degen_dec = degen->add_subcommand("decompose", "witness decomposition, degenerate input");
    degen_dec->add_option("--poly", poly.text)->required();
    degen_dec->add_option("--vars", poly.vars)->required();
    auto* degen_bound = degen->add_subcommand("bound", "degenerate image-size certificate");
    degen_bound->add_option("--poly", poly.text)->required();
    degen_bound->add_option("--vars", poly.vars)->required();
    degen_bound->add_option("--set", set_text, "ground set")->required();

    // image / energy
    auto* image = app.add_subcommand("image", "exact image of a set under a polynomial");
    image->add_option("--poly", poly.text)->required();
    image->add_option("--vars", poly.vars)->required();
    image->add_option("--set", set_text)->required();
    auto* energy_cmd = app.add_subcommand("energy", "collision energy over the tuple domain");
    energy_cmd->add_option("--poly", poly.text)->required();
    energy_cmd->add_option("--vars", poly.vars)->required();
    energy_cmd->add_option("--set", set_text)->required();

    // setop sum|prod|iter|cover|dyadic
    auto* setop = app.add_subcommand("setop", "finite-set arithmetic");
    setop->require_subcommand(1);
    auto* op_sum = setop->add_subcommand("sum", "A + B");
    op_sum->add_option("--a", set_text)->required();
    op_sum->add_option("--b", set_b_text)->required();
    auto* op_prod = setop->add_subcommand("prod", "A · B");
    op_prod->add_option("--a", set_text)->required();
    op_prod->add_option("--b", set_b_text)->required();
    auto* op_iter = setop->add_subcommand("iter", "k-fold iterated sum/product set");
    op_iter->add_option("--set", set_text)->required();
    op_iter->add_option("--k", k)->required();
    op_iter->add_option("--mode", mode_text, "additive|multiplicative");
    auto* op_cover = setop->add_subcommand("cover", "greedy covering subset X of B");
    op_cover->add_option("--a", set_text)->required();
    op_cover->add_option("--b", set_b_text)->required();
    op_cover->add_option("--mode", mode_text, "additive|multiplicative");
    auto* op_dyadic = setop->add_subcommand("dyadic", "repeated-squaring growth ratios");
    op_dyadic->add_option("--set", set_text)->required();
    op_dyadic->add_option("--l", iterations, "number of squarings")->required();

    // group rank|check|uniteq (+ top-level aliases rank, uniteq)
    auto* group = app.add_subcommand("group", "multiplicative-subgroup structure");
    group->require_subcommand(1);
    auto* group_rank = group->add_subcommand("rank", "free rank of the generated subgroup");
    group_rank->add_option("--set", set_text)->required();
    auto* group_check = group->add_subcommand("check", "rank vs. doubling bounds");
    group_check->add_option("--set", set_text)->required();
    auto* group_uniteq = group->add_subcommand("uniteq", "box-exhaustive unit-equation solve");
    group_uniteq->add_option("instance", instance_path, "instance JSON path")->required();
    auto* rank_alias = app.add_subcommand("rank", "alias of `group rank`");
    rank_alias->add_option("--set", set_text)->required();
    auto* uniteq_alias = app.add_subcommand("uniteq", "alias of `group uniteq`");
    uniteq_alias->add_option("instance", instance_path)->required();

    // goodset report|env
    auto* goodset = app.add_subcommand("goodset", "vanishing-subsum classification of tuples");
    goodset->require_subcommand(1);
    auto* gs_report = goodset->add_subcommand("report", "bad count and good-part histogram");
    gs_report->add_option("--poly", poly.text)->required();
    gs_report->add_option("--vars", poly.vars)->required();
    gs_report->add_option("--set", set_text)->required();
    auto* gs_env = goodset->add_subcommand("env", "report plus group statistics and verdicts");
    gs_env->add_option("--poly", poly.text)->required();
    gs_env->add_option("--vars", poly.vars)->required();
    gs_env->add_option("--set", set_text)->required();
    gs_env->add_option("--curves", curves_path, "reference thresholds JSON");

    // experiment run|report
    auto* experiment = app.add_subcommand("experiment", "sweep runner and report rendering");
    experiment->require_subcommand(1);
    auto* exp_run = experiment->add_subcommand("run", "run a sweep from a config");
    exp_run->add_option("config", config_path, "config JSON path")->required();
    exp_run->add_option("--csv", csv_override, "override the CSV output path");
    exp_run->add_option("--json", json_override, "override the JSON output path");
    auto* exp_report = experiment->add_subcommand("report", "re-render a JSON report as CSV");
    exp_report->add_option("report", report_path, "report JSON path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // help text, exit 0
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;  // usage errors are always exit 1
    }

    try {
        if (degen_check->parsed()) {
            fewprod::SparsePoly f = poly.parse();
            emit({{"support_rank", fewprod::support_rank(f)},
                  {"variables", f.var_count()},
                  {"degenerate", fewprod::is_degenerate(f)}});
        } else if (degen_dec->parsed()) {
            emit(fewprod::decomposition_to_json(fewprod::decompose(poly.parse())));
        } else if (degen_bound->parsed()) {
            emit(fewprod::image_bound_to_json(
                fewprod::degenerate_image_bound(poly.parse(), load_set(set_text, false))));
        } else if (image->parsed()) {
            fewprod::GroundSet img =
                fewprod::image_set(poly.parse(), load_set(set_text, true));
            emit({{"size", img.size()}, {"image", fewprod::set_to_json(img)}});
        } else if (energy_cmd->parsed()) {
            fewprod::SparsePoly f = poly.parse();
            fewprod::GroundSet a = load_set(set_text, true);
            emit({{"energy", fewprod::energy(f, a).get_str()},
                  {"image_size", fewprod::image_set(f, a).size()}});
        } else if (op_sum->parsed()) {
            emit(fewprod::set_to_json(
                fewprod::sumset(load_set(set_text, true), load_set(set_b_text, true))));
        } else if (op_prod->parsed()) {
            emit(fewprod::set_to_json(
                fewprod::productset(load_set(set_text, true), load_set(set_b_text, true))));
        } else if (op_iter->parsed()) {
            fewprod::Mode mode = parse_mode(mode_text);
            bool zero_ok = mode == fewprod::Mode::additive;
            emit(fewprod::set_to_json(fewprod::iterated(load_set(set_text, zero_ok), k, mode)));
        } else if (op_cover->parsed()) {
            fewprod::Mode mode = parse_mode(mode_text);
            bool zero_ok = mode == fewprod::Mode::additive;
            emit(fewprod::set_to_json(fewprod::ruzsa_cover(load_set(set_text, zero_ok),
                                                           load_set(set_b_text, zero_ok), mode)));
        } else if (op_dyadic->parsed()) {
            emit(fewprod::dyadic_profile_to_json(
                fewprod::dyadic_profile(load_set(set_text, false), iterations)));
        } else if (group_rank->parsed() || rank_alias->parsed()) {
            emit({{"rank", fewprod::mult_rank(load_set(set_text, false))}});
        } else if (group_check->parsed()) {
            emit(fewprod::rank_doubling_to_json(
                fewprod::rank_doubling_check(load_set(set_text, false))));
        } else if (group_uniteq->parsed() || uniteq_alias->parsed()) {
            fewprod::UnitEquation eq =
                fewprod::unit_equation_from_json(load_json_file(instance_path));
            emit(fewprod::unit_equation_solution_to_json(fewprod::solve_unit_equation(eq)));
        } else if (gs_report->parsed()) {
            emit(fewprod::good_set_report_to_json(
                fewprod::good_set_report(poly.parse(), load_set(set_text, false))));
        } else if (gs_env->parsed()) {
            std::vector<fewprod::ReferenceCurve> curves;
            if (!curves_path.empty())
                curves = fewprod::curves_from_json(load_json_file(curves_path));
            emit(fewprod::envelope_report_to_json(
                fewprod::envelope_report(poly.parse(), load_set(set_text, false), curves)));
        } else if (exp_run->parsed()) {
            fewprod::ExperimentConfig cfg =
                fewprod::experiment_config_from_json(load_json_file(config_path));
            if (!csv_override.empty()) cfg.csv_path = csv_override;
            if (!json_override.empty()) cfg.json_path = json_override;
            std::vector<fewprod::ExperimentRow> rows = fewprod::run_experiment(cfg);
            fewprod::write_experiment_outputs(cfg, rows);
            if (cfg.csv_path.empty() && cfg.json_path.empty())
                std::cout << fewprod::experiment_csv(cfg.family.name, rows);
        } else if (exp_report->parsed()) {
            auto [family, rows] = fewprod::experiment_report_from_json(load_json_file(report_path));
            std::cout << fewprod::experiment_csv(family, rows);
        }
    } catch (const fewprod::InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
