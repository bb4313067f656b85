#include "fewprod/experiment.hpp"

#include <chrono>
#include <fstream>
#include <stdexcept>

#include "fewprod/degeneracy.hpp"
#include "fewprod/generators.hpp"
#include "fewprod/good_set.hpp"
#include "fewprod/mult_group.hpp"
#include "fewprod/poly.hpp"
#include "fewprod/serialize.hpp"
#include "fewprod/set_arith.hpp"

namespace fewprod {

GroundSet build_family_set(const FamilySpec& family, std::uint64_t n, std::uint64_t row_seed,
                           const Budget& budget) {
    if (family.name == "gp") {
        GroundSet a = gen_gp(family.gp_ratio, n);
        if (productset(a, a).size() != 2 * n - 1)
            throw InvariantViolation("gp family lost its product structure");
        return a;
    }
    if (family.name == "ap") return gen_ap(family.ap_start, family.ap_step, n);
    if (family.name == "group") {
        GroundSet a =
            gen_group_sample(family.group_primes, family.group_height, n, row_seed, budget);
        if (mult_rank(a) > family.group_primes.size())
            throw InvariantViolation("group sample exceeded its rank bound");
        return a;
    }
    throw std::invalid_argument("unknown family '" + family.name + "'");
}

std::vector<ExperimentRow> run_experiment(const ExperimentConfig& cfg) {
    SparsePoly f = poly_parse(cfg.polynomial, cfg.variables);
    const bool degen = is_degenerate(f);

    std::vector<ExperimentRow> rows;
    rows.reserve(cfg.sweep.size());
    for (std::size_t i = 0; i < cfg.sweep.size(); i++) {
        ExperimentRow row;
        row.param = cfg.sweep[i];
        auto started = std::chrono::steady_clock::now();
        try {
            GroundSet a = build_family_set(cfg.family, cfg.sweep[i], cfg.seed + i, cfg.budget);
            if (a.contains_zero())
                throw std::invalid_argument("set contains 0; multiplicative columns undefined");
            SetStats stats = set_stats(a);
            row.set_size = stats.size;
            row.add_doubling = stats.add_doubling;
            row.mult_doubling = stats.mult_doubling;
            row.mult_rank = fewprod::mult_rank(a);
            row.image_size = image_set(f, a, cfg.budget).size();
            row.energy = energy(f, a, cfg.budget);
            GoodSetReport good = good_set_report(f, a, cfg.budget);
            row.sup_rep = good.sup_rep;
            row.bad_count = good.bad_count;
            if (degen) {
                ImageBoundReport bound = degenerate_image_bound(f, a, cfg.budget);
                if (!bound.holds)
                    throw InvariantViolation("degenerate image exceeded its certificate");
                row.degenerate = true;
                row.degen_bound = bound.product_bound;
            }
        } catch (const InvariantViolation&) {
            throw;  // a failed theorem must stop the run, not become a row note
        } catch (const std::exception& e) {
            row.error = e.what();
        }
        row.elapsed_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

// Minimal CSV quoting: wrap when the value holds a comma, quote, or newline.
std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += "\"";
    return out;
}

}  // namespace

std::string experiment_csv(const std::string& family_name,
                           const std::vector<ExperimentRow>& rows) {
    std::string out =
        "family,param,set_size,add_doubling,mult_doubling,mult_rank,"
        "image_size,energy,sup_rep,bad_count,degen_bound,error\n";
    for (const auto& r : rows) {
        out += csv_field(family_name) + "," + std::to_string(r.param) + ",";
        if (r.error.empty()) {
            out += std::to_string(r.set_size) + "," + r.add_doubling.str() + "," +
                   r.mult_doubling.str() + "," + std::to_string(r.mult_rank) + "," +
                   std::to_string(r.image_size) + "," + r.energy.get_str() + "," +
                   std::to_string(r.sup_rep) + "," + std::to_string(r.bad_count) + "," +
                   (r.degenerate ? r.degen_bound.get_str() : "") + ",";
        } else {
            out += ",,,,,,,,," + csv_field(r.error);
        }
        out += "\n";
    }
    return out;
}

void write_experiment_outputs(const ExperimentConfig& cfg,
                              const std::vector<ExperimentRow>& rows) {
    if (!cfg.csv_path.empty()) {
        std::ofstream f(cfg.csv_path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open " + cfg.csv_path);
        f << experiment_csv(cfg.family.name, rows);
    }
    if (!cfg.json_path.empty()) {
        std::ofstream f(cfg.json_path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open " + cfg.json_path);
        f << experiment_report_to_json(cfg, rows).dump(2) << "\n";
    }
}

}  // namespace fewprod
