#include "fewprod/serialize.hpp"

#include <stdexcept>

namespace fewprod {

json set_to_json(const GroundSet& a) {
    json arr = json::array();
    for (const auto& x : a) arr.push_back(x.str());
    return arr;
}

GroundSet set_from_json(const json& j, bool allow_zero_elements) {
    if (!j.is_array()) throw std::invalid_argument("set JSON must be an array");
    std::vector<Rational> elems;
    elems.reserve(j.size());
    for (const auto& e : j) elems.push_back(Rational::parse(e.get<std::string>()));
    return allow_zero_elements ? GroundSet(std::move(elems), allow_zero)
                               : GroundSet(std::move(elems));
}

json poly_to_json(const SparsePoly& f) {
    json terms = json::array();
    for (const auto& [m, c] : f.terms()) {
        json exps = json::array();
        for (std::uint32_t e : m) exps.push_back(e);
        terms.push_back({{"exponents", exps}, {"coeff", c.str()}});
    }
    return {{"variables", f.var_count()}, {"terms", terms}};
}

SparsePoly poly_from_json(const json& j) {
    SparsePoly f(j.at("variables").get<std::size_t>());
    for (const auto& t : j.at("terms")) {
        Monomial m;
        for (const auto& e : t.at("exponents")) m.push_back(e.get<std::uint32_t>());
        f.add_term(m, Rational::parse(t.at("coeff").get<std::string>()));
    }
    return f;
}

json exponent_vector_to_json(const ExponentVector& v) {
    json arr = json::array();
    for (std::size_t i = 0; i < v.size(); i++) arr.push_back(v[i].str());
    return arr;
}

ExponentVector exponent_vector_from_json(const json& j) {
    std::vector<Rational> entries;
    entries.reserve(j.size());
    for (const auto& e : j) entries.push_back(Rational::parse(e.get<std::string>()));
    return ExponentVector(std::move(entries));
}

json decomposition_to_json(const Decomposition& d) {
    json vectors = json::array();
    for (const auto& v : d.vectors) vectors.push_back(exponent_vector_to_json(v));
    return {{"vectors", vectors},
            {"outer_poly", poly_to_json(d.outer)},
            {"permutation", d.permutation}};
}

json image_bound_to_json(const ImageBoundReport& r) {
    json factors = json::array();
    for (const auto& f : r.factors) {
        json exps = json::array();
        for (const auto& e : f.cleared_exponents) exps.push_back(e.get_str());
        factors.push_back({{"denominator_lcm", f.denominator_lcm.get_str()},
                           {"cleared_exponents", exps},
                           {"z_size", f.z_size},
                           {"doubling_bound", f.doubling_bound.str()},
                           {"doubling_holds", f.doubling_holds}});
    }
    return {{"measured", r.measured},
            {"factors", factors},
            {"product_bound", r.product_bound.get_str()},
            {"holds", r.holds}};
}

json set_stats_to_json(const SetStats& s) {
    return {{"size", s.size},
            {"add_doubling", s.add_doubling.str()},
            {"mult_doubling", s.mult_doubling.str()}};
}

json dyadic_profile_to_json(const DyadicProfile& p) {
    json ratios = json::array();
    for (const auto& r : p.ratios) ratios.push_back(r.str());
    return {{"ratios", ratios}, {"argmin", p.argmin}};
}

json rank_doubling_to_json(const RankDoublingReport& r) {
    return {{"rank", r.rank},
            {"doubling", r.doubling.str()},
            {"positive_normalized", r.positive_normalized},
            {"elementary_ok", r.elementary_ok},
            {"lemma_ok", r.lemma_ok}};
}

json good_set_report_to_json(const GoodSetReport& r) {
    json counts = json::array();  // array of [value, count], value order
    for (const auto& [v, c] : r.rep_counts.counts) counts.push_back({v.str(), c});
    return {{"bad_count", r.bad_count},
            {"bad_bound", r.bad_bound.get_str()},
            {"rep_counts", counts},
            {"domain_size", r.rep_counts.domain_size},
            {"sup_rep", r.sup_rep},
            {"restricted_energy", r.restricted_energy.get_str()}};
}

json envelope_report_to_json(const EnvelopeReport& r) {
    json curves = json::array();
    for (const auto& c : r.curves)
        curves.push_back(
            {{"label", c.label}, {"threshold", c.threshold.str()}, {"within", c.within}});
    return {{"good_set", good_set_report_to_json(r.good)},
            {"mult_doubling", r.mult_doubling.str()},
            {"mult_rank", r.rank},
            {"curves", curves}};
}

std::vector<ReferenceCurve> curves_from_json(const json& j) {
    std::vector<ReferenceCurve> out;
    for (const auto& c : j)
        out.push_back({c.at("label").get<std::string>(),
                       Rational::parse(c.at("threshold").get<std::string>())});
    return out;
}

UnitEquation unit_equation_from_json(const json& j) {
    UnitEquation eq;
    for (const auto& c : j.at("coefficients"))
        eq.coefficients.push_back(Rational::parse(c.get<std::string>()));
    eq.target = Rational::parse(j.at("target").get<std::string>());
    eq.generators = set_from_json(j.at("generators"), /*allow_zero_elements=*/false);
    eq.height_cap = j.at("height").get<std::uint64_t>();
    return eq;
}

json unit_equation_solution_to_json(const UnitEquationSolution& s) {
    json sols = json::array();
    for (const auto& z : s.solutions) {
        json tuple = json::array();
        for (const auto& v : z) tuple.push_back(v.str());
        sols.push_back(tuple);
    }
    return {{"solutions", sols},
            {"count", s.solutions.size()},
            {"free_rank", s.free_rank},
            {"box_size", s.box_size},
            {"theorem_bound", s.theorem_bound.get_str()}};
}

ExperimentConfig experiment_config_from_json(const json& j) {
    ExperimentConfig cfg;
    const json& fam = j.at("family");
    cfg.family.name = fam.at("name").get<std::string>();
    if (cfg.family.name == "gp") {
        cfg.family.gp_ratio = Rational::parse(fam.at("ratio").get<std::string>());
    } else if (cfg.family.name == "ap") {
        cfg.family.ap_start = Rational::parse(fam.at("start").get<std::string>());
        cfg.family.ap_step = Rational::parse(fam.at("step").get<std::string>());
    } else if (cfg.family.name == "group") {
        for (const auto& p : fam.at("primes")) cfg.family.group_primes.push_back(p.get<long>());
        cfg.family.group_height = fam.at("height").get<std::uint64_t>();
    } else {
        throw std::invalid_argument("unknown family '" + cfg.family.name + "'");
    }
    cfg.polynomial = j.at("polynomial").get<std::string>();
    cfg.variables = j.at("variables").get<std::size_t>();
    for (const auto& n : j.at("sweep")) cfg.sweep.push_back(n.get<std::uint64_t>());
    cfg.seed = j.value("seed", std::uint64_t{0});
    if (j.contains("budgets")) {
        const json& b = j.at("budgets");
        cfg.budget.max_set_elements = b.value("max_set_elements", cfg.budget.max_set_elements);
        cfg.budget.max_tuples = b.value("max_tuples", cfg.budget.max_tuples);
    }
    if (j.contains("outputs")) {
        const json& o = j.at("outputs");
        cfg.csv_path = o.value("csv", "");
        cfg.json_path = o.value("json", "");
    }
    return cfg;
}

namespace {

json config_echo(const ExperimentConfig& cfg) {
    json fam{{"name", cfg.family.name}};
    if (cfg.family.name == "gp") fam["ratio"] = cfg.family.gp_ratio.str();
    if (cfg.family.name == "ap") {
        fam["start"] = cfg.family.ap_start.str();
        fam["step"] = cfg.family.ap_step.str();
    }
    if (cfg.family.name == "group") {
        fam["primes"] = cfg.family.group_primes;
        fam["height"] = cfg.family.group_height;
    }
    return {{"family", fam},
            {"polynomial", cfg.polynomial},
            {"variables", cfg.variables},
            {"sweep", cfg.sweep},
            {"seed", cfg.seed}};
}

}  // namespace

json experiment_report_to_json(const ExperimentConfig& cfg,
                               const std::vector<ExperimentRow>& rows) {
    json out{{"config", config_echo(cfg)}, {"rows", json::array()}};
    for (const auto& r : rows) {
        json row{{"param", r.param}, {"elapsed_seconds", r.elapsed_seconds}};
        if (!r.error.empty()) {
            row["error"] = r.error;
        } else {
            row["set_size"] = r.set_size;
            row["add_doubling"] = r.add_doubling.str();
            row["mult_doubling"] = r.mult_doubling.str();
            row["mult_rank"] = r.mult_rank;
            row["image_size"] = r.image_size;
            row["energy"] = r.energy.get_str();
            row["sup_rep"] = r.sup_rep;
            row["bad_count"] = r.bad_count;
            if (r.degenerate) row["degen_bound"] = r.degen_bound.get_str();
        }
        out["rows"].push_back(std::move(row));
    }
    return out;
}

std::pair<std::string, std::vector<ExperimentRow>> experiment_report_from_json(const json& j) {
    std::string family = j.at("config").at("family").at("name").get<std::string>();
    std::vector<ExperimentRow> rows;
    for (const auto& rj : j.at("rows")) {
        ExperimentRow r;
        r.param = rj.at("param").get<std::uint64_t>();
        r.elapsed_seconds = rj.value("elapsed_seconds", 0.0);
        if (rj.contains("error")) {
            r.error = rj.at("error").get<std::string>();
        } else {
            r.set_size = rj.at("set_size").get<std::size_t>();
            r.add_doubling = Rational::parse(rj.at("add_doubling").get<std::string>());
            r.mult_doubling = Rational::parse(rj.at("mult_doubling").get<std::string>());
            r.mult_rank = rj.at("mult_rank").get<std::size_t>();
            r.image_size = rj.at("image_size").get<std::uint64_t>();
            r.energy = mpz_class(rj.at("energy").get<std::string>());
            r.sup_rep = rj.at("sup_rep").get<std::uint64_t>();
            r.bad_count = rj.at("bad_count").get<std::uint64_t>();
            if (rj.contains("degen_bound")) {
                r.degenerate = true;
                r.degen_bound = mpz_class(rj.at("degen_bound").get<std::string>());
            }
        }
        rows.push_back(std::move(r));
    }
    return {std::move(family), std::move(rows)};
}

}  // namespace fewprod
