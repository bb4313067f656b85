// Full acceptance gate. Each numbered check prints exactly one PASS/FAIL line
// and the process exits nonzero when any of them fails. Checks are
// exception-isolated so a crash in one still lets the rest report.
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fewprod/degeneracy.hpp"
#include "fewprod/experiment.hpp"
#include "fewprod/generators.hpp"
#include "fewprod/good_set.hpp"
#include "fewprod/mult_group.hpp"
#include "fewprod/poly.hpp"
#include "fewprod/rng.hpp"
#include "fewprod/serialize.hpp"
#include "fewprod/set_arith.hpp"
#include "oracles.hpp"

using fewprod::ExponentVector;
using fewprod::GroundSet;
using fewprod::Rational;
using fewprod::SparsePoly;
using fewprod::SplitMix64;

namespace {

struct Outcome {
    bool ok = false;
    std::string detail;
};

int failures = 0;

void run(int index, const std::string& name, const std::function<Outcome()>& check) {
    Outcome out;
    try {
        out = check();
    } catch (const std::exception& e) {
        out.ok = false;
        out.detail = std::string("unexpected exception: ") + e.what();
    }
    std::cout << (out.ok ? "PASS" : "FAIL") << " criterion " << index << ": " << name << " — "
              << out.detail << "\n";
    if (!out.ok) failures++;
}

std::uint64_t total_degree(const SparsePoly& f) {
    std::uint64_t d = 0;
    for (const auto& [mono, coeff] : f.terms()) {
        std::uint64_t s = 0;
        for (std::uint32_t e : mono) s += e;
        d = std::max(d, s);
    }
    return d;
}

mpz_class mpz_pow(std::uint64_t base, std::uint64_t exp) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

// -------------------------------------------------------------------------
// 1. Degeneracy verdicts and decomposition round-trip on 400 random inputs.
Outcome degeneracy_biconditional() {
    auto start = std::chrono::steady_clock::now();
    SplitMix64 rng(9001);
    int correct = 0;
    for (int i = 0; i < 200; i++) {
        std::size_t n = 2 + (i % 4);
        SparsePoly f = oracle::rand_degenerate(rng, n);
        fewprod::Decomposition d = fewprod::decompose(f);
        if (fewprod::is_degenerate(f) && fewprod::verify_decomposition(f, d) &&
            d.vectors.size() == n - 1)
            correct++;
    }
    for (int i = 0; i < 200; i++) {
        std::size_t n = 2 + (i % 4);
        SparsePoly f = oracle::rand_fullrank(rng, n);
        bool threw = false;
        try {
            fewprod::decompose(f);
        } catch (const std::invalid_argument&) {
            threw = true;
        }
        if (!fewprod::is_degenerate(f) && threw) correct++;
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::ostringstream msg;
    msg << correct << "/400 verdicts correct with exact round-trips in " << ms << " ms";
    return {correct == 400 && ms < 10000, msg.str()};
}

// -------------------------------------------------------------------------
// 2. Collapsing polynomial over doubling-2 geometric sets: tight product set
//    and a quadratically small image.
Outcome geometric_collapse() {
    SparsePoly f = fewprod::poly_parse("x1 + x2*x3", 3);
    for (std::uint64_t n = 4; n <= 12; n++) {
        GroundSet a = fewprod::gen_gp(Rational(2), n);
        std::size_t prod = fewprod::productset(a, a).size();
        if (prod != 2 * n - 1 || prod > 2 * n) return {false, "product set too large"};
        std::uint64_t image = fewprod::image_set(f, a).size();
        if (image > 2 * n * n) {
            std::ostringstream msg;
            msg << "image " << image << " exceeds 2N^2 at N=" << n;
            return {false, msg.str()};
        }
    }
    return {true, "N=4..12: |A*A| = 2N-1 and |F(A,A,A)| <= 2N^2 throughout"};
}

// -------------------------------------------------------------------------
// 3. Zero-set ceiling d*|A|^{n-1} on 500 random polynomial/set pairs.
Outcome zero_count_ceiling() {
    SplitMix64 rng(9003);
    int checked = 0, violations = 0;
    while (checked < 500) {
        std::size_t n = 1 + rng.next_below(3);
        SparsePoly f = oracle::rand_poly(rng, n, 2, 4, 5);
        std::uint64_t d = total_degree(f);
        if (d < 1 || d > 4) continue;
        GroundSet a = oracle::rand_set(rng, 2 + rng.next_below(9), 8, true);
        mpz_class bound = d * mpz_pow(a.size(), n - 1);
        if (mpz_class(fewprod::zero_count(f, a)) > bound) violations++;
        checked++;
    }
    std::ostringstream msg;
    msg << violations << " violations in " << checked << " exact comparisons";
    return {violations == 0, msg.str()};
}

// -------------------------------------------------------------------------
// 4. Iterated sum/difference growth against the doubling-power ceiling
//    K^{k+l}|A| on 300 random sets.
Outcome iterated_growth_ceiling() {
    SplitMix64 rng(9004);
    int violations = 0;
    for (int i = 0; i < 300; i++) {
        GroundSet a = oracle::rand_set(rng, 2 + rng.next_below(11), 10, false);
        std::uint64_t k = rng.next_below(4), l = rng.next_below(4);
        if (k + l == 0) k = 1;
        fewprod::MixedSumsetResult r = fewprod::mixed_sumset(a, k, l);
        if (Rational(static_cast<long>(r.set.size())) > r.bound) violations++;
    }
    return {violations == 0,
            violations == 0 ? "300/300 sets within the exact rational ceiling"
                            : std::to_string(violations) + " violations"};
}

// -------------------------------------------------------------------------
// 5. Free rank versus multiplicative doubling across four structured
//    families: r <= 16K always, r <= 2K whenever normalization lands in Q>0.
Outcome rank_vs_doubling() {
    SplitMix64 rng(9005);
    int lemma = 0, elementary = 0, normalized = 0;
    const Rational ratios[] = {Rational(2), Rational(3), Rational(5), Rational(3, 2),
                               Rational(5, 2)};
    for (int i = 0; i < 200; i++) {
        GroundSet a = GroundSet::parse("1");
        switch (i % 4) {
            case 0:
                a = fewprod::gen_gp(ratios[rng.next_below(5)], 2 + rng.next_below(20));
                break;
            case 1:
                a = fewprod::gen_ap(Rational(1 + static_cast<long>(rng.next_below(5))),
                                    Rational(1 + static_cast<long>(rng.next_below(4))),
                                    2 + rng.next_below(20));
                break;
            case 2: {
                std::set<Rational> merged;
                for (const Rational& v : fewprod::gen_gp(Rational(2), 2 + rng.next_below(9)))
                    merged.insert(v);
                for (const Rational& v : fewprod::gen_gp(Rational(3), 2 + rng.next_below(9)))
                    merged.insert(v);
                a = oracle::from_set(merged);
                break;
            }
            case 3:
                a = fewprod::gen_group_sample({2, 3}, 2, 4 + rng.next_below(10), 7000 + i);
                break;
        }
        fewprod::RankDoublingReport rep = fewprod::rank_doubling_check(a);
        if (rep.lemma_ok) lemma++;
        if (rep.positive_normalized) {
            normalized++;
            if (rep.elementary_ok) elementary++;
        }
    }
    std::ostringstream msg;
    msg << lemma << "/200 within 16K, " << elementary << "/" << normalized
        << " normalized instances within 2K";
    return {lemma == 200 && elementary == normalized && normalized > 0, msg.str()};
}

// -------------------------------------------------------------------------
// 6. Vanishing-subsum classifier: zero never represented by a clean tuple,
//    the bad count stays under its ceiling, and the partition is exact.
Outcome subsum_classifier() {
    SplitMix64 rng(9006);
    for (int i = 0; i < 60; i++) {
        std::size_t n = 1 + rng.next_below(3);
        SparsePoly f = oracle::rand_poly(rng, n, 2, 3, 4);
        GroundSet a = oracle::rand_set(rng, 2 + rng.next_below(5), 5, true);
        fewprod::GoodSetReport rep = fewprod::good_set_report(f, a);
        if (rep.rep_counts.counts.count(Rational(0))) return {false, "zero value in histogram"};
        mpz_class ceiling = (mpz_class(1) << f.term_count()) - 1;
        ceiling *= total_degree(f) * mpz_pow(a.size(), n - 1);
        if (mpz_class(rep.bad_count) > ceiling && total_degree(f) >= 1)
            return {false, "bad count exceeds its ceiling"};
        mpz_class sum = rep.bad_count;
        for (const auto& [value, count] : rep.rep_counts.counts) sum += count;
        if (sum != mpz_pow(a.size(), n)) return {false, "partition of the domain leaks tuples"};
    }
    fewprod::GoodSetReport anchor =
        fewprod::good_set_report(fewprod::poly_parse("x1 + x2", 2), GroundSet::parse("2,4,8,16"));
    if (anchor.sup_rep != 2 || anchor.bad_count != 0)
        return {false, "anchor histogram off: expected peak 2 with no excluded tuples"};
    return {true, "60 random reports clean; anchor peak 2, zero excluded tuples"};
}

// -------------------------------------------------------------------------
// 7. Collision energy equals the squared histogram and satisfies
//    |image| * E >= |A|^{2n} everywhere.
Outcome energy_and_cauchy_schwarz() {
    SplitMix64 rng(9007);
    for (int i = 0; i < 80; i++) {
        std::size_t n = 1 + rng.next_below(3);
        SparsePoly f = oracle::rand_poly(rng, n, 2, 3, 4);
        GroundSet a = oracle::rand_set(rng, 2 + rng.next_below(5), 5, true);
        fewprod::RepCountMap reps = fewprod::rep_counts(f, a);
        mpz_class from_hist = 0;
        for (const auto& [value, count] : reps.counts) from_hist += mpz_class(count) * count;
        mpz_class e = fewprod::energy(f, a);
        if (e != from_hist) return {false, "energy disagrees with the squared histogram"};
        mpz_class lhs = mpz_class(fewprod::image_set(f, a).size()) * e;
        if (lhs < mpz_pow(a.size(), 2 * n)) return {false, "image*energy drops below |A|^{2n}"};
    }
    mpz_class anchor = fewprod::energy(fewprod::poly_parse("x1 + x2", 2), GroundSet::parse("1,2"));
    if (anchor != 6) return {false, "anchor energy is " + anchor.get_str() + ", expected 6"};
    return {true, "80 random pairs exact; anchor energy 6"};
}

// -------------------------------------------------------------------------
// 8. Shared-zero family in five variables concentrates energy above
//    |A|^{2n-4} while staying non-degenerate.
Outcome shared_zero_energy() {
    fewprod::SharedZeroFamily fam = fewprod::gen_shared_zero_family(5, Rational(1), Rational(1));
    if (fewprod::is_degenerate(fam.f)) return {false, "family polynomial is degenerate"};
    if (!fewprod::shared_zero_vanishes(fam)) return {false, "fiber does not vanish"};
    mpz_class e = fewprod::energy(fam.f, GroundSet::parse("1,2,3"));
    std::ostringstream msg;
    msg << "energy " << e.get_str() << " >= 729 on a 3-element set, polynomial full rank";
    return {e >= 729, msg.str()};
}

// -------------------------------------------------------------------------
// 9. Unit-equation enumerator agrees with the exhaustive box oracle and
//    stays under the closed-form solution ceiling.
Outcome unit_equation_agreement() {
    mpz_class anchor = fewprod::subspace_bound(1, 1, false);
    if (anchor != mpz_class("68719476736"))
        return {false, "closed-form anchor is " + anchor.get_str()};
    SplitMix64 rng(9009);
    const long primes[] = {2, 3, 5};
    for (int i = 0; i < 100; i++) {
        fewprod::UnitEquation eq;
        std::uint64_t l = 1 + rng.next_below(3);
        std::uint64_t rank = (l == 3) ? 1 : 1 + rng.next_below(2);
        eq.height_cap = (l == 3) ? 1 + rng.next_below(2) : 1 + rng.next_below(3);
        std::size_t first = rng.next_below(3 - (rank - 1));
        std::vector<Rational> gens;
        for (std::uint64_t g = 0; g < rank; g++) gens.push_back(Rational(primes[first + g]));
        if (rng.next_below(4) == 0) gens.push_back(Rational(-1));
        eq.generators = GroundSet(gens);
        for (std::uint64_t c = 0; c < l; c++)
            eq.coefficients.push_back(oracle::rand_rational(rng, 3, true));
        eq.target = oracle::rand_rational(rng, 4, true);
        fewprod::UnitEquationSolution sol = fewprod::solve_unit_equation(eq);
        if (sol.solutions != oracle::uniteq_direct(eq))
            return {false, "solver disagrees with the box oracle"};
        if (mpz_class(sol.solutions.size()) > sol.theorem_bound)
            return {false, "solution count exceeds the closed-form ceiling"};
    }
    return {true, "100 instances match the box oracle; counts under the ceiling"};
}

// -------------------------------------------------------------------------
// 10. Power-product system solver equals brute-force filtering.
Outcome monomial_system_agreement() {
    fewprod::MonomialSystem anchor_sys;
    anchor_sys.basis = {ExponentVector({Rational(1), Rational(1)}),
                        ExponentVector({Rational(1), Rational(-1)})};
    anchor_sys.target = {Rational(8), Rational(2)};
    std::vector<std::vector<Rational>> anchor =
        fewprod::solve_monomial_system(anchor_sys, GroundSet::parse("2,4"));
    if (anchor != std::vector<std::vector<Rational>>{{Rational(4), Rational(2)}})
        return {false, "anchor system missed its unique solution (4,2)"};

    SplitMix64 rng(9010);
    for (int i = 0; i < 100; i++) {
        std::size_t n = 1 + rng.next_below(3);
        fewprod::MonomialSystem sys;
        while (true) {
            sys.basis.clear();
            for (std::size_t r = 0; r < n; r++) {
                std::vector<Rational> row;
                for (std::size_t c = 0; c < n; c++) {
                    long v = rng.next_in(-2, 2);
                    row.push_back(Rational(v));
                }
                sys.basis.push_back(ExponentVector(row));
            }
            if (fewprod::qrank(sys.basis) == n) break;
        }
        GroundSet a = oracle::rand_set(rng, 2 + rng.next_below(5), 4, true);
        sys.target.clear();
        if (rng.next_below(2) == 0) {
            std::vector<Rational> probe;
            for (std::size_t j = 0; j < n; j++) {
                auto it = a.begin();
                std::advance(it, rng.next_below(a.size()));
                probe.push_back(*it);
            }
            for (const ExponentVector& z : sys.basis) {
                Rational t(1);
                for (std::size_t j = 0; j < n; j++)
                    t = t * probe[j].pow(z[j].num().get_si());
                sys.target.push_back(t);
            }
        } else {
            for (std::size_t j = 0; j < n; j++)
                sys.target.push_back(oracle::rand_rational(rng, 6, true));
        }
        if (fewprod::solve_monomial_system(sys, a) != oracle::monomial_direct(sys, a))
            return {false, "solver disagrees with brute force"};
    }
    return {true, "anchor exact; 100 random systems equal brute-force filtering"};
}

// -------------------------------------------------------------------------
// 11. Repeated sweep runs with a fixed seed write byte-identical CSV.
Outcome sweep_determinism() {
    fewprod::ExperimentConfig cfg;
    cfg.family.name = "group";
    cfg.family.group_primes = {2, 3};
    cfg.family.group_height = 2;
    cfg.polynomial = "x1 + x2";
    cfg.variables = 2;
    cfg.sweep = {4, 6, 8};
    cfg.seed = 99;

    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path();
    std::string contents[2];
    for (int pass = 0; pass < 2; pass++) {
        fs::path out = dir / ("acceptance_sweep_" + std::to_string(pass) + ".csv");
        cfg.csv_path = out.string();
        fewprod::write_experiment_outputs(cfg, fewprod::run_experiment(cfg));
        std::ifstream in(out, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        contents[pass] = buf.str();
        fs::remove(out);
    }
    if (contents[0].empty() || contents[0] != contents[1])
        return {false, "CSV output differs between runs"};
    std::ostringstream msg;
    msg << "two runs, identical " << contents[0].size() << "-byte CSV";
    return {true, msg.str()};
}

}  // namespace

int main() {
    run(1, "degeneracy verdicts + decomposition round-trip", degeneracy_biconditional);
    run(2, "geometric-set image collapse", geometric_collapse);
    run(3, "zero-count ceiling", zero_count_ceiling);
    run(4, "iterated sumset growth ceiling", iterated_growth_ceiling);
    run(5, "rank vs doubling bounds", rank_vs_doubling);
    run(6, "vanishing-subsum classifier", subsum_classifier);
    run(7, "collision energy + image lower bound", energy_and_cauchy_schwarz);
    run(8, "shared-zero energy concentration", shared_zero_energy);
    run(9, "unit-equation enumeration", unit_equation_agreement);
    run(10, "power-product system solver", monomial_system_agreement);
    run(11, "sweep CSV determinism", sweep_determinism);
    return failures == 0 ? 0 : 1;
}
