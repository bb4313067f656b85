#ifndef FEWPROD_EXPERIMENT_HPP
#define FEWPROD_EXPERIMENT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fewprod/errors.hpp"
#include "fewprod/ground_set.hpp"
#include "fewprod/rational.hpp"

namespace fewprod {

// Ground-set family: geometric ("gp"), arithmetic ("ap"), or seeded samples
// from a few-prime multiplicative box ("group").
struct FamilySpec {
    std::string name;
    Rational gp_ratio;
    Rational ap_start;
    Rational ap_step;
    std::vector<long> group_primes;
    std::uint64_t group_height = 0;
};

// Builds the family's set of size n and asserts its structural guarantee
// (gp: |A·A| = 2n−1; group: free rank ≤ #primes).
GroundSet build_family_set(const FamilySpec& family, std::uint64_t n, std::uint64_t row_seed,
                           const Budget& budget = default_budget());

struct ExperimentConfig {
    FamilySpec family;
    std::string polynomial;            // polynomial grammar text
    std::size_t variables = 0;
    std::vector<std::uint64_t> sweep;  // size parameter per row
    std::uint64_t seed = 0;            // row i draws from seed + i
    Budget budget = default_budget();
    std::string csv_path;              // outputs are optional
    std::string json_path;
};

struct ExperimentRow {
    std::uint64_t param = 0;
    std::string error;                 // nonempty when the row failed; other fields unset
    std::size_t set_size = 0;
    Rational add_doubling;
    Rational mult_doubling;
    std::size_t mult_rank = 0;
    std::uint64_t image_size = 0;
    mpz_class energy;
    std::uint64_t sup_rep = 0;
    std::uint64_t bad_count = 0;
    bool degenerate = false;
    mpz_class degen_bound;             // image-size certificate, degenerate rows only
    double elapsed_seconds = 0.0;      // informational; never serialized to CSV
};

// One row per sweep entry, in sweep order. Row-level failures (budget,
// invalid set) are recorded in `error` and the run continues. Identical
// config and seed give identical rows.
std::vector<ExperimentRow> run_experiment(const ExperimentConfig& cfg);

// The frozen CSV rendering: header plus one line per row, '\n' endings,
// exact rational strings, elapsed time excluded.
std::string experiment_csv(const std::string& family_name,
                           const std::vector<ExperimentRow>& rows);

// Writes cfg.csv_path / cfg.json_path when set.
void write_experiment_outputs(const ExperimentConfig& cfg,
                              const std::vector<ExperimentRow>& rows);

}  // namespace fewprod

#endif
