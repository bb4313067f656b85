#ifndef FEWPROD_MULT_GROUP_HPP
#define FEWPROD_MULT_GROUP_HPP

#include <cstdint>
#include <vector>

#include "fewprod/errors.hpp"
#include "fewprod/factorize.hpp"
#include "fewprod/ground_set.hpp"
#include "fewprod/rational.hpp"

namespace fewprod {

// Rank of the free part of the multiplicative group generated by A ⊆ ℚ^×:
// the lattice rank of the prime-exponent vectors. Signs are ℤ/2 torsion and
// do not count.
std::size_t mult_rank(const GroundSet& a);

struct RankDoublingReport {
    std::size_t rank = 0;            // mult_rank(a⁻¹·A), a = min A
    Rational doubling;               // K = |A·A| / |A|
    bool positive_normalized = false;  // a⁻¹·A ⊆ ℚ_{>0}
    bool elementary_ok = false;      // r ≤ 2K (vacuous unless positive_normalized)
    bool lemma_ok = false;           // r ≤ 16K, always expected to hold
};

// Normalizes A by its minimum element and compares the resulting free rank
// against the two doubling bounds. Needs |A| ≥ 2.
RankDoublingReport rank_doubling_check(const GroundSet& a);

// (8l)^{4l⁴(l+lr+1)} exactly; with nonzero_target set, r is replaced by r+1
// (equivalently, an extra factor (8l)^{4l⁵}).
mpz_class subspace_bound(std::uint64_t l, std::uint64_t r, bool nonzero_target);

// c₁z₁ + … + c_l z_l = m with each z_i drawn from the group generated by
// `generators` (and −1, when present among them), exponent box |e| ≤ height_cap.
struct UnitEquation {
    std::vector<Rational> coefficients;  // all nonzero
    Rational target;                     // m, must be nonzero to solve
    GroundSet generators;                // free generators; −1 adjoins the sign
    std::uint64_t height_cap = 1;        // H
};

struct UnitEquationSolution {
    std::vector<std::vector<Rational>> solutions;  // lexicographic order
    std::size_t free_rank = 0;                     // independent generators
    std::uint64_t box_size = 0;                    // candidate values per coordinate
    mpz_class theorem_bound;                       // subspace_bound(l, free_rank+1, true)
};

// Exhaustive within the exponent box: keeps tuples that hit the target with
// no vanishing subsum over a nonempty proper subset of coordinates. The box
// count is a lower-bound witness for the global count, which the returned
// theorem bound dominates.
UnitEquationSolution solve_unit_equation(const UnitEquation& eq,
                                         const Budget& budget = default_budget());

// Sorted list of the candidate z values of an instance's exponent box.
// Validates the instance (nonzero coefficients, independent generators).
std::vector<Rational> unit_equation_box(const UnitEquation& eq,
                                        const Budget& budget = default_budget());

}  // namespace fewprod

#endif
