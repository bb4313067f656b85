#ifndef FEWPROD_GOOD_SET_HPP
#define FEWPROD_GOOD_SET_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fewprod/errors.hpp"
#include "fewprod/ground_set.hpp"
#include "fewprod/linalg.hpp"
#include "fewprod/poly.hpp"

namespace fewprod {

// A tuple is bad when some nonempty subset of F's term values sums to zero
// at that point (the full sum included). Decided by meet-in-the-middle over
// the term values; coordinates must be nonzero.
bool is_bad_tuple(const SparsePoly& f, std::span<const Rational> point);

// Classification of A^n into bad tuples and good tuples with a value
// histogram over the good part only.
struct GoodSetReport {
    std::uint64_t bad_count = 0;
    mpz_class bad_bound;               // (2^t − 1) · d · |A|^{n−1}, t = #terms
    RepCountMap rep_counts;            // good tuples only; never has key 0
    std::uint64_t sup_rep = 0;         // max histogram count (0 when empty)
    mpz_class restricted_energy;       // Σ counts²
};

GoodSetReport good_set_report(const SparsePoly& f, const GroundSet& a,
                              const Budget& budget = default_budget());

// One reference threshold for the envelope comparison rows.
struct ReferenceCurve {
    std::string label;
    Rational threshold;
};

struct CurveVerdict {
    std::string label;
    Rational threshold;
    bool within = false;  // sup_rep ≤ threshold
};

// Good-set counts bundled with the set's multiplicative statistics and
// verdict rows against configured thresholds. No hard assertion is made —
// the rows are data. F must be non-degenerate.
struct EnvelopeReport {
    GoodSetReport good;
    Rational mult_doubling;     // K = |A·A| / |A|
    std::size_t rank = 0;       // free rank of ⟨A⟩
    std::vector<CurveVerdict> curves;
};

EnvelopeReport envelope_report(const SparsePoly& f, const GroundSet& a,
                               const std::vector<ReferenceCurve>& curves = {},
                               const Budget& budget = default_budget());

// System a^{v_i} = t_i for a basis v₁,…,vₙ of ℚ^n and nonzero targets.
struct MonomialSystem {
    std::vector<ExponentVector> basis;
    std::vector<Rational> target;
};

// Whether ∏ point_j^{z_j} = t holds exactly over the reals, decided through
// prime-exponent arithmetic — fractional powers are never evaluated. A
// negative base under an even-denominator exponent has no real value, so the
// relation counts as not holding.
bool monomial_relation_holds(std::span<const Rational> point, const ExponentVector& z,
                             const Rational& t);

// All points of A^n solving the system, in lexicographic order: inverts the
// exponent matrix, extracts exact rational roots per coordinate, and verifies
// every candidate by substitution. Equals brute-force filtering of A^n.
std::vector<std::vector<Rational>> solve_monomial_system(const MonomialSystem& sys,
                                                         const GroundSet& a);

}  // namespace fewprod

#endif
