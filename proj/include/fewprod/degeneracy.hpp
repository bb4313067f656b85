#ifndef FEWPROD_DEGENERACY_HPP
#define FEWPROD_DEGENERACY_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "fewprod/errors.hpp"
#include "fewprod/ground_set.hpp"
#include "fewprod/linalg.hpp"
#include "fewprod/poly.hpp"

namespace fewprod {

// Witness that F collapses to an outer polynomial in n−1 power products:
// F = P(x^{v₁}, …, x^{v_{n−1}}) as a formal identity of exponent vectors.
struct Decomposition {
    std::vector<ExponentVector> vectors;   // v_j ∈ ℚ^n, delta pattern on the pivots
    SparsePoly outer;                      // P, a polynomial in n−1 variables
    std::vector<std::size_t> permutation;  // pivot coordinates first, the rest after
};

// Per-direction factor of the degenerate image bound: v_j with denominators
// cleared by their lcm M_j, the resulting integer-exponent product set Z_j,
// and the doubling-power cardinality bound it is checked against.
struct ImageBoundFactor {
    mpz_class denominator_lcm;                // M_j
    std::vector<mpz_class> cleared_exponents; // r_i = M_j · v_j[i]
    std::uint64_t z_size = 0;                 // |Z_j|, Z_j = {∏ a_i^{r_i}}
    Rational doubling_bound;                  // K^{Σ|r_i|} · |A|, K = |A·A|/|A|
    bool doubling_holds = false;
};

struct ImageBoundReport {
    std::uint64_t measured = 0;            // |F(A,…,A)|
    std::vector<ImageBoundFactor> factors;
    mpz_class product_bound;               // ∏_j M_j · |Z_j|
    bool holds = false;                    // measured ≤ product_bound
};

// Exponent support of F as vectors in ℚ^n, in term order. F must be nonzero.
std::vector<ExponentVector> support(const SparsePoly& f);

// Dimension over ℚ of the span of the support. Between 0 and min(n, #terms).
std::size_t support_rank(const SparsePoly& f);

// True exactly when support_rank(F) ≤ n−1, i.e. the support fits in a proper
// subspace and the decomposition below exists.
bool is_degenerate(const SparsePoly& f);

// Constructive witness: extends the support span to dimension n−1 with
// standard basis vectors (lowest coordinates first), reduces to the delta
// pattern basis, and reads P's exponents off the pivot coordinates. Result is
// verified by formal re-expansion before returning. Throws on non-degenerate
// input.
Decomposition decompose(const SparsePoly& f);

// Formal expansion of P(x^{v₁},…,x^{v_{n−1}}): a map from combined exponent
// vector Σ e_j·v_j to coefficient, with exact cancellation. Never evaluates
// fractional powers.
std::map<std::vector<Rational>, Rational> expand_formal(
    const SparsePoly& outer, const std::vector<ExponentVector>& vectors);

bool verify_decomposition(const SparsePoly& f, const Decomposition& d);

// Image-size certificate for degenerate F over a zero-free ground set.
ImageBoundReport degenerate_image_bound(const SparsePoly& f, const GroundSet& a,
                                        const Budget& budget = default_budget());

}  // namespace fewprod

#endif
