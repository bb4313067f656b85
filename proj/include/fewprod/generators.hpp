#ifndef FEWPROD_GENERATORS_HPP
#define FEWPROD_GENERATORS_HPP

#include <cstdint>
#include <vector>

#include "fewprod/errors.hpp"
#include "fewprod/ground_set.hpp"
#include "fewprod/poly.hpp"
#include "fewprod/rational.hpp"

namespace fewprod {

// Geometric progression {q, q², …, q^N}. Ratio must avoid 0, ±1 so the
// elements are pairwise distinct.
GroundSet gen_gp(const Rational& q, std::uint64_t n);

// Arithmetic progression {a, a+d, …, a+(N−1)d}, nonzero step. May contain 0.
GroundSet gen_ap(const Rational& a, const Rational& d, std::uint64_t n);

// N distinct values sampled from the exponent box {∏ p^e : |e| ≤ H} over the
// given distinct primes, by a seeded partial shuffle of the sorted box. The
// free rank of the result is at most the number of primes.
GroundSet gen_group_sample(const std::vector<long>& primes, std::uint64_t height,
                           std::uint64_t n, std::uint64_t seed,
                           const Budget& budget = default_budget());

// Polynomial of the shape f₀(x₁,x₂) + x₃f₁(x₁,x₂) + … + xₙf_{n−2}(x₁,x₂)
// whose inner parts all vanish at a shared point (a,b), so the whole fiber
// {a}×{b}×Aⁿ⁻² maps to 0 and the collision energy over any A ⊇ {a,b} is at
// least |A|^{2n−4}. The parts used are f_i = x₁x₂ − b·x₁ + (i−1)(x₁x₂ − a·x₂),
// one valid choice among many: each is non-monomial, involves both variables,
// and vanishes at (a,b).
struct SharedZeroFamily {
    SparsePoly f;          // the assembled polynomial in n variables
    Rational zero_x1;      // a
    Rational zero_x2;      // b
};

SharedZeroFamily gen_shared_zero_family(std::size_t n, const Rational& a, const Rational& b);

// Exact identity check F(a, b, x₃, …, xₙ) ≡ 0 via symbolic substitution.
bool shared_zero_vanishes(const SharedZeroFamily& fam);

}  // namespace fewprod

#endif
