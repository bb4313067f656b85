#ifndef FEWPROD_FACTORIZE_HPP
#define FEWPROD_FACTORIZE_HPP

#include <map>

#include "fewprod/rational.hpp"

namespace fewprod {

// Signed prime factorization of a nonzero rational: sign · ∏ p^{e_p} with all
// e_p nonzero (negative exponents carry the denominator part).
struct FactorVector {
    int sign = 1;
    std::map<mpz_class, mpz_class> exponents;

    Rational reconstruct() const;

    friend bool operator==(const FactorVector& a, const FactorVector& b) {
        return a.sign == b.sign && a.exponents == b.exponents;
    }
};

// Exact factorization: trial division over primes up to 10⁶, then Pollard rho
// for the remaining cofactor. Throws FactorizationError (with the stuck
// cofactor) rather than returning a partial answer.
FactorVector factorize(const Rational& q);

// Factorization of a positive integer, exposed for reuse and direct testing.
std::map<mpz_class, mpz_class> factorize_integer(const mpz_class& n);

}  // namespace fewprod

#endif
