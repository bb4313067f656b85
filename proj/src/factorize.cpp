#include "fewprod/factorize.hpp"

#include <stdexcept>

#include "fewprod/errors.hpp"

namespace fewprod {

namespace {

constexpr unsigned long kTrialLimit = 1'000'000;

// Pollard rho, Brent's cycle variant. n must be composite and odd. Cycles
// through deterministic offsets, so results (and failures) are reproducible.
mpz_class rho_split(const mpz_class& n) {
    for (unsigned long c = 1; c <= 64; c++) {
        mpz_class x = 2, y = 2, d = 1;
        mpz_class saved_y = y;
        unsigned long power = 1, lam = 0;
        while (d == 1) {
            if (lam == power) {
                saved_y = y;
                power *= 2;
                lam = 0;
            }
            y = (y * y + c) % n;
            lam++;
            mpz_class diff = saved_y - y;
            if (diff < 0) diff = -diff;
            if (diff == 0) break;  // cycle closed without a factor; bump c
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            if (lam > 10'000'000) break;
        }
        if (d != 1 && d != n) return d;
    }
    throw FactorizationError("could not split composite cofactor", n.get_str());
}

void factor_into(mpz_class n, std::map<mpz_class, mpz_class>& out) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 40)) {
        out[n] += 1;
        return;
    }
    mpz_class d = rho_split(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

std::map<mpz_class, mpz_class> factorize_integer(const mpz_class& n) {
    if (n <= 0) throw std::invalid_argument("factorize_integer needs a positive integer");
    std::map<mpz_class, mpz_class> out;
    mpz_class rest = n;
    for (unsigned long p = 2; p <= kTrialLimit && rest > 1; p += (p == 2 ? 1 : 2)) {
        // stop early once p² passes the remaining cofactor
        if (mpz_class(p) * p > rest) break;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            out[mpz_class(static_cast<long>(p))] += 1;
            rest /= p;
        }
    }
    if (rest > 1) {
        if (mpz_probab_prime_p(rest.get_mpz_t(), 40))
            out[rest] += 1;
        else
            factor_into(rest, out);
    }
    return out;
}

FactorVector factorize(const Rational& q) {
    if (q.is_zero()) throw std::invalid_argument("factorize(0) is undefined");
    FactorVector fv;
    fv.sign = q.is_negative() ? -1 : 1;
    mpz_class num = abs(q.num());
    for (const auto& [p, e] : factorize_integer(num)) fv.exponents[p] += e;
    for (const auto& [p, e] : factorize_integer(q.den())) fv.exponents[p] -= e;
    // numerator and denominator are coprime, so no entry can cancel to zero;
    // drop defensively anyway
    for (auto it = fv.exponents.begin(); it != fv.exponents.end();)
        it = (it->second == 0) ? fv.exponents.erase(it) : std::next(it);
    return fv;
}

Rational FactorVector::reconstruct() const {
    mpz_class num = sign, den = 1;
    for (const auto& [p, e] : exponents) {
        mpz_class pw;
        mpz_class mag = abs(e);
        if (!mag.fits_ulong_p()) throw std::overflow_error("factor exponent too large");
        mpz_pow_ui(pw.get_mpz_t(), p.get_mpz_t(), mag.get_ui());
        if (e > 0)
            num *= pw;
        else
            den *= pw;
    }
    return Rational(num, den);
}

}  // namespace fewprod
