#include "fewprod/generators.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "fewprod/rng.hpp"
#include "fewprod/tuples.hpp"

namespace fewprod {

GroundSet gen_gp(const Rational& q, std::uint64_t n) {
    if (q.is_zero() || q == Rational(1) || q == Rational(-1))
        throw std::invalid_argument("gen_gp: ratio must avoid 0, 1, -1");
    if (n == 0) throw std::invalid_argument("gen_gp: N must be >= 1");
    std::vector<Rational> out;
    out.reserve(n);
    Rational cur = q;
    for (std::uint64_t i = 0; i < n; i++) {
        out.push_back(cur);
        cur = cur * q;
    }
    return GroundSet(std::move(out));
}

GroundSet gen_ap(const Rational& a, const Rational& d, std::uint64_t n) {
    if (d.is_zero()) throw std::invalid_argument("gen_ap: step must be nonzero");
    if (n == 0) throw std::invalid_argument("gen_ap: N must be >= 1");
    std::vector<Rational> out;
    out.reserve(n);
    Rational cur = a;
    for (std::uint64_t i = 0; i < n; i++) {
        out.push_back(cur);
        cur = cur + d;
    }
    return GroundSet(std::move(out), allow_zero);
}

GroundSet gen_group_sample(const std::vector<long>& primes, std::uint64_t height,
                           std::uint64_t n, std::uint64_t seed, const Budget& budget) {
    std::set<long> distinct(primes.begin(), primes.end());
    if (distinct.size() != primes.size())
        throw std::invalid_argument("gen_group_sample: primes must be distinct");
    for (long p : primes) {
        mpz_class pz(p);
        if (p < 2 || !mpz_probab_prime_p(pz.get_mpz_t(), 40))
            throw std::invalid_argument("gen_group_sample: " + std::to_string(p) +
                                        " is not prime");
    }
    if (n == 0) throw std::invalid_argument("gen_group_sample: N must be >= 1");

    const std::uint64_t side = 2 * height + 1;
    std::uint64_t box_count = checked_tuple_count(side, primes.size(), budget.max_set_elements);
    if (box_count < n)
        throw std::invalid_argument("gen_group_sample: sample space " +
                                    std::to_string(box_count) + " smaller than N");

    std::vector<Rational> box;
    box.reserve(box_count);
    for_each_tuple(side, primes.size(), [&](const std::vector<std::size_t>& idx) {
        Rational v(1);
        for (std::size_t i = 0; i < primes.size(); i++) {
            long e = static_cast<long>(idx[i]) - static_cast<long>(height);
            if (e != 0) v = v * Rational(primes[i]).pow(e);
        }
        box.push_back(std::move(v));
    });
    std::sort(box.begin(), box.end());

    // partial Fisher-Yates over the sorted box: the first N slots end up
    // holding the sample, fully determined by the seed
    SplitMix64 rng(seed);
    for (std::uint64_t i = 0; i < n; i++) {
        std::uint64_t j = i + rng.next_below(box_count - i);
        std::swap(box[i], box[j]);
    }
    box.resize(n);
    return GroundSet(std::move(box));
}

SharedZeroFamily gen_shared_zero_family(std::size_t n, const Rational& a, const Rational& b) {
    if (n < 5) throw std::invalid_argument("shared-zero family needs n >= 5");
    if (a.is_zero() || b.is_zero())
        throw std::invalid_argument("shared-zero family needs a nonzero zero point");

    // part(i) = x1*x2 - b*x1 + (i-1)*(x1*x2 - a*x2), as an n-variable polynomial
    auto part = [&](long i) {
        SparsePoly x1 = SparsePoly::variable(n, 0);
        SparsePoly x2 = SparsePoly::variable(n, 1);
        SparsePoly x1x2 = x1 * x2;
        SparsePoly base = x1x2 - SparsePoly::constant(n, b) * x1;
        SparsePoly tilt = x1x2 - SparsePoly::constant(n, a) * x2;
        return base + SparsePoly::constant(n, Rational(i - 1)) * tilt;
    };

    SparsePoly f = part(0);
    for (std::size_t v = 2; v < n; v++)
        f = f + SparsePoly::variable(n, v) * part(static_cast<long>(v) - 1);

    SharedZeroFamily fam{std::move(f), a, b};
    if (!shared_zero_vanishes(fam))
        throw InvariantViolation("shared-zero family does not vanish on its fiber");
    return fam;
}

bool shared_zero_vanishes(const SharedZeroFamily& fam) {
    return substitute(substitute(fam.f, 0, fam.zero_x1), 1, fam.zero_x2).is_zero();
}

}  // namespace fewprod
