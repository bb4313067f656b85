#include "fewprod/mult_group.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "fewprod/linalg.hpp"
#include "fewprod/set_arith.hpp"
#include "fewprod/tuples.hpp"

namespace fewprod {

std::size_t mult_rank(const GroundSet& a) {
    if (a.empty()) throw std::invalid_argument("mult_rank of the empty set");
    if (a.contains_zero()) throw std::invalid_argument("mult_rank needs a zero-free set");

    std::vector<FactorVector> factored;
    factored.reserve(a.size());
    std::set<mpz_class> primes;
    for (const auto& x : a) {
        factored.push_back(factorize(x));
        for (const auto& [p, e] : factored.back().exponents) primes.insert(p);
    }
    std::vector<mpz_class> cols(primes.begin(), primes.end());

    std::vector<std::vector<mpz_class>> rows;
    rows.reserve(factored.size());
    for (const auto& fv : factored) {
        std::vector<mpz_class> row(cols.size(), 0);
        for (std::size_t j = 0; j < cols.size(); j++) {
            auto it = fv.exponents.find(cols[j]);
            if (it != fv.exponents.end()) row[j] = it->second;
        }
        rows.push_back(std::move(row));
    }
    return bareiss(std::move(rows), cols.size()).rank;
}

RankDoublingReport rank_doubling_check(const GroundSet& a) {
    if (a.size() < 2) throw std::invalid_argument("rank_doubling_check needs |A| >= 2");
    if (a.contains_zero()) throw std::invalid_argument("rank_doubling_check needs a zero-free set");

    const Rational& mn = a[0];  // elements are sorted ascending
    std::vector<Rational> scaled;
    scaled.reserve(a.size());
    for (const auto& x : a) scaled.push_back(x / mn);
    GroundSet norm(std::move(scaled));

    RankDoublingReport rep;
    rep.rank = mult_rank(norm);
    rep.doubling = set_stats(a).mult_doubling;
    rep.positive_normalized =
        std::all_of(norm.begin(), norm.end(), [](const Rational& x) { return x.is_positive(); });
    Rational r(static_cast<long>(rep.rank));
    rep.elementary_ok = !rep.positive_normalized || r <= Rational(2) * rep.doubling;
    rep.lemma_ok = r <= Rational(16) * rep.doubling;
    return rep;
}

mpz_class subspace_bound(std::uint64_t l, std::uint64_t r, bool nonzero_target) {
    if (l == 0) throw std::invalid_argument("subspace_bound needs l >= 1");
    mpz_class lz(static_cast<unsigned long>(l));
    mpz_class rz(static_cast<unsigned long>(nonzero_target ? r + 1 : r));
    mpz_class l4 = lz * lz * lz * lz;
    mpz_class exponent = 4 * l4 * (lz + lz * rz + 1);
    if (!exponent.fits_ulong_p() || exponent > 50'000'000)
        throw BudgetExceeded("subspace bound exponent too large to materialize");
    mpz_class base = 8 * lz;
    mpz_class out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent.get_ui());
    return out;
}

namespace {

// Splits −1 off the generator list, validates independence of the rest, and
// returns (free generators, sign adjoined).
std::pair<std::vector<Rational>, bool> split_generators(const UnitEquation& eq) {
    std::vector<Rational> gens;
    bool sign = false;
    for (const auto& g : eq.generators) {
        if (g == Rational(-1)) {
            sign = true;
            continue;
        }
        if (g == Rational(1)) throw std::invalid_argument("1 is not a valid generator");
        gens.push_back(g);
    }
    if (!gens.empty()) {
        GroundSet free_part{std::vector<Rational>(gens)};
        if (mult_rank(free_part) != gens.size())
            throw std::invalid_argument("generators are not multiplicatively independent");
    }
    return {std::move(gens), sign};
}

}  // namespace

std::vector<Rational> unit_equation_box(const UnitEquation& eq, const Budget& budget) {
    if (eq.coefficients.empty()) throw std::invalid_argument("unit equation needs l >= 1");
    for (const auto& c : eq.coefficients)
        if (c.is_zero()) throw std::invalid_argument("unit equation coefficients must be nonzero");

    auto [gens, sign] = split_generators(eq);
    const std::uint64_t h = eq.height_cap;
    const std::uint64_t side = 2 * h + 1;
    std::uint64_t per_coord =
        checked_tuple_count(side, gens.size(), budget.max_set_elements) * (sign ? 2 : 1);
    checked_tuple_count(per_coord, eq.coefficients.size(), budget.max_tuples);

    std::vector<Rational> values;
    values.reserve(per_coord);
    for_each_tuple(side, gens.size(), [&](const std::vector<std::size_t>& idx) {
        Rational v(1);
        for (std::size_t i = 0; i < gens.size(); i++) {
            long e = static_cast<long>(idx[i]) - static_cast<long>(h);
            if (e != 0) v = v * gens[i].pow(e);
        }
        values.push_back(v);
        if (sign) values.push_back(-v);
    });
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

UnitEquationSolution solve_unit_equation(const UnitEquation& eq, const Budget& budget) {
    if (eq.target.is_zero()) throw std::invalid_argument("unit equation target must be nonzero");
    std::vector<Rational> values = unit_equation_box(eq, budget);
    auto [gens, sign] = split_generators(eq);
    const std::size_t l = eq.coefficients.size();

    UnitEquationSolution out;
    out.free_rank = gens.size();
    out.box_size = values.size();
    out.theorem_bound = subspace_bound(l, out.free_rank + 1, /*nonzero_target=*/true);

    const Rational& cl = eq.coefficients[l - 1];
    // enumerate the first l−1 coordinates; the last is forced and looked up
    for_each_tuple(values.size(), l - 1, [&](const std::vector<std::size_t>& idx) {
        Rational partial(0);
        for (std::size_t i = 0; i + 1 < l; i++)
            partial = partial + eq.coefficients[i] * values[idx[i]];
        Rational zl = (eq.target - partial) / cl;
        if (!std::binary_search(values.begin(), values.end(), zl)) return;

        std::vector<Rational> z;
        z.reserve(l);
        for (std::size_t i = 0; i + 1 < l; i++) z.push_back(values[idx[i]]);
        z.push_back(zl);

        // reject any vanishing subsum over a nonempty proper coordinate subset
        for (std::uint64_t mask = 1; mask + 1 < (1ull << l); mask++) {
            Rational s(0);
            for (std::size_t i = 0; i < l; i++)
                if (mask & (1ull << i)) s = s + eq.coefficients[i] * z[i];
            if (s.is_zero()) return;
        }
        out.solutions.push_back(std::move(z));
    });
    return out;
}

}  // namespace fewprod
