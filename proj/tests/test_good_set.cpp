#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <vector>

#include "fewprod/generators.hpp"
#include "fewprod/good_set.hpp"
#include "fewprod/poly.hpp"
#include "fewprod/set_arith.hpp"
#include "oracles.hpp"

using fewprod::ExponentVector;
using fewprod::GroundSet;
using fewprod::MonomialSystem;
using fewprod::Rational;
using fewprod::SparsePoly;
using fewprod::SplitMix64;

namespace {

ExponentVector ev(std::vector<long> entries) {
    std::vector<Rational> r;
    for (long x : entries) r.emplace_back(x);
    return ExponentVector(r);
}

std::vector<Rational> pt(std::vector<long> xs) {
    std::vector<Rational> r;
    for (long x : xs) r.emplace_back(x);
    return r;
}

}  // namespace

TEST_CASE("bad tuples are those with a vanishing subsum of term values") {
    SparsePoly f = fewprod::poly_parse("x1 + x2", 2);
    CHECK(fewprod::is_bad_tuple(f, pt({1, -1})));
    CHECK(!fewprod::is_bad_tuple(f, pt({1, 2})));

    SparsePoly g = fewprod::poly_parse("x1 - x2 + 1", 2);
    CHECK(fewprod::is_bad_tuple(g, pt({1, 1})));   // x1 − x2 cancels
    CHECK(fewprod::is_bad_tuple(g, pt({3, 4})));   // full sum is 0
    CHECK(!fewprod::is_bad_tuple(g, pt({1, 3})));

    // a lone constant term never vanishes by itself
    CHECK(!fewprod::is_bad_tuple(fewprod::poly_parse("x1 + 5", 1), pt({2})));
}

TEST_CASE("meet-in-the-middle subsum detection matches the direct power-set scan") {
    SplitMix64 rng(501);
    for (int trial = 0; trial < 300; trial++) {
        std::size_t n = 1 + rng.next_below(3);
        SparsePoly f = oracle::rand_poly(rng, n, 2, 5, 4);
        std::vector<Rational> point;
        for (std::size_t i = 0; i < n; i++) point.push_back(oracle::rand_rational(rng, 3, true));
        CHECK(fewprod::is_bad_tuple(f, point) == oracle::is_bad_direct(f, point));
    }
}

TEST_CASE("good set report on worked instances") {
    fewprod::GoodSetReport rep =
        fewprod::good_set_report(fewprod::poly_parse("x1 + x2", 2), GroundSet::parse("1,2"));
    CHECK(rep.bad_count == 0);
    CHECK(rep.rep_counts.counts ==
          std::map<Rational, std::uint64_t>{{Rational(2), 1}, {Rational(3), 2}, {Rational(4), 1}});
    CHECK(rep.sup_rep == 2);
    CHECK(rep.restricted_energy == 6);

    fewprod::GoodSetReport signs =
        fewprod::good_set_report(fewprod::poly_parse("x1 + x2", 2), GroundSet::parse("1,-1"));
    CHECK(signs.bad_count == 2);  // (1,−1) and (−1,1)
    CHECK(signs.rep_counts.counts.count(Rational(0)) == 0);
    CHECK(signs.rep_counts.counts ==
          std::map<Rational, std::uint64_t>{{Rational(-2), 1}, {Rational(2), 1}});

    CHECK_THROWS_AS(
        fewprod::good_set_report(fewprod::poly_parse("x1", 1), GroundSet::parse("0,1", fewprod::allow_zero)),
        std::invalid_argument);

    fewprod::Budget tiny;
    tiny.max_tuples = 8;
    CHECK_THROWS_AS(
        fewprod::good_set_report(fewprod::poly_parse("x1 + x2", 2), GroundSet::parse("1,2,3"), tiny),
        fewprod::BudgetExceeded);
}

TEST_CASE("good set report invariants on random inputs") {
    SplitMix64 rng(502);
    for (int trial = 0; trial < 60; trial++) {
        std::size_t n = 1 + rng.next_below(3);
        SparsePoly f = oracle::rand_poly(rng, n, 2, 4, 5);
        GroundSet a = oracle::rand_set(rng, 1 + rng.next_below(5), 7, true);
        fewprod::GoodSetReport rep = fewprod::good_set_report(f, a);

        CHECK(mpz_class(rep.bad_count) <= rep.bad_bound);
        CHECK(rep.rep_counts.counts.count(Rational(0)) == 0);

        mpz_class dom = 1;
        for (std::size_t i = 0; i < n; i++) dom *= static_cast<long>(a.size());
        std::uint64_t good_total = 0;
        mpz_class energy = 0;
        std::uint64_t sup = 0;
        for (const auto& [value, count] : rep.rep_counts.counts) {
            good_total += count;
            energy += mpz_class(count) * mpz_class(count);
            sup = std::max(sup, count);
        }
        CHECK(mpz_class(good_total) + mpz_class(rep.bad_count) == dom);
        CHECK(rep.restricted_energy == energy);
        CHECK(rep.sup_rep == sup);
        CHECK(rep.rep_counts.domain_size == good_total);

        // the bad-count bound recomputed from first principles
        mpz_class slab = 1;
        for (std::size_t i = 0; i + 1 < n; i++) slab *= static_cast<long>(a.size());
        mpz_class subsets = (mpz_class(1) << f.term_count()) - 1;
        CHECK(rep.bad_bound == subsets * f.total_degree() * slab);
    }
}

TEST_CASE("enlarging the ground set never shrinks the bad tuple count") {
    SplitMix64 rng(503);
    for (int trial = 0; trial < 30; trial++) {
        std::size_t n = 1 + rng.next_below(2);
        SparsePoly f = oracle::rand_poly(rng, n, 2, 4, 5);
        GroundSet small = oracle::rand_set(rng, 2 + rng.next_below(3), 6, true);
        std::vector<Rational> widened(small.begin(), small.end());
        while (true) {
            Rational extra = oracle::rand_rational(rng, 9, true);
            if (!small.contains(extra)) {
                widened.push_back(extra);
                break;
            }
        }
        GroundSet big(widened);

        // count bad tuples of the small domain directly for the comparison
        std::uint64_t small_bad = fewprod::good_set_report(f, small).bad_count;
        std::uint64_t big_bad = fewprod::good_set_report(f, big).bad_count;
        CHECK(big_bad >= small_bad);
    }
}

TEST_CASE("envelope report bundles doubling, rank, and curve verdicts") {
    GroundSet a = GroundSet::parse("2,4,8,16");
    std::vector<fewprod::ReferenceCurve> curves{{"unit", Rational(1)}, {"linear", Rational(16)}};
    fewprod::EnvelopeReport env =
        fewprod::envelope_report(fewprod::poly_parse("x1 + x2", 2), a, curves);
    CHECK(env.mult_doubling == Rational(7, 4));
    CHECK(env.rank == 1);
    CHECK(env.good.sup_rep == 2);
    REQUIRE(env.curves.size() == 2);
    CHECK(env.curves[0].label == "unit");
    CHECK(!env.curves[0].within);   // 2 > 1
    CHECK(env.curves[1].within);    // 2 ≤ 16

    fewprod::EnvelopeReport lone =
        fewprod::envelope_report(fewprod::poly_parse("x1 + x2", 2), GroundSet::parse("3"));
    CHECK(lone.good.sup_rep == 1);

    CHECK_THROWS_AS(
        fewprod::envelope_report(fewprod::poly_parse("x1*x2", 2), a),
        std::invalid_argument);  // degenerate input refused
}

TEST_CASE("monomial relation decision handles signs and fractional exponents") {
    // 4^{1/2} = 2 holds; (−4)^{1/2} has no real value
    CHECK(fewprod::monomial_relation_holds(pt({4}), ExponentVector({Rational(1, 2)}), Rational(2)));
    CHECK(!fewprod::monomial_relation_holds(pt({-4}), ExponentVector({Rational(1, 2)}), Rational(2)));
    // (−8)^{1/3} = −2 via the odd-denominator sign rule
    CHECK(fewprod::monomial_relation_holds(pt({-8}), ExponentVector({Rational(1, 3)}), Rational(-2)));
    CHECK(fewprod::monomial_relation_holds(pt({2, 4}), ev({1, 1}), Rational(8)));
    CHECK(!fewprod::monomial_relation_holds(pt({2, 4}), ev({1, 1}), Rational(9)));
    CHECK(fewprod::monomial_relation_holds(pt({2, 3}), ev({-1, 1}), Rational(3, 2)));
}

TEST_CASE("monomial systems on worked instances") {
    // identity basis: the unique solution is the target itself when it lies in A^n
    MonomialSystem ident;
    ident.basis = {ev({1, 0}), ev({0, 1})};
    ident.target = pt({2, 4});
    GroundSet a = GroundSet::parse("2,4");
    auto sols = fewprod::solve_monomial_system(ident, a);
    REQUIRE(sols.size() == 1);
    CHECK(sols[0] == pt({2, 4}));

    ident.target = pt({2, 3});  // 3 ∉ A
    CHECK(fewprod::solve_monomial_system(ident, a).empty());

    MonomialSystem prod_ratio;
    prod_ratio.basis = {ev({1, 1}), ev({1, -1})};
    prod_ratio.target = pt({8, 2});
    auto pr = fewprod::solve_monomial_system(prod_ratio, a);
    REQUIRE(pr.size() == 1);
    CHECK(pr[0] == pt({4, 2}));

    prod_ratio.target = pt({8, 3});
    CHECK(fewprod::solve_monomial_system(prod_ratio, a).empty());

    MonomialSystem singular;
    singular.basis = {ev({1, 1}), ev({2, 2})};
    singular.target = pt({1, 1});
    CHECK_THROWS_AS(fewprod::solve_monomial_system(singular, a), std::invalid_argument);
}

TEST_CASE("monomial solver requires real roots of the right sign") {
    // a₁a₂ = 16, a₁/a₂ = 4 → candidate a₁ = ±8, a₂ = ±2; only (+8, +2) is
    // consistent with positive targets, and 8 ∉ A here
    MonomialSystem sys;
    sys.basis = {ev({1, 1}), ev({1, -1})};
    sys.target = pt({16, 4});
    CHECK(fewprod::solve_monomial_system(sys, GroundSet::parse("2,4")).empty());

    auto found = fewprod::solve_monomial_system(sys, GroundSet::parse("2,8"));
    REQUIRE(found.size() == 1);
    CHECK(found[0] == pt({8, 2}));

    // a₁² = t₁·t₂ = −16 < 0: the even-root equation has no real solution
    sys.target = pt({-8, 2});
    CHECK(fewprod::solve_monomial_system(sys, GroundSet::parse("-4,-2,2,4")).empty());

    // with t₁·t₂ = 16 the candidate roots ±4, ±2 survive and verification
    // keeps exactly the sign-consistent pairs
    sys.target = pt({-8, -2});
    auto mixed = fewprod::solve_monomial_system(sys, GroundSet::parse("-4,-2,2,4"));
    REQUIRE(mixed.size() == 2);
    CHECK(mixed[0] == pt({-4, 2}));
    CHECK(mixed[1] == pt({4, -2}));

    // but a genuinely signed solution survives: a₁ = −4, a₂ = 2
    MonomialSystem signed_sys;
    signed_sys.basis = {ev({1, 0}), ev({1, -1})};
    signed_sys.target = pt({-4, -2});
    auto s = fewprod::solve_monomial_system(signed_sys, GroundSet::parse("-4,-2,2,4"));
    REQUIRE(s.size() == 1);
    CHECK(s[0] == pt({-4, 2}));
}

TEST_CASE("monomial solver agrees with brute force on random systems") {
    SplitMix64 rng(504);
    int done = 0;
    std::size_t observed_max = 0;
    while (done < 100) {
        std::size_t n = 1 + rng.next_below(3);
        MonomialSystem sys;
        for (std::size_t i = 0; i < n; i++) {
            std::vector<Rational> row;
            for (std::size_t j = 0; j < n; j++)
                row.push_back(Rational(rng.next_in(-2, 2)));
            sys.basis.emplace_back(row);
        }
        if (fewprod::qrank(sys.basis) != n) continue;

        GroundSet a = oracle::rand_set(rng, 1 + rng.next_below(6), 6, true);
        for (std::size_t i = 0; i < n; i++) {
            // half the targets are realizable by construction: evaluate the
            // basis at a random point of A^n
            sys.target.push_back(oracle::rand_rational(rng, 6, true));
        }
        if (rng.next_below(2)) {
            std::vector<Rational> probe;
            for (std::size_t i = 0; i < n; i++) probe.push_back(a[rng.next_below(a.size())]);
            for (std::size_t i = 0; i < n; i++) {
                Rational t(1);
                for (std::size_t j = 0; j < n; j++) {
                    Rational e = sys.basis[i][j];
                    t = t * probe[j].pow(e.num().get_si());
                }
                sys.target[i] = t;
            }
        }

        auto got = fewprod::solve_monomial_system(sys, a);
        auto want = oracle::monomial_direct(sys, a);
        CHECK(got == want);
        observed_max = std::max(observed_max, got.size());
        done++;
    }
    // record-keeping assertion: the solution count stayed desk-scale bounded
    CHECK(observed_max <= 8);
}
