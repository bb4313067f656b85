#include "fewprod/good_set.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "fewprod/factorize.hpp"
#include "fewprod/mult_group.hpp"
#include "fewprod/set_arith.hpp"
#include "fewprod/degeneracy.hpp"
#include "fewprod/tuples.hpp"

namespace fewprod {

namespace {

// Does some nonempty subset of vals sum to zero? Meet-in-the-middle: all
// subset sums of the left half are sorted once, right-half subsets are
// scanned against them.
bool zero_subset_sum(const std::vector<Rational>& vals) {
    const std::size_t t = vals.size();
    const std::size_t left = t / 2;
    const std::size_t right = t - left;

    std::vector<Rational> left_sums;
    left_sums.reserve(1ull << left);
    bool zero_on_left = false;
    for (std::uint64_t mask = 0; mask < (1ull << left); mask++) {
        Rational s(0);
        for (std::size_t i = 0; i < left; i++)
            if (mask & (1ull << i)) s = s + vals[i];
        if (mask != 0 && s.is_zero()) zero_on_left = true;
        left_sums.push_back(std::move(s));
    }
    if (zero_on_left) return true;
    std::sort(left_sums.begin(), left_sums.end());

    for (std::uint64_t mask = 1; mask < (1ull << right); mask++) {
        Rational s(0);
        for (std::size_t i = 0; i < right; i++)
            if (mask & (1ull << i)) s = s + vals[left + i];
        if (s.is_zero()) return true;
        // a match must come from a nonempty left subset: the empty one sums
        // to 0 and −s ≠ 0 here
        if (std::binary_search(left_sums.begin(), left_sums.end(), -s)) return true;
    }
    return false;
}

void require_nonzero_point(std::span<const Rational> point) {
    for (const auto& x : point)
        if (x.is_zero()) throw std::invalid_argument("point coordinates must be nonzero");
}

}  // namespace

bool is_bad_tuple(const SparsePoly& f, std::span<const Rational> point) {
    if (point.size() != f.var_count()) throw std::invalid_argument("point length mismatch");
    require_nonzero_point(point);
    if (f.term_count() > 62)
        throw BudgetExceeded("subset-sum check over more than 62 terms");
    std::vector<Rational> vals;
    vals.reserve(f.term_count());
    for (const auto& [m, c] : f.terms()) {
        Rational v = c;
        for (std::size_t i = 0; i < point.size(); i++)
            if (m[i]) v = v * point[i].pow(m[i]);
        vals.push_back(std::move(v));
    }
    return zero_subset_sum(vals);
}

GoodSetReport good_set_report(const SparsePoly& f, const GroundSet& a, const Budget& budget) {
    if (f.is_zero()) throw std::invalid_argument("good_set_report needs a nonzero polynomial");
    if (a.empty() || a.contains_zero())
        throw std::invalid_argument("good_set_report needs a nonempty zero-free set");
    if (f.term_count() > 62)
        throw BudgetExceeded("subset-sum check over more than 62 terms");

    const std::size_t n = f.var_count();
    checked_tuple_count(a.size(), n, budget.max_tuples);

    std::uint32_t max_e = 0;
    for (const auto& [m, c] : f.terms())
        for (std::uint32_t e : m) max_e = std::max(max_e, e);
    std::vector<std::vector<Rational>> pow_table(a.size());
    for (std::size_t i = 0; i < a.size(); i++) {
        pow_table[i].resize(max_e + 1);
        pow_table[i][0] = Rational(1);
        for (std::uint32_t e = 1; e <= max_e; e++) pow_table[i][e] = pow_table[i][e - 1] * a[i];
    }

    GoodSetReport rep;
    std::vector<Rational> term_vals(f.term_count());
    for_each_tuple(a.size(), n, [&](const std::vector<std::size_t>& idx) {
        std::size_t k = 0;
        Rational total(0);
        for (const auto& [m, c] : f.terms()) {
            Rational v = c;
            for (std::size_t i = 0; i < n; i++)
                if (m[i]) v = v * pow_table[idx[i]][m[i]];
            total = total + v;
            term_vals[k++] = std::move(v);
        }
        if (zero_subset_sum(term_vals)) {
            rep.bad_count++;
        } else {
            rep.rep_counts.counts[total]++;
            rep.rep_counts.domain_size++;
        }
    });

    // the full-term subset is among the excluded subsums, so no good tuple
    // evaluates to 0
    if (rep.rep_counts.counts.count(Rational(0)))
        throw InvariantViolation("good tuple with value 0");

    mpz_class subsets;
    mpz_ui_pow_ui(subsets.get_mpz_t(), 2, static_cast<unsigned long>(f.term_count()));
    mpz_class domain_side;
    mpz_ui_pow_ui(domain_side.get_mpz_t(), static_cast<unsigned long>(a.size()),
                  static_cast<unsigned long>(n == 0 ? 0 : n - 1));
    rep.bad_bound = (subsets - 1) * f.total_degree() * domain_side;

    rep.restricted_energy = 0;
    for (const auto& [v, c] : rep.rep_counts.counts) {
        rep.sup_rep = std::max(rep.sup_rep, c);
        mpz_class cc(static_cast<unsigned long>(c));
        rep.restricted_energy += cc * cc;
    }
    return rep;
}

EnvelopeReport envelope_report(const SparsePoly& f, const GroundSet& a,
                               const std::vector<ReferenceCurve>& curves, const Budget& budget) {
    if (is_degenerate(f))
        throw std::invalid_argument("envelope_report needs a non-degenerate polynomial");
    EnvelopeReport rep{good_set_report(f, a, budget), set_stats(a).mult_doubling, mult_rank(a), {}};
    Rational sup(static_cast<long>(rep.good.sup_rep));
    for (const auto& c : curves)
        rep.curves.push_back({c.label, c.threshold, sup <= c.threshold});
    return rep;
}

bool monomial_relation_holds(std::span<const Rational> point, const ExponentVector& z,
                             const Rational& t) {
    if (point.size() != z.size()) throw std::invalid_argument("exponent length mismatch");
    if (t.is_zero()) throw std::invalid_argument("relation target must be nonzero");
    require_nonzero_point(point);

    // sign of ∏ point_j^{z_j} under the real-root convention: a negative base
    // needs an odd-denominator exponent, and contributes sign (−1)^numerator
    int sign = 1;
    for (std::size_t j = 0; j < point.size(); j++) {
        if (!point[j].is_negative()) continue;
        const Rational& e = z[j];
        if (mpz_even_p(e.den().get_mpz_t())) return false;  // no real value
        if (mpz_odd_p(e.num().get_mpz_t())) sign = -sign;
    }
    if (sign != t.sign()) return false;

    std::vector<FactorVector> fs;
    fs.reserve(point.size());
    std::map<mpz_class, Rational> combined;  // prime → Σ z_j · e_p(point_j)
    for (std::size_t j = 0; j < point.size(); j++) {
        fs.push_back(factorize(point[j]));
        for (const auto& [p, e] : fs.back().exponents)
            combined[p] = combined[p] + z[j] * Rational(e);
    }
    FactorVector ft = factorize(t);
    for (const auto& [p, e] : ft.exponents) combined[p] = combined[p] - Rational(e);
    return std::all_of(combined.begin(), combined.end(),
                       [](const auto& kv) { return kv.second.is_zero(); });
}

std::vector<std::vector<Rational>> solve_monomial_system(const MonomialSystem& sys,
                                                         const GroundSet& a) {
    const std::size_t n = sys.basis.size();
    if (n == 0) throw std::invalid_argument("empty system");
    if (sys.target.size() != n) throw std::invalid_argument("target length mismatch");
    for (const auto& t : sys.target)
        if (t.is_zero()) throw std::invalid_argument("targets must be nonzero");
    if (a.empty() || a.contains_zero())
        throw std::invalid_argument("solve_monomial_system needs a nonempty zero-free set");

    std::vector<std::vector<Rational>> m(n);
    for (std::size_t i = 0; i < n; i++) {
        if (sys.basis[i].size() != n) throw std::invalid_argument("basis vector length mismatch");
        m[i] = sys.basis[i].entries();
    }
    auto inv = invert(std::move(m));
    if (!inv) throw std::invalid_argument("basis is singular");

    // coordinate i satisfies a_i^{Q_i} = ∏_j t_j^{Q_i · α_{ij}} with Q_i the
    // lcm of the row's denominators; rational Q_i-th roots are extracted
    // exactly and anything irrational cannot lie in A
    std::vector<std::vector<Rational>> candidates(n);
    for (std::size_t i = 0; i < n; i++) {
        mpz_class q = 1;
        for (std::size_t j = 0; j < n; j++)
            mpz_lcm(q.get_mpz_t(), q.get_mpz_t(), (*inv)[i][j].den().get_mpz_t());
        if (!q.fits_ulong_p()) throw InvariantViolation("root index does not fit a machine word");
        unsigned long qi = q.get_ui();

        Rational w(1);
        for (std::size_t j = 0; j < n; j++) {
            Rational e = (*inv)[i][j] * Rational(q);
            if (!e.is_integer()) throw InvariantViolation("cleared exponent not integral");
            if (!e.num().fits_slong_p())
                throw InvariantViolation("cleared exponent does not fit a machine word");
            if (e.num() != 0) w = w * sys.target[j].pow(e.num().get_si());
        }

        if (qi % 2 == 0 && w.is_negative()) continue;  // no real root, no candidates
        mpz_class num_mag = abs(w.num());
        mpz_class rn, rd;
        bool exact_n = mpz_root(rn.get_mpz_t(), num_mag.get_mpz_t(), qi) != 0;
        bool exact_d = mpz_root(rd.get_mpz_t(), w.den().get_mpz_t(), qi) != 0;
        if (!exact_n || !exact_d) continue;
        Rational root(rn, rd);
        if (qi % 2 == 1) {
            if (w.is_negative()) root = -root;
            if (a.contains(root)) candidates[i].push_back(root);
        } else {
            if (a.contains(-root)) candidates[i].push_back(-root);
            if (a.contains(root) && !root.is_zero()) candidates[i].push_back(root);
        }
        std::sort(candidates[i].begin(), candidates[i].end());
    }

    std::vector<std::vector<Rational>> out;
    bool any_empty = std::any_of(candidates.begin(), candidates.end(),
                                 [](const auto& c) { return c.empty(); });
    if (any_empty) return out;

    std::vector<std::size_t> sizes(n);
    for (std::size_t i = 0; i < n; i++) sizes[i] = candidates[i].size();
    std::vector<std::size_t> idx(n, 0);
    while (true) {
        std::vector<Rational> point(n);
        for (std::size_t i = 0; i < n; i++) point[i] = candidates[i][idx[i]];
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; i++)
            ok = monomial_relation_holds(point, sys.basis[i], sys.target[i]);
        if (ok) out.push_back(std::move(point));
        std::size_t i = n;
        while (i > 0) {
            if (++idx[i - 1] < sizes[i - 1]) break;
            idx[i - 1] = 0;
            i--;
        }
        if (i == 0) break;
    }
    return out;
}

}  // namespace fewprod
