#include "fewprod/degeneracy.hpp"

#include <algorithm>
#include <stdexcept>

#include "fewprod/set_arith.hpp"

namespace fewprod {

std::vector<ExponentVector> support(const SparsePoly& f) {
    if (f.is_zero()) throw std::invalid_argument("support of the zero polynomial");
    std::vector<ExponentVector> out;
    out.reserve(f.term_count());
    for (const auto& [m, c] : f.terms()) {
        std::vector<Rational> v(m.size());
        for (std::size_t i = 0; i < m.size(); i++) v[i] = Rational(static_cast<long>(m[i]));
        out.emplace_back(std::move(v));
    }
    return out;
}

std::size_t support_rank(const SparsePoly& f) { return qrank(support(f)); }

bool is_degenerate(const SparsePoly& f) {
    if (f.var_count() == 0) throw std::invalid_argument("degeneracy needs at least one variable");
    return support_rank(f) <= f.var_count() - 1;
}

std::map<std::vector<Rational>, Rational> expand_formal(
    const SparsePoly& outer, const std::vector<ExponentVector>& vectors) {
    if (outer.var_count() != vectors.size())
        throw std::invalid_argument("outer polynomial arity does not match vector count");
    std::map<std::vector<Rational>, Rational> out;
    for (const auto& [m, c] : outer.terms()) {
        std::vector<Rational> combined =
            vectors.empty() ? std::vector<Rational>{}
                            : std::vector<Rational>(vectors.front().size());
        for (std::size_t j = 0; j < vectors.size(); j++) {
            if (m[j] == 0) continue;
            Rational e(static_cast<long>(m[j]));
            for (std::size_t i = 0; i < combined.size(); i++)
                combined[i] = combined[i] + e * vectors[j][i];
        }
        auto [it, fresh] = out.emplace(std::move(combined), c);
        if (!fresh) {
            it->second = it->second + c;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    return out;
}

bool verify_decomposition(const SparsePoly& f, const Decomposition& d) {
    std::map<std::vector<Rational>, Rational> expanded = expand_formal(d.outer, d.vectors);
    std::map<std::vector<Rational>, Rational> original;
    for (const auto& [m, c] : f.terms()) {
        std::vector<Rational> v(m.size());
        for (std::size_t i = 0; i < m.size(); i++) v[i] = Rational(static_cast<long>(m[i]));
        original.emplace(std::move(v), c);
    }
    return expanded == original;
}

Decomposition decompose(const SparsePoly& f) {
    const std::size_t n = f.var_count();
    if (!is_degenerate(f)) throw std::invalid_argument("decompose: polynomial is non-degenerate");

    // extend the support span to dimension n−1 with standard basis vectors,
    // lowest coordinate first
    std::vector<ExponentVector> basis = support(f);
    std::size_t rank = qrank(basis);
    for (std::size_t i = 0; i < n && rank + 1 <= n - 1; i++) {
        basis.push_back(ExponentVector::unit(n, i));
        std::size_t r2 = qrank(basis);
        if (r2 == rank)
            basis.pop_back();
        else
            rank = r2;
    }
    if (rank != n - 1)
        throw InvariantViolation("decompose: failed to extend the span to dimension n-1");

    // delta-pattern basis of the extended subspace
    std::vector<std::vector<Rational>> rows;
    rows.reserve(basis.size());
    for (const auto& v : basis) rows.push_back(v.entries());
    Elimination elim = rref(rows);
    if (elim.rank != n - 1)
        throw InvariantViolation("decompose: reduction lost rank");

    Decomposition d{std::vector<ExponentVector>{}, SparsePoly(n - 1), elim.pivot_columns};
    for (std::size_t j = 0; j < n - 1; j++) d.vectors.emplace_back(std::move(rows[j]));
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : elim.pivot_columns) is_pivot[p] = true;
    for (std::size_t i = 0; i < n; i++)
        if (!is_pivot[i]) d.permutation.push_back(i);

    // every support vector u lies in the subspace, so its coordinates in the
    // delta basis are its entries at the pivot columns — already nonnegative
    // integers
    for (const auto& [m, c] : f.terms()) {
        Monomial e(n - 1);
        for (std::size_t j = 0; j < n - 1; j++) e[j] = m[elim.pivot_columns[j]];
        d.outer.add_term(e, c);
    }

    if (!verify_decomposition(f, d))
        throw InvariantViolation("decompose: re-expansion does not reproduce the input");
    return d;
}

ImageBoundReport degenerate_image_bound(const SparsePoly& f, const GroundSet& a,
                                        const Budget& budget) {
    if (a.empty() || a.contains_zero())
        throw std::invalid_argument("image bound needs a nonempty zero-free set");
    Decomposition d = decompose(f);

    ImageBoundReport rep;
    rep.measured = image_set(f, a, budget).size();
    rep.product_bound = 1;

    Rational size(static_cast<long>(a.size()));
    Rational doubling = set_stats(a).mult_doubling;

    for (const auto& v : d.vectors) {
        ImageBoundFactor fac;
        fac.denominator_lcm = 1;
        for (std::size_t i = 0; i < v.size(); i++)
            mpz_lcm(fac.denominator_lcm.get_mpz_t(), fac.denominator_lcm.get_mpz_t(),
                    v[i].den().get_mpz_t());

        mpz_class sum_abs = 0;
        for (std::size_t i = 0; i < v.size(); i++) {
            mpz_class r = v[i].num() * (fac.denominator_lcm / v[i].den());
            sum_abs += abs(r);
            fac.cleared_exponents.push_back(std::move(r));
        }

        // Z_j = product set of the per-coordinate power sets {a^{r_i}}
        GroundSet z({Rational(1)});
        for (const auto& r : fac.cleared_exponents) {
            if (r == 0) continue;
            if (!r.fits_slong_p())
                throw InvariantViolation("cleared exponent does not fit a machine word");
            std::vector<Rational> powers;
            powers.reserve(a.size());
            for (const auto& x : a) powers.push_back(x.pow(r.get_si()));
            z = productset(z, GroundSet(std::move(powers)));
        }
        fac.z_size = z.size();

        if (!sum_abs.fits_slong_p())
            throw InvariantViolation("exponent sum does not fit a machine word");
        fac.doubling_bound = doubling.pow(sum_abs.get_si()) * size;
        fac.doubling_holds = Rational(static_cast<long>(fac.z_size)) <= fac.doubling_bound;

        rep.product_bound *= fac.denominator_lcm * mpz_class(static_cast<unsigned long>(fac.z_size));
        rep.factors.push_back(std::move(fac));
    }

    rep.holds = mpz_class(static_cast<unsigned long>(rep.measured)) <= rep.product_bound;
    return rep;
}

}  // namespace fewprod
