#include "fewprod/set_arith.hpp"

#include <algorithm>
#include <stdexcept>

#include "fewprod/linalg.hpp"

namespace fewprod {

static void require_nonempty(const GroundSet& s, const char* who) {
    if (s.empty()) throw std::invalid_argument(std::string(who) + ": empty operand");
}

static GroundSet pairwise(const GroundSet& a, const GroundSet& b, Mode mode,
                          const Budget& budget) {
    require_nonempty(a, "set combine");
    require_nonempty(b, "set combine");
    if (static_cast<std::uint64_t>(a.size()) * b.size() > budget.max_set_elements)
        throw BudgetExceeded("set combine would enumerate " +
                             std::to_string(a.size() * b.size()) + " pairs");
    std::vector<Rational> out;
    out.reserve(a.size() * b.size());
    for (const auto& x : a)
        for (const auto& y : b)
            out.push_back(mode == Mode::additive ? x + y : x * y);
    return GroundSet(std::move(out), allow_zero);
}

GroundSet sumset(const GroundSet& a, const GroundSet& b) {
    return pairwise(a, b, Mode::additive, default_budget());
}

GroundSet productset(const GroundSet& a, const GroundSet& b) {
    return pairwise(a, b, Mode::multiplicative, default_budget());
}

SetStats set_stats(const GroundSet& a) {
    require_nonempty(a, "set_stats");
    SetStats s;
    s.size = a.size();
    Rational n(static_cast<long>(a.size()));
    s.add_doubling = Rational(static_cast<long>(sumset(a, a).size())) / n;
    s.mult_doubling = Rational(static_cast<long>(productset(a, a).size())) / n;
    return s;
}

GroundSet iterated(const GroundSet& a, std::uint64_t k, Mode mode, const Budget& budget) {
    require_nonempty(a, "iterated");
    if (k == 0) throw std::invalid_argument("iterated: k must be >= 1");
    GroundSet acc = a;
    for (std::uint64_t i = 1; i < k; i++) acc = pairwise(acc, a, mode, budget);
    return acc;
}

MixedSumsetResult mixed_sumset(const GroundSet& a, std::uint64_t k, std::uint64_t l,
                               const Budget& budget) {
    require_nonempty(a, "mixed_sumset");
    if (k + l == 0) throw std::invalid_argument("mixed_sumset: k + l must be >= 1");

    std::vector<Rational> negated;
    negated.reserve(a.size());
    for (const auto& x : a) negated.push_back(-x);
    GroundSet neg(std::move(negated), allow_zero);

    GroundSet acc({Rational(0)}, allow_zero);
    for (std::uint64_t i = 0; i < k; i++) acc = pairwise(acc, a, Mode::additive, budget);
    for (std::uint64_t i = 0; i < l; i++) acc = pairwise(acc, neg, Mode::additive, budget);

    Rational n(static_cast<long>(a.size()));
    Rational doubling = Rational(static_cast<long>(sumset(a, a).size())) / n;
    MixedSumsetResult r{std::move(acc), doubling.pow(static_cast<long>(k + l)) * n};
    return r;
}

GroundSet ruzsa_cover(const GroundSet& a, const GroundSet& b, Mode mode) {
    require_nonempty(a, "ruzsa_cover");
    require_nonempty(b, "ruzsa_cover");
    if (mode == Mode::multiplicative && (a.contains_zero() || b.contains_zero()))
        throw std::invalid_argument("ruzsa_cover: multiplicative mode needs zero-free sets");

    std::vector<Rational> kept;
    std::vector<Rational> covered;  // union of x∘A over kept x, kept sorted
    for (const auto& bel : b) {
        std::vector<Rational> translate;
        translate.reserve(a.size());
        for (const auto& x : a)
            translate.push_back(mode == Mode::additive ? bel + x : bel * x);
        bool disjoint = std::none_of(translate.begin(), translate.end(), [&](const Rational& t) {
            return std::binary_search(covered.begin(), covered.end(), t);
        });
        if (!disjoint) continue;
        kept.push_back(bel);
        covered.insert(covered.end(), translate.begin(), translate.end());
        std::sort(covered.begin(), covered.end());
    }
    return GroundSet(std::move(kept), allow_zero);
}

DyadicProfile dyadic_profile(const GroundSet& a, std::size_t l, const Budget& budget) {
    require_nonempty(a, "dyadic_profile");
    if (a.contains_zero()) throw std::invalid_argument("dyadic_profile: set must not contain 0");
    if (l == 0) throw std::invalid_argument("dyadic_profile: l must be >= 1");

    DyadicProfile out;
    GroundSet cur = a;  // A^(2^i)
    for (std::size_t i = 0; i < l; i++) {
        GroundSet next = pairwise(cur, cur, Mode::multiplicative, budget);
        out.ratios.push_back(Rational(static_cast<long>(next.size())) /
                             Rational(static_cast<long>(cur.size())));
        cur = std::move(next);
    }
    out.argmin = static_cast<std::size_t>(
        std::min_element(out.ratios.begin(), out.ratios.end()) - out.ratios.begin());
    return out;
}

LatticePointSet::LatticePointSet(std::vector<std::vector<long long>> points)
    : points_(std::move(points)) {
    if (points_.empty()) throw std::invalid_argument("lattice set must be nonempty");
    dim_ = points_.front().size();
    for (const auto& p : points_)
        if (p.size() != dim_) throw std::invalid_argument("lattice points of mixed dimension");
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

FreimanCheck freiman_lemma_check(const LatticePointSet& x) {
    FreimanCheck out;
    const auto& pts = x.points();
    const std::size_t d = x.dim();

    // affine dimension = rank of the differences against one base point
    std::vector<std::vector<mpz_class>> diffs;
    for (std::size_t i = 1; i < pts.size(); i++) {
        std::vector<mpz_class> row(d);
        for (std::size_t j = 0; j < d; j++)
            row[j] = mpz_class(static_cast<long>(pts[i][j])) -
                     mpz_class(static_cast<long>(pts[0][j]));
        diffs.push_back(std::move(row));
    }
    out.affine_dim = diffs.empty() ? 0 : bareiss(std::move(diffs), d).rank;

    std::vector<std::vector<long long>> sums;
    sums.reserve(pts.size() * pts.size());
    for (const auto& p : pts)
        for (const auto& q : pts) {
            std::vector<long long> s(d);
            for (std::size_t j = 0; j < d; j++) s[j] = p[j] + q[j];
            sums.push_back(std::move(s));
        }
    std::sort(sums.begin(), sums.end());
    sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
    out.sumset_size = sums.size();

    long r = static_cast<long>(out.affine_dim);
    long n = static_cast<long>(pts.size());
    out.bound = Rational((r + 1) * n) - Rational(r * (r + 1), 2);
    out.holds = Rational(static_cast<long>(out.sumset_size)) >= out.bound;
    return out;
}

}  // namespace fewprod
