#ifndef FEWPROD_POLY_HPP
#define FEWPROD_POLY_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fewprod/errors.hpp"
#include "fewprod/ground_set.hpp"
#include "fewprod/rational.hpp"

namespace fewprod {

// Exponent tuple of a single term; length equals the variable count.
using Monomial = std::vector<std::uint32_t>;

// Syntax error in polynomial text; `position` is the 0-based offset.
class PolyParseError : public std::runtime_error {
  public:
    PolyParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)),
          position(position) {}
    std::size_t position;
};

// Tag for call sites that accept the identically-zero polynomial (used for
// intermediate sums that may cancel; rejected by default).
struct allow_zero_poly_t {
    explicit allow_zero_poly_t() = default;
};
inline constexpr allow_zero_poly_t allow_zero_poly{};

// Multivariate polynomial over Q in sparse form: map from exponent tuple to
// nonzero coefficient, keyed in lexicographic order. Zero coefficients are
// never stored.
class SparsePoly {
  public:
    explicit SparsePoly(std::size_t n) : n_(n) {}
    static SparsePoly constant(std::size_t n, const Rational& c);
    static SparsePoly variable(std::size_t n, std::size_t i);  // x_{i+1}, 0-based i

    std::size_t var_count() const { return n_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::uint32_t total_degree() const;  // 0 for the zero polynomial

    void add_term(const Monomial& exps, const Rational& coeff);

    SparsePoly operator+(const SparsePoly& o) const;
    SparsePoly operator-(const SparsePoly& o) const;
    SparsePoly operator*(const SparsePoly& o) const;
    SparsePoly operator-() const;
    SparsePoly pow(std::uint32_t k) const;

    Rational eval(std::span<const Rational> point) const;

    std::string str() const;  // canonical text, highest term first

    friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

  private:
    std::size_t n_;
    std::map<Monomial, Rational> terms_;
};

// Parses the polynomial grammar: variables x1..x9 / x{10} and beyond,
// integer/rational/decimal coefficients, + - * ^ and parentheses. The
// two-argument form rejects text that simplifies to the zero polynomial.
SparsePoly poly_parse(const std::string& text, std::size_t n);
SparsePoly poly_parse(const std::string& text, std::size_t n, allow_zero_poly_t);

// Renames variables: old variable i becomes variable perm[i] of the result.
// perm must be a permutation of {0,…,n−1}.
SparsePoly permute_variables(const SparsePoly& f, const std::vector<std::size_t>& perm);

// Plugs `value` into variable var symbolically. The result keeps the same
// variable count with exponent 0 on var, so identities can be checked exactly.
SparsePoly substitute(const SparsePoly& f, std::size_t var, const Rational& value);

// Value histogram of F over the tuple domain A^n.
struct RepCountMap {
    std::map<Rational, std::uint64_t> counts;
    std::uint64_t domain_size = 0;
};

GroundSet image_set(const SparsePoly& f, const GroundSet& a,
                    const Budget& budget = default_budget());

// Number of tuples in A^n where F vanishes. F must be nonzero.
std::uint64_t zero_count(const SparsePoly& f, const GroundSet& a,
                         const Budget& budget = default_budget());

RepCountMap rep_counts(const SparsePoly& f, const GroundSet& a,
                       const Budget& budget = default_budget());

// Collision energy of F on A: the number of 2n-tuples where F agrees on the
// two halves. Computed as the sum of squared histogram counts, never by
// 2n-fold enumeration.
mpz_class energy(const SparsePoly& f, const GroundSet& a,
                 const Budget& budget = default_budget());

}  // namespace fewprod

#endif
