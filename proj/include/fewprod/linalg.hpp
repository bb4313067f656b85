#ifndef FEWPROD_LINALG_HPP
#define FEWPROD_LINALG_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "fewprod/rational.hpp"

namespace fewprod {

// Vector in Q^n. Length is fixed at construction; supports the Q-vector-space
// operations the rank and decomposition machinery needs.
class ExponentVector {
  public:
    explicit ExponentVector(std::vector<Rational> entries) : e_(std::move(entries)) {}
    static ExponentVector zero(std::size_t n) { return ExponentVector(std::vector<Rational>(n)); }
    static ExponentVector unit(std::size_t n, std::size_t i);

    std::size_t size() const { return e_.size(); }
    const Rational& operator[](std::size_t i) const { return e_[i]; }
    const std::vector<Rational>& entries() const { return e_; }

    ExponentVector operator+(const ExponentVector& o) const;
    ExponentVector operator-(const ExponentVector& o) const;
    ExponentVector scaled(const Rational& c) const;

    bool is_zero() const;
    bool integral() const;
    bool nonneg_integral() const;

    // N(z) = max over entries of N(entry).
    mpz_class height() const;

    friend bool operator==(const ExponentVector& a, const ExponentVector& b) { return a.e_ == b.e_; }
    friend bool operator<(const ExponentVector& a, const ExponentVector& b) { return a.e_ < b.e_; }

  private:
    std::vector<Rational> e_;
};

// Exact dimension over Q of the span. Fraction-free Bareiss elimination after
// clearing row denominators; pivot is the first nonzero entry in column order,
// lowest row first. Empty input has rank 0.
std::size_t qrank(std::span<const ExponentVector> vectors);
std::size_t qrank(const std::vector<ExponentVector>& vectors);

struct Elimination {
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_columns;
};

Elimination bareiss(std::vector<std::vector<mpz_class>> rows, std::size_t cols);

// Reduced row echelon form over Q, in place. Same pivot rule as bareiss();
// returns rank and pivot columns, with the first `rank` rows holding the
// reduced basis.
Elimination rref(std::vector<std::vector<Rational>>& rows);

// Exact inverse of a square rational matrix; nullopt when singular.
std::optional<std::vector<std::vector<Rational>>> invert(std::vector<std::vector<Rational>> m);

}  // namespace fewprod

#endif
