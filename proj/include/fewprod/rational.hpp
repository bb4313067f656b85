#ifndef FEWPROD_RATIONAL_HPP
#define FEWPROD_RATIONAL_HPP

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>

namespace fewprod {

// Exact rational, always in lowest terms with positive denominator. Thin
// value wrapper over GMP's mpq_class so that every construction path
// canonicalizes and equality/ordering/hashing agree with mathematical
// equality.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
    explicit Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(mpq_class q);

    // Grammar: int | int "/" posint | decimal. Decimals convert exactly
    // ("0.125" -> 1/8). Throws std::invalid_argument on malformed input or a
    // zero denominator.
    static Rational parse(const std::string& text);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_negative() const { return sgn(v_) < 0; }
    bool is_positive() const { return sgn(v_) > 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    // N(p/q) = max(|p|, |q|); N(0) = 0.
    mpz_class height() const;

    // "p" when the denominator is 1, "p/q" otherwise. parse(str()) is the
    // identity.
    std::string str() const;

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }
    Rational reciprocal() const;

    // Integer exponent; negative exponents require a nonzero base.
    Rational pow(long e) const;

    const mpq_class& raw() const { return v_; }

  private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace fewprod

template <>
struct std::hash<fewprod::Rational> {
    std::size_t operator()(const fewprod::Rational& q) const noexcept;
};

#endif
