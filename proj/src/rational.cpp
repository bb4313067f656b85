#include "fewprod/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace fewprod {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw std::invalid_argument("Rational: reciprocal of zero");
    return Rational(den(), num());
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    const Rational base = e < 0 ? reciprocal() : *this;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1 : static_cast<unsigned long>(e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.num().get_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), base.den().get_mpz_t(), k);
    Rational r;
    r.v_ = mpq_class(num, den);  // powers of a canonical fraction stay coprime
    return r;
}

mpz_class Rational::height() const {
    if (is_zero()) return 0;
    mpz_class n = ::abs(num());
    return n >= den() ? n : den();
}

std::string Rational::str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

namespace {

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

// always base 10: the mpz_class string constructor auto-detects the base, so
// a leading zero would silently switch to octal
mpz_class decimal(const std::string& digits) {
    mpz_class z;
    if (mpz_set_str(z.get_mpz_t(), digits.c_str(), 10) != 0)
        throw std::invalid_argument("Rational: malformed digits '" + digits + "'");
    return z;
}

}  // namespace

Rational Rational::parse(const std::string& text) {
    std::size_t pos = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
    std::size_t int_start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == int_start) throw std::invalid_argument("Rational: malformed literal '" + text + "'");

    const bool negative = text[0] == '-';
    const std::string int_part = text.substr(int_start, pos - int_start);

    if (pos == text.size()) {
        mpz_class n = decimal(int_part);
        return Rational(negative ? mpz_class(-n) : n, 1);
    }

    if (text[pos] == '/') {
        if (!all_digits(text, pos + 1, text.size()))
            throw std::invalid_argument("Rational: malformed literal '" + text + "'");
        mpz_class n = decimal(int_part);
        mpz_class d = decimal(text.substr(pos + 1));
        if (d == 0) throw std::invalid_argument("Rational: zero denominator in '" + text + "'");
        return Rational(negative ? mpz_class(-n) : n, d);
    }

    if (text[pos] == '.') {
        if (!all_digits(text, pos + 1, text.size()))
            throw std::invalid_argument("Rational: malformed literal '" + text + "'");
        const std::string frac_part = text.substr(pos + 1);
        mpz_class n = decimal(int_part + frac_part);
        mpz_class d;
        mpz_ui_pow_ui(d.get_mpz_t(), 10, frac_part.size());
        return Rational(negative ? mpz_class(-n) : n, d);
    }

    throw std::invalid_argument("Rational: malformed literal '" + text + "'");
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace fewprod

namespace {

std::size_t hash_mpz(const mpz_class& z) {
    const mpz_srcptr p = z.get_mpz_t();
    std::size_t h = static_cast<std::size_t>(mpz_sgn(p)) + 0x9e3779b97f4a7c15ULL;
    const std::size_t limbs = mpz_size(p);
    for (std::size_t i = 0; i < limbs; ++i)
        h = h * 1099511628211ULL + static_cast<std::size_t>(mpz_getlimbn(p, static_cast<mp_size_t>(i)));
    return h;
}

}  // namespace

std::size_t std::hash<fewprod::Rational>::operator()(const fewprod::Rational& q) const noexcept {
    return hash_mpz(q.num()) ^ (hash_mpz(q.den()) << 1);
}
