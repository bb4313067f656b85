#include "fewprod/poly.hpp"

#include <algorithm>
#include <cctype>

#include "fewprod/tuples.hpp"

namespace fewprod {

SparsePoly SparsePoly::constant(std::size_t n, const Rational& c) {
    SparsePoly p(n);
    p.add_term(Monomial(n, 0), c);
    return p;
}

SparsePoly SparsePoly::variable(std::size_t n, std::size_t i) {
    if (i >= n) throw std::out_of_range("variable index past variable count");
    SparsePoly p(n);
    Monomial m(n, 0);
    m[i] = 1;
    p.add_term(m, Rational(1));
    return p;
}

bool SparsePoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Monomial& m = terms_.begin()->first;
    return std::all_of(m.begin(), m.end(), [](std::uint32_t e) { return e == 0; });
}

std::uint32_t SparsePoly::total_degree() const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) {
        std::uint32_t s = 0;
        for (std::uint32_t e : m) s += e;
        d = std::max(d, s);
    }
    return d;
}

void SparsePoly::add_term(const Monomial& exps, const Rational& coeff) {
    if (exps.size() != n_) throw std::invalid_argument("exponent tuple length mismatch");
    if (coeff.is_zero()) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, coeff);
        return;
    }
    it->second = it->second + coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
    if (n_ != o.n_) throw std::invalid_argument("variable count mismatch");
    SparsePoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const { return *this + (-o); }

SparsePoly SparsePoly::operator-() const {
    SparsePoly r(n_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
    if (n_ != o.n_) throw std::invalid_argument("variable count mismatch");
    SparsePoly r(n_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m(n_);
            for (std::size_t i = 0; i < n_; i++) m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    return r;
}

SparsePoly SparsePoly::pow(std::uint32_t k) const {
    SparsePoly acc = constant(n_, Rational(1));
    SparsePoly base = *this;
    while (k) {
        if (k & 1u) acc = acc * base;
        k >>= 1u;
        if (k) base = base * base;
    }
    return acc;
}

Rational SparsePoly::eval(std::span<const Rational> point) const {
    if (point.size() != n_) throw std::invalid_argument("point length mismatch");
    Rational total(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < n_; i++)
            if (m[i]) t = t * point[i].pow(m[i]);
        total = total + t;
    }
    return total;
}

std::string SparsePoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    // highest exponent tuple first reads like handwritten polynomials
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        bool neg = c.is_negative();
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        Rational mag = neg ? -c : c;
        std::string vars;
        for (std::size_t i = 0; i < n_; i++) {
            if (!m[i]) continue;
            if (!vars.empty()) vars += "*";
            vars += (i + 1 <= 9) ? "x" + std::to_string(i + 1)
                                 : "x{" + std::to_string(i + 1) + "}";
            if (m[i] > 1) vars += "^" + std::to_string(m[i]);
        }
        if (vars.empty()) {
            out += mag.str();
        } else {
            if (!(mag == Rational(1))) out += mag.str() + "*";
            out += vars;
        }
    }
    return out;
}

// ------------------------------------------------------------------ parser ---

namespace {

class Parser {
  public:
    Parser(const std::string& text, std::size_t n) : s_(text), n_(n) {}

    SparsePoly run() {
        SparsePoly p = expr();
        skip_ws();
        if (pos_ != s_.size()) throw PolyParseError("unexpected trailing input", pos_);
        return p;
    }

  private:
    SparsePoly expr() {
        skip_ws();
        bool neg = false;
        if (peek() == '+' || peek() == '-') neg = (take() == '-');
        SparsePoly acc = term();
        if (neg) acc = -acc;
        while (true) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-') return acc;
            take();
            SparsePoly t = term();
            acc = (c == '+') ? acc + t : acc - t;
        }
    }

    SparsePoly term() {
        SparsePoly acc = factor();
        while (true) {
            skip_ws();
            if (peek() != '*') return acc;
            take();
            acc = acc * factor();
        }
    }

    SparsePoly factor() {
        skip_ws();
        if (peek() == '+' || peek() == '-') {
            bool neg = take() == '-';
            SparsePoly f = factor();
            return neg ? -f : f;
        }
        SparsePoly base = primary();
        skip_ws();
        if (peek() != '^') return base;
        take();
        skip_ws();
        std::size_t at = pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw PolyParseError("exponent must be a nonnegative integer", at);
        std::uint64_t e = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            e = e * 10 + static_cast<std::uint64_t>(take() - '0');
            if (e > 1'000'000) throw PolyParseError("exponent too large", at);
        }
        return base.pow(static_cast<std::uint32_t>(e));
    }

    SparsePoly primary() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            take();
            SparsePoly inner = expr();
            skip_ws();
            if (peek() != ')') throw PolyParseError("expected ')'", pos_);
            take();
            return inner;
        }
        if (c == 'x') return variable();
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        throw PolyParseError("expected variable, number, or '('", pos_);
    }

    SparsePoly variable() {
        std::size_t at = pos_;
        take();  // 'x'
        std::uint64_t idx = 0;
        if (peek() == '{') {
            take();
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                throw PolyParseError("expected variable index", pos_);
            while (std::isdigit(static_cast<unsigned char>(peek()))) {
                idx = idx * 10 + static_cast<std::uint64_t>(take() - '0');
                if (idx > 1'000'000) throw PolyParseError("variable index too large", at);
            }
            if (peek() != '}') throw PolyParseError("expected '}'", pos_);
            take();
        } else if (std::isdigit(static_cast<unsigned char>(peek())) && peek() != '0') {
            idx = static_cast<std::uint64_t>(take() - '0');
            if (std::isdigit(static_cast<unsigned char>(peek())))
                throw PolyParseError("indices past 9 need braces, e.g. x{12}", at);
        } else {
            throw PolyParseError("expected variable index 1-9 or {k}", pos_);
        }
        if (idx == 0 || idx > n_)
            throw PolyParseError("variable index out of range 1.." + std::to_string(n_), at);
        return SparsePoly::variable(n_, static_cast<std::size_t>(idx - 1));
    }

    SparsePoly number() {
        std::size_t at = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) take();
        if (peek() == '/' || peek() == '.') {
            take();
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                throw PolyParseError("expected digits after '" + std::string(1, s_[pos_ - 1]) + "'",
                                     pos_);
            while (std::isdigit(static_cast<unsigned char>(peek()))) take();
        }
        Rational c;
        try {
            c = Rational::parse(s_.substr(at, pos_ - at));
        } catch (const std::exception& e) {
            throw PolyParseError(e.what(), at);
        }
        return SparsePoly::constant(n_, c);
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char take() { return s_[pos_++]; }
    void skip_ws() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) pos_++;
    }

    const std::string& s_;
    std::size_t n_;
    std::size_t pos_ = 0;
};

}  // namespace

SparsePoly poly_parse(const std::string& text, std::size_t n, allow_zero_poly_t) {
    return Parser(text, n).run();
}

SparsePoly poly_parse(const std::string& text, std::size_t n) {
    SparsePoly p = poly_parse(text, n, allow_zero_poly);
    if (p.is_zero())
        throw std::invalid_argument("polynomial is identically zero after simplification");
    return p;
}

SparsePoly permute_variables(const SparsePoly& f, const std::vector<std::size_t>& perm) {
    const std::size_t n = f.var_count();
    if (perm.size() != n) throw std::invalid_argument("permutation length mismatch");
    std::vector<bool> seen(n, false);
    for (std::size_t p : perm) {
        if (p >= n || seen[p]) throw std::invalid_argument("not a permutation");
        seen[p] = true;
    }
    SparsePoly r(n);
    for (const auto& [m, c] : f.terms()) {
        Monomial pm(n, 0);
        for (std::size_t i = 0; i < n; i++) pm[perm[i]] = m[i];
        r.add_term(pm, c);
    }
    return r;
}

SparsePoly substitute(const SparsePoly& f, std::size_t var, const Rational& value) {
    if (var >= f.var_count()) throw std::out_of_range("substitute: variable index past count");
    SparsePoly r(f.var_count());
    for (const auto& [m, c] : f.terms()) {
        Monomial reduced = m;
        reduced[var] = 0;
        r.add_term(reduced, c * value.pow(m[var]));
    }
    return r;
}

// ------------------------------------------------------- tuple enumeration ---

namespace {

// Calls fn with F's value at every tuple of A^n, in odometer order. Powers of
// the ground-set elements are tabulated once up to the largest exponent seen.
template <class Fn>
void eval_over_tuples(const SparsePoly& f, const GroundSet& a, const Budget& budget, Fn&& fn) {
    const std::size_t n = f.var_count();
    if (a.empty()) throw std::invalid_argument("empty ground set");
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

    for_each_tuple(a.size(), n, [&](const std::vector<std::size_t>& idx) {
        Rational total(0);
        for (const auto& [m, c] : f.terms()) {
            Rational t = c;
            for (std::size_t i = 0; i < n; i++)
                if (m[i]) t = t * pow_table[idx[i]][m[i]];
            total = total + t;
        }
        fn(total);
    });
}

}  // namespace

GroundSet image_set(const SparsePoly& f, const GroundSet& a, const Budget& budget) {
    std::vector<Rational> vals;
    eval_over_tuples(f, a, budget, [&](const Rational& v) { vals.push_back(v); });
    return GroundSet(std::move(vals), allow_zero);
}

std::uint64_t zero_count(const SparsePoly& f, const GroundSet& a, const Budget& budget) {
    if (f.is_zero()) throw std::invalid_argument("zero_count needs a nonzero polynomial");
    std::uint64_t count = 0;
    eval_over_tuples(f, a, budget, [&](const Rational& v) {
        if (v.is_zero()) count++;
    });
    return count;
}

RepCountMap rep_counts(const SparsePoly& f, const GroundSet& a, const Budget& budget) {
    RepCountMap r;
    eval_over_tuples(f, a, budget, [&](const Rational& v) {
        r.counts[v]++;
        r.domain_size++;
    });
    return r;
}

mpz_class energy(const SparsePoly& f, const GroundSet& a, const Budget& budget) {
    RepCountMap r = rep_counts(f, a, budget);
    mpz_class e = 0;
    for (const auto& [v, c] : r.counts) {
        mpz_class cc(static_cast<unsigned long>(c));
        e += cc * cc;
    }
    return e;
}

}  // namespace fewprod
