#include "fewprod/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace fewprod {

ExponentVector ExponentVector::unit(std::size_t n, std::size_t i) {
    if (i >= n) throw std::out_of_range("unit vector index past dimension");
    std::vector<Rational> e(n);
    e[i] = Rational(1);
    return ExponentVector(std::move(e));
}

ExponentVector ExponentVector::operator+(const ExponentVector& o) const {
    if (size() != o.size()) throw std::invalid_argument("vector length mismatch");
    std::vector<Rational> r(size());
    for (std::size_t i = 0; i < size(); i++) r[i] = e_[i] + o.e_[i];
    return ExponentVector(std::move(r));
}

ExponentVector ExponentVector::operator-(const ExponentVector& o) const {
    if (size() != o.size()) throw std::invalid_argument("vector length mismatch");
    std::vector<Rational> r(size());
    for (std::size_t i = 0; i < size(); i++) r[i] = e_[i] - o.e_[i];
    return ExponentVector(std::move(r));
}

ExponentVector ExponentVector::scaled(const Rational& c) const {
    std::vector<Rational> r(size());
    for (std::size_t i = 0; i < size(); i++) r[i] = e_[i] * c;
    return ExponentVector(std::move(r));
}

bool ExponentVector::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const Rational& x) { return x.is_zero(); });
}

bool ExponentVector::integral() const {
    return std::all_of(e_.begin(), e_.end(), [](const Rational& x) { return x.is_integer(); });
}

bool ExponentVector::nonneg_integral() const {
    return std::all_of(e_.begin(), e_.end(),
                       [](const Rational& x) { return x.is_integer() && !x.is_negative(); });
}

mpz_class ExponentVector::height() const {
    mpz_class h = 0;
    for (const auto& x : e_) h = std::max(h, x.height());
    return h;
}

Elimination bareiss(std::vector<std::vector<mpz_class>> rows, std::size_t cols) {
    Elimination out;
    const std::size_t m = rows.size();
    mpz_class prev = 1;
    std::size_t r = 0;  // next pivot row
    for (std::size_t c = 0; c < cols && r < m; c++) {
        // pivot: first row at or below r with a nonzero entry in column c
        std::size_t p = r;
        while (p < m && rows[p][c] == 0) p++;
        if (p == m) continue;
        std::swap(rows[r], rows[p]);
        for (std::size_t i = r + 1; i < m; i++) {
            for (std::size_t j = c + 1; j < cols; j++) {
                mpz_class t = rows[r][c] * rows[i][j] - rows[i][c] * rows[r][j];
                mpz_divexact(rows[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            rows[i][c] = 0;
        }
        prev = rows[r][c];
        out.pivot_columns.push_back(c);
        r++;
    }
    out.rank = r;
    return out;
}

std::size_t qrank(std::span<const ExponentVector> vectors) {
    if (vectors.empty()) return 0;
    const std::size_t n = vectors.front().size();
    std::vector<std::vector<mpz_class>> rows;
    rows.reserve(vectors.size());
    for (const auto& v : vectors) {
        if (v.size() != n) throw std::invalid_argument("vector length mismatch");
        // clear denominators: scale the row by the lcm of its entry denominators
        mpz_class l = 1;
        for (std::size_t j = 0; j < n; j++) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v[j].den().get_mpz_t());
        std::vector<mpz_class> row(n);
        for (std::size_t j = 0; j < n; j++) row[j] = v[j].num() * (l / v[j].den());
        rows.push_back(std::move(row));
    }
    return bareiss(std::move(rows), n).rank;
}

std::size_t qrank(const std::vector<ExponentVector>& vectors) {
    return qrank(std::span<const ExponentVector>(vectors));
}

Elimination rref(std::vector<std::vector<Rational>>& rows) {
    Elimination out;
    if (rows.empty()) return out;
    const std::size_t m = rows.size();
    const std::size_t cols = rows.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m; c++) {
        std::size_t p = r;
        while (p < m && rows[p][c].is_zero()) p++;
        if (p == m) continue;
        std::swap(rows[r], rows[p]);
        Rational inv = rows[r][c].reciprocal();
        for (std::size_t j = c; j < cols; j++) rows[r][j] = rows[r][j] * inv;
        for (std::size_t i = 0; i < m; i++) {
            if (i == r || rows[i][c].is_zero()) continue;
            Rational f = rows[i][c];
            for (std::size_t j = c; j < cols; j++) rows[i][j] = rows[i][j] - f * rows[r][j];
        }
        out.pivot_columns.push_back(c);
        r++;
    }
    out.rank = r;
    return out;
}

std::optional<std::vector<std::vector<Rational>>> invert(std::vector<std::vector<Rational>> m) {
    const std::size_t n = m.size();
    for (auto& row : m) {
        if (row.size() != n) throw std::invalid_argument("matrix not square");
        row.resize(2 * n);
    }
    for (std::size_t i = 0; i < n; i++) m[i][n + i] = Rational(1);
    Elimination e = rref(m);
    // singular iff some pivot escapes the left block: rref of [A|I] always has
    // n pivots, so check that the first n land in the A columns
    if (e.pivot_columns.size() < n || e.pivot_columns[n - 1] >= n) return std::nullopt;
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; i++)
        for (std::size_t j = 0; j < n; j++) inv[i][j] = m[i][n + j];
    return inv;
}

}  // namespace fewprod
