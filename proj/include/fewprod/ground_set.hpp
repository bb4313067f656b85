#ifndef FEWPROD_GROUND_SET_HPP
#define FEWPROD_GROUND_SET_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "fewprod/rational.hpp"

namespace fewprod {

// Tag for the constructors that accept 0 as an element. Sets fed into
// multiplicative machinery (product sets, group rank) must not contain 0;
// additive-only contexts may opt in explicitly.
struct allow_zero_t {
    explicit allow_zero_t() = default;
};
inline constexpr allow_zero_t allow_zero{};

// Finite subset of Q: sorted ascending, duplicates removed. Immutable after
// construction, so iteration order is deterministic everywhere.
class GroundSet {
  public:
    GroundSet() = default;
    explicit GroundSet(std::vector<Rational> elems);             // rejects 0
    GroundSet(std::vector<Rational> elems, allow_zero_t);        // permits 0

    // Parses a comma-separated list of rational literals, e.g. "1,2,3/2".
    static GroundSet parse(const std::string& text);
    static GroundSet parse(const std::string& text, allow_zero_t);

    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }
    bool contains_zero() const;
    bool contains(const Rational& x) const;

    const Rational& operator[](std::size_t i) const { return elems_[i]; }
    const std::vector<Rational>& elements() const { return elems_; }
    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }

    std::string str() const;  // "{a, b, c}" with elements in order

    friend bool operator==(const GroundSet& a, const GroundSet& b) { return a.elems_ == b.elems_; }

  private:
    void normalize();
    std::vector<Rational> elems_;
};

}  // namespace fewprod

#endif
