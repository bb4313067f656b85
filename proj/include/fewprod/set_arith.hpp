#ifndef FEWPROD_SET_ARITH_HPP
#define FEWPROD_SET_ARITH_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fewprod/errors.hpp"
#include "fewprod/ground_set.hpp"
#include "fewprod/rational.hpp"

namespace fewprod {

enum class Mode { additive, multiplicative };

// Size and the two doubling ratios |A+A|/|A|, |A·A|/|A| of a nonempty set.
struct SetStats {
    std::size_t size = 0;
    Rational add_doubling;
    Rational mult_doubling;
};

// Deduplicated finite set of integer points of a common dimension.
class LatticePointSet {
  public:
    explicit LatticePointSet(std::vector<std::vector<long long>> points);
    std::size_t size() const { return points_.size(); }
    std::size_t dim() const { return dim_; }
    const std::vector<std::vector<long long>>& points() const { return points_; }

  private:
    std::vector<std::vector<long long>> points_;
    std::size_t dim_ = 0;
};

struct MixedSumsetResult {
    GroundSet set;      // kA - lA
    Rational bound;     // K^{k+l} * |A| with K = |A+A|/|A|
};

struct DyadicProfile {
    std::vector<Rational> ratios;  // ratios[i] = |A^(2^{i+1})| / |A^(2^i)|
    std::size_t argmin = 0;        // index of the smallest ratio (first on ties)
};

struct FreimanCheck {
    std::size_t affine_dim = 0;
    std::size_t sumset_size = 0;  // |X+X|
    Rational bound;               // (r+1)|X| - r(r+1)/2
    bool holds = false;
};

GroundSet sumset(const GroundSet& a, const GroundSet& b);
GroundSet productset(const GroundSet& a, const GroundSet& b);

SetStats set_stats(const GroundSet& a);

// k-fold iterated sum/product set, built by repeated convolution with
// deduplication after every stage.
GroundSet iterated(const GroundSet& a, std::uint64_t k, Mode mode,
                   const Budget& budget = default_budget());

// kA - lA together with the doubling-power cardinality bound it is checked
// against. k + l must be at least 1.
MixedSumsetResult mixed_sumset(const GroundSet& a, std::uint64_t k, std::uint64_t l,
                               const Budget& budget = default_budget());

// Greedy covering set X ⊆ B: scan B in order, keep b whenever b∘A is disjoint
// from every kept translate. The result satisfies B ⊆ X∘A∘A⁻¹ and
// |X|·|A| ≤ |A∘B|.
GroundSet ruzsa_cover(const GroundSet& a, const GroundSet& b, Mode mode);

// Growth ratios of the repeatedly squared product set A^(1), A^(2), A^(4), …
// A must not contain 0.
DyadicProfile dyadic_profile(const GroundSet& a, std::size_t l,
                             const Budget& budget = default_budget());

// |X+X| ≥ (r+1)|X| − r(r+1)/2 where r is the affine dimension of X. The
// check runs inside the affine hull, so `holds` is true on every input.
FreimanCheck freiman_lemma_check(const LatticePointSet& x);

}  // namespace fewprod

#endif
