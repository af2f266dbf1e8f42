// Closed-form maximum rectilinear crossing numbers for spiders and
// diameter-4 trees, and the two-line construction realizing the diameter-4
// value exactly.
#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "extremalkit/geometry.hpp"
#include "extremalkit/graph.hpp"

namespace exk {

// The deficiency d(c_1..c_k) = sum_i i*c_{2i+1} + sum_i i*c_{2i+2} (c_j = 0
// beyond k). Computed both by that explicit sum and by the identity
// d = w_min(K_k) - w_min(B_3) with weights c_i; the two routes must agree or
// an InternalCheckError is thrown.
std::int64_t d_value(const Diam4Descriptor& desc);

// max-cr of a diameter-4 tree: C(n-1,2) - sum_v C(d(v),2) - d. Trees with at
// most two grandchildren are caterpillars and take the thrackle bound (the
// formula degrades to the same value).
std::int64_t maxcr_diam4(const Diam4Descriptor& desc);

// True in the degenerate regime (at most two grandchildren): the tree is then
// a caterpillar, d = 0, and maxcr_diam4 reports the thrackle bound.
bool diam4_is_caterpillar(const Diam4Descriptor& desc);

// Legal drawing with crossing_count == maxcr_diam4(desc): root at (0,1),
// children on y=0 ordered x_1 < x_3 < ... < x_6 < x_4 < x_2, grandchildren
// cloned within eps of per-child anchors back on y=1. Retries with halved eps
// if a legality check fails.
Drawing draw_diam4(const Diam4Descriptor& desc);

// max-cr of a spider: C(n-1,2) - sum_v C(d(v),2)
//                     - sum_{i>=2} [ C(floor(a_i/2),2) + C(ceil(a_i/2),2) ].
std::int64_t maxcr_spider(const SpiderDescriptor& desc);

// Both sides of the leg/level identity, computed independently:
// first = sum_{i=3}^k (l_i - 1) * floor((i-1)/2)  (over legs),
// second = the level sum of floor/ceil binomials   (over a_i).
std::pair<std::int64_t, std::int64_t> spider_identity_sides(const SpiderDescriptor& desc);

// Dispatch for arbitrary trees: caterpillars take the thrackle bound, spiders
// and diameter-4 trees their formulas; anything else gets [lower, upper]
// bounds only (annealed witness, thrackle bound).
struct MaxcrReport {
  enum class Method { Thrackle, SpiderFormula, Diam4Formula, BoundsOnly };
  Method method;
  std::optional<std::int64_t> exact;
  std::int64_t lower = 0;  // == *exact when exact is set
  std::int64_t upper = 0;
};

// The BoundsOnly fallback anneals with default parameters and this seed.
MaxcrReport maxcr_tree(const Tree& t, std::uint64_t seed = 0);

}  // namespace exk
