#include "extremalkit/drawings.hpp"

#include <string>
#include <vector>

#include "extremalkit/anneal.hpp"
#include "extremalkit/errors.hpp"
#include "extremalkit/rat.hpp"
#include "extremalkit/weighting.hpp"

namespace exk {

std::int64_t d_value(const Diam4Descriptor& desc) {
  const auto& c = desc.children();
  std::int64_t explicit_sum = 0;
  for (std::size_t j = 0; j < c.size(); ++j)  // c_j has 1-based index j+1
    explicit_sum += static_cast<std::int64_t>(j / 2) * c[j];

  std::vector<Rat> weights;
  weights.reserve(c.size());
  for (int ci : c) weights.emplace_back(ci);
  Rat complete = 0;  // w_min(K_k) with sorted weights: each c_j met j-1 times
  for (std::size_t j = 0; j < c.size(); ++j) complete += Rat(static_cast<long>(j)) * weights[j];
  Rat identity = complete - ex_min(VertexWeighting(weights), 3);

  if (identity != Rat(static_cast<long>(explicit_sum)))
    throw InternalCheckError("d_value routes disagree: explicit sum " + std::to_string(explicit_sum) +
                             ", w_min identity " + rat_to_string(identity));
  return explicit_sum;
}

std::int64_t maxcr_diam4(const Diam4Descriptor& desc) {
  Tree t = desc.to_tree();
  std::int64_t base = choose2(t.vertex_count() - 1);
  for (int deg : t.degrees()) base -= choose2(deg);
  return base - d_value(desc);
}

bool diam4_is_caterpillar(const Diam4Descriptor& desc) {
  // Caterpillar <=> at most two children have children of their own; the
  // leafless remainder is then a path through the root.
  int branching = 0;
  for (int ci : desc.children())
    if (ci > 0) ++branching;
  return branching <= 2;
}

Drawing draw_diam4(const Diam4Descriptor& desc) {
  const auto& c = desc.children();
  const int k = desc.child_count();
  const int n = desc.vertex_count();
  Tree tree = desc.to_tree();

  // Child i (1-based) sits at slot (i-1)/2 from the left end when i is odd,
  // slot i/2 - 1 from the right end when i is even, realizing
  // x_1 < x_3 < ... < x_6 < x_4 < x_2 on consecutive integers around 0.
  std::vector<long> child_x(static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i) {
    int slot = (i % 2 == 1) ? (i - 1) / 2 : k - i / 2;
    child_x[static_cast<std::size_t>(i - 1)] = slot - k / 2;
  }
  // Anchor magnitudes B^(k+2-i), B = 2k+1, shrinking as the index grows:
  // x'_2 < x'_4 < ... < 0 < ... < x'_3 < x'_1. Geometric magnitudes matter:
  // three of the lines here are concurrent iff their (bottom-x, top-x) pairs
  // are collinear, and with child abscissas bounded by k every such
  // determinant is a sum of +-coef*B^e terms with distinct exponents and
  // |coef| <= k < B, hence nonzero. (Affine magnitudes like k+2-i put entire
  // parity classes into one pencil through a shared point, which no clone
  // offset can escape.) The jitter below stays far under the unit gap.
  const long base = 2L * k + 1;
  std::vector<Int> anchor_x(static_cast<std::size_t>(k));
  Int magnitude = base * static_cast<long>(base);  // B^2 for i = k
  for (int i = k; i >= 1; --i, magnitude *= base)
    anchor_x[static_cast<std::size_t>(i - 1)] = (i % 2 == 1) ? magnitude : -magnitude;
  const Int max_anchor = abs(anchor_x[0]);

  Rat eps = Rat(1) / (Rat(4) * Rat(static_cast<long>(n + 1)) * Rat(max_anchor));
  for (int attempt = 0; attempt < 10; ++attempt, eps /= 2) {
    Drawing d;
    d.graph = tree.graph();
    d.positions.assign(static_cast<std::size_t>(n), Point{});
    d.positions[0] = {Rat(0), Rat(1)};
    for (int i = 1; i <= k; ++i)
      d.positions[static_cast<std::size_t>(i)] = {Rat(child_x[static_cast<std::size_t>(i - 1)]), Rat(0)};
    int next = k + 1;
    for (int i = 1; i <= k; ++i) {
      int ci = c[static_cast<std::size_t>(i - 1)];
      for (int j = 1; j <= ci; ++j) {
        Rat x = Rat(anchor_x[static_cast<std::size_t>(i - 1)]) + eps * Rat(j) / Rat(ci + 1);
        d.positions[static_cast<std::size_t>(next++)] = {x, Rat(1)};
      }
    }
    if (is_legal(d).legal) return d;
  }
  throw InternalCheckError("diameter-4 drawing stayed illegal after 10 clone-offset halvings");
}

std::int64_t maxcr_spider(const SpiderDescriptor& desc) {
  Tree t = desc.to_tree();
  std::int64_t value = choose2(t.vertex_count() - 1);
  for (int deg : t.degrees()) value -= choose2(deg);
  const auto levels = desc.levels();
  for (std::size_t i = 1; i < levels.size(); ++i) {  // levels a_2, a_3, ...
    int a = levels[i];
    value -= choose2(a / 2) + choose2((a + 1) / 2);
  }
  return value;
}

std::pair<std::int64_t, std::int64_t> spider_identity_sides(const SpiderDescriptor& desc) {
  const auto& legs = desc.legs();
  std::int64_t leg_form = 0;
  for (std::size_t i = 2; i < legs.size(); ++i)  // legs l_3, l_4, ... (1-based i+1)
    leg_form += static_cast<std::int64_t>(legs[i] - 1) * static_cast<std::int64_t>(i / 2);
  std::int64_t level_form = 0;
  const auto levels = desc.levels();
  for (std::size_t i = 1; i < levels.size(); ++i) {
    int a = levels[i];
    level_form += choose2(a / 2) + choose2((a + 1) / 2);
  }
  return {leg_form, level_form};
}

MaxcrReport maxcr_tree(const Tree& t, std::uint64_t seed) {
  TreeClassification c = classify_tree(t);
  MaxcrReport report;
  if (c.caterpillar) {
    report.method = MaxcrReport::Method::Thrackle;
    report.exact = thrackle_bound(t.graph());
  } else if (c.spider) {
    report.method = MaxcrReport::Method::SpiderFormula;
    report.exact = maxcr_spider(*c.spider);
  } else if (c.diam4) {
    report.method = MaxcrReport::Method::Diam4Formula;
    report.exact = maxcr_diam4(*c.diam4);
  } else {
    report.method = MaxcrReport::Method::BoundsOnly;
    report.upper = thrackle_bound(t.graph());
    AnnealParams params;
    params.seed = seed;
    try {
      report.lower = anneal_max_crossings(t, params).crossings;
    } catch (const CapExceededError&) {
      report.lower = 0;  // tree too big to anneal; zero is still a valid bound
    }
    return report;
  }
  report.lower = report.upper = *report.exact;
  return report;
}

}  // namespace exk
