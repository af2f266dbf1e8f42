#include "extremalkit/anneal.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "extremalkit/drawings.hpp"
#include "extremalkit/errors.hpp"
#include "extremalkit/parallel.hpp"

namespace exk {
namespace {

constexpr int kAnnealMaxVertices = 32;
constexpr int kMaxGridHalfWidth = 4096;  // keeps every intermediate product in int64

struct P64 {
  std::int64_t x, y;
  bool operator==(const P64& o) const { return x == o.x && y == o.y; }
  bool operator<(const P64& o) const { return x < o.x || (x == o.x && y < o.y); }
};

std::int64_t cross64(P64 p, P64 q, P64 r) {
  return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
}

bool strictly_inside64(P64 p, P64 a, P64 b) {
  if (cross64(a, b, p) != 0) return false;
  std::int64_t dot_a = (p.x - a.x) * (b.x - a.x) + (p.y - a.y) * (b.y - a.y);
  std::int64_t dot_b = (p.x - b.x) * (a.x - b.x) + (p.y - b.y) * (a.y - b.y);
  return dot_a > 0 && dot_b > 0;
}

// Reduced fractions (x, y) of the crossing point of two properly crossing
// integer segments; used only for exact equality of points.
std::array<std::int64_t, 4> crossing_key(P64 a1, P64 a2, P64 b1, P64 b2) {
  std::int64_t dax = a2.x - a1.x, day = a2.y - a1.y;
  std::int64_t dbx = b2.x - b1.x, dby = b2.y - b1.y;
  std::int64_t den = dax * dby - day * dbx;
  std::int64_t t_num = (b1.x - a1.x) * dby - (b1.y - a1.y) * dbx;
  std::int64_t nx = a1.x * den + t_num * dax;
  std::int64_t ny = a1.y * den + t_num * day;
  if (den < 0) {
    den = -den;
    nx = -nx;
    ny = -ny;
  }
  std::int64_t gx = std::gcd(std::abs(nx), den);
  std::int64_t gy = std::gcd(std::abs(ny), den);
  return {nx / gx, den / gx, ny / gy, den / gy};
}

// Full legality rules plus the crossing count in one integer pass; returns -1
// when the placement is illegal. Mirrors geometry's is_legal exactly.
std::int64_t evaluate(const std::vector<std::pair<int, int>>& edges, const std::vector<P64>& pos,
                      std::vector<P64>& scratch_points, std::vector<std::array<std::int64_t, 4>>& scratch_keys) {
  scratch_points = pos;
  std::sort(scratch_points.begin(), scratch_points.end());
  for (std::size_t i = 1; i < scratch_points.size(); ++i)
    if (scratch_points[i] == scratch_points[i - 1]) return -1;

  const int n = static_cast<int>(pos.size());
  for (auto [u, v] : edges) {
    for (int w = 0; w < n; ++w) {
      if (w == u || w == v) continue;
      if (strictly_inside64(pos[static_cast<std::size_t>(w)], pos[static_cast<std::size_t>(u)],
                            pos[static_cast<std::size_t>(v)]))
        return -1;
    }
  }

  scratch_keys.clear();
  std::int64_t count = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [ua, va] = edges[i];
    P64 a1 = pos[static_cast<std::size_t>(ua)], a2 = pos[static_cast<std::size_t>(va)];
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      auto [ub, vb] = edges[j];
      if (ua == ub || ua == vb || va == ub || va == vb) continue;
      P64 b1 = pos[static_cast<std::size_t>(ub)], b2 = pos[static_cast<std::size_t>(vb)];
      std::int64_t o1 = cross64(a1, a2, b1), o2 = cross64(a1, a2, b2);
      if (o1 == 0 && o2 == 0) {
        // collinear pair: any positive-length shared stretch is illegal
        P64 alo = std::min(a1, a2), ahi = std::max(a1, a2);
        P64 blo = std::min(b1, b2), bhi = std::max(b1, b2);
        if (std::max(alo, blo) < std::min(ahi, bhi)) return -1;
        continue;
      }
      if ((o1 > 0) == (o2 > 0) || o1 == 0 || o2 == 0) continue;
      std::int64_t o3 = cross64(b1, b2, a1), o4 = cross64(b1, b2, a2);
      if ((o3 > 0) == (o4 > 0) || o3 == 0 || o4 == 0) continue;
      ++count;
      scratch_keys.push_back(crossing_key(a1, a2, b1, b2));
    }
  }
  std::sort(scratch_keys.begin(), scratch_keys.end());
  for (std::size_t i = 1; i < scratch_keys.size(); ++i)
    if (scratch_keys[i] == scratch_keys[i - 1]) return -1;  // >= 3 edges through one point
  return count;
}

struct RestartOutcome {
  bool placed = false;
  std::int64_t count = -1;
  std::vector<P64> positions;
};

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

RestartOutcome run_restart(const std::vector<std::pair<int, int>>& edges, int n,
                           const AnnealParams& params, int restart) {
  // splitmix-style stream separation keeps restarts independent but seeded.
  std::mt19937_64 rng(params.seed + 0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(restart + 1));
  const std::int64_t side = 2 * static_cast<std::int64_t>(params.grid_half_width) + 1;
  auto random_coord = [&] {
    return static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(side)) - params.grid_half_width;
  };

  RestartOutcome out;
  std::vector<P64> pos(static_cast<std::size_t>(n));
  std::vector<P64> scratch_points;
  std::vector<std::array<std::int64_t, 4>> scratch_keys;
  std::int64_t current = -1;
  for (int attempt = 0; attempt < 500 && current < 0; ++attempt) {
    for (auto& p : pos) p = {random_coord(), random_coord()};
    current = evaluate(edges, pos, scratch_points, scratch_keys);
  }
  if (current < 0) return out;  // grid too small to place legally
  out.placed = true;
  out.count = current;
  out.positions = pos;

  const int iters = params.iterations;
  const double ratio = params.temp_end / params.temp_start;
  std::vector<P64> proposal = pos;
  for (int it = 0; it < iters; ++it) {
    double temp = params.temp_start * std::pow(ratio, iters > 1 ? static_cast<double>(it) / (iters - 1) : 1.0);
    int v = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    proposal = pos;
    proposal[static_cast<std::size_t>(v)] = {random_coord(), random_coord()};
    std::int64_t value = evaluate(edges, proposal, scratch_points, scratch_keys);
    if (value < 0) continue;
    std::int64_t delta = value - current;
    if (delta < 0 && uniform01(rng) >= std::exp(static_cast<double>(delta) / temp)) continue;
    pos.swap(proposal);
    current = value;
    if (current > out.count) {
      out.count = current;
      out.positions = pos;
    }
  }
  return out;
}

AnnealResult anneal_impl(const Tree& t, const AnnealParams& params, bool parallel) {
  const int n = t.vertex_count();
  if (n > kAnnealMaxVertices)
    throw CapExceededError("annealer handles at most " + std::to_string(kAnnealMaxVertices) +
                           " vertices, got " + std::to_string(n));
  if (params.grid_half_width < 1 || params.grid_half_width > kMaxGridHalfWidth)
    throw std::invalid_argument("grid half-width must be in [1, " + std::to_string(kMaxGridHalfWidth) + "]");
  if (params.iterations < 1 || params.restarts < 1)
    throw std::invalid_argument("iterations and restarts must be positive");
  if (!(params.temp_start > 0) || !(params.temp_end > 0) || params.temp_end > params.temp_start)
    throw std::invalid_argument("temperatures must satisfy 0 < temp_end <= temp_start");
  const std::int64_t side = 2 * static_cast<std::int64_t>(params.grid_half_width) + 1;
  if (side * side < n)
    throw GridTooSmallError("grid has fewer cells than vertices; enlarge grid_half_width");

  const auto edges = t.graph().edges();
  std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(params.restarts));
#pragma omp parallel for schedule(dynamic, 1) num_threads(parallel ? max_threads() : 1)
  for (int r = 0; r < params.restarts; ++r)
    outcomes[static_cast<std::size_t>(r)] = run_restart(edges, n, params, r);

  const RestartOutcome* best = nullptr;
  for (const auto& outcome : outcomes) {
    if (!outcome.placed) continue;
    if (!best || outcome.count > best->count) best = &outcome;  // ties keep the lowest restart
  }
  if (!best)
    throw GridTooSmallError("no legal placement found after 500 samples per restart; enlarge grid_half_width");

  Drawing drawing;
  drawing.graph = t.graph();
  drawing.positions.reserve(static_cast<std::size_t>(n));
  for (const P64& p : best->positions)
    drawing.positions.push_back({Rat(static_cast<long>(p.x)), Rat(static_cast<long>(p.y))});

  // One exact pass over the winner: the integer fast path must agree with the
  // rational predicates, and the count must respect every applicable bound.
  std::int64_t exact = crossing_count_serial(drawing);
  if (exact != best->count)
    throw InternalCheckError("annealer fast count " + std::to_string(best->count) +
                             " disagrees with exact count " + std::to_string(exact));
  std::int64_t bound = thrackle_bound(t.graph());
  TreeClassification cls = classify_tree(t);
  if (cls.spider) bound = std::min(bound, maxcr_spider(*cls.spider));
  if (cls.diam4) bound = std::min(bound, maxcr_diam4(*cls.diam4));
  if (exact > bound)
    throw InternalCheckError("annealed count " + std::to_string(exact) + " exceeds the proven bound " +
                             std::to_string(bound));
  return {std::move(drawing), exact};
}

}  // namespace

AnnealResult anneal_max_crossings(const Tree& t, const AnnealParams& params) {
  return anneal_impl(t, params, true);
}

AnnealResult anneal_max_crossings_serial(const Tree& t, const AnnealParams& params) {
  return anneal_impl(t, params, false);
}

}  // namespace exk
