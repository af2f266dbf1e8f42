// Simulated annealing over integer grid placements: the heuristic
// lower-bound witness paired with the closed-form values.
#pragma once

#include <cstdint>

#include "extremalkit/geometry.hpp"
#include "extremalkit/graph.hpp"

namespace exk {

struct AnnealParams {
  int grid_half_width = 10;   // placements on [-G, G]^2
  int iterations = 20000;     // proposals per restart
  double temp_start = 3.0;    // geometric schedule
  double temp_end = 0.05;
  int restarts = 8;
  std::uint64_t seed = 0;     // fixed seed => identical output
};

struct AnnealResult {
  Drawing drawing;  // legal, integer coordinates
  std::int64_t crossings = 0;
};

// Maximizes the crossing count of a legal drawing of a tree (n <= 32).
// Proposals move one vertex to a random grid point; illegal states are
// rejected. Restarts run in parallel with independent seeded generators and
// reduce deterministically (best count, lowest restart index on ties), so the
// parallel and serial entry points return identical results. When the tree is
// a spider or diameter-4 tree the result is checked against the closed form
// as an upper bound; exceeding it throws InternalCheckError.
AnnealResult anneal_max_crossings(const Tree& t, const AnnealParams& params = {});
AnnealResult anneal_max_crossings_serial(const Tree& t, const AnnealParams& params = {});

}  // namespace exk
