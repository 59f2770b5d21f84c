#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "predkit/bits.hpp"
#include "predkit/instance.hpp"

namespace predkit {

struct Corruption {
  enum class Mode { kNone, kExact, kProbability };
  Mode mode = Mode::kNone;
  std::int64_t mu0 = 0;      // kExact: ones predicted 0
  std::int64_t mu1 = 0;      // kExact: zeros predicted 1
  double flip_probability = 0;  // kProbability: per-bit flip chance

  static Corruption none() { return {}; }
  static Corruption exact(std::int64_t mu0, std::int64_t mu1) { return {Mode::kExact, mu0, mu1, 0}; }
  static Corruption probability(double p) { return {Mode::kProbability, 0, 0, p}; }
};

struct GeneratorConfig {
  ProblemKind problem = ProblemKind::kAsg;
  std::size_t n = 8;  // requests: prompts, vertices, intervals, variables or trace length
  std::size_t min_n = 0;  // when 0 < min_n < n, each instance draws its size from [min_n, n]
  AsgLevel level = AsgLevel::finite(2);
  std::int64_t t = 3;      // degree bound (VC, Spill), overlap bound (IR) or cache size (paging)
  std::int64_t k = 2;      // colors for k-Spill
  std::int64_t pages = 6;  // paging universe size N
  std::int64_t min_distinct_pages = 0;  // paging; 0 means the cache size
  bool bounded = true;     // apply t as a degree/overlap bound to VC and IR instances
  bool no_isolated = false;  // VC: attach every isolated vertex to some other vertex
  double edge_probability = 0.35;
  std::uint64_t seed = 1;
  Corruption corruption;
};

// x with predictions corrupted per `corruption`. Throws InvalidInput when an
// exact target is out of reach (mu0 > sum x or mu1 > n - sum x).
BitString corrupt(const BitString& x, const Corruption& corruption, std::mt19937_64& rng);

// Seed for the index-th instance of a suite, so suites can be built in parallel.
std::uint64_t instance_seed(std::uint64_t seed, std::size_t index);

// One random instance whose x is the oracle's optimal solution (lfd_labels
// for paging), checked with verify_optimal_encoding.
AnyInstance gen_instance(const GeneratorConfig& config, std::size_t index);
std::vector<AnyInstance> gen_instances(const GeneratorConfig& config, std::size_t count);

// Every (x, xhat) in ({0,1}^n)^2 for ASG at `level`, x-major.
std::vector<AsgInstance> asg_exhaustive(const AsgLevel& level, std::size_t n);

}  // namespace predkit
