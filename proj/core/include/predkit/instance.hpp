#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "predkit/bits.hpp"
#include "predkit/error.hpp"

namespace predkit {

// ASG request: a bare prompt to output a bit.
struct AsgPrompt {
  friend bool operator==(const AsgPrompt&, const AsgPrompt&) = default;
};

// Vertex-arrival request: the new vertex plus its edges to earlier vertices,
// given as 0-based indices of those earlier vertices.
struct VertexArrival {
  std::vector<std::size_t> back_edges;
  friend bool operator==(const VertexArrival&, const VertexArrival&) = default;
};

// Open interval (left, right) with integer endpoints. Two intervals overlap
// iff their intersection is nonempty, so intervals that only share an
// endpoint do not overlap.
struct Interval {
  std::int64_t left = 0;
  std::int64_t right = 0;
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct Literal {
  std::size_t var = 0;  // 0-based variable index
  bool negated = false;
  friend bool operator==(const Literal&, const Literal&) = default;
};

enum class ClauseKind { kInterval, kCollision, kGeneral };

struct Clause2 {
  Literal a;
  Literal b;
  ClauseKind kind = ClauseKind::kGeneral;
  friend bool operator==(const Clause2&, const Clause2&) = default;
};

// The i-th 2SAT request reveals variable i together with every clause whose
// highest-indexed variable is i.
struct Sat2Request {
  std::vector<Clause2> clauses;
  friend bool operator==(const Sat2Request&, const Sat2Request&) = default;
};

using PageId = std::int64_t;

template <class Req>
struct PredictedInstance {
  BitString x;
  BitString xhat;
  std::vector<Req> requests;

  std::size_t size() const { return requests.size(); }

  void validate_shape() const {
    if (x.size() != requests.size() || xhat.size() != requests.size()) {
      throw InvalidInput("instance shape mismatch: |x|=" + std::to_string(x.size()) +
                         " |xhat|=" + std::to_string(xhat.size()) +
                         " |r|=" + std::to_string(requests.size()));
    }
  }

  friend bool operator==(const PredictedInstance&, const PredictedInstance&) = default;
};

// ASG level t in {1, 2, ...} or infinity.
class AsgLevel {
 public:
  static AsgLevel finite(std::int64_t t);
  static AsgLevel infinite() { return AsgLevel(); }
  static AsgLevel parse(std::string_view text);

  bool is_infinite() const { return !t_.has_value(); }
  std::int64_t t() const;
  std::string to_string() const;

  friend bool operator==(const AsgLevel&, const AsgLevel&) = default;

 private:
  std::optional<std::int64_t> t_;
};

struct AsgInstance {
  AsgLevel level;
  PredictedInstance<AsgPrompt> data;
  friend bool operator==(const AsgInstance&, const AsgInstance&) = default;
};

struct VcInstance {
  std::optional<std::int64_t> degree_bound;
  PredictedInstance<VertexArrival> data;
  friend bool operator==(const VcInstance&, const VcInstance&) = default;
};

struct IrInstance {
  std::optional<std::int64_t> overlap_bound;
  PredictedInstance<Interval> data;
  friend bool operator==(const IrInstance&, const IrInstance&) = default;
};

struct SpillInstance {
  std::int64_t k = 1;
  std::optional<std::int64_t> degree_bound;
  PredictedInstance<VertexArrival> data;
  friend bool operator==(const SpillInstance&, const SpillInstance&) = default;
};

struct Sat2Instance {
  PredictedInstance<Sat2Request> data;
  friend bool operator==(const Sat2Instance&, const Sat2Instance&) = default;
};

struct DomInstance {
  PredictedInstance<VertexArrival> data;
  friend bool operator==(const DomInstance&, const DomInstance&) = default;
};

struct PagingInstance {
  std::int64_t cache_size = 1;
  PredictedInstance<PageId> data;
  friend bool operator==(const PagingInstance&, const PagingInstance&) = default;
};

using AnyInstance = std::variant<AsgInstance, VcInstance, IrInstance, SpillInstance, Sat2Instance,
                                 DomInstance, PagingInstance>;

enum class ProblemKind { kAsg, kVertexCover, kIntervalRejection, kSpill, kSat2, kDominatingSet, kPaging };

ProblemKind kind_of(const AnyInstance& instance);
// Short ids used on the command line and in JSONL: asg, vc, ir, spill, sat2, dom, paging.
std::string_view problem_id(ProblemKind kind);
ProblemKind parse_problem_id(std::string_view id);
std::vector<std::string> known_problem_ids();

const BitString& truth_bits(const AnyInstance& instance);
const BitString& predicted_bits(const AnyInstance& instance);
std::size_t instance_size(const AnyInstance& instance);
void validate_shape(const AnyInstance& instance);

}  // namespace predkit
