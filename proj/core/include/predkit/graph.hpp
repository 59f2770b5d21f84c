#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "predkit/instance.hpp"

namespace predkit {

// Simple undirected graph grown in vertex-arrival order.
class Graph {
 public:
  Graph() = default;

  // Validates that every back-edge points to an earlier vertex and is not repeated.
  static Graph from_arrivals(std::span<const VertexArrival> arrivals);

  std::size_t add_vertex(std::span<const std::size_t> back_edges);

  std::size_t size() const { return adjacency_.size(); }
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adjacency_[v]; }
  std::size_t degree(std::size_t v) const { return adjacency_[v].size(); }
  std::size_t max_degree() const;
  std::size_t edge_count() const { return edge_count_; }
  bool has_edge(std::size_t u, std::size_t v) const;
  // Each edge once, as (earlier, later).
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  // Induced subgraph; vertex i of the result is vertices[i] of this graph.
  Graph induced(std::span<const std::size_t> vertices) const;

 private:
  std::vector<std::vector<std::size_t>> adjacency_;  // each list sorted ascending
  std::size_t edge_count_ = 0;
};

}  // namespace predkit
