#include "predkit/graph.hpp"

#include <algorithm>
#include <string>

#include "predkit/error.hpp"

namespace predkit {

Graph Graph::from_arrivals(std::span<const VertexArrival> arrivals) {
  Graph g;
  for (const VertexArrival& arrival : arrivals) g.add_vertex(arrival.back_edges);
  return g;
}

std::size_t Graph::add_vertex(std::span<const std::size_t> back_edges) {
  std::size_t v = adjacency_.size();
  std::vector<std::size_t> nbrs(back_edges.begin(), back_edges.end());
  std::sort(nbrs.begin(), nbrs.end());
  if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) {
    throw InvalidInput("vertex " + std::to_string(v) + " repeats a back-edge");
  }
  if (!nbrs.empty() && nbrs.back() >= v) {
    throw InvalidInput("vertex " + std::to_string(v) + " has a back-edge to a later vertex");
  }
  for (std::size_t u : nbrs) adjacency_[u].push_back(v);  // v is larger than all, stays sorted
  adjacency_.push_back(std::move(nbrs));
  edge_count_ += back_edges.size();
  return v;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& nbrs : adjacency_) best = std::max(best, nbrs.size());
  return best;
}

bool Graph::has_edge(std::size_t u, std::size_t v) const {
  const auto& nbrs = adjacency_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(edge_count_);
  for (std::size_t v = 0; v < adjacency_.size(); ++v) {
    for (std::size_t u : adjacency_[v]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::induced(std::span<const std::size_t> vertices) const {
  std::vector<std::ptrdiff_t> index(adjacency_.size(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<std::ptrdiff_t>(i);
  Graph g;
  g.adjacency_.resize(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t u : adjacency_[vertices[i]]) {
      if (index[u] >= 0) g.adjacency_[i].push_back(static_cast<std::size_t>(index[u]));
    }
    std::sort(g.adjacency_[i].begin(), g.adjacency_[i].end());
    g.edge_count_ += g.adjacency_[i].size();
  }
  g.edge_count_ /= 2;
  return g;
}

}  // namespace predkit
