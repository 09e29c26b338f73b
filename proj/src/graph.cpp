#include "factorkit/graph.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <string>

#include "factorkit/error.hpp"

namespace factorkit {

// ---------------------------------------------------------------------------
// VertexSet

VertexSet::VertexSet(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

VertexSet::VertexSet(std::size_t n, std::initializer_list<Vertex> members) : VertexSet(n) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::from_mask(std::size_t n, std::uint64_t mask) {
  if (n > 64) throw DomainError("VertexSet::from_mask: universe larger than 64");
  if (n < 64 && (mask >> n) != 0) throw DomainError("VertexSet::from_mask: mask has bits beyond universe");
  VertexSet s(n);
  if (n > 0) s.words_[0] = mask;
  return s;
}

VertexSet VertexSet::from_members(std::size_t n, std::span<const Vertex> members) {
  VertexSet s(n);
  for (Vertex v : members) s.insert(v);
  return s;
}

void VertexSet::check(Vertex v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= n_)
    throw DomainError("vertex " + std::to_string(v) + " outside universe of size " + std::to_string(n_));
}

bool VertexSet::contains(Vertex v) const {
  check(v);
  return (words_[v / 64] >> (v % 64)) & 1U;
}

void VertexSet::insert(Vertex v) {
  check(v);
  words_[v / 64] |= std::uint64_t{1} << (v % 64);
}

void VertexSet::erase(Vertex v) {
  check(v);
  words_[v / 64] &= ~(std::uint64_t{1} << (v % 64));
}

std::size_t VertexSet::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    for (auto w = words_[i]; w != 0; w &= w - 1)
      out.push_back(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
  }
  return out;
}

std::uint64_t VertexSet::mask() const {
  if (n_ > 64) throw DomainError("VertexSet::mask: universe larger than 64");
  return words_.empty() ? 0 : words_[0];
}

VertexSet VertexSet::complement() const {
  VertexSet c(n_);
  for (std::size_t i = 0; i < words_.size(); ++i) c.words_[i] = ~words_[i];
  if (n_ % 64 != 0) c.words_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
  return c;
}

bool VertexSet::disjoint(const VertexSet& other) const {
  if (other.n_ != n_) throw DomainError("VertexSet::disjoint: universe mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & other.words_[i]) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adjacency_(n) {
  if (n > static_cast<std::size_t>(std::numeric_limits<Vertex>::max()))
    throw DomainError("graph order exceeds vertex id range");
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end())
    throw DomainError("duplicate edge " + std::to_string(dup->first) + " " + std::to_string(dup->second));
  for (auto [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

Graph::Graph(std::size_t n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= adjacency_.size())
    throw DomainError("vertex " + std::to_string(v) + " out of range for graph of order " +
                      std::to_string(adjacency_.size()));
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return adjacency_[v];
}

std::size_t Graph::degree(Vertex v) const { return neighbors(v).size(); }

bool Graph::adjacent(Vertex u, Vertex v) const {
  auto nbrs = neighbors(u);
  check_vertex(v);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::size_t Graph::min_degree() const noexcept {
  std::size_t best = adjacency_.empty() ? 0 : std::numeric_limits<std::size_t>::max();
  for (const auto& nbrs : adjacency_) best = std::min(best, nbrs.size());
  return best;
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (const auto& nbrs : adjacency_) best = std::max(best, nbrs.size());
  return best;
}

bool Graph::complete() const noexcept {
  const auto n = order();
  return edges_.size() == n * (n > 0 ? n - 1 : 0) / 2;
}

Graph Graph::with_edge(Vertex u, Vertex v) const {
  std::vector<Edge> next = edges_;
  next.emplace_back(u, v);
  return Graph(order(), next);
}

// ---------------------------------------------------------------------------
// Queries and constructions

std::size_t degree_minus(const Graph& g, const VertexSet& removed, Vertex v) {
  g.check_vertex(v);
  if (removed.universe() != g.order()) throw DomainError("degree_minus: vertex set universe mismatch");
  if (removed.contains(v)) throw DomainError("degree_minus: vertex " + std::to_string(v) + " lies in S");
  std::size_t d = 0;
  for (Vertex u : g.neighbors(v))
    if (!removed.contains(u)) ++d;
  return d;
}

std::size_t neighborhood_union(const Graph& g, Vertex u, Vertex v) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (u == v) throw DomainError("neighborhood_union: u and v must be distinct");
  auto a = g.neighbors(u);
  auto b = g.neighbors(v);
  std::size_t common = 0;
  for (auto i = a.begin(), j = b.begin(); i != a.end() && j != b.end();) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++common;
      ++i;
      ++j;
    }
  }
  return a.size() + b.size() - common;
}

std::optional<std::size_t> min_nonadjacent_neighborhood_union(const Graph& g) {
  std::optional<std::size_t> best;
  const auto n = static_cast<Vertex>(g.order());
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v)) continue;
      auto nu = neighborhood_union(g, u, v);
      if (!best || nu < *best) best = nu;
    }
  }
  return best;
}

Graph join(const Graph& left, const Graph& right) {
  const auto offset = static_cast<Vertex>(left.order());
  std::vector<Edge> edges(left.edges());
  edges.reserve(left.size() + right.size() + left.order() * right.order());
  for (auto [u, v] : right.edges()) edges.emplace_back(u + offset, v + offset);
  for (Vertex u = 0; u < offset; ++u)
    for (Vertex v = 0; v < static_cast<Vertex>(right.order()); ++v) edges.emplace_back(u, v + offset);
  return Graph(left.order() + right.order(), edges);
}

Graph disjoint_union(const Graph& left, const Graph& right) {
  const auto offset = static_cast<Vertex>(left.order());
  std::vector<Edge> edges(left.edges());
  for (auto [u, v] : right.edges()) edges.emplace_back(u + offset, v + offset);
  return Graph(left.order() + right.order(), edges);
}

Graph complete_graph(std::size_t k) {
  std::vector<Edge> edges;
  edges.reserve(k * (k > 0 ? k - 1 : 0) / 2);
  for (Vertex u = 0; u < static_cast<Vertex>(k); ++u)
    for (Vertex v = u + 1; v < static_cast<Vertex>(k); ++v) edges.emplace_back(u, v);
  return Graph(k, edges);
}

Graph edgeless_graph(std::size_t k) { return Graph(k, std::span<const Edge>{}); }

std::vector<VertexSet> components(const Graph& g) {
  const auto n = g.order();
  std::vector<int> label(n, -1);
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < static_cast<Vertex>(n); ++root) {
    if (label[root] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back(n);
    label[root] = id;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      out.back().insert(v);
      for (Vertex u : g.neighbors(v)) {
        if (label[u] < 0) {
          label[u] = id;
          stack.push_back(u);
        }
      }
    }
  }
  return out;
}

bool connected(const Graph& g) { return components(g).size() <= 1; }

}  // namespace factorkit
