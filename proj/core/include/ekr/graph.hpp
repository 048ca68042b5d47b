#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ekr {

// Fixed-capacity bitset over vertex indices; one word per 64 vertices.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int capacity) : n_(capacity), words_((capacity + 63) / 64, 0) {}

  int capacity() const { return n_; }
  bool test(int v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }
  void set(int v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  bool empty() const;
  int count() const;
  // Smallest set index >= from, or -1.
  int next(int from = 0) const;

  VertexSet& operator&=(const VertexSet& o);
  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator-=(const VertexSet& o);  // set difference
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  static VertexSet full(int capacity);
  std::vector<int> to_vector() const;
  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
  friend class ExplicitGraph;
};

// A materialized finite graph: symmetric adjacency, no self-loops.
// Vertices are 0-based indices; Kneser instances additionally carry
// (n, k) and per-vertex colex ranks as labels.
class ExplicitGraph {
 public:
  explicit ExplicitGraph(int vertex_count);

  int vertex_count() const { return n_; }
  long long edge_count() const { return edges_; }

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const { return rows_[u].test(v); }
  int degree(int v) const { return degrees_[v]; }
  std::vector<int> neighbors(int v) const { return rows_[v].to_vector(); }
  const VertexSet& adjacency_row(int v) const { return rows_[v]; }
  // All edges (u, v) with u < v, in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  bool is_regular() const;
  long long edges_within(const VertexSet& subset) const;
  int degree_within(int v, const VertexSet& subset) const;
  long long triangle_count() const;
  // Lexicographically first triangle (u < v < w), if any.
  std::optional<std::array<int, 3>> first_triangle() const;

  // Subgraph induced on `keep`; vertices are re-indexed in increasing order.
  ExplicitGraph induced(const VertexSet& keep) const;

  // Kneser labels (colex ranks into K(n,k)); empty for synthetic graphs.
  void set_kneser_labels(int n, int k, std::vector<std::uint64_t> ranks);
  bool has_kneser_labels() const { return !labels_.empty(); }
  int kneser_n() const { return kn_; }
  int kneser_k() const { return kk_; }
  const std::vector<std::uint64_t>& kneser_ranks() const { return labels_; }

  // Plain-text edge list: "p <vertices> <edges>" then "e <u> <v>" per edge.
  std::string to_edge_list() const;
  static ExplicitGraph from_edge_list(std::istream& in);
  static ExplicitGraph from_edge_list(const std::string& text);

 private:
  int n_;
  long long edges_ = 0;
  std::vector<VertexSet> rows_;
  std::vector<int> degrees_;
  std::vector<std::uint64_t> labels_;
  int kn_ = 0, kk_ = 0;
};

}  // namespace ekr
