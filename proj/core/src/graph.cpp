#include "ekr/graph.hpp"

#include <array>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace ekr {

bool VertexSet::empty() const {
  for (auto w : words_)
    if (w) return false;
  return true;
}

int VertexSet::count() const {
  int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

int VertexSet::next(int from) const {
  if (from >= n_) return -1;
  int wi = from >> 6;
  std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
  while (true) {
    if (w) return (wi << 6) + std::countr_zero(w);
    if (++wi >= static_cast<int>(words_.size())) return -1;
    w = words_[wi];
  }
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  return *this;
}

VertexSet VertexSet::full(int capacity) {
  VertexSet s(capacity);
  for (int i = 0; i < capacity; ++i) s.set(i);
  return s;
}

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  for (int v = next(0); v >= 0; v = next(v + 1)) out.push_back(v);
  return out;
}

ExplicitGraph::ExplicitGraph(int vertex_count)
    : n_(vertex_count), rows_(vertex_count, VertexSet(vertex_count)), degrees_(vertex_count, 0) {
  if (vertex_count < 0) throw std::invalid_argument("ExplicitGraph: negative vertex count");
}

void ExplicitGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("add_edge: vertex out of range");
  if (u == v) throw std::invalid_argument("add_edge: self-loop");
  if (rows_[u].test(v)) return;
  rows_[u].set(v);
  rows_[v].set(u);
  ++degrees_[u];
  ++degrees_[v];
  ++edges_;
}

std::vector<std::pair<int, int>> ExplicitGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edges_);
  for (int u = 0; u < n_; ++u)
    for (int v = rows_[u].next(u + 1); v >= 0; v = rows_[u].next(v + 1)) out.emplace_back(u, v);
  return out;
}

bool ExplicitGraph::is_regular() const {
  for (int v = 1; v < n_; ++v)
    if (degrees_[v] != degrees_[0]) return false;
  return n_ > 0;
}

long long ExplicitGraph::edges_within(const VertexSet& subset) const {
  long long twice = 0;
  for (int v = subset.next(0); v >= 0; v = subset.next(v + 1)) {
    const auto& row = rows_[v].words_;
    const auto& sub = subset.words_;
    int c = 0;
    for (std::size_t i = 0; i < row.size(); ++i) c += std::popcount(row[i] & sub[i]);
    twice += c;
  }
  return twice / 2;
}

int ExplicitGraph::degree_within(int v, const VertexSet& subset) const {
  const auto& row = rows_[v].words_;
  const auto& sub = subset.words_;
  int c = 0;
  for (std::size_t i = 0; i < row.size(); ++i) c += std::popcount(row[i] & sub[i]);
  return c - (subset.test(v) && rows_[v].test(v) ? 1 : 0);
}

long long ExplicitGraph::triangle_count() const {
  long long count = 0;
  for (int u = 0; u < n_; ++u) {
    for (int v = rows_[u].next(u + 1); v >= 0; v = rows_[u].next(v + 1)) {
      // common neighbors w > v close a triangle u < v < w
      const auto& ru = rows_[u].words_;
      const auto& rv = rows_[v].words_;
      std::size_t start = static_cast<std::size_t>(v) + 1;
      for (std::size_t i = start >> 6; i < ru.size(); ++i) {
        std::uint64_t w = ru[i] & rv[i];
        if (i == (start >> 6)) w &= ~std::uint64_t{0} << (start & 63);
        count += std::popcount(w);
      }
    }
  }
  return count;
}

std::optional<std::array<int, 3>> ExplicitGraph::first_triangle() const {
  for (int u = 0; u < n_; ++u) {
    for (int v = rows_[u].next(u + 1); v >= 0; v = rows_[u].next(v + 1)) {
      for (int w = rows_[v].next(v + 1); w >= 0; w = rows_[v].next(w + 1)) {
        if (rows_[u].test(w)) return std::array<int, 3>{u, v, w};
      }
    }
  }
  return std::nullopt;
}

ExplicitGraph ExplicitGraph::induced(const VertexSet& keep) const {
  std::vector<int> verts = keep.to_vector();
  std::vector<int> index(n_, -1);
  for (std::size_t i = 0; i < verts.size(); ++i) index[verts[i]] = static_cast<int>(i);
  ExplicitGraph g(static_cast<int>(verts.size()));
  for (int u : verts)
    for (int v = rows_[u].next(u + 1); v >= 0; v = rows_[u].next(v + 1))
      if (keep.test(v)) g.add_edge(index[u], index[v]);
  if (!labels_.empty()) {
    std::vector<std::uint64_t> sub;
    sub.reserve(verts.size());
    for (int u : verts) sub.push_back(labels_[u]);
    g.set_kneser_labels(kn_, kk_, std::move(sub));
  }
  return g;
}

void ExplicitGraph::set_kneser_labels(int n, int k, std::vector<std::uint64_t> ranks) {
  if (static_cast<int>(ranks.size()) != n_)
    throw std::invalid_argument("set_kneser_labels: one rank per vertex required");
  kn_ = n;
  kk_ = k;
  labels_ = std::move(ranks);
}

std::string ExplicitGraph::to_edge_list() const {
  std::ostringstream out;
  out << "p " << n_ << ' ' << edges_ << '\n';
  for (auto [u, v] : edges()) out << "e " << u << ' ' << v << '\n';
  return out.str();
}

ExplicitGraph ExplicitGraph::from_edge_list(std::istream& in) {
  std::string tag;
  int n = 0;
  long long m = 0;
  if (!(in >> tag >> n >> m) || tag != "p")
    throw std::runtime_error("edge list: expected header 'p <vertices> <edges>'");
  ExplicitGraph g(n);
  int u, v;
  while (in >> tag >> u >> v) {
    if (tag != "e") throw std::runtime_error("edge list: expected 'e <u> <v>' line");
    g.add_edge(u, v);
  }
  if (g.edge_count() != m) throw std::runtime_error("edge list: edge count mismatch");
  return g;
}

ExplicitGraph ExplicitGraph::from_edge_list(const std::string& text) {
  std::istringstream in(text);
  return from_edge_list(in);
}

}  // namespace ekr
