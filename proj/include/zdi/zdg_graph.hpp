#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zdi/ring_core.hpp"

namespace zdi {

inline constexpr std::uint64_t kDefaultVertexCap = 20000;
// Complete graphs near the vertex cap have ~2*10^8 edges; refuse those too.
inline constexpr std::uint64_t kDefaultEdgeCap = 20'000'000;
inline constexpr std::size_t kQuotientClassCap = 2000;

struct BuildOptions {
  std::uint64_t vertex_cap = kDefaultVertexCap;
  std::uint64_t edge_cap = kDefaultEdgeCap;
};

// Default cap, overridden by the ZDI_VERTEX_CAP environment variable.
std::uint64_t VertexCapFromEnv();

// Immutable simple undirected graph on labelled vertices, stored as CSR.
// Vertex indices follow ascending label order.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  // Rejects loops, duplicate labels and edges naming unknown labels;
  // duplicate edges are merged.
  static SimpleGraph FromEdges(std::vector<std::uint64_t> labels,
                               std::vector<std::pair<std::uint64_t, std::uint64_t>> edges);

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  std::uint64_t edge_count() const { return neighbors_.size() / 2; }
  const std::vector<std::uint64_t>& labels() const { return labels_; }
  std::uint64_t label(std::size_t v) const { return labels_[v]; }
  // Index of a label; throws kInvalidArgument when absent.
  std::size_t index_of(std::uint64_t label) const;

  std::span<const std::uint32_t> neighbors(std::size_t v) const {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }
  std::uint64_t degree(std::size_t v) const { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(std::size_t a, std::size_t b) const;

  // Edges as (u, v) label pairs with u < v, sorted.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edge_list() const;

 private:
  friend class ZeroDivisorGraph;
  std::vector<std::uint64_t> labels_;
  std::vector<std::uint64_t> offsets_ = {0};
  std::vector<std::uint32_t> neighbors_;
};

std::vector<std::uint64_t> Degrees(const SimpleGraph& g);

// Shortest-path distances from one vertex; -1 for unreachable vertices.
std::vector<int> BfsDistances(const SimpleGraph& g, std::size_t source);

// Per-vertex eccentricity, one BFS per vertex spread over worker threads.
// A single vertex has eccentricity 0; a disconnected graph raises kInternal.
std::vector<std::uint32_t> Eccentricities(const SimpleGraph& g);

// Graph diameter (max eccentricity); 0 for graphs with fewer than 2 vertices.
std::uint32_t Diameter(const SimpleGraph& g);

// The zero-divisor graph of Z_m: vertices are the nonzero zero-divisors,
// x ~ y iff x != y and xy = 0 mod m.
class ZeroDivisorGraph {
 public:
  // Throws kCapExceeded when the vertex or edge count exceeds the options.
  static ZeroDivisorGraph Build(const Modulus& m, const BuildOptions& options = {});

  const Modulus& modulus() const { return modulus_; }
  const SimpleGraph& graph() const { return graph_; }

 private:
  ZeroDivisorGraph(Modulus m, SimpleGraph g) : modulus_(std::move(m)), graph_(std::move(g)) {}
  Modulus modulus_;
  SimpleGraph graph_;
};

// One divisor class {x : gcd(x, m) = d}. Members share their neighbourhood.
struct GcdClass {
  std::uint64_t divisor = 0;
  std::uint64_t size = 0;  // phi(m / d)
  bool self_closed = false;  // m | d^2: members are pairwise adjacent
  std::uint64_t degree = 0;  // degree of every member
  std::uint32_t eccentricity = 0;
};

class QuotientGraph {
 public:
  // Throws kCapExceeded above kQuotientClassCap classes.
  static QuotientGraph Build(const Modulus& m);

  const Modulus& modulus() const { return modulus_; }
  const std::vector<GcdClass>& classes() const { return classes_; }
  // Adjacent class indices; a self-closed class lists itself.
  const std::vector<std::uint32_t>& adjacent(std::size_t c) const { return adjacency_[c]; }
  std::uint64_t vertex_count() const { return vertex_count_; }
  std::uint64_t edge_count() const { return edge_count_; }
  // Index of the class holding a ring element.
  std::size_t class_of(std::uint64_t x) const;

 private:
  QuotientGraph() = default;
  Modulus modulus_ = Modulus::Factorize(2);
  std::vector<GcdClass> classes_;
  std::vector<std::vector<std::uint32_t>> adjacency_;
  std::uint64_t vertex_count_ = 0;
  std::uint64_t edge_count_ = 0;

  friend std::vector<std::uint32_t> QuotientEccentricities(const QuotientGraph& q);
};

// Class-level eccentricities computed on the compressed graph alone: BFS
// between distinct classes, plus the within-class distance (1 if self-closed,
// else 2) for classes with at least two members.
std::vector<std::uint32_t> QuotientEccentricities(const QuotientGraph& q);

enum class ExportFormat { kDot, kEdges, kJson };
ExportFormat ParseExportFormat(std::string_view name);

std::string Export(const ZeroDivisorGraph& g, ExportFormat format);
std::string Export(const QuotientGraph& q, ExportFormat format);

}  // namespace zdi
