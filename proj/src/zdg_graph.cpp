#include "zdi/zdg_graph.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "zdi/errors.hpp"

namespace zdi {

namespace {

// m | a*b without forming the product.
bool DividesProduct(std::uint64_t m, std::uint64_t a, std::uint64_t b) {
  return b % (m / std::gcd(m, a)) == 0;
}

std::vector<std::uint64_t> ProperDivisors(const Modulus& m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d : Divisors(m)) {
    if (d != 1 && d != m.value()) out.push_back(d);
  }
  return out;
}

std::string CapMessage(const char* what, std::uint64_t count, std::uint64_t cap) {
  return std::string(what) + " count " + std::to_string(count) + " exceeds the cap of " + std::to_string(cap) +
         " (raise ZDI_VERTEX_CAP / --vertex-cap or use the quotient path)";
}

}  // namespace

std::uint64_t VertexCapFromEnv() {
  const char* raw = std::getenv("ZDI_VERTEX_CAP");
  if (raw == nullptr || *raw == '\0') return kDefaultVertexCap;
  char* end = nullptr;
  unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end != '\0' || v == 0) Fail(ErrorKind::kInvalidArgument, std::string("bad ZDI_VERTEX_CAP: ") + raw);
  return v;
}

SimpleGraph SimpleGraph::FromEdges(std::vector<std::uint64_t> labels,
                                   std::vector<std::pair<std::uint64_t, std::uint64_t>> edges) {
  SimpleGraph g;
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) {
    Fail(ErrorKind::kInvalidArgument, "duplicate vertex label");
  }
  g.labels_ = std::move(labels);
  std::vector<std::vector<std::uint32_t>> adj(g.labels_.size());
  for (auto [a, b] : edges) {
    if (a == b) Fail(ErrorKind::kInvalidArgument, "loop at vertex " + std::to_string(a));
    auto ia = static_cast<std::uint32_t>(g.index_of(a));
    auto ib = static_cast<std::uint32_t>(g.index_of(b));
    adj[ia].push_back(ib);
    adj[ib].push_back(ia);
  }
  g.offsets_.assign(1, 0);
  for (auto& list : adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    g.neighbors_.insert(g.neighbors_.end(), list.begin(), list.end());
    g.offsets_.push_back(g.neighbors_.size());
  }
  return g;
}

std::size_t SimpleGraph::index_of(std::uint64_t label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) Fail(ErrorKind::kInvalidArgument, "no vertex " + std::to_string(label));
  return static_cast<std::size_t>(it - labels_.begin());
}

bool SimpleGraph::adjacent(std::size_t a, std::size_t b) const {
  auto n = neighbors(a);
  return std::binary_search(n.begin(), n.end(), static_cast<std::uint32_t>(b));
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> SimpleGraph::edge_list() const {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  out.reserve(edge_count());
  for (std::size_t v = 0; v < size(); ++v) {
    for (std::uint32_t u : neighbors(v)) {
      if (u > v) out.emplace_back(labels_[v], labels_[u]);
    }
  }
  return out;
}

std::vector<std::uint64_t> Degrees(const SimpleGraph& g) {
  std::vector<std::uint64_t> out(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) out[v] = g.degree(v);
  return out;
}

std::vector<int> BfsDistances(const SimpleGraph& g, std::size_t source) {
  std::vector<int> dist(g.size(), -1);
  std::vector<std::uint32_t> queue;
  queue.reserve(g.size());
  dist[source] = 0;
  queue.push_back(static_cast<std::uint32_t>(source));
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::uint32_t v = queue[head];
    for (std::uint32_t u : g.neighbors(v)) {
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
  }
  return dist;
}

std::vector<std::uint32_t> Eccentricities(const SimpleGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::uint32_t> ecc(n, 0);
  if (n <= 1) return ecc;

  std::atomic<std::size_t> next{0};
  std::atomic<bool> disconnected{false};
  auto worker = [&] {
    std::vector<int> dist(n);
    std::vector<std::uint32_t> queue(n);
    for (std::size_t s = next++; s < n && !disconnected; s = next++) {
      std::fill(dist.begin(), dist.end(), -1);
      dist[s] = 0;
      queue[0] = static_cast<std::uint32_t>(s);
      std::size_t tail = 1;
      for (std::size_t head = 0; head < tail; ++head) {
        std::uint32_t v = queue[head];
        for (std::uint32_t u : g.neighbors(v)) {
          if (dist[u] < 0) {
            dist[u] = dist[v] + 1;
            queue[tail++] = u;
          }
        }
      }
      if (tail != n) {
        disconnected = true;
        return;
      }
      ecc[s] = static_cast<std::uint32_t>(dist[queue[tail - 1]]);
    }
  };

  unsigned threads = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                     static_cast<unsigned>(n / 256 + 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (disconnected) Fail(ErrorKind::kInternal, "graph is disconnected; eccentricity is undefined");
  return ecc;
}

std::uint32_t Diameter(const SimpleGraph& g) {
  auto ecc = Eccentricities(g);
  return ecc.empty() ? 0 : *std::max_element(ecc.begin(), ecc.end());
}

ZeroDivisorGraph ZeroDivisorGraph::Build(const Modulus& m, const BuildOptions& options) {
  const std::uint64_t vertex_count = ZeroDivisorCount(m);
  const std::uint64_t vertex_cap = std::min<std::uint64_t>(options.vertex_cap, std::numeric_limits<std::uint32_t>::max());
  if (vertex_count > vertex_cap) Fail(ErrorKind::kCapExceeded, CapMessage("vertex", vertex_count, vertex_cap));

  const auto divisors = ProperDivisors(m);
  const std::uint64_t mv = m.value();

  // Edge count from class sizes before anything is materialised.
  std::vector<std::uint64_t> sizes;
  for (std::uint64_t d : divisors) sizes.push_back(EulerPhi(mv / d));
  unsigned __int128 edges = 0;
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    if (DividesProduct(mv, divisors[i], divisors[i])) edges += static_cast<unsigned __int128>(sizes[i]) * (sizes[i] - 1) / 2;
    for (std::size_t j = i + 1; j < divisors.size(); ++j) {
      if (DividesProduct(mv, divisors[i], divisors[j])) edges += static_cast<unsigned __int128>(sizes[i]) * sizes[j];
    }
  }
  if (edges > options.edge_cap) {
    Fail(ErrorKind::kCapExceeded, CapMessage("edge", static_cast<std::uint64_t>(edges), options.edge_cap));
  }

  SimpleGraph g;
  std::vector<std::vector<std::uint64_t>> members;
  for (std::uint64_t d : divisors) {
    members.push_back(GcdClassMembers(m, d));
    g.labels_.insert(g.labels_.end(), members.back().begin(), members.back().end());
  }
  std::sort(g.labels_.begin(), g.labels_.end());

  std::vector<std::vector<std::uint32_t>> member_index(divisors.size());
  for (std::size_t c = 0; c < divisors.size(); ++c) {
    for (std::uint64_t x : members[c]) member_index[c].push_back(static_cast<std::uint32_t>(g.index_of(x)));
  }

  // Every member of class c sees the same set, minus itself when c is self-closed.
  std::vector<std::vector<std::uint32_t>> shared(divisors.size());
  for (std::size_t c = 0; c < divisors.size(); ++c) {
    for (std::size_t k = 0; k < divisors.size(); ++k) {
      if (DividesProduct(mv, divisors[c], divisors[k])) {
        shared[c].insert(shared[c].end(), member_index[k].begin(), member_index[k].end());
      }
    }
    std::sort(shared[c].begin(), shared[c].end());
  }

  std::vector<std::size_t> class_of_vertex(g.labels_.size());
  for (std::size_t c = 0; c < divisors.size(); ++c) {
    for (std::uint32_t v : member_index[c]) class_of_vertex[v] = c;
  }
  g.offsets_.assign(1, 0);
  g.neighbors_.reserve(static_cast<std::size_t>(edges) * 2);
  for (std::size_t v = 0; v < g.labels_.size(); ++v) {
    for (std::uint32_t u : shared[class_of_vertex[v]]) {
      if (u != v) g.neighbors_.push_back(u);
    }
    g.offsets_.push_back(g.neighbors_.size());
  }
  if (g.edge_count() != edges) Fail(ErrorKind::kInternal, "edge count disagrees with class-size prediction");
  return ZeroDivisorGraph(m, std::move(g));
}

QuotientGraph QuotientGraph::Build(const Modulus& m) {
  QuotientGraph q;
  q.modulus_ = m;
  const auto divisors = ProperDivisors(m);
  if (divisors.size() > kQuotientClassCap) {
    Fail(ErrorKind::kCapExceeded, "quotient class count " + std::to_string(divisors.size()) + " exceeds the cap of " +
                                      std::to_string(kQuotientClassCap));
  }
  const std::uint64_t mv = m.value();
  for (std::uint64_t d : divisors) {
    q.classes_.push_back({d, EulerPhi(mv / d), DividesProduct(mv, d, d), 0, 0});
  }
  q.adjacency_.resize(q.classes_.size());
  for (std::size_t c = 0; c < q.classes_.size(); ++c) {
    for (std::size_t k = 0; k < q.classes_.size(); ++k) {
      if (DividesProduct(mv, divisors[c], divisors[k])) q.adjacency_[c].push_back(static_cast<std::uint32_t>(k));
    }
  }
  unsigned __int128 degree_sum = 0;
  for (std::size_t c = 0; c < q.classes_.size(); ++c) {
    auto& cls = q.classes_[c];
    for (std::uint32_t k : q.adjacency_[c]) {
      cls.degree += (k == c) ? cls.size - 1 : q.classes_[k].size;
    }
    q.vertex_count_ += cls.size;
    degree_sum += static_cast<unsigned __int128>(cls.size) * cls.degree;
  }
  q.edge_count_ = static_cast<std::uint64_t>(degree_sum / 2);
  auto ecc = QuotientEccentricities(q);
  for (std::size_t c = 0; c < q.classes_.size(); ++c) q.classes_[c].eccentricity = ecc[c];
  return q;
}

std::size_t QuotientGraph::class_of(std::uint64_t x) const {
  std::uint64_t d = std::gcd(x, modulus_.value());
  auto it = std::lower_bound(classes_.begin(), classes_.end(), d,
                             [](const GcdClass& c, std::uint64_t v) { return c.divisor < v; });
  if (it == classes_.end() || it->divisor != d) {
    Fail(ErrorKind::kInvalidArgument, std::to_string(x) + " is not a nonzero zero-divisor");
  }
  return static_cast<std::size_t>(it - classes_.begin());
}

std::vector<std::uint32_t> QuotientEccentricities(const QuotientGraph& q) {
  const std::size_t n = q.classes_.size();
  std::vector<std::uint32_t> ecc(n, 0);
  if (q.vertex_count_ <= 1) return ecc;
  std::vector<int> dist(n);
  std::vector<std::size_t> queue;
  for (std::size_t s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    queue.assign(1, s);
    dist[s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      std::size_t c = queue[head];
      for (std::uint32_t k : q.adjacency_[c]) {
        if (dist[k] < 0) {
          dist[k] = dist[c] + 1;
          queue.push_back(k);
        }
      }
    }
    if (queue.size() != n) Fail(ErrorKind::kInternal, "quotient graph is disconnected");
    int e = dist[queue.back()];
    const auto& cls = q.classes_[s];
    if (cls.size >= 2) e = std::max(e, cls.self_closed ? 1 : 2);
    ecc[s] = static_cast<std::uint32_t>(e);
  }
  return ecc;
}

ExportFormat ParseExportFormat(std::string_view name) {
  if (name == "dot") return ExportFormat::kDot;
  if (name == "edges") return ExportFormat::kEdges;
  if (name == "json") return ExportFormat::kJson;
  Fail(ErrorKind::kInvalidArgument, "unknown export format '" + std::string(name) + "' (expected dot, edges or json)");
}

std::string Export(const ZeroDivisorGraph& zg, ExportFormat format) {
  const SimpleGraph& g = zg.graph();
  const std::uint64_t m = zg.modulus().value();
  std::ostringstream out;
  switch (format) {
    case ExportFormat::kEdges: {
      bool first = true;
      for (auto [u, v] : g.edge_list()) {
        out << (first ? "" : "\n") << u << ' ' << v;
        first = false;
      }
      break;
    }
    case ExportFormat::kDot: {
      out << "graph Z_" << m << " {\n";
      for (std::uint64_t label : g.labels()) out << "  " << label << ";\n";
      for (auto [u, v] : g.edge_list()) out << "  " << u << " -- " << v << ";\n";
      out << "}";
      break;
    }
    case ExportFormat::kJson: {
      nlohmann::ordered_json j;
      j["modulus"] = m;
      j["vertices"] = g.labels();
      auto edges = nlohmann::ordered_json::array();
      for (auto [u, v] : g.edge_list()) edges.push_back({u, v});
      j["edges"] = edges;
      auto ecc = Eccentricities(g);
      nlohmann::ordered_json degrees = nlohmann::ordered_json::object();
      nlohmann::ordered_json eccentricities = nlohmann::ordered_json::object();
      for (std::size_t v = 0; v < g.size(); ++v) {
        degrees[std::to_string(g.label(v))] = g.degree(v);
        eccentricities[std::to_string(g.label(v))] = ecc[v];
      }
      j["degrees"] = degrees;
      j["eccentricities"] = eccentricities;
      out << j.dump(2);
      break;
    }
  }
  return out.str();
}

std::string Export(const QuotientGraph& q, ExportFormat format) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  for (std::size_t c = 0; c < q.classes().size(); ++c) {
    for (std::uint32_t k : q.adjacent(c)) {
      if (k >= c) pairs.emplace_back(q.classes()[c].divisor, q.classes()[k].divisor);
    }
  }
  std::ostringstream out;
  switch (format) {
    case ExportFormat::kEdges: {
      for (std::size_t i = 0; i < pairs.size(); ++i) out << (i ? "\n" : "") << pairs[i].first << ' ' << pairs[i].second;
      break;
    }
    case ExportFormat::kDot: {
      out << "graph Z_" << q.modulus().value() << "_classes {\n";
      for (const auto& c : q.classes()) {
        out << "  d" << c.divisor << " [label=\"d=" << c.divisor << " size=" << c.size
            << (c.self_closed ? " closed" : "") << "\"];\n";
      }
      for (auto [a, b] : pairs) out << "  d" << a << " -- d" << b << ";\n";
      out << "}";
      break;
    }
    case ExportFormat::kJson: {
      nlohmann::ordered_json j;
      j["modulus"] = q.modulus().value();
      j["vertex_count"] = q.vertex_count();
      j["edge_count"] = q.edge_count();
      auto classes = nlohmann::ordered_json::array();
      for (const auto& c : q.classes()) {
        classes.push_back({{"divisor", c.divisor},
                           {"size", c.size},
                           {"self_closed", c.self_closed},
                           {"degree", c.degree},
                           {"eccentricity", c.eccentricity}});
      }
      j["classes"] = classes;
      auto adjacency = nlohmann::ordered_json::array();
      for (auto [a, b] : pairs) adjacency.push_back({a, b});
      j["adjacency"] = adjacency;
      out << j.dump(2);
      break;
    }
  }
  return out.str();
}

}  // namespace zdi
