#include "zdi/indices.hpp"

#include <algorithm>
#include <map>

#include "zdi/errors.hpp"

namespace zdi {

namespace {

void RequireVertices(std::size_t n) {
  if (n == 0) Fail(ErrorKind::kUndefinedIndex, "undefined: the graph has no vertices (Z_m is a field)");
}

void RequirePositiveEccentricities(std::span<const std::uint32_t> ecc) {
  RequireVertices(ecc.size());
  if (std::find(ecc.begin(), ecc.end(), 0u) != ecc.end()) {
    Fail(ErrorKind::kUndefinedIndex, "undefined: eccentricity 0 (single-vertex graph) makes M(v)/e(v) undefined");
  }
}

void CheckSize(const SimpleGraph& g, std::span<const std::uint32_t> ecc) {
  if (ecc.size() != g.size()) Fail(ErrorKind::kInvalidArgument, "eccentricity vector does not match the graph");
}

std::vector<std::uint32_t> ClassEccentricities(const QuotientGraph& q) {
  std::vector<std::uint32_t> ecc;
  for (const auto& c : q.classes()) ecc.push_back(c.eccentricity);
  return ecc;
}

}  // namespace

const char* ToString(IndexKind kind) {
  switch (kind) {
    case IndexKind::kEci: return "eci";
    case IndexKind::kAeci: return "aeci";
    case IndexKind::kEdiz: return "ediz";
  }
  return "?";
}

const char* ToString(Method method) {
  switch (method) {
    case Method::kExplicit: return "explicit";
    case Method::kQuotient: return "quotient";
    case Method::kClass: return "class";
    case Method::kPaper: return "paper";
  }
  return "?";
}

IndexKind ParseIndexKind(std::string_view name) {
  if (name == "eci") return IndexKind::kEci;
  if (name == "aeci") return IndexKind::kAeci;
  if (name == "ediz") return IndexKind::kEdiz;
  Fail(ErrorKind::kInvalidArgument, "unknown index '" + std::string(name) + "'");
}

Method ParseMethod(std::string_view name) {
  if (name == "explicit") return Method::kExplicit;
  if (name == "quotient") return Method::kQuotient;
  if (name == "class") return Method::kClass;
  if (name == "paper") return Method::kPaper;
  Fail(ErrorKind::kInvalidArgument, "unknown method '" + std::string(name) + "'");
}

std::string IndexValue::ToString() const {
  if (const auto* q = std::get_if<ExactRational>(&value)) return q->ToString();
  return std::get<FactoredSum>(value).ToString();
}

NeighborStats NeighborStatsOf(const SimpleGraph& g, std::size_t v) {
  NeighborStats stats;
  std::map<std::uint64_t, std::uint64_t> multiplicity;
  for (std::uint32_t u : g.neighbors(v)) {
    stats.sum += BigFromU64(g.degree(u));
    ++multiplicity[g.degree(u)];
  }
  for (auto [degree, count] : multiplicity) stats.product.MultiplyPower(BigFromU64(degree), BigFromU64(count));
  stats.isolated = g.degree(v) == 0;
  return stats;
}

BigInt Eci(const SimpleGraph& g, std::span<const std::uint32_t> ecc) {
  CheckSize(g, ecc);
  RequireVertices(g.size());
  BigInt total = 0;
  for (std::size_t v = 0; v < g.size(); ++v) total += BigFromU64(g.degree(v) * ecc[v]);
  return total;
}

ExactRational Aeci(const SimpleGraph& g, std::span<const std::uint32_t> ecc, double bit_limit) {
  CheckSize(g, ecc);
  RequirePositiveEccentricities(ecc);
  // Twins repeat the same product; expand each distinct one once.
  std::map<std::string, ExactRational> expanded;
  ExactRational total;
  for (std::size_t v = 0; v < g.size(); ++v) {
    PowerProduct product = NeighborStatsOf(g, v).product;
    auto key = product.ToString();
    auto it = expanded.find(key);
    if (it == expanded.end()) it = expanded.emplace(key, product.Expand(bit_limit)).first;
    total += it->second * ExactRational(BigInt(1), BigInt(ecc[v]));
  }
  return total;
}

ExactRational Ediz(const SimpleGraph& g, std::span<const std::uint32_t> ecc) {
  CheckSize(g, ecc);
  RequirePositiveEccentricities(ecc);
  ExactRational total;
  for (std::size_t v = 0; v < g.size(); ++v) {
    total += ExactRational(NeighborStatsOf(g, v).sum, BigInt(ecc[v]));
  }
  return total;
}

FactoredSum AeciFactored(const SimpleGraph& g, std::span<const std::uint32_t> ecc) {
  CheckSize(g, ecc);
  RequirePositiveEccentricities(ecc);
  std::map<std::pair<std::string, std::uint32_t>, std::pair<PowerProduct, std::uint64_t>> groups;
  for (std::size_t v = 0; v < g.size(); ++v) {
    PowerProduct product = NeighborStatsOf(g, v).product;
    auto key = std::make_pair(product.ToString(), ecc[v]);
    auto [it, inserted] = groups.try_emplace(key, std::move(product), 0);
    ++it->second.second;
  }
  FactoredSum out;
  for (auto& [key, group] : groups) {
    group.first.MultiplyScalar(ExactRational(BigFromU64(group.second), BigInt(key.second)));
    out.Add(std::move(group.first));
  }
  return out;
}

BigInt Eci(const SimpleGraph& g) { return Eci(g, Eccentricities(g)); }
ExactRational Aeci(const SimpleGraph& g, double bit_limit) { return Aeci(g, Eccentricities(g), bit_limit); }
ExactRational Ediz(const SimpleGraph& g) { return Ediz(g, Eccentricities(g)); }

NeighborStats ClassNeighborStats(const QuotientGraph& q, std::size_t c) {
  NeighborStats stats;
  const auto& classes = q.classes();
  for (std::uint32_t k : q.adjacent(c)) {
    std::uint64_t count = (k == c) ? classes[c].size - 1 : classes[k].size;
    BigInt degree = BigFromU64(classes[k].degree);
    stats.sum += BigFromU64(count) * degree;
    stats.product.MultiplyPower(degree, BigFromU64(count));
  }
  stats.isolated = classes[c].degree == 0;
  return stats;
}

BigInt Eci(const QuotientGraph& q) {
  RequireVertices(q.vertex_count());
  BigInt total = 0;
  for (const auto& c : q.classes()) total += BigFromU64(c.size) * BigFromU64(c.degree) * BigInt(c.eccentricity);
  return total;
}

FactoredSum AeciFactored(const QuotientGraph& q) {
  RequirePositiveEccentricities(ClassEccentricities(q));
  FactoredSum out;
  for (std::size_t c = 0; c < q.classes().size(); ++c) {
    const auto& cls = q.classes()[c];
    PowerProduct term = ClassNeighborStats(q, c).product;
    term.MultiplyScalar(ExactRational(BigFromU64(cls.size), BigInt(cls.eccentricity)));
    out.Add(std::move(term));
  }
  return out;
}

ExactRational Aeci(const QuotientGraph& q, double bit_limit) { return AeciFactored(q).Expand(bit_limit); }

ExactRational Ediz(const QuotientGraph& q) {
  RequirePositiveEccentricities(ClassEccentricities(q));
  ExactRational total;
  for (std::size_t c = 0; c < q.classes().size(); ++c) {
    const auto& cls = q.classes()[c];
    total += ExactRational(BigFromU64(cls.size) * ClassNeighborStats(q, c).sum, BigInt(cls.eccentricity));
  }
  return total;
}

}  // namespace zdi
