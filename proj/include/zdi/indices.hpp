#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>

#include "zdi/exact.hpp"
#include "zdi/zdg_graph.hpp"

namespace zdi {

enum class IndexKind { kEci, kAeci, kEdiz };
enum class Method { kExplicit, kQuotient, kClass, kPaper };

const char* ToString(IndexKind kind);
const char* ToString(Method method);
IndexKind ParseIndexKind(std::string_view name);
Method ParseMethod(std::string_view name);

struct IndexValue {
  IndexKind kind = IndexKind::kEci;
  Method method = Method::kExplicit;
  std::variant<ExactRational, FactoredSum> value;

  bool factored() const { return std::holds_alternative<FactoredSum>(value); }
  std::string ToString() const;
};

// Neighbour degree sum S(v) and product M(v), the product kept as
// (degree, multiplicity) powers.
struct NeighborStats {
  BigInt sum;
  PowerProduct product;
  // No neighbours: S = 0, M = 1. Never happens in a connected graph with
  // two or more vertices.
  bool isolated = false;
};

NeighborStats NeighborStatsOf(const SimpleGraph& g, std::size_t v);

// Explicit graphs. The overloads without eccentricities compute them.
// Empty graphs raise kUndefinedIndex; AECI and Ediz also do so when any
// eccentricity is 0 (the single-vertex graph).
BigInt Eci(const SimpleGraph& g, std::span<const std::uint32_t> ecc);
ExactRational Aeci(const SimpleGraph& g, std::span<const std::uint32_t> ecc, double bit_limit = kExpansionBitLimit);
ExactRational Ediz(const SimpleGraph& g, std::span<const std::uint32_t> ecc);
// AECI left factored: vertices with the same (M(v), e(v)) share one term.
FactoredSum AeciFactored(const SimpleGraph& g, std::span<const std::uint32_t> ecc);
BigInt Eci(const SimpleGraph& g);
ExactRational Aeci(const SimpleGraph& g, double bit_limit = kExpansionBitLimit);
ExactRational Ediz(const SimpleGraph& g);

// Quotient graphs: one representative per class, weighted by class size.
NeighborStats ClassNeighborStats(const QuotientGraph& q, std::size_t c);
BigInt Eci(const QuotientGraph& q);
// One factored contribution size * M / e per class.
FactoredSum AeciFactored(const QuotientGraph& q);
ExactRational Aeci(const QuotientGraph& q, double bit_limit = kExpansionBitLimit);
ExactRational Ediz(const QuotientGraph& q);

}  // namespace zdi
