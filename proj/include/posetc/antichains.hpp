#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "posetc/poset.hpp"

namespace posetc {

/// Largest poset for which A(P) is enumerated. |A(P)| can reach 2^n.
inline constexpr std::size_t kDefaultEnumerationCap = 16;

/// A set of pairwise incomparable elements. Construction validates against the
/// parent poset; the parent itself is not retained.
class Antichain {
 public:
  Antichain() = default;
  /// Throws std::invalid_argument if two members are comparable.
  Antichain(const FinitePoset& p, ElementSet members);

  const ElementSet& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  bool operator==(const Antichain&) const = default;
  auto operator<=>(const Antichain&) const = default;

 private:
  ElementSet members_;
};

/// B <= C iff every x in B lies below some y in C. Defined on all subsets,
/// not only antichains.
bool subset_leq(const FinitePoset& p, const ElementSet& b, const ElementSet& c);

/// Every antichain of `p` (including the empty one) in canonical order:
/// ascending size, then lexicographic on sorted indices. Throws
/// Error{TooLarge} when p.size() > cap.
std::vector<Antichain> all_antichains(const FinitePoset& p,
                                      std::size_t cap = kDefaultEnumerationCap);

/// (A(P), <=) materialized as a poset whose element names are the rendered
/// antichains (`{}`, `{a}`, `{a,b}`, ...).
struct AntichainPoset {
  FinitePoset base;
  std::vector<Antichain> antichains;
  FinitePoset order;

  std::optional<std::size_t> index_of(const Antichain& a) const;
};

/// Builds the order by subset_leq over all pairs and passes it through
/// partial-order validation; a non-poset here throws Error{NotPartialOrder}.
AntichainPoset antichain_poset(const FinitePoset& p,
                               std::size_t cap = kDefaultEnumerationCap);

struct PowersetOrderStatus {
  bool is_partial_order = true;
  /// ({b}, {a, b}) for the first comparable pair a < b in row-major order.
  std::optional<std::pair<ElementSet, ElementSet>> witness;
};

/// Whether <= on all of 2^P is a partial order. It is exactly when P is an
/// antichain; otherwise any a < b gives {b} <= {a,b} <= {b}.
PowersetOrderStatus powerset_order_status(
    const FinitePoset& p, std::size_t cap = kDefaultEnumerationCap);

}  // namespace posetc
