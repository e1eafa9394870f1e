#pragma once

#include <boost/dynamic_bitset.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "posetc/error.hpp"

namespace posetc {

using Bits = boost::dynamic_bitset<std::uint64_t>;

/// A subset of a poset's elements, kept as a sorted, duplicate-free index
/// list. The parent poset is not stored; callers pass it alongside.
class ElementSet {
 public:
  ElementSet() = default;
  ElementSet(std::initializer_list<std::size_t> members);
  explicit ElementSet(std::vector<std::size_t> members);

  static ElementSet from_bits(const Bits& bits);
  Bits to_bits(std::size_t universe) const;

  std::span<const std::size_t> members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(std::size_t element) const;

  bool operator==(const ElementSet&) const = default;
  /// Canonical order: by cardinality, then lexicographically on indices.
  std::strong_ordering operator<=>(const ElementSet& other) const;

 private:
  std::vector<std::size_t> members_;
};

enum class Law {
  Antisymmetry,
  EmbeddingForward,
  EmbeddingBackward,
  JoinHomomorphism,
  LatticeJoin,
  LatticeMeet,
};

std::string_view law_name(Law law);

/// Counterexample record returned by the verifiers. Which fields are populated
/// depends on the law:
///   Antisymmetry       sets = {B, C} with B <= C, C <= B, B != C
///   EmbeddingForward   elements = {a, b} with a <= b but not f_a <= f_b
///   EmbeddingBackward  elements = {a, b} with f_a <= f_b but not a <= b
///   JoinHomomorphism   elements = {a, b, x}: f_{a v b}(x) != (f_a v f_b)(x)
///   LatticeJoin/Meet   elements = {a, b}, sets = {bounds}; for the
///                      singleton-meet check, elements = {a, x},
///                      sets = {f_a(x)}
struct OrderWitness {
  Law law;
  std::vector<std::size_t> elements;
  std::vector<ElementSet> sets;

  bool operator==(const OrderWitness&) const = default;
};

/// Which partial-order axiom a relation matrix breaks, and where.
struct PartialOrderViolation {
  enum class Axiom { Reflexivity, Antisymmetry, Transitivity };
  Axiom axiom;
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
};

/// Scans a square relation matrix (leq[i][j] means i <= j) for the first
/// violated axiom. Transitivity is the full n^3 triple scan.
std::optional<PartialOrderViolation> check_partial_order(
    std::span<const Bits> leq);

using RelationPair = std::pair<std::string, std::string>;

/// Finite poset over named elements. Immutable once built; copies share the
/// underlying storage.
class FinitePoset {
 public:
  /// The empty poset.
  FinitePoset();

  /// Reflexive-transitive closure of `pairs` (each meaning first < second).
  /// Throws Error{InvalidName, DuplicateElement, UnknownElement} or
  /// CycleError.
  static FinitePoset from_relations(std::vector<std::string> names,
                                    std::span<const RelationPair> pairs);

  /// Adopts an explicit order matrix, rejecting anything that is not a
  /// partial order with Error{NotPartialOrder}.
  static FinitePoset from_matrix(std::vector<std::string> names,
                                 std::vector<Bits> leq);

  std::size_t size() const;
  const std::vector<std::string>& names() const;
  const std::string& name(std::size_t element) const;
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool leq(std::size_t a, std::size_t b) const;
  bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }
  bool comparable(std::size_t a, std::size_t b) const {
    return leq(a, b) || leq(b, a);
  }

  /// Principal up-set {y | a <= y} and down-set {y | y <= a} as bit rows.
  const Bits& up(std::size_t a) const;
  const Bits& down(std::size_t a) const;

  /// True when both handles refer to the same storage.
  bool same_as(const FinitePoset& other) const { return impl_ == other.impl_; }
  bool operator==(const FinitePoset& other) const;

 private:
  struct Impl;
  explicit FinitePoset(std::shared_ptr<const Impl> impl);

  std::shared_ptr<const Impl> impl_;
};

/// L(a, b) = {x | x <= a and x <= b}.
ElementSet lower_cone(const FinitePoset& p, std::size_t a, std::size_t b);

/// Members of `s` with nothing in `s` strictly above them. Max of the empty
/// set is empty.
ElementSet maximal_elements(const FinitePoset& p, const ElementSet& s);

bool is_antichain(const FinitePoset& p, const ElementSet& s);

/// Transitive reduction in row-major (lower, upper) index order.
std::vector<std::pair<std::size_t, std::size_t>> cover_pairs(
    const FinitePoset& p);

/// Number of pairs (a, b) with a < b.
std::size_t strict_relation_count(const FinitePoset& p);

/// True when no two distinct elements are comparable.
bool is_antichain_poset(const FinitePoset& p);

/// Renders a set as `{a,b}` using element names in index order; `{}` when
/// empty.
std::string format_set(const FinitePoset& p, const ElementSet& s);

}  // namespace posetc
