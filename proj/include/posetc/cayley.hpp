#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "posetc/antichains.hpp"
#include "posetc/poset.hpp"

namespace posetc {

/// A total map P -> A(P). Antichains are stored by value, so maps exist for
/// posets far beyond the enumeration cap.
class CayleyMap {
 public:
  /// Throws std::invalid_argument unless there is one value per element.
  CayleyMap(FinitePoset base, std::vector<Antichain> values);

  const FinitePoset& base() const { return base_; }
  const std::vector<Antichain>& values() const { return values_; }
  const Antichain& operator()(std::size_t x) const { return values_.at(x); }
  std::size_t size() const { return values_.size(); }

  bool operator==(const CayleyMap& other) const {
    return values_ == other.values_ && base_ == other.base_;
  }

 private:
  FinitePoset base_;
  std::vector<Antichain> values_;
};

/// f_a(x) = Max L(a, x).
CayleyMap cayley_map(const FinitePoset& p, std::size_t a);

/// Pointwise order: f <= g iff f(x) <= g(x) in (A(P), <=) for every x.
/// Throws Error{BaseMismatch} for maps over different posets.
bool map_leq(const CayleyMap& f, const CayleyMap& g);

/// maps[a] = f_a.
struct MapFamily {
  FinitePoset base;
  std::vector<CayleyMap> maps;
};

MapFamily embed(const FinitePoset& p);

/// Checks a <= b <=> f_a <= f_b over all pairs in row-major order and returns
/// the first failure, if any.
std::optional<OrderWitness> verify_embedding(const MapFamily& family);
std::optional<OrderWitness> verify_embedding(const FinitePoset& p);

/// Distinct elements have distinct maps.
bool is_injective(const MapFamily& family);

/// The image {f_a} ordered by map_leq, with nodes named `f_<element>`.
FinitePoset image_subposet(const FinitePoset& p);

}  // namespace posetc
