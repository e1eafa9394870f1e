#include "posetc/cayley.hpp"

#include <stdexcept>
#include <utility>

namespace posetc {

CayleyMap::CayleyMap(FinitePoset base, std::vector<Antichain> values)
    : base_(std::move(base)), values_(std::move(values)) {
  if (values_.size() != base_.size()) {
    throw std::invalid_argument("map must assign a value to every element");
  }
}

CayleyMap cayley_map(const FinitePoset& p, std::size_t a) {
  if (a >= p.size()) throw std::out_of_range("element index outside poset");
  std::vector<Antichain> values;
  values.reserve(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) {
    values.emplace_back(p, maximal_elements(p, lower_cone(p, a, x)));
  }
  return CayleyMap(p, std::move(values));
}

bool map_leq(const CayleyMap& f, const CayleyMap& g) {
  if (!(f.base() == g.base())) {
    throw Error(ErrorKind::BaseMismatch, "maps are over different posets");
  }
  const auto& p = f.base();
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (!subset_leq(p, f(x).members(), g(x).members())) return false;
  }
  return true;
}

MapFamily embed(const FinitePoset& p) {
  MapFamily family{p, {}};
  family.maps.reserve(p.size());
  for (std::size_t a = 0; a < p.size(); ++a) {
    family.maps.push_back(cayley_map(p, a));
  }
  return family;
}

std::optional<OrderWitness> verify_embedding(const MapFamily& family) {
  const auto& p = family.base;
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = 0; b < p.size(); ++b) {
      const bool below = p.leq(a, b);
      const bool maps_below = map_leq(family.maps[a], family.maps[b]);
      if (below && !maps_below) {
        return OrderWitness{Law::EmbeddingForward, {a, b}, {}};
      }
      if (!below && maps_below) {
        return OrderWitness{Law::EmbeddingBackward, {a, b}, {}};
      }
    }
  }
  return std::nullopt;
}

std::optional<OrderWitness> verify_embedding(const FinitePoset& p) {
  return verify_embedding(embed(p));
}

bool is_injective(const MapFamily& family) {
  const auto& maps = family.maps;
  for (std::size_t a = 0; a < maps.size(); ++a) {
    for (std::size_t b = a + 1; b < maps.size(); ++b) {
      if (maps[a] == maps[b]) return false;
    }
  }
  return true;
}

FinitePoset image_subposet(const FinitePoset& p) {
  const auto family = embed(p);
  const std::size_t n = p.size();
  std::vector<std::string> names;
  names.reserve(n);
  for (const auto& name : p.names()) names.push_back("f_" + name);
  std::vector<Bits> leq(n, Bits(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (map_leq(family.maps[a], family.maps[b])) leq[a].set(b);
    }
  }
  return FinitePoset::from_matrix(std::move(names), std::move(leq));
}

}  // namespace posetc
