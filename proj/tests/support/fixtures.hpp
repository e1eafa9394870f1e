#pragma once

#include <string>
#include <vector>

#include "posetc/poset.hpp"

namespace posetc::testing {

inline FinitePoset make(std::vector<std::string> names,
                        std::vector<RelationPair> pairs) {
  return FinitePoset::from_relations(std::move(names), pairs);
}

/// Bottom 0, atoms a b, coatoms c d, top 1; both atoms below both coatoms.
inline FinitePoset fig1() {
  return make({"0", "a", "b", "c", "d", "1"},
              {{"0", "a"}, {"0", "b"}, {"a", "c"}, {"a", "d"},
               {"b", "c"}, {"b", "d"}, {"c", "1"}, {"d", "1"}});
}

inline FinitePoset m3() {
  return make({"0", "a", "b", "c", "1"},
              {{"0", "a"}, {"0", "b"}, {"0", "c"},
               {"a", "1"}, {"b", "1"}, {"c", "1"}});
}

/// 0 < a, b < 1 with a, b incomparable.
inline FinitePoset boolean4() {
  return make({"0", "a", "b", "1"},
              {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
}

inline std::vector<std::string> numbered(std::size_t n, const std::string& prefix) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
  return names;
}

inline FinitePoset chain(std::size_t n) {
  auto names = numbered(n, "c");
  std::vector<RelationPair> pairs;
  for (std::size_t i = 0; i + 1 < n; ++i) pairs.emplace_back(names[i], names[i + 1]);
  return make(names, pairs);
}

inline FinitePoset antichain(std::size_t n) { return make(numbered(n, "p"), {}); }

/// Subsets of {0..k-1} ordered by inclusion; element i is the bitmask i.
inline FinitePoset boolean_lattice(std::size_t k) {
  const std::size_t n = std::size_t{1} << k;
  auto names = numbered(n, "s");
  std::vector<RelationPair> pairs;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && (a & b) == a) pairs.emplace_back(names[a], names[b]);
    }
  }
  return make(names, pairs);
}

}  // namespace posetc::testing
