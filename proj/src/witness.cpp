#include "posetc/witness.hpp"

#include <tuple>

#include "posetc/cayley.hpp"
#include "posetc/lattice.hpp"

namespace posetc {

namespace {

bool valid_indices(const FinitePoset& p, const OrderWitness& w,
                   std::size_t elements, std::size_t sets) {
  if (w.elements.size() != elements || w.sets.size() != sets) return false;
  for (std::size_t e : w.elements) {
    if (e >= p.size()) return false;
  }
  for (const auto& s : w.sets) {
    if (!s.empty() && s.members().back() >= p.size()) return false;
  }
  return true;
}

}  // namespace

bool replays(const FinitePoset& p, const OrderWitness& w, std::size_t cap) {
  switch (w.law) {
    case Law::Antisymmetry: {
      if (!valid_indices(p, w, 0, 2)) return false;
      const auto& b = w.sets[0];
      const auto& c = w.sets[1];
      return b != c && subset_leq(p, b, c) && subset_leq(p, c, b);
    }
    case Law::EmbeddingForward:
    case Law::EmbeddingBackward: {
      if (!valid_indices(p, w, 2, 0)) return false;
      const auto a = w.elements[0];
      const auto b = w.elements[1];
      const bool maps_below = map_leq(cayley_map(p, a), cayley_map(p, b));
      return w.law == Law::EmbeddingForward ? p.leq(a, b) && !maps_below
                                            : !p.leq(a, b) && maps_below;
    }
    case Law::JoinHomomorphism: {
      if (!valid_indices(p, w, 3, 0)) return false;
      const auto tables = lattice_tables(p);
      if (!tables.is_lattice) return false;
      const auto [a, b, x] =
          std::tuple{w.elements[0], w.elements[1], w.elements[2]};
      const AntichainLattice lattice(antichain_poset(p, cap));
      const auto image = cayley_map(p, (*tables.join)(a, b))(x);
      return image != lattice.join(cayley_map(p, a)(x), cayley_map(p, b)(x));
    }
    case Law::LatticeJoin: {
      if (!valid_indices(p, w, 2, 1)) return false;
      const auto ub = minimal_upper_bounds(p, w.elements[0], w.elements[1]);
      return ub.size() != 1 && ub == w.sets[0];
    }
    case Law::LatticeMeet: {
      if (!valid_indices(p, w, 2, 1)) return false;
      const auto a = w.elements[0];
      const auto x = w.elements[1];
      const auto lb = maximal_lower_bounds(p, a, x);
      if (lb.size() != 1) return lb == w.sets[0];
      // singleton-meet form: f_a(x) recorded, differs from {a ^ x}
      return cayley_map(p, a)(x).members() == w.sets[0] && w.sets[0] != lb;
    }
  }
  return false;
}

std::string describe(const FinitePoset& p, const OrderWitness& w) {
  auto el = [&](std::size_t i) {
    return i < w.elements.size() ? p.name(w.elements[i]) : std::string("?");
  };
  auto set = [&](std::size_t i) {
    return i < w.sets.size() ? format_set(p, w.sets[i]) : std::string("?");
  };
  switch (w.law) {
    case Law::Antisymmetry:
      return set(0) + " <= " + set(1) + " and " + set(1) + " <= " + set(0) +
             " but they differ";
    case Law::EmbeddingForward:
      return el(0) + " <= " + el(1) + " but not f_" + el(0) + " <= f_" + el(1);
    case Law::EmbeddingBackward:
      return "f_" + el(0) + " <= f_" + el(1) + " but not " + el(0) + " <= " +
             el(1);
    case Law::JoinHomomorphism:
      return "f_(" + el(0) + " join " + el(1) + ")(" + el(2) +
             ") differs from (f_" + el(0) + " join f_" + el(1) + ")(" + el(2) +
             ")";
    case Law::LatticeJoin:
      return el(0) + ", " + el(1) + " have minimal upper bounds " + set(0);
    case Law::LatticeMeet:
      return el(0) + ", " + el(1) + ": maximal lower bounds / f_" + el(0) +
             "(" + el(1) + ") = " + set(0) + " is not a single meet";
  }
  return std::string(law_name(w.law));
}

}  // namespace posetc
