#include "posetc/lattice.hpp"

#include <utility>

namespace posetc {

ElementSet minimal_upper_bounds(const FinitePoset& p, std::size_t a,
                                std::size_t b) {
  const Bits upper = p.up(a) & p.up(b);
  std::vector<std::size_t> minimal;
  for (auto x = upper.find_first(); x != Bits::npos; x = upper.find_next(x)) {
    Bits below = p.down(x) & upper;
    below.reset(x);
    if (below.none()) minimal.push_back(x);
  }
  return ElementSet(std::move(minimal));
}

ElementSet maximal_lower_bounds(const FinitePoset& p, std::size_t a,
                                std::size_t b) {
  return maximal_elements(p, lower_cone(p, a, b));
}

LatticeTables lattice_tables(const FinitePoset& p) {
  const std::size_t n = p.size();
  OperationTable join(n);
  OperationTable meet(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      auto ub = minimal_upper_bounds(p, a, b);
      if (ub.size() != 1) {
        return {false, std::nullopt, std::nullopt,
                BoundFailure{Law::LatticeJoin, a, b, std::move(ub)}};
      }
      auto lb = maximal_lower_bounds(p, a, b);
      if (lb.size() != 1) {
        return {false, std::nullopt, std::nullopt,
                BoundFailure{Law::LatticeMeet, a, b, std::move(lb)}};
      }
      join.set(a, b, ub.members()[0]);
      join.set(b, a, ub.members()[0]);
      meet.set(a, b, lb.members()[0]);
      meet.set(b, a, lb.members()[0]);
    }
  }
  return {true, std::move(join), std::move(meet), std::nullopt};
}

std::optional<OrderWitness> singleton_meet_check(const FinitePoset& p) {
  const auto tables = lattice_tables(p);
  if (!tables.is_lattice) {
    throw Error(ErrorKind::NotALattice, "poset is not a lattice");
  }
  const auto family = embed(p);
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t x = 0; x < p.size(); ++x) {
      const auto& value = family.maps[a](x).members();
      if (value != ElementSet{(*tables.meet)(a, x)}) {
        return OrderWitness{Law::LatticeMeet, {a, x}, {value}};
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// AntichainLattice

AntichainLattice::AntichainLattice(AntichainPoset ap)
    : ap_(std::move(ap)), tables_(lattice_tables(ap_.order)) {
  if (!tables_.is_lattice) {
    throw Error(ErrorKind::AntichainOrderNotLattice,
                "antichain order is not a lattice");
  }
}

std::size_t AntichainLattice::index(const Antichain& a) const {
  auto i = ap_.index_of(a);
  if (!i) throw std::invalid_argument("not an antichain of the base poset");
  return *i;
}

void AntichainLattice::check_base(const CayleyMap& f,
                                  const CayleyMap& g) const {
  if (!(f.base() == ap_.base) || !(g.base() == ap_.base)) {
    throw Error(ErrorKind::BaseMismatch, "maps are over different posets");
  }
}

const Antichain& AntichainLattice::join(const Antichain& x,
                                        const Antichain& y) const {
  return ap_.antichains[(*tables_.join)(index(x), index(y))];
}

const Antichain& AntichainLattice::meet(const Antichain& x,
                                        const Antichain& y) const {
  return ap_.antichains[(*tables_.meet)(index(x), index(y))];
}

CayleyMap AntichainLattice::join(const CayleyMap& f, const CayleyMap& g) const {
  check_base(f, g);
  std::vector<Antichain> values;
  values.reserve(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) values.push_back(join(f(x), g(x)));
  return CayleyMap(ap_.base, std::move(values));
}

CayleyMap AntichainLattice::meet(const CayleyMap& f, const CayleyMap& g) const {
  check_base(f, g);
  std::vector<Antichain> values;
  values.reserve(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) values.push_back(meet(f(x), g(x)));
  return CayleyMap(ap_.base, std::move(values));
}

CayleyMap pointwise_join(const AntichainPoset& ap, const CayleyMap& f,
                         const CayleyMap& g) {
  return AntichainLattice(ap).join(f, g);
}

CayleyMap pointwise_meet(const AntichainPoset& ap, const CayleyMap& f,
                         const CayleyMap& g) {
  return AntichainLattice(ap).meet(f, g);
}

// ---------------------------------------------------------------------------

namespace {

std::size_t first_difference(const CayleyMap& f, const CayleyMap& g) {
  std::size_t x = 0;
  while (x < f.size() && f(x) == g(x)) ++x;
  return x;
}

}  // namespace

HomomorphismReport join_homomorphism_witness(const FinitePoset& p,
                                             std::size_t cap) {
  const auto tables = lattice_tables(p);
  if (!tables.is_lattice) {
    throw Error(ErrorKind::NotALattice, "poset is not a lattice");
  }
  const AntichainLattice lattice(antichain_poset(p, cap));
  const auto family = embed(p);

  const std::size_t n = p.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      const auto& fa = family.maps[a];
      const auto& fb = family.maps[b];

      const std::size_t j = (*tables.join)(a, b);
      auto joined = lattice.join(fa, fb);
      if (!(joined == family.maps[j])) {
        const auto at = first_difference(family.maps[j], joined);
        return {false, HomomorphismWitness{LatticeOp::Join, a, b, j,
                                           family.maps[j], std::move(joined),
                                           at}};
      }

      const std::size_t m = (*tables.meet)(a, b);
      auto met = lattice.meet(fa, fb);
      if (!(met == family.maps[m])) {
        const auto at = first_difference(family.maps[m], met);
        return {false, HomomorphismWitness{LatticeOp::Meet, a, b, m,
                                           family.maps[m], std::move(met),
                                           at}};
      }
    }
  }
  return {true, std::nullopt};
}

}  // namespace posetc
