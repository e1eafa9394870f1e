#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "posetc/antichains.hpp"
#include "posetc/cayley.hpp"
#include "posetc/poset.hpp"

namespace posetc {

/// Dense n x n table of element indices.
class OperationTable {
 public:
  explicit OperationTable(std::size_t n) : n_(n), cells_(n * n) {}

  std::size_t size() const { return n_; }
  std::size_t operator()(std::size_t a, std::size_t b) const {
    return cells_.at(a * n_ + b);
  }
  void set(std::size_t a, std::size_t b, std::size_t value) {
    cells_.at(a * n_ + b) = value;
  }

  bool operator==(const OperationTable&) const = default;

 private:
  std::size_t n_;
  std::vector<std::size_t> cells_;
};

/// A pair whose minimal upper bounds (law LatticeJoin) or maximal lower
/// bounds (law LatticeMeet) are not a single element.
struct BoundFailure {
  Law law;
  std::size_t a;
  std::size_t b;
  ElementSet bounds;
};

struct LatticeTables {
  bool is_lattice = false;
  std::optional<OperationTable> join;
  std::optional<OperationTable> meet;
  std::optional<BoundFailure> failure;
};

ElementSet minimal_upper_bounds(const FinitePoset& p, std::size_t a,
                                std::size_t b);
ElementSet maximal_lower_bounds(const FinitePoset& p, std::size_t a,
                                std::size_t b);

/// Join and meet tables when every pair has a unique minimal upper bound and
/// a unique maximal lower bound. Pairs are scanned row-major over a <= b (by
/// index), join before meet; the first non-singleton case is the failure.
LatticeTables lattice_tables(const FinitePoset& p);

/// Checks f_a(x) = {a meet x} for all a, x. Throws Error{NotALattice}.
std::optional<OrderWitness> singleton_meet_check(const FinitePoset& p);

/// Join and meet in (A(P), <=), and pointwise on maps P -> A(P).
class AntichainLattice {
 public:
  /// Throws Error{AntichainOrderNotLattice} when (A(P), <=) is no lattice.
  explicit AntichainLattice(AntichainPoset ap);

  const AntichainPoset& poset() const { return ap_; }
  const OperationTable& join_table() const { return *tables_.join; }
  const OperationTable& meet_table() const { return *tables_.meet; }

  const Antichain& join(const Antichain& x, const Antichain& y) const;
  const Antichain& meet(const Antichain& x, const Antichain& y) const;

  /// Throws Error{BaseMismatch} unless f and g are over the base poset.
  CayleyMap join(const CayleyMap& f, const CayleyMap& g) const;
  CayleyMap meet(const CayleyMap& f, const CayleyMap& g) const;

 private:
  std::size_t index(const Antichain& a) const;
  void check_base(const CayleyMap& f, const CayleyMap& g) const;

  AntichainPoset ap_;
  LatticeTables tables_;
};

CayleyMap pointwise_join(const AntichainPoset& ap, const CayleyMap& f,
                         const CayleyMap& g);
CayleyMap pointwise_meet(const AntichainPoset& ap, const CayleyMap& f,
                         const CayleyMap& g);

enum class LatticeOp { Join, Meet };

struct HomomorphismWitness {
  LatticeOp op;
  std::size_t a;
  std::size_t b;
  /// a v b (or a ^ b for Meet).
  std::size_t combined;
  /// f_{a v b}
  CayleyMap image;
  /// f_a v f_b, computed pointwise in (A(P), <=)
  CayleyMap pointwise;
  /// First x where the two maps differ.
  std::size_t differs_at;
};

struct HomomorphismReport {
  bool holds = true;
  std::optional<HomomorphismWitness> witness;
};

/// Scans pairs a <= b (by index) row-major, testing f_{a v b} = f_a v f_b and
/// then f_{a ^ b} = f_a ^ f_b. Requires both P and (A(P), <=) to be
/// lattices: throws Error{NotALattice} or Error{AntichainOrderNotLattice}, and
/// Error{TooLarge} above the enumeration cap.
HomomorphismReport join_homomorphism_witness(
    const FinitePoset& p, std::size_t cap = kDefaultEnumerationCap);

}  // namespace posetc
