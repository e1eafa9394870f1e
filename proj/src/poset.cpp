#include "posetc/poset.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <unordered_map>

namespace posetc {

namespace {

void validate_names(const std::vector<std::string>& names,
                    std::unordered_map<std::string, std::size_t>& index) {
  index.reserve(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) {
    const auto& name = names[i];
    if (name.empty() ||
        std::any_of(name.begin(), name.end(), [](unsigned char c) {
          return std::isspace(c) != 0;
        })) {
      throw Error(ErrorKind::InvalidName,
                  "invalid element name '" + name + "'");
    }
    if (!index.emplace(name, i).second) {
      throw Error(ErrorKind::DuplicateElement,
                  "duplicate element '" + name + "'");
    }
  }
}

std::vector<Bits> transpose(const std::vector<Bits>& rows) {
  const std::size_t n = rows.size();
  std::vector<Bits> cols(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (auto j = rows[i].find_first(); j != Bits::npos;
         j = rows[i].find_next(j)) {
      cols[j].set(i);
    }
  }
  return cols;
}

// Shortest cycle through the generator graph, ties broken by lowest start.
std::vector<std::size_t> shortest_cycle(
    const std::vector<std::vector<std::size_t>>& succ) {
  const std::size_t n = succ.size();
  std::vector<std::size_t> best;
  for (std::size_t start = 0; start < n; ++start) {
    std::vector<std::size_t> parent(n, n);
    std::vector<bool> seen(n, false);
    std::deque<std::size_t> queue{start};
    seen[start] = true;
    std::optional<std::size_t> closing;
    while (!queue.empty() && !closing) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v : succ[u]) {
        if (v == start) {
          closing = u;
          break;
        }
        if (!seen[v]) {
          seen[v] = true;
          parent[v] = u;
          queue.push_back(v);
        }
      }
    }
    if (!closing) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t v = *closing; v != start; v = parent[v]) {
      cycle.push_back(v);
    }
    cycle.push_back(start);
    std::reverse(cycle.begin(), cycle.end());
    if (best.empty() || cycle.size() < best.size()) best = std::move(cycle);
  }
  return best;
}

std::string describe_violation(const PartialOrderViolation& v,
                               const std::vector<std::string>& names) {
  auto nm = [&](std::size_t i) {
    return i < names.size() ? names[i] : std::to_string(i);
  };
  switch (v.axiom) {
    case PartialOrderViolation::Axiom::Reflexivity:
      return "not reflexive at " + nm(v.i);
    case PartialOrderViolation::Axiom::Antisymmetry:
      return "not antisymmetric: " + nm(v.i) + " <= " + nm(v.j) + " <= " +
             nm(v.i);
    case PartialOrderViolation::Axiom::Transitivity:
      return "not transitive: " + nm(v.i) + " <= " + nm(v.j) + " <= " +
             nm(v.k) + " but not " + nm(v.i) + " <= " + nm(v.k);
  }
  return "not a partial order";
}

}  // namespace

CycleError::CycleError(std::vector<std::string> cycle)
    : Error(ErrorKind::CycleDetected,
            [&] {
              std::string msg = "cycle detected:";
              for (const auto& name : cycle) msg += " " + name + " <";
              msg += " " + (cycle.empty() ? std::string() : cycle.front());
              return msg;
            }()),
      cycle_(std::move(cycle)) {}

// ---------------------------------------------------------------------------
// ElementSet

ElementSet::ElementSet(std::initializer_list<std::size_t> members)
    : ElementSet(std::vector<std::size_t>(members)) {}

ElementSet::ElementSet(std::vector<std::size_t> members)
    : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
}

ElementSet ElementSet::from_bits(const Bits& bits) {
  ElementSet s;
  s.members_.reserve(bits.count());
  for (auto i = bits.find_first(); i != Bits::npos; i = bits.find_next(i)) {
    s.members_.push_back(i);
  }
  return s;
}

Bits ElementSet::to_bits(std::size_t universe) const {
  Bits bits(universe);
  for (std::size_t i : members_) bits.set(i);
  return bits;
}

bool ElementSet::contains(std::size_t element) const {
  return std::binary_search(members_.begin(), members_.end(), element);
}

std::strong_ordering ElementSet::operator<=>(const ElementSet& other) const {
  if (auto c = members_.size() <=> other.members_.size(); c != 0) return c;
  return members_ <=> other.members_;
}

std::string_view law_name(Law law) {
  switch (law) {
    case Law::Antisymmetry: return "antisymmetry";
    case Law::EmbeddingForward: return "embedding-forward";
    case Law::EmbeddingBackward: return "embedding-backward";
    case Law::JoinHomomorphism: return "join-homomorphism";
    case Law::LatticeJoin: return "lattice-join";
    case Law::LatticeMeet: return "lattice-meet";
  }
  return "unknown";
}

std::optional<PartialOrderViolation> check_partial_order(
    std::span<const Bits> leq) {
  using Axiom = PartialOrderViolation::Axiom;
  const std::size_t n = leq.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!leq[i].test(i)) return PartialOrderViolation{Axiom::Reflexivity, i};
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (auto j = leq[i].find_next(i); j != Bits::npos;
         j = leq[i].find_next(j)) {
      if (leq[j].test(i)) return PartialOrderViolation{Axiom::Antisymmetry, i, j};
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (auto j = leq[i].find_first(); j != Bits::npos;
         j = leq[i].find_next(j)) {
      if (!leq[j].is_subset_of(leq[i])) {
        const auto k = (leq[j] - leq[i]).find_first();
        return PartialOrderViolation{Axiom::Transitivity, i, j, k};
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// FinitePoset

struct FinitePoset::Impl {
  std::vector<std::string> names;
  std::unordered_map<std::string, std::size_t> index;
  std::vector<Bits> up;
  std::vector<Bits> down;
};

FinitePoset::FinitePoset() : impl_(std::make_shared<const Impl>()) {}

FinitePoset::FinitePoset(std::shared_ptr<const Impl> impl)
    : impl_(std::move(impl)) {}

FinitePoset FinitePoset::from_relations(std::vector<std::string> names,
                                        std::span<const RelationPair> pairs) {
  auto impl = std::make_shared<Impl>();
  validate_names(names, impl->index);
  const std::size_t n = names.size();

  auto lookup = [&](const std::string& token) {
    auto it = impl->index.find(token);
    if (it == impl->index.end()) {
      throw Error(ErrorKind::UnknownElement,
                  "relation references undeclared element '" + token + "'");
    }
    return it->second;
  };

  std::vector<std::vector<std::size_t>> succ(n);
  std::vector<Bits> up(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i) up[i].set(i);
  for (const auto& [lo, hi] : pairs) {
    const std::size_t a = lookup(lo);
    const std::size_t b = lookup(hi);
    if (a == b || !up[a].test(b)) succ[a].push_back(b);
    if (a == b) continue;
    up[a].set(b);
  }

  // Warshall over bit rows.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (i != k && up[i].test(k)) up[i] |= up[k];
    }
  }

  bool cyclic = false;
  for (std::size_t i = 0; i < n && !cyclic; ++i) {
    if (std::find(succ[i].begin(), succ[i].end(), i) != succ[i].end()) {
      cyclic = true;
    }
    for (auto j = up[i].find_next(i); j != Bits::npos && !cyclic;
         j = up[i].find_next(j)) {
      cyclic = up[j].test(i);
    }
  }
  if (cyclic) {
    std::vector<std::string> witness;
    for (std::size_t i : shortest_cycle(succ)) witness.push_back(names[i]);
    throw CycleError(std::move(witness));
  }

  impl->down = transpose(up);
  impl->up = std::move(up);
  impl->names = std::move(names);
  return FinitePoset(std::move(impl));
}

FinitePoset FinitePoset::from_matrix(std::vector<std::string> names,
                                     std::vector<Bits> leq) {
  auto impl = std::make_shared<Impl>();
  validate_names(names, impl->index);
  const std::size_t n = names.size();
  if (leq.size() != n ||
      std::any_of(leq.begin(), leq.end(),
                  [n](const Bits& row) { return row.size() != n; })) {
    throw Error(ErrorKind::NotPartialOrder,
                "order matrix shape does not match element count");
  }
  if (auto violation = check_partial_order(leq)) {
    throw Error(ErrorKind::NotPartialOrder,
                describe_violation(*violation, names));
  }
  impl->down = transpose(leq);
  impl->up = std::move(leq);
  impl->names = std::move(names);
  return FinitePoset(std::move(impl));
}

std::size_t FinitePoset::size() const { return impl_->names.size(); }

const std::vector<std::string>& FinitePoset::names() const {
  return impl_->names;
}

const std::string& FinitePoset::name(std::size_t element) const {
  return impl_->names.at(element);
}

std::optional<std::size_t> FinitePoset::index_of(std::string_view name) const {
  auto it = impl_->index.find(std::string(name));
  if (it == impl_->index.end()) return std::nullopt;
  return it->second;
}

bool FinitePoset::leq(std::size_t a, std::size_t b) const {
  return impl_->up.at(a).test(b);
}

const Bits& FinitePoset::up(std::size_t a) const { return impl_->up.at(a); }

const Bits& FinitePoset::down(std::size_t a) const {
  return impl_->down.at(a);
}

bool FinitePoset::operator==(const FinitePoset& other) const {
  return same_as(other) ||
         (impl_->names == other.impl_->names && impl_->up == other.impl_->up);
}

// ---------------------------------------------------------------------------
// Queries

namespace {

void check_members(const FinitePoset& p, const ElementSet& s) {
  if (!s.empty() && s.members().back() >= p.size()) {
    throw std::out_of_range("element index outside poset");
  }
}

}  // namespace

ElementSet lower_cone(const FinitePoset& p, std::size_t a, std::size_t b) {
  return ElementSet::from_bits(p.down(a) & p.down(b));
}

ElementSet maximal_elements(const FinitePoset& p, const ElementSet& s) {
  check_members(p, s);
  const Bits mask = s.to_bits(p.size());
  std::vector<std::size_t> result;
  for (std::size_t x : s) {
    Bits strictly_above = p.up(x) & mask;
    strictly_above.reset(x);
    if (strictly_above.none()) result.push_back(x);
  }
  return ElementSet(std::move(result));
}

bool is_antichain(const FinitePoset& p, const ElementSet& s) {
  check_members(p, s);
  const auto m = s.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (p.comparable(m[i], m[j])) return false;
    }
  }
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>> cover_pairs(
    const FinitePoset& p) {
  const std::size_t n = p.size();
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t x = 0; x < n; ++x) {
    Bits strict = p.up(x);
    strict.reset(x);
    Bits reachable_via(n);
    for (auto z = strict.find_first(); z != Bits::npos;
         z = strict.find_next(z)) {
      Bits beyond = p.up(z);
      beyond.reset(z);
      reachable_via |= beyond;
    }
    const Bits direct = strict - reachable_via;
    for (auto y = direct.find_first(); y != Bits::npos;
         y = direct.find_next(y)) {
      covers.emplace_back(x, y);
    }
  }
  return covers;
}

std::size_t strict_relation_count(const FinitePoset& p) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < p.size(); ++i) total += p.up(i).count() - 1;
  return total;
}

bool is_antichain_poset(const FinitePoset& p) {
  return strict_relation_count(p) == 0;
}

std::string format_set(const FinitePoset& p, const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  for (std::size_t x : s) {
    if (!first) out += ',';
    out += p.name(x);
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace posetc
