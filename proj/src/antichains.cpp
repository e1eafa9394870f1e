#include "posetc/antichains.hpp"

#include <algorithm>
#include <stdexcept>

namespace posetc {

namespace {

void enforce_cap(const FinitePoset& p, std::size_t cap) {
  if (p.size() > cap) {
    throw Error(ErrorKind::TooLarge,
                "poset has " + std::to_string(p.size()) +
                    " elements; antichain enumeration is capped at " +
                    std::to_string(cap));
  }
}

// Elements strictly after `from` (by index) that are incomparable to every
// chosen member are the only candidates, so each antichain is reached once.
void extend(const FinitePoset& p, const std::vector<Bits>& incomparable,
            std::vector<std::size_t>& chosen, const Bits& candidates,
            std::vector<Antichain>& out) {
  out.emplace_back(p, ElementSet(chosen));
  for (auto x = candidates.find_first(); x != Bits::npos;
       x = candidates.find_next(x)) {
    Bits next = candidates & incomparable[x];
    // drop indices <= x
    for (auto y = next.find_first(); y != Bits::npos && y <= x;
         y = next.find_next(y)) {
      next.reset(y);
    }
    chosen.push_back(x);
    extend(p, incomparable, chosen, next, out);
    chosen.pop_back();
  }
}

}  // namespace

Antichain::Antichain(const FinitePoset& p, ElementSet members)
    : members_(std::move(members)) {
  if (!is_antichain(p, members_)) {
    throw std::invalid_argument("set " + format_set(p, members_) +
                                " contains comparable elements");
  }
}

bool subset_leq(const FinitePoset& p, const ElementSet& b,
                const ElementSet& c) {
  return std::all_of(b.begin(), b.end(), [&](std::size_t x) {
    return std::any_of(c.begin(), c.end(),
                       [&](std::size_t y) { return p.leq(x, y); });
  });
}

std::vector<Antichain> all_antichains(const FinitePoset& p, std::size_t cap) {
  enforce_cap(p, cap);
  const std::size_t n = p.size();
  std::vector<Bits> incomparable(n);
  for (std::size_t x = 0; x < n; ++x) {
    incomparable[x] = ~(p.up(x) | p.down(x));
  }
  std::vector<Antichain> out;
  std::vector<std::size_t> chosen;
  Bits everything(n);
  everything.set();
  extend(p, incomparable, chosen, everything, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::size_t> AntichainPoset::index_of(const Antichain& a) const {
  auto it = std::lower_bound(antichains.begin(), antichains.end(), a);
  if (it == antichains.end() || *it != a) return std::nullopt;
  return static_cast<std::size_t>(it - antichains.begin());
}

AntichainPoset antichain_poset(const FinitePoset& p, std::size_t cap) {
  auto antichains = all_antichains(p, cap);
  const std::size_t n = p.size();
  const std::size_t m = antichains.size();

  // B <= C iff B is contained in the down-closure of C.
  std::vector<Bits> members(m);
  std::vector<Bits> down_closure(m, Bits(n));
  std::vector<std::string> names;
  names.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& set = antichains[i].members();
    members[i] = set.to_bits(n);
    for (std::size_t y : set) down_closure[i] |= p.down(y);
    names.push_back(format_set(p, set));
  }

  std::vector<Bits> leq(m, Bits(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (members[i].is_subset_of(down_closure[j])) leq[i].set(j);
    }
  }

  auto order = FinitePoset::from_matrix(std::move(names), std::move(leq));
  return AntichainPoset{p, std::move(antichains), std::move(order)};
}

PowersetOrderStatus powerset_order_status(const FinitePoset& p,
                                          std::size_t cap) {
  enforce_cap(p, cap);
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = 0; b < p.size(); ++b) {
      if (p.less(a, b)) {
        return {false, std::pair{ElementSet{b}, ElementSet{a, b}}};
      }
    }
  }
  return {true, std::nullopt};
}

}  // namespace posetc
