#include "posetc/oracle.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <utility>

namespace posetc {

FinitePoset random_poset(const GenConfig& cfg) {
  std::mt19937_64 engine(cfg.seed);
  std::vector<std::string> names;
  names.reserve(cfg.n);
  for (std::size_t i = 0; i < cfg.n; ++i) names.push_back("e" + std::to_string(i));

  std::vector<RelationPair> pairs;
  for (std::size_t i = 0; i < cfg.n; ++i) {
    for (std::size_t j = i + 1; j < cfg.n; ++j) {
      const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
      if (u < cfg.edge_prob) pairs.emplace_back(names[i], names[j]);
    }
  }
  return FinitePoset::from_relations(std::move(names), pairs);
}

namespace {

using Profile = std::pair<std::size_t, std::size_t>;

std::vector<Profile> profiles(const FinitePoset& p) {
  std::vector<Profile> out;
  out.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    out.emplace_back(p.down(i).count() - 1, p.up(i).count() - 1);
  }
  return out;
}

struct Search {
  const FinitePoset& p;
  const FinitePoset& q;
  std::vector<Profile> pp;
  std::vector<Profile> qp;
  Bijection mapping;
  std::vector<bool> used;

  bool assign(std::size_t i) {
    if (i == p.size()) return true;
    for (std::size_t t = 0; t < q.size(); ++t) {
      if (used[t] || pp[i] != qp[t]) continue;
      bool consistent = true;
      for (std::size_t k = 0; k < i && consistent; ++k) {
        consistent = p.leq(k, i) == q.leq(mapping[k], t) &&
                     p.leq(i, k) == q.leq(t, mapping[k]);
      }
      if (!consistent) continue;
      mapping[i] = t;
      used[t] = true;
      if (assign(i + 1)) return true;
      used[t] = false;
    }
    return false;
  }
};

}  // namespace

std::optional<Bijection> are_isomorphic(const FinitePoset& p,
                                        const FinitePoset& q) {
  if (p.size() > kIsomorphismCap || q.size() > kIsomorphismCap) {
    throw Error(ErrorKind::TooLarge,
                "isomorphism search is capped at " +
                    std::to_string(kIsomorphismCap) + " elements");
  }
  if (p.size() != q.size()) return std::nullopt;

  Search search{p, q, profiles(p), profiles(q), Bijection(p.size()),
                std::vector<bool>(q.size(), false)};
  auto sorted_p = search.pp;
  auto sorted_q = search.qp;
  std::sort(sorted_p.begin(), sorted_p.end());
  std::sort(sorted_q.begin(), sorted_q.end());
  if (sorted_p != sorted_q) return std::nullopt;

  if (!search.assign(0)) return std::nullopt;
  return std::move(search.mapping);
}

bool is_order_isomorphism(const FinitePoset& p, const FinitePoset& q,
                          const Bijection& mapping) {
  const std::size_t n = p.size();
  if (q.size() != n || mapping.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (std::size_t t : mapping) {
    if (t >= n || hit[t]) return false;
    hit[t] = true;
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (p.leq(a, b) != q.leq(mapping[a], mapping[b])) return false;
    }
  }
  return true;
}

}  // namespace posetc
