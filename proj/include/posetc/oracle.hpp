#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "posetc/poset.hpp"

namespace posetc {

/// Random DAG parameters. Each pair (i, j) with i < j becomes the generator
/// relation e_i < e_j with probability edge_prob.
struct GenConfig {
  std::size_t n = 0;
  double edge_prob = 0.0;
  std::uint64_t seed = 0;
};

/// Deterministic across platforms: draws come from std::mt19937_64 (whose
/// output sequence is fixed by the C++ standard) seeded with `seed`, one draw
/// per pair in row-major (i, j) order. A pair is included when
/// (draw >> 11) * 2^-53 < edge_prob. Elements are named e0 .. e{n-1}.
FinitePoset random_poset(const GenConfig& cfg);

inline constexpr std::size_t kIsomorphismCap = 10;

/// mapping[i] = image in q of element i of p.
using Bijection = std::vector<std::size_t>;

/// Order isomorphism from p onto q, found by backtracking with
/// (strictly-below, strictly-above) count pruning. Throws Error{TooLarge}
/// when either poset exceeds kIsomorphismCap elements.
std::optional<Bijection> are_isomorphic(const FinitePoset& p,
                                        const FinitePoset& q);

/// True when `mapping` is a bijection with a <= b <=> mapping[a] <= mapping[b].
bool is_order_isomorphism(const FinitePoset& p, const FinitePoset& q,
                          const Bijection& mapping);

}  // namespace posetc
