#pragma once

#include <string>

#include "posetc/antichains.hpp"
#include "posetc/poset.hpp"

namespace posetc {

/// Recomputes the law a witness names from scratch; true when the recorded
/// violation is reproduced on `p`.
bool replays(const FinitePoset& p, const OrderWitness& witness,
             std::size_t cap = kDefaultEnumerationCap);

/// One-line human readable rendering using element names.
std::string describe(const FinitePoset& p, const OrderWitness& witness);

}  // namespace posetc
