#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "posetc/poset.hpp"

namespace posetc {

/// Poset text format:
///
///   # comment lines start with '#'; blank lines are ignored
///   elements: tok1 tok2 ... tokN
///   relations:
///   tokA tokB          (one pair per line, meaning tokA < tokB)
///
/// Pairs need not be covers and may repeat. The `relations:` header may be
/// omitted when there are no pairs.
struct PosetText {
  std::vector<std::string> names;
  std::vector<RelationPair> pairs;
};

/// Throws Error{Parse} with a line number on malformed input.
PosetText parse_poset_text(std::istream& in);

/// Parse, then build via from_relations.
FinitePoset read_poset(std::istream& in);
FinitePoset load_poset(const std::filesystem::path& path);

/// Writes `p` back in the text format with its cover pairs as relations.
void write_poset(std::ostream& out, const FinitePoset& p);

/// Hasse diagram in DOT: cover edges lower -> upper, rankdir=BT, every node
/// declared, all identifiers quoted.
void write_hasse_dot(std::ostream& out, const FinitePoset& p,
                     std::string_view graph_name = "poset");

}  // namespace posetc
