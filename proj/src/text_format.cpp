#include "posetc/text_format.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace posetc {

namespace {

std::vector<std::string> tokens(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string tok; in >> tok;) out.push_back(std::move(tok));
  return out;
}

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + what);
}

std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

constexpr std::string_view kElements = "elements:";
constexpr std::string_view kRelations = "relations:";

}  // namespace

PosetText parse_poset_text(std::istream& in) {
  PosetText text;
  bool have_elements = false;
  bool in_relations = false;
  std::size_t lineno = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    std::string_view line = raw;
    const auto start = line.find_first_not_of(" \t\r\n\v\f");
    if (start == std::string_view::npos) continue;
    line.remove_prefix(start);
    if (line.front() == '#') continue;

    if (line.starts_with(kElements)) {
      if (have_elements) parse_error(lineno, "repeated 'elements:' line");
      if (in_relations) parse_error(lineno, "'elements:' after 'relations:'");
      text.names = tokens(line.substr(kElements.size()));
      have_elements = true;
      continue;
    }
    auto toks = tokens(line);
    if (toks.size() == 1 && toks[0] == kRelations) {
      if (!have_elements) parse_error(lineno, "'relations:' before 'elements:'");
      if (in_relations) parse_error(lineno, "repeated 'relations:' header");
      in_relations = true;
      continue;
    }
    if (!in_relations) {
      parse_error(lineno, "expected 'elements:' or 'relations:', got '" +
                              std::string(line) + "'");
    }
    if (toks.size() != 2) {
      parse_error(lineno, "expected a pair 'lower upper', got " +
                              std::to_string(toks.size()) + " tokens");
    }
    text.pairs.emplace_back(std::move(toks[0]), std::move(toks[1]));
  }
  if (!have_elements) parse_error(lineno, "missing 'elements:' line");
  return text;
}

FinitePoset read_poset(std::istream& in) {
  auto text = parse_poset_text(in);
  return FinitePoset::from_relations(std::move(text.names), text.pairs);
}

FinitePoset load_poset(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::Parse, "cannot open '" + path.string() + "'");
  }
  return read_poset(in);
}

void write_poset(std::ostream& out, const FinitePoset& p) {
  out << "elements:";
  for (const auto& name : p.names()) out << ' ' << name;
  out << "\nrelations:\n";
  for (const auto& [lo, hi] : cover_pairs(p)) {
    out << p.name(lo) << ' ' << p.name(hi) << '\n';
  }
}

void write_hasse_dot(std::ostream& out, const FinitePoset& p,
                     std::string_view graph_name) {
  out << "digraph " << dot_quote(graph_name) << " {\n";
  out << "  rankdir=BT;\n";
  for (const auto& name : p.names()) out << "  " << dot_quote(name) << ";\n";
  for (const auto& [lo, hi] : cover_pairs(p)) {
    out << "  " << dot_quote(p.name(lo)) << " -> " << dot_quote(p.name(hi))
        << ";\n";
  }
  out << "}\n";
}

}  // namespace posetc
