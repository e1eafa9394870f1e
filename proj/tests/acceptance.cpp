// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <string>
#include <vector>

#include "posetc/antichains.hpp"
#include "posetc/cayley.hpp"
#include "posetc/lattice.hpp"
#include "posetc/oracle.hpp"
#include "posetc/text_format.hpp"
#include "posetc/witness.hpp"
#include "support/fixtures.hpp"
#include "support/golden.hpp"
#include "support/lattices.hpp"

using namespace posetc;
using namespace posetc::testing;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> check;
};

std::size_t idx(const FinitePoset& p, std::string_view name) {
  return p.index_of(name).value();
}

std::string cell(const FinitePoset& p, const CayleyMap& f, std::size_t x) {
  return format_set(p, f(x).members());
}

bool partial_order_ok(const FinitePoset& order) {
  std::vector<Bits> rows;
  for (std::size_t i = 0; i < order.size(); ++i) rows.push_back(order.up(i));
  return !check_partial_order(rows);
}

std::vector<std::pair<std::string, std::string>> named_covers(const FinitePoset& p) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [lo, hi] : cover_pairs(p)) out.emplace_back(p.name(lo), p.name(hi));
  std::sort(out.begin(), out.end());
  return out;
}

// Example 1 table as printed: rows x = 0 a b c d 1, columns f_0 f_a f_b f_c f_d f_1.
const std::vector<std::vector<std::string>> kExample1{
    {"{0}", "{0}", "{0}", "{0}", "{0}", "{0}"},
    {"{0}", "{a}", "{0}", "{a}", "{a}", "{a}"},
    {"{0}", "{0}", "{b}", "{b}", "{b}", "{b}"},
    {"{0}", "{a}", "{b}", "{c}", "{a,b}", "{c}"},
    {"{0}", "{a}", "{b}", "{a,b}", "{d}", "{d}"},
    {"{0}", "{a}", "{b}", "{c}", "{d}", "{1}"},
};

Outcome example1_table() {
  const auto p = load_poset(data_file("fig1.poset"));
  const auto family = embed(p);
  std::size_t matched = 0;
  for (std::size_t x = 0; x < 6; ++x)
    for (std::size_t z = 0; z < 6; ++z)
      matched += cell(p, family.maps[z], x) == kExample1[x][z];

  // the CLI JSON carries the same 36 cells
  const auto r = run_cli({"embed", data_file("fig1.poset").string(), "--json"});
  const auto doc = nlohmann::json::parse(r.out);
  std::size_t json_matched = 0;
  for (std::size_t x = 0; x < 6; ++x)
    for (std::size_t z = 0; z < 6; ++z) {
      std::string rendered = "{";
      bool first = true;
      for (const auto& t : doc["maps"][p.name(z)][p.name(x)]) {
        rendered += (first ? "" : ",") + t.get<std::string>();
        first = false;
      }
      json_matched += rendered + "}" == kExample1[x][z];
    }
  return {matched == 36 && json_matched == 36,
          std::to_string(matched) + "/36 cells, CLI JSON " + std::to_string(json_matched) + "/36"};
}

Outcome fig3_antichain_poset() {
  const auto ap = antichain_poset(fig1());
  const std::vector<std::pair<std::string, std::string>> fig3{
      {"{0}", "{a}"},   {"{0}", "{b}"},   {"{a,b}", "{c}"}, {"{a,b}", "{d}"},
      {"{a}", "{a,b}"}, {"{b}", "{a,b}"}, {"{c,d}", "{1}"}, {"{c}", "{c,d}"},
      {"{d}", "{c,d}"}, {"{}", "{0}"}};
  const auto covers = named_covers(ap.order);
  return {ap.antichains.size() == 9 && covers == fig3,
          std::to_string(ap.antichains.size()) + " antichains, " +
              std::to_string(covers.size()) + " cover edges"};
}

Outcome fig2_image() {
  const auto p = fig1();
  const auto image = image_subposet(p);
  const auto bijection = are_isomorphic(image, p);
  Bijection identity(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) identity[i] = i;
  const bool admissible = is_order_isomorphism(image, p, identity);
  return {bijection.has_value() && admissible,
          std::string("oracle bijection ") + (bijection ? "found" : "missing") +
              ", f_z -> z " + (admissible ? "admissible" : "rejected")};
}

Outcome example2_m3() {
  const auto p = load_poset(data_file("m3.poset"));
  const auto ap = antichain_poset(p);
  std::vector<std::string> names;
  for (const auto& a : ap.antichains) names.push_back(format_set(p, a.members()));
  const std::vector<std::string> fig5{"{}",    "{0}",   "{a}",   "{b}",   "{c}",
                                      "{1}", "{a,b}", "{a,c}", "{b,c}", "{a,b,c}"};
  const bool antichains_ok = names == fig5 && cover_pairs(ap.order).size() == 14;
  const bool lattices_ok =
      lattice_tables(p).is_lattice && lattice_tables(ap.order).is_lattice;

  const auto report = join_homomorphism_witness(p);
  bool witness_ok = !report.holds && report.witness.has_value();
  if (witness_ok) {
    const auto& w = *report.witness;
    const std::vector<std::string> column_f{"{0}", "{a}", "{b}", "{0}", "{a,b}"};
    for (std::size_t x = 0; x < p.size(); ++x) witness_ok &= cell(p, w.pointwise, x) == column_f[x];
    const auto one = idx(p, "1");
    witness_ok &= w.op == LatticeOp::Join && w.combined == one &&
                  w.image == cayley_map(p, one) && cell(p, w.image, one) == "{1}" &&
                  cell(p, w.pointwise, one) == "{a,b}" &&
                  cell(p, w.pointwise, idx(p, "c")) == "{0}";
    witness_ok &= replays(p, OrderWitness{Law::JoinHomomorphism, {w.a, w.b, one}, {}});
  }
  return {antichains_ok && lattices_ok && witness_ok,
          std::to_string(names.size()) + " antichains; lattices " +
              (lattices_ok ? "yes" : "no") + "; witness " +
              (witness_ok ? "pair (a,b), f(1)={a,b}, f(c)={0}, f_1(1)={1}" : "mismatch")};
}

Outcome remark_singleton_meets() {
  auto corpus = random_lattices(50, 7);
  corpus.insert(corpus.begin(), m3());
  std::size_t checked = 0;
  bool ok = true;
  for (const auto& p : corpus) {
    const auto tables = lattice_tables(p);
    const auto family = embed(p);
    for (std::size_t a = 0; a < p.size(); ++a)
      for (std::size_t x = 0; x < p.size(); ++x) {
        ok &= family.maps[a](x).members() == ElementSet{(*tables.meet)(a, x)};
        ++checked;
      }
    ok &= !singleton_meet_check(p).has_value();
  }
  return {ok, std::to_string(corpus.size()) + " lattices, " + std::to_string(checked) +
                  " values f_a(x) = {a meet x}"};
}

std::vector<FinitePoset> theorem_corpus() {
  std::vector<FinitePoset> corpus{fig1(), m3()};
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 1 + seed % 8;
    const double prob = 0.05 * static_cast<double>(seed % 20);
    corpus.push_back(random_poset({n, prob, seed}));
  }
  return corpus;
}

Outcome theorem_property() {
  std::size_t embedded = 0;
  std::size_t lemma = 0;
  const auto corpus = theorem_corpus();
  for (const auto& p : corpus) {
    const auto family = embed(p);
    embedded += !verify_embedding(family) && is_injective(family);
    lemma += partial_order_ok(antichain_poset(p).order);
  }
  return {embedded == corpus.size() && lemma == corpus.size(),
          "embedding " + std::to_string(embedded) + "/" + std::to_string(corpus.size()) +
              ", lemma " + std::to_string(lemma) + "/" + std::to_string(corpus.size())};
}

Outcome powerset_failure() {
  std::size_t with_pairs = 0;
  std::size_t antichains = 0;
  bool ok = true;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const std::size_t n = seed % 10;
    // every fifth poset is generated with p = 0, an antichain
    const double prob = seed % 5 == 0 ? 0.0 : 0.05 * static_cast<double>(seed % 20);
    const auto p = random_poset({n, prob, seed + 7000});
    const auto status = powerset_order_status(p);
    if (is_antichain_poset(p)) {
      ++antichains;
      ok &= status.is_partial_order && !status.witness;
      continue;
    }
    ++with_pairs;
    ok &= !status.is_partial_order && status.witness.has_value();
    if (!status.witness) continue;
    const auto& [b, ab] = *status.witness;
    // ({b}, {a,b}) with a < b
    ok &= b.size() == 1 && ab.size() == 2 && ab.contains(b.members()[0]);
    if (ab.size() == 2) ok &= p.less(ab.members()[0], ab.members()[1]) || p.less(ab.members()[1], ab.members()[0]);
    ok &= replays(p, OrderWitness{Law::Antisymmetry, {}, {b, ab}});
  }
  return {ok && antichains > 0 && with_pairs > 0,
          std::to_string(with_pairs) + " posets with comparable pairs rejected, " +
              std::to_string(antichains) + " antichains accepted"};
}

Outcome golden_files() {
  std::size_t matched = 0;
  const auto& cases = golden_cases();
  const std::size_t required = 6;  // embed --json, antichains, hasse --dot on both fixtures
  for (std::size_t i = 0; i < required; ++i) {
    std::string first;
    std::string second;
    matched += golden_matches(cases[i], &first) && golden_matches(cases[i], &second) &&
               first == second;
  }
  return {matched == required,
          std::to_string(matched) + "/" + std::to_string(required) + " golden files byte-exact"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Example 1 table reproduction", 1.0, example1_table},
      {2, "antichain poset of the six-element example", 1.0, fig3_antichain_poset},
      {3, "image subposet isomorphic to P", 1.0, fig2_image},
      {4, "M3 non-homomorphism witness", 1.0, example2_m3},
      {5, "singleton meet property on lattices", 10.0, remark_singleton_meets},
      {6, "embedding theorem and lemma on 202 posets", 30.0, theorem_property},
      {7, "powerset preorder failure", 5.0, powerset_failure},
      {8, "golden CLI outputs", 60.0, golden_files},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.limit_seconds;
    const bool pass = outcome.pass && in_time;
    failures += !pass;
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << "AC" << c.id << " " << c.title << ": "
              << outcome.detail << " (" << std::fixed << std::setprecision(3) << seconds
              << " s, limit " << std::setprecision(0) << c.limit_seconds << " s"
              << (in_time ? "" : ", TOO SLOW") << ")\n";
  }
  std::cout << (failures == 0 ? "all acceptance criteria passed\n"
                              : std::to_string(failures) + " acceptance criteria failed\n");
  return failures == 0 ? 0 : 1;
}
