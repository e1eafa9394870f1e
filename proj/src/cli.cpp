#include "posetc/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <ostream>

#include "posetc/antichains.hpp"
#include "posetc/cayley.hpp"
#include "posetc/lattice.hpp"
#include "posetc/oracle.hpp"
#include "posetc/text_format.hpp"
#include "posetc/witness.hpp"

namespace posetc::cli {

namespace {

using Grid = std::vector<std::vector<std::string>>;

// Left-aligned columns joined by " | ", a dashed rule under the header row,
// no trailing whitespace.
void write_grid(std::ostream& out, const Grid& rows) {
  if (rows.empty()) return;
  std::vector<std::size_t> width(rows.front().size(), 0);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      width[c] = std::max(width[c], row[c].size());
    }
  }
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out << " | ";
      out << row[c];
      if (c + 1 < row.size()) out << std::string(width[c] - row[c].size(), ' ');
    }
    out << '\n';
  };
  emit(rows.front());
  for (std::size_t c = 0; c < width.size(); ++c) {
    if (c > 0) out << "-+-";
    out << std::string(width[c], '-');
  }
  out << '\n';
  for (std::size_t r = 1; r < rows.size(); ++r) emit(rows[r]);
}

Grid operation_grid(const FinitePoset& p, const OperationTable& table,
                    std::string_view corner) {
  Grid rows;
  rows.emplace_back(1, std::string(corner));
  for (const auto& name : p.names()) rows.back().push_back(name);
  for (std::size_t a = 0; a < p.size(); ++a) {
    rows.emplace_back(1, p.name(a));
    for (std::size_t b = 0; b < p.size(); ++b) {
      rows.back().push_back(p.name(table(a, b)));
    }
  }
  return rows;
}

std::size_t cap_from_environment() {
  const char* raw = std::getenv("POSETC_MAX_ENUM");
  if (raw == nullptr || *raw == '\0') return kDefaultEnumerationCap;
  std::string_view text(raw);
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorKind::Parse,
                "POSETC_MAX_ENUM must be a non-negative integer, got '" +
                    std::string(text) + "'");
  }
  return value;
}

struct Context {
  std::ostream& out;
  std::ostream& err;
  std::size_t cap;
};

int cmd_validate(Context& ctx, const std::string& file) {
  const auto p = load_poset(file);
  ctx.out << "valid partial order: " << p.size() << " elements, "
          << strict_relation_count(p) << " relations, "
          << cover_pairs(p).size() << " cover pairs\n";
  return kOk;
}

int cmd_antichains(Context& ctx, const std::string& file, bool count_only) {
  const auto p = load_poset(file);
  const auto all = all_antichains(p, ctx.cap);
  if (count_only) {
    ctx.out << all.size() << '\n';
    return kOk;
  }
  for (const auto& a : all) ctx.out << format_set(p, a.members()) << '\n';
  return kOk;
}

int cmd_antichain_poset(Context& ctx, const std::string& file, bool dot) {
  const auto p = load_poset(file);
  const auto ap = antichain_poset(p, ctx.cap);
  if (dot) {
    write_hasse_dot(ctx.out, ap.order, "antichains");
    return kOk;
  }
  for (const auto& [lo, hi] : cover_pairs(ap.order)) {
    ctx.out << ap.order.name(lo) << " < " << ap.order.name(hi) << '\n';
  }
  return kOk;
}

int cmd_embed(Context& ctx, const std::string& file, bool json) {
  const auto p = load_poset(file);
  const auto family = embed(p);
  if (json) {
    nlohmann::ordered_json doc;
    doc["elements"] = p.names();
    auto& maps = doc["maps"] = nlohmann::ordered_json::object();
    for (std::size_t a = 0; a < p.size(); ++a) {
      auto& row = maps[p.name(a)] = nlohmann::ordered_json::object();
      for (std::size_t x = 0; x < p.size(); ++x) {
        auto& cell = row[p.name(x)] = nlohmann::ordered_json::array();
        for (std::size_t t : family.maps[a](x).members()) {
          cell.push_back(p.name(t));
        }
      }
    }
    ctx.out << doc.dump(2) << '\n';
    return kOk;
  }
  Grid rows;
  rows.emplace_back(1, "x");
  for (const auto& name : p.names()) rows.back().push_back("f_" + name + "(x)");
  for (std::size_t x = 0; x < p.size(); ++x) {
    rows.emplace_back(1, p.name(x));
    for (std::size_t z = 0; z < p.size(); ++z) {
      rows.back().push_back(format_set(p, family.maps[z](x).members()));
    }
  }
  write_grid(ctx.out, rows);
  return kOk;
}

int report_witness(Context& ctx, const FinitePoset& p, const OrderWitness& w) {
  ctx.out << "witness: " << law_name(w.law) << ": " << describe(p, w) << '\n';
  ctx.err << "verification failed\n";
  return kWitnessFound;
}

int cmd_verify(Context& ctx, const std::string& file) {
  const auto p = load_poset(file);
  const auto family = embed(p);
  if (auto w = verify_embedding(family)) return report_witness(ctx, p, *w);
  ctx.out << "embedding verified: " << p.size() << " elements, "
          << p.size() * p.size() << " pairs\n";
  if (!is_injective(family)) {
    ctx.out << "witness: two distinct elements share a map\n";
    ctx.err << "verification failed\n";
    return kWitnessFound;
  }
  ctx.out << "injective: " << p.size() << " distinct maps\n";

  if (p.size() <= ctx.cap) {
    try {
      const auto ap = antichain_poset(p, ctx.cap);
      ctx.out << "lemma verified: " << ap.antichains.size()
              << " antichains, order is reflexive, antisymmetric, transitive\n";
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotPartialOrder) throw;
      ctx.out << "witness: antichain order: " << e.what() << '\n';
      ctx.err << "verification failed\n";
      return kWitnessFound;
    }
  } else {
    ctx.out << "lemma check skipped: " << p.size()
            << " elements exceeds enumeration cap " << ctx.cap << '\n';
  }

  if (p.size() <= kIsomorphismCap) {
    const auto image = image_subposet(p);
    const auto bijection = are_isomorphic(image, p);
    if (!bijection) {
      ctx.out << "witness: image subposet is not isomorphic to the poset\n";
      ctx.err << "verification failed\n";
      return kWitnessFound;
    }
    ctx.out << "image isomorphic:";
    for (std::size_t i = 0; i < image.size(); ++i) {
      ctx.out << (i == 0 ? " " : ", ") << image.name(i) << " -> "
              << p.name((*bijection)[i]);
    }
    ctx.out << '\n';
  } else {
    ctx.out << "isomorphism check skipped: " << p.size()
            << " elements exceeds cap " << kIsomorphismCap << '\n';
  }
  return kOk;
}

std::string describe_failure(const FinitePoset& p, const BoundFailure& f) {
  const bool join = f.law == Law::LatticeJoin;
  return p.name(f.a) + ", " + p.name(f.b) + " have " +
         (join ? "minimal upper bounds " : "maximal lower bounds ") +
         format_set(p, f.bounds) + " (no " + (join ? "join" : "meet") + ")";
}

int cmd_lattice(Context& ctx, const std::string& file) {
  const auto p = load_poset(file);
  const auto tables = lattice_tables(p);
  if (!tables.is_lattice) {
    ctx.out << "lattice: no\n"
            << "witness: " << describe_failure(p, *tables.failure) << '\n';
    return kOk;
  }
  ctx.out << "lattice: yes (" << p.size() << " elements)\n\njoin:\n";
  write_grid(ctx.out, operation_grid(p, *tables.join, "join"));
  ctx.out << "\nmeet:\n";
  write_grid(ctx.out, operation_grid(p, *tables.meet, "meet"));
  ctx.out << '\n';
  if (auto w = singleton_meet_check(p)) return report_witness(ctx, p, *w);
  ctx.out << "singleton meet check: passed (" << p.size() * p.size()
          << " pairs)\n";
  return kOk;
}

int cmd_counterexample(Context& ctx, const std::string& file) {
  const auto p = load_poset(file);
  const auto tables = lattice_tables(p);
  if (!tables.is_lattice) {
    ctx.err << "precondition failed: poset is not a lattice; "
            << describe_failure(p, *tables.failure) << '\n';
    return kUsageError;
  }
  const auto ap = antichain_poset(p, ctx.cap);
  const auto ap_tables = lattice_tables(ap.order);
  if (!ap_tables.is_lattice) {
    ctx.err << "precondition failed: antichain order is not a lattice; "
            << describe_failure(ap.order, *ap_tables.failure) << '\n';
    return kUsageError;
  }

  const auto report = join_homomorphism_witness(p, ctx.cap);
  const std::size_t pairs = p.size() * (p.size() + 1) / 2;
  if (report.holds) {
    ctx.out << "homomorphism holds: f preserves join and meet on all "
            << pairs << " pairs\n";
    return kOk;
  }
  const auto& w = *report.witness;
  const std::string op = w.op == LatticeOp::Join ? "join" : "meet";
  const std::string a = p.name(w.a);
  const std::string b = p.name(w.b);
  const std::string c = p.name(w.combined);
  const std::string image = "f_" + c;
  const std::string combined = "(f_" + a + " " + op + " f_" + b + ")";

  ctx.out << "not a lattice homomorphism: " << op << " fails for pair (" << a
          << ", " << b << "), " << a << " " << op << " " << b << " = " << c
          << "\n\n";
  Grid rows;
  rows.push_back({"x", image + "(x)", combined + "(x)"});
  for (std::size_t x = 0; x < p.size(); ++x) {
    rows.push_back({p.name(x), format_set(p, w.image(x).members()),
                    format_set(p, w.pointwise(x).members())});
  }
  write_grid(ctx.out, rows);
  ctx.out << '\n';
  for (std::size_t x = w.differs_at; x < p.size(); ++x) {
    if (w.image(x) == w.pointwise(x)) continue;
    const std::string& at = p.name(x);
    ctx.out << "differs at x = " << at << ": " << image << "(" << at
            << ") = " << format_set(p, w.image(x).members()) << ", "
            << combined << "(" << at
            << ") = " << format_set(p, w.pointwise(x).members()) << '\n';
  }
  return kOk;
}

int cmd_hasse(Context& ctx, const std::string& file, bool dot) {
  const auto p = load_poset(file);
  if (dot) {
    write_hasse_dot(ctx.out, p);
    return kOk;
  }
  for (const auto& [lo, hi] : cover_pairs(p)) {
    ctx.out << p.name(lo) << ' ' << p.name(hi) << '\n';
  }
  return kOk;
}

int cmd_random(Context& ctx, const GenConfig& cfg, const std::string& out_file) {
  const auto p = random_poset(cfg);
  auto emit = [&](std::ostream& os) {
    os << "# random poset: n=" << cfg.n << " p=" << cfg.edge_prob
       << " seed=" << cfg.seed << '\n';
    write_poset(os, p);
  };
  if (out_file.empty()) {
    emit(ctx.out);
    return kOk;
  }
  std::ofstream os(out_file);
  if (!os) {
    ctx.err << "error: cannot write '" << out_file << "'\n";
    return kUsageError;
  }
  emit(os);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, std::optional<std::size_t> enum_cap) {
  CLI::App app{"Finite posets, antichain orders and their Cayley embedding",
               "posetc"};
  app.require_subcommand(1);

  std::string file;
  bool flag = false;
  GenConfig cfg;
  std::string out_file;

  auto file_command = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("FILE", file, "poset text file")->required();
    return sub;
  };
  auto* validate = file_command("validate", "parse and validate a poset");
  auto* antichains = file_command("antichains", "list all antichains");
  antichains->add_flag("--count", flag, "print only the number of antichains");
  auto* antichain_order =
      file_command("antichain-poset", "cover pairs of the antichain order");
  antichain_order->add_flag("--dot", flag, "emit a DOT Hasse diagram");
  auto* embed_cmd = file_command("embed", "table of the maps f_a");
  embed_cmd->add_flag("--json", flag, "emit JSON");
  auto* verify = file_command("verify", "verify the embedding a -> f_a");
  auto* lattice = file_command("lattice", "join/meet tables");
  auto* counter =
      file_command("counterexample", "check whether a -> f_a preserves joins");
  auto* hasse = file_command("hasse", "transitive reduction of the poset");
  hasse->add_flag("--dot", flag, "emit a DOT Hasse diagram");
  auto* random = app.add_subcommand("random", "emit a random poset");
  random->add_option("--n", cfg.n, "element count")->required();
  random->add_option("--p", cfg.edge_prob, "edge probability")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  random->add_option("--seed", cfg.seed, "generator seed")->required();
  random->add_option("--out", out_file, "output file (default: stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    Context ctx{out, err, enum_cap ? *enum_cap : cap_from_environment()};
    if (validate->parsed()) return cmd_validate(ctx, file);
    if (antichains->parsed()) return cmd_antichains(ctx, file, flag);
    if (antichain_order->parsed()) return cmd_antichain_poset(ctx, file, flag);
    if (embed_cmd->parsed()) return cmd_embed(ctx, file, flag);
    if (verify->parsed()) return cmd_verify(ctx, file);
    if (lattice->parsed()) return cmd_lattice(ctx, file);
    if (counter->parsed()) return cmd_counterexample(ctx, file);
    if (hasse->parsed()) return cmd_hasse(ctx, file, flag);
    if (random->parsed()) return cmd_random(ctx, cfg, out_file);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::TooLarge ? kTooLarge : kUsageError;
  }
  return kUsageError;
}

}  // namespace posetc::cli
