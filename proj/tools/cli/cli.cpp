#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include "starblock/btree.hpp"
#include "starblock/builders.hpp"
#include "starblock/generator_file.hpp"
#include "starblock/report_json.hpp"

#ifndef STARBLOCK_DEFAULT_DATA_DIR
#define STARBLOCK_DEFAULT_DATA_DIR "data"
#endif

namespace starblock::cli {
namespace {

namespace fs = std::filesystem;
using arith::Natural;
using classify::Status;

// Raised for malformed user input; reported with exit code 64.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

Natural parse_prime(const std::string& text) {
  Natural p;
  try {
    p = arith::parse_natural(text);
  } catch (const arith::ArithError& e) {
    throw UsageError(e.what());
  }
  if (!arith::is_prime(p)) throw UsageError(text + " is not prime");
  return p;
}

catalog::GroupId parse_group(const std::string& text) {
  try {
    catalog::GroupId g = catalog::parse_group(text);
    catalog::validate(g);
    return g;
  } catch (const catalog::ParseError& e) {
    throw UsageError(std::string("cannot parse group: ") + e.what());
  } catch (const catalog::InvalidGroup& e) {
    throw UsageError(std::string("invalid group: ") + e.what());
  }
}

std::string opt(const std::optional<Natural>& n) { return n ? arith::to_decimal(*n) : "-"; }

void print_verdict(std::ostream& out, const catalog::GroupId& g, const Natural& p, const classify::Verdict& v) {
  out << catalog::to_string(g) << " at p = " << p << ": " << classify::status_name(v.status) << '\n';
  out << "  e = " << opt(v.e) << ", m = " << opt(v.m) << ", shape = " << classify::shape_name(v.shape) << '\n';
  out << "  justification:\n";
  for (const auto& j : v.justification) out << "    [" << j.rule_id << "] \"" << j.anchor << "\"\n";
  for (const auto& w : v.warnings) out << "  warning: " << w << '\n';
}

std::set<catalog::Family> parse_families(const std::string& spec, bool& simple_only) {
  std::set<catalog::Family> out;
  std::string item;
  std::istringstream in(spec);
  while (std::getline(in, item, ',')) {
    item = lower(item);
    if (item.empty() || item == "none") continue;
    if (item == "all" || item == "simple") {
      out.insert(std::begin(catalog::kAllFamilies), std::end(catalog::kAllFamilies));
      simple_only = simple_only || item == "simple";
      continue;
    }
    bool found = false;
    for (auto f : catalog::kAllFamilies) {
      if (lower(catalog::family_name(f)) == item) {
        out.insert(f);
        found = true;
      }
    }
    if (!found) throw UsageError("unknown family '" + item + "'");
  }
  return out;
}

// Generator file for groups without a builder, keyed by catalog name.
std::optional<std::string> fixture_file(const catalog::GroupId& g, const std::string& data_dir) {
  const auto canon = catalog::normalize(g).canonical;
  std::string stem;
  if (canon.family == catalog::Family::Sporadic) {
    stem = lower(canon.sporadic);
  } else if (canon.family == catalog::Family::Suzuki) {
    stem = "sz" + arith::to_decimal(canon.q);
  } else {
    return std::nullopt;
  }
  const fs::path path = fs::path(data_dir) / (stem + ".json");
  if (!fs::exists(path)) return std::nullopt;
  return path.string();
}

int cmd_classify(const std::string& group, const std::string& p_text, const CliConfig& cfg, std::ostream& out) {
  const auto g = parse_group(group);
  const Natural p = parse_prime(p_text);
  const classify::Verdict v = classify::in_Xp(g, p);
  if (cfg.output == Output::Json) {
    out << report::json{{"group", catalog::to_string(g)}, {"p", arith::to_decimal(p)}, {"verdict", report::to_json(v)}}
               .dump()
        << '\n';
  } else {
    print_verdict(out, g, p, v);
  }
  return exit_code(v.status);
}

int cmd_verify(const std::string& group, const std::string& p_text, const std::string& rep, const CliConfig& cfg,
               std::ostream& out, std::ostream& err) {
  const auto g = parse_group(group);
  const Natural p = parse_prime(p_text);
  std::optional<perm::PermGroup> G;
  try {
    if (!rep.empty()) {
      fs::path path(rep);
      if (!fs::exists(path) && fs::exists(fs::path(cfg.data_dir) / path)) path = fs::path(cfg.data_dir) / path;
      if (!fs::exists(path)) {
        err << "representation file not found: " << rep << '\n';
        return kNoInput;
      }
      G = perm::load_generators(path.string());
    } else if (auto built = perm::build_for(g)) {
      G = built->group;
    } else if (auto file = fixture_file(g, cfg.data_dir)) {
      G = perm::load_generators(*file);
    } else {
      err << "no permutation representation for " << catalog::to_string(g) << " (data dir " << cfg.data_dir
          << ")\n";
      return kNoInput;
    }
  } catch (const perm::GeneratorFileError& e) {
    err << e.what() << '\n';
    return kDataError;
  }
  perm::Budget budget;
  budget.element_cap = cfg.element_cap;
  budget.orbit_cap = cfg.orbit_cap;
  budget.seed = cfg.seed;
  oracle::CrossCheckReport r;
  try {
    r = oracle::crosscheck(g, *G, p, budget);
  } catch (const oracle::OracleError& e) {
    err << e.what() << '\n';
    return kDataError;
  }
  if (cfg.output == Output::Json) {
    out << report::to_json(r).dump() << '\n';
    return exit_code(r);
  }
  const auto& m = r.measured;
  out << catalog::to_string(g) << " at p = " << p << " (degree " << G->degree() << ", order "
      << G->order().value() << ")\n";
  out << "  measured: cyclic = " << oracle::tri_name(m.cyclic) << ", |P| = " << m.sylow_order << ", e = " << opt(m.e)
      << ", m = " << opt(m.m);
  if (m.centralizer_P_odd) out << ", |C_G(P)| " << (*m.centralizer_P_odd ? "odd" : "even");
  if (m.involution_classes) out << ", involution classes = " << *m.involution_classes;
  out << '\n';
  out << "  claimed: " << classify::status_name(r.claimed.status) << ", e = " << opt(r.claimed.e)
      << ", m = " << opt(r.claimed.m) << '\n';
  for (const auto& s : r.agreements) out << "  agree: " << s << '\n';
  for (const auto& s : r.disagreements) out << "  DISAGREE: " << s << '\n';
  for (const auto& s : r.undecided) out << "  undecided: " << s << '\n';
  return exit_code(r);
}

struct SweepFlags {
  std::string families = "all";
  unsigned n_max = 10;
  std::string q_max = "32";
  unsigned exp_max = 2;
  std::string p_max = "100";
  std::string order_cap = "1000000000000";
  bool simple_only = false;
  bool theorem1_only = false;
  std::string output_path;
};

int cmd_sweep(const SweepFlags& f, const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  classify::SweepSpec spec;
  spec.simple_only = f.simple_only;
  spec.families = parse_families(f.families, spec.simple_only);
  spec.n_max = f.n_max;
  spec.exp_max = f.exp_max;
  try {
    spec.q_max = arith::parse_natural(f.q_max);
    spec.p_max = arith::parse_natural(f.p_max);
    spec.order_cap = arith::parse_natural(f.order_cap);
  } catch (const arith::ArithError& e) {
    throw UsageError(e.what());
  }
  std::ofstream file;
  std::ostream* sink = &out;
  if (!f.output_path.empty()) {
    file.open(f.output_path);
    if (!file) {
      err << "cannot write " << f.output_path << '\n';
      return kNoInput;
    }
    sink = &file;
  }
  for (const auto& row : classify::sweep(spec)) {
    if (f.theorem1_only && row.verdict.status != Status::InXp) continue;
    if (cfg.output == Output::Json) {
      *sink << report::to_json(row).dump() << '\n';
      continue;
    }
    const auto& v = row.verdict;
    std::string name = catalog::to_string(row.group);
    name.resize(std::max<std::size_t>(name.size(), 16), ' ');
    *sink << name << " p=" << row.p << "\t" << classify::status_name(v.status) << "\te=" << opt(v.e)
          << "\tm=" << opt(v.m) << '\t' << v.terminal_rule() << '\n';
  }
  return 0;
}

int cmd_tree(const std::string& name, const std::string& q_text, const std::string& p_text, std::ostream& out,
             std::ostream& err) {
  if (lower(name) != "so7") {
    err << "unknown tree fixture '" << name << "' (known: so7)\n";
    return kDataError;
  }
  std::optional<Natural> q, p;
  try {
    if (!q_text.empty()) q = arith::parse_natural(q_text);
    if (!p_text.empty()) p = parse_prime(p_text);
  } catch (const arith::ArithError& e) {
    throw UsageError(e.what());
  }
  btree::BrauerTree t = [&] {
    try {
      return btree::so7_fixture(q, p);
    } catch (const btree::TreeError& e) {
      throw UsageError(e.what());
    }
  }();
  out << btree::serialize(t);
  out << "# edges " << btree::edge_count(t) << ", diameter " << btree::diameter(t)
      << ", star " << (btree::is_star(t) ? "yes" : "no") << ", line " << (btree::is_line(t) ? "yes" : "no") << '\n';
  if (t.exceptional()) {
    out << "# exceptional vertex " << t.exceptional()->vertex << " (" << t.vertices()[t.exceptional()->vertex].label
        << "), multiplicity " << t.exceptional()->multiplicity << '\n';
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto& v = t.vertices()[i];
    out << "# degree " << v.label << " = " << v.degree_expr;
    if (v.degree) out << " = " << *v.degree;
    out << '\n';
  }
  return 0;
}

}  // namespace

std::string default_data_dir() {
  if (const char* env = std::getenv(kDataDirEnv); env && *env) return env;
  return STARBLOCK_DEFAULT_DATA_DIR;
}

int exit_code(classify::Status s) {
  switch (s) {
    case Status::InXp: return kInXp;
    case Status::NotInXp: return kNotInXp;
    case Status::SylowNotCyclic:
    case Status::PNotDividingOrder: return kSylowNotCyclic;
    case Status::OutOfScope: return kOutOfScope;
    case Status::Conflict: return kConflict;
  }
  return kUsage;
}

int exit_code(const oracle::CrossCheckReport& r) {
  if (!r.disagreements.empty()) return kDisagreement;
  if (!r.undecided.empty()) return kUndecided;
  return 0;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Brauer-tree star classification for finite simple groups", "starblock"};
  app.require_subcommand(1);
  CliConfig cfg;
  cfg.data_dir = default_data_dir();
  bool json = false;
  app.add_flag("--json", json, "Emit JSON instead of text");
  app.add_option("--data-dir", cfg.data_dir, "Directory with generator files (env " + std::string(kDataDirEnv) + ")");
  app.add_option("--element-cap", cfg.element_cap, "Element enumeration cap")->check(CLI::PositiveNumber);
  app.add_option("--orbit-cap", cfg.orbit_cap, "Orbit size cap")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Seed for randomized searches");

  std::string group, p_text, rep, fixture, q_text;
  auto* classify_cmd = app.add_subcommand("classify", "Classify a group at a prime");
  classify_cmd->add_option("group", group, "Group, e.g. PSL(2,7) or M12")->required();
  classify_cmd->add_option("--p", p_text, "Prime")->required();
  classify_cmd->add_flag("--json", json, "Emit JSON");

  auto* verify_cmd = app.add_subcommand("verify", "Cross-check a verdict against permutation-group measurements");
  verify_cmd->add_option("group", group, "Group")->required();
  verify_cmd->add_option("--p", p_text, "Prime")->required();
  verify_cmd->add_option("--rep", rep, "Generator file");
  verify_cmd->add_flag("--json", json, "Emit JSON");

  SweepFlags sf;
  auto* sweep_cmd = app.add_subcommand("sweep", "Classify every group in a parameter window");
  sweep_cmd->add_option("--families", sf.families, "Comma-separated families, 'all', 'simple' or 'none'");
  sweep_cmd->add_option("--n-max", sf.n_max, "Largest degree or rank parameter");
  sweep_cmd->add_option("--q-max", sf.q_max, "Largest field size");
  sweep_cmd->add_option("--exp-max", sf.exp_max, "Largest k for twisted groups with q = r^(2k+1)");
  sweep_cmd->add_option("--p-max", sf.p_max, "Largest prime");
  sweep_cmd->add_option("--order-cap", sf.order_cap, "Skip groups of larger order");
  sweep_cmd->add_flag("--simple-only", sf.simple_only, "Only simple groups");
  sweep_cmd->add_flag("--theorem1-only", sf.theorem1_only, "Only rows classified InXp");
  sweep_cmd->add_option("--output", sf.output_path, "Write the table to a file");
  sweep_cmd->add_flag("--json", json, "Emit JSON lines");

  std::string tree_p;
  auto* tree_cmd = app.add_subcommand("tree", "Print a Brauer-tree fixture");
  tree_cmd->add_option("fixture", fixture, "Fixture name (so7)")->required();
  tree_cmd->add_option("--q", q_text, "Evaluate degrees at q");
  tree_cmd->add_option("--p", tree_p, "Prime for the exceptional multiplicity");

  std::vector<const char*> argv{"starblock"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsage;
  }
  cfg.output = json ? Output::Json : Output::Text;

  try {
    if (*classify_cmd) return cmd_classify(group, p_text, cfg, out);
    if (*verify_cmd) return cmd_verify(group, p_text, rep, cfg, out, err);
    if (*sweep_cmd) return cmd_sweep(sf, cfg, out, err);
    if (*tree_cmd) return cmd_tree(fixture, q_text, tree_p, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const classify::ClassifyError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  }
  return kUsage;
}

}  // namespace starblock::cli
