#include "qgrass/cli.hpp"

#include "qgrass/checks.hpp"
#include "qgrass/error.hpp"
#include "qgrass/serialize.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace qgrass {

namespace {

constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Config {
  int k = 2, n = 4;
  int m = 2, cols = 3;
  int cap = 3;
  int degree = 2;
  std::string shifts = "-1,0,1,2";
  std::string q0;
  std::uint64_t seed = 1;
  std::string cache_dir;
  std::string out;
  std::string input;
  bool json = false;
  bool serial = false;
  bool all = false;
  std::vector<std::string> lemmas;
  std::size_t budget = 20;
  std::string word;
};

std::vector<int> parse_shifts(const std::string& text) {
  std::vector<int> out;
  auto range = text.find("..");
  try {
    if (range != std::string::npos) {
      int lo = std::stoi(text.substr(0, range)), hi = std::stoi(text.substr(range + 2));
      for (int s = lo; s <= hi; ++s) out.push_back(s);
    } else {
      std::stringstream ss(text);
      std::string item;
      while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    }
  } catch (const std::logic_error&) {
    throw ParseError("bad shift list '" + text + "'");
  }
  if (out.empty()) throw ParseError("empty shift list");
  return out;
}

mpq_class parse_q0(const std::string& text) {
  mpq_class q = parse_rational(text);
  if (q == 0 || q == 1 || q == -1) throw ParseError("q0 must avoid 0, 1 and -1");
  return q;
}

std::size_t binomial(int n, int k) {
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

/// Writes to --out (when given) and echoes to out.
void emit(const Config& cfg, std::ostream& out, const std::string& text, const std::string& suffix) {
  out << text;
  if (cfg.out.empty()) return;
  std::string path = cfg.out + suffix;
  std::ofstream f(path);
  if (!f) throw Error("cannot write " + path);
  f << text;
}

std::string render_checks(const std::vector<CheckResult>& rs) {
  std::ostringstream s;
  for (const auto& r : rs) s << (r.skipped ? "SKIP " : r.pass ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
  return s.str();
}

Json checks_json(const std::vector<CheckResult>& rs) {
  Json arr = Json::array();
  for (const auto& r : rs) arr.push_back({{"name", r.name}, {"pass", r.pass}, {"skipped", r.skipped}, {"detail", r.detail}});
  return arr;
}

bool all_pass(const std::vector<CheckResult>& rs) {
  return std::all_of(rs.begin(), rs.end(), [](const CheckResult& r) { return r.pass; });
}

int cmd_straighten(const Config& cfg, std::ostream& out) {
  Ambient a{cfg.k, cfg.n};
  check_ambient(a);
  GrassElement x = straighten(parse_word(cfg.word, a), a);
  if (cfg.json)
    out << to_json(x).dump(2) << "\n";
  else
    out << to_string(x) << "\n";
  return 0;
}

int cmd_verify(const Config& cfg, std::ostream& out) {
  Ambient a{cfg.k, cfg.n};
  check_ambient(a);
  if (binomial(a.n, a.k) > cfg.budget)
    throw PreconditionError("ambient has " + std::to_string(binomial(a.n, a.k)) + " generators, over the budget of " +
                            std::to_string(cfg.budget) + " (raise --budget)");
  std::vector<std::string> names = cfg.all ? lemma_names() : cfg.lemmas;
  if (names.empty()) throw ParseError("give --all or at least one --lemma");
  // Reject explicit requests that do not apply before running anything.
  if (!cfg.all)
    for (const auto& name : names) {
      std::string why = check_precondition(name, a);
      if (!why.empty()) throw PreconditionError(name + ": " + why);
    }
  ExecPolicy policy = cfg.serial ? ExecPolicy::serial : ExecPolicy::parallel;
  std::vector<CheckResult> rs;
  for (const auto& name : names) {
    std::string why = check_precondition(name, a);
    if (!why.empty()) {
      rs.push_back({name, true, true, "skipped: " + why});
      continue;
    }
    CheckResult r = run_named_check(name, a, cfg.seed, policy);
    r.name = name;
    rs.push_back(r);
  }
  Json j = {{"schema", "qgrass.lemma-certificate/1"},
            {"tool_version", kToolVersion},
            {"ambient", ambient_json(a)},
            {"seed", cfg.seed},
            {"checks", checks_json(rs)},
            {"all_pass", all_pass(rs)}};
  std::string json = j.dump(2) + "\n", text = render_checks(rs);
  out << (cfg.json ? json : text);
  if (!cfg.out.empty()) {
    std::ofstream(cfg.out + ".json") << json;
    std::ofstream(cfg.out + ".txt") << text;
  }
  return all_pass(rs) ? 0 : kFail;
}

std::string hh1_table(const HH1Report& r) {
  std::ostringstream s;
  s << "HH^1 window for G(" << r.ambient.k << "," << r.ambient.n << "), " << r.cap_label << "\n";
  s << std::setw(6) << "shift" << std::setw(8) << "dimDer" << std::setw(8) << "dimInn" << std::setw(8) << "dimHH1"
    << std::setw(15) << "certified-cap" << "  coset basis\n";
  for (const auto& x : r.shifts) {
    s << std::setw(6) << x.shift << std::setw(8) << x.dim_der << std::setw(8) << x.dim_inn << std::setw(8) << x.dim_hh1
      << std::setw(15) << ("<=" + std::to_string(r.cap)) << " ";
    for (const auto& l : x.coset_labels) s << " " << l;
    s << "\n";
  }
  for (const auto& x : r.shifts)
    s << "shift " << x.shift << ": inner contained " << (x.inner_contained ? "yes" : "no") << ", closure "
      << (x.closure ? "yes" : "no") << ", Leibniz " << (x.leibniz ? "yes" : "no") << ", specialisation "
      << (r.specialisation ? (x.specialisation_agrees ? "agrees" : "DISAGREES") : "not run") << ", certificate "
      << x.certificate << "\n";
  if (r.column_independence)
    s << "column derivations independent on test vectors: " << (*r.column_independence ? "yes" : "no") << "\n";
  s << "limitation: " << r.limitation << "\n";
  return s.str();
}

int cmd_hh1(const Config& cfg, std::ostream& out) {
  Ambient a{cfg.k, cfg.n};
  check_ambient(a);
  if (cfg.cap < 2) throw ParseError("--cap must be at least 2");
  WindowOptions opt;
  opt.policy = cfg.serial ? ExecPolicy::serial : ExecPolicy::parallel;
  opt.seed = cfg.seed;
  if (!cfg.q0.empty()) opt.specialisation = parse_q0(cfg.q0);
  HH1Report r = hh1_window(a, parse_shifts(cfg.shifts), cfg.cap, opt);
  std::string json = to_json(r).dump(2) + "\n";
  std::string text = hh1_table(r);
  if (cfg.json)
    out << json;
  else
    out << text;
  if (!cfg.out.empty()) {
    std::ofstream(cfg.out + ".json") << json;
    std::ofstream(cfg.out + ".txt") << text;
  }
  bool ok = true;
  for (const auto& s : r.shifts) {
    if (s.shift == 0 && s.dim_hh1 != static_cast<std::size_t>(a.n)) ok = false;
    if (!s.inner_contained || !s.closure || !s.leibniz || !s.specialisation_agrees) ok = false;
  }
  if (r.column_independence && !*r.column_independence) ok = false;
  return ok ? 0 : kFail;
}

int cmd_dehom(const Config& cfg, std::ostream& out) {
  Ambient a{cfg.k, cfg.n};
  check_ambient(a);
  std::vector<CheckResult> rs{checks::dehomogenisation(a)};
  if (2 * a.k <= a.n) rs.push_back(checks::weight_gradings(a, cfg.seed));
  if (cfg.json) {
    Json j = {{"schema", "qgrass.dehom-check/1"},
              {"tool_version", kToolVersion},
              {"ambient", ambient_json(a)},
              {"checks", checks_json(rs)}};
    emit(cfg, out, j.dump(2) + "\n", ".json");
  } else {
    emit(cfg, out, render_checks(rs), ".txt");
  }
  return all_pass(rs) ? 0 : kFail;
}

int cmd_decompose(const Config& cfg, std::ostream& out) {
  std::vector<QMDerivation> inputs;
  MatShape s{cfg.m, cfg.cols};
  if (!cfg.input.empty()) {
    std::ifstream in(cfg.input);
    if (!in) throw Error("cannot read " + cfg.input);
    Json j;
    try {
      j = Json::parse(in);
    } catch (const Json::exception& e) {
      throw ParseError(std::string("bad JSON: ") + e.what());
    }
    inputs.push_back(qm_derivation_from_json(j));
    s = inputs.front().shape;
  } else {
    check_shape(s);
    inputs = qm_derivation_space(s, true, cfg.serial ? ExecPolicy::serial : ExecPolicy::parallel);
  }
  Json results = Json::array();
  std::ostringstream text;
  bool ok = true;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    NonsquareDecomposition c = decompose_nonsquare(inputs[i]);
    bool same = reconstruct(s, c) == inputs[i];
    ok = ok && same;
    Json item = to_json(c);
    item["reconstructs"] = same;
    results.push_back(item);
    text << "derivation " << i << ": row (";
    for (std::size_t r = 0; r < c.a.size(); ++r) text << (r ? ", " : "") << c.a[r].pretty();
    text << ") column (";
    for (std::size_t r = 0; r < c.b.size(); ++r) text << (r ? ", " : "") << c.b[r].pretty();
    text << ") " << (same ? "reconstructs" : "MISMATCH") << "\n";
  }
  if (cfg.json) {
    Json j = {{"schema", "qgrass.decompose/1"},
              {"tool_version", kToolVersion},
              {"shape", {{"m", s.m}, {"n", s.n}}},
              {"results", results}};
    emit(cfg, out, j.dump(2) + "\n", ".json");
  } else {
    emit(cfg, out, text.str(), ".txt");
  }
  return ok ? 0 : kFail;
}

std::filesystem::path require_cache_dir() {
  auto dir = cache_directory();
  if (dir.empty()) throw ParseError("no cache directory: pass --cache-dir or set QGRASS_CACHE_DIR");
  return dir;
}

int cmd_cache_list(std::ostream& out) {
  auto entries = list_cache(require_cache_dir());
  out << std::left << std::setw(8) << "k" << std::setw(8) << "n" << std::setw(8) << "degree" << "bytes\n";
  for (const auto& e : entries)
    out << std::setw(8) << e.ambient.k << std::setw(8) << e.ambient.n << std::setw(8) << e.degree << e.bytes << "\n";
  out << std::right;
  return 0;
}

int cmd_cache_clear(std::ostream& out) {
  auto dir = require_cache_dir();
  out << "removed " << clear_cache(dir) << " files\n";
  return 0;
}

int cmd_cache_warm(const Config& cfg, std::ostream& out) {
  Ambient a{cfg.k, cfg.n};
  check_ambient(a);
  auto dir = require_cache_dir();
  std::filesystem::create_directories(dir);
  warm_cache(a, cfg.degree, cfg.serial ? ExecPolicy::serial : ExecPolicy::parallel);
  return cmd_cache_list(out);
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Exact computations in quantum matrices and quantum grassmannians", "qgrass"};
  app.require_subcommand(1);
  app.add_option("--cache-dir", cfg.cache_dir, "straightening cache directory (default: $QGRASS_CACHE_DIR)");
  app.add_option("--out", cfg.out, "also write the report to this path stem");
  app.add_flag("--json", cfg.json, "print JSON instead of text");
  app.add_flag("--serial", cfg.serial, "run the serial reference path");
  app.add_option("--seed", cfg.seed, "seed for randomised checks");

  auto ambient_opts = [&](CLI::App* sub) {
    sub->add_option("--k", cfg.k, "rows k")->check(CLI::Range(1, 31));
    sub->add_option("--n", cfg.n, "columns n")->check(CLI::Range(2, 32));
  };

  auto* straighten_cmd = app.add_subcommand("straighten", "expand a Pluecker word in standard monomials");
  ambient_opts(straighten_cmd);
  straighten_cmd->add_option("word", cfg.word, "word such as [13][12]")->required();

  auto* verify_cmd = app.add_subcommand("verify-lemmas", "run named exact checks");
  ambient_opts(verify_cmd);
  verify_cmd->add_flag("--all", cfg.all, "run every applicable check");
  verify_cmd->add_option("--lemma", cfg.lemmas, "check name (repeatable)")->check(CLI::IsMember(lemma_names()));
  verify_cmd->add_option("--budget", cfg.budget, "largest number of generators accepted");

  auto* hh1_cmd = app.add_subcommand("hh1", "derivation, inner and quotient dimensions per shift");
  ambient_opts(hh1_cmd);
  hh1_cmd->add_option("--cap", cfg.cap, "highest relation degree imposed");
  hh1_cmd->add_option("--shifts", cfg.shifts, "shift list, e.g. -1,0,1,2 or -1..2")->allow_extra_args(false);
  hh1_cmd->add_option("--q0", cfg.q0, "specialisation point for the rank cross-check, e.g. 2/3");

  auto* dehom_cmd = app.add_subcommand("dehom-check", "dehomogenisation identities");
  ambient_opts(dehom_cmd);

  auto* decompose_cmd = app.add_subcommand("decompose", "write quantum-matrix derivations via row and column derivations");
  decompose_cmd->add_option("--m", cfg.m, "rows");
  decompose_cmd->add_option("--n", cfg.cols, "columns");
  decompose_cmd->add_option("--input", cfg.input, "derivation JSON (default: every solver-found derivation)");

  auto* cache_cmd = app.add_subcommand("cache", "manage the straightening cache");
  cache_cmd->require_subcommand(1);
  auto* cache_list = cache_cmd->add_subcommand("list", "list cache files");
  auto* cache_clear = cache_cmd->add_subcommand("clear", "remove cache files");
  auto* cache_warm = cache_cmd->add_subcommand("warm", "build and store degrees 1..deg");
  ambient_opts(cache_warm);
  cache_warm->add_option("--deg", cfg.degree, "highest degree");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (!cfg.cache_dir.empty()) set_cache_directory(cfg.cache_dir);
    if (*straighten_cmd) return cmd_straighten(cfg, out);
    if (*verify_cmd) return cmd_verify(cfg, out);
    if (*hh1_cmd) return cmd_hh1(cfg, out);
    if (*dehom_cmd) return cmd_dehom(cfg, out);
    if (*decompose_cmd) return cmd_decompose(cfg, out);
    if (*cache_list) return cmd_cache_list(out);
    if (*cache_clear) return cmd_cache_clear(out);
    if (*cache_warm) return cmd_cache_warm(cfg, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "rejected: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "rejected: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}

} // namespace qgrass
