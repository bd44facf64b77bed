#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include "flatcover/bounds.hpp"
#include "flatcover/census.hpp"
#include "flatcover/codec.hpp"
#include "flatcover/error.hpp"
#include "flatcover/johnson.hpp"
#include "flatcover/kw_encoder.hpp"
#include "flatcover/verify.hpp"

namespace flatcover::cli {
namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct VerificationFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// "-" means `out`.
void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text) || !file.flush()) throw IoError("cannot write '" + path + "'");
}

std::string format_interval(const Interval& x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x.mid());
  return buf;
}

std::string graph_name(int n, int r) { return "J(" + std::to_string(n) + "," + std::to_string(r) + ")"; }

// ---- census ----------------------------------------------------------------

struct CensusArgs {
  int n = 0;
  std::optional<int> rank;
  std::string emit_dir;
  int jobs = 1;
};

void print_census_row(std::ostream& out, const std::string& n, const std::string& r, const std::string& m,
                      const std::string& s, const std::string& unlabeled) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%3s %3s %12s %12s %10s\n", n.c_str(), r.c_str(), m.c_str(), s.c_str(),
                unlabeled.c_str());
  out << buf;
}

void run_census(const CensusArgs& a, std::ostream& out) {
  if (a.n < 0 || a.n > 7) throw Error(ErrorCode::TooLarge, "census needs 0 <= n <= 7");
  if (a.rank && (*a.rank < 0 || *a.rank > a.n)) throw Error(ErrorCode::RankOutOfRange, "rank must be in 0..n");
  if (!a.emit_dir.empty()) std::filesystem::create_directories(a.emit_dir);

  std::vector<int> emitted(static_cast<std::size_t>(a.n) + 1, 0);
  auto emit = [&](const Matroid& m) {
    char name[64];
    std::snprintf(name, sizeof name, "n%d_r%d_%06d.matroid", m.ground_size(), m.rank(), emitted[m.rank()]++);
    write_output((std::filesystem::path(a.emit_dir) / name).string(), to_text(m), std::cout);
  };

  print_census_row(out, "n", "r", "m_{n,r}", "s_{n,r}", "unlabeled");
  const bool unlabeled = a.n <= 6;
  if (a.rank) {
    const int r = *a.rank;
    std::uint64_t labeled = 0;
    std::set<std::vector<ElementSet>> classes;
    for_each_matroid(
        a.n, r,
        [&](const Matroid& m) {
          ++labeled;
          if (unlabeled) classes.insert(canonical_form(m));
          if (!a.emit_dir.empty()) emit(m);
        },
        EnumerationStrategy::Automatic, a.jobs);
    print_census_row(out, std::to_string(a.n), std::to_string(r), std::to_string(labeled),
                     count_sparse_paving(a.n, r).get_str(), unlabeled ? std::to_string(classes.size()) : "-");
    return;
  }
  CensusOptions options;
  options.jobs = a.jobs;
  options.unlabeled = unlabeled;
  if (!a.emit_dir.empty()) options.sink = emit;
  const CensusResult c = count_matroids(a.n, options);
  for (int r = 0; r <= a.n; ++r) {
    print_census_row(out, std::to_string(a.n), std::to_string(r), c.matroid_counts[r].get_str(),
                     c.sparse_paving_counts[r].get_str(), unlabeled ? std::to_string(c.unlabeled_counts[r]) : "-");
  }
  print_census_row(out, "total", "", c.total_matroids.get_str(), c.total_sparse_paving.get_str(),
                   c.total_unlabeled ? std::to_string(*c.total_unlabeled) : "-");
}

// ---- johnson ---------------------------------------------------------------

void run_johnson(int n, int r, const std::string& action, std::ostream& out) {
  const JohnsonGraph g(n, r);
  if (action == "info") {
    out << "N=" << g.vertex_count() << " d=" << g.degree() << " lambda=" << to_string(mpq_class(g.smallest_eigenvalue_magnitude().numerator(),
                                                    g.smallest_eigenvalue_magnitude().denominator()))
        << " alpha=" << to_string(kw_alpha(g)) << '\n';
    if (g.degree() > 0) {
      out << "sigma*N=" << format_interval(sigma_times_n(g)) << " |S|<=" << selected_bound(g)
          << " |A|<=" << available_bound(g) << '\n';
    }
    out << "hoffman alpha(G)<=" << g.vertex_count() / static_cast<std::size_t>(std::max(r, n - r) + 1) << '\n';
  } else if (action == "gs-stable") {
    const auto cls = graham_sloane_stable_set(n, r);
    out << "color " << graham_sloane_color(n, cls.front()) << " size " << cls.size() << '\n';
    for (ElementSet x : cls) out << x.to_string() << '\n';
  } else if (action == "dominating") {
    const auto dom = greedy_dominating_set(g);
    out << "size " << dom.size() << '\n';
    for (ElementSet x : dom) out << x.to_string() << '\n';
  } else if (action == "max-stable") {
    const int alpha = brute_max_stable_set(g);
    out << "alpha=" << alpha << '\n';
  } else {
    const mpz_class count = brute_count_stable_sets(g);
    out << "i=" << count.get_str() << '\n';
  }
}

// ---- kw ----------------------------------------------------------------------

std::vector<ElementSet> read_element_lines(const std::string& text, int n) {
  std::vector<ElementSet> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[line.find_first_not_of(" \t")] == '#') continue;
    out.push_back(parse_element_line(line, n));
  }
  return out;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

bool run_kw(int n, int r, const std::string& k_path, std::ostream& out) {
  const JohnsonGraph g(n, r);
  std::vector<Vertex> k;
  for (ElementSet x : read_element_lines(read_file(k_path), n)) {
    if (x.size() != r) throw Error(ErrorCode::WrongCardinality, "{" + x.to_string() + "} is not an r-set");
    k.push_back(g.index_of(x));
  }
  std::sort(k.begin(), k.end());
  k.erase(std::unique(k.begin(), k.end()), k.end());

  const KWEncoding enc = kw_encode(g, k);
  for (Vertex v : enc.selected) out << "S " << g.vertex_at(v).to_string() << '\n';
  for (Vertex v : enc.available) out << "A " << g.vertex_at(v).to_string() << '\n';

  std::vector<char> in_k(g.vertex_count(), 0), reach(g.vertex_count(), 0);
  for (Vertex v : k) in_k[v] = 1;
  bool s_in_k = true;
  std::vector<Vertex> around;
  for (Vertex v : enc.selected) {
    s_in_k = s_in_k && in_k[v];
    reach[v] = 1;
    g.neighbors(v, around);
    for (Vertex u : around) reach[u] = 1;
  }
  for (Vertex v : enc.available) reach[v] = 1;
  const bool covered = std::all_of(k.begin(), k.end(), [&](Vertex v) { return reach[v] != 0; });
  const bool replay = reconstruct_available(g, enc.selected) == enc.available;
  const bool s_ok = enc.selected.size() <= selected_bound(g);
  const bool a_ok = enc.available.size() <= available_bound(g);

  out << "|K|=" << k.size() << " |S|=" << enc.selected.size() << " (<= " << selected_bound(g) << ")"
      << " |A|=" << enc.available.size() << " (<= " << available_bound(g) << ")\n";
  out << "S in K: " << yes_no(s_in_k) << "\n";
  out << "K in S+N(S)+A: " << yes_no(covered) << "\n";
  out << "A replayed from S: " << yes_no(replay) << "\n";
  out << "size bounds: " << yes_no(s_ok && a_ok) << "\n";
  return s_in_k && covered && replay && s_ok && a_ok;
}

// ---- bounds ------------------------------------------------------------------

void run_bounds(int n_max, bool json, std::ostream& out) {
  if (n_max < 0 || n_max > 64) throw Error(ErrorCode::TooLarge, "bounds need n-max <= 64");
  std::vector<CensusTotals> census;
  for (int n = 0; n <= std::min(n_max, 7); ++n) {
    CensusOptions options;
    options.unlabeled = false;
    const CensusResult c = count_matroids(n, options);
    census.push_back({n, c.total_matroids, c.total_sparse_paving});
  }
  const auto rows = headline_table(n_max, census);
  if (json) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
      nlohmann::ordered_json bounds = nlohmann::ordered_json::array();
      for (const auto& b : describe(row)) {
        bounds.push_back({{"name", b.name}, {"lo", b.value.lo}, {"hi", b.value.hi},
                          {"exactness", to_string(b.exactness)}});
      }
      doc.push_back({{"n", row.n}, {"bounds", bounds}});
    }
    out << doc.dump(2) << '\n';
    return;
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "%3s %11s %11s %11s %11s %11s %11s %11s\n", "n", "knuth", "headline", "loglog_piff",
                "kw_s", "kw_m", "log2_m", "log2_s");
  out << buf;
  for (const auto& row : rows) {
    auto cell = [](const std::optional<Interval>& x) { return x ? format_interval(*x) : std::string("-"); };
    std::snprintf(buf, sizeof buf, "%3d %11s %11s %11s %11s %11s %11s %11s\n", row.n,
                  format_interval(row.knuth_lower).c_str(), format_interval(row.headline_upper).c_str(),
                  row.n >= 2 ? format_interval(row.piff_loglog).c_str() : "-", cell(row.kw_sn_max).c_str(),
                  cell(row.kw_mn_max).c_str(), cell(row.census_log2_mn).c_str(), cell(row.census_log2_sn).c_str());
    out << buf;
  }
}

// ---- verify ------------------------------------------------------------------

struct Example {
  std::vector<std::string> args;
  std::string expected;
  int line = 0;
};

// Collects "$ flatcover ..." lines inside fenced blocks; the expected output
// runs to the next "$" line or the closing fence.
std::vector<Example> readme_examples(const std::string& text) {
  std::vector<Example> out;
  std::istringstream in(text);
  std::string line;
  bool fenced = false;
  Example* open = nullptr;
  for (int number = 1; std::getline(in, line); ++number) {
    if (line.rfind("```", 0) == 0) {
      fenced = !fenced;
      open = nullptr;
      continue;
    }
    if (!fenced) continue;
    if (line.rfind("$ ", 0) == 0) {
      open = nullptr;
      std::istringstream words(line.substr(2));
      std::vector<std::string> args;
      for (std::string w; words >> w;) args.push_back(w);
      if (args.empty() || args.front() != "flatcover") continue;
      args.erase(args.begin());
      out.push_back({std::move(args), {}, number});
      open = &out.back();
    } else if (open) {
      open->expected += line + '\n';
    }
  }
  return out;
}

bool run_readme(const std::string& path, std::ostream& out) {
  int checked = 0;
  int failed = 0;
  for (const Example& ex : readme_examples(read_file(path))) {
    if (!ex.args.empty() && ex.args.front() == "verify") continue;
    std::ostringstream got, ignored;
    run(ex.args, got, ignored);
    ++checked;
    if (got.str() != ex.expected) {
      ++failed;
      out << "FAIL [readme] line " << ex.line << ": output differs\n--- expected\n"
          << ex.expected << "--- got\n" << got.str();
    }
  }
  out << (failed == 0 ? "PASS" : "FAIL") << " [readme] " << checked << " examples";
  if (failed > 0) out << ", " << failed << " differ";
  out << '\n';
  return failed == 0;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"Sparse paving matroids, Johnson graphs and flat-cover certificates", "flatcover"};
  app.require_subcommand(1);

  CensusArgs census;
  auto* census_cmd = app.add_subcommand("census", "count matroids and sparse paving matroids on n elements");
  census_cmd->add_option("--n", census.n, "ground set size (n <= 7)")->required();
  census_cmd->add_option("--rank", census.rank, "restrict to one rank");
  census_cmd->add_option("--emit-matroids", census.emit_dir, "write every matroid to this directory");
  census_cmd->add_option("--jobs", census.jobs, "worker threads")->check(CLI::Range(1, 64));

  int n = 0, r = 0;
  std::string action, k_path;
  auto* johnson_cmd = app.add_subcommand("johnson", "parameters and structures of J(n,r)");
  johnson_cmd->add_option("--n", n)->required();
  johnson_cmd->add_option("--r", r)->required();
  johnson_cmd->add_option("action", action)
      ->required()
      ->check(CLI::IsMember({"info", "gs-stable", "dominating", "max-stable", "count-stable"}));

  auto* kw_cmd = app.add_subcommand("kw", "run the encoding procedure on a vertex set K of J(n,r)");
  kw_cmd->add_option("--n", n)->required();
  kw_cmd->add_option("--r", r)->required();
  kw_cmd->add_option("--k", k_path, "file with one r-set per line")->required();

  std::string in_path, out_path = "-", method = "kw";
  auto* encode_cmd = app.add_subcommand("encode", "matroid file to certificate");
  encode_cmd->add_option("--in", in_path)->required();
  encode_cmd->add_option("--method", method)->check(CLI::IsMember({"kw", "dominating"}));
  encode_cmd->add_option("--out", out_path, "output file, - for stdout");

  auto* decode_cmd = app.add_subcommand("decode", "certificate to matroid file");
  decode_cmd->add_option("--in", in_path)->required();
  decode_cmd->add_option("--out", out_path, "output file, - for stdout");

  int n_max = 0;
  bool json = false;
  auto* bounds_cmd = app.add_subcommand("bounds", "evaluate the bound chains for n <= n-max");
  bounds_cmd->add_option("--n-max", n_max)->required();
  bounds_cmd->add_flag("--json", json);

  std::string level = "full", readme;
  std::uint64_t seed = 1;
  auto* verify_cmd = app.add_subcommand("verify", "run the acceptance suite");
  verify_cmd->add_option("--level", level)->check(CLI::IsMember({"quick", "full"}));
  verify_cmd->add_option("--seed", seed);
  verify_cmd->add_option("--readme", readme, "also replay the examples in this file");

  std::vector<std::string> argv_storage{"flatcover"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  }

  if (census_cmd->parsed()) {
    run_census(census, out);
  } else if (johnson_cmd->parsed()) {
    run_johnson(n, r, action, out);
  } else if (kw_cmd->parsed()) {
    if (!run_kw(n, r, k_path, out)) throw VerificationFailed("encoding invariants violated");
  } else if (encode_cmd->parsed()) {
    std::istringstream in(read_file(in_path));
    const Matroid m = read_matroid(in);
    std::ostringstream os;
    write_encoded(os, encode(m, parse_method(method)));
    write_output(out_path, os.str(), out);
  } else if (decode_cmd->parsed()) {
    std::istringstream in(read_file(in_path));
    write_output(out_path, to_text(decode(read_encoded(in))), out);
  } else if (bounds_cmd->parsed()) {
    run_bounds(n_max, json, out);
  } else if (verify_cmd->parsed()) {
    const auto results = run_acceptance(level == "full" ? VerifyLevel::Full : VerifyLevel::Quick, seed, &out);
    bool ok = std::all_of(results.begin(), results.end(), [](const CriterionResult& c) { return c.passed; });
    if (!readme.empty()) ok = run_readme(readme, out) && ok;
    if (!ok) throw VerificationFailed("verification failed");
  }
  return kOk;
}

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::TooLarge:
      return kTooLarge;
    case ErrorCode::RankOutOfRange:
    case ErrorCode::PreconditionViolated:
      return kUsage;
    default:
      return kInvalidInput;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(args, out);
  } catch (const CLI::ParseError& e) {
    err << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIo;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kIo;
  } catch (const VerificationFailed& e) {
    err << "error: " << e.what() << "\n";
    return kVerificationFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.code());
  }
}

}  // namespace flatcover::cli
