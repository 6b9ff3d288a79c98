// cocoa-kit: generators, evaluation, decision procedures and size tables for
// omega-automata with transition-based acceptance and chains of co-Büchi
// automata.
//
// Exit codes: 0 success / property holds, 1 semantic failure (a witness or
// violation is printed), 2 usage or parse errors.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cocoakit/families.hpp"
#include "cocoakit/io.hpp"
#include "cocoakit/lasso.hpp"
#include "cocoakit/lowerbound.hpp"
#include "cocoakit/ops.hpp"

using namespace cocoakit;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Parse, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Parse, "cannot write '" + path + "'");
  out << content;
}

Automaton load_dpw(const std::string& path) {
  ParsedFile file = parse_aut_or_cocoa(read_file(path));
  if (auto* aut = std::get_if<Automaton>(&file.content)) {
    if (!is_deterministic(*aut))
      throw Error(ErrorCode::NotDeterministic,
                  "'" + path + "' is not deterministic");
    return std::move(*aut);
  }
  // chains are admitted wherever a DPW is expected, via the product
  return cocoa_to_dpw(std::get<Cocoa>(file.content));
}

// ---------------------------------------------------------------- gen ----

int run_gen(const std::string& family, int k, int i, int j,
            const std::string& out, std::string name,
            const std::string& format) {
  bool needs_k = family != "example31-dpw";
  if (needs_k && k < 1) {
    std::cerr << "gen: --k must be a positive integer\n";
    return 2;
  }
  if (name.empty()) {
    name = family;
    if (needs_k) name += "-" + std::to_string(k);
    if (family == "dcw-l") name += "-" + std::to_string(i);
    if (family == "dcw-lhat") name += "-" + std::to_string(j);
  }

  std::optional<Automaton> aut;
  std::optional<Cocoa> chain;
  if (family == "prop1-dpw") aut = gen_prop1_dpw(k);
  else if (family == "prop1-cocoa") chain = gen_prop1_cocoa(k);
  else if (family == "cocoa-c") chain = gen_cocoa_C(k);
  else if (family == "dcw-l") aut = gen_dcw_L(k, i);
  else if (family == "dcw-lhat") aut = gen_dcw_Lhat(k, j);
  else if (family == "dpw-p") aut = gen_dpw_P(k);
  else if (family == "dpw-phat") aut = gen_dpw_Phat(k);
  else if (family == "cocoa-theorem2") chain = gen_cocoa_theorem2(k);
  else if (family == "example31-dpw") aut = gen_example31_dpw();
  else {
    std::cerr << "gen: unknown family '" << family << "'\n";
    return 2;
  }

  if (format == "hoa") {
    if (!aut) {
      std::cerr << "gen: --format hoa applies to single automata only\n";
      return 2;
    }
    write_output(out, print_hoa(*aut, name));
    return 0;
  }
  write_output(out, aut ? print_aut(*aut, name) : print_cocoa(*chain, name));
  return 0;
}

// --------------------------------------------------------------- eval ----

int run_eval(const std::string& path, const std::string& lasso_text) {
  ParsedFile file = parse_aut_or_cocoa(read_file(path));
  LassoWord w = parse_lasso(lasso_text);
  int color;
  if (auto* aut = std::get_if<Automaton>(&file.content)) {
    if (!is_deterministic(*aut))
      throw Error(ErrorCode::NotDeterministic,
                  "'" + path + "' is not deterministic; eval needs a DPW or "
                  "a chain file");
    color = dpw_color(*aut, w);
  } else {
    color = cocoa_color(std::get<Cocoa>(file.content), w);
  }
  std::cout << "color=" << color << " accepted="
            << (color % 2 == 0 ? "true" : "false") << "\n";
  return 0;
}

// -------------------------------------------------------------- check ----

int run_check(const std::string& kind, const std::vector<std::string>& paths,
              int k, const std::string& cert_out) {
  auto need_paths = [&](size_t n) {
    if (paths.size() != n)
      throw Error(ErrorCode::Invalid,
                  "check " + kind + " expects " + std::to_string(n) +
                      " file argument(s)");
  };

  if (kind == "contains" || kind == "equiv") {
    need_paths(2);
    Automaton a = load_dpw(paths[0]);
    Automaton b = load_dpw(paths[1]);
    ContainsResult r =
        kind == "contains" ? dpw_contains(a, b) : dpw_equivalent(a, b);
    if (r.holds) {
      std::cout << kind << ": holds\n";
      return 0;
    }
    std::cout << kind << ": fails witness=" << format_lasso(*r.witness)
              << "\n";
    return 1;
  }

  if (kind == "empty") {
    need_paths(1);
    Automaton a = load_dpw(paths[0]);
    auto witness = multi_parity_witness({{&a, Polarity::RequireAccepting}});
    if (!witness) {
      std::cout << "empty: holds\n";
      return 0;
    }
    std::cout << "empty: fails witness=" << format_lasso(*witness) << "\n";
    return 1;
  }

  if (kind == "chain") {
    need_paths(1);
    Cocoa chain = parse_cocoa(read_file(paths[0]));
    std::vector<Automaton> det;
    for (const Automaton& m : chain.members())
      det.push_back(mh_determinize(m));
    auto diags = chain_validate(Cocoa(std::move(det)));
    if (diags.empty()) {
      std::cout << "chain: valid\n";
      return 0;
    }
    for (const ChainDiagnostic& d : diags) std::cout << d.message() << "\n";
    return 1;
  }

  if (kind == "certify") {
    need_paths(1);
    if (k < 1) throw Error(ErrorCode::Invalid, "check certify needs --k");
    Automaton dpw = load_dpw(paths[0]);
    CertifyResult result = certify_lower_bound(dpw, k);
    if (auto* violation = std::get_if<LowerBoundViolation>(&result)) {
      std::cout << violation->message() << "\n";
      return 1;
    }
    const auto& cert = std::get<LowerBoundCertificate>(result);
    auto problems = verify_certificate(dpw, cert);
    if (!problems.empty()) {
      for (const std::string& p : problems) std::cout << p << "\n";
      return 1;
    }
    std::cout << "bound=" << cert.bound << "\n";
    std::string text = serialize_certificate(cert);
    if (!cert_out.empty())
      write_output(cert_out, text);
    else
      std::cout << text;
    return 0;
  }

  throw Error(ErrorCode::Invalid, "unknown check kind '" + kind + "'");
}

// -------------------------------------------------------------- table ----

struct Row {
  std::string family;
  int k;
  std::string representation;
  int states;
  int colors;
  int residuals;  // -1 when not applicable
  double ms;
};

int distinct_colors(const Automaton& aut) {
  return static_cast<int>(aut.color_set().size());
}

class Stopwatch {
 public:
  double lap() {
    auto now = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
    return ms;
  }

 private:
  std::chrono::steady_clock::time_point last_ =
      std::chrono::steady_clock::now();
};

void theorem1_rows(int kmax, std::vector<Row>& rows) {
  for (int k = 1; k <= kmax; ++k) {
    Stopwatch timer;
    Cocoa chain = gen_cocoa_C(k);
    rows.push_back({"theorem1", k, "cocoa", cocoa_size(chain), 2, -1,
                    timer.lap()});
    Automaton product = cocoa_to_dpw(chain);
    int residuals = residual_partition(product).class_count();
    rows.push_back({"theorem1", k, "dpw-product", product.state_count(),
                    distinct_colors(product), residuals, timer.lap()});
    CertifyResult certified = certify_lower_bound(product, k);
    int bound = std::holds_alternative<LowerBoundCertificate>(certified)
                    ? std::get<LowerBoundCertificate>(certified).bound
                    : 0;
    rows.push_back({"theorem1", k, "certified-bound", bound, -1, -1,
                    timer.lap()});
  }
}

void prop1_rows(int kmax, std::vector<Row>& rows) {
  for (int k = 1; k <= kmax; ++k) {
    Stopwatch timer;
    Automaton dpw = gen_prop1_dpw(k);
    rows.push_back({"prop1", k, "dpw", dpw.state_count(),
                    distinct_colors(dpw),
                    residual_partition(dpw).class_count(), timer.lap()});
    Cocoa chain = gen_prop1_cocoa(k);
    Automaton product = cocoa_to_dpw(chain);
    rows.push_back({"prop1", k, "cocoa", cocoa_size(chain), 2,
                    residual_partition(product).class_count(), timer.lap()});
  }
}

void prop4_rows(int kmax, std::vector<Row>& rows) {
  for (int k = 1; k <= kmax; ++k) {
    Stopwatch timer;
    Automaton p = gen_dpw_P(k);
    rows.push_back({"prop4", k, "dpw-p", p.state_count(), distinct_colors(p),
                    residual_partition(p).class_count(), timer.lap()});
    Automaton phat = gen_dpw_Phat(k);
    rows.push_back({"prop4", k, "dpw-phat", phat.state_count(),
                    distinct_colors(phat),
                    residual_partition(phat).class_count(), timer.lap()});
    std::vector<Automaton> l_levels, lhat_levels;
    for (int i = 1; i <= k; ++i) {
      l_levels.push_back(gen_dcw_L(k, i));
      lhat_levels.push_back(gen_dcw_Lhat(k, i));
    }
    Cocoa l_chain(l_levels), lhat_chain(lhat_levels);
    rows.push_back({"prop4", k, "cocoa-l", cocoa_size(l_chain), 2,
                    residual_partition(cocoa_to_dpw(l_chain)).class_count(),
                    timer.lap()});
    rows.push_back({"prop4", k, "cocoa-lhat", cocoa_size(lhat_chain), 2,
                    residual_partition(cocoa_to_dpw(lhat_chain)).class_count(),
                    timer.lap()});
  }
}

void theorem2_rows(int kmax, std::vector<Row>& rows) {
  for (int k = 1; k <= kmax; ++k) {
    Stopwatch timer;
    Cocoa full = gen_cocoa_theorem2(k);
    Cocoa trimmed = gen_cocoa_theorem2_nondominated(k);
    rows.push_back({"theorem2", k, "chain-full", cocoa_size(full), 2, -1,
                    timer.lap()});
    rows.push_back({"theorem2", k, "chain-nondominated", cocoa_size(trimmed),
                    2, -1, timer.lap()});
    for (int u = 1; u <= 2 * k; ++u) {
      const Automaton& a = full.member(u);
      const Automaton& b = trimmed.member(u);
      rows.push_back({"theorem2", k, "full-level" + std::to_string(u),
                      a.state_count(), distinct_colors(a),
                      residual_partition(a).class_count(), timer.lap()});
      // flag levels whose maximal-pair grouping changes the language
      bool differs = !dpw_equivalent(a, b).holds;
      rows.push_back({"theorem2", k,
                      "nondominated-level" + std::to_string(u) +
                          (differs ? "-differs" : ""),
                      b.state_count(), distinct_colors(b),
                      residual_partition(b).class_count(), timer.lap()});
    }
    Automaton product = cocoa_to_dpw(full);
    rows.push_back({"theorem2", k, "dpw-product", product.state_count(),
                    distinct_colors(product), -1, timer.lap()});
    Automaton p = gen_dpw_P(k);
    rows.push_back({"theorem2", k, "dpw-p", p.state_count(),
                    distinct_colors(p), residual_partition(p).class_count(),
                    timer.lap()});
    Automaton phat = gen_dpw_Phat(k);
    rows.push_back({"theorem2", k, "dpw-phat", phat.state_count(),
                    distinct_colors(phat),
                    residual_partition(phat).class_count(), timer.lap()});
  }
}

int run_table(const std::string& which, int kmax, const std::string& format) {
  int default_kmax = which == "theorem2" ? 2 : 4;
  int cap = which == "theorem2" ? 2 : 6;
  if (kmax <= 0) kmax = default_kmax;
  if (kmax > cap) {
    std::cerr << "table " << which << ": --kmax is capped at " << cap << "\n";
    return 2;
  }

  std::vector<Row> rows;
  if (which == "theorem1") theorem1_rows(kmax, rows);
  else if (which == "prop1") prop1_rows(kmax, rows);
  else if (which == "prop4") prop4_rows(kmax, rows);
  else if (which == "theorem2") theorem2_rows(kmax, rows);
  else {
    std::cerr << "table: unknown kind '" << which << "'\n";
    return 2;
  }

  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return std::tie(a.family, a.k, a.representation) <
           std::tie(b.family, b.k, b.representation);
  });

  auto cell = [](int v) { return v < 0 ? std::string() : std::to_string(v); };
  if (format == "csv") {
    // timings are excluded so the output is byte-identical across runs
    std::cout << "family,k,representation,states,colors,residuals\n";
    for (const Row& r : rows)
      std::cout << r.family << "," << r.k << "," << r.representation << ","
                << cell(r.states) << "," << cell(r.colors) << ","
                << cell(r.residuals) << "\n";
    return 0;
  }

  std::cout << "family      k  representation              states colors residuals   wall_ms\n";
  for (const Row& r : rows) {
    char line[160];
    std::snprintf(line, sizeof line, "%-10s %2d  %-26s %7s %6s %9s %9.2f\n",
                  r.family.c_str(), r.k, r.representation.c_str(),
                  cell(r.states).c_str(), cell(r.colors).c_str(),
                  cell(r.residuals).c_str(), r.ms);
    std::cout << line;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cocoa-kit: omega-automata and chains of co-Büchi automata"};
  app.require_subcommand(1);
  app.footer("The COCOAKIT_SEED environment variable (default 0) seeds the "
             "reproducible sampling utilities.");

  std::string family, out, name, format = "aut";
  int k = 0, i = -1, j = -1;
  auto* gen = app.add_subcommand("gen", "generate a family automaton or chain");
  gen->add_option("family", family,
                  "prop1-dpw | prop1-cocoa | cocoa-c | dcw-l | dcw-lhat | "
                  "dpw-p | dpw-phat | cocoa-theorem2 | example31-dpw")
      ->required();
  gen->add_option("--k", k, "family index");
  gen->add_option("--i", i, "level for dcw-l (0..k)");
  gen->add_option("--j", j, "level for dcw-lhat (0..k)");
  gen->add_option("--out", out, "output path ('-' or absent for stdout)");
  gen->add_option("--name", name, "name token for the output header");
  gen->add_option("--format", format, "aut (default) or hoa")
      ->check(CLI::IsMember({"aut", "hoa"}));

  std::string eval_path, eval_lasso;
  auto* eval = app.add_subcommand("eval", "evaluate a lasso word on a file");
  eval->add_option("file", eval_path, "AUT or COCOA file")->required();
  eval->add_option("lasso", eval_lasso, "lasso, e.g. 'X_1 a_0|a_3 a_3'")
      ->required();

  std::string kind, cert_out;
  std::vector<std::string> paths;
  int check_k = 0;
  auto* check = app.add_subcommand("check", "decision procedures");
  check->add_option("kind", kind, "contains | equiv | empty | chain | certify")
      ->required();
  check->add_option("files", paths, "input files")->expected(1, 2);
  check->add_option("--k", check_k, "family index for certify");
  check->add_option("--cert-out", cert_out, "certificate output path");

  std::string which, table_format = "text";
  int kmax = 0;
  auto* table = app.add_subcommand("table", "size and residual tables");
  table->add_option("which", which, "theorem1 | theorem2 | prop1 | prop4")
      ->required();
  table->add_option("--kmax", kmax, "largest family index");
  table->add_option("--format", table_format, "text (default) or csv")
      ->check(CLI::IsMember({"text", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) return run_gen(family, k, i, j, out, name, format);
    if (eval->parsed()) return run_eval(eval_path, eval_lasso);
    if (check->parsed()) return run_check(kind, paths, check_k, cert_out);
    if (table->parsed()) return run_table(which, kmax, table_format);
  } catch (const Error& e) {
    std::cerr << "cocoa-kit: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "cocoa-kit: internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
