// parahess: command-line front end.
//
// Exit status: 0 ok, 1 domain error, 2 usage error, 3 verify found failures.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "parahess/components.hpp"
#include "parahess/harness.hpp"
#include "parahess/hessvar.hpp"
#include "parahess/schubert.hpp"
#include "parahess/textio.hpp"

using namespace parahess;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string partition;
  std::string parabolic;
  std::string hessenberg;
  std::string perm;
  std::string word;
  std::string format = "text";
  std::string out;
  std::string granularity = "summaries";
  std::string checks;
  int n = 0;
  unsigned threads = 0;

  CLI::Option* parabolic_opt = nullptr;
  CLI::Option* hessenberg_opt = nullptr;
  CLI::Option* perm_opt = nullptr;
  CLI::Option* word_opt = nullptr;
};

std::string one_line(const Permutation& w) { return "[" + w.to_string() + "]"; }

std::string word_text(const Permutation& w) { return word_to_string(reduced_word(w)); }

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (o.format == f) return;
  throw UsageError("--format " + o.format + " is not supported by this command");
}

bool has(const CLI::Option* opt) { return opt != nullptr && opt->count() > 0; }

/// The Hessenberg space of a command: exactly one of --parabolic / --hessenberg.
HessenbergFunction hessenberg_of(const Options& o, const Partition& lambda) {
  const bool p = has(o.parabolic_opt), h = has(o.hessenberg_opt);
  if (p == h) throw UsageError("give exactly one of --parabolic or --hessenberg");
  if (p) return h_from_J(parse_parabolic(o.parabolic, lambda.size()));
  auto hf = parse_hessenberg(o.hessenberg);
  if (hf.degree() != lambda.size())
    throw std::invalid_argument("--hessenberg has degree " + std::to_string(hf.degree()) + " but the partition has size " +
                                std::to_string(lambda.size()));
  return hf;
}

ParabolicData parabolic_of(const Options& o, const Partition& lambda) {
  return parabolic_from_h(hessenberg_of(o, lambda));
}

std::optional<Permutation> permutation_of(const Options& o, int n) {
  const bool p = has(o.perm_opt), w = has(o.word_opt);
  if (p && w) throw UsageError("give at most one of --perm or --word");
  if (p) {
    auto perm = parse_permutation(o.perm);
    if (perm.degree() != n)
      throw std::invalid_argument("--perm has degree " + std::to_string(perm.degree()) + " but the partition has size " +
                                  std::to_string(n));
    return perm;
  }
  if (w) return parse_word(o.word, n);
  return std::nullopt;
}

int cmd_poincare(const Options& o, std::ostream& out) {
  require_format(o, {"text", "json", "csv"});
  const auto lambda = parse_partition(o.partition);
  const auto h = hessenberg_of(o, lambda);
  const auto poly = poincare_hessenberg(lambda, h);
  if (o.format == "text") {
    out << poly.to_string() << '\n';
  } else if (o.format == "json") {
    out << json{{"lambda", lambda.parts()}, {"h", h.values()}, {"poincare", to_json(poly)}}.dump(2) << '\n';
  } else {
    out << "degree,cells\n";
    for (std::size_t k = 0; k < poly.coefficients().size(); ++k) out << k << ',' << poly.coefficients()[k] << '\n';
  }
  return 0;
}

int cmd_springer(const Options& o, std::ostream& out) {
  require_format(o, {"text", "json", "csv"});
  const auto lambda = parse_partition(o.partition);
  std::vector<Permutation> flags;
  if (auto w = permutation_of(o, lambda.size())) {
    if (!springer_contains(*w, lambda)) {
      const auto T = springer_tableau(*w, lambda);
      throw std::domain_error(one_line(*w) + " is not in the Springer fiber: tableau " + T.to_string() +
                              " is not row-strict");
    }
    flags.push_back(*w);
  } else {
    for (const auto& c : springer_cells(lambda)) flags.push_back(c.w);
  }

  if (o.format == "json") {
    json rows = json::array();
    for (const auto& w : flags)
      rows.push_back({{"w", to_json(w)},
                      {"tableau", to_json(springer_tableau(w, lambda))},
                      {"dim", springer_cell_dim(w, lambda)},
                      {"row_inversions", row_inversion_profile(springer_tableau(w, lambda))}});
    out << json{{"lambda", lambda.parts()}, {"cells", rows}}.dump(2) << '\n';
  } else if (o.format == "csv") {
    out << "w,tableau,dim\n";
    for (const auto& w : flags)
      out << '"' << w.to_string() << "\",\"" << springer_tableau(w, lambda).to_string() << "\","
          << springer_cell_dim(w, lambda) << '\n';
  } else {
    for (const auto& w : flags)
      out << one_line(w) << "  " << springer_tableau(w, lambda).to_string() << "  dim " << springer_cell_dim(w, lambda)
          << '\n';
  }
  return 0;
}

int cmd_schubert_point(const Options& o, std::ostream& out) {
  require_format(o, {"text", "json"});
  const auto lambda = parse_partition(o.partition);
  const auto w = permutation_of(o, lambda.size());
  if (!w) throw UsageError("schubert-point needs --perm or --word");
  const auto sp = schubert_point(*w, lambda);
  if (o.format == "json") {
    out << to_json(sp).dump(2) << '\n';
  } else {
    out << word_text(sp.point) << '\n' << one_line(sp.point) << '\n';
  }
  return 0;
}

int cmd_union(const Options& o, std::ostream& out) {
  require_format(o, {"text", "json"});
  const auto lambda = parse_partition(o.partition);
  const auto report = verify_main_theorem(lambda, parabolic_of(o, lambda));
  if (o.format == "json") {
    out << to_json(report).dump(2) << '\n';
    return 0;
  }
  out << "hessenberg:     " << report.hessenberg_poly.to_string() << '\n'
      << "schubert union: " << report.schubert_union_poly.to_string() << '\n'
      << "equal:          " << (report.equal ? "true" : "false") << '\n'
      << "in hypothesis:  " << (report.in_hypothesis ? "true" : "false") << '\n';
  for (const auto& t : report.tops) out << "top " << one_line(t) << "  " << word_text(t) << '\n';
  return 0;
}

int cmd_components(const Options& o, std::ostream& out) {
  require_format(o, {"text", "json", "csv"});
  const auto lambda = parse_partition(o.partition);
  const auto cs = component_candidates(lambda, parabolic_of(o, lambda));
  if (o.format == "json") {
    json rows = json::array();
    for (const auto& c : cs) rows.push_back(to_json(c));
    out << rows.dump(2) << '\n';
  } else if (o.format == "csv") {
    out << "v,top_cell,schubert_top,cell_dim,full_cell,heuristic_maximal\n";
    for (const auto& c : cs)
      out << '"' << c.v.to_string() << "\",\"" << c.top_cell.to_string() << "\",\"" << c.schubert_top.to_string()
          << "\"," << c.cell_dim << ',' << (c.full_cell ? "true" : "false") << ','
          << (c.heuristic_maximal ? "true" : "false") << '\n';
  } else {
    for (const auto& c : cs)
      out << "v=" << word_text(c.v) << "  top=" << word_text(c.schubert_top) << "  dim " << c.cell_dim
          << (c.full_cell ? "  full" : "") << (c.heuristic_maximal ? "  maximal" : "") << '\n';
  }
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  require_format(o, {"text", "json", "csv"});
  std::vector<std::string> checks;
  std::stringstream ss(o.checks);
  for (std::string id; std::getline(ss, id, ',');)
    if (!id.empty()) checks.push_back(id);
  for (const auto& id : checks)
    if (std::find(check_ids().begin(), check_ids().end(), id) == check_ids().end())
      throw UsageError("unknown check id '" + id + "'");
  if (o.n < 1 || o.n > kMaxHarnessDegree)
    throw UsageError("--n must be between 1 and " + std::to_string(kMaxHarnessDegree));

  const auto reports = run_checks(o.n, checks, o.threads);
  bool ok = true;
  for (const auto& r : reports) ok &= r.passed();

  if (o.format == "json") {
    json rows = json::array();
    for (const auto& r : reports) rows.push_back(to_json(r));
    out << json{{"passed", ok}, {"reports", rows}}.dump(2) << '\n';
  } else if (o.format == "csv") {
    out << "check_id,n,cases_run,failures,out_of_hypothesis,elapsed_seconds\n";
    for (const auto& r : reports)
      out << r.check_id << ',' << r.n << ',' << r.cases_run << ',' << r.failures.size() << ','
          << r.out_of_hypothesis.size() << ',' << r.elapsed.count() << '\n';
  } else {
    for (const auto& r : reports) {
      char elapsed[32];
      std::snprintf(elapsed, sizeof elapsed, "%.3fs", r.elapsed.count());
      out << (r.passed() ? "PASS " : "FAIL ") << r.check_id << " n=" << r.n << " cases=" << r.cases_run;
      if (!r.out_of_hypothesis.empty()) out << " recorded=" << r.out_of_hypothesis.size();
      out << " (" << elapsed << ")\n";
      for (const auto& f : r.failures) {
        out << "  lambda=" << f.lambda.to_string() << " J={" << f.parabolic.to_string() << "}";
        if (f.witness) out << " w=" << one_line(*f.witness);
        out << ": " << f.detail << '\n';
      }
    }
    out << (ok ? "all checks passed" : "some checks failed") << '\n';
  }
  return ok ? 0 : 3;
}

int cmd_census(const Options& o, std::ostream& out) {
  require_format(o, {"text", "json", "csv"});
  if (o.n < 1 || o.n > kMaxHarnessDegree)
    throw UsageError("--n must be between 1 and " + std::to_string(kMaxHarnessDegree));
  const auto g = o.granularity == "cells" ? CensusGranularity::cells : CensusGranularity::summaries;
  const auto data = census(o.n, g, o.threads);
  if (o.format == "json")
    out << to_json(data).dump(2) << '\n';
  else
    out << to_csv(data);
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cells, Poincare polynomials and Schubert points of nilpotent Hessenberg varieties"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--out", o.out, "Write output to this file instead of stdout");
  };
  auto add_partition = [&](CLI::App* sub) {
    sub->add_option("--partition", o.partition, "Jordan type, e.g. 2,1,1")->required();
  };
  auto add_space = [&](CLI::App* sub) {
    o.parabolic_opt = sub->add_option("--parabolic", o.parabolic, "Simple reflections J, e.g. 1,3 (may be empty)")
                          ->expected(0, 1);
    o.hessenberg_opt = sub->add_option("--hessenberg", o.hessenberg, "Hessenberg function, e.g. 2,2,4,4");
    o.parabolic_opt->excludes(o.hessenberg_opt);
  };
  auto add_perm = [&](CLI::App* sub) {
    o.perm_opt = sub->add_option("--perm", o.perm, "Permutation in one-line notation, e.g. 3,4,1,2");
    o.word_opt = sub->add_option("--word", o.word, "Permutation as a word in s_i, e.g. 2,1,3,2");
    o.perm_opt->excludes(o.word_opt);
  };
  auto add_degree = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "Degree")->required()->check(CLI::Range(1, kMaxHarnessDegree));
    sub->add_option("--threads", o.threads, "Worker threads (0 = hardware concurrency)");
  };

  auto* poincare = app.add_subcommand("poincare", "Poincare polynomial of B(X,H)");
  add_partition(poincare);
  add_space(poincare);
  add_format(poincare);

  auto* springer = app.add_subcommand("springer", "Springer fiber cells, or one flag with --perm/--word");
  add_partition(springer);
  add_perm(springer);
  add_format(springer);

  auto* schubert = app.add_subcommand("schubert-point", "Schubert point of a Springer fiber flag");
  add_partition(schubert);
  add_perm(schubert);
  add_format(schubert);

  auto* uni = app.add_subcommand("union", "Hessenberg and Schubert-union polynomials side by side");
  add_partition(uni);
  add_space(uni);
  add_format(uni);

  auto* comps = app.add_subcommand("components", "Candidate irreducible components");
  add_partition(comps);
  add_space(comps);
  add_format(comps);

  auto* verify = app.add_subcommand("verify", "Run the exhaustive checks for degrees 1..n");
  add_degree(verify);
  verify->add_option("--checks", o.checks, "Comma-separated check ids (default: all)");
  add_format(verify);

  auto* cen = app.add_subcommand("census", "Dataset of cells or per-(lambda, J) summaries");
  add_degree(cen);
  cen->add_option("--granularity", o.granularity, "cells or summaries")
      ->check(CLI::IsMember({"cells", "summaries"}));
  add_format(cen);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  // Subcommands share one Options; the option pointers of the chosen one win.
  auto* chosen = app.get_subcommands().front();
  auto find = [&](const char* name) -> CLI::Option* {
    try {
      return chosen->get_option(name);
    } catch (const CLI::OptionNotFound&) {
      return nullptr;
    }
  };
  o.parabolic_opt = find("--parabolic");
  o.hessenberg_opt = find("--hessenberg");
  o.perm_opt = find("--perm");
  o.word_opt = find("--word");

  std::ostringstream buffer;
  int status = 0;
  try {
    const std::string name = chosen->get_name();
    if (name == "poincare") status = cmd_poincare(o, buffer);
    else if (name == "springer") status = cmd_springer(o, buffer);
    else if (name == "schubert-point") status = cmd_schubert_point(o, buffer);
    else if (name == "union") status = cmd_union(o, buffer);
    else if (name == "components") status = cmd_components(o, buffer);
    else if (name == "verify") status = cmd_verify(o, buffer);
    else status = cmd_census(o, buffer);
  } catch (const UsageError& e) {
    std::cerr << "parahess: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "parahess: " << e.what() << '\n';
    return 1;
  }

  if (o.out.empty()) {
    std::cout << buffer.str();
  } else {
    std::ofstream file(o.out);
    if (!file || !(file << buffer.str())) {
      std::cerr << "parahess: cannot write " << o.out << '\n';
      return 1;
    }
  }
  return status;
}
