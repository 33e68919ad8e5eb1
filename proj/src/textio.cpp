#include "parahess/textio.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace parahess {

using nlohmann::json;

std::vector<int> parse_int_list(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  std::vector<int> out;
  text = trim(text);
  if (text.empty()) return out;
  while (true) {
    const auto comma = text.find(',');
    const auto item = trim(text.substr(0, comma));
    int value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
      throw std::invalid_argument("expected a comma-separated list of integers, got '" + std::string(text) + "'");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

Partition parse_partition(std::string_view text) {
  auto parts = parse_int_list(text);
  if (parts.empty()) throw std::invalid_argument("partition must have at least one part");
  return Partition(std::move(parts));
}

ParabolicData parse_parabolic(std::string_view text, int n) { return ParabolicData(n, parse_int_list(text)); }

HessenbergFunction parse_hessenberg(std::string_view text) { return HessenbergFunction(parse_int_list(text)); }

Permutation parse_permutation(std::string_view text) { return Permutation(parse_int_list(text)); }

Permutation parse_word(std::string_view text, int n) { return perm_from_word(parse_int_list(text), n); }

std::string join_ints(const std::vector<int>& values, std::string_view sep) {
  std::string out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) out += sep;
    out += std::to_string(values[k]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// JSON

json to_json(const Polynomial& p) { return json(p.coefficients()); }

json to_json(const Permutation& w) { return json(std::vector<int>(w.images().begin(), w.images().end())); }

json to_json(const RootSet& roots) {
  json out = json::array();
  for (const auto& r : roots.members()) out.push_back({r.i, r.j});
  return out;
}

json to_json(const Tableau& T) { return json(T.rows()); }

json to_json(const SchubertPoint& sp) {
  return {{"source", to_json(sp.source)},
          {"tableau", to_json(sp.tableau)},
          {"point", to_json(sp.point)},
          {"word", reduced_word(sp.point)},
          {"string_lengths", sp.string_lengths}};
}

json to_json(const MainTheoremReport& report) {
  json tops = json::array();
  for (const auto& t : report.tops) tops.push_back(to_json(t));
  return {{"lambda", report.lambda.parts()},
          {"J", report.parabolic.J()},
          {"hessenberg_poly", to_json(report.hessenberg_poly)},
          {"schubert_union_poly", to_json(report.schubert_union_poly)},
          {"equal", report.equal},
          {"in_hypothesis", report.in_hypothesis},
          {"tops", tops}};
}

json to_json(const ComponentCandidate& c) {
  return {{"v", to_json(c.v)},
          {"top_cell", to_json(c.top_cell)},
          {"schubert_top", to_json(c.schubert_top)},
          {"cell_dim", c.cell_dim},
          {"full_cell", c.full_cell},
          {"heuristic_maximal", c.heuristic_maximal}};
}

namespace {

json failure_json(const CheckFailure& f) {
  return {{"lambda", f.lambda.parts()},
          {"J", f.parabolic.J()},
          {"witness", f.witness ? to_json(*f.witness) : json(nullptr)},
          {"detail", f.detail}};
}

} // namespace

json to_json(const CheckReport& report) {
  json failures = json::array();
  for (const auto& f : report.failures) failures.push_back(failure_json(f));
  json notes = json::array();
  for (const auto& f : report.out_of_hypothesis) notes.push_back(failure_json(f));
  return {{"check_id", report.check_id},
          {"n", report.n},
          {"cases_run", report.cases_run},
          {"passed", report.passed()},
          {"failures", failures},
          {"out_of_hypothesis", notes},
          {"elapsed_seconds", report.elapsed.count()}};
}

json to_json(const Census& census) {
  json rows = json::array();
  if (census.granularity == CensusGranularity::cells) {
    for (const auto& r : census.cells)
      rows.push_back({{"lambda", r.lambda.parts()},
                      {"J", r.parabolic.J()},
                      {"w", to_json(r.w)},
                      {"v", to_json(r.v)},
                      {"y", to_json(r.y)},
                      {"dim", r.dim},
                      {"springer", r.springer},
                      {"schubert_point", to_json(r.schubert_point)}});
  } else {
    for (const auto& r : census.summaries)
      rows.push_back({{"lambda", r.lambda.parts()},
                      {"J", r.parabolic.J()},
                      {"hessenberg_poly", to_json(r.hessenberg_poly)},
                      {"schubert_union_poly", to_json(r.schubert_union_poly)},
                      {"equal", r.equal},
                      {"in_hypothesis", r.in_hypothesis}});
  }
  return {{"n", census.n},
          {"granularity", census.granularity == CensusGranularity::cells ? "cells" : "summaries"},
          {"rows", rows}};
}

// ---------------------------------------------------------------------------
// CSV

namespace {

std::string quoted(const std::string& s) { return '"' + s + '"'; }

std::string coeff_list(const Polynomial& p) {
  std::string out;
  for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
    if (k) out += ',';
    out += std::to_string(p.coefficients()[k]);
  }
  return out;
}

} // namespace

std::string to_csv(const Census& census) {
  std::ostringstream out;
  if (census.granularity == CensusGranularity::cells) {
    out << "lambda,J,w,v,y,dim,springer,schubert_point\n";
    for (const auto& r : census.cells)
      out << quoted(r.lambda.to_string()) << ',' << quoted(r.parabolic.to_string()) << ',' << quoted(r.w.to_string())
          << ',' << quoted(r.v.to_string()) << ',' << quoted(r.y.to_string()) << ',' << r.dim << ','
          << (r.springer ? "true" : "false") << ',' << quoted(r.schubert_point.to_string()) << '\n';
  } else {
    out << "lambda,J,hessenberg_poly,schubert_union_poly,equal,in_hypothesis\n";
    for (const auto& r : census.summaries)
      out << quoted(r.lambda.to_string()) << ',' << quoted(r.parabolic.to_string()) << ','
          << quoted(coeff_list(r.hessenberg_poly)) << ',' << quoted(coeff_list(r.schubert_union_poly)) << ','
          << (r.equal ? "true" : "false") << ',' << (r.in_hypothesis ? "true" : "false") << '\n';
  }
  return out.str();
}

} // namespace parahess
