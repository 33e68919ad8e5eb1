#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "parahess/components.hpp"
#include "parahess/harness.hpp"
#include "parahess/hessvar.hpp"
#include "parahess/schubert.hpp"
#include "parahess/textio.hpp"

namespace py = pybind11;
using namespace parahess;

namespace {

// Structured results cross the boundary as plain dicts and lists, reusing
// the JSON encoders.
py::object to_py(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

std::vector<int> one_line(const Permutation& w) { return {w.images().begin(), w.images().end()}; }

HessenbergFunction space(const Partition& lambda, const std::optional<std::vector<int>>& parabolic,
                         const std::optional<std::vector<int>>& hessenberg) {
  if (parabolic.has_value() == hessenberg.has_value())
    throw std::invalid_argument("give exactly one of parabolic or hessenberg");
  if (parabolic) return h_from_J(ParabolicData(lambda.size(), *parabolic));
  return HessenbergFunction(*hessenberg);
}

Permutation flag(int n, const std::optional<std::vector<int>>& perm, const std::optional<std::vector<int>>& word) {
  if (perm.has_value() == word.has_value()) throw std::invalid_argument("give exactly one of perm or word");
  return perm ? Permutation(*perm) : perm_from_word(*word, n);
}

} // namespace

PYBIND11_MODULE(parahess, m) {
  m.doc() = "Cells, Poincare polynomials and Schubert points of nilpotent Hessenberg varieties";

  m.def(
      "poincare",
      [](std::vector<int> partition, std::optional<std::vector<int>> parabolic,
         std::optional<std::vector<int>> hessenberg) {
        const Partition lambda(std::move(partition));
        return poincare_hessenberg(lambda, space(lambda, parabolic, hessenberg)).coefficients();
      },
      py::arg("partition"), py::kw_only(), py::arg("parabolic") = py::none(), py::arg("hessenberg") = py::none(),
      "Ascending coefficients of the Poincare polynomial.");

  m.def(
      "poincare_string",
      [](std::vector<int> partition, std::optional<std::vector<int>> parabolic,
         std::optional<std::vector<int>> hessenberg) {
        const Partition lambda(std::move(partition));
        return poincare_hessenberg(lambda, space(lambda, parabolic, hessenberg)).to_string();
      },
      py::arg("partition"), py::kw_only(), py::arg("parabolic") = py::none(), py::arg("hessenberg") = py::none());

  m.def(
      "hess_contains",
      [](std::vector<int> perm, std::vector<int> partition, std::vector<int> hessenberg) {
        return hess_contains(Permutation(std::move(perm)), Partition(std::move(partition)),
                             HessenbergFunction(std::move(hessenberg)));
      },
      py::arg("perm"), py::arg("partition"), py::arg("hessenberg"));

  m.def(
      "cell_dim",
      [](std::vector<int> perm, std::vector<int> partition, std::vector<int> hessenberg) {
        return cell_dim(Permutation(std::move(perm)), Partition(std::move(partition)),
                        HessenbergFunction(std::move(hessenberg)));
      },
      py::arg("perm"), py::arg("partition"), py::arg("hessenberg"));

  m.def(
      "springer_cells",
      [](std::vector<int> partition) {
        const Partition lambda(std::move(partition));
        py::list out;
        for (const auto& c : springer_cells(lambda)) {
          py::dict row;
          row["w"] = one_line(c.w);
          row["tableau"] = springer_tableau(c.w, lambda).rows();
          row["dim"] = c.dim;
          out.append(row);
        }
        return out;
      },
      py::arg("partition"));

  m.def(
      "W_X_J",
      [](std::vector<int> partition, std::vector<int> parabolic) {
        const Partition lambda(std::move(partition));
        std::vector<std::vector<int>> out;
        for (const auto& v : W_X_J(lambda, ParabolicData(lambda.size(), std::move(parabolic))))
          out.push_back(one_line(v));
        return out;
      },
      py::arg("partition"), py::arg("parabolic"));

  m.def(
      "schubert_point",
      [](std::vector<int> partition, std::optional<std::vector<int>> perm, std::optional<std::vector<int>> word) {
        const Partition lambda(std::move(partition));
        return to_py(to_json(schubert_point(flag(lambda.size(), perm, word), lambda)));
      },
      py::arg("partition"), py::kw_only(), py::arg("perm") = py::none(), py::arg("word") = py::none());

  m.def(
      "perm_from_word",
      [](std::vector<int> word, int n) { return one_line(perm_from_word(word, n)); }, py::arg("word"), py::arg("n"));

  m.def(
      "bruhat_leq",
      [](std::vector<int> u, std::vector<int> w) {
        return bruhat_leq(Permutation(std::move(u)), Permutation(std::move(w)));
      },
      py::arg("u"), py::arg("w"));

  m.def(
      "bruhat_lower_ideal",
      [](std::vector<std::vector<int>> tops, int n) {
        std::vector<Permutation> ps;
        for (auto& t : tops) ps.emplace_back(std::move(t));
        std::vector<std::vector<int>> out;
        for (const auto& u : bruhat_lower_ideal(ps, n)) out.push_back(one_line(u));
        return out;
      },
      py::arg("tops"), py::arg("n"));

  m.def(
      "verify_main_theorem",
      [](std::vector<int> partition, std::vector<int> parabolic) {
        const Partition lambda(std::move(partition));
        return to_py(to_json(verify_main_theorem(lambda, ParabolicData(lambda.size(), std::move(parabolic)))));
      },
      py::arg("partition"), py::arg("parabolic"));

  m.def(
      "component_candidates",
      [](std::vector<int> partition, std::vector<int> parabolic) {
        const Partition lambda(std::move(partition));
        nlohmann::json out = nlohmann::json::array();
        for (const auto& c : component_candidates(lambda, ParabolicData(lambda.size(), std::move(parabolic))))
          out.push_back(to_json(c));
        return to_py(out);
      },
      py::arg("partition"), py::arg("parabolic"));

  m.def("check_ids", &check_ids);

  m.def(
      "run_checks",
      [](int n_max, std::vector<std::string> checks, unsigned threads) {
        std::vector<CheckReport> reports;
        {
          py::gil_scoped_release release;
          reports = run_checks(n_max, checks, threads);
        }
        nlohmann::json out = nlohmann::json::array();
        for (const auto& r : reports) out.push_back(to_json(r));
        return to_py(out);
      },
      py::arg("n_max"), py::arg("checks") = std::vector<std::string>{}, py::arg("threads") = 0);

  m.def(
      "census",
      [](int n, const std::string& granularity, unsigned threads) {
        if (granularity != "cells" && granularity != "summaries")
          throw std::invalid_argument("granularity must be 'cells' or 'summaries'");
        Census c;
        {
          py::gil_scoped_release release;
          c = census(n, granularity == "cells" ? CensusGranularity::cells : CensusGranularity::summaries, threads);
        }
        return to_py(to_json(c));
      },
      py::arg("n"), py::arg("granularity") = "summaries", py::arg("threads") = 0);
}
