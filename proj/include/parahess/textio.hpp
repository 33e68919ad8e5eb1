#pragma once

// Textual and JSON/CSV forms shared by the CLI and the Python module.

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "parahess/components.hpp"
#include "parahess/harness.hpp"
#include "parahess/hessvar.hpp"
#include "parahess/schubert.hpp"

namespace parahess {

/// "2,1,3" -> {2,1,3}; "" -> {}. Throws std::invalid_argument on junk.
std::vector<int> parse_int_list(std::string_view text);

Partition parse_partition(std::string_view text);
ParabolicData parse_parabolic(std::string_view text, int n);
HessenbergFunction parse_hessenberg(std::string_view text);
Permutation parse_permutation(std::string_view text);
Permutation parse_word(std::string_view text, int n);

std::string join_ints(const std::vector<int>& values, std::string_view sep = ",");

nlohmann::json to_json(const Polynomial& p);
nlohmann::json to_json(const Permutation& w);
nlohmann::json to_json(const RootSet& roots);
nlohmann::json to_json(const Tableau& T);
nlohmann::json to_json(const SchubertPoint& sp);
nlohmann::json to_json(const MainTheoremReport& report);
nlohmann::json to_json(const ComponentCandidate& c);
nlohmann::json to_json(const CheckReport& report);
nlohmann::json to_json(const Census& census);

/// CSV with a header row; list-valued fields are comma-joined and quoted.
std::string to_csv(const Census& census);

} // namespace parahess
