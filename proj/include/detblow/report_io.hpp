#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "detblow/blowup.hpp"
#include "detblow/bminimal.hpp"
#include "detblow/hilburch.hpp"
#include "detblow/liaison.hpp"
#include "detblow/secants.hpp"

namespace detblow {

using Json = nlohmann::ordered_json;

// Matrix JSON schema (shared with the CLI):
// { "p": int, "n": int, "rows": int, "cols": int, "degree_matrix": [[int]],
//   "entries": [[ {"monomial": [int,...], "coeff": int}, ... ]],
//   "seed": optional int }
Json matrix_to_json(const HilbertBurchMatrix& m, std::optional<std::uint64_t> seed = std::nullopt);
HilbertBurchMatrix matrix_from_json(const Json& j);

std::vector<std::string> w_names(int n);

Json variety_report_to_json(const VarietyReport& rep);
std::string variety_report_to_text(const VarietyReport& rep);
std::string hilbert_csv(const VarietyReport& rep);

Json locus_to_json(const RankLocusReport& rep);
std::string locus_to_text(const std::string& label, const RankLocusReport& rep);

Json presentation_to_json(const BlowupPresentation& pres, const YReport* y);
std::string presentation_to_text(const BlowupPresentation& pres, const YReport* y);

Json profile_to_json(const BMinimalProfile& profile);
Json betti_to_json(const BettiTable& table);

Json linkage_to_json(const LinkageData& link);

} // namespace detblow
