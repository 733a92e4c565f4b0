#pragma once

#include <string>
#include <vector>

#include "bicross/bicrossed.hpp"
#include "bicross/cyclic.hpp"
#include "bicross/factorization.hpp"
#include "bicross/iso.hpp"

namespace bicross {

// Group file: {"order": N, "table": [[...], ...], "labels": [...]?}.
// The reader accepts an identity at any index, relabels so it sits at
// index 0, and then validates every group axiom; the first violation is
// reported with witness indices. Throws Error(ParseError) on malformed
// input.
FiniteGroup group_from_json(const std::string& text);
std::string group_to_json(const FiniteGroup& g);

// Product groups carry their factorization data:
// {"order", "table", "labels", "factorization": {"h_order", "g_order",
//  "encoding": "row-major"}}.
std::string bicrossed_to_json(const BicrossedGroup& bi);

// Matched-pair file: {"H": <group>, "G": <group>, "alpha": [[...]],
// "beta": [[...]]}; validated on read.
MatchedPair matched_pair_from_json(const std::string& text);
std::string matched_pair_to_json(const MatchedPair& mp);

// {"iso": true, "map": [...]} or {"iso": false, "reason": "..."}
std::string certificate_to_json(const IsomorphismCertificate& cert);

// Pinned report schema:
// {"p", "m", "pairs": [{"theta", "phi", "group_order_profile"}],
//  "matches": [{"pair", "semidirect_r", "orientation"}],
//  "witness_branches": {"NormalH", "NormalG", "Corrected"}, "all_matched"}
std::string theorem_report_to_json(const TheoremReport& report);

// factorize output: [{"h": [...], "g": [...], "alpha": [[...]], "beta": [[...]]}]
std::string factorizations_to_json(const std::vector<ExactFactorization>& list);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace bicross
