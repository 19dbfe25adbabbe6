#pragma once

// Text, JSON and TikZ renderings of walks and polynomials.

#include <string>

#include "json.hpp"

#include "alcovia/spherical.hpp"
#include "alcovia/walks.hpp"

namespace alcovia {

/// "1,2,1" style list.
std::string word_str(const Word& w);
/// Canonical word of the finite part of a length-zero element as digits, or "e".
std::string omega_str(const RootSystem& rs, const AffElem& gamma);
/// One character per step ('+', '-', 'f') followed by "@w=<omega>".
std::string walk_text(const Walk& p);
nlohmann::json walk_json(const Walk& p);
nlohmann::json coweight_json(const Coweight& mu);

/// "x^(1,1): 1" lines, one per weight in sorted order.
std::string group_algebra_text(const GroupAlgebraElem& e);
nlohmann::json group_algebra_json(const GroupAlgebraElem& e);

/// Standalone TikZ picture of a rank-2 walk: the hyperplanes near the walk
/// and the walk drawn through alcove barycenters.
std::string walk_tikz(const Walk& p);

}  // namespace alcovia
