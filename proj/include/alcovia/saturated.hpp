#pragma once

// Saturated sets, string parameters and the optimal-dimension path builder.

#include <set>
#include <vector>

#include "alcovia/crystal.hpp"

namespace alcovia {

/// mu lies in the saturated set of the dominant lambda.
bool contains(const RootSystem& rs, const Coweight& lambda, const Coweight& mu);

std::set<Coweight> saturated_set(const RootSystem& rs, const Coweight& lambda,
                                 const Bounds& bounds = Bounds{});

struct StringData {
  Word word;
  std::vector<Coweight> mus;  // mu_0 .. mu_N
  std::vector<int> ms;        // m_1 .. m_N
};

/// Throws NotReducedWord unless word is a reduced word for w0, and
/// NotInSaturatedSet unless mu lies in the saturated set.
StringData string_parameters(const RootSystem& rs, const Coweight& lambda,
                             const Coweight& mu, const Word& word);

struct BuiltPath {
  Walk walk;
  StringData strings;
};

/// e~_{i_1}^{m_1} ... e~_{i_N}^{m_N} applied to the antidominant walk.
BuiltPath build_path(const RootSystem& rs, const Coweight& lambda, const Coweight& mu,
                     const Word& word);
BuiltPath build_path(const RootSystem& rs, const Coweight& lambda, const Coweight& mu);

}  // namespace alcovia
