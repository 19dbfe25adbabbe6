#pragma once

// Raising root operators e~_i on positively folded walks.

#include <optional>

#include "alcovia/walks.hpp"

namespace alcovia {

enum class RaiseCase { FoldAbove, PositiveCrossSame, Degenerate };  // (a), (b), (c)

struct CriticalData {
  AffRoot hyperplane;   // H_{alpha_i + k delta}, k maximal with a negative crossing
  int crossing = 0;     // 1-based step of the first negative crossing on it
  RaiseCase kind = RaiseCase::Degenerate;
  int event = 0;        // 1-based step of the deciding event, 0 in case (c)
};

std::optional<CriticalData> critical(const Walk& p, int i);

struct RaiseResult {
  Walk walk;
  CriticalData data;
};

/// e~_i(p) with its case data. The end-alcove law and dim + 1 are checked
/// on every application; a violation throws InternalOperatorDeath.
std::optional<RaiseResult> raise_detailed(const Walk& p, int i);
std::optional<Walk> raise(const Walk& p, int i);
std::optional<Walk> raise_power(const Walk& p, int i, int m);

}  // namespace alcovia
