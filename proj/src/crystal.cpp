#include "alcovia/crystal.hpp"

namespace alcovia {

std::optional<CriticalData> critical(const Walk& p, int i) {
  const RootSystem& rs = p.root_system();
  rs.require_simple_index(i);
  const int ai = i - 1;  // index of alpha_i among the roots
  std::optional<CriticalData> best;
  for (int k = 1; k <= p.size(); ++k) {
    const Step& st = p.step(k);
    if (st.kind != StepKind::NegCross || st.wall.root != ai) continue;
    if (!best || st.wall.level > best->hyperplane.level)
      best = CriticalData{st.wall, k, RaiseCase::Degenerate, 0};
  }
  if (!best) return std::nullopt;
  const AffRoot above{ai, best->hyperplane.level + 1};
  for (int k = best->crossing + 1; k <= p.size(); ++k) {
    const Step& st = p.step(k);
    if (st.kind == StepKind::Fold && st.wall == above) {
      best->kind = RaiseCase::FoldAbove;
      best->event = k;
      break;
    }
    if (st.kind == StepKind::PosCross && st.wall == best->hyperplane) {
      best->kind = RaiseCase::PositiveCrossSame;
      best->event = k;
      break;
    }
  }
  return best;
}

std::optional<RaiseResult> raise_detailed(const Walk& p, int i) {
  const auto crit = critical(p, i);
  if (!crit) return std::nullopt;
  const RootSystem& rs = p.root_system();
  std::vector<bool> mask = p.mask();
  mask[crit->crossing - 1] = true;
  AffElem expected = p.end();
  switch (crit->kind) {
    case RaiseCase::FoldAbove:
      mask[crit->event - 1] = false;
      expected = aff_mul(rs, aff_translation(rs, rs.simple_coroot(i)), p.end());
      break;
    case RaiseCase::PositiveCrossSame:
      mask[crit->event - 1] = true;
      break;
    case RaiseCase::Degenerate:
      expected = aff_mul(rs, aff_reflection(rs, crit->hyperplane), p.end());
      break;
  }
  std::optional<Walk> out;
  try {
    out.emplace(p.with_mask(std::move(mask)));
  } catch (const Error& e) {
    fail(ErrorKind::InternalOperatorDeath,
         std::string("root operator produced an invalid walk: ") + e.what());
  }
  if (out->end() != expected)
    fail(ErrorKind::InternalOperatorDeath, "root operator broke the end-alcove law");
  if (out->dim() != p.dim() + 1)
    fail(ErrorKind::InternalOperatorDeath, "root operator did not raise dim by one");
  return RaiseResult{std::move(*out), *crit};
}

std::optional<Walk> raise(const Walk& p, int i) {
  auto r = raise_detailed(p, i);
  if (!r) return std::nullopt;
  return std::move(r->walk);
}

std::optional<Walk> raise_power(const Walk& p, int i, int m) {
  if (m < 0) fail(ErrorKind::InvalidArgument, "raise_power: negative exponent");
  std::optional<Walk> cur = p;
  for (int j = 0; j < m && cur; ++j) cur = raise(*cur, i);
  return cur;
}

}  // namespace alcovia
