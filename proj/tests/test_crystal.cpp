#include "doctest.h"

#include "alcovia/crystal.hpp"
#include "sweep.hpp"

using namespace alcovia;

TEST_CASE("A1 root operator") {
  const auto a1 = RootSystem::build("A1");
  const AffElem gamma{Coweight{1}, a1.simple(1)};
  const Walk neg(a1, WalkType{{1}, gamma}, {});
  const auto crit = critical(neg, 1);
  REQUIRE(crit);
  CHECK(crit->hyperplane == AffRoot{0, 0});
  CHECK(crit->crossing == 1);
  CHECK(crit->kind == RaiseCase::Degenerate);

  const auto up = raise(neg, 1);
  REQUIRE(up);
  CHECK(up->folds() == std::vector<int>{1});
  CHECK(neg.end() == aff_translation(a1, Coweight{-1}));
  CHECK(up->end() == gamma);
  CHECK(up->dim() == 1);
  CHECK(!critical(*up, 1));
  CHECK(!raise(*up, 1));

  const Walk anti = antidominant_walk(a1, Coweight{1});
  CHECK(raise_power(anti, 1, 0) == anti);
  CHECK(raise_power(anti, 1, 1) == *raise(anti, 1));
  CHECK(!raise_power(anti, 1, 2));
}

TEST_CASE("root operators on a 20-step A2 walk") {
  const auto a2 = RootSystem::build("A2");
  const Word letters{1, 2, 0, 1, 0, 2, 0, 1, 0, 2, 1, 0, 2, 1, 0, 2, 1, 0, 2, 1};
  const Walk p(a2, WalkType{letters, aff_identity(a2)}, {5, 7, 15});
  CHECK(!critical(p, 2));
  CHECK(!raise(p, 2));
  const auto crit = critical(p, 1);
  REQUIRE(crit);
  CHECK(crit->hyperplane == AffRoot{0, 5});
  CHECK(crit->crossing == 13);

  int applied = 0;
  std::optional<Walk> cur = p;
  while ((cur = raise(*cur, 1))) ++applied;
  CHECK(applied == 6);
}

TEST_CASE("raising laws over a sweep") {
  int cases[3] = {0, 0, 0};
  for (const char* label : {"A1", "A2", "C2", "G2"}) {
    const auto rs = RootSystem::build(label);
    for (const Coweight& lam : sweep::dominant_up_to(rs, 12)) {
      CAPTURE(label);
      CAPTURE(lam.str());
      for (const auto& [mu, walks] : enumerate_P_lambda(rs, lam)) {
        const int top = half_pair_rho(rs, lam, mu);
        for (const Walk& p : walks) {
          for (int i = 1; i <= rs.rank(); ++i) {
            const auto r = raise_detailed(p, i);
            CHECK(r.has_value() == critical(p, i).has_value());
            if (!r) continue;
            const Walk& q = r->walk;
            ++cases[static_cast<int>(r->data.kind)];
            CHECK(q.type().letters == p.type().letters);
            CHECK(q.type().omega == p.type().omega);
            CHECK(q.dim() == p.dim() + 1);
            // rebuilding from the fold positions revalidates positivity
            CHECK(Walk(rs, q.type(), q.folds()) == q);
            const Coweight up = mu + rs.simple_coroot(i);
            switch (r->data.kind) {
              case RaiseCase::FoldAbove:
                CHECK(q.end() == aff_mul(rs, aff_translation(rs, rs.simple_coroot(i)), p.end()));
                break;
              case RaiseCase::PositiveCrossSame:
                CHECK(q.end() == p.end());
                break;
              case RaiseCase::Degenerate:
                CHECK(q.end() == aff_mul(rs, aff_reflection(rs, r->data.hyperplane), p.end()));
                break;
            }
            CHECK((q.weight() == mu || q.weight() == up));
            if (p.dim() == top) CHECK(q.weight() == up);
          }
        }
      }
    }
  }
  // every case occurs somewhere in the sweep
  CHECK(cases[0] > 0);
  CHECK(cases[1] > 0);
  CHECK(cases[2] > 0);
}
