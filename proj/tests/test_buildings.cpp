#include "doctest.h"

#include <algorithm>

#include "alcovia/buildings.hpp"
#include "alcovia/saturated.hpp"
#include "sweep.hpp"

using namespace alcovia;

namespace {

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::int64_t eval_poly(const std::vector<std::int64_t>& c, std::int64_t x) {
  std::int64_t r = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
  return r;
}

}  // namespace

TEST_CASE("labelled counts of single walks") {
  const auto a2 = RootSystem::build("A2");
  const Coweight lam{1, 1};
  const Walk anti = antidominant_walk(a2, lam);
  CHECK(labelled_count(anti, Thickness::uniform(a2, 2)) == 1);
  CHECK(labelled_count(anti, Thickness{{5, 3, 7}}) == 1);

  bool found = false;
  for (const auto& [mu, walks] : enumerate_P_lambda(a2, lam)) {
    for (const Walk& p : walks) {
      const WalkStats s = p.stats();
      if (s.pos == 2 && s.folds == 1) {
        found = true;
        CHECK(labelled_count(p, Thickness::uniform(a2, 3)) == 18);
      }
      // Thin panels at every folded letter kill the walk.
      if (s.folds > 0) {
        Thickness th = Thickness::uniform(a2, 4);
        th.q[p.type().letters[p.folds().front() - 1]] = 1;
        CHECK(labelled_count(p, th) == 0);
      }
      std::int64_t expect = 1;
      const Thickness th{{2, 3, 5}};
      for (int k = 1; k <= p.size(); ++k) {
        const std::int64_t q = th.at(p.type().letters[k - 1]);
        if (p.step(k).kind == StepKind::PosCross) expect *= q;
        if (p.step(k).kind == StepKind::Fold) expect *= q - 1;
      }
      CHECK(labelled_count(p, th) == expect);
    }
  }
  CHECK(found);
  CHECK_THROWS_AS(labelled_count(anti, Thickness{{2, 2}}), Error);
}

TEST_CASE("retraction fiber fixtures") {
  const auto a2 = RootSystem::build("A2");
  const Coweight lam{1, 1};
  for (int q : {2, 3, 7}) {
    CHECK(retraction_fiber_count(a2, lam, Coweight{-1, -1}, Thickness::uniform(a2, q)) == 1);
    CHECK(retraction_fiber_count(a2, lam, Coweight{3, 0}, Thickness::uniform(a2, q)) == 0);
    CHECK(retraction_fiber_count(a2, lam, Coweight{1, 0}, Thickness::uniform(a2, q)) == 0);
  }
  CHECK(retraction_fiber_count(a2, lam, Coweight{0, 0}, Thickness::uniform(a2, 2)) >= 1);
  CHECK(check_lower_bound(a2, lam, Coweight{-1, -1}, 2));
  CHECK(check_lower_bound(a2, lam, Coweight{0, 0}, 3));
  CHECK(retraction_fiber_count(a2, lam, Coweight{0, 0}, Thickness::uniform(a2, 3)) >= 4);
  CHECK_THROWS_AS(check_lower_bound(a2, lam, Coweight{3, 0}, 2), Error);

  const auto a1 = RootSystem::build("A1");
  CHECK(check_lower_bound(a1, Coweight{1}, Coweight{1}, 2));
  // The fold-free walk and the single-fold walk: 1 + (q - 1).
  CHECK(retraction_fiber_count(a1, Coweight{1}, Coweight{1}, Thickness::uniform(a1, 5)) == 5);
  CHECK(fiber_polynomial(a1, Coweight{1}, Coweight{1}) == std::vector<std::int64_t>{0, 1});
}

TEST_CASE("fiber polynomials over the sweep") {
  for (const char* label : {"A1", "A2", "C2", "G2"}) {
    const auto rs = RootSystem::build(label);
    for (const Coweight& lam : sweep::dominant_up_to(rs, 10)) {
      const auto all = enumerate_P_lambda(rs, lam);
      const auto sat = saturated_set(rs, lam);
      for (const Coweight& mu : sat) {
        CAPTURE(label);
        CAPTURE(lam.str());
        CAPTURE(mu.str());
        const auto pq = fiber_polynomial(rs, lam, mu);
        const auto pr = fiber_polynomial(rs, lam, mu, true);
        // At q = 1 every fold-free walk contributes 1, whatever its positive
        // crossings; the fold-free walks end at u m_lambda, one per weight of
        // the orbit.
        std::int64_t unfolded = 0;
        for (const Walk& p : all.at(mu))
          if (p.num_folds() == 0) ++unfolded;
        const auto orbit = rs.weyl_orbit(lam);
        const bool in_orbit = std::find(orbit.begin(), orbit.end(), mu) != orbit.end();
        CHECK(unfolded == (in_orbit ? 1 : 0));
        CHECK(eval_poly(pq, 1) == unfolded);
        CHECK(pr[0] == unfolded);
        for (std::int64_t c : pr) CHECK(c >= 0);
        const int exponent = half_pair_rho(rs, lam, mu);
        for (int q : {2, 3}) {
          const auto count = retraction_fiber_count(rs, lam, mu, Thickness::uniform(rs, q));
          CHECK(count == eval_poly(pq, q));
          CHECK(count == eval_poly(pr, q - 1));
          CHECK(count >= ipow(q - 1, exponent));
          CHECK(count > 0);
          CHECK(check_lower_bound(rs, lam, mu, q));
        }
      }
      if (lam == Coweight::zero(rs.rank())) continue;
      // Weights near Pi_lambda but outside it have empty fibers.
      for (const Coweight& mu : sat) {
        for (int i = 0; i < rs.rank(); ++i) {
          Coweight nu = mu;
          nu[i] += 1;
          if (contains(rs, lam, nu)) continue;
          CHECK(retraction_fiber_count(rs, lam, nu, Thickness::uniform(rs, 2)) == 0);
          CHECK(fiber_polynomial(rs, lam, nu) == std::vector<std::int64_t>{0});
        }
      }
    }
  }
}
