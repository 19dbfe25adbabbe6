#include "doctest.h"

#include <algorithm>

#include "alcovia/walks.hpp"
#include "sweep.hpp"

using namespace alcovia;

namespace {

// A 20-step A2 walk with three folds.
Walk example_walk(const RootSystem& a2) {
  const Word letters{1, 2, 0, 1, 0, 2, 0, 1, 0, 2, 1, 0, 2, 1, 0, 2, 1, 0, 2, 1};
  return Walk(a2, WalkType{letters, aff_identity(a2)}, {5, 7, 15});
}

}  // namespace

TEST_CASE("statistics of a 20-step A2 walk") {
  const auto a2 = RootSystem::build("A2");
  const Walk p = example_walk(a2);
  const WalkStats s = p.stats();
  CHECK(s.pos == 9);
  CHECK(s.neg == 8);
  CHECK(s.folds == 3);
  CHECK(s.length == 20);
  CHECK(s.signed_len == 1);
  CHECK(s.dim == 12);
  CHECK(2 * s.dim == s.length + s.signed_len + s.folds);
  CHECK(s.signed_len == signed_length(a2, p.end()));
}

TEST_CASE("small walks") {
  const auto a1 = RootSystem::build("A1");
  const AffElem gamma{Coweight{1}, a1.simple(1)};
  const Walk fold(a1, WalkType{{1}, gamma}, {1});
  const WalkStats s = fold.stats();
  CHECK(s.pos == 0);
  CHECK(s.folds == 1);
  CHECK(s.dim == 1);
  CHECK(s.weight == Coweight{1});
  CHECK(s.final_dir == a1.simple(1));

  const Walk empty(a1, WalkType{{}, aff_identity(a1)}, {});
  CHECK(empty.stats().length == 0);
  CHECK(empty.stats().dim == 0);
  CHECK(empty.weight() == Coweight{0});

  // a fold from the negative side is rejected
  CHECK_THROWS_AS(Walk(a1, WalkType{{1, 1}, aff_identity(a1)}, {2}), Error);
  CHECK_THROWS_AS(Walk(a1, WalkType{{2}, aff_identity(a1)}, {}), Error);
  CHECK_THROWS_AS(Walk(a1, WalkType{{}, AffElem{Coweight{2}, a1.identity()}}, {}), Error);
}

TEST_CASE("enumeration of a single type") {
  const auto a1 = RootSystem::build("A1");
  const auto w = enumerate_walks(a1, WalkType{{1}, aff_identity(a1)});
  REQUIRE(w.size() == 2);
  CHECK(w[0].folds().empty());
  CHECK(w[1].folds() == std::vector<int>{1});
  CHECK(enumerate_walks(a1, WalkType{{}, aff_identity(a1)}).size() == 1);

  Bounds b;
  b.max_letters = 3;
  CHECK_THROWS_AS(enumerate_walks(a1, WalkType{{1, 0, 1, 0}, aff_identity(a1)}, b), Error);
}

TEST_CASE("antidominant walks") {
  const auto a2 = RootSystem::build("A2");
  const Walk p = antidominant_walk(a2, Coweight{1, 1});
  CHECK(p.size() == 4);
  for (const Step& st : p.steps()) CHECK(st.kind == StepKind::NegCross);
  CHECK(p.end() == aff_translation(a2, Coweight{-1, -1}));
  CHECK(p.dim() == 0);
  CHECK(antidominant_walk(a2, Coweight{0, 0}).size() == 0);

  const auto a1 = RootSystem::build("A1");
  const Walk q = antidominant_walk(a1, Coweight{1});
  CHECK(q.size() == 1);
  CHECK(q.step(1).kind == StepKind::NegCross);
  CHECK(q.end() == aff_translation(a1, Coweight{-1}));
  CHECK_THROWS_AS(antidominant_walk(a2, Coweight{1, -1}), Error);
}

TEST_CASE("the 25 walks for A2 and lambda = (1,1)") {
  const auto a2 = RootSystem::build("A2");
  const auto groups = enumerate_P_lambda(a2, Coweight{1, 1});
  CHECK(groups.size() == 7);
  std::size_t total = 0;
  for (const auto& [mu, walks] : groups) total += walks.size();
  CHECK(total == 25);
  const auto& zero = groups.at(Coweight{0, 0});
  CHECK(zero.size() == 5);
  CHECK(std::count_if(zero.begin(), zero.end(), [](const Walk& p) { return p.dim() == 2; }) ==
        2);
  const auto trivial = enumerate_P_lambda(a2, Coweight{0, 0});
  REQUIRE(trivial.size() == 1);
  CHECK(trivial.at(Coweight{0, 0}).size() == 1);
}

TEST_CASE("P' for A2 and lambda = (1,1) has 9 walks") {
  const auto a2 = RootSystem::build("A2");
  CHECK(enumerate_P_prime(a2, Coweight{1, 1}).size() == 9);
  const auto a1 = RootSystem::build("A1");
  CHECK(enumerate_P_prime(a1, Coweight{1}).size() == 2);
}

TEST_CASE("unfold sequences") {
  const auto a2 = RootSystem::build("A2");
  const Walk p = example_walk(a2);
  const auto seq = unfold_sequence(p);
  REQUIRE(seq.size() == 4);
  CHECK(seq.front().num_folds() == 0);
  CHECK(seq.back() == p);

  const auto a1 = RootSystem::build("A1");
  const Walk single(a1, WalkType{{1}, aff_identity(a1)}, {1});
  const auto s2 = unfold_sequence(single);
  REQUIRE(s2.size() == 2);
  CHECK(s2[0].step(1).kind == StepKind::NegCross);
  CHECK(s2[1] == single);
}

TEST_CASE("dimension bound and statistics over a sweep") {
  for (const char* label : {"A1", "A2", "C2", "G2"}) {
    const auto rs = RootSystem::build(label);
    const int lw0 = rs.longest_element().first.length();
    for (const Coweight& lam : sweep::dominant_up_to(rs, 12)) {
      CAPTURE(label);
      CAPTURE(lam.str());
      const int lt = aff_length(rs, aff_translation(rs, lam));
      const Coweight low = rs.act(rs.longest_element().first, lam);
      const auto groups = enumerate_P_lambda(rs, lam);
      CHECK(groups.at(low).size() == 1);
      CHECK(groups.at(low).front().dim() == 0);
      CHECK(groups.at(low).front() == antidominant_walk(rs, lam));
      for (const auto& [mu, walks] : groups) {
        const int top = half_pair_rho(rs, lam, mu);
        for (const Walk& p : walks) {
          const WalkStats s = p.stats();
          CHECK(s.length == s.pos + s.neg + s.folds);
          CHECK(s.signed_len == signed_length(rs, p.end()));
          CHECK(s.dim <= top);
          const bool eq = s.final_dir.length() == s.folds && s.length == lt;
          CHECK((s.dim == top) == eq);
          CHECK(s.length <= lt);
          CHECK(s.folds <= lw0);
          const auto seq = unfold_sequence(p);
          CHECK(static_cast<int>(seq.size()) == s.folds + 1);
          for (std::size_t k = 1; k < seq.size(); ++k) {
            const int jump = seq[k].end().fin.length() - seq[k - 1].end().fin.length() - 1;
            CHECK(jump >= 0);
            CHECK(jump % 2 == 0);
          }
        }
      }
    }
  }
}
