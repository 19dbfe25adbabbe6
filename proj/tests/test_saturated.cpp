#include "doctest.h"

#include <algorithm>

#include "alcovia/saturated.hpp"
#include "sweep.hpp"

using namespace alcovia;

TEST_CASE("membership") {
  const auto a2 = RootSystem::build("A2");
  CHECK(contains(a2, Coweight{1, 1}, Coweight{0, 0}));
  CHECK(contains(a2, Coweight{1, 1}, Coweight{1, 1}));
  CHECK(!contains(a2, Coweight{1, 1}, Coweight{0, -3}));
  CHECK(!contains(a2, Coweight{1, 1}, Coweight{1, 0}));  // wrong coset of Q
  CHECK_THROWS_AS(contains(a2, Coweight{-1, 1}, Coweight{0, 0}), Error);
}

TEST_CASE("saturated sets") {
  const auto a2 = RootSystem::build("A2");
  CHECK(saturated_set(a2, Coweight{1, 1}).size() == 7);
  CHECK(saturated_set(a2, Coweight{0, 0}) == std::set<Coweight>{Coweight{0, 0}});
  CHECK(saturated_set(a2, Coweight{1, 0}).size() == 3);

  for (const char* label : {"A2", "C2", "G2", "A3", "B3"}) {
    const auto rs = RootSystem::build(label);
    for (const Coweight& lam : sweep::dominant_up_to(rs, 12)) {
      CAPTURE(label);
      CAPTURE(lam.str());
      const auto pi = saturated_set(rs, lam);
      for (const Coweight& mu : pi) {
        for (int i = 1; i <= rs.rank(); ++i) CHECK(pi.count(rs.simple_reflect(i, mu)));
        for (const Root& a : rs.roots()) {
          const int p = rs.pair(mu, a);
          const Coweight av = rs.coroot_as_coweight(a);
          for (int k = 0; k <= p; ++k) CHECK(pi.count(mu - k * av));
        }
      }
      // independent description: orbit points of dominant weights below lambda
      std::set<Coweight> expected;
      for (const Coweight& nu : sweep::dominant_up_to(rs, rs.pair_two_rho(lam)))
        if (rs.dominates(lam, nu))
          for (const Coweight& x : rs.weyl_orbit(nu)) expected.insert(x);
      CHECK(pi == expected);
    }
  }
}

TEST_CASE("string parameters") {
  const auto a2 = RootSystem::build("A2");
  const auto sd = string_parameters(a2, Coweight{1, 1}, Coweight{0, 0}, {1, 2, 1});
  CHECK(sd.ms == std::vector<int>{1, 1, 0});
  CHECK(sd.mus.back() == Coweight{-1, -1});
  CHECK(string_parameters(a2, Coweight{1, 1}, Coweight{-1, -1}, {1, 2, 1}).ms ==
        std::vector<int>{0, 0, 0});
  const auto a1 = RootSystem::build("A1");
  CHECK(string_parameters(a1, Coweight{1}, Coweight{1}, {1}).ms == std::vector<int>{1});

  auto kind = [&](const Coweight& mu, const Word& w) {
    try {
      string_parameters(a2, Coweight{1, 1}, mu, w);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidArgument;
  };
  CHECK(kind(Coweight{0, 0}, {1, 2}) == ErrorKind::NotReducedWord);
  CHECK(kind(Coweight{0, 0}, {1, 1, 2}) == ErrorKind::NotReducedWord);
  CHECK(kind(Coweight{3, 0}, {1, 2, 1}) == ErrorKind::NotInSaturatedSet);
}

TEST_CASE("optimal paths") {
  const auto a2 = RootSystem::build("A2");
  const auto built = build_path(a2, Coweight{1, 1}, Coweight{0, 0}, {1, 2, 1});
  CHECK(built.walk.dim() == 2);
  CHECK(built.walk.weight() == Coweight{0, 0});
  CHECK(built.strings.ms == std::vector<int>{1, 1, 0});
  const auto anti = build_path(a2, Coweight{1, 1}, Coweight{-1, -1});
  CHECK(anti.walk == antidominant_walk(a2, Coweight{1, 1}));
  CHECK_THROWS_AS(build_path(a2, Coweight{1, 1}, Coweight{3, 0}), Error);

  const auto a1 = RootSystem::build("A1");
  const auto one = build_path(a1, Coweight{1}, Coweight{1}, {1});
  CHECK(one.walk.folds() == std::vector<int>{1});
  CHECK(one.walk.dim() == 1);
}

TEST_CASE("walk weights fill the saturated set, and the builder lands inside it") {
  for (const char* label : {"A1", "A2", "C2", "G2", "A3"}) {
    const auto rs = RootSystem::build(label);
    const auto [w0, word] = rs.longest_element();
    const Word alt = rs.alternate_word(w0);
    for (const Coweight& lam : sweep::dominant_up_to(rs, label[1] == '3' ? 8 : 12)) {
      CAPTURE(label);
      CAPTURE(lam.str());
      const auto groups = enumerate_P_lambda(rs, lam);
      const auto pi = saturated_set(rs, lam);
      std::set<Coweight> keys;
      for (const auto& [mu, walks] : groups) keys.insert(mu);
      CHECK(keys == pi);
      for (const Coweight& mu : pi) {
        for (const Word& w : {word, alt}) {
          const auto b = build_path(rs, lam, mu, w);
          CHECK(b.walk.dim() == half_pair_rho(rs, lam, mu));
          const auto& bucket = groups.at(mu);
          CHECK(std::find(bucket.begin(), bucket.end(), b.walk) != bucket.end());
        }
        // just outside the set along each simple coroot
        for (int i = 1; i <= rs.rank(); ++i) {
          const Coweight out = mu + rs.simple_coroot(i);
          if (!pi.count(out)) CHECK(!groups.count(out));
        }
      }
    }
  }
}
