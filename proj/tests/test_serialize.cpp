#include "doctest.h"

#include "alcovia/serialize.hpp"

using namespace alcovia;

TEST_CASE("walk text and json") {
  const auto a2 = RootSystem::build("A2");
  const Walk anti = antidominant_walk(a2, Coweight{1, 1});
  const std::string text = walk_text(anti);
  CHECK(text.find('f') == std::string::npos);
  CHECK(text.find("@w=") != std::string::npos);

  const auto j = walk_json(anti);
  CHECK(j["end"]["mu"] == nlohmann::json::array({-1, -1}));
  CHECK(j["stats"]["dim"] == 0);
  CHECK(j["stats"]["len"] == anti.size());
  CHECK(j["folds"].empty());
  CHECK(j["steps"].get<std::string>().size() == static_cast<std::size_t>(anti.size()));
  CHECK(j["type"]["letters"].size() == static_cast<std::size_t>(anti.size()));
  CHECK(j["type"].contains("omega"));
  CHECK(!j.contains("start"));

  const Walk w(a2, WalkType{{1, 2, 1}, aff_identity(a2)}, {});
  CHECK(walk_text(w) == "---@w=e");
  CHECK(word_str({1, 2, 0}) == "1,2,0");
  CHECK(word_str({}) == "");
  CHECK(omega_str(a2, aff_identity(a2)) == "e");

  const auto a1 = RootSystem::build("A1");
  const Walk fold(a1, WalkType{{1}, aff_identity(a1)}, {1});
  CHECK(walk_text(fold) == "f@w=e");
  const auto jf = walk_json(fold);
  CHECK(jf["folds"] == nlohmann::json::array({1}));
  CHECK(jf["stats"]["folds"] == 1);
  CHECK(jf["stats"]["eps"] == 0);
  const auto [m, word] = min_double_coset_rep(a1, Coweight{1});
  CHECK(omega_str(a1, word.omega_part) == "1");
}

TEST_CASE("group algebra output") {
  const auto a1 = RootSystem::build("A1");
  GroupAlgebraElem e;
  e.add(Coweight{1}, LaurentV(1));
  e.add(Coweight{-1}, LaurentV(1) - LaurentV::monomial(-2));
  CHECK(group_algebra_text(e) == "x^(-1): 1 - q^-1\nx^(1): 1\n");
  const auto j = group_algebra_json(e);
  CHECK(j.size() == 2);
}

TEST_CASE("tikz pictures") {
  const auto a2 = RootSystem::build("A2");
  const auto tikz = walk_tikz(antidominant_walk(a2, Coweight{1, 1}));
  CHECK(tikz.find("\\begin{tikzpicture}") != std::string::npos);
  CHECK(tikz.find("\\end{tikzpicture}") != std::string::npos);
  const auto a3 = RootSystem::build("A3");
  CHECK_THROWS_AS(walk_tikz(antidominant_walk(a3, Coweight{1, 0, 0})), Error);
}
