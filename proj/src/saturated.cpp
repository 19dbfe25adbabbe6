#include "alcovia/saturated.hpp"

#include <deque>

namespace alcovia {

bool contains(const RootSystem& rs, const Coweight& lambda, const Coweight& mu) {
  rs.require_dominant(lambda, "contains");
  rs.require_rank(mu, "contains");
  return rs.dominates(lambda, rs.dominant_rep(mu).first);
}

std::set<Coweight> saturated_set(const RootSystem& rs, const Coweight& lambda,
                                 const Bounds& bounds) {
  rs.require_dominant(lambda, "saturated_set");
  rs.guard_group_size(bounds, "saturated_set");
  // Every weight other than lambda has a simple coroot above it inside the set,
  // so walking down from lambda reaches everything.
  std::set<Coweight> seen{lambda};
  std::deque<Coweight> todo{lambda};
  while (!todo.empty()) {
    const Coweight nu = todo.front();
    todo.pop_front();
    for (int i = 1; i <= rs.rank(); ++i) {
      Coweight next = nu - rs.simple_coroot(i);
      if (seen.count(next) || !contains(rs, lambda, next)) continue;
      seen.insert(next);
      todo.push_back(std::move(next));
    }
  }
  return seen;
}

StringData string_parameters(const RootSystem& rs, const Coweight& lambda,
                             const Coweight& mu, const Word& word) {
  const FinWeylElem w0 = rs.longest_element().first;
  if (!rs.is_reduced_word_for(word, w0))
    fail(ErrorKind::NotReducedWord, "word is not a reduced expression for w0");
  if (!contains(rs, lambda, mu))
    fail(ErrorKind::NotInSaturatedSet,
         mu.str() + " is not in the saturated set of " + lambda.str());
  StringData sd;
  sd.word = word;
  sd.mus.push_back(mu);
  for (int i : word) {
    const Coweight a = rs.simple_coroot(i);
    Coweight cur = sd.mus.back();
    int m = 0;
    // The set is convex along alpha_i strings, so the first miss ends the run.
    while (contains(rs, lambda, cur - a)) {
      cur -= a;
      ++m;
    }
    sd.ms.push_back(m);
    sd.mus.push_back(std::move(cur));
  }
  if (sd.mus.back() != rs.act(w0, lambda))
    fail(ErrorKind::InternalOperatorDeath, "string parameters did not reach w0 lambda");
  return sd;
}

BuiltPath build_path(const RootSystem& rs, const Coweight& lambda, const Coweight& mu,
                     const Word& word) {
  StringData sd = string_parameters(rs, lambda, mu, word);
  std::optional<Walk> p = antidominant_walk(rs, lambda);
  for (int k = static_cast<int>(word.size()); k >= 1; --k) {
    p = raise_power(*p, word[k - 1], sd.ms[k - 1]);
    if (!p)
      fail(ErrorKind::InternalOperatorDeath,
           "root operator e" + std::to_string(word[k - 1]) + " killed the walk at k=" +
               std::to_string(k));
    if (p->weight() != sd.mus[k - 1])
      fail(ErrorKind::InternalOperatorDeath,
           "path weight " + p->weight().str() + " differs from mu_" +
               std::to_string(k - 1) + " = " + sd.mus[k - 1].str());
  }
  if (p->dim() != half_pair_rho(rs, lambda, mu))
    fail(ErrorKind::InternalOperatorDeath, "constructed path is not of optimal dimension");
  return BuiltPath{std::move(*p), std::move(sd)};
}

BuiltPath build_path(const RootSystem& rs, const Coweight& lambda, const Coweight& mu) {
  return build_path(rs, lambda, mu, rs.longest_element().second);
}

}  // namespace alcovia
