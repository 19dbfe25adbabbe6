// alcovia: command-line front end.
//
// Exit codes: 0 ok, 1 a requested check failed, 2 invalid input,
// 3 weight not in the saturated set, 4 resource guard tripped.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "alcovia/buildings.hpp"
#include "alcovia/hecke.hpp"
#include "alcovia/saturated.hpp"
#include "alcovia/serialize.hpp"
#include "alcovia/spherical.hpp"

using namespace alcovia;
using nlohmann::json;

namespace {

struct Config {
  std::string type;
  std::string lambda;
  std::string mu;
  std::string word;
  std::string q;
  std::uint64_t seed = 1;
  std::string format = "text";
  int max_letters = -1;
  long long max_weyl_order = -1;
  bool compare_direct = false;
  int trials = 5;
  std::string oracle;
  int max_length = 5;
  std::string tikz;
};

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotInSaturatedSet: return 3;
    case ErrorKind::GroupTooLarge:
    case ErrorKind::TypeTooLong: return 4;
    case ErrorKind::InternalOperatorDeath: return 1;
    default: return 2;
  }
}

int report_error(std::string_view kind, const std::string& message, int code) {
  const json err{{"error", {{"kind", kind}, {"message", message}, {"exit_code", code}}}};
  std::cerr << err.dump() << "\n";
  return code;
}

std::vector<long long> parse_ints(const std::string& s, const char* what) {
  std::vector<long long> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != tok.size())
      fail(ErrorKind::InvalidArgument,
           std::string("cannot parse ") + what + " entry '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

Coweight parse_coweight(const RootSystem& rs, const std::string& s, const char* what) {
  IntVec c;
  for (long long v : parse_ints(s, what)) c.push_back(static_cast<int>(v));
  Coweight mu(c);
  rs.require_rank(mu, what);
  return mu;
}

Word parse_word(const std::string& s) {
  Word w;
  for (long long v : parse_ints(s, "--word")) w.push_back(static_cast<int>(v));
  return w;
}

void require(bool cond, const std::string& what) {
  if (!cond) fail(ErrorKind::InvalidArgument, what);
}

Bounds bounds_of(const Config& c) {
  Bounds b = Bounds::from_env();
  if (c.max_letters >= 0) b.max_letters = c.max_letters;
  if (c.max_weyl_order >= 0) b.max_weyl_order = static_cast<std::uint64_t>(c.max_weyl_order);
  return b;
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string stats_text(const WalkStats& s) {
  std::ostringstream os;
  os << "len=" << s.length << " pos=" << s.pos << " neg=" << s.neg << " folds=" << s.folds
     << " eps=" << s.signed_len << " dim=" << s.dim;
  return os.str();
}

int cmd_enumerate(const Config& c) {
  const auto rs = RootSystem::build(c.type);
  const Coweight lam = parse_coweight(rs, c.lambda, "--lambda");
  const auto groups = enumerate_P_lambda(rs, lam, bounds_of(c));
  std::optional<Coweight> only;
  if (!c.mu.empty()) only = parse_coweight(rs, c.mu, "--mu");

  std::size_t total = 0, shown_groups = 0;
  for (const auto& [mu, walks] : groups) {
    if (only && mu != *only) continue;
    total += walks.size();
    ++shown_groups;
  }
  if (c.format == "json") {
    json out{{"type", rs.label()}, {"lambda", coweight_json(lam)}, {"total", total},
             {"groups", json::array()}};
    for (const auto& [mu, walks] : groups) {
      if (only && mu != *only) continue;
      json g{{"mu", coweight_json(mu)}, {"count", walks.size()}, {"walks", json::array()}};
      for (const Walk& p : walks) g["walks"].push_back(walk_json(p));
      out["groups"].push_back(std::move(g));
    }
    print_json(out);
    return 0;
  }
  std::cout << rs.label() << " lambda=" << lam.str() << ": " << total << " walks in "
            << shown_groups << " weights\n";
  for (const auto& [mu, walks] : groups) {
    if (only && mu != *only) continue;
    std::cout << "mu=" << mu.str() << " (" << walks.size() << " walks, <lambda+mu,rho>="
              << half_pair_rho(rs, lam, mu) << ")\n";
    for (const Walk& p : walks)
      std::cout << "  " << walk_text(p) << "  " << stats_text(p.stats()) << "\n";
  }
  return 0;
}

int cmd_build(const Config& c) {
  const auto rs = RootSystem::build(c.type);
  const Coweight lam = parse_coweight(rs, c.lambda, "--lambda");
  require(!c.mu.empty(), "build needs --mu");
  const Coweight mu = parse_coweight(rs, c.mu, "--mu");
  rs.require_dominant(lam, "--lambda");
  if (!contains(rs, lam, mu))
    fail(ErrorKind::NotInSaturatedSet,
         mu.str() + " is not in the saturated set of " + lam.str());
  const BuiltPath b = c.word.empty() ? build_path(rs, lam, mu)
                                     : build_path(rs, lam, mu, parse_word(c.word));
  const int top = half_pair_rho(rs, lam, mu);
  if (!c.tikz.empty()) {
    std::ofstream f(c.tikz);
    if (!f) fail(ErrorKind::InvalidArgument, "cannot write " + c.tikz);
    f << walk_tikz(b.walk);
  }
  if (c.format == "json") {
    json mus = json::array();
    for (const Coweight& m : b.strings.mus) mus.push_back(coweight_json(m));
    print_json(json{{"type", rs.label()},
                    {"lambda", coweight_json(lam)},
                    {"mu", coweight_json(mu)},
                    {"walk", walk_json(b.walk)},
                    {"dim", b.walk.dim()},
                    {"pair_rho", top},
                    {"word", b.strings.word},
                    {"mus", mus},
                    {"ms", b.strings.ms}});
    return 0;
  }
  std::cout << "walk: " << walk_text(b.walk) << "\n";
  std::cout << "type: " << word_str(b.walk.type().letters)
            << " omega=" << omega_str(rs, b.walk.type().omega) << "\n";
  std::cout << "folds: " << word_str(b.walk.folds()) << "\n";
  std::cout << "dim=" << b.walk.dim() << " <lambda+mu,rho>=" << top << "\n";
  std::cout << "word: " << word_str(b.strings.word) << "\n";
  std::cout << "mus:";
  for (const Coweight& m : b.strings.mus) std::cout << " " << m.str();
  std::cout << "\nms=(" << word_str(b.strings.ms) << ")\n";
  return 0;
}

int cmd_spherical(const Config& c) {
  const auto rs = RootSystem::build(c.type);
  const Coweight lam = parse_coweight(rs, c.lambda, "--lambda");
  const Bounds b = bounds_of(c);
  const auto p = spherical_via_paths(rs, lam, b);
  const bool as_json = c.format == "json";
  json out;
  if (as_json) {
    out = json{{"type", rs.label()}, {"lambda", coweight_json(lam)},
               {"polynomial", group_algebra_json(p)}};
  } else {
    std::cout << group_algebra_text(p);
  }
  bool ok = true;
  if (c.compare_direct) {
    require(c.trials > 0, "--trials must be positive");
    std::vector<Rational> qs;
    for (long long v : parse_ints(c.q, "--q")) {
      require(v != 0 && v != 1, "--q values must differ from 0 and 1");
      qs.emplace_back(v);
    }
    if (qs.empty()) qs = {Rational(2), Rational(3), Rational(7, 2)};
    std::mt19937_64 gen(c.seed);
    std::uniform_int_distribution<int> num(-12, 12), den(1, 9);
    json trials = json::array();
    int done = 0, mismatches = 0;
    for (int attempt = 0; done < c.trials && attempt < 100 * c.trials; ++attempt) {
      std::vector<Rational> x;
      while (static_cast<int>(x.size()) < rs.rank()) {
        const int a = num(gen);
        if (a != 0) x.emplace_back(a, den(gen));
      }
      const Rational q = qs[done % qs.size()];
      Rational direct;
      try {
        direct = eval_direct(rs, lam, x, q, b);
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::SingularPoint) continue;
        throw;
      }
      const Rational paths = p.eval(x, q);
      const bool same = direct == paths;
      if (!same) ++mismatches;
      std::ostringstream xs;
      for (std::size_t i = 0; i < x.size(); ++i) xs << (i ? "," : "") << x[i];
      std::ostringstream ds, ps, qss;
      ds << direct;
      ps << paths;
      qss << q;
      if (as_json) {
        trials.push_back(json{{"x", xs.str()}, {"q", qss.str()}, {"direct", ds.str()},
                              {"paths", ps.str()}, {"match", same}});
      } else {
        std::cout << "trial x=(" << xs.str() << ") q=" << qss.str() << ": direct=" << ds.str()
                  << " paths=" << ps.str() << (same ? " ok" : " MISMATCH") << "\n";
      }
      ++done;
    }
    ok = mismatches == 0 && done == c.trials;
    if (as_json) {
      out["compare_direct"] = json{{"trials", trials}, {"result", ok ? "PASS" : "FAIL"}};
    } else {
      std::cout << "compare-direct: " << (ok ? "PASS" : "FAIL") << " (" << done << " trials, "
                << mismatches << " mismatches)\n";
    }
  }
  if (as_json) print_json(out);
  return ok ? 0 : 1;
}

int cmd_mult(const Config& c) {
  const auto rs = RootSystem::build(c.type);
  const Coweight lam = parse_coweight(rs, c.lambda, "--lambda");
  require(c.oracle.empty() || c.oracle == "freudenthal", "--oracle must be freudenthal");
  const auto m = weight_multiplicities(rs, lam, bounds_of(c));
  bool ok = true;
  if (!c.oracle.empty()) ok = freudenthal(rs, lam) == m;
  if (c.format == "json") {
    json out{{"type", rs.label()}, {"lambda", coweight_json(lam)}, {"multiplicities", json::array()}};
    for (auto it = m.rbegin(); it != m.rend(); ++it)
      out["multiplicities"].push_back(json{{"mu", coweight_json(it->first)}, {"mult", it->second}});
    if (!c.oracle.empty()) out["oracle"] = json{{"name", c.oracle}, {"result", ok ? "PASS" : "FAIL"}};
    print_json(out);
  } else {
    for (auto it = m.rbegin(); it != m.rend(); ++it)
      std::cout << it->first.str() << ": " << it->second << "\n";
    if (!c.oracle.empty()) std::cout << c.oracle << ": " << (ok ? "PASS" : "FAIL") << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_hecke_verify(const Config& c) {
  const auto rs = RootSystem::build(c.type);
  require(c.max_length >= 0, "--max-length must be nonnegative");
  const Bounds b = bounds_of(c);
  const auto elems = elements_up_to_length(rs, c.max_length, b);
  int bad = 0;
  for (const AffElem& w : elems)
    if (!verify_walk_expansion(rs, w, b)) ++bad;
  const bool walk_ok = bad == 0;
  const bool idem_ok = check_idempotent_laws(rs, b);
  // x^lambda 1_0 for the fundamental coweights and their sum
  bool trans_ok = true;
  std::vector<Coweight> lams;
  for (int i = 0; i < rs.rank(); ++i) {
    Coweight w = Coweight::zero(rs.rank());
    w[i] = 1;
    lams.push_back(w);
  }
  Coweight sum = Coweight::zero(rs.rank());
  for (const Coweight& w : lams) sum = sum + w;
  lams.push_back(sum);
  for (const Coweight& lam : lams) trans_ok = trans_ok && check_translation_identity(rs, lam, b);
  const bool ok = walk_ok && idem_ok && trans_ok;
  auto word = [](bool x) { return x ? "PASS" : "FAIL"; };
  if (c.format == "json") {
    print_json(json{{"type", rs.label()},
                    {"max_length", c.max_length},
                    {"elements", elems.size()},
                    {"walk_expansion", word(walk_ok)},
                    {"failures", bad},
                    {"idempotent_laws", word(idem_ok)},
                    {"translation_identity", word(trans_ok)},
                    {"result", word(ok)}});
  } else {
    std::cout << "walk expansion: " << word(walk_ok) << " (" << elems.size()
              << " elements of length <= " << c.max_length << ", " << bad << " failures)\n";
    std::cout << "1_0 laws: " << word(idem_ok) << "\n";
    std::cout << "x^lambda 1_0 identity: " << word(trans_ok) << "\n";
    std::cout << word(ok) << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_building_count(const Config& c) {
  const auto rs = RootSystem::build(c.type);
  const Coweight lam = parse_coweight(rs, c.lambda, "--lambda");
  rs.require_dominant(lam, "--lambda");
  const Bounds b = bounds_of(c);
  const auto qv = parse_ints(c.q.empty() ? "2" : c.q, "--q");
  Thickness th;
  if (qv.size() == 1) {
    th = Thickness::uniform(rs, qv[0]);
  } else {
    require(static_cast<int>(qv.size()) == rs.rank() + 1,
            "--q takes one value or one per letter 0.." + std::to_string(rs.rank()));
    for (long long v : qv) {
      require(v >= 1, "thickness must be at least 1");
      th.q.push_back(v);
    }
  }
  std::vector<Coweight> mus;
  if (c.mu.empty()) {
    const auto sat = saturated_set(rs, lam, b);
    mus.assign(sat.begin(), sat.end());
  } else {
    mus.push_back(parse_coweight(rs, c.mu, "--mu"));
  }
  const bool uniform = std::all_of(th.q.begin(), th.q.end(),
                                   [&](std::int64_t x) { return x == th.q.front(); });
  bool ok = true;
  json rows = json::array();
  for (const Coweight& mu : mus) {
    const std::int64_t n = retraction_fiber_count(rs, lam, mu, th, b);
    const bool in_pi = contains(rs, lam, mu);
    std::string bound = "n/a";
    if (in_pi && uniform && th.q.front() >= 2) {
      const bool holds = check_lower_bound(rs, lam, mu, th.q.front(), b);
      ok = ok && holds;
      bound = holds ? "PASS" : "FAIL";
    }
    if (c.format == "json") {
      rows.push_back(json{{"mu", coweight_json(mu)}, {"count", n}, {"in_saturated_set", in_pi},
                          {"lower_bound", bound}});
    } else {
      std::cout << "mu=" << mu.str() << ": " << n;
      if (bound != "n/a") std::cout << " (lower bound " << bound << ")";
      if (!in_pi) std::cout << " (outside the saturated set)";
      std::cout << "\n";
    }
  }
  if (c.format == "json")
    print_json(json{{"type", rs.label()}, {"lambda", coweight_json(lam)}, {"q", th.q},
                    {"fibers", rows}});
  return ok ? 0 : 1;
}

int cmd_saturated(const Config& c) {
  const auto rs = RootSystem::build(c.type);
  const Coweight lam = parse_coweight(rs, c.lambda, "--lambda");
  rs.require_dominant(lam, "--lambda");
  if (!c.mu.empty()) {
    const Coweight mu = parse_coweight(rs, c.mu, "--mu");
    const bool in = contains(rs, lam, mu);
    if (c.format == "json") {
      print_json(json{{"type", rs.label()}, {"lambda", coweight_json(lam)},
                      {"mu", coweight_json(mu)}, {"contains", in}});
    } else {
      std::cout << mu.str() << (in ? " is" : " is not") << " in the saturated set of "
                << lam.str() << "\n";
    }
    return in ? 0 : 3;
  }
  const auto sat = saturated_set(rs, lam, bounds_of(c));
  if (c.format == "json") {
    json ws = json::array();
    for (const Coweight& mu : sat) ws.push_back(coweight_json(mu));
    print_json(json{{"type", rs.label()}, {"lambda", coweight_json(lam)}, {"size", sat.size()},
                    {"weights", ws}});
  } else {
    std::cout << sat.size() << " weights\n";
    for (const Coweight& mu : sat) std::cout << mu.str() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Positively folded alcove walks: enumeration, root operators, spherical "
               "functions, Hecke algebra checks and building counts."};
  app.require_subcommand(1);
  Config c;

  auto common = [&](CLI::App* sub, bool lambda) {
    sub->add_option("--type", c.type, "Cartan type, e.g. A2, C2, G2")->required();
    if (lambda)
      sub->add_option("--lambda", c.lambda, "dominant coweight, comma separated")->required();
    sub->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--max-letters", c.max_letters, "longest walk type to enumerate");
    sub->add_option("--max-weyl-order", c.max_weyl_order, "largest finite Weyl group allowed");
  };

  auto* en = app.add_subcommand("enumerate", "list P(lambda) grouped by weight");
  common(en, true);
  en->add_option("--mu", c.mu, "only this weight");

  auto* bu = app.add_subcommand("build", "optimal walk ending at mu via root operators");
  common(bu, true);
  bu->add_option("--mu", c.mu, "target weight")->required();
  bu->add_option("--word", c.word, "reduced word for w0");
  bu->add_option("--emit-tikz", c.tikz, "write a TikZ picture of the walk (rank 2)");

  auto* sp = app.add_subcommand("spherical", "spherical function from the path formula");
  common(sp, true);
  sp->add_flag("--compare-direct", c.compare_direct, "check against the definition");
  sp->add_option("--trials", c.trials, "number of evaluation points");
  sp->add_option("--seed", c.seed, "seed for the evaluation points");
  sp->add_option("--q", c.q, "integer q values for the evaluation, comma separated");

  auto* mu = app.add_subcommand("mult", "weight multiplicities from maximal walks");
  common(mu, true);
  mu->add_option("--oracle", c.oracle, "cross-check with an independent method");

  auto* he = app.add_subcommand("hecke-verify", "check T_w = sum over walks of x_end");
  common(he, false);
  he->add_option("--max-length", c.max_length, "longest element to check");

  auto* bc = app.add_subcommand("building-count", "retraction fiber sizes");
  common(bc, true);
  bc->add_option("--mu", c.mu, "weight; all of the saturated set if omitted");
  bc->add_option("--q", c.q, "thickness: one value, or q_0,...,q_n");

  auto* sa = app.add_subcommand("saturated", "saturated set, or membership with --mu");
  common(sa, true);
  sa->add_option("--mu", c.mu, "test membership of this weight");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report_error("InvalidArgument", e.what(), 2);
  }

  try {
    if (*en) return cmd_enumerate(c);
    if (*bu) return cmd_build(c);
    if (*sp) return cmd_spherical(c);
    if (*mu) return cmd_mult(c);
    if (*he) return cmd_hecke_verify(c);
    if (*bc) return cmd_building_count(c);
    if (*sa) return cmd_saturated(c);
  } catch (const Error& e) {
    return report_error(to_string(e.kind()), e.what(), exit_code(e.kind()));
  } catch (const std::exception& e) {
    return report_error("InvalidArgument", e.what(), 2);
  }
  return 2;
}
