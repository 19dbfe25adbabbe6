#include "alcovia/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include <boost/multiprecision/cpp_int.hpp>

namespace alcovia {

namespace {

using boost::multiprecision::cpp_rational;

std::size_t hash_ints(const IntVec& v) {
  std::size_t h = 0x9e3779b97f4a7c15ULL ^ v.size();
  for (int x : v) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

IntVec matmul(const IntVec& a, const IntVec& b, int n) {
  IntVec c(n * n, 0);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k < n; ++k) {
      const int ark = a[r * n + k];
      if (ark == 0) continue;
      for (int j = 0; j < n; ++j) c[r * n + j] += ark * b[k * n + j];
    }
  return c;
}

IntVec cartan_matrix(char family, int n) {
  IntVec a(n * n, 0);
  auto set = [&](int i, int j, int v) { a[i * n + j] = v; };
  for (int i = 0; i < n; ++i) set(i, i, 2);
  auto link = [&](int i, int j) {
    set(i, j, -1);
    set(j, i, -1);
  };
  switch (family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      set(n - 2, n - 1, -1);
      set(n - 1, n - 2, -2);
      break;
    case 'C':
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      set(n - 2, n - 1, -2);
      set(n - 1, n - 2, -1);
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'E':
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'F':
      link(0, 1);
      set(1, 2, -1);
      set(2, 1, -2);
      link(2, 3);
      break;
    case 'G':
      set(0, 1, -3);
      set(1, 0, -1);
      break;
    default:
      fail(ErrorKind::UnknownType, std::string("unknown family ") + family);
  }
  return a;
}

std::uint64_t tabulated_weyl_order(char family, int n) {
  auto factorial = [](int k) {
    std::uint64_t f = 1;
    for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
  };
  switch (family) {
    case 'A': return factorial(n + 1);
    case 'B':
    case 'C': return (std::uint64_t{1} << n) * factorial(n);
    case 'D': return (std::uint64_t{1} << (n - 1)) * factorial(n);
    case 'E':
      return n == 6 ? 51840ULL : n == 7 ? 2903040ULL : 696729600ULL;
    case 'F': return 1152;
    case 'G': return 12;
  }
  return 0;
}

int sign_of(const IntVec& v) {
  for (int x : v) {
    if (x > 0) return 1;
    if (x < 0) return -1;
  }
  return 0;
}

}  // namespace

// ---------------------------------------------------------------- Coweight

bool Coweight::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](int x) { return x == 0; });
}

bool Coweight::is_dominant() const {
  return std::all_of(c_.begin(), c_.end(), [](int x) { return x >= 0; });
}

Coweight& Coweight::operator+=(const Coweight& o) {
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Coweight& Coweight::operator-=(const Coweight& o) {
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Coweight operator-(Coweight a) {
  for (int& x : a.c_) x = -x;
  return a;
}

Coweight operator*(int k, Coweight a) {
  for (int& x : a.c_) x *= k;
  return a;
}

std::string Coweight::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
  os << ')';
  return os.str();
}

std::size_t CoweightHash::operator()(const Coweight& c) const noexcept {
  return hash_ints(c.coords());
}

std::size_t FinWeylElemHash::operator()(const FinWeylElem& w) const noexcept {
  return hash_ints(w.images());
}

// ---------------------------------------------------------------- building

RootSystem RootSystem::build(std::string_view type_label) {
  std::string s;
  for (char ch : type_label)
    if (ch != '_' && !std::isspace(static_cast<unsigned char>(ch)))
      s.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
  if (s.size() < 2 || std::string("ABCDEFG").find(s[0]) == std::string::npos ||
      !std::all_of(s.begin() + 1, s.end(),
                   [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }) ||
      s.size() > 4) {
    fail(ErrorKind::UnknownType, "cannot parse root system label '" +
                                     std::string(type_label) + "'");
  }
  const char family = s[0];
  const int n = std::stoi(s.substr(1));
  const bool ok = (family == 'A' && n >= 1) || (family == 'B' && n >= 2) ||
                  (family == 'C' && n >= 2) || (family == 'D' && n >= 4) ||
                  (family == 'E' && n >= 6 && n <= 8) ||
                  (family == 'F' && n == 4) || (family == 'G' && n == 2);
  if (!ok) fail(ErrorKind::RankOutOfRange, "no root system of type " + s);
  if (n > 64) fail(ErrorKind::RankOutOfRange, "rank too large: " + s);

  RootSystem rs;
  rs.label_ = s;
  rs.family_ = family;
  rs.n_ = n;
  rs.cartan_ = cartan_matrix(family, n);
  rs.weyl_order_ = tabulated_weyl_order(family, n);

  // Symmetrizer: d_i A_ij = d_j A_ji, short roots normalized to 1.
  rs.sym_.assign(n, 0);
  rs.sym_[0] = 6;
  std::deque<int> todo{0};
  while (!todo.empty()) {
    const int i = todo.front();
    todo.pop_front();
    for (int j = 0; j < n; ++j) {
      const int aij = rs.cartan_[i * n + j];
      if (j == i || aij == 0 || rs.sym_[j] != 0) continue;
      rs.sym_[j] = rs.sym_[i] * aij / rs.cartan_[j * n + i];
      todo.push_back(j);
    }
  }
  const int g = std::accumulate(rs.sym_.begin(), rs.sym_.end(), 0,
                                [](int a, int b) { return std::gcd(a, b); });
  for (int& d : rs.sym_) d /= g;

  // Positive roots by reflection closure, coroots reflected in parallel.
  std::map<IntVec, IntVec> found;  // root coords -> coroot coords
  std::deque<IntVec> queue;
  for (int i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    found.emplace(e, e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    const IntVec beta = queue.front();
    queue.pop_front();
    const IntVec beta_vee = found.at(beta);
    for (int i = 0; i < n; ++i) {
      int a_vee_beta = 0;  // <alpha_i^vee, beta>
      int beta_vee_a = 0;  // <beta^vee, alpha_i>
      for (int j = 0; j < n; ++j) {
        a_vee_beta += beta[j] * rs.cartan_[i * n + j];
        beta_vee_a += beta_vee[j] * rs.cartan_[j * n + i];
      }
      IntVec img = beta;
      img[i] -= a_vee_beta;
      IntVec img_vee = beta_vee;
      img_vee[i] -= beta_vee_a;
      if (sign_of(img) <= 0 || found.count(img)) continue;
      found.emplace(img, img_vee);
      queue.push_back(img);
    }
  }

  std::vector<Root> pos;
  for (const auto& [r, rv] : found) pos.push_back(Root{r, rv, true});
  std::sort(pos.begin(), pos.end(), [](const Root& a, const Root& b) {
    const int ha = std::accumulate(a.root_coords.begin(), a.root_coords.end(), 0);
    const int hb = std::accumulate(b.root_coords.begin(), b.root_coords.end(), 0);
    if (ha != hb) return ha < hb;
    return a.root_coords > b.root_coords;
  });
  rs.roots_ = pos;
  for (const Root& r : pos) {
    Root neg{r.root_coords, r.coroot_coords, false};
    for (int& x : neg.root_coords) x = -x;
    for (int& x : neg.coroot_coords) x = -x;
    rs.roots_.push_back(neg);
  }
  for (int k = 0; k < static_cast<int>(rs.roots_.size()); ++k)
    rs.root_lookup_.emplace_back(rs.roots_[k].root_coords, k);
  std::sort(rs.root_lookup_.begin(), rs.root_lookup_.end());

  rs.theta_index_ = static_cast<int>(pos.size()) - 1;  // unique root of max height

  rs.two_rho_.assign(n, 0);
  rs.two_rho_vee_ = Coweight::zero(n);
  for (const Root& r : pos) {
    for (int j = 0; j < n; ++j) rs.two_rho_[j] += r.root_coords[j];
    rs.two_rho_vee_ += rs.coroot_as_coweight(r);
  }

  // Exact inverse of A^T, stored as an integer adjugate over the determinant.
  std::vector<cpp_rational> m(n * n), inv(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      m[i * n + j] = rs.cartan_[j * n + i];
      inv[i * n + j] = (i == j) ? 1 : 0;
    }
  cpp_rational det = 1;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (m[piv * n + col] == 0) ++piv;
    if (piv != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(m[piv * n + j], m[col * n + j]);
        std::swap(inv[piv * n + j], inv[col * n + j]);
      }
      det = -det;
    }
    const cpp_rational p = m[col * n + col];
    det *= p;
    for (int j = 0; j < n; ++j) {
      m[col * n + j] /= p;
      inv[col * n + j] /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r * n + col] == 0) continue;
      const cpp_rational f = m[r * n + col];
      for (int j = 0; j < n; ++j) {
        m[r * n + j] -= f * m[col * n + j];
        inv[r * n + j] -= f * inv[col * n + j];
      }
    }
  }
  rs.cartan_det_ = static_cast<int>(boost::multiprecision::numerator(det));
  rs.cartan_t_adj_.resize(n * n);
  for (int k = 0; k < n * n; ++k) {
    const cpp_rational v = inv[k] * det;
    rs.cartan_t_adj_[k] = static_cast<int>(boost::multiprecision::numerator(v));
  }
  return rs;
}

// ---------------------------------------------------------------- lookups

std::optional<int> RootSystem::root_index(const IntVec& root_coords) const {
  auto it = std::lower_bound(
      root_lookup_.begin(), root_lookup_.end(), root_coords,
      [](const std::pair<IntVec, int>& e, const IntVec& key) { return e.first < key; });
  if (it == root_lookup_.end() || it->first != root_coords) return std::nullopt;
  return it->second;
}

int RootSystem::negate_index(int index) const {
  const int np = num_positive_roots();
  return index < np ? index + np : index - np;
}

int RootSystem::half_norm(const IntVec& b) const {
  int s = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) s += b[i] * b[j] * sym_[i] * cartan_[i * n_ + j];
  return s / 2;
}

int RootSystem::pair(const Coweight& mu, const IntVec& root_coords) const {
  int s = 0;
  for (int j = 0; j < n_; ++j) s += mu[j] * root_coords[j];
  return s;
}

Coweight RootSystem::simple_coroot(int i) const {
  require_simple_index(i);
  IntVec c(n_);
  for (int j = 0; j < n_; ++j) c[j] = cartan_[(i - 1) * n_ + j];
  return Coweight(std::move(c));
}

Coweight RootSystem::coroot_as_coweight(const Root& alpha) const {
  IntVec c(n_, 0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) c[i] += alpha.coroot_coords[j] * cartan_[j * n_ + i];
  return Coweight(std::move(c));
}

Coweight RootSystem::simple_reflect(int i, const Coweight& mu) const {
  require_simple_index(i);
  require_rank(mu, "simple_reflect");
  Coweight r = mu;
  const int k = mu[i - 1];
  for (int j = 0; j < n_; ++j) r[j] -= k * cartan_[(i - 1) * n_ + j];
  return r;
}

std::optional<IntVec> RootSystem::coroot_coordinates(const Coweight& mu) const {
  IntVec c(n_, 0);
  for (int i = 0; i < n_; ++i) {
    long long s = 0;
    for (int j = 0; j < n_; ++j) s += static_cast<long long>(cartan_t_adj_[i * n_ + j]) * mu[j];
    if (s % cartan_det_ != 0) return std::nullopt;
    c[i] = static_cast<int>(s / cartan_det_);
  }
  return c;
}

bool RootSystem::dominates(const Coweight& lambda, const Coweight& mu) const {
  const auto c = coroot_coordinates(lambda - mu);
  return c && std::all_of(c->begin(), c->end(), [](int x) { return x >= 0; });
}

std::pair<Coweight, FinWeylElem> RootSystem::dominant_rep(const Coweight& mu) const {
  require_rank(mu, "dominant_rep");
  Coweight cur = mu;
  FinWeylElem w = identity();
  for (;;) {
    int i = 0;
    while (i < n_ && cur[i] >= 0) ++i;
    if (i == n_) break;
    cur = simple_reflect(i + 1, cur);
    w = mul(simple(i + 1), w);
  }
  return {cur, w};
}

std::vector<Coweight> RootSystem::weyl_orbit(const Coweight& lambda) const {
  require_dominant(lambda, "weyl_orbit");
  std::set<Coweight> seen{lambda};
  std::deque<Coweight> todo{lambda};
  while (!todo.empty()) {
    const Coweight nu = todo.front();
    todo.pop_front();
    for (int i = 1; i <= n_; ++i) {
      if (nu[i - 1] == 0) continue;
      Coweight r = simple_reflect(i, nu);
      if (seen.insert(r).second) todo.push_back(std::move(r));
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<std::pair<FinWeylElem, Word>> RootSystem::coset_min_reps(
    const Coweight& lambda) const {
  require_dominant(lambda, "coset_min_reps");
  std::set<Coweight> seen{lambda};
  std::vector<std::pair<Coweight, FinWeylElem>> layer{{lambda, identity()}};
  std::vector<FinWeylElem> reps{identity()};
  while (!layer.empty()) {
    std::vector<std::pair<Coweight, FinWeylElem>> next;
    for (const auto& [nu, u] : layer) {
      for (int i = 1; i <= n_; ++i) {
        if (nu[i - 1] <= 0) continue;  // only length-increasing steps
        Coweight r = simple_reflect(i, nu);
        if (!seen.insert(r).second) continue;
        FinWeylElem su = mul(simple(i), u);
        reps.push_back(su);
        next.emplace_back(std::move(r), std::move(su));
      }
    }
    layer = std::move(next);
  }
  std::vector<std::pair<FinWeylElem, Word>> out;
  out.reserve(reps.size());
  for (auto& u : reps) {
    Word word = canonical_word(u);
    out.emplace_back(std::move(u), std::move(word));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.second.size() != b.second.size()) return a.second.size() < b.second.size();
    return a.second < b.second;
  });
  return out;
}

std::pair<FinWeylElem, Word> RootSystem::longest_element() const {
  FinWeylElem w = identity();
  for (;;) {
    int i = 1;
    while (i <= n_ && is_right_descent(w, i)) ++i;
    if (i > n_) break;
    w = mul(w, simple(i));
  }
  Word word = canonical_word(w);
  return {w, word};
}

FinWeylElem RootSystem::stabilizer_longest(const Coweight& lambda) const {
  require_dominant(lambda, "stabilizer_longest");
  FinWeylElem w = identity();
  for (;;) {
    int i = 1;
    while (i <= n_ && (lambda[i - 1] != 0 || is_right_descent(w, i))) ++i;
    if (i > n_) break;
    w = mul(w, simple(i));
  }
  return w;
}

// ---------------------------------------------------------------- group

int RootSystem::compute_length(const IntVec& fwd) const {
  int len = 0;
  const int np = num_positive_roots();
  for (int k = 0; k < np; ++k) {
    const IntVec& b = roots_[k].root_coords;
    for (int r = 0; r < n_; ++r) {
      int s = 0;
      for (int j = 0; j < n_; ++j) s += fwd[r * n_ + j] * b[j];
      if (s != 0) {
        if (s < 0) ++len;
        break;
      }
    }
  }
  return len;
}

FinWeylElem RootSystem::make(IntVec fwd, IntVec inv) const {
  FinWeylElem w;
  w.n_ = n_;
  w.length_ = compute_length(fwd);
  w.fwd_ = std::move(fwd);
  w.inv_ = std::move(inv);
  return w;
}

FinWeylElem RootSystem::identity() const {
  IntVec e(n_ * n_, 0);
  for (int i = 0; i < n_; ++i) e[i * n_ + i] = 1;
  FinWeylElem w;
  w.n_ = n_;
  w.fwd_ = e;
  w.inv_ = e;
  return w;
}

FinWeylElem RootSystem::simple(int i) const {
  require_simple_index(i);
  IntVec m(n_ * n_, 0);
  for (int j = 0; j < n_; ++j) {
    m[j * n_ + j] = 1;
    m[(i - 1) * n_ + j] -= cartan_[(i - 1) * n_ + j];
  }
  FinWeylElem w;
  w.n_ = n_;
  w.fwd_ = m;
  w.inv_ = m;
  w.length_ = 1;
  return w;
}

FinWeylElem RootSystem::reflection(const Root& alpha) const {
  const Coweight av = coroot_as_coweight(alpha);
  IntVec m(n_ * n_, 0);
  for (int j = 0; j < n_; ++j) {
    m[j * n_ + j] = 1;
    for (int r = 0; r < n_; ++r) m[r * n_ + j] -= av[j] * alpha.root_coords[r];
  }
  IntVec inv = m;
  return make(std::move(m), std::move(inv));
}

FinWeylElem RootSystem::mul(const FinWeylElem& a, const FinWeylElem& b) const {
  return make(matmul(a.fwd_, b.fwd_, n_), matmul(b.inv_, a.inv_, n_));
}

FinWeylElem RootSystem::inverse(const FinWeylElem& a) const {
  FinWeylElem w;
  w.n_ = n_;
  w.fwd_ = a.inv_;
  w.inv_ = a.fwd_;
  w.length_ = a.length_;
  return w;
}

FinWeylElem RootSystem::from_word(const Word& word) const {
  FinWeylElem w = identity();
  for (int i : word) w = mul(w, simple(i));
  return w;
}

Coweight RootSystem::act(const FinWeylElem& w, const Coweight& mu) const {
  IntVec c(n_, 0);
  for (int r = 0; r < n_; ++r) {
    const int m = mu[r];
    if (m == 0) continue;
    for (int j = 0; j < n_; ++j) c[j] += m * w.inv_[r * n_ + j];
  }
  return Coweight(std::move(c));
}

IntVec RootSystem::act_on_root(const FinWeylElem& w, const IntVec& b) const {
  IntVec c(n_, 0);
  for (int r = 0; r < n_; ++r)
    for (int j = 0; j < n_; ++j) c[r] += w.fwd_[r * n_ + j] * b[j];
  return c;
}

bool RootSystem::is_positive(const IntVec& root_coords) {
  return sign_of(root_coords) > 0;
}

bool RootSystem::is_left_descent(int i, const FinWeylElem& w) const {
  for (int r = 0; r < n_; ++r) {
    const int x = w.inv_[r * n_ + (i - 1)];
    if (x != 0) return x < 0;
  }
  return false;
}

bool RootSystem::is_right_descent(const FinWeylElem& w, int i) const {
  for (int r = 0; r < n_; ++r) {
    const int x = w.fwd_[r * n_ + (i - 1)];
    if (x != 0) return x < 0;
  }
  return false;
}

Word RootSystem::canonical_word(const FinWeylElem& w) const {
  Word word;
  FinWeylElem cur = w;
  while (cur.length() > 0) {
    int i = 1;
    while (!is_left_descent(i, cur)) ++i;
    word.push_back(i);
    cur = mul(simple(i), cur);
  }
  return word;
}

Word RootSystem::alternate_word(const FinWeylElem& w) const {
  Word word;
  FinWeylElem cur = w;
  while (cur.length() > 0) {
    int i = n_;
    while (!is_left_descent(i, cur)) --i;
    word.push_back(i);
    cur = mul(simple(i), cur);
  }
  return word;
}

bool RootSystem::is_reduced_word_for(const Word& word, const FinWeylElem& w) const {
  if (static_cast<int>(word.size()) != w.length()) return false;
  for (int i : word)
    if (i < 1 || i > n_) return false;
  return from_word(word) == w;
}

void RootSystem::guard_group_size(const Bounds& bounds, std::string_view what) const {
  if (weyl_order_ > bounds.max_weyl_order) {
    fail(ErrorKind::GroupTooLarge,
         std::string(what) + ": |W0| = " + std::to_string(weyl_order_) +
             " exceeds the limit " + std::to_string(bounds.max_weyl_order));
  }
}

std::vector<FinWeylElem> RootSystem::elements(const Bounds& bounds) const {
  guard_group_size(bounds, "enumerating W0");
  std::unordered_set<FinWeylElem, FinWeylElemHash> seen;
  std::vector<FinWeylElem> all{identity()};
  seen.insert(all.front());
  for (std::size_t k = 0; k < all.size(); ++k) {
    for (int i = 1; i <= n_; ++i) {
      if (is_right_descent(all[k], i)) continue;
      FinWeylElem ws = mul(all[k], simple(i));
      if (seen.insert(ws).second) all.push_back(std::move(ws));
    }
  }
  std::vector<std::pair<Word, std::size_t>> keyed;
  keyed.reserve(all.size());
  for (std::size_t k = 0; k < all.size(); ++k) keyed.emplace_back(canonical_word(all[k]), k);
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  std::vector<FinWeylElem> out;
  out.reserve(all.size());
  for (const auto& [word, k] : keyed) out.push_back(all[k]);
  return out;
}

void RootSystem::require_rank(const Coweight& mu, std::string_view what) const {
  if (mu.rank() != n_) {
    fail(ErrorKind::InvalidArgument,
         std::string(what) + ": coweight " + mu.str() + " has " +
             std::to_string(mu.rank()) + " coordinates, rank is " + std::to_string(n_));
  }
}

void RootSystem::require_dominant(const Coweight& mu, std::string_view what) const {
  require_rank(mu, what);
  if (!mu.is_dominant())
    fail(ErrorKind::NotDominant, std::string(what) + ": " + mu.str() + " is not dominant");
}

void RootSystem::require_simple_index(int i) const {
  if (i < 1 || i > n_)
    fail(ErrorKind::IndexOutOfRange,
         "simple index " + std::to_string(i) + " outside 1.." + std::to_string(n_));
}

}  // namespace alcovia
