#include "alcovia/serialize.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace alcovia {

std::string word_str(const Word& w) {
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) s += (k ? "," : "") + std::to_string(w[k]);
  return s;
}

std::string omega_str(const RootSystem& rs, const AffElem& gamma) {
  const Word w = rs.canonical_word(gamma.fin);
  if (w.empty()) return "e";
  std::string s;
  for (int i : w) s += std::to_string(i);
  return s;
}

std::string walk_text(const Walk& p) {
  std::string s;
  if (p.start() != aff_identity(p.root_system()))
    s += "[u=" + omega_str(p.root_system(), p.start()) + "]";
  for (const Step& st : p.steps()) {
    switch (st.kind) {
      case StepKind::PosCross: s += '+'; break;
      case StepKind::NegCross: s += '-'; break;
      case StepKind::Fold: s += 'f'; break;
    }
  }
  return s + "@w=" + omega_str(p.root_system(), p.type().omega);
}

nlohmann::json coweight_json(const Coweight& mu) { return mu.coords(); }

nlohmann::json walk_json(const Walk& p) {
  const RootSystem& rs = p.root_system();
  const WalkStats s = p.stats();
  std::string steps = walk_text(p);
  steps = steps.substr(0, steps.find('@'));
  if (steps.front() == '[') steps = steps.substr(steps.find(']') + 1);
  nlohmann::json j;
  j["type"] = {{"letters", p.type().letters}, {"omega", omega_str(rs, p.type().omega)}};
  j["folds"] = p.folds();
  j["steps"] = steps;
  j["end"] = {{"mu", coweight_json(p.end().trans)},
              {"w_word", rs.canonical_word(p.end().fin)}};
  j["stats"] = {{"pos", s.pos}, {"neg", s.neg}, {"folds", s.folds},
                {"len", s.length}, {"eps", s.signed_len}, {"dim", s.dim}};
  if (p.start() != aff_identity(rs)) j["start"] = rs.canonical_word(p.start().fin);
  return j;
}

std::string group_algebra_text(const GroupAlgebraElem& e) {
  std::ostringstream os;
  for (const auto& [mu, c] : e.terms()) os << "x^" << mu.str() << ": " << c.str() << "\n";
  return os.str();
}

nlohmann::json group_algebra_json(const GroupAlgebraElem& e) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [mu, c] : e.terms()) {
    nlohmann::json coeffs = nlohmann::json::object();
    for (const auto& [exp, k] : c.terms()) coeffs[std::to_string(exp)] = k;
    arr.push_back({{"mu", coweight_json(mu)}, {"poly", c.str()}, {"v_coeffs", coeffs}});
  }
  return arr;
}

namespace {

struct Vec2 {
  double x = 0, y = 0;
};

// Euclidean picture of the coweight plane: omega-coordinates go through a
// Cholesky factor of the invariant form on fundamental coweights.
class Plane {
 public:
  explicit Plane(const RootSystem& rs) : rs_(rs) {
    double g[2][2];
    for (int j = 0; j < 2; ++j) {
      Coweight w = Coweight::zero(2);
      w[j] = 1;
      // Fundamental coweights have rational coroot coordinates; scale by det.
      Coweight scaled = w;
      int det = 1;
      std::optional<IntVec> c;
      while (!(c = rs.coroot_coordinates(scaled))) scaled = (++det) * w;
      for (int k = 0; k < 2; ++k)
        g[j][k] = static_cast<double>((*c)[k]) / det / rs.symmetrizer(k + 1);
    }
    // g[j][k] = (omega_j, omega_k); columns of E are the images of omega_j.
    const double a = std::sqrt(g[0][0]);
    e_[0][0] = a;
    e_[1][0] = 0;
    e_[0][1] = g[0][1] / a;
    e_[1][1] = std::sqrt(g[1][1] - e_[0][1] * e_[0][1]);
  }

  Vec2 map(double c0, double c1) const {
    return {e_[0][0] * c0 + e_[0][1] * c1, e_[1][0] * c0 + e_[1][1] * c1};
  }

  // Point x . p for p in omega-coordinates.
  std::pair<double, double> act(const AffElem& x, double p0, double p1) const {
    double out[2] = {static_cast<double>(x.trans[0]), static_cast<double>(x.trans[1])};
    const double p[2] = {p0, p1};
    for (int j = 0; j < 2; ++j) {
      Coweight w = Coweight::zero(2);
      w[j] = 1;
      const Coweight img = rs_.act(x.fin, w);
      out[0] += p[j] * img[0];
      out[1] += p[j] * img[1];
    }
    return {out[0], out[1]};
  }

  // Normal of {<p, a> = const} in picture coordinates.
  Vec2 normal(const IntVec& a) const {
    const double det = e_[0][0] * e_[1][1] - e_[0][1] * e_[1][0];
    // inverse transpose of E applied to a
    const double inv[2][2] = {{e_[1][1] / det, -e_[0][1] / det},
                              {-e_[1][0] / det, e_[0][0] / det}};
    return {inv[0][0] * a[0] + inv[1][0] * a[1], inv[0][1] * a[0] + inv[1][1] * a[1]};
  }

 private:
  const RootSystem& rs_;
  double e_[2][2];
};

}  // namespace

std::string walk_tikz(const Walk& p) {
  const RootSystem& rs = p.root_system();
  if (rs.rank() != 2) fail(ErrorKind::InvalidArgument, "TikZ output needs a rank-2 type");
  const Plane plane(rs);
  const IntVec& theta = rs.theta().root_coords;
  // Vertices of c0 in omega-coordinates: 0 and omega_j / m_j.
  const double verts[3][2] = {{0, 0}, {1.0 / theta[0], 0}, {0, 1.0 / theta[1]}};
  auto centre = [&](const AffElem& x, int skip) {
    double s0 = 0, s1 = 0;
    int cnt = 0;
    for (int v = 0; v < 3; ++v) {
      if (v == skip) continue;
      const auto [a, b] = plane.act(x, verts[v][0], verts[v][1]);
      s0 += a;
      s1 += b;
      ++cnt;
    }
    return plane.map(s0 / cnt, s1 / cnt);
  };

  std::vector<Vec2> pts{centre(p.alcove(0), -1)};
  for (int k = 1; k <= p.size(); ++k) {
    if (p.step(k).kind == StepKind::Fold) {
      pts.push_back(centre(p.alcove(k - 1), p.type().letters[k - 1]));
    }
    pts.push_back(centre(p.alcove(k), -1));
  }
  double lo_x = pts[0].x, hi_x = pts[0].x, lo_y = pts[0].y, hi_y = pts[0].y;
  for (const Vec2& v : pts) {
    lo_x = std::min(lo_x, v.x);
    hi_x = std::max(hi_x, v.x);
    lo_y = std::min(lo_y, v.y);
    hi_y = std::max(hi_y, v.y);
  }
  const double pad = 1.0;
  lo_x -= pad, lo_y -= pad, hi_x += pad, hi_y += pad;
  const double radius = std::hypot(hi_x - lo_x, hi_y - lo_y) + 1;

  std::ostringstream os;
  os << std::fixed << std::setprecision(4);
  os << "\\documentclass[tikz]{standalone}\n\\begin{document}\n"
     << "\\begin{tikzpicture}[scale=1.5]\n";
  os << "\\clip (" << lo_x << "," << lo_y << ") rectangle (" << hi_x << "," << hi_y
     << ");\n";
  for (int r = 0; r < rs.num_positive_roots(); ++r) {
    const Vec2 n = plane.normal(rs.root(r).root_coords);
    const double nn = n.x * n.x + n.y * n.y;
    const Vec2 d{-n.y / std::sqrt(nn), n.x / std::sqrt(nn)};
    const double proj_lo = std::min({n.x * lo_x + n.y * lo_y, n.x * lo_x + n.y * hi_y,
                                     n.x * hi_x + n.y * lo_y, n.x * hi_x + n.y * hi_y});
    const double proj_hi = std::max({n.x * lo_x + n.y * lo_y, n.x * lo_x + n.y * hi_y,
                                     n.x * hi_x + n.y * lo_y, n.x * hi_x + n.y * hi_y});
    for (int k = static_cast<int>(std::floor(-proj_hi)); k <= std::ceil(-proj_lo); ++k) {
      const Vec2 p0{-k * n.x / nn, -k * n.y / nn};
      os << "\\draw[gray!60,thin] (" << p0.x - radius * d.x << "," << p0.y - radius * d.y
         << ") -- (" << p0.x + radius * d.x << "," << p0.y + radius * d.y << ");\n";
    }
  }
  os << "\\fill[gray!30] ";
  for (int v = 0; v < 3; ++v) {
    const Vec2 q = plane.map(verts[v][0], verts[v][1]);
    os << "(" << q.x << "," << q.y << ") -- ";
  }
  os << "cycle;\n";
  os << "\\draw[thick,->] ";
  for (std::size_t k = 0; k < pts.size(); ++k)
    os << (k ? " -- " : "") << "(" << pts[k].x << "," << pts[k].y << ")";
  os << ";\n\\end{tikzpicture}\n\\end{document}\n";
  return os.str();
}

}  // namespace alcovia
