#pragma once

// Reduced irreducible root systems and their finite Weyl groups.
//
// Everything is exact integer arithmetic driven by the Cartan matrix
// A[i][j] = <alpha_i^vee, alpha_j> (Bourbaki numbering). No ambient Euclidean
// space is used: roots are stored by their simple-root coordinates, coroots by
// their simple-coroot coordinates, and coweights by their coordinates in the
// fundamental-coweight basis omega_1..omega_n, so <omega_i, alpha_j> = delta_ij.
//
// Simple indices in the public interface are 1-based (1..n); coordinate
// vectors are 0-based (coords[0] is the omega_1 / alpha_1 coordinate).
//
// G2 follows Bourbaki: alpha_1 is short, alpha_2 is long, the Cartan matrix is
// [[2,-3],[-1,2]] and the highest root is theta = 3 alpha_1 + 2 alpha_2.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "alcovia/error.hpp"

namespace alcovia {

using IntVec = std::vector<int>;
using Word = std::vector<int>;

/// A coweight in fundamental-coweight coordinates.
class Coweight {
 public:
  Coweight() = default;
  explicit Coweight(IntVec coords) : c_(std::move(coords)) {}
  Coweight(std::initializer_list<int> coords) : c_(coords) {}

  static Coweight zero(int rank) { return Coweight(IntVec(rank, 0)); }

  int rank() const { return static_cast<int>(c_.size()); }
  int operator[](std::size_t i) const { return c_[i]; }
  int& operator[](std::size_t i) { return c_[i]; }
  const IntVec& coords() const { return c_; }

  bool is_zero() const;
  bool is_dominant() const;

  Coweight& operator+=(const Coweight& o);
  Coweight& operator-=(const Coweight& o);
  friend Coweight operator+(Coweight a, const Coweight& b) { return a += b; }
  friend Coweight operator-(Coweight a, const Coweight& b) { return a -= b; }
  friend Coweight operator-(Coweight a);
  friend Coweight operator*(int k, Coweight a);

  auto operator<=>(const Coweight&) const = default;
  bool operator==(const Coweight&) const = default;

  std::string str() const;  // "(1,-2,0)"

 private:
  IntVec c_;
};

struct CoweightHash {
  std::size_t operator()(const Coweight& c) const noexcept;
};

struct Root {
  IntVec root_coords;    // expansion in simple roots
  IntVec coroot_coords;  // expansion of the coroot in simple coroots
  bool positive = true;
};

/// Element of the finite Weyl group, stored as its action on simple roots.
///
/// images()[r * n + j] is the alpha_r coefficient of w(alpha_j); the inverse
/// matrix is kept alongside so the contragredient action on coweights is a
/// single matrix-vector product.
class FinWeylElem {
 public:
  FinWeylElem() = default;

  int rank() const { return n_; }
  int length() const { return length_; }
  const IntVec& images() const { return fwd_; }
  const IntVec& inverse_images() const { return inv_; }

  bool operator==(const FinWeylElem& o) const { return fwd_ == o.fwd_; }
  std::strong_ordering operator<=>(const FinWeylElem& o) const {
    return fwd_ <=> o.fwd_;
  }

 private:
  friend class RootSystem;
  int n_ = 0;
  IntVec fwd_;
  IntVec inv_;
  int length_ = 0;
};

struct FinWeylElemHash {
  std::size_t operator()(const FinWeylElem& w) const noexcept;
};

class RootSystem {
 public:
  /// Parses labels such as "A2", "a_2", "G2", "E6". Throws UnknownType or
  /// RankOutOfRange.
  static RootSystem build(std::string_view type_label);

  const std::string& label() const { return label_; }
  char family() const { return family_; }
  int rank() const { return n_; }

  /// A[i][j] = <alpha_i^vee, alpha_j>, 1-based indices.
  int cartan(int i, int j) const { return cartan_[(i - 1) * n_ + (j - 1)]; }

  /// Positive roots first (index 0..N-1, simple roots at 0..n-1), then their
  /// negatives at index k + N.
  const std::vector<Root>& roots() const { return roots_; }
  int num_positive_roots() const { return static_cast<int>(roots_.size() / 2); }
  const Root& root(int index) const { return roots_[index]; }
  std::optional<int> root_index(const IntVec& root_coords) const;
  int negate_index(int index) const;
  const Root& simple_root(int i) const { return roots_[i - 1]; }
  const Root& theta() const { return roots_[theta_index_]; }
  int theta_index() const { return theta_index_; }

  /// Sum of positive roots, in simple-root coordinates.
  const IntVec& two_rho() const { return two_rho_; }
  /// Sum of positive coroots, as a coweight.
  const Coweight& two_rho_vee() const { return two_rho_vee_; }
  std::uint64_t weyl_order() const { return weyl_order_; }

  /// Half squared length of alpha_i, normalized so short roots give 1.
  int symmetrizer(int i) const { return sym_[i - 1]; }
  /// Half squared length of an arbitrary root (same normalization).
  int half_norm(const IntVec& root_coords) const;

  // -- lattice arithmetic --------------------------------------------------

  int pair(const Coweight& mu, const IntVec& root_coords) const;
  int pair(const Coweight& mu, const Root& alpha) const {
    return pair(mu, alpha.root_coords);
  }
  int pair_two_rho(const Coweight& mu) const { return pair(mu, two_rho_); }

  Coweight simple_coroot(int i) const;
  Coweight coroot_as_coweight(const Root& alpha) const;
  Coweight simple_reflect(int i, const Coweight& mu) const;

  /// Simple-coroot coordinates of mu when mu lies in the coroot lattice Q.
  std::optional<IntVec> coroot_coordinates(const Coweight& mu) const;
  /// lambda - mu in Q+ (nonnegative integer combination of simple coroots).
  bool dominates(const Coweight& lambda, const Coweight& mu) const;

  /// (mu^+, w) with w(mu) = mu^+ dominant and w of minimal length.
  std::pair<Coweight, FinWeylElem> dominant_rep(const Coweight& mu) const;
  /// Full orbit W0 lambda, sorted, no duplicates. Throws NotDominant.
  std::vector<Coweight> weyl_orbit(const Coweight& lambda) const;
  /// Minimal length coset representatives of W0 / W0_lambda with their
  /// canonical words, ordered by (length, word).
  std::vector<std::pair<FinWeylElem, Word>> coset_min_reps(
      const Coweight& lambda) const;
  std::pair<FinWeylElem, Word> longest_element() const;
  /// Longest element of the stabilizer W0_lambda of a dominant lambda.
  FinWeylElem stabilizer_longest(const Coweight& lambda) const;

  // -- finite Weyl group ---------------------------------------------------

  FinWeylElem identity() const;
  FinWeylElem simple(int i) const;
  FinWeylElem reflection(const Root& alpha) const;
  FinWeylElem mul(const FinWeylElem& a, const FinWeylElem& b) const;
  FinWeylElem inverse(const FinWeylElem& a) const;
  FinWeylElem from_word(const Word& word) const;

  Coweight act(const FinWeylElem& w, const Coweight& mu) const;
  IntVec act_on_root(const FinWeylElem& w, const IntVec& root_coords) const;
  static bool is_positive(const IntVec& root_coords);

  /// l(s_i w) < l(w).
  bool is_left_descent(int i, const FinWeylElem& w) const;
  /// l(w s_i) < l(w).
  bool is_right_descent(const FinWeylElem& w, int i) const;
  /// Lexicographically smallest reduced word (greedy smallest left descent).
  Word canonical_word(const FinWeylElem& w) const;
  /// Reduced word built by always taking the largest left descent.
  Word alternate_word(const FinWeylElem& w) const;
  bool is_reduced_word_for(const Word& word, const FinWeylElem& w) const;

  /// All of W0, ordered by (length, canonical word). Throws GroupTooLarge
  /// when |W0| exceeds the bound.
  std::vector<FinWeylElem> elements(const Bounds& bounds = Bounds{}) const;
  void guard_group_size(const Bounds& bounds, std::string_view what) const;

  void require_rank(const Coweight& mu, std::string_view what) const;
  void require_dominant(const Coweight& mu, std::string_view what) const;
  void require_simple_index(int i) const;

 private:
  RootSystem() = default;
  FinWeylElem make(IntVec fwd, IntVec inv) const;
  int compute_length(const IntVec& fwd) const;

  std::string label_;
  char family_ = 'A';
  int n_ = 0;
  IntVec cartan_;
  IntVec sym_;
  std::vector<Root> roots_;
  std::vector<std::pair<IntVec, int>> root_lookup_;  // sorted by coords
  int theta_index_ = 0;
  IntVec two_rho_;
  Coweight two_rho_vee_;
  std::uint64_t weyl_order_ = 0;
  // Inverse of the transposed Cartan matrix as numerators over cartan_det_.
  IntVec cartan_t_adj_;
  int cartan_det_ = 1;
};

}  // namespace alcovia
