#pragma once

// Positively folded alcove walks.
//
// A walk is its type (letters over 0..n followed by a length-zero element),
// a fold mask and a start alcove. The alcove sequence and the per-step walls
// are derived from these and cached on construction. A Walk keeps a pointer
// to its RootSystem, which must outlive it.

#include <map>
#include <vector>

#include "alcovia/affine.hpp"

namespace alcovia {

struct WalkType {
  Word letters;
  AffElem omega;
};

enum class StepKind { PosCross, NegCross, Fold };

struct Step {
  AffRoot wall;
  StepKind kind;
};

struct WalkStats {
  int pos = 0;
  int neg = 0;
  int folds = 0;
  int length = 0;
  int signed_len = 0;
  int dim = 0;
  Coweight weight;
  FinWeylElem final_dir;
};

class Walk {
 public:
  /// folds holds 1-based step positions. Throws InvalidWalk if a fold is
  /// not on the positive side of its wall.
  Walk(const RootSystem& rs, WalkType type, const std::vector<int>& folds);
  Walk(const RootSystem& rs, WalkType type, const std::vector<int>& folds,
       AffElem start);

  const RootSystem& root_system() const { return *rs_; }
  const WalkType& type() const { return type_; }
  int size() const { return static_cast<int>(type_.letters.size()); }
  std::vector<int> folds() const;
  bool is_fold(int k) const { return mask_[k - 1]; }  // 1-based
  const std::vector<bool>& mask() const { return mask_; }
  const AffElem& start() const { return alcoves_.front(); }

  /// x_0 .. x_l (before the final length-zero element).
  const std::vector<AffElem>& alcoves() const { return alcoves_; }
  const AffElem& alcove(int k) const { return alcoves_[k]; }
  /// Step k, 1-based.
  const Step& step(int k) const { return steps_[k - 1]; }
  const std::vector<Step>& steps() const { return steps_; }
  const AffElem& end() const { return end_; }

  WalkStats stats() const;
  int dim() const;
  int num_folds() const;
  const Coweight& weight() const { return end_.trans; }

  /// Same type and start with a different fold mask.
  Walk with_mask(std::vector<bool> mask) const;

  bool operator==(const Walk& o) const {
    return type_.letters == o.type_.letters && type_.omega == o.type_.omega &&
           mask_ == o.mask_ && alcoves_.front() == o.alcoves_.front();
  }

 private:
  friend std::vector<Walk> enumerate_walks(const RootSystem&, const WalkType&,
                                           const AffElem&, const Bounds&);
  Walk(const RootSystem& rs, WalkType type, std::vector<bool> mask, AffElem start,
       bool);
  void rebuild();

  const RootSystem* rs_;
  WalkType type_;
  std::vector<bool> mask_;
  std::vector<AffElem> alcoves_;
  std::vector<Step> steps_;
  AffElem end_;
};

/// Type u.m_lambda for the minimal coset representative u.
WalkType lambda_walk_type(const RootSystem& rs, const Coweight& lambda,
                          const FinWeylElem& u);

/// The fold-free walk of type (w0 w_{0 lambda}).m_lambda ending at t_{w0 lambda}.
Walk antidominant_walk(const RootSystem& rs, const Coweight& lambda);

/// All positively folded walks of the given type from the given start, in
/// depth-first order with crossings before folds.
std::vector<Walk> enumerate_walks(const RootSystem& rs, const WalkType& type,
                                  const Bounds& bounds = Bounds{});
std::vector<Walk> enumerate_walks(const RootSystem& rs, const WalkType& type,
                                  const AffElem& start, const Bounds& bounds);

/// P(lambda) grouped by weight.
std::map<Coweight, std::vector<Walk>> enumerate_P_lambda(
    const RootSystem& rs, const Coweight& lambda, const Bounds& bounds = Bounds{});

/// Walks of type m_lambda starting at each u in W0^lambda.
std::vector<Walk> enumerate_P_prime(const RootSystem& rs, const Coweight& lambda,
                                    const Bounds& bounds = Bounds{});

/// p_0, ..., p_f where p_i keeps the first i folds of p.
std::vector<Walk> unfold_sequence(const Walk& p);

/// <lambda + mu, rho>, asserting that <lambda + mu, 2 rho> is even.
int half_pair_rho(const RootSystem& rs, const Coweight& lambda, const Coweight& mu);

}  // namespace alcovia
