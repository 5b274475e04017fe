#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sr/rates.hpp"
#include "sr/rational.hpp"

namespace sr {

enum class TransitionKind { radiative, nonradiative, pump };

// Whether a class's population variable means one orthogonal copy's
// population (the paper's W_1, shared by two manifolds) or the sum over all
// copies (class-aggregated graphs).
enum class PopulationSemantics { per_copy, aggregated };

using ClassId = int;

// One node of the cascade: a possibly degenerate manifold of emitter (x) bath
// states sharing a single population variable.
struct ManifoldClass {
  ClassId id = 0;
  std::string label;
  int active = 0;       // emitters not yet retired to a bath-tagged ground branch
  int excited = 0;      // excitation count, 0 <= excited <= active
  long degeneracy = 1;  // mutually orthogonal copies with identical dynamics
  PopulationSemantics semantics = PopulationSemantics::per_copy;
};

// Directed transition between classes. `coefficient` is the dimensionless
// rate multiplier per (source copy -> target copy) bundle and `multiplicity`
// the number of distinct target copies each source copy feeds, so that
//
//   per-source-copy loss rate   = coefficient * multiplicity * kind_rate
//   per-target-copy gain        = coefficient * kind_rate
//                                 * deg(from) * multiplicity / deg(to)
//
// e.g. W2 -> W1 carries (1, 2): each of the two W1 manifolds is fed at
// gamma while W2 loses 2*gamma, and |s3,2> -> |s2,1>_i carries (2/3, 3).
// Parallel micro-branches that land in the same merged class sum their
// coefficients (W+ -> ground non-radiative: 2 branches x gamma/2 -> 1).
struct Transition {
  ClassId from = 0;
  ClassId to = 0;
  TransitionKind kind = TransitionKind::radiative;
  Rational coefficient;
  int multiplicity = 1;
};

// A symbolic rate-matrix entry: exact rational coefficients of gamma_r,
// gamma and gamma_p. Lets tests compare builder output against the paper's
// printed equations with integer arithmetic only.
struct RateExpr {
  Rational radiative;
  Rational nonradiative;
  Rational pump;
  friend bool operator==(const RateExpr&, const RateExpr&) = default;
};

// Immutable after construction; safe to share across concurrent solver runs.
// Class storage order is the state order used by every solver; the ground
// class is always stored last.
class TransitionGraph {
 public:
  TransitionGraph(int n_emitters, RateSet rates, std::vector<ManifoldClass> classes,
                  std::vector<Transition> transitions, ClassId ground_id);

  int n_emitters() const { return n_emitters_; }
  const RateSet& rates() const { return rates_; }
  const std::vector<ManifoldClass>& classes() const { return classes_; }
  const std::vector<Transition>& transitions() const { return transitions_; }
  ClassId ground_id() const { return ground_id_; }
  ClassId initial_id() const { return initial_id_; }
  const ManifoldClass& cls(ClassId id) const { return classes_.at(static_cast<std::size_t>(id)); }

  // Number of non-ground classes (the dynamic state dimension).
  std::size_t dynamic_count() const { return classes_.size() - 1; }
  bool has_pump() const;

  double kind_rate(TransitionKind kind) const;
  // Per-source-copy (or per-source-state for aggregated classes) exit rate
  // through one transition: coefficient * multiplicity * kind_rate.
  double exit_rate(const Transition& t) const;
  // Total probability-flow rate coefficient: exit_rate summed over all
  // source copies, i.e. the factor multiplying the source population
  // variable in the target's aggregate inflow.
  double flow_rate(const Transition& t) const;
  // Per-copy total exit rate of a class (the diagonal loss rate).
  double loss_rate(ClassId id) const;
  // Exact coefficient of kind_rate in the per-copy loss (diagonal) term.
  Rational loss_coefficient(ClassId id, TransitionKind kind) const;

  // Weight of a class's population variable in the probability total:
  // degeneracy for per-copy classes, 1 for aggregated ones.
  double conservation_weight(ClassId id) const;

  // Dynamic classes in dependency order of the radiative+non-radiative
  // cascade (pump edges ignored; they are the only permitted cycles).
  std::vector<ClassId> topological_order() const;

  // Dense rate matrix over [dynamic classes..., ground], column = source.
  std::vector<std::vector<double>> rate_matrix() const;
  // Same matrix with exact rational coefficients per rate symbol.
  std::vector<std::vector<RateExpr>> symbolic_rate_matrix() const;

  // All-population-on-the-initial-class state vector (ground slot last).
  std::vector<double> excited_initial() const;

  std::optional<ClassId> find_label(const std::string& label) const;

 private:
  void validate();

  int n_emitters_;
  RateSet rates_;
  std::vector<ManifoldClass> classes_;
  std::vector<Transition> transitions_;
  ClassId ground_id_;
  ClassId initial_id_ = -1;
};

const char* to_string(TransitionKind kind);
const char* to_string(PopulationSemantics semantics);

}  // namespace sr
