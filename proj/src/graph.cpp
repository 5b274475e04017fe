#include "sr/graph.hpp"

#include <algorithm>
#include <cstddef>
#include <deque>

#include "sr/errors.hpp"

namespace sr {

namespace {

std::size_t to_index(ClassId id) { return static_cast<std::size_t>(id); }

}  // namespace

TransitionGraph::TransitionGraph(int n_emitters, RateSet rates,
                                 std::vector<ManifoldClass> classes,
                                 std::vector<Transition> transitions, ClassId ground_id)
    : n_emitters_(n_emitters),
      rates_(rates),
      classes_(std::move(classes)),
      transitions_(std::move(transitions)),
      ground_id_(ground_id) {
  validate();
}

void TransitionGraph::validate() {
  rates_.validate();
  if (n_emitters_ < 1) throw ValidationError("graph needs at least one emitter");
  if (classes_.empty()) throw ValidationError("graph has no classes");

  for (std::size_t i = 0; i < classes_.size(); ++i) {
    const ManifoldClass& c = classes_[i];
    if (c.id != static_cast<ClassId>(i))
      throw ValidationError("class ids must equal their storage index");
    if (c.degeneracy < 1) throw ValidationError("class degeneracy must be >= 1: " + c.label);
    if (c.excited < 0 || c.excited > c.active)
      throw ValidationError("class excitation count out of range: " + c.label);
  }

  if (to_index(ground_id_) >= classes_.size() || ground_id_ != static_cast<ClassId>(classes_.size() - 1))
    throw ValidationError("ground class must be stored last");
  if (cls(ground_id_).excited != 0) throw ValidationError("ground class must have zero excitation");

  int ground_count = 0;
  int initial_count = 0;
  for (const ManifoldClass& c : classes_) {
    if (c.excited == 0) ++ground_count;
    if (c.excited == n_emitters_ && c.active == n_emitters_) {
      ++initial_count;
      initial_id_ = c.id;
    }
  }
  if (ground_count != 1) throw ValidationError("exactly one class may have zero excitation");
  if (initial_count != 1)
    throw ValidationError("exactly one class may be fully excited (the initial class)");

  for (const Transition& t : transitions_) {
    if (to_index(t.from) >= classes_.size() || to_index(t.to) >= classes_.size())
      throw ValidationError("transition references unknown class");
    if (t.from == t.to) throw ValidationError("self-loop transition");
    if (t.coefficient.num() <= 0) throw ValidationError("transition coefficient must be > 0");
    if (t.multiplicity < 1) throw ValidationError("transition multiplicity must be >= 1");
    const int d = cls(t.to).excited - cls(t.from).excited;
    const int expected = t.kind == TransitionKind::pump ? 1 : -1;
    if (d != expected)
      throw ValidationError("transition must change excitation by one quantum: " +
                            cls(t.from).label + " -> " + cls(t.to).label);
    if (t.kind != TransitionKind::pump && t.from == ground_id_)
      throw ValidationError("ground class cannot decay");
  }

  topological_order();  // throws if the decay cascade has a cycle
}

bool TransitionGraph::has_pump() const {
  return std::any_of(transitions_.begin(), transitions_.end(),
                     [](const Transition& t) { return t.kind == TransitionKind::pump; });
}

double TransitionGraph::kind_rate(TransitionKind kind) const {
  switch (kind) {
    case TransitionKind::radiative: return rates_.radiative;
    case TransitionKind::nonradiative: return rates_.nonradiative;
    case TransitionKind::pump: return rates_.pump;
  }
  return 0.0;
}

double TransitionGraph::exit_rate(const Transition& t) const {
  return t.coefficient.value() * t.multiplicity * kind_rate(t.kind);
}

double TransitionGraph::flow_rate(const Transition& t) const {
  const ManifoldClass& from = cls(t.from);
  const double copies =
      from.semantics == PopulationSemantics::per_copy ? static_cast<double>(from.degeneracy) : 1.0;
  return exit_rate(t) * copies;
}

double TransitionGraph::loss_rate(ClassId id) const {
  double sum = 0.0;
  for (const Transition& t : transitions_)
    if (t.from == id) sum += exit_rate(t);
  return sum;
}

Rational TransitionGraph::loss_coefficient(ClassId id, TransitionKind kind) const {
  Rational sum;
  for (const Transition& t : transitions_)
    if (t.from == id && t.kind == kind) sum = sum + t.coefficient * t.multiplicity;
  return sum;
}

double TransitionGraph::conservation_weight(ClassId id) const {
  const ManifoldClass& c = cls(id);
  return c.semantics == PopulationSemantics::per_copy ? static_cast<double>(c.degeneracy) : 1.0;
}

std::vector<ClassId> TransitionGraph::topological_order() const {
  std::vector<int> indegree(classes_.size(), 0);
  for (const Transition& t : transitions_)
    if (t.kind != TransitionKind::pump && t.to != ground_id_) ++indegree[to_index(t.to)];

  std::deque<ClassId> ready;
  for (const ManifoldClass& c : classes_)
    if (c.id != ground_id_ && indegree[to_index(c.id)] == 0) ready.push_back(c.id);

  std::vector<ClassId> order;
  order.reserve(dynamic_count());
  while (!ready.empty()) {
    const ClassId u = ready.front();
    ready.pop_front();
    order.push_back(u);
    for (const Transition& t : transitions_) {
      if (t.from != u || t.kind == TransitionKind::pump || t.to == ground_id_) continue;
      if (--indegree[to_index(t.to)] == 0) ready.push_back(t.to);
    }
  }
  if (order.size() != dynamic_count())
    throw UnsupportedGraphError("decay cascade contains a cycle");
  return order;
}

std::vector<std::vector<double>> TransitionGraph::rate_matrix() const {
  const std::size_t n = classes_.size();
  std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
  for (const Transition& t : transitions_) {
    const std::size_t u = to_index(t.from);
    const std::size_t v = to_index(t.to);
    m[u][u] -= exit_rate(t);
    const ManifoldClass& target = cls(t.to);
    const double share =
        target.semantics == PopulationSemantics::per_copy ? static_cast<double>(target.degeneracy) : 1.0;
    m[v][u] += flow_rate(t) / share;
  }
  return m;
}

std::vector<std::vector<RateExpr>> TransitionGraph::symbolic_rate_matrix() const {
  const std::size_t n = classes_.size();
  std::vector<std::vector<RateExpr>> m(n, std::vector<RateExpr>(n));
  auto slot = [](RateExpr& e, TransitionKind kind) -> Rational& {
    switch (kind) {
      case TransitionKind::radiative: return e.radiative;
      case TransitionKind::nonradiative: return e.nonradiative;
      default: return e.pump;
    }
  };
  for (const Transition& t : transitions_) {
    const std::size_t u = to_index(t.from);
    const std::size_t v = to_index(t.to);
    const Rational exit = t.coefficient * t.multiplicity;
    slot(m[u][u], t.kind) = slot(m[u][u], t.kind) + exit * -1;
    const ManifoldClass& from = cls(t.from);
    const ManifoldClass& target = cls(t.to);
    Rational flow = exit;
    if (from.semantics == PopulationSemantics::per_copy) flow = flow * from.degeneracy;
    if (target.semantics == PopulationSemantics::per_copy)
      flow = flow * Rational(1, target.degeneracy);
    slot(m[v][u], t.kind) = slot(m[v][u], t.kind) + flow;
  }
  return m;
}

std::vector<double> TransitionGraph::excited_initial() const {
  std::vector<double> y(classes_.size(), 0.0);
  y[to_index(initial_id_)] = 1.0;
  return y;
}

std::optional<ClassId> TransitionGraph::find_label(const std::string& label) const {
  for (const ManifoldClass& c : classes_)
    if (c.label == label) return c.id;
  return std::nullopt;
}

const char* to_string(TransitionKind kind) {
  switch (kind) {
    case TransitionKind::radiative: return "radiative";
    case TransitionKind::nonradiative: return "nonradiative";
    case TransitionKind::pump: return "pump";
  }
  return "?";
}

const char* to_string(PopulationSemantics semantics) {
  return semantics == PopulationSemantics::per_copy ? "per_copy" : "aggregated";
}

}  // namespace sr
