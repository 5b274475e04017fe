#include "sr/builders.hpp"

#include <string>
#include <vector>

#include "sr/errors.hpp"

namespace sr {

namespace {

constexpr auto kRad = TransitionKind::radiative;
constexpr auto kNonRad = TransitionKind::nonradiative;

void require_no_pump(const RateSet& rates, const char* builder) {
  rates.validate();
  if (rates.pump != 0.0)
    throw ValidationError(std::string(builder) + " requires a zero pump rate");
}

long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TransitionGraph build_two_emitter_graph(const RateSet& rates) {
  require_no_pump(rates, "build_two_emitter_graph");
  std::vector<ManifoldClass> classes = {
      {0, "W2", 2, 2, 1, PopulationSemantics::per_copy},
      {1, "W+", 2, 1, 1, PopulationSemantics::per_copy},
      {2, "W1", 1, 1, 2, PopulationSemantics::per_copy},
      {3, "ground", 0, 0, 1, PopulationSemantics::aggregated},
  };
  std::vector<Transition> transitions = {
      {0, 1, kRad, Rational(2), 1},     // collective emission into |+>
      {0, 2, kNonRad, Rational(1), 2},  // gamma per emitter, one W1 copy each
      {1, 3, kRad, Rational(2), 1},
      {1, 3, kNonRad, Rational(1), 1},  // two branches at gamma/2, merged
      {2, 3, kRad, Rational(1), 1},
      {2, 3, kNonRad, Rational(1), 1},
  };
  return TransitionGraph(2, rates, std::move(classes), std::move(transitions), 3);
}

TransitionGraph build_three_emitter_graph(const RateSet& rates) {
  require_no_pump(rates, "build_three_emitter_graph");
  std::vector<ManifoldClass> classes = {
      {0, "W3", 3, 3, 1, PopulationSemantics::per_copy},
      {1, "s(3,2)", 3, 2, 1, PopulationSemantics::per_copy},
      {2, "s(3,1)", 3, 1, 1, PopulationSemantics::per_copy},
      {3, "sn(2,1)", 2, 1, 3, PopulationSemantics::per_copy},
      {4, "W2", 2, 2, 3, PopulationSemantics::per_copy},
      {5, "sr(2,1)", 2, 1, 3, PopulationSemantics::per_copy},
      {6, "W1", 1, 1, 6, PopulationSemantics::per_copy},
      {7, "ground", 0, 0, 1, PopulationSemantics::aggregated},
  };
  std::vector<Transition> transitions = {
      {0, 1, kRad, Rational(3), 1},
      {0, 4, kNonRad, Rational(1), 3},     // gamma per emitter, one W2 copy each
      {1, 2, kRad, Rational(4), 1},        // Dicke-enhanced step of the symmetric family
      {1, 3, kNonRad, Rational(2, 3), 3},  // statistical weight 2/3 per |s2,1>_i
      {2, 7, kRad, Rational(3), 1},
      {2, 7, kNonRad, Rational(1), 1},
      {3, 7, kRad, Rational(2), 1},
      {3, 7, kNonRad, Rational(1), 1},
      {4, 5, kRad, Rational(2), 1},
      {4, 6, kNonRad, Rational(1), 2},  // each W2 copy feeds its two W1 copies
      {5, 7, kRad, Rational(2), 1},
      {5, 7, kNonRad, Rational(1), 1},
      {6, 7, kRad, Rational(1), 1},
      {6, 7, kNonRad, Rational(1), 1},
  };
  return TransitionGraph(3, rates, std::move(classes), std::move(transitions), 7);
}

TransitionGraph build_independent_graph(int n, const RateSet& rates) {
  rates.validate();
  if (rates.pump != 0.0)
    throw ValidationError("build_independent_graph requires a zero pump rate");
  if (n < 1) throw ValidationError("emitter count must be >= 1");

  std::vector<ManifoldClass> classes;
  std::vector<Transition> transitions;
  for (int m = n; m >= 1; --m) {
    const ClassId id = n - m;
    classes.push_back({id, "m" + std::to_string(m), m, m, binomial(n, m),
                       PopulationSemantics::aggregated});
    transitions.push_back({id, id + 1, kRad, Rational(m), 1});
    transitions.push_back({id, id + 1, kNonRad, Rational(m), 1});
  }
  classes.push_back({n, "ground", 0, 0, 1, PopulationSemantics::aggregated});
  return TransitionGraph(n, rates, std::move(classes), std::move(transitions), n);
}

TransitionGraph build_general_graph(int n, const RateSet& rates) {
  require_no_pump(rates, "build_general_graph");
  if (n < 1) throw ValidationError("emitter count must be >= 1");

  std::vector<ManifoldClass> classes;
  auto label = [](int a, int k) {
    return "V(" + std::to_string(a) + "," + std::to_string(k) + ")";
  };
  for (int a = n; a >= 1; --a)
    for (int k = a; k >= 1; --k)
      classes.push_back({static_cast<ClassId>(classes.size()), label(a, k), a, k, 1,
                         PopulationSemantics::aggregated});
  const ClassId ground = static_cast<ClassId>(classes.size());
  classes.push_back({ground, "ground", 0, 0, 1, PopulationSemantics::aggregated});

  auto id_of = [&](int a, int k) -> ClassId {
    // classes are laid out a = n..1 (descending), k = a..1 within each a
    int offset = 0;
    for (int aa = n; aa > a; --aa) offset += aa;
    return offset + (a - k);
  };

  std::vector<Transition> transitions;
  for (int a = n; a >= 1; --a) {
    for (int k = a; k >= 1; --k) {
      const ClassId u = id_of(a, k);
      const ClassId rad_to = k > 1 ? id_of(a, k - 1) : ground;
      transitions.push_back({u, rad_to, kRad, Rational(static_cast<std::int64_t>(k) * (a - k + 1)), 1});
      const ClassId nr_to = k > 1 ? id_of(a - 1, k - 1) : ground;
      transitions.push_back({u, nr_to, kNonRad, Rational(k), 1});
    }
  }
  return TransitionGraph(n, rates, std::move(classes), std::move(transitions), ground);
}

}  // namespace sr
