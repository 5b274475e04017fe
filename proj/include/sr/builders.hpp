#pragma once

#include "sr/graph.hpp"

namespace sr {

// The paper-exact four-class cascade: W2 -> {W+, W1 x2} -> ground.
// Requires rates.pump == 0.
TransitionGraph build_two_emitter_graph(const RateSet& rates);

// The paper-exact eight-class cascade of the three-emitter system:
// W3, s(3,2), s(3,1), sn(2,1) x3, W2 x3, sr(2,1) x3, W1 x6, ground.
// Requires rates.pump == 0.
TransitionGraph build_three_emitter_graph(const RateSet& rates);

// n independent emitters: classes by number of excited emitters, aggregated
// populations, degeneracy C(n, m). The no-superradiance baseline.
TransitionGraph build_independent_graph(int n, const RateSet& rates);

// Class-aggregated superradiant cascade for arbitrary n. Nodes V(a, k) for
// 1 <= k <= a <= n hold the total population of all orthogonal symmetric
// manifolds of a active emitters with k excitations. Radiative edges stay in
// the family with Dicke coefficient k(a-k+1); non-radiative edges retire one
// emitter, V(a,k) -> V(a-1,k-1), with total coefficient k split evenly over
// the a symmetric subsets. Reproduces the N=2 and N=3 graphs aggregated.
TransitionGraph build_general_graph(int n, const RateSet& rates);

}  // namespace sr
