#pragma once

#include <string>
#include <vector>

#include "labgraph/gross_tucker.hpp"
#include "labgraph/labeled_graph.hpp"
#include "labgraph/skew_product.hpp"

namespace labgraph::testing {

// v, w; e: v->v labeled 1, f: v->w labeled 0, g: w->v labeled 0.
LabeledGraph Fish();
// v, w; vv: v->v labeled 1, vw: v->w labeled 0, wv: w->v labeled 0,
// ww: w->w labeled 1.
LabeledGraph Fish4();
// u emits a-edges to x, y and b-edges to y, z; x, y, z return to u by c.
// r(a) \ r(b) = {x} is not reachable without relative complements.
LabeledGraph ComplementWitness();

// Fish over the integers, c = 1, d = 0.
SkewSpec SkewZ();
inline constexpr Window kShiftedWindow{-4, 6};
// eta0(v) = (v,0), eta0(w) = (w,2); etaA(0) = (0,0), etaA(1) = (1,0).
SectionPack ShiftedSections();
// Fish4 over the integers, c = 1, d = (vv 0, vw 0, wv -1, ww 2).
SkewSpec Nofd();
inline constexpr Window kNofdWindow{-3, 3};
std::vector<std::string> NofdDomain();
// Fish over Z/2 with c = 1 and d = (e 0, f 1, g 1).
SkewSpec Fdok();

}  // namespace labgraph::testing
