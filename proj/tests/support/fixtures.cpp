#include "fixtures.hpp"

namespace labgraph::testing {

LabeledGraph Fish() {
  return LabeledGraph::FromEdges({"v", "w"}, {{"e", "v", "v", "1"}, {"f", "v", "w", "0"}, {"g", "w", "v", "0"}});
}

LabeledGraph Fish4() {
  return LabeledGraph::FromEdges({"v", "w"}, {{"vv", "v", "v", "1"},
                                              {"vw", "v", "w", "0"},
                                              {"wv", "w", "v", "0"},
                                              {"ww", "w", "w", "1"}});
}

LabeledGraph ComplementWitness() {
  return LabeledGraph::FromEdges({"u", "x", "y", "z"}, {{"ux", "u", "x", "a"},
                                                        {"uy", "u", "y", "a"},
                                                        {"uy2", "u", "y", "b"},
                                                        {"uz", "u", "z", "b"},
                                                        {"xu", "x", "u", "c"},
                                                        {"yu", "y", "u", "c"},
                                                        {"zu", "z", "u", "c"}});
}

SkewSpec SkewZ() {
  return SkewSpec(Fish(), Group::Integers(), {{"e", 1}, {"f", 1}, {"g", 1}}, {{"e", 0}, {"f", 0}, {"g", 0}});
}

SectionPack ShiftedSections() {
  SectionPack pack;
  pack.eta0 = {{"v", "(v,0)"}, {"w", "(w,2)"}};
  pack.etaA = {{"0", "(0,0)"}, {"1", "(1,0)"}};
  return pack;
}

SkewSpec Nofd() {
  return SkewSpec(Fish4(), Group::Integers(), {{"vv", 1}, {"vw", 1}, {"wv", 1}, {"ww", 1}},
                  {{"vv", 0}, {"vw", 0}, {"wv", -1}, {"ww", 2}});
}

std::vector<std::string> NofdDomain() { return {"(v,0)", "(w,1)"}; }

SkewSpec Fdok() {
  return SkewSpec(Fish(), Group::Cyclic(2), {{"e", 1}, {"f", 1}, {"g", 1}}, {{"e", 0}, {"f", 1}, {"g", 1}});
}

}  // namespace labgraph::testing
