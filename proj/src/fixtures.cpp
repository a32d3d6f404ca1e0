#include "fixtures.hpp"

#include "analytic.hpp"
#include "bounds.hpp"
#include "decomposition.hpp"

namespace expsearch {

namespace {

RootedNetwork qbar() {
  // Arc order fixes the canonical branch choices: S1 = d,x,b,y',w',c,z',a.
  return RootedNetwork::build("O", {"O", "A", "B", "C", "E", "F", "M", "G"},
                              {
                                  {"d", "O", "E", Rat(2)},
                                  {"x", "E", "F", Rat(2)},
                                  {"b", "F", "B", Rat(2)},
                                  {"y", "M", "F", Rat(2)},
                                  {"w", "G", "M", Rat(1)},
                                  {"c", "G", "C", Rat(3)},
                                  {"z", "E", "G", Rat(1)},
                                  {"a", "O", "A", Rat(2)},
                              });
}

RootedNetwork fig4() {
  std::vector<std::string> nodes = {"O", "ta", "tb", "s1", "t1", "s2", "t2", "s3", "t3", "L"};
  std::vector<ArcInput> arcs;
  auto triple = [&arcs](const std::string& tag, const std::string& from, const std::string& to) {
    for (int i = 1; i <= 3; ++i) arcs.push_back({tag + std::to_string(i), from, to, Rat(1)});
  };
  triple("p", "O", "ta");
  triple("q", "O", "tb");
  arcs.push_back({"a", "O", "s1", Rat(1)});
  triple("r", "s1", "t1");
  arcs.push_back({"b", "t1", "s2", Rat(1)});
  triple("u", "s2", "t2");
  arcs.push_back({"c", "t1", "s3", Rat(1)});
  triple("v", "s3", "t3");
  arcs.push_back({"d", "O", "L", Rat(1)});
  return RootedNetwork::build("O", nodes, arcs);
}

RootedNetwork circle() {
  return RootedNetwork::build("O", {"O"}, {{"c", "O", "O", Rat(2)}});
}

RootedNetwork parallel3() {
  return RootedNetwork::build("O", {"O", "P"},
                              {{"p1", "O", "P", Rat(1)},
                               {"p2", "O", "P", Rat(1)},
                               {"p3", "O", "P", Rat(1)}});
}

}  // namespace

RootedNetwork fixture(const std::string& name, const Rat& alpha, long n) {
  if (name == "qbar") return qbar();
  if (name == "circle_spike") return circle_spike_network(alpha);
  if (name == "star") return star_network(n);
  if (name == "fig4") return fig4();
  if (name == "circle") return circle();
  if (name == "parallel3") return parallel3();
  if (name == "qbar_prime") {
    RootedNetwork q = qbar();
    return build_q_prime(q, decompose(q));
  }
  if (name == "qbar_double_prime") {
    RootedNetwork q = qbar();
    return build_q_double_prime(q, decompose(q));
  }
  throw Error(Errc::bad_argument, "unknown fixture '" + name + "'");
}

std::vector<std::pair<std::string, std::string>> fixture_catalog() {
  return {
      {"qbar", "four bridges a,b,c,d around a four-arc block; mu=15, pi=5"},
      {"circle_spike", "circle of length 2 with a unit spike; takes --alpha (default 1/2)"},
      {"star", "one unit arc plus n arcs of length sqrt(2)/n; takes --n (default 4)"},
      {"fig4", "nineteen unit arcs, five three-arc blocks joined by bridges a,b,c,d"},
      {"circle", "loop of length 2 at the root"},
      {"parallel3", "three parallel unit arcs"},
      {"qbar_prime", "qbar with block arcs reattached as loops at the root"},
      {"qbar_double_prime", "qbar_prime pruned along its tallest path"},
  };
}

}  // namespace expsearch
