#include <iostream>

#include "hsub/hsub.hpp"

int main() {
  using namespace hsub;
  const Graph g = generate_random_graph(16, 0.5, WeightMode::vertex, std::nullopt, 7);

  if (auto t = heaviest_triangle_det(g)) {
    std::cout << "heaviest triangle " << format_real(t->weight) << " on";
    for (Vertex v : t->vertices) std::cout << ' ' << v;
    std::cout << '\n';
  }

  const AllPairsBest best = all_pairs_max_clique(g, 4);
  std::size_t pairs = 0;
  for (Vertex u = 1; u <= g.n(); ++u) {
    for (Vertex v = u + 1; v <= g.n(); ++v) pairs += best.at(u, v).has_value();
  }
  std::cout << pairs << " vertex pairs lie on a K_4\n";

  const PlanParameters p = plan_parameters(2.376, 7);
  std::cout << "t(2.376, 7) = " << p.t << " with split " << p.a << '/' << p.b << '/' << p.c << '\n';
}
