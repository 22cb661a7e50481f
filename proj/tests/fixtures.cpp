#include "fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace altcert::fixtures {

SurfaceMap map_from_rotation(const std::vector<std::vector<int>>& ccw, int genus) {
  std::vector<int> offset(ccw.size() + 1, 0);
  for (std::size_t v = 0; v < ccw.size(); ++v) offset[v + 1] = offset[v] + ccw[v].size();
  const int n = offset.back();
  std::vector<Dart> sigma(n), alpha(n);
  for (std::size_t v = 0; v < ccw.size(); ++v) {
    const int k = ccw[v].size();
    for (int i = 0; i < k; ++i) {
      sigma[offset[v] + i] = offset[v] + (i + 1) % k;
      const int u = ccw[v][i];
      const auto it = std::find(ccw[u].begin(), ccw[u].end(), static_cast<int>(v));
      alpha[offset[v] + i] = offset[u] + static_cast<int>(it - ccw[u].begin());
    }
  }
  return SurfaceMap::build(sigma, alpha, genus);
}

SurfaceMap planar_drawing(const std::vector<std::pair<double, double>>& pts,
                          const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> nb(pts.size());
  for (auto [a, b] : edges) {
    nb[a].push_back(b);
    nb[b].push_back(a);
  }
  for (std::size_t v = 0; v < pts.size(); ++v) {
    auto angle = [&](int u) {
      return std::atan2(pts[u].second - pts[v].second, pts[u].first - pts[v].first);
    };
    std::sort(nb[v].begin(), nb[v].end(), [&](int a, int b) { return angle(a) < angle(b); });
  }
  return map_from_rotation(nb, 0);
}

SurfaceMap theta_graph() {
  return SurfaceMap::build({1, 2, 0, 4, 5, 3}, {3, 5, 4, 0, 2, 1}, 0);
}

SurfaceMap torus_bouquet() { return SurfaceMap::build({1, 2, 3, 0}, {2, 3, 0, 1}, 1); }

SurfaceMap nested_bouquet() { return SurfaceMap::build({1, 2, 3, 0}, {1, 0, 3, 2}, 0); }

SurfaceMap cycle_graph(int n) {
  std::vector<Dart> sigma(2 * n), alpha(2 * n);
  for (int i = 0; i < n; ++i) {
    // Dart 2i leaves vertex i toward i+1, dart 2i+1 toward i-1.
    sigma[2 * i] = 2 * i + 1;
    sigma[2 * i + 1] = 2 * i;
    const int j = (i + 1) % n;
    alpha[2 * i] = 2 * j + 1;
    alpha[2 * j + 1] = 2 * i;
  }
  return SurfaceMap::build(sigma, alpha, 0);
}

SurfaceMap torus_grid(int n, int m) {
  std::vector<Dart> sigma(4 * n * m), alpha(4 * n * m);
  auto id = [&](int i, int j) { return ((i + n) % n) * m + (j + m) % m; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) {
      const int v = id(i, j);
      for (int k = 0; k < 4; ++k) sigma[4 * v + k] = 4 * v + (k + 1) % 4;
      alpha[4 * v + 0] = 4 * id(i, j + 1) + 2;
      alpha[4 * v + 2] = 4 * id(i, j - 1) + 0;
      alpha[4 * v + 1] = 4 * id(i + 1, j) + 3;
      alpha[4 * v + 3] = 4 * id(i - 1, j) + 1;
    }
  return SurfaceMap::build(sigma, alpha, 1);
}

SurfaceMap path_graph(int k) {
  std::vector<std::pair<double, double>> pts;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i) pts.emplace_back(i, 0.0);
  for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
  return planar_drawing(pts, edges);
}

SurfaceMap k4() {
  return planar_drawing({{0, 1}, {-0.87, -0.5}, {0.87, -0.5}, {0, 0}},
                        {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}, {2, 3}});
}

SurfaceMap cube() {
  return planar_drawing({{-2, -2}, {2, -2}, {2, 2}, {-2, 2}, {-1, -1}, {1, -1}, {1, 1}, {-1, 1}},
                        {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4},
                         {0, 4}, {1, 5}, {2, 6}, {3, 7}});
}

SurfaceMap octahedron() {
  return planar_drawing({{0, 3}, {-2.6, -1.5}, {2.6, -1.5}, {0, -1}, {0.87, 0.5}, {-0.87, 0.5}},
                        {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3},
                         {0, 4}, {0, 5}, {1, 5}, {1, 3}, {2, 3}, {2, 4}});
}

SurfaceMap triangular_prism() {
  return planar_drawing({{0, 3}, {-2.6, -1.5}, {2.6, -1.5}, {0, 1}, {-0.87, -0.5}, {0.87, -0.5}},
                        {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
}

SurfaceMap wheel(int spokes) {
  std::vector<std::pair<double, double>> pts{{0, 0}};
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < spokes; ++i) {
    const double t = 2 * M_PI * i / spokes;
    pts.emplace_back(std::cos(t), std::sin(t));
    edges.emplace_back(0, i + 1);
    edges.emplace_back(i + 1, (i + 1) % spokes + 1);
  }
  return planar_drawing(pts, edges);
}

SurfaceMap genus2_cage() {
  return map_from_rotation({{1, 4, 2}, {0, 3, 2}, {1, 0, 4, 3}, {2, 1, 4}, {3, 0, 2}}, 2);
}

SurfaceMap genus2_cage_b() {
  return map_from_rotation({{1, 4, 3, 2}, {0, 2, 4, 3}, {0, 3, 4, 1}, {0, 2, 1, 4}, {0, 1, 3, 2}},
                           2);
}

LinkDiagram hopf() { return parse_pd("PD genus=0\nX[4,1,3,2]\nX[2,3,1,4]\n"); }

LinkDiagram trefoil() { return parse_pd("PD genus=0\nX[1,4,2,5]\nX[3,6,4,1]\nX[5,2,6,3]\n"); }

LinkDiagram figure_eight() {
  return parse_pd("PD genus=0\nX[4,2,5,1]\nX[8,6,1,5]\nX[6,3,7,4]\nX[2,7,3,8]\n");
}

LinkDiagram knot_6_2() {
  return parse_pd(
      "PD genus=0\nX[1,4,2,5]\nX[5,10,6,11]\nX[3,9,4,8]\nX[9,3,10,2]\nX[7,12,8,1]\n"
      "X[11,6,12,7]\n");
}

LinkDiagram alternating_medial(const SurfaceMap& map) {
  auto med = medial(map);
  auto over = alternating_assignment(med);
  return LinkDiagram(std::move(med), std::move(over));
}

LinkDiagram two_braid(int n) { return alternating_medial(cycle_graph(n)); }

LinkDiagram connected_sum(const LinkDiagram& a, Dart x, const LinkDiagram& b) {
  const int na = a.map().num_darts();
  const int nb = b.map().num_darts();
  std::vector<Dart> sigma(na + nb), alpha(na + nb);
  for (Dart d = 0; d < na; ++d) {
    sigma[d] = a.map().sigma(d);
    alpha[d] = a.map().alpha(d);
  }
  for (Dart d = 0; d < nb; ++d) {
    sigma[na + d] = na + b.map().sigma(d);
    alpha[na + d] = na + b.map().alpha(d);
  }
  // Pick the end of b's first edge whose over status matches x.
  Dart y = 0;
  if (b.is_over(y) != a.is_over(x)) y = b.map().alpha(0);
  const Dart ax = a.map().alpha(x);
  const Dart ay = na + b.map().alpha(y);
  y += na;
  alpha[x] = ay;
  alpha[ay] = x;
  alpha[y] = ax;
  alpha[ax] = y;
  auto map = SurfaceMap::build(sigma, alpha, a.genus() + b.genus());
  // Over flags are indexed by minimum dart, which preserves the input order.
  std::vector<bool> over = a.over_flags();
  over.insert(over.end(), b.over_flags().begin(), b.over_flags().end());
  return LinkDiagram(std::move(map), std::move(over));
}

LinkDiagram trefoil_sum() { return connected_sum(trefoil(), 0, trefoil()); }

LinkDiagram add_kink(const LinkDiagram& diagram, Dart x) {
  const auto& m = diagram.map();
  const int n = m.num_darts();
  std::vector<Dart> sigma(m.sigma_array().begin(), m.sigma_array().end());
  std::vector<Dart> alpha(m.alpha_array().begin(), m.alpha_array().end());
  for (int k = 0; k < 4; ++k) sigma.push_back(n + (k + 1) % 4);
  alpha.resize(n + 4);
  const Dart ax = m.alpha(x);
  alpha[n] = n + 1;
  alpha[n + 1] = n;
  alpha[x] = n + 2;
  alpha[n + 2] = x;
  alpha[ax] = n + 3;
  alpha[n + 3] = ax;
  auto map = SurfaceMap::build(sigma, alpha, diagram.genus());
  std::vector<bool> over = diagram.over_flags();
  over.push_back(!diagram.is_over(x));
  return LinkDiagram(std::move(map), std::move(over));
}

LinkDiagram kinked_trefoil() { return add_kink(trefoil(), 0); }

LinkDiagram torus_one_crossing() { return LinkDiagram(torus_bouquet(), {true}); }

}  // namespace altcert::fixtures
