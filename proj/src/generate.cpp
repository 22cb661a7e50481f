#include "altcert/generate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "altcert/cage.hpp"

namespace altcert {

SurfaceMap map_from_rotation(const std::vector<std::vector<int>>& ccw) {
  std::map<std::pair<int, int>, Dart> dart_of;
  Dart next = 0;
  for (int u = 0; u < static_cast<int>(ccw.size()); ++u)
    for (int v : ccw[u])
      if (u < v) {
        dart_of[{u, v}] = next++;
        dart_of[{v, u}] = next++;
      }
  std::vector<Dart> sigma(next), alpha(next);
  for (const auto& [uv, d] : dart_of) {
    alpha[d] = dart_of.at({uv.second, uv.first});
  }
  for (int u = 0; u < static_cast<int>(ccw.size()); ++u) {
    const auto& nb = ccw[u];
    for (std::size_t i = 0; i < nb.size(); ++i)
      sigma[dart_of.at({u, nb[i]})] = dart_of.at({u, nb[(i + 1) % nb.size()]});
  }
  const auto probe = SurfaceMap::build(sigma, alpha, 0);
  return SurfaceMap::build(sigma, alpha, probe.derived_genus());
}

SurfaceMap random_planar_triangulation(std::mt19937_64& rng, int vertices) {
  if (vertices < 4) throw Error(ErrorCode::InvalidParameter, "need at least 4 vertices");
  std::vector<std::array<double, 2>> pts{{0.0, 1.0}, {-0.8660254, -0.5}, {0.8660254, -0.5}};
  std::vector<std::array<int, 3>> faces{{0, 1, 2}};
  std::set<std::pair<int, int>> edges{{0, 1}, {0, 2}, {1, 2}};
  std::uniform_real_distribution<double> unit(0.2, 1.0);
  while (static_cast<int>(pts.size()) < vertices) {
    // Favour large triangles so the drawing stays well conditioned.
    std::vector<double> area;
    for (const auto& f : faces) {
      const auto &a = pts[f[0]], &b = pts[f[1]], &c = pts[f[2]];
      area.push_back(std::abs((b[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (b[1] - a[1])));
    }
    std::discrete_distribution<std::size_t> pick(area.begin(), area.end());
    const std::size_t fi = pick(rng);
    const auto f = faces[fi];
    const double wa = unit(rng), wb = unit(rng), wc = unit(rng), s = wa + wb + wc;
    const int w = static_cast<int>(pts.size());
    pts.push_back({(wa * pts[f[0]][0] + wb * pts[f[1]][0] + wc * pts[f[2]][0]) / s,
                   (wa * pts[f[0]][1] + wb * pts[f[1]][1] + wc * pts[f[2]][1]) / s});
    faces[fi] = {f[0], f[1], w};
    faces.push_back({f[1], f[2], w});
    faces.push_back({f[2], f[0], w});
    for (int v : f) edges.insert({std::min(v, w), std::max(v, w)});
  }
  std::vector<std::vector<int>> nb(pts.size());
  for (auto [u, v] : edges) {
    nb[u].push_back(v);
    nb[v].push_back(u);
  }
  for (int u = 0; u < static_cast<int>(pts.size()); ++u) {
    auto angle = [&](int v) { return std::atan2(pts[v][1] - pts[u][1], pts[v][0] - pts[u][0]); };
    std::sort(nb[u].begin(), nb[u].end(), [&](int a, int b) { return angle(a) < angle(b); });
  }
  return map_from_rotation(nb);
}

SurfaceMap random_cage(std::mt19937_64& rng, int vertices, int edges) {
  if (vertices < 3 || edges < vertices || edges > vertices * (vertices - 1) / 2)
    throw Error(ErrorCode::InvalidParameter, "no simple cage with these counts");
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::set<std::pair<int, int>> es;
    std::vector<int> order(vertices);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    for (int i = 1; i < vertices; ++i) {
      const int j = std::uniform_int_distribution<int>(0, i - 1)(rng);
      es.insert(std::minmax(order[i], order[j]));
    }
    std::uniform_int_distribution<int> any(0, vertices - 1);
    while (static_cast<int>(es.size()) < edges) {
      const int u = any(rng), v = any(rng);
      if (u != v) es.insert(std::minmax(u, v));
    }
    std::vector<std::vector<int>> nb(vertices);
    for (auto [u, v] : es) {
      nb[u].push_back(v);
      nb[v].push_back(u);
    }
    for (auto& list : nb) std::shuffle(list.begin(), list.end(), rng);
    auto map = map_from_rotation(nb);
    if (validate_cage(map).ok()) return map;
  }
  throw Error(ErrorCode::InvalidParameter, "no valid cage found");
}

namespace {

struct Cut {
  Tangle tangle;
  bool ok = false;
};

// Boundary cycles of the region spanned by crossing set `in` of a diagram.
// Each cycle follows the face walks around one complementary component.
std::vector<std::vector<Dart>> boundary_cycles(const SurfaceMap& m, const std::vector<char>& in) {
  std::vector<std::vector<Dart>> cycles;
  std::set<Dart> used;
  for (Dart s = 0; s < m.num_darts(); ++s) {
    if (!in[m.vertex_of(s)] || in[m.vertex_of(m.alpha(s))] || used.count(s)) continue;
    std::vector<Dart> cycle;
    Dart cur = s;
    do {
      used.insert(cur);
      cycle.push_back(cur);
      Dart w = m.phi(cur);
      while (!in[m.vertex_of(m.alpha(w))]) w = m.phi(w);
      cur = m.alpha(w);
    } while (cur != s);
    cycles.push_back(cycle);
  }
  return cycles;
}

Tangle restrict_to(const LinkDiagram& d, const std::vector<char>& in,
                   const std::vector<std::vector<Dart>>& cycles) {
  const auto& m = d.map();
  std::vector<Dart> new_id(m.num_darts(), -1);
  Dart next = 0;
  // Keep darts in increasing order so crossing ids and slots carry over.
  for (Dart x = 0; x < m.num_darts(); ++x)
    if (in[m.vertex_of(x)]) new_id[x] = next++;
  Tangle t;
  t.sigma.resize(next);
  t.alpha.resize(next);
  for (Dart x = 0; x < m.num_darts(); ++x) {
    if (new_id[x] < 0) continue;
    t.sigma[new_id[x]] = new_id[m.sigma(x)];
    t.alpha[new_id[x]] = in[m.vertex_of(m.alpha(x))] ? new_id[m.alpha(x)] : -1;
  }
  for (int c = 0; c < d.num_crossings(); ++c)
    if (in[c]) t.over.push_back(d.over_flags()[c]);
  for (const auto& cyc : cycles) {
    std::vector<Dart> b;
    for (Dart s : cyc) b.push_back(new_id[s]);
    t.boundary.push_back(b);
  }
  return t;
}

bool connected_within(const SurfaceMap& m, const std::vector<char>& in) {
  int total = 0, start = -1;
  for (int v = 0; v < m.num_vertices(); ++v)
    if (in[v]) {
      ++total;
      if (start < 0) start = v;
    }
  if (start < 0) return false;
  std::vector<char> seen(m.num_vertices(), 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (Dart d : m.vertex_darts(v)) {
      const int w = m.vertex_of(m.alpha(d));
      if (in[w] && !seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == total;
}

std::vector<char> grow(std::mt19937_64& rng, const SurfaceMap& m, int target) {
  std::vector<char> in(m.num_vertices(), 0);
  const int seed = std::uniform_int_distribution<int>(0, m.num_vertices() - 1)(rng);
  in[seed] = 1;
  std::vector<int> frontier;
  auto push_neighbours = [&](int v) {
    for (Dart d : m.vertex_darts(v)) {
      const int w = m.vertex_of(m.alpha(d));
      if (!in[w]) frontier.push_back(w);
    }
  };
  push_neighbours(seed);
  int size = 1;
  while (size < target && !frontier.empty()) {
    const std::size_t i = std::uniform_int_distribution<std::size_t>(0, frontier.size() - 1)(rng);
    const int v = frontier[i];
    frontier.erase(frontier.begin() + static_cast<long>(i));
    if (in[v]) continue;
    in[v] = 1;
    ++size;
    push_neighbours(v);
  }
  return in;
}

bool tangle_ok(const Tangle& t) {
  try {
    validate_tangle(t);
    return true;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace

Tangle random_tangle(std::mt19937_64& rng, int min_endpoints, int max_endpoints) {
  if (min_endpoints > max_endpoints || max_endpoints < 8)
    throw Error(ErrorCode::InvalidParameter, "bad endpoint range");
  for (int attempt = 0; attempt < 100000; ++attempt) {
    const int verts = std::uniform_int_distribution<int>(6, 14)(rng);
    const auto base = random_planar_triangulation(rng, verts);
    const auto med = medial(base);
    const LinkDiagram d(med, alternating_assignment(med));
    const int target = std::uniform_int_distribution<int>(2, med.num_vertices() - 2)(rng);
    const auto in = grow(rng, med, target);
    const auto cycles = boundary_cycles(med, in);
    if (cycles.size() != 1) continue;
    const int ends = static_cast<int>(cycles[0].size());
    if (ends < min_endpoints || ends > max_endpoints) continue;
    auto t = restrict_to(d, in, cycles);
    if (tangle_ok(t)) return t;
  }
  throw Error(ErrorCode::InvalidParameter, "no tangle found in the endpoint range");
}

Tangle random_annular_tangle(std::mt19937_64& rng, int min_endpoints) {
  for (int attempt = 0; attempt < 100000; ++attempt) {
    const int verts = std::uniform_int_distribution<int>(12, 24)(rng);
    const auto base = random_planar_triangulation(rng, verts);
    const auto med = medial(base);
    const LinkDiagram d(med, alternating_assignment(med));
    const int target = std::uniform_int_distribution<int>(med.num_vertices() / 2,
                                                          med.num_vertices() - 4)(rng);
    auto in = grow(rng, med, target);
    // Punch a hole: a vertex-face's crossings, all of whose neighbours are in.
    std::vector<int> candidates;
    for (int v = 0; v < base.num_vertices(); ++v) {
      bool interior = true;
      for (Dart x : base.vertex_darts(v)) {
        const int c = med.vertex_of(medial_cw_stub(x));
        for (Dart y : med.vertex_darts(c)) interior &= in[med.vertex_of(med.alpha(y))] != 0;
      }
      if (interior) candidates.push_back(v);
    }
    if (candidates.empty()) continue;
    const int v = candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)];
    for (Dart x : base.vertex_darts(v)) in[med.vertex_of(medial_cw_stub(x))] = 0;
    if (!connected_within(med, in)) continue;
    auto cycles = boundary_cycles(med, in);
    if (cycles.size() != 2) continue;
    // The hole's cycle is the one meeting the removed crossings.
    auto touches_hole = [&](const std::vector<Dart>& cyc) {
      for (Dart s : cyc) {
        const int w = med.vertex_of(med.alpha(s));
        for (Dart x : base.vertex_darts(v))
          if (med.vertex_of(medial_cw_stub(x)) == w) return true;
      }
      return false;
    };
    // Both cycles already run clockwise in the plane.
    if (touches_hole(cycles[0])) std::swap(cycles[0], cycles[1]);
    if (static_cast<int>(cycles[0].size()) < min_endpoints ||
        static_cast<int>(cycles[1].size()) < min_endpoints)
      continue;
    auto t = restrict_to(d, in, cycles);
    if (tangle_ok(t)) return t;
  }
  throw Error(ErrorCode::InvalidParameter, "no annular tangle found");
}

}  // namespace altcert
