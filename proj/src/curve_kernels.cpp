#include <algorithm>

#include "altcert/curves.hpp"

namespace altcert {

namespace {

// Curves whose first crossed dart is x; 1-curves are emitted once per edge.
void curves_from_dart(const SurfaceMap& map, Dart x1, int max_intersections,
                      std::vector<TransverseCurve>& out) {
  const Dart a1 = map.alpha(x1);
  if (max_intersections >= 1 && x1 < a1 && map.face_of(x1) == map.face_of(a1)) {
    const TransverseCurve c = curve_from_darts(map, {x1});
    if (validate_curve(map, c) == CurveValidity::Valid) out.push_back(canonical_curve(c));
  }
  if (max_intersections < 2) return;
  for (Dart x2 : map.face_walk(map.face_of(a1))) {
    if (map.edge_of(x2) == map.edge_of(x1)) continue;
    if (map.face_of(map.alpha(x2)) != map.face_of(x1)) continue;
    const TransverseCurve c = curve_from_darts(map, {x1, x2});
    if (validate_curve(map, c) == CurveValidity::Valid) out.push_back(canonical_curve(c));
  }
}

void finish(std::vector<TransverseCurve>& curves) {
  std::sort(curves.begin(), curves.end(),
            [](const auto& a, const auto& b) { return a.segments < b.segments; });
  curves.erase(std::unique(curves.begin(), curves.end(),
                           [](const auto& a, const auto& b) { return a.segments == b.segments; }),
               curves.end());
}

std::vector<TransverseCurve> trivial_loops(const SurfaceMap& map) {
  std::vector<TransverseCurve> out;
  for (int f = 0; f < map.num_faces(); ++f) out.push_back(trivial_loop(f));
  return out;
}

}  // namespace

std::vector<TransverseCurve> enumerate_curves_serial(const SurfaceMap& map,
                                                     int max_intersections) {
  std::vector<TransverseCurve> out = trivial_loops(map);
  for (Dart x = 0; x < map.num_darts(); ++x) curves_from_dart(map, x, max_intersections, out);
  finish(out);
  return out;
}

std::vector<TransverseCurve> enumerate_curves(const SurfaceMap& map, int max_intersections) {
  std::vector<TransverseCurve> out = trivial_loops(map);
  const int n = map.num_darts();
#pragma omp parallel
  {
    std::vector<TransverseCurve> local;
#pragma omp for schedule(dynamic, 64) nowait
    for (Dart x = 0; x < n; ++x) curves_from_dart(map, x, max_intersections, local);
#pragma omp critical
    out.insert(out.end(), std::make_move_iterator(local.begin()),
               std::make_move_iterator(local.end()));
  }
  finish(out);
  return out;
}

std::vector<CutResult> cut_all_serial(const SurfaceMap& map,
                                      const std::vector<TransverseCurve>& curves) {
  std::vector<CutResult> out;
  out.reserve(curves.size());
  for (const auto& c : curves) out.push_back(cut_along(map, c));
  return out;
}

std::vector<CutResult> cut_all(const SurfaceMap& map, const std::vector<TransverseCurve>& curves) {
  std::vector<CutResult> out(curves.size());
  const long n = static_cast<long>(curves.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (long i = 0; i < n; ++i) out[i] = cut_along(map, curves[i]);
  return out;
}

}  // namespace altcert
