#include "altcert/curves.hpp"

#include <algorithm>
#include <boost/pending/disjoint_sets.hpp>
#include <deque>
#include <map>
#include <string>

namespace altcert {

std::string_view to_string(CurveValidity v) {
  switch (v) {
    case CurveValidity::Valid: return "Valid";
    case CurveValidity::OutOfRange: return "OutOfRange";
    case CurveValidity::BrokenChain: return "BrokenChain";
    case CurveValidity::RepeatedCorner: return "RepeatedCorner";
    case CurveValidity::InterleavedSegments: return "InterleavedSegments";
  }
  return "Unknown";
}

TransverseCurve trivial_loop(int face) { return TransverseCurve{{Segment{face, -1, -1}}}; }

TransverseCurve curve_from_darts(const SurfaceMap& map, const std::vector<Dart>& darts) {
  TransverseCurve c;
  const std::size_t k = darts.size();
  for (std::size_t i = 0; i < k; ++i) {
    const Dart x = darts[i];
    const Dart prev = map.alpha(darts[(i + k - 1) % k]);
    if (map.face_of(prev) != map.face_of(x))
      throw Error(ErrorCode::InvalidCurve, "darts " + std::to_string(darts[(i + k - 1) % k]) +
                                               " and " + std::to_string(x) +
                                               " do not bound a common face");
    c.segments.push_back({map.face_of(x), map.position_in_face(prev), map.position_in_face(x)});
  }
  return c;
}

std::vector<Dart> crossed_darts(const SurfaceMap& map, const TransverseCurve& curve) {
  std::vector<Dart> out;
  if (curve.intersections() == 0) return out;
  for (const auto& s : curve.segments) out.push_back(map.face_walk(s.face)[s.exit]);
  return out;
}

namespace {

// x lies strictly inside the cyclic interval running forward from a to b.
bool strictly_between(int a, int b, int x, int len) {
  const int db = (b - a + len) % len;
  const int dx = (x - a + len) % len;
  return dx > 0 && dx < db;
}

bool chords_interleave(int a, int b, int c, int d, int len) {
  return strictly_between(a, b, c, len) != strictly_between(a, b, d, len);
}

}  // namespace

CurveValidity validate_curve(const SurfaceMap& map, const TransverseCurve& curve) {
  const auto& segs = curve.segments;
  if (segs.empty()) return CurveValidity::OutOfRange;
  for (const auto& s : segs)
    if (s.face < 0 || s.face >= map.num_faces()) return CurveValidity::OutOfRange;
  if (segs.size() == 1 && segs[0].entry == -1 && segs[0].exit == -1)
    return CurveValidity::Valid;

  for (const auto& s : segs) {
    const int len = static_cast<int>(map.face_walk(s.face).size());
    if (s.entry < 0 || s.entry >= len || s.exit < 0 || s.exit >= len)
      return CurveValidity::OutOfRange;
    if (s.entry == s.exit) return CurveValidity::RepeatedCorner;
  }
  const std::size_t k = segs.size();
  for (std::size_t i = 0; i < k; ++i) {
    const Dart out = map.face_walk(segs[i].face)[segs[i].exit];
    const auto& next = segs[(i + 1) % k];
    if (map.face_walk(next.face)[next.entry] != map.alpha(out)) return CurveValidity::BrokenChain;
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (segs[i].face != segs[j].face) continue;
      const int a = segs[i].entry, b = segs[i].exit, c = segs[j].entry, d = segs[j].exit;
      if (a == c || a == d || b == c || b == d) return CurveValidity::RepeatedCorner;
      const int len = static_cast<int>(map.face_walk(segs[i].face).size());
      if (chords_interleave(a, b, c, d, len)) return CurveValidity::InterleavedSegments;
    }
  }
  return CurveValidity::Valid;
}

CutResult cut_along(const SurfaceMap& map, const TransverseCurve& curve) {
  const CurveValidity validity = validate_curve(map, curve);
  if (validity != CurveValidity::Valid)
    throw Error(ErrorCode::InvalidCurve, std::string(to_string(validity)));

  CutResult result;
  result.separating = true;
  if (curve.intersections() == 0) {
    // A loop inside a disk face cuts off an empty disk.
    CutPiece disk{1, 1, {}};
    CutPiece rest{map.euler_characteristic() - 1, 1, {}};
    for (int v = 0; v < map.num_vertices(); ++v) rest.crossings.push_back(v);
    result.pieces = {disk, rest};
    return result;
  }

  // Each edge side (dart) is one boundary element of its face, or two when
  // the curve crosses it: the half before the point and the half after it.
  const int n = map.num_darts();
  std::vector<char> has_point(n, 0);
  for (const auto& s : curve.segments) {
    has_point[map.face_walk(s.face)[s.entry]] = 1;
    has_point[map.face_walk(s.face)[s.exit]] = 1;
  }
  std::vector<int> first(n), last(n);
  int elements = 0;
  for (Dart d = 0; d < n; ++d) {
    first[d] = elements++;
    last[d] = has_point[d] ? elements++ : first[d];
  }

  boost::disjoint_sets_with_storage<> subface(elements), piece(elements);
  auto join_both = [&](int a, int b) {
    subface.union_set(a, b);
    piece.union_set(a, b);
  };
  for (Dart d = 0; d < n; ++d) join_both(last[d], first[map.phi(d)]);
  for (const auto& s : curve.segments) {
    const Dart a = map.face_walk(s.face)[s.entry];
    const Dart b = map.face_walk(s.face)[s.exit];
    join_both(last[a], first[b]);
    join_both(last[b], first[a]);
  }
  for (Dart d = 0; d < n; ++d) {
    const Dart e = map.alpha(d);
    if (d > e) continue;
    if (has_point[d]) {
      // The half of d before the point is the half of alpha(d) after it.
      piece.union_set(first[d], last[e]);
      piece.union_set(last[d], first[e]);
    } else {
      piece.union_set(first[d], first[e]);
    }
  }

  const Dart entry0 = map.face_walk(curve.segments[0].face)[curve.segments[0].entry];
  const int side_a = piece.find_set(last[entry0]);
  const int side_b = piece.find_set(first[entry0]);
  std::map<int, int> index{{side_a, 0}};
  index.emplace(side_b, static_cast<int>(index.size()));
  result.separating = side_a != side_b;
  result.pieces.assign(index.size(), CutPiece{});
  auto piece_of = [&](int element) -> CutPiece& {
    const auto it = index.find(piece.find_set(element));
    if (it == index.end())
      throw Error(ErrorCode::InvalidCurve, "cut produced a piece away from the curve");
    return result.pieces[it->second];
  };

  for (int v = 0; v < map.num_vertices(); ++v) {
    auto& p = piece_of(first[map.vertex_rep(v)]);
    p.euler_char += 1;
    p.crossings.push_back(v);
  }
  for (Dart d = 0; d < n; ++d) {
    if (d > map.alpha(d)) continue;
    piece_of(first[d]).euler_char -= 1;
    if (has_point[d]) {
      piece_of(last[d]).euler_char -= 1;
      // The two copies of the point.
      piece_of(first[d]).euler_char += 1;
      piece_of(last[d]).euler_char += 1;
    }
  }
  for (const auto& s : curve.segments) {
    const Dart a = map.face_walk(s.face)[s.entry];
    piece_of(last[a]).euler_char -= 1;
    piece_of(first[a]).euler_char -= 1;
    if (piece.find_set(last[a]) != side_a || piece.find_set(first[a]) != side_b)
      throw Error(ErrorCode::InvalidCurve, "curve copies do not stay on one side");
  }
  std::map<int, int> subface_root;
  for (int e = 0; e < elements; ++e) {
    const int root = subface.find_set(e);
    if (subface_root.emplace(root, e).second) piece_of(e).euler_char += 1;
  }
  if (result.separating) {
    result.pieces[0].boundary_circles = 1;
    result.pieces[1].boundary_circles = 1;
  } else {
    result.pieces[0].boundary_circles = 2;
  }
  return result;
}

std::optional<int> disk_piece(const CutResult& cut) {
  if (!cut.separating) return std::nullopt;
  for (std::size_t i = 0; i < cut.pieces.size(); ++i)
    if (cut.pieces[i].euler_char == 1 && cut.pieces[i].boundary_circles == 1)
      return static_cast<int>(i);
  return std::nullopt;
}

std::optional<int> bounds_disk(const SurfaceMap& map, const TransverseCurve& curve) {
  return disk_piece(cut_along(map, curve));
}

TransverseCurve canonical_curve(const TransverseCurve& curve) {
  const auto& segs = curve.segments;
  const std::size_t k = segs.size();
  std::vector<Segment> reversed(segs.rbegin(), segs.rend());
  for (auto& s : reversed) std::swap(s.entry, s.exit);
  std::vector<Segment> best = segs;
  for (const std::vector<Segment>* base : {&segs, static_cast<const std::vector<Segment>*>(&reversed)})
    for (std::size_t r = 0; r < k; ++r) {
      std::vector<Segment> rot(k);
      for (std::size_t i = 0; i < k; ++i) rot[i] = (*base)[(i + r) % k];
      if (rot < best) best = std::move(rot);
    }
  return TransverseCurve{std::move(best)};
}

std::vector<std::uint8_t> z2_class(const SurfaceMap& map, const TransverseCurve& curve) {
  if (validate_curve(map, curve) != CurveValidity::Valid)
    throw Error(ErrorCode::InvalidCurve, "z2_class needs a valid curve");
  std::vector<char> crossed(map.num_edges(), 0);
  for (Dart x : crossed_darts(map, curve)) crossed[map.edge_of(x)] ^= 1;

  const int nv = map.num_vertices();
  std::vector<int> potential(nv, -1);
  std::vector<char> tree_edge(map.num_edges(), 0);
  if (nv > 0) {
    std::deque<int> queue{0};
    potential[0] = 0;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (Dart d : map.vertex_darts(v)) {
        const int w = map.vertex_of(map.alpha(d));
        if (potential[w] >= 0) continue;
        potential[w] = potential[v] ^ crossed[map.edge_of(d)];
        tree_edge[map.edge_of(d)] = 1;
        queue.push_back(w);
      }
    }
  }
  std::vector<std::uint8_t> parities;
  for (int e = 0; e < map.num_edges(); ++e) {
    if (tree_edge[e]) continue;
    const Dart d = map.edge_rep(e);
    parities.push_back(static_cast<std::uint8_t>(crossed[e] ^ potential[map.vertex_of(d)] ^
                                                 potential[map.vertex_of(map.alpha(d))]));
  }
  return parities;
}

ReducedResult is_reduced(const LinkDiagram& diagram) {
  const auto& m = diagram.map();
  // Unordered edge pairs that are adjacent at some crossing.
  std::map<std::pair<int, int>, std::vector<int>> adjacent_at;
  for (int c = 0; c < diagram.num_crossings(); ++c)
    for (Dart u : m.vertex_darts(c)) {
      int a = m.edge_of(u), b = m.edge_of(m.sigma(u));
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      auto& list = adjacent_at[{a, b}];
      if (std::find(list.begin(), list.end(), c) == list.end()) list.push_back(c);
    }

  auto curves = enumerate_curves(m, 2);
  std::erase_if(curves, [](const TransverseCurve& c) { return c.intersections() != 2; });
  const auto cuts = cut_all(m, curves);
  for (std::size_t i = 0; i < curves.size(); ++i) {
    const auto& cut = cuts[i];
    if (!cut.separating) continue;
    const auto darts = crossed_darts(m, curves[i]);
    int a = m.edge_of(darts[0]), b = m.edge_of(darts[1]);
    if (a > b) std::swap(a, b);
    const auto it = adjacent_at.find({a, b});
    if (it == adjacent_at.end()) continue;
    for (int c : it->second) {
      for (int side = 0; side < 2; ++side) {
        const auto& near = cut.pieces[side];
        const auto& far = cut.pieces[1 - side];
        const bool contains_c =
            std::find(near.crossings.begin(), near.crossings.end(), c) != near.crossings.end();
        if (contains_c && far.euler_char == 1 && far.boundary_circles == 1)
          return ReducedResult{false, c, curves[i], -1};
      }
    }
  }
  for (int f = 0; f < m.num_faces(); ++f)
    if (m.face_walk(f).size() == 1)
      return ReducedResult{false, diagram.crossing_of(m.face_walk(f)[0]), std::nullopt, f};
  return ReducedResult{};
}

PrimeResult is_obviously_prime(const LinkDiagram& diagram) {
  const auto& m = diagram.map();
  auto curves = enumerate_curves(m, 2);
  std::erase_if(curves, [](const TransverseCurve& c) { return c.intersections() != 2; });
  const auto cuts = cut_all(m, curves);
  const bool sphere = m.derived_genus() == 0;
  for (std::size_t i = 0; i < curves.size(); ++i) {
    const auto& cut = cuts[i];
    if (!cut.separating) continue;
    for (int side = 0; side < 2; ++side) {
      const auto& p = cut.pieces[side];
      if (p.euler_char != 1 || p.boundary_circles != 1 || p.crossings.empty()) continue;
      if (sphere && cut.pieces[1 - side].crossings.empty()) continue;
      return PrimeResult{false, curves[i], side, p.crossings};
    }
  }
  return PrimeResult{};
}

std::optional<TransverseCurve> one_intersection_circle_exists(const SurfaceMap& graph) {
  for (const auto& c : enumerate_curves(graph, 1)) {
    if (c.intersections() != 1) continue;
    if (disk_piece(cut_along(graph, c))) return c;
  }
  return std::nullopt;
}

}  // namespace altcert
