#include "altcert/augment.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <tuple>

namespace altcert {

std::pair<int, int> end_faces(const SurfaceMap& map, const TransversePath& path) {
  return {map.face_of(path.darts.front()), map.face_of(map.alpha(path.darts.back()))};
}

namespace {

CheckItem fail(std::string name, Json witness) {
  return CheckItem{std::move(name), Verdict::Fail, std::move(witness)};
}

Json rule(int index, const char* what) { return Json{{"augmentation", index}, {"rule", what}}; }

int edge_key(const SurfaceMap& m, Dart x, int rank) {
  return x == m.edge_rep(m.edge_of(x)) ? rank : -rank;
}

bool strictly_between(int a, int b, int x, int len) {
  const int db = (b - a + len) % len;
  const int dx = (x - a + len) % len;
  return dx > 0 && dx < db;
}

std::optional<Json> path_shape_error(const SurfaceMap& m, const Augmentation& aug, int index) {
  const auto& p = aug.path;
  if (p.darts.empty()) return rule(index, "empty_path");
  if (!p.ranks.empty() && p.ranks.size() != p.darts.size()) return rule(index, "rank_count");
  for (Dart d : p.darts)
    if (d < 0 || d >= m.num_darts()) return rule(index, "dart_out_of_range");
  for (std::size_t i = 0; i + 1 < p.darts.size(); ++i)
    if (m.face_of(m.alpha(p.darts[i])) != m.face_of(p.darts[i + 1]))
      return rule(index, "broken_path");
  std::set<int> edges;
  for (Dart d : p.darts)
    if (!edges.insert(m.edge_of(d)).second) return rule(index, "repeated_edge");
  return std::nullopt;
}

}  // namespace

CheckItem validate_augmentations(const AugmentedDiagram& augmented) {
  const std::string name = "augmentations_valid";
  const auto& m = augmented.base.map();
  std::set<std::pair<int, int>> adjacent;
  for (auto pr : face_adjacency(m)) adjacent.insert(pr);

  std::map<std::pair<int, int>, int> end_pairs;
  for (std::size_t i = 0; i < augmented.augs.size(); ++i) {
    const int idx = static_cast<int>(i);
    const auto& aug = augmented.augs[i];
    if (auto err = path_shape_error(m, aug, idx)) return fail(name, *err);
    auto [f1, f2] = end_faces(m, aug.path);
    if (f1 == f2) return fail(name, rule(idx, "same_end_face"));
    if (adjacent.count({std::min(f1, f2), std::max(f1, f2)}))
      return fail(name, rule(idx, "adjacent_end_faces"));
    if (aug.punctures() < 2) return fail(name, rule(idx, "too_few_punctures"));
    const auto pair = std::minmax(f1, f2);
    const auto [it, fresh] = end_pairs.emplace(std::pair{pair.first, pair.second}, idx);
    if (!fresh) {
      Json w = rule(idx, "duplicate_end_faces");
      w["other"] = it->second;
      return fail(name, w);
    }
  }

  // Points on edges: two paths may share an edge only at different ranks.
  std::map<std::pair<int, int>, int> point_owner;
  for (std::size_t i = 0; i < augmented.augs.size(); ++i) {
    const auto& p = augmented.augs[i].path;
    for (std::size_t j = 0; j < p.darts.size(); ++j) {
      const auto key = std::pair{m.edge_of(p.darts[j]), p.rank(j)};
      const auto [it, fresh] = point_owner.emplace(key, static_cast<int>(i));
      if (!fresh) {
        Json w = rule(static_cast<int>(i), "paths_meet_on_edge");
        w["other"] = it->second;
        return fail(name, w);
      }
    }
  }

  // Chords inside faces, with endpoints ordered around each face.
  struct Chord {
    int owner;
    std::tuple<int, int> a, b;  // (position in face, key along the side)
  };
  std::map<int, std::vector<Chord>> chords;
  std::map<int, std::set<std::tuple<int, int>>> points;
  for (std::size_t i = 0; i < augmented.augs.size(); ++i) {
    const auto& p = augmented.augs[i].path;
    for (std::size_t j = 0; j + 1 < p.darts.size(); ++j) {
      const Dart in = m.alpha(p.darts[j]);
      const Dart out = p.darts[j + 1];
      const int f = m.face_of(out);
      const std::tuple<int, int> a{m.position_in_face(in), edge_key(m, in, p.rank(j))};
      const std::tuple<int, int> b{m.position_in_face(out), edge_key(m, out, p.rank(j + 1))};
      chords[f].push_back({static_cast<int>(i), a, b});
      points[f].insert(a);
      points[f].insert(b);
    }
  }
  for (const auto& [f, list] : chords) {
    const auto& pts = points[f];
    auto order = [&](const std::tuple<int, int>& t) {
      return static_cast<int>(std::distance(pts.begin(), pts.find(t)));
    };
    const int len = static_cast<int>(pts.size());
    for (std::size_t x = 0; x < list.size(); ++x)
      for (std::size_t y = x + 1; y < list.size(); ++y) {
        const int a = order(list[x].a), b = order(list[x].b);
        const int c = order(list[y].a), d = order(list[y].b);
        if (strictly_between(a, b, c, len) == strictly_between(a, b, d, len)) continue;
        Json w = rule(list[y].owner, list[x].owner == list[y].owner ? "not_embedded"
                                                                     : "paths_intersect");
        w["other"] = list[x].owner;
        w["face"] = f;
        return fail(name, w);
      }
  }
  return CheckItem{name, Verdict::Pass, nullptr};
}

namespace {

bool connected(const SurfaceMap& m) {
  if (m.num_darts() == 0) return true;
  std::vector<char> seen(m.num_darts(), 0);
  std::deque<Dart> queue{0};
  seen[0] = 1;
  int count = 1;
  while (!queue.empty()) {
    const Dart d = queue.front();
    queue.pop_front();
    for (Dart e : {m.sigma(d), m.alpha(d)})
      if (!seen[e]) {
        seen[e] = 1;
        ++count;
        queue.push_back(e);
      }
  }
  return count == m.num_darts();
}

}  // namespace

HyperbolicityCertificate certify_hyperbolic(const AugmentedDiagram& augmented) {
  const auto& d = augmented.base;
  const auto& m = d.map();
  HyperbolicityCertificate cert;
  auto& out = cert.checks;

  out.push_back(connected(m) ? CheckItem{"connected", Verdict::Pass, nullptr}
                             : fail("connected", Json{{"reason", "projection graph is disconnected"}}));
  out.push_back(is_cellular_on(m)
                    ? CheckItem{"cellular", Verdict::Pass, nullptr}
                    : fail("cellular", Json{{"declared_genus", m.declared_genus()},
                                            {"derived_genus", m.derived_genus()}}));

  const bool alternating = is_alternating(d);
  if (alternating) {
    out.push_back({"alternating", Verdict::Pass, nullptr});
  } else {
    Json w;
    for (Dart x = 0; x < m.num_darts(); ++x)
      if (d.is_over(x) == d.is_over(m.alpha(x))) {
        w = Json{{"edge_darts", {x, m.alpha(x)}}};
        break;
      }
    out.push_back(fail("alternating", w));
  }

  const auto reduced = is_reduced(d);
  if (reduced.pass) {
    out.push_back({"reduced", Verdict::Pass, nullptr});
  } else {
    Json w{{"crossing", reduced.crossing}};
    if (reduced.curve) w["curve"] = curve_json(*reduced.curve);
    if (reduced.monogon_face >= 0) w["monogon_face"] = reduced.monogon_face;
    out.push_back(fail("reduced", w));
  }

  const auto prime = is_obviously_prime(d);
  if (prime.pass) {
    out.push_back({"obviously_prime", Verdict::Pass, nullptr});
  } else {
    out.push_back(fail("obviously_prime", Json{{"curve", curve_json(*prime.curve)},
                                               {"disk_piece", prime.disk_piece},
                                               {"disk_crossings", prime.disk_crossings}}));
  }

  if (!alternating) {
    out.push_back({"not_excluded_two_braid", Verdict::Skipped,
                   Json{{"note", "2-braid test needs an alternating diagram"}}});
  } else if (m.declared_genus() == 0 && is_two_braid(d)) {
    out.push_back(fail("not_excluded_two_braid",
                       Json{{"reason", "sphere and 2-braid"}, {"crossings", d.num_crossings()}}));
  } else {
    out.push_back({"not_excluded_two_braid", Verdict::Pass, nullptr});
  }

  out.push_back(validate_augmentations(augmented));
  out.push_back({"projective_plane_exceptions", Verdict::NotApplicable,
                 Json{{"note", "orientable projection surface"}}});
  cert.pass = overall(out);
  return cert;
}

Json to_json(const HyperbolicityCertificate& cert) {
  Json checks = Json::array();
  for (const auto& c : cert.checks) checks.push_back(to_json(c));
  return Json{{"verdict", cert.pass ? "PASS" : "FAIL"}, {"checks", checks}};
}

bool is_fully_augmented(const AugmentedDiagram& augmented) {
  return std::all_of(augmented.augs.begin(), augmented.augs.end(),
                     [](const Augmentation& a) { return a.punctures() == 2; });
}

TwistResult insert_half_twists(const AugmentedDiagram& augmented, int index, int k) {
  if (k == 0) throw Error(ErrorCode::InvalidParameter, "k must be nonzero");
  if (index < 0 || index >= static_cast<int>(augmented.augs.size()))
    throw Error(ErrorCode::InvalidParameter, "augmentation index out of range");
  const auto& path = augmented.augs[index].path;
  if (path.darts.size() != 2)
    throw Error(ErrorCode::NotTwoPunctured,
                "twist fill defined only for disks punctured exactly twice");

  const auto& base = augmented.base;
  const auto& m = base.map();
  const int n = std::abs(k);
  const int old_darts = m.num_darts();
  const Dart a = m.alpha(path.darts[0]);  // first punctured arc, seen from the middle face
  const Dart b = path.darts[1];           // second punctured arc, seen from the middle face
  if (m.face_of(a) != m.face_of(b))
    throw Error(ErrorCode::InvalidPath, "path darts do not share a middle face");
  const Dart aa = m.alpha(a), ab = m.alpha(b);

  // New crossing i has darts NE, NW, SW, SE counterclockwise.
  auto ne = [&](int i) { return old_darts + 4 * i; };
  auto nw = [&](int i) { return old_darts + 4 * i + 1; };
  auto sw = [&](int i) { return old_darts + 4 * i + 2; };
  auto se = [&](int i) { return old_darts + 4 * i + 3; };

  std::vector<Dart> sigma(m.sigma_array().begin(), m.sigma_array().end());
  std::vector<Dart> alpha(m.alpha_array().begin(), m.alpha_array().end());
  sigma.resize(old_darts + 4 * n);
  alpha.resize(old_darts + 4 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < 4; ++j) sigma[old_darts + 4 * i + j] = old_darts + 4 * i + (j + 1) % 4;
  auto link = [&](Dart x, Dart y) {
    alpha[x] = y;
    alpha[y] = x;
  };
  link(aa, nw(0));
  link(b, ne(0));
  link(a, sw(n - 1));
  link(ab, se(n - 1));
  for (int i = 0; i + 1 < n; ++i) {
    link(sw(i), nw(i + 1));
    link(se(i), ne(i + 1));
  }
  const auto map = SurfaceMap::build(sigma, alpha, m.declared_genus());

  // Points of other paths on the split edges move to the piece they lie on.
  const int t0 = path.rank(0), t1 = path.rank(1);
  auto along = [&](Dart from, int t) { return from == m.edge_rep(m.edge_of(from)) ? t : -t; };
  std::vector<Augmentation> augs;
  for (std::size_t i = 0; i < augmented.augs.size(); ++i) {
    if (static_cast<int>(i) == index) continue;
    Augmentation moved = augmented.augs[i];
    for (std::size_t j = 0; j < moved.path.darts.size(); ++j) {
      Dart& x = moved.path.darts[j];
      const int t = moved.path.rank(j);
      if (x == a || x == aa) {
        const bool near_a = along(a, t) < along(a, t0);
        if (near_a && x == aa) x = sw(n - 1);
        if (!near_a && x == a) x = nw(0);
      } else if (x == b || x == ab) {
        const bool near_b = along(b, t) < along(b, t1);
        if (near_b && x == ab) x = ne(0);
        if (!near_b && x == b) x = se(n - 1);
      }
    }
    augs.push_back(std::move(moved));
  }

  TwistResult result;
  result.handedness = k > 0 ? 1 : -1;
  const bool preferred = !base.is_over(a);
  std::optional<LinkDiagram> chosen;
  for (bool parity : {preferred, !preferred}) {
    auto over = base.over_flags();
    over.resize(map.num_vertices(), parity);
    LinkDiagram candidate(map, over);
    if (is_alternating(candidate)) {
      chosen = std::move(candidate);
      result.over_parity = parity;
      break;
    }
  }
  if (!chosen) {
    auto over = base.over_flags();
    over.resize(map.num_vertices(), preferred);
    chosen = LinkDiagram(map, over);
    result.over_parity = preferred;
    result.alternating_parity_found = false;
  }
  result.diagram = AugmentedDiagram{std::move(*chosen), std::move(augs)};
  result.validation = validate_augmentations(result.diagram);
  return result;
}

}  // namespace altcert
