#include "altcert/cage.hpp"

#include <map>
#include <set>

namespace altcert {

namespace {

CheckItem cage_fail(const char* what, Json witness) {
  witness["rule"] = what;
  return CheckItem{"cage", Verdict::Fail, std::move(witness)};
}

void require_cage(const SurfaceMap& cage) {
  const auto check = validate_cage(cage);
  if (!check.ok())
    throw Error(ErrorCode::InvalidCage, "not a cage graph: " + check.witness.dump());
}

}  // namespace

CheckItem validate_cage(const SurfaceMap& cage) {
  if (cage.num_darts() == 0) return cage_fail("no_edges", Json::object());
  std::map<std::pair<int, int>, int> seen;
  for (int e = 0; e < cage.num_edges(); ++e) {
    const Dart d = cage.edge_rep(e);
    const int u = cage.vertex_of(d), v = cage.vertex_of(cage.alpha(d));
    if (u == v) return cage_fail("loop", Json{{"edge", e}, {"vertex", u}});
    const auto [it, fresh] = seen.emplace(std::minmax(u, v), e);
    if (!fresh)
      return cage_fail("parallel_edges", Json{{"edges", {it->second, e}}, {"vertices", {u, v}}});
  }
  if (!is_cellular_on(cage))
    return cage_fail("not_cellular", Json{{"declared_genus", cage.declared_genus()},
                                          {"derived_genus", cage.derived_genus()}});
  if (auto c = one_intersection_circle_exists(cage))
    return cage_fail("one_intersection_circle", Json{{"curve", curve_json(*c)}});
  return CheckItem{"cage", Verdict::Pass, nullptr};
}

RubberBandLink rubber_band_link(const SurfaceMap& cage) {
  require_cage(cage);
  const auto med = medial(cage);
  RubberBandLink link;
  link.vertex_components = cage.num_vertices();
  for (int e = 0; e < cage.num_edges(); ++e) {
    const Dart d = cage.edge_rep(e);
    link.edge_components.push_back({e, cage.vertex_of(d), cage.vertex_of(cage.alpha(d)),
                                     med.face_of(medial_cw_stub(d)),
                                     med.face_of(medial_cw_stub(cage.alpha(d)))});
  }
  return link;
}

TransversePath edge_path(const SurfaceMap& cage, const SurfaceMap& med, Dart d) {
  const Dart ad = cage.alpha(d);
  const Dart near_first = medial_ccw_stub(d);    // stub of the edge's crossing on arc one
  const Dart near_second = medial_cw_stub(ad);   // and on arc two
  const Dart x1 = med.alpha(near_first);
  const Dart x2 = med.alpha(near_second);
  if (med.face_of(x1) != med.face_of(medial_cw_stub(d)) ||
      med.face_of(med.alpha(x1)) != med.face_of(x2) ||
      med.face_of(near_second) != med.face_of(medial_cw_stub(ad)))
    throw Error(ErrorCode::InvalidPath, "medial path for edge does not close up");
  // Both points sit next to the edge's own crossing.
  auto near = [&](Dart stub) { return stub < med.alpha(stub) ? -1 : 1; };
  return TransversePath{{x1, x2}, {near(near_first), near(near_second)}};
}

DerivedAugmented derived_augmented(const SurfaceMap& cage, bool mirror) {
  require_cage(cage);
  const auto med = medial(cage);
  LinkDiagram base(med, alternating_assignment(med, mirror));
  std::vector<Augmentation> augs;
  for (int e = 0; e < cage.num_edges(); ++e)
    augs.push_back(Augmentation{edge_path(cage, med, cage.edge_rep(e))});

  DerivedAugmented out;
  if (cage.declared_genus() != 0 || !is_two_braid(base)) {
    out.diagram = AugmentedDiagram{std::move(base), std::move(augs)};
    return out;
  }

  // The edge with the smallest id gets a second crossing next to its own.
  const Dart d = cage.edge_rep(0);
  const int before = base.num_crossings();
  auto twisted = insert_half_twists(AugmentedDiagram{base, augs}, 0, 1);
  const auto& m = twisted.diagram.base.map();
  // The new bigon sits between the edge's crossing and the new one; cross
  // its two sides to get from one vertex-face to the other.
  const Dart a = medial_ccw_stub(d), b_far = medial_cw_stub(cage.alpha(d));
  const Dart ta = m.alpha(a), tb = m.alpha(b_far);
  const int from = m.face_of(medial_cw_stub(d)), to = m.face_of(medial_cw_stub(cage.alpha(d)));
  std::optional<TransversePath> path;
  for (Dart y1 : {a, ta})
    for (Dart y2 : {b_far, tb})
      if (m.face_of(y1) == from && m.face_of(m.alpha(y1)) == m.face_of(y2) &&
          m.face_of(m.alpha(y2)) == to)
        path = TransversePath{{y1, y2}, {}};
  if (!path) throw Error(ErrorCode::InvalidPath, "no path through the patched twist");
  auto patched = std::move(twisted.diagram.augs);
  patched.insert(patched.begin(), Augmentation{*path});
  out.diagram = AugmentedDiagram{std::move(twisted.diagram.base), std::move(patched)};
  out.patch = Json{{"note", "replaced a half twist with a full twist"},
                   {"edge", 0},
                   {"crossings_before", before},
                   {"crossings_after", out.diagram.base.num_crossings()},
                   {"over_parity", twisted.over_parity}};
  return out;
}

VolumeBounds volume_bounds_for(int epsilon, int chi, const VolumeConstants& k) {
  VolumeBounds b;
  b.epsilon = epsilon;
  b.chi = chi;
  if (chi == 2) {
    b.bound_case = "chi=2";
    b.lower = 2.0 * (epsilon - 1) * k.v_oct;
    b.upper = 10.0 * (epsilon - 1) * k.v_tet;
  } else if (chi == 0) {
    b.bound_case = "chi=0";
    b.lower = 2.0 * epsilon * k.v_oct;
    b.upper = 10.0 * epsilon * k.v_tet;
  } else {
    b.bound_case = "chi<0";
    b.lower = k.v_oct / 2.0 * (epsilon - 3.0 * chi);
    b.lower_strict = true;
    b.upper = 6.0 * epsilon * k.v_oct;
  }
  return b;
}

VolumeBounds volume_bounds(const SurfaceMap& cage, const VolumeConstants& constants) {
  require_cage(cage);
  return volume_bounds_for(cage.num_edges(), cage.euler_characteristic(), constants);
}

Json to_json(const VolumeBounds& b) {
  return Json{{"case", b.bound_case}, {"epsilon", b.epsilon}, {"chi", b.chi},
              {"lower", b.lower},     {"lower_strict", b.lower_strict}, {"upper", b.upper}};
}

}  // namespace altcert
