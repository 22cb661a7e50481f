#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "altcert/surface_map.hpp"
#include "fixtures.hpp"
#include "random_maps.hpp"

using namespace altcert;
namespace fx = altcert::fixtures;

namespace {

SurfaceMap single_loop() { return SurfaceMap::build({1, 0}, {1, 0}, 0); }

ErrorCode build_error(std::vector<Dart> sigma, std::vector<Dart> alpha, int genus = 0) {
  try {
    SurfaceMap::build(std::move(sigma), std::move(alpha), genus);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected build to throw");
  return ErrorCode::ParseError;
}

std::vector<SurfaceMap> sample_maps() {
  std::vector<SurfaceMap> maps{fx::theta_graph(), fx::torus_bouquet(), fx::nested_bouquet(),
                               fx::cycle_graph(4), fx::torus_grid(3, 3), fx::k4(),
                               fx::cube(),         fx::genus2_cage(),    fx::genus2_cage_b(),
                               single_loop()};
  std::mt19937_64 rng(7);
  for (int i = 0; i < 40; ++i) maps.push_back(fx::random_map(rng, 2 + 2 * (i % 9)));
  return maps;
}

}  // namespace

TEST_CASE("build_map counts and derived genus") {
  auto theta = fx::theta_graph();
  CHECK(theta.num_vertices() == 2);
  CHECK(theta.num_edges() == 3);
  CHECK(theta.num_faces() == 3);
  CHECK(theta.derived_genus() == 0);

  auto bouquet = fx::torus_bouquet();
  CHECK(bouquet.num_vertices() == 1);
  CHECK(bouquet.num_edges() == 2);
  CHECK(bouquet.num_faces() == 1);
  CHECK(bouquet.derived_genus() == 1);

  auto nested = fx::nested_bouquet();
  CHECK(nested.num_faces() == 3);
  CHECK(nested.derived_genus() == 0);
}

TEST_CASE("build_map rejects malformed input") {
  CHECK(build_error({1, 2, 0}, {1, 2, 0}) == ErrorCode::NotInvolution);
  CHECK(build_error({1, 0}, {0, 1}) == ErrorCode::HasFixedPoint);
  CHECK(build_error({1, 0, 3, 2}, {1, 0, 3, 2}) == ErrorCode::NotConnected);
  CHECK(build_error({1, 0}, {1, 0}, -1) == ErrorCode::GenusNegative);
  CHECK(build_error({1, 1}, {1, 0}) == ErrorCode::NotPermutation);
  CHECK(build_error({1, 0}, {1, 5}) == ErrorCode::NotPermutation);
  CHECK(build_error({1, 0}, {1}) == ErrorCode::NotPermutation);
}

TEST_CASE("is_cellular_on compares derived and declared genus") {
  CHECK(is_cellular_on(fx::theta_graph()));
  auto theta1 = SurfaceMap::build({1, 2, 0, 4, 5, 3}, {3, 5, 4, 0, 2, 1}, 1);
  CHECK_FALSE(is_cellular_on(theta1));
  CHECK(is_cellular_on(fx::torus_bouquet()));
}

TEST_CASE("faces and face adjacency") {
  auto theta = fx::theta_graph();
  for (const auto& walk : theta.faces()) CHECK(walk.size() == 2);
  std::multiset<std::pair<int, int>> links;
  for (auto l : face_adjacency(theta)) links.insert(l);
  CHECK(links == std::multiset<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});

  auto loop = single_loop();
  CHECK(loop.num_faces() == 2);
  CHECK(face_adjacency(loop) == std::vector<std::pair<int, int>>{{0, 1}});

  auto bouquet = fx::torus_bouquet();
  CHECK(bouquet.face_walk(0).size() == 4);
  CHECK(face_adjacency(bouquet) == std::vector<std::pair<int, int>>{{0, 0}, {0, 0}});
}

TEST_CASE("face walks start at the minimum dart and follow phi") {
  for (const auto& m : sample_maps()) {
    for (int f = 0; f < m.num_faces(); ++f) {
      const auto& walk = m.face_walk(f);
      CHECK(walk.front() == *std::min_element(walk.begin(), walk.end()));
      CHECK(m.face_from_rep(walk.front()) == f);
      for (std::size_t i = 0; i < walk.size(); ++i) {
        CHECK(m.phi(walk[i]) == walk[(i + 1) % walk.size()]);
        CHECK(m.position_in_face(walk[i]) == static_cast<int>(i));
      }
    }
    CHECK(m.num_vertices() - m.num_edges() + m.num_faces() == 2 - 2 * m.derived_genus());
  }
}

TEST_CASE("medial examples") {
  auto a = medial(fx::theta_graph());
  CHECK(a.num_vertices() == 3);
  CHECK(a.num_edges() == 6);
  CHECK(a.num_faces() == 5);
  CHECK(a.derived_genus() == 0);

  auto b = medial(fx::cycle_graph(4));
  CHECK(b.num_vertices() == 4);
  CHECK(b.num_edges() == 8);
  CHECK(b.num_faces() == 6);

  auto c = medial(fx::torus_grid(3, 3));
  CHECK(c.num_vertices() == 18);
  CHECK(c.num_edges() == 36);
  CHECK(c.num_faces() == 18);
  CHECK(c.derived_genus() == 1);
}

TEST_CASE("medial counts, genus and vertex-face structure on sample maps") {
  for (const auto& m : sample_maps()) {
    auto med = medial(m);
    CHECK(med.num_vertices() == m.num_edges());
    CHECK(med.num_edges() == 2 * m.num_edges());
    CHECK(med.num_faces() == m.num_vertices() + m.num_faces());
    CHECK(med.derived_genus() == m.derived_genus());
    for (int v = 0; v < med.num_vertices(); ++v) CHECK(med.vertex_darts(v).size() == 4);

    // Vertex-faces: the faces of the clockwise stubs, one per input vertex.
    std::vector<int> vertex_face(m.num_vertices(), -1);
    for (Dart d = 0; d < m.num_darts(); ++d) {
      const int f = med.face_of(medial_cw_stub(d));
      int& slot = vertex_face[m.vertex_of(d)];
      if (slot < 0) slot = f;
      CHECK(slot == f);
    }
    std::set<int> vf(vertex_face.begin(), vertex_face.end());
    CHECK(static_cast<int>(vf.size()) == m.num_vertices());
    for (auto [x, y] : face_adjacency(med)) CHECK(vf.count(x) + vf.count(y) == 1);
  }
}

TEST_CASE("re-deriving is deterministic") {
  auto m = fx::genus2_cage();
  auto again = SurfaceMap::build({m.sigma_array().begin(), m.sigma_array().end()},
                                 {m.alpha_array().begin(), m.alpha_array().end()}, 2);
  CHECK(again.faces() == m.faces());
  for (Dart d = 0; d < m.num_darts(); ++d) {
    CHECK(again.face_of(d) == m.face_of(d));
    CHECK(again.vertex_of(d) == m.vertex_of(d));
    CHECK(again.edge_of(d) == m.edge_of(d));
  }
}

TEST_CASE("dartless map") {
  SurfaceMap empty;
  CHECK(empty.num_faces() == 2);
  CHECK(empty.derived_genus() == 0);
  CHECK(SurfaceMap::build({}, {}, 0).num_faces() == 2);
}
