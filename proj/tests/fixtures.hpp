#pragma once

#include <utility>
#include <vector>

#include "altcert/diagram.hpp"
#include "altcert/surface_map.hpp"

namespace altcert::fixtures {

SurfaceMap theta_graph();
SurfaceMap torus_bouquet();
SurfaceMap nested_bouquet();
/// Planar n-cycle; n = 2 gives a digon with parallel edges.
SurfaceMap cycle_graph(int n);
/// n x m grid on the torus, vertex (i,j) darts right, up, left, down.
SurfaceMap torus_grid(int n, int m);
/// Path on k vertices drawn in the plane.
SurfaceMap path_graph(int k);
SurfaceMap k4();
SurfaceMap cube();
SurfaceMap octahedron();
SurfaceMap triangular_prism();
SurfaceMap wheel(int spokes);
/// One-face genus-2 embedding of a bridgeless simple graph with 8 edges.
SurfaceMap genus2_cage();
/// A second genus-2 cage with more faces.
SurfaceMap genus2_cage_b();

/// Simple graph from ccw neighbour lists.
SurfaceMap map_from_rotation(const std::vector<std::vector<int>>& ccw_neighbours, int genus);
/// Planar straight-line drawing; rotation by angle.
SurfaceMap planar_drawing(const std::vector<std::pair<double, double>>& points,
                          const std::vector<std::pair<int, int>>& edges);

LinkDiagram hopf();
LinkDiagram trefoil();
LinkDiagram figure_eight();
LinkDiagram knot_6_2();
/// Standard (2,n) diagram, alternating, as the medial of the planar n-cycle.
LinkDiagram two_braid(int n);
/// Alternating medial of a map with the default colouring convention.
LinkDiagram alternating_medial(const SurfaceMap& map);
/// Cut edge(d1) of a and edge(d2) of b and reconnect them.
LinkDiagram connected_sum(const LinkDiagram& a, Dart d1, const LinkDiagram& b);
LinkDiagram trefoil_sum();
/// Adds a Reidemeister-I kink on edge(d); the new crossing is the last one.
LinkDiagram add_kink(const LinkDiagram& diagram, Dart d);
LinkDiagram kinked_trefoil();
/// One crossing on the torus whose single face meets itself across an edge.
LinkDiagram torus_one_crossing();

}  // namespace altcert::fixtures
