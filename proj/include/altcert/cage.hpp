#pragma once

#include <optional>
#include <string>
#include <vector>

#include "altcert/augment.hpp"

namespace altcert {

/// Cage graph rules: connected, no loops, no parallel edges, cellular, and
/// no disk-bounding circle meeting the graph once.
CheckItem validate_cage(const SurfaceMap& cage);

struct EdgeComponent {
  int edge = 0;
  int tail = 0, head = 0;            // cage vertices
  int tail_face = 0, head_face = 0;  // their vertex-faces in the medial
};

struct RubberBandLink {
  int vertex_components = 0;
  std::vector<EdgeComponent> edge_components;
};

/// Throws InvalidCage.
RubberBandLink rubber_band_link(const SurfaceMap& cage);

struct DerivedAugmented {
  AugmentedDiagram diagram;
  /// Set when the sphere 2-braid case needed a half twist turned into a
  /// full twist on one edge.
  std::optional<Json> patch;
};

/// Medial with the alternating assignment (vertex-faces black, or white if
/// `mirror`), plus one two-punctured augmentation per cage edge joining the
/// vertex-faces of its ends, in edge order. Throws InvalidCage.
DerivedAugmented derived_augmented(const SurfaceMap& cage, bool mirror = false);

/// Augmentation path for cage edge rep d: from the vertex-face of d's tail
/// across the two medial arcs on one side of the edge's crossing.
TransversePath edge_path(const SurfaceMap& cage, const SurfaceMap& medial_map, Dart d);

struct VolumeConstants {
  double v_oct;
  double v_tet;
};

inline constexpr VolumeConstants kPreciseConstants{3.66386237670887606, 1.01494160640965362};
/// The five-digit values printed alongside the bounds.
inline constexpr VolumeConstants kPrintedConstants{3.6638, 1.0149};

struct VolumeBounds {
  double lower = 0;
  bool lower_strict = false;
  double upper = 0;
  std::string bound_case;  // "chi=2", "chi=0" or "chi<0"
  int epsilon = 0;
  int chi = 0;
};

/// Throws InvalidCage.
VolumeBounds volume_bounds(const SurfaceMap& cage,
                           const VolumeConstants& constants = kPreciseConstants);
/// The formulas alone, for an edge count and Euler characteristic.
VolumeBounds volume_bounds_for(int epsilon, int chi,
                               const VolumeConstants& constants = kPreciseConstants);
Json to_json(const VolumeBounds& b);

}  // namespace altcert
