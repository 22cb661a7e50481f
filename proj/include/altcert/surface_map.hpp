#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "altcert/error.hpp"

namespace altcert {

using Dart = int;

/// A graph cellularly embedded in a closed orientable surface, stored as a
/// rotation system: `sigma` is the counterclockwise successor of a dart
/// around its vertex and `alpha` pairs the two ends of an edge.
///
/// Vertices, edges and faces are the orbits of sigma, alpha and
/// phi = sigma . alpha. Each is indexed 0..n-1 in increasing order of its
/// minimum dart, which is also the representative written to files. The face
/// of a dart lies on its right-hand side when walking away from its vertex.
///
/// The dartless map stands for a single vertex-free circle on the sphere:
/// no vertices or edges and two faces with empty walks.
class SurfaceMap {
 public:
  /// The dartless map.
  SurfaceMap() { face_walks_.assign(2, {}); }

  /// Validates and precomputes orbits. Throws Error with NotPermutation,
  /// NotInvolution, HasFixedPoint, NotConnected or GenusNegative.
  static SurfaceMap build(std::vector<Dart> sigma, std::vector<Dart> alpha,
                          int declared_genus);

  int num_darts() const noexcept { return static_cast<int>(sigma_.size()); }
  int num_vertices() const noexcept { return static_cast<int>(vertex_reps_.size()); }
  int num_edges() const noexcept { return num_darts() / 2; }
  int num_faces() const noexcept { return static_cast<int>(face_walks_.size()); }

  Dart sigma(Dart d) const { return sigma_[d]; }
  Dart sigma_inv(Dart d) const { return sigma_inv_[d]; }
  Dart alpha(Dart d) const { return alpha_[d]; }
  Dart phi(Dart d) const { return sigma_[alpha_[d]]; }

  std::span<const Dart> sigma_array() const noexcept { return sigma_; }
  std::span<const Dart> alpha_array() const noexcept { return alpha_; }

  int vertex_of(Dart d) const { return vertex_of_[d]; }
  int edge_of(Dart d) const { return edge_of_[d]; }
  int face_of(Dart d) const { return face_of_[d]; }
  /// Index of `d` in the walk of its face.
  int position_in_face(Dart d) const { return face_pos_[d]; }

  /// Darts around a vertex, counterclockwise from the minimum dart.
  const std::vector<Dart>& vertex_darts(int v) const { return vertex_darts_[v]; }
  /// Face boundary walk (a phi-orbit) starting from the minimum dart.
  const std::vector<Dart>& face_walk(int f) const { return face_walks_[f]; }
  const std::vector<std::vector<Dart>>& faces() const noexcept { return face_walks_; }
  Dart vertex_rep(int v) const { return vertex_reps_[v]; }
  Dart edge_rep(int e) const { return 2 * e < num_darts() ? edge_reps_[e] : -1; }
  Dart face_rep(int f) const;
  /// Face index from its representative dart, or -1.
  int face_from_rep(Dart rep) const;

  int declared_genus() const noexcept { return declared_genus_; }
  int derived_genus() const noexcept { return derived_genus_; }
  int euler_characteristic() const noexcept { return 2 - 2 * derived_genus_; }

  bool operator==(const SurfaceMap& other) const {
    return sigma_ == other.sigma_ && alpha_ == other.alpha_ &&
           declared_genus_ == other.declared_genus_;
  }

 private:
  std::vector<Dart> sigma_;
  std::vector<Dart> sigma_inv_;
  std::vector<Dart> alpha_;
  int declared_genus_ = 0;
  int derived_genus_ = 0;

  std::vector<int> vertex_of_;
  std::vector<int> edge_of_;
  std::vector<int> face_of_;
  std::vector<int> face_pos_;
  std::vector<std::vector<Dart>> vertex_darts_;
  std::vector<std::vector<Dart>> face_walks_;
  std::vector<Dart> vertex_reps_;
  std::vector<Dart> edge_reps_;
};

/// True iff the derived genus equals the declared genus; a rotation system is
/// always cellular on the surface of its derived genus.
bool is_cellular_on(const SurfaceMap& map);

/// One link per edge (ordered by edge index) joining the faces on its two
/// sides; a self-link when both sides belong to the same face.
std::vector<std::pair<int, int>> face_adjacency(const SurfaceMap& map);

/// Medial map: one 4-valent vertex per edge of `map`. Dart 2d is the stub of
/// the crossing on edge(d) that leaves toward the clockwise corner at the
/// vertex of d, dart 2d+1 the one toward the counterclockwise corner, so the
/// face of dart 2d is the vertex-face of vertex_of(d).
SurfaceMap medial(const SurfaceMap& map);

constexpr Dart medial_cw_stub(Dart d) { return 2 * d; }
constexpr Dart medial_ccw_stub(Dart d) { return 2 * d + 1; }

}  // namespace altcert
