#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "altcert/diagram.hpp"
#include "altcert/surface_map.hpp"

namespace altcert {

/// Part of a transverse curve or path inside one face: it enters through the
/// edge side at walk position `entry` and leaves through `exit`. Position -1
/// marks a free end of a path, or both ends of a curve that meets nothing.
struct Segment {
  int face = 0;
  int entry = -1;
  int exit = -1;

  auto operator<=>(const Segment&) const = default;
};

/// A simple closed curve transverse to the map, as a cyclic list of segments.
/// Leaving segment i through edge side x means entering segment i+1 through
/// alpha(x). A curve meeting the map nowhere is one segment with -1 ends.
struct TransverseCurve {
  std::vector<Segment> segments;

  int intersections() const {
    return segments.size() == 1 && segments[0].exit < 0 ? 0 : static_cast<int>(segments.size());
  }
  auto operator<=>(const TransverseCurve&) const = default;
};

/// The curve that leaves face(x_i) across the edge of x_i, for cyclic darts x.
TransverseCurve curve_from_darts(const SurfaceMap& map, const std::vector<Dart>& darts);
TransverseCurve trivial_loop(int face);
/// Darts the curve crosses, in order; empty for a trivial loop.
std::vector<Dart> crossed_darts(const SurfaceMap& map, const TransverseCurve& curve);

enum class CurveValidity {
  Valid,
  OutOfRange,
  BrokenChain,          // consecutive segments do not share the crossed edge
  RepeatedCorner,       // an edge side is used twice in one face
  InterleavedSegments,  // two chords in one face cross
};

std::string_view to_string(CurveValidity v);

CurveValidity validate_curve(const SurfaceMap& map, const TransverseCurve& curve);

struct CutPiece {
  int euler_char = 0;
  int boundary_circles = 0;
  std::vector<int> crossings;  // vertex indices inside the piece
};

/// Pieces of the surface cut along a curve. Piece 0 lies on the side of the
/// first segment's entry continuation; a separating cut has exactly two.
struct CutResult {
  std::vector<CutPiece> pieces;
  bool separating = false;
};

/// Combinatorial surgery along a validated curve. Throws InvalidCurve.
CutResult cut_along(const SurfaceMap& map, const TransverseCurve& curve);

/// Index of a piece with one boundary circle and Euler characteristic 1, if
/// the cut separates. On the sphere both pieces qualify; the first is given.
std::optional<int> bounds_disk(const SurfaceMap& map, const TransverseCurve& curve);
std::optional<int> disk_piece(const CutResult& cut);

/// Rotation/reflection-minimal form of a valid curve.
TransverseCurve canonical_curve(const TransverseCurve& curve);

/// All embedded curves meeting the map in at most `max_intersections`
/// (0, 1 or 2) points on distinct edges, canonical and sorted. The parallel
/// and serial versions return identical lists.
std::vector<TransverseCurve> enumerate_curves(const SurfaceMap& map, int max_intersections);
std::vector<TransverseCurve> enumerate_curves_serial(const SurfaceMap& map,
                                                     int max_intersections);

/// cut_along for every curve, in parallel; results are in input order.
std::vector<CutResult> cut_all(const SurfaceMap& map, const std::vector<TransverseCurve>& curves);
std::vector<CutResult> cut_all_serial(const SurfaceMap& map,
                                      const std::vector<TransverseCurve>& curves);

/// Intersection parities of the curve with the fundamental cycles of a BFS
/// spanning tree (one per non-tree edge, in edge order). Zero iff the curve
/// separates.
std::vector<std::uint8_t> z2_class(const SurfaceMap& map, const TransverseCurve& curve);

struct ReducedResult {
  bool pass = true;
  /// Crossing that a disk configuration makes removable.
  int crossing = -1;
  /// Curve meeting two arcs that are adjacent at `crossing`, with the far
  /// side a disk; absent when a monogon face is the witness.
  std::optional<TransverseCurve> curve;
  int monogon_face = -1;
};

/// Fails iff some crossing c has adjacent darts whose edges are met by a
/// two-point curve whose side away from c is a disk, or c bounds a monogon.
ReducedResult is_reduced(const LinkDiagram& diagram);

struct PrimeResult {
  bool pass = true;
  std::optional<TransverseCurve> curve;
  int disk_piece = -1;
  std::vector<int> disk_crossings;
};

/// Fails iff a two-point curve bounds a disk containing a crossing. On the
/// sphere both sides are disks, so both must contain crossings.
PrimeResult is_obviously_prime(const LinkDiagram& diagram);

/// A disk-bounding curve meeting the graph once, if any.
std::optional<TransverseCurve> one_intersection_circle_exists(const SurfaceMap& graph);

}  // namespace altcert
