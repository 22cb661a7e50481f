#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "altcert/surface_map.hpp"

namespace altcert {

enum class FaceColor : unsigned char { Black = 0, White = 1 };

/// A link diagram: a 4-valent surface map plus, per crossing, which pair of
/// opposite darts is the over-strand. `over_flags[c]` true means the darts at
/// slots {0,2} of crossing c pass over; slots count counterclockwise from the
/// crossing's minimum dart.
class LinkDiagram {
 public:
  LinkDiagram() = default;
  /// Throws NotFourValent or BadOverFlags.
  LinkDiagram(SurfaceMap map, std::vector<bool> over_flags);

  const SurfaceMap& map() const noexcept { return map_; }
  const std::vector<bool>& over_flags() const noexcept { return over_; }
  int num_crossings() const noexcept { return map_.num_vertices(); }
  int genus() const noexcept { return map_.declared_genus(); }

  int crossing_of(Dart d) const { return map_.vertex_of(d); }
  int slot(Dart d) const { return slot_[d]; }
  bool is_over(Dart d) const { return (slot_[d] % 2 == 0) == over_[crossing_of(d)]; }
  /// Continuation of the strand that arrives along the edge of d.
  Dart through(Dart d) const { return map_.sigma(map_.sigma(map_.alpha(d))); }
  Dart opposite(Dart d) const { return map_.sigma(map_.sigma(d)); }

  bool operator==(const LinkDiagram& other) const {
    return map_ == other.map_ && over_ == other.over_;
  }

 private:
  SurfaceMap map_;
  std::vector<bool> over_;
  std::vector<int> slot_;
};

/// One link component: the darts leaving each crossing it passes, in order of
/// travel from its minimum dart. Both orientations together cover
/// `passages` and their alpha images.
struct Strand {
  std::vector<Dart> passages;
};

std::vector<Strand> strands(const LinkDiagram& diagram);

/// Every edge joins an over-end to an under-end.
bool is_alternating(const LinkDiagram& diagram);

/// Colour per face index with adjacent faces opposite, the face of dart 0
/// black. Absent when some edge has the same face on both sides or the face
/// adjacency has an odd cycle.
std::optional<std::vector<FaceColor>> checkerboard_coloring(const SurfaceMap& map);
inline std::optional<std::vector<FaceColor>> checkerboard_coloring(const LinkDiagram& d) {
  return checkerboard_coloring(d.map());
}

/// Over flags for a checkerboard-colourable 4-valent map that make the
/// diagram alternating: the corner counterclockwise of every over dart is
/// black (white when `mirror`). Throws NotAlternating if no colouring exists.
std::vector<bool> alternating_assignment(const SurfaceMap& map, bool mirror = false);

/// Standard (2,n) torus-link diagram on the sphere: the Tait graph on black
/// faces is an n-cycle or an n-edge dipole, n >= 2. Throws NotAlternating.
bool is_two_braid(const LinkDiagram& diagram);

struct TwistRegionPartition {
  std::vector<int> region_of;  // per crossing, regions numbered by least crossing
  int count = 0;
};

/// Crossings joined by chains of bigon faces share a region.
TwistRegionPartition twist_regions(const LinkDiagram& diagram);

/// Planar-diagram text: a `PD genus=g` header, then one `X[a,b,c,d]` line per
/// crossing listing edge labels counterclockwise from an under dart. Labels
/// number edges 1.. in order of first appearance.
std::string export_pd(const LinkDiagram& diagram);
/// Inverse of export_pd up to dart relabelling. Throws ParseError.
LinkDiagram parse_pd(std::string_view text);
/// Relabels darts as parse_pd(export_pd(d)) does.
LinkDiagram canonical_relabel(const LinkDiagram& diagram);

}  // namespace altcert
