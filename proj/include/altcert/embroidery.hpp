#pragma once

#include <vector>

#include "altcert/augment.hpp"

namespace altcert {

/// Alternating tangle in a disk or annulus. Crossings are the sigma cycles
/// (ids ordered by smallest dart, as in SurfaceMap); alpha is -1 on the
/// endpoint stubs. Each boundary lists its stubs clockwise.
struct Tangle {
  std::vector<Dart> sigma;
  std::vector<Dart> alpha;
  std::vector<bool> over;
  std::vector<std::vector<Dart>> boundary;
};

/// Invariant check; throws InvalidTangle, TooFewEndpoints or
/// EndpointParityViolation.
void validate_tangle(const Tangle& tangle);

struct Embroidery {
  LinkDiagram diagram;
  /// Per boundary, per arc: ids of the new crossings in order along the arc.
  std::vector<std::vector<std::vector<int>>> arcs;
  int first_new_crossing = 0;
};

/// Closes a disk tangle with n arcs outside the disk, arc i joining
/// endpoints i and n+i. Throws TooFewEndpoints, EndpointParityViolation,
/// ParityUnsolvable or InvalidTangle.
Embroidery embroider_disk(const Tangle& tangle);

struct AnnulusEmbroidery {
  AugmentedDiagram augmented;
  std::vector<std::vector<std::vector<int>>> arcs;  // outer, inner
  int inner_face = 0;                               // innermost region
  int outer_face = 0;
};

/// Embroiders boundary 0 (outer) outside and boundary 1 (inner) inside the
/// hole, then adds a core augmentation from the innermost region to the
/// outer face.
AnnulusEmbroidery embroider_annulus(const Tangle& tangle);

}  // namespace altcert
