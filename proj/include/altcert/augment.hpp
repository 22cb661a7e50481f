#pragma once

#include <optional>
#include <vector>

#include "altcert/certificate.hpp"
#include "altcert/diagram.hpp"

namespace altcert {

/// An arc in the projection surface from a point inside one face to a point
/// inside another, crossing the diagram transversely. It leaves face(darts[i])
/// across the edge of darts[i]; ranks order several paths crossing one edge
/// (larger rank = farther from the edge's smaller dart's vertex). Empty ranks
/// mean rank 0 everywhere.
struct TransversePath {
  std::vector<Dart> darts;
  std::vector<int> ranks;

  int rank(std::size_t i) const { return ranks.empty() ? 0 : ranks[i]; }
  bool operator==(const TransversePath&) const = default;
};

/// A vertical circle through the ends of the path, bounding a disk that the
/// link punctures once per crossed edge.
struct Augmentation {
  TransversePath path;

  int punctures() const { return static_cast<int>(path.darts.size()); }
  bool operator==(const Augmentation&) const = default;
};

struct AugmentedDiagram {
  LinkDiagram base;
  std::vector<Augmentation> augs;

  bool operator==(const AugmentedDiagram&) const = default;
};

/// End faces (f1, f2) of a non-empty path.
std::pair<int, int> end_faces(const SurfaceMap& map, const TransversePath& path);

CheckItem validate_augmentations(const AugmentedDiagram& augmented);

/// Hypotheses of the hyperbolicity theorem, one item per check, in a fixed
/// order; the projective-plane exceptions are recorded as not applicable.
struct HyperbolicityCertificate {
  std::vector<CheckItem> checks;
  bool pass = false;
};

HyperbolicityCertificate certify_hyperbolic(const AugmentedDiagram& augmented);
Json to_json(const HyperbolicityCertificate& cert);

bool is_fully_augmented(const AugmentedDiagram& augmented);

struct TwistResult {
  AugmentedDiagram diagram;
  /// Over flag given to every new crossing (its first and third darts over).
  bool over_parity = false;
  bool alternating_parity_found = true;
  int handedness = 1;
  CheckItem validation;
};

/// Replaces augmentation `index` (which must be punctured exactly twice) by
/// |k| crossings twisting the two punctured arcs. Throws NotTwoPunctured or
/// InvalidParameter (k == 0 or bad index).
TwistResult insert_half_twists(const AugmentedDiagram& augmented, int index, int k);

}  // namespace altcert
