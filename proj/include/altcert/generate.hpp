#pragma once

#include <random>
#include <utility>
#include <vector>

#include "altcert/embroidery.hpp"

namespace altcert {

/// Simple graph from counterclockwise neighbour lists; the declared genus is
/// the derived one.
SurfaceMap map_from_rotation(const std::vector<std::vector<int>>& ccw_neighbours);

/// Stacked triangulation of the sphere on `vertices` >= 4 vertices
/// (3-connected), drawn with straight lines.
SurfaceMap random_planar_triangulation(std::mt19937_64& rng, int vertices);

/// Simple graph with random rotations that passes validate_cage; retries
/// until one is found. Throws InvalidParameter if edges are too few or too
/// many for the vertex count.
SurfaceMap random_cage(std::mt19937_64& rng, int vertices, int edges);

/// Disk tangle cut from the alternating medial of a random triangulation,
/// with an endpoint count in [min_endpoints, max_endpoints].
Tangle random_tangle(std::mt19937_64& rng, int min_endpoints, int max_endpoints);

/// Annular tangle: a disk tangle with a hole punched around an interior
/// crossing; at least `min_endpoints` on each boundary.
Tangle random_annular_tangle(std::mt19937_64& rng, int min_endpoints);

}  // namespace altcert
