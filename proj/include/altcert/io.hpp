#pragma once

#include <string>
#include <string_view>

#include "altcert/augment.hpp"
#include "altcert/embroidery.hpp"

namespace altcert {

/// Parses JSON text; throws ParseError with line and column on bad syntax.
Json parse_json_text(std::string_view text);

/// {"darts": D, "sigma": [...], "alpha": [...], "genus": g}. Field errors
/// throw ParseError naming the field; semantic errors keep their own codes.
SurfaceMap map_from_json(const Json& j);
Json map_to_json(const SurfaceMap& m);

/// Map fields plus "over": one boolean per crossing.
LinkDiagram diagram_from_json(const Json& j);
Json diagram_to_json(const LinkDiagram& d);

/// {"augmentations": [{"darts": [...], "ranks": [...]}, ...]}; ranks optional.
std::vector<Augmentation> augmentations_from_json(const Json& j);
Json augmentations_to_json(const std::vector<Augmentation>& augs);

/// Diagram fields plus an optional "augmentations" array.
AugmentedDiagram augmented_from_json(const Json& j);
Json augmented_to_json(const AugmentedDiagram& a);

/// Map fields with alpha -1 on stubs, "over", and "boundary".
Tangle tangle_from_json(const Json& j);
Json tangle_to_json(const Tangle& t);

/// A diagram file: JSON, or PD text starting with "PD".
AugmentedDiagram load_augmented_text(std::string_view text);

}  // namespace altcert
