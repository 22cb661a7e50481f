#pragma once

#include <json.hpp>
#include <string>
#include <string_view>
#include <vector>

#include "altcert/curves.hpp"

namespace altcert {

using Json = nlohmann::ordered_json;

enum class Verdict { Pass, Fail, NotApplicable, Skipped };

std::string_view to_string(Verdict v);

/// One named check; the witness is null unless the check failed (or carries
/// a note for NotApplicable/Skipped).
struct CheckItem {
  std::string name;
  Verdict verdict = Verdict::Pass;
  Json witness;

  bool ok() const { return verdict == Verdict::Pass || verdict == Verdict::NotApplicable; }
};

Json to_json(const CheckItem& item);
Json curve_json(const TransverseCurve& curve);

/// Pass iff every item is Pass or NotApplicable.
bool overall(const std::vector<CheckItem>& items);

}  // namespace altcert
