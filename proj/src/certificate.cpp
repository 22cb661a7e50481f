#include "altcert/certificate.hpp"

#include <algorithm>

namespace altcert {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::NotApplicable: return "NOT_APPLICABLE";
    case Verdict::Skipped: return "SKIPPED";
  }
  return "UNKNOWN";
}

Json to_json(const CheckItem& item) {
  Json j;
  j["name"] = item.name;
  j["verdict"] = to_string(item.verdict);
  if (!item.witness.is_null()) j["witness"] = item.witness;
  return j;
}

Json curve_json(const TransverseCurve& curve) {
  Json out = Json::array();
  for (const auto& s : curve.segments)
    out.push_back(Json{{"face", s.face}, {"entry", s.entry}, {"exit", s.exit}});
  return out;
}

bool overall(const std::vector<CheckItem>& items) {
  return std::all_of(items.begin(), items.end(), [](const CheckItem& i) { return i.ok(); });
}

}  // namespace altcert
