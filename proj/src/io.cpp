#include "altcert/io.hpp"

#include <algorithm>

namespace altcert {

namespace {

[[noreturn]] void bad(const std::string& field, const std::string& why) {
  throw Error(ErrorCode::ParseError, "field '" + field + "': " + why);
}

const Json& need(const Json& j, const char* field) {
  if (!j.is_object()) bad(field, "document is not an object");
  const auto it = j.find(field);
  if (it == j.end()) bad(field, "missing");
  return *it;
}

int as_int(const Json& v, const std::string& field) {
  if (!v.is_number_integer()) bad(field, "expected an integer, got " + v.dump());
  return v.get<int>();
}

std::vector<int> int_array(const Json& v, const std::string& field) {
  if (!v.is_array()) bad(field, "expected an array");
  std::vector<int> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(as_int(v[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<bool> bool_array(const Json& v, const std::string& field) {
  if (!v.is_array()) bad(field, "expected an array");
  std::vector<bool> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_boolean()) bad(field + "[" + std::to_string(i) + "]", "expected a boolean");
    out.push_back(v[i].get<bool>());
  }
  return out;
}

struct RawMap {
  std::vector<int> sigma, alpha;
  int genus;
};

RawMap raw_map(const Json& j) {
  RawMap r;
  const int darts = as_int(need(j, "darts"), "darts");
  if (darts < 0) bad("darts", "must be non-negative");
  r.sigma = int_array(need(j, "sigma"), "sigma");
  r.alpha = int_array(need(j, "alpha"), "alpha");
  r.genus = as_int(need(j, "genus"), "genus");
  if (static_cast<int>(r.sigma.size()) != darts)
    bad("sigma", "length " + std::to_string(r.sigma.size()) + " but darts = " + std::to_string(darts));
  if (static_cast<int>(r.alpha.size()) != darts)
    bad("alpha", "length " + std::to_string(r.alpha.size()) + " but darts = " + std::to_string(darts));
  return r;
}

}  // namespace

Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t at = std::min(e.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<long>(at), '\n');
    const auto nl = text.substr(0, at).rfind('\n');
    const std::size_t col = nl == std::string_view::npos ? at : at - nl - 1;
    throw Error(ErrorCode::ParseError, "JSON syntax error at line " + std::to_string(line) +
                                           ", column " + std::to_string(col));
  }
}

SurfaceMap map_from_json(const Json& j) {
  const auto r = raw_map(j);
  return SurfaceMap::build(r.sigma, r.alpha, r.genus);
}

Json map_to_json(const SurfaceMap& m) {
  return Json{{"darts", m.num_darts()},
              {"sigma", std::vector<int>(m.sigma_array().begin(), m.sigma_array().end())},
              {"alpha", std::vector<int>(m.alpha_array().begin(), m.alpha_array().end())},
              {"genus", m.declared_genus()}};
}

LinkDiagram diagram_from_json(const Json& j) {
  auto map = map_from_json(j);
  return LinkDiagram(std::move(map), bool_array(need(j, "over"), "over"));
}

Json diagram_to_json(const LinkDiagram& d) {
  Json j = map_to_json(d.map());
  j["over"] = d.over_flags();
  return j;
}

std::vector<Augmentation> augmentations_from_json(const Json& j) {
  const Json& list = need(j, "augmentations");
  if (!list.is_array()) bad("augmentations", "expected an array");
  std::vector<Augmentation> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string field = "augmentations[" + std::to_string(i) + "]";
    if (!list[i].is_object() || !list[i].contains("darts")) bad(field, "expected {\"darts\": [...]}");
    Augmentation a;
    a.path.darts = int_array(list[i]["darts"], field + ".darts");
    if (list[i].contains("ranks")) a.path.ranks = int_array(list[i]["ranks"], field + ".ranks");
    out.push_back(std::move(a));
  }
  return out;
}

Json augmentations_to_json(const std::vector<Augmentation>& augs) {
  Json list = Json::array();
  for (const auto& a : augs) {
    Json item{{"darts", a.path.darts}};
    if (!a.path.ranks.empty()) item["ranks"] = a.path.ranks;
    list.push_back(item);
  }
  return Json{{"augmentations", list}};
}

AugmentedDiagram augmented_from_json(const Json& j) {
  AugmentedDiagram a{diagram_from_json(j), {}};
  if (j.contains("augmentations")) a.augs = augmentations_from_json(j);
  return a;
}

Json augmented_to_json(const AugmentedDiagram& a) {
  Json j = diagram_to_json(a.base);
  j["augmentations"] = augmentations_to_json(a.augs)["augmentations"];
  return j;
}

Tangle tangle_from_json(const Json& j) {
  const auto r = raw_map(j);
  Tangle t;
  t.sigma = r.sigma;
  t.alpha = r.alpha;
  t.over = bool_array(need(j, "over"), "over");
  const Json& b = need(j, "boundary");
  if (!b.is_array()) bad("boundary", "expected an array of arrays");
  for (std::size_t i = 0; i < b.size(); ++i)
    t.boundary.push_back(int_array(b[i], "boundary[" + std::to_string(i) + "]"));
  return t;
}

Json tangle_to_json(const Tangle& t) {
  return Json{{"darts", t.sigma.size()}, {"sigma", t.sigma}, {"alpha", t.alpha},
              {"genus", 0},              {"over", t.over},   {"boundary", t.boundary}};
}

AugmentedDiagram load_augmented_text(std::string_view text) {
  const auto start = text.find_first_not_of(" \t\r\n");
  if (start != std::string_view::npos && text.substr(start, 2) == "PD")
    return AugmentedDiagram{parse_pd(text), {}};
  return augmented_from_json(parse_json_text(text));
}

}  // namespace altcert
