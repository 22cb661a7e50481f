#include "altcert/diagram.hpp"

#include <algorithm>
#include <boost/pending/disjoint_sets.hpp>
#include <array>
#include <charconv>
#include <deque>
#include <map>
#include <sstream>

namespace altcert {

LinkDiagram::LinkDiagram(SurfaceMap map, std::vector<bool> over_flags)
    : map_(std::move(map)), over_(std::move(over_flags)) {
  if (static_cast<int>(over_.size()) != map_.num_vertices())
    throw Error(ErrorCode::BadOverFlags, "expected " + std::to_string(map_.num_vertices()) +
                                             " over flags, got " + std::to_string(over_.size()));
  slot_.assign(map_.num_darts(), -1);
  for (int v = 0; v < map_.num_vertices(); ++v) {
    const auto& darts = map_.vertex_darts(v);
    if (darts.size() != 4)
      throw Error(ErrorCode::NotFourValent, "vertex with minimum dart " +
                                                std::to_string(darts.front()) + " has degree " +
                                                std::to_string(darts.size()));
    for (int i = 0; i < 4; ++i) slot_[darts[i]] = i;
  }
}

std::vector<Strand> strands(const LinkDiagram& diagram) {
  const int n = diagram.map().num_darts();
  std::vector<char> used(n, 0);
  std::vector<Strand> out;
  for (Dart start = 0; start < n; ++start) {
    if (used[start]) continue;
    Strand s;
    Dart d = start;
    do {
      s.passages.push_back(d);
      used[d] = 1;
      used[diagram.map().alpha(d)] = 1;
      d = diagram.through(d);
    } while (d != start);
    out.push_back(std::move(s));
  }
  return out;
}

bool is_alternating(const LinkDiagram& diagram) {
  const auto& m = diagram.map();
  for (Dart d = 0; d < m.num_darts(); ++d)
    if (diagram.is_over(d) == diagram.is_over(m.alpha(d))) return false;
  return true;
}

std::optional<std::vector<FaceColor>> checkerboard_coloring(const SurfaceMap& map) {
  const int nf = map.num_faces();
  if (map.num_darts() == 0) return std::vector<FaceColor>{FaceColor::Black, FaceColor::White};
  std::vector<int> color(nf, -1);
  std::deque<int> queue;
  const int first = map.face_of(0);
  color[first] = 0;
  queue.push_back(first);
  while (!queue.empty()) {
    const int f = queue.front();
    queue.pop_front();
    for (Dart d : map.face_walk(f)) {
      const int g = map.face_of(map.alpha(d));
      if (color[g] < 0) {
        color[g] = 1 - color[f];
        queue.push_back(g);
      } else if (color[g] == color[f]) {
        return std::nullopt;
      }
    }
  }
  std::vector<FaceColor> out(nf);
  for (int f = 0; f < nf; ++f) out[f] = color[f] == 0 ? FaceColor::Black : FaceColor::White;
  return out;
}

std::vector<bool> alternating_assignment(const SurfaceMap& map, bool mirror) {
  const auto coloring = checkerboard_coloring(map);
  if (!coloring) throw Error(ErrorCode::NotAlternating, "map has no checkerboard colouring");
  const FaceColor want = mirror ? FaceColor::White : FaceColor::Black;
  std::vector<bool> over(map.num_vertices());
  for (int v = 0; v < map.num_vertices(); ++v) {
    const auto& darts = map.vertex_darts(v);
    if (darts.size() != 4)
      throw Error(ErrorCode::NotFourValent, "alternating assignment needs a 4-valent map");
    // The corner counterclockwise of slot 0 is the face of slot 1.
    over[v] = (*coloring)[map.face_of(darts[1])] == want;
  }
  return over;
}

bool is_two_braid(const LinkDiagram& diagram) {
  if (!is_alternating(diagram))
    throw Error(ErrorCode::NotAlternating, "2-braid detection needs an alternating diagram");
  const auto& m = diagram.map();
  const int n = diagram.num_crossings();
  if (diagram.genus() != 0 || n < 2) return false;
  const auto coloring = checkerboard_coloring(m);
  if (!coloring) return false;

  std::map<int, int> black_index;
  for (int f = 0; f < m.num_faces(); ++f)
    if ((*coloring)[f] == FaceColor::Black) black_index.emplace(f, static_cast<int>(black_index.size()));
  const int nb = static_cast<int>(black_index.size());

  std::vector<std::pair<int, int>> tait;
  for (int c = 0; c < n; ++c) {
    const auto& darts = m.vertex_darts(c);
    // Corner at slot k is the face of darts[k]; black corners are opposite.
    const int k = (*coloring)[m.face_of(darts[0])] == FaceColor::Black ? 0 : 1;
    int a = black_index.at(m.face_of(darts[k]));
    int b = black_index.at(m.face_of(darts[k + 2]));
    if (a > b) std::swap(a, b);
    tait.emplace_back(a, b);
  }
  if (std::any_of(tait.begin(), tait.end(), [](auto e) { return e.first == e.second; }))
    return false;

  if (nb == 2) return true;  // n parallel edges between two vertices
  if (nb != n) return false;
  std::vector<int> degree(nb, 0);
  for (auto [a, b] : tait) {
    ++degree[a];
    ++degree[b];
  }
  if (std::any_of(degree.begin(), degree.end(), [](int x) { return x != 2; })) return false;
  auto sorted = tait;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  // 2-regular and simple: a single cycle iff connected.
  boost::disjoint_sets_with_storage<> sets(nb);
  for (auto [a, b] : tait) sets.union_set(a, b);
  const int root = sets.find_set(0);
  for (int i = 1; i < nb; ++i)
    if (sets.find_set(i) != root) return false;
  return true;
}

TwistRegionPartition twist_regions(const LinkDiagram& diagram) {
  const auto& m = diagram.map();
  const int n = diagram.num_crossings();
  boost::disjoint_sets_with_storage<> sets(std::max(n, 1));
  for (const auto& walk : m.faces()) {
    if (walk.size() != 2) continue;
    sets.union_set(diagram.crossing_of(walk[0]), diagram.crossing_of(walk[1]));
  }
  TwistRegionPartition out;
  out.region_of.assign(n, -1);
  std::map<int, int> label;
  for (int c = 0; c < n; ++c) {
    const int root = sets.find_set(c);
    auto [it, inserted] = label.emplace(root, out.count);
    if (inserted) ++out.count;
    out.region_of[c] = it->second;
  }
  return out;
}

std::string export_pd(const LinkDiagram& diagram) {
  const auto& m = diagram.map();
  std::ostringstream out;
  out << "PD genus=" << diagram.genus() << "\n";
  std::vector<int> label(m.num_edges(), 0);
  int next = 1;
  for (int c = 0; c < diagram.num_crossings(); ++c) {
    const auto& darts = m.vertex_darts(c);
    const int start = diagram.over_flags()[c] ? 1 : 0;
    out << "X[";
    for (int i = 0; i < 4; ++i) {
      const int e = m.edge_of(darts[(start + i) % 4]);
      if (label[e] == 0) label[e] = next++;
      out << (i ? "," : "") << label[e];
    }
    out << "]\n";
  }
  return out.str();
}

LinkDiagram parse_pd(std::string_view text) {
  int genus = 0;
  std::vector<std::array<int, 4>> records;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool header_seen = false;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    while (!line.empty() && line.front() == ' ') line.remove_prefix(1);
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const auto fail = [&](const std::string& why) {
      return Error(ErrorCode::ParseError, "PD line " + std::to_string(line_no) + ": " + why);
    };
    if (line.starts_with("PD")) {
      if (header_seen) throw fail("duplicate header");
      header_seen = true;
      const auto eq = line.find("genus=");
      if (eq == std::string_view::npos) throw fail("header lacks genus=");
      const auto digits = line.substr(eq + 6);
      auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), genus);
      if (ec != std::errc() || p != digits.data() + digits.size() || genus < 0)
        throw fail("bad genus");
      continue;
    }
    if (!line.starts_with("X[") || line.back() != ']') throw fail("expected X[a,b,c,d]");
    std::string_view body = line.substr(2, line.size() - 3);
    std::array<int, 4> rec{};
    for (int i = 0; i < 4; ++i) {
      const auto comma = body.find(',');
      const auto token = body.substr(0, comma);
      auto [p, ec] = std::from_chars(token.data(), token.data() + token.size(), rec[i]);
      if (ec != std::errc() || p != token.data() + token.size()) throw fail("bad label");
      if ((i < 3) != (comma != std::string_view::npos)) throw fail("expected four labels");
      body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
    }
    records.push_back(rec);
  }
  if (!header_seen) throw Error(ErrorCode::ParseError, "PD text lacks a 'PD genus=g' header");

  const int n = static_cast<int>(records.size()) * 4;
  std::vector<Dart> sigma(n), alpha(n, -1);
  std::map<int, std::vector<Dart>> ends;
  for (int c = 0; c < static_cast<int>(records.size()); ++c)
    for (int i = 0; i < 4; ++i) {
      sigma[4 * c + i] = 4 * c + (i + 1) % 4;
      ends[records[c][i]].push_back(4 * c + i);
    }
  for (const auto& [lab, darts] : ends) {
    if (darts.size() != 2)
      throw Error(ErrorCode::ParseError, "PD label " + std::to_string(lab) + " appears " +
                                             std::to_string(darts.size()) + " times");
    alpha[darts[0]] = darts[1];
    alpha[darts[1]] = darts[0];
  }
  auto map = SurfaceMap::build(std::move(sigma), std::move(alpha), genus);
  return LinkDiagram(std::move(map), std::vector<bool>(records.size(), false));
}

LinkDiagram canonical_relabel(const LinkDiagram& diagram) {
  return parse_pd(export_pd(diagram));
}

}  // namespace altcert
