#include "altcert/surface_map.hpp"

#include <algorithm>
#include <string>

namespace altcert {

namespace {

// Orbits of `perm` with each orbit listed from its minimum element; orbits
// come out in increasing order of that minimum.
void collect_orbits(const std::vector<Dart>& perm, std::vector<int>& orbit_of,
                    std::vector<int>& pos, std::vector<std::vector<Dart>>& orbits) {
  const int n = static_cast<int>(perm.size());
  orbit_of.assign(n, -1);
  pos.assign(n, -1);
  orbits.clear();
  for (Dart start = 0; start < n; ++start) {
    if (orbit_of[start] >= 0) continue;
    const int id = static_cast<int>(orbits.size());
    std::vector<Dart> orbit;
    Dart d = start;
    do {
      orbit_of[d] = id;
      pos[d] = static_cast<int>(orbit.size());
      orbit.push_back(d);
      d = perm[d];
    } while (d != start);
    orbits.push_back(std::move(orbit));
  }
}

void check_permutation(const std::vector<Dart>& perm, const char* name) {
  const int n = static_cast<int>(perm.size());
  std::vector<char> seen(n, 0);
  for (int i = 0; i < n; ++i) {
    const Dart d = perm[i];
    if (d < 0 || d >= n)
      throw Error(ErrorCode::NotPermutation,
                  std::string(name) + "[" + std::to_string(i) + "] = " + std::to_string(d) +
                      " is out of range");
    if (seen[d])
      throw Error(ErrorCode::NotPermutation,
                  std::string(name) + " maps two darts to " + std::to_string(d));
    seen[d] = 1;
  }
}

}  // namespace

SurfaceMap SurfaceMap::build(std::vector<Dart> sigma, std::vector<Dart> alpha,
                             int declared_genus) {
  if (sigma.size() != alpha.size())
    throw Error(ErrorCode::NotPermutation, "sigma and alpha have different lengths");
  if (declared_genus < 0)
    throw Error(ErrorCode::GenusNegative, "declared genus is negative");
  check_permutation(sigma, "sigma");
  check_permutation(alpha, "alpha");
  const int n = static_cast<int>(sigma.size());
  for (Dart d = 0; d < n; ++d) {
    if (alpha[d] == d)
      throw Error(ErrorCode::HasFixedPoint, "alpha fixes dart " + std::to_string(d));
    if (alpha[alpha[d]] != d)
      throw Error(ErrorCode::NotInvolution,
                  "alpha(alpha(" + std::to_string(d) + ")) != " + std::to_string(d));
  }

  SurfaceMap m;
  m.face_walks_.clear();
  m.sigma_ = std::move(sigma);
  m.alpha_ = std::move(alpha);
  m.declared_genus_ = declared_genus;
  m.sigma_inv_.assign(n, 0);
  for (Dart d = 0; d < n; ++d) m.sigma_inv_[m.sigma_[d]] = d;

  if (n == 0) {
    m.face_walks_.assign(2, {});
    return m;
  }

  // Connectivity under <sigma, alpha>.
  std::vector<char> reached(n, 0);
  std::vector<Dart> stack{0};
  reached[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const Dart d = stack.back();
    stack.pop_back();
    for (Dart e : {m.sigma_[d], m.sigma_inv_[d], m.alpha_[d]}) {
      if (!reached[e]) {
        reached[e] = 1;
        ++count;
        stack.push_back(e);
      }
    }
  }
  if (count != n)
    throw Error(ErrorCode::NotConnected,
                "only " + std::to_string(count) + " of " + std::to_string(n) +
                    " darts reachable from dart 0");

  std::vector<int> unused;
  collect_orbits(m.sigma_, m.vertex_of_, unused, m.vertex_darts_);
  std::vector<Dart> phi(n);
  for (Dart d = 0; d < n; ++d) phi[d] = m.sigma_[m.alpha_[d]];
  collect_orbits(phi, m.face_of_, m.face_pos_, m.face_walks_);

  m.edge_of_.assign(n, -1);
  for (Dart d = 0; d < n; ++d) {
    if (m.edge_of_[d] >= 0) continue;
    m.edge_of_[d] = m.edge_of_[m.alpha_[d]] = static_cast<int>(m.edge_reps_.size());
    m.edge_reps_.push_back(d);
  }
  for (const auto& orbit : m.vertex_darts_) m.vertex_reps_.push_back(orbit.front());

  const int euler = m.num_vertices() - m.num_edges() + m.num_faces();
  if (euler > 2 || (2 - euler) % 2 != 0)
    throw Error(ErrorCode::GenusNegative,
                "Euler characteristic " + std::to_string(euler) + " gives no valid genus");
  m.derived_genus_ = (2 - euler) / 2;
  return m;
}

Dart SurfaceMap::face_rep(int f) const {
  const auto& walk = face_walks_[f];
  return walk.empty() ? -1 : walk.front();
}

int SurfaceMap::face_from_rep(Dart rep) const {
  if (rep < 0 || rep >= num_darts()) return -1;
  const int f = face_of_[rep];
  return face_rep(f) == rep ? f : -1;
}

bool is_cellular_on(const SurfaceMap& map) {
  return map.derived_genus() == map.declared_genus();
}

std::vector<std::pair<int, int>> face_adjacency(const SurfaceMap& map) {
  std::vector<std::pair<int, int>> links;
  links.reserve(map.num_edges());
  for (int e = 0; e < map.num_edges(); ++e) {
    const Dart d = map.edge_rep(e);
    int a = map.face_of(d);
    int b = map.face_of(map.alpha(d));
    if (a > b) std::swap(a, b);
    links.emplace_back(a, b);
  }
  return links;
}

SurfaceMap medial(const SurfaceMap& map) {
  const int n = map.num_darts();
  std::vector<Dart> sigma(2 * n), alpha(2 * n);
  for (Dart d = 0; d < n; ++d) {
    const Dart other = map.alpha(d);
    // Around the crossing on edge {d, other}, counterclockwise:
    // cw stub of other, ccw stub of d, cw stub of d, ccw stub of other.
    sigma[medial_cw_stub(other)] = medial_ccw_stub(d);
    sigma[medial_ccw_stub(d)] = medial_cw_stub(d);
    // The arc leaving toward the ccw corner of d ends at the cw stub of sigma(d).
    alpha[medial_ccw_stub(d)] = medial_cw_stub(map.sigma(d));
    alpha[medial_cw_stub(map.sigma(d))] = medial_ccw_stub(d);
  }
  return SurfaceMap::build(std::move(sigma), std::move(alpha), map.declared_genus());
}

}  // namespace altcert
