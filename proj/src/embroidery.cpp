#include "altcert/embroidery.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

namespace altcert {

namespace {

// Darts of a new crossing, counterclockwise (clockwise when mirrored):
// pointing outward, along the counterclockwise tangent, inward, clockwise tangent.
enum Port { Out = 0, CcwT = 1, In = 2, CwT = 3 };

std::vector<std::vector<Dart>> sigma_cycles(const std::vector<Dart>& sigma) {
  std::vector<std::vector<Dart>> cycles;
  std::vector<char> seen(sigma.size(), 0);
  for (Dart d = 0; d < static_cast<Dart>(sigma.size()); ++d) {
    if (seen[d]) continue;
    cycles.emplace_back();
    for (Dart e = d; !seen[e]; e = sigma[e]) {
      seen[e] = 1;
      cycles.back().push_back(e);
    }
  }
  return cycles;
}

// Over status of the strand through dart d, using min-dart slots.
struct Slots {
  std::vector<int> crossing, slot;
  explicit Slots(const std::vector<Dart>& sigma) : crossing(sigma.size()), slot(sigma.size()) {
    const auto cycles = sigma_cycles(sigma);
    for (std::size_t c = 0; c < cycles.size(); ++c)
      for (std::size_t i = 0; i < cycles[c].size(); ++i) {
        crossing[cycles[c][i]] = static_cast<int>(c);
        slot[cycles[c][i]] = static_cast<int>(i);
      }
  }
  bool over(const std::vector<bool>& flags, Dart d) const {
    return (slot[d] % 2 == 0) == flags[crossing[d]];
  }
};

void check_endpoint_parity(const Tangle& t, const Slots& slots) {
  for (std::size_t b = 0; b < t.boundary.size(); ++b) {
    const auto& ends = t.boundary[b];
    const int n2 = static_cast<int>(ends.size());
    if (n2 % 2 != 0)
      throw Error(ErrorCode::InvalidTangle, "odd endpoint count on boundary " + std::to_string(b));
    if (n2 < 8)
      throw Error(ErrorCode::TooFewEndpoints,
                  "boundary " + std::to_string(b) + " has " + std::to_string(n2) +
                      " endpoints; at least eight are needed");
    for (int i = 0; i < n2; ++i)
      if (slots.over(t.over, ends[i]) == slots.over(t.over, ends[(i + 1) % n2]))
        throw Error(ErrorCode::EndpointParityViolation,
                    "endpoints " + std::to_string(i + 1) + " and " +
                        std::to_string((i + 1) % n2 + 1) + " leave with the same over/under role");
  }
}

// Parity constraints x_u xor x_v = w over new crossings plus a ground node.
struct ParitySystem {
  struct Edge {
    int to;
    bool w;
  };
  std::vector<std::vector<Edge>> adj;
  explicit ParitySystem(int n) : adj(n + 1) {}
  int ground() const { return static_cast<int>(adj.size()) - 1; }
  void add(int u, int v, bool w) {
    adj[u].push_back({v, w});
    adj[v].push_back({u, w});
  }
  std::vector<bool> solve() const {
    const int n = static_cast<int>(adj.size());
    std::vector<int> value(n, -1), parent(n, -1);
    for (int root : std::vector<int>{ground()}) {
      value[root] = 0;
      std::deque<int> q{root};
      while (!q.empty()) {
        const int u = q.front();
        q.pop_front();
        for (auto [v, w] : adj[u]) {
          const int want = value[u] ^ static_cast<int>(w);
          if (value[v] < 0) {
            value[v] = want;
            parent[v] = u;
            q.push_back(v);
          } else if (value[v] != want) {
            std::string cycle;
            auto trace = [&](int x) {
              for (; x >= 0; x = parent[x]) cycle += (x == ground() ? "ground" : std::to_string(x)) + " ";
            };
            trace(u);
            cycle += "| ";
            trace(v);
            throw Error(ErrorCode::ParityUnsolvable,
                        "conflicting constraint cycle through new crossings: " + cycle);
          }
        }
      }
    }
    std::vector<bool> out(n - 1);
    for (int i = 0; i + 1 < n; ++i) out[i] = value[i] > 0;
    return out;
  }
};

struct Builder {
  std::vector<Dart> sigma, alpha;
  std::vector<bool> over;  // tangle flags, then new ones
  Slots slots;
  int tangle_crossings;

  explicit Builder(const Tangle& t)
      : sigma(t.sigma), alpha(t.alpha), over(t.over), slots(t.sigma),
        tangle_crossings(static_cast<int>(t.over.size())) {}

  // Adds the embroidery of one boundary; returns new crossing ids per arc.
  std::vector<std::vector<int>> embroider(const std::vector<Dart>& ends, bool mirrored,
                                          const std::vector<bool>& tangle_over) {
    const int n = static_cast<int>(ends.size()) / 2;
    const int first_dart = static_cast<int>(sigma.size());
    const int first_crossing = static_cast<int>(over.size());
    // Crossing of arcs i < j (0-based), in lexicographic pair order.
    std::vector<std::vector<int>> id(n, std::vector<int>(n, -1));
    int count = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) id[i][j] = count++;
    sigma.resize(first_dart + 4 * count);
    alpha.resize(first_dart + 4 * count);
    for (int c = 0; c < count; ++c)
      for (int p = 0; p < 4; ++p) {
        const int next = mirrored ? (p + 3) % 4 : (p + 1) % 4;
        sigma[first_dart + 4 * c + p] = first_dart + 4 * c + next;
      }
    auto dart = [&](int c, Port p) { return first_dart + 4 * c + p; };
    auto link = [&](Dart x, Dart y) {
      alpha[x] = y;
      alpha[y] = x;
    };

    // Arc k (0-based) is numbered k+1 in the clockwise order; odd numbers
    // sweep clockwise and are crossed on the way out by later arcs, even
    // ones sweep counterclockwise and are crossed on the way back in.
    auto sweeps_clockwise = [](int k) { return k % 2 == 0; };
    struct Visit {
      int crossing;
      Port enter, leave;
      bool radial;
    };
    std::vector<std::vector<int>> arcs(n);
    ParitySystem parity(count);
    for (int j = 0; j < n; ++j) {
      std::vector<Visit> path;
      for (int i = 0; i < j; ++i)
        if (sweeps_clockwise(i)) path.push_back({id[i][j], In, Out, true});
      if (sweeps_clockwise(j)) {
        for (int k = j + 1; k < n; ++k) path.push_back({id[j][k], CcwT, CwT, false});
      } else {
        for (int k = n - 1; k > j; --k) path.push_back({id[j][k], CwT, CcwT, false});
      }
      for (int i = j - 1; i >= 0; --i)
        if (!sweeps_clockwise(i)) path.push_back({id[i][j], Out, In, true});

      const Dart start = ends[j], finish = ends[n + j];
      Dart prev = start;
      for (const auto& v : path) {
        link(prev, dart(v.crossing, v.enter));
        prev = dart(v.crossing, v.leave);
        arcs[j].push_back(first_crossing + v.crossing);
      }
      link(prev, finish);

      // Status along the arc alternates, starting opposite to the tangle
      // strand at the start and ending opposite to the one at the finish.
      // Radial strands are over iff the crossing flag is set.
      bool status = !slots.over(tangle_over, start);
      for (std::size_t s = 0; s < path.size(); ++s) {
        const bool want = s % 2 == 0 ? status : !status;
        parity.add(path[s].crossing, parity.ground(), path[s].radial ? want : !want);
      }
      const bool last = path.size() % 2 == 1 ? status : !status;
      if (last == slots.over(tangle_over, finish))
        throw Error(ErrorCode::ParityUnsolvable,
                    "arc " + std::to_string(j + 1) + " cannot alternate into endpoint " +
                        std::to_string(n + j + 1));
    }
    const auto flags = parity.solve();
    for (bool f : flags) over.push_back(f);
    return arcs;
  }
};

}  // namespace

void validate_tangle(const Tangle& t) {
  const int n = static_cast<int>(t.sigma.size());
  if (static_cast<int>(t.alpha.size()) != n)
    throw Error(ErrorCode::InvalidTangle, "sigma and alpha sizes differ");
  for (Dart d = 0; d < n; ++d) {
    if (t.sigma[d] < 0 || t.sigma[d] >= n) throw Error(ErrorCode::InvalidTangle, "sigma out of range");
    const Dart a = t.alpha[d];
    if (a == -1) continue;
    if (a < 0 || a >= n || a == d || t.alpha[a] != d)
      throw Error(ErrorCode::InvalidTangle, "alpha is not an involution off the stubs");
  }
  const auto cycles = sigma_cycles(t.sigma);
  for (const auto& c : cycles)
    if (c.size() != 4) throw Error(ErrorCode::InvalidTangle, "crossings must be 4-valent");
  if (cycles.size() != t.over.size())
    throw Error(ErrorCode::InvalidTangle, "one over flag per crossing required");
  if (t.boundary.empty() || t.boundary.size() > 2)
    throw Error(ErrorCode::InvalidTangle, "one or two boundary circles required");
  std::vector<int> uses(n, 0);
  for (const auto& b : t.boundary)
    for (Dart s : b) {
      if (s < 0 || s >= n || t.alpha[s] != -1)
        throw Error(ErrorCode::InvalidTangle, "boundary entry is not a stub");
      ++uses[s];
    }
  for (Dart d = 0; d < n; ++d)
    if ((t.alpha[d] == -1) != (uses[d] == 1))
      throw Error(ErrorCode::InvalidTangle, "every stub must appear once on a boundary");

  // Connected interior.
  std::vector<char> seen(n, 0);
  std::deque<Dart> q;
  if (n > 0) {
    q.push_back(0);
    seen[0] = 1;
  }
  int reached = n > 0 ? 1 : 0;
  while (!q.empty()) {
    const Dart d = q.front();
    q.pop_front();
    for (Dart e : {t.sigma[d], t.alpha[d]})
      if (e >= 0 && !seen[e]) {
        seen[e] = 1;
        ++reached;
        q.push_back(e);
      }
  }
  if (reached != n) throw Error(ErrorCode::InvalidTangle, "tangle interior is disconnected");

  const Slots slots(t.sigma);
  for (Dart d = 0; d < n; ++d)
    if (t.alpha[d] >= 0 && slots.over(t.over, d) == slots.over(t.over, t.alpha[d]))
      throw Error(ErrorCode::NotAlternating,
                  "interior arc at darts " + std::to_string(d) + "," + std::to_string(t.alpha[d]) +
                      " does not alternate");
  check_endpoint_parity(t, slots);
}

Embroidery embroider_disk(const Tangle& tangle) {
  if (tangle.boundary.size() != 1)
    throw Error(ErrorCode::InvalidTangle, "disk embroidery needs exactly one boundary");
  validate_tangle(tangle);
  Builder b(tangle);
  Embroidery out;
  out.first_new_crossing = b.tangle_crossings;
  out.arcs.push_back(b.embroider(tangle.boundary[0], false, tangle.over));
  const auto map = SurfaceMap::build(b.sigma, b.alpha, 0);
  if (map.derived_genus() != 0)
    throw Error(ErrorCode::InvalidTangle,
                "closure is not planar; is the boundary listed clockwise?");
  out.diagram = LinkDiagram(map, b.over);
  return out;
}

namespace {

// Region beyond the outermost arc: the last arc's top edge runs between the
// outward darts of the last crossing on its way out and the first on its
// way back, and the region lies on the left when the arc sweeps clockwise.
int far_face(const SurfaceMap& m, const std::vector<std::vector<int>>& arcs, int first_dart_of,
             bool mirrored, int first_crossing) {
  const int n = static_cast<int>(arcs.size());
  const int j = n - 1;
  // The outward leg holds one crossing per earlier clockwise arc.
  int out_leg = 0;
  for (int i = 0; i < j; ++i) out_leg += i % 2 == 0;
  const int c = arcs[j][out_leg - 1] - first_crossing;
  const Dart x = first_dart_of + 4 * c + Out;
  const bool clockwise = j % 2 == 0;
  return (clockwise != mirrored) ? m.face_of(m.alpha(x)) : m.face_of(x);
}

}  // namespace

AnnulusEmbroidery embroider_annulus(const Tangle& tangle) {
  if (tangle.boundary.size() != 2)
    throw Error(ErrorCode::InvalidTangle, "annulus embroidery needs two boundaries");
  validate_tangle(tangle);
  Builder b(tangle);
  AnnulusEmbroidery out;
  const int outer_first_dart = static_cast<int>(b.sigma.size());
  const int outer_first = static_cast<int>(b.over.size());
  out.arcs.push_back(b.embroider(tangle.boundary[0], false, tangle.over));
  const int inner_first_dart = static_cast<int>(b.sigma.size());
  const int inner_first = static_cast<int>(b.over.size());
  // Seen from inside the hole the boundary runs counterclockwise.
  std::vector<Dart> inner(tangle.boundary[1].rbegin(), tangle.boundary[1].rend());
  out.arcs.push_back(b.embroider(inner, true, tangle.over));

  const auto map = SurfaceMap::build(b.sigma, b.alpha, 0);
  if (map.derived_genus() != 0)
    throw Error(ErrorCode::InvalidTangle,
                "closure is not planar; are both boundaries listed clockwise?");
  LinkDiagram diagram(map, b.over);
  out.outer_face = far_face(map, out.arcs[0], outer_first_dart, false, outer_first);
  out.inner_face = far_face(map, out.arcs[1], inner_first_dart, true, inner_first);

  // Core augmentation: shortest dual path between the two far regions.
  std::vector<Dart> via(map.num_faces(), -1);
  std::vector<char> seen(map.num_faces(), 0);
  std::deque<int> q{out.inner_face};
  seen[out.inner_face] = 1;
  while (!q.empty()) {
    const int f = q.front();
    q.pop_front();
    for (Dart d : map.face_walk(f)) {
      const int g = map.face_of(map.alpha(d));
      if (seen[g]) continue;
      seen[g] = 1;
      via[g] = d;
      q.push_back(g);
    }
  }
  std::vector<Dart> path;
  for (int f = out.outer_face; f != out.inner_face; f = map.face_of(via[f])) path.push_back(via[f]);
  std::reverse(path.begin(), path.end());
  std::vector<Augmentation> augs;
  augs.push_back(Augmentation{TransversePath{path, {}}});
  out.augmented = AugmentedDiagram{std::move(diagram), std::move(augs)};
  return out;
}

}  // namespace altcert
