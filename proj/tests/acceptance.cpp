// Acceptance suite: one PASS/FAIL line per criterion; exit 1 if any fail.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "altcert/cage.hpp"
#include "altcert/cli.hpp"
#include "altcert/generate.hpp"
#include "brute_force.hpp"
#include "fixtures.hpp"

using namespace altcert;
namespace fx = altcert::fixtures;

namespace {

int failures = 0;

void line(int n, const std::string& title, bool ok, const std::string& detail) {
  std::printf("[%s] %d. %s: %s\n", ok ? "PASS" : "FAIL", n, title.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

std::vector<std::pair<std::string, SurfaceMap>> cage_corpus() {
  return {{"C3", fx::cycle_graph(3)},          {"K4", fx::k4()},
          {"cube", fx::cube()},                {"octahedron", fx::octahedron()},
          {"prism", fx::triangular_prism()},   {"wheel5", fx::wheel(5)},
          {"torus3x3", fx::torus_grid(3, 3)},  {"torus3x4", fx::torus_grid(3, 4)},
          {"torus4x4", fx::torus_grid(4, 4)},  {"genus2", fx::genus2_cage()},
          {"genus2b", fx::genus2_cage_b()}};
}

std::vector<std::pair<std::string, LinkDiagram>> diagram_corpus() {
  std::vector<std::pair<std::string, LinkDiagram>> out{
      {"hopf", fx::hopf()},
      {"trefoil", fx::trefoil()},
      {"figure_eight", fx::figure_eight()},
      {"6_2", fx::knot_6_2()},
      {"trefoil#trefoil", fx::trefoil_sum()},
      {"kinked_trefoil", fx::kinked_trefoil()},
      {"torus_one_crossing", fx::torus_one_crossing()}};
  for (int n = 2; n <= 8; ++n) out.push_back({"(2," + std::to_string(n) + ")", fx::two_braid(n)});
  for (auto& [name, cage] : cage_corpus())
    out.push_back({"medial(" + name + ")", fx::alternating_medial(cage)});
  return out;
}

bool all_zero(const std::vector<std::uint8_t>& v) {
  for (auto x : v)
    if (x) return false;
  return true;
}

brute::CurveKey key_of(const SurfaceMap& m, const TransverseCurve& c) {
  if (c.intersections() == 0) return {{-1 - c.segments[0].face, -1 - c.segments[0].face}};
  brute::CurveKey key;
  for (const auto& s : c.segments)
    key.push_back(brute::chord(m.face_walk(s.face)[s.entry], m.face_walk(s.face)[s.exit]));
  std::sort(key.begin(), key.end());
  return key;
}

void criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(20240601);
  int passed = 0, total = 20;
  std::set<int> sizes;
  std::string first_failure;
  for (int i = 0; i < total; ++i) {
    const auto t = random_tangle(rng, 8, 16);
    sizes.insert(static_cast<int>(t.boundary[0].size()));
    const auto d = embroider_disk(t).diagram;
    const auto cert = certify_hyperbolic({d, {}});
    bool ok = is_alternating(d) && !is_two_braid(d) && d.map().derived_genus() == 0;
    for (const auto& c : cert.checks)
      if (c.name == "connected" || c.name == "reduced" || c.name == "obviously_prime")
        ok = ok && c.verdict == Verdict::Pass;
    if (ok) ++passed;
    else if (first_failure.empty()) first_failure = " first failure at tangle " + std::to_string(i);
  }
  const double s = seconds_since(t0);
  line(1, "claim suite", passed == total && s < 60.0,
       std::to_string(passed) + "/" + std::to_string(total) + " embroidered tangles pass (endpoint counts " +
           std::to_string(*sizes.begin()) + ".." + std::to_string(*sizes.rbegin()) + "), " +
           fmt("%.2f s", s) + first_failure);
}

void criterion2() {
  int passed = 0, total = 0;
  std::set<int> genera;
  bool c3_patch = false;
  std::string failed;
  for (const auto& [name, cage] : cage_corpus()) {
    ++total;
    genera.insert(cage.derived_genus());
    const auto out = derived_augmented(cage);
    const auto cert = certify_hyperbolic(out.diagram);
    if (cert.pass && is_fully_augmented(out.diagram)) ++passed;
    else failed += " " + name;
    if (name == "C3")
      c3_patch = out.patch.has_value() &&
                 (*out.patch)["note"] == "replaced a half twist with a full twist" &&
                 out.diagram.base.num_crossings() == 4;
  }
  line(2, "rubber-band suite",
       passed == total && total >= 10 && genera == std::set<int>{0, 1, 2} && c3_patch,
       std::to_string(passed) + "/" + std::to_string(total) + " cages certified (genus 0,1,2), C3 patch " +
           (c3_patch ? "recorded" : "MISSING") + (failed.empty() ? "" : "; failed:" + failed));
}

void criterion3() {
  struct Ref {
    const char* name;
    SurfaceMap cage;
    double lower, upper;
    bool strict;
    int upper_decimals;  // digits printed after the point
  };
  const std::vector<Ref> refs{{"K4", fx::k4(), 36.638, 50.745, false, 3},
                              {"torus3x3", fx::torus_grid(3, 3), 131.8968, 182.682, false, 3},
                              {"genus2", fx::genus2_cage(), 25.6466, 175.86, true, 2}};
  bool ok = true;
  std::string detail;
  for (const auto& r : refs) {
    const auto b = volume_bounds(r.cage, kPrintedConstants);
    const bool lower_ok = std::abs(b.lower - r.lower) < 1e-3 && b.lower_strict == r.strict;
    bool upper_ok = std::abs(b.upper - r.upper) < 1e-3;
    std::string note;
    if (!upper_ok && r.upper_decimals < 3) {
      // The reference is printed truncated ("175.86..."); compare the prefix.
      const double scale = std::pow(10.0, r.upper_decimals);
      upper_ok = std::floor(b.upper * scale) / scale == r.upper;
      note = fmt(" (truncated-prefix match, |diff| %.4f)", std::abs(b.upper - r.upper));
    }
    ok = ok && lower_ok && upper_ok;
    detail += std::string(r.name) + fmt(" %.4f/%.4f", b.lower, b.upper) + note + "; ";
  }
  std::mt19937_64 rng(1000);
  int ordered = 0;
  for (int i = 0; i < 1000; ++i) {
    const int v = std::uniform_int_distribution<int>(4, 8)(rng);
    const auto c = random_cage(rng, v, std::uniform_int_distribution<int>(v + 1, v * (v - 1) / 2)(rng));
    const auto b = volume_bounds(c);
    ordered += b.lower < b.upper;
  }
  ok = ok && ordered == 1000;
  line(3, "volume-bound regression", ok,
       detail + std::to_string(ordered) + "/1000 random cages with lower < upper");
}

void criterion4() {
  long curves = 0, violations = 0;
  for (const auto& [name, d] : diagram_corpus()) {
    const auto& m = d.map();
    const auto list = enumerate_curves(m, 2);
    const auto cuts = cut_all(m, list);
    for (std::size_t i = 0; i < list.size(); ++i) {
      ++curves;
      const bool zero = all_zero(z2_class(m, list[i]));
      if (zero != cuts[i].separating) ++violations;
      if (cuts[i].separating &&
          cuts[i].pieces[0].euler_char + cuts[i].pieces[1].euler_char != 2 - 2 * m.derived_genus())
        ++violations;
    }
  }
  line(4, "curve-engine conservation", violations == 0,
       std::to_string(curves) + " curves on " + std::to_string(diagram_corpus().size()) +
           " diagrams, " + std::to_string(violations) + " violations");
}

void criterion5() {
  int compared = 0, disagreements = 0;
  bool sum_fails = false, kink_fails = false;
  for (const auto& [name, d] : diagram_corpus()) {
    if (d.num_crossings() > 8 || !is_alternating(d)) continue;
    ++compared;
    const auto r = is_reduced(d);
    const auto rw = brute::reduced_witnesses(d);
    if (r.pass != rw.empty() || (!r.pass && !rw.count(r.crossing))) ++disagreements;
    const auto p = is_obviously_prime(d);
    const auto pw = brute::prime_witnesses(d);
    bool p_ok = p.pass == pw.empty();
    if (!p.pass) p_ok = p_ok && std::find(pw.begin(), pw.end(), key_of(d.map(), *p.curve)) != pw.end();
    if (!p_ok) ++disagreements;
    if (name == "trefoil#trefoil") sum_fails = !p.pass && p.disk_crossings.size() == 3;
    if (name == "kinked_trefoil") kink_fails = !r.pass && r.crossing == d.num_crossings() - 1;
  }
  line(5, "oracle equivalence", disagreements == 0 && sum_fails && kink_fails,
       std::to_string(compared) + " alternating diagrams (<= 8 crossings), " +
           std::to_string(disagreements) + " disagreements; trefoil#trefoil prime FAIL " +
           (sum_fails ? "ok" : "WRONG") + ", kinked trefoil reduced FAIL at kink " +
           (kink_fails ? "ok" : "WRONG"));
}

void criterion6() {
  bool ok = true;
  for (int n = 2; n <= 8; ++n) {
    const auto d = fx::two_braid(n);
    ok = ok && is_two_braid(d) && twist_regions(d).count == 1;
  }
  ok = ok && !is_two_braid(fx::figure_eight()) && !is_two_braid(fx::knot_6_2()) &&
       !is_two_braid(fx::alternating_medial(fx::torus_grid(3, 3)));
  ok = ok && twist_regions(fx::figure_eight()).count == 2;
  line(6, "2-braid detection", ok,
       "(2,2)..(2,8) true with one twist region; figure-eight, 6_2, torus-grid medial false; "
       "figure-eight twist number " + std::to_string(twist_regions(fx::figure_eight()).count));
}

void criterion7() {
  const auto d = fx::figure_eight();
  const auto& m = d.map();
  std::optional<Augmentation> aug;
  for (Dart x = 0; x < m.num_darts() && !aug; ++x)
    for (Dart y : m.face_walk(m.face_of(m.alpha(x)))) {
      Augmentation a{{{x, y}, {}}};
      if (validate_augmentations({d, {a}}).ok()) {
        aug = a;
        break;
      }
    }
  bool ok = aug.has_value();
  std::string counts;
  const int regions = twist_regions(d).count;
  for (int k = 1; k <= 4 && ok; ++k) {
    const auto r = insert_half_twists({d, {*aug}}, 0, k);
    const auto& out = r.diagram.base;
    ok = ok && is_alternating(out) && out.num_crossings() == 4 + k &&
         twist_regions(out).count == regions;
    counts += std::to_string(out.num_crossings()) + "/" + std::to_string(twist_regions(out).count) + " ";
  }
  line(7, "half-twist filling", ok,
       "k=1..4 crossings/twist regions: " + counts + "(base twist regions " + std::to_string(regions) + ")");
}

void criterion8() {
  const std::string dir = ALTCERT_DATA_DIR;
  const std::vector<std::vector<std::string>> runs{
      {"check", dir + "/figure_eight_aug.json"},
      {"check", dir + "/trefoil.pd"},
      {"check", dir + "/bad_involution.json"},
      {"rubber", dir + "/cage_torus_3x3.json"},
      {"rubber", dir + "/cage_c3.json"},
      {"bounds", dir + "/cage_genus2.json"},
      {"embroider", dir + "/tangle8.json"},
      {"embroider", dir + "/tangle_annulus.json", "--annulus"},
      {"twist", dir + "/figure_eight_aug.json", "--index", "0", "-k", "2"},
      {"export-pd", dir + "/figure_eight_aug.json"},
      {"gen-tangle", "--seed", "42"},
      {"gen-tangle", "--seed", "42", "--annulus"}};
  int identical = 0;
  for (const auto& args : runs) {
    auto strip = [](const CliResult& r) {
      if (r.out.empty() || r.out[0] != '{') return r.out;
      auto j = Json::parse(r.out);
      j.erase("timing_ms");
      return j.dump();
    };
    const auto a = run_cli(args), b = run_cli(args);
    identical += a.exit_code == b.exit_code && strip(a) == strip(b);
  }
  // The parallel kernels agree with the serial ones.
  const auto m = fx::alternating_medial(fx::torus_grid(6, 6)).map();
  const auto curves = enumerate_curves(m, 2);
  bool kernels = curves == enumerate_curves_serial(m, 2);
  const auto par = cut_all(m, curves), ser = cut_all_serial(m, curves);
  for (std::size_t i = 0; i < curves.size(); ++i)
    kernels = kernels && par[i].separating == ser[i].separating &&
              par[i].pieces.size() == ser[i].pieces.size();
  line(8, "determinism", identical == static_cast<int>(runs.size()) && kernels,
       std::to_string(identical) + "/" + std::to_string(runs.size()) +
           " commands byte-identical across two runs (timing excluded); parallel kernels " +
           (kernels ? "match" : "DIFFER from") + " serial");
}

}  // namespace

int main() {
  const std::vector<std::function<void()>> criteria{criterion1, criterion2, criterion3, criterion4,
                                                    criterion5, criterion6, criterion7, criterion8};
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    try {
      criteria[i]();
    } catch (const std::exception& e) {
      line(static_cast<int>(i + 1), "criterion", false, std::string("threw: ") + e.what());
    }
  }
  std::printf("%d/8 criteria passed\n", 8 - failures);
  return failures == 0 ? 0 : 1;
}
