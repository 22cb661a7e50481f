#include "altcert/cli.hpp"

#include <openssl/evp.h>
#include <omp.h>

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "altcert/cage.hpp"
#include "altcert/generate.hpp"
#include "altcert/io.hpp"

namespace altcert {

namespace {

struct InputError : std::runtime_error {
  ErrorCode code;
  InputError(ErrorCode c, const std::string& what) : std::runtime_error(what), code(c) {}
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(ErrorCode::ParseError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError(ErrorCode::ParseError, "cannot write " + path);
  out << text;
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  std::ostringstream ss;
  for (unsigned int i = 0; i < len; ++i)
    ss << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  return ss.str();
}

// Input-shape errors map to exit 2; everything else is a certified failure.
bool is_input_error(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParityUnsolvable:
    case ErrorCode::InvalidCage:
      return false;
    default:
      return true;
  }
}

void apply_thread_cap() {
  if (const char* env = std::getenv("ALTCERT_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) omp_set_num_threads(std::min(n, omp_get_num_procs()));
  }
}

struct Context {
  std::string command;
  std::string inputs;  // concatenated input bytes, for the digest
  Json report;

  Json begin() {
    Json j;
    j["command"] = command;
    j["input_sha256"] = sha256_hex(inputs);
    return j;
  }
};

Json checks_json(const std::vector<CheckItem>& items) {
  Json out = Json::array();
  for (const auto& c : items) out.push_back(to_json(c));
  return out;
}

std::string summary(const std::vector<CheckItem>& items) {
  std::string s;
  for (const auto& c : items) s += "  " + c.name + ": " + std::string(to_string(c.verdict)) + "\n";
  return s;
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  apply_thread_cap();
  CLI::App app{"Certify hypotheses of hyperbolicity theorems for alternating link diagrams"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string diagram_file, aug_file, cage_file, tangle_file, out_file, constants = "precise";
  int index = 0, k = 0, min_ends = 8, max_ends = 16;
  std::uint64_t seed = 1;
  bool annulus = false, mirror = false;

  auto* check = app.add_subcommand("check", "certify a diagram (and augmentations)");
  check->add_option("diagram", diagram_file, "diagram file (JSON or PD)")->required();
  check->add_option("--aug", aug_file, "augmentation file");

  auto* rubber = app.add_subcommand("rubber", "rubber-band pipeline for a cage graph");
  rubber->add_option("cage", cage_file, "cage map file")->required();
  rubber->add_option("--bounds", constants, "volume constants: precise or printed")
      ->check(CLI::IsMember({"precise", "printed"}));
  rubber->add_option("--export", out_file, "write the augmented diagram here");
  rubber->add_flag("--mirror", mirror, "use the mirror alternating assignment");

  auto* bounds = app.add_subcommand("bounds", "volume bounds for a cage graph");
  bounds->add_option("cage", cage_file, "cage map file")->required();
  bounds->add_option("--constants", constants, "precise or printed")
      ->check(CLI::IsMember({"precise", "printed"}));

  auto* embroider = app.add_subcommand("embroider", "close a tangle by embroidery");
  embroider->add_option("tangle", tangle_file, "tangle file")->required();
  embroider->add_flag("--annulus", annulus, "two boundaries plus a core augmentation");
  embroider->add_option("-o,--output", out_file, "write the closed diagram here");

  auto* twist = app.add_subcommand("twist", "replace an augmentation by half twists");
  twist->add_option("diagram", diagram_file, "diagram file")->required();
  twist->add_option("--aug", aug_file, "augmentation file (else read from the diagram)");
  twist->add_option("--index", index, "augmentation index")->required();
  twist->add_option("-k", k, "number of half twists (sign = handedness)")->required();
  twist->add_option("-o,--output", out_file, "write the result here");

  auto* export_pd_cmd = app.add_subcommand("export-pd", "print a diagram as PD text");
  export_pd_cmd->add_option("diagram", diagram_file, "diagram file")->required();

  auto* gen = app.add_subcommand("gen-tangle", "random alternating tangle");
  gen->add_option("--seed", seed, "random seed");
  gen->add_option("--min", min_ends, "minimum endpoints");
  gen->add_option("--max", max_ends, "maximum endpoints");
  gen->add_flag("--annulus", annulus, "annular tangle");
  gen->add_option("-o,--output", out_file, "write the tangle here");

  CliResult result;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    result.err = app.help();
    result.exit_code = 0;
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = 2;
    result.err = std::string("usage error: ") + e.what() + "\n";
    result.out = Json{{"error", {{"code", "UsageError"}, {"message", e.what()}}}}.dump(2) + "\n";
    return result;
  }

  Context ctx;
  ctx.command = app.get_subcommands().front()->get_name();
  const auto t0 = std::chrono::steady_clock::now();
  const VolumeConstants& vc = constants == "printed" ? kPrintedConstants : kPreciseConstants;
  Json report;
  bool pass = true;
  std::string human;
  try {
    if (check->parsed()) {
      ctx.inputs = read_file(diagram_file);
      auto aug = load_augmented_text(ctx.inputs);
      if (!aug_file.empty()) {
        const auto text = read_file(aug_file);
        ctx.inputs += text;
        aug.augs = augmentations_from_json(parse_json_text(text));
      }
      const auto cert = certify_hyperbolic(aug);
      report = ctx.begin();
      report["crossings"] = aug.base.num_crossings();
      report["genus"] = aug.base.genus();
      report["augmentations"] = aug.augs.size();
      report["verdict"] = cert.pass ? "PASS" : "FAIL";
      report["checks"] = checks_json(cert.checks);
      pass = cert.pass;
      human = summary(cert.checks);
    } else if (rubber->parsed() || bounds->parsed()) {
      ctx.inputs = read_file(cage_file);
      const auto cage = map_from_json(parse_json_text(ctx.inputs));
      report = ctx.begin();
      const auto valid = validate_cage(cage);
      report["cage"] = to_json(valid);
      if (!valid.ok()) {
        pass = false;
        report["verdict"] = "FAIL";
        human = "  cage: FAIL " + valid.witness.dump() + "\n";
      } else if (bounds->parsed()) {
        report["verdict"] = "PASS";
        report["bounds"] = to_json(volume_bounds(cage, vc));
        report["constants"] = constants;
        human = "  bounds: " + report["bounds"].dump() + "\n";
      } else {
        const auto rb = rubber_band_link(cage);
        const auto derived = derived_augmented(cage, mirror);
        const auto cert = certify_hyperbolic(derived.diagram);
        pass = cert.pass;
        report["rubber_band_link"] = {{"vertex_components", rb.vertex_components},
                                      {"edge_components", rb.edge_components.size()}};
        report["crossings"] = derived.diagram.base.num_crossings();
        report["genus"] = derived.diagram.base.genus();
        report["augmentations"] = derived.diagram.augs.size();
        if (derived.patch) report["patch"] = *derived.patch;
        report["verdict"] = cert.pass ? "PASS" : "FAIL";
        report["checks"] = checks_json(cert.checks);
        report["bounds"] = to_json(volume_bounds(cage, vc));
        report["constants"] = constants;
        human = summary(cert.checks);
        if (derived.patch) human += "  note: 2-braid patch applied (half twist -> full twist)\n";
        if (!out_file.empty()) write_file(out_file, augmented_to_json(derived.diagram).dump(2) + "\n");
      }
    } else if (embroider->parsed()) {
      ctx.inputs = read_file(tangle_file);
      const auto tangle = tangle_from_json(parse_json_text(ctx.inputs));
      if (annulus != (tangle.boundary.size() == 2))
        throw InputError(ErrorCode::InvalidTangle,
                         annulus ? "--annulus needs a tangle with two boundaries"
                                 : "tangle has two boundaries; pass --annulus");
      report = ctx.begin();
      AugmentedDiagram closed;
      Json arcs;
      if (annulus) {
        auto e = embroider_annulus(tangle);
        closed = e.augmented;
        arcs = e.arcs;
        report["inner_face"] = e.inner_face;
        report["outer_face"] = e.outer_face;
      } else {
        auto e = embroider_disk(tangle);
        closed = AugmentedDiagram{e.diagram, {}};
        arcs = e.arcs;
      }
      const int interior = static_cast<int>(tangle.over.size());
      const auto cert = certify_hyperbolic(closed);
      report["interior_crossings"] = interior;
      report["new_crossings"] = closed.base.num_crossings() - interior;
      report["arcs"] = arcs;
      report["augmentations"] = closed.augs.size();
      report["verdict"] = cert.pass ? "PASS" : "FAIL";
      report["checks"] = checks_json(cert.checks);
      pass = cert.pass;
      human = summary(cert.checks);
      if (!out_file.empty()) write_file(out_file, augmented_to_json(closed).dump(2) + "\n");
    } else if (twist->parsed()) {
      ctx.inputs = read_file(diagram_file);
      auto aug = load_augmented_text(ctx.inputs);
      if (!aug_file.empty()) {
        const auto text = read_file(aug_file);
        ctx.inputs += text;
        aug.augs = augmentations_from_json(parse_json_text(text));
      }
      const auto r = insert_half_twists(aug, index, k);
      report = ctx.begin();
      report["crossings_before"] = aug.base.num_crossings();
      report["crossings_after"] = r.diagram.base.num_crossings();
      report["handedness"] = r.handedness;
      report["over_parity"] = r.over_parity;
      report["alternating_parity_found"] = r.alternating_parity_found;
      report["validation"] = to_json(r.validation);
      pass = r.alternating_parity_found && r.validation.ok();
      report["verdict"] = pass ? "PASS" : "FAIL";
      report["diagram"] = augmented_to_json(r.diagram);
      human = "  crossings: " + std::to_string(aug.base.num_crossings()) + " -> " +
              std::to_string(r.diagram.base.num_crossings()) + "\n";
      if (!r.alternating_parity_found) human += "  NoAlternatingParity: result is not alternating\n";
      if (!out_file.empty()) write_file(out_file, augmented_to_json(r.diagram).dump(2) + "\n");
    } else if (export_pd_cmd->parsed()) {
      ctx.inputs = read_file(diagram_file);
      const auto aug = load_augmented_text(ctx.inputs);
      result.out = export_pd(aug.base);
      result.err = "export-pd: " + std::to_string(aug.base.num_crossings()) + " crossings\n";
      return result;
    } else if (gen->parsed()) {
      std::mt19937_64 rng(seed);
      const auto t = annulus ? random_annular_tangle(rng, min_ends)
                             : random_tangle(rng, min_ends, max_ends);
      report = ctx.begin();
      report["seed"] = seed;
      report["crossings"] = t.over.size();
      Json ends = Json::array();
      for (const auto& b : t.boundary) ends.push_back(b.size());
      report["endpoints"] = ends;
      report["tangle"] = tangle_to_json(t);
      report["verdict"] = "PASS";
      human = "  tangle with " + std::to_string(t.over.size()) + " crossings\n";
      if (!out_file.empty()) write_file(out_file, tangle_to_json(t).dump(2) + "\n");
    }
  } catch (const InputError& e) {
    result.exit_code = 2;
    result.err = ctx.command + ": input error (" + std::string(to_string(e.code)) + "): " + e.what() + "\n";
    result.out = Json{{"command", ctx.command},
                      {"error", {{"code", to_string(e.code)}, {"message", e.what()}}}}
                     .dump(2) + "\n";
    return result;
  } catch (const Error& e) {
    result.exit_code = is_input_error(e.code()) ? 2 : 1;
    result.err = ctx.command + ": " + (result.exit_code == 2 ? "input error" : "FAIL") + " (" +
                 std::string(to_string(e.code())) + "): " + e.what() + "\n";
    result.out = Json{{"command", ctx.command},
                      {"error", {{"code", to_string(e.code())}, {"message", e.what()}}}}
                     .dump(2) + "\n";
    return result;
  }

  const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  report["timing_ms"] = ms;
  result.exit_code = pass ? 0 : 1;
  result.out = report.dump(2) + "\n";
  std::ostringstream h;
  h << ctx.command << ": " << (pass ? "PASS" : "FAIL") << " (" << std::fixed
    << std::setprecision(1) << ms << " ms)\n"
    << human;
  result.err = h.str();
  return result;
}

}  // namespace altcert
