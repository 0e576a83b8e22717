// Command-line surface: loads a triangulated complex, runs the theorem-level
// computations, and prints deterministic JSON (or plain-text) reports.
//
// Exit codes: 0 = ok, 1 = a verified property failed (violation),
// 2 = unusable input.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "derham/cohomology.hpp"
#include "derham/complex.hpp"
#include "derham/derham.hpp"
#include "derham/errors.hpp"
#include "derham/forms.hpp"
#include "derham/json_io.hpp"
#include "derham/sampling.hpp"

namespace {

using derham::Chain;
using derham::Cochain;
using derham::DimensionError;
using derham::Error;
using derham::Index;
using derham::Json;
using derham::NotClosedError;
using derham::ParseError;
using derham::PolyForm;
using derham::Rational;
using derham::RationalVector;
using derham::SimplicialComplex;
using derham::UnsupportedFormSpaceError;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitError = 2;

struct Options {
  std::string input;
  std::string input_format = "text";
  std::vector<std::string> form_paths;
  std::string periods_csv;
  int dim = 0;
  unsigned long long trials = 100;
  unsigned long long seed = 1;
  bool text_output = false;
};

struct Outcome {
  Json payload = Json::object();
  std::string status = "ok";  // ok | violation
};

SimplicialComplex load_input(const Options& opt) {
  std::ifstream in(opt.input);
  if (!in) {
    throw ParseError("cannot open input file '" + opt.input + "'");
  }
  auto format = opt.input_format == "json" ? derham::ComplexFormat::json
                                           : derham::ComplexFormat::text;
  return derham::load_complex(in, format);
}

PolyForm load_form(const SimplicialComplex& k, const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open form file '" + path + "'");
  }
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError("invalid JSON in '" + path + "': " + e.what());
  }
  return derham::polyform_from_json(k, doc);
}

Outcome run_betti(const SimplicialComplex& k, const Options&) {
  Outcome out;
  auto betti = derham::betti_numbers(k);
  auto by_rank = derham::betti_numbers_by_rank(k);
  long long euler_from_betti = 0;
  for (int p = 0; p < static_cast<int>(betti.size()); ++p) {
    long long b = static_cast<long long>(betti[p]);
    euler_from_betti += (p % 2 == 0) ? b : -b;
  }
  bool consistent = betti == by_rank &&
                    euler_from_betti == k.euler_characteristic();
  out.payload = Json{{"betti", betti},
                     {"betti_by_rank", by_rank},
                     {"euler_characteristic", k.euler_characteristic()},
                     {"euler_from_betti", euler_from_betti},
                     {"consistent", consistent}};
  if (!consistent) out.status = "violation";
  return out;
}

Outcome run_stokes_check(const SimplicialComplex& k, const Options& opt) {
  Outcome out;
  derham::Rng rng(opt.seed);
  Json counterexample;
  for (int p = 0; p <= k.dim() && counterexample.is_null(); ++p) {
    for (unsigned long long trial = 0; trial < opt.trials; ++trial) {
      PolyForm w = derham::random_polyform(k, p, rng);
      Cochain lhs = derham::derham_map(k, derham::exterior_derivative(w));
      Cochain rhs = derham::coboundary(k, derham::derham_map(k, w));
      if (!(lhs == rhs)) {
        counterexample = Json{{"degree", p},
                              {"trial", trial},
                              {"form", derham::polyform_to_json(w)}};
        break;
      }
    }
  }
  std::string result = "all passed";
  if (opt.trials == 0) result = "vacuous pass: zero trials requested";
  if (!counterexample.is_null()) result = "counterexample found";
  out.payload = Json{{"trials", opt.trials},
                     {"seed", opt.seed},
                     {"checked_degrees", k.dim() + 1},
                     {"result", result},
                     {"counterexample", counterexample}};
  if (!counterexample.is_null()) out.status = "violation";
  return out;
}

Outcome run_periods(const SimplicialComplex& k, const Options& opt) {
  Outcome out;
  PolyForm w = load_form(k, opt.form_paths.at(0));
  derham::PeriodReport report = derham::periods(k, w);
  out.payload = Json{{"form_degree", report.dim},
                     {"homology", derham::homology_to_json(k, report.homology)},
                     {"periods", derham::rational_vector_to_json(report.periods)}};
  return out;
}

Outcome run_primitive(const SimplicialComplex& k, const Options& opt) {
  Outcome out;
  PolyForm w = load_form(k, opt.form_paths.at(0));
  derham::PeriodReport report = derham::periods(k, w);
  auto primitive = derham::find_primitive(k, w);
  out.payload = Json{{"form_degree", report.dim},
                     {"homology", derham::homology_to_json(k, report.homology)},
                     {"periods", derham::rational_vector_to_json(report.periods)}};
  if (primitive) {
    bool verified = derham::exterior_derivative(*primitive) == w;
    out.payload["primitive"] = derham::polyform_to_json(*primitive);
    out.payload["verified"] = verified;
    if (!verified) out.status = "violation";
  } else {
    out.payload["primitive"] = nullptr;
    out.payload["reason"] = "some period is nonzero";
  }
  return out;
}

Outcome run_realize(const SimplicialComplex& k, const Options& opt) {
  Outcome out;
  auto phi = derham::parse_rational_csv(opt.periods_csv);
  if (!phi) {
    throw ParseError("invalid period list '" + opt.periods_csv + "'");
  }
  PolyForm w = derham::realize_periods(k, opt.dim, *phi);
  derham::PeriodReport check = derham::periods(k, w);
  bool verified = check.periods == *phi;
  out.payload =
      Json{{"dim", opt.dim},
           {"requested_periods", derham::rational_vector_to_json(*phi)},
           {"form", derham::polyform_to_json(w)},
           {"realized_periods", derham::rational_vector_to_json(check.periods)},
           {"homology", derham::homology_to_json(k, check.homology)},
           {"verified", verified}};
  if (!verified) out.status = "violation";
  return out;
}

Outcome run_ring_check(const SimplicialComplex& k, const Options& opt) {
  Outcome out;
  PolyForm alpha = load_form(k, opt.form_paths.at(0));
  PolyForm beta = load_form(k, opt.form_paths.at(1));
  derham::RingCheckVerdict verdict = derham::ring_check(k, alpha, beta);
  out.payload = Json{{"alpha_degree", alpha.degree()},
                     {"beta_degree", beta.degree()},
                     {"cohomologous", verdict.cohomologous},
                     {"top_pairing_checked", verdict.top_pairing_checked}};
  if (verdict.correction) {
    out.payload["correction"] = derham::cochain_to_json(*verdict.correction);
  } else {
    out.payload["correction"] = nullptr;
  }
  if (verdict.top_pairing_checked) {
    out.payload["wedge_pairing"] = derham::rational_to_json(verdict.wedge_pairing);
    out.payload["cup_pairing"] = derham::rational_to_json(verdict.cup_pairing);
    out.payload["pairings_equal"] = verdict.pairings_equal;
  }
  bool ok = verdict.cohomologous &&
            (!verdict.top_pairing_checked || verdict.pairings_equal);
  if (!ok) out.status = "violation";
  return out;
}

void print_report(const Json& report, bool as_text, std::ostream& os) {
  if (!as_text) {
    os << report.dump(2) << "\n";
    return;
  }
  os << "command: " << report["command"].get<std::string>() << "\n";
  os << "status: " << report["exit_status"].get<std::string>() << "\n";
  if (report.contains("complex")) {
    const Json& c = report["complex"];
    os << "complex: dim " << c["dim"] << ", simplices " << c["simplex_counts"]
       << ", euler " << c["euler_characteristic"]
       << (c["is_closed_manifold"].get<bool>() ? ", closed manifold" : "")
       << (c["is_oriented"].get<bool>() ? ", oriented" : "") << "\n";
  }
  if (report.contains("error")) {
    os << "error: " << report["error"].get<std::string>() << "\n";
  }
  if (report.contains("payload")) {
    for (const auto& [key, value] : report["payload"].items()) {
      if (value.is_string()) {
        os << key << ": " << value.get<std::string>() << "\n";
      } else {
        os << key << ": " << value.dump() << "\n";
      }
    }
  }
}

int finish(const std::string& command, const SimplicialComplex* k,
           const Outcome& outcome, const Options& opt) {
  Json report{{"command", command}, {"exit_status", outcome.status}};
  if (k) report["complex"] = derham::complex_summary(*k);
  report["payload"] = outcome.payload;
  print_report(report, opt.text_output, std::cout);
  return outcome.status == "ok" ? kExitOk : kExitViolation;
}

int fail(const std::string& command, const SimplicialComplex* k,
         const std::string& status, const std::string& message, int code,
         const Options& opt, Json extra = Json::object()) {
  Json report{{"command", command}, {"exit_status", status}, {"error", message}};
  if (k) report["complex"] = derham::complex_summary(*k);
  if (!extra.empty()) report["detail"] = extra;
  print_report(report, opt.text_output, std::cout);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact de Rham calculus on triangulated manifolds"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool needs_input = true) {
    if (needs_input) {
      sub->add_option("--input", opt.input, "complex file")->required();
      sub->add_option("--format", opt.input_format,
                      "input format: text (simplex lines) or json")
          ->check(CLI::IsMember({"text", "json"}));
    }
    sub->add_flag("--text", opt.text_output, "human-readable report");
    return sub;
  };

  CLI::App* betti = add_common(
      app.add_subcommand("betti", "Betti numbers and Euler characteristic"));
  (void)betti;

  CLI::App* stokes = add_common(app.add_subcommand(
      "stokes-check", "verify the de Rham map intertwines d and delta on "
                      "random forms"));
  stokes->add_option("--trials", opt.trials, "random forms per degree");
  stokes->add_option("--seed", opt.seed, "random seed");

  CLI::App* periods_cmd = add_common(
      app.add_subcommand("periods", "periods of a closed form"));
  periods_cmd->add_option("--form", opt.form_paths, "form JSON file")
      ->expected(1)
      ->required();

  CLI::App* primitive = add_common(app.add_subcommand(
      "primitive", "find a primitive of a closed form, or the obstructing "
                   "period"));
  primitive->add_option("--form", opt.form_paths, "form JSON file")
      ->expected(1)
      ->required();

  CLI::App* realize = add_common(app.add_subcommand(
      "realize", "construct a closed form with prescribed periods"));
  realize->add_option("--dim", opt.dim, "form degree")->required();
  realize
      ->add_option("--periods", opt.periods_csv,
                   "comma-separated rationals, e.g. 3,-2,1/2")
      ->required();

  CLI::App* ring = add_common(app.add_subcommand(
      "ring-check", "compare wedge and cup products through the de Rham "
                    "map"));
  ring->add_option("--form", opt.form_paths,
                   "two form JSON files (give --form twice)")
      ->expected(2)
      ->required();

  CLI::App* fixture = app.add_subcommand(
      "fixture", "print a canonical complex in the text input format");
  std::string fixture_name;
  int fixture_size = 0;
  fixture->add_option("--name", fixture_name,
                      "circle | sphere2 | torus | torus7 | projective_plane "
                      "| klein_bottle | interval")
      ->required();
  fixture->add_option("--size", fixture_size,
                      "vertex/edge count for circle and interval");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();

  if (sub == fixture) {
    auto name = derham::canonical_name_from_string(fixture_name);
    if (!name) {
      return fail(command, nullptr, "error",
                  "unknown fixture '" + fixture_name + "'", kExitError, opt);
    }
    try {
      std::cout << derham::to_text_format(
          derham::canonical_complex(*name, fixture_size));
    } catch (const Error& e) {
      return fail(command, nullptr, "error", e.what(), kExitError, opt);
    }
    return kExitOk;
  }

  std::optional<SimplicialComplex> complex;
  try {
    complex = load_input(opt);
  } catch (const Error& e) {
    return fail(command, nullptr, "error", e.what(), kExitError, opt);
  }

  try {
    Outcome outcome;
    if (command == "betti") {
      outcome = run_betti(*complex, opt);
    } else if (command == "stokes-check") {
      outcome = run_stokes_check(*complex, opt);
    } else if (command == "periods") {
      outcome = run_periods(*complex, opt);
    } else if (command == "primitive") {
      outcome = run_primitive(*complex, opt);
    } else if (command == "realize") {
      outcome = run_realize(*complex, opt);
    } else {
      outcome = run_ring_check(*complex, opt);
    }
    return finish(command, &*complex, outcome, opt);
  } catch (const NotClosedError& e) {
    return fail(command, &*complex, "violation", e.what(), kExitViolation, opt,
                Json{{"differential", derham::polyform_to_json(e.differential())}});
  } catch (const UnsupportedFormSpaceError& e) {
    return fail(command, &*complex, "error", e.what(), kExitError, opt);
  } catch (const Error& e) {
    return fail(command, &*complex, "error", e.what(), kExitError, opt);
  }
}
