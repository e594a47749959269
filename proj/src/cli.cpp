#include "germkit/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <memory>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include "germkit/coarse.hpp"
#include "germkit/error.hpp"
#include "germkit/germ.hpp"
#include "germkit/io.hpp"
#include "germkit/stone.hpp"

namespace germkit::cli {

using nlohmann::ordered_json;

Caps caps_from_environment() {
  Caps caps;
  if (const char* v = std::getenv("GERMKIT_CAP_ELEMENTS")) {
    try {
      caps.elements = std::stoul(v);
    } catch (const std::exception&) {
      throw InputError(std::string("GERMKIT_CAP_ELEMENTS is not a number: ") + v);
    }
  }
  return caps;
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw Error("SHA-256 computation failed");
  std::ostringstream ss;
  for (unsigned int i = 0; i < len; ++i)
    ss << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return ss.str();
}

bool RunReport::passed() const {
  for (const auto& s : sections)
    if (!s.passed())
      return false;
  return !sections.empty();
}

void RunReport::render(std::ostream& os, bool with_timings) const {
  std::size_t total = 0, failed = 0;
  for (const auto& s : sections)
    for (const auto& c : s.checks()) {
      ++total;
      failed += !c.passed;
    }
  os << kToolVersion << "\n";
  os << "command: " << command << "\n";
  os << "input: sha256:" << input_digest << " (" << input_bytes << " bytes)\n";
  os << "elements: " << elements << "\n";
  if (!atoms.empty()) {
    os << "atoms:";
    for (std::size_t i = 0; i < atoms.size(); ++i)
      os << (i ? ", " : " ") << atoms[i];
    os << " (" << atoms.size() << " characters)\n";
  }
  os << "\n";
  for (const auto& s : sections) {
    s.render(os);
    os << "\n";
  }
  os << "result: " << (passed() ? "PASS" : "FAIL") << " (" << total - failed << "/" << total << " checks passed)\n";
  if (with_timings) {
    os << "\n[timings]\n";
    for (const auto& [phase, ms] : timings_ms)
      os << "  " << phase << ": " << std::fixed << std::setprecision(3) << ms << " ms\n";
  }
}

ordered_json RunReport::to_json(bool with_timings) const {
  ordered_json j;
  j["tool"] = kToolVersion;
  j["command"] = command;
  j["input_sha256"] = input_digest;
  j["input_bytes"] = input_bytes;
  j["elements"] = elements;
  if (!atoms.empty())
    j["character_space"] = ordered_json{{"atoms", atoms}, {"characters", atoms.size()}};
  j["passed"] = passed();
  auto arr = ordered_json::array();
  for (const auto& s : sections)
    arr.push_back(s.to_json());
  j["sections"] = std::move(arr);
  if (with_timings) {
    ordered_json t;
    for (const auto& [phase, ms] : timings_ms)
      t[phase] = ms;
    j["timings_ms"] = std::move(t);
  }
  return j;
}

namespace {

class PhaseTimer {
public:
  PhaseTimer(RunReport& r, std::string phase)
      : r_(r), phase_(std::move(phase)), start_(std::chrono::steady_clock::now()) {}
  ~PhaseTimer() {
    const auto d = std::chrono::steady_clock::now() - start_;
    r_.timings_ms.emplace_back(phase_, std::chrono::duration<double, std::milli>(d).count());
  }

private:
  RunReport& r_;
  std::string phase_;
  std::chrono::steady_clock::time_point start_;
};

Report failed_section(const std::string& title, const std::string& check, const std::string& witness) {
  Report r(title);
  CheckBuilder c(check);
  c.fail(witness);
  r.add(std::move(c).finish());
  return r;
}

bool wants(Suite s, Suite part) { return s == Suite::kAll || s == part; }

} // namespace

RunReport verify_monoid_bytes(const std::string& bytes, const std::string& command, Suite suite, const Caps& caps) {
  RunReport run;
  run.command = command;
  run.input_digest = sha256_hex(bytes);
  run.input_bytes = bytes.size();

  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(bytes);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("input is not JSON: ") + e.what());
  }

  std::optional<FiniteInverseMonoid> monoid;
  {
    PhaseTimer t(run, "load");
    try {
      monoid.emplace(monoid_from_json(doc, caps.elements, caps.points));
    } catch (const StructureError& e) {
      run.sections.push_back(failed_section("Boolean inverse monoid axioms", "finite inverse monoid laws", e.what()));
      return run;
    }
  }
  run.elements = monoid->size();

  bool boolean = true;
  {
    PhaseTimer t(run, "axioms");
    Report axioms = verify_boolean_inverse_monoid(*monoid);
    boolean = axioms.passed();
    if (wants(suite, Suite::kAxioms))
      run.sections.push_back(std::move(axioms));
  }
  if (!wants(suite, Suite::kLemmas) && !wants(suite, Suite::kRoundtrip))
    return run;
  if (!boolean) {
    run.sections.push_back(failed_section("germ groupoid", "input is a Boolean inverse monoid",
                                          "axiom suite failed; germ construction skipped"));
    return run;
  }

  auto s = std::make_shared<const BooleanInverseMonoid>(std::move(*monoid));
  std::optional<GermGroupoid> g;
  {
    PhaseTimer t(run, "groupoid");
    try {
      g.emplace(GermGroupoid::build(s));
      for (const auto& x : g->characters().characters())
        run.atoms.push_back(s->name(x.atom));
    } catch (const StructureError& e) {
      run.sections.push_back(failed_section("germ groupoid", "germ groupoid construction", e.what()));
      return run;
    }
  }
  if (wants(suite, Suite::kLemmas)) {
    PhaseTimer t(run, "lemmas");
    run.sections.push_back(verify_character_space(g->characters()));
    run.sections.push_back(verify_intersection_lemma(*g));
    run.sections.push_back(verify_ample_structure(*g));
    run.sections.push_back(verify_germ_properties(*g));
  }
  if (wants(suite, Suite::kRoundtrip)) {
    PhaseTimer t(run, "roundtrip");
    run.sections.push_back(verify_epsilon_isomorphism(*g, caps.units, caps.elements));
    run.sections.push_back(verify_bisection_monoid(*g, caps.units, caps.elements));
  }
  return run;
}

namespace {

template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const SizeError& e) {
    err << "error: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const StructureError& e) {
    err << "error: " << e.what() << "\n";
    return kVerificationFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

} // namespace

int cmd_gen_symmetric(std::size_t n, const std::string& out_path, const Caps& caps, std::ostream& err) {
  return guarded(err, [&] {
    const auto m = symmetric_inverse_monoid(PointSet(n), caps.points);
    if (m.monoid.size() > caps.elements)
      throw SizeError("I(" + std::to_string(n) + ") exceeds the element cap");
    write_file(out_path, dump(monoid_to_json(m.monoid)));
    return int(kPass);
  });
}

int cmd_gen_coarse(const std::string& space_path, const std::string& out_path, const Caps& caps, std::ostream& err) {
  return guarded(err, [&] {
    const auto space = coarse_space_from_json(read_json_file(space_path));
    const auto t = partial_translations(space, caps.points, caps.elements);
    write_file(out_path, dump(monoid_to_json(t.monoid)));
    return int(kPass);
  });
}

int cmd_verify(const std::string& monoid_path,
               Suite suite,
               const std::optional<std::string>& json_report,
               bool timings,
               const Caps& caps,
               const std::string& command,
               std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&] {
    const RunReport run = verify_monoid_bytes(read_file(monoid_path), command, suite, caps);
    run.render(out, timings);
    if (json_report)
      write_file(*json_report, dump(run.to_json(timings)));
    return int(run.passed() ? kPass : kVerificationFailed);
  });
}

int cmd_export(const std::string& monoid_path,
               const std::string& format,
               const std::string& out_path,
               const Caps& caps,
               std::ostream& err) {
  return guarded(err, [&] {
    if (format != "dot" && format != "json")
      throw InputError("unknown export format '" + format + "'");
    auto monoid = monoid_from_json(read_json_file(monoid_path), caps.elements, caps.points);
    auto s = std::make_shared<const BooleanInverseMonoid>(std::move(monoid));
    const auto g = GermGroupoid::build(s);
    std::ostringstream ss;
    if (format == "dot")
      write_dot(ss, g);
    else
      ss << dump(groupoid_to_json(g));
    write_file(out_path, ss.str());
    return int(kPass);
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Caps caps;
  try {
    caps = caps_from_environment();
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  CLI::App app{"Germ groupoids of finite Boolean inverse monoids"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);
  app.add_option("--cap-elements", caps.elements, "maximum number of monoid elements");
  app.add_option("--cap-units", caps.units, "maximum number of units for bisection enumeration");
  app.add_option("--cap-points", caps.points, "maximum number of points for I(X) and coarse spaces");

  auto* gen = app.add_subcommand("gen", "generate a monoid file");
  gen->require_subcommand(1);
  std::size_t n = 0;
  std::string space_path, out_path;
  auto* gen_sym = gen->add_subcommand("symmetric", "I(X) on N points");
  gen_sym->add_option("N", n)->required();
  gen_sym->add_option("OUT", out_path)->required();
  auto* gen_coarse = gen->add_subcommand("coarse", "partial translations of a coarse space");
  gen_coarse->add_option("SPACE", space_path)->required();
  gen_coarse->add_option("OUT", out_path)->required();

  std::string monoid_path;
  std::string suite_name = "all";
  std::string json_report;
  bool timings = false;
  auto* verify = app.add_subcommand("verify", "run verification suites on a monoid file");
  verify->add_option("MONOID", monoid_path)->required();
  verify->add_option("--suite", suite_name)->check(CLI::IsMember({"axioms", "lemmas", "roundtrip", "all"}));
  verify->add_option("--json-report", json_report, "also write the report as JSON");
  verify->add_flag("--timings", timings, "append per-phase timings");

  std::string format = "dot";
  std::string export_out;
  auto* exp = app.add_subcommand("export", "build G(S) and write it as DOT or JSON");
  exp->add_option("MONOID", monoid_path)->required();
  exp->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));
  exp->add_option("OUT", export_out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  if (gen_sym->parsed())
    return cmd_gen_symmetric(n, out_path, caps, err);
  if (gen_coarse->parsed())
    return cmd_gen_coarse(space_path, out_path, caps, err);
  if (verify->parsed()) {
    const Suite suite = suite_name == "axioms"  ? Suite::kAxioms
                        : suite_name == "lemmas" ? Suite::kLemmas
                        : suite_name == "roundtrip" ? Suite::kRoundtrip
                                                    : Suite::kAll;
    std::string command = "verify " + monoid_path + " --suite " + suite_name;
    std::optional<std::string> jr;
    if (!json_report.empty())
      jr = json_report;
    return cmd_verify(monoid_path, suite, jr, timings, caps, command, out, err);
  }
  if (exp->parsed())
    return cmd_export(monoid_path, format, export_out, caps, err);
  return kInputError;
}

} // namespace germkit::cli
