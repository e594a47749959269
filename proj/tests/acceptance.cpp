// Acceptance run: one PASS/FAIL line per criterion.
// usage: acceptance GERMKIT_BINARY WORK_DIR

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "germkit/coarse.hpp"
#include "germkit/error.hpp"
#include "germkit/germ.hpp"
#include "germkit/io.hpp"
#include "germkit/partial_bijection.hpp"
#include "oracles.hpp"

using namespace germkit;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Line {
  int id;
  std::string title;
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& why) {
    if (!cond && ok) {
      ok = false;
      detail.str("");
      detail << why;
    }
  }
};

int failures = 0;

void emit(Line& l) {
  std::cout << (l.ok ? "PASS" : "FAIL") << "  [" << l.id << "] " << l.title;
  const std::string d = l.detail.str();
  if (!d.empty())
    std::cout << " : " << d;
  std::cout << std::endl;
  failures += !l.ok;
}

template <class Body>
void criterion(int id, const std::string& title, Body&& body) {
  Line l{id, title};
  try {
    body(l);
  } catch (const std::exception& e) {
    l.require(false, std::string("exception: ") + e.what());
  }
  emit(l);
}

std::shared_ptr<const BooleanInverseMonoid> symmetric(std::size_t n) {
  return oracle::boolean(symmetric_inverse_monoid(PointSet(n)).monoid);
}

std::string first_failure(const Report& r) {
  const auto* f = r.first_failure();
  return f ? r.title() + ": " + f->name + " at " + f->witness : "";
}

struct Proc {
  int code;
  std::string out;
};

Proc run_capture(const std::string& cmd) {
  Proc p{-1, {}};
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe)
    return p;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0)
    p.out.append(buf, got);
  const int status = ::pclose(pipe);
  p.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return p;
}

} // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance GERMKIT_BINARY WORK_DIR\n";
    return 3;
  }
  const std::string binary = argv[1];
  const fs::path work = argv[2];
  fs::create_directories(work);

  criterion(1, "|I(n)| = sum_k C(n,k)^2 k! for n = 1..4 within time limits", [](Line& l) {
    const std::size_t expected[] = {2, 7, 34, 209};
    for (std::size_t n = 1; n <= 4; ++n) {
      const auto t0 = Clock::now();
      const auto m = symmetric_inverse_monoid(PointSet(n));
      const double secs = seconds_since(t0);
      const std::size_t oracle_size = oracle::symmetric_monoid_size(n);
      l.require(oracle_size == expected[n - 1], "oracle disagrees with 2, 7, 34, 209 at n = " + std::to_string(n));
      l.require(m.monoid.size() == oracle_size, "|I(" + std::to_string(n) + ")| = " + std::to_string(m.monoid.size()));
      l.require(secs < (n <= 3 ? 1.0 : 10.0), "n = " + std::to_string(n) + " took " + std::to_string(secs) + " s");
      if (l.ok)
        l.detail << (n > 1 ? ", " : "") << m.monoid.size();
    }
  });

  criterion(2, "Boolean axioms on I(n), n <= 3, and on T_E for every coarse space on <= 4 points; chain rejected",
            [](Line& l) {
              for (std::size_t n = 1; n <= 3; ++n) {
                const Report r = verify_boolean_inverse_monoid(symmetric_inverse_monoid(PointSet(n)).monoid);
                l.require(r.passed(), "I(" + std::to_string(n) + ") " + first_failure(r));
              }
              std::size_t spaces = 0;
              for (std::size_t n = 1; n <= 4; ++n)
                for (const auto& c : all_coarse_spaces(PointSet(n))) {
                  const Report r = verify_boolean_inverse_monoid(partial_translations(c).monoid);
                  l.require(r.passed(), "T_E on " + std::to_string(n) + " points: " + first_failure(r));
                  ++spaces;
                }
              const Report chain = verify_boolean_inverse_monoid(oracle::chain_monoid());
              const auto* rc = chain.find("relative complements exist and are unique");
              l.require(!chain.passed() && rc && !rc->passed && !rc->witness.empty(),
                        "chain monoid not rejected by complement uniqueness");
              if (l.ok)
                l.detail << spaces << " coarse spaces; chain witness \"" << rc->witness << "\"";
            });

  criterion(3, "intersection lemma on I(2) and I(3)", [](Line& l) {
    for (std::size_t n : {2, 3}) {
      const auto g = GermGroupoid::build(symmetric(n));
      const Report r = verify_intersection_lemma(g);
      l.require(r.passed(), first_failure(r));
      const std::size_t pairs = g.monoid().size() * g.monoid().size();
      for (const auto& c : r.checks())
        if (c.name.rfind("(b)", 0) == 0 || c.name.rfind("(d)", 0) == 0)
          l.require(c.checked == pairs, c.name + " covered " + std::to_string(c.checked) + " pairs");
      if (l.ok)
        l.detail << (n == 2 ? "" : ", ") << pairs << " pairs";
    }
    l.detail << ", 0 failures";
  });

  criterion(4, "G(I(n)) is isomorphic to the pair groupoid, n <= 4", [](Line& l) {
    for (std::size_t n = 1; n <= 4; ++n) {
      const auto g = GermGroupoid::build(symmetric(n));
      const auto& G = g.groupoid();
      l.require(G.arrow_count() == n * n && G.unit_count() == n,
                "n = " + std::to_string(n) + ": " + std::to_string(G.arrow_count()) + " arrows, " +
                    std::to_string(G.unit_count()) + " units");
      l.require(groupoid_isomorphic(G, pair_groupoid(n)), "no isomorphism found for n = " + std::to_string(n));
      if (l.ok)
        l.detail << (n > 1 ? ", " : "") << G.arrow_count() << "/" << G.unit_count();
    }
  });

  std::vector<std::pair<std::string, GermGroupoid>> round_trip;
  criterion(5, "epsilon is an isomorphism for I(2), I(3) and the 3-point two-component T_E", [&](Line& l) {
    const auto t0 = Clock::now();
    round_trip.emplace_back("I(2)", GermGroupoid::build(symmetric(2)));
    round_trip.emplace_back("I(3)", GermGroupoid::build(symmetric(3)));
    round_trip.emplace_back("T_E", coarse_groupoid(CoarseSpace(PointSet(3), {{0, 1}})));
    const std::size_t expected[] = {7, 34, 14};
    for (std::size_t i = 0; i < round_trip.size(); ++i) {
      const auto& [name, g] = round_trip[i];
      const Report r = verify_epsilon_isomorphism(g);
      l.require(r.passed(), name + " " + first_failure(r));
      const std::size_t bis = all_bisections(g.groupoid()).size();
      l.require(g.monoid().size() == expected[i] && bis == expected[i],
                name + ": |S| = " + std::to_string(g.monoid().size()) + ", |Gamma_c| = " + std::to_string(bis));
      if (l.ok)
        l.detail << (i ? ", " : "") << g.monoid().size() << " = " << bis;
    }
    const double secs = seconds_since(t0);
    l.require(secs < 30.0, "took " + std::to_string(secs) + " s");
    if (l.ok)
      l.detail << " in " << secs << " s";
  });

  criterion(6, "Gamma_c(G(S)) built from bisections passes the Boolean axioms", [&](Line& l) {
    l.require(round_trip.size() == 3, "round-trip inputs missing");
    for (const auto& [name, g] : round_trip) {
      const BisectionMonoid bm = bisection_monoid(g.groupoid());
      const Report r = verify_boolean_inverse_monoid(bm.monoid);
      l.require(r.passed(), name + " " + first_failure(r));
      const Report via = verify_bisection_monoid(g);
      l.require(via.passed(), name + " " + first_failure(via));
      if (l.ok)
        l.detail << (name == "I(2)" ? "" : ", ") << name << " " << bm.monoid.size();
    }
  });

  criterion(7, "G(T_E) matches the closure entourage groupoid for every coarse space on <= 4 points", [](Line& l) {
    std::size_t spaces = 0;
    for (std::size_t n = 1; n <= 4; ++n)
      for (const auto& c : all_coarse_spaces(PointSet(n))) {
        const auto g = coarse_groupoid(c);
        l.require(groupoid_isomorphic(g.groupoid(), equivalence_groupoid(closure_entourage(c))),
                  "not isomorphic on " + std::to_string(n) + " points");
        const auto& E = g.monoid().monoid().idempotents();
        l.require(E.size() == (std::size_t(1) << n), "|E(T_E)| = " + std::to_string(E.size()));
        l.require(g.characters().size() == n, std::to_string(g.characters().size()) + " characters");
        const Report r = verify_translation_idempotents(c);
        l.require(r.passed(), first_failure(r));
        ++spaces;
      }
    if (l.ok)
      l.detail << spaces << " spaces";
  });

  criterion(8, "germ product well defined, alpha coherence and U_{phi^-1} on I(2) and I(3)", [](Line& l) {
    const char* names[] = {"germ product is independent of representatives", "alpha_{phi^-1} o alpha_phi = id on supports",
                           "U_{phi^-1} = {g^-1 : g in U_phi}"};
    for (std::size_t n : {2, 3}) {
      const auto g = GermGroupoid::build(symmetric(n));
      const Report r = verify_germ_properties(g);
      for (const char* name : names) {
        const auto* c = r.find(name);
        l.require(c && c->passed && c->checked > 0, "I(" + std::to_string(n) + ") " + name);
      }
      l.require(r.passed(), first_failure(r));
    }
  });

  criterion(9, "two verify runs on identical input give byte-identical reports", [&](Line& l) {
    const std::string in = (work / "det_i3.json").string();
    write_file(in, monoid_to_json(symmetric_inverse_monoid(PointSet(3)).monoid).dump(2) + "\n");
    Proc runs[2];
    std::string json[2];
    for (int i = 0; i < 2; ++i) {
      const std::string rep = (work / ("det_report_" + std::to_string(i) + ".json")).string();
      runs[i] = run_capture("\"" + binary + "\" verify \"" + in + "\" --suite all --json-report \"" + rep + "\"");
      l.require(runs[i].code == 0, "verify exited " + std::to_string(runs[i].code));
      json[i] = read_file(rep);
    }
    l.require(!runs[0].out.empty() && runs[0].out == runs[1].out, "text reports differ");
    l.require(json[0] == json[1], "JSON reports differ");
    if (l.ok)
      l.detail << runs[0].out.size() << " text bytes, " << json[0].size() << " JSON bytes";
  });

  std::cout << (failures ? "acceptance: FAIL" : "acceptance: PASS") << " (" << 9 - failures << "/9)" << std::endl;
  return failures ? 1 : 0;
}
