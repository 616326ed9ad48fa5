// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "wreath/cube.hpp"
#include "wreath/io.hpp"
#include "wreath/oracle.hpp"
#include "wreath/parallel.hpp"
#include "wreath/spinchain.hpp"

using namespace wreath;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && pass) {
      pass = false;
      detail = what;
    }
  }
};

std::string first_failure(const Report& r) {
  const auto f = r.failures();
  return f.empty() ? std::string() : f.front().name + " " + f.front().witness;
}

WdlNObject spin_chain(const std::string& name, std::size_t n, bool parity = false) {
  return build_spin_chain({builtin_bialgebra(name), n, parity});
}

// Laws of the zoo: lambda on H (x) Hhat and lambda_hat on Hhat (x) H.
std::vector<std::pair<std::string, WeakDistributiveLaw>> zoo_laws() {
  std::vector<std::pair<std::string, WeakDistributiveLaw>> out;
  for (const WeakBialgebra& h : example_zoo()) {
    const DualPair p = dual(h);
    const Demimonad H = Demimonad::from_algebra(p.h.algebra);
    const Demimonad Hh = Demimonad::from_algebra(p.hhat.algebra);
    out.push_back({h.name + " lambda", {H, Hh, canonical_lambda(p)}});
    out.push_back({h.name + " lambda_hat", {Hh, H, canonical_lambda_hat(p)}});
  }
  return out;
}

Outcome criterion1() {
  Outcome o;
  const auto t0 = Clock::now();
  std::size_t good = 0;
  for (const char* name : {"f", "z2", "z3", "m1", "m2", "m3"}) {
    const Report r = check_weak_bialgebra(builtin_bialgebra(name));
    o.require(r.ok(), std::string(name) + " fails " + first_failure(r));
    good += r.ok();
  }
  const auto mutants = mutated_bialgebras();
  o.require(mutants.size() == 5, "expected 5 mutants");
  std::size_t caught = 0;
  for (const WeakBialgebra& m : mutants) {
    const Report r = check_weak_bialgebra(m);
    const auto f = r.failures();
    const bool named = !f.empty() && !f.front().name.empty() && !f.front().witness.empty();
    o.require(named, m.name + " is not rejected with a witness");
    caught += named;
  }
  const double t = seconds_since(t0);
  o.require(t < 10.0, "runtime above 10 s");
  if (o.pass) {
    o.detail = std::to_string(good) + "/6 zoo members pass, " + std::to_string(caught) +
               "/5 mutants fail with witnesses";
  }
  return o;
}

Outcome criterion2() {
  Outcome o;
  std::size_t laws = 0;
  for (const auto& [name, w] : zoo_laws()) {
    const Report r = check_wdl(w);
    for (const char* diagram : {"mul_t compatibility", "unit_t compatibility",
                                "mul_s compatibility", "unit_s compatibility",
                                "lambda_bar paths agree"}) {
      const CheckResult* c = r.find(diagram);
      o.require(c && c->pass, name + ": " + diagram);
    }
    ++laws;
  }
  std::size_t strict_count = 0;
  for (const WeakBialgebra& h : example_zoo()) {
    const bool strict = strict_unit(h) && strict_counit(h);
    const DualPair p = dual(h);
    const bool id = lambda_bar({Demimonad::from_algebra(p.h.algebra),
                                Demimonad::from_algebra(p.hhat.algebra), canonical_lambda(p)})
                        .is_identity();
    const bool id_hat = lambda_bar({Demimonad::from_algebra(p.hhat.algebra),
                                    Demimonad::from_algebra(p.h.algebra),
                                    canonical_lambda_hat(p)})
                            .is_identity();
    o.require(strict == id && strict == id_hat, h.name + ": strictness and lambda_bar = id disagree");
    strict_count += strict;
  }
  if (o.pass) {
    o.detail = std::to_string(laws) + " laws pass, lambda_bar = id exactly for the " +
               std::to_string(strict_count) + " strict members";
  }
  return o;
}

Outcome criterion3() {
  Outcome o;
  std::size_t laws = 0;
  auto law_identities = [&](const std::string& name, const WeakDistributiveLaw& w) {
    if (!check_wdl(w).ok()) return;
    const Report r = check_wdl_identities(w);
    o.require(r.ok(), name + ": " + first_failure(r));
    ++laws;
  };
  for (const auto& [name, w] : zoo_laws()) law_identities(name, w);
  std::vector<std::pair<std::string, WdlNObject>> objects;
  for (const char* name : {"z2", "z3", "m2", "m3"}) {
    for (bool parity : {false, true}) {
      objects.push_back({std::string(name) + (parity ? " chain n=2 (dual first)" : " chain n=2"),
                         spin_chain(name, 2, parity)});
    }
  }
  const WdlNObject m2_3 = spin_chain("m2", 3);
  objects.push_back({"m2 chain sites 1..3", m2_3.restrict({1, 2, 3})});
  objects.push_back({"m2 chain sites 0,1,3", m2_3.restrict({0, 1, 3})});
  const Demimonad z2 = Demimonad::from_algebra(builtin_bialgebra("z2").algebra);
  objects.push_back({"three z2 with flips", flip_object({z2, z2, z2})});
  std::size_t validated = 0;
  for (const auto& [name, obj] : objects) {
    const Report v = validate_object(obj);
    o.require(v.ok(), name + " does not validate: " + first_failure(v));
    if (!v.ok()) continue;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = i + 1; j < 3; ++j) {
        law_identities(name + " lambda(" + std::to_string(i) + "," + std::to_string(j) + ")",
                       obj.pair(i, j));
      }
    }
    const Report r = check_arrow_identities(obj);
    o.require(r.ok(), name + ": " + first_failure(r));
    ++validated;
  }
  if (o.pass) {
    o.detail = std::to_string(laws) + " laws, " + std::to_string(validated) +
               " three-monad objects with all four lambda_bar_012 expressions equal";
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  const auto t0 = Clock::now();
  std::string parts;
  for (std::size_t n : {2, 3}) {
    const WdlNObject obj = spin_chain("m2", n);
    const Report r = check_associativity(obj);
    const std::size_t expect = n == 2 ? 2 : 6;
    o.require(r.ok(), "n=" + std::to_string(n) + ": " + first_failure(r));
    o.require(*r.value("composites") == std::to_string(expect) && *r.value("exhaustive") == "true",
              "n=" + std::to_string(n) + ": not every composite was compared");
    parts += (parts.empty() ? "" : ", ") + std::string("dim ") +
             std::to_string(obj.carrier().dim()) + ": " + *r.value("composites") + "/" +
             std::to_string(expect) + " composites equal";
  }
  const double t = seconds_since(t0);
  o.require(t < 300.0, "runtime above 5 min");
  if (o.pass) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", t);
    o.detail = parts + " (" + buf + " s)";
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::size_t cases = 0;
  auto run = [&](const char* name, std::size_t max_n) {
    for (std::size_t n = 1; n <= max_n; ++n) {
      for (bool parity : {false, true}) {
        const SpinChainSpec spec{builtin_bialgebra(name), n, parity};
        const bool eq = explicit_chain_idempotent_unchecked(spec) ==
                        iterated_idempotent(build_spin_chain(spec));
        o.require(eq, std::string(name) + " n=" + std::to_string(n));
        ++cases;
      }
    }
  };
  run("z2", 4);
  run("m2", 3);
  if (o.pass) o.detail = std::to_string(cases) + " chains, both site conventions";
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::string dims;
  const WeakBialgebra z2 = builtin_bialgebra("z2");
  std::size_t expect = 2;
  for (std::size_t n = 1; n <= 3; ++n) {
    expect *= 2;
    const std::size_t d = observable_algebra({z2, n, false}).dim;
    o.require(d == expect, "z2 n=" + std::to_string(n) + " has dim " + std::to_string(d));
    dims += (dims.empty() ? "" : ", ") + std::to_string(d);
  }
  for (const char* name : {"z3", "s3"}) {
    const WeakBialgebra h = builtin_bialgebra(name);
    const std::size_t d = observable_algebra({h, 1, false}).dim;
    o.require(d == h.dim() * h.dim(), std::string(name) + " n=1");
  }
  if (o.pass) o.detail = "F[Z/2] dims " + dims + ", F[Z/3] and F[S3] at n=1";
  return o;
}

std::map<std::size_t, std::size_t> golden_rows(const std::string& name) {
  std::map<std::size_t, std::size_t> rows;
  std::ifstream in(WREATH_DATA_DIR "/golden_dims.tsv");
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string key;
    std::size_t n = 0;
    std::size_t dim = 0;
    if ((ls >> key >> n >> dim) && key == name) rows[n] = dim;
  }
  return rows;
}

Outcome criterion7() {
  Outcome o;
  const WeakBialgebra m2 = builtin_bialgebra("m2");
  const auto golden = golden_rows("m2");
  std::string dims;
  for (std::size_t n = 1; n <= 3; ++n) {
    const std::size_t main_route = observable_algebra({m2, n, false}).dim;
    const std::size_t oracle_route = oracle::chain_dimension(m2, n);
    o.require(main_route == oracle_route, "n=" + std::to_string(n) + ": " +
                                              std::to_string(main_route) + " vs oracle " +
                                              std::to_string(oracle_route));
    const auto it = golden.find(n);
    o.require(it != golden.end() && it->second == oracle_route,
              "n=" + std::to_string(n) + " disagrees with the golden table");
    dims += (dims.empty() ? "" : ", ") + std::to_string(main_route);
  }
  if (o.pass) o.detail = "M2 dims " + dims + " from both routes and the golden table";
  return o;
}

Outcome criterion8() {
  Outcome o;
  const WdlNObject obj = spin_chain("m2", 2);
  const MonadCube c = build_cube(obj);
  const Report r = verify_cube(c);
  std::size_t faces = 0;
  std::size_t faces_ok = 0;
  for (const CheckResult& k : r.checks()) {
    if (k.name.rfind("face ", 0) == 0) {
      ++faces;
      faces_ok += k.pass;
    }
  }
  std::size_t edges = 0;
  std::size_t edges_ok = 0;
  for (Subset p = 0; p <= c.full(); ++p) {
    for (std::size_t i = 0; i < c.size; ++i) {
      if (p & (Subset{1} << i)) continue;
      ++edges;
      edges_ok += check_monad_morphism(edge_morphism(c, p, i)).ok();
    }
  }
  o.require(faces == 6 && faces_ok == 6, std::to_string(faces_ok) + "/" + std::to_string(faces) +
                                             " faces commute");
  o.require(edges == 12 && edges_ok == 12, std::to_string(edges_ok) + "/" +
                                               std::to_string(edges) + " edges");
  o.require(r.ok(), "cube: " + first_failure(r));

  const FactorizationData f = canonical_factorization(obj);
  const Report fr = nary_factorization_check(f);
  o.require(fr.ok(), "factorization: " + first_failure(fr));
  bool hexagons = false;
  for (const CheckResult& k : fr.checks()) {
    if (k.name.find("hexagon") != std::string::npos) hexagons = true;
  }
  o.require(hexagons, "no hexagon checks were run");

  std::size_t corrupted = 0;
  for (const auto& [key, io] : f.iota) {
    FactorizationData bad = f;
    bad.iota[key] = io.scaled(Scalar(2));
    const Report br = nary_factorization_check(bad);
    bool fails_b = false;
    for (const CheckResult& k : br.failures()) fails_b |= k.name.rfind("(b)", 0) == 0;
    o.require(fails_b, "corrupted iota_" + subset_string(key.first) + "," +
                           subset_string(key.second) + " passes (b)");
    ++corrupted;
  }
  if (o.pass) {
    o.detail = "6/6 faces, 12/12 edges, (a)(b)(c) pass, " + std::to_string(corrupted) + "/" +
               std::to_string(corrupted) + " corrupted sections fail (b)";
  }
  return o;
}

Outcome criterion9() {
  Outcome o;
  std::size_t laws = 0;
  for (const auto& [name, w] : zoo_laws()) {
    const Report r = wreath_round_trip(w);
    const CheckResult* c = r.find("lambda recovered");
    o.require(r.ok() && c && c->pass, name + ": " + first_failure(r));
    ++laws;
  }
  if (o.pass) o.detail = std::to_string(laws) + " zoo laws recovered exactly";
  return o;
}

// Report texts for a spread of computations that use the parallel kernels.
std::string report_bundle() {
  std::string out;
  out += check_weak_bialgebra(builtin_bialgebra("m3")).to_text();
  const WdlNObject m2_2 = spin_chain("m2", 2);
  out += validate_object(m2_2).to_text();
  out += check_arrow_identities(m2_2).to_text();
  out += verify_cube(build_cube(m2_2)).to_text();
  out += nary_factorization_check(canonical_factorization(m2_2)).to_text();
  const WdlNObject m2_3 = spin_chain("m2", 3);
  out += check_associativity(m2_3).to_text();
  out += check_iterated_idempotent(m2_3).to_text();
  for (const auto& [name, w] : zoo_laws()) out += wreath_round_trip(w).to_text();
  const Algebra a = observable_algebra({builtin_bialgebra("m3"), 2, false}).alg;
  out += format_map_file(a.mul);
  return out;
}

Outcome criterion10() {
  Outcome o;
  const unsigned saved = threads();
  std::vector<std::string> runs;
  for (unsigned t : {1u, 4u, 1u, 4u}) {
    set_threads(t);
    runs.push_back(report_bundle());
  }
  set_threads(saved);
  for (std::size_t i = 1; i < runs.size(); ++i) {
    o.require(runs[i] == runs[0], "run " + std::to_string(i) + " differs from run 0");
  }
  if (o.pass) {
    o.detail = "4 runs with 1 and 4 threads, " + std::to_string(runs[0].size()) +
               " bytes identical";
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"axiom suites", criterion1},
      {"weak distributive law suite", criterion2},
      {"derived identities", criterion3},
      {"associativity of iterated wreaths", criterion4},
      {"explicit chain idempotents", criterion5},
      {"strict dimension law", criterion6},
      {"golden weak dimensions", criterion7},
      {"cube and factorization", criterion8},
      {"binary round trip", criterion9},
      {"determinism", criterion10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s criterion %zu: %s -- %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed ? 1 : 0;
}
