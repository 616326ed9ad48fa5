#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "wreath/cube.hpp"
#include "wreath/errors.hpp"
#include "wreath/io.hpp"
#include "wreath/oracle.hpp"
#include "wreath/parallel.hpp"
#include "wreath/spinchain.hpp"

using namespace wreath;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kPass = 0, kMathFailure = 1, kInputError = 2 };

struct Options {
  std::string field;
  bool json = false;
  bool timing = false;
  unsigned threads = 1;
  std::string regen_golden;
};

std::optional<Field> field_of(const Options& o) {
  if (o.field.empty()) return std::nullopt;
  try {
    return Field::parse(o.field);
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

std::string echo(const std::vector<std::string>& words) {
  std::string s;
  for (const auto& w : words) s += (s.empty() ? "" : " ") + w;
  return s;
}

void emit(const Options& o, const std::string& command, const std::vector<Report>& reports) {
  if (o.json) {
    json j;
    j["command"] = command;
    bool ok = true;
    json list = json::array();
    for (const Report& r : reports) {
      json jr;
      jr["title"] = r.title();
      json checks = json::array();
      for (const auto& c : r.checks()) {
        json jc;
        jc["name"] = c.name;
        jc["pass"] = c.pass;
        if (!c.pass) jc["witness"] = c.witness;
        checks.push_back(jc);
      }
      jr["checks"] = checks;
      json values = json::object();
      for (const auto& [k, v] : r.values()) values[k] = v;
      jr["values"] = values;
      jr["ok"] = r.ok();
      ok = ok && r.ok();
      list.push_back(jr);
    }
    j["reports"] = list;
    j["ok"] = ok;
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::cout << "command: " << command << "\n";
  for (const Report& r : reports) std::cout << r.to_text();
}

void emit_error(const Options& o, const std::string& command, const std::string& kind,
                const std::string& message) {
  if (o.json) {
    json j;
    j["command"] = command;
    j["error"] = kind;
    j["message"] = message;
    j["ok"] = false;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "command: " << command << "\n" << kind << ": " << message << "\n";
  }
}

int verdict(const std::vector<Report>& reports) {
  for (const Report& r : reports) {
    if (!r.ok()) return kMathFailure;
  }
  return kPass;
}

std::size_t count_passing(const Report& r, const std::string& prefix, std::size_t& total) {
  std::size_t ok = 0;
  total = 0;
  for (const auto& c : r.checks()) {
    if (c.name.rfind(prefix, 0) != 0) continue;
    ++total;
    ok += c.pass;
  }
  return ok;
}

// name -> n -> dim
using Golden = std::map<std::string, std::map<std::size_t, std::size_t>>;

Golden read_golden(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open golden table '" + path + "'");
  Golden g;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty() || line[0] == '#' || line.rfind("name\t", 0) == 0) continue;
    std::istringstream ss(line);
    std::string name;
    std::size_t n, dim;
    if (!(ss >> name >> n >> dim)) {
      throw ParseError(path + ":" + std::to_string(number) + ": malformed golden row");
    }
    g[name][n] = dim;
  }
  return g;
}

int regen_golden(const std::string& path) {
  const std::vector<std::pair<std::string, std::size_t>> rows = {
      {"z2", 1}, {"z2", 2}, {"z2", 3}, {"m2", 1}, {"m2", 2}, {"m2", 3}, {"m3", 1}, {"m3", 2}};
  std::ostringstream os;
  os << "# observable algebra dimensions from the dense rank oracle\n";
  os << "name\tn\tdim\n";
  for (const auto& [name, n] : rows) {
    os << name << "\t" << n << "\t" << oracle::chain_dimension(builtin_bialgebra(name), n) << "\n";
  }
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << os.str();
  std::cout << os.str();
  return kPass;
}

Report check_source(const std::string& path, std::string kind, std::optional<Field> field) {
  if (path.rfind("builtin:", 0) == 0) {
    const WeakBialgebra h = load_bialgebra(path, field);
    if (kind.empty() || kind == "weak-bialgebra") {
      Report r = check_weak_bialgebra(h);
      r.set("strict", strict_unit(h) && strict_counit(h));
      return r;
    }
    throw ParseError("builtin sources are weak bialgebras");
  }
  const AlgebraFile f = read_algebra_file(path, field);
  if (kind.empty()) kind = f.comul ? "weak-bialgebra" : "algebra";
  if (kind == "algebra") return check_algebra(to_algebra(f));
  if (kind == "coalgebra") return check_coalgebra(to_coalgebra(f));
  if (kind == "demimonad") {
    const Algebra a = to_algebra(f);
    return check_demimonad(Demimonad::make(a.space, a.mul, a.unit));
  }
  const WeakBialgebra h = to_weak_bialgebra(f, std::filesystem::path(path).stem().string());
  Report r = check_weak_bialgebra(h);
  if (r.ok()) r.set("strict", strict_unit(h) && strict_counit(h));
  return r;
}

Report check_file(const std::string& path, const std::string& kind, std::optional<Field> field) {
  Report r = check_source(path, kind, field);
  const Field f = field ? *field
                        : path.rfind("builtin:", 0) == 0 ? Field::rational()
                                                         : read_algebra_file(path).field;
  r.set("field", f.to_string());
  return r;
}

Demimonad load_monad(const std::string& source, std::optional<Field> field) {
  if (source.rfind("builtin:", 0) == 0) {
    return Demimonad::from_algebra(load_bialgebra(source, field).algebra);
  }
  const Algebra a = to_algebra(read_algebra_file(source, field));
  return Demimonad::make(a.space, a.mul, a.unit);
}

WeakDistributiveLaw load_law(const std::string& t, const std::string& s, const std::string& lambda,
                             std::optional<Field> field) {
  const Demimonad dt = load_monad(t, field);
  const Demimonad ds = load_monad(s, field);
  if (lambda == "flip") return flip_law(dt, ds);
  const LinMap l = read_map_file(lambda, field);
  if (l.cols() != dt.dim() * ds.dim() || l.rows() != ds.dim() * dt.dim()) {
    throw ShapeMismatch("law map has size " + std::to_string(l.rows()) + "x" +
                        std::to_string(l.cols()) + ", expected t(x)s -> s(x)t of dimension " +
                        std::to_string(dt.dim() * ds.dim()));
  }
  return {dt, ds, l.reshape(dt.space * ds.space, ds.space * dt.space)};
}

std::vector<Report> cmd_wdl(const WeakDistributiveLaw& w) {
  Report r = check_wdl(w);
  std::vector<Report> out = {r};
  if (r.ok()) {
    Report ids = check_wdl_identities(w);
    ids.set("rank lambda_bar", rank(lambda_bar(w)));
    out.push_back(ids);
  }
  return out;
}

std::vector<std::size_t> parse_order(const std::string& text) {
  std::vector<std::size_t> ks;
  std::stringstream ss(text);
  for (std::string tok; std::getline(ss, tok, ',');) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("malformed order '" + text + "'");
    }
    ks.push_back(std::stoul(tok));
  }
  return ks;
}

std::vector<Report> cmd_wreath(const WdlNObject& o, const std::string& order, bool all_orders) {
  Report v = validate_object(o);
  if (!v.ok()) return {v};
  Report w("iterated wreath");
  const Demimonad d = iterated_wreath(o);
  w.merge("demimonad", check_demimonad(d));
  w.set("monads", o.size());
  w.set("carrier dimension", d.dim());
  w.set("split dimension", rank(d.idem));
  if (!order.empty()) {
    const auto ks = parse_order(order);
    if (ks.size() + 1 != o.size()) {
      throw ParseError("order needs " + std::to_string(o.size() - 1) + " entries");
    }
    for (std::size_t a = 0; a < ks.size(); ++a) {
      if (ks[a] < 1 || ks[a] > ks.size() - a) {
        throw ParseError("order entry " + std::to_string(a + 1) + " must lie in 1.." +
                         std::to_string(ks.size() - a));
      }
    }
    const Demimonad c = composite_wreath(o, ks);
    w.add_equal("composite " + order + " mul", c.mul, d.mul);
    w.add_equal("composite " + order + " unit", c.unit, d.unit);
  }
  std::vector<Report> out = {v, w};
  if (all_orders) {
    Report a = check_associativity(o);
    a.set("all " + *a.value("composites") + " composites identical", a.ok());
    out.push_back(a);
  }
  return out;
}

bool split_ok(const WdlNObject& o) {
  try {
    split_iterated_wreath(o);
    return true;
  } catch (const DemimonadAxiomFailure&) {
    return false;
  }
}

std::vector<Report> cmd_spinchain(const std::string& source, std::size_t n, bool parity, bool cube,
                                  bool factorization, const std::string& golden,
                                  std::optional<Field> field) {
  SpinChainSpec spec{load_bialgebra(source, field), n, parity};
  const WdlNObject o = build_spin_chain(spec);
  Report v = validate_object(o);
  Report s("spin chain");
  s.set("bialgebra", spec.h.name);
  s.set("sites", n + 1);
  s.set("convention", parity ? "even sites carry the dual" : "even sites carry H");
  if (!v.ok()) return {v, s};
  const LinMap general = iterated_idempotent(o);
  const std::size_t dim = rank(general);
  s.add_equal("explicit idempotent formula", explicit_chain_idempotent_unchecked(spec), general);
  s.add("observable algebra splits", split_ok(o), "split algebra is not associative and unital");
  s.set("carrier dimension", o.carrier().dim());
  s.set("observable dimension", dim);
  if (!golden.empty()) {
    const Golden g = read_golden(golden);
    const std::string key = std::filesystem::path(source).stem().string();
    auto it = g.find(key.rfind("builtin:", 0) == 0 ? key.substr(8) : key);
    if (it == g.end() || !it->second.count(n)) {
      s.set("golden dimension", "none");
    } else {
      const std::size_t want = it->second.at(n);
      s.add("golden dimension", want == dim,
            "expected " + std::to_string(want) + ", got " + std::to_string(dim));
      s.set("golden dimension", want);
    }
  }
  std::vector<Report> out = {v, s};
  if (cube || factorization) {
    if (cube) {
      Report c = verify_cube(build_cube(o));
      std::size_t tf, te;
      const std::size_t f = count_passing(c, "face ", tf);
      std::size_t ok_edges = 0;
      te = 0;
      for (Subset p = 0; p < (Subset{1} << o.size()); ++p) {
        for (std::size_t i = 0; i < o.size(); ++i) {
          if (p & (Subset{1} << i)) continue;
          ++te;
          std::size_t t;
          const std::string prefix = "edge " + subset_string(p) + "+" + std::to_string(i) + ".";
          ok_edges += count_passing(c, prefix, t) == t;
        }
      }
      c.set("faces", std::to_string(f) + "/" + std::to_string(tf) + " commute");
      c.set("edges", std::to_string(ok_edges) + "/" + std::to_string(te) + " monad morphisms");
      out.push_back(c);
    }
    if (factorization) out.push_back(nary_factorization_check(canonical_factorization(o)));
  }
  return out;
}

std::vector<Report> cmd_factorize_builtin(const std::string& name, std::optional<Field> field) {
  const DualPair p = dual(load_bialgebra(name, field));
  const Demimonad H = Demimonad::from_algebra(p.h.algebra);
  const Demimonad Hh = Demimonad::from_algebra(p.hhat.algebra);
  Report a = wreath_round_trip({H, Hh, canonical_lambda(p)});
  Report b = wreath_round_trip({Hh, H, canonical_lambda_hat(p)});
  Report out("round trips of " + p.h.name);
  out.merge("lambda", a);
  out.merge("lambda_hat", b);
  return {out};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with weak distributive laws and weak wreath products"};
  Options opt;
  app.add_option("--field", opt.field, "Override the field: rational or prime:p");
  app.add_flag("--json", opt.json, "Machine-readable report");
  app.add_flag("--timing", opt.timing, "Print elapsed time to stderr");
  app.add_option("--threads", opt.threads, "Worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--regen-golden", opt.regen_golden,
                 "Recompute the golden dimension table with the dense oracle and write it");

  std::string path, kind;
  auto* check = app.add_subcommand("check", "Check the axioms of a structure-constant file");
  check->add_option("path", path, "File or builtin:NAME")->required();
  check->add_option("--kind", kind, "algebra | coalgebra | demimonad | weak-bialgebra")
      ->check(CLI::IsMember({"algebra", "coalgebra", "demimonad", "weak-bialgebra"}));

  std::string t_path, s_path, l_path;
  auto* wdl = app.add_subcommand("wdl", "Check a weak distributive law t (x) s -> s (x) t");
  wdl->add_option("t", t_path, "Algebra file or builtin:NAME")->required();
  wdl->add_option("s", s_path, "Algebra file or builtin:NAME")->required();
  wdl->add_option("lambda", l_path, "Map file or 'flip'")->required();

  std::string manifest, order;
  bool all_orders = false;
  auto* wreath = app.add_subcommand("wreath", "Iterated weak wreath product of an object");
  wreath->add_option("manifest", manifest, "Object manifest")->required();
  auto* order_opt = wreath->add_option("--order", order, "Composite k_n,...,k_1 to compare");
  wreath->add_flag("--all-orders", all_orders, "Compare every composite")->excludes(order_opt);

  std::string source, golden;
  std::size_t n = 1;
  bool parity = false, cube = false, fact = false;
  auto* spin = app.add_subcommand("spinchain", "Observable algebra of a spin chain");
  spin->add_option("bialgebra", source, "Builtin name or weak bialgebra file")->required();
  spin->add_option("n", n, "Last site index")->required()->check(CLI::Range(0, 16));
  spin->add_flag("--parity", parity, "Put the dual on even sites");
  spin->add_flag("--cube", cube, "Build and verify the monad cube");
  spin->add_flag("--factorization-check", fact, "Check the n-ary factorization conditions");
  spin->add_option("--golden", golden, "Golden dimension table to compare against");

  std::vector<std::string> fpaths;
  std::string builtin;
  bool roundtrip = false;
  auto* fz = app.add_subcommand("factorize", "Recover a weak distributive law from a factorization");
  fz->add_option("files", fpaths,
                 "r t s alpha beta iota, or with --roundtrip: t s lambda");
  fz->add_flag("--roundtrip", roundtrip, "Factorize the weak wreath product of t, s, lambda");
  fz->add_option("--builtin", builtin, "Round trips of the canonical laws of a builtin");

  app.require_subcommand(0, 1);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  set_threads(opt.threads);
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::string> words;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--threads") {
      ++i;
    } else if (a != "--timing" && a != "--json" && a.rfind("--threads=", 0) != 0) {
      words.push_back(a);
    }
  }
  const std::string command = "wreath " + echo(words);

  int code = kPass;
  try {
    const auto field = field_of(opt);
    if (!opt.regen_golden.empty()) {
      code = regen_golden(opt.regen_golden);
    } else if (check->parsed()) {
      const std::vector<Report> r = {check_file(path, kind, field)};
      emit(opt, command, r);
      code = verdict(r);
    } else if (wdl->parsed()) {
      const auto r = cmd_wdl(load_law(t_path, s_path, l_path, field));
      emit(opt, command, r);
      code = verdict(r);
    } else if (wreath->parsed()) {
      const auto r = cmd_wreath(read_manifest(manifest, field), order, all_orders);
      emit(opt, command, r);
      code = verdict(r);
    } else if (spin->parsed()) {
      const auto r = cmd_spinchain(source, n, parity, cube, fact, golden, field);
      emit(opt, command, r);
      code = verdict(r);
    } else if (fz->parsed()) {
      std::vector<Report> r;
      if (!builtin.empty()) {
        if (!fpaths.empty() || roundtrip) throw ParseError("--builtin takes no files");
        r = cmd_factorize_builtin(builtin, field);
      } else if (roundtrip) {
        if (fpaths.size() != 3) throw ParseError("--roundtrip needs t s lambda");
        r = {wreath_round_trip(load_law(fpaths[0], fpaths[1], fpaths[2], field))};
      } else {
        if (fpaths.size() != 6) throw ParseError("factorize needs r t s alpha beta iota");
        const Demimonad R = load_monad(fpaths[0], field);
        const Demimonad T = load_monad(fpaths[1], field);
        const Demimonad S = load_monad(fpaths[2], field);
        const BinaryFactorization b =
            binary_factorize(R, T, S, read_map_file(fpaths[3], field),
                             read_map_file(fpaths[4], field), read_map_file(fpaths[5], field));
        Report rep = b.report;
        rep.merge("law", check_wdl(b.law));
        rep.set("strict mismatch", b.strict_mismatch);
        r = {rep};
      }
      emit(opt, command, r);
      code = verdict(r);
    } else {
      std::cout << app.help();
      code = kInputError;
    }
  } catch (const ParseError& e) {
    emit_error(opt, command, "parse error", e.what());
    code = kInputError;
  } catch (const ShapeMismatch& e) {
    emit_error(opt, command, "shape mismatch", e.what());
    code = kInputError;
  } catch (const FieldMismatch& e) {
    emit_error(opt, command, "field mismatch", e.what());
    code = kInputError;
  } catch (const IndexOutOfRange& e) {
    emit_error(opt, command, "index out of range", e.what());
    code = kInputError;
  } catch (const Error& e) {
    emit_error(opt, command, "failure", e.what());
    code = kMathFailure;
  } catch (const std::exception& e) {
    emit_error(opt, command, "input error", e.what());
    code = kInputError;
  }
  if (opt.timing) {
    std::cerr << "time: "
              << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()
              << " s\n";
  }
  return code;
}
