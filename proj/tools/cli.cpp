#include "cli.hpp"

#include "qcluster/corpus.hpp"
#include "qcluster/expansion.hpp"
#include "qcluster/io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

namespace qcluster::cli {

namespace {

struct Options {
  std::string surface;
  std::string seed;
  std::string arc;
  std::string flips;
  int tau = -1;
  bool quantum = false;
  bool audit = false;
  bool machine = false;
};

struct Workspace {
  Triangulation t;
  std::optional<CrossingSequence> arc;
  IntMatrix btilde;
  std::optional<QuantumSeed> seed;
};

std::vector<int> parse_list(const std::string& text) {
  std::vector<int> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError("--flips: \"" + item + "\" is not an integer");
    }
  }
  return out;
}

Workspace load(const Options& o, bool need_arc, bool need_quantum) {
  Workspace w;
  w.t = parse_surface(read_source(o.surface));
  if (need_arc) {
    w.arc = parse_arc(read_source(o.arc));
    validate_arc(w.t, *w.arc);
  }
  if (o.seed.empty()) {
    w.seed = principal_seed(w.t);
    w.btilde = w.seed->btilde;
    return w;
  }
  SeedSpec spec = parse_seed(read_source(o.seed));
  w.btilde = spec.btilde;
  if (spec.lambda) w.seed = QuantumSeed::make(spec.btilde, *spec.lambda);
  else if (need_quantum) throw InputError("seed: --quantum needs a \"Lambda\" field");
  check_seed_matches(w.t, w.btilde);
  return w;
}

std::string height_string(const Exponent& h) { return "(" + exponent_to_string(h) + ")"; }

int cmd_expand(const Options& o, std::ostream& out) {
  const Workspace w = load(o, true, o.quantum);
  if (o.quantum) {
    const QuantumExpansion e = quantum_expand(w.t, *w.arc, *w.seed);
    out << (o.machine ? e.value.to_machine() : e.value.to_string() + "\n");
    if (o.audit) {
      for (const AuditEntry& a : e.audit)
        out << a.matching.to_string() << " a=(" << exponent_to_string(a.exponent) << ") v=" << a.v << '\n';
    }
    return 0;
  }
  const CommLaurent<Integer> c = commutative_expand(w.t, *w.arc, w.btilde);
  if (o.machine) {
    for (auto it = c.rbegin(); it != c.rend(); ++it) out << exponent_to_string(it->first) << "|0," << it->second << '\n';
  } else {
    out << comm_to_string(c) << '\n';
  }
  if (o.audit) {
    const SnakeGraph g = SnakeGraph::build(w.t, *w.arc);
    const std::vector<Matching> ms = enumerate_matchings(g);
    const Exponent floor = frozen_floor(g, ms, w.btilde);
    for (const Matching& p : ms)
      out << p.to_string() << " a=(" << exponent_to_string(exponent_vector(g, p, w.btilde, floor)) << ")\n";
  }
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Workspace w = load(o, true, true);
  const std::vector<int> flips = o.flips.empty() ? flips_to_contain(w.t, *w.arc) : parse_list(o.flips);
  const VerifyReport r = verify_against_oracle(w.t, *w.seed, flips, *w.arc);
  out << (r.ok ? "ok" : r.message) << '\n';
  if (!r.ok) {
    out << "expansion: " << r.expansion.to_string() << '\n';
    out << "oracle:    " << r.oracle.to_string() << '\n';
  }
  return r.ok ? 0 : 1;
}

int cmd_matchings(const Options& o, std::ostream& out) {
  const Workspace w = load(o, true, false);
  const SnakeGraph g = SnakeGraph::build(w.t, *w.arc);
  const std::int64_t d = w.seed ? w.seed->d : 1;
  const ValuationMap v = compute_valuation(g, d);
  for (std::size_t i = 0; i < v.matchings.size(); ++i) {
    const Matching& p = v.matchings[i];
    out << p.to_string() << " labels=";
    bool first = true;
    for (const OrderedEdge& e : ordered_edge_labels(g, p)) {
      out << (first ? "" : ",") << e.label;
      first = false;
    }
    out << " height=" << height_string(height_exponent(g, p)) << " v=" << v.values[i] << '\n';
  }
  return 0;
}

int cmd_valuation(const Options& o, std::ostream& out) {
  const Workspace w = load(o, true, false);
  const SnakeGraph g = SnakeGraph::build(w.t, *w.arc);
  const std::int64_t d = w.seed ? w.seed->d : 1;
  const ValuationMap v = compute_valuation(g, d);
  for (std::size_t i = 0; i < v.matchings.size(); ++i) {
    const Matching& p = v.matchings[i];
    out << p.to_string() << " v=" << v.values[i] << " omega:";
    for (int s = 0; s < g.size(); ++s)
      if (can_twist(g, p, s)) out << ' ' << s + 1 << '=' << omega(g, s, p, d);
    out << '\n';
  }
  return 0;
}

int cmd_flip(const Options& o, std::ostream& out) {
  const Triangulation t = parse_surface(read_source(o.surface));
  if (!t.is_internal(o.tau)) throw SurfaceError("boundary arc has no flip quadrilateral");
  const Triangulation f = flip(t, o.tau);
  out << surface_to_json(f) << '\n';
  out << "B = " << matrix_to_json(signed_adjacency(f)) << '\n';
  return 0;
}

int cmd_check_seed(const Options& o, std::ostream& out) {
  const SeedSpec spec = parse_seed(read_source(o.seed));
  if (!spec.lambda) throw InputError("seed: missing field \"Lambda\"");
  const QuantumSeed s = QuantumSeed::make(spec.btilde, *spec.lambda);
  if (!o.surface.empty()) check_seed_matches(parse_surface(read_source(o.surface)), s.btilde);
  out << "d = " << s.d << '\n';
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum cluster expansions of arcs on unpunctured surfaces"};
  app.require_subcommand(1);
  Options o;

  auto add_surface = [&](CLI::App* c, bool required = true) {
    auto* opt = c->add_option("--surface", o.surface, "surface JSON file or inline JSON");
    if (required) opt->required();
  };
  auto add_arc = [&](CLI::App* c) { c->add_option("--arc", o.arc, "arc JSON file or inline JSON")->required(); };
  auto add_seed = [&](CLI::App* c) {
    c->add_option("--seed", o.seed, "seed JSON file or inline JSON (default: principal quantization)");
  };

  CLI::App* expand = app.add_subcommand("expand", "Laurent expansion of an arc");
  add_surface(expand);
  add_arc(expand);
  add_seed(expand);
  expand->add_flag("--quantum", o.quantum, "quantum expansion");
  expand->add_flag("--audit", o.audit, "list every perfect matching with a(P) and v(P)");
  expand->add_flag("--machine", o.machine, "one record per term: exponents|s-exponent,coefficient,...");

  CLI::App* verify = app.add_subcommand("verify", "compare the expansion with the mutation oracle");
  add_surface(verify);
  add_arc(verify);
  add_seed(verify);
  verify->add_option("--flips", o.flips, "comma separated flip sequence (default: computed)");

  CLI::App* matchings = app.add_subcommand("matchings", "perfect matchings with heights and valuations");
  add_surface(matchings);
  add_arc(matchings);
  add_seed(matchings);

  CLI::App* valuation = app.add_subcommand("valuation", "valuation map and Omega table");
  add_surface(valuation);
  add_arc(valuation);
  add_seed(valuation);

  CLI::App* flip_cmd = app.add_subcommand("flip", "flip an internal arc");
  add_surface(flip_cmd);
  flip_cmd->add_option("--tau", o.tau, "arc to flip")->required();

  CLI::App* check = app.add_subcommand("check-seed", "check compatibility and print d");
  check->add_option("--seed", o.seed, "seed JSON file or inline JSON")->required();
  add_surface(check, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (expand->parsed()) return cmd_expand(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (matchings->parsed()) return cmd_matchings(o, out);
    if (valuation->parsed()) return cmd_valuation(o, out);
    if (flip_cmd->parsed()) return cmd_flip(o, out);
    if (check->parsed()) return cmd_check_seed(o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const SurfaceError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const CompatibilityError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace qcluster::cli
