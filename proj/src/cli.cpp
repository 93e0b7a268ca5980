#include "wog/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "wog/generate.hpp"
#include "wog/io.hpp"

namespace wog {

namespace {

const std::vector<std::string> kCommands = {"analyze", "decompose", "power", "symbolic", "equality",
                                            "cm",      "betti",     "family", "sweep"};

struct Config {
  std::string command;
  std::string input;
  unsigned t = 1;
  bool t_given = false;
  std::string field = "q";
  bool verify = false;
  unsigned k = 2;
  unsigned scan_to = 3;
  std::uint64_t max_box = 1'000'000;
  std::uint64_t seed = 1;
  unsigned random = 0;
  unsigned random_n = 5;
  bool symbolic = false;
  std::string bundle;
};

/// Input problems map to exit code 1.
struct InputError : std::runtime_error {
  InputError(std::string kind_, const std::string& what) : std::runtime_error(what), kind(std::move(kind_)) {}
  std::string kind;
};

std::string read_all(std::istream& s) {
  std::ostringstream buf;
  buf << s.rdbuf();
  return buf.str();
}

std::string read_source(const std::string& path, std::istream& in) {
  if (path == "-") return read_all(in);
  std::ifstream file(path);
  if (!file) throw InputError("io", "cannot read " + path);
  return read_all(file);
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw GraphError(GraphErrorKind::malformed, std::string("invalid JSON: ") + e.what());
  }
}

Json envelope(const Config& c) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = c.command;
  return doc;
}

// Disagreements carry their bundle up to run_cli.
struct Disagreement {
  Json bundle;
};

[[noreturn]] void disagree(const Counterexample& c) { throw Disagreement{to_json(c)}; }

CMOptions cm_options(const Config& c, const Field& field) {
  CMOptions o;
  o.field = field;
  o.max_box = c.max_box;
  o.exec = Exec::serial;
  if (c.verify) {
    o.method = DepthMethod::both;
    o.lemma_path = true;
  }
  return o;
}

unsigned require_t(const Config& c, unsigned minimum) {
  if (c.t < minimum) throw InputError("config", "--t must be at least " + std::to_string(minimum));
  return c.t;
}

Json strong_cover_json(const StrongCover& sc) {
  Json doc;
  doc["cover"] = labels(sc.cover);
  doc["l1"] = labels(sc.l1);
  doc["l2"] = labels(sc.l2);
  doc["l3"] = labels(sc.l3);
  doc["minimal"] = sc.minimal();
  return doc;
}

Json analyze(const Config& c, const ParsedGraph& p) {
  const WeightedOrientedGraph& d = p.graph;
  Json doc = envelope(c);
  doc["graph"] = to_json(d);
  doc["notices"] = p.notices;
  doc["structure"] = to_json(structure_report(d));
  const SimpleGraph g = underlying_graph(d);
  Json covers = Json::array();
  for (VertexSet s : minimal_vertex_covers(g)) covers.push_back(labels(s));
  doc["minimal_vertex_covers"] = std::move(covers);
  Json strong = Json::array();
  for (const StrongCover& sc : strong_vertex_covers(d)) strong.push_back(strong_cover_json(sc));
  doc["strong_vertex_covers"] = std::move(strong);
  const WellCoveredReport wc = well_covered_report(g);
  doc["alpha"] = wc.alpha;
  doc["well_covered"] = wc.well_covered;
  doc["in_w2"] = wc.in_w2;
  doc["independence_complex"] = to_json(independence_complex(g));
  return doc;
}

Json decompose(const Config& c, const ParsedGraph& p) {
  const WeightedOrientedGraph& d = p.graph;
  const MonomialIdeal ideal = edge_ideal(d);
  const auto components = primary_decomposition(d);
  Json doc = envelope(c);
  doc["graph"] = to_json(d);
  doc["edge_ideal"] = to_json(ideal);
  Json comps = Json::array();
  std::vector<MonomialIdeal> parts;
  for (const PrimaryComponent& pc : components) {
    Json entry = strong_cover_json(pc.cover);
    entry["ideal"] = to_json(pc.ideal);
    comps.push_back(std::move(entry));
    parts.push_back(pc.ideal);
  }
  doc["components"] = std::move(comps);
  const bool identity = intersect_all(d.vertex_count(), parts) == ideal;
  doc["intersection_equals_edge_ideal"] = identity;
  const MonomialIdeal first_symbolic = symbolic_power(d, 1);
  doc["symbolic_1_equals_edge_ideal"] = first_symbolic == ideal;
  doc["embedded_components"] = std::any_of(components.begin(), components.end(),
                                           [](const PrimaryComponent& pc) { return !pc.cover.minimal(); });
  Counterexample bundle{"decomposition", d, 1, "", {{"edge_ideal", ideal}}, std::nullopt};
  if (!identity) {
    bundle.message = "intersection of the components differs from I(D)";
    disagree(bundle);
  }
  if (c.verify && !ideal.is_zero()) {
    std::vector<VertexSet> expected;
    for (const PrimaryComponent& pc : components) expected.push_back(pc.cover.cover);
    std::sort(expected.begin(), expected.end());
    auto primes = associated_primes(ideal, c.max_box);
    std::sort(primes.begin(), primes.end());
    doc["associated_primes_match"] = primes == expected;
    if (primes != expected) {
      bundle.message = "associated primes differ from the strong vertex covers";
      disagree(bundle);
    }
  }
  return doc;
}

Json power_cmd(const Config& c, const ParsedGraph& p, bool symbolic) {
  const unsigned t = require_t(c, 1);
  const WeightedOrientedGraph& d = p.graph;
  Json doc = envelope(c);
  doc["graph"] = to_json(d);
  doc["t"] = t;
  const MonomialIdeal ideal = symbolic ? symbolic_power(d, t) : power(edge_ideal(d), t);
  doc["ideal"] = to_json(ideal);
  if (symbolic && c.verify) {
    const MonomialIdeal other = symbolic_power_by_localization(edge_ideal(d), t);
    doc["localization_route_agrees"] = other == ideal;
    if (other != ideal)
      disagree({"symbolic", d, t, "cover route and localization route differ",
                {{"covers", ideal}, {"localization", other}}, std::nullopt});
  }
  return doc;
}

Json equality(const Config& c, const ParsedGraph& p) {
  const unsigned t = require_t(c, 2);
  Json doc = envelope(c);
  doc["graph"] = to_json(p.graph);
  doc.update(to_json(powers_equal(p.graph, t, true)));
  return doc;
}

Json cm_cmd(const Config& c, const ParsedGraph& p, const Field& field) {
  const unsigned t = require_t(c, 1);
  const WeightedOrientedGraph& d = p.graph;
  const CMOptions options = cm_options(c, field);
  Json doc = envelope(c);
  doc["graph"] = to_json(d);
  doc["t"] = t;
  const CMReport symbolic = is_cm(symbolic_power(d, t), options);
  const CMVerdict ordinary = ordinary_cm(d, t, true, options);
  const CMReport& ordinary_report = ordinary.oracle.front().report;
  doc["cm_symbolic"] = symbolic.cm;
  doc["cm_ordinary"] = ordinary_report.cm;
  doc["symbolic"] = to_json(symbolic);
  doc["ordinary"] = to_json(ordinary_report);
  doc["ordinary_verdict"] = to_json(ordinary);
  doc["symbolic_all_t_verdict"] = to_json(symbolic_cm_all_t(d, c.verify ? c.scan_to : 0, options));
  return doc;
}

Json betti_cmd(const Config& c, const ParsedGraph& p, const Field& field) {
  const unsigned t = require_t(c, 1);
  const WeightedOrientedGraph& d = p.graph;
  const MonomialIdeal ideal = c.symbolic ? symbolic_power(d, t) : power(edge_ideal(d), t);
  BettiOptions options;
  options.field = field;
  options.exec = Exec::serial;
  const BettiTable table = betti_table(ideal, options);
  Json doc = envelope(c);
  doc["graph"] = to_json(d);
  doc["t"] = t;
  doc["symbolic"] = c.symbolic;
  doc["ideal"] = to_json(ideal);
  doc["field"] = field.to_string();
  doc["betti"] = to_json(table);
  doc["pd"] = table.projective_dimension();
  return doc;
}

Json family_cmd(const Config& c, const Field& field) {
  if (c.k < 1) throw InputError("config", "--k must be at least 1");
  if (c.scan_to < 1) throw InputError("config", "--scan-to must be at least 1");
  const FamilyScan scan = scan_family(c.k, c.scan_to, cm_options(c, field));
  Json doc = envelope(c);
  doc["k"] = scan.k;
  doc["graph"] = to_json(example_family(c.k));
  doc["cm_at"] = scan.cm_at;
  doc["not_cm_at"] = scan.not_cm_at;
  Json system = Json::array();
  for (const auto& [t, sol] : scan.system) {
    Json entry;
    entry["t"] = t;
    entry["solvable"] = sol.has_value();
    entry["solution"] = sol ? Json(*sol) : Json(nullptr);
    system.push_back(std::move(entry));
  }
  doc["system"] = std::move(system);
  doc["agreement"] = scan.agreement;
  if (!scan.agreement) {
    Counterexample bundle{"family", example_family(c.k), 0, "oracle, inequality system and threshold disagree", {}, {}};
    throw Disagreement{[&] {
      Json b = to_json(bundle);
      b["scan"] = doc;
      return b;
    }()};
  }
  return doc;
}

std::vector<WeightedOrientedGraph> graphs_from_json(const Json& doc) {
  std::vector<WeightedOrientedGraph> out;
  if (doc.is_array()) {
    for (const Json& g : doc) out.push_back(parse_graph(g).graph);
  } else {
    out.push_back(parse_graph(doc).graph);
  }
  return out;
}

std::vector<WeightedOrientedGraph> sweep_inputs(const Config& c, std::istream& in) {
  std::vector<WeightedOrientedGraph> graphs;
  if (!c.input.empty()) {
    namespace fs = std::filesystem;
    if (c.input != "-" && fs::is_directory(c.input)) {
      std::vector<fs::path> files;
      for (const auto& entry : fs::directory_iterator(c.input))
        if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
      std::sort(files.begin(), files.end());
      for (const auto& f : files) {
        auto more = graphs_from_json(parse_json(read_source(f.string(), in)));
        graphs.insert(graphs.end(), more.begin(), more.end());
      }
    } else {
      graphs = graphs_from_json(parse_json(read_source(c.input, in)));
    }
  }
  if (c.random > 0) {
    if (c.random_n < 1 || c.random_n > 8) throw InputError("config", "--random-n must be in 1..8");
    std::mt19937_64 rng(c.seed);
    for (unsigned i = 0; i < c.random; ++i) graphs.push_back(random_weighted_graph(c.random_n, 0.5, 2, rng));
  }
  if (graphs.empty()) throw InputError("config", "sweep needs an input or --random");
  return graphs;
}

Json sweep_cmd(const Config& c, std::istream& in, const Field& field) {
  SweepOptions options;
  options.max_t = c.t_given ? c.t : 3;
  options.cm = cm_options(c, field);
  const SweepSummary summary = sweep(sweep_inputs(c, in), options);
  Json doc = envelope(c);
  doc["instances"] = summary.instances;
  doc["checks"] = summary.checks;
  doc["max_t"] = options.max_t;
  doc["disagreements"] = summary.disagreements.size();
  doc["witnesses"] = summary.witnesses;
  doc["unsound_witnesses"] = summary.unsound_witnesses;
  if (!summary.disagreements.empty() || summary.unsound_witnesses > 0) {
    Json bundles = Json::array();
    for (const auto& d : summary.disagreements) bundles.push_back(to_json(d));
    Json b = envelope(c);
    b["summary"] = doc;
    b["counterexamples"] = std::move(bundles);
    throw Disagreement{std::move(b)};
  }
  return doc;
}

Json error_json(const std::string& kind, const std::string& message) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  Json e;
  e["kind"] = kind;
  e["message"] = message;
  doc["error"] = std::move(e);
  return doc;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Edge ideals of weighted oriented graphs: powers, symbolic powers and Cohen-Macaulay tests", "wogcm"};
  app.add_option("command", c.command, "Command to run")->required()->check(CLI::IsMember(kCommands));
  app.add_option("input", c.input, "Graph JSON file, or - for standard input");
  auto* t_opt = app.add_option("--t", c.t, "Power exponent")->check(CLI::PositiveNumber);
  app.add_option("--field", c.field, "Coefficient field: q or gf:<p>");
  app.add_flag("--verify", c.verify, "Run every available cross-check");
  app.add_option("--k", c.k, "Parameter of the path family")->check(CLI::PositiveNumber);
  app.add_option("--scan-to", c.scan_to, "Largest t scanned")->check(CLI::PositiveNumber);
  auto* box_opt = app.add_option("--max-box", c.max_box, "Cap on exponent-box points")->check(CLI::PositiveNumber);
  app.add_option("--seed", c.seed, "Seed for random sweeps");
  app.add_option("--random", c.random, "Number of random graphs added to a sweep");
  app.add_option("--random-n", c.random_n, "Vertex count of random sweep graphs");
  app.add_flag("--symbolic", c.symbolic, "betti: use the symbolic power");
  app.add_option("--bundle", c.bundle, "Write the counterexample bundle to this file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << error_json("usage", e.what()).dump() << "\n";
    return kExitInputError;
  }
  c.t_given = t_opt->count() > 0;
  if (box_opt->count() == 0) {
    if (const char* env = std::getenv("WOGCM_MAX_BOX")) {
      try {
        c.max_box = std::stoull(env);
      } catch (const std::exception&) {
        err << error_json("config", "WOGCM_MAX_BOX must be a positive integer").dump() << "\n";
        return kExitInputError;
      }
      if (c.max_box == 0) {
        err << error_json("config", "WOGCM_MAX_BOX must be a positive integer").dump() << "\n";
        return kExitInputError;
      }
    }
  }

  try {
    const Field field = Field::parse(c.field);
    Json report;
    if (c.command == "family") {
      report = family_cmd(c, field);
    } else if (c.command == "sweep") {
      report = sweep_cmd(c, in, field);
    } else {
      if (c.input.empty()) throw InputError("config", c.command + " needs a graph input");
      const ParsedGraph parsed = parse_graph(parse_json(read_source(c.input, in)));
      if (c.command == "analyze") report = analyze(c, parsed);
      else if (c.command == "decompose") report = decompose(c, parsed);
      else if (c.command == "power") report = power_cmd(c, parsed, false);
      else if (c.command == "symbolic") report = power_cmd(c, parsed, true);
      else if (c.command == "equality") report = equality(c, parsed);
      else if (c.command == "cm") report = cm_cmd(c, parsed, field);
      else report = betti_cmd(c, parsed, field);
      if (!parsed.notices.empty() && !report.contains("notices")) report["notices"] = parsed.notices;
    }
    out << report.dump(2) << "\n";
    return kExitOk;
  } catch (const GraphError& e) {
    err << error_json(std::string(to_string(e.kind())), e.what()).dump() << "\n";
  } catch (const InputError& e) {
    err << error_json(e.kind, e.what()).dump() << "\n";
  } catch (const std::length_error& e) {
    err << error_json("cap_exceeded", e.what()).dump() << "\n";
  } catch (const Disagreement& d) {
    return [&] {
      if (!c.bundle.empty()) std::ofstream(c.bundle) << d.bundle.dump(2) << "\n";
      Json e = error_json("disagreement", "structural and oracle verdicts differ");
      e["bundle"] = d.bundle;
      err << e.dump() << "\n";
      return int{kExitDisagreement};
    }();
  } catch (const DisagreementError& e) {
    Json bundle = to_json(e.bundle());
    if (!c.bundle.empty()) std::ofstream(c.bundle) << bundle.dump(2) << "\n";
    Json doc = error_json("disagreement", e.what());
    doc["bundle"] = std::move(bundle);
    err << doc.dump() << "\n";
    return kExitDisagreement;
  } catch (const OracleInconsistency& e) {
    err << error_json("oracle_inconsistency", e.what()).dump() << "\n";
    return kExitDisagreement;
  } catch (const std::invalid_argument& e) {
    err << error_json("invalid_argument", e.what()).dump() << "\n";
  }
  return kExitInputError;
}

}  // namespace wog
