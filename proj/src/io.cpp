#include "wog/io.hpp"

namespace wog {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw GraphError(GraphErrorKind::malformed, what); }

const Json& field(const Json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) malformed(std::string("missing key \"") + key + "\"");
  return *it;
}

long long integer(const Json& v, const std::string& where) {
  if (!v.is_number_integer()) malformed(where + " must be an integer");
  return v.get<long long>();
}

Json exponents(const Monomial& m) { return Json(m.exponents()); }

}  // namespace

ParsedGraph parse_graph(const Json& doc) {
  if (!doc.is_object()) malformed("graph document must be an object");
  const long long n = integer(field(doc, "n"), "n");
  if (n < 0) malformed("n must be non-negative");
  if (n > static_cast<long long>(kMaxVertices))
    throw GraphError(GraphErrorKind::vertex_out_of_range, "at most 20 vertices are supported");
  const Json& edges_doc = field(doc, "edges");
  const Json& weights_doc = field(doc, "weights");
  if (!edges_doc.is_array()) malformed("edges must be an array");
  if (!weights_doc.is_array()) malformed("weights must be an array");
  if (weights_doc.size() != static_cast<std::size_t>(n)) malformed("weights must have length n");

  std::vector<Edge> edges;
  for (const Json& e : edges_doc) {
    if (!e.is_array() || e.size() != 2) malformed("each edge must be a pair [from, to]");
    const long long from = integer(e[0], "edge endpoint");
    const long long to = integer(e[1], "edge endpoint");
    if (from < 1 || from > n || to < 1 || to > n)
      throw GraphError(GraphErrorKind::vertex_out_of_range,
                       "edge [" + std::to_string(from) + "," + std::to_string(to) + "] leaves 1..n");
    edges.emplace_back(static_cast<Vertex>(from - 1), static_cast<Vertex>(to - 1));
  }
  std::vector<unsigned> weights;
  for (const Json& w : weights_doc) {
    const long long value = integer(w, "weight");
    if (value < 1) throw GraphError(GraphErrorKind::nonpositive_weight, "weights must be positive");
    if (value > 1'000'000) malformed("weight too large");
    weights.push_back(static_cast<unsigned>(value));
  }

  const WeightedOrientedGraph raw(static_cast<std::size_t>(n), edges, weights);
  NormalizedGraph normalized = normalize_sources(raw);
  ParsedGraph out{normalized.graph, {}};
  for (Vertex v : normalized.changed)
      out.notices.push_back("weight of source vertex " + std::to_string(v + 1) + " reset from " +
                          std::to_string(raw.weight(v)) + " to 1");
  return out;
}

ParsedGraph parse_graph_text(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
  return parse_graph(doc);
}

Json labels(VertexSet s) { return Json(s.labels()); }

Json to_json(const WeightedOrientedGraph& d) {
  Json edges = Json::array();
  for (auto [u, v] : d.edges()) edges.push_back({u + 1, v + 1});
  Json doc;
  doc["n"] = d.vertex_count();
  doc["edges"] = std::move(edges);
  doc["weights"] = d.weights();
  return doc;
}

Json to_json(const SimplicialComplex& delta) {
  Json doc;
  doc["n"] = delta.ambient_size();
  if (delta.is_void()) {
    doc["void"] = true;
    return doc;
  }
  Json facets = Json::array();
  for (VertexSet f : delta.facets()) facets.push_back(labels(f));
  doc["facets"] = std::move(facets);
  return doc;
}

Json to_json(const MonomialIdeal& ideal) {
  Json gens = Json::array();
  for (const Monomial& g : ideal.gens()) gens.push_back(exponents(g));
  Json doc;
  doc["n"] = ideal.ambient_size();
  doc["gens"] = std::move(gens);
  return doc;
}

Json to_json(const BettiTable& table) {
  Json rows = Json::array();
  for (const auto& [key, rank] : table.entries) {
    Json row;
    row["i"] = key.first;
    row["degree"] = exponents(key.second);
    row["rank"] = rank;
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const CMReport& r) {
  Json doc;
  doc["depth"] = r.depth();
  doc["dim"] = r.dim;
  doc["pd"] = r.pd ? Json(*r.pd) : Json(nullptr);
  doc["cm"] = r.cm;
  doc["method"] = to_string(r.method);
  if (r.witness) {
    Json w;
    w["kind"] = r.witness->kind == CMWitness::Kind::betti ? "betti" : "colon";
    w["index"] = r.witness->index;
    w["degree"] = exponents(r.witness->degree);
    doc["witness"] = std::move(w);
  } else {
    doc["witness"] = nullptr;
  }
  doc["field"] = r.field.to_string();
  if (r.depth_betti) doc["depth_betti"] = *r.depth_betti;
  if (r.depth_colon) doc["depth_colon"] = *r.depth_colon;
  if (r.unmixed) doc["unmixed"] = *r.unmixed;
  if (r.lemma_cm) doc["lemma_cm"] = *r.lemma_cm;
  if (r.embedded_primes_flag) doc["embedded_primes"] = *r.embedded_primes_flag;
  return doc;
}

Json to_json(const Reason& reason) {
  Json doc;
  doc["kind"] = reason.kind;
  doc["value"] = reason.value;
  return doc;
}

namespace {

Json reasons_json(const std::vector<Reason>& reasons) {
  Json out = Json::array();
  for (const Reason& r : reasons) out.push_back(to_json(r));
  return out;
}

Json optional_bool(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

}  // namespace

Json to_json(const EqualityVerdict& v) {
  Json doc;
  doc["theorem"] = "equal";
  doc["t"] = v.t;
  doc["structural"] = v.structural;
  doc["reasons"] = reasons_json(v.reasons);
  if (v.direct) {
    Json oracle;
    oracle["direct"] = *v.direct;
    doc["oracle"] = std::move(oracle);
  } else {
    doc["oracle"] = nullptr;
  }
  doc["witness"] = v.witness ? exponents(*v.witness) : Json(nullptr);
  doc["agreement"] = v.direct ? Json(*v.direct == v.structural) : Json(nullptr);
  doc["direct"] = optional_bool(v.direct);
  return doc;
}

Json to_json(const CMVerdict& v) {
  Json doc;
  doc["theorem"] = v.theorem;
  doc["t"] = v.t ? Json(*v.t) : Json("all");
  doc["structural"] = v.structural;
  doc["reasons"] = reasons_json(v.reasons);
  if (v.oracle.empty()) {
    doc["oracle"] = nullptr;
  } else {
    Json runs = Json::array();
    for (const OracleRun& run : v.oracle) {
      Json entry;
      entry["t"] = run.t;
      entry["report"] = to_json(run.report);
      runs.push_back(std::move(entry));
    }
    Json oracle;
    oracle["runs"] = std::move(runs);
    oracle["failing_t"] = v.failing_t;
    doc["oracle"] = std::move(oracle);
  }
  doc["witness"] = nullptr;
  doc["agreement"] = optional_bool(v.agreement);
  if (v.structural_literal) doc["structural_literal"] = *v.structural_literal;
  return doc;
}

Json to_json(const Counterexample& c) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["theorem"] = c.theorem;
  doc["t"] = c.t;
  doc["message"] = c.message;
  doc["graph"] = to_json(c.graph);
  Json ideals;
  for (const auto& [name, ideal] : c.ideals) ideals[name] = to_json(ideal);
  doc["ideals"] = std::move(ideals);
  doc["betti"] = c.betti ? to_json(*c.betti) : Json(nullptr);
  return doc;
}

Json to_json(const StructureReport& r) {
  Json doc;
  doc["sinks"] = labels(r.sinks);
  doc["sources"] = labels(r.sources);
  doc["v_plus"] = labels(r.v_plus);
  doc["isolated"] = labels(r.isolated);
  doc["odd_girth"] = r.odd_girth ? Json(*r.odd_girth) : Json("infinity");
  doc["triangle_free"] = r.triangle_free;
  Json shapes = Json::array();
  for (const ComponentShape& c : r.component_shapes) {
    Json s;
    s["kind"] = c.is_edge() ? "edge" : (c.kind == ComponentShape::Kind::clique ? "clique" : "other");
    s["size"] = c.size();
    s["vertices"] = labels(c.vertices);
    shapes.push_back(std::move(s));
  }
  doc["component_shapes"] = std::move(shapes);
  doc["all_v_plus_sink"] = r.all_v_plus_sink;
  return doc;
}

namespace {

VertexSet set_from_labels(const Json& arr, std::size_t n) {
  if (!arr.is_array()) malformed("faces must be arrays of vertex labels");
  VertexSet s;
  for (const Json& v : arr) {
    const long long label = integer(v, "vertex label");
    if (label < 1 || label > static_cast<long long>(n))
      throw GraphError(GraphErrorKind::vertex_out_of_range, "vertex label outside 1..n");
    s.insert(static_cast<Vertex>(label - 1));
  }
  return s;
}

std::size_t ambient(const Json& doc) {
  if (!doc.is_object()) malformed("document must be an object");
  const long long n = integer(field(doc, "n"), "n");
  if (n < 0) malformed("n must be non-negative");
  return static_cast<std::size_t>(n);
}

}  // namespace

SimplicialComplex complex_from_json(const Json& doc) {
  const std::size_t n = ambient(doc);
  if (n > kMaxVertices) throw GraphError(GraphErrorKind::vertex_out_of_range, "at most 20 vertices are supported");
  if (auto it = doc.find("void"); it != doc.end() && it->is_boolean() && it->get<bool>())
    return SimplicialComplex::void_complex(n);
  const Json& facets = field(doc, "facets");
  if (!facets.is_array()) malformed("facets must be an array");
  std::vector<VertexSet> faces;
  for (const Json& f : facets) faces.push_back(set_from_labels(f, n));
  return SimplicialComplex::from_faces(n, std::move(faces));
}

MonomialIdeal ideal_from_json(const Json& doc) {
  const std::size_t n = ambient(doc);
  const Json& gens = field(doc, "gens");
  if (!gens.is_array()) malformed("gens must be an array");
  std::vector<Monomial> monomials;
  for (const Json& g : gens) {
    if (!g.is_array() || g.size() != n) malformed("each generator must list n exponents");
    std::vector<Exponent> e;
    for (const Json& x : g) {
      const long long value = integer(x, "exponent");
      if (value < 0 || value > 1'000'000) malformed("exponent out of range");
      e.push_back(static_cast<Exponent>(value));
    }
    monomials.emplace_back(std::move(e));
  }
  return MonomialIdeal(n, std::move(monomials));
}

}  // namespace wog
