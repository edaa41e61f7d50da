#include "upsilon/report.hpp"

namespace upsilon {

namespace {

Json header(const char* command) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = command;
  return j;
}

Json json_strictness(const StrictnessReport& r) {
  Json j;
  j["strict"] = r.strict;
  j["graded_exact"] = r.graded_exact;
  Json v = Json::array();
  for (const auto& x : r.violations) v.push_back({{"map", x.map}, {"degree", x.degree}, {"k", x.k}, {"kind", x.kind}});
  j["violations"] = std::move(v);
  return j;
}

Json json_eta(const FqEta& eta) {
  Json v = Json::array();
  for (auto x : eta.values) v.push_back(x);
  return v;
}

}  // namespace

Json json_integer(const Integer& z) {
  if (z.fits_slong_p()) return Json(static_cast<std::int64_t>(z.get_si()));
  return Json(z.get_str());
}

Json json_polynomial(const IntPolynomial& p) {
  Json a = Json::array();
  for (const auto& c : p.coefficients()) a.push_back(json_integer(c));
  return a;
}

Json json_grid(const BiPolynomial& p) {
  Json g = Json::array();
  for (const auto& row : p.grid()) {
    Json r = Json::array();
    for (const auto& c : row) r.push_back(json_integer(c));
    g.push_back(std::move(r));
  }
  return g;
}

Json json_graph_summary(const Multigraph& g) {
  return {{"vertices", g.num_vertices()}, {"edges", g.num_edges()}, {"b1", g.first_betti()}};
}

Json json_rank_table(const BigradedCohomology& bc) {
  // Ordered by (i, m); zero ranks omitted.
  Json t = Json::array();
  for (const auto& [key, r] : bc.ranks)
    if (r) t.push_back({{"i", key.first}, {"m", key.second}, {"rank", r}});
  return t;
}

Json json_filtration(const Filtration& f) {
  Json t = Json::array();
  for (const auto& e : f.table()) t.push_back({{"i", e.i}, {"k", e.k}, {"dim", e.dim}});
  return t;
}

Json json_checks(const std::vector<Check>& checks) {
  Json a = Json::array();
  for (const auto& c : checks) a.push_back({{"name", c.name}, {"passed", c.passed}, {"lhs", c.lhs}, {"rhs", c.rhs}});
  return a;
}

Json cohomology_report(const Multigraph& g, const UpsilonComplex& c, const BigradedCohomology& bc,
                       const Filtration* deletion, const Filtration* grading) {
  Json j = header("cohomology");
  j["graph"] = json_graph_summary(g);
  j["ring"] = bc.has_torsion_data ? "integers" : "rationals";
  j["complex_dimension"] = c.total_dimension();
  j["ranks"] = json_rank_table(bc);
  Json betti = Json::array();
  for (const auto& [i, r] : bc.betti())
    if (r) betti.push_back({{"i", i}, {"rank", r}});
  j["betti"] = std::move(betti);
  j["euler_characteristic"] = json_integer(bc.euler_characteristic());
  if (bc.has_torsion_data) {
    Json t = Json::array();
    for (const auto& [key, factors] : bc.torsion) {
      Json f = Json::array();
      for (const auto& x : factors) f.push_back(json_integer(x));
      t.push_back({{"i", key.first}, {"m", key.second}, {"factors", std::move(f)}});
    }
    j["torsion"] = std::move(t);
  }
  Json filt = Json::object();
  if (deletion) filt["deletion"] = json_filtration(*deletion);
  if (grading) filt["grading"] = json_filtration(*grading);
  if (deletion && grading) filt["agree"] = *deletion == *grading;
  j["filtration"] = std::move(filt);
  return j;
}

bool MotiveResults::agree() const {
  std::optional<IntPolynomial> ref;
  for (const auto* p : {&closed, &delcon, &tutte}) {
    if (!*p) continue;
    if (!ref)
      ref = **p;
    else if (!(**p == *ref))
      return false;
  }
  return true;
}

Json motive_report(const Multigraph& g, const MotiveResults& r) {
  Json j = header("motive");
  j["graph"] = json_graph_summary(g);
  Json m = Json::object();
  if (r.closed) m["closed"] = json_polynomial(*r.closed);
  if (r.delcon) m["delcon"] = json_polynomial(*r.delcon);
  if (r.tutte) m["tutte"] = json_polynomial(*r.tutte);
  j["motive"] = std::move(m);
  if (r.tutte_polynomial) j["tutte"] = json_grid(*r.tutte_polynomial);
  j["agree"] = r.agree();
  return j;
}

Json les_report(const LongExactSequence& seq, const StrictnessReport& deletion, const StrictnessReport& grading) {
  Json j = header("delcon");
  j["graph"] = json_graph_summary(seq.graph());
  j["edge"] = seq.edge();
  j["kind"] = "ordinary";
  Json nodes = Json::array();
  for (const auto& n : seq.nodes())
    nodes.push_back({{"term", n.term},
                     {"degree", n.degree},
                     {"dim", n.dim},
                     {"rank_in", n.rank_in},
                     {"rank_out", n.rank_out},
                     {"exact", n.exact}});
  j["nodes"] = std::move(nodes);
  Json maps = Json::array();
  auto rk = [](const RatMatrix& m) { return m.rows() && m.cols() ? rank(m) : std::size_t{0}; };
  for (int i = 0; i <= seq.max_degree(); ++i) {
    if (i >= 2) maps.push_back({{"map", "a"}, {"degree", i}, {"rank", rk(seq.a(i))}});
    maps.push_back({{"map", "b"}, {"degree", i}, {"rank", rk(seq.b(i))}});
    if (i >= 1) maps.push_back({{"map", "c"}, {"degree", i}, {"rank", rk(seq.c(i))}});
  }
  j["maps"] = std::move(maps);
  j["short_exact"] = seq.short_exact().ok();
  j["chain_maps_commute"] = seq.embedding_residual() == 0 && seq.quotient_residual() == 0;
  j["compositions_vanish"] = seq.compositions_vanish();
  j["exact"] = seq.exact();
  j["alternating_sum"] = json_integer(seq.alternating_sum());
  j["strictness"] = {{"deletion", json_strictness(deletion)}, {"grading", json_strictness(grading)}};
  return j;
}

Json bridge_report(const Multigraph& g, const std::string& edge, const BridgeCheck& check) {
  Json j = header("delcon");
  j["graph"] = json_graph_summary(g);
  j["edge"] = edge;
  j["kind"] = "bridge";
  j["ranks"] = json_rank_table(check.whole);
  j["contracted_ranks"] = json_rank_table(check.contracted);
  j["ranks_equal"] = check.equal();
  return j;
}

Json pw_report_json(const PWReport& r) {
  Json j = header("pw");
  j["graph"] = json_graph_summary(r.graph);
  j["spanning_trees"] = json_integer(r.spanning_trees);
  j["ranks"] = json_rank_table(r.cohomology);
  Json m = Json::object();
  m["closed"] = json_polynomial(r.motive);
  if (r.motive_delcon) m["delcon"] = json_polynomial(*r.motive_delcon);
  if (r.motive_tutte) m["tutte"] = json_polynomial(*r.motive_tutte);
  j["motive"] = std::move(m);
  if (r.tutte) j["tutte"] = json_grid(*r.tutte);
  j["mixed_poincare"] = json_grid(r.mixed_poincare);
  j["filtration"] = {{"deletion", json_filtration(r.deletion)}, {"grading", json_filtration(r.grading)}};
  j["labels"] = "W_{2k} = P_k = D_k";
  Json counts = Json::array();
  for (const auto& c : r.counts) {
    Json x = {{"q", c.q}};
    x["eta"] = c.eta ? json_eta(*c.eta) : Json(nullptr);
    x["count"] = c.count ? json_integer(*c.count) : Json(nullptr);
    x["motive_value"] = json_integer(c.motive_value);
    if (!c.note.empty()) x["note"] = c.note;
    counts.push_back(std::move(x));
  }
  j["point_counts"] = std::move(counts);
  j["checks"] = json_checks(r.checks);
  j["ok"] = r.ok();
  return j;
}

Json monodromy_report(const Multigraph& g, const MonodromyReport& r) {
  Json j = header("monodromy");
  j["graph"] = json_graph_summary(g);
  Json edges = Json::array();
  for (const auto& e : r.edges)
    edges.push_back({{"edge", e.edge},
                     {"kind", to_string(e.kind)},
                     {"rank", e.rank},
                     {"square_zero", e.square_zero},
                     {"matches_d_prime", e.matches_d_prime}});
  j["edges"] = std::move(edges);
  j["products_zero"] = r.products_zero;
  j["bridge_iff_zero"] = r.bridge_iff_zero;
  j["ok"] = r.ok();
  return j;
}

Json count_report(const Multigraph& g, const CountResult& r) {
  Json j = header("count");
  j["graph"] = json_graph_summary(g);
  j["q"] = r.eta.q;
  j["eta"] = json_eta(r.eta);
  Json cert = {{"generic", r.certificate.generic}, {"chains_checked", r.certificate.chains_checked}};
  if (!r.certificate.generic) {
    Json w = Json::array();
    for (auto x : r.certificate.witness) w.push_back(x);
    cert["witness"] = std::move(w);
  }
  j["genericity"] = std::move(cert);
  j["count"] = r.count ? json_integer(*r.count) : Json(nullptr);
  j["motive_value"] = json_integer(r.motive_value);
  j["matches_motive"] = r.count && *r.count == r.motive_value;
  return j;
}

Json check_report(const Multigraph& g, const std::vector<Check>& checks) {
  Json j = header("check");
  j["graph"] = json_graph_summary(g);
  j["checks"] = json_checks(checks);
  bool ok = true;
  for (const auto& c : checks) ok = ok && c.passed;
  j["ok"] = ok;
  return j;
}

Json error_report(const std::string& kind, const std::string& message, const ParseError* position) {
  Json j;
  j["schema"] = kSchema;
  Json e = {{"kind", kind}, {"message", message}};
  if (position) {
    e["offset"] = position->offset;
    e["line"] = position->line;
    e["column"] = position->column;
  }
  j["error"] = std::move(e);
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace upsilon
