#include "upsilon/checks.hpp"

#include <algorithm>
#include <numeric>

#include "upsilon/delcon.hpp"
#include "upsilon/monodromy.hpp"
#include "upsilon/report.hpp"

namespace upsilon {

bool operator==(const Filtration::Entry& a, const Filtration::Entry& b) {
  return a.i == b.i && a.k == b.k && a.dim == b.dim;
}

bool operator==(const Fingerprint& a, const Fingerprint& b) {
  return a.ranks == b.ranks && a.deletion == b.deletion && a.grading == b.grading && a.motive == b.motive &&
         a.tutte == b.tutte && a.monodromy_ranks == b.monodromy_ranks;
}

Fingerprint fingerprint(const Multigraph& g) {
  UpsilonComplex c(g);
  CohomologyBasis basis(c);
  Fingerprint f;
  f.ranks = cohomology(c).ranks;
  f.deletion = deletion_filtration(basis).table();
  f.grading = grading_filtration(basis).table();
  f.motive = motive_closed_form(g);
  f.tutte = tutte(g);
  for (const auto& e : verify_relations(g).edges) f.monodromy_ranks.push_back(e.rank);
  std::sort(f.monodromy_ranks.begin(), f.monodromy_ranks.end());
  return f;
}

namespace {

Check boolean(std::string name, bool ok, std::string detail = {}) {
  return {std::move(name), ok, ok ? "holds" : (detail.empty() ? "fails" : detail), "holds"};
}

}  // namespace

std::vector<Check> invariant_suite(const Multigraph& g, const SuiteOptions& options) {
  require_connected(g, "check");
  std::vector<Check> out;

  // Complex structure: d^2 = 0 and degree bookkeeping.
  UpsilonComplex c(g);
  {
    bool d2 = true, degrees = true;
    for (const auto& [key, cell] : c.cells()) {
      const int l = cell.m - cell.i;
      for (const CellBlock& blk : cell.blocks)
        if (2 * popcount(c.summands()[blk.summand].removed) + l != cell.i) degrees = false;
      if (cell.d.rows() != c.dimension(cell.i + 1, cell.m)) degrees = false;
      if (!(c.differential(cell.i + 1, cell.m) * cell.d).is_zero()) d2 = false;
    }
    out.push_back(boolean("d_squared_zero", d2));
    out.push_back(boolean("differential_preserves_m", degrees));
  }

  const Integer trees = spanning_tree_count(g);
  if (g.num_edges() <= 12) {
    std::size_t enumerated = 0;
    for_each_spanning_connected_subgraph(g, [&](const SpanningSubgraph& s) { enumerated += s.b1 == 0; });
    out.push_back({"spanning_tree_count", Integer(static_cast<unsigned long>(enumerated)) == trees,
                   std::to_string(enumerated), trees.get_str()});
  }

  PWOptions pw;
  pw.q = options.q;
  pw.count = options.count;
  pw.delcon = g.num_edges() <= options.motive_max_edges;
  PWReport report = pw_report(g, pw);
  out.insert(out.end(), report.checks.begin(), report.checks.end());

  if (report.tutte) {
    const Integer t11 = std::accumulate(report.tutte->terms().begin(), report.tutte->terms().end(), Integer(0),
                                        [](Integer s, const auto& kv) { return s + kv.second; });
    Integer t22 = 0;
    for (const auto& [k, v] : report.tutte->terms()) t22 += v * (Integer(1) << (k.first + k.second));
    const Integer all = Integer(1) << static_cast<unsigned>(g.num_edges());
    out.push_back({"tutte_at_1_1", t11 == trees, t11.get_str(), trees.get_str()});
    out.push_back({"tutte_at_2_2", t22 == all, t22.get_str(), all.get_str()});
  }

  const MonodromyReport mono = verify_relations(g);
  out.push_back(boolean("monodromy_relations", mono.ok()));

  for (const auto& ed : g.edges()) {
    const EdgeKind kind = edge_kind(g, ed.id);
    if (kind == EdgeKind::bridge) {
      BridgeCheck b = bridge_contraction_check(g, ed.id);
      out.push_back(boolean("bridge_contraction_" + ed.id, b.equal()));
    } else if (kind == EdgeKind::ordinary && g.num_edges() <= options.les_max_edges) {
      LongExactSequence seq(g, ed.id);
      out.push_back(boolean("les_exact_" + ed.id,
                            seq.exact() && seq.short_exact().ok() && seq.embedding_residual() == 0 &&
                                seq.quotient_residual() == 0 && seq.alternating_sum() == 0));
      const StrictnessReport grading = verify_strictness(seq, grading_filtrations(seq));
      const StrictnessReport deletion = verify_strictness(seq, deletion_filtrations(seq));
      out.push_back(boolean("les_strict_grading_" + ed.id, grading.ok(),
                            std::to_string(grading.violations.size()) + " violations"));
      out.push_back(boolean("les_strict_deletion_" + ed.id, deletion.ok(),
                            std::to_string(deletion.violations.size()) + " violations"));
    }
  }

  const Fingerprint base = fingerprint(g);
  {
    std::vector<std::string> all;
    for (const auto& ed : g.edges()) all.push_back(ed.id);
    out.push_back(boolean("orientation_invariance", fingerprint(flip_orientation(g, all)) == base));
    std::vector<std::size_t> vperm(g.num_vertices()), eperm(g.num_edges());
    for (std::size_t v = 0; v < vperm.size(); ++v) vperm[v] = vperm.size() - 1 - v;
    for (std::size_t e = 0; e < eperm.size(); ++e) eperm[e] = eperm.size() - 1 - e;
    out.push_back(boolean("relabeling_invariance", fingerprint(relabel(g, vperm, eperm, "r")) == base));
  }

  {
    UpsilonComplex c2(g);
    CohomologyBasis b1(c), b2(c2);
    const BigradedCohomology h1 = cohomology(c), h2 = cohomology(c2);
    const Filtration d1 = deletion_filtration(b1), d2 = deletion_filtration(b2);
    const Filtration g1 = grading_filtration(b1), g2 = grading_filtration(b2);
    const bool same = dump(cohomology_report(g, c, h1, &d1, &g1)) == dump(cohomology_report(g, c2, h2, &d2, &g2)) &&
                      dump(pw_report_json(report)) == dump(pw_report_json(pw_report(g, pw)));
    out.push_back(boolean("deterministic_json", same));
  }
  return out;
}

}  // namespace upsilon
