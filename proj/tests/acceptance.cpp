// Acceptance run: one PASS/FAIL line per criterion, followed by indented detail lines.

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "support/corpus.hpp"
#include "support/fixtures.hpp"
#include "upsilon/checks.hpp"
#include "upsilon/report.hpp"

using namespace upsilon;
using namespace upsilon::testing;

namespace {

struct Outcome {
  bool passed = true;
  std::vector<std::string> details;
  void fail(const std::string& why) {
    passed = false;
    details.push_back(why);
  }
  void note(const std::string& s) { details.push_back(s); }
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;  // 0: no time limit
  std::function<Outcome()> run;
};

using RankTable = std::map<std::pair<int, int>, std::size_t>;

RankTable nonzero_ranks(const Multigraph& g) {
  RankTable t;
  for (const auto& [k, r] : cohomology(UpsilonComplex(g)).ranks)
    if (r) t[k] = r;
  return t;
}

std::string show(const RankTable& t) {
  std::ostringstream os;
  for (const auto& [k, r] : t) os << " (" << k.first << "," << k.second << "):" << r;
  return os.str();
}

std::string describe(const Multigraph& g) {
  return std::to_string(g.num_vertices()) + " vertices, " + std::to_string(g.num_edges()) + " edges: " +
         to_json_text(g);
}

// Random graphs with at most 8 edges, seeds 0..49.
std::vector<Multigraph> random_corpus() {
  std::vector<Multigraph> out;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const std::size_t n = 1 + seed % 5;
    const std::size_t m = (n - 1) + seed % (9 - (n - 1));
    out.push_back(random_graph(n, m, seed));
  }
  return out;
}

const std::vector<Multigraph>& corpus_le5_plus_random() {
  static const std::vector<Multigraph> corpus = [] {
    auto c = connected_multigraphs(5);
    for (auto& g : random_corpus()) c.push_back(std::move(g));
    return c;
  }();
  return corpus;
}

const std::vector<Multigraph>& corpus_le6() {
  static const std::vector<Multigraph> corpus = connected_multigraphs(6);
  return corpus;
}

Outcome criterion1() {
  Outcome o;
  const RankTable expected{{{0, 0}, 1}, {{1, 2}, 2}, {{2, 2}, 1}, {{2, 4}, 2},
                           {{3, 6}, 2}, {{4, 4}, 1}, {{4, 6}, 1}, {{4, 8}, 1}};
  const RankTable got = nonzero_ranks(theta());
  o.note("ranks:" + show(got));
  if (got != expected) o.fail("expected:" + show(expected));
  return o;
}

Outcome criterion2() {
  Outcome o;
  const RankTable got = nonzero_ranks(loop_graph());
  o.note("ranks:" + show(got));
  if (got != RankTable{{{0, 0}, 1}, {{1, 2}, 1}, {{2, 4}, 1}}) o.fail("expected ranks 1,1,1 at (0,0), (1,2), (2,4)");
  return o;
}

Outcome criterion3() {
  Outcome o;
  std::size_t n = 0;
  for (const auto& g : corpus_le5_plus_random()) {
    const IntPolynomial a = motive_closed_form(g), b = motive_delcon(g), c = motive_from_tutte(g);
    ++n;
    if (!(a == b && b == c))
      o.fail(describe(g) + ": closed " + a.to_string() + ", delcon " + b.to_string() + ", tutte " + c.to_string());
  }
  o.note(std::to_string(n) + " graphs (all connected multigraphs with <= 5 edges plus 50 random with <= 8)");
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::size_t n = 0;
  for (const auto& g : corpus_le5_plus_random()) {
    const Integer chi = cohomology(UpsilonComplex(g)).euler_characteristic();
    const Integer trees = spanning_tree_count(g);
    ++n;
    if (chi != trees) o.fail(describe(g) + ": chi " + chi.get_str() + " vs trees " + trees.get_str());
  }
  o.note(std::to_string(n) + " graphs");
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::size_t sequences = 0, not_exact = 0, grading_bad = 0, deletion_bad = 0;
  std::set<std::string> witnesses;
  for (const auto& g : corpus_le6()) {
    for (const auto& e : g.edges()) {
      if (edge_kind(g, e.id) != EdgeKind::ordinary) continue;
      ++sequences;
      LongExactSequence seq(g, e.id);
      const bool exact = seq.exact() && seq.short_exact().ok() && seq.compositions_vanish() &&
                         seq.embedding_residual() == 0 && seq.quotient_residual() == 0 && seq.alternating_sum() == 0;
      if (!exact) {
        ++not_exact;
        o.fail("not exact: edge " + e.id + " of " + describe(g));
      }
      if (!verify_strictness(seq, grading_filtrations(seq)).ok()) {
        ++grading_bad;
        o.fail("grading filtration not strict: edge " + e.id + " of " + describe(g));
      }
      const StrictnessReport d = verify_strictness(seq, deletion_filtrations(seq));
      if (!d.ok()) {
        ++deletion_bad;
        o.passed = false;
        std::string where;
        for (const auto& v : d.violations)
          where += " " + v.map + "@H^" + std::to_string(v.degree) + ",k=" + std::to_string(v.k) + "(" + v.kind + ")";
        witnesses.insert(to_json_text(g));
        if (deletion_bad <= 3) o.details.push_back("deletion filtration not strict: edge " + e.id + ":" + where);
      }
    }
  }
  o.note(std::to_string(sequences) + " sequences on graphs with <= 6 edges");
  o.note("exactness failures: " + std::to_string(not_exact));
  o.note("strictness/graded-exactness failures, grading filtration: " + std::to_string(grading_bad));
  o.note("strictness/graded-exactness failures, span-of-images filtration: " + std::to_string(deletion_bad) + " on " +
         std::to_string(witnesses.size()) + " graphs");
  for (const auto& w : witnesses) o.note("  witness graph " + w);
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::size_t n = 0;
  for (const auto& g : corpus_le6()) {
    ++n;
    const UpsilonComplex c(g);
    const CohomologyBasis basis(c);
    const Filtration d = deletion_filtration(basis), gr = grading_filtration(basis);
    if (d == gr) continue;
    std::string diff;
    for (const auto& [i, steps] : gr.steps())
      for (int k = 0; k <= i; ++k)
        if (d.dim(i, k) != gr.dim(i, k))
          diff += " D_" + std::to_string(k) + "H^" + std::to_string(i) + ": " + std::to_string(d.dim(i, k)) + " vs " +
                  std::to_string(gr.dim(i, k)) + ";";
    o.fail(describe(g) + " span-of-images vs grading:" + diff);
  }
  o.note(std::to_string(n) + " graphs with <= 6 edges");
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::vector<Multigraph> graphs{loop_graph(), banana(), theta()};
  for (const auto& g : connected_multigraphs(3)) graphs.push_back(g);
  std::size_t compared = 0, skipped = 0;
  for (const auto& g : graphs) {
    const IntPolynomial motive = motive_closed_form(g);
    for (std::uint64_t q : {3, 5, 7}) {
      FqEta eta;
      try {
        eta = find_generic_eta(g, q);
      } catch (const PointCountError&) {
        ++skipped;
        continue;
      }
      const Integer count = count_points(g, eta);
      const Integer expected = motive(Integer(static_cast<unsigned long>(q)));
      ++compared;
      if (count != expected)
        o.fail(describe(g) + " q=" + std::to_string(q) + ": count " + count.get_str() + " vs motive " + expected.get_str());
    }
  }
  const Integer loop5 = count_points(loop_graph(), find_generic_eta(loop_graph(), 5));
  const Integer banana5 = count_points(banana(), find_generic_eta(banana(), 5));
  o.note("loop q=5: " + loop5.get_str() + ", banana q=5: " + banana5.get_str());
  if (loop5 != 21) o.fail("loop q=5 expected 21");
  if (banana5 != 26) o.fail("banana q=5 expected 26");
  o.note(std::to_string(compared) + " (graph, q) pairs compared, " + std::to_string(skipped) + " without a generic eta");
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::size_t n = 0;
  for (const auto& g : corpus_le5_plus_random()) {
    const BiPolynomial p = mixed_poincare(g);
    const IntPolynomial lhs = duality_polynomial(p, static_cast<unsigned>(g.first_betti()));
    const IntPolynomial rhs = motive_closed_form(g);
    ++n;
    if (!(lhs == rhs)) o.fail(describe(g) + ": " + lhs.to_string("q") + " vs " + rhs.to_string("q"));
  }
  o.note(std::to_string(n) + " graphs");
  return o;
}

Outcome criterion9() {
  Outcome o;
  constexpr std::uint64_t kSeeds = 200;
  std::size_t d2 = 0, flips = 0, relabels = 0, mono = 0, json = 0;
  for (std::uint64_t seed = 0; seed < kSeeds; ++seed) {
    const std::size_t n = 1 + seed % 5;
    const std::size_t m = (n - 1) + (seed / 5) % (8 - (n - 1));
    const Multigraph g = random_graph(n, m, 10000 + seed);
    const std::string tag = "seed " + std::to_string(seed) + " " + describe(g);

    const UpsilonComplex c(g);
    bool ok = true;
    for (const auto& [key, cell] : c.cells()) {
      for (const auto& blk : cell.blocks)
        if (2 * popcount(c.summands()[blk.summand].removed) + (cell.m - cell.i) != cell.i) ok = false;
      if (!(c.differential(cell.i + 1, cell.m) * cell.d).is_zero()) ok = false;
    }
    d2 += ok;
    if (!ok) o.fail("d^2 != 0 or degree mismatch: " + tag);

    const Fingerprint base = fingerprint(g);
    std::vector<std::string> subset;
    for (std::size_t e = 0; e < g.num_edges(); ++e)
      if ((seed >> (e % 8)) & 1) subset.push_back(g.edge(e).id);
    if (fingerprint(flip_orientation(g, subset)) == base)
      ++flips;
    else
      o.fail("orientation flip changed outputs: " + tag);

    std::vector<std::size_t> vp(g.num_vertices()), ep(g.num_edges());
    for (std::size_t i = 0; i < vp.size(); ++i) vp[i] = (i * 3 + seed) % vp.size();
    if (std::set<std::size_t>(vp.begin(), vp.end()).size() != vp.size())
      for (std::size_t i = 0; i < vp.size(); ++i) vp[i] = vp.size() - 1 - i;
    for (std::size_t i = 0; i < ep.size(); ++i) ep[i] = (i + seed) % ep.size();
    if (fingerprint(relabel(g, vp, ep, "r")) == base)
      ++relabels;
    else
      o.fail("relabeling changed outputs: " + tag);

    const MonodromyReport r = verify_relations(g);
    if (r.ok())
      ++mono;
    else
      o.fail("monodromy relations: " + tag);

    auto render = [&] {
      const UpsilonComplex cc(g);
      const CohomologyBasis basis(cc);
      const BigradedCohomology bc = cohomology(cc);
      const Filtration d = deletion_filtration(basis), gr = grading_filtration(basis);
      return dump(cohomology_report(g, cc, bc, &d, &gr)) + dump(monodromy_report(g, verify_relations(g)));
    };
    if (render() == render())
      ++json;
    else
      o.fail("JSON output not deterministic: " + tag);
  }
  o.note(std::to_string(kSeeds) + " seeds: d^2=0 " + std::to_string(d2) + ", flip " + std::to_string(flips) +
         ", relabel " + std::to_string(relabels) + ", monodromy " + std::to_string(mono) + ", json " +
         std::to_string(json));
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::vector<int> only;
  bool verbose = false;
  app.add_option("criteria", only, "Criteria to run (default: all)")->check(CLI::Range(1, 9));
  app.add_flag("-v,--verbose", verbose, "Print every detail line");
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria{
      {1, "theta bigraded ranks", 1, criterion1},
      {2, "loop graph ranks", 1, criterion2},
      {3, "motive agreement (closed form, deletion-contraction, Tutte)", 120, criterion3},
      {4, "Euler characteristic equals spanning-tree count", 0, criterion4},
      {5, "deletion-contraction sequence exact and strict", 300, criterion5},
      {6, "span-of-images filtration equals grading filtration", 0, criterion6},
      {7, "point counts equal motive", 60, criterion7},
      {8, "duality identity q^{2b1} P(1/q, -1) = motive", 0, criterion8},
      {9, "structural properties over 200 seeds", 0, criterion9},
  };

  bool all = true;
  for (const auto& c : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream timing;
    timing << std::fixed << std::setprecision(2) << secs << "s";
    if (c.limit_seconds > 0) {
      timing << " / limit " << c.limit_seconds << "s";
      if (secs > c.limit_seconds) o.fail("time limit exceeded");
    }
    all = all && o.passed;
    std::cout << "criterion " << c.id << ": " << (o.passed ? "PASS" : "FAIL") << "  " << c.title << "  ("
              << timing.str() << ")\n";
    const std::size_t limit = verbose ? o.details.size() : std::min<std::size_t>(o.details.size(), 12);
    for (std::size_t i = 0; i < limit; ++i) std::cout << "    " << o.details[i] << "\n";
    if (limit < o.details.size()) std::cout << "    ... " << o.details.size() - limit << " more (use --verbose)\n";
    std::cout.flush();
  }
  return all ? 0 : 1;
}
