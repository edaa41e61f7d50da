#include <doctest.h>

#include "support/corpus.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "upsilon/motive.hpp"

using namespace upsilon;
using namespace upsilon::testing;

namespace {

IntPolynomial P(std::vector<long> c) {
  std::vector<Integer> z(c.begin(), c.end());
  return IntPolynomial(std::move(z));
}

IntPolynomial from_oracle(const Poly& p) { return P(p); }

BiPolynomial bi(const std::map<std::pair<unsigned, unsigned>, long>& t) {
  BiPolynomial b;
  for (const auto& [k, v] : t) b.add(k.first, k.second, Integer(v));
  return b;
}

const IntPolynomial kLoop = P({1, -1, 1});

}  // namespace

TEST_CASE("polynomial arithmetic") {
  const IntPolynomial x = IntPolynomial::monomial(1);
  CHECK((x - 1) * (x + 1) == P({-1, 0, 1}));
  CHECK(kLoop.pow(2) == kLoop * kLoop);
  CHECK((x - x).is_zero());
  CHECK((x - x).degree() == -1);
  CHECK(kLoop(Integer(5)) == 21);
  CHECK(P({1, -1, 3, -1, 1}).to_string() == "L^4 - L^3 + 3L^2 - L + 1");
  CHECK(P({0}).to_string() == "0");
  BiPolynomial b;
  b.add(0, 1, 1);
  b.add(1, 0, 1);
  b.add(0, 2, 1);
  CHECK(b.to_string("x", "y") == "y^2 + x + y");
  CHECK(b.degree_x() == 1);
  CHECK(b.degree_y() == 2);
  CHECK(b.grid() == std::vector<std::vector<Integer>>{{0, 1, 1}, {1, 0, 0}});
}

TEST_CASE("motive anchors") {
  CHECK(motive_closed_form(loop_graph()) == kLoop);
  CHECK(motive_closed_form(theta()) == P({1, -1, 3, -1, 1}));
  CHECK(motive_closed_form(banana()) == P({1, 0, 1}));
  CHECK(motive_delcon(single_edge()) == P({1}));
  CHECK(motive_delcon(two_loops()) == kLoop.pow(2));
  CHECK(motive_delcon(theta()) == P({1, -1, 3, -1, 1}));
  CHECK(motive_from_tutte(theta()) == P({1, -1, 3, -1, 1}));
  CHECK_THROWS_AS(motive_closed_form(graph({"a", "b"}, {})), GraphError);
}

TEST_CASE("Tutte polynomials") {
  // Theta is three parallel edges: T = x + y + y^2. The triangle is its dual: x^2 + x + y.
  BiPolynomial theta_t;
  theta_t.add(1, 0, 1);
  theta_t.add(0, 1, 1);
  theta_t.add(0, 2, 1);
  CHECK(tutte(theta()) == theta_t);
  BiPolynomial tri;
  tri.add(2, 0, 1);
  tri.add(1, 0, 1);
  tri.add(0, 1, 1);
  CHECK(tutte(triangle()) == tri);
  const BiPolynomial t = tutte(theta());
  Integer t11 = 0;
  for (const auto& [k, v] : t.terms()) t11 += v;
  CHECK(t11 == 3);
}

TEST_CASE("mixed Poincare polynomials") {
  auto grid_term = [](const BiPolynomial& p, unsigned qexp, unsigned texp) { return p.coefficient(qexp, texp); };
  const BiPolynomial loop = mixed_poincare(loop_graph());
  CHECK(loop.terms().size() == 3);
  CHECK(grid_term(loop, 0, 0) == 1);
  CHECK(grid_term(loop, 1, 1) == 1);
  CHECK(grid_term(loop, 2, 2) == 1);

  BiPolynomial th;
  th.add(0, 0, 1);
  th.add(1, 1, 2);
  th.add(1, 2, 1);
  th.add(2, 2, 2);
  th.add(3, 3, 2);
  th.add(2, 4, 1);
  th.add(3, 4, 1);
  th.add(4, 4, 1);
  CHECK(mixed_poincare(theta()) == th);

  BiPolynomial ba;
  ba.add(0, 0, 1);
  ba.add(1, 1, 1);
  ba.add(1, 2, 1);
  ba.add(2, 2, 1);
  CHECK(mixed_poincare(banana()) == ba);

  CHECK(duality_polynomial(loop, 1) == kLoop);
  CHECK(duality_polynomial(th, 2) == P({1, -1, 3, -1, 1}));
  CHECK(duality_polynomial(ba, 1) == P({1, 0, 1}));
}

TEST_CASE("three motive pipelines agree with the brute-force oracle") {
  std::vector<Multigraph> corpus = connected_multigraphs(5);
  for (std::uint64_t s = 0; s < 50; ++s) corpus.push_back(random_graph(1 + s % 5, std::max<std::size_t>(s % 5, s % 9), s));
  for (const auto& g : corpus) {
    CAPTURE(to_json_text(g));
    const IntPolynomial closed = motive_closed_form(g);
    CHECK(closed == from_oracle(oracle_motive(g)));
    CHECK(motive_delcon(g) == closed);
    CHECK(motive_delcon(g, 0) == closed);
    CHECK(motive_from_tutte(g) == closed);
    CHECK(tutte(g) == bi(oracle_tutte(g)));
    CHECK(tutte(g, 0) == tutte(g));
    // Monic of degree 2 b1, value at 1 equals the spanning-tree count.
    CHECK(closed.degree() == 2 * static_cast<int>(g.first_betti()));
    CHECK(closed.coefficients().back() == 1);
    CHECK(closed(Integer(1)) == oracle_spanning_trees(g));
  }
}

TEST_CASE("duality identity and Poincare sums") {
  for (const auto& g : connected_multigraphs(4)) {
    const UpsilonComplex c(g);
    const BigradedCohomology bc = cohomology(c);
    const BiPolynomial p = mixed_poincare(bc);
    CHECK(duality_polynomial(p, static_cast<unsigned>(g.first_betti())) == motive_closed_form(g));
    Integer total = 0, alternating = 0;
    for (const auto& [k, v] : p.terms()) {
      CHECK(v > 0);
      total += v;
      alternating += (k.second % 2 ? -1 : 1) * v;
    }
    std::size_t betti = 0;
    for (const auto& [i, r] : bc.betti()) betti += r;
    CHECK(total == static_cast<unsigned long>(betti));
    CHECK(alternating == spanning_tree_count(g));
  }
}

TEST_CASE("motive is invariant under bridge contraction and orientation") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Multigraph g = random_graph(4, 6, seed);
    const IntPolynomial m = motive_closed_form(g);
    for (const auto& e : g.edges()) {
      if (edge_kind(g, e.id) == EdgeKind::bridge) CHECK(motive_closed_form(contract_edge(g, e.id)) == m);
      CHECK(motive_closed_form(flip_orientation(g, {e.id})) == m);
    }
  }
}

TEST_CASE("pw report") {
  PWOptions opt;
  opt.q = {5};
  const PWReport r = pw_report(banana(), opt);
  CHECK(r.ok());
  REQUIRE(r.counts.size() == 1);
  REQUIRE(r.counts[0].count);
  CHECK(*r.counts[0].count == 26);
  for (const auto& c : r.checks) CHECK_MESSAGE(c.passed, c.name);

  const PWReport loop = pw_report(loop_graph());
  CHECK(loop.ok());
  CHECK(loop.motive == kLoop);
  const PWReport k = pw_report(k4());
  CHECK(!k.ok());
  bool saw = false;
  for (const auto& c : k.checks)
    if (c.name == "deletion_filtration_equals_grading") {
      saw = true;
      CHECK(!c.passed);
    } else {
      CHECK_MESSAGE(c.passed, c.name);
    }
  CHECK(saw);
}
