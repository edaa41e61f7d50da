#include <doctest.h>

#include "support/fixtures.hpp"
#include "upsilon/monodromy.hpp"

using namespace upsilon;
using namespace upsilon::testing;

TEST_CASE("log monodromy anchors") {
  const Multigraph lollipop = graph({"a", "b"}, {{"l", "a", "a"}, {"br", "a", "b"}});
  CHECK(log_monodromy(lollipop, "br").matrix.is_zero());
  CHECK(log_monodromy(lollipop, "br").rank == 0);

  const NilpotentOperator loop = log_monodromy(loop_graph(), "e");
  CHECK(loop.rank == 1);
  CHECK((loop.matrix * loop.matrix).is_zero());

  const NilpotentOperator n1 = log_monodromy(banana(), "e1"), n2 = log_monodromy(banana(), "e2");
  CHECK(n1.rank == 1);
  CHECK((n1.matrix * n2.matrix).is_zero());
  CHECK_THROWS_AS(log_monodromy(banana(), "zz"), GraphError);
}

TEST_CASE("monodromy relations") {
  const MonodromyReport t = verify_relations(theta());
  CHECK(t.ok());
  CHECK(t.products_zero);
  CHECK(t.edges.size() == 3);
  for (const auto& e : verify_relations(path2()).edges) CHECK(e.rank == 0);
  const MonodromyReport l = verify_relations(loop_graph());
  REQUIRE(l.edges.size() == 1);
  CHECK(l.edges[0].rank == 1);
  CHECK(l.edges[0].square_zero);

  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Multigraph g = random_graph(1 + seed % 5, 6, seed);
    const MonodromyReport r = verify_relations(g);
    CHECK(r.ok());
    for (const auto& e : r.edges) {
      CHECK(e.matches_d_prime);
      CHECK(log_monodromy(g, e.edge).matrix == d_prime(g, e.edge));
      CHECK(e.rank == (e.kind == EdgeKind::bridge ? 0u : 1u));
    }
  }
}
