#include <doctest.h>

#include <cstdlib>

#include "support/corpus.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "upsilon/motive.hpp"
#include "upsilon/pointcount.hpp"

using namespace upsilon;
using namespace upsilon::testing;

namespace {

std::vector<long> as_long(const FqEta& eta) { return {eta.values.begin(), eta.values.end()}; }

// All etas (product 1) in lexicographic order.
std::vector<FqEta> all_etas(const Multigraph& g, std::uint64_t q) {
  std::vector<FqEta> out;
  const std::size_t n = g.num_vertices();
  std::vector<std::uint64_t> v(n, 1);
  while (true) {
    std::uint64_t prod = 1;
    for (std::size_t i = 0; i + 1 < n; ++i) prod = prod * v[i] % q;
    v[n - 1] = static_cast<std::uint64_t>(powmod(static_cast<long>(prod), static_cast<long>(q) - 2, static_cast<long>(q)));
    out.push_back({q, v});
    std::size_t k = 0;
    while (k + 1 < n && ++v[k] == q) v[k++] = 1;
    if (k + 1 >= n) break;
  }
  return out;
}

}  // namespace

TEST_CASE("primality and eta validation") {
  CHECK(is_prime(2));
  CHECK(is_prime(7));
  CHECK(!is_prime(1));
  CHECK(!is_prime(9));
  CHECK(is_prime(1000003));
  CHECK_THROWS_AS(validate_eta(banana(), {4, {1, 1}}), PointCountError);
  CHECK_THROWS_AS(validate_eta(banana(), {5, {2, 2}}), PointCountError);
  CHECK_THROWS_AS(validate_eta(banana(), {5, {2}}), PointCountError);
  CHECK_THROWS_AS(validate_eta(banana(), {5, {0, 0}}), PointCountError);
  CHECK_NOTHROW(validate_eta(banana(), {5, {2, 3}}));
}

TEST_CASE("genericity anchors") {
  CHECK(!is_generic(banana(), {5, {1, 1}}));
  for (std::uint64_t q : {5, 7})
    for (std::uint64_t a = 2; a < q; ++a) {
      std::uint64_t inv = 1;
      while (a * inv % q != 1) ++inv;
      CHECK(is_generic(banana(), {q, {a, inv}}));
    }
  CHECK(is_generic(loop_graph(), {5, {1}}));
  const GenericityCertificate c = certify_generic(banana(), {5, {1, 1}});
  CHECK(!c.generic);
  CHECK(c.witness == std::vector<std::uint64_t>{1, 1});
}

TEST_CASE("generic eta scan") {
  CHECK(find_generic_eta(banana(), 5) == FqEta{5, {2, 3}});
  CHECK(find_generic_eta(loop_graph(), 2) == FqEta{2, {1}});
  // Over F_2 the only eta for theta is (1, 1), which is not generic.
  CHECK_THROWS_AS(find_generic_eta(theta(), 2), PointCountError);
  CHECK_THROWS_AS(find_generic_eta(banana(), 4), PointCountError);
}

TEST_CASE("genericity agrees with direct enumeration") {
  for (const auto& g : connected_multigraphs(4))
    for (std::uint64_t q : {2, 3, 5})
      for (const auto& eta : all_etas(g, q)) {
        CAPTURE(to_json_text(g));
        CHECK(is_generic(g, eta) == oracle_generic(g, static_cast<long>(q), as_long(eta)));
      }
}

TEST_CASE("point count anchors") {
  CHECK(count_points(loop_graph(), {5, {1}}) == 21);
  CHECK(count_points(banana(), {5, {2, 3}}) == 26);
  CHECK(count_points(banana(), find_generic_eta(banana(), 7)) == 50);
  CHECK(count_points(theta(), find_generic_eta(theta(), 3)) == motive_closed_form(theta())(Integer(3)));
}

TEST_CASE("point count errors") {
  CHECK_THROWS_AS(count_points(banana(), {5, {1, 1}}), PointCountError);
  CountOptions tight;
  tight.ceiling = 100;
  CHECK_THROWS_AS(count_points(banana(), {5, {2, 3}}, tight), PointCountError);
  CHECK_THROWS_AS(count_points(banana(), {6, {1, 1}}), PointCountError);
}

TEST_CASE("point counts equal the motive for every generic eta") {
  for (const auto& g : connected_multigraphs(3))
    for (std::uint64_t q : {3, 5}) {
      const Integer expected = motive_closed_form(g)(Integer(static_cast<unsigned long>(q)));
      for (const auto& eta : all_etas(g, q)) {
        if (!is_generic(g, eta)) continue;
        CAPTURE(to_json_text(g));
        const Integer n = count_points(g, eta);
        CHECK(n == expected);
        CHECK(n == oracle_count(g, static_cast<long>(q), as_long(eta)));
      }
    }
}

TEST_CASE("point counts are orientation and thread independent") {
  const Multigraph t = theta();
  const FqEta eta = find_generic_eta(t, 5);
  const Integer base = count_points(t, eta, {CountOptions{}.ceiling, 1});
  CHECK(count_points(t, eta, {CountOptions{}.ceiling, 3}) == base);
  const Multigraph f = flip_orientation(t, {"e2"});
  CHECK(count_points(f, find_generic_eta(f, 5), {CountOptions{}.ceiling, 2}) == base);
  CHECK(thread_count(4) == 4);
  setenv("UPSILON_THREADS", "2", 1);
  CHECK(thread_count(0) == 2);
  unsetenv("UPSILON_THREADS");
  CHECK(thread_count(0) >= 1);
}
