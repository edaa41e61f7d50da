#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "upsilon/graph.hpp"
#include "upsilon/polynomial.hpp"
#include "upsilon/pointcount.hpp"
#include "upsilon/upsilon.hpp"

namespace upsilon {

// Class of B(G) in the Grothendieck ring, as a polynomial in L.
// Sum over connected spanning subgraphs G' of (L-1)^{2 b1(G')} L^{b1(G) - b1(G')}.
IntPolynomial motive_closed_form(const Multigraph& g);

// Recursion: bridge -> contract, loop -> (L^2 - L + 1) * delete, otherwise L [G\e] + [G/e].
// Memoized on canonical forms of graphs with at most `memo_edges` edges.
IntPolynomial motive_delcon(const Multigraph& g, std::size_t memo_edges = 10);

// Tutte polynomial T(x, y) by deletion-contraction (x-degree first).
BiPolynomial tutte(const Multigraph& g, std::size_t memo_edges = 10);

// L^{b1} T(1, (L^2 - L + 1)/L), with the denominators cleared exactly.
IntPolynomial motive_from_tutte(const Multigraph& g);
IntPolynomial motive_from_tutte(const BiPolynomial& t, unsigned b1);

// Coefficient of q^{m/2} t^i is rank H^i_m (terms keyed (m/2, i)).
BiPolynomial mixed_poincare(const BigradedCohomology& bc);
BiPolynomial mixed_poincare(const Multigraph& g);

// q^{2 b1} P(1/q, -1).
IntPolynomial duality_polynomial(const BiPolynomial& p, unsigned b1);

struct Check {
  std::string name;
  bool passed = false;
  std::string lhs, rhs;  // both sides, for failures and for the record
};

struct PointCountResult {
  std::uint64_t q = 0;
  std::optional<FqEta> eta;  // absent if no generic eta exists for q
  std::optional<Integer> count;
  Integer motive_value;
  std::string note;
};

struct PWOptions {
  std::vector<std::uint64_t> q;  // primes for the optional point-count check
  CountOptions count;
  bool delcon = true;  // also run the deletion-contraction and Tutte pipelines
};

struct PWReport {
  Multigraph graph;
  unsigned b1 = 0;
  Integer spanning_trees;
  BigradedCohomology cohomology;
  IntPolynomial motive;  // closed form
  std::optional<IntPolynomial> motive_delcon, motive_tutte;
  std::optional<BiPolynomial> tutte;
  BiPolynomial mixed_poincare;
  Filtration deletion, grading;
  std::vector<PointCountResult> counts;
  std::vector<Check> checks;
  bool ok() const;
};

PWReport pw_report(const Multigraph& g, const PWOptions& options = {});

}  // namespace upsilon
