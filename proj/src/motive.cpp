#include "upsilon/motive.hpp"

#include <map>
#include <sstream>

namespace upsilon {

namespace {

const IntPolynomial& lefschetz() {
  static const IntPolynomial L = IntPolynomial::monomial(1);
  return L;
}

// L^2 - L + 1, the class of the loop graph.
const IntPolynomial& loop_class() {
  static const IntPolynomial p(std::vector<Integer>{1, -1, 1});
  return p;
}

template <class Value, class Step>
Value memoized(const Multigraph& g, std::size_t memo_edges, std::map<std::string, Value>& memo, Step step) {
  std::optional<std::string> key;
  if (g.num_edges() <= memo_edges) {
    key = canonical_key(g);
    if (key) {
      auto it = memo.find(*key);
      if (it != memo.end()) return it->second;
    }
  }
  Value v = step(g);
  if (key) memo.emplace(*key, v);
  return v;
}

IntPolynomial motive_rec(const Multigraph& g, std::size_t memo_edges, std::map<std::string, IntPolynomial>& memo) {
  return memoized(g, memo_edges, memo, [&](const Multigraph& h) -> IntPolynomial {
    if (h.num_edges() == 0) return IntPolynomial(1);
    const std::string& id = h.edge(0).id;
    switch (edge_kind(h, id)) {
      case EdgeKind::loop:
        return loop_class() * motive_rec(delete_edge(h, id), memo_edges, memo);
      case EdgeKind::bridge:
        return motive_rec(contract_edge(h, id), memo_edges, memo);
      case EdgeKind::ordinary:
        return lefschetz() * motive_rec(delete_edge(h, id), memo_edges, memo) +
               motive_rec(contract_edge(h, id), memo_edges, memo);
    }
    return {};
  });
}

BiPolynomial tutte_rec(const Multigraph& g, std::size_t memo_edges, std::map<std::string, BiPolynomial>& memo) {
  return memoized(g, memo_edges, memo, [&](const Multigraph& h) -> BiPolynomial {
    if (h.num_edges() == 0) {
      BiPolynomial one;
      one.add(0, 0, 1);
      return one;
    }
    const std::string& id = h.edge(0).id;
    switch (edge_kind(h, id)) {
      case EdgeKind::loop:
        return tutte_rec(delete_edge(h, id), memo_edges, memo).times_y();
      case EdgeKind::bridge:
        return tutte_rec(contract_edge(h, id), memo_edges, memo).times_x();
      case EdgeKind::ordinary:
        return tutte_rec(delete_edge(h, id), memo_edges, memo) + tutte_rec(contract_edge(h, id), memo_edges, memo);
    }
    return {};
  });
}

std::string filtration_text(const Filtration& f) {
  std::ostringstream os;
  bool first = true;
  for (const auto& e : f.table()) {
    os << (first ? "" : " ") << "D" << e.k << "H" << e.i << "=" << e.dim;
    first = false;
  }
  return os.str();
}

}  // namespace

IntPolynomial motive_closed_form(const Multigraph& g) {
  require_connected(g, "motive_closed_form");
  const unsigned b1 = static_cast<unsigned>(g.first_betti());
  const IntPolynomial Lm1 = lefschetz() - IntPolynomial(1);
  std::vector<Integer> count(b1 + 1);  // number of spanning subgraphs per b1
  for_each_spanning_connected_subgraph(g, [&](const SpanningSubgraph& s) { count[s.b1] += 1; });
  IntPolynomial total;
  for (unsigned b = 0; b <= b1; ++b)
    if (count[b] != 0)
      total = total + IntPolynomial(std::vector<Integer>{count[b]}) * Lm1.pow(2 * b) * IntPolynomial::monomial(b1 - b);
  return total;
}

IntPolynomial motive_delcon(const Multigraph& g, std::size_t memo_edges) {
  require_connected(g, "motive_delcon");
  std::map<std::string, IntPolynomial> memo;
  return motive_rec(g, memo_edges, memo);
}

BiPolynomial tutte(const Multigraph& g, std::size_t memo_edges) {
  require_connected(g, "tutte");
  std::map<std::string, BiPolynomial> memo;
  return tutte_rec(g, memo_edges, memo);
}

IntPolynomial motive_from_tutte(const BiPolynomial& t, unsigned b1) {
  // T(1, y) = sum_j t_j y^j; L^{b1} (L^2-L+1)^j / L^j = (L^2-L+1)^j L^{b1-j}.
  std::vector<Integer> ty(t.degree_y() + 1);
  for (const auto& [k, c] : t.terms()) ty[k.second] += c;
  if (ty.size() > b1 + 1) throw std::logic_error("motive_from_tutte: y-degree exceeds the first Betti number");
  IntPolynomial total;
  for (unsigned j = 0; j < ty.size(); ++j)
    if (ty[j] != 0)
      total = total + IntPolynomial(std::vector<Integer>{ty[j]}) * loop_class().pow(j) * IntPolynomial::monomial(b1 - j);
  return total;
}

IntPolynomial motive_from_tutte(const Multigraph& g) {
  return motive_from_tutte(tutte(g), static_cast<unsigned>(g.first_betti()));
}

BiPolynomial mixed_poincare(const BigradedCohomology& bc) {
  BiPolynomial p;
  for (const auto& [key, r] : bc.ranks)
    p.add(static_cast<unsigned>(key.second / 2), static_cast<unsigned>(key.first), static_cast<unsigned long>(r));
  return p;
}

BiPolynomial mixed_poincare(const Multigraph& g) { return mixed_poincare(cohomology(UpsilonComplex(g))); }

IntPolynomial duality_polynomial(const BiPolynomial& p, unsigned b1) {
  std::vector<Integer> c(2 * b1 + 1);
  for (const auto& [k, v] : p.terms()) {
    if (k.first > 2 * b1) throw std::logic_error("duality_polynomial: weight exceeds 4 b1");
    c[2 * b1 - k.first] += (k.second % 2 == 0) ? v : Integer(-v);
  }
  return IntPolynomial(std::move(c));
}

bool PWReport::ok() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

PWReport pw_report(const Multigraph& g, const PWOptions& options) {
  require_connected(g, "pw_report");
  PWReport r;
  r.graph = g;
  r.b1 = static_cast<unsigned>(g.first_betti());
  r.spanning_trees = spanning_tree_count(g);

  UpsilonComplex complex(g);
  CohomologyBasis basis(complex);
  r.cohomology = cohomology(complex);
  r.mixed_poincare = mixed_poincare(r.cohomology);
  r.deletion = deletion_filtration(basis);
  r.grading = grading_filtration(basis);
  r.motive = motive_closed_form(g);

  const Integer chi = r.cohomology.euler_characteristic();
  r.checks.push_back({"euler_characteristic", chi == r.spanning_trees, chi.get_str(), r.spanning_trees.get_str()});

  std::string shape = "degree " + std::to_string(r.motive.degree()) + ", leading " +
                      (r.motive.is_zero() ? std::string("0") : r.motive.coefficients().back().get_str()) +
                      ", value at 1 " + r.motive(1).get_str();
  const bool shape_ok = r.motive.degree() == static_cast<int>(2 * r.b1) && r.motive.coefficients().back() == 1 &&
                        r.motive(1) == r.spanning_trees;
  r.checks.push_back({"motive_shape", shape_ok, shape,
                      "degree " + std::to_string(2 * r.b1) + ", leading 1, value at 1 " + r.spanning_trees.get_str()});

  if (options.delcon) {
    r.motive_delcon = motive_delcon(g);
    r.tutte = tutte(g);
    r.motive_tutte = motive_from_tutte(*r.tutte, r.b1);
    const bool agree = r.motive == *r.motive_delcon && r.motive == *r.motive_tutte;
    r.checks.push_back({"motive_agreement", agree, r.motive.to_string(),
                        r.motive_delcon->to_string() + " | " + r.motive_tutte->to_string()});
  }

  const IntPolynomial dual = duality_polynomial(r.mixed_poincare, r.b1);
  r.checks.push_back({"duality_identity", dual == r.motive, dual.to_string("q"), r.motive.to_string("q")});

  r.checks.push_back(
      {"deletion_filtration_equals_grading", r.deletion == r.grading, filtration_text(r.deletion), filtration_text(r.grading)});

  for (std::uint64_t q : options.q) {
    PointCountResult pc;
    pc.q = q;
    pc.motive_value = r.motive(Integer(static_cast<unsigned long>(q)));
    try {
      pc.eta = find_generic_eta(g, q);
    } catch (const PointCountError& e) {
      pc.note = e.what();
      r.counts.push_back(std::move(pc));
      continue;
    }
    pc.count = count_points(g, *pc.eta, options.count);
    r.checks.push_back({"point_count_q" + std::to_string(q), *pc.count == pc.motive_value, pc.count->get_str(),
                        pc.motive_value.get_str()});
    r.counts.push_back(std::move(pc));
  }
  return r;
}

}  // namespace upsilon
