#include <algorithm>

#include "upsilon/upsilon.hpp"

namespace upsilon {

HHSpace::HHSpace(const Multigraph& g, EdgeMask alive) : alive_(alive & g.all_edges()), num_edges_(g.num_edges()) {
  if (g.num_vertices() == 0 || !g.is_connected(alive_)) throw GraphError("HH space of a disconnected graph");
  const EdgeMask tree = greedy_spanning_tree(g, alive_);
  for (std::size_t e = 0; e < g.num_edges(); ++e)
    if ((alive_ & bit(e)) && !(tree & bit(e))) cotree_.push_back(e);
  cycles_ = cycle_basis(g, alive_);
}

std::vector<Integer> HHSpace::cochain_coordinates(const std::vector<Integer>& cochain) const {
  std::vector<Integer> out(b1());
  for (unsigned j = 0; j < b1(); ++j)
    for (std::size_t e = 0; e < num_edges_; ++e)
      if (cycles_[j].coefficients[e] != 0 && cochain[e] != 0) out[j] += cycles_[j].coefficients[e] * cochain[e];
  return out;
}

std::vector<Integer> HHSpace::cycle_coordinates(const std::vector<Integer>& cycle) const {
  std::vector<Integer> out(b1());
  for (unsigned j = 0; j < b1(); ++j) out[j] = cycle[cotree_[j]];
  return out;
}

HHSpace hh_space(const Multigraph& g) {
  require_connected(g, "hh_space");
  return HHSpace(g, g.all_edges());
}

IntMatrix d_prime(const HHSpace& h, std::size_t edge) {
  if (edge >= h.num_edges()) throw GraphError("d_prime: edge index out of range");
  const unsigned b = h.b1();
  IntMatrix m(2 * b, 2 * b);
  for (unsigned i = 0; i < b; ++i)
    for (unsigned j = 0; j < b; ++j) m(b + j, i) = h.pairing(i, edge) * h.pairing(j, edge);
  return m;
}

IntMatrix d_prime(const Multigraph& g, std::string_view edge_id) {
  const std::size_t e = g.edge_index(edge_id);
  return d_prime(hh_space(g), e);
}

DeletionData deletion_data(const HHSpace& source, const HHSpace& target, std::size_t e) {
  const unsigned b = source.b1(), bt = target.b1();
  if (bt + 1 != b || target.alive() != (source.alive() & ~bit(e)))
    throw std::logic_error("deletion_data: target is not the source with e removed");
  DeletionData d;
  d.pairing.resize(2 * b, 0);
  d.image.resize(2 * b);
  unsigned star = b;
  for (unsigned i = 0; i < b; ++i) {
    d.pairing[i] = source.pairing(i, e);
    if (d.pairing[i] != 0 && star == b) star = i;
  }
  if (star == b) throw std::logic_error("deletion_data: e is a bridge of the source");
  const int s = d.pairing[star];
  if (s != 1 && s != -1) throw std::logic_error("deletion_data: fundamental cycle coefficient is not a unit");

  const auto& theta = source.cycles();
  for (unsigned i = 0; i < b; ++i) {
    // theta_i - <theta_i, e> s theta*: a cycle avoiding e.
    std::vector<Integer> z(source.num_edges());
    for (std::size_t f = 0; f < z.size(); ++f)
      z[f] = theta[i].coefficients[f] - d.pairing[i] * s * theta[star].coefficients[f];
    if (z[e] != 0) throw std::logic_error("deletion_data: projected cycle meets e");
    auto coords = target.cycle_coordinates(z);
    for (unsigned j = 0; j < bt; ++j)
      if (coords[j] != 0) d.image[i].emplace_back(j, coords[j]);
  }
  for (unsigned i = 0; i < b; ++i) {
    const std::size_t f = source.cotree()[i];
    if (f == e) continue;  // [e] restricts to zero
    for (unsigned j = 0; j < bt; ++j) {
      int c = target.pairing(j, f);
      if (c != 0) d.image[b + i].emplace_back(bt + j, Integer(c));
    }
  }
  d.monomial = true;
  std::vector<char> hit(2 * bt, 0);
  for (const auto& img : d.image) {
    if (img.empty()) continue;
    if (img.size() != 1 || cmpabs(img[0].second, 1) != 0 || hit[img[0].first]) {
      d.monomial = false;
      break;
    }
    hit[img[0].first] = 1;
  }
  return d;
}

WedgeVector apply_deletion(const DeletionData& data, Monomial s) {
  WedgeVector out;
  unsigned position = 0;
  for (unsigned k = 0; k < data.pairing.size(); ++k) {
    if (!(s >> k & 1)) continue;
    const unsigned pos = position++;
    if (data.pairing[k] == 0) continue;
    int coeff = data.pairing[k] * ((pos & 1) ? -1 : 1);
    const Monomial rest = s & ~(Monomial{1} << k);
    if (data.monomial) {
      Monomial t = 0;
      int sign = coeff;
      bool zero = false;
      for (unsigned r = 0; r < data.pairing.size() && !zero; ++r) {
        if (!(rest >> r & 1)) continue;
        const auto& img = data.image[r];
        if (img.empty()) {
          zero = true;
          break;
        }
        const unsigned j = img[0].first;
        if (img[0].second < 0) sign = -sign;
        sign *= insertion_sign(t, j);
        t |= Monomial{1} << j;
      }
      if (!zero) out.emplace_back(t, Integer(sign));
    } else {
      std::vector<std::vector<std::pair<unsigned, Integer>>> factors;
      for (unsigned r = 0; r < data.pairing.size(); ++r)
        if (rest >> r & 1) factors.push_back(data.image[r]);
      for (auto& [m, c] : wedge(factors)) out.emplace_back(m, coeff * c);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  WedgeVector merged;
  for (auto& [m, c] : out) {
    if (!merged.empty() && merged.back().first == m)
      merged.back().second += c;
    else
      merged.emplace_back(m, std::move(c));
    if (merged.back().second == 0) merged.pop_back();
  }
  return merged;
}

IntMatrix edge_deletion_map(const Multigraph& g, EdgeMask J, std::string_view edge_id, unsigned l) {
  const std::size_t e = g.edge_index(edge_id);
  const EdgeMask alive = g.all_edges() & ~J;
  if (!(alive & bit(e))) throw GraphError("edge_deletion_map: edge \"" + std::string(edge_id) + "\" lies in J");
  if (!g.is_connected(alive)) throw GraphError("edge_deletion_map: G\\J is disconnected");
  if (edge_kind(g, e, alive) == EdgeKind::bridge)
    throw GraphError("edge_deletion_map: \"" + std::string(edge_id) + "\" is a bridge of G\\J");
  HHSpace source(g, alive), target(g, alive & ~bit(e));
  if (l == 0 || l > source.rank()) throw GraphError("edge_deletion_map: exterior degree out of range");
  WedgeBasis from(source.rank(), l), to(target.rank(), l - 1);
  DeletionData data = deletion_data(source, target, e);
  IntMatrix m(to.size(), from.size());
  for (std::size_t w = 0; w < from.size(); ++w)
    for (auto& [t, c] : apply_deletion(data, from.monomial(w))) m(to.index_of(t), w) = c;
  return m;
}

}  // namespace upsilon
