#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "upsilon/checks.hpp"
#include "upsilon/report.hpp"

using namespace upsilon;

namespace {

constexpr int kOk = 0, kMathFailure = 1, kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  bool json = false;
  std::string input;
  std::string ring = "rationals";
  std::string filtration = "both";
  std::string method = "all";
  std::string edge;
  std::vector<std::uint64_t> q;
  std::string eta;
  std::uint64_t ceiling = CountOptions{}.ceiling;
  unsigned threads = 0;
  std::size_t vertices = 0, edges = 0;
  std::uint64_t seed = 0;
};

Multigraph load(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::error_code ec;
    if (!std::filesystem::is_regular_file(path, ec)) throw UsageError("cannot read graph file \"" + path + "\"");
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read graph file \"" + path + "\"");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return parse_graph(text);
}

void emit(const Config& cfg, const Json& j, const std::string& human) {
  if (cfg.json)
    std::cout << dump(j);
  else
    std::cout << human;
}

std::string rank_text(const BigradedCohomology& bc) {
  std::ostringstream os;
  os << "  i   m  rank\n";
  for (const auto& [key, r] : bc.ranks)
    if (r) os << "  " << key.first << "   " << key.second << "  " << r << "\n";
  return os.str();
}

std::string filtration_text(const char* name, const Filtration& f) {
  std::ostringstream os;
  os << name << " filtration (dim D_k H^i):\n";
  int current = -1;
  for (const auto& e : f.table()) {
    if (e.i != current) {
      if (current >= 0) os << "\n";
      os << "  H^" << e.i << ":";
      current = e.i;
    }
    os << " " << e.dim;
  }
  if (current >= 0) os << "\n";
  return os.str();
}

std::string checks_text(const std::vector<Check>& checks) {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.passed ? "  pass  " : "  FAIL  ") << c.name;
    if (!c.passed) os << ": " << c.lhs << " vs " << c.rhs;
    os << "\n";
  }
  return os.str();
}

bool all_passed(const std::vector<Check>& checks) {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

int cmd_cohomology(const Config& cfg) {
  const Multigraph g = load(cfg.input);
  UpsilonComplex c(g);
  const BigradedCohomology bc = cohomology(c, cfg.ring == "integers");
  std::optional<CohomologyBasis> basis;
  std::optional<Filtration> del, grad;
  if (cfg.filtration != "none") basis.emplace(c);
  if (cfg.filtration == "deletion" || cfg.filtration == "both") del = deletion_filtration(*basis);
  if (cfg.filtration == "grading" || cfg.filtration == "both") grad = grading_filtration(*basis);
  std::ostringstream os;
  os << "complex dimension " << c.total_dimension() << "\n" << rank_text(bc);
  os << "euler characteristic " << bc.euler_characteristic().get_str() << "\n";
  if (bc.has_torsion_data) {
    if (bc.torsion.empty()) os << "no torsion\n";
    for (const auto& [key, f] : bc.torsion) {
      os << "torsion at (" << key.first << ", " << key.second << "):";
      for (const auto& x : f) os << " Z/" << x.get_str();
      os << "\n";
    }
  }
  if (del) os << filtration_text("deletion", *del);
  if (grad) os << filtration_text("grading", *grad);
  if (del && grad) os << "filtrations agree: " << (*del == *grad ? "yes" : "no") << "\n";
  emit(cfg, cohomology_report(g, c, bc, del ? &*del : nullptr, grad ? &*grad : nullptr), os.str());
  return kOk;
}

int cmd_motive(const Config& cfg) {
  const Multigraph g = load(cfg.input);
  MotiveResults r;
  const bool all = cfg.method == "all";
  if (all || cfg.method == "closed") r.closed = motive_closed_form(g);
  if (all || cfg.method == "delcon") r.delcon = motive_delcon(g);
  if (all || cfg.method == "tutte") {
    r.tutte_polynomial = tutte(g);
    r.tutte = motive_from_tutte(*r.tutte_polynomial, static_cast<unsigned>(g.first_betti()));
  }
  std::ostringstream os;
  if (r.closed) os << "closed form: " << r.closed->to_string() << "\n";
  if (r.delcon) os << "deletion-contraction: " << r.delcon->to_string() << "\n";
  if (r.tutte) os << "Tutte specialization: " << r.tutte->to_string() << "\n";
  if (r.tutte_polynomial) os << "Tutte polynomial: " << r.tutte_polynomial->to_string("x", "y") << "\n";
  if (all) os << "agree: " << (r.agree() ? "yes" : "no") << "\n";
  emit(cfg, motive_report(g, r), os.str());
  return r.agree() ? kOk : kMathFailure;
}

int cmd_delcon(const Config& cfg) {
  const Multigraph g = load(cfg.input);
  const std::size_t e = g.edge_index(cfg.edge);
  const EdgeKind kind = edge_kind(g, cfg.edge);
  if (kind == EdgeKind::loop)
    throw EdgeSelectionError("edge \"" + cfg.edge + "\" is a loop; deletion-contraction needs a non-loop edge");
  if (kind == EdgeKind::bridge) {
    BridgeCheck b = bridge_contraction_check(g, cfg.edge);
    std::ostringstream os;
    os << "\"" << cfg.edge << "\" is a bridge: H(G) = H(G/e) " << (b.equal() ? "holds" : "FAILS") << "\n"
       << rank_text(b.whole);
    emit(cfg, bridge_report(g, cfg.edge, b), os.str());
    return b.equal() ? kOk : kMathFailure;
  }
  (void)e;
  LongExactSequence seq(g, cfg.edge);
  const StrictnessReport del = verify_strictness(seq, deletion_filtrations(seq));
  const StrictnessReport grad = verify_strictness(seq, grading_filtrations(seq));
  std::ostringstream os;
  os << "deletion-contraction sequence for \"" << cfg.edge << "\"\n";
  os << "  term        degree  dim  rank_in  rank_out  exact\n";
  for (const auto& n : seq.nodes())
    os << "  " << n.term << std::string(12 - n.term.size(), ' ') << n.degree << "       " << n.dim << "    "
       << n.rank_in << "        " << n.rank_out << "         " << (n.exact ? "yes" : "NO") << "\n";
  os << "short exact at cochain level: " << (seq.short_exact().ok() ? "yes" : "NO") << "\n";
  os << "chain maps commute: " << (seq.embedding_residual() == 0 && seq.quotient_residual() == 0 ? "yes" : "NO")
     << "\n";
  os << "exact: " << (seq.exact() ? "yes" : "NO") << "\n";
  os << "strict (grading filtration): " << (grad.ok() ? "yes" : "NO") << "\n";
  os << "strict (deletion filtration): " << (del.ok() ? "yes" : "NO") << "\n";
  for (const auto& v : del.violations)
    os << "  violation: map " << v.map << " from degree " << v.degree << ", k = " << v.k << " (" << v.kind << ")\n";
  emit(cfg, les_report(seq, del, grad), os.str());
  const bool ok = seq.exact() && seq.short_exact().ok() && seq.embedding_residual() == 0 &&
                  seq.quotient_residual() == 0 && del.ok() && grad.ok();
  return ok ? kOk : kMathFailure;
}

int cmd_pw(const Config& cfg) {
  const Multigraph g = load(cfg.input);
  PWOptions opt;
  opt.q = cfg.q;
  opt.count.ceiling = cfg.ceiling;
  opt.count.threads = cfg.threads;
  const PWReport r = pw_report(g, opt);
  std::ostringstream os;
  os << "motive: " << r.motive.to_string() << "\n";
  os << "mixed Poincare: " << r.mixed_poincare.to_string("q", "t") << "\n";
  for (const auto& c : r.counts) {
    os << "F_" << c.q << ": ";
    if (c.count)
      os << "count " << c.count->get_str() << ", motive " << c.motive_value.get_str() << "\n";
    else
      os << c.note << "\n";
  }
  os << "labels: W_{2k} = P_k = D_k\n" << checks_text(r.checks);
  emit(cfg, pw_report_json(r), os.str());
  return r.ok() ? kOk : kMathFailure;
}

FqEta parse_eta(const std::string& text, std::uint64_t q) {
  FqEta eta{q, {}};
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      eta.values.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("--eta expects comma-separated integers, got \"" + item + "\"");
    }
  }
  return eta;
}

int cmd_count(const Config& cfg) {
  const Multigraph g = load(cfg.input);
  if (cfg.q.size() != 1) throw UsageError("count needs exactly one --q");
  const std::uint64_t q = cfg.q.front();
  CountResult r;
  r.eta = cfg.eta.empty() ? find_generic_eta(g, q) : parse_eta(cfg.eta, q);
  r.certificate = certify_generic(g, r.eta);
  r.motive_value = motive_closed_form(g)(Integer(static_cast<unsigned long>(q)));
  if (!r.certificate.generic) {
    std::string w;
    for (auto v : r.certificate.witness) w += (w.empty() ? "" : ",") + std::to_string(v);
    throw PointCountError("eta is not generic: the chain a = (" + w + ") disconnects the graph");
  }
  r.count = count_points(g, r.eta, {cfg.ceiling, cfg.threads});
  std::ostringstream os;
  os << "eta:";
  for (auto v : r.eta.values) os << " " << v;
  os << "\ngeneric: " << (r.certificate.generic ? "yes" : "no") << " (" << r.certificate.chains_checked
     << " chains checked)\n";
  if (r.count) os << "count: " << r.count->get_str() << "\n";
  os << "motive(" << q << "): " << r.motive_value.get_str() << "\n";
  emit(cfg, count_report(g, r), os.str());
  return r.count && *r.count == r.motive_value ? kOk : kMathFailure;
}

int cmd_check(const Config& cfg) {
  const Multigraph g = load(cfg.input);
  SuiteOptions opt;
  opt.q = cfg.q;
  opt.count.ceiling = cfg.ceiling;
  opt.count.threads = cfg.threads;
  const auto checks = invariant_suite(g, opt);
  emit(cfg, check_report(g, checks), checks_text(checks));
  return all_passed(checks) ? kOk : kMathFailure;
}

int cmd_monodromy(const Config& cfg) {
  const Multigraph g = load(cfg.input);
  const MonodromyReport r = verify_relations(g);
  std::ostringstream os;
  for (const auto& e : r.edges)
    os << "  " << e.edge << " (" << to_string(e.kind) << "): rank " << e.rank << ", N^2 = 0 "
       << (e.square_zero ? "yes" : "NO") << "\n";
  os << "pairwise products vanish: " << (r.products_zero ? "yes" : "NO") << "\n";
  os << "zero exactly on bridges: " << (r.bridge_iff_zero ? "yes" : "NO") << "\n";
  emit(cfg, monodromy_report(g, r), os.str());
  return r.ok() ? kOk : kMathFailure;
}

int cmd_random(const Config& cfg) {
  std::cout << to_json_text(random_graph(cfg.vertices, cfg.edges, cfg.seed)) << "\n";
  return kOk;
}

int fail(const Config& cfg, int code, const std::string& kind, const std::string& message,
         const ParseError* position = nullptr) {
  if (cfg.json)
    std::cout << dump(error_report(kind, message, position));
  else
    std::cerr << "upsilon: " << message << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bigraded cohomology, deletion-contraction and point counts of graph hypertoric spaces"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_flag("--json", cfg.json, "Machine-readable output (schema upsilon/1)");

  auto input = [&](CLI::App* sub) {
    sub->add_option("graph", cfg.input, "Graph file in JSON format, or - for standard input")->required();
  };
  auto positive_q = CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 31);

  auto* coh = app.add_subcommand("cohomology", "Bigraded ranks and filtrations");
  input(coh);
  coh->add_option("--ring", cfg.ring, "Coefficient ring")->check(CLI::IsMember({"rationals", "integers"}));
  coh->add_option("--filtration", cfg.filtration, "Filtrations to report")
      ->check(CLI::IsMember({"deletion", "grading", "both", "none"}));

  auto* mot = app.add_subcommand("motive", "Grothendieck class by three methods");
  input(mot);
  mot->add_option("--method", cfg.method, "Computation method")->check(CLI::IsMember({"closed", "delcon", "tutte", "all"}));

  auto* del = app.add_subcommand("delcon", "Deletion-contraction long exact sequence");
  input(del);
  del->add_option("--edge", cfg.edge, "Edge id")->required();

  auto* pw = app.add_subcommand("pw", "Full consistency report");
  input(pw);
  pw->add_option("--q", cfg.q, "Primes for point counts")->check(positive_q);
  pw->add_option("--ceiling", cfg.ceiling, "Maximum q^(2|E|) enumerated")->check(CLI::PositiveNumber);
  pw->add_option("--threads", cfg.threads, "Enumeration threads (default: UPSILON_THREADS or all cores)");

  auto* cnt = app.add_subcommand("count", "F_q point count with genericity certificate");
  input(cnt);
  cnt->add_option("--q", cfg.q, "Prime field size")->required()->check(positive_q);
  cnt->add_option("--eta", cfg.eta, "Comma-separated eta values, one per vertex (default: first generic)");
  cnt->add_option("--ceiling", cfg.ceiling, "Maximum q^(2|E|) enumerated")->check(CLI::PositiveNumber);
  cnt->add_option("--threads", cfg.threads, "Enumeration threads (default: UPSILON_THREADS or all cores)");

  auto* chk = app.add_subcommand("check", "Run every invariant check on one graph");
  input(chk);
  chk->add_option("--q", cfg.q, "Primes for point counts")->check(positive_q);
  chk->add_option("--ceiling", cfg.ceiling, "Maximum q^(2|E|) enumerated")->check(CLI::PositiveNumber);
  chk->add_option("--threads", cfg.threads, "Enumeration threads");

  auto* mon = app.add_subcommand("monodromy", "Log-monodromy operators and their relations");
  input(mon);

  auto* rnd = app.add_subcommand("random", "Emit a random connected multigraph");
  rnd->add_option("--vertices", cfg.vertices, "Vertex count")->required()->check(CLI::PositiveNumber);
  rnd->add_option("--edges", cfg.edges, "Edge count")->required();
  rnd->add_option("--seed", cfg.seed, "RNG seed")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    for (int i = 1; i < argc; ++i)
      if (std::string(argv[i]) == "--json") cfg.json = true;
    return fail(cfg, kUsage, "usage", e.what());
  }

  try {
    if (*coh) return cmd_cohomology(cfg);
    if (*mot) return cmd_motive(cfg);
    if (*del) return cmd_delcon(cfg);
    if (*pw) return cmd_pw(cfg);
    if (*cnt) return cmd_count(cfg);
    if (*chk) return cmd_check(cfg);
    if (*mon) return cmd_monodromy(cfg);
    if (*rnd) return cmd_random(cfg);
  } catch (const ParseError& e) {
    return fail(cfg, kUsage, "parse", e.what(), &e);
  } catch (const EdgeSelectionError& e) {
    return fail(cfg, kUsage, "edge", e.what());
  } catch (const GraphError& e) {
    return fail(cfg, kUsage, "graph", e.what());
  } catch (const PointCountError& e) {
    return fail(cfg, kUsage, "pointcount", e.what());
  } catch (const UsageError& e) {
    return fail(cfg, kUsage, "usage", e.what());
  } catch (const std::logic_error& e) {
    return fail(cfg, kMathFailure, "assertion", e.what());
  }
  return kUsage;
}
