#include "pathham/verify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "pathham/enumerate.hpp"
#include "pathham/graph6.hpp"
#include "pathham/parallel.hpp"

namespace pathham {

std::string graph_identifier(const Graph& g) {
  if (g.vertex_count() <= kCanonicalMaxVertices) return canonical_form(g).g6;
  return emit_graph6(g);
}

namespace {

void require_theorem_range(const Graph& g, int k) {
  if (!is_k_regular(g, k)) throw std::invalid_argument("graph is not k-regular");
  if (!is_2_connected(g)) throw std::invalid_argument("graph is not 2-connected");
  if (g.vertex_count() > 2 * k) throw std::invalid_argument("graph order exceeds 2k");
}

// Paths whose vertex set is all of V get special treatment in both sweeps:
// there is nothing left to disconnect, and a covering Hamiltonian cycle is
// just the path plus its closing edge.
bool covers_everything(const Graph& g, const Path& p) { return p.vertex_set() == g.vertices(); }

}  // namespace

VerificationReport theorem2_report(const Graph& g, int k) {
  VerificationReport rep;
  rep.graph_id = graph_identifier(g);
  rep.n = g.vertex_count();
  rep.k = k;
  if (rep.n < 3) return rep;  // no 2-paths exist

  std::optional<std::vector<Cycle>> oracle;
  auto certify_uncovered = [&](const Path& p) -> std::string {
    if (g.vertex_count() <= kOracleMaxVertices) {
      if (!oracle) oracle = enumerate_all_ham_cycles(g);
      for (const Cycle& c : *oracle)
        if (c.contains_path(p))
          throw std::logic_error("forced-path solver and cycle oracle disagree");
      return "exhaustive-cycle-enumeration";
    }
    return "complete-backtracking";
  };

  for (const Path& p : enumerate_paths(g, 2)) {
    ++rep.paths_total;
    if (covers_everything(g, p)) {  // n == 3 corner: hypothesis holds trivially
      if (g.has_edge(p.verts().front(), p.verts().back()))
        rep.witnesses.push_back({p, Cycle::in_graph(g, p.verts())});
      else
        rep.conclusion_failures.push_back({p, certify_uncovered(p)});
      continue;
    }
    if (is_cut_set(g, p.vertex_set())) {
      rep.hypothesis_failures.push_back(p);
      continue;
    }
    if (auto c = find_ham_cycle_containing_path(g, p))
      rep.witnesses.push_back({p, *c});
    else
      rep.conclusion_failures.push_back({p, certify_uncovered(p)});
  }
  if (!rep.counts_reconcile()) throw std::logic_error("report counts do not reconcile");
  return rep;
}

VerificationReport verify_theorem2(const Graph& g, int k) {
  require_theorem_range(g, k);
  return theorem2_report(g, k);
}

Corollary4Report corollary4_report(const Graph& g, int k) {
  Corollary4Report rep;
  rep.graph_id = graph_identifier(g);
  rep.n = g.vertex_count();
  rep.k = k;
  rep.hypothesis = true;
  const int n = g.vertex_count();
  for (int len = 1; len <= 2 && len <= n - 1 && rep.hypothesis; ++len) {
    for (const Path& p : enumerate_paths(g, len)) {
      if (covers_everything(g, p)) continue;
      if (!is_connected(remove_vertices(g, p.vertex_set()).graph)) {
        rep.hypothesis = false;
        rep.hypothesis_witness = p;
        break;
      }
    }
  }
  if (rep.hypothesis) {  // exempt graphs get no conclusion demanded of them
    const int l = std::min(2, n - 2);
    if (l >= 1) {
      const PathCoverage cov = is_l_path_hamiltonian(g, l);
      rep.conclusion = cov.holds;
      rep.conclusion_witness = cov.first_failure;
    } else {
      rep.conclusion = true;
    }
  }
  return rep;
}

Corollary4Report verify_corollary4(const Graph& g, int k) {
  require_theorem_range(g, k);
  return corollary4_report(g, k);
}

bool kronk_condition(const Graph& g, int l) {
  const int n = g.vertex_count();
  if (l < 1 || l > n - 2) throw std::invalid_argument("l must be between 1 and n-2");
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v) && g.degree(u) + g.degree(v) < n + l) return false;
  return true;
}

SharpnessGraph sharpness_construct(int k) {
  if (k < 3) throw std::invalid_argument("sharpness construction needs k >= 3");
  if (2 * k + 2 > Graph::kMaxVertices)
    throw std::invalid_argument("sharpness construction exceeds 64 vertices");
  Graph g(2 * k + 2);
  for (int copy = 0; copy < 2; ++copy) {
    const int base = copy * (k + 1);
    for (int i = 0; i <= k; ++i)
      for (int j = i + 1; j <= k; ++j)
        if (!(i == 0 && j == 1)) g.add_edge(base + i, base + j);  // K_{k+1} minus a_i b_i
  }
  g.add_edge(0, k + 1);  // a1 a2
  g.add_edge(1, k + 2);  // b1 b2
  g.check_invariants();
  SharpnessGraph out{std::move(g), 0, 1, k + 1, k + 2};
  if (!is_k_regular(out.graph, k) || !is_2_connected(out.graph))
    throw std::logic_error("sharpness construction failed self-check");
  return out;
}

std::vector<UncoverablePath> find_uncoverable_paths(const Graph& g, int l) {
  if (l < 1 || l > 2) throw std::invalid_argument("l must be 1 or 2");
  if (g.vertex_count() > kOracleMaxVertices)
    throw std::invalid_argument("exhaustive certification is capped at 16 vertices");
  const auto cycles = enumerate_all_ham_cycles(g);
  std::vector<UncoverablePath> out;
  for (int len = 1; len <= l && len <= g.vertex_count() - 1; ++len) {
    for (const Path& p : enumerate_paths(g, len)) {
      bool covered = false;
      for (const Cycle& c : cycles)
        if (c.contains_path(p)) {
          covered = true;
          break;
        }
      if (covered) continue;
      const bool cut = !covers_everything(g, p) && is_cut_set(g, p.vertex_set());
      out.push_back({p, cut});
    }
  }
  return out;
}

std::vector<VerificationReport> theorem2_suite(int k, int workers, std::optional<int> only_n) {
  std::vector<Graph> corpus;
  bool matched = false;
  for (int n : theorem_range_orders(k)) {
    if (n > 2 * k) continue;
    if (only_n && *only_n != n) continue;
    matched = true;
    auto graphs = enumerate_regular_graphs(k, n, true);
    corpus.insert(corpus.end(), graphs.begin(), graphs.end());
  }
  if (only_n && !matched) throw std::invalid_argument("n is outside the verified range for this k");
  return parallel_map(corpus, workers, [&](const Graph& g) { return verify_theorem2(g, k); });
}

std::vector<Corollary4Report> corollary4_suite(int k, int workers, std::optional<int> only_n) {
  std::vector<Graph> corpus;
  bool matched = false;
  for (int n : theorem_range_orders(k)) {
    if (n > 2 * k) continue;
    if (only_n && *only_n != n) continue;
    matched = true;
    auto graphs = enumerate_regular_graphs(k, n, true);
    corpus.insert(corpus.end(), graphs.begin(), graphs.end());
  }
  if (only_n && !matched) throw std::invalid_argument("n is outside the verified range for this k");
  return parallel_map(corpus, workers, [&](const Graph& g) { return verify_corollary4(g, k); });
}

BandReport explore_open_band(int k, int workers, std::optional<int> only_n) {
  if (k < 3 || k > 5) throw std::invalid_argument("band exploration supports 3 <= k <= 5");
  BandReport band;
  band.k = k;
  bool matched = false;
  for (int n : {2 * k + 1, 2 * k + 2}) {
    if (only_n && *only_n != n) continue;
    matched = true;
    BandCell cell;
    cell.n = n;
    if ((n * k) % 2 == 0) {
      const auto graphs = enumerate_regular_graphs(k, n, true);
      cell.reports = parallel_map(graphs, workers, [&](const Graph& g) { return theorem2_report(g, k); });
    }
    band.cells.push_back(std::move(cell));
  }
  if (only_n && !matched) throw std::invalid_argument("n is outside the band for this k");
  return band;
}

std::vector<KronkRow> kronk_rows_for(std::span<const Graph> graphs, std::span<const int> ls,
                                     int workers) {
  const std::vector<Graph> items(graphs.begin(), graphs.end());
  auto per_graph = parallel_map(items, workers, [&](const Graph& g) {
    std::vector<KronkRow> rows;
    for (int l : ls) {
      if (l < 1 || l > g.vertex_count() - 2) continue;
      KronkRow row;
      row.graph_id = graph_identifier(g);
      row.n = g.vertex_count();
      row.l = l;
      row.condition = kronk_condition(g, l);
      if (row.condition) {
        const PathCoverage cov = is_l_path_hamiltonian(g, l);
        row.covered = cov.holds;
        row.witness = cov.first_failure;
      }
      rows.push_back(std::move(row));
    }
    return rows;
  });
  std::vector<KronkRow> out;
  for (auto& rows : per_graph)
    for (auto& row : rows) out.push_back(std::move(row));
  return out;
}

std::vector<KronkRow> kronk_suite(int max_n, std::span<const int> ls, int workers) {
  if (max_n < 3 || max_n > 8) throw std::invalid_argument("degree-sum sweep supports 3 <= n <= 8");
  std::vector<Graph> connected;
  for (int n = 3; n <= max_n; ++n)
    for (const Graph& g : enumerate_all_graphs(n))
      if (is_connected(g)) connected.push_back(g);
  return kronk_rows_for(connected, ls, workers);
}

// ---- rendering --------------------------------------------------------------

namespace {

struct RowTotals {
  long graphs = 0, paths = 0, hyp = 0, cov = 0, concl = 0;
};

void emit_theorem2_rows(std::ostringstream& os, std::span<const VerificationReport> reports,
                        RowTotals& t) {
  for (const auto& rep : reports) {
    os << rep.graph_id << ' ' << rep.n << ' ' << rep.k << ' ' << rep.paths_total << ' '
       << rep.hypothesis_failures.size() << ' ' << rep.covered() << ' '
       << rep.conclusion_failures.size() << '\n';
    ++t.graphs;
    t.paths += rep.paths_total;
    t.hyp += static_cast<long>(rep.hypothesis_failures.size());
    t.cov += rep.covered();
    t.concl += static_cast<long>(rep.conclusion_failures.size());
  }
  for (const auto& rep : reports)
    for (const auto& f : rep.conclusion_failures)
      os << "! " << rep.graph_id << " uncovered " << f.path.to_string() << " method=" << f.method
         << '\n';
}

}  // namespace

std::string render_theorem2(std::span<const VerificationReport> reports, int k,
                            std::string_view title, bool assert_mode) {
  std::ostringstream os;
  os << "# " << title << " k=" << k << '\n';
  os << "# columns: graph n k paths2 hyp_fail covered concl_fail\n";
  RowTotals t;
  emit_theorem2_rows(os, reports, t);
  os << "# summary graphs=" << t.graphs << " paths2=" << t.paths << " hyp_fail=" << t.hyp
     << " covered=" << t.cov << " concl_fail=" << t.concl << '\n';
  if (assert_mode)
    os << (t.concl == 0 ? "# RESULT PASS\n" : "# RESULT FAIL\n");
  else
    os << "# RESULT REPORT-ONLY\n";
  return os.str();
}

std::string render_corollary4(std::span<const Corollary4Report> reports, int k) {
  std::ostringstream os;
  os << "# corollary4 k=" << k << '\n';
  os << "# columns: graph n k hyp concl\n";
  long graphs = 0, exempt = 0, violations = 0;
  for (const auto& rep : reports) {
    os << rep.graph_id << ' ' << rep.n << ' ' << rep.k << ' ' << (rep.hypothesis ? 1 : 0) << ' ';
    if (rep.conclusion)
      os << (*rep.conclusion ? 1 : 0);
    else
      os << '-';
    os << '\n';
    ++graphs;
    if (!rep.hypothesis) ++exempt;
    if (rep.violation()) ++violations;
  }
  for (const auto& rep : reports) {
    if (rep.hypothesis_witness)
      os << "! " << rep.graph_id << " hyp_fail " << rep.hypothesis_witness->to_string() << '\n';
    if (rep.conclusion_witness)
      os << "! " << rep.graph_id << " uncovered " << rep.conclusion_witness->to_string() << '\n';
  }
  os << "# summary graphs=" << graphs << " exempt=" << exempt << " violations=" << violations
     << '\n';
  os << (violations == 0 ? "# RESULT PASS\n" : "# RESULT FAIL\n");
  return os.str();
}

std::string render_band(const BandReport& band) {
  std::ostringstream os;
  os << "# band k=" << band.k << '\n';
  os << "# columns: graph n k paths2 hyp_fail covered concl_fail\n";
  RowTotals t;
  for (const auto& cell : band.cells) {
    os << "# cell n=" << cell.n << " graphs=" << cell.reports.size() << '\n';
    emit_theorem2_rows(os, cell.reports, t);
  }
  os << "# summary graphs=" << t.graphs << " paths2=" << t.paths << " hyp_fail=" << t.hyp
     << " covered=" << t.cov << " concl_fail=" << t.concl << '\n';
  os << "# RESULT REPORT-ONLY\n";
  return os.str();
}

std::string render_kronk(std::span<const KronkRow> rows, std::string_view scope) {
  std::ostringstream os;
  os << "# kronk " << scope << '\n';
  os << "# columns: graph n l covered\n";
  long scanned = 0, checked = 0, violations = 0;
  for (const auto& row : rows) {
    ++scanned;
    if (!row.condition) continue;
    ++checked;
    os << row.graph_id << ' ' << row.n << ' ' << row.l << ' ' << (*row.covered ? 1 : 0) << '\n';
    if (row.violation()) ++violations;
  }
  for (const auto& row : rows)
    if (row.violation())
      os << "! " << row.graph_id << " l=" << row.l << " uncovered " << row.witness->to_string()
         << '\n';
  os << "# summary scanned=" << scanned << " checked=" << checked << " violations=" << violations
     << '\n';
  os << (violations == 0 ? "# RESULT PASS\n" : "# RESULT FAIL\n");
  return os.str();
}

std::string render_sharpness(const SharpnessGraph& sg, std::span<const UncoverablePath> paths) {
  std::ostringstream os;
  const int k = sg.graph.degree(sg.a1);
  os << "# sharpness k=" << k << " n=" << sg.graph.vertex_count() << '\n';
  os << "graph " << emit_graph6(sg.graph) << '\n';
  os << "labels a1=" << sg.a1 << " b1=" << sg.b1 << " a2=" << sg.a2 << " b2=" << sg.b2 << '\n';
  long non_cutset_2paths = 0;
  for (const auto& up : paths) {
    os << "uncoverable " << up.path.to_string() << " cutset=" << (up.vertex_set_is_cut_set ? 1 : 0)
       << '\n';
    if (up.path.length() == 2 && !up.vertex_set_is_cut_set) ++non_cutset_2paths;
  }
  os << "# summary uncoverable=" << paths.size() << " non_cutset_2paths=" << non_cutset_2paths
     << '\n';
  os << (non_cutset_2paths > 0 ? "# RESULT PASS\n" : "# RESULT FAIL\n");
  return os.str();
}

}  // namespace pathham
