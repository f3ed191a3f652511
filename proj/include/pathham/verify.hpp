#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pathham/graph.hpp"
#include "pathham/ham_search.hpp"

namespace pathham {

// ---- per-graph reports ----------------------------------------------------

struct PathWitness {
  Path path;
  Cycle cycle;
};

struct ConclusionFailure {
  Path path;
  std::string method;  // how exhaustiveness was certified
};

// One graph's 2-path sweep: every endpoint-normalized 2-path is classified as
// hypothesis failure (its vertex set cuts the graph), covered (witness cycle
// attached), or conclusion failure (certified uncoverable).
struct VerificationReport {
  std::string graph_id;  // canonical graph6 when n <= 12, else the raw line
  int n = 0;
  int k = 0;
  int paths_total = 0;
  std::vector<Path> hypothesis_failures;
  std::vector<PathWitness> witnesses;
  std::vector<ConclusionFailure> conclusion_failures;

  int covered() const { return static_cast<int>(witnesses.size()); }
  bool counts_reconcile() const {
    return paths_total == static_cast<int>(hypothesis_failures.size()) + covered() +
                              static_cast<int>(conclusion_failures.size());
  }
};

// Sweep body without the range screen (shared with the band explorer).
VerificationReport theorem2_report(const Graph& g, int k);
// Requires g 2-connected, k-regular, n <= 2k; throws otherwise.
VerificationReport verify_theorem2(const Graph& g, int k);

struct Corollary4Report {
  std::string graph_id;
  int n = 0;
  int k = 0;
  bool hypothesis = false;                  // every path of length <= 2 leaves g connected
  std::optional<Path> hypothesis_witness;   // first path with disconnected complement
  std::optional<bool> conclusion;           // unset when the graph is exempt
  std::optional<Path> conclusion_witness;   // first uncovered path when conclusion is false

  bool violation() const { return hypothesis && conclusion && !*conclusion; }
};
Corollary4Report corollary4_report(const Graph& g, int k);  // unscreened body
Corollary4Report verify_corollary4(const Graph& g, int k);  // range screen as above

// Degree-sum condition: d(a) + d(b) >= n + l for every non-adjacent pair.
// Vacuously true on complete graphs. Requires 1 <= l <= n-2.
bool kronk_condition(const Graph& g, int l);

// ---- sharpness construction ------------------------------------------------

// Two copies of K_{k+1} minus an edge a_i b_i, joined by a1a2 and b1b2: the
// k-regular 2-connected graph on 2k+2 vertices whose 2-path through a1's two
// interior neighbors lies on no Hamiltonian cycle. Copy 1 occupies vertices
// 0..k (a1 = 0, b1 = 1), copy 2 occupies k+1..2k+1 (a2 = k+1, b2 = k+2);
// interior vertices follow in construction order.
struct SharpnessGraph {
  Graph graph;
  int a1 = 0, b1 = 0, a2 = 0, b2 = 0;
};
SharpnessGraph sharpness_construct(int k);  // requires 3 <= k <= 31

struct UncoverablePath {
  Path path;
  bool vertex_set_is_cut_set = false;
};
// Paths of length 1..l on no Hamiltonian cycle, certified by the exhaustive
// cycle oracle. Requires l in {1,2} and n <= 16.
std::vector<UncoverablePath> find_uncoverable_paths(const Graph& g, int l);

// ---- suites ----------------------------------------------------------------

// 2-path sweep over every corpus graph with n <= 2k (hypothesis-screened).
std::vector<VerificationReport> theorem2_suite(int k, int workers = 1,
                                               std::optional<int> only_n = std::nullopt);
std::vector<Corollary4Report> corollary4_suite(int k, int workers = 1,
                                               std::optional<int> only_n = std::nullopt);

// Orders 2k+1 and 2k+2: run the unscreened sweep and tabulate, asserting
// nothing. Cells infeasible by parity stay present but empty.
struct BandCell {
  int n = 0;
  std::vector<VerificationReport> reports;
};
struct BandReport {
  int k = 0;
  std::vector<BandCell> cells;
};
BandReport explore_open_band(int k, int workers = 1, std::optional<int> only_n = std::nullopt);

// Degree-sum cross-check rows; the coverage check runs only where the
// condition holds (vacuous rows are not emitted).
struct KronkRow {
  std::string graph_id;
  int n = 0;
  int l = 0;
  bool condition = false;
  std::optional<bool> covered;
  std::optional<Path> witness;

  bool violation() const { return condition && covered && !*covered; }
};
// All connected graphs on 3..max_n vertices (max_n <= 8), l in ls (skipping
// l > n-2).
std::vector<KronkRow> kronk_suite(int max_n, std::span<const int> ls, int workers = 1);
std::vector<KronkRow> kronk_rows_for(std::span<const Graph> graphs, std::span<const int> ls,
                                     int workers = 1);

// ---- rendering --------------------------------------------------------------

// Line formats are frozen and documented in docs/report-format.md.
std::string graph_identifier(const Graph& g);
std::string render_theorem2(std::span<const VerificationReport> reports, int k,
                            std::string_view title, bool assert_mode);
std::string render_corollary4(std::span<const Corollary4Report> reports, int k);
std::string render_band(const BandReport& band);
std::string render_kronk(std::span<const KronkRow> rows, std::string_view scope);
std::string render_sharpness(const SharpnessGraph& sg, std::span<const UncoverablePath> paths);

}  // namespace pathham
