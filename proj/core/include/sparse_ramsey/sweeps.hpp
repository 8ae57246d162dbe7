#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sparse_ramsey {

/// One checked instance. Recorded for violations always and for every
/// instance when rows are requested.
struct SweepRow {
  std::string graph6;
  std::string params;  // e.g. "s=3" or "k=4,u=0,v=5"
  bool ok = true;
  std::string detail;
};

struct SweepReport {
  std::string name;
  std::uint64_t graphs = 0;     // graphs visited
  std::uint64_t instances = 0;  // (graph, parameter) pairs meeting the premise
  std::vector<SweepRow> violations;
  std::vector<SweepRow> rows;   // only when requested
  std::vector<std::string> notes;

  bool passed() const { return violations.empty(); }
};

struct SweepOptions {
  int max_n = 9;
  int threads = 1;
  bool record_rows = false;
};

/// Leaf-count bounds for connected non-star graphs with no suspended path
/// above s vertices, plus the identities of each reduction trace:
/// e(G2) = |A|+|B|+t, |B| <= |A|+2t, |G1| <= (s-1) e(G2) + 1, and replay.
SweepReport dichotomy_sweep(const SweepOptions& options, const std::vector<int>& s_values = {2, 3, 4});

/// Every P_k-free graph (2 <= k <= k_max) is a disjoint union of components
/// on at most k-1 vertices or has a vertex of degree at most k/2 - 1.
SweepReport strucf_sweep(const SweepOptions& options, int k_max = 6);

/// Graphs on s+t vertices with a t-vertex u-v path and no (t+1)-vertex u-v
/// path have complements containing P_{2 ceil(s/2) + 1}. Uses only t.
SweepReport findpath_sweep(const SweepOptions& options, int s = 2, const std::vector<int>& t_values = {4, 5, 6});

/// r(g+e, P_k) <= r(g, P_k) + k - 1 for connected g on at most max_order
/// vertices and each non-edge e. Oracle calls may reach 10 vertices.
SweepReport addedge_sweep(const SweepOptions& options, int max_order = 4, const std::vector<int>& k_values = {3, 4});

/// ex(n, P_k) <= (k-2) n / 2 for n <= max_n and 2 <= k <= k_max; equality
/// cases are listed in the notes.
SweepReport erdos_gallai_sweep(const SweepOptions& options, int k_max = 7);

std::vector<std::string> sweep_names();

/// Runs one named sweep with its default parameters ("all" runs every one
/// and concatenates). Throws std::invalid_argument for unknown names.
std::vector<SweepReport> run_sweep(const std::string& name, const SweepOptions& options,
                                   const std::vector<int>& s_values = {2, 3, 4});

}  // namespace sparse_ramsey
