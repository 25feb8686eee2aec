#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <tuple>
#include <vector>

#include "art/empirical.hpp"

namespace art {

enum class Orientation { RowFirst, ColumnFirst };

// Partition orientation plus remaining row (r) and column (c) recursion depths.
struct DepthSpec {
  Orientation orientation = Orientation::RowFirst;
  int r = 0;
  int c = 0;
};

enum class SplitAxis { Row, Column };  // Row = horizontal cut (splits the y-range)

// Binary partition tree node. A leaf has no children. A degenerate split
// (boundary position, consuming one depth unit without cutting) carries a
// single child and split_index = -1.
struct PartitionNode {
  RectRegion rect;
  std::optional<SplitAxis> axis;
  int split_index = -1;  // cut index for a real split, -1 for degenerate
  std::vector<PartitionNode> children;

  bool is_leaf() const { return children.empty(); }
};

struct DpValue {
  double value = 0.0;
  std::optional<std::pair<SplitAxis, int>> best_split;  // nullopt: leaf or degenerate
};

// Maximum-restricted-divergence solver over alternant recursive topology
// partitions. Memoizes every (rectangle, orientation, r, c) state in dense
// per-depth slabs, shared across all root queries on the same grid.
//
// Per-state cost is O(g) split candidates; on a g x g grid with depth budget
// B the worst case is O(g^5 B^2) time and O(g^4 B^2) memo entries.
class PartitionSolver {
 public:
  explicit PartitionSolver(EmpiricalGrid grid);

  double value(const DepthSpec& spec);
  PartitionNode extract(const DepthSpec& spec);

  std::size_t memo_entries() const;
  const EmpiricalGrid& grid() const { return grid_; }

 private:
  using Key = std::tuple<int, int, int>;  // (orientation, r, c)

  // Canonical state: exhausted leading budgets degenerate to the other
  // orientation; (0,0) is the trivial zero state (nullptr slab).
  static bool canonical(Orientation& o, int r, int c);

  const std::vector<double>* ensure(Orientation o, int r, int c);
  void fill_rowfirst(std::vector<double>& slab, const std::vector<double>* child);
  void fill_colfirst(std::vector<double>& slab, const std::vector<double>* child);

  PartitionNode extract_node(const RectRegion& rect, Orientation o, int r, int c);

  std::size_t rect_id(const RectRegion& r) const;

  EmpiricalGrid grid_;
  int gx_, gy_;
  std::size_t npx_, npy_;  // number of x / y index intervals
  std::vector<std::size_t> offx_, offy_;
  std::vector<double> ln_;  // ln_[k] = ln(k), k = 1..n
  double ln_n_;
  std::vector<std::int64_t> xmarg_, ymarg_;  // marginal prefix counts at cuts
  std::map<Key, std::vector<double>> slabs_;
};

// One-shot conveniences over a fresh solver.
DpValue max_restricted_divergence(const EmpiricalGrid& grid, const DepthSpec& spec);
PartitionNode extract_partition(const EmpiricalGrid& grid, const DepthSpec& spec);

// Restricted-divergence leaf sum over the tree's leaves, computed from raw
// rectangle masses (independent of the DP recursion).
double telescoped_value(const EmpiricalGrid& grid, const PartitionNode& tree);

void dump_tree(std::ostream& out, const PartitionNode& node, int indent = 0);

}  // namespace art
