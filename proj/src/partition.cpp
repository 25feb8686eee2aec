#include "art/partition.hpp"

#include <cmath>
#include <ostream>
#include <utility>

namespace art {

namespace {

int orient_code(Orientation o) { return o == Orientation::RowFirst ? 0 : 1; }

}  // namespace

PartitionSolver::PartitionSolver(EmpiricalGrid grid) : grid_(std::move(grid)) {
  gx_ = grid_.gx();
  gy_ = grid_.gy();
  npx_ = static_cast<std::size_t>(gx_) * (gx_ + 1) / 2;
  npy_ = static_cast<std::size_t>(gy_) * (gy_ + 1) / 2;
  offx_.resize(gx_);
  offy_.resize(gy_);
  for (int a = 0; a < gx_; ++a) offx_[a] = static_cast<std::size_t>(a) * gx_ - static_cast<std::size_t>(a) * (a - 1) / 2;
  for (int a = 0; a < gy_; ++a) offy_[a] = static_cast<std::size_t>(a) * gy_ - static_cast<std::size_t>(a) * (a - 1) / 2;
  ln_.resize(grid_.n + 1, 0.0);
  for (std::int64_t k = 1; k <= grid_.n; ++k) ln_[k] = std::log(static_cast<double>(k));
  ln_n_ = ln_[grid_.n];
  xmarg_.resize(gx_ + 1);
  ymarg_.resize(gy_ + 1);
  const int w = gy_ + 1;
  for (int i = 0; i <= gx_; ++i) xmarg_[i] = grid_.prefix[static_cast<std::size_t>(i) * w + gy_];
  for (int j = 0; j <= gy_; ++j) ymarg_[j] = grid_.prefix[static_cast<std::size_t>(gx_) * w + j];
}

std::size_t PartitionSolver::rect_id(const RectRegion& r) const {
  const std::size_t xid = offx_[r.xi_lo] + static_cast<std::size_t>(r.xi_hi - r.xi_lo - 1);
  const std::size_t yid = offy_[r.yi_lo] + static_cast<std::size_t>(r.yi_hi - r.yi_lo - 1);
  return xid * npy_ + yid;
}

bool PartitionSolver::canonical(Orientation& o, int r, int c) {
  if (r == 0 && c == 0) return true;
  if (o == Orientation::RowFirst && r == 0) o = Orientation::ColumnFirst;
  if (o == Orientation::ColumnFirst && c == 0) o = Orientation::RowFirst;
  return false;
}

const std::vector<double>* PartitionSolver::ensure(Orientation o, int r, int c) {
  if (r < 0 || c < 0) throw ConfigError("recursion depths must be non-negative");
  if (canonical(o, r, c)) return nullptr;
  const Key key{orient_code(o), r, c};
  const auto it = slabs_.find(key);
  if (it != slabs_.end()) return &it->second;

  const std::vector<double>* child = o == Orientation::RowFirst ? ensure(Orientation::ColumnFirst, r - 1, c)
                                                                : ensure(Orientation::RowFirst, r, c - 1);
  auto& slab = slabs_[key];
  slab.assign(npx_ * npy_, 0.0);
  if (o == Orientation::RowFirst) {
    fill_rowfirst(slab, child);
  } else {
    fill_colfirst(slab, child);
  }
  return &slab;
}

// Row-first states split the rectangle's y-range; budgets (r, c) hand the
// children to the column-first (r-1, c) slab. The degenerate boundary split is
// always the first candidate, so ties resolve toward shallower real cuts.
void PartitionSolver::fill_rowfirst(std::vector<double>& slab, const std::vector<double>* child) {
  const int w = gy_ + 1;
  std::vector<double> vcol(gy_ + 1);
  for (int xa = 0; xa < gx_; ++xa) {
    const std::int64_t* pa = grid_.prefix.data() + static_cast<std::size_t>(xa) * w;
    for (int xb = xa + 1; xb <= gx_; ++xb) {
      const std::int64_t colc = xmarg_[xb] - xmarg_[xa];
      if (colc == 0) continue;  // empty strip, all values stay 0
      const std::int64_t* pb = grid_.prefix.data() + static_cast<std::size_t>(xb) * w;
      const double ln_colc = ln_[colc];
      const std::size_t xid = offx_[xa] + static_cast<std::size_t>(xb - xa - 1);
      const std::size_t base = xid * npy_;
      for (int j = 0; j <= gy_; ++j) vcol[j] = static_cast<double>(pb[j] - pa[j]);
      for (int ya = 0; ya < gy_; ++ya) {
        for (int yb = ya + 1; yb <= gy_; ++yb) {
          const double C = vcol[yb] - vcol[ya];
          if (C == 0.0) continue;
          const std::size_t rid = base + offy_[ya] + static_cast<std::size_t>(yb - ya - 1);
          const double rect_term =
              ln_[static_cast<std::int64_t>(C)] - ln_colc - ln_[ymarg_[yb] - ymarg_[ya]] + ln_n_;
          double best = rect_term + (child ? (*child)[rid] : 0.0);
          for (int t = ya + 1; t < yb; ++t) {
            const double c_lo = vcol[t] - vcol[ya];
            const double c_hi = C - c_lo;
            double s = 0.0;
            if (c_lo > 0.0) {
              const double term = ln_[static_cast<std::int64_t>(c_lo)] - ln_colc - ln_[ymarg_[t] - ymarg_[ya]] + ln_n_;
              const double v = child ? (*child)[base + offy_[ya] + static_cast<std::size_t>(t - ya - 1)] : 0.0;
              s += c_lo * (term + v);
            }
            if (c_hi > 0.0) {
              const double term = ln_[static_cast<std::int64_t>(c_hi)] - ln_colc - ln_[ymarg_[yb] - ymarg_[t]] + ln_n_;
              const double v = child ? (*child)[base + offy_[t] + static_cast<std::size_t>(yb - t - 1)] : 0.0;
              s += c_hi * (term + v);
            }
            s /= C;
            if (s > best) best = s;
          }
          slab[rid] = best - rect_term;
        }
      }
    }
  }
}

// Mirror of fill_rowfirst: column-first states split the x-range and hand
// children to the row-first (r, c-1) slab.
void PartitionSolver::fill_colfirst(std::vector<double>& slab, const std::vector<double>* child) {
  const int w = gy_ + 1;
  std::vector<double> hrow(gx_ + 1);
  for (int ya = 0; ya < gy_; ++ya) {
    for (int yb = ya + 1; yb <= gy_; ++yb) {
      const std::int64_t rowc = ymarg_[yb] - ymarg_[ya];
      if (rowc == 0) continue;
      const double ln_rowc = ln_[rowc];
      const std::size_t yid = offy_[ya] + static_cast<std::size_t>(yb - ya - 1);
      for (int i = 0; i <= gx_; ++i) {
        hrow[i] = static_cast<double>(grid_.prefix[static_cast<std::size_t>(i) * w + yb] -
                                      grid_.prefix[static_cast<std::size_t>(i) * w + ya]);
      }
      for (int xa = 0; xa < gx_; ++xa) {
        for (int xb = xa + 1; xb <= gx_; ++xb) {
          const double C = hrow[xb] - hrow[xa];
          if (C == 0.0) continue;
          const std::size_t rid = (offx_[xa] + static_cast<std::size_t>(xb - xa - 1)) * npy_ + yid;
          const double rect_term =
              ln_[static_cast<std::int64_t>(C)] - ln_[xmarg_[xb] - xmarg_[xa]] - ln_rowc + ln_n_;
          double best = rect_term + (child ? (*child)[rid] : 0.0);
          for (int t = xa + 1; t < xb; ++t) {
            const double c_lo = hrow[t] - hrow[xa];
            const double c_hi = C - c_lo;
            double s = 0.0;
            if (c_lo > 0.0) {
              const double term = ln_[static_cast<std::int64_t>(c_lo)] - ln_[xmarg_[t] - xmarg_[xa]] - ln_rowc + ln_n_;
              const double v = child ? (*child)[(offx_[xa] + static_cast<std::size_t>(t - xa - 1)) * npy_ + yid] : 0.0;
              s += c_lo * (term + v);
            }
            if (c_hi > 0.0) {
              const double term = ln_[static_cast<std::int64_t>(c_hi)] - ln_[xmarg_[xb] - xmarg_[t]] - ln_rowc + ln_n_;
              const double v = child ? (*child)[(offx_[t] + static_cast<std::size_t>(xb - t - 1)) * npy_ + yid] : 0.0;
              s += c_hi * (term + v);
            }
            s /= C;
            if (s > best) best = s;
          }
          slab[rid] = best - rect_term;
        }
      }
    }
  }
}

double PartitionSolver::value(const DepthSpec& spec) {
  const std::vector<double>* slab = ensure(spec.orientation, spec.r, spec.c);
  if (!slab) return 0.0;
  return (*slab)[rect_id({0, gx_, 0, gy_})];
}

std::size_t PartitionSolver::memo_entries() const {
  std::size_t total = 0;
  for (const auto& [key, slab] : slabs_) total += slab.size();
  return total;
}

PartitionNode PartitionSolver::extract_node(const RectRegion& rect, Orientation o, int r, int c) {
  PartitionNode node;
  node.rect = rect;
  if (canonical(o, r, c)) return node;  // (0,0): leaf
  const std::int64_t C = grid_.region_count(rect.xi_lo, rect.xi_hi, rect.yi_lo, rect.yi_hi);
  if (C == 0) return node;  // empty rectangle contributes nothing

  const std::vector<double>* child = o == Orientation::RowFirst ? ensure(Orientation::ColumnFirst, r - 1, c)
                                                                : ensure(Orientation::RowFirst, r, c - 1);
  const auto child_spec = [&]() -> std::pair<int, int> {
    return o == Orientation::RowFirst ? std::pair{r - 1, c} : std::pair{r, c - 1};
  }();
  const Orientation child_o = o == Orientation::RowFirst ? Orientation::ColumnFirst : Orientation::RowFirst;
  const double cd = static_cast<double>(C);

  const auto term_of = [&](const RectRegion& rr, double count) {
    const std::int64_t mx = xmarg_[rr.xi_hi] - xmarg_[rr.xi_lo];
    const std::int64_t my = ymarg_[rr.yi_hi] - ymarg_[rr.yi_lo];
    return ln_[static_cast<std::int64_t>(count)] - ln_[mx] - ln_[my] + ln_n_;
  };
  const auto child_value = [&](const RectRegion& rr) { return child ? (*child)[rect_id(rr)] : 0.0; };

  // Re-scan the candidates in the fill order (degenerate first, then ascending
  // cut index) and keep the first maximum.
  double best = term_of(rect, cd) + child_value(rect);
  int best_t = -1;
  const bool row = o == Orientation::RowFirst;
  const int lo = row ? rect.yi_lo : rect.xi_lo;
  const int hi = row ? rect.yi_hi : rect.xi_hi;
  for (int t = lo + 1; t < hi; ++t) {
    RectRegion a = rect, b = rect;
    if (row) {
      a.yi_hi = t;
      b.yi_lo = t;
    } else {
      a.xi_hi = t;
      b.xi_lo = t;
    }
    const double ca = static_cast<double>(grid_.region_count(a.xi_lo, a.xi_hi, a.yi_lo, a.yi_hi));
    const double cb = cd - ca;
    double s = 0.0;
    if (ca > 0.0) s += ca * (term_of(a, ca) + child_value(a));
    if (cb > 0.0) s += cb * (term_of(b, cb) + child_value(b));
    s /= cd;
    if (s > best) {
      best = s;
      best_t = t;
    }
  }

  node.axis = row ? SplitAxis::Row : SplitAxis::Column;
  node.split_index = best_t;
  if (best_t < 0) {
    node.children.push_back(extract_node(rect, child_o, child_spec.first, child_spec.second));
  } else {
    RectRegion a = rect, b = rect;
    if (row) {
      a.yi_hi = best_t;
      b.yi_lo = best_t;
    } else {
      a.xi_hi = best_t;
      b.xi_lo = best_t;
    }
    node.children.push_back(extract_node(a, child_o, child_spec.first, child_spec.second));
    node.children.push_back(extract_node(b, child_o, child_spec.first, child_spec.second));
  }
  return node;
}

PartitionNode PartitionSolver::extract(const DepthSpec& spec) {
  value(spec);  // make sure all reachable slabs exist
  return extract_node({0, gx_, 0, gy_}, spec.orientation, spec.r, spec.c);
}

DpValue max_restricted_divergence(const EmpiricalGrid& grid, const DepthSpec& spec) {
  PartitionSolver solver(grid);
  DpValue out;
  out.value = solver.value(spec);
  const PartitionNode root = solver.extract(spec);
  if (!root.is_leaf() && root.split_index >= 0) {
    out.best_split = {*root.axis, root.split_index};
  }
  return out;
}

PartitionNode extract_partition(const EmpiricalGrid& grid, const DepthSpec& spec) {
  PartitionSolver solver(grid);
  return solver.extract(spec);
}

double telescoped_value(const EmpiricalGrid& grid, const PartitionNode& tree) {
  if (tree.is_leaf()) {
    const RectMass m = rect_mass(grid, tree.rect);
    if (m.p_joint <= 0.0) return 0.0;
    return m.p_joint * std::log(m.p_joint / (m.p_x * m.p_y));
  }
  double sum = 0.0;
  for (const auto& child : tree.children) sum += telescoped_value(grid, child);
  return sum;
}

void dump_tree(std::ostream& out, const PartitionNode& node, int indent) {
  for (int i = 0; i < indent; ++i) out << "  ";
  out << "[" << node.rect.xi_lo << "," << node.rect.xi_hi << ")x[" << node.rect.yi_lo << "," << node.rect.yi_hi
      << ")";
  if (node.is_leaf()) {
    out << " leaf\n";
    return;
  }
  out << (node.axis == SplitAxis::Row ? " row" : " column");
  if (node.split_index < 0) {
    out << " degenerate\n";
  } else {
    out << " @" << node.split_index << "\n";
  }
  for (const auto& child : node.children) dump_tree(out, child, indent + 1);
}

}  // namespace art
