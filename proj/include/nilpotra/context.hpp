/// @file context.hpp
/// @brief Shared per-(rank, class) state: the Hall basis, the monomial
///        layout, Lie expansions of basic commutators, and the solver
///        that converts a homogeneous Lie element back to basis
///        coordinates.
///
/// Contexts are interned: get(n, c) hands out one shared immutable
/// instance per parameter pair.  The expensive pieces (expansions and
/// solver pivot plans) are built eagerly; the series of each basic
/// commutator is memoised lazily because most workloads touch only a
/// few of them.
///
/// The solver works stratum by stratum.  Within a stratum, the Lie
/// expansions of two basic commutators share monomials only if their
/// leaf multisets agree, so the linear system splits into blocks keyed
/// by sorted foliage.  Each block gets a precomputed pivot plan: an
/// elimination order in which every step owns a monomial no other
/// still-unsolved row touches.  Solving is then one exact division per
/// row, certified at runtime by a divisibility check plus a final
/// zero-residual check.  Blocks where no such order exists (none are
/// known for the supported sizes, but the code stays honest) fall back
/// to rational elimination, with the same end certificates.

#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "common.hpp"
#include "hall.hpp"
#include "series.hpp"

namespace nilpotra {

using Rational = boost::multiprecision::cpp_rational;

/// Sparse homogeneous Lie element of a fixed degree: within-degree
/// monomial rank -> coefficient.
using LieComponent = std::map<std::size_t, Int>;

class GroupContext;
using ContextPtr = std::shared_ptr<const GroupContext>;

class GroupContext : public std::enable_shared_from_this<GroupContext> {
 public:
  /// Interned accessor.  Refuses (resource_error) if the total basis
  /// size would exceed max_witt.
  static ContextPtr get(int n, int c, const Int& max_witt = Int(1000000)) {
    if (n < 1) throw domain_error("rank must be >= 1");
    if (c < 1) throw domain_error("class must be >= 1");
    Int total = 0;
    for (int m = 1; m <= c; ++m) {
      total += witt_count(n, m);
      if (total > max_witt)
        throw resource_error("Hall basis size exceeds the Witt cap");
    }
    static std::mutex intern_mutex;
    static std::map<std::pair<int, int>, std::shared_ptr<const GroupContext>>
        interned;
    std::lock_guard<std::mutex> lock(intern_mutex);
    auto key = std::make_pair(n, c);
    auto it = interned.find(key);
    if (it != interned.end()) return it->second;
    std::shared_ptr<const GroupContext> ctx(new GroupContext(n, c));
    interned.emplace(key, ctx);
    return ctx;
  }

  int rank() const { return rank_; }
  int cls() const { return cls_; }
  const HallBasis& basis() const { return basis_; }
  const MonoTable& monos() const { return monos_; }

  /// Lie expansion of the basis element at a global position, as a
  /// sparse degree-(weight) component.
  const LieComponent& expansion(int position) const {
    return expansions_[position];
  }

  /// Magnus series of the basis element at a global position (the image
  /// of the bracketed word under x_i -> 1 + X_i).  Lazy, thread-safe.
  const Series& basis_series(int position) const {
    std::lock_guard<std::recursive_mutex> lock(series_mutex_);
    auto& slot = series_cache_[position];
    if (slot) return *slot;
    const CommutatorTree* t = basis_.at(position);
    if (t->is_leaf()) {
      slot = std::make_unique<Series>(Series::generator(&monos_, t->gen));
    } else {
      const Series& u = basis_series(basis_.position_of(t->left));
      const Series& v = basis_series(basis_.position_of(t->right));
      slot = std::make_unique<Series>(u * v * u.inverse() * v.inverse());
    }
    return *slot;
  }

  /// Solves component = sum_i e_i * expansion(p_i) over the weight-m
  /// stratum, appending (position, e_i) pairs with e_i != 0 to out in
  /// basis order.  Consumes component down to empty; anything left is
  /// an internal error (the component was not in the Lie span).
  void solve_stratum(int m, LieComponent& component,
                     std::vector<std::pair<int, Int>>& out) const {
    const std::size_t first = out.size();
    for (const Block& block : solvers_[m - 1].blocks) {
      if (component.empty()) break;
      if (block.plan) {
        solve_by_plan(block, component, out);
      } else {
        solve_by_elimination(block, component, out);
      }
    }
    if (!component.empty())
      throw internal_error("solve_stratum: residual outside the Lie span");
    std::sort(out.begin() + first, out.end());
  }

 private:
  GroupContext(int n, int c)
      : rank_(n), cls_(c), basis_(n, c), monos_(n, c) {
    build_expansions();
    build_solvers();
    series_cache_.resize(basis_.size());
  }

  struct PlanStep {
    int row = 0;              // index within the block
    std::size_t pivot = 0;    // monomial rank private to this row
    Int divisor;              // its coefficient in the row's expansion
  };

  struct Block {
    std::vector<int> positions;                 // global basis positions
    std::vector<const LieComponent*> rows;      // their expansions
    std::optional<std::vector<PlanStep>> plan;  // empty => elimination
  };

  struct StratumSolver {
    std::vector<Block> blocks;
  };

  void build_expansions() {
    expansions_.resize(basis_.size());
    for (int pos = 0; pos < basis_.size(); ++pos) {
      const CommutatorTree* t = basis_.at(pos);
      if (t->is_leaf()) {
        expansions_[pos][static_cast<std::size_t>(t->gen - 1)] = 1;
        continue;
      }
      const LieComponent& u = expansions_[basis_.position_of(t->left)];
      const LieComponent& v = expansions_[basis_.position_of(t->right)];
      LieComponent& e = expansions_[pos];
      const std::size_t shift_u = monos_.npow[t->right->weight];
      const std::size_t shift_v = monos_.npow[t->left->weight];
      for (const auto& [ru, cu] : u) {
        for (const auto& [rv, cv] : v) {
          accumulate(e, ru * shift_u + rv, cu * cv);
          accumulate(e, rv * shift_v + ru, -cu * cv);
        }
      }
    }
  }

  static void accumulate(LieComponent& e, std::size_t rank, const Int& delta) {
    auto it = e.find(rank);
    if (it == e.end()) {
      if (delta != 0) e.emplace(rank, delta);
      return;
    }
    it->second += delta;
    if (it->second == 0) e.erase(it);
  }

  void build_solvers() {
    solvers_.resize(cls_);
    for (int m = 1; m <= cls_; ++m) {
      std::map<std::vector<int>, Block> grouped;
      for (const CommutatorTree* t : basis_.stratum(m)) {
        std::vector<int> key = t->foliage;
        std::sort(key.begin(), key.end());
        const int pos = basis_.position_of(t);
        Block& b = grouped[key];
        b.positions.push_back(pos);
        b.rows.push_back(&expansions_[pos]);
      }
      for (auto& [key, block] : grouped) {
        block.plan = make_plan(block);
        solvers_[m - 1].blocks.push_back(std::move(block));
      }
    }
  }

  /// Greedy pivot-plan search: repeatedly pick a row owning a monomial
  /// absent from every other unsolved row.  Returns nullopt if stuck.
  static std::optional<std::vector<PlanStep>> make_plan(const Block& block) {
    const int t = static_cast<int>(block.rows.size());
    std::vector<bool> solved(t, false);
    std::vector<PlanStep> plan;
    for (int step = 0; step < t; ++step) {
      bool found = false;
      for (int r = 0; r < t && !found; ++r) {
        if (solved[r]) continue;
        for (const auto& [mono, coeff] : *block.rows[r]) {
          bool shared = false;
          for (int other = 0; other < t; ++other) {
            if (other == r || solved[other]) continue;
            if (block.rows[other]->count(mono)) {
              shared = true;
              break;
            }
          }
          if (!shared) {
            plan.push_back(PlanStep{r, mono, coeff});
            solved[r] = true;
            found = true;
            break;
          }
        }
      }
      if (!found) return std::nullopt;
    }
    return plan;
  }

  void solve_by_plan(const Block& block, LieComponent& component,
                     std::vector<std::pair<int, Int>>& out) const {
    for (const PlanStep& step : *block.plan) {
      auto it = component.find(step.pivot);
      if (it == component.end()) continue;
      if (it->second % step.divisor != 0)
        throw internal_error("solve_stratum: non-integral pivot division");
      const Int e = it->second / step.divisor;
      for (const auto& [mono, coeff] : *block.rows[step.row])
        accumulate(component, mono, -e * coeff);
      if (e != 0) out.emplace_back(block.positions[step.row], e);
    }
  }

  void solve_by_elimination(const Block& block, LieComponent& component,
                            std::vector<std::pair<int, Int>>& out) const {
    // Collect the block's monomial support in a fixed order.
    std::map<std::size_t, int> mono_index;
    for (const LieComponent* row : block.rows)
      for (const auto& [mono, coeff] : *row)
        mono_index.emplace(mono, 0);
    int idx = 0;
    for (auto& [mono, i] : mono_index) i = idx++;
    const int rows = idx;
    const int cols = static_cast<int>(block.rows.size());

    std::vector<std::vector<Rational>> a(
        rows, std::vector<Rational>(cols + 1, Rational(0)));
    for (int cidx = 0; cidx < cols; ++cidx)
      for (const auto& [mono, coeff] : *block.rows[cidx])
        a[mono_index[mono]][cidx] = Rational(coeff);
    for (const auto& [mono, coeff] : component) {
      auto it = mono_index.find(mono);
      if (it != mono_index.end()) a[it->second][cols] = Rational(coeff);
    }

    // Gauss-Jordan; the expansions are linearly independent, so every
    // column finds a pivot.
    int pivot_row = 0;
    std::vector<int> pivot_of(cols, -1);
    for (int cidx = 0; cidx < cols; ++cidx) {
      int pr = -1;
      for (int r = pivot_row; r < rows; ++r)
        if (a[r][cidx] != 0) {
          pr = r;
          break;
        }
      if (pr < 0)
        throw internal_error("solve_stratum: dependent expansion block");
      std::swap(a[pr], a[pivot_row]);
      const Rational inv = Rational(1) / a[pivot_row][cidx];
      for (int k = cidx; k <= cols; ++k) a[pivot_row][k] *= inv;
      for (int r = 0; r < rows; ++r) {
        if (r == pivot_row || a[r][cidx] == 0) continue;
        const Rational f = a[r][cidx];
        for (int k = cidx; k <= cols; ++k) a[r][k] -= f * a[pivot_row][k];
      }
      pivot_of[cidx] = pivot_row;
      ++pivot_row;
    }

    for (int cidx = 0; cidx < cols; ++cidx) {
      const Rational& x = a[pivot_of[cidx]][cols];
      if (boost::multiprecision::denominator(x) != 1)
        throw internal_error("solve_stratum: non-integral solution");
      const Int e = Int(boost::multiprecision::numerator(x));
      if (e == 0) continue;
      for (const auto& [mono, coeff] : *block.rows[cidx])
        accumulate(component, mono, -e * coeff);
      out.emplace_back(block.positions[cidx], e);
    }
  }

  int rank_;
  int cls_;
  HallBasis basis_;
  MonoTable monos_;
  std::vector<LieComponent> expansions_;
  std::vector<StratumSolver> solvers_;
  mutable std::recursive_mutex series_mutex_;
  mutable std::vector<std::unique_ptr<Series>> series_cache_;
};

}  // namespace nilpotra
