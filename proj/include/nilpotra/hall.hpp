/// @file hall.hpp
/// @brief Basic (Hall) commutators of weight <= c over n ordered
///        generators, with a deterministic total order.
///
/// A commutator tree is admissible ("basic") iff it is a leaf, or it is
/// [u, v] with u, v basic, u > v, and (u a leaf, or u = [u1, u2] with
/// u2 <= v).  The order compares weight first (lower weight is smaller),
/// then the leaf sequences (foliage) lexicographically, then recursively
/// by structure.  Weight-m basic commutators project to a basis of
/// gamma_m / gamma_{m+1}; their count is the Witt number
/// (1/m) * sum_{d | m} mu(d) * n^{m/d}.

#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <string>
#include <vector>

#include "common.hpp"

namespace nilpotra {

/// Binary bracketing of generators.  Leaves carry a 1-based generator
/// index; internal nodes carry children.  The foliage (left-to-right leaf
/// sequence) is precomputed because the order and the collection solver
/// consult it constantly.
struct CommutatorTree {
  int weight = 1;
  int gen = 0;                           // valid iff leaf
  const CommutatorTree* left = nullptr;  // valid iff node
  const CommutatorTree* right = nullptr;
  std::vector<int> foliage;

  bool is_leaf() const { return left == nullptr; }
};

/// Three-way comparison implementing the basis order: weight, then
/// foliage lex, then recursive structural comparison.
inline int tree_cmp(const CommutatorTree* a, const CommutatorTree* b) {
  if (a == b) return 0;
  if (a->weight != b->weight) return a->weight < b->weight ? -1 : 1;
  if (a->foliage != b->foliage)
    return std::lexicographical_compare(a->foliage.begin(), a->foliage.end(),
                                        b->foliage.begin(), b->foliage.end())
               ? -1
               : 1;
  if (a->is_leaf()) return 0;  // equal weight-1 foliage => same generator
  if (int c = tree_cmp(a->left, b->left)) return c;
  return tree_cmp(a->right, b->right);
}

/// The total order on commutator trees for a given rank.  The comparison
/// itself does not depend on the rank; the rank only bounds leaf indices.
struct HallOrder {
  int rank = 0;

  bool less(const CommutatorTree* a, const CommutatorTree* b) const {
    return tree_cmp(a, b) < 0;
  }
  bool less_equal(const CommutatorTree* a, const CommutatorTree* b) const {
    return tree_cmp(a, b) <= 0;
  }
};

/// Admissibility predicate: t is basic iff it is a leaf, or t = [u, v]
/// with u, v basic, u > v, and (u a leaf or u = [u1, u2] with u2 <= v).
inline bool is_basic(const CommutatorTree* t) {
  if (t->is_leaf()) return true;
  const CommutatorTree* u = t->left;
  const CommutatorTree* v = t->right;
  if (!is_basic(u) || !is_basic(v)) return false;
  if (tree_cmp(u, v) <= 0) return false;
  if (!u->is_leaf() && tree_cmp(u->right, v) > 0) return false;
  return true;
}

inline bool is_basic(const CommutatorTree* t, const HallOrder&) {
  return is_basic(t);
}

/// Number of occurrences of generator g among the leaves of t.
inline int nu(const CommutatorTree* t, int g) {
  int count = 0;
  for (int leaf : t->foliage) count += (leaf == g);
  return count;
}

/// Fully nested bracket rendering, e.g. "[[x2,x1],x1]".  Valid word
/// grammar, so it round-trips through parse_word.
inline std::string format_tree(const CommutatorTree* t) {
  if (t->is_leaf()) return "x" + std::to_string(t->gen);
  return "[" + format_tree(t->left) + "," + format_tree(t->right) + "]";
}

/// Owning store for ad-hoc commutator trees (tests, parsed input).
/// HallBasis has its own internal arena; this one is for callers that
/// need to build trees outside a basis.
class TreeArena {
 public:
  const CommutatorTree* leaf(int gen) {
    CommutatorTree t;
    t.weight = 1;
    t.gen = gen;
    t.foliage = {gen};
    store_.push_back(std::move(t));
    return &store_.back();
  }

  const CommutatorTree* node(const CommutatorTree* l, const CommutatorTree* r) {
    CommutatorTree t;
    t.weight = l->weight + r->weight;
    t.left = l;
    t.right = r;
    t.foliage = l->foliage;
    t.foliage.insert(t.foliage.end(), r->foliage.begin(), r->foliage.end());
    store_.push_back(std::move(t));
    return &store_.back();
  }

 private:
  std::deque<CommutatorTree> store_;  // stable addresses
};

/// Moebius function for small m.
inline int moebius(int m) {
  int result = 1;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      m /= p;
      if (m % p == 0) return 0;  // squared factor
      result = -result;
    }
  }
  if (m > 1) result = -result;
  return result;
}

/// Witt number (1/m) * sum_{d | m} mu(d) * n^{m/d}: the count of
/// weight-m basic commutators on n generators.
inline Int witt_count(int n, int m) {
  if (n < 1 || m < 1) throw domain_error("witt_count: need n >= 1, m >= 1");
  Int sum = 0;
  for (int d = 1; d <= m; ++d) {
    if (m % d != 0) continue;
    Int p = 1;
    for (int i = 0; i < m / d; ++i) p *= n;
    sum += moebius(d) * p;
  }
  if (sum % m != 0) throw internal_error("witt_count: non-integral");
  return sum / m;
}

/// The ordered basic commutators of weights 1..c over n generators,
/// stratified by weight.  Immutable after construction.
class HallBasis {
 public:
  HallBasis(int n, int c) : rank_(n), cls_(c) {
    if (n < 1 || c < 1) throw domain_error("HallBasis: need n >= 1, c >= 1");
    strata_.resize(c);
    for (int g = 1; g <= n; ++g) strata_[0].push_back(arena_.leaf(g));
    for (int m = 2; m <= c; ++m) {
      auto& stratum = strata_[m - 1];
      // Every basic [u, v] of weight m arises from exactly one split
      // (weight(u), weight(v)), so no deduplication is needed.
      for (int l = 1; l < m; ++l) {
        for (const CommutatorTree* u : strata_[m - l - 1]) {
          for (const CommutatorTree* v : strata_[l - 1]) {
            if (tree_cmp(u, v) <= 0) continue;
            if (!u->is_leaf() && tree_cmp(u->right, v) > 0) continue;
            stratum.push_back(arena_.node(u, v));
          }
        }
      }
      std::sort(stratum.begin(), stratum.end(),
                [](const CommutatorTree* a, const CommutatorTree* b) {
                  return tree_cmp(a, b) < 0;
                });
    }
    stratum_offset_.resize(c + 1, 0);
    for (int m = 1; m <= c; ++m) {
      stratum_offset_[m] = stratum_offset_[m - 1] +
                           static_cast<int>(strata_[m - 1].size());
      for (const CommutatorTree* t : strata_[m - 1]) {
        by_position_.push_back(t);
        position_[t] = static_cast<int>(by_position_.size()) - 1;
        by_text_[format_tree(t)] = position_[t];
      }
    }
  }

  HallBasis(const HallBasis&) = delete;
  HallBasis& operator=(const HallBasis&) = delete;

  int rank() const { return rank_; }
  int cls() const { return cls_; }

  /// Total number of basis elements across all strata.
  int size() const { return static_cast<int>(by_position_.size()); }

  /// Basic commutators of weight m, in basis order.
  const std::vector<const CommutatorTree*>& stratum(int m) const {
    if (m < 1 || m > cls_) throw domain_error("stratum weight out of range");
    return strata_[m - 1];
  }

  /// Global position of the first weight-m element.
  int stratum_offset(int m) const { return stratum_offset_[m - 1]; }

  const CommutatorTree* at(int position) const {
    return by_position_.at(position);
  }

  /// Global position of a tree owned by this basis.
  int position_of(const CommutatorTree* t) const {
    auto it = position_.find(t);
    if (it == position_.end())
      throw internal_error("position_of: tree not in basis");
    return it->second;
  }

  /// Position lookup by rendered text (e.g. "[x2,x1]"); -1 if absent.
  int find_by_text(const std::string& text) const {
    auto it = by_text_.find(text);
    return it == by_text_.end() ? -1 : it->second;
  }

  /// Weight of the basis element at a global position.
  int weight_of(int position) const { return at(position)->weight; }

 private:
  int rank_;
  int cls_;
  TreeArena arena_;
  std::vector<std::vector<const CommutatorTree*>> strata_;
  std::vector<int> stratum_offset_;  // index: weight, 1-based
  std::vector<const CommutatorTree*> by_position_;
  std::map<const CommutatorTree*, int> position_;
  std::map<std::string, int> by_text_;
};

}  // namespace nilpotra
