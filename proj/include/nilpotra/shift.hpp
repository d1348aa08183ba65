/// @file shift.hpp
/// @brief The shift endomorphism on sparse integer coordinate vectors:
///        rho(e_k) = e_{k+1} and rho(f) = f + alpha*e_0 +
///        sum_j beta_j*(e_j - e_{j+1}).
///
/// The quantity of interest is g_n = rho^n(f) - f, which telescopes to
/// the closed form alpha*(e_0 + ... + e_{n-1}) + sum_j beta_j*(e_j -
/// e_{j+n}) and, for alpha != 0, always keeps at least n nonzero
/// coordinates.  Iteration and closed form are computed independently
/// so each can check the other.

#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "common.hpp"

namespace nilpotra {

struct ShiftSystem {
  std::int64_t alpha = 0;
  std::vector<std::int64_t> betas;  // beta_0 .. beta_r
};

/// Sparse integer vector over the e_k coordinates.
using SparseVector = std::map<std::int64_t, std::int64_t>;

inline void add_coord(SparseVector& v, std::int64_t index, std::int64_t delta) {
  auto it = v.find(index);
  if (it == v.end()) {
    if (delta != 0) v.emplace(index, delta);
    return;
  }
  it->second += delta;
  if (it->second == 0) v.erase(it);
}

/// One application of rho to a state f_count * f + (e-part).  The shift
/// moves every e_k up one slot; each f contributes the rho(f) - f tail.
struct ShiftState {
  std::int64_t f_count = 0;
  SparseVector e;
};

inline ShiftState shift_apply(const ShiftSystem& sys, const ShiftState& s) {
  ShiftState out;
  out.f_count = s.f_count;
  for (const auto& [k, v] : s.e) add_coord(out.e, k + 1, v);
  for (std::int64_t i = 0; i < s.f_count; ++i) {
    add_coord(out.e, 0, sys.alpha);
    for (std::size_t j = 0; j < sys.betas.size(); ++j) {
      add_coord(out.e, static_cast<std::int64_t>(j), sys.betas[j]);
      add_coord(out.e, static_cast<std::int64_t>(j) + 1, -sys.betas[j]);
    }
  }
  return out;
}

/// g_n = rho^n(f) - f by literal n-fold iteration.
inline SparseVector shift_iterate(const ShiftSystem& sys, int n) {
  ShiftState s;
  s.f_count = 1;
  for (int i = 0; i < n; ++i) s = shift_apply(sys, s);
  if (s.f_count != 1) throw internal_error("shift_iterate: lost the f term");
  return s.e;  // subtracting f cancels the f_count
}

/// g_n by the telescoped closed form.
inline SparseVector shift_closed_form(const ShiftSystem& sys, int n) {
  SparseVector g;
  for (int k = 0; k < n; ++k) add_coord(g, k, sys.alpha);
  for (std::size_t j = 0; j < sys.betas.size(); ++j) {
    add_coord(g, static_cast<std::int64_t>(j), sys.betas[j]);
    add_coord(g, static_cast<std::int64_t>(j) + n, -sys.betas[j]);
  }
  return g;
}

inline int nonzero_count(const SparseVector& v) {
  return static_cast<int>(v.size());
}

}  // namespace nilpotra
