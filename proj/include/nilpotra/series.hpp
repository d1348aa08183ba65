/// @file series.hpp
/// @brief Dense truncated power series over noncommuting variables
///        X_1..X_n with integer coefficients, cut off above degree c.
///
/// This is the workhorse behind collection: sending x_i to 1 + X_i gives
/// a faithful picture of the free nilpotent group of class c (elements
/// land in 1 + higher terms, and gamma_k maps into 1 + (degree >= k)).
/// Monomials of degree d are indexed by their base-n digit string, so a
/// degree block is a contiguous slice and multiplication is a simple
/// block convolution.

#pragma once

#include <cstddef>
#include <vector>

#include "common.hpp"

namespace nilpotra {

/// Index layout for monomials of degree 0..c over n variables.  The
/// degree-d block starts at off[d] and holds n^d entries; the monomial
/// X_{i_1}...X_{i_d} (1-based letters) sits at within-block rank
/// sum_k (i_k - 1) * n^(d-k).
struct MonoTable {
  int n = 0;
  int c = 0;
  std::vector<std::size_t> npow;  // npow[d] = n^d
  std::vector<std::size_t> off;   // off[d] = start of degree-d block
  std::size_t total = 0;

  MonoTable(int n_, int c_) : n(n_), c(c_) {
    npow.resize(c + 1);
    off.resize(c + 2);
    npow[0] = 1;
    off[0] = 0;
    for (int d = 0; d <= c; ++d) {
      if (d > 0) npow[d] = npow[d - 1] * static_cast<std::size_t>(n);
      off[d + 1] = off[d] + npow[d];
    }
    total = off[c + 1];
  }
};

/// A truncated series: total coefficient vector indexed by MonoTable.
class Series {
 public:
  explicit Series(const MonoTable* table)
      : table_(table), a_(table->total) {}

  static Series one(const MonoTable* table) {
    Series s(table);
    s.a_[0] = 1;
    return s;
  }

  /// The series of the generator x_g, namely 1 + X_g.
  static Series generator(const MonoTable* table, int g) {
    Series s = one(table);
    s.a_[table->off[1] + static_cast<std::size_t>(g - 1)] = 1;
    return s;
  }

  const MonoTable* table() const { return table_; }

  Int& at(std::size_t i) { return a_[i]; }
  const Int& at(std::size_t i) const { return a_[i]; }

  /// Coefficient of the degree-d monomial with within-block rank r.
  const Int& coeff(int d, std::size_t r) const {
    return a_[table_->off[d] + r];
  }
  Int& coeff(int d, std::size_t r) { return a_[table_->off[d] + r]; }

  bool is_zero() const {
    for (const Int& v : a_)
      if (v != 0) return false;
    return true;
  }

  bool is_one() const {
    if (a_[0] != 1) return false;
    for (std::size_t i = 1; i < a_.size(); ++i)
      if (a_[i] != 0) return false;
    return true;
  }

  bool operator==(const Series& other) const {
    return table_ == other.table_ && a_ == other.a_;
  }
  bool operator!=(const Series& other) const { return !(*this == other); }

  Series& operator+=(const Series& other) {
    check_table(other);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += other.a_[i];
    return *this;
  }

  Series& operator-=(const Series& other) {
    check_table(other);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= other.a_[i];
    return *this;
  }

  /// this += k * other.
  Series& add_scaled(const Int& k, const Series& other) {
    check_table(other);
    if (k == 0) return *this;
    for (std::size_t i = 0; i < a_.size(); ++i)
      if (other.a_[i] != 0) a_[i] += k * other.a_[i];
    return *this;
  }

  friend Series operator*(const Series& u, const Series& v) {
    u.check_table(v);
    const MonoTable& t = *u.table_;
    Series w(u.table_);
    for (int da = 0; da <= t.c; ++da) {
      const std::size_t offa = t.off[da];
      for (std::size_t i = 0; i < t.npow[da]; ++i) {
        const Int& ui = u.a_[offa + i];
        if (ui == 0) continue;
        for (int db = 0; da + db <= t.c; ++db) {
          const std::size_t offb = t.off[db];
          const std::size_t base = t.off[da + db] + i * t.npow[db];
          for (std::size_t j = 0; j < t.npow[db]; ++j) {
            const Int& vj = v.a_[offb + j];
            if (vj == 0) continue;
            w.a_[base + j] += ui * vj;
          }
        }
      }
    }
    return w;
  }

  /// (1 + r)^e for arbitrary integer e, where this = 1 + r.  The
  /// truncation makes the binomial sum finite; negative and zero
  /// exponents come out right because C(e, j) is the polynomial
  /// e(e-1)...(e-j+1)/j!.
  Series binom_pow(const Int& e) const {
    if (a_[0] != 1)
      throw internal_error("binom_pow: constant term must be 1");
    Series r = *this;
    r.a_[0] = 0;
    Series acc = one(table_);
    Series term = one(table_);
    for (int j = 1; j <= table_->c; ++j) {
      term = term * r;
      if (term.is_zero()) break;
      acc.add_scaled(binomial(e, j), term);
    }
    return acc;
  }

  /// Multiplicative inverse of a series with constant term 1.
  Series inverse() const { return binom_pow(Int(-1)); }

 private:
  void check_table(const Series& other) const {
    if (table_ != other.table_)
      throw internal_error("series arithmetic across different tables");
  }

  const MonoTable* table_;
  std::vector<Int> a_;
};

}  // namespace nilpotra
