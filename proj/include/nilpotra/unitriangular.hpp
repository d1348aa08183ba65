/// @file unitriangular.hpp
/// @brief Upper unitriangular integer matrices, used as an independent
///        oracle group.
///
/// A unitriangular (c+1)x(c+1) matrix group is nilpotent of class at
/// most c, so any assignment of generators to such matrices extends to
/// a homomorphism from the free class-c group.  Two words with equal
/// normal forms must therefore evaluate identically under every
/// assignment — a falsification oracle that shares no code with
/// collection.

#pragma once

#include <cstdint>
#include <vector>

#include "common.hpp"
#include "word.hpp"

namespace nilpotra {

class UniTriangular {
 public:
  /// Identity matrix of the given size.
  explicit UniTriangular(int size)
      : size_(size), a_(static_cast<std::size_t>(size) * size) {
    for (int i = 0; i < size; ++i) at(i, i) = 1;
  }

  int size() const { return size_; }

  Int& at(int i, int j) { return a_[static_cast<std::size_t>(i) * size_ + j]; }
  const Int& at(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * size_ + j];
  }

  bool operator==(const UniTriangular& other) const {
    return size_ == other.size_ && a_ == other.a_;
  }
  bool operator!=(const UniTriangular& other) const {
    return !(*this == other);
  }

  UniTriangular operator*(const UniTriangular& other) const {
    UniTriangular w(size_);
    for (int i = 0; i < size_; ++i)
      for (int j = 0; j < size_; ++j) {
        Int s = 0;
        for (int k = i; k <= j; ++k) s += at(i, k) * other.at(k, j);
        w.at(i, j) = s;
      }
    return w;
  }

  /// Inverse via the finite Neumann series: with N = M - I nilpotent,
  /// M^-1 = sum_k (-N)^k.
  UniTriangular inverse() const {
    UniTriangular n(size_);
    for (int i = 0; i < size_; ++i)
      for (int j = 0; j < size_; ++j)
        n.at(i, j) = (i == j ? Int(0) : -at(i, j));
    UniTriangular acc(size_);
    UniTriangular term(size_);
    for (int k = 1; k < size_; ++k) {
      term = term * n;
      for (int i = 0; i < size_; ++i)
        for (int j = 0; j < size_; ++j) acc.at(i, j) += term.at(i, j);
    }
    return acc;
  }

  UniTriangular pow(std::int64_t e) const {
    UniTriangular base = e < 0 ? inverse() : *this;
    std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1
                            : static_cast<std::uint64_t>(e);
    UniTriangular acc(size_);
    while (k) {
      if (k & 1) acc = acc * base;
      base = base * base;
      k >>= 1;
    }
    return acc;
  }

 private:
  int size_;
  std::vector<Int> a_;
};

/// Evaluates a word under a generator-to-matrix assignment.
inline UniTriangular evaluate_word_ut(
    const Word& w, const std::vector<UniTriangular>& images) {
  if (images.empty()) throw domain_error("evaluate_word_ut: no images");
  UniTriangular acc(images[0].size());
  for (const Letter& l : w) {
    if (l.gen < 1 || l.gen > static_cast<int>(images.size()))
      throw domain_error("word letter has no matrix image");
    acc = acc * images[l.gen - 1].pow(l.exp);
  }
  return acc;
}

}  // namespace nilpotra
