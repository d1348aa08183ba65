/// @file random.hpp
/// @brief Seeded random generation of words, elements, IA elements and
///        automorphisms for property tests and the verification suite.
///
/// Reproducibility matters more than statistical polish here: the
/// engine is mt19937_64 (whose output sequence the C++ standard pins
/// down exactly), and bounded draws use plain modulo so the same seed
/// yields the same data on every platform.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "element.hpp"
#include "morphism.hpp"
#include "unitriangular.hpp"
#include "word.hpp"

namespace nilpotra {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  /// Uniform-ish integer in [lo, hi]; the modulo bias is irrelevant for
  /// test-data purposes and keeps the draw platform-stable.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(eng_() % range);
  }

  bool coin() { return (eng_() & 1) != 0; }

 private:
  std::mt19937_64 eng_;
};

/// Random word of the given letter count: uniform generators, exponents
/// drawn from {-2, -1, 1, 2}.
inline Word random_word(Rng& rng, int rank, int letters) {
  static constexpr std::int64_t kExps[4] = {-2, -1, 1, 2};
  Word w;
  w.reserve(letters);
  for (int i = 0; i < letters; ++i)
    w.push_back(Letter{static_cast<int>(rng.uniform(1, rank)),
                       kExps[rng.uniform(0, 3)]});
  return w;
}

inline NilpotentElement random_element(Rng& rng, const ContextPtr& ctx,
                                       int letters = 12) {
  return collect(random_word(rng, ctx->rank(), letters), ctx);
}

/// Random element of gamma_k: a short product of powers of weight >= k
/// basis elements.  Identity when k exceeds the class.
inline NilpotentElement random_gamma_element(Rng& rng, const ContextPtr& ctx,
                                             int k, int terms = 3) {
  NilpotentElement acc = identity_element(ctx);
  if (k > ctx->cls()) return acc;
  const int lo = ctx->basis().stratum_offset(k);
  const int hi = ctx->basis().size() - 1;
  static constexpr std::int64_t kExps[4] = {-2, -1, 1, 2};
  for (int i = 0; i < terms; ++i) {
    const int pos = static_cast<int>(rng.uniform(lo, hi));
    acc = mul(acc, power(basis_element(ctx, pos),
                         Int(kExps[rng.uniform(0, 3)])));
  }
  return acc;
}

/// Random automorphism with ia_level >= level: each generator image is
/// x_i times a random gamma_{level+1} element.
inline Endomorphism random_ia(Rng& rng, const ContextPtr& ctx, int level = 1) {
  std::vector<NilpotentElement> images;
  for (int i = 1; i <= ctx->rank(); ++i)
    images.push_back(mul(generator_element(ctx, i),
                         random_gamma_element(rng, ctx, level + 1)));
  return Endomorphism{ctx, std::move(images)};
}

/// Random automorphism: a chain of elementary moves (transvections,
/// inversions, swaps) followed by a random IA factor.
inline Endomorphism random_automorphism(Rng& rng, const ContextPtr& ctx,
                                        int moves = -1) {
  const int n = ctx->rank();
  if (moves < 0) moves = 2 * n;
  Endomorphism acc = identity_endo(ctx);
  for (int step = 0; step < moves; ++step) {
    Endomorphism move = identity_endo(ctx);
    const int i = static_cast<int>(rng.uniform(1, n));
    switch (n > 1 ? rng.uniform(0, 2) : 1) {
      case 0: {  // transvection x_i -> x_i x_j^s
        int j = static_cast<int>(rng.uniform(1, n - 1));
        if (j >= i) ++j;
        const Int s = rng.coin() ? 1 : -1;
        move.images[i - 1] =
            mul(generator_element(ctx, i),
                power(generator_element(ctx, j), s));
        break;
      }
      case 1:  // inversion x_i -> x_i^-1
        move.images[i - 1] = inv(generator_element(ctx, i));
        break;
      default: {  // swap x_i <-> x_j
        int j = static_cast<int>(rng.uniform(1, n - 1));
        if (j >= i) ++j;
        std::swap(move.images[i - 1], move.images[j - 1]);
        break;
      }
    }
    acc = compose(acc, move);
  }
  return compose(acc, random_ia(rng, ctx, 1));
}

/// Random unitriangular matrix with entries above the diagonal in
/// [-bound, bound].
inline UniTriangular random_unitriangular(Rng& rng, int size, int bound = 3) {
  UniTriangular m(size);
  for (int i = 0; i < size; ++i)
    for (int j = i + 1; j < size; ++j)
      m.at(i, j) = rng.uniform(-bound, bound);
  return m;
}

}  // namespace nilpotra
