/// @file morphism.hpp
/// @brief Endomorphisms of a free nilpotent group, given by generator
///        images; automorphism tests, inversion, IA filtration levels,
///        inner automorphisms, class projection/lifting, and primitive
///        elements.
///
/// An endomorphism is determined by where the generators go, and every
/// question here reduces to series evaluation of those images.  An
/// endomorphism is an automorphism iff its abelianization matrix is
/// invertible over the integers (determinant +-1): surjectivity mod the
/// derived subgroup lifts through the nilpotent filtration, and the
/// inverse is found by composing an abelianization inverse with at most
/// c rounds of IA-correction peeling.

#pragma once

#include <algorithm>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "common.hpp"
#include "element.hpp"

namespace nilpotra {

struct Endomorphism {
  ContextPtr ctx;
  std::vector<NilpotentElement> images;  // images[i] = image of x_{i+1}

  bool operator==(const Endomorphism& other) const {
    return ctx == other.ctx && images == other.images;
  }
  bool operator!=(const Endomorphism& other) const {
    return !(*this == other);
  }
};

inline Endomorphism identity_endo(ContextPtr ctx) {
  std::vector<NilpotentElement> images;
  for (int i = 1; i <= ctx->rank(); ++i)
    images.push_back(generator_element(ctx, i));
  return Endomorphism{std::move(ctx), std::move(images)};
}

inline Endomorphism endo_from_images(ContextPtr ctx,
                                     std::vector<NilpotentElement> images) {
  if (static_cast<int>(images.size()) != ctx->rank())
    throw domain_error("endomorphism needs one image per generator");
  for (const NilpotentElement& e : images)
    if (e.ctx != ctx)
      throw context_mismatch("image lives in a different group context");
  return Endomorphism{std::move(ctx), std::move(images)};
}

namespace detail {

/// Series of the image of a basic commutator under f, memoised by tree
/// node so shared subtrees are evaluated once per apply.
inline const Series& image_series(
    const Endomorphism& f, const CommutatorTree* t,
    std::map<const CommutatorTree*, Series>& memo) {
  auto it = memo.find(t);
  if (it != memo.end()) return it->second;
  Series s = Series::one(&f.ctx->monos());
  if (t->is_leaf()) {
    s = to_series(f.images[t->gen - 1]);
  } else {
    const Series& u = image_series(f, t->left, memo);
    const Series& v = image_series(f, t->right, memo);
    s = u * v * u.inverse() * v.inverse();
  }
  return memo.emplace(t, std::move(s)).first->second;
}

}  // namespace detail

/// The unique homomorphic extension of x_i -> images[i], applied to a.
inline NilpotentElement apply(const Endomorphism& f,
                              const NilpotentElement& a) {
  if (f.ctx != a.ctx)
    throw context_mismatch("endomorphism and element contexts differ");
  std::map<const CommutatorTree*, Series> memo;
  Series acc = Series::one(&f.ctx->monos());
  for (const auto& [pos, e] : a.coords)
    acc = acc *
          detail::image_series(f, f.ctx->basis().at(pos), memo).binom_pow(e);
  return from_series(f.ctx, std::move(acc));
}

/// compose(f, g) maps x to f(g(x)).
inline Endomorphism compose(const Endomorphism& f, const Endomorphism& g) {
  if (f.ctx != g.ctx)
    throw context_mismatch("composed endomorphisms use different contexts");
  std::vector<NilpotentElement> images;
  images.reserve(g.images.size());
  for (const NilpotentElement& im : g.images) images.push_back(apply(f, im));
  return Endomorphism{f.ctx, std::move(images)};
}

/// Evaluates a word whose letters index into an arbitrary image list
/// (all sharing one context); the universal property of the relatively
/// free group makes this a homomorphism from any smaller-rank word.
inline NilpotentElement evaluate_word(
    const Word& w, const std::vector<NilpotentElement>& images) {
  if (images.empty()) throw domain_error("evaluate_word: no images");
  const ContextPtr& ctx = images[0].ctx;
  for (const NilpotentElement& e : images)
    if (e.ctx != ctx)
      throw context_mismatch("evaluate_word images span different contexts");
  std::vector<const Series*> cache(images.size(), nullptr);
  std::vector<Series> owned;
  owned.reserve(images.size());
  Series acc = Series::one(&ctx->monos());
  for (const Letter& l : w) {
    if (l.gen < 1 || l.gen > static_cast<int>(images.size()))
      throw domain_error("word letter has no image");
    if (!cache[l.gen - 1]) {
      owned.push_back(to_series(images[l.gen - 1]));
      cache[l.gen - 1] = &owned.back();
    }
    acc = acc * cache[l.gen - 1]->binom_pow(Int(l.exp));
  }
  return from_series(ctx, std::move(acc));
}

/// Dense square integer matrix, row-major.
struct IntegerMatrix {
  int n = 0;
  std::vector<Int> a;

  explicit IntegerMatrix(int n_) : n(n_), a(static_cast<std::size_t>(n_) * n_) {}

  static IntegerMatrix identity(int n) {
    IntegerMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  Int& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  const Int& at(int i, int j) const {
    return a[static_cast<std::size_t>(i) * n + j];
  }
};

/// Column i holds the weight-1 coordinates of images[i].
inline IntegerMatrix abelianization_matrix(const Endomorphism& f) {
  const int n = f.ctx->rank();
  IntegerMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (const auto& [pos, e] : f.images[i].coords)
      if (pos < n) m.at(pos, i) = e;
  return m;
}

/// Fraction-free (Bareiss) determinant.
inline Int determinant(IntegerMatrix m) {
  const int n = m.n;
  if (n == 0) return 1;
  int sign = 1;
  Int prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap_row, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

/// Integer inverse of a determinant +-1 matrix, via rational
/// Gauss-Jordan with an integrality certificate.
inline IntegerMatrix unimodular_inverse(const IntegerMatrix& m) {
  const int n = m.n;
  std::vector<std::vector<Rational>> a(
      n, std::vector<Rational>(2 * n, Rational(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = Rational(m.at(i, j));
    a[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int pr = -1;
    for (int r = col; r < n; ++r)
      if (a[r][col] != 0) {
        pr = r;
        break;
      }
    if (pr < 0) throw internal_error("unimodular_inverse: singular matrix");
    std::swap(a[pr], a[col]);
    const Rational inv = Rational(1) / a[col][col];
    for (int k = 0; k < 2 * n; ++k) a[col][k] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (int k = 0; k < 2 * n; ++k) a[r][k] -= f * a[col][k];
    }
  }
  IntegerMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Rational& x = a[i][n + j];
      if (boost::multiprecision::denominator(x) != 1)
        throw internal_error("unimodular_inverse: non-integral entry");
      out.at(i, j) = Int(boost::multiprecision::numerator(x));
    }
  return out;
}

/// An endomorphism is invertible iff its abelianization is.
inline bool is_automorphism(const Endomorphism& f) {
  const Int d = determinant(abelianization_matrix(f));
  return d == 1 || d == -1;
}

/// Endomorphism whose abelianization is the given unimodular matrix:
/// x_i maps to the ordered product prod_j x_j^{m[j][i]}.
inline Endomorphism endo_from_matrix(ContextPtr ctx, const IntegerMatrix& m) {
  std::vector<NilpotentElement> images;
  for (int i = 0; i < ctx->rank(); ++i) {
    std::vector<std::pair<int, Int>> coords;
    for (int j = 0; j < ctx->rank(); ++j)
      coords.emplace_back(j, m.at(j, i));
    Word w;
    for (const auto& [pos, e] : coords) {
      // Spell as a word so collection records the commutator cross
      // terms the ordered product actually produces.
      if (e > std::numeric_limits<std::int64_t>::max() ||
          e < std::numeric_limits<std::int64_t>::min())
        throw resource_error("matrix entry too large to spell as a word");
      if (e != 0) w.push_back(Letter{pos + 1, e.convert_to<std::int64_t>()});
    }
    images.push_back(collect(w, ctx));
  }
  return Endomorphism{std::move(ctx), std::move(images)};
}

/// Inverse of an automorphism: invert the abelianization, then peel the
/// remaining IA part one filtration layer per round.  Certified by a
/// final compose-to-identity check.
inline Endomorphism invert(const Endomorphism& f) {
  if (!is_automorphism(f))
    throw not_an_automorphism("invert: abelianization determinant is not +-1");
  const ContextPtr& ctx = f.ctx;
  const IntegerMatrix b = unimodular_inverse(abelianization_matrix(f));
  const Endomorphism f0 = endo_from_matrix(ctx, b);
  const Endomorphism g = compose(f, f0);  // IA by construction
  Endomorphism h = identity_endo(ctx);
  Endomorphism d = g;
  for (int round = 0; round <= ctx->cls(); ++round) {
    if (d == identity_endo(ctx)) break;
    std::vector<NilpotentElement> corr;
    for (int i = 0; i < ctx->rank(); ++i) {
      const NilpotentElement t =
          mul(inv(generator_element(ctx, i + 1)), d.images[i]);
      corr.push_back(mul(generator_element(ctx, i + 1), inv(t)));
    }
    h = compose(h, Endomorphism{ctx, std::move(corr)});
    d = compose(g, h);
  }
  if (d != identity_endo(ctx))
    throw internal_error("invert: IA peeling did not terminate");
  const Endomorphism result = compose(f0, h);
  if (compose(result, f) != identity_endo(ctx))
    throw internal_error("invert: certificate failed");
  return result;
}

/// Largest k (clamped to [0, c]) with f(x_i) * x_i^-1 in gamma_{k+1}
/// for every i; the identity reports c.
inline int ia_level(const Endomorphism& f) {
  if (!is_automorphism(f))
    throw not_an_automorphism("ia_level: not an automorphism");
  int level = f.ctx->cls();
  for (int i = 0; i < f.ctx->rank(); ++i) {
    const NilpotentElement t =
        mul(f.images[i], inv(generator_element(f.ctx, i + 1)));
    level = std::min(level, weight_filtration(t) - 1);
  }
  return std::max(level, 0);
}

/// The inner automorphism z -> a z a^-1.
inline Endomorphism inner(const NilpotentElement& a) {
  std::vector<NilpotentElement> images;
  for (int i = 1; i <= a.ctx->rank(); ++i)
    images.push_back(conjugate(generator_element(a.ctx, i), a));
  return Endomorphism{a.ctx, std::move(images)};
}

namespace detail {

/// Re-reads an element's coordinates in another context of the same
/// rank; every kept coordinate's weight must exist in the target, and
/// strata of shared weights coincide, so position translation is pure
/// offset arithmetic.
inline NilpotentElement translate_element(const NilpotentElement& a,
                                          const ContextPtr& target) {
  std::vector<std::pair<int, Int>> coords;
  for (const auto& [pos, e] : a.coords) {
    const int w = a.ctx->basis().weight_of(pos);
    if (w > target->cls()) continue;
    const int local = pos - a.ctx->basis().stratum_offset(w);
    coords.emplace_back(target->basis().stratum_offset(w) + local, e);
  }
  return NilpotentElement{target, std::move(coords)};
}

}  // namespace detail

/// Truncates an endomorphism of class c to class k <= c.
inline Endomorphism project(const Endomorphism& f, int k) {
  if (k < 1 || k > f.ctx->cls())
    throw domain_error("project: class out of range");
  ContextPtr target = GroupContext::get(f.ctx->rank(), k);
  std::vector<NilpotentElement> images;
  for (const NilpotentElement& im : f.images)
    images.push_back(detail::translate_element(im, target));
  return Endomorphism{std::move(target), std::move(images)};
}

/// Re-reads an automorphism of class k as an automorphism of class
/// c >= k with the same image coordinates; project(lift(g, c), k) == g.
inline Endomorphism lift(const Endomorphism& g, int c) {
  if (!is_automorphism(g))
    throw not_an_automorphism("lift: not an automorphism");
  if (c < g.ctx->cls()) throw domain_error("lift: class must not shrink");
  ContextPtr target = GroupContext::get(g.ctx->rank(), c);
  std::vector<NilpotentElement> images;
  for (const NilpotentElement& im : g.images)
    images.push_back(detail::translate_element(im, target));
  return Endomorphism{std::move(target), std::move(images)};
}

/// True iff a is part of some basis: its weight-1 coordinates have gcd 1.
inline bool is_primitive(const NilpotentElement& a) {
  Int g = 0;
  for (const auto& [pos, e] : a.coords)
    if (pos < a.ctx->rank()) g = boost::multiprecision::gcd(g, e);
  return g == 1;
}

/// Produces an automorphism sending x_1 to the given primitive element:
/// integer row reduction completes the abelianized vector to a
/// unimodular matrix, and a single IA correction fixes the tail.
inline Endomorphism primitive_witness(const NilpotentElement& a) {
  if (!is_primitive(a))
    throw domain_error("primitive_witness: element is not primitive");
  const ContextPtr& ctx = a.ctx;
  const int n = ctx->rank();
  std::vector<Int> v(n, 0);
  for (const auto& [pos, e] : a.coords)
    if (pos < n) v[pos] = e;

  // Row-reduce v to a signed unit vector, tracking the operations in u
  // so that u * v_original stays equal to the working v.
  IntegerMatrix u = IntegerMatrix::identity(n);
  auto count_nonzero = [&] {
    int k = 0;
    for (const Int& x : v) k += (x != 0);
    return k;
  };
  while (count_nonzero() > 1) {
    int j = -1;
    for (int i = 0; i < n; ++i) {
      if (v[i] == 0) continue;
      if (j < 0 || abs(v[i]) < abs(v[j])) j = i;
    }
    for (int i = 0; i < n; ++i) {
      if (i == j || v[i] == 0) continue;
      const Int q = v[i] / v[j];
      if (q == 0) continue;
      v[i] -= q * v[j];
      for (int k = 0; k < n; ++k) u.at(i, k) -= q * u.at(j, k);
    }
  }
  int p = 0;
  while (v[p] == 0) ++p;
  if (p != 0) {
    std::swap(v[0], v[p]);
    for (int k = 0; k < n; ++k) std::swap(u.at(0, k), u.at(p, k));
  }
  if (v[0] < 0) {
    v[0] = -v[0];
    for (int k = 0; k < n; ++k) u.at(0, k) = -u.at(0, k);
  }
  if (v[0] != 1)
    throw internal_error("primitive_witness: reduction missed the gcd");

  // u * v_orig = e_1, so column 0 of u^-1 is v_orig: the matrix
  // automorphism hits a mod gamma_2, and the IA correction below makes
  // the first image exactly a.
  const Endomorphism f0 = endo_from_matrix(ctx, unimodular_inverse(u));
  std::vector<NilpotentElement> corr;
  corr.push_back(apply(invert(f0), a));
  for (int i = 2; i <= n; ++i) corr.push_back(generator_element(ctx, i));
  const Endomorphism witness = compose(f0, Endomorphism{ctx, std::move(corr)});
  if (apply(witness, generator_element(ctx, 1)) != a)
    throw internal_error("primitive_witness: certificate failed");
  return witness;
}

/// Parses semicolon-separated "xi -> word" clauses; unmentioned
/// generators map to themselves.
inline Endomorphism parse_endo(const std::string& text, ContextPtr ctx,
                               std::int64_t max_word_len = kDefaultMaxWordLen) {
  Endomorphism f = identity_endo(ctx);
  std::vector<bool> seen(ctx->rank(), false);
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string::npos) end = text.size();
    const std::string clause = text.substr(start, end - start);
    if (clause.find_first_not_of(" \t\r\n") != std::string::npos) {
      const std::size_t arrow = clause.find("->");
      if (arrow == std::string::npos)
        throw parse_error("clause is missing '->'", start);
      std::size_t lhs_begin = clause.find_first_not_of(" \t\r\n");
      std::size_t lhs_end = clause.find_last_not_of(" \t\r\n", arrow - 1);
      const std::string lhs = clause.substr(lhs_begin, lhs_end - lhs_begin + 1);
      if (lhs.size() < 2 || lhs[0] != 'x' ||
          lhs.find_first_not_of("0123456789", 1) != std::string::npos)
        throw parse_error("left side must name a generator", start + lhs_begin);
      const int idx = std::atoi(lhs.c_str() + 1);
      if (idx < 1 || idx > ctx->rank())
        throw parse_error("generator index out of range",
                          start + lhs_begin);
      if (seen[idx - 1])
        throw parse_error("generator mapped twice", start + lhs_begin);
      seen[idx - 1] = true;
      const std::string rhs = clause.substr(arrow + 2);
      Word w;
      try {
        w = parse_word(rhs, ctx->rank());
      } catch (const parse_error& e) {
        throw parse_error(e.what(), start + arrow + 2 + e.position());
      }
      f.images[idx - 1] = collect(w, ctx, max_word_len);
    }
    start = end + 1;
  }
  return f;
}

inline std::string format_endo(const Endomorphism& f) {
  std::string out;
  for (int i = 0; i < f.ctx->rank(); ++i) {
    if (i) out += "; ";
    out += "x" + std::to_string(i + 1) + " -> " + format_element(f.images[i]);
  }
  return out;
}

inline Json endo_to_json(const Endomorphism& f) {
  Json images = Json::array();
  for (const NilpotentElement& im : f.images)
    images.push_back(element_to_json(im));
  Json j;
  j["rank"] = f.ctx->rank();
  j["class"] = f.ctx->cls();
  j["images"] = std::move(images);
  return j;
}

inline Endomorphism endo_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rank") || !j.contains("class") ||
      !j.contains("images"))
    throw domain_error("endomorphism JSON needs rank, class and images");
  ContextPtr ctx =
      GroupContext::get(j.at("rank").get<int>(), j.at("class").get<int>());
  std::vector<NilpotentElement> images;
  for (const Json& e : j.at("images")) {
    NilpotentElement im = element_from_json(e);
    if (im.ctx != ctx)
      throw domain_error("image context differs from endomorphism context");
    images.push_back(std::move(im));
  }
  return endo_from_images(std::move(ctx), std::move(images));
}

}  // namespace nilpotra
