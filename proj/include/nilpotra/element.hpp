/// @file element.hpp
/// @brief Normal forms in the free nilpotent group of a context: an
///        element is the ordered product of basic-commutator powers
///        b_1^{e_1} ... b_t^{e_t} in basis order.
///
/// Arithmetic runs through the Magnus embedding: map a word into the
/// truncated series ring via x_i -> 1 + X_i, then peel the series back
/// into coordinates stratum by stratum.  Peeling degree m reads the
/// degree-m slice (which is exactly the Lie class of the residual
/// element mod gamma_{m+1}), solves it to Hall coordinates, and divides
/// the corresponding stratum product back out.  A final residual of 1
/// certifies the round trip; anything else aborts loudly.

#pragma once

#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "common.hpp"
#include "context.hpp"
#include "word.hpp"

namespace nilpotra {

using Json = nlohmann::ordered_json;

/// Default cap on the total letter count of words fed to collection.
inline constexpr std::int64_t kDefaultMaxWordLen = 1000000;

/// A group element in normal form: sparse, sorted (position, exponent)
/// coordinates over the context's Hall basis.
struct NilpotentElement {
  ContextPtr ctx;
  std::vector<std::pair<int, Int>> coords;  // sorted by position, exps != 0

  bool is_identity() const { return coords.empty(); }

  bool operator==(const NilpotentElement& other) const {
    return ctx == other.ctx && coords == other.coords;
  }
  bool operator!=(const NilpotentElement& other) const {
    return !(*this == other);
  }
};

inline void check_same_context(const NilpotentElement& a,
                               const NilpotentElement& b) {
  if (a.ctx != b.ctx)
    throw context_mismatch("operands live in different group contexts");
}

inline NilpotentElement identity_element(ContextPtr ctx) {
  return NilpotentElement{std::move(ctx), {}};
}

/// The basis element at a global position, as a group element.
inline NilpotentElement basis_element(ContextPtr ctx, int position) {
  if (position < 0 || position >= ctx->basis().size())
    throw domain_error("basis position out of range");
  return NilpotentElement{std::move(ctx), {{position, Int(1)}}};
}

/// The generator x_i (1-based) as a group element.
inline NilpotentElement generator_element(ContextPtr ctx, int i) {
  if (i < 1 || i > ctx->rank())
    throw domain_error("generator index out of range");
  return NilpotentElement{std::move(ctx), {{i - 1, Int(1)}}};
}

/// Builds an element from unnormalised coordinates: validates range,
/// sorts, merges duplicates, drops zeros.
inline NilpotentElement element_from_coords(
    ContextPtr ctx, std::vector<std::pair<int, Int>> coords) {
  for (const auto& [pos, e] : coords)
    if (pos < 0 || pos >= ctx->basis().size())
      throw domain_error("coordinate position out of range");
  std::sort(coords.begin(), coords.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<int, Int>> merged;
  for (auto& [pos, e] : coords) {
    if (!merged.empty() && merged.back().first == pos)
      merged.back().second += e;
    else
      merged.emplace_back(pos, std::move(e));
  }
  std::erase_if(merged, [](const auto& p) { return p.second == 0; });
  return NilpotentElement{std::move(ctx), std::move(merged)};
}

/// Magnus series of an element: the ordered product of the basis
/// series raised to the coordinate exponents.
inline Series to_series(const NilpotentElement& a) {
  Series s = Series::one(&a.ctx->monos());
  for (const auto& [pos, e] : a.coords)
    s = s * a.ctx->basis_series(pos).binom_pow(e);
  return s;
}

/// Recovers the normal form of a group series by stratum peeling.  The
/// series must be the image of a group element (constant term 1 and, at
/// the end of peeling, residual exactly 1); anything else is reported
/// as an internal error because every caller feeds group data.
inline NilpotentElement from_series(ContextPtr ctx, Series s) {
  if (s.at(0) != 1) throw internal_error("from_series: constant term not 1");
  const MonoTable& t = ctx->monos();
  std::vector<std::pair<int, Int>> coords;
  for (int m = 1; m <= ctx->cls(); ++m) {
    LieComponent component;
    for (std::size_t r = 0; r < t.npow[m]; ++r) {
      const Int& v = s.coeff(m, r);
      if (v != 0) component.emplace(r, v);
    }
    if (component.empty()) continue;
    const std::size_t first = coords.size();
    ctx->solve_stratum(m, component, coords);
    Series stratum_product = Series::one(&t);
    for (std::size_t i = first; i < coords.size(); ++i)
      stratum_product = stratum_product *
                        ctx->basis_series(coords[i].first)
                            .binom_pow(coords[i].second);
    s = stratum_product.inverse() * s;
  }
  if (!s.is_one())
    throw internal_error("from_series: nonzero residual after peeling");
  return NilpotentElement{std::move(ctx), std::move(coords)};
}

/// Collects a free word into its normal form.  The cap bounds the total
/// letter count (sum of |exponent|) of the input word.
inline NilpotentElement collect(const Word& w, ContextPtr ctx,
                                std::int64_t max_word_len = kDefaultMaxWordLen) {
  if (word_length(w) > max_word_len)
    throw resource_error("word length exceeds the configured cap");
  const MonoTable& t = ctx->monos();
  Series s = Series::one(&t);
  for (const Letter& l : w) {
    if (l.gen < 1 || l.gen > ctx->rank())
      throw domain_error("word uses a generator outside the context rank");
    s = s * Series::generator(&t, l.gen).binom_pow(Int(l.exp));
  }
  return from_series(std::move(ctx), std::move(s));
}

inline NilpotentElement mul(const NilpotentElement& a,
                            const NilpotentElement& b) {
  check_same_context(a, b);
  return from_series(a.ctx, to_series(a) * to_series(b));
}

inline NilpotentElement inv(const NilpotentElement& a) {
  return from_series(a.ctx, to_series(a).inverse());
}

inline NilpotentElement power(const NilpotentElement& a, const Int& k) {
  return from_series(a.ctx, to_series(a).binom_pow(k));
}

/// Left-normed commutator [a_1, ..., a_s] = [[a_1, ..., a_{s-1}], a_s];
/// needs at least two arguments.
inline NilpotentElement commutator(
    const std::vector<NilpotentElement>& args) {
  if (args.size() < 2)
    throw domain_error("commutator needs at least two arguments");
  for (const NilpotentElement& a : args) check_same_context(args[0], a);
  Series acc = to_series(args[0]);
  for (std::size_t i = 1; i < args.size(); ++i) {
    Series t = to_series(args[i]);
    acc = acc * t * acc.inverse() * t.inverse();
  }
  return from_series(args[0].ctx, std::move(acc));
}

inline NilpotentElement commutator(const NilpotentElement& a,
                                   const NilpotentElement& b) {
  return commutator(std::vector<NilpotentElement>{a, b});
}

inline NilpotentElement conjugate(const NilpotentElement& a,
                                  const NilpotentElement& z) {
  check_same_context(a, z);
  Series sz = to_series(z);
  return from_series(a.ctx, sz * to_series(a) * sz.inverse());
}

/// Largest k with a in gamma_k; identity reports c + 1.
inline int weight_filtration(const NilpotentElement& a) {
  if (a.coords.empty()) return a.ctx->cls() + 1;
  return a.ctx->basis().weight_of(a.coords.front().first);
}

/// True iff a commutes with every generator.
inline bool is_central(const NilpotentElement& a) {
  for (int i = 1; i <= a.ctx->rank(); ++i)
    if (!commutator(a, generator_element(a.ctx, i)).is_identity())
      return false;
  return true;
}

/// Renders the normal form in word grammar, e.g. "x1^2 [x2,x1]^-1";
/// the identity renders as the empty string.
inline std::string format_element(const NilpotentElement& a) {
  std::string out;
  for (const auto& [pos, e] : a.coords) {
    if (!out.empty()) out += ' ';
    out += format_tree(a.ctx->basis().at(pos));
    if (e != 1) out += "^" + e.str();
  }
  return out;
}

/// Normal-form JSON: coordinates in basis order, exponents as decimal
/// strings so arbitrarily large values survive the trip.
inline Json element_to_json(const NilpotentElement& a) {
  Json coords = Json::array();
  for (const auto& [pos, e] : a.coords) {
    Json entry;
    entry["commutator"] = format_tree(a.ctx->basis().at(pos));
    entry["weight"] = a.ctx->basis().weight_of(pos);
    entry["exp"] = e.str();
    coords.push_back(std::move(entry));
  }
  Json j;
  j["rank"] = a.ctx->rank();
  j["class"] = a.ctx->cls();
  j["coords"] = std::move(coords);
  return j;
}

inline Int int_from_json(const Json& v) {
  if (v.is_string()) {
    const std::string& s = v.get_ref<const std::string&>();
    try {
      return Int(s);
    } catch (const std::exception&) {
      throw domain_error("malformed integer string: " + s);
    }
  }
  if (v.is_number_integer()) return Int(v.get<std::int64_t>());
  throw domain_error("expected an integer or decimal string");
}

inline NilpotentElement element_from_json(const Json& j,
                                          const Int& max_witt = Int(1000000)) {
  if (!j.is_object() || !j.contains("rank") || !j.contains("class") ||
      !j.contains("coords"))
    throw domain_error("normal-form JSON needs rank, class and coords");
  ContextPtr ctx =
      GroupContext::get(j.at("rank").get<int>(), j.at("class").get<int>(),
                        max_witt);
  std::vector<std::pair<int, Int>> coords;
  for (const Json& entry : j.at("coords")) {
    const std::string text = entry.at("commutator").get<std::string>();
    const int pos = ctx->basis().find_by_text(text);
    if (pos < 0)
      throw domain_error("unknown basis commutator: " + text);
    if (entry.contains("weight") &&
        entry.at("weight").get<int>() != ctx->basis().weight_of(pos))
      throw domain_error("weight does not match commutator: " + text);
    coords.emplace_back(pos, int_from_json(entry.at("exp")));
  }
  return element_from_coords(std::move(ctx), std::move(coords));
}

/// The bracketed word spelling a basic commutator, e.g. [x2,x1] ->
/// x2 x1 x2^-1 x1^-1.
inline Word tree_word(const CommutatorTree* t) {
  if (t->is_leaf()) return Word{{t->gen, 1}};
  return commutator_word(tree_word(t->left), tree_word(t->right));
}

/// Spells the normal form as a plain word (for feeding back into free
/// reduction or external homomorphisms).  The cap bounds the output
/// length.
inline Word nf_to_word(const NilpotentElement& a,
                       std::int64_t max_word_len = kDefaultMaxWordLen) {
  Word out;
  for (const auto& [pos, e] : a.coords) {
    if (e > max_word_len || e < -max_word_len)
      throw resource_error("normal-form exponent too large to spell out");
    const Word base = tree_word(a.ctx->basis().at(pos));
    out = concat(out, word_pow(base, e.convert_to<std::int64_t>()));
    if (word_length(out) > max_word_len)
      throw resource_error("spelled-out word exceeds the configured cap");
  }
  return free_reduce(out);
}

}  // namespace nilpotra
