/// Walkthrough: parsing words, collecting them into normal form, and
/// working with the resulting coordinates.

#include <nilpotra/nilpotra.hpp>

#include <iostream>

using namespace nilpotra;

int main() {
  // The free 2-generator group, nilpotent of class 3.
  ContextPtr ctx = GroupContext::get(2, 3);
  std::cout << "basis of F(2,3):\n";
  for (int pos = 0; pos < ctx->basis().size(); ++pos)
    std::cout << "  weight " << ctx->basis().weight_of(pos) << "  "
              << format_tree(ctx->basis().at(pos)) << "\n";

  // Collection rewrites an arbitrary word as an ordered product of
  // basic commutators.
  const Word w = parse_word("x2 x1 x2 x1^-1", 2);
  const NilpotentElement a = collect(w, ctx);
  std::cout << "\ncollect(x2 x1 x2 x1^-1) = " << format_element(a) << "\n";

  // Collection is a homomorphism: products and inverses can be computed
  // either on words or on normal forms.
  const Word u = parse_word("[x2,x1] x1", 2);
  const NilpotentElement b = collect(u, ctx);
  std::cout << "collect(w u)            = " << format_element(collect(concat(w, u), ctx))
            << "\nmul(collect w, collect u) = " << format_element(mul(a, b)) << "\n";

  // Brackets in the grammar mean group commutators; left-normed
  // shorthand [x,y,z] nests as [[x,y],z].
  const NilpotentElement c = collect(parse_word("[x2,x1,x1]", 2), ctx);
  std::cout << "\n[x2,x1,x1] collects to  " << format_element(c) << "\n";
  std::cout << "it is central: " << (is_central(c) ? "yes" : "no")
            << " (weight filtration " << weight_filtration(c) << ")\n";

  // Exponents are arbitrary-precision; JSON serializes them as decimal
  // strings.
  const NilpotentElement big = power(a, Int("123456789123456789"));
  std::cout << "\na^123456789123456789 as JSON:\n"
            << element_to_json(big).dump(2) << "\n";
  return 0;
}
