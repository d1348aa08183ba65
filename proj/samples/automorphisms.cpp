/// Walkthrough: endomorphisms, automorphism checks, inversion, the IA
/// filtration, and primitive elements.

#include <nilpotra/nilpotra.hpp>

#include <iostream>

using namespace nilpotra;

int main() {
  ContextPtr ctx = GroupContext::get(2, 3);

  // Maps are given by generator images.
  const Endomorphism f = parse_endo("x1 -> x1 x2^2; x2 -> x2 [x2,x1]", ctx);
  std::cout << "f = " << format_endo(f) << "\n";
  std::cout << "abelianization determinant = "
            << determinant(abelianization_matrix(f))
            << ", automorphism: " << (is_automorphism(f) ? "yes" : "no")
            << "\n";

  // Inversion is exact and certified internally by composing back.
  const Endomorphism g = invert(f);
  std::cout << "f^-1 = " << format_endo(g) << "\n";
  std::cout << "f . f^-1 = " << format_endo(compose(f, g)) << "\n";

  // The IA filtration measures how deep a map sits below the identity:
  // level k means every generator moves by something of weight > k.
  const Endomorphism tau = inner(collect(parse_word("x1", 2), ctx));
  std::cout << "\nconjugation by x1 has IA level " << ia_level(tau) << "\n";
  const Endomorphism deep = parse_endo("x1 -> x1 [x2,x1,x1]", ctx);
  std::cout << "x1 -> x1 [x2,x1,x1] has IA level " << ia_level(deep) << "\n";

  // Projection to a smaller class and lifting back.
  const Endomorphism fbar = project(f, 2);
  std::cout << "\nf mod weight 3: " << format_endo(fbar) << "\n";
  std::cout << "lift agrees with f mod weight 3: "
            << (project(lift(fbar, 3), 2) == fbar ? "yes" : "no") << "\n";

  // Primitive elements extend to a basis; the witness automorphism
  // sends x1 to the element.
  const NilpotentElement a = collect(parse_word("x1^3 x2^2 [x2,x1]", 2), ctx);
  std::cout << "\n" << format_element(a) << " primitive: "
            << (is_primitive(a) ? "yes" : "no") << "\n";
  const Endomorphism sigma = primitive_witness(a);
  std::cout << "witness sends x1 to " << format_element(apply(sigma, generator_element(ctx, 1)))
            << "\n";
  return 0;
}
