#include "conebound/module.hpp"

namespace conebound {

template <class F>
void GradedPresentation<F>::validate() const {
  if (relations.size() != relation_degrees.size())
    throw MathError("presentation: relation count and degree count differ");
  for (std::size_t j = 0; j < relations.size(); ++j) {
    if (relations[j].size() != generator_degrees.size())
      throw MathError("presentation: relation has the wrong rank");
    for (std::size_t i = 0; i < generator_degrees.size(); ++i) {
      const auto& e = relations[j][i];
      if (e.is_zero()) continue;
      ring->check(e);
      if (!ring->is_homogeneous(e) || ring->degree(e) != relation_degrees[j] - generator_degrees[i])
        throw MathError("presentation: entry (" + std::to_string(i) + ", " + std::to_string(j) +
                        ") is not homogeneous of the expected degree");
    }
  }
}

template <class F>
std::string GradedPresentation<F>::to_string() const {
  std::string out = "gens(";
  for (std::size_t i = 0; i < generator_degrees.size(); ++i)
    out += (i ? "," : "") + std::to_string(generator_degrees[i]);
  out += ") rels(";
  FreeModule<F> t = target();
  for (std::size_t j = 0; j < relations.size(); ++j)
    out += (j ? "; " : "") + std::to_string(relation_degrees[j]) + ":" + t.to_string(relations[j]);
  return out + ")";
}

template <class F>
GradedPresentation<F> cyclic_presentation(RingPtr<F> ring, const std::vector<Polynomial<F>>& gens) {
  GradedPresentation<F> p;
  p.ring = ring;
  p.generator_degrees = {0};
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    p.relation_degrees.push_back(ring->degree(g));
    p.relations.push_back(Vector<F>{g});
  }
  return p;
}

template <class F>
GradedPresentation<F> free_presentation(RingPtr<F> ring, std::vector<int> degrees) {
  GradedPresentation<F> p;
  p.ring = std::move(ring);
  p.generator_degrees = std::move(degrees);
  return p;
}

#define CONEBOUND_INSTANTIATE_MODULE(F)                                                        \
  template struct GradedPresentation<F>;                                                       \
  template GradedPresentation<F> cyclic_presentation<F>(RingPtr<F>,                            \
                                                        const std::vector<Polynomial<F>>&);    \
  template GradedPresentation<F> free_presentation<F>(RingPtr<F>, std::vector<int>);

CONEBOUND_INSTANTIATE_MODULE(PrimeField)
CONEBOUND_INSTANTIATE_MODULE(RationalField)

}  // namespace conebound
