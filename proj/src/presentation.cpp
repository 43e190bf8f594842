#include "grhom/presentation.hpp"

namespace grhom {

Presentation Presentation::zero(PrimeField field, std::size_t d) {
  return Presentation(GradedMatrix::zero(field, d, {}, {}), true);
}

Presentation Presentation::free(PrimeField field, std::size_t d, std::vector<Degree> generators) {
  return Presentation(GradedMatrix::zero(field, d, std::move(generators), {}), true);
}

}  // namespace grhom
