#include "confhom/witt.hpp"

#include <string>

namespace confhom {

namespace {

FactorKind kind_for(int degree, LieSign sign) {
  if (sign == LieSign::super && degree % 2 != 0) return FactorKind::exterior;
  return FactorKind::polynomial;
}

}  // namespace

BiSeries pbw_product(const DegreeWeightTable& atoms, LieSign sign, Caps caps) {
  BiSeries acc = BiSeries::unit(caps);
  for (const auto& [key, count] : atoms.entries()) {
    const auto [degree, length] = key;
    if (degree > caps.max_degree || length > caps.max_weight) continue;
    acc = power_factor(acc, degree, length, count, kind_for(degree, sign));
  }
  return acc;
}

DegreeWeightTable lie_atom_counts(const DegreeWeightTable& gens, LieSign sign, Caps caps) {
  std::vector<SeriesEntry> letters;
  for (const auto& [key, count] : gens.entries()) {
    const auto [degree, length] = key;
    if (length != 1) {
      throw InputError("lie_atom_counts: generator at length " + std::to_string(length));
    }
    if (degree < 1) {
      throw InputError("lie_atom_counts: generator in degree " + std::to_string(degree));
    }
    letters.push_back({degree, 1, count});
  }

  const BiSeries tensor = inverse_one_minus(BiSeries::from_entries(caps, letters));

  // The factors of length l contribute exactly sum_d L(d,l) t^d u^l to the
  // length-l slice, on top of whatever the shorter factors already produce.
  DegreeWeightTable atoms(caps);
  BiSeries partial = BiSeries::unit(caps);
  for (int length = 1; length <= caps.max_weight; ++length) {
    for (int degree = 0; degree <= caps.max_degree; ++degree) {
      const Integer count = tensor.raw(degree, length) - partial.raw(degree, length);
      if (count < 0) {
        throw IntegrityError("lie_atom_counts: negative basic-product count " +
                             count.get_str() + " at degree " + std::to_string(degree) +
                             ", length " + std::to_string(length));
      }
      if (count == 0) continue;
      atoms.add(degree, length, count);
      partial = power_factor(partial, degree, length, count, kind_for(degree, sign));
    }
  }

  if (partial != tensor) {
    throw IntegrityError("lie_atom_counts: PBW reconstruction does not reproduce 1/(1-f)");
  }
  return atoms;
}

}  // namespace confhom
