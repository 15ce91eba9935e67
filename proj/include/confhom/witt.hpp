#pragma once

// Witt/PBW counting of basic products in free graded Lie algebras.

#include "confhom/count_table.hpp"
#include "confhom/series.hpp"

namespace confhom {

/// Sign convention of the free Lie algebra being counted.
///  - super: odd-degree elements have a nonvanishing self-bracket; the
///    enveloping algebra is polynomial on even and exterior on odd classes.
///    Models characteristic 0 and odd characteristic.
///  - plain: no signs, self-brackets vanish; every class is polynomial.
///    Models characteristic 2.
enum class LieSign { super, plain };

/// Counts L(d, l) of basic products of bracket length l in degree d, for
/// the free Lie algebra on `gens` (entries at length 1 only, degrees >= 1).
/// Solved length by length against 1/(1 - f), f = sum gens(d) t^d u.
DegreeWeightTable lie_atom_counts(const DegreeWeightTable& gens, LieSign sign, Caps caps);

/// The PBW product prod (1 -+ t^d u^l)^{-+L(d,l)} for the given counts.
BiSeries pbw_product(const DegreeWeightTable& atoms, LieSign sign, Caps caps);

}  // namespace confhom
