#include "confhom/loop_homology.hpp"

#include "confhom/errors.hpp"

#include <limits>
#include <map>
#include <tuple>

namespace confhom {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

void require_connected(const GradedBetti& y, int j, const char* op) {
  if (j >= 1 && !y.empty() && y.min_degree() < 1) {
    throw InputError(std::string(op) + ": label classes must lie in degree >= 1 for j >= 1");
  }
}

// Frontier state while applying operation units.
struct OpState {
  int degree;
  int weight;
  int max_index;  // largest lower index the next unit may use

  auto operator<=>(const OpState&) const = default;
};

// Degree/weight guard for products that can overflow int on absurd inputs.
bool within(long value, int cap) { return value <= cap; }

}  // namespace

FieldChar FieldChar::odd(int p) {
  if (p <= 2 || !is_prime(p)) {
    throw InputError("field characteristic must be an odd prime, got " + std::to_string(p));
  }
  return FieldChar(p);
}

std::string FieldChar::name() const {
  if (p_ == 0) return "Q";
  if (p_ == 2) return "F2";
  return "Fp:" + std::to_string(p_);
}

GradedBetti suspend_betti(const GradedBetti& y, int q) {
  if (q < 0) throw InputError("suspend_betti: negative suspension");
  GradedBetti out;
  for (const auto& [degree, count] : y.by_degree()) out.add(degree + q, count);
  return out;
}

AtomTable atom_census(const GradedBetti& y, int j, const FieldChar& field, Caps caps) {
  if (j < 2) throw InputError("atom_census: requires j >= 2");
  require_connected(y, j, "atom_census");

  // A word of length l at shifted degree d' has actual degree d' - (j-1).
  const int shift = j - 1;
  const Caps shifted_caps{caps.max_degree + shift, caps.max_weight};
  DegreeWeightTable letters(shifted_caps);
  for (const auto& [degree, count] : y.by_degree()) {
    if (degree + shift <= shifted_caps.max_degree) letters.add(degree + shift, 1, count);
  }

  const DegreeWeightTable shifted = lie_atom_counts(letters, field.bracket_sign(), shifted_caps);

  AtomTable atoms(caps);
  for (const auto& [key, count] : shifted.entries()) {
    const auto [degree, length] = key;
    const int actual = degree - shift;
    if (actual < 0) throw IntegrityError("atom_census: atom below degree 0");
    if (actual <= caps.max_degree) atoms.add(actual, length, count);
  }
  return atoms;
}

GeneratorCensus generator_census(const AtomTable& atoms, int j, const FieldChar& field,
                                 Caps caps) {
  if (j < 2) throw InputError("generator_census: requires j >= 2");
  GeneratorCensus census(caps);

  std::map<OpState, Integer> frontier;
  for (const auto& [key, count] : atoms.entries()) {
    const auto [degree, length] = key;
    if (degree > caps.max_degree || length > caps.max_weight) continue;
    census.add(degree, length, count);
    if (!field.is_zero()) frontier[{degree, length, j - 1}] += count;
  }
  if (field.is_zero()) return census;

  const long p = field.is_two() ? 2 : field.characteristic();
  // Each unit multiplies the weight by p and raises the degree, so the
  // frontier empties after finitely many rounds.
  while (!frontier.empty()) {
    std::map<OpState, Integer> next;
    for (const auto& [state, count] : frontier) {
      const long weight = static_cast<long>(state.weight) * p;
      if (!within(weight, caps.max_weight)) continue;
      for (int b = 1; b <= state.max_index; ++b) {
        const long degree = p * state.degree + static_cast<long>(b) * (p - 1);
        if (field.is_two()) {
          if (!within(degree, caps.max_degree)) break;
          next[{static_cast<int>(degree), static_cast<int>(weight), b}] += count;
          continue;
        }
        if ((b - state.degree) % 2 != 0) continue;
        // epsilon = 0: plain operation; epsilon = 1: followed by a Bockstein.
        if (within(degree, caps.max_degree)) {
          next[{static_cast<int>(degree), static_cast<int>(weight), b}] += count;
        }
        if (within(degree - 1, caps.max_degree)) {
          next[{static_cast<int>(degree - 1), static_cast<int>(weight), b - 1}] += count;
        }
      }
    }
    for (const auto& [state, count] : next) census.add(state.degree, state.weight, count);
    frontier = std::move(next);
  }
  return census;
}

FactorKind generator_kind(int degree, const FieldChar& field) {
  if (!field.is_two() && degree % 2 != 0) return FactorKind::exterior;
  return FactorKind::polynomial;
}

BiSeries factor_series(const GradedBetti& y, int j, const FieldChar& field, Caps caps) {
  if (j < 0) throw InputError("factor_series: negative loop order");
  require_connected(y, j, "factor_series");

  std::vector<SeriesEntry> classes;
  for (const auto& [degree, count] : y.by_degree()) classes.push_back({degree, 1, count});

  if (j == 0) {
    classes.push_back({0, 0, Integer(1)});
    return BiSeries::from_entries(caps, classes);
  }
  if (j == 1) return inverse_one_minus(BiSeries::from_entries(caps, classes));

  const GeneratorCensus census =
      generator_census(atom_census(y, j, field, caps), j, field, caps);
  BiSeries acc = BiSeries::unit(caps);
  for (const auto& [key, count] : census.entries()) {
    const auto [degree, weight] = key;
    acc = power_factor(acc, degree, weight, count, generator_kind(degree, field));
  }
  return acc;
}

}  // namespace confhom
