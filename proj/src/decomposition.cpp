#include "confhom/decomposition.hpp"

#include "confhom/assembler.hpp"
#include "confhom/errors.hpp"

#include <numeric>

namespace confhom {

namespace {

int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

Integer factorial(int n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

// Number of Lyndon words with the given letter multiplicities.
Integer witt_count(const std::vector<int>& a, int length) {
  int g = 0;
  for (int x : a) g = std::gcd(g, x);
  Integer sum = 0;
  for (int div = 1; div <= g; ++div) {
    if (g % div != 0) continue;
    const int mu = mobius(div);
    if (mu == 0) continue;
    Integer term = factorial(length / div);
    for (int x : a) term /= factorial(x / div);
    sum += mu * term;
  }
  return sum / length;
}

void compositions(int letters, int length, std::vector<int>& current, int slot,
                  std::vector<std::vector<int>>& out) {
  if (slot == letters - 1) {
    current[static_cast<std::size_t>(slot)] = length;
    out.push_back(current);
    return;
  }
  for (int a = length; a >= 0; --a) {
    current[static_cast<std::size_t>(slot)] = a;
    compositions(letters, length - a, current, slot + 1, out);
  }
}

using Poly = std::vector<Integer>;

Poly poly_multiply(const Poly& a, const Poly& b) {
  Poly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < out.size(); ++j)
      if (b[j] != 0) out[i + j] += a[i] * b[j];
  }
  return out;
}

Poly poly_power(Poly base, Integer e, std::size_t size) {
  Poly result(size);
  result[0] = 1;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = poly_multiply(result, base);
    e >>= 1;
    if (e > 0) base = poly_multiply(base, base);
  }
  return result;
}

}  // namespace

std::vector<BasicWord> basic_words(int letters, int max_length) {
  if (letters < 1) throw InputError("basic_words: need at least one letter");
  std::vector<BasicWord> out;
  for (int length = 1; length <= max_length; ++length) {
    std::vector<std::vector<int>> vectors;
    std::vector<int> current(static_cast<std::size_t>(letters));
    compositions(letters, length, current, 0, vectors);
    for (auto& a : vectors) {
      Integer count = witt_count(a, length);
      if (count != 0) out.push_back({std::move(a), length, std::move(count)});
    }
  }
  return out;
}

GradedBetti smash_betti(const std::vector<GradedBetti>& spaces,
                        const std::vector<int>& multiplicity) {
  if (spaces.size() != multiplicity.size()) {
    throw InputError("smash_betti: multiplicity vector does not match the number of spaces");
  }
  GradedBetti acc{{0, 1}};  // S^0, the unit for smash
  for (std::size_t i = 0; i < spaces.size(); ++i) {
    for (int copy = 0; copy < multiplicity[i]; ++copy) {
      GradedBetti next;
      for (const auto& [d1, c1] : acc.by_degree())
        for (const auto& [d2, c2] : spaces[i].by_degree()) next.add(d1 + d2, c1 * c2);
      acc = std::move(next);
    }
  }
  return acc;
}

HiltonMilnorReport hilton_milnor_check(const HiltonMilnorSpec& spec) {
  if (spec.field.is_odd()) {
    throw InputError("hilton_milnor_check: odd characteristic is not supported");
  }
  if (spec.field.is_zero() && !spec.orientable) {
    throw InputError(
        "hilton_milnor_check: characteristic 0 needs the orientable flag for the diagonal "
        "Thom shift");
  }
  if (spec.x_list.empty()) throw InputError("hilton_milnor_check: no label spaces");
  if (spec.m_dim < 0 || spec.max_degree < 0) throw InputError("hilton_milnor_check: bad sizes");

  int min_degree = -1;
  GradedBetti wedge;
  for (const auto& x : spec.x_list) {
    if (x.empty()) continue;
    if (x.min_degree() < 1) {
      throw InputError("hilton_milnor_check: every label space must be connected");
    }
    if (min_degree < 0 || x.min_degree() < min_degree) min_degree = x.min_degree();
    for (const auto& [d, c] : x.by_degree()) wedge.add(d, c);
  }

  const int D = spec.max_degree;
  // Labels are connected, so weight k lives in degree >= k.
  const Caps caps{D, D};
  HiltonMilnorReport report;
  report.lhs =
      tensor_product_series(spec.m_dim, spec.rel_betti, 1, wedge, spec.field, caps).degreewise();

  Poly rhs(static_cast<std::size_t>(D + 1));
  rhs[0] = 1;
  const int max_length = min_degree < 0 ? 0 : D / min_degree;
  const auto letters = static_cast<int>(spec.x_list.size());
  for (const BasicWord& word : basic_words(letters, max_length)) {
    const GradedBetti label = smash_betti(spec.x_list, word.multiplicity);
    if (label.empty() || label.min_degree() > D) continue;
    const int shift = (word.length - 1) * spec.m_dim;
    const GradedBetti rel = suspend_betti(spec.rel_betti, shift);
    const Poly factor = tensor_product_series(word.length * spec.m_dim, rel, 1, label,
                                              spec.field, caps)
                            .degreewise();
    rhs = poly_multiply(rhs, poly_power(factor, word.count, rhs.size()));
    ++report.words_used;
  }
  report.rhs = std::move(rhs);

  for (int d = 0; d <= D; ++d) {
    const auto i = static_cast<std::size_t>(d);
    if (report.lhs[i] != report.rhs[i]) {
      report.first_mismatch = HiltonMilnorReport::Mismatch{d, report.lhs[i], report.rhs[i]};
      break;
    }
  }
  report.passed = !report.first_mismatch.has_value();
  return report;
}

}  // namespace confhom
