#include "confhom/series.hpp"

#include "confhom/errors.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace confhom {

namespace {

void require_same_caps(const BiSeries& a, const BiSeries& b, const char* op) {
  if (a.caps() != b.caps()) {
    throw ConfigError(std::string(op) + ": cap mismatch (" + std::to_string(a.max_degree()) +
                      "," + std::to_string(a.max_weight()) + ") vs (" +
                      std::to_string(b.max_degree()) + "," + std::to_string(b.max_weight()) +
                      ")");
  }
}

struct RowEntry {
  int weight;
  const Integer* coeff;
};

// Nonzero coefficients grouped by degree row.
std::vector<std::vector<RowEntry>> nonzero_rows(const BiSeries& s) {
  std::vector<std::vector<RowEntry>> rows(static_cast<std::size_t>(s.max_degree() + 1));
  for (int d = 0; d <= s.max_degree(); ++d) {
    for (int k = 0; k <= s.max_weight(); ++k) {
      const Integer& c = s.raw(d, k);
      if (c != 0) rows[static_cast<std::size_t>(d)].push_back({k, &c});
    }
  }
  return rows;
}

// Coefficient of x^r in (1-x)^{-c} or (1+x)^c, for r = 0..max_terms.
std::vector<Integer> factor_coefficients(const Integer& count, FactorKind kind, int max_terms) {
  std::vector<Integer> coef(static_cast<std::size_t>(max_terms + 1));
  for (int r = 0; r <= max_terms; ++r) {
    Integer& out = coef[static_cast<std::size_t>(r)];
    if (kind == FactorKind::polynomial) {
      Integer top = count + r - 1;
      if (r == 0) {
        out = 1;
      } else {
        mpz_bin_ui(out.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(r));
      }
    } else {
      mpz_bin_ui(out.get_mpz_t(), count.get_mpz_t(), static_cast<unsigned long>(r));
    }
  }
  return coef;
}

struct FactorPlan {
  std::vector<Integer> coef;
  int max_terms = 0;
};

// Validates the generator bidegree and computes the binomial coefficients
// needed to stay within the caps.
FactorPlan plan_factor(const Caps& caps, int degree, int weight, const Integer& count,
                       FactorKind kind) {
  if (degree < 0 || weight < 0) throw InputError("power_factor: negative generator bidegree");
  if (count < 0) throw InputError("power_factor: negative generator count");
  if (degree == 0 && kind == FactorKind::polynomial) {
    throw DivergentSeriesError(
        "power_factor: polynomial generator in degree 0 gives a divergent series");
  }
  int max_terms = std::numeric_limits<int>::max();
  if (degree > 0) max_terms = std::min(max_terms, caps.max_degree / degree);
  if (weight > 0) max_terms = std::min(max_terms, caps.max_weight / weight);
  if (kind == FactorKind::exterior && count.fits_sint_p()) {
    max_terms = static_cast<int>(std::min<long>(max_terms, count.get_si()));
  }
  if (max_terms == std::numeric_limits<int>::max()) {
    // degree == weight == 0 exterior with an enormous count; out of any sane range
    throw InputError("power_factor: bidegree (0,0) exterior factor with unbounded count");
  }
  return {factor_coefficients(count, kind, max_terms), max_terms};
}

}  // namespace

BiSeries::BiSeries(Caps caps) : caps_(caps) {
  if (caps.max_degree < 0 || caps.max_weight < 0) throw ConfigError("negative series caps");
  coeff_.resize(static_cast<std::size_t>(caps.max_degree + 1) *
                static_cast<std::size_t>(caps.max_weight + 1));
}

BiSeries BiSeries::unit(Caps caps) {
  BiSeries s(caps);
  s.mut(0, 0) = 1;
  return s;
}

BiSeries BiSeries::monomial(Caps caps, int degree, int weight, const Integer& coeff) {
  SeriesEntry e{degree, weight, coeff};
  return from_entries(caps, std::span<const SeriesEntry>(&e, 1));
}

BiSeries BiSeries::from_entries(Caps caps, std::span<const SeriesEntry> entries) {
  BiSeries s(caps);
  for (const auto& e : entries) {
    if (e.degree < 0 || e.weight < 0) throw InputError("series entry with negative index");
    if (e.degree > caps.max_degree || e.weight > caps.max_weight) continue;
    s.mut(e.degree, e.weight) += e.coeff;
  }
  check_nonnegative(s, "from_entries");
  return s;
}

const Integer& BiSeries::at(int degree, int weight) const {
  if (degree < 0 || weight < 0 || degree > caps_.max_degree || weight > caps_.max_weight) {
    throw std::out_of_range("BiSeries::at(" + std::to_string(degree) + "," +
                            std::to_string(weight) + ") outside caps");
  }
  return raw(degree, weight);
}

std::vector<SeriesEntry> BiSeries::entries() const {
  std::vector<SeriesEntry> out;
  for (int d = 0; d <= caps_.max_degree; ++d)
    for (int k = 0; k <= caps_.max_weight; ++k)
      if (raw(d, k) != 0) out.push_back({d, k, raw(d, k)});
  return out;
}

std::vector<Integer> BiSeries::degreewise() const {
  std::vector<Integer> out(static_cast<std::size_t>(caps_.max_degree + 1));
  for (int d = 0; d <= caps_.max_degree; ++d)
    for (int k = 0; k <= caps_.max_weight; ++k) out[static_cast<std::size_t>(d)] += raw(d, k);
  return out;
}

std::vector<Integer> BiSeries::weight_row(int weight) const {
  std::vector<Integer> out(static_cast<std::size_t>(caps_.max_degree + 1));
  if (weight < 0 || weight > caps_.max_weight) return out;
  for (int d = 0; d <= caps_.max_degree; ++d) out[static_cast<std::size_t>(d)] = raw(d, weight);
  return out;
}

bool BiSeries::is_zero() const {
  return std::all_of(coeff_.begin(), coeff_.end(), [](const Integer& c) { return c == 0; });
}

bool BiSeries::has_unit_constant() const { return raw(0, 0) == 1; }

void check_nonnegative(const BiSeries& s, const char* op) {
  for (int d = 0; d <= s.max_degree(); ++d) {
    for (int k = 0; k <= s.max_weight(); ++k) {
      if (s.raw(d, k) < 0) {
        throw IntegrityError(std::string(op) + ": negative coefficient at (" +
                             std::to_string(d) + "," + std::to_string(k) + ")");
      }
    }
  }
}

BiSeries add(const BiSeries& a, const BiSeries& b) {
  require_same_caps(a, b, "add");
  BiSeries out(a.caps());
  for (int d = 0; d <= a.max_degree(); ++d)
    for (int k = 0; k <= a.max_weight(); ++k) out.mut(d, k) = a.raw(d, k) + b.raw(d, k);
  return out;
}

BiSeries multiply(const BiSeries& a, const BiSeries& b) {
  require_same_caps(a, b, "multiply");
  const Caps caps = a.caps();
  const auto rows = nonzero_rows(a);
  BiSeries out(caps);

  // Gather form: each output row is owned by one thread.
#pragma omp parallel for schedule(dynamic)
  for (int d = 0; d <= caps.max_degree; ++d) {
    for (int d1 = 0; d1 <= d; ++d1) {
      const int d2 = d - d1;
      for (const RowEntry& e : rows[static_cast<std::size_t>(d1)]) {
        for (int k = e.weight; k <= caps.max_weight; ++k) {
          const Integer& rhs = b.raw(d2, k - e.weight);
          if (rhs != 0) out.mut(d, k) += *e.coeff * rhs;
        }
      }
    }
  }
  check_nonnegative(out, "multiply");
  return out;
}

BiSeries multiply_serial(const BiSeries& a, const BiSeries& b) {
  require_same_caps(a, b, "multiply_serial");
  const Caps caps = a.caps();
  BiSeries out(caps);
  for (int d1 = 0; d1 <= caps.max_degree; ++d1) {
    for (int k1 = 0; k1 <= caps.max_weight; ++k1) {
      const Integer& x = a.raw(d1, k1);
      if (x == 0) continue;
      for (int d2 = 0; d1 + d2 <= caps.max_degree; ++d2) {
        for (int k2 = 0; k1 + k2 <= caps.max_weight; ++k2) {
          const Integer& y = b.raw(d2, k2);
          if (y != 0) out.mut(d1 + d2, k1 + k2) += x * y;
        }
      }
    }
  }
  check_nonnegative(out, "multiply_serial");
  return out;
}

BiSeries power(const BiSeries& a, const Integer& exponent) {
  if (exponent < 0) throw InputError("power: negative exponent");
  BiSeries result = BiSeries::unit(a.caps());
  BiSeries base = a;
  Integer e = exponent;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = multiply(result, base);
    e >>= 1;
    if (e > 0) base = multiply(base, base);
  }
  return result;
}

BiSeries power_factor(const BiSeries& acc, int degree, int weight, const Integer& count,
                      FactorKind kind) {
  const Caps caps = acc.caps();
  const FactorPlan plan = plan_factor(caps, degree, weight, count, kind);
  BiSeries out(caps);

#pragma omp parallel for schedule(dynamic)
  for (int e = 0; e <= caps.max_degree; ++e) {
    for (int w = 0; w <= caps.max_weight; ++w) {
      Integer& cell = out.mut(e, w);
      for (int r = 0; r <= plan.max_terms; ++r) {
        const int se = e - r * degree;
        const int sw = w - r * weight;
        if (se < 0 || sw < 0) break;
        const Integer& src = acc.raw(se, sw);
        const Integer& c = plan.coef[static_cast<std::size_t>(r)];
        if (src != 0 && c != 0) cell += c * src;
      }
    }
  }
  check_nonnegative(out, "power_factor");
  return out;
}

BiSeries power_factor_serial(const BiSeries& acc, int degree, int weight, const Integer& count,
                             FactorKind kind) {
  const Caps caps = acc.caps();
  const FactorPlan plan = plan_factor(caps, degree, weight, count, kind);
  BiSeries out(caps);
  for (int d = 0; d <= caps.max_degree; ++d) {
    for (int k = 0; k <= caps.max_weight; ++k) {
      const Integer& src = acc.raw(d, k);
      if (src == 0) continue;
      for (int r = 0; r <= plan.max_terms; ++r) {
        const int td = d + r * degree;
        const int tk = k + r * weight;
        if (td > caps.max_degree || tk > caps.max_weight) break;
        out.mut(td, tk) += plan.coef[static_cast<std::size_t>(r)] * src;
      }
    }
  }
  check_nonnegative(out, "power_factor_serial");
  return out;
}

BiSeries inverse_one_minus(const BiSeries& f) {
  if (f.raw(0, 0) != 0) {
    throw InputError("inverse_one_minus: constant term must vanish, got " +
                     f.raw(0, 0).get_str());
  }
  const Caps caps = f.caps();
  const std::vector<SeriesEntry> terms = f.entries();
  BiSeries g(caps);
  // (d,k) in lexicographic order; every term of f is lex-positive, so the
  // right-hand side only reads finished cells.
  for (int d = 0; d <= caps.max_degree; ++d) {
    for (int k = 0; k <= caps.max_weight; ++k) {
      Integer& cell = g.mut(d, k);
      if (d == 0 && k == 0) cell = 1;
      for (const SeriesEntry& t : terms) {
        if (t.degree > d) break;
        if (t.weight > k) continue;
        const Integer& prev = g.raw(d - t.degree, k - t.weight);
        if (prev != 0) cell += t.coeff * prev;
      }
    }
  }
  check_nonnegative(g, "inverse_one_minus");
  return g;
}

BiSeries desuspend_by_weight(const BiSeries& s, int r) {
  if (r < 0) throw InputError("desuspend_by_weight: negative shift");
  BiSeries out(s.caps());
  for (int d = 0; d <= s.max_degree(); ++d) {
    for (int k = 0; k <= s.max_weight(); ++k) {
      const Integer& c = s.raw(d, k);
      if (c == 0) continue;
      const int target = d - r * k;
      if (target < 0) {
        throw IntegrityError("desuspend_by_weight: entry (" + std::to_string(d) + "," +
                             std::to_string(k) + ") would move to negative degree " +
                             std::to_string(target));
      }
      out.mut(target, k) = c;
    }
  }
  return out;
}

BiSeries restrict_caps(const BiSeries& s, Caps caps) {
  if (caps.max_degree > s.max_degree() || caps.max_weight > s.max_weight()) {
    throw ConfigError("restrict_caps: target window exceeds source window");
  }
  BiSeries out(caps);
  for (int d = 0; d <= caps.max_degree; ++d)
    for (int k = 0; k <= caps.max_weight; ++k) out.mut(d, k) = s.raw(d, k);
  return out;
}

}  // namespace confhom
