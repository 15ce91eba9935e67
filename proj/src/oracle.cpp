#include "confhom/oracle.hpp"

#include "confhom/errors.hpp"

#include <algorithm>
#include <sstream>

namespace confhom::oracle {

namespace {

struct Basic {
  TreePtr tree;
  int length;
  int shifted_degree;
  int left = -1;  // indices into the basic list for non-letters
  int right = -1;
};

TreePtr leaf(int letter) {
  auto t = std::make_shared<BracketTree>();
  t->letter = letter;
  return t;
}

TreePtr bracket(TreePtr a, TreePtr b) {
  auto t = std::make_shared<BracketTree>();
  t->left = std::move(a);
  t->right = std::move(b);
  return t;
}

// M. Hall basic commutators ordered by length: [c_i, c_k] is basic when
// c_i > c_k and, if c_i = [c_s, c_t], also c_t <= c_k.
std::vector<Basic> hall_basis(const std::vector<int>& shifted_letters, int max_length,
                              int max_shifted) {
  std::vector<Basic> basics;
  for (std::size_t i = 0; i < shifted_letters.size(); ++i) {
    if (shifted_letters[i] <= max_shifted) {
      basics.push_back({leaf(static_cast<int>(i)), 1, shifted_letters[i]});
    }
  }
  for (int length = 2; length <= max_length; ++length) {
    const std::size_t existing = basics.size();
    for (std::size_t i = 0; i < existing; ++i) {
      for (std::size_t k = 0; k < i; ++k) {
        const Basic& hi = basics[i];
        const Basic& lo = basics[k];
        if (hi.length + lo.length != length) continue;
        if (hi.shifted_degree + lo.shifted_degree > max_shifted) continue;
        if (hi.right >= 0 && hi.right > static_cast<int>(k)) continue;
        basics.push_back({bracket(hi.tree, lo.tree), length,
                          hi.shifted_degree + lo.shifted_degree, static_cast<int>(i),
                          static_cast<int>(k)});
      }
    }
  }
  return basics;
}

struct UpperUnit {
  long s;
  bool bockstein;
};

// Exhaustive search over operation units in upper-index form, keeping the
// words that are admissible: s_new <= p * s_prev - eps_prev
// (s_new <= 2 * s_prev in characteristic 2).
void search_ops(const GeneratorDescriptor& base, long degree, long weight,
                std::vector<UpperUnit>& upper, int j, long p, bool two, Caps caps,
                std::vector<GeneratorDescriptor>& out) {
  const long next_weight = weight * p;
  if (next_weight > caps.max_weight) return;
  // Lower index b = s - d (p = 2) or 2s - d (odd p) must lie in [1, j-1].
  const long s_lo = two ? degree + 1 : (degree + 2) / 2;
  const long s_hi = two ? degree + j - 1 : (degree + j - 1) / 2;
  for (long s = s_lo; s <= s_hi; ++s) {
    const long b = two ? s - degree : 2 * s - degree;
    if (b < 1 || b > j - 1) continue;
    if (!upper.empty()) {
      const UpperUnit& prev = upper.back();
      const long bound = p * prev.s - (prev.bockstein ? 1 : 0);
      if (s > bound) continue;
    }
    for (int eps = 0; eps <= (two ? 0 : 1); ++eps) {
      const long next_degree = two ? degree + s : degree + 2 * s * (p - 1) - eps;
      if (next_degree > caps.max_degree) continue;
      GeneratorDescriptor g = base;
      g.ops.push_back({static_cast<int>(b), eps == 1});
      g.degree = static_cast<int>(next_degree);
      g.weight = static_cast<int>(next_weight);
      out.push_back(g);
      upper.push_back({s, eps == 1});
      search_ops(g, next_degree, next_weight, upper, j, p, two, caps, out);
      upper.pop_back();
    }
  }
}

using Poly = std::vector<Integer>;

Poly one(int max_degree) {
  Poly p(static_cast<std::size_t>(max_degree + 1));
  p[0] = 1;
  return p;
}

// p *= 1/(1 - t^d)
void times_polynomial(Poly& p, int d) {
  for (std::size_t i = static_cast<std::size_t>(d); i < p.size(); ++i) p[i] += p[i - d];
}

// p *= (1 + t^d)
void times_exterior(Poly& p, int d) {
  for (std::size_t i = p.size(); i-- > static_cast<std::size_t>(d);) p[i] += p[i - d];
}

void require(bool ok, const std::string& what) {
  if (!ok) throw InputError("classical_series: " + what);
}

}  // namespace

int tree_length(const BracketTree& tree) {
  if (tree.is_leaf()) return 1;
  return tree_length(*tree.left) + tree_length(*tree.right);
}

int tree_degree(const BracketTree& tree, const std::vector<int>& letter_degrees, int j) {
  if (tree.is_leaf()) return letter_degrees.at(static_cast<std::size_t>(tree.letter));
  return tree_degree(*tree.left, letter_degrees, j) + tree_degree(*tree.right, letter_degrees, j) +
         (j - 1);
}

std::pair<int, int> recompute(const GeneratorDescriptor& g,
                              const std::vector<int>& letter_degrees, int j) {
  int degree = tree_degree(*g.atom, letter_degrees, j);
  int weight = tree_length(*g.atom);
  const int p = g.field.is_two() ? 2 : g.field.characteristic();
  for (const OpUnit& u : g.ops) {
    degree = p * degree + u.index * (p - 1) - (u.bockstein ? 1 : 0);
    weight *= p;
  }
  return {degree, weight};
}

namespace {

void print_tree(std::ostream& os, const BracketTree& t) {
  if (t.is_leaf()) {
    os << 'x' << t.letter;
    return;
  }
  os << '[';
  print_tree(os, *t.left);
  os << ',';
  print_tree(os, *t.right);
  os << ']';
}

}  // namespace

std::string to_string(const GeneratorDescriptor& g) {
  std::ostringstream os;
  for (auto it = g.ops.rbegin(); it != g.ops.rend(); ++it) {
    if (it->bockstein) os << "b";
    os << 'Q' << it->index << ' ';
  }
  print_tree(os, *g.atom);
  return os.str();
}

GeneratorEnumeration enumerate_generators(const GradedBetti& y, int j, const FieldChar& field,
                                          Caps caps) {
  if (j < 2) throw InputError("enumerate_generators: requires j >= 2");
  GeneratorEnumeration result;
  result.j = j;
  for (const auto& [degree, count] : y.by_degree()) {
    if (degree < 1) throw InputError("enumerate_generators: label classes need degree >= 1");
    for (Integer c = 0; c < count; ++c) result.letter_degrees.push_back(degree);
  }

  std::vector<int> shifted;
  for (int d : result.letter_degrees) shifted.push_back(d + j - 1);
  const int max_shifted = caps.max_degree + j - 1;
  std::vector<Basic> basics = hall_basis(shifted, caps.max_weight, max_shifted);

  // Super convention: odd (shifted) basic words also have a square.
  if (!field.is_two()) {
    const std::size_t count = basics.size();
    for (std::size_t i = 0; i < count; ++i) {
      const Basic& w = basics[i];
      if (w.shifted_degree % 2 == 0) continue;
      if (2 * w.length > caps.max_weight || 2 * w.shifted_degree > max_shifted) continue;
      basics.push_back({bracket(w.tree, w.tree), 2 * w.length, 2 * w.shifted_degree});
    }
  }

  const long p = field.is_two() ? 2 : field.characteristic();
  for (const Basic& w : basics) {
    GeneratorDescriptor g;
    g.atom = w.tree;
    g.degree = w.shifted_degree - (j - 1);
    g.weight = w.length;
    g.field = field;
    if (g.degree > caps.max_degree) continue;
    result.generators.push_back(g);
    if (field.is_zero()) continue;
    std::vector<UpperUnit> upper;
    search_ops(g, g.degree, g.weight, upper, j, p, field.is_two(), caps, result.generators);
  }
  return result;
}

GeneratorCensus census_of(const GeneratorEnumeration& e, Caps caps) {
  GeneratorCensus census(caps);
  for (const auto& g : e.generators) census.add(g.degree, g.weight, 1);
  return census;
}

CatalogSeries classical_series(const std::string& name, const std::vector<int>& params,
                               Caps caps) {
  const int D = caps.max_degree;
  CatalogSeries out;
  Poly series = one(D);

  if (name == "james") {
    require(params.size() == 1 && params[0] >= 1, "james(d) needs d >= 1");
    const int d = params[0];
    std::vector<SeriesEntry> entries;
    for (int r = 0; r * d <= D; ++r) entries.push_back({r * d, r, Integer(1)});
    out.bigraded = BiSeries::from_entries(caps, entries);
    times_polynomial(series, d);
  } else if (name == "omega2_s3_mod2") {
    require(params.empty(), "omega2_s3_mod2 takes no parameters");
    // Partitions into parts 1, 3, 7, 15, ...
    for (long part = 1; part <= D; part = 2 * part + 1) times_polynomial(series, static_cast<int>(part));
  } else if (name == "omega2_s3_modp") {
    require(params.size() == 1 && params[0] >= 3, "omega2_s3_modp(p) needs an odd prime");
    const long p = params[0];
    for (long pk = 1; 2 * pk - 1 <= D; pk *= p) times_exterior(series, static_cast<int>(2 * pk - 1));
    for (long pk = p; 2 * pk - 2 <= D; pk *= p) times_polynomial(series, static_cast<int>(2 * pk - 2));
  } else if (name == "rational_loops_sphere") {
    require(params.size() == 2, "rational_loops_sphere(j, m)");
    const int j = params[0];
    const int m = params[1];
    if (j == 1) {
      require(m >= 2, "Omega S^m needs m >= 2");
      if (m % 2 == 1) {
        times_polynomial(series, m - 1);
      } else {
        times_exterior(series, m - 1);
        times_polynomial(series, 2 * m - 2);
      }
    } else if (j == 2) {
      require(m >= 3, "Omega^2 S^m needs m >= 3");
      if (m % 2 == 1) {
        times_exterior(series, m - 2);
      } else {
        times_polynomial(series, m - 2);
        times_exterior(series, 2 * m - 3);
      }
    } else {
      require(false, "rational_loops_sphere supports j in {1, 2}");
    }
  } else if (name == "stunted_weight2") {
    require(params.size() == 2 && params[0] >= 1 && params[1] >= 2,
            "stunted_weight2(d, j) needs d >= 1, j >= 2");
    const int d = params[0];
    const int j = params[1];
    series.assign(static_cast<std::size_t>(D + 1), Integer(0));
    std::vector<SeriesEntry> entries;
    for (int e = 2 * d; e <= 2 * d + j - 1 && e <= D; ++e) {
      series[static_cast<std::size_t>(e)] = 1;
      entries.push_back({e, 2, Integer(1)});
    }
    out.bigraded = BiSeries::from_entries(caps, entries);
  } else if (name == "even_sphere_split") {
    // Omega^2 S^{2k} ~ Omega S^{2k-1} x Omega^2 S^{4k-1}
    require(params.size() == 2 && params[0] >= 2, "even_sphere_split(k, p) needs k >= 2");
    const long k = params[0];
    const long p = params[1];
    require(p == 2 || (p >= 3 && p % 2 == 1), "even_sphere_split: p must be 2 or odd");
    times_polynomial(series, static_cast<int>(2 * k - 2));
    const long half = 2 * k - 1;  // Omega^2 S^{2*half+1}
    if (p == 2) {
      for (long e = 2 * half - 1; e <= D; e = 2 * e + 1) times_polynomial(series, static_cast<int>(e));
    } else {
      for (long pk = 1; 2 * half * pk - 1 <= D; pk *= p)
        times_exterior(series, static_cast<int>(2 * half * pk - 1));
      for (long pk = p; 2 * half * pk - 2 <= D; pk *= p)
        times_polynomial(series, static_cast<int>(2 * half * pk - 2));
    }
  } else {
    throw InputError("classical_series: unknown series '" + name + "'");
  }
  out.by_degree = std::move(series);
  return out;
}

DiffReport diff_report(const BiSeries& a, const BiSeries& b) {
  if (a.caps() != b.caps()) throw ConfigError("diff_report: cap mismatch");
  DiffReport report;
  for (int d = 0; d <= a.max_degree(); ++d)
    for (int k = 0; k <= a.max_weight(); ++k)
      if (a.raw(d, k) != b.raw(d, k)) report.rows.push_back({d, k, a.raw(d, k), b.raw(d, k)});
  return report;
}

DiffReport diff_degreewise(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  if (a.size() != b.size()) throw ConfigError("diff_degreewise: length mismatch");
  DiffReport report;
  for (std::size_t d = 0; d < a.size(); ++d)
    if (a[d] != b[d]) report.rows.push_back({static_cast<int>(d), -1, a[d], b[d]});
  return report;
}

}  // namespace confhom::oracle
