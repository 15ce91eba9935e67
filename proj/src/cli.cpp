#include "confhom/cli.hpp"

#include "confhom/decomposition.hpp"
#include "confhom/errors.hpp"
#include "confhom/loop_homology.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace confhom::cli {

using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;

GradedBetti parse_betti(const json& j, const char* what) {
  if (!j.is_object()) throw ParseError(std::string(what) + " must be an object {degree: count}");
  GradedBetti out;
  for (const auto& [key, value] : j.items()) {
    int degree = 0;
    try {
      std::size_t used = 0;
      degree = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw ParseError(std::string(what) + ": degree key '" + key + "' is not an integer");
    }
    if (!value.is_number_integer()) {
      throw ParseError(std::string(what) + ": count for degree " + key + " must be an integer");
    }
    if (value.get<long long>() < 0) {
      throw InputError(std::string(what) + ": negative Betti number in degree " + key);
    }
    out.add(degree, Integer(value.get<long>()));
  }
  return out;
}

std::vector<int> parse_params(const json& j) {
  if (!j.contains("params")) return {};
  const json& p = j.at("params");
  if (!p.is_array()) throw ParseError("params must be an array of integers");
  std::vector<int> out;
  for (const auto& v : p) {
    if (!v.is_number_integer()) throw ParseError("params must be an array of integers");
    out.push_back(v.get<int>());
  }
  return out;
}

template <class T>
T get_field(const json& doc, const char* key, T fallback) {
  if (!doc.contains(key)) return fallback;
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception&) {
    throw ParseError(std::string("config field '") + key + "' has the wrong type");
  }
}

GradedBetti sphere_betti(int d) {
  if (d < 0) throw InputError("sphere dimension must be >= 0");
  return GradedBetti{{d, 1}};
}

std::vector<GradedBetti> parse_label(const json& j) {
  if (!j.is_object()) throw ParseError("label_space must be an object");
  if (j.contains("betti")) return {parse_betti(j.at("betti"), "label_space.betti")};
  const std::string preset = get_field<std::string>(j, "preset", "");
  const std::vector<int> params = parse_params(j);
  if (preset == "sphere") {
    if (params.size() != 1) throw InputError("label preset sphere expects one parameter");
    return {sphere_betti(params[0])};
  }
  if (preset == "wedge") {
    if (params.empty()) throw InputError("label preset wedge expects sphere dimensions");
    std::vector<GradedBetti> out;
    for (int d : params) out.push_back(sphere_betti(d));
    return out;
  }
  throw InputError("unknown label preset '" + preset + "'");
}

ManifoldChoice parse_manifold(const json& j) {
  if (!j.is_object()) throw ParseError("manifold must be an object");
  ManifoldChoice m;
  if (j.contains("preset")) {
    m.preset = get_field<std::string>(j, "preset", "");
    m.params = parse_params(j);
    return m;
  }
  if (!j.contains("dim") || !j.contains("rel_betti")) {
    throw ParseError("manifold needs either a preset or both dim and rel_betti");
  }
  m.dim = get_field<int>(j, "dim", 0);
  m.rel_betti = parse_betti(j.at("rel_betti"), "manifold.rel_betti");
  return m;
}

GradedBetti wedge_betti(const std::vector<GradedBetti>& summands) {
  GradedBetti out;
  for (const auto& s : summands)
    for (const auto& [d, c] : s.by_degree()) out.add(d, c);
  return out;
}

json integer_json(const Integer& v) {
  if (v.fits_ulong_p()) return json(v.get_ui());
  return json(v.get_str());
}

json betti_json(const GradedBetti& b) {
  json out = json::object();
  for (const auto& [d, c] : b.by_degree()) out[std::to_string(d)] = integer_json(c);
  return out;
}

// Everything a run needs after presets are resolved.
struct Resolved {
  ProblemSpec spec;
  std::vector<GradedBetti> summands;
  bool has_problem = false;
};

Resolved resolve(const RunConfig& config, bool need_problem) {
  Resolved r;
  r.spec.field = config.field;
  r.spec.n = config.n;
  r.spec.caps = {config.max_degree, config.max_weight.value_or(-1)};
  if (!config.manifold || !config.label) {
    if (need_problem) throw InputError("this mode needs both a manifold and a label_space");
    return r;
  }
  const ManifoldChoice& m = *config.manifold;
  if (!m.preset.empty()) {
    const ManifoldData data = preset(m.preset, m.params, config.field);
    r.spec.m_dim = data.dim;
    r.spec.rel_betti = data.rel_betti;
  } else {
    r.spec.m_dim = *m.dim;
    r.spec.rel_betti = m.rel_betti;
  }
  r.summands = *config.label;
  r.spec.x_betti = wedge_betti(r.summands);
  r.has_problem = true;
  return r;
}

bool simply_connected(const GradedBetti& x) { return x.empty() || x.min_degree() >= 2; }

json spec_json(const RunConfig& config, const Resolved& r) {
  json s;
  s["field"] = config.field.name();
  s["mode"] = mode_name(config.mode);
  s["max_degree"] = config.max_degree;
  s["max_weight"] = config.max_weight ? json(*config.max_weight) : json(nullptr);
  s["seed"] = config.seed;
  s["n"] = config.n;
  if (r.has_problem) {
    s["dim_M"] = r.spec.m_dim;
    s["rel_betti"] = betti_json(r.spec.rel_betti);
    s["label_betti"] = betti_json(r.spec.x_betti);
  }
  return s;
}

std::string header_lines(const RunConfig& config, const Resolved& r) {
  std::ostringstream os;
  os << "# confhom schema_version=" << kSchemaVersion << " mode=" << mode_name(config.mode)
     << " field=" << config.field.name() << " seed=" << config.seed << '\n';
  if (r.has_problem) {
    os << "# dim_M=" << r.spec.m_dim << " rel_betti=" << r.spec.rel_betti.to_string()
       << " n=" << config.n << " X=" << r.spec.x_betti.to_string() << '\n';
  }
  return os.str();
}

// Right-aligned text table.
std::string render_grid(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream os;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) os << "  ";
      os << std::string(width[c] - row[c].size(), ' ') << row[c];
    }
    os << '\n';
  }
  return os.str();
}

std::string render_series(const RunConfig& config, const Resolved& r, const BiSeries& s) {
  const int D = s.max_degree();
  const int K = s.max_weight();
  switch (config.format) {
    case Format::json: {
      json out;
      out["schema_version"] = kSchemaVersion;
      out["spec"] = spec_json(config, r);
      out["spec"]["effective_max_weight"] = K;
      json series = json::array();
      for (const auto& e : s.entries())
        series.push_back(json::array({e.degree, e.weight, integer_json(e.coeff)}));
      out["series"] = std::move(series);
      out["checks"] = json::array();
      return out.dump(2) + "\n";
    }
    case Format::csv: {
      std::ostringstream os;
      os << "degree";
      for (int k = 0; k <= K; ++k) os << ",w" << k;
      os << ",total\n";
      const auto totals = s.degreewise();
      for (int d = 0; d <= D; ++d) {
        os << d;
        for (int k = 0; k <= K; ++k) os << ',' << s.at(d, k);
        os << ',' << totals[static_cast<std::size_t>(d)] << '\n';
      }
      return os.str();
    }
    case Format::table: {
      std::vector<std::vector<std::string>> rows;
      std::vector<std::string> head{"degree", "total"};
      for (int k = 0; k <= K; ++k) head.push_back("k=" + std::to_string(k));
      rows.push_back(head);
      const auto totals = s.degreewise();
      for (int d = 0; d <= D; ++d) {
        std::vector<std::string> row{std::to_string(d), totals[static_cast<std::size_t>(d)].get_str()};
        for (int k = 0; k <= K; ++k) row.push_back(s.at(d, k).get_str());
        rows.push_back(row);
      }
      std::ostringstream os;
      os << header_lines(config, r) << "# max_degree=" << D << " max_weight=" << K << '\n'
         << render_grid(rows);
      return os.str();
    }
  }
  return {};
}

std::string render_filtration(const RunConfig& config, const Resolved& r, const BiSeries& s) {
  const auto rows = filtration_table(s);
  const int D = s.max_degree();
  switch (config.format) {
    case Format::json: {
      json out;
      out["schema_version"] = kSchemaVersion;
      out["spec"] = spec_json(config, r);
      json series = json::array();
      for (const auto& e : s.entries())
        series.push_back(json::array({e.degree, e.weight, integer_json(e.coeff)}));
      out["series"] = std::move(series);
      json quotients = json::array();
      for (const auto& row : rows) {
        json betti = json::array();
        for (const auto& b : row.betti) betti.push_back(integer_json(b));
        quotients.push_back({{"weight", row.weight}, {"betti", betti}});
      }
      out["filtration_quotients"] = std::move(quotients);
      out["checks"] = json::array();
      return out.dump(2) + "\n";
    }
    case Format::csv: {
      std::ostringstream os;
      os << "weight";
      for (int d = 0; d <= D; ++d) os << ",d" << d;
      os << '\n';
      for (const auto& row : rows) {
        os << row.weight;
        for (const auto& b : row.betti) os << ',' << b;
        os << '\n';
      }
      return os.str();
    }
    case Format::table: {
      std::vector<std::vector<std::string>> grid;
      std::vector<std::string> head{"D_k"};
      for (int d = 0; d <= D; ++d) head.push_back("d=" + std::to_string(d));
      grid.push_back(head);
      for (const auto& row : rows) {
        std::vector<std::string> line{"k=" + std::to_string(row.weight)};
        for (const auto& b : row.betti) line.push_back(b.get_str());
        grid.push_back(line);
      }
      std::ostringstream os;
      os << header_lines(config, r) << "# max_degree=" << D << " max_weight=" << s.max_weight()
         << '\n'
         << render_grid(grid);
      return os.str();
    }
  }
  return {};
}

struct FactorCensus {
  int q;
  int j;
  Integer copies;
  GradedBetti label;
  std::vector<std::tuple<int, int, Integer, std::string>> entries;  // degree, weight, count, kind
};

std::vector<FactorCensus> collect_generators(const ProblemSpec& spec, Caps caps) {
  std::vector<FactorCensus> out;
  const int m = spec.m_dim + spec.n;
  for (const auto& [q, beta] : spec.rel_betti.by_degree()) {
    FactorCensus f{q, m - q, beta, suspend_betti(spec.x_betti, q), {}};
    if (f.j == 1) {
      for (const auto& [d, c] : f.label.by_degree())
        if (d <= caps.max_degree) f.entries.emplace_back(d, 1, c, "tensor");
    } else {
      const auto census = generator_census(atom_census(f.label, f.j, spec.field, caps), f.j,
                                           spec.field, caps);
      for (const auto& [key, count] : census.entries()) {
        const auto kind = generator_kind(key.first, spec.field) == FactorKind::polynomial
                              ? "polynomial"
                              : "exterior";
        f.entries.emplace_back(key.first, key.second, count, kind);
      }
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::string render_generators(const RunConfig& config, const Resolved& r,
                              const std::vector<FactorCensus>& factors, const BiSeries& total) {
  switch (config.format) {
    case Format::json: {
      json out;
      out["schema_version"] = kSchemaVersion;
      out["spec"] = spec_json(config, r);
      json list = json::array();
      for (const auto& f : factors) {
        json census = json::array();
        for (const auto& [d, k, c, kind] : f.entries)
          census.push_back(json::array({d, k, integer_json(c), kind}));
        list.push_back({{"q", f.q},
                        {"j", f.j},
                        {"copies", integer_json(f.copies)},
                        {"label_betti", betti_json(f.label)},
                        {"census", census}});
      }
      out["generators"] = std::move(list);
      json series = json::array();
      for (const auto& e : total.entries())
        series.push_back(json::array({e.degree, e.weight, integer_json(e.coeff)}));
      out["series"] = std::move(series);
      out["checks"] = json::array();
      return out.dump(2) + "\n";
    }
    case Format::csv: {
      std::ostringstream os;
      os << "q,j,copies,degree,weight,count,kind\n";
      for (const auto& f : factors)
        for (const auto& [d, k, c, kind] : f.entries)
          os << f.q << ',' << f.j << ',' << f.copies << ',' << d << ',' << k << ',' << c << ','
             << kind << '\n';
      return os.str();
    }
    case Format::table: {
      std::ostringstream os;
      os << header_lines(config, r);
      for (const auto& f : factors) {
        os << "# factor q=" << f.q << " j=" << f.j << " copies=" << f.copies
           << " label=" << f.label.to_string() << '\n';
        std::vector<std::vector<std::string>> grid{{"degree", "weight", "count", "kind"}};
        for (const auto& [d, k, c, kind] : f.entries)
          grid.push_back({std::to_string(d), std::to_string(k), c.get_str(), kind});
        os << render_grid(grid);
      }
      return os.str();
    }
  }
  return {};
}

std::string render_checks(const RunConfig& config, const Resolved& r,
                          const std::vector<CheckResult>& checks) {
  switch (config.format) {
    case Format::json: {
      json out;
      out["schema_version"] = kSchemaVersion;
      out["spec"] = spec_json(config, r);
      out["series"] = json::array();
      json list = json::array();
      for (const auto& c : checks)
        list.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      out["checks"] = std::move(list);
      return out.dump(2) + "\n";
    }
    case Format::csv: {
      std::ostringstream os;
      os << "name,passed,detail\n";
      for (const auto& c : checks)
        os << '"' << c.name << "\"," << (c.passed ? "true" : "false") << ",\"" << c.detail
           << "\"\n";
      return os.str();
    }
    case Format::table: {
      std::ostringstream os;
      os << header_lines(config, r);
      std::size_t passed = 0;
      for (const auto& c : checks) {
        os << (c.passed ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty()) os << " : " << c.detail;
        os << '\n';
        if (c.passed) ++passed;
      }
      os << "# " << passed << "/" << checks.size() << " checks passed\n";
      return os.str();
    }
  }
  return {};
}

std::vector<CheckResult> run_hilton_milnor(const RunConfig& config, const Resolved& r) {
  HiltonMilnorSpec hm;
  hm.m_dim = r.spec.m_dim;
  hm.rel_betti = r.spec.rel_betti;
  hm.field = config.field;
  hm.orientable = config.orientable;
  hm.max_degree = config.max_degree;
  // Only Betti numbers matter, so a single explicit label splits into spheres.
  if (r.summands.size() == 1) {
    for (const auto& [d, c] : r.summands.front().by_degree())
      for (Integer i = 0; i < c; ++i) hm.x_list.push_back(GradedBetti{{d, 1}});
  } else {
    hm.x_list = r.summands;
  }
  const HiltonMilnorReport report = hilton_milnor_check(hm);
  CheckResult result{"hilton_milnor dim_M=" + std::to_string(hm.m_dim) +
                         " rel_betti=" + hm.rel_betti.to_string() +
                         " X=" + r.spec.x_betti.to_string() + " words=" +
                         std::to_string(report.words_used),
                     report.passed, ""};
  if (report.first_mismatch) {
    std::ostringstream os;
    os << "first mismatch in degree " << report.first_mismatch->degree
       << ": wedge side " << report.first_mismatch->lhs << ", product side "
       << report.first_mismatch->rhs;
    result.detail = os.str();
  }
  return {result};
}

RunResult execute(const RunConfig& config) {
  const bool needs_problem = config.mode != Mode::check_ab;
  const Resolved r = resolve(config, needs_problem);
  RunResult result;

  switch (config.mode) {
    case Mode::theorem_a: {
      result.output = render_series(config, r, theorem_a(r.spec));
      break;
    }
    case Mode::theorem_b: {
      if (!config.max_weight) {
        throw InputError(
            "theorem_b needs an explicit max_weight: for a disconnected label space every "
            "weight contributes to low degrees");
      }
      result.output = render_series(config, r, theorem_b(r.spec));
      break;
    }
    case Mode::dk_table: {
      BiSeries s = BiSeries::zero({0, 0});
      if (config.max_weight) {
        s = theorem_b(r.spec);
      } else if (simply_connected(r.spec.x_betti)) {
        s = theorem_a(r.spec);
      } else {
        throw InputError(
            "dk_table with a non-simply-connected label space needs an explicit max_weight");
      }
      result.output = render_filtration(config, r, s);
      break;
    }
    case Mode::generators: {
      validate(r.spec);
      const Caps caps{config.max_degree, config.max_weight.value_or(config.max_degree)};
      const BiSeries total = tensor_product_series(r.spec.m_dim, r.spec.rel_betti, r.spec.n,
                                                   r.spec.x_betti, r.spec.field, caps);
      result.output = render_generators(config, r, collect_generators(r.spec, caps), total);
      break;
    }
    case Mode::check_ab: {
      std::vector<CheckResult> checks;
      for (const auto& spec : random_coherence_specs(config.seed, config.check_count,
                                                     config.max_degree)) {
        checks.push_back(check_ab_coherence(spec));
        checks.push_back(check_weight_one(spec, theorem_a(spec)));
      }
      result.output = render_checks(config, r, checks);
      if (std::any_of(checks.begin(), checks.end(), [](const auto& c) { return !c.passed; }))
        result.exit_code = kCheckFailed;
      break;
    }
    case Mode::check_hilton_milnor: {
      const auto checks = run_hilton_milnor(config, r);
      result.output = render_checks(config, r, checks);
      if (!checks.front().passed) result.exit_code = kCheckFailed;
      break;
    }
  }
  return result;
}

}  // namespace

FieldChar parse_field(const std::string& text) {
  if (text == "Q" || text == "0") return FieldChar::zero();
  if (text == "F2") return FieldChar::two();
  if (text.rfind("Fp:", 0) == 0) {
    int p = 0;
    try {
      std::size_t used = 0;
      p = std::stoi(text.substr(3), &used);
      if (used != text.size() - 3) throw std::invalid_argument(text);
    } catch (const std::exception&) {
      throw ParseError("field '" + text + "': expected Fp:<prime>");
    }
    if (p == 2) return FieldChar::two();
    return FieldChar::odd(p);
  }
  throw ParseError("unknown field '" + text + "' (expected Q, F2 or Fp:<p>)");
}

Mode parse_mode(const std::string& text) {
  if (text == "theorem_a") return Mode::theorem_a;
  if (text == "theorem_b") return Mode::theorem_b;
  if (text == "dk_table") return Mode::dk_table;
  if (text == "generators") return Mode::generators;
  if (text == "check:ab") return Mode::check_ab;
  if (text == "check:hilton_milnor") return Mode::check_hilton_milnor;
  throw ParseError("unknown mode '" + text + "'");
}

Format parse_format(const std::string& text) {
  if (text == "table") return Format::table;
  if (text == "csv") return Format::csv;
  if (text == "json") return Format::json;
  throw ParseError("unknown format '" + text + "'");
}

std::string mode_name(Mode mode) {
  switch (mode) {
    case Mode::theorem_a: return "theorem_a";
    case Mode::theorem_b: return "theorem_b";
    case Mode::dk_table: return "dk_table";
    case Mode::generators: return "generators";
    case Mode::check_ab: return "check:ab";
    case Mode::check_hilton_milnor: return "check:hilton_milnor";
  }
  return "?";
}

RunConfig parse_config(const json& doc) {
  if (!doc.is_object()) throw ParseError("config must be a JSON object");
  const int version = get_field<int>(doc, "schema_version", kSchemaVersion);
  if (version != kSchemaVersion) {
    throw ParseError("unsupported schema_version " + std::to_string(version));
  }
  RunConfig config;
  config.field = parse_field(get_field<std::string>(doc, "field", "F2"));
  if (doc.contains("manifold")) config.manifold = parse_manifold(doc.at("manifold"));
  if (doc.contains("label_space")) config.label = parse_label(doc.at("label_space"));
  config.n = get_field<int>(doc, "n", 1);
  config.mode = parse_mode(get_field<std::string>(doc, "mode", "theorem_a"));
  config.max_degree = get_field<int>(doc, "max_degree", 10);
  if (doc.contains("max_weight") && !doc.at("max_weight").is_null())
    config.max_weight = get_field<int>(doc, "max_weight", 0);
  config.format = parse_format(get_field<std::string>(doc, "format", "table"));
  config.seed = get_field<std::uint64_t>(doc, "seed", 1);
  config.check_count = get_field<int>(doc, "check_count", 20);
  config.orientable = get_field<bool>(doc, "orientable", false);

  if (config.n < 1) throw InputError("n must be >= 1");
  if (config.max_degree < 0) throw InputError("max_degree must be >= 0");
  if (config.max_weight && *config.max_weight < 0) throw InputError("max_weight must be >= 0");
  if (config.check_count < 0) throw InputError("check_count must be >= 0");
  return config;
}

RunResult run(const RunConfig& config) {
  RunResult result;
  try {
    return execute(config);
  } catch (const ParseError& e) {
    result.exit_code = kParseError;
    result.error = std::string("parse error: ") + e.what();
  } catch (const ConfigError& e) {
    result.exit_code = kConfigError;
    result.error = std::string("configuration error: ") + e.what();
  } catch (const InputError& e) {
    result.exit_code = kInputError;
    result.error = std::string("input error: ") + e.what();
  } catch (const IntegrityError& e) {
    result.exit_code = kIntegrityError;
    result.error = std::string("integrity error: ") + e.what();
  } catch (const Error& e) {
    result.exit_code = kInputError;
    result.error = std::string("error: ") + e.what();
  }
  return result;
}

int main_entry(int argc, char** argv) {
  CLI::App app{"Homology of labeled configuration spaces C((M,M0) x R^n; X)"};
  std::string config_path;
  std::string output_path;
  std::optional<std::string> mode;
  std::optional<std::string> field;
  std::optional<std::string> format;
  std::optional<int> max_degree;
  std::optional<int> max_weight;
  std::optional<std::uint64_t> seed;
  app.add_option("--config", config_path, "JSON run description");
  app.add_option("--mode", mode,
                 "theorem_a | theorem_b | dk_table | generators | check:ab | check:hilton_milnor");
  app.add_option("--field", field, "Q | F2 | Fp:<p>");
  app.add_option("--max-degree", max_degree, "homological degree cap D");
  app.add_option("--max-weight", max_weight, "filtration weight cap K");
  app.add_option("--format", format, "table | csv | json");
  app.add_option("--output", output_path, "write output here instead of stdout");
  app.add_option("--seed", seed, "seed for randomized checks");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParseError;
  }

  json doc = json::object();
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) {
      std::cerr << "config error: cannot open config file " << config_path << '\n';
      return kConfigError;
    }
    try {
      doc = json::parse(in);
    } catch (const json::parse_error& e) {
      std::cerr << "parse error: " << config_path << ": " << e.what() << '\n';
      return kParseError;
    }
    if (!doc.is_object()) {
      std::cerr << "parse error: config must be a JSON object\n";
      return kParseError;
    }
  }
  if (mode) doc["mode"] = *mode;
  if (field) doc["field"] = *field;
  if (format) doc["format"] = *format;
  if (max_degree) doc["max_degree"] = *max_degree;
  if (max_weight) doc["max_weight"] = *max_weight;
  if (seed) doc["seed"] = *seed;

  RunConfig config;
  try {
    config = parse_config(doc);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  }

  const RunResult result = run(config);
  if (!result.error.empty()) std::cerr << result.error << '\n';
  if (!result.output.empty()) {
    if (output_path.empty()) {
      std::cout << result.output;
    } else {
      std::ofstream out(output_path, std::ios::binary);
      if (!out) {
        std::cerr << "cannot write " << output_path << '\n';
        return kConfigError;
      }
      out << result.output;
    }
  }
  return result.exit_code;
}

}  // namespace confhom::cli
