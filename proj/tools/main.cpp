// bhhl: numerical laboratory for Bohnenblust-Hille and Hardy-Littlewood
// inequality constants. Subcommands: bh-const, hl-const, gen-const,
// interpolate, verify, scan, search.
//
// Exit codes: 0 success, 2 argument/domain error, 3 admissibility error,
// 4 input-data error, 5 resource-cap error.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bhhl/constants.hpp"
#include "bhhl/errors.hpp"
#include "bhhl/exponents.hpp"
#include "bhhl/extended_real.hpp"
#include "bhhl/field.hpp"
#include "bhhl/norms.hpp"
#include "bhhl/search.hpp"
#include "bhhl/tensor.hpp"

namespace {

using nlohmann::json;

std::string fmt(double v) {
  char buf[40];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

json p_to_json(const bhhl::ExtendedReal& p) {
  if (p.is_infinite()) {
    return json("inf");
  }
  return json(p.value());
}

double parse_exponent_token(const std::string& tok) {
  const auto slash = tok.find('/');
  auto parse_num = [&](std::string_view s) -> double {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw std::domain_error("cannot parse exponent '" + tok + "'");
    }
    return v;
  };
  if (slash == std::string::npos) {
    return parse_num(tok);
  }
  const double num = parse_num(std::string_view(tok).substr(0, slash));
  const double den = parse_num(std::string_view(tok).substr(slash + 1));
  if (den == 0.0) {
    throw std::domain_error("zero denominator in exponent '" + tok + "'");
  }
  return num / den;
}

bhhl::MultiExponent parse_q_list(const std::string& csv) {
  std::vector<double> q;
  std::string tok;
  std::istringstream in(csv);
  while (std::getline(in, tok, ',')) {
    tok.erase(0, tok.find_first_not_of(" \t"));
    tok.erase(tok.find_last_not_of(" \t") + 1);
    if (tok.empty()) {
      throw std::domain_error("empty exponent in list '" + csv + "'");
    }
    q.push_back(parse_exponent_token(tok));
  }
  if (q.empty()) {
    throw std::domain_error("exponent list is empty");
  }
  return bhhl::MultiExponent(std::move(q));
}

struct GlobalOpts {
  std::string format = "table";
  bool format_given = false;
  std::int64_t seed = 0;
  int cap = bhhl::kDefaultEnumerationCap;
  double tol = 1e-9;
  std::string out_path;
};

// Output sink honoring --out.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) {
        throw std::domain_error("cannot open output file: " + path);
      }
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

json bound_to_json(const bhhl::BoundReport& r) {
  return json{{"id", bhhl::to_string(r.formula_id)}, {"value", r.value},
              {"field", bhhl::to_string(r.field)},   {"m", r.m},
              {"p", p_to_json(r.p)},                 {"valid", r.valid},
              {"note", r.note},                      {"formula", r.formula}};
}

json norm_to_json(const bhhl::NormEstimate& e) {
  json j{{"value", e.value},
         {"kind", bhhl::to_string(e.kind)},
         {"method", e.method},
         {"iterations", e.iterations}};
  if (e.seed.has_value()) {
    j["seed"] = *e.seed;
  }
  return j;
}

// Key/value CSV for the non-scan commands: scalars of the top-level object.
void emit_kv_csv(std::ostream& os, const json& j) {
  os << "key,value\n";
  for (const auto& [key, value] : j.items()) {
    if (value.is_object() || value.is_array()) {
      continue;
    }
    os << key << "," << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  }
}

void print_table(std::ostream& os, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c >= width.size()) {
        width.push_back(0);
      }
      width[c] = std::max(width[c], row[c].size());
    }
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) {
        line += std::string(width[c] - row[c].size() + 2, ' ');
      }
    }
    os << line << "\n";
  }
}

std::vector<std::string> bound_row(const bhhl::BoundReport& r) {
  return {bhhl::to_string(r.formula_id), fmt(r.value), r.valid ? "yes" : "no",
          r.formula + (r.note.empty() ? "" : "  [" + r.note + "]")};
}

std::string q_to_string(const bhhl::MultiExponent& q) {
  std::string s = "(";
  for (int i = 0; i < q.m(); ++i) {
    s += fmt(q[i]);
    if (i + 1 < q.m()) {
      s += ", ";
    }
  }
  return s + ")";
}

json q_to_json(const bhhl::MultiExponent& q) { return json(q.values()); }

// ---------------------------------------------------------------- bh-const
int cmd_bh_const(const GlobalOpts& g, int m, const std::string& field_name) {
  const bhhl::ScalarField field = bhhl::parse_field(field_name);
  const bhhl::BoundReport upper = bhhl::bh_upper(m, field);
  const bhhl::BoundReport envelope = bhhl::bh_envelope(m, field);
  std::optional<bhhl::BoundReport> lower;
  if (field == bhhl::ScalarField::REAL) {
    lower = bhhl::bh_lower_real(m);
  }

  Sink sink(g.out_path);
  std::ostream& os = sink.stream();
  if (g.format == "json") {
    json bounds = json::array({bound_to_json(upper), bound_to_json(envelope)});
    if (lower.has_value()) {
      bounds.push_back(bound_to_json(*lower));
    }
    os << json{{"command", "bh-const"},
               {"m", m},
               {"field", bhhl::to_string(field)},
               {"bounds", bounds}}
              .dump(2)
       << "\n";
  } else if (g.format == "csv") {
    os << "id,value,valid\n";
    os << bhhl::to_string(upper.formula_id) << "," << fmt(upper.value) << ",1\n";
    os << bhhl::to_string(envelope.formula_id) << "," << fmt(envelope.value) << ",1\n";
    if (lower.has_value()) {
      os << bhhl::to_string(lower->formula_id) << "," << fmt(lower->value) << ",1\n";
    }
  } else {
    os << "bh-const  m = " << m << "  field = " << bhhl::to_string(field) << "\n\n";
    std::vector<std::vector<std::string>> rows{{"id", "value", "valid", "formula"}};
    rows.push_back(bound_row(upper));
    rows.push_back(bound_row(envelope));
    if (lower.has_value()) {
      rows.push_back(bound_row(*lower));
    }
    print_table(os, rows);
  }
  return 0;
}

// ---------------------------------------------------------------- hl-const
int cmd_hl_const(const GlobalOpts& g, int m, const std::string& p_token,
                 const std::string& field_name) {
  const bhhl::ScalarField field = bhhl::parse_field(field_name);
  const bhhl::ExtendedReal p = bhhl::ExtendedReal::parse(p_token);
  if (m < 2) {
    throw std::domain_error("hl-const: m must be >= 2");
  }
  if (!p.ge(2.0 * static_cast<double>(m))) {
    throw std::domain_error("hl-const: p must be >= 2m = " + fmt(2.0 * m) + " (or 'inf')");
  }

  std::vector<bhhl::BoundReport> bounds;
  bounds.push_back(bhhl::hl_upper_sqrt2(m));
  bounds.push_back(bhhl::hl_upper_p_dependent(m, p, field));
  if (p.gt(2.0 * m)) {
    bounds.push_back(bhhl::hl_upper_p_free(m, p, field));
  }
  const bhhl::BoundReport best = bhhl::hl_upper_best(m, p, field);
  std::optional<bhhl::BoundReport> lower;
  if (!p.is_infinite()) {
    lower = bhhl::hl_lower_real(m, p);
  }
  const std::int64_t threshold = bhhl::hl_threshold(m);
  const bool above = p.gt(static_cast<double>(threshold));

  Sink sink(g.out_path);
  std::ostream& os = sink.stream();
  if (g.format == "json") {
    json arr = json::array();
    for (const auto& b : bounds) {
      arr.push_back(bound_to_json(b));
    }
    json j{{"command", "hl-const"},
           {"m", m},
           {"p", p_to_json(p)},
           {"field", bhhl::to_string(field)},
           {"threshold", threshold},
           {"above_threshold", above},
           {"bounds", arr},
           {"best", bound_to_json(best)}};
    j["lower"] = lower.has_value() ? bound_to_json(*lower) : json(nullptr);
    os << j.dump(2) << "\n";
  } else if (g.format == "csv") {
    os << "id,value,valid\n";
    for (const auto& b : bounds) {
      os << bhhl::to_string(b.formula_id) << "," << fmt(b.value) << "," << (b.valid ? 1 : 0)
         << "\n";
    }
    if (lower.has_value()) {
      os << bhhl::to_string(lower->formula_id) << "," << fmt(lower->value) << ",1\n";
    }
    os << "HL_BEST," << fmt(best.value) << ",1\n";
  } else {
    os << "hl-const  m = " << m << "  p = " << p.str()
       << "  field = " << bhhl::to_string(field) << "\n";
    os << "threshold = " << threshold << "  above_threshold = " << (above ? "yes" : "no")
       << "\n\n";
    std::vector<std::vector<std::string>> rows{{"id", "value", "valid", "formula"}};
    for (const auto& b : bounds) {
      rows.push_back(bound_row(b));
    }
    if (lower.has_value()) {
      auto row = bound_row(*lower);
      row[3] += "  [proved for real scalars]";
      rows.push_back(row);
    }
    print_table(os, rows);
    os << "\nbest = " << fmt(best.value) << "  (" << best.note << ")\n";
  }
  return 0;
}

// --------------------------------------------------------------- gen-const
int cmd_gen_const(const GlobalOpts& g, const std::string& q_csv, const std::string& p_token,
                  const std::string& field_name) {
  const bhhl::ScalarField field = bhhl::parse_field(field_name);
  const bhhl::MultiExponent q = parse_q_list(q_csv);
  const bhhl::ExtendedReal p = bhhl::ExtendedReal::parse(p_token);
  const int m = q.m();

  const bhhl::BoundReport bound = p.is_infinite()
                                      ? bhhl::gen_bh_upper(q, field, g.tol)
                                      : bhhl::gen_hl_upper(q, p, field, g.tol);
  const double maxq = q.max_q();
  const double threshold = bhhl::max_q_threshold(m);
  const bool case_i = maxq < threshold;

  std::optional<bhhl::BoundReport> prior;
  if (field == bhhl::ScalarField::COMPLEX && case_i) {
    std::vector<double> sorted = q.values();
    std::sort(sorted.begin(), sorted.end());
    prior = bhhl::gen_bh_upper_prior(bhhl::MultiExponent(std::move(sorted)), g.tol);
  }

  Sink sink(g.out_path);
  std::ostream& os = sink.stream();
  if (g.format == "json") {
    json j{{"command", "gen-const"},
           {"q", q_to_json(q)},
           {"p", p_to_json(p)},
           {"field", bhhl::to_string(field)},
           {"m", m},
           {"maxq", maxq},
           {"threshold", threshold},
           {"case", case_i ? "i" : "ii"},
           {"bound", bound_to_json(bound)}};
    j["prior"] = prior.has_value() ? bound_to_json(*prior) : json(nullptr);
    os << j.dump(2) << "\n";
  } else if (g.format == "csv") {
    json j{{"command", "gen-const"}, {"m", m},
           {"p", p_to_json(p)},      {"field", bhhl::to_string(field)},
           {"maxq", maxq},           {"threshold", threshold},
           {"case", case_i ? "i" : "ii"},
           {"value", bound.value}};
    if (prior.has_value()) {
      j["prior"] = prior->value;
    }
    emit_kv_csv(os, j);
  } else {
    os << "gen-const  m = " << m << "  p = " << p.str()
       << "  field = " << bhhl::to_string(field) << "\n";
    os << "q = " << q_to_string(q) << "\n";
    os << "maxq = " << fmt(maxq) << "  threshold = " << fmt(threshold)
       << "  case = " << (case_i ? "i" : "ii") << "\n\n";
    os << "value = " << fmt(bound.value) << "  (" << bhhl::to_string(bound.formula_id) << ": "
       << bound.note << ")\n";
    if (prior.has_value()) {
      os << "prior = " << fmt(prior->value)
         << "  (GEN_PRIOR, ascending rearrangement; smaller value = improvement)\n";
    }
  }
  return 0;
}

// ------------------------------------------------------------- interpolate
int cmd_interpolate(const GlobalOpts& g, const std::string& q_csv, const std::string& p_token,
                    std::optional<double> s_opt) {
  const bhhl::MultiExponent q = parse_q_list(q_csv);
  const bhhl::ExtendedReal p = bhhl::ExtendedReal::parse(p_token);
  const bhhl::InterpolationDecomposition d =
      bhhl::interpolation_weights(q, p, s_opt, g.tol);

  std::vector<double> residuals(q.m());
  double theta_sum = 0.0;
  double max_residual = 0.0;
  for (int j = 0; j < q.m(); ++j) {
    theta_sum += d.thetas[j];
    residuals[j] =
        std::abs(1.0 / q[j] - (d.thetas[j] / d.lambda + (1.0 - d.thetas[j]) / d.s));
    max_residual = std::max(max_residual, residuals[j]);
  }

  Sink sink(g.out_path);
  std::ostream& os = sink.stream();
  if (g.format == "json") {
    os << json{{"command", "interpolate"},
               {"q", q_to_json(q)},
               {"p", p_to_json(p)},
               {"s", d.s},
               {"s_source", s_opt.has_value() ? "given" : "default"},
               {"lambda", d.lambda},
               {"thetas", d.thetas},
               {"theta_sum", theta_sum},
               {"vertices", d.vertices},
               {"residuals", residuals},
               {"max_residual", max_residual}}
              .dump(2)
       << "\n";
  } else if (g.format == "csv") {
    os << "j,q_j,theta_j,residual_j\n";
    for (int j = 0; j < q.m(); ++j) {
      os << (j + 1) << "," << fmt(q[j]) << "," << fmt(d.thetas[j]) << ","
         << fmt(residuals[j]) << "\n";
    }
  } else {
    os << "interpolate  m = " << q.m() << "  p = " << p.str() << "  s = " << fmt(d.s) << " ("
       << (s_opt.has_value() ? "given" : "default midpoint") << ")\n";
    os << "lambda = " << fmt(d.lambda) << "\n\n";
    std::vector<std::vector<std::string>> rows{{"j", "q_j", "theta_j", "vertex", "residual"}};
    for (int j = 0; j < q.m(); ++j) {
      std::string vertex = "(";
      for (int i = 0; i < q.m(); ++i) {
        vertex += fmt(d.vertices[j][i]);
        if (i + 1 < q.m()) {
          vertex += ", ";
        }
      }
      vertex += ")";
      rows.push_back({std::to_string(j + 1), fmt(q[j]), fmt(d.thetas[j]), vertex,
                      fmt(residuals[j])});
    }
    print_table(os, rows);
    os << "\ntheta_sum = " << fmt(theta_sum)
       << "  max_residual = " << fmt(max_residual) << "\n";
  }
  return 0;
}

// ------------------------------------------------------------------ verify
int cmd_verify(const GlobalOpts& g, const std::string& tensor_path, const std::string& q_csv,
               const std::string& p_token) {
  const bhhl::CoefficientTensor t = bhhl::CoefficientTensor::load(tensor_path);
  const bhhl::MultiExponent q = parse_q_list(q_csv);
  const bhhl::ExtendedReal p = bhhl::ExtendedReal::parse(p_token);
  if (q.m() != t.m()) {
    throw bhhl::tensor_format_error("dimension mismatch: tensor has m = " +
                                    std::to_string(t.m()) + " slots, exponent list has " +
                                    std::to_string(q.m()));
  }

  const bhhl::BoundReport bound = p.is_infinite()
                                      ? bhhl::gen_bh_upper(q, t.field(), g.tol)
                                      : bhhl::gen_hl_upper(q, p, t.field(), g.tol);
  const bhhl::RatioCertificate cert = bhhl::certified_ratio(t, q, p, g.cap);
  const bool pass = cert.ratio <= bound.value + 1e-9;

  Sink sink(g.out_path);
  std::ostream& os = sink.stream();
  if (g.format == "json") {
    os << json{{"command", "verify"},
               {"tensor", {{"path", tensor_path},
                           {"m", t.m()},
                           {"n", t.n()},
                           {"field", bhhl::to_string(t.field())}}},
               {"q", q_to_json(q)},
               {"p", p_to_json(p)},
               {"mixed_norm", cert.mixed},
               {"denominator", norm_to_json(cert.denominator)},
               {"ratio", cert.ratio},
               {"bound", bound_to_json(bound)},
               {"pass", pass}}
              .dump(2)
       << "\n";
  } else if (g.format == "csv") {
    json j{{"command", "verify"},     {"m", t.m()},
           {"n", t.n()},              {"field", bhhl::to_string(t.field())},
           {"mixed_norm", cert.mixed}, {"denominator", cert.denominator.value},
           {"denominator_kind", bhhl::to_string(cert.denominator.kind)},
           {"ratio", cert.ratio},     {"bound", bound.value},
           {"pass", pass}};
    emit_kv_csv(os, j);
  } else {
    os << "verify  tensor = " << tensor_path << "  (m = " << t.m() << ", n = " << t.n()
       << ", field = " << bhhl::to_string(t.field()) << ")\n";
    os << "q = " << q_to_string(q) << "  p = " << p.str() << "\n\n";
    os << "mixed_norm  = " << fmt(cert.mixed) << "\n";
    os << "denominator = " << fmt(cert.denominator.value) << "  ("
       << bhhl::to_string(cert.denominator.kind) << ", " << cert.denominator.method << ")\n";
    os << "ratio       = " << fmt(cert.ratio) << "\n";
    os << "bound       = " << fmt(bound.value) << "  ("
       << bhhl::to_string(bound.formula_id) << ": " << bound.note << ")\n";
    os << (pass ? "PASS" : "FAIL") << " (ratio <= bound + 1e-9)\n";
  }
  return 0;
}

// -------------------------------------------------------------------- scan
int cmd_scan(const GlobalOpts& g, int m, double p_min, double p_max, double step,
             const std::string& field_name) {
  const bhhl::ScalarField field = bhhl::parse_field(field_name);
  if (m < 2) {
    throw std::domain_error("scan: m must be >= 2");
  }
  if (!(p_min >= 2.0 * m)) {
    throw std::domain_error("scan: p-min must be >= 2m");
  }
  if (!(p_min < p_max)) {
    throw std::domain_error("scan: p-min must be < p-max");
  }
  if (!(step > 0.0)) {
    throw std::domain_error("scan: step must be > 0");
  }
  const double threshold = static_cast<double>(bhhl::hl_threshold(m));

  struct Row {
    double p;
    double legacy;
    double p_dependent;
    std::optional<double> p_free;
    double best;
    double lower;
    bool above;
  };
  std::vector<Row> rows;
  for (long long k = 0;; ++k) {
    const double p = p_min + static_cast<double>(k) * step;
    if (p > p_max + 1e-9) {
      break;
    }
    const bhhl::ExtendedReal pe = bhhl::ExtendedReal::finite(p);
    Row row;
    row.p = p;
    row.legacy = bhhl::hl_upper_sqrt2(m).value;
    row.p_dependent = bhhl::hl_upper_p_dependent(m, pe, field).value;
    row.p_free = std::nullopt;
    if (p > 2.0 * m) {
      const bhhl::BoundReport f = bhhl::hl_upper_p_free(m, pe, field);
      if (f.valid) {
        row.p_free = f.value;
      }
    }
    row.best = bhhl::hl_upper_best(m, pe, field).value;
    row.lower = bhhl::hl_lower_real(m, pe).value;
    row.above = p > threshold;
    rows.push_back(row);
  }

  Sink sink(g.out_path);
  std::ostream& os = sink.stream();
  const std::string format = g.format_given ? g.format : "csv";
  if (format == "json") {
    json arr = json::array();
    for (const auto& r : rows) {
      json jr{{"m", m},        {"p", r.p},
              {"legacy", r.legacy}, {"p_dependent", r.p_dependent},
              {"best", r.best},     {"lower", r.lower},
              {"above_threshold", r.above}};
      jr["p_free"] = r.p_free.has_value() ? json(*r.p_free) : json(nullptr);
      arr.push_back(jr);
    }
    os << json{{"command", "scan"},
               {"m", m},
               {"field", bhhl::to_string(field)},
               {"threshold", threshold},
               {"rows", arr}}
              .dump(2)
       << "\n";
  } else if (format == "table") {
    std::vector<std::vector<std::string>> table{
        {"m", "p", "legacy", "p_dependent", "p_free", "best", "lower", "above_threshold"}};
    for (const auto& r : rows) {
      table.push_back({std::to_string(m), fmt(r.p), fmt(r.legacy), fmt(r.p_dependent),
                       r.p_free.has_value() ? fmt(*r.p_free) : "", fmt(r.best), fmt(r.lower),
                       r.above ? "1" : "0"});
    }
    print_table(os, table);
  } else {
    os << "m,p,legacy,p_dependent,p_free,best,lower,above_threshold\n";
    for (const auto& r : rows) {
      os << m << "," << fmt(r.p) << "," << fmt(r.legacy) << "," << fmt(r.p_dependent) << ","
         << (r.p_free.has_value() ? fmt(*r.p_free) : "") << "," << fmt(r.best) << ","
         << fmt(r.lower) << "," << (r.above ? 1 : 0) << "\n";
    }
  }
  return 0;
}

// ------------------------------------------------------------------ search
int cmd_search(const GlobalOpts& g, int m, int n, const std::string& p_token,
               const std::string& q_csv, std::int64_t iters) {
  const bhhl::MultiExponent q = parse_q_list(q_csv);
  const bhhl::ExtendedReal p = bhhl::ExtendedReal::parse(p_token);
  const bhhl::SearchResult res = bhhl::search_extremal(m, n, p, q, iters, g.seed, g.cap);
  const std::optional<double> gap =
      res.bound.has_value() ? std::optional<double>(*res.bound - res.ratio) : std::nullopt;

  Sink sink(g.out_path);
  std::ostream& os = sink.stream();
  if (g.format == "json") {
    json j{{"command", "search"},
           {"m", m},
           {"n", n},
           {"p", p_to_json(p)},
           {"q", q_to_json(q)},
           {"iters", iters},
           {"seed", res.seed},
           {"evaluations", res.iterations},
           {"ratio", res.ratio},
           {"tensor", json::parse(res.tensor.to_json())}};
    j["bound"] = res.bound.has_value() ? json(*res.bound) : json(nullptr);
    j["gap"] = gap.has_value() ? json(*gap) : json(nullptr);
    os << j.dump(2) << "\n";
  } else if (g.format == "csv") {
    json j{{"command", "search"}, {"m", m},          {"n", n},
           {"p", p_to_json(p)},   {"iters", iters},  {"seed", res.seed},
           {"ratio", res.ratio}};
    if (res.bound.has_value()) {
      j["bound"] = *res.bound;
      j["gap"] = *gap;
    }
    emit_kv_csv(os, j);
  } else {
    os << "search  m = " << m << "  n = " << n << "  p = " << p.str()
       << "  q = " << q_to_string(q) << "\n";
    os << "iters = " << iters << "  seed = " << res.seed
       << "  evaluations = " << res.iterations << "\n\n";
    os << "ratio = " << fmt(res.ratio) << "\n";
    if (res.bound.has_value()) {
      os << "bound = " << fmt(*res.bound) << "\n";
      os << "gap   = " << fmt(*gap) << "\n";
    } else {
      os << "bound = (none: exponent vector not admissible)\n";
    }
    os << "tensor = " << res.tensor.to_json() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "bhhl: Bohnenblust-Hille / Hardy-Littlewood inequality constants "
      "laboratory.\nJSON output schemas: every command emits an object with "
      "'command' plus the values shown in table mode; bound objects carry "
      "id/value/field/m/p/valid/note/formula."};
  app.require_subcommand(1);

  GlobalOpts g;
  auto* format_opt =
      app.add_option("--format", g.format, "Output format (default: table; scan defaults to csv)")
          ->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_option("--seed", g.seed, "Random seed for search (default 0)");
  app.add_option("--cap", g.cap,
                 "Exact-enumeration work cap on n(m-1) (default 24, hard limit 28)")
      ->check(CLI::Range(1, 28));
  app.add_option("--tol", g.tol, "Admissibility tolerance on exponent sums (default 1e-9)");
  app.add_option("--out", g.out_path, "Write output to this file instead of stdout");

  int m = 0;
  int n = 0;
  std::string field = "real";
  std::string p_token;
  std::string q_csv;
  std::string tensor_path;
  double p_min = 0.0;
  double p_max = 0.0;
  double step = 1.0;
  double s_value = 0.0;
  std::int64_t iters = 10000;

  CLI::App* c_bh = app.add_subcommand("bh-const", "Bohnenblust-Hille constant bounds");
  c_bh->fallthrough();
  c_bh->add_option("--m", m, "Number of linear slots (>= 2)")->required();
  c_bh->add_option("--field", field, "real | complex");

  CLI::App* c_hl = app.add_subcommand("hl-const", "Hardy-Littlewood constant bounds");
  c_hl->fallthrough();
  c_hl->add_option("--m", m, "Number of linear slots (>= 2)")->required();
  c_hl->add_option("--p", p_token, "Exponent p >= 2m, or 'inf'")->required();
  c_hl->add_option("--field", field, "real | complex");

  CLI::App* c_gen = app.add_subcommand("gen-const", "Generalized (mixed-exponent) bounds");
  c_gen->fallthrough();
  c_gen->add_option("--q", q_csv, "Comma-separated exponents; fractions allowed (4/3)")
      ->required();
  c_gen->add_option("--p", p_token, "Exponent p > 2m, or 'inf'")->required();
  c_gen->add_option("--field", field, "real | complex");

  CLI::App* c_interp = app.add_subcommand("interpolate", "Exponent interpolation weights");
  c_interp->fallthrough();
  c_interp->add_option("--q", q_csv, "Comma-separated exponents")->required();
  c_interp->add_option("--p", p_token, "Exponent p > 2m, or 'inf'")->required();
  CLI::Option* s_opt_flag = c_interp->add_option("--s", s_value, "Interpolation endpoint in (max q, 2]");

  CLI::App* c_verify = app.add_subcommand("verify", "Certified ratio check for a tensor file");
  c_verify->fallthrough();
  c_verify->add_option("--tensor", tensor_path, "Tensor JSON file")->required();
  c_verify->add_option("--q", q_csv, "Comma-separated exponents")->required();
  c_verify->add_option("--p", p_token, "Exponent p, or 'inf'")->required();

  CLI::App* c_scan = app.add_subcommand("scan", "Bounds vs p as CSV rows");
  c_scan->fallthrough();
  c_scan->add_option("--m", m, "Number of linear slots (>= 2)")->required();
  c_scan->add_option("--p-min", p_min, "Start of the p range (>= 2m)")->required();
  c_scan->add_option("--p-max", p_max, "End of the p range")->required();
  c_scan->add_option("--step", step, "p increment (> 0)")->required();
  c_scan->add_option("--field", field, "real | complex");

  CLI::App* c_search = app.add_subcommand("search", "Randomized extremal tensor search");
  c_search->fallthrough();
  c_search->add_option("--m", m, "Number of linear slots")->required();
  c_search->add_option("--n", n, "Dimension per slot")->required();
  c_search->add_option("--p", p_token, "Exponent p, or 'inf'")->required();
  c_search->add_option("--q", q_csv, "Comma-separated exponents")->required();
  c_search->add_option("--iters", iters, "Candidate evaluations (default 10000)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  g.format_given = format_opt->count() > 0;

  try {
    if (c_bh->parsed()) {
      return cmd_bh_const(g, m, field);
    }
    if (c_hl->parsed()) {
      return cmd_hl_const(g, m, p_token, field);
    }
    if (c_gen->parsed()) {
      return cmd_gen_const(g, q_csv, p_token, field);
    }
    if (c_interp->parsed()) {
      std::optional<double> s =
          s_opt_flag->count() > 0 ? std::optional<double>(s_value) : std::nullopt;
      return cmd_interpolate(g, q_csv, p_token, s);
    }
    if (c_verify->parsed()) {
      return cmd_verify(g, tensor_path, q_csv, p_token);
    }
    if (c_scan->parsed()) {
      return cmd_scan(g, m, p_min, p_max, step, field);
    }
    if (c_search->parsed()) {
      return cmd_search(g, m, n, p_token, q_csv, iters);
    }
    std::cerr << "no subcommand selected\n";
    return 2;
  } catch (const bhhl::admissibility_error& e) {
    std::cerr << "admissibility error: " << e.what() << "\n";
    return 3;
  } catch (const bhhl::tensor_format_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 4;
  } catch (const bhhl::cap_exceeded_error& e) {
    std::cerr << "cap error: " << e.what() << "\n";
    return 5;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cerr << "run 'bhhl <subcommand> --help' for usage\n";
    return 2;
  }
}
