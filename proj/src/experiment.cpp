// Copyright gfplin contributors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "gfplin/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <sstream>
#include <json.hpp>
#include "gfplin/recover.hpp"
#include "gfplin/solve.hpp"

namespace gfplin
{

using json = nlohmann::json;

namespace
{

std::string num(double v)
{
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string opt(const std::optional<double> &v)
{
  return v ? num(*v) : "N/A";
}

json opt_json(const std::optional<double> &v)
{
  return v ? json(*v) : json(nullptr);
}

double parse_double(std::string_view s, const char *what)
{
  const std::string str(s);
  char *end = nullptr;
  const double v = std::strtod(str.c_str(), &end);
  if (str.empty() || end != str.c_str() + str.size())
  {
    fail(ErrorCode::Parse, std::string("cannot parse ") + what + " from \"" + str + "\"");
  }
  return v;
}

std::optional<double> env_double(const char *name)
{
  const char *v = std::getenv(name);
  if (v == nullptr || *v == '\0')
  {
    return std::nullopt;
  }
  return parse_double(v, name);
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true)
  {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos)
    {
      break;
    }
    start = pos + 1;
  }
  return out;
}

void update_min(std::optional<double> &m, double v)
{
  m = m ? std::min(*m, v) : v;
}

void update_max(std::optional<double> &m, double v)
{
  m = m ? std::max(*m, v) : v;
}

}  // namespace

ScalingChoice parse_scaling(std::string_view s)
{
  ScalingChoice c;
  if (s.empty() || s == "none")
  {
    return c;
  }
  if (s == "maxnorm" || s == "max_norm")
  {
    c.mode = ScalingMode::MaxNorm;
    return c;
  }
  if (s.rfind("tropical", 0) == 0)
  {
    c.mode = ScalingMode::Tropical;
    c.index = 0;
    if (s.size() > 8)
    {
      if (s[8] != ':')
      {
        fail(ErrorCode::Parse, "expected tropical:<j>");
      }
      const double j = parse_double(s.substr(9), "tropical root index");
      if (j < 1 || j != std::floor(j))
      {
        fail(ErrorCode::Parse, "tropical root index is 1-based");
      }
      c.index = static_cast<int>(j) - 1;
    }
    return c;
  }
  if (s.rfind("user:", 0) == 0)
  {
    const auto parts = split(s.substr(5), ',');
    if (parts.size() != 2)
    {
      fail(ErrorCode::Parse, "expected user:<beta>,<gamma>");
    }
    c.mode = ScalingMode::User;
    c.beta = parse_double(parts[0], "beta");
    c.gamma = parse_double(parts[1], "gamma");
    if (c.beta == 0.0 || c.gamma == 0.0)
    {
      fail(ErrorCode::InvalidArgument, "beta and gamma must be nonzero");
    }
    return c;
  }
  fail(ErrorCode::Parse, "unknown scaling \"" + std::string(s) + "\"");
}

ScalingSpec resolve_scaling(const MatrixPolynomial &P, const ScalingChoice &c)
{
  switch (c.mode)
  {
    case ScalingMode::None:
      return ScalingSpec::user(1.0, 1.0);
    case ScalingMode::MaxNorm:
      return max_norm_scaling(P);
    case ScalingMode::Tropical:
    {
      const auto specs = tropical_scalings(P);
      if (c.index < 0 || c.index >= static_cast<int>(specs.size()))
      {
        fail(ErrorCode::IndexOutOfRange, "tropical root " + std::to_string(c.index + 1) +
                                             " requested, " + std::to_string(specs.size()) +
                                             " available");
      }
      return specs[c.index];
    }
    case ScalingMode::User:
      return ScalingSpec::user(c.beta, c.gamma);
  }
  return {};
}

std::vector<LinearizationKind> parse_kinds(std::string_view s)
{
  std::vector<LinearizationKind> out;
  for (auto tok : split(s, ','))
  {
    const auto kind = parse_kind(tok);
    if (!kind || *kind == LinearizationKind::Custom)
    {
      fail(ErrorCode::Parse, "unknown linearization \"" + std::string(tok) + "\"");
    }
    if (std::find(out.begin(), out.end(), *kind) == out.end())
    {
      out.push_back(*kind);
    }
  }
  if (out.empty())
  {
    fail(ErrorCode::InvalidArgument, "at least one linearization is required");
  }
  return out;
}

Tolerances Tolerances::from_env()
{
  Tolerances t;
  if (auto v = env_double("GFPLIN_BOUND_RTOL"))
  {
    t.bound_rtol = *v;
  }
  if (auto v = env_double("GFPLIN_SIMPLE_TOL"))
  {
    t.simple_rtol = *v;
  }
  if (auto v = env_double("GFPLIN_ZERO_TOL"))
  {
    t.zero_rtol = *v;
  }
  if (auto v = env_double("GFPLIN_UPPER_SCALE"))
  {
    t.upper_scale = *v;
  }
  return t;
}

std::optional<double> DiagnosticRow::cond_ratio() const
{
  if (kappa_P && kappa_L)
  {
    return *kappa_L / *kappa_P;
  }
  return std::nullopt;
}

std::optional<double> DiagnosticRow::back_ratio() const
{
  if (eta_P && eta_L)
  {
    return *eta_L > 0.0 ? *eta_P / *eta_L : std::numeric_limits<double>::infinity();
  }
  return std::nullopt;
}

namespace
{

bool is_excluded_kind_error(const Error &e)
{
  return e.code() == ErrorCode::NotSimple || e.code() == ErrorCode::ExcludedEigenvalue ||
         e.code() == ErrorCode::ExtractionFailed;
}

void finish_row(DiagnosticRow &row, const Tolerances &tol)
{
  bool pass = true;
  if (auto c = row.cond_ratio(); c && row.cond_upper)
  {
    pass = pass && within_bounds(*c, row.cond_lower.value_or(0.0), *row.cond_upper,
                                 tol.bound_rtol);
  }
  if (auto b = row.back_ratio(); b && row.back_upper)
  {
    pass = pass && below_upper(*b, *row.back_upper, tol.bound_rtol);
  }
  row.pass = pass;
}

void run_one(const MatrixPolynomial &P, const std::vector<double> &norms,
             const std::optional<GrowthFactors> &g, LinearizationKind kind, const Tolerances &tol,
             std::vector<DiagnosticRow> &rows)
{
  const int n = P.dim(), k = P.grade();
  const Pencil L = build(P, kind);
  const PencilNorms ln = pencil_norms(L);
  const PencilEigenResult res = solve_pencil(L);
  const std::string lin(to_string(kind));

  double max_abs = 0.0;
  for (const auto &e : res.finite)
  {
    max_abs = std::max(max_abs, std::abs(e.delta));
  }

  bool a0_ok = false, ak_ok = false;
  if (kind == LinearizationKind::D1)
  {
    a0_ok = is_nonsingular(P.coeff(0));
  }
  if (kind == LinearizationKind::Dk)
  {
    ak_ok = is_nonsingular(P.coeff(k));
  }

  int index = 0;
  for (const auto &e : res.finite)
  {
    const Complex d = e.delta;
    DiagnosticRow row;
    row.index = ++index;
    row.delta = d;
    row.lin = lin;
    if (d == 0.0 || std::abs(d) < tol.zero_rtol * max_abs)
    {
      row.excluded = true;
      row.note = "zero eigenvalue";
      rows.push_back(std::move(row));
      continue;
    }
    DiagnosticRow left;
    try
    {
      // Eigenvectors of P for kappa_P, recovered by the modulus rule.
      const int bx = kind == LinearizationKind::T || kind == LinearizationKind::R
                         ? extraction_block(LinearizationKind::T, d, k)
                         : (std::abs(d) >= 1.0 ? 1 : k);
      Vector zr = e.z_right, zl = e.z_left;
      if (kind == LinearizationKind::R)
      {
        const auto M = structural_matrices(k, n);
        zr = M.R * (M.S * zr);
        zl = M.R * (M.S * zl);
      }
      const Vector x = take_block(zr, bx, n);
      const Vector y = kind == LinearizationKind::C1 ? take_block(zl, 1, n)
                                                     : take_block(zl, bx, n);
      row.kappa_P = cond_number(P, d, x, y, norms, tol.simple_rtol);
      row.kappa_L = cond_number_pencil(L, ln, d, e.z_right, e.z_left, tol.simple_rtol);

      // Right eigenvector extracted by the rule the backward-error theorem states.
      int bt = bx;
      if (kind == LinearizationKind::D1)
      {
        bt = 1;
      }
      else if (kind == LinearizationKind::Dk)
      {
        bt = k;
      }
      const Vector xt = take_block(zr, bt, n);
      row.norm_ratio = zr.norm() / xt.norm();
      row.eta_P = backward_error_right(P, norms, xt, d);
      row.eta_L = backward_error_pencil_right(L, ln, e.z_right, d);

      if (kind == LinearizationKind::C1)
      {
        left.index = row.index;
        left.delta = d;
        left.lin = "C1-left";
        const Vector w1 = take_block(e.z_left, 1, n);
        left.norm_ratio = e.z_left.norm() / w1.norm();
        left.eta_P = backward_error_left(P, norms, w1, d);
        left.eta_L = backward_error_pencil_left(L, ln, e.z_left, d);
      }
    }
    catch (const Error &err)
    {
      if (!is_excluded_kind_error(err))
      {
        throw;
      }
      DiagnosticRow ex;
      ex.index = row.index;
      ex.delta = d;
      ex.lin = lin;
      ex.excluded = true;
      ex.note = err.what();
      rows.push_back(std::move(ex));
      continue;
    }

    if (g)
    {
      const double s = tol.upper_scale;
      switch (kind)
      {
        case LinearizationKind::T:
        case LinearizationKind::R:
        {
          const auto b = bound_T_cond(*g, d, k);
          row.cond_lower = b.lower;
          row.cond_upper = b.upper * s;
          row.back_upper = bound_T_back(*g, d, k, *row.norm_ratio) * s;
          break;
        }
        case LinearizationKind::D1:
        case LinearizationKind::Dk:
        {
          const bool d1 = kind == LinearizationKind::D1;
          const bool ok = d1 ? a0_ok : ak_ok;
          const bool cond_applies = ok && (d1 ? std::abs(d) >= 1.0 : std::abs(d) <= 1.0);
          if (cond_applies)
          {
            const auto b = bound_Dt_cond(*g, k);
            row.cond_lower = b.lower;
            row.cond_upper = b.upper * s;
          }
          if (ok)
          {
            row.back_upper = bound_Dt_back(*g, k, *row.norm_ratio) * s;
          }
          break;
        }
        case LinearizationKind::C1:
        {
          const auto b = bound_C1_cond(*g, d, k);
          row.cond_lower = b.lower;
          row.cond_upper = b.upper * s;
          row.back_upper = bound_C1_back(*g, k, *row.norm_ratio, Side::Right) * s;
          left.back_upper = bound_C1_back(*g, k, *left.norm_ratio, Side::Left) * s;
          break;
        }
        case LinearizationKind::Custom:
          break;
      }
    }
    finish_row(row, tol);
    rows.push_back(std::move(row));
    if (kind == LinearizationKind::C1)
    {
      finish_row(left, tol);
      rows.push_back(std::move(left));
    }
  }
}

}  // namespace

RatiosReport run_ratios(const MatrixPolynomial &P, const std::vector<LinearizationKind> &kinds,
                        const Tolerances &tol, const ScalingSpec &scaling)
{
  if (kinds.empty())
  {
    fail(ErrorCode::InvalidArgument, "at least one linearization is required");
  }
  RatiosReport r;
  r.n = P.dim();
  r.k = P.grade();
  r.scaling = scaling;
  r.norms = coeff_norms(P);
  if (r.norms.front() > 0.0 && r.norms.back() > 0.0)
  {
    r.growth = growth_factors(r.norms);
  }
  // D1 and Dk are not linearizations when A_0 or A_k is singular; they are reported as N/A.
  std::vector<std::string> unavailable;
  for (auto kind : kinds)
  {
    try
    {
      run_one(P, r.norms, r.growth, kind, tol, r.rows);
    }
    catch (const Error &e)
    {
      const bool dl = kind == LinearizationKind::D1 || kind == LinearizationKind::Dk;
      if (!dl || e.code() != ErrorCode::SingularPencil)
      {
        throw;
      }
      unavailable.emplace_back(to_string(kind));
    }
  }

  std::map<std::string, std::size_t> slot;
  for (const auto &row : r.rows)
  {
    if (!slot.count(row.lin))
    {
      slot[row.lin] = r.summaries.size();
      LinSummary fresh;
      fresh.lin = row.lin;
      r.summaries.push_back(std::move(fresh));
    }
    auto &s = r.summaries[slot[row.lin]];
    if (row.excluded)
    {
      continue;
    }
    s.count++;
    if (auto c = row.cond_ratio())
    {
      update_min(s.min_cond_ratio, *c);
      update_max(s.max_cond_ratio, *c);
    }
    if (auto b = row.back_ratio())
    {
      update_min(s.min_back_ratio, *b);
      update_max(s.max_back_ratio, *b);
    }
    if (!row.pass)
    {
      s.violations++;
      r.violations++;
    }
  }
  for (const auto &lin : unavailable)
  {
    LinSummary na;
    na.lin = lin;
    r.summaries.push_back(std::move(na));
  }
  const bool any = std::any_of(r.summaries.begin(), r.summaries.end(),
                               [](const LinSummary &s) { return s.count > 0; });
  if (!any)
  {
    fail(ErrorCode::NoEigenvalues, "no simple finite nonzero eigenvalues");
  }
  return r;
}

std::string report_csv(const RatiosReport &r)
{
  std::ostringstream out;
  out << csv_header << "\n";
  for (const auto &row : r.rows)
  {
    out << row.index << ',' << num(row.delta.real()) << ',' << num(row.delta.imag()) << ','
        << num(std::abs(row.delta)) << ',' << row.lin << ',' << opt(row.kappa_P) << ','
        << opt(row.kappa_L) << ',' << opt(row.cond_ratio()) << ',' << opt(row.cond_lower)
        << ',' << opt(row.cond_upper) << ',' << opt(row.eta_P) << ',' << opt(row.eta_L) << ','
        << opt(row.back_ratio()) << ',' << opt(row.back_upper) << ',' << opt(row.norm_ratio)
        << ',' << (row.excluded ? "N/A" : (row.pass ? "1" : "0")) << "\n";
  }
  return out.str();
}

std::string report_json(const RatiosReport &r)
{
  json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["scaling"] = {{"beta", {r.scaling.beta.real(), r.scaling.beta.imag()}},
                  {"gamma", {r.scaling.gamma.real(), r.scaling.gamma.imag()}},
                  {"provenance", std::string(to_string(r.scaling.provenance))}};
  j["norms"] = r.norms;
  if (r.growth)
  {
    const auto &g = *r.growth;
    j["growth"] = {{"rho", g.rho},         {"rho1", g.rho1}, {"rho2", g.rho2},
                   {"rho_prime", g.rho_prime}, {"nu", g.nu},     {"tau", g.tau}};
  }
  else
  {
    j["growth"] = nullptr;
  }
  json rows = json::array();
  for (const auto &row : r.rows)
  {
    json o;
    o["index"] = row.index;
    o["delta"] = {row.delta.real(), row.delta.imag()};
    o["abs_delta"] = std::abs(row.delta);
    o["lin"] = row.lin;
    o["kappa_P"] = opt_json(row.kappa_P);
    o["kappa_L"] = opt_json(row.kappa_L);
    o["cond_ratio"] = opt_json(row.cond_ratio());
    o["cond_lower"] = opt_json(row.cond_lower);
    o["cond_upper"] = opt_json(row.cond_upper);
    o["eta_P"] = opt_json(row.eta_P);
    o["eta_L"] = opt_json(row.eta_L);
    o["back_ratio"] = opt_json(row.back_ratio());
    o["back_upper"] = opt_json(row.back_upper);
    o["norm_ratio"] = opt_json(row.norm_ratio);
    o["pass"] = row.excluded ? json(nullptr) : json(row.pass);
    if (!row.note.empty())
    {
      o["note"] = row.note;
    }
    rows.push_back(std::move(o));
  }
  j["rows"] = std::move(rows);
  json summary = json::object();
  for (const auto &s : r.summaries)
  {
    summary[s.lin] = {{"count", s.count},
                      {"min_cond_ratio", opt_json(s.min_cond_ratio)},
                      {"max_cond_ratio", opt_json(s.max_cond_ratio)},
                      {"min_back_ratio", opt_json(s.min_back_ratio)},
                      {"max_back_ratio", opt_json(s.max_back_ratio)},
                      {"violations", s.violations}};
  }
  j["summary"] = std::move(summary);
  j["violations"] = r.violations;
  return j.dump(2) + "\n";
}

std::string report_summary_text(const RatiosReport &r)
{
  std::ostringstream out;
  out << "n = " << r.n << ", k = " << r.k << ", beta = " << num(r.scaling.beta.real())
      << ", gamma = " << num(r.scaling.gamma.real()) << " ("
      << to_string(r.scaling.provenance) << ")\n";
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%-8s %6s %12s %12s %12s %12s %6s\n", "lin", "count",
                "min kL/kP", "max kL/kP", "min eP/eL", "max eP/eL", "viol");
  out << buf;
  auto cell = [](const std::optional<double> &v)
  {
    char b[32];
    if (v)
    {
      std::snprintf(b, sizeof(b), "%12.4g", *v);
    }
    else
    {
      std::snprintf(b, sizeof(b), "%12s", "N/A");
    }
    return std::string(b);
  };
  for (const auto &s : r.summaries)
  {
    std::snprintf(buf, sizeof(buf), "%-8s %6d ", s.lin.c_str(), s.count);
    out << buf << cell(s.min_cond_ratio) << ' ' << cell(s.max_cond_ratio) << ' '
        << cell(s.min_back_ratio) << ' ' << cell(s.max_back_ratio) << ' ';
    std::snprintf(buf, sizeof(buf), "%6d\n", s.violations);
    out << buf;
  }
  out << "bound violations: " << r.violations << "\n";
  return out.str();
}

std::vector<DiagnosticRow> parse_csv(const std::string &text)
{
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != csv_header)
  {
    fail(ErrorCode::Parse, "diagnostics CSV header mismatch");
  }
  auto field = [](std::string_view s) -> std::optional<double>
  {
    if (s == "N/A")
    {
      return std::nullopt;
    }
    return parse_double(s, "diagnostics field");
  };
  std::vector<DiagnosticRow> rows;
  while (std::getline(in, line))
  {
    if (line.empty())
    {
      continue;
    }
    const auto f = split(line, ',');
    if (f.size() != 16)
    {
      fail(ErrorCode::Parse, "diagnostics row must have 16 fields");
    }
    DiagnosticRow row;
    row.index = static_cast<int>(parse_double(f[0], "index"));
    row.delta = {parse_double(f[1], "delta_re"), parse_double(f[2], "delta_im")};
    row.lin = std::string(f[4]);
    row.kappa_P = field(f[5]);
    row.kappa_L = field(f[6]);
    row.cond_lower = field(f[8]);
    row.cond_upper = field(f[9]);
    row.eta_P = field(f[10]);
    row.eta_L = field(f[11]);
    row.back_upper = field(f[13]);
    row.norm_ratio = field(f[14]);
    row.excluded = f[15] == "N/A";
    row.pass = f[15] == "1";
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string render_svg(const std::vector<DiagnosticRow> &rows, const std::string &title)
{
  struct Series
  {
    std::string name;
    bool dashed;
    std::vector<std::pair<int, double>> pts;
  };
  std::vector<Series> series;
  std::map<std::string, std::size_t> slot;
  int nmax = 0;
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  auto add = [&](const std::string &name, bool dashed, int i, double v)
  {
    if (!(v > 0.0) || !std::isfinite(v))
    {
      return;
    }
    if (!slot.count(name))
    {
      slot[name] = series.size();
      series.push_back({name, dashed, {}});
    }
    series[slot[name]].pts.emplace_back(i, v);
    nmax = std::max(nmax, i);
    lo = std::min(lo, std::log10(v));
    hi = std::max(hi, std::log10(v));
  };
  for (const auto &row : rows)
  {
    if (row.excluded)
    {
      continue;
    }
    if (auto c = row.cond_ratio())
    {
      add(row.lin + " cond", false, row.index, *c);
    }
    if (auto b = row.back_ratio())
    {
      add(row.lin + " back", true, row.index, *b);
    }
  }
  if (series.empty())
  {
    fail(ErrorCode::NoEigenvalues, "nothing to plot");
  }

  const double ylo = std::floor(lo), yhi = std::max(std::ceil(hi), ylo + 1.0);
  const double X0 = 80, X1 = 760, Y0 = 50, Y1 = 450;
  const int xmax = std::max(nmax, 2);
  auto sx = [&](double i) { return X0 + (i - 1.0) / (xmax - 1.0) * (X1 - X0); };
  auto sy = [&](double lv) { return Y1 - (lv - ylo) / (yhi - ylo) * (Y1 - Y0); };
  auto f = [](double v)
  {
    char b[32];
    std::snprintf(b, sizeof(b), "%.2f", v);
    return std::string(b);
  };
  const std::map<std::string, std::string> colors = {
      {"T", "#1f77b4"}, {"R", "#ff7f0e"},  {"D1", "#2ca02c"},
      {"Dk", "#d62728"}, {"C1", "#9467bd"}, {"C1-left", "#8c564b"}};

  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"960\" height=\"500\" "
       "viewBox=\"0 0 960 500\" font-family=\"sans-serif\" font-size=\"11\">\n";
  o << "<rect x=\"0\" y=\"0\" width=\"960\" height=\"500\" fill=\"white\"/>\n";
  if (!title.empty())
  {
    o << "<text x=\"" << f((X0 + X1) / 2) << "\" y=\"25\" text-anchor=\"middle\" "
      << "font-size=\"14\">" << title << "</text>\n";
  }
  o << "<rect x=\"" << f(X0) << "\" y=\"" << f(Y0) << "\" width=\"" << f(X1 - X0)
    << "\" height=\"" << f(Y1 - Y0) << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int p = static_cast<int>(ylo); p <= static_cast<int>(yhi); p++)
  {
    o << "<line class=\"ytick\" x1=\"" << f(X0 - 5) << "\" y1=\"" << f(sy(p)) << "\" x2=\""
      << f(X1) << "\" y2=\"" << f(sy(p)) << "\" stroke=\"#dddddd\"/>\n";
    o << "<text x=\"" << f(X0 - 8) << "\" y=\"" << f(sy(p) + 4)
      << "\" text-anchor=\"end\">1e" << p << "</text>\n";
  }
  const int label_every = nmax <= 20 ? 1 : 10;
  for (int i = 1; i <= nmax; i++)
  {
    o << "<line class=\"xtick\" x1=\"" << f(sx(i)) << "\" y1=\"" << f(Y1) << "\" x2=\""
      << f(sx(i)) << "\" y2=\"" << f(Y1 + 4) << "\" stroke=\"black\"/>\n";
    if (i == 1 || i % label_every == 0)
    {
      o << "<text x=\"" << f(sx(i)) << "\" y=\"" << f(Y1 + 16) << "\" text-anchor=\"middle\">"
        << i << "</text>\n";
    }
  }
  o << "<text x=\"" << f((X0 + X1) / 2) << "\" y=\"" << f(Y1 + 36)
    << "\" text-anchor=\"middle\">eigenvalue index (ascending modulus)</text>\n";
  o << "<text x=\"20\" y=\"" << f((Y0 + Y1) / 2) << "\" text-anchor=\"middle\" "
    << "transform=\"rotate(-90 20 " << f((Y0 + Y1) / 2) << ")\">ratio</text>\n";

  int li = 0;
  for (const auto &s : series)
  {
    const std::string lin = s.name.substr(0, s.name.find(' '));
    const auto it = colors.find(lin);
    const std::string color = it != colors.end() ? it->second : "#333333";
    o << "<polyline class=\"series\" data-name=\"" << s.name << "\" fill=\"none\" stroke=\""
      << color << "\" stroke-width=\"1.5\"" << (s.dashed ? " stroke-dasharray=\"5,3\"" : "")
      << " points=\"";
    for (std::size_t p = 0; p < s.pts.size(); p++)
    {
      o << (p ? " " : "") << f(sx(s.pts[p].first)) << "," << f(sy(std::log10(s.pts[p].second)));
    }
    o << "\"/>\n";
    const double ly = Y0 + 14.0 * li;
    o << "<line x1=\"775\" y1=\"" << f(ly) << "\" x2=\"800\" y2=\"" << f(ly) << "\" stroke=\""
      << color << "\" stroke-width=\"1.5\"" << (s.dashed ? " stroke-dasharray=\"5,3\"" : "")
      << "/>\n";
    o << "<text x=\"805\" y=\"" << f(ly + 4) << "\">" << s.name << "</text>\n";
    li++;
  }
  o << "</svg>\n";
  return o.str();
}

}  // namespace gfplin
