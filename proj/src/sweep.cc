/*
 *            Copyright 2025-2026 The diracvisc Development Team
 *
 *      Licensed under the Apache License, Version 2.0 (the "License")
 *
 * You may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *              http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
 */

#include <algorithm>
#include <charconv>
#include <cmath>
#include <diracvisc/errors.h>
#include <diracvisc/kubo_dynamic.h>
#include <diracvisc/scba.h>
#include <diracvisc/sweep.h>
#include <diracvisc/vertex.h>
#include <json.hpp>
#include <limits>
#include <map>
#include <omp.h>

#ifndef DIRACVISC_VERSION
#define DIRACVISC_VERSION "unknown"
#endif

namespace diracvisc {

using json = nlohmann::ordered_json;

namespace {
const double nan = std::numeric_limits<double>::quiet_NaN();

const std::map<Quantity, std::string>& quantity_names() {
  static const std::map<Quantity, std::string> m{
      {Quantity::self_energy, "self_energy"},
      {Quantity::dos, "dos"},
      {Quantity::static_shear, "static_shear"},
      {Quantity::static_hall, "static_hall"},
      {Quantity::dynamic_shear, "dynamic_shear"},
      {Quantity::dynamic_hall, "dynamic_hall"},
      {Quantity::vertex_check, "vertex_check"}};
  return m;
}

bool is_dynamic(Quantity q) {
  return q == Quantity::dynamic_shear || q == Quantity::dynamic_hall;
}

std::string fmt(double x) {
  if (std::isnan(x)) return "nan";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string clean(std::string s) {
  for (auto& c : s)
    if (c == ',' || c == '\n' || c == '\r' || c == '"') c = ';';
  return s;
}

json grid_json(const Grid& g) {
  if (!g.list.empty()) return g.list;
  return {{"start", g.start},
          {"stop", g.stop},
          {"count", g.count},
          {"scale", g.log ? "log" : "linear"}};
}

Grid grid_from(const json& j, const char* name) {
  Grid g;
  if (!j.contains(name)) return g;
  const auto& x = j.at(name);
  if (x.is_number()) {
    g.start = g.stop = x.get<double>();
    return g;
  }
  if (x.is_array()) {
    g.list = x.get<std::vector<double>>();
    if (g.list.empty()) throw DomainError(std::string(name) + ": empty list");
    g.count = int(g.list.size());
    g.start = g.list.front();
    g.stop = g.list.back();
    return g;
  }
  g.start = x.value("start", 0.0);
  g.stop = x.value("stop", g.start);
  g.count = x.value("count", 1);
  const std::string sc = x.value("scale", std::string("linear"));
  if (sc != "linear" && sc != "log")
    throw DomainError(std::string(name) + ".scale must be linear or log");
  g.log = sc == "log";
  return g;
}

SweepRow compute(const SweepSpec& s, double A, double B, double E,
                 double Om) {
  SweepRow r{A, B, E, Om, nan, nan, nan, nan, "", true, ""};
  const ModelParams p = s.params(A);
  const bool field = B != 0.0;
  try {
    std::optional<LandauSpectrum> spec;
    if (field) spec.emplace(B, p);
    auto sigma = [&] {
      return field ? solve_self_energy_landau(E, p, *spec).sigma
                   : solve_self_energy_b0(E, p).sigma;
    };
    switch (s.quantity) {
      case Quantity::self_energy: {
        auto sol = field ? solve_self_energy_landau(E, p, *spec)
                         : solve_self_energy_b0(E, p);
        r.value = sol.sigma.imag();
        r.ch1 = sol.sigma.real();
        r.ch2 = sol.residual;
        r.ch3 = sol.iterations;
        break;
      }
      case Quantity::dos: {
        const cplx sg = sigma();
        r.value = field ? dos(E, sg, p, B) : dos(E, sg, p);
        r.ch1 = sg.imag();
        r.ch2 = relaxation_time(sg);
        break;
      }
      case Quantity::static_shear: {
        auto v = field ? shear_bfield_numeric(E, p, *spec)
                       : shear_b0_numeric(E, p);
        r.value = v.value;
        r.ch1 = v.RA;
        r.ch2 = v.RR;
        r.regime = to_string(v.regime) + (v.low_confidence ? "?" : "");
        break;
      }
      case Quantity::static_hall: {
        auto v = hall_static_numeric(E, p, *spec);
        r.value = v.value;
        r.ch1 = v.RA;
        r.ch2 = v.II;
        r.regime = to_string(v.regime) + (v.low_confidence ? "?" : "");
        break;
      }
      case Quantity::dynamic_shear:
        r.value = field ? shear_dynamic_bfield(E, Om, p, *spec, s.broadening)
                        : shear_dynamic_b0(E, Om, p);
        r.regime = field ? (s.broadening ? "constant_broadening" : "scba")
                         : to_string(Regime::b_zero);
        break;
      case Quantity::dynamic_hall: {
        const double g =
            s.broadening ? *s.broadening
                         : std::max(std::abs(sigma().imag()), gamma_floor);
        r.value = hall_dynamic(E, Om, p, *spec, g);
        r.ch1 = g;
        r.regime = "constant_broadening";
        break;
      }
      case Quantity::vertex_check: {
        auto v = field ? vertex_correction_landau(E, p, *spec)
                       : vertex_correction_b0(E, p, s.angular_nodes);
        r.value = v.ratio;
        r.ch1 = v.norm_bare;
        r.ch2 = v.norm_correction;
        r.regime = to_string(v.basis);
        break;
      }
    }
  } catch (const std::exception& e) {
    r.converged = false;
    r.message = clean(e.what());
  }
  return r;
}

struct Point {
  double A, B, E, Om;
};

std::vector<Point> points(const SweepSpec& s) {
  s.validate();
  const auto Bs = s.B.values(), Es = s.E.values();
  const auto Os = is_dynamic(s.quantity) ? s.Omega.values()
                                         : std::vector<double>{0.0};
  std::vector<Point> pts;
  for (double A : s.A)
    for (double B : Bs)
      for (double E : Es)
        for (double O : Os) pts.push_back({A, B, E, O});
  return pts;
}
}  // namespace

std::string to_string(Quantity q) { return quantity_names().at(q); }

Quantity quantity_from_string(const std::string& s) {
  for (const auto& [q, name] : quantity_names())
    if (name == s) return q;
  throw DomainError("quantity: unknown value '" + s + "'");
}

std::vector<double> Grid::values() const {
  if (!list.empty()) return list;
  if (count < 1) throw DomainError("grid count must be >= 1");
  std::vector<double> v(count);
  if (count == 1) {
    v[0] = start;
    return v;
  }
  for (int i = 0; i < count; ++i) {
    const double t = double(i) / double(count - 1);
    v[i] = log ? std::exp(std::log(start) + t * (std::log(stop) -
                                                 std::log(start)))
               : start + t * (stop - start);
  }
  v.front() = start;
  v.back() = stop;
  return v;
}

bool Grid::operator==(const Grid& o) const {
  // same sampled points, however they were specified
  auto pts = [](const Grid& g) {
    return g.list.empty() && g.count < 1 ? std::vector<double>{} : g.values();
  };
  return pts(*this) == pts(o);
}

const char* version() { return DIRACVISC_VERSION; }

void SweepSpec::validate() const {
  auto check_grid = [](const Grid& g, const char* name) {
    if (g.count < 1 && g.list.empty())
      throw DomainError(std::string(name) + ".count must be >= 1");
    if (g.log && !(g.start > 0.0 && g.stop > 0.0))
      throw DomainError(std::string(name) + ": log scale needs positive ends");
  };
  check_grid(E, "E");
  check_grid(B, "B");
  check_grid(Omega, "Omega");
  if (A.empty()) throw DomainError("A: list is empty");
  for (double a : A)
    if (!(a > 0.0)) throw DomainError("A: values must be positive");
  for (double b : B.values())
    if (b < 0.0) throw DomainError("B: field must be >= 0");
  const bool needs_field = quantity == Quantity::static_hall ||
                           quantity == Quantity::dynamic_hall;
  if (needs_field)
    for (double b : B.values())
      if (b == 0.0) throw DomainError("B: " + to_string(quantity) +
                                      " needs a nonzero field");
  if (is_dynamic(quantity)) {
    for (double o : Omega.values())
      if (!(o > 0.0)) throw DomainError("Omega: values must be positive");
  } else if (Omega.values() != std::vector<double>{0.0}) {
    throw DomainError("Omega: only dynamic quantities sweep Omega");
  }
  if (broadening && !(*broadening > 0.0))
    throw DomainError("broadening must be positive");
  if (angular_nodes < 8) throw DomainError("angular_nodes must be >= 8");
  if (format != "csv" && format != "json")
    throw DomainError("output.format must be csv or json");
  if (threads < 0) throw DomainError("threads must be >= 0");
  params(A.front()).validate();
}

ModelParams SweepSpec::params(double a) const {
  ModelParams p;
  p.hbar_vf = hbar_vf;
  p.cutoff_Ec = cutoff_Ec;
  p.disorder_A = a;
  p.degeneracy = degeneracy;
  p.temperature = temperature;
  return p;
}

bool SweepResult::all_converged() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const SweepRow& r) { return r.converged; });
}

std::vector<std::string> column_labels(Quantity q) {
  switch (q) {
    case Quantity::self_energy:
      return {"im_sigma (eV)", "re_sigma (eV)", "residual (1)",
              "iterations (1)"};
    case Quantity::dos:
      return {"dos (1/(eV nm^2))", "im_sigma (eV)", "tau (1/eV)"};
    case Quantity::static_shear:
      return {"eta_s (hbar/nm^2)", "eta_RA (hbar/nm^2)",
              "eta_RR (hbar/nm^2)"};
    case Quantity::static_hall:
      return {"eta_H (hbar/nm^2)", "eta_I (hbar/nm^2)",
              "eta_II (hbar/nm^2)"};
    case Quantity::dynamic_shear:
      return {"eta_s (hbar/nm^2)"};
    case Quantity::dynamic_hall:
      return {"eta_H (hbar/nm^2)", "broadening (eV)"};
    case Quantity::vertex_check:
      return {"ratio (1)", "norm_bare (eV)", "norm_correction (eV)"};
  }
  return {};
}

// execution settings (threads, output path) stay out of the header so the
// data files do not depend on them
std::string spec_to_json(const SweepSpec& s) {
  json j;
  j["quantity"] = to_string(s.quantity);
  j["E"] = grid_json(s.E);
  j["B"] = grid_json(s.B);
  j["Omega"] = grid_json(s.Omega);
  j["A"] = s.A;
  j["hbar_vf"] = s.hbar_vf;
  j["cutoff_Ec"] = s.cutoff_Ec;
  j["degeneracy"] = s.degeneracy;
  j["temperature"] = s.temperature;
  j["broadening"] = s.broadening ? json(*s.broadening) : json(nullptr);
  j["angular_nodes"] = s.angular_nodes;
  j["format"] = s.format;
  return j.dump();
}

SweepSpec spec_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw DomainError(std::string("config: ") + e.what());
  }
  SweepSpec s;
  try {
    if (j.contains("quantity"))
      s.quantity = quantity_from_string(j.at("quantity").get<std::string>());
    s.E = grid_from(j, "E");
    s.B = grid_from(j, "B");
    s.Omega = grid_from(j, "Omega");
    if (j.contains("A")) {
      const auto& a = j.at("A");
      s.A = a.is_array() ? a.get<std::vector<double>>()
                         : std::vector<double>{a.get<double>()};
    }
    s.hbar_vf = j.value("hbar_vf", s.hbar_vf);
    s.cutoff_Ec = j.value("cutoff_Ec", s.cutoff_Ec);
    s.degeneracy = j.value("degeneracy", s.degeneracy);
    s.temperature = j.value("temperature", s.temperature);
    if (j.contains("broadening") && !j.at("broadening").is_null())
      s.broadening = j.at("broadening").get<double>();
    s.angular_nodes = j.value("angular_nodes", s.angular_nodes);
    s.format = j.value("format", s.format);
    if (j.contains("output")) {
      const auto& o = j.at("output");
      s.output_path = o.value("path", s.output_path);
      s.format = o.value("format", s.format);
    }
    s.threads = j.value("threads", s.threads);
  } catch (const json::exception& e) {
    throw DomainError(std::string("config: ") + e.what());
  }
  return s;
}

const std::vector<std::string>& figure_names() {
  static const std::vector<std::string> n{"fig1",  "fig2a", "fig2b",
                                          "fig3",  "fig4",  "fig5"};
  return n;
}

namespace {
Grid list_grid(std::vector<double> v) {
  return Grid{v.front(), v.back(), int(v.size()), false, v};
}
Grid range_grid(double a, double b, int n) { return Grid{a, b, n, false, {}}; }
}  // namespace

SweepSpec figure_preset(const std::string& name) {
  SweepSpec s;
  if (name == "fig1") {
    s.quantity = Quantity::static_shear;
    s.E = range_grid(-2.0, 2.0, 81);
    s.A = {5.0, 10.0, 15.0, 20.0, 35.0};
  } else if (name == "fig2a") {
    s.quantity = Quantity::static_shear;
    s.B = range_grid(10.0, 10.0, 1);
    s.E = range_grid(-0.4, 0.4, 161);
    s.A = {20.0, 50.0, 100.0, 500.0};
  } else if (name == "fig2b") {
    s.quantity = Quantity::static_shear;
    s.B = list_grid({0.1, 0.2, 0.5, 1.0, 1.5});
    s.E = range_grid(-0.3, 0.3, 61);
    s.A = {15.0};
  } else if (name == "fig3") {
    s.quantity = Quantity::static_hall;
    s.B = range_grid(10.0, 10.0, 1);
    s.E = range_grid(-0.4, 0.4, 161);
    s.A = {50.0, 100.0, 500.0};
  } else if (name == "fig4") {
    s.quantity = Quantity::dynamic_shear;
    s.E = list_grid({0.0, 0.5, 1.5});
    s.Omega = range_grid(0.05, 2.0, 40);
    s.A = {10.0, 20.0, 35.0};
  } else if (name == "fig5") {
    s.quantity = Quantity::dynamic_hall;
    s.B = range_grid(10.0, 10.0, 1);
    s.E = list_grid({0.05, 0.13, 0.18, 0.22});
    s.Omega = range_grid(0.02, 0.4, 381);
    s.A = {500.0};
    s.broadening = cyclotron_energy(10.0, s.params(500.0)) / 50.0;
  } else {
    std::string all;
    for (const auto& n : figure_names()) all += (all.empty() ? "" : ", ") + n;
    throw DomainError("unknown figure '" + name + "'; valid: " + all);
  }
  return s;
}

SweepResult run_sweep(const SweepSpec& s) {
  const auto pts = points(s);
  SweepResult res{spec_to_json(s), std::vector<SweepRow>(pts.size())};
  const long n = long(pts.size());
  const int nt = s.threads > 0 ? s.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(nt)
  for (long i = 0; i < n; ++i)
    res.rows[i] = compute(s, pts[i].A, pts[i].B, pts[i].E, pts[i].Om);
  return res;
}

SweepResult run_sweep_serial(const SweepSpec& s) {
  const auto pts = points(s);
  SweepResult res{spec_to_json(s), {}};
  res.rows.reserve(pts.size());
  for (const auto& p : pts) res.rows.push_back(compute(s, p.A, p.B, p.E, p.Om));
  return res;
}

void write_csv(const SweepResult& r, const SweepSpec& s, std::ostream& os) {
  os << "# diracvisc " << DIRACVISC_VERSION << "\n";
  os << "# config: " << r.header << "\n";
  os << "A (1),B (T),E (eV),Omega (eV)";
  for (const auto& l : column_labels(s.quantity)) os << ',' << l;
  os << ",regime,converged,message\n";
  const std::size_t nch = column_labels(s.quantity).size();
  for (const auto& row : r.rows) {
    os << fmt(row.A) << ',' << fmt(row.B) << ',' << fmt(row.E) << ','
       << fmt(row.Omega) << ',' << fmt(row.value);
    const double ch[3] = {row.ch1, row.ch2, row.ch3};
    for (std::size_t k = 1; k < nch; ++k) os << ',' << fmt(ch[k - 1]);
    os << ',' << row.regime << ',' << (row.converged ? 1 : 0) << ','
       << row.message << "\n";
  }
}

void write_json(const SweepResult& r, const SweepSpec& s, std::ostream& os,
                const std::string& timestamp) {
  json j;
  j["header"] = {{"config", json::parse(r.header)},
                 {"version", DIRACVISC_VERSION},
                 {"timestamp", timestamp}};
  const auto labels = column_labels(s.quantity);
  json cols = {"A (1)", "B (T)", "E (eV)", "Omega (eV)"};
  for (const auto& l : labels) cols.push_back(l);
  j["columns"] = cols;
  json rows = json::array();
  for (const auto& row : r.rows) {
    json o = {{"A", row.A}, {"B", row.B}, {"E", row.E}, {"Omega", row.Omega}};
    const double ch[4] = {row.value, row.ch1, row.ch2, row.ch3};
    for (std::size_t k = 0; k < labels.size(); ++k)
      o[labels[k].substr(0, labels[k].find(' '))] = ch[k];
    o["regime"] = row.regime;
    o["converged"] = row.converged;
    o["message"] = row.message;
    rows.push_back(o);
  }
  j["rows"] = rows;
  os << j.dump(1) << "\n";
}

void write_svg(const SweepResult& r, const SweepSpec& s, std::ostream& os) {
  const bool dyn = is_dynamic(s.quantity);
  // series keyed by the axes other than x, in row order
  std::vector<std::string> keys;
  std::map<std::string, std::vector<std::pair<double, double>>> series;
  for (const auto& row : r.rows) {
    const std::string key = "A=" + fmt(row.A) + " B=" + fmt(row.B) +
                            (dyn ? " E=" + fmt(row.E) : "");
    if (!series.count(key)) keys.push_back(key);
    if (std::isfinite(row.value))
      series[key].push_back({dyn ? row.Omega : row.E, row.value});
  }
  double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
  for (const auto& [k, pts] : series)
    for (auto [x, y] : pts) {
      x0 = std::min(x0, x), x1 = std::max(x1, x);
      y0 = std::min(y0, y), y1 = std::max(y1, y);
    }
  if (!(x1 > x0)) x0 -= 1.0, x1 += 1.0;
  if (!(y1 > y0)) y0 -= 1.0, y1 += 1.0;
  const double W = 640, H = 420, L = 70, R = 20, T = 20, Bm = 50;
  auto X = [&](double x) { return L + (x - x0) / (x1 - x0) * (W - L - R); };
  auto Y = [&](double y) { return H - Bm - (y - y0) / (y1 - y0) * (H - T - Bm); };
  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                 "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W
     << "\" height=\"" << H << "\">\n";
  os << "<rect x=\"" << L << "\" y=\"" << T << "\" width=\"" << W - L - R
     << "\" height=\"" << H - T - Bm << "\" fill=\"none\" stroke=\"black\"/>\n";
  os << "<text x=\"" << W / 2 << "\" y=\"" << H - 12
     << "\" text-anchor=\"middle\">" << (dyn ? "Omega (eV)" : "E (eV)")
     << "  [" << fmt(x0) << ", " << fmt(x1) << "]</text>\n";
  os << "<text x=\"12\" y=\"" << T + 10 << "\" font-size=\"11\">"
     << column_labels(s.quantity).front() << " [" << fmt(y0) << ", "
     << fmt(y1) << "]</text>\n";
  for (std::size_t i = 0; i < keys.size(); ++i) {
    const char* c = colors[i % 8];
    os << "<polyline fill=\"none\" stroke=\"" << c << "\" points=\"";
    for (auto [x, y] : series[keys[i]]) os << fmt(X(x)) << ',' << fmt(Y(y)) << ' ';
    os << "\"/>\n";
    os << "<text x=\"" << L + 8 << "\" y=\"" << T + 16 + 14 * i
       << "\" font-size=\"11\" fill=\"" << c << "\">" << keys[i] << "</text>\n";
  }
  os << "</svg>\n";
}

}  // namespace diracvisc
