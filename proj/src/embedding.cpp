#include "udg/embedding.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace udg {

int Embedding::dim() const {
  return std::visit([](const auto& p) { return p.dim; }, data);
}

int Embedding::size() const {
  return std::visit([](const auto& p) { return p.size(); }, data);
}

Points<double> Embedding::as_float64() const {
  Points<double> out;
  std::visit(
      [&](const auto& p) {
        out.dim = p.dim;
        out.coords.reserve(p.coords.size());
        for (const auto& c : p.coords) out.coords.push_back(to_double(c));
      },
      data);
  return out;
}

Embedding Embedding::from_float64(Points<double> pts) {
  return {Precision::Float64, 0, std::move(pts)};
}
Embedding Embedding::from_decimal50(Points<Dec50> pts, int digits) {
  return {Precision::Decimal, digits, std::move(pts)};
}
Embedding Embedding::from_decimal100(Points<Dec100> pts, int digits) {
  return {Precision::Decimal, digits, std::move(pts)};
}
Embedding Embedding::from_rational(Points<Rational> pts) {
  return {Precision::Rational, 0, std::move(pts)};
}

void ToleranceConfig::validate() const {
  if (!(0 < edge_tol && edge_tol < nonedge_band))
    throw std::invalid_argument("tolerances: need 0 < edge_tol < nonedge_band");
  if (!(coincidence_tol > 0)) throw std::invalid_argument("tolerances: coincidence_tol > 0");
}

namespace {

template <class T>
T squared_distance(const Points<T>& p, int u, int v) {
  const T* a = p.row(u);
  const T* b = p.row(v);
  T s = T(0);
  for (int k = 0; k < p.dim; ++k) {
    T d = a[k] - b[k];
    s += d * d;
  }
  return s;
}

template <class T>
double distance_as_double(const Points<T>& p, int u, int v) {
  using std::sqrt;
  return to_double(T(sqrt(squared_distance(p, u, v))));
}

// Rational mode has no exact square root; take it at 50-digit precision.
double distance_as_double(const Points<Rational>& p, int u, int v) {
  Rational s = squared_distance(p, u, v);
  Dec50 d = sqrt(Dec50(s));
  return to_double(d);
}

template <class T>
VerificationReport verify_impl(const Graph& g, const Points<T>& pts, const ToleranceConfig& tol) {
  VerificationReport rep;
  int n = g.vertex_count();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      double d = distance_as_double(pts, u, v);
      if (d < tol.coincidence_tol) rep.coincidences.push_back({{u, v}, d});
      if (g.has_edge(u, v)) {
        double err = std::abs(d - 1.0);
        rep.max_edge_error = std::max(rep.max_edge_error, err);
        if (err > tol.edge_tol) rep.edge_violations.push_back({{u, v}, d});
      } else {
        if (std::abs(d - 1.0) < tol.nonedge_band) rep.nonedge_violations.push_back({{u, v}, d});
      }
    }
  }
  rep.pass = rep.edge_violations.empty() && rep.nonedge_violations.empty() && rep.coincidences.empty();
  return rep;
}

}  // namespace

VerificationReport verify(const Graph& g, const Embedding& e, const ToleranceConfig& tol) {
  tol.validate();
  if (e.dim() < 1) throw std::invalid_argument("verify: dimension must be >= 1");
  if (e.size() != g.vertex_count())
    throw std::invalid_argument("verify: embedding does not cover all vertices");
  return std::visit([&](const auto& pts) { return verify_impl(g, pts, tol); }, e.data);
}

ExactReport verify_exact(const Graph& g, const Embedding& e) {
  if (e.precision != Precision::Rational)
    throw std::invalid_argument("verify_exact: rational precision required");
  const auto& pts = std::get<Points<Rational>>(e.data);
  if (pts.size() != g.vertex_count())
    throw std::invalid_argument("verify_exact: embedding does not cover all vertices");
  ExactReport rep;
  int n = g.vertex_count();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      Rational s = squared_distance(pts, u, v);
      if (s == 0) rep.coincidences.push_back({u, v});
      if (g.has_edge(u, v)) {
        if (s != 1) rep.edge_failures.push_back({u, v});
      } else {
        if (s == 1) rep.nonedge_failures.push_back({u, v});
      }
    }
  }
  rep.pass = rep.edge_failures.empty() && rep.nonedge_failures.empty() && rep.coincidences.empty();
  return rep;
}

namespace {

using nlohmann::json;

template <class T>
json coords_to_json(const Points<T>& p, int digits) {
  json rows = json::array();
  for (int v = 0; v < p.size(); ++v) {
    json row = json::array();
    for (int k = 0; k < p.dim; ++k) {
      if constexpr (std::is_same_v<T, double>)
        row.push_back(p.row(v)[k]);
      else if constexpr (std::is_same_v<T, Rational>)
        row.push_back(rational_to_string(p.row(v)[k]));
      else
        row.push_back(decimal_to_string(p.row(v)[k], digits));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class T>
Points<T> coords_from_json(const json& rows, int dim) {
  Points<T> p;
  p.dim = dim;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != dim)
      throw std::invalid_argument("embedding json: row length != dim");
    for (const auto& c : row) {
      if constexpr (std::is_same_v<T, Rational>) {
        p.coords.push_back(rational_from_string(c.get<std::string>()));
      } else if constexpr (std::is_same_v<T, double>) {
        p.coords.push_back(c.is_string() ? scalar_from_string<double>(c.get<std::string>())
                                         : c.get<double>());
      } else {
        p.coords.push_back(c.is_string() ? scalar_from_string<T>(c.get<std::string>())
                                         : T(c.get<double>()));
      }
    }
  }
  return p;
}

}  // namespace

std::string write_embedding_json(const Embedding& e) {
  json j;
  j["dim"] = e.dim();
  switch (e.precision) {
    case Precision::Float64:
      j["precision"] = "float64";
      break;
    case Precision::Decimal:
      j["precision"] = "decimal:" + std::to_string(e.digits);
      break;
    case Precision::Rational:
      j["precision"] = "rational";
      break;
  }
  j["coords"] = std::visit([&](const auto& p) { return coords_to_json(p, e.digits); }, e.data);
  return j.dump(2) + "\n";
}

Embedding read_embedding_json(const std::string& text) {
  json j = json::parse(text);
  int dim = j.at("dim").get<int>();
  std::string prec = j.at("precision").get<std::string>();
  const json& rows = j.at("coords");
  if (prec == "float64") {
    return Embedding::from_float64(coords_from_json<double>(rows, dim));
  } else if (prec == "rational") {
    return Embedding::from_rational(coords_from_json<Rational>(rows, dim));
  } else if (prec.rfind("decimal:", 0) == 0) {
    int digits = std::stoi(prec.substr(8));
    if (digits <= 0 || digits > kMaxDecimalDigits)
      throw std::invalid_argument("embedding json: unsupported decimal digits");
    if (digits <= 50) return Embedding::from_decimal50(coords_from_json<Dec50>(rows, dim), digits);
    return Embedding::from_decimal100(coords_from_json<Dec100>(rows, dim), digits);
  }
  throw std::invalid_argument("embedding json: unknown precision " + prec);
}

}  // namespace udg
