#include "udg/prover.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace udg {

std::vector<RhombusRelation> relations(const Graph& g) {
  std::vector<RhombusRelation> out;
  for (const auto& c : four_cycles(g)) out.push_back({c});
  return out;
}

namespace {

std::vector<Rational> relation_vector(int n, const std::array<int, 4>& c) {
  std::vector<Rational> row(n, Rational(0));
  row[c[0]] += 1;
  row[c[2]] += 1;
  row[c[1]] -= 1;
  row[c[3]] -= 1;
  return row;
}

// Row-reduced relation matrix with the transform that expresses each reduced
// row in the original relations.
struct Reduced {
  std::vector<std::vector<Rational>> rows;    // RREF rows over vertex coordinates
  std::vector<std::vector<Rational>> expr;    // same rows in relation coordinates
  std::vector<int> pivot;                     // pivot column per row
  int rank = 0;
};

Reduced reduce(const std::vector<std::vector<Rational>>& rel, int n) {
  Reduced R;
  size_t m = rel.size();
  std::vector<std::vector<Rational>> rows = rel;
  std::vector<std::vector<Rational>> expr(m, std::vector<Rational>(m, Rational(0)));
  for (size_t i = 0; i < m; ++i) expr[i][i] = 1;
  size_t r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    size_t p = r;
    while (p < m && rows[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(rows[p], rows[r]);
    std::swap(expr[p], expr[r]);
    Rational inv = Rational(1) / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (auto& x : expr[r]) x *= inv;
    for (size_t i = 0; i < m; ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational f = rows[i][c];
      for (int k = 0; k < n; ++k) rows[i][k] -= f * rows[r][k];
      for (size_t k = 0; k < m; ++k) expr[i][k] -= f * expr[r][k];
    }
    R.pivot.push_back(c);
    ++r;
  }
  rows.resize(r);
  expr.resize(r);
  R.rows = std::move(rows);
  R.expr = std::move(expr);
  R.rank = static_cast<int>(r);
  return R;
}

}  // namespace

ProverResult prove(const Graph& g) {
  int n = g.vertex_count();
  auto rels = relations(g);
  ProverResult result;
  result.relation_count = static_cast<int>(rels.size());
  if (rels.empty()) return result;

  std::vector<std::vector<Rational>> mat;
  mat.reserve(rels.size());
  for (const auto& r : rels) mat.push_back(relation_vector(n, r.cycle));
  Reduced R = reduce(mat, n);
  result.rank = R.rank;

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      // reduce e_i - e_j against the RREF rows, tracking relation weights
      std::vector<Rational> vec(n, Rational(0));
      vec[i] = 1;
      vec[j] = -1;
      std::vector<Rational> weights(rels.size(), Rational(0));
      for (int r = 0; r < R.rank; ++r) {
        Rational f = vec[R.pivot[r]];
        if (f == 0) continue;
        for (int k = 0; k < n; ++k) vec[k] -= f * R.rows[r][k];
        for (size_t k = 0; k < rels.size(); ++k) weights[k] += f * R.expr[r][k];
      }
      bool in_span = true;
      for (const auto& x : vec)
        if (x != 0) {
          in_span = false;
          break;
        }
      if (!in_span) continue;
      RhombusCertificate cert;
      cert.pair = {i, j};
      for (size_t k = 0; k < weights.size(); ++k)
        if (weights[k] != 0) cert.coefficients.push_back({static_cast<int>(k), weights[k]});
      result.certificates.push_back(std::move(cert));
    }
  }
  result.contradiction = !result.certificates.empty();
  return result;
}

bool verify_certificate(const Graph& g, const RhombusCertificate& c) {
  if (c.pair.first == c.pair.second) return false;
  auto rels = relations(g);
  int n = g.vertex_count();
  if (c.pair.first < 0 || c.pair.second >= n) return false;
  std::vector<Rational> acc(n, Rational(0));
  bool any = false;
  for (const auto& [idx, w] : c.coefficients) {
    if (idx < 0 || idx >= static_cast<int>(rels.size()))
      throw std::invalid_argument("certificate: relation index out of range");
    if (w == 0) continue;
    any = true;
    auto row = relation_vector(n, rels[idx].cycle);
    for (int k = 0; k < n; ++k) acc[k] += w * row[k];
  }
  if (!any) return false;
  for (int k = 0; k < n; ++k) {
    Rational want = k == c.pair.first ? Rational(1) : k == c.pair.second ? Rational(-1) : Rational(0);
    if (acc[k] != want) return false;
  }
  return true;
}

std::string write_certificate_json(const Graph& g, const RhombusCertificate& c) {
  auto rels = relations(g);
  nlohmann::json j;
  j["pair"] = {c.pair.first, c.pair.second};
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [idx, w] : c.coefficients) {
    if (idx < 0 || idx >= static_cast<int>(rels.size()))
      throw std::invalid_argument("certificate: relation index out of range");
    terms.push_back({{"cycle", rels[idx].cycle}, {"coefficient", rational_to_string(w)}});
  }
  j["relations"] = std::move(terms);
  return j.dump(2) + "\n";
}

RhombusCertificate read_certificate_json(const Graph& g, const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  RhombusCertificate c;
  c.pair = {j.at("pair")[0].get<int>(), j.at("pair")[1].get<int>()};
  auto rels = relations(g);
  for (const auto& t : j.at("relations")) {
    std::array<int, 4> cyc;
    for (int k = 0; k < 4; ++k) cyc[k] = t.at("cycle")[k].get<int>();
    int idx = -1;
    for (size_t k = 0; k < rels.size(); ++k)
      if (rels[k].cycle == cyc) idx = static_cast<int>(k);
    if (idx < 0) throw std::invalid_argument("certificate: cycle not present in graph");
    c.coefficients.push_back({idx, rational_from_string(t.at("coefficient").get<std::string>())});
  }
  return c;
}

std::string describe_proof(const Graph& g, const ProverResult& r) {
  std::ostringstream os;
  os << "4-cycles: " << r.relation_count << ", relation rank: " << r.rank << "\n";
  if (!r.contradiction) {
    os << "inconclusive: no vertex pair is forced to coincide\n";
    return os.str();
  }
  auto rels = relations(g);
  const auto& cert = r.certificates.front();
  os << "assume a planar unit-distance embedding; each 4-cycle is a rhombus,\n"
        "so its diagonal sums agree. Combining:\n";
  for (const auto& [idx, w] : cert.coefficients) {
    const auto& c = rels[idx].cycle;
    os << "  " << rational_to_string(w) << " * [ p" << c[0] + 1 << " + p" << c[2] + 1 << " = p"
       << c[1] + 1 << " + p" << c[3] + 1 << " ]   (cycle " << c[0] + 1 << c[1] + 1 << c[2] + 1
       << c[3] + 1 << ")\n";
  }
  os << "sums to p" << cert.pair.first + 1 << " = p" << cert.pair.second + 1 << ": vertices "
     << cert.pair.first + 1 << " and " << cert.pair.second + 1
     << " coincide, contradicting injectivity.\n";
  if (r.certificates.size() > 1) {
    os << "all forced coincidences:";
    for (const auto& c : r.certificates) os << " (" << c.pair.first + 1 << "," << c.pair.second + 1 << ")";
    os << "\n";
  }
  os << "no planar unit-distance embedding exists.\n";
  return os.str();
}

}  // namespace udg
