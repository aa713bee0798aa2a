// Command-line front end: catalog access, verification, solving, planar
// impossibility proofs, dimension reports and SVG rendering.
//
// Exit codes: 0 success, 1 domain failure (verification failed, solver did
// not converge, no proof found), 2 usage or I/O error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "udg/catalog.hpp"
#include "udg/catalog_embeddings.hpp"
#include "udg/constants.hpp"
#include "udg/dimension.hpp"
#include "udg/embedding.hpp"
#include "udg/graph.hpp"
#include "udg/prover.hpp"
#include "udg/render.hpp"
#include "udg/solver.hpp"

namespace {

using namespace udg;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

std::optional<CatalogId> catalog_ref(const std::string& ref) {
  if (ref.rfind("catalog:", 0) != 0) return std::nullopt;
  auto id = catalog_id_from_string(ref.substr(8));
  if (!id) throw UsageError("unknown catalog id: " + ref.substr(8));
  return id;
}

Graph load_graph(const std::string& ref) {
  if (auto id = catalog_ref(ref)) return catalog_get(*id);
  std::istringstream is(slurp(ref));
  try {
    return read_edge_list(is);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad graph file: ") + e.what());
  }
}

Embedding load_embedding(const std::string& ref, Precision prec, int digits) {
  if (auto id = catalog_ref(ref)) return paper_embedding(*id, prec, digits);
  try {
    return read_embedding_json(slurp(ref));
  } catch (const std::exception& e) {
    if (dynamic_cast<const UsageError*>(&e)) throw;
    throw UsageError(std::string("bad embedding file: ") + e.what());
  }
}

int cmd_catalog(const std::string& action, const std::string& id_name,
                const std::string& graph_out, const std::string& emb_out,
                const std::string& precision, int digits) {
  if (action == "list") {
    for (CatalogId id : catalog_all_ids()) {
      Graph g = catalog_get(id);
      std::cout << catalog_name(id) << "  n=" << g.vertex_count() << " m=" << g.edge_count();
      if (id != CatalogId::Mobius6) std::cout << " dim=" << catalog_embedding_dim(id);
      std::cout << "\n";
    }
    return 0;
  }
  if (action == "constants") {
    for (ConstantId id : all_constants()) {
      NamedConstant c = constant(id, digits);
      std::cout << c.name << " = " << c.value_string() << "\n  where " << c.definition << "\n";
    }
    return 0;
  }
  if (action == "export") {
    auto id = catalog_id_from_string(id_name);
    if (!id) throw UsageError("unknown catalog id: " + id_name);
    if (graph_out.empty() && emb_out.empty())
      throw UsageError("catalog export: need --graph and/or --embedding output path");
    if (!graph_out.empty()) spit(graph_out, write_edge_list(catalog_get(*id)));
    if (!emb_out.empty()) {
      Precision prec = Precision::Float64;
      if (precision == "decimal")
        prec = Precision::Decimal;
      else if (precision == "rational")
        prec = Precision::Rational;
      else if (precision != "float64")
        throw UsageError("unknown precision: " + precision);
      spit(emb_out, write_embedding_json(paper_embedding(*id, prec, digits)));
    }
    return 0;
  }
  throw UsageError("catalog: unknown action " + action);
}

int cmd_verify(const std::string& graph_ref, const std::string& emb_ref, double edge_tol,
               double nonedge_band, double coincidence_tol, bool exact, int digits) {
  Graph g = load_graph(graph_ref);
  if (exact) {
    Embedding e = load_embedding(emb_ref, Precision::Rational, digits);
    auto rep = verify_exact(g, e);
    std::cout << (rep.pass ? "exact: all edges have squared distance exactly 1"
                           : "exact verification FAILED")
              << "\n";
    for (auto [u, v] : rep.edge_failures)
      std::cout << "  edge " << u + 1 << "-" << v + 1 << " squared distance != 1\n";
    for (auto [u, v] : rep.nonedge_failures)
      std::cout << "  non-edge " << u + 1 << "-" << v + 1 << " at unit distance\n";
    for (auto [u, v] : rep.coincidences)
      std::cout << "  vertices " << u + 1 << " and " << v + 1 << " coincide\n";
    return rep.pass ? 0 : 1;
  }
  ToleranceConfig tol;
  if (auto id = catalog_ref(emb_ref)) tol = default_tolerances(*id);
  if (edge_tol > 0) tol.edge_tol = edge_tol;
  if (nonedge_band > 0) tol.nonedge_band = nonedge_band;
  if (coincidence_tol > 0) tol.coincidence_tol = coincidence_tol;
  Embedding e = load_embedding(emb_ref, Precision::Decimal, digits);
  auto rep = verify(g, e, tol);
  int ok_edges = g.edge_count() - static_cast<int>(rep.edge_violations.size());
  std::cout << ok_edges << "/" << g.edge_count() << " edges OK; "
            << (rep.nonedge_violations.empty() ? "non-edges clear" : "non-edge violations")
            << "; " << (rep.coincidences.empty() ? "injective" : "coincident vertices") << "\n";
  std::cout << "max edge error: " << rep.max_edge_error << "\n";
  for (const auto& [e2, d] : rep.edge_violations)
    std::cout << "  edge " << e2.first + 1 << "-" << e2.second + 1 << " has length " << d << "\n";
  for (const auto& [pr, d] : rep.nonedge_violations)
    std::cout << "  non-edge " << pr.first + 1 << "-" << pr.second + 1 << " has length " << d
              << "\n";
  for (const auto& [pr, d] : rep.coincidences)
    std::cout << "  vertices " << pr.first + 1 << " and " << pr.second + 1 << " are " << d
              << " apart\n";
  std::cout << (rep.pass ? "PASS" : "FAIL") << "\n";
  return rep.pass ? 0 : 1;
}

int cmd_solve(const std::string& problem_path, std::optional<std::uint64_t> seed,
              std::optional<int> restarts, const std::string& out_path,
              const std::string& log_path) {
  std::string text = slurp(problem_path);
  Problem p;
  SolverConfig cfg;
  try {
    p = read_problem_json(text);
    auto j = nlohmann::json::parse(text);
    if (j.contains("config")) cfg = read_config_json(j["config"].dump());
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad problem file: ") + e.what());
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("bad problem file: ") + e.what());
  }
  if (seed) cfg.seed = *seed;
  if (restarts) cfg.restarts = *restarts;

  SolveOutcome out = solve(p, cfg);
  nlohmann::json log = {
      {"seed", cfg.seed},
      {"restarts_used", out.restarts_used},
      {"converged", out.converged},
      {"best_residual", out.best_residual},
  };
  if (out.converged) {
    const Solution& s = *out.solution;
    log["residual"] = s.residual_norm;
    log["restart_index"] = s.restart_index;
    log["pass"] = s.pass;
    std::cout << "converged at restart " << s.restart_index << ", residual " << s.residual_norm
              << (s.pass ? ", verification PASS" : ", verification FAIL (screening)") << "\n";
    if (!out_path.empty()) spit(out_path, write_embedding_json(s.embedding));
  } else {
    std::cout << "no restart converged; best residual " << out.best_residual << "\n";
  }
  if (!log_path.empty()) spit(log_path, log.dump(2) + "\n");
  return out.converged ? 0 : 1;
}

int cmd_prove(const std::string& graph_ref, const std::string& cert_out) {
  Graph g = load_graph(graph_ref);
  ProverResult r = prove(g);
  std::cout << describe_proof(g, r);
  if (r.contradiction && !cert_out.empty())
    spit(cert_out, write_certificate_json(g, r.certificates.front()));
  return r.contradiction ? 0 : 1;
}

int cmd_dims(const std::string& graph_ref, const std::string& emb_path, bool run_prover,
             bool conjecture) {
  Graph g = load_graph(graph_ref);
  BoundsEvidence ev;
  Embedding e;
  if (!emb_path.empty()) {
    e = load_embedding(emb_path, Precision::Decimal, 50);
    if (auto id = catalog_ref(emb_path)) ev.tolerances = default_tolerances(*id);
    ev.embedding = &e;
  }
  ProverResult pr;
  if (run_prover) {
    pr = prove(g);
    if (pr.contradiction) ev.certificate = &pr.certificates.front();
  }
  DimensionBounds b = bounds(g, ev);
  std::cout << "dim in [" << b.lo << ", " << b.hi << "]\n  lower bound: " << b.lo_reason
            << "\n  upper bound: " << b.hi_reason << "\n";
  if (conjecture) {
    auto rep = conjecture_report(g, b);
    std::cout << "chi = " << rep.chi << ", 2*chi = " << rep.two_chi << ", "
              << (rep.consistent ? "consistent with dim <= 2 chi" : "INCONSISTENT with dim <= 2 chi")
              << (rep.improves_on_degree_bound ? " (improves on the 2*maxdeg bound)" : "") << "\n";
  }
  return 0;
}

int cmd_render(const std::string& graph_ref, const std::string& emb_ref, const std::string& out,
               const std::string& projection) {
  Graph g = load_graph(graph_ref);
  Embedding e = load_embedding(emb_ref, Precision::Decimal, 50);
  RenderOptions opts;
  if (projection == "xy")
    opts.drop_axis = 2;
  else if (projection == "xz")
    opts.drop_axis = 1;
  else if (projection == "yz")
    opts.drop_axis = 0;
  else
    throw UsageError("unknown projection: " + projection);
  spit(out, render_svg(g, e, opts));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"unit-distance graph toolkit"};
  app.require_subcommand(1);

  auto* cat = app.add_subcommand("catalog", "list graphs, print constants, export files");
  std::string cat_action;
  cat->add_option("action", cat_action, "list | constants | export")->required();
  std::string cat_id, cat_graph_out, cat_emb_out, cat_precision = "float64";
  int cat_digits = 50;
  cat->add_option("--id", cat_id, "catalog graph name");
  cat->add_option("--graph", cat_graph_out, "edge-list output path");
  cat->add_option("--embedding", cat_emb_out, "embedding JSON output path");
  cat->add_option("--precision", cat_precision, "float64 | decimal | rational");
  cat->add_option("--digits", cat_digits, "decimal digits (<= 100)");

  auto* ver = app.add_subcommand("verify", "check an embedding against a graph");
  std::string ver_graph, ver_emb;
  double ver_edge_tol = 0, ver_band = 0, ver_coin = 0;
  bool ver_exact = false;
  int ver_digits = 50;
  ver->add_option("--graph", ver_graph, "catalog:<id> or edge-list file")->required();
  ver->add_option("--embedding", ver_emb, "catalog:<id> or embedding JSON file")->required();
  ver->add_option("--edge-tol", ver_edge_tol, "max |dist-1| on edges");
  ver->add_option("--nonedge-band", ver_band, "min |dist-1| on non-edges");
  ver->add_option("--coincidence-tol", ver_coin, "min pairwise distance");
  ver->add_flag("--exact", ver_exact, "exact rational check (squared distances)");
  ver->add_option("--digits", ver_digits, "decimal digits for catalog embeddings");

  auto* sol = app.add_subcommand("solve", "find a unit-distance embedding");
  std::string sol_problem, sol_out, sol_log;
  std::uint64_t sol_seed = 0;
  int sol_restarts = 0;
  bool sol_seed_set = false, sol_restarts_set = false;
  sol->add_option("--problem", sol_problem, "problem JSON file")->required();
  sol->add_option("--seed", sol_seed)->each([&](const std::string&) { sol_seed_set = true; });
  sol->add_option("--restarts", sol_restarts)->each([&](const std::string&) {
    sol_restarts_set = true;
  });
  sol->add_option("--out", sol_out, "embedding JSON output path");
  sol->add_option("--log", sol_log, "run log JSON output path");

  auto* prv = app.add_subcommand("prove-planar-impossible",
                                 "prove no planar unit-distance embedding exists");
  std::string prv_graph, prv_cert;
  prv->add_option("--graph", prv_graph, "catalog:<id> or edge-list file")->required();
  prv->add_option("--certificate", prv_cert, "certificate JSON output path");

  auto* dim = app.add_subcommand("dims", "dimension bounds with provenance");
  std::string dim_graph, dim_emb;
  bool dim_prove = false, dim_conj = false;
  dim->add_option("--graph", dim_graph, "catalog:<id> or edge-list file")->required();
  dim->add_option("--embedding", dim_emb, "verified embedding (catalog:<id> or file)");
  dim->add_flag("--prove", dim_prove, "run the planar impossibility prover");
  dim->add_flag("--conjecture", dim_conj, "append the 2*chi report");

  auto* ren = app.add_subcommand("render", "write an SVG drawing");
  std::string ren_graph, ren_emb, ren_out, ren_proj = "xy";
  ren->add_option("--graph", ren_graph)->required();
  ren->add_option("--embedding", ren_emb)->required();
  ren->add_option("--out", ren_out)->required();
  ren->add_option("--projection", ren_proj, "xy | xz | yz (3D only)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (cat->parsed())
      return cmd_catalog(cat_action, cat_id, cat_graph_out, cat_emb_out, cat_precision, cat_digits);
    if (ver->parsed())
      return cmd_verify(ver_graph, ver_emb, ver_edge_tol, ver_band, ver_coin, ver_exact, ver_digits);
    if (sol->parsed())
      return cmd_solve(sol_problem,
                       sol_seed_set ? std::optional<std::uint64_t>(sol_seed) : std::nullopt,
                       sol_restarts_set ? std::optional<int>(sol_restarts) : std::nullopt, sol_out,
                       sol_log);
    if (prv->parsed()) return cmd_prove(prv_graph, prv_cert);
    if (dim->parsed()) return cmd_dims(dim_graph, dim_emb, dim_prove, dim_conj);
    if (ren->parsed()) return cmd_render(ren_graph, ren_emb, ren_out, ren_proj);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
