// rtlab command-line front end.
#include <omp.h>

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "rtlab/acceptance.hpp"
#include "rtlab/census.hpp"
#include "rtlab/constructions.hpp"
#include "rtlab/formulas.hpp"
#include "rtlab/sphere.hpp"
#include "rtlab/symmetrize.hpp"
#include "rtlab/weighted.hpp"

using json = nlohmann::ordered_json;
using namespace rtlab;

namespace {

constexpr const char* kVersion = "0.1.0";

uint64_t default_seed() {
  if (const char* env = std::getenv("RTLAB_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw precondition_error("BadSeed", std::string("RTLAB_SEED is not an integer: ") + env);
    }
  }
  return 1;
}

// FNV-1a, used only to fingerprint written artifacts in the manifest.
std::string fingerprint(const std::string& bytes) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

struct Context {
  std::string subcommand;
  json parameters = json::object();
  json artifacts = json::object();
  bool dry_run = false;
  std::string manifest_path;
  uint64_t seed = 1;
};

void write_text(Context& ctx, const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw precondition_error("IOError", "cannot write " + path);
  out << text;
  ctx.artifacts[path] = fingerprint(text);
}

void write_json(Context& ctx, const std::string& path, const json& j) { write_text(ctx, path, j.dump(2) + "\n"); }

Graph load_graph(const std::string& spec) {
  if (is_named_graph(spec)) return named_graph(spec);
  return read_graph_file(spec);
}

json rational_json(const Rational& r) { return {{"exact", to_string(r)}, {"decimal", to_double(r)}}; }

json structure_json(const BlowupStructure& s) {
  return {{"a_sizes", s.a_sizes},
          {"b_of", s.b_of},
          {"m", s.m()},
          {"m_prime", s.m_prime()},
          {"n", s.n()},
          {"weighted_clique_number", s.weighted_clique_number()},
          {"T", rational_json(s.triangles())},
          {"e", rational_json(Rational(s.edge_halves(), 2))}};
}

json step_json(const StepRecord& r) {
  return {{"op", r.op},         {"i", r.i},
          {"j", r.j},           {"T_before", to_string(Rational(r.t_before, 8))},
          {"T_after", to_string(Rational(r.t_after, 8))}, {"wcn_before", r.wcn_before},
          {"wcn_after", r.wcn_after}};
}

json split_json(const SplitRecord& r) {
  return {{"rule", r.rule},
          {"b_indices", r.b_indices},
          {"u", r.u},
          {"e_U_before", to_string(Rational(r.e_u_before, 2))},
          {"e_U_after", to_string(Rational(r.e_u_after, 2))},
          {"T_U_before", to_string(Rational(r.t_u_before, 8))},
          {"T_U_after", to_string(Rational(r.t_u_after, 8))},
          {"T_before", to_string(Rational(r.t_before, 8))},
          {"T_after", to_string(Rational(r.t_after, 8))},
          {"wcn_before", r.wcn_before},
          {"wcn_after", r.wcn_after},
          {"accepted", r.accepted}};
}

json plan_json(const PartSizePlan& p) {
  return {{"sizes", p.sizes},
          {"x", p.x},
          {"x_continuous", p.x_continuous},
          {"value", p.value},
          {"objective", p.objective == Objective::Edges ? "edges" : "triangles"},
          {"be_dim", p.be_dim},
          {"be_epsilon", p.be_epsilon}};
}

std::vector<std::vector<int>> parts_json(const PartitionedGraph& pg) {
  std::vector<std::vector<int>> out;
  for (const auto& p : pg.parts) out.push_back(p.to_vector());
  return out;
}

EdgeColoring load_coloring(const Graph& g, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw precondition_error("IOError", "cannot read " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw precondition_error("BadColoring", std::string("invalid JSON: ") + e.what());
  }
  if (!j.contains("r") || !j.contains("edges")) throw precondition_error("BadColoring", "need fields r and edges");
  std::vector<std::array<int, 3>> triples;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 3) throw precondition_error("BadColoring", "edges must be [u, v, color]");
    triples.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<int>()});
  }
  return coloring_from_triples(g, j["r"].get<int>(), triples);
}

int dry(const std::string& what) {
  std::cout << "dry-run: " << what << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rtlab: Ramsey-Turan constructions, colorings and weighted symmetrization"};
  app.require_subcommand(1);
  Context ctx;
  int threads = 0;
  app.add_option("--threads", threads, "Worker threads (default: all cores)");
  app.add_flag("--dry-run", ctx.dry_run, "Print the planned budget and exit");
  app.add_option("--manifest", ctx.manifest_path, "Write a run manifest (parameters, hashes, wall time)");
  app.set_version_flag("--version", kVersion);

  uint64_t seed = 0;
  bool seed_given = false;
  auto add_seed = [&](CLI::App* sub) {
    sub->add_option_function<uint64_t>(
        "--seed",
        [&](const uint64_t& s) {
          seed = s;
          seed_given = true;
        },
        "RNG seed (default: RTLAB_SEED or 1)");
  };

  // be
  auto* be = app.add_subcommand("be", "Build and certify a Bollobas-Erdos sphere graph");
  SphereConfig be_cfg;
  std::string be_out, be_report;
  be->add_option("--n", be_cfg.n, "Vertex count (even)");
  be->add_option("--dim", be_cfg.d, "Sphere dimension d");
  be->add_option("--eps", be_cfg.epsilon, "Threshold slack epsilon");
  be->add_option("--out", be_out, "Graph output file");
  be->add_option("--report", be_report, "Certificate JSON (default stdout)");
  add_seed(be);

  // construct
  auto* con = app.add_subcommand("construct", "Build Turan, Gamma, H(n,k) or H(n,s,t)");
  std::string family = "hnk", objective = "edges", con_out, con_plan, aux_path;
  int con_n = 30, con_k = 5, con_s = 3, con_t = 5, con_dim = 9;
  double con_eps = -1;
  con->add_option("--family", family, "turan | gamma | hnk | hst")
      ->check(CLI::IsMember({"turan", "gamma", "hnk", "hst"}));
  con->add_option("--n", con_n, "Vertex count");
  con->add_option("--k", con_k, "Forbidden clique size (hnk), part count (turan)");
  con->add_option("--s", con_s, "Part count (hst)");
  con->add_option("--t", con_t, "Forbidden clique size (hst)");
  con->add_option("--aux", aux_path, "Auxiliary graph for hst (file or name; default T(s, t-s-1))");
  con->add_option("--objective", objective, "edges | triangles")->check(CLI::IsMember({"edges", "triangles"}));
  con->add_option("--dim", con_dim, "BE block dimension");
  con->add_option("--eps", con_eps, "BE block epsilon (default 0.3 for hnk, 0.1 for hst)");
  con->add_option("--out", con_out, "Graph output file");
  con->add_option("--plan", con_plan, "Plan/summary JSON (default stdout)");
  add_seed(con);

  // census
  auto* cen = app.add_subcommand("census", "Count r-colorings without a monochromatic K_k");
  std::string cen_graph, cen_mode = "exhaustive", cen_out;
  int cen_r = 2, cen_k = 3;
  int64_t cen_samples = 100000;
  int max_n = 0;
  int alpha_max = -1;
  cen->add_option("--graph", cen_graph, "Graph file or name (K5, C5, T9,3, ...)");
  cen->add_option("--max-over", max_n, "Maximize over all graphs on this many vertices (<= 7)");
  cen->add_option("--alpha-max", alpha_max, "With --max-over: restrict to alpha(G) <= value");
  cen->add_option("--r", cen_r, "Colors");
  cen->add_option("--k", cen_k, "Forbidden clique size");
  cen->add_option("--mode", cen_mode, "exhaustive | ie | sample")
      ->check(CLI::IsMember({"exhaustive", "ie", "sample"}));
  cen->add_option("--samples", cen_samples, "Sample count for --mode sample");
  cen->add_option("--out", cen_out, "Result JSON (default stdout)");
  add_seed(cen);

  // partition
  auto* part = app.add_subcommand("partition", "Split V into C_1..C_r with small per-color alpha");
  std::string part_graph, part_coloring, part_out;
  double part_c = 0.2;
  part->add_option("--graph", part_graph, "Graph file or name")->required();
  part->add_option("--coloring", part_coloring, "Coloring JSON {\"r\":2,\"edges\":[[u,v,c],...]}")->required();
  part->add_option("--c", part_c, "Fraction c in (0,1)");
  part->add_option("--out", part_out, "Result JSON (default stdout)");

  // family
  auto* fam = app.add_subcommand("family", "Generate and validate a lower-bound coloring family");
  int fam_t = 1, fam_i = 1, fam_n = 20, fam_samples = 1000;
  bool fam_rf33 = false;
  std::string fam_out;
  fam->add_option("--t", fam_t, "t in k = 3t+i");
  fam->add_option("--i", fam_i, "i in {1,2,3}");
  fam->add_option("--n", fam_n, "Vertex count of H(n, 4t+i)");
  fam->add_option("--samples", fam_samples, "Sampled completions");
  fam->add_flag("--rf33", fam_rf33, "Three-color family on H(n,5) instead");
  fam->add_option("--out", fam_out, "Result JSON (default stdout)");
  add_seed(fam);

  // symmetrize
  auto* sym = app.add_subcommand("symmetrize", "Weighted-graph symmetrization and triangle maximization");
  int sym_n = 6, sym_t = 6;
  std::string sym_oracle = "none", sym_input, sym_out;
  sym->add_option("--n", sym_n, "Vertex count");
  sym->add_option("--t", sym_t, "Forbidden weighted clique size");
  sym->add_option("--oracle", sym_oracle, "none | exhaustive")->check(CLI::IsMember({"none", "exhaustive"}));
  sym->add_option("--input", sym_input, "Weighted graph file to symmetrize (S1, S2, splits)");
  sym->add_option("--out", sym_out, "Result JSON (default stdout)");

  // formulas
  auto* form = app.add_subcommand("formulas", "Tables of b_k, a_t, RF exponents, RT coefficients");
  std::string table = "bk", format = "csv", form_out;
  int kmin = 4, kmax = 20;
  form->add_option("--table", table, "bk | a | rf | rt")->check(CLI::IsMember({"bk", "a", "rf", "rt"}));
  form->add_option("--kmin", kmin, "First index");
  form->add_option("--kmax", kmax, "Last index");
  form->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  form->add_option("--out", form_out, "Output file (default stdout)");

  // verify
  auto* ver = app.add_subcommand("verify", "Run the desk acceptance suite");
  std::string suite = "desk";
  std::vector<int> only;
  ver->add_option("--suite", suite, "Suite name")->check(CLI::IsMember({"desk"}));
  ver->add_option("--only", only, "Run only these criterion ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  const auto start = std::chrono::steady_clock::now();
  int exit_code = 0;
  try {
    if (threads > 0) omp_set_num_threads(threads);
    ctx.seed = seed_given ? seed : default_seed();

    if (*be) {
      ctx.subcommand = "be";
      be_cfg.seed = ctx.seed;
      be_cfg.validate();
      ctx.parameters = {{"n", be_cfg.n}, {"dim", be_cfg.d}, {"eps", be_cfg.epsilon}, {"seed", be_cfg.seed}};
      if (ctx.dry_run) {
        return dry(std::to_string(static_cast<int64_t>(be_cfg.n) * (be_cfg.n - 1) / 2) + " distance tests in R^" +
                   std::to_string(be_cfg.d + 1) + ", exact K4 search on " + std::to_string(be_cfg.n) + " vertices");
      }
      BEGraph g = build_be_graph(be_cfg);
      auto rep = certify_be_properties(g);
      if (!be_out.empty()) write_text(ctx, be_out, to_text(g.graph));
      json j = {{"n", be_cfg.n},
                {"dim", be_cfg.d},
                {"eps", be_cfg.epsilon},
                {"mu", be_cfg.mu()},
                {"seed", be_cfg.seed},
                {"edges", g.graph.edge_count()},
                {"k4_free", rep.k4_free},
                {"x_triangle_free", rep.x_triangle_free},
                {"y_triangle_free", rep.y_triangle_free},
                {"cross_density", rep.cross_density},
                {"cross_edges", rep.cross_edges},
                {"inner_edges", rep.inner_edges},
                {"alpha_lower", rep.alpha_lower}};
      if (!rep.k4_free) j["k4_witness"] = rep.k4_witness;
      write_json(ctx, be_report, j);
    } else if (*con) {
      ctx.subcommand = "construct";
      ctx.parameters = {{"family", family}, {"n", con_n}, {"seed", ctx.seed}};
      Objective obj = objective == "edges" ? Objective::Edges : Objective::Triangles;
      json j;
      Graph g;
      if (family == "turan") {
        ctx.parameters["r"] = con_k;
        if (ctx.dry_run) return dry("complete " + std::to_string(con_k) + "-partite graph on " +
                                    std::to_string(con_n) + " vertices");
        g = build_turan(con_n, con_k);
        j = {{"family", "turan"}, {"n", con_n}, {"r", con_k}, {"parts", turan_parts(con_n, con_k)}};
      } else if (family == "gamma") {
        if (ctx.dry_run) return dry("triangle-free process on " + std::to_string(con_n) + " vertices");
        auto res = build_gamma(con_n, ctx.seed);
        g = res.graph;
        j = {{"family", "gamma"}, {"n", con_n}, {"seed", ctx.seed}, {"alpha_lower", res.alpha_lower}};
      } else if (family == "hnk") {
        ctx.parameters["k"] = con_k;
        ctx.parameters["objective"] = objective;
        PartSizePlan plan = optimize_plan(con_n, con_k, obj);
        plan.be_dim = con_dim;
        if (con_eps > 0) plan.be_epsilon = con_eps;
        ctx.parameters["eps"] = plan.be_epsilon;
        if (ctx.dry_run) return dry("H(" + std::to_string(con_n) + "," + std::to_string(con_k) + ") with " +
                                    std::to_string(plan.sizes.size()) + " parts");
        auto pg = build_h_n_k(con_n, con_k, plan, ctx.seed);
        g = pg.graph;
        j = {{"family", "hnk"}, {"n", con_n}, {"k", con_k}, {"seed", ctx.seed}, {"plan", plan_json(plan)},
             {"parts", parts_json(pg)}, {"be_blocks", pg.be_blocks}, {"gamma_parts", pg.gamma_parts},
             {"gamma_edges", pg.gamma_edges}};
      } else {
        ctx.parameters["s"] = con_s;
        ctx.parameters["t"] = con_t;
        Graph h = aux_path.empty() ? default_aux_graph(con_s, con_t) : load_graph(aux_path);
        PartSizePlan plan = balanced_plan(con_n, con_s);
        plan.be_dim = con_dim;
        plan.be_epsilon = con_eps > 0 ? con_eps : 0.1;
        ctx.parameters["eps"] = plan.be_epsilon;
        if (ctx.dry_run) return dry("H(" + std::to_string(con_n) + "," + std::to_string(con_s) + "," +
                                    std::to_string(con_t) + ") with " + std::to_string(con_s) + " parts");
        auto pg = build_h_n_s_t(con_n, con_s, con_t, h, plan, ctx.seed);
        g = pg.graph;
        j = {{"family", "hst"}, {"n", con_n}, {"s", con_s}, {"t", con_t}, {"seed", ctx.seed},
             {"aux_edges", h.edges()}, {"plan", plan_json(plan)}, {"parts", parts_json(pg)},
             {"be_blocks", pg.be_blocks}, {"gamma_parts", pg.gamma_parts}, {"gamma_edges", pg.gamma_edges}};
      }
      j["edges"] = g.edge_count();
      j["triangles"] = count_cliques(g, 3);
      if (!con_out.empty()) write_text(ctx, con_out, to_text(g));
      write_json(ctx, con_plan, j);
    } else if (*cen) {
      ctx.subcommand = "census";
      ctx.parameters = {{"r", cen_r}, {"k", cen_k}, {"mode", cen_mode}};
      if (max_n > 0) {
        ctx.parameters["max_over"] = max_n;
        std::optional<int> am;
        if (alpha_max >= 0) am = alpha_max;
        if (ctx.dry_run) return dry("census over all graphs on " + std::to_string(max_n) + " vertices");
        auto res = max_census_over_graphs(max_n, cen_r, cen_k, am);
        json j = {{"n", max_n}, {"r", cen_r}, {"k", cen_k}, {"graph", to_text(res.graph)},
                  {"edges", res.graph.edge_count()}, {"valid", res.valid.str()},
                  {"graphs_scanned", res.graphs_scanned}};
        if (am) j["alpha_max"] = *am;
        write_json(ctx, cen_out, j);
      } else {
        if (cen_graph.empty()) throw precondition_error("Usage", "census needs --graph or --max-over");
        ctx.parameters["graph"] = cen_graph;
        Graph g = load_graph(cen_graph);
        if (ctx.dry_run) {
          return dry("e = " + std::to_string(g.edge_count()) + ", search space r^e = 2^" +
                     std::to_string(census_log2_space(g, cen_r)) + " (budget 2^40)");
        }
        CensusMode mode = cen_mode == "exhaustive" ? CensusMode::Exhaustive
                          : cen_mode == "ie"       ? CensusMode::InclusionExclusion
                                                   : CensusMode::Sample;
        auto res = count_valid_colorings(g, cen_r, cen_k, mode, cen_samples, ctx.seed);
        json j = {{"graph", cen_graph},       {"r", res.r},
                  {"k", res.k},               {"edges", res.edges},
                  {"valid", res.valid.str()}, {"total", res.total.str()},
                  {"log2_valid", res.log2_valid}, {"exact", res.exact},
                  {"fraction", res.fraction}};
        if (!res.exact) j["samples"] = res.samples;
        write_json(ctx, cen_out, j);
      }
    } else if (*part) {
      ctx.subcommand = "partition";
      ctx.parameters = {{"graph", part_graph}, {"coloring", part_coloring}, {"c", part_c}};
      Graph g = load_graph(part_graph);
      auto col = load_coloring(g, part_coloring);
      if (ctx.dry_run) return dry("exact alpha on " + std::to_string(g.n()) + " vertices, " +
                                  std::to_string(col.r) + " colors");
      auto res = partition_by_colors(g, col, part_c);
      json parts = json::array();
      for (const auto& p : res.parts) parts.push_back(p.to_vector());
      json j = {{"c", part_c},           {"threshold", res.threshold}, {"alpha_g", res.alpha_g},
                {"rounds", res.rounds}, {"parts", parts},             {"alpha", res.alpha},
                {"ok", res.ok()}};
      write_json(ctx, part_out, j);
      if (!res.ok()) exit_code = 2;
    } else if (*fam) {
      ctx.subcommand = "family";
      ctx.parameters = {{"t", fam_t}, {"i", fam_i}, {"n", fam_n}, {"samples", fam_samples}, {"seed", ctx.seed},
                        {"rf33", fam_rf33}};
      const int k = fam_rf33 ? 5 : 4 * fam_t + fam_i;
      if (ctx.dry_run) return dry(std::to_string(fam_samples) + " samples on H(" + std::to_string(fam_n) + "," +
                                  std::to_string(k) + ")");
      auto pg = build_h_n_k(fam_n, k, optimize_plan(fam_n, k, Objective::Edges), ctx.seed);
      ColoringFamily f = fam_rf33 ? rf33_family(pg) : generate_lower_bound_family(fam_t, fam_i, pg);
      auto v = validate_family(pg.graph, f, fam_samples, ctx.seed);
      json j = {{"host", "H(" + std::to_string(fam_n) + "," + std::to_string(k) + ")"},
                {"r", f.r},
                {"forbidden", f.forbidden},
                {"free_edges", f.free_edges},
                {"log2_size", f.log2_size()},
                {"samples", v.samples},
                {"failures", v.failures},
                {"max_mono_clique", v.max_mono_clique}};
      if (v.failures > 0) {
        j["witness_coloring"] = v.witness_coloring;
        j["witness_clique"] = v.witness_clique;
        exit_code = 2;
      }
      write_json(ctx, fam_out, j);
    } else if (*sym) {
      ctx.subcommand = "symmetrize";
      ctx.parameters = {{"n", sym_n}, {"t", sym_t}, {"oracle", sym_oracle}, {"input", sym_input}};
      json j;
      if (!sym_input.empty()) {
        WeightedGraph g = read_weighted_graph_file(sym_input);
        if (ctx.dry_run) return dry("symmetrize a weighted graph on " + std::to_string(g.n()) + " vertices");
        auto s1 = run_s1(g);
        auto s2 = run_s2(s1.graph, s1.classes);
        auto st = structure_of(s2.graph);
        j["input"] = {{"n", g.n()}, {"T", rational_json(weighted_triangle_sum(g))},
                      {"weighted_clique_number", weighted_clique_number(g)}};
        json log = json::array();
        for (const auto& r : s1.log) log.push_back(step_json(r));
        for (const auto& r : s2.log) log.push_back(step_json(r));
        j["steps"] = log;
        j["s2_t_decreases"] = s2.t_decreases;
        j["structure"] = structure_json(st);
        if (st.weighted_clique_number() < sym_t) {
          auto sp = apply_splits(st, sym_t);
          json splits = json::array();
          for (const auto& r : sp.log) splits.push_back(split_json(r));
          j["splits"] = splits;
          j["split_structure"] = structure_json(sp.structure);
        }
      } else {
        if (ctx.dry_run) {
          std::string what = "maximize T over normal forms on " + std::to_string(sym_n) + " vertices";
          if (sym_oracle == "exhaustive")
            what += ", exhaustive oracle over 3^" + std::to_string(sym_n * (sym_n - 1) / 2) + " graphs";
          return dry(what);
        }
        auto best = maximize_weighted_triangles(sym_n, sym_t);
        j = {{"n", sym_n}, {"t", sym_t}, {"structure", structure_json(best.structure)},
             {"T", rational_json(best.value())}, {"exhaustive_sizes", best.exhaustive}};
        if (sym_oracle == "exhaustive") {
          auto orc = weighted_bound_oracle(sym_n, sym_t, Quantity::Triangles);
          j["oracle"] = {{"T", rational_json(orc.maximum)},
                         {"graphs", orc.graphs},
                         {"witness", to_text(orc.witness)},
                         {"witness_normal_form", orc.witness_normal_form},
                         {"agrees", orc.maximum == best.value()}};
          if (orc.maximum != best.value()) exit_code = 2;
        }
      }
      write_json(ctx, sym_out, j);
    } else if (*form) {
      ctx.subcommand = "formulas";
      ctx.parameters = {{"table", table}, {"kmin", kmin}, {"kmax", kmax}, {"format", format}};
      if (ctx.dry_run) return dry("table " + table + " for " + std::to_string(kmin) + ".." + std::to_string(kmax));
      json rows = json::array();
      std::ostringstream csv;
      csv << std::setprecision(12);
      auto parity = [](int k) { return k % 2 ? "odd" : "even"; };
      if (table == "a") {
        csv << "t,parity,value,argmax_x\n";
        for (int t = std::max(kmin, 6); t <= kmax; ++t) {
          auto r = a(t);
          double v = static_cast<double>(r.value), x = static_cast<double>(r.argmax_x);
          csv << t << "," << parity(t) << "," << v << "," << x << "\n";
          json row = {{"t", t}, {"parity", parity(t)}, {"value", v}, {"argmax_x", x}};
          if (r.exact) row["exact"] = to_string(*r.exact);
          rows.push_back(row);
        }
      } else {
        csv << "k,parity,numerator,denominator,decimal\n";
        const int lo = std::max(kmin, 3);
        for (int k = lo; k <= kmax; ++k) {
          Rational v = table == "bk" ? b(k) : table == "rf" ? rf_exponent(k) : rt_clique_coefficient(k);
          auto num = boost::multiprecision::numerator(v), den = boost::multiprecision::denominator(v);
          csv << k << "," << parity(k) << "," << num.str() << "," << den.str() << "," << to_double(v) << "\n";
          rows.push_back({{"k", k}, {"parity", parity(k)}, {"numerator", num.str()}, {"denominator", den.str()},
                          {"decimal", to_double(v)}});
        }
      }
      if (format == "csv")
        write_text(ctx, form_out, csv.str());
      else
        write_json(ctx, form_out, rows);
    } else if (*ver) {
      ctx.subcommand = "verify";
      ctx.parameters = {{"suite", suite}, {"only", only}};
      if (ctx.dry_run) return dry(std::to_string(only.empty() ? kAcceptanceCriteria : only.size()) + " criteria");
      if (only.empty())
        for (int i = 1; i <= kAcceptanceCriteria; ++i) only.push_back(i);
      int failed = 0;
      for (int id : only) {
        auto r = run_criterion(id);
        std::cout << format_result(r) << std::endl;
        failed += !r.passed;
      }
      std::cout << (only.size() - failed) << "/" << only.size() << " criteria passed\n";
      if (failed) exit_code = 4;
    }
  } catch (const Error& e) {
    std::cerr << "rtlab: " << e.what() << "\n";
    return e.kind() == ErrorKind::Budget ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "rtlab: " << e.what() << "\n";
    return 2;
  }

  if (!ctx.manifest_path.empty()) {
    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    json m = {{"subcommand", ctx.subcommand}, {"parameters", ctx.parameters}, {"seed", ctx.seed},
              {"artifacts", ctx.artifacts},   {"version", kVersion},          {"threads", omp_get_max_threads()},
              {"wall_seconds", wall},         {"exit_code", exit_code}};
    std::ofstream out(ctx.manifest_path);
    out << m.dump(2) << "\n";
  }
  return exit_code;
}
