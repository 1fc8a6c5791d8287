// Command-line front end. Exit codes: 0 success, 1 violation or
// counterexample (witness printed), 2 invalid input, 3 budget exceeded.

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "berge/berge.hpp"
#include "berge/json_io.hpp"

using namespace berge;

namespace {

constexpr int kOk = 0;
constexpr int kFinding = 1;
constexpr int kInvalid = 2;
constexpr int kBudget = 3;

struct Options {
  std::string in;
  std::string out;
  std::string format;
  std::string mode;
  std::string attach;
  int k = 0;
  int r = 0;
  int n = 0;
  int p = 1;
  int alpha = 0;
  int shadow_p = 2;
  int max_n = BergeLimits{}.max_vertices;
  std::size_t max_edges = BergeLimits{}.max_edges;
  long time_limit_ms = 0;
  int jobs = 1;
  std::uint64_t seed = 0;
  int samples = 1000;
  bool saturate = false;
  bool no_timing = false;
};

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

Hypergraph load_hypergraph(const Options& o) {
  if (o.in.empty()) throw InvalidInput("--in is required");
  if (ends_with(o.in, ".elg")) return as_hypergraph(read_elg_file(o.in));
  return read_hyg_file(o.in);
}

// Graph inputs: .elg directly, or the 2-shadow of a .hyg file.
SimpleGraph load_graph(const Options& o) {
  if (o.in.empty()) throw InvalidInput("--in is required");
  if (ends_with(o.in, ".elg")) return read_elg_file(o.in);
  return shadow_graph(read_hyg_file(o.in));
}

BergeLimits limits(const Options& o) { return BergeLimits{o.max_n, o.max_edges}; }

void need(bool ok, const std::string& what) {
  if (!ok) throw ParameterError(what);
}

std::string pairs_text(const std::vector<ShadowPair>& ps) {
  std::string s;
  for (auto p : ps) s += (s.empty() ? "" : " ") + std::to_string(p.u) + "-" + std::to_string(p.v);
  return s;
}

std::string sets_text(const std::vector<VertexSet>& es) {
  std::string s;
  for (auto e : es) s += (s.empty() ? "" : " ") + e.to_string();
  return s;
}

std::string base_text(const std::vector<Vertex>& vs) {
  std::string s;
  for (Vertex v : vs) s += (s.empty() ? "" : " ") + std::to_string(v);
  return s;
}

class Runner {
 public:
  explicit Runner(const Options& o) : o_(o), json_(o.format != "text") {}

  int shadow() {
    const auto h = load_hypergraph(o_);
    const auto sh = berge::shadow(h, o_.shadow_p);
    Json j{{"p", o_.shadow_p}, {"shadow", to_json_array(sh)}};
    if (o_.shadow_p == 2) j["complement"] = to_json_array(shadow_complement(h));
    if (json_) return emit(j);
    std::cout << o_.shadow_p << "-shadow (" << sh.size() << "): " << sets_text(sh) << "\n";
    if (o_.shadow_p == 2) {
      const auto c = shadow_complement(h);
      std::cout << "complement (" << c.size() << "): " << pairs_text(c) << "\n";
    }
    return kOk;
  }

  int sdrp() {
    const auto h = load_hypergraph(o_);
    const auto s = saturated_sdrp(h);
    if (json_) return emit(to_json(s));
    std::cout << "sdrp (" << s.sdrp.size() << "):";
    for (const auto& e : s.sdrp.entries) std::cout << " " << e.pair.u << "-" << e.pair.v << "->" << e.edge.to_string();
    std::cout << "\nresidual edges (" << s.residual.residual_edges.size() << "): " << sets_text(s.residual.residual_edges)
              << "\nresidual shadow (" << s.residual.residual_shadow.size() << "): "
              << pairs_text(s.residual.residual_shadow) << "\nstrict surplus: "
              << (verify_surplus(s.residual).holds ? "yes" : "no") << "\n";
    return kOk;
  }

  int blocks_cmd() {
    const auto d = blocks(load_graph(o_));
    if (json_) return emit(to_json(d));
    for (std::size_t i = 0; i < d.blocks.size(); ++i)
      std::cout << "block " << i << ": " << d.blocks[i].vertices.to_string() << "\n";
    std::cout << "cut vertices: " << d.cut_vertices.to_string() << "\n";
    return kOk;
  }

  int core() {
    need(o_.alpha >= 0, "--alpha must be >= 0");
    const auto t = disintegrate(load_graph(o_), o_.alpha);
    if (json_) return emit(to_json(t));
    std::cout << "removed:";
    for (auto [v, d] : t.removal_order) std::cout << " " << v << "(" << d << ")";
    std::cout << "\ncore: " << t.core.to_string() << "\n";
    return kOk;
  }

  int berge_cycle() {
    const auto h = load_hypergraph(o_);
    const auto res = longest_berge_cycle(h, limits(o_));
    return report_berge(res, "cycle");
  }

  int berge_path() {
    const auto h = load_hypergraph(o_);
    const auto res = longest_berge_path(h, limits(o_));
    return report_berge(res, "path");
  }

  int gen_blocktree() {
    BlockTreeSpec spec{o_.k, o_.r, o_.p, parse_attachments()};
    if (o_.attach.empty())
      for (int j = 1; j < o_.p; ++j) spec.attachments.push_back({std::size_t(j - 1), o_.k - 2});
    const auto h = build_block_tree(spec);
    const std::string text = write_hyg(h, "block tree k=" + std::to_string(o_.k) + " r=" + std::to_string(o_.r) +
                                              " p=" + std::to_string(o_.p));
    if (!o_.out.empty()) {
      std::ofstream f(o_.out);
      if (!f) throw InvalidInput("cannot write " + o_.out);
      f << text;
    }
    if (json_) {
      return emit(Json{{"n", h.order()}, {"r", h.uniformity()}, {"edges", h.size()},
                       {"bound", to_json(cycle_bound(h.order(), o_.k, o_.r))}, {"hyg", text}});
    }
    if (o_.out.empty()) std::cout << text;
    else std::cout << "wrote " << o_.out << " (n=" << h.order() << ", " << h.size() << " edges)\n";
    return kOk;
  }

  int verify_bound() {
    const auto h = load_hypergraph(o_);
    const auto v = verify_theorem6(h, o_.k, limits(o_));
    Json j{{"status", to_string(v.status)}, {"edges", v.edges}, {"bound", to_json(v.bound)},
           {"block_structure", v.block_structure}, {"detail", v.detail}};
    if (v.long_cycle) j["long_cycle"] = to_json(*v.long_cycle);
    if (v.status == BoundStatus::Violation) j["witness_hyg"] = write_hyg(h);
    if (json_) emit(j);
    else std::cout << to_string(v.status) << ": e = " << v.edges << ", bound = " << to_string(v.bound)
                   << (v.status == BoundStatus::Equality ? ", block characterization confirmed" : "") << "\n"
                   << v.detail << "\n";
    return v.status == BoundStatus::Violation ? kFinding : kOk;
  }

  int verify_paths() {
    const auto h = load_hypergraph(o_);
    const std::string mode = o_.mode.empty() ? "auto" : o_.mode;
    Json j;
    BoundStatus status;
    if (mode == "regime") {
      const auto v = verify_gkl_path_bound(h, o_.k, limits(o_));
      status = v.status;
      j = Json{{"status", to_string(v.status)}, {"regime", v.regime}, {"longest_path", v.longest_path},
               {"edges", v.edges}, {"bound", to_json(v.bound)}, {"detail", v.detail}};
    } else {
      PathBoundMode m = PathBoundMode::Auto;
      if (mode == "connected") m = PathBoundMode::Connected;
      else if (mode == "component") m = PathBoundMode::Component;
      else need(mode == "auto", "--mode must be auto, connected, component or regime");
      const auto v = check_path_bounds(h, o_.k, m, limits(o_));
      status = v.status;
      j = Json{{"status", to_string(v.status)}, {"longest_path", v.longest_path}, {"edges", v.edges},
               {"connected_bound_applied", v.connected_bound_applied},
               {"connected_bound", to_json(v.connected_bound)},
               {"component_bound_applied", v.component_bound_applied},
               {"component_bound", to_json(v.component_bound)},
               {"components_complete", v.components_complete}, {"detail", v.detail}};
    }
    if (status == BoundStatus::Violation) j["witness_hyg"] = write_hyg(h);
    if (json_) emit(j);
    else std::cout << j["status"].get<std::string>() << ": longest path " << j["longest_path"].get<int>() << ", e = "
                   << j["edges"].get<std::int64_t>() << "\n";
    return status == BoundStatus::Violation ? kFinding : kOk;
  }

  int search_max() {
    BoundParams params{o_.n, o_.r, o_.k, SearchMode::Checked};
    if (o_.mode == "probe") params.mode = SearchMode::Probe;
    else need(o_.mode.empty() || o_.mode == "checked", "--mode must be checked or probe");
    SearchBudget budget;
    budget.detector = limits(o_);
    budget.enumeration.jobs = o_.jobs;
    budget.enumeration.time_limit = std::chrono::milliseconds(o_.time_limit_ms);
    const auto rep = search_max_edges(params, budget);
    std::cerr << "elapsed: " << rep.elapsed.count() << " ms\n";
    Json j = to_json(rep);
    // Byte-identical output across runs and --jobs needs the timing zeroed.
    if (o_.no_timing) j["elapsed_ms"] = 0;
    if (json_) emit(j);
    else std::cout << "max edges: " << rep.max_edges_found << " (bound " << to_string(rep.bound) << ", floor "
                   << floor(rep.bound) << ")\nexhaustive: " << (rep.exhaustive ? "yes" : "no")
                   << "\nclasses: " << rep.classes_visited << "\nwitness:\n" << write_hyg(rep.witness);
    if (!rep.exhaustive) return kBudget;
    return rep.within_bound ? kOk : kFinding;
  }

  int bounds_table() {
    // One row per k without --n; one row per (k, n) with n = k..--n otherwise.
    std::vector<int> ks;
    if (o_.k > 0) ks.push_back(o_.k);
    else
      for (int k = std::max(3, o_.r + 1); k <= o_.r + 10; ++k) ks.push_back(k);
    if (o_.format == "csv") {
      std::cout << (o_.n > 0 ? "k,r,c_r_k,n,bound,floor\n" : "k,r,c_r_k\n");
      for (int k : ks) {
        const std::string head = std::to_string(k) + "," + std::to_string(o_.r) + "," + to_string(c_r_k(k, o_.r));
        if (o_.n <= 0) std::cout << head << "\n";
        for (int n = k; n <= o_.n; ++n)
          std::cout << head << "," << n << "," << to_string(cycle_bound(n, k, o_.r)) << ","
                    << floor(cycle_bound(n, k, o_.r)) << "\n";
      }
      return kOk;
    }
    if (o_.format == "json") {
      Json rows = Json::array();
      for (int k : ks) {
        Json row{{"k", k}, {"r", o_.r}, {"c_r_k", to_json(c_r_k(k, o_.r))}};
        if (o_.n > 0) {
          Json bounds = Json::array();
          for (int n = k; n <= o_.n; ++n) bounds.push_back(Json{{"n", n}, {"bound", to_json(cycle_bound(n, k, o_.r))}});
          row["bounds"] = bounds;
        }
        rows.push_back(row);
      }
      return emit(rows);
    }
    for (int k : ks) {
      std::cout << "C_" << o_.r << "(" << k << ") = " << to_string(c_r_k(k, o_.r)) << "\n";
      for (int n = k; n <= o_.n; ++n)
        std::cout << "  n=" << n << ": C_r(k)(n-1) = " << to_string(cycle_bound(n, k, o_.r)) << "\n";
    }
    return kOk;
  }

  int lemma9() {
    const auto v = verify_lemma9(o_.k, o_.r);
    Json j{{"k", v.k}, {"r", v.r}, {"t", v.t}, {"bound", to_json(v.bound)}, {"passed", v.passed},
           {"boundary_mode", v.boundary_mode}, {"max_lhs", v.max_lhs}, {"argmax_a", v.argmax_a},
           {"argmax_s", v.argmax_s}};
    if (v.counterexample) j["counterexample"] = Json{{"a", v.counterexample->first}, {"s", v.counterexample->second}};
    if (json_) emit(j);
    else std::cout << (v.passed ? "pass" : "FAIL") << ": max a + C(s-a, r-1) = " << v.max_lhs << " at a=" << v.argmax_a
                   << " s=" << v.argmax_s << ", bound " << to_string(v.bound) << "\n";
    return v.passed ? kOk : kFinding;
  }

  int lemma10() {
    if (!o_.in.empty()) {
      const auto v = verify_lemma10(load_hypergraph(o_), o_.k);
      Json j = few_vertex_cap_json(v);
      if (!v.passed()) j["witness_hyg"] = write_hyg(load_hypergraph(o_));
      if (json_) emit(j);
      else std::cout << (v.passed() ? "pass" : "FAIL") << ": " << v.edges << " + " << v.missing_pairs << " <= " << v.cap
                     << (v.bound_equality ? ", equality (" + v.fired_branch + ")" : "") << "\n";
      return v.passed() ? kOk : kFinding;
    }
    // Without --in: a seeded random sample on --n vertices.
    need(o_.n >= 2 && o_.r >= 2 && o_.r <= o_.n, "random lemma10 sample needs --n >= --r >= 2");
    need(o_.samples > 0, "--samples must be positive");
    std::mt19937_64 rng(o_.seed);
    std::bernoulli_distribution coin(0.5);
    std::vector<VertexSet> all;
    for_each_subset_of_size(VertexSet::range(1, o_.n), o_.r, [&](VertexSet s) { all.push_back(s); });
    int failures = 0, equalities = 0;
    Json first_failure;
    for (int i = 0; i < o_.samples; ++i) {
      std::vector<VertexSet> edges;
      for (VertexSet e : all)
        if (coin(rng)) edges.push_back(e);
      const Hypergraph h(o_.n, o_.r, edges);
      const auto v = verify_lemma10(h, o_.k);
      equalities += v.cap_equality;
      if (!v.passed() && failures++ == 0) first_failure = write_hyg(h);
    }
    Json j{{"n", o_.n}, {"r", o_.r}, {"k", o_.k}, {"seed", o_.seed}, {"samples", o_.samples},
           {"failures", failures}, {"cap_equalities", equalities}};
    if (failures) j["witness_hyg"] = first_failure;
    if (json_) emit(j);
    else std::cout << o_.samples << " samples, " << failures << " failures, " << equalities << " cap equalities\n";
    return failures ? kFinding : kOk;
  }

  int kopylov() {
    const auto g = load_graph(o_);
    const auto w = kopylov_witness(g, o_.k, o_.saturate, o_.max_n);
    if (json_) return emit(to_json(w));
    std::cout << "case: " << to_string(w.kind) << " (t=" << w.t << ")\n";
    std::cout << "t-core: " << w.t_trace.core.to_string() << "\n";
    if (w.kind == KopylovWitness::Case::Core) std::cout << "s = " << w.s << "\n";
    return kOk;
  }

 private:
  int emit(const Json& j) {
    std::cout << j.dump() << "\n";
    return kOk;
  }

  int report_berge(const BergeResult& res, const char* what) {
    Json j = to_json(res);
    bool geq = false;
    if (o_.k > 0) {
      geq = res.length >= o_.k;
      j["geq_k"] = geq;
    }
    if (json_) return emit(j);
    std::cout << "longest Berge " << what << ": " << res.length << "\n";
    if (res.witness)
      std::cout << "base: " << base_text(res.witness->base) << "\nedges: " << sets_text(res.witness->hyperedges) << "\n";
    if (o_.k > 0) std::cout << "length >= " << o_.k << ": " << (geq ? "yes" : "no") << "\n";
    return kOk;
  }

  // "b:v,b:v,..." with 0-based block index and local vertex.
  std::vector<BlockAttachment> parse_attachments() const {
    std::vector<BlockAttachment> out;
    if (o_.attach.empty()) return out;
    std::stringstream ss(o_.attach);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto colon = item.find(':');
      if (colon == std::string::npos) throw InvalidInput("--attach entries look like block:vertex");
      try {
        out.push_back({std::size_t(std::stoul(item.substr(0, colon))), std::stoi(item.substr(colon + 1))});
      } catch (const std::logic_error&) {
        throw InvalidInput("--attach: bad entry '" + item + "'");
      }
    }
    return out;
  }

  Json few_vertex_cap_json(const FewVertexCapVerdict& v) const {
    Json j{{"w", v.w}, {"r", v.r}, {"k", v.k}, {"edges", v.edges}, {"missing_pairs", v.missing_pairs},
           {"cap", v.cap}, {"cap_holds", v.cap_holds}, {"cap_equality", v.cap_equality},
           {"bound_applicable", v.bound_applicable}};
    if (v.bound_applicable) {
      j["bound"] = to_json(v.bound);
      j["bound_equality"] = v.bound_equality;
      j["predicted_branch"] = v.predicted_branch;
      j["fired_branch"] = v.fired_branch;
    }
    j["passed"] = v.passed();
    return j;
  }

  const Options& o_;
  bool json_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Berge cycles and paths in uniform hypergraphs"};
  app.require_subcommand(1);
  Options o;

  auto add_in = [&](CLI::App* s) { s->add_option("--in", o.in, "input .hyg or .elg file")->required(); };
  auto add_k = [&](CLI::App* s, bool required) {
    auto* opt = s->add_option("--k", o.k, "length threshold");
    if (required) opt->required();
  };
  auto add_format = [&](CLI::App* s) {
    s->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_budget = [&](CLI::App* s) {
    s->add_option("--max-n", o.max_n, "largest vertex count for exact search")->check(CLI::PositiveNumber);
    s->add_option("--max-edges", o.max_edges, "largest edge count for exact search")->check(CLI::PositiveNumber);
  };

  auto* shadow = app.add_subcommand("shadow", "p-shadow and 2-shadow complement");
  add_in(shadow);
  shadow->add_option("--p", o.shadow_p, "shadow level");
  add_format(shadow);

  auto* sdrp = app.add_subcommand("sdrp", "saturated system of distinct representative pairs");
  add_in(sdrp);
  add_format(sdrp);

  auto* blocks = app.add_subcommand("blocks", "block decomposition of a graph or 2-shadow");
  add_in(blocks);
  add_format(blocks);

  auto* core = app.add_subcommand("core", "alpha-disintegration and its core");
  add_in(core);
  core->add_option("--alpha", o.alpha, "degree threshold")->required();
  add_format(core);

  auto* cycle = app.add_subcommand("berge-cycle", "longest Berge cycle");
  add_in(cycle);
  add_k(cycle, false);
  add_budget(cycle);
  add_format(cycle);

  auto* path = app.add_subcommand("berge-path", "longest Berge path");
  add_in(path);
  add_k(path, false);
  add_budget(path);
  add_format(path);

  auto* gen = app.add_subcommand("gen-blocktree", "glue complete (k-1)-vertex blocks along a tree");
  add_k(gen, true);
  gen->add_option("--r", o.r, "uniformity")->required();
  gen->add_option("--p", o.p, "number of blocks");
  gen->add_option("--attach", o.attach, "block:vertex,... for blocks 1..p-1 (default: a chain)");
  gen->add_option("--out", o.out, "write the .hyg here");
  add_format(gen);

  auto* verify = app.add_subcommand("verify-bound", "check the long-cycle edge bound");
  add_in(verify);
  add_k(verify, true);
  add_budget(verify);
  add_format(verify);

  auto* paths = app.add_subcommand("verify-paths", "check the Berge path edge bounds");
  add_in(paths);
  add_k(paths, true);
  paths->add_option("--mode", o.mode, "auto, connected, component or regime");
  add_budget(paths);
  add_format(paths);

  auto* search = app.add_subcommand("search-max", "exhaustive maximum edge count without long Berge cycles");
  search->add_option("--n", o.n, "vertex count")->required();
  search->add_option("--r", o.r, "uniformity")->required();
  add_k(search, true);
  search->add_option("--mode", o.mode, "checked (k >= r+3, default) or probe (k = r+2)");
  search->add_option("--time-limit", o.time_limit_ms, "milliseconds; 0 means none")->check(CLI::NonNegativeNumber);
  search->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  search->add_flag("--no-timing", o.no_timing, "report elapsed_ms as 0 for reproducible output");
  add_budget(search);
  add_format(search);

  auto* table = app.add_subcommand("bounds-table", "C_r(k) and C_r(k)(n-1)");
  table->add_option("--r", o.r, "uniformity")->required();
  add_k(table, false);
  table->add_option("--n", o.n, "also tabulate C_r(k)(n-1) for n = k..this");
  table->add_option("--format", o.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));

  auto* l9 = app.add_subcommand("lemma9", "a + C(s-a, r-1) <= C_r(k) for all 0 <= a <= s <= t");
  add_k(l9, true);
  l9->add_option("--r", o.r, "uniformity")->required();
  add_format(l9);

  auto* l10 = app.add_subcommand("lemma10", "edges plus missing shadow pairs on few vertices");
  l10->add_option("--in", o.in, "input .hyg (omit for a random sample)");
  add_k(l10, true);
  l10->add_option("--n", o.n, "sample vertex count");
  l10->add_option("--r", o.r, "sample uniformity");
  l10->add_option("--samples", o.samples, "sample size");
  l10->add_option("--seed", o.seed, "random seed");
  add_format(l10);

  auto* kop = app.add_subcommand("kopylov", "structure witness for 2-connected graphs without long cycles");
  add_in(kop);
  add_k(kop, true);
  kop->add_flag("--saturate", o.saturate, "saturate the graph first");
  kop->add_option("--max-n", o.max_n, "largest vertex count for exact search")->check(CLI::PositiveNumber);
  add_format(kop);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }
  if (o.format.empty()) o.format = table->parsed() ? "text" : "json";
  // The long-cycle search can afford more edges than the standalone detector default.
  if (search->parsed() && search->count("--max-edges") == 0) o.max_edges = SearchBudget{}.detector.max_edges;
  if (kop->parsed() && kop->count("--max-n") == 0) o.max_n = kGraphSearchMaxVertices;

  Runner run(o);
  try {
    if (shadow->parsed()) return run.shadow();
    if (sdrp->parsed()) return run.sdrp();
    if (blocks->parsed()) return run.blocks_cmd();
    if (core->parsed()) return run.core();
    if (cycle->parsed()) return run.berge_cycle();
    if (path->parsed()) return run.berge_path();
    if (gen->parsed()) return run.gen_blocktree();
    if (verify->parsed()) return run.verify_bound();
    if (paths->parsed()) return run.verify_paths();
    if (search->parsed()) return run.search_max();
    if (table->parsed()) return run.bounds_table();
    if (l9->parsed()) return run.lemma9();
    if (l10->parsed()) return run.lemma10();
    if (kop->parsed()) return run.kopylov();
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency failure: " << e.what() << "\n";
    return kFinding;
  } catch (const Error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}
