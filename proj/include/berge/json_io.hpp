#pragma once

#include <string>

#include "json.hpp"

#include "berge/berge_search.hpp"
#include "berge/extremal.hpp"
#include "berge/graph_structure.hpp"
#include "berge/io.hpp"
#include "berge/sdrp.hpp"

namespace berge {

using Json = nlohmann::ordered_json;

inline Json to_json(VertexSet s) { return Json(s.vertices()); }
inline Json to_json(ShadowPair p) { return Json::array({p.u, p.v}); }

template <class T>
Json to_json_array(const std::vector<T>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(to_json(x));
  return a;
}

inline Json to_json(const Rational& q) { return Json{{"numerator", q.numerator()}, {"denominator", q.denominator()}}; }

/// {"length", "base", "edges", "exhaustive"} for a Berge search result.
inline Json to_json(const BergeResult& res) {
  Json j;
  j["length"] = res.length;
  j["base"] = res.witness ? Json(res.witness->base) : Json::array();
  j["edges"] = res.witness ? to_json_array(res.witness->hyperedges) : Json::array();
  j["exhaustive"] = res.exhaustive;
  return j;
}

inline Json to_json(const BergeEmbedding& emb) {
  return Json{{"kind", to_string(emb.kind)},
              {"length", emb.length()},
              {"base", emb.base},
              {"edges", to_json_array(emb.hyperedges)}};
}

/// SDRP as [{pair:[u,v], edge:[...]}], with the residual listed separately.
inline Json to_json(const SaturatedSdrp& s) {
  Json entries = Json::array();
  for (const auto& e : s.sdrp.entries) entries.push_back(Json{{"pair", to_json(e.pair)}, {"edge", to_json(e.edge)}});
  return Json{{"sdrp", entries},
              {"residual_edges", to_json_array(s.residual.residual_edges)},
              {"residual_shadow", to_json_array(s.residual.residual_shadow)},
              {"surplus", verify_surplus(s.residual).holds}};
}

inline Json to_json(const BlockDecomposition& d) {
  Json blocks = Json::array();
  for (const auto& b : d.blocks) blocks.push_back(Json{{"vertices", to_json(b.vertices)}, {"edges", to_json_array(b.edges)}});
  Json tree = Json::array();
  for (const auto& [v, idx] : d.cut_vertex_blocks) tree.push_back(Json{{"cut_vertex", v}, {"blocks", idx}});
  return Json{{"blocks", blocks}, {"cut_vertices", to_json(d.cut_vertices)}, {"block_tree", tree}};
}

inline Json to_json(const DisintegrationTrace& t) {
  Json order = Json::array();
  for (auto [v, d] : t.removal_order) order.push_back(Json{{"vertex", v}, {"degree", d}});
  return Json{{"alpha", t.alpha}, {"removal_order", order}, {"core", to_json(t.core)}};
}

inline Json to_json(const KopylovWitness& w) {
  Json j{{"case", to_string(w.kind)}, {"k", w.k}, {"t", w.t}, {"t_trace", to_json(w.t_trace)}};
  if (w.kind == KopylovWitness::Case::Core) {
    j["s"] = w.s;
    j["complement_trace"] = to_json(w.complement_trace);
  }
  return j;
}

/// {params:{n,r,k,mode}, max_edges, bound_numerator, bound_denominator,
///  witness_hyg, exhaustive, classes_visited, elapsed_ms}
inline Json to_json(const SearchReport& rep) {
  return Json{{"params", {{"n", rep.params.n}, {"r", rep.params.r}, {"k", rep.params.k}, {"mode", to_string(rep.params.mode)}}},
              {"max_edges", rep.max_edges_found},
              {"bound_numerator", rep.bound.numerator()},
              {"bound_denominator", rep.bound.denominator()},
              {"within_bound", rep.within_bound},
              {"witness_hyg", write_hyg(rep.witness)},
              {"exhaustive", rep.exhaustive},
              {"classes_visited", rep.classes_visited},
              {"elapsed_ms", rep.elapsed.count()}};
}

}  // namespace berge
