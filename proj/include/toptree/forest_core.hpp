#ifndef TOPTREE_FOREST_CORE_HPP
#define TOPTREE_FOREST_CORE_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "toptree/core.hpp"

namespace toptree {

// Vertex/edge identity and adjacency bookkeeping for the underlying
// dynamic forest. Vertices are create-only; edge identifiers are retired
// on cut and never recycled. Acyclicity is the caller's (engine's)
// responsibility; this layer only stores incidence.
class ForestTopology {
 public:
  struct EdgeRecord {
    VertexId u = kNoVertex;
    VertexId v = kNoVertex;
    Weight weight = 0;
    bool live = false;
    // position of this edge inside the adjacency vector of u resp. v
    std::uint32_t pos_at[2] = {0, 0};
  };

  VertexId new_vertex() {
    adjacency_.emplace_back();
    return static_cast<VertexId>(adjacency_.size() - 1);
  }

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t live_edge_count() const { return live_edges_; }
  std::size_t issued_edge_count() const { return edges_.size(); }

  bool has_vertex(VertexId v) const { return v < adjacency_.size(); }
  bool edge_live(EdgeId e) const { return e < edges_.size() && edges_[e].live; }

  void require_vertex(VertexId v) const {
    if (!has_vertex(v)) raise(Errc::unknown_vertex, "unknown vertex");
  }
  void require_edge(EdgeId e) const {
    if (!edge_live(e)) raise(Errc::unknown_edge, "unknown or retired edge");
  }

  // Canonical smaller-id-first endpoint pair.
  std::pair<VertexId, VertexId> endpoints(EdgeId e) const {
    require_edge(e);
    const EdgeRecord& r = edges_[e];
    return r.u < r.v ? std::pair{r.u, r.v} : std::pair{r.v, r.u};
  }

  std::size_t degree(VertexId v) const {
    require_vertex(v);
    return adjacency_[v].size();
  }

  const std::vector<EdgeId>& incident_edges(VertexId v) const {
    return adjacency_[v];
  }

  const EdgeRecord& edge(EdgeId e) const { return edges_[e]; }
  Weight edge_weight(EdgeId e) const { return edges_[e].weight; }
  void set_edge_weight(EdgeId e, Weight w) { edges_[e].weight = w; }

  VertexId other_endpoint(EdgeId e, VertexId v) const {
    const EdgeRecord& r = edges_[e];
    return r.u == v ? r.v : r.u;
  }

  EdgeId add_edge(VertexId u, VertexId v, Weight w) {
    EdgeId id = static_cast<EdgeId>(edges_.size());
    EdgeRecord rec;
    rec.u = u;
    rec.v = v;
    rec.weight = w;
    rec.live = true;
    rec.pos_at[0] = static_cast<std::uint32_t>(adjacency_[u].size());
    rec.pos_at[1] = static_cast<std::uint32_t>(adjacency_[v].size());
    adjacency_[u].push_back(id);
    adjacency_[v].push_back(id);
    edges_.push_back(rec);
    ++live_edges_;
    return id;
  }

  void remove_edge(EdgeId e) {
    EdgeRecord& r = edges_[e];
    detach(r.u, r.pos_at[0]);
    detach(r.v, r.pos_at[1]);
    r.live = false;
    --live_edges_;
  }

 private:
  void detach(VertexId v, std::uint32_t pos) {
    auto& list = adjacency_[v];
    EdgeId moved = list.back();
    list[pos] = moved;
    list.pop_back();
    if (pos < list.size()) {
      EdgeRecord& m = edges_[moved];
      if (m.u == v) m.pos_at[0] = pos;
      // not else: self-loops are rejected upstream, endpoints distinct
      if (m.v == v) m.pos_at[1] = pos;
    }
  }

  std::vector<std::vector<EdgeId>> adjacency_;
  std::vector<EdgeRecord> edges_;
  std::size_t live_edges_ = 0;
};

}  // namespace toptree

#endif  // TOPTREE_FOREST_CORE_HPP
