#ifndef TOPTREE_ENGINE_HPP
#define TOPTREE_ENGINE_HPP

#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "toptree/cluster_app.hpp"
#include "toptree/core.hpp"
#include "toptree/forest_core.hpp"

namespace toptree {

// One top-tree node. Leaves are the edges of the underlying tree; an
// internal node is the union of its two children, which intersect in the
// single vertex `shared`. Nodes are immutable once formed except for the
// annotation slot; boundary changes are delivered by replacing nodes.
struct Cluster {
  Cluster* parent = nullptr;
  Cluster* child[2] = {nullptr, nullptr};

  VertexId boundary[2] = {kNoVertex, kNoVertex};
  std::uint8_t bcount = 0;
  // number of underlying edges incident to boundary[i] that lie inside
  // this cluster; drives the boundary computation of joins
  std::uint32_t edges_at[2] = {0, 0};

  MergeCase mcase = MergeCase::kLeaf;
  VertexId shared = kNoVertex;  // join: A intersect B; leaves: none
  // vertices first internal at this node (leaf: 0..2, join: the dropped
  // shared vertex or none)
  VertexId internalized[2] = {kNoVertex, kNoVertex};

  EdgeId edge = kNoEdge;  // leaves only

  std::uint32_t size = 0;    // underlying edge count
  std::uint32_t height = 0;  // leaf = 0
  std::uint32_t level = 0;   // contraction round the node was formed in
  std::uint64_t seq = 0;     // stable creation sequence number

  bool dying = false;    // marked for replacement by the current update
  bool overlay = false;  // temporary node built by expose or search

  Annotation ann;

  // registry positions (engine bookkeeping)
  std::uint32_t parentless_pos[2] = {0, 0};
  std::uint32_t root_registry_pos = 0;

  bool is_leaf() const { return child[0] == nullptr; }
  bool is_path() const { return bcount == 2; }
  bool is_point() const { return bcount == 1; }

  int slot_of(VertexId v) const {
    if (bcount > 0 && boundary[0] == v) return 0;
    if (bcount > 1 && boundary[1] == v) return 1;
    return -1;
  }
  VertexId other_boundary(VertexId v) const {
    return boundary[boundary[0] == v ? 1 : 0];
  }
  std::span<const VertexId> boundary_span() const {
    return {boundary, static_cast<std::size_t>(bcount)};
  }

  bool path_child_a() const { return mcase == MergeCase::kCompress || mcase == MergeCase::kRakePath; }
  bool path_child_b() const { return mcase == MergeCase::kCompress; }
  // child[0] is always arranged to be the path child in kRakePath
};

class TopTree {
 public:
  struct Options {
    bool audit_every_op = false;  // full structural audit per update
    bool trace = false;           // keep a callback log per operation
  };

  struct Counters {
    std::uint64_t creates = 0;
    std::uint64_t destroys = 0;
    std::uint64_t joins = 0;
    std::uint64_t splits = 0;
    std::uint64_t joins_plus_splits() const { return joins + splits; }
  };

  struct OpStats {
    std::uint64_t creates = 0;
    std::uint64_t destroys = 0;
    std::uint64_t joins = 0;
    std::uint64_t splits = 0;
    std::size_t involved_edges = 0;  // size of the trees touched by the op
    std::uint64_t joins_plus_splits() const { return joins + splits; }
  };

  enum class Phase : std::uint8_t { kSplit, kDestroy, kUpdate, kCreate, kJoin };

  struct TraceEvent {
    Phase phase = Phase::kUpdate;
    MergeCase mcase = MergeCase::kLeaf;
    EdgeId edge = kNoEdge;
    std::uint64_t node_seq = 0;
    std::uint64_t parent_seq = 0;  // at fire time; 0 = none
    std::uint8_t bcount = 0;
    bool overlay = false;
    // split justification: the touched vertex this kill chain started
    // from, or the vertex of the first killed descendant
    VertexId reason_vertex = kNoVertex;
    bool reason_is_ancestor = false;
  };

  struct LinkOp {
    VertexId u, v;
    Weight w;
  };
  struct CutOp {
    EdgeId e;
  };
  struct ExposeOp {
    VertexId u;
    VertexId v = kNoVertex;
  };
  using Update = std::variant<LinkOp, CutOp, ExposeOp>;

  explicit TopTree(ClusterApp* app, Options opts = {});
  ~TopTree();

  TopTree(const TopTree&) = delete;
  TopTree& operator=(const TopTree&) = delete;

  // forest surface
  VertexId new_vertex();
  std::size_t vertex_count() const { return topo_.vertex_count(); }
  std::size_t edge_count() const { return topo_.live_edge_count(); }
  std::pair<VertexId, VertexId> endpoints(EdgeId e) const {
    return topo_.endpoints(e);
  }
  std::size_t degree(VertexId v) const { return topo_.degree(v); }
  Weight edge_weight(EdgeId e) const {
    topo_.require_edge(e);
    return topo_.edge_weight(e);
  }
  void set_edge_weight(EdgeId e, Weight w) { topo_.set_edge_weight(e, w); }
  const ForestTopology& topology() const { return topo_; }

  // forest updates
  EdgeId link(VertexId u, VertexId v, Weight w);
  void cut(EdgeId e);
  const Cluster* expose(VertexId u);
  const Cluster* expose(VertexId u, VertexId v);
  void deexpose();
  std::vector<EdgeId> composite(std::span<const Update> updates);

  // queries
  const Cluster* top_root(VertexId v) const;
  Cluster* top_root_mutable(VertexId v);
  bool connected(VertexId u, VertexId v) const;
  bool is_exposed(VertexId v) const;
  // C(v): smallest cluster v is internal to; root cluster when v is an
  // external boundary vertex; null for isolated vertices
  const Cluster* smallest_enclosing(VertexId v) const;

  // instrumentation
  const Counters& counters() const { return counters_; }
  const OpStats& last_op() const { return last_op_; }
  const std::vector<TraceEvent>& trace() const { return trace_; }
  void set_trace(bool on) { opts_.trace = on; }
  void set_audit_every_op(bool on) { opts_.audit_every_op = on; }
  std::size_t live_cluster_count() const { return live_nodes_; }
  std::span<Cluster* const> roots() const { return root_registry_; }

  // canonical serialization of one top tree / the whole forest:
  // shape + boundaries + merge cases + annotations
  std::string snapshot(const Cluster* root) const;
  std::string snapshot_tree_of(VertexId v) const;
  std::string snapshot_forest() const;

  // full structural audit; throws std::logic_error on any violation
  void audit() const;

  ClusterApp* app() { return app_; }

  // --- non-local search support (see search.hpp) ---
  // Raw top-tree modifications on root clusters. They fire callbacks and
  // maintain registries but bypass the balancer; every call must be
  // reverted in LIFO order before the next forest update.
  Cluster* raw_join(Cluster* a, Cluster* b);        // overlay node
  void raw_unjoin(Cluster* z);                      // reverse of raw_join
  void raw_split_root(Cluster* c);                  // suspend c
  void raw_rejoin(Cluster* c);                      // reverse of raw_split
  bool in_search() const { return in_search_; }
  void begin_search();
  void end_search();

 private:
  struct VertexState {
    Cluster* smallest = nullptr;  // internalizer; null if never internal
    bool ext = false;             // current external boundary flag
    std::vector<Cluster*> parentless;  // parentless clusters with v on
                                       // their boundary
  };

  struct JoinShape {
    VertexId shared = kNoVertex;
    bool drop = false;  // shared vertex becomes internal
    VertexId boundary[2] = {kNoVertex, kNoVertex};
    std::uint8_t bcount = 0;
    std::uint32_t edges_at[2] = {0, 0};
    MergeCase mcase = MergeCase::kCompress;
    bool a_is_path_child = false;
    bool b_is_path_child = false;
    bool swap_children = false;  // arrange path child into slot 0
  };

  struct ExposureRecord {
    VertexId verts[2] = {kNoVertex, kNoVertex};
    int nverts = 0;
    // log of the overlay, in build order
    struct Entry {
      enum Kind : std::uint8_t { kSplitOriginal, kRebuildLeaf, kJoinOverlay } kind;
      Cluster* node = nullptr;   // split original / overlay join node
      EdgeId edge = kNoEdge;     // rebuilt leaf
      Cluster* old_leaf = nullptr;
      Cluster* new_leaf = nullptr;
    };
    std::vector<Entry> log;
  };

  // node lifecycle
  Cluster* alloc_node();
  void free_node(Cluster* n);

  // registries
  void register_parentless(Cluster* n);
  void unregister_parentless(Cluster* n);

  // boundary math
  void leaf_shape(EdgeId e, Cluster* out) const;
  std::optional<JoinShape> join_shape(const Cluster* a, const Cluster* b) const;
  void apply_join_shape(Cluster* z, Cluster* a, Cluster* b, const JoinShape& s);

  // callbacks + trace
  void fire_create(Cluster* leaf);
  void fire_destroy(Cluster* leaf);
  void fire_join(Cluster* z);
  void fire_split(Cluster* z);
  LeafInfo leaf_info(const Cluster* leaf) const;
  JoinInfo join_info(const Cluster* z) const;
  SplitInfo split_info(Cluster* z) const;
  void push_trace(Phase ph, const Cluster* n, VertexId reason, bool ancestor);

  // structural update machinery
  struct Batch {
    std::vector<std::tuple<VertexId, VertexId, Weight>> links;
    std::vector<EdgeId> cuts;
  };
  std::vector<EdgeId> apply_structural(const Batch& batch);
  void kill_chain_from(Cluster* n, VertexId reason);
  void contract(std::vector<Cluster*>& pieces, bool as_overlay,
                ExposureRecord* log);

  // exposure overlay
  void build_exposure(VertexId u, VertexId v);
  void revert_exposure(std::size_t index);
  void revert_exposures_touching(const std::vector<VertexId>& verts);
  int find_exposure_of_tree(const Cluster* root) const;

  void begin_op();
  void finish_op(std::size_t involved_edges);
  void check_not_searching() const;

  const Cluster* root_from(const Cluster* n) const;

  void audit_node(const Cluster* n, std::vector<int>& edge_seen,
                  std::size_t& node_count) const;

  ForestTopology topo_;
  std::vector<VertexState> vstate_;
  std::vector<Cluster*> leaf_of_edge_;  // EdgeId -> live leaf node
  std::vector<Cluster*> root_registry_;

  std::deque<Cluster> pool_;
  std::vector<Cluster*> free_list_;
  std::size_t live_nodes_ = 0;
  std::uint64_t next_seq_ = 1;

  std::vector<ExposureRecord> exposures_;

  ClusterApp* app_;
  Options opts_;
  Counters counters_;
  OpStats last_op_;
  Counters op_start_marks_;
  std::vector<TraceEvent> trace_;
  bool in_search_ = false;
};

}  // namespace toptree

#endif  // TOPTREE_ENGINE_HPP
