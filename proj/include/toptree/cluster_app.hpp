#ifndef TOPTREE_CLUSTER_APP_HPP
#define TOPTREE_CLUSTER_APP_HPP

#include <array>
#include <cstdint>
#include <span>
#include <string>

#include "toptree/core.hpp"

namespace toptree {

// Which of the join shapes produced a cluster. The shared vertex c is the
// single vertex the two children have in common.
enum class MergeCase : std::uint8_t {
  kLeaf,          // base cluster of a single edge
  kCompress,      // path + path, c internal, parent is a path cluster
  kRakePath,      // path + point raked at a path end, parent is a path cluster
  kCollapsePath,  // path + point with c internal, parent is a point cluster
  kRakePoint,     // point + point, c stays, parent is a point cluster
  kRootEmpty,     // point + point, c internal; parent covers a whole tree
};

const char* merge_case_name(MergeCase c);

// Aggregates for the path-weight profile: an associative aggregate over
// the cluster path with a lazy addend, the off-path aggregate, and the
// (weighted, hop) cluster-path lengths.
struct PathAnn {
  OptWeight agg;       // aggregate over pi(C); absent for point clusters
  OptWeight non_path;  // aggregate over edges of C off pi(C)
  Weight extra = 0;    // lazy addend pending for path descendants
  Weight length = 0;   // weighted length of pi(C)
  Weight hops = 0;     // edge count of pi(C)
};

// One (distance, witness) entry per boundary-vertex slot.
struct MarkEntry {
  Weight dist = 0;
  VertexId witness = kNoVertex;
  bool present = false;
};

// Aggregates for the metric profile: cluster-path lengths, diameter,
// per-boundary max distances, internal vertex weight, nearest-mark data.
struct MetricAnn {
  Weight length = 0;
  Weight hops = 0;
  Weight diam = 0;
  Weight max_dist[2] = {0, 0};  // indexed by boundary slot
  Weight int_weight = 0;        // vert_weight(C \ boundary(C))
  MarkEntry mark[2];            // indexed by boundary slot
};

// Fixed-size annotation slot owned by each cluster node. The profiles
// never coexist on one forest, so they share storage.
union Annotation {
  PathAnn path;
  MetricAnn metric;
  std::array<std::int64_t, 8> scratch;
  Annotation() : scratch{} {}
};

struct LeafInfo {
  EdgeId edge = kNoEdge;
  VertexId u = kNoVertex;  // canonical order, u < v
  VertexId v = kNoVertex;
  Weight weight = 0;
  std::span<const VertexId> boundary;  // 0..2 vertices
};

struct ChildView {
  const Annotation* ann = nullptr;
  std::span<const VertexId> boundary;
  bool path_child = false;  // shares an edge with the parent cluster path
};

struct JoinInfo {
  ChildView a, b;
  std::span<const VertexId> boundary;  // parent boundary, 0..2 vertices
  VertexId shared = kNoVertex;         // c = A intersect B
  bool shared_on_boundary = false;     // c in boundary(parent)
  MergeCase mcase = MergeCase::kCompress;
};

struct MutableChildView {
  Annotation* ann = nullptr;
  std::span<const VertexId> boundary;
  bool path_child = false;
};

struct SplitInfo {
  const Annotation* parent = nullptr;
  MutableChildView a, b;
  std::span<const VertexId> boundary;
  VertexId shared = kNoVertex;
  bool shared_on_boundary = false;
  MergeCase mcase = MergeCase::kCompress;
};

// User-supplied cluster callbacks. Callbacks are pure with respect to the
// engine: they may read and write only the annotation slots handed to them
// (plus application-owned vertex tables).
class ClusterApp {
 public:
  virtual ~ClusterApp() = default;

  virtual void create(const LeafInfo& leaf, Annotation& out) = 0;
  virtual void join(const JoinInfo& info, Annotation& out) = 0;
  virtual void split(const SplitInfo& info) { (void)info; }
  // destroy may persist state back into the forest's edge weight.
  virtual void destroy(const LeafInfo& leaf, Annotation& ann,
                       Weight& stored_weight) {
    (void)leaf;
    (void)ann;
    (void)stored_weight;
  }
  virtual void serialize(const Annotation& ann, std::string& out) const = 0;
};

}  // namespace toptree

#endif  // TOPTREE_CLUSTER_APP_HPP
