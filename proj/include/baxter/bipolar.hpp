#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "baxter/error.hpp"
#include "baxter/permutation.hpp"
#include "baxter/walk.hpp"

namespace baxter {

/// Embedded plane bipolar orientation with 0-based vertex and edge ids.
///
/// The embedding is a split rotation: for each vertex its outgoing and its
/// incoming edges, each listed left to right. Functions other than
/// `validate_map` assume a valid map.
struct BipolarOrientation {
  std::vector<std::pair<int, int>> edges;  // (tail, head)
  std::vector<std::vector<int>> out_order;
  std::vector<std::vector<int>> in_order;
  int source = 0;
  int sink = 0;

  std::size_t size() const { return edges.size(); }
  std::size_t vertex_count() const { return out_order.size(); }
  int tail(int e) const { return edges[static_cast<std::size_t>(e)].first; }
  int head(int e) const { return edges[static_cast<std::size_t>(e)].second; }

  friend bool operator==(const BipolarOrientation&, const BipolarOrientation&) = default;
};

enum class MapErrorKind { CycleDetected, MultipleSources, MultipleSinks, EmbeddingInconsistent };

std::string to_string(MapErrorKind kind);

class MapValidationError : public InvalidArgument {
 public:
  MapValidationError(MapErrorKind kind, const std::string& detail);
  MapErrorKind kind() const { return kind_; }

 private:
  MapErrorKind kind_;
};

struct MapSummary {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  /// Inner faces plus the two outer faces (left and right of the map).
  std::size_t faces = 0;
};

/// Checks acyclicity, the poles, and the embedding (Euler's formula by face
/// tracing, poles on a common outer face). Throws MapValidationError.
MapSummary validate_map(const BipolarOrientation& m);

/// Single edge from source 0 to sink 1.
BipolarOrientation single_edge_map();

/// Flip every edge and exchange source and sink.
BipolarOrientation reverse(const BipolarOrientation& m);

/// Dual orientation with the same edge ids: the primal right outer face is
/// the dual source (vertex 0), the left outer face is the dual sink (last
/// vertex), and each dual edge crosses its primal edge from right to left.
BipolarOrientation dual(const BipolarOrientation& m);

struct DownRightTree {
  /// Parent edge of each edge, or -1 when the edge hangs from the root.
  std::vector<int> parent;
  /// Edge ids in clockwise contour order.
  std::vector<int> exploration;
  /// Tree distance of each vertex from the source.
  std::vector<int> depth;
};

DownRightTree down_right_tree(const BipolarOrientation& m);

/// The walk encoding of a map (interface order of its edges).
QuadrantWalk to_walk(const BipolarOrientation& m);

/// Inverse of `to_walk`.
BipolarOrientation from_walk(const QuadrantWalk& w);

/// Baxter permutation from the explorations of T(m) and T(dual(m)).
Permutation to_baxter(const BipolarOrientation& m);

/// Relabeling with edges in exploration order and vertices by first visit,
/// so that isomorphic maps compare equal.
BipolarOrientation canonical(const BipolarOrientation& m);

}  // namespace baxter
