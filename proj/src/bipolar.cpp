#include "baxter/bipolar.hpp"

#include <algorithm>
#include <numeric>

namespace baxter {

std::string to_string(MapErrorKind kind) {
  switch (kind) {
    case MapErrorKind::CycleDetected: return "cycle-detected";
    case MapErrorKind::MultipleSources: return "multiple-sources";
    case MapErrorKind::MultipleSinks: return "multiple-sinks";
    case MapErrorKind::EmbeddingInconsistent: return "embedding-inconsistent";
  }
  return "unknown";
}

MapValidationError::MapValidationError(MapErrorKind kind, const std::string& detail)
    : InvalidArgument(to_string(kind) + ": " + detail), kind_(kind) {}

namespace {

[[noreturn]] void fail(MapErrorKind kind, const std::string& detail) {
  throw MapValidationError(kind, detail);
}

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

}  // namespace

MapSummary validate_map(const BipolarOrientation& m) {
  const std::size_t nv = m.out_order.size();
  const std::size_t ne = m.edges.size();
  using enum MapErrorKind;
  if (ne == 0) fail(EmbeddingInconsistent, "map has no edges");
  if (m.in_order.size() != nv) fail(EmbeddingInconsistent, "out/in tables differ in length");
  for (const auto& [t, h] : m.edges)
    if (t < 0 || h < 0 || idx(t) >= nv || idx(h) >= nv || t == h)
      fail(EmbeddingInconsistent, "edge endpoint out of range or loop");
  // Each edge listed exactly once at its tail and once at its head.
  std::vector<int> seen_out(ne, 0), seen_in(ne, 0);
  for (std::size_t v = 0; v < nv; ++v) {
    for (int e : m.out_order[v]) {
      if (e < 0 || idx(e) >= ne || idx(m.tail(e)) != v)
        fail(EmbeddingInconsistent, "out_order lists a foreign edge");
      ++seen_out[idx(e)];
    }
    for (int e : m.in_order[v]) {
      if (e < 0 || idx(e) >= ne || idx(m.head(e)) != v)
        fail(EmbeddingInconsistent, "in_order lists a foreign edge");
      ++seen_in[idx(e)];
    }
  }
  for (std::size_t e = 0; e < ne; ++e)
    if (seen_out[e] != 1 || seen_in[e] != 1)
      fail(EmbeddingInconsistent, "edge not listed exactly once at each end");

  // Kahn's algorithm.
  std::vector<std::size_t> indeg(nv);
  for (std::size_t v = 0; v < nv; ++v) indeg[v] = m.in_order[v].size();
  std::vector<std::size_t> queue;
  for (std::size_t v = 0; v < nv; ++v)
    if (indeg[v] == 0) queue.push_back(v);
  for (std::size_t q = 0; q < queue.size(); ++q)
    for (int e : m.out_order[queue[q]])
      if (--indeg[idx(m.head(e))] == 0) queue.push_back(idx(m.head(e)));
  if (queue.size() != nv) fail(CycleDetected, "orientation has a directed cycle");

  std::size_t sources = 0, sinks = 0;
  for (std::size_t v = 0; v < nv; ++v) {
    if (m.out_order[v].empty() && m.in_order[v].empty())
      fail(EmbeddingInconsistent, "isolated vertex");
    if (m.in_order[v].empty()) ++sources;
    if (m.out_order[v].empty()) ++sinks;
  }
  if (sources != 1) fail(MultipleSources, std::to_string(sources) + " sources");
  if (sinks != 1) fail(MultipleSinks, std::to_string(sinks) + " sinks");
  if (m.source < 0 || idx(m.source) >= nv || !m.in_order[idx(m.source)].empty())
    fail(EmbeddingInconsistent, "declared source is not the source");
  if (m.sink < 0 || idx(m.sink) >= nv || !m.out_order[idx(m.sink)].empty())
    fail(EmbeddingInconsistent, "declared sink is not the sink");

  // Face tracing. Dart 2e leaves the tail of e, dart 2e+1 leaves its head.
  // Clockwise around v: incoming edges left to right, then outgoing edges
  // right to left.
  std::vector<std::size_t> rot_next(2 * ne);
  for (std::size_t v = 0; v < nv; ++v) {
    std::vector<std::size_t> ring;
    for (int e : m.in_order[v]) ring.push_back(2 * idx(e) + 1);
    for (auto it = m.out_order[v].rbegin(); it != m.out_order[v].rend(); ++it)
      ring.push_back(2 * idx(*it));
    for (std::size_t i = 0; i < ring.size(); ++i) rot_next[ring[i]] = ring[(i + 1) % ring.size()];
  }
  std::vector<int> face(2 * ne, -1);
  int faces = 0;
  for (std::size_t d0 = 0; d0 < 2 * ne; ++d0) {
    if (face[d0] >= 0) continue;
    for (std::size_t d = d0; face[d] < 0; d = rot_next[d ^ 1U]) face[d] = faces;
    ++faces;
  }
  const auto euler = static_cast<long>(nv) - static_cast<long>(ne) + faces;
  if (euler != 2) fail(EmbeddingInconsistent, "Euler characteristic " + std::to_string(euler));
  const int source_outer = face[2 * idx(m.out_order[idx(m.source)].back())];
  const int sink_outer = face[2 * idx(m.in_order[idx(m.sink)].front()) + 1];
  if (source_outer != sink_outer) fail(EmbeddingInconsistent, "poles not on a common outer face");

  return {nv, ne, ne + 1 - nv + 2};
}

BipolarOrientation single_edge_map() {
  return {{{0, 1}}, {{0}, {}}, {{}, {0}}, 0, 1};
}

BipolarOrientation reverse(const BipolarOrientation& m) {
  BipolarOrientation r;
  r.edges.reserve(m.edges.size());
  for (const auto& [t, h] : m.edges) r.edges.emplace_back(h, t);
  const std::size_t nv = m.vertex_count();
  r.out_order.resize(nv);
  r.in_order.resize(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    r.out_order[v].assign(m.in_order[v].rbegin(), m.in_order[v].rend());
    r.in_order[v].assign(m.out_order[v].rbegin(), m.out_order[v].rend());
  }
  r.source = m.sink;
  r.sink = m.source;
  return r;
}

BipolarOrientation dual(const BipolarOrientation& m) {
  const std::size_t ne = m.size();
  auto rightmost_in = [&](int v) { return m.in_order[idx(v)].back(); };
  auto leftmost_in = [&](int v) { return m.in_order[idx(v)].front(); };

  struct Face {
    std::vector<int> left, right;
  };
  std::vector<Face> inner;
  for (std::size_t v = 0; v < m.vertex_count(); ++v) {
    const auto& outs = m.out_order[v];
    for (std::size_t q = 0; q + 1 < outs.size(); ++q) {
      Face f;
      // Left boundary climbs along right-most out-edges, right boundary along
      // left-most ones, until both reach the top of the face.
      for (int c = outs[q];;) {
        f.left.push_back(c);
        const int w = m.head(c);
        if (w == m.sink || rightmost_in(w) != c) break;
        c = m.out_order[idx(w)].back();
      }
      for (int c = outs[q + 1];;) {
        f.right.push_back(c);
        const int w = m.head(c);
        if (w == m.sink || leftmost_in(w) != c) break;
        c = m.out_order[idx(w)].front();
      }
      inner.push_back(std::move(f));
    }
  }
  auto chain = [&](bool leftmost) {
    std::vector<int> c;
    for (int v = m.source; v != m.sink;) {
      const int e = leftmost ? m.out_order[idx(v)].front() : m.out_order[idx(v)].back();
      c.push_back(e);
      v = m.head(e);
    }
    return c;
  };
  const std::size_t nf = inner.size();
  const int right_outer = 0;
  const int left_outer = static_cast<int>(nf + 1);

  BipolarOrientation d;
  d.out_order.resize(nf + 2);
  d.in_order.resize(nf + 2);
  std::vector<int> left_face(ne, -1), right_face(ne, -1);
  d.out_order[0] = chain(false);
  for (int e : d.out_order[0]) right_face[idx(e)] = right_outer;
  d.in_order[nf + 1] = chain(true);
  for (int e : d.in_order[nf + 1]) left_face[idx(e)] = left_outer;
  for (std::size_t f = 0; f < nf; ++f) {
    const int id = static_cast<int>(f + 1);
    for (int e : inner[f].left) right_face[idx(e)] = id;
    for (int e : inner[f].right) left_face[idx(e)] = id;
    d.out_order[f + 1] = std::move(inner[f].left);
    d.in_order[f + 1] = std::move(inner[f].right);
  }
  d.edges.resize(ne);
  for (std::size_t e = 0; e < ne; ++e) d.edges[e] = {right_face[e], left_face[e]};
  d.source = right_outer;
  d.sink = left_outer;
  return d;
}

DownRightTree down_right_tree(const BipolarOrientation& m) {
  DownRightTree t;
  t.parent.assign(m.size(), -1);
  t.depth.assign(m.vertex_count(), 0);
  t.exploration.reserve(m.size());
  for (std::size_t e = 0; e < m.size(); ++e) {
    const int v = m.tail(static_cast<int>(e));
    if (v != m.source) t.parent[e] = m.in_order[idx(v)].back();
  }
  std::vector<int> stack(m.out_order[idx(m.source)].rbegin(), m.out_order[idx(m.source)].rend());
  while (!stack.empty()) {
    const int e = stack.back();
    stack.pop_back();
    t.exploration.push_back(e);
    const int w = m.head(e);
    if (m.in_order[idx(w)].back() == e) {
      t.depth[idx(w)] = t.depth[idx(m.tail(e))] + 1;
      stack.insert(stack.end(), m.out_order[idx(w)].rbegin(), m.out_order[idx(w)].rend());
    }
  }
  return t;
}

QuadrantWalk to_walk(const BipolarOrientation& m) {
  const DownRightTree primal = down_right_tree(m);
  const DownRightTree reversed = down_right_tree(reverse(m));
  std::vector<Point> pos;
  pos.reserve(m.size());
  for (int e : primal.exploration)
    pos.push_back({primal.depth[idx(m.tail(e))], reversed.depth[idx(m.head(e))]});
  return validate_walk(std::move(pos));
}

BipolarOrientation from_walk(const QuadrantWalk& w) {
  BipolarOrientation m;
  auto new_vertex = [&] {
    m.out_order.emplace_back();
    m.in_order.emplace_back();
    return static_cast<int>(m.out_order.size() - 1);
  };
  auto new_edge = [&](int a, int b) {
    const auto e = static_cast<int>(m.edges.size());
    m.edges.emplace_back(a, b);
    m.out_order[idx(a)].push_back(e);
    m.in_order[idx(b)].push_back(e);
    return e;
  };
  // New chain bottom -> ... -> top through `extra` fresh vertices; returns
  // its edges bottom to top.
  auto new_chain = [&](int bottom, int top, int extra) {
    std::vector<int> verts{bottom};
    for (int q = 0; q < extra; ++q) verts.push_back(new_vertex());
    verts.push_back(top);
    std::vector<int> chain;
    for (std::size_t q = 0; q + 1 < verts.size(); ++q) chain.push_back(new_edge(verts[q], verts[q + 1]));
    return chain;
  };
  m.source = new_vertex();
  m.sink = new_vertex();
  const std::vector<int> start = new_chain(m.source, m.sink, w.h());

  // Right frontier split at the current edge: `below` ends with the current
  // edge, `above` holds the rest with the next edge up at its back.
  std::vector<int> below{start.front()};
  std::vector<int> above(start.rbegin(), start.rend() - 1);
  for (std::size_t t = 1; t < w.size(); ++t) {
    const Step s = w.step(t);
    if (s.dx == 1) {
      below.push_back(above.back());
      above.pop_back();
      continue;
    }
    const int top = m.head(below.back());
    int last = -1;
    for (int q = 0; q <= -s.dx; ++q) {
      last = below.back();
      below.pop_back();
    }
    const std::vector<int> right = new_chain(m.tail(last), top, s.dy);
    below.push_back(right.front());
    above.insert(above.end(), right.rbegin(), right.rend() - 1);
  }
  return m;
}

Permutation to_baxter(const BipolarOrientation& m) {
  const auto primal = down_right_tree(m).exploration;
  const auto dual_order = down_right_tree(dual(m)).exploration;
  std::vector<int> position(m.size());
  for (std::size_t i = 0; i < dual_order.size(); ++i) position[idx(dual_order[i])] = static_cast<int>(i + 1);
  std::vector<int> pi;
  pi.reserve(m.size());
  for (int e : primal) pi.push_back(position[idx(e)]);
  return Permutation(std::move(pi));
}

BipolarOrientation canonical(const BipolarOrientation& m) {
  const auto order = down_right_tree(m).exploration;
  std::vector<int> edge_map(m.size()), vertex_map(m.vertex_count(), -1);
  int next_vertex = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    edge_map[idx(order[i])] = static_cast<int>(i);
    for (int v : {m.tail(order[i]), m.head(order[i])})
      if (vertex_map[idx(v)] < 0) vertex_map[idx(v)] = next_vertex++;
  }
  BipolarOrientation c;
  c.edges.resize(m.size());
  for (std::size_t e = 0; e < m.size(); ++e)
    c.edges[idx(edge_map[e])] = {vertex_map[idx(m.edges[e].first)], vertex_map[idx(m.edges[e].second)]};
  c.out_order.resize(m.vertex_count());
  c.in_order.resize(m.vertex_count());
  auto relabel = [&](const std::vector<int>& edges) {
    std::vector<int> out;
    out.reserve(edges.size());
    for (int e : edges) out.push_back(edge_map[idx(e)]);
    return out;
  };
  for (std::size_t v = 0; v < m.vertex_count(); ++v) {
    c.out_order[idx(vertex_map[v])] = relabel(m.out_order[v]);
    c.in_order[idx(vertex_map[v])] = relabel(m.in_order[v]);
  }
  c.source = vertex_map[idx(m.source)];
  c.sink = vertex_map[idx(m.sink)];
  return c;
}

}  // namespace baxter
