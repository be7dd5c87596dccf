#include "baxter/serialize.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <istream>
#include <ostream>

#include "baxter/error.hpp"

namespace baxter {

namespace {

template <typename F>
auto parsing(const char* what, F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed ") + what + ": " + e.what());
  }
}

int vertex_id(const std::string& key) {
  int v = -1;
  const auto res = std::from_chars(key.data(), key.data() + key.size(), v);
  if (res.ec != std::errc{} || res.ptr != key.data() + key.size() || v < 0)
    throw ParseError("bad vertex id '" + key + "'");
  return v;
}

}  // namespace

Json to_json(const Permutation& p) { return Json(p.values()); }

Permutation permutation_from_json(const Json& j) {
  return Permutation(parsing("permutation", [&] { return j.get<std::vector<int>>(); }));
}

Json to_json(const QuadrantWalk& w) {
  Json steps = Json::array();
  for (std::size_t t = 1; t < w.size(); ++t) {
    const Step s = w.step(t);
    steps.push_back({s.dx, s.dy});
  }
  Json j;
  j["start"] = {w.at(1).x, w.at(1).y};
  j["steps"] = std::move(steps);
  return j;
}

QuadrantWalk walk_from_json(const Json& j) {
  auto positions = parsing("walk", [&] {
    const auto start = j.at("start").get<std::array<int, 2>>();
    std::vector<Point> pos{{start[0], start[1]}};
    for (const auto& s : j.at("steps")) {
      const auto d = s.get<std::array<int, 2>>();
      pos.push_back({pos.back().x + d[0], pos.back().y + d[1]});
    }
    return pos;
  });
  return validate_walk(std::move(positions));
}

Json to_json(const BipolarOrientation& m) {
  Json j;
  Json edges = Json::array();
  for (const auto& [t, h] : m.edges) edges.push_back({t, h});
  j["edges"] = std::move(edges);
  Json outs = Json::object(), ins = Json::object();
  for (std::size_t v = 0; v < m.vertex_count(); ++v) {
    outs[std::to_string(v)] = m.out_order[v];
    ins[std::to_string(v)] = m.in_order[v];
  }
  j["out_order"] = std::move(outs);
  j["in_order"] = std::move(ins);
  j["source"] = m.source;
  j["sink"] = m.sink;
  return j;
}

BipolarOrientation map_from_json(const Json& j) {
  return parsing("map", [&] {
    BipolarOrientation m;
    for (const auto& e : j.at("edges")) {
      const auto p = e.get<std::array<int, 2>>();
      m.edges.emplace_back(p[0], p[1]);
    }
    int max_vertex = -1;
    for (const auto& [a, b] : m.edges) max_vertex = std::max({max_vertex, a, b});
    auto table = [&](const Json& obj) {
      for (const auto& [key, value] : obj.items()) max_vertex = std::max(max_vertex, vertex_id(key));
      std::vector<std::vector<int>> out(static_cast<std::size_t>(max_vertex + 1));
      for (const auto& [key, value] : obj.items()) {
        const int v = vertex_id(key);
        out[static_cast<std::size_t>(v)] = value.get<std::vector<int>>();
      }
      return out;
    };
    m.out_order = table(j.at("out_order"));
    m.in_order = table(j.at("in_order"));
    const auto nv = static_cast<std::size_t>(max_vertex + 1);
    m.out_order.resize(nv);
    m.in_order.resize(nv);
    m.source = j.at("source").get<int>();
    m.sink = j.at("sink").get<int>();
    return m;
  });
}

Json to_json(const PatternEstimate& e) {
  Json j;
  j["k"] = e.k;
  j["pattern"] = e.pattern.values();
  j["n"] = e.n;
  j["samples"] = e.samples;
  j["estimate"] = e.estimate;
  j["stderr"] = e.stderr_;
  j["seed"] = e.seed;
  return j;
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void write_csv(std::ostream& out, const PermutonHistogram& h) {
  for (std::size_t a = 0; a < h.k; ++a) {
    for (std::size_t b = 0; b < h.k; ++b) {
      if (b > 0) out << ',';
      out << format_double(h.at(a, b));
    }
    out << '\n';
  }
}

std::vector<Json> read_jsonl(std::istream& in) {
  std::vector<Json> out;
  std::string line;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(Json::parse(line));
    } catch (const Json::exception& e) {
      throw ParseError("line " + std::to_string(no) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace baxter
