#include "critex/automaton.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace critex {

std::vector<std::vector<int>> LabeledGraph::out_edges() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(vertex_count()));
  for (const Edge& e : edges) out[static_cast<std::size_t>(e.from)].push_back(e.id);
  return out;
}

std::string inverse_label(const std::string& label) {
  if (!label.empty() && label.back() == '\'') return label.substr(0, label.size() - 1);
  return label + "'";
}

GroupWord reduce(const std::vector<std::string>& symbols) {
  GroupWord w;
  for (const std::string& s : symbols) {
    if (!w.symbols.empty() && w.symbols.back() == inverse_label(s))
      w.symbols.pop_back();
    else
      w.symbols.push_back(s);
  }
  return w;
}

GroupWord concat(const GroupWord& a, const GroupWord& b) {
  std::vector<std::string> all = a.symbols;
  all.insert(all.end(), b.symbols.begin(), b.symbols.end());
  return reduce(all);
}

LabeledGraph builtin_f2_standard() {
  LabeledGraph g;
  g.vertices = {"*", "a", "b", "a'", "b'"};
  g.start = 0;
  int id = 0;
  for (int v = 1; v <= 4; ++v)
    g.edges.push_back({id++, 0, v, g.vertices[static_cast<std::size_t>(v)]});
  for (int u = 1; u <= 4; ++u)
    for (int v = 1; v <= 4; ++v) {
      const std::string& lu = g.vertices[static_cast<std::size_t>(u)];
      const std::string& lv = g.vertices[static_cast<std::size_t>(v)];
      if (lv == inverse_label(lu)) continue;
      g.edges.push_back({id++, u, v, lv});
    }
  return g;
}

LabeledGraph builtin_f2_abc() {
  // Grammar matrix over (a, b, c, a', b', c'); row = current symbol,
  // column = allowed successor.
  static constexpr int A[6][6] = {
      {1, 0, 1, 0, 1, 1},
      {1, 1, 0, 1, 0, 1},
      {0, 1, 1, 1, 1, 0},
      {0, 1, 1, 1, 1, 0},
      {1, 0, 1, 0, 1, 1},
      {1, 1, 0, 1, 0, 1},
  };
  LabeledGraph g;
  g.vertices = {"*", "a", "b", "c", "a'", "b'", "c'"};
  g.start = 0;
  int id = 0;
  for (int v = 1; v <= 6; ++v)
    g.edges.push_back({id++, 0, v, g.vertices[static_cast<std::size_t>(v)]});
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      if (A[i][j])
        g.edges.push_back({id++, i + 1, j + 1, g.vertices[static_cast<std::size_t>(j + 1)]});
  return g;
}

namespace {

// Tarjan strongly connected components; returns component index per vertex.
std::vector<int> scc_components(const LabeledGraph& g, int& comp_count) {
  const int n = g.vertex_count();
  const auto out = g.out_edges();
  std::vector<int> index(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0),
      comp(static_cast<std::size_t>(n), -1);
  std::vector<bool> on_stack(static_cast<std::size_t>(n), false);
  std::vector<int> stack;
  int next_index = 0;
  comp_count = 0;
  std::function<void(int)> strongconnect = [&](int v) {
    index[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = next_index++;
    stack.push_back(v);
    on_stack[static_cast<std::size_t>(v)] = true;
    for (int eid : out[static_cast<std::size_t>(v)]) {
      const int w = g.edges[static_cast<std::size_t>(eid)].to;
      if (index[static_cast<std::size_t>(w)] < 0) {
        strongconnect(w);
        low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], low[static_cast<std::size_t>(w)]);
      } else if (on_stack[static_cast<std::size_t>(w)]) {
        low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], index[static_cast<std::size_t>(w)]);
      }
    }
    if (low[static_cast<std::size_t>(v)] == index[static_cast<std::size_t>(v)]) {
      while (true) {
        const int w = stack.back();
        stack.pop_back();
        on_stack[static_cast<std::size_t>(w)] = false;
        comp[static_cast<std::size_t>(w)] = comp_count;
        if (w == v) break;
      }
      ++comp_count;
    }
  };
  for (int v = 0; v < n; ++v)
    if (index[static_cast<std::size_t>(v)] < 0) strongconnect(v);
  return comp;
}

}  // namespace

LabeledGraph recurrent_subgraph(const LabeledGraph& g) {
  int comp_count = 0;
  const auto comp = scc_components(g, comp_count);
  std::vector<int> comp_size(static_cast<std::size_t>(comp_count), 0);
  for (int c : comp) ++comp_size[static_cast<std::size_t>(c)];
  LabeledGraph r;
  r.vertices = g.vertices;
  r.start = g.start;
  for (const Edge& e : g.edges) {
    const int cf = comp[static_cast<std::size_t>(e.from)];
    if (cf != comp[static_cast<std::size_t>(e.to)]) continue;
    if (comp_size[static_cast<std::size_t>(cf)] > 1 || e.from == e.to) r.edges.push_back(e);
  }
  return r;
}

GroupWord evaluate_path(const LabeledGraph& g, const std::vector<int>& edge_ids) {
  std::map<int, const Edge*> by_id;
  for (const Edge& e : g.edges) by_id[e.id] = &e;
  std::vector<std::string> labels;
  const Edge* prev = nullptr;
  for (int id : edge_ids) {
    const auto it = by_id.find(id);
    if (it == by_id.end()) throw std::invalid_argument("evaluate_path: unknown edge id");
    const Edge* e = it->second;
    if (prev && prev->to != e->from) throw std::invalid_argument("evaluate_path: path does not compose");
    labels.push_back(e->label);
    prev = e;
  }
  return reduce(labels);
}

std::vector<Cycle> enumerate_cycles(const LabeledGraph& g, int n) {
  if (n < 1) throw std::invalid_argument("enumerate_cycles: n must be >= 1");
  const LabeledGraph r = recurrent_subgraph(g);
  const auto out = r.out_edges();
  std::set<std::vector<int>> canon;
  std::vector<int> path;
  std::map<int, Edge> by_id;
  for (const Edge& e : r.edges) by_id[e.id] = e;
  std::function<void(int, int)> rec = [&](int base, int v) {
    if (static_cast<int>(path.size()) == n) {
      if (v != base) return;
      std::vector<int> best = path;
      for (int s = 1; s < n; ++s) {
        std::vector<int> rot(path.begin() + s, path.end());
        rot.insert(rot.end(), path.begin(), path.begin() + s);
        if (rot < best) best = rot;
      }
      canon.insert(best);
      return;
    }
    for (int eid : out[static_cast<std::size_t>(v)]) {
      path.push_back(eid);
      rec(base, by_id[eid].to);
      path.pop_back();
    }
  };
  for (int v = 0; v < r.vertex_count(); ++v) {
    path.clear();
    rec(v, v);
  }
  std::vector<Cycle> cycles;
  for (const auto& seq : canon) {
    Cycle c;
    c.edge_ids = seq;
    int period = n;
    for (int p = 1; p < n; ++p) {
      if (n % p != 0) continue;
      bool is_period = true;
      for (int i = 0; i < n && is_period; ++i)
        if (seq[static_cast<std::size_t>(i)] != seq[static_cast<std::size_t>((i + p) % n)]) is_period = false;
      if (is_period) {
        period = p;
        break;
      }
    }
    c.rotations = period;
    c.primitive = (period == n);
    cycles.push_back(c);
  }
  return cycles;
}

ValidationReport validate_strong_markov(const LabeledGraph& g, int depth) {
  if (depth < 1) return {false, "depth must be >= 1"};
  const auto out = g.out_edges();
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::set<std::string> labels;
    for (int eid : out[static_cast<std::size_t>(v)]) {
      const std::string& l = g.edges[static_cast<std::size_t>(eid)].label;
      if (!labels.insert(l).second)
        return {false, "duplicate outgoing label '" + l + "' at vertex " +
                           g.vertices[static_cast<std::size_t>(v)]};
    }
  }
  std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()), false);
  std::queue<int> bfs;
  bfs.push(g.start);
  seen[static_cast<std::size_t>(g.start)] = true;
  while (!bfs.empty()) {
    const int v = bfs.front();
    bfs.pop();
    for (int eid : out[static_cast<std::size_t>(v)]) {
      const int w = g.edges[static_cast<std::size_t>(eid)].to;
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        bfs.push(w);
      }
    }
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!seen[static_cast<std::size_t>(v)])
      return {false, "vertex " + g.vertices[static_cast<std::size_t>(v)] + " unreachable from start"};

  std::set<std::vector<std::string>> words;
  std::vector<std::string> current;
  ValidationReport report;
  std::function<bool(int, int)> walk = [&](int v, int remaining) {
    if (!current.empty()) {
      const GroupWord w = reduce(current);
      if (w.symbols.size() != current.size()) {
        report = {false, "path evaluation not reduced at depth " + std::to_string(current.size())};
        return false;
      }
      if (!words.insert(w.symbols).second) {
        report = {false, "duplicate path evaluation at depth " + std::to_string(current.size())};
        return false;
      }
    }
    if (remaining == 0) return true;
    for (int eid : out[static_cast<std::size_t>(v)]) {
      const Edge& e = g.edges[static_cast<std::size_t>(eid)];
      current.push_back(e.label);
      const bool ok = walk(e.to, remaining - 1);
      current.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  if (!walk(g.start, depth)) return report;
  return {true, "ok"};
}

AdjacencyMatrix vertex_adjacency(const LabeledGraph& g) {
  const LabeledGraph r = recurrent_subgraph(g);
  std::set<int> used;
  for (const Edge& e : r.edges) {
    used.insert(e.from);
    used.insert(e.to);
  }
  AdjacencyMatrix m;
  m.vertex_ids.assign(used.begin(), used.end());
  std::map<int, int> pos;
  for (std::size_t i = 0; i < m.vertex_ids.size(); ++i) pos[m.vertex_ids[i]] = static_cast<int>(i);
  m.a.assign(m.vertex_ids.size(), std::vector<double>(m.vertex_ids.size(), 0.0));
  for (const Edge& e : r.edges)
    m.a[static_cast<std::size_t>(pos[e.from])][static_cast<std::size_t>(pos[e.to])] += 1.0;
  return m;
}

}  // namespace critex
