#include "p3iso/patterns.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <stdexcept>

#include "p3iso/generators.hpp"

namespace p3iso {

IsolationFamily IsolationFamily::cycle(std::size_t k) {
  if (k < 3) throw std::invalid_argument("cycle family requires k >= 3");
  IsolationFamily f(Kind::Cycle);
  f.cycle_length_ = k;
  return f;
}

IsolationFamily IsolationFamily::finite(std::vector<Graph> graphs) {
  for (const auto& g : graphs)
    if (g.order() == 0 || !is_connected(g)) throw std::invalid_argument("family graphs must be connected and non-empty");
  IsolationFamily f(Kind::FiniteList);
  f.graphs_ = std::move(graphs);
  return f;
}

IsolationFamily IsolationFamily::parse(std::string_view text) {
  if (text == "k1") return k1();
  if (text == "k2") return k2();
  if (text == "k3") return k3();
  if (text == "p3") return p3();
  if (text == "anycycle") return any_cycle();
  if (text.starts_with("cycle:")) {
    std::size_t k = 0;
    auto digits = text.substr(6);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec == std::errc() && ptr == digits.data() + digits.size()) return cycle(k);
  }
  throw std::invalid_argument("unknown family: " + std::string(text));
}

std::string IsolationFamily::name() const {
  switch (kind_) {
    case Kind::K1: return "k1";
    case Kind::K2: return "k2";
    case Kind::K3: return "k3";
    case Kind::P3: return "p3";
    case Kind::Cycle: return "cycle:" + std::to_string(cycle_length_);
    case Kind::AnyCycle: return "anycycle";
    case Kind::FiniteList: return "list[" + std::to_string(graphs_.size()) + "]";
  }
  return "?";
}

namespace {

std::optional<IsoWitness> find_p3(const Graph& g, const VertexSet& within) {
  std::optional<Vertex> center;
  std::size_t best = 1;
  within.for_each([&](Vertex v) {
    std::size_t d = g.neighbors(v).intersection_size(within);
    if (d > best) {
      best = d;
      center = v;
    }
  });
  if (!center) return std::nullopt;
  VertexSet nb = g.neighbors(*center) & within;
  Vertex a = *nb.first();
  Vertex b = *nb.next_from(a + 1);
  return IsoWitness{{a, *center, b}, IsoWitness::Mode::Subgraph};
}

std::optional<IsoWitness> find_triangle(const Graph& g, const VertexSet& within) {
  std::optional<IsoWitness> out;
  within.for_each([&](Vertex u) {
    if (out) return;
    VertexSet nu = g.neighbors(u) & within;
    nu.for_each([&](Vertex v) {
      if (out || v < u) return;
      VertexSet common = nu & g.neighbors(v);
      if (auto w = common.next_from(v + 1)) out = IsoWitness{{u, v, *w}, IsoWitness::Mode::Subgraph};
    });
  });
  return out;
}

bool extend_cycle(const Graph& g, const VertexSet& within, std::size_t k, std::vector<Vertex>& path,
                  VertexSet& used) {
  const Vertex s = path.front();
  const Vertex last = path.back();
  if (path.size() == k) return g.adjacent(last, s);
  bool found = false;
  (g.neighbors(last) & within).for_each([&](Vertex u) {
    if (found || u <= s || used.contains(u)) return;
    if (path.size() + 1 == k && !(path.size() < 2 || path[1] < u)) return;
    path.push_back(u);
    used.insert(u);
    if (extend_cycle(g, within, k, path, used)) {
      found = true;
      return;
    }
    used.erase(u);
    path.pop_back();
  });
  return found;
}

std::optional<IsoWitness> find_cycle_of_length(const Graph& g, const VertexSet& within, std::size_t k) {
  if (k == 3) return find_triangle(g, within);
  std::optional<IsoWitness> out;
  within.for_each([&](Vertex s) {
    if (out) return;
    std::vector<Vertex> path{s};
    VertexSet used(g.order());
    used.insert(s);
    if (extend_cycle(g, within, k, path, used)) out = IsoWitness{path, IsoWitness::Mode::Subgraph};
  });
  return out;
}

std::optional<IsoWitness> find_any_cycle(const Graph& g, const VertexSet& within) {
  // Strip to the 2-core; any remaining vertex lies on or leads to a cycle.
  VertexSet core = within;
  bool changed = true;
  while (changed) {
    changed = false;
    core.for_each([&](Vertex v) {
      if (g.neighbors(v).intersection_size(core) <= 1) {
        core.erase(v);
        changed = true;
      }
    });
  }
  auto start = core.first();
  if (!start) return std::nullopt;
  std::vector<Vertex> walk{*start};
  std::vector<int> pos(g.order(), -1);
  pos[*start] = 0;
  Vertex prev = *start, cur = *start;
  while (true) {
    VertexSet nb = g.neighbors(cur) & core;
    Vertex next = *nb.first();
    if (walk.size() > 1 && next == prev) next = *nb.next_from(next + 1);
    if (pos[next] >= 0) {
      std::vector<Vertex> cyc(walk.begin() + pos[next], walk.end());
      return IsoWitness{cyc, IsoWitness::Mode::Subgraph};
    }
    pos[next] = static_cast<int>(walk.size());
    walk.push_back(next);
    prev = cur;
    cur = next;
  }
}

bool embed(const Graph& pattern, const Graph& host, const VertexSet& within, bool induced,
           const std::vector<Vertex>& order, std::size_t depth, std::vector<Vertex>& image, VertexSet& used) {
  if (depth == order.size()) return true;
  const Vertex p = order[depth];
  VertexSet cand = within - used;
  for (std::size_t d = 0; d < depth; ++d) {
    const Vertex q = order[d];
    if (pattern.adjacent(p, q))
      cand &= host.neighbors(image[q]);
    else if (induced)
      cand -= host.neighbors(image[q]);
  }
  bool ok = false;
  cand.for_each([&](Vertex h) {
    if (ok || host.neighbors(h).intersection_size(within) < pattern.degree(p)) return;
    image[p] = h;
    used.insert(h);
    if (embed(pattern, host, within, induced, order, depth + 1, image, used)) {
      ok = true;
      return;
    }
    used.erase(h);
  });
  return ok;
}

/// Pattern vertices ordered so each (after the first of its component) has an
/// earlier neighbor.
std::vector<Vertex> connected_order(const Graph& pattern) {
  std::vector<Vertex> order;
  VertexSet placed(pattern.order());
  while (order.size() < pattern.order()) {
    Vertex start = *(pattern.vertices() - placed).first();
    std::size_t head = order.size();
    order.push_back(start);
    placed.insert(start);
    while (head < order.size()) {
      Vertex v = order[head++];
      (pattern.neighbors(v) - placed).for_each([&](Vertex w) {
        order.push_back(w);
        placed.insert(w);
      });
    }
  }
  return order;
}

}  // namespace

std::optional<IsoWitness> find_embedding(const Graph& pattern, const Graph& host, const VertexSet& within,
                                         bool induced) {
  if (pattern.order() > within.size()) return std::nullopt;
  std::vector<Vertex> image(pattern.order(), 0);
  VertexSet used(host.order());
  if (!embed(pattern, host, within, induced, connected_order(pattern), 0, image, used)) return std::nullopt;
  return IsoWitness{image, induced ? IsoWitness::Mode::Induced : IsoWitness::Mode::Subgraph};
}

std::optional<IsoWitness> find_copy_within(const Graph& g, const IsolationFamily& fam, const VertexSet& within) {
  using Kind = IsolationFamily::Kind;
  switch (fam.kind()) {
    case Kind::K1:
      if (auto v = within.first()) return IsoWitness{{*v}, IsoWitness::Mode::Subgraph};
      return std::nullopt;
    case Kind::K2: {
      std::optional<IsoWitness> out;
      within.for_each([&](Vertex u) {
        if (out) return;
        if (auto w = (g.neighbors(u) & within).first()) out = IsoWitness{{u, *w}, IsoWitness::Mode::Subgraph};
      });
      return out;
    }
    case Kind::P3: return find_p3(g, within);
    case Kind::K3: return find_triangle(g, within);
    case Kind::Cycle: return find_cycle_of_length(g, within, fam.cycle_length());
    case Kind::AnyCycle: return find_any_cycle(g, within);
    case Kind::FiniteList:
      for (const auto& pattern : fam.graphs())
        if (auto w = find_embedding(pattern, g, within, false)) return w;
      return std::nullopt;
  }
  return std::nullopt;
}

std::optional<IsoWitness> contains_copy(const Graph& g, const IsolationFamily& fam) {
  return find_copy_within(g, fam, g.vertices());
}

namespace {

bool extend_induced(const Graph& g, std::size_t k, std::vector<Vertex>& path, VertexSet& blocked) {
  const Vertex s = path.front();
  const std::size_t idx = path.size();  // index the next vertex will take
  const Vertex last = path.back();
  bool found = false;
  g.neighbors(last).for_each([&](Vertex u) {
    if (found || u <= s || blocked.contains(u)) return;
    const bool touches_start = g.adjacent(u, s);
    if (idx == k - 1) {
      if (!touches_start || !(path[1] < u)) return;
      path.push_back(u);
      found = true;
      return;
    }
    if (idx >= 2 && touches_start) return;
    VertexSet saved = blocked;
    if (idx >= 2) blocked |= g.neighbors(last);
    blocked.insert(u);
    path.push_back(u);
    if (extend_induced(g, k, path, blocked)) {
      found = true;
      return;
    }
    path.pop_back();
    blocked = std::move(saved);
  });
  return found;
}

}  // namespace

std::optional<IsoWitness> has_induced_cycle(const Graph& g, std::size_t k) {
  if (k < 3) throw std::invalid_argument("induced cycle length must be >= 3");
  for (Vertex s = 0; s < g.order(); ++s) {
    if (g.degree(s) < 2) continue;
    std::vector<Vertex> path{s};
    // Vertices that can no longer join: the path itself and neighbors of
    // internal vertices other than the current end.
    VertexSet blocked(g.order());
    blocked.insert(s);
    if (extend_induced(g, k, path, blocked)) return IsoWitness{path, IsoWitness::Mode::Induced};
  }
  return std::nullopt;
}

namespace {

std::vector<std::size_t> triangle_counts(const Graph& g) {
  std::vector<std::size_t> t(g.order(), 0);
  for (Vertex u = 0; u < g.order(); ++u)
    g.neighbors(u).for_each([&](Vertex v) { t[u] += g.neighbors(u).intersection_size(g.neighbors(v)); });
  for (auto& x : t) x /= 2;
  return t;
}

/// Joint 1-dimensional colour refinement of g and h; colours comparable
/// across the two graphs.
std::pair<std::vector<int>, std::vector<int>> refine_pair(const Graph& g, const Graph& h) {
  std::vector<int> cg(g.order()), ch(h.order());
  for (Vertex v = 0; v < g.order(); ++v) cg[v] = static_cast<int>(g.degree(v));
  for (Vertex v = 0; v < h.order(); ++v) ch[v] = static_cast<int>(h.degree(v));
  std::size_t classes = 0;
  while (true) {
    using Sig = std::pair<int, std::vector<int>>;
    auto sig = [](const Graph& x, const std::vector<int>& c, Vertex v) {
      Sig s{c[v], {}};
      x.neighbors(v).for_each([&](Vertex w) { s.second.push_back(c[w]); });
      std::sort(s.second.begin(), s.second.end());
      return s;
    };
    std::map<Sig, int> ids;
    std::vector<Sig> sg, sh;
    for (Vertex v = 0; v < g.order(); ++v) ids.emplace(sg.emplace_back(sig(g, cg, v)), 0);
    for (Vertex v = 0; v < h.order(); ++v) ids.emplace(sh.emplace_back(sig(h, ch, v)), 0);
    int next = 0;
    for (auto& [s, id] : ids) id = next++;
    for (Vertex v = 0; v < g.order(); ++v) cg[v] = ids[sg[v]];
    for (Vertex v = 0; v < h.order(); ++v) ch[v] = ids[sh[v]];
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return {cg, ch};
}

struct IsoSearch {
  const Graph& g;
  const Graph& h;
  std::vector<int> cg, ch;
  std::vector<Vertex> order;  // h vertices in assignment order
  std::vector<Vertex> image;
  VertexSet used;
  const std::function<bool(const IsoWitness&)>& visit;
  bool stopped = false;

  void run(std::size_t depth) {
    if (stopped) return;
    if (depth == order.size()) {
      if (!visit(IsoWitness{image, IsoWitness::Mode::Isomorphism})) stopped = true;
      return;
    }
    const Vertex p = order[depth];
    for (Vertex c = 0; c < g.order() && !stopped; ++c) {
      if (used.contains(c) || cg[c] != ch[p]) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        const Vertex q = order[d];
        ok = h.adjacent(p, q) == g.adjacent(c, image[q]);
      }
      if (!ok) continue;
      image[p] = c;
      used.insert(c);
      run(depth + 1);
      used.erase(c);
    }
  }
};

bool screen(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  std::vector<std::size_t> dg, dh;
  for (Vertex v = 0; v < g.order(); ++v) dg.push_back(g.degree(v));
  for (Vertex v = 0; v < h.order(); ++v) dh.push_back(h.degree(v));
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return false;
  auto tg = triangle_counts(g), th = triangle_counts(h);
  std::sort(tg.begin(), tg.end());
  std::sort(th.begin(), th.end());
  return tg == th;
}

}  // namespace

void for_each_isomorphism(const Graph& g, const Graph& h, const std::function<bool(const IsoWitness&)>& visit) {
  if (!screen(g, h)) return;
  auto [cg, ch] = refine_pair(g, h);
  auto hist = [](std::vector<int> c) {
    std::sort(c.begin(), c.end());
    return c;
  };
  if (hist(cg) != hist(ch)) return;

  // Rarest colour first, then vertices with most already-ordered neighbours.
  std::map<int, std::size_t> class_size;
  for (int c : ch) ++class_size[c];
  std::vector<Vertex> order;
  VertexSet placed(h.order());
  while (order.size() < h.order()) {
    std::optional<Vertex> best;
    std::pair<std::size_t, std::size_t> best_key{0, 0};
    for (Vertex v = 0; v < h.order(); ++v) {
      if (placed.contains(v)) continue;
      std::pair<std::size_t, std::size_t> key{h.neighbors(v).intersection_size(placed),
                                              h.order() - class_size[ch[v]]};
      if (!best || key > best_key) {
        best = v;
        best_key = key;
      }
    }
    order.push_back(*best);
    placed.insert(*best);
  }
  IsoSearch search{g, h, std::move(cg), std::move(ch), std::move(order),
                   std::vector<Vertex>(h.order(), 0), VertexSet(g.order()), visit};
  search.run(0);
}

std::optional<IsoWitness> is_isomorphic(const Graph& g, const Graph& h) {
  std::optional<IsoWitness> out;
  for_each_isomorphism(g, h, [&](const IsoWitness& w) {
    out = w;
    return false;
  });
  return out;
}

std::optional<CatalogMatch> catalog_match(const Graph& g) {
  const std::size_t n = g.order();
  if (n != 3 && n != 7 && n != 11 && n != 15) return std::nullopt;
  if (g.max_degree() > 3) return std::nullopt;
  for (const auto& entry : catalog()) {
    if (entry.order != n || entry.graph.edge_count() != g.edge_count()) continue;
    if (auto w = is_isomorphic(g, entry.graph)) return CatalogMatch{entry.id, *w};
  }
  return std::nullopt;
}

}  // namespace p3iso
