#include "p3iso/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <istream>
#include <map>
#include <mutex>
#include <thread>
#include <unordered_set>

#include "p3iso/patterns.hpp"

namespace p3iso {

std::size_t EnumSummary::total() const {
  std::size_t t = 0;
  for (auto c : per_order) t += c;
  return t;
}

EnumSummary& EnumSummary::operator+=(const EnumSummary& other) {
  if (per_order.size() < other.per_order.size()) per_order.resize(other.per_order.size(), 0);
  for (std::size_t i = 0; i < other.per_order.size(); ++i) per_order[i] += other.per_order[i];
  return *this;
}

namespace {

constexpr std::size_t kMaxCanonicalOrder = 11;

/// Colour refinement from the given initial colours; class ids are assigned
/// in sorted signature order, so they are isomorphism invariant.
std::vector<int> refine(const Graph& g, std::vector<int> colors) {
  const std::size_t n = g.order();
  std::size_t classes = 0;
  while (true) {
    using Sig = std::pair<int, std::vector<int>>;
    std::vector<Sig> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      sig[v].first = colors[v];
      g.neighbors(v).for_each([&](Vertex w) { sig[v].second.push_back(colors[w]); });
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    std::map<Sig, int> ids;
    for (const auto& s : sig) ids.emplace(s, 0);
    int next = 0;
    for (auto& [s, id] : ids) id = next++;
    for (Vertex v = 0; v < n; ++v) colors[v] = ids[sig[v]];
    if (ids.size() == classes) return colors;
    classes = ids.size();
  }
}

class Canonizer {
 public:
  Canonizer(const Graph& g, const std::vector<int>& colors) : g_(g), n_(g.order()), color_(colors) {
    order_.resize(n_);
    for (Vertex v = 0; v < n_; ++v) order_[v] = v;
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) { return color_[a] < color_[b]; });
    slot_color_.resize(n_);
    for (std::size_t p = 0; p < n_; ++p) slot_color_[p] = color_[order_[p]];
    twin_below_.assign(n_, 0);
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex w = 0; w < u; ++w)
        if (color_[u] == color_[w] && twins(u, w)) twin_below_[u] |= 1u << w;
    best_.assign(n_, -1);
    pi_.resize(n_);
  }

  std::uint64_t run() {
    if (n_ <= 1) return 0;
    dfs(0, 0);
    std::uint64_t code = 0;
    for (std::size_t j = 1; j < n_; ++j) code = (code << j) | static_cast<std::uint64_t>(best_[j]);
    return code;
  }

 private:
  bool twins(Vertex u, Vertex w) const {
    VertexSet a = g_.neighbors(u), b = g_.neighbors(w);
    a.erase(w);
    b.erase(u);
    return a == b;
  }

  std::int64_t column(std::size_t j, Vertex v) const {
    std::int64_t c = 0;
    for (std::size_t i = 0; i < j; ++i) c = (c << 1) | (g_.adjacent(pi_[i], v) ? 1 : 0);
    return c;
  }

  void dfs(std::size_t j, std::uint32_t used) {
    if (j == n_) return;
    std::vector<std::pair<std::int64_t, Vertex>> cands;
    std::int64_t top = -1;
    for (Vertex v = 0; v < n_; ++v) {
      if ((used >> v) & 1u || color_[v] != slot_color_[j]) continue;
      // An unplaced twin with a smaller label gives the same codes.
      if (twin_below_[v] & ~used) continue;
      const std::int64_t c = column(j, v);
      cands.emplace_back(c, v);
      top = std::max(top, c);
    }
    if (j > 0) {
      if (top < best_[j]) return;
      if (top > best_[j]) {
        best_[j] = top;
        for (std::size_t k = j + 1; k < n_; ++k) best_[k] = -1;
      }
    }
    for (auto [c, v] : cands) {
      if (c != top) continue;
      pi_[j] = v;
      dfs(j + 1, used | (1u << v));
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<int> color_;
  std::vector<Vertex> order_;
  std::vector<int> slot_color_;
  std::vector<std::uint32_t> twin_below_;
  std::vector<std::int64_t> best_;
  std::vector<Vertex> pi_;
};

std::uint64_t canonical_refined(const Graph& g, const std::vector<int>& refined) {
  return Canonizer(g, refined).run();
}

std::uint64_t individualized_code(const Graph& g, Vertex u) {
  std::vector<int> colors(g.order(), 1);
  colors[u] = 0;
  return canonical_refined(g, refine(g, colors));
}

bool is_cut_vertex(const Graph& g, Vertex v) {
  VertexSet rest = g.vertices();
  rest.erase(v);
  auto start = rest.first();
  if (!start) return false;
  return reach(g, *start, rest).size() != rest.size();
}

class Enumerator {
 public:
  Enumerator(const EnumSpec& spec, const GraphSink& sink, std::mutex* sink_lock)
      : spec_(spec), sink_(sink), sink_lock_(sink_lock) {
    summary.per_order.assign(spec.max_n + 1, 0);
  }

  /// Emits g and everything below it; stops descending at `stop_order`,
  /// collecting those graphs in `frontier` instead when given.
  void extend(const Graph& g, std::size_t stop_order, std::vector<Graph>* frontier) {
    if (frontier && g.order() == stop_order) {
      frontier->push_back(g);
      return;
    }
    emit(g);
    if (g.order() >= spec_.max_n) return;
    const std::size_t n = g.order();
    std::vector<Vertex> open;
    for (Vertex v = 0; v < n; ++v)
      if (g.degree(v) < spec_.max_degree) open.push_back(v);
    std::unordered_set<std::uint64_t> seen;
    const std::size_t k = open.size();
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
      const int bits = std::popcount(mask);
      if (bits > static_cast<int>(spec_.max_degree)) continue;
      if (bits == 0 && spec_.connected_only) continue;
      std::vector<Edge> edges = g.edges();
      for (std::size_t i = 0; i < k; ++i)
        if ((mask >> i) & 1u) edges.emplace_back(open[i], static_cast<Vertex>(n));
      Graph child(n + 1, edges);
      if (spec_.filter == EnumFilter::NoInducedC6 && has_induced_cycle(child, 6)) continue;
      if (!accept(child, static_cast<Vertex>(n))) continue;
      if (!seen.insert(canonical_code(child)).second) continue;
      extend(child, stop_order, frontier);
    }
  }

  EnumSummary summary;

 private:
  void emit(const Graph& g) {
    if (g.order() < spec_.min_n) return;
    ++summary.per_order[g.order()];
    if (!sink_) return;
    if (sink_lock_) {
      std::lock_guard<std::mutex> lock(*sink_lock_);
      sink_(g);
    } else {
      sink_(g);
    }
  }

  /// Whether u is in the orbit of the canonical deletion vertex: a non-cut
  /// vertex (any vertex when disconnected graphs are allowed) of least
  /// degree, then least refined colour, then largest individualized code.
  bool accept(const Graph& g, Vertex u) const {
    const std::size_t n = g.order();
    std::vector<Vertex> cand;
    for (Vertex v = 0; v < n; ++v)
      if (!spec_.connected_only || !is_cut_vertex(g, v)) cand.push_back(v);
    std::size_t dmin = 4;
    for (Vertex v : cand) dmin = std::min(dmin, g.degree(v));
    if (g.degree(u) != dmin || (spec_.connected_only && is_cut_vertex(g, u))) return false;
    std::erase_if(cand, [&](Vertex v) { return g.degree(v) != dmin; });
    const auto colors = refine(g, std::vector<int>(n, 0));
    int cmin = colors[u];
    for (Vertex v : cand) cmin = std::min(cmin, colors[v]);
    if (colors[u] != cmin) return false;
    std::erase_if(cand, [&](Vertex v) { return colors[v] != cmin; });
    if (cand.size() == 1) return true;
    const std::uint64_t mine = individualized_code(g, u);
    for (Vertex v : cand)
      if (v != u && individualized_code(g, v) > mine) return false;
    return true;
  }

  const EnumSpec& spec_;
  const GraphSink& sink_;
  std::mutex* sink_lock_;
};

}  // namespace

std::uint64_t canonical_code(const Graph& g, const std::vector<int>& colors) {
  if (g.order() > kMaxCanonicalOrder) throw std::invalid_argument("canonical_code supports orders up to 11");
  std::vector<int> initial = colors.empty() ? std::vector<int>(g.order(), 0) : colors;
  return canonical_refined(g, refine(g, initial));
}

EnumSummary enumerate_connected_subcubic(const EnumSpec& spec, const GraphSink& sink) {
  if (spec.max_degree != 3) throw std::invalid_argument("only max degree 3 is supported");
  if (spec.max_n < 1 || spec.max_n > kMaxCanonicalOrder)
    throw std::invalid_argument("max_n must be between 1 and 11");
  if (spec.max_n >= 10 && !spec.allow_large)
    throw std::invalid_argument("orders 10 and 11 must be requested explicitly");

  std::mutex lock;
  std::mutex* sink_lock = spec.serialized ? &lock : nullptr;
  const Graph root(1, std::vector<Edge>{});
  const std::size_t split = std::max<std::size_t>(spec.split_order, 1);
  if (spec.jobs <= 1 || spec.max_n <= split) {
    Enumerator e(spec, sink, sink_lock);
    e.extend(root, 0, nullptr);
    return e.summary;
  }

  Enumerator head(spec, sink, sink_lock);
  std::vector<Graph> units;
  head.extend(root, split, &units);
  EnumSummary total = head.summary;

  std::atomic<std::size_t> next{0}, done{0};
  std::mutex merge;
  std::vector<std::thread> workers;
  for (std::size_t t = 0; t < spec.jobs; ++t) {
    workers.emplace_back([&] {
      Enumerator e(spec, sink, sink_lock);
      for (std::size_t i = next++; i < units.size(); i = next++) {
        e.extend(units[i], 0, nullptr);
        const std::size_t finished = ++done;
        if (spec.progress) {
          std::lock_guard<std::mutex> guard(merge);
          spec.progress(finished, units.size());
        }
      }
      std::lock_guard<std::mutex> guard(merge);
      total += e.summary;
    });
  }
  for (auto& w : workers) w.join();
  return total;
}

IngestSummary ingest_graph6_stream(std::istream& in, const GraphSink& sink) {
  IngestSummary summary;
  Graph6Reader reader(in);
  Graph g;
  try {
    while (reader.next(g, [&](const Graph6Reader::Diagnostic& d) { summary.diagnostics.push_back(d); })) {
      ++summary.count;
      if (sink) sink(g);
    }
  } catch (const std::ios_base::failure& e) {
    throw IoFailure(std::string("graph6 stream: ") + e.what());
  }
  return summary;
}

}  // namespace p3iso
