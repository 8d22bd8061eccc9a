#include "p3iso/verify.hpp"

#include <algorithm>
#include <chrono>
#include <istream>
#include <map>
#include <mutex>
#include <sstream>

#include "p3iso/constructive.hpp"
#include "p3iso/generators.hpp"
#include "p3iso/io.hpp"
#include "p3iso/solver.hpp"

namespace p3iso {

bool VerificationReport::passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const OrderRow& r) { return r.violations.empty(); });
}

const OrderRow* VerificationReport::row(std::size_t order) const {
  for (const auto& r : rows)
    if (r.order == order) return &r;
  return nullptr;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j;
  j["passed"] = passed();
  j["malformed_lines"] = malformed_lines;
  auto orders = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json o;
    o["order"] = r.order;
    o["examined"] = r.examined;
    o["eligible"] = r.eligible;
    o["ineligible"] = r.ineligible;
    auto ex = nlohmann::json::array();
    for (const auto& e : r.exceptions) ex.push_back({{"graph6", e.graph6}, {"catalog", to_string(e.id)}});
    o["exceptions"] = ex;
    o["violations"] = r.violations;
    o["constructive_runs"] = r.constructive_runs;
    o["fallbacks"] = r.fallbacks;
    orders.push_back(o);
  }
  j["orders"] = orders;
  return j;
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  out << "order  examined  eligible  ineligible  exceptions  violations  seconds\n";
  for (const auto& r : rows) {
    char line[160];
    std::snprintf(line, sizeof line, "%5zu  %8zu  %8zu  %10zu  %10zu  %10zu  %7.2f\n", r.order, r.examined, r.eligible,
                  r.ineligible, r.exceptions.size(), r.violations.size(), r.seconds);
    out << line;
  }
  for (const auto& r : rows) {
    for (const auto& e : r.exceptions) out << "exception n=" << r.order << " " << to_string(e.id) << " " << e.graph6 << "\n";
    for (const auto& v : r.violations) out << "VIOLATION n=" << r.order << " " << v << "\n";
  }
  if (malformed_lines > 0) out << "malformed lines skipped: " << malformed_lines << "\n";
  out << (passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

namespace {

class Checker {
 public:
  explicit Checker(const VerifyOptions& opts) : opts_(opts) {}

  void ensure_row(std::size_t order) {
    std::lock_guard<std::mutex> lock(mu_);
    rows_[order].order = order;
  }

  void process(const Graph& g) {
    const auto start = std::chrono::steady_clock::now();
    const std::size_t n = g.order();
    OrderRow local;
    ++local.examined;
    const bool eligible = is_connected(g) && g.max_degree() <= 3 && !has_induced_cycle(g, 6);
    if (!eligible) {
      ++local.ineligible;
    } else {
      ++local.eligible;
      const auto cert = isolation_number(g, IsolationFamily::p3(), {.budget = n / 4, .lexicographic = false});
      if (cert.exceeds_budget) {
        if (auto m = catalog_match(g))
          local.exceptions.push_back({emit_graph6(g), m->id});
        else
          local.violations.push_back(emit_graph6(g) + ": iota exceeds floor(n/4) and not a catalog graph");
      } else if (opts_.check_constructive) {
        ++local.constructive_runs;
        try {
          auto result = isolate_p3_subcubic(g);
          local.fallbacks += result.trace.fallback_count();
          if (!verify_certificate(g, result.certificate, n / 4))
            local.violations.push_back(emit_graph6(g) + ": constructive certificate rejected");
          if (result.trace.fallback_count() > 0)
            local.violations.push_back(emit_graph6(g) + ": constructive run used Fallback");
        } catch (const std::exception& e) {
          local.violations.push_back(emit_graph6(g) + ": constructive run failed: " + e.what());
        }
      }
    }
    local.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    std::lock_guard<std::mutex> lock(mu_);
    OrderRow& r = rows_[n];
    r.order = n;
    r.examined += local.examined;
    r.eligible += local.eligible;
    r.ineligible += local.ineligible;
    r.constructive_runs += local.constructive_runs;
    r.fallbacks += local.fallbacks;
    r.seconds += local.seconds;
    for (auto& e : local.exceptions) r.exceptions.push_back(std::move(e));
    for (auto& v : local.violations) r.violations.push_back(std::move(v));
  }

  VerificationReport report() {
    VerificationReport rep;
    for (auto& [n, r] : rows_) {
      std::sort(r.exceptions.begin(), r.exceptions.end(),
                [](const ExceptionRecord& a, const ExceptionRecord& b) { return a.graph6 < b.graph6; });
      std::sort(r.violations.begin(), r.violations.end());
      rep.rows.push_back(r);
    }
    return rep;
  }

 private:
  const VerifyOptions& opts_;
  std::mutex mu_;
  std::map<std::size_t, OrderRow> rows_;
};

}  // namespace

VerificationReport verify_orders(std::size_t min_n, std::size_t max_n, const VerifyOptions& opts) {
  Checker checker(opts);
  for (std::size_t n = min_n; n <= max_n; ++n) checker.ensure_row(n);
  EnumSpec spec;
  spec.min_n = min_n;
  spec.max_n = max_n;
  spec.allow_large = opts.allow_large;
  spec.jobs = opts.jobs;
  spec.serialized = false;
  if (opts.progress)
    spec.progress = [&](std::size_t done, std::size_t total) {
      opts.progress("work units " + std::to_string(done) + "/" + std::to_string(total));
    };
  enumerate_connected_subcubic(spec, [&](const Graph& g) { checker.process(g); });
  return checker.report();
}

VerificationReport verify_stream(std::istream& in, const VerifyOptions& opts) {
  Checker checker(opts);
  std::size_t seen = 0;
  auto summary = ingest_graph6_stream(in, [&](const Graph& g) {
    checker.process(g);
    if (opts.progress && ++seen % 10000 == 0) opts.progress(std::to_string(seen) + " graphs");
  });
  auto rep = checker.report();
  rep.malformed_lines = summary.diagnostics.size();
  return rep;
}

namespace {

Vertex lbl(std::size_t printed) { return static_cast<Vertex>(printed - 1); }

std::size_t iota(const Graph& g) {
  return isolation_number(g, IsolationFamily::p3(), {.budget = std::nullopt, .lexicographic = false}).value;
}

bool in_g3(const Graph& g, const VertexSet& s) {
  return s.size() == 3 && is_connected(induced_subgraph(g, s).graph);
}

std::string vertex_list(const std::vector<Vertex>& vs) {
  std::string out;
  for (Vertex v : vs) out += (out.empty() ? "" : ",") + std::to_string(v + 1);
  return out;
}

struct Check {
  ObservationResult result;
  std::size_t cases = 0;
  std::vector<std::string> failures;

  explicit Check(std::string name) { result.name = std::move(name); }
  void expect(bool ok, const std::string& what) {
    ++cases;
    if (!ok) failures.push_back(what);
  }
  ObservationResult finish() {
    result.passed = failures.empty();
    result.detail = std::to_string(cases) + " cases";
    for (std::size_t i = 0; i < failures.size() && i < 5; ++i) result.detail += "; " + failures[i];
    return result;
  }
};

bool is_g7(CatalogId id) {
  return id == CatalogId::C7 || id == CatalogId::G71 || id == CatalogId::G72 || id == CatalogId::G73 ||
         id == CatalogId::G74 || id == CatalogId::G75 || id == CatalogId::G76;
}

std::vector<Edge> legal_additions(const Graph& g) {
  std::vector<Edge> out;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v) && g.degree(u) < 3 && g.degree(v) < 3) out.emplace_back(u, v);
  return out;
}

}  // namespace

std::vector<ObservationResult> check_observations() {
  std::vector<ObservationResult> out;
  const auto& cat = catalog();

  {
    Check c("catalog-iota: iota = (|V|+1)/4");
    for (const auto& e : cat)
      c.expect(iota(e.graph) * 4 == e.order + 1, std::string(to_string(e.id)) + " has iota " + std::to_string(iota(e.graph)));
    out.push_back(c.finish());
  }
  {
    Check c("catalog-vertex-deletion: G - v connected except (P3,2), (G71,7)");
    for (const auto& e : cat)
      for (Vertex v = 0; v < e.order; ++v) {
        const bool exempt = (e.id == CatalogId::P3 && v == lbl(2)) || (e.id == CatalogId::G71 && v == lbl(7));
        const bool connected = is_connected(delete_vertices(e.graph, VertexSet(e.order, {v})).graph);
        c.expect(connected != exempt, std::string(to_string(e.id)) + " - " + std::to_string(v + 1) +
                                          (connected ? " connected" : " disconnected"));
      }
    out.push_back(c.finish());
  }
  {
    Check a("catalog-low-degree-partner: low-degree v has a degree-3 v' outside N[v] with G - N[v'] connected");
    Check b("catalog-low-degree-independent: no two vertices of degree 1 or 2 adjacent");
    for (const auto& e : cat) {
      if (!is_g7(e.id) || e.id == CatalogId::C7) continue;
      const Graph& g = e.graph;
      for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) > 2) continue;
        bool found = false;
        for (Vertex w = 0; w < g.order() && !found; ++w)
          found = !closed_neighborhood(g, v).contains(w) && g.degree(w) == 3 &&
                  is_connected(delete_closed_neighborhood(g, VertexSet(g.order(), {w})).graph);
        a.expect(found, std::string(to_string(e.id)) + " vertex " + std::to_string(v + 1));
      }
      for (auto [u, v] : g.edges())
        b.expect(g.degree(u) == 3 || g.degree(v) == 3,
                 std::string(to_string(e.id)) + " edge " + vertex_list({u, v}));
    }
    out.push_back(a.finish());
    out.push_back(b.finish());
  }
  {
    Check a("g15-min-degree: minimum degree 2");
    Check b("g15-neighborhood-deletion: G - N[v] connected for low-degree v");
    Check c("g15-degree-two-spacing: degree-2 vertices of G15 pairwise at distance >= 4, minimum 4");
    for (const auto& e : cat) {
      if (e.id != CatalogId::C11 && e.id != CatalogId::G11 && e.id != CatalogId::G15) continue;
      const Graph& g = e.graph;
      a.expect(g.min_degree() == 2, std::string(to_string(e.id)));
      for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) <= 2)
          b.expect(is_connected(delete_closed_neighborhood(g, VertexSet(g.order(), {v})).graph),
                   std::string(to_string(e.id)) + " vertex " + std::to_string(v + 1));
      if (e.id == CatalogId::G15) {
        std::size_t best = g.order();
        for (Vertex u = 0; u < g.order(); ++u)
          for (Vertex v = u + 1; v < g.order(); ++v)
            if (g.degree(u) == 2 && g.degree(v) == 2) best = std::min(best, *distance(g, u, v));
        c.expect(best == 4, "minimum distance " + std::to_string(best));
      }
    }
    out.push_back(a.finish());
    out.push_back(b.finish());
    out.push_back(c.finish());
  }
  {
    Check c("residual-degree-pattern: residual G3-graph with the stated degree pattern");
    for (CatalogId id : {CatalogId::G71, CatalogId::G72, CatalogId::G73, CatalogId::G75}) {
      const Graph& g = catalog_entry(id).graph;
      for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) > 2) continue;
        bool found = false;
        for (Vertex w = 0; w < g.order() && !found; ++w) {
          if (closed_neighborhood(g, v).contains(w) || g.degree(w) != 3) continue;
          const VertexSet rest = g.vertices() - closed_neighborhood(g, w);
          if (!in_g3(g, rest)) continue;
          const auto res_deg = [&](Vertex y) { return g.neighbors(y).intersection_size(rest); };
          const bool triangle = induced_subgraph(g, rest).graph.edge_count() == 3;
          bool a = false, b = false;
          rest.for_each([&](Vertex y) {
            rest.for_each([&](Vertex yp) {
              if (y == yp) return;
              if (!triangle && g.degree(y) == 2 && res_deg(y) == 1 && g.degree(yp) == 3 && res_deg(yp) == 2) a = true;
              if (triangle && g.degree(y) == 3 && g.degree(yp) == 3) b = true;
            });
          });
          found = a || b;
        }
        c.expect(found, std::string(to_string(id)) + " vertex " + std::to_string(v + 1));
      }
    }
    out.push_back(c.finish());
  }
  {
    Check c("g7-edge-additions: single-edge additions to G72, G73, G75");
    for (CatalogId id : {CatalogId::G72, CatalogId::G73, CatalogId::G75}) {
      const Graph& g = catalog_entry(id).graph;
      for (auto [u, v] : legal_additions(g)) {
        const Graph h = g.with_edge(u, v);
        const bool special = id == CatalogId::G75 && u == lbl(1) && (v == lbl(4) || v == lbl(5));
        const std::string what = std::string(to_string(id)) + " + " + vertex_list({u, v});
        if (special) {
          c.expect(iota(h) <= 1, what + " has iota " + std::to_string(iota(h)));
        } else {
          auto m = catalog_match(h);
          c.expect(m && (m->id == CatalogId::G74 || m->id == CatalogId::G76), what + " is not G74/G76");
        }
      }
    }
    out.push_back(c.finish());
  }
  {
    Check c("g71-edge-additions: one- and two-edge additions to G71");
    const Graph& g = catalog_entry(CatalogId::G71).graph;
    const auto singles = legal_additions(g);
    std::vector<Edge> nonedges;
    for (Vertex u = 0; u < g.order(); ++u)
      for (Vertex v = u + 1; v < g.order(); ++v)
        if (!g.adjacent(u, v)) nonedges.emplace_back(u, v);
    auto judge = [&](const Graph& h, const std::vector<Edge>& s) {
      const VertexSet special(g.order(), {lbl(2), lbl(4), lbl(6)});
      const bool exempt = s.size() == 1 && special.contains(s[0].first) && special.contains(s[0].second);
      std::string what = "G71 +";
      for (auto [a, b] : s) what += " " + vertex_list({a, b});
      if (exempt) {
        c.expect(iota(h) <= 1, what + " has iota " + std::to_string(iota(h)));
      } else {
        auto m = catalog_match(h);
        c.expect(m && is_g7(m->id) && m->id != CatalogId::C7 && m->id != CatalogId::G75, what);
      }
    };
    for (auto [u, v] : singles) judge(g.with_edge(u, v), {{u, v}});
    for (std::size_t i = 0; i < nonedges.size(); ++i)
      for (std::size_t j = i + 1; j < nonedges.size(); ++j) {
        Graph h = g.with_edge(nonedges[i].first, nonedges[i].second).with_edge(nonedges[j].first, nonedges[j].second);
        if (h.max_degree() > 3) continue;
        judge(h, {nonedges[i], nonedges[j]});
      }
    out.push_back(c.finish());
  }
  {
    Check c("catalog-minus-vertex: iota(G - v) <= (|V|-3)/4, and G - v connected outside G3");
    for (const auto& e : cat)
      for (Vertex v = 0; v < e.order; ++v) {
        if (e.graph.degree(v) > 2) continue;
        const Graph h = delete_vertices(e.graph, VertexSet(e.order, {v})).graph;
        const std::string what = std::string(to_string(e.id)) + " - " + std::to_string(v + 1);
        c.expect(iota(h) * 4 <= e.order - 3, what + " iota " + std::to_string(iota(h)));
        if (e.order > 3) c.expect(is_connected(h), what + " disconnected");
      }
    out.push_back(c.finish());
  }
  return out;
}

}  // namespace p3iso
