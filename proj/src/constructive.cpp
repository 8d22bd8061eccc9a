#include "p3iso/constructive.hpp"

#include <algorithm>
#include <array>

#include "json.hpp"
#include "p3iso/generators.hpp"
#include "p3iso/patterns.hpp"

namespace p3iso {

std::string_view to_string(Precondition p) {
  switch (p) {
    case Precondition::NotConnected: return "NotConnected";
    case Precondition::NotSubcubic: return "NotSubcubic";
    case Precondition::InducedC6: return "InducedC6";
    case Precondition::ExceptionalGraph: return "ExceptionalGraph";
  }
  return "?";
}

namespace {

constexpr std::array<std::pair<CaseId, std::string_view>, 11> kCaseNames{{
    {CaseId::Base15, "Base≤15"},
    {CaseId::PathFormula, "Δ≤2-Path"},
    {CaseId::CycleFormula, "Δ≤2-Cycle"},
    {CaseId::NoExceptional, "NoExceptional"},
    {CaseId::Case1, "Case1"},
    {CaseId::Case21, "Case2.1"},
    {CaseId::Case221, "Case2.2.1"},
    {CaseId::Case222, "Case2.2.2"},
    {CaseId::Case223, "Case2.2.3"},
    {CaseId::Case224, "Case2.2.4"},
    {CaseId::Fallback, "Fallback"},
}};

}  // namespace

std::string_view to_string(CaseId id) {
  for (auto [c, name] : kCaseNames)
    if (c == id) return name;
  return "?";
}

std::optional<CaseId> parse_case_id(std::string_view s) {
  for (auto [c, name] : kCaseNames)
    if (name == s) return c;
  return std::nullopt;
}

std::size_t CaseTrace::fallback_count() const {
  return static_cast<std::size_t>(
      std::count_if(steps.begin(), steps.end(), [](const TraceStep& s) { return s.case_id == CaseId::Fallback; }));
}

std::string CaseTrace::to_json_lines() const {
  auto one_based = [](const std::vector<Vertex>& vs) {
    std::vector<std::size_t> out;
    for (Vertex v : vs) out.push_back(v + 1);
    return out;
  };
  std::string out;
  for (const auto& s : steps) {
    nlohmann::json j;
    j["case"] = to_string(s.case_id);
    j["depth"] = s.depth;
    j["order"] = s.order;
    j["center"] = s.center ? nlohmann::json(*s.center + 1) : nlohmann::json(nullptr);
    j["chosen"] = one_based(s.chosen);
    j["deleted"] = one_based(s.deleted);
    auto targets = nlohmann::json::array();
    for (const auto& t : s.targets) targets.push_back(one_based(t));
    j["targets"] = targets;
    auto relabel = nlohmann::json::object();
    for (auto [label, v] : s.relabel) relabel[std::to_string(label)] = v + 1;
    j["relabel"] = relabel;
    j["branch"] = s.branch;
    out += j.dump() + "\n";
  }
  return out;
}

void check_isolate_preconditions(const Graph& g) {
  if (!is_connected(g)) throw PreconditionViolated(Precondition::NotConnected, "graph is not connected");
  if (g.max_degree() > 3) throw PreconditionViolated(Precondition::NotSubcubic, "graph has a vertex of degree > 3");
  if (has_induced_cycle(g, 6)) throw PreconditionViolated(Precondition::InducedC6, "graph has an induced 6-cycle");
  if (auto m = catalog_match(g))
    throw PreconditionViolated(Precondition::ExceptionalGraph,
                               "graph is the exceptional graph " + std::string(to_string(m->id)));
}

Certificate path_cycle_isolating_set(std::size_t n, LineKind kind) {
  const Graph g = kind == LineKind::Path ? path(n) : cycle(n);
  if (kind == LineKind::Path && n < 4)
    return isolation_number(g, IsolationFamily::p3());
  Certificate cert;
  cert.set = g.empty_set();
  const std::size_t step = kind == LineKind::Path ? 4 : 5;
  const std::size_t first = kind == LineKind::Path ? 3 : 0;
  for (std::size_t p = first; p < n; p += step) cert.set.insert(static_cast<Vertex>(p));
  cert.value = cert.set.size();
  if (!is_isolating(g, cert.family, cert.set)) throw std::logic_error("closed-form set does not isolate");
  return cert;
}

bool verify_certificate(const Graph& g, const Certificate& cert, std::optional<std::size_t> max_size) {
  if (cert.set.order() != g.order()) return false;
  if (!is_isolating(g, cert.family, cert.set)) return false;
  if (!cert.exceeds_budget && cert.set.size() > cert.value) return false;
  if (cert.exact && cert.set.size() != cert.value) return false;
  if (max_size && cert.set.size() > *max_size) return false;
  return true;
}

namespace {

struct Plan {
  CaseId id = CaseId::NoExceptional;
  Vertex center = 0;
  VertexSet chosen;
  VertexSet deleted;
  std::string branch;
  std::vector<std::pair<std::size_t, Vertex>> relabel;
};

struct Accepted {
  Plan plan;
  std::vector<VertexSet> targets;
};

bool is_exceptional(const Graph& g, const VertexSet& s) {
  const std::size_t t = s.size();
  if (t != 3 && t != 7 && t != 11 && t != 15) return false;
  return catalog_match(induced_subgraph(g, s).graph).has_value();
}

/// The guaranteed isolating-set size for a component left to the recursion.
std::size_t target_cost(const Graph& g, const VertexSet& t) {
  return is_exceptional(g, t) ? (t.size() + 1) / 4 : t.size() / 4;
}

/// A plan is sound when every 3-path surviving the chosen vertices lies in a
/// single component of G - deleted, and affordable when the chosen vertices
/// plus the recursive guarantees fit in floor(n/4).
std::optional<std::vector<VertexSet>> validate_plan(const Graph& g, const Plan& p) {
  const VertexSet rest = g.vertices() - closed_neighborhood(g, p.chosen);
  auto targets = components_within(g, g.vertices() - p.deleted);
  std::vector<int> owner(g.order(), -1);
  for (std::size_t i = 0; i < targets.size(); ++i)
    targets[i].for_each([&](Vertex u) { owner[u] = static_cast<int>(i); });
  bool sound = true;
  rest.for_each([&](Vertex r) {
    if (!sound) return;
    VertexSet nb = g.neighbors(r) & rest;
    if (nb.size() < 2) return;
    if (owner[r] < 0) {
      sound = false;
      return;
    }
    nb.for_each([&](Vertex u) {
      if (owner[u] != owner[r]) sound = false;
    });
  });
  if (!sound) return std::nullopt;
  std::size_t cost = p.chosen.size();
  for (const auto& t : targets) cost += target_cost(g, t);
  if (cost > g.order() / 4) return std::nullopt;
  return targets;
}

VertexSet closed_nbhd(const Graph& g, std::initializer_list<Vertex> vs) {
  VertexSet s(g.order());
  for (Vertex v : vs) s |= closed_neighborhood(g, v);
  return s;
}

VertexSet make_set(const Graph& g, std::initializer_list<Vertex> vs) { return VertexSet(g.order(), vs); }

/// The components of G - N[center] and how they attach to N(center).
struct Neighborhood {
  const Graph& g;
  Vertex center;
  VertexSet nbrs;
  std::vector<VertexSet> comps;
  std::vector<std::optional<CatalogId>> kind;
  std::vector<InducedSubgraph> subgraph;
  std::vector<VertexSet> links;  // members of N(center) adjacent to each component

  Neighborhood(const Graph& graph, Vertex c) : g(graph), center(c), nbrs(graph.neighbors(c)) {
    comps = components_within(g, g.vertices() - closed_neighborhood(g, c));
    for (const auto& h : comps) {
      subgraph.push_back(induced_subgraph(g, h));
      auto m = catalog_match(subgraph.back().graph);
      kind.push_back(m ? std::optional<CatalogId>(m->id) : std::nullopt);
      VertexSet l(g.order());
      nbrs.for_each([&](Vertex x) {
        if (g.neighbors(x).intersects(h)) l.insert(x);
      });
      links.push_back(l);
    }
  }

  /// Isomorphisms catalog graph -> component i, in parent labels.
  std::vector<std::vector<Vertex>> normal_forms(std::size_t i) const {
    std::vector<std::vector<Vertex>> out;
    for_each_isomorphism(subgraph[i].graph, catalog_entry(*kind[i]).graph, [&](const IsoWitness& w) {
      std::vector<Vertex> phi;
      for (Vertex u : w.mapping) phi.push_back(subgraph[i].to_parent[u]);
      out.push_back(std::move(phi));
      return true;
    });
    return out;
  }
};

std::vector<std::pair<std::size_t, Vertex>> relabel_of(const std::vector<Vertex>& phi) {
  std::vector<std::pair<std::size_t, Vertex>> out;
  for (std::size_t i = 0; i < phi.size(); ++i) out.emplace_back(i + 1, phi[i]);
  return out;
}

class StepAnalyzer {
 public:
  explicit StepAnalyzer(const Graph& g) : g_(g) {}

  Accepted analyze(Vertex c, int depth) {
    Neighborhood nb(g_, c);
    std::vector<std::size_t> ex;
    for (std::size_t i = 0; i < nb.comps.size(); ++i)
      if (nb.kind[i]) ex.push_back(i);

    std::vector<Plan> plans;
    auto add = [&](CaseId id, VertexSet chosen, VertexSet deleted, std::string branch,
                   std::vector<std::pair<std::size_t, Vertex>> relabel = {}) {
      plans.push_back(Plan{id, c, std::move(chosen), std::move(deleted), std::move(branch), std::move(relabel)});
    };
    auto first_valid = [&]() -> std::optional<Accepted> {
      for (auto& p : plans)
        if (auto t = validate_plan(g_, p)) return Accepted{std::move(p), std::move(*t)};
      return std::nullopt;
    };
    auto exhausted = [&](const std::string& where) {
      return InternalCaseExhausted("no valid plan in " + where + " at center " + std::to_string(c + 1));
    };

    if (ex.empty()) {
      add(CaseId::NoExceptional, make_set(g_, {c}), closed_neighborhood(g_, c), "");
      if (auto a = first_valid()) return *a;
      throw exhausted("NoExceptional");
    }

    // Case 1: some neighbour is linked to two exceptional components.
    bool case1 = false;
    nb.nbrs.for_each([&](Vertex x) {
      std::vector<std::size_t> hx, others;
      for (std::size_t i : ex) (nb.links[i].contains(x) ? hx : others).push_back(i);
      if (hx.size() < 2) return;
      case1 = true;
      VertexSet base_chosen = make_set(g_, {c, x});
      VertexSet base_deleted = closed_neighborhood(g_, c);
      for (std::size_t i : hx) base_deleted.insert(*(g_.neighbors(x) & nb.comps[i]).first());
      // Every way of picking the neighbour x_H for the remaining components.
      std::vector<std::vector<Vertex>> choices{{}};
      for (std::size_t i : others) {
        std::vector<std::vector<Vertex>> next;
        for (const auto& prefix : choices)
          nb.links[i].for_each([&](Vertex xh) {
            auto p = prefix;
            p.push_back(xh);
            next.push_back(std::move(p));
          });
        choices = std::move(next);
      }
      for (const auto& choice : choices) {
        VertexSet chosen = base_chosen, deleted = base_deleted;
        for (std::size_t k = 0; k < others.size(); ++k) {
          chosen.insert(choice[k]);
          deleted.insert(*(g_.neighbors(choice[k]) & nb.comps[others[k]]).first());
        }
        add(CaseId::Case1, chosen, deleted, "");
      }
    });
    if (case1) {
      if (auto a = first_valid()) return *a;
      throw exhausted("Case1");
    }

    // Case 2.1: an exceptional component linked to a single neighbour.
    bool case21 = false;
    for (std::size_t i : ex) {
      if (nb.links[i].size() != 1) continue;
      case21 = true;
      const Vertex x = *nb.links[i].first();
      (g_.neighbors(x) & nb.comps[i]).for_each([&](Vertex y) {
        add(CaseId::Case21, make_set(g_, {x}), make_set(g_, {x, y}), "G*_v kept");
        add(CaseId::Case21, make_set(g_, {x}), make_set(g_, {x, y, c}), "G*_v - v");
      });
    }
    if (case21) {
      if (auto a = first_valid()) return *a;
      throw exhausted("Case2.1");
    }

    if (ex.size() != 1) throw exhausted("Case2.2 (several exceptional components)");
    const std::size_t h1 = ex.front();
    const VertexSet& hv = nb.comps[h1];
    const VertexSet& linked = nb.links[h1];
    const CatalogId id = *nb.kind[h1];
    VertexSet attach = hv & closed_neighborhood(g_, linked);  // vertices y_{x,H1}
    attach -= linked;

    std::vector<Vertex> recenter;
    CaseId case_id = CaseId::Case224;
    switch (id) {
      case CatalogId::G15: {
        case_id = CaseId::Case221;
        VertexSet seen(g_.order());
        for (const auto& phi : nb.normal_forms(h1)) {
          const Vertex t = phi[12];
          if (seen.contains(t)) continue;
          seen.insert(t);
          add(case_id, make_set(g_, {t}), closed_neighborhood(g_, t), "y13", relabel_of(phi));
        }
        break;
      }
      case CatalogId::G11: {
        case_id = CaseId::Case222;
        VertexSet seen(g_.order());
        for (const auto& phi : nb.normal_forms(h1)) {
          const Vertex t = phi[1];
          if (seen.contains(t)) continue;
          seen.insert(t);
          add(case_id, make_set(g_, {t}), closed_neighborhood(g_, t), "G11 y2", relabel_of(phi));
        }
        break;
      }
      case CatalogId::C11: {
        case_id = CaseId::Case222;
        const auto forms = nb.normal_forms(h1);
        for (const auto& phi : forms)
          if (attach.contains(phi[0]))
            add(case_id, make_set(g_, {phi[0]}), closed_neighborhood(g_, phi[0]), "C11 I connected",
                relabel_of(phi));
        for (const auto& phi : forms) {
          if (!attach.contains(phi[0])) continue;
          nb.nbrs.for_each([&](Vertex a) {
            nb.nbrs.for_each([&](Vertex b) {
              if (b <= a) return;
              VertexSet deleted = hv;
              deleted.insert(a);
              deleted.insert(b);
              add(case_id, make_set(g_, {phi[0], phi[1], phi[6]}), deleted, "C11 D'", relabel_of(phi));
            });
          });
        }
        break;
      }
      case CatalogId::C7: {
        case_id = CaseId::Case223;
        const auto forms = nb.normal_forms(h1);
        for (const auto& phi : forms)
          if (attach.contains(phi[0]))
            add(case_id, make_set(g_, {phi[0]}), closed_neighborhood(g_, phi[0]), "C7 y1", relabel_of(phi));
        linked.for_each([&](Vertex x1p) {
          nb.nbrs.for_each([&](Vertex w) {
            if (w == x1p) return;
            (g_.neighbors(w) - make_set(g_, {c})).for_each([&](Vertex u4) {
              if (u4 == x1p) return;
              add(case_id, make_set(g_, {x1p, u4}), closed_nbhd(g_, {x1p, u4}), "C7 G-dagger");
            });
          });
        });
        attach.for_each([&](Vertex y) { recenter.push_back(y); });
        break;
      }
      case CatalogId::G71:
      case CatalogId::G72:
      case CatalogId::G73:
      case CatalogId::G74:
      case CatalogId::G75:
      case CatalogId::G76: {
        case_id = CaseId::Case223;
        const Graph& h = nb.subgraph[h1].graph;
        for (Vertex u = 0; u < h.order(); ++u) {
          if (h.degree(u) != 3) continue;
          const Vertex ys = nb.subgraph[h1].to_parent[u];
          add(case_id, make_set(g_, {ys}), closed_neighborhood(g_, ys), "G7 y*");
        }
        break;
      }
      case CatalogId::P3:
      case CatalogId::C3:
        add_g3_plans(nb, h1, attach, plans);
        attach.for_each([&](Vertex y) { recenter.push_back(y); });
        break;
    }

    if (auto a = first_valid()) return *a;
    if (depth < 2) {
      for (Vertex y : recenter) {
        if (g_.degree(y) != 3) continue;
        try {
          Accepted a = analyze(y, depth + 1);
          if (a.plan.id == CaseId::NoExceptional) continue;
          a.plan.branch = "recentered from " + std::to_string(c + 1) + (a.plan.branch.empty() ? "" : ": ") +
                          a.plan.branch;
          a.plan.id = case_id;
          return a;
        } catch (const InternalCaseExhausted&) {
        }
      }
    }
    throw exhausted(std::string(to_string(case_id)));
  }

 private:
  void add_g3_plans(const Neighborhood& nb, std::size_t h1, const VertexSet& attach, std::vector<Plan>& plans) {
    const Vertex c = nb.center;
    const VertexSet& hv = nb.comps[h1];
    const VertexSet& linked = nb.links[h1];
    auto add = [&](VertexSet chosen, VertexSet deleted, std::string branch) {
      plans.push_back(Plan{CaseId::Case224, c, std::move(chosen), std::move(deleted), std::move(branch), {}});
    };
    auto h_degree = [&](Vertex y) { return g_.neighbors(y).intersection_size(hv); };
    bool condition1 = true;
    attach.for_each([&](Vertex y) {
      if (h_degree(y) == 2) condition1 = false;
    });
    const std::string tag = condition1 ? "(1) " : "not (1) ";

    // Attachment vertices of H1-degree 2 first, then those adjacent to both x1 and x1'.
    std::vector<Vertex> ys;
    attach.for_each([&](Vertex y) { ys.push_back(y); });
    std::stable_sort(ys.begin(), ys.end(), [&](Vertex a, Vertex b) {
      auto key = [&](Vertex y) {
        return std::pair<std::size_t, std::size_t>{2 - std::min<std::size_t>(h_degree(y), 2),
                                                   3 - g_.neighbors(y).intersection_size(nb.nbrs)};
      };
      return key(a) < key(b);
    });
    for (Vertex y : ys) add(make_set(g_, {y}), closed_neighborhood(g_, y), tag + "y1");

    for (Vertex y : ys) {
      if (closed_neighborhood(g_, y).contains(c)) continue;
      const VertexSet left = g_.vertices() - closed_neighborhood(g_, y);
      VertexSet kept(g_.order());  // the components I, linked only to x1 and x1'
      VertexSet gv = reach(g_, c, left);
      for (const auto& comp : components_within(g_, left))
        if (!comp.intersects(gv) && !comp.is_subset_of(hv)) kept |= comp;
      const VertexSet deleted = g_.vertices() - kept;
      nb.nbrs.for_each([&](Vertex w) {
        (gv - closed_neighborhood(g_, w)).for_each([&](Vertex z) {
          add(make_set(g_, {w, y, z}), deleted, tag + "G*_v = G71: {w, y1, z}");
        });
        add(make_set(g_, {w, y}), deleted, tag + "G*_v = P3: {w, y1}");
      });
    }

    linked.for_each([&](Vertex x) {
      if (g_.neighbors(x).intersects(nb.nbrs)) add(make_set(g_, {x}), closed_neighborhood(g_, x), tag + "x1");
    });
    linked.for_each([&](Vertex x) {
      add(make_set(g_, {x}), closed_neighborhood(g_, x), tag + "r=0 x1'");
      (g_.neighbors(x) & hv).for_each([&](Vertex y1p) {
        VertexSet xp = hv;
        xp.insert(x);
        add(make_set(g_, {y1p}), xp, tag + "r=0 X'");
        VertexSet xpp = closed_neighborhood(g_, y1p) & hv;
        xpp.insert(x);
        add(make_set(g_, {y1p}), xpp, tag + "r=0 X''");
      });
    });
  }

  const Graph& g_;
};

class Builder {
 public:
  VertexSet solve(const Graph& g, const std::vector<Vertex>& to_root, std::size_t depth) {
    const std::size_t n = g.order();
    if (n == 0) return g.empty_set();
    TraceStep step;
    step.depth = depth;
    step.order = n;
    step.deleted = to_root;

    if (n <= 15) {
      const bool exceptional = catalog_match(g).has_value();
      const std::size_t budget = exceptional ? (n + 1) / 4 : n / 4;
      auto cert = isolation_number(g, IsolationFamily::p3(), {.budget = budget, .lexicographic = false});
      step.case_id = CaseId::Base15;
      step.branch = exceptional ? "exceptional" : "";
      if (cert.exceeds_budget) {
        cert = isolation_number(g, IsolationFamily::p3(), {.budget = std::nullopt, .lexicographic = false});
        step.case_id = CaseId::Fallback;
        step.branch = "base budget exceeded";
      }
      return finish_terminal(std::move(step), cert.set, to_root);
    }

    if (g.max_degree() <= 2) {
      const bool is_cycle = g.min_degree() == 2;
      step.case_id = is_cycle ? CaseId::CycleFormula : CaseId::PathFormula;
      const auto walk = walk_order(g, is_cycle);
      const auto formula = path_cycle_isolating_set(n, is_cycle ? LineKind::Cycle : LineKind::Path);
      VertexSet d = g.empty_set();
      formula.set.for_each([&](Vertex p) { d.insert(walk[p]); });
      return finish_terminal(std::move(step), d, to_root);
    }

    Vertex v = 0;
    while (g.degree(v) != 3) ++v;
    std::optional<Accepted> accepted;
    std::string failure;
    try {
      accepted = StepAnalyzer(g).analyze(v, 0);
    } catch (const InternalCaseExhausted& e) {
      failure = e.what();
    }
    if (!accepted) {
      auto cert = isolation_number(g, IsolationFamily::p3(), {.budget = n / 4, .lexicographic = false});
      if (cert.exceeds_budget)
        cert = isolation_number(g, IsolationFamily::p3(), {.budget = std::nullopt, .lexicographic = false});
      step.case_id = CaseId::Fallback;
      step.center = to_root[v];
      step.branch = failure;
      return finish_terminal(std::move(step), cert.set, to_root);
    }

    const Plan& plan = accepted->plan;
    step.case_id = plan.id;
    step.center = to_root[plan.center];
    step.chosen = lift(plan.chosen, to_root);
    step.deleted = lift(plan.deleted, to_root);
    for (const auto& t : accepted->targets) step.targets.push_back(lift(t, to_root));
    for (auto [label, u] : plan.relabel) step.relabel.emplace_back(label, to_root[u]);
    step.branch = plan.branch;
    trace.steps.push_back(std::move(step));

    VertexSet d = plan.chosen;
    for (const auto& t : accepted->targets) {
      auto sub = induced_subgraph(g, t);
      std::vector<Vertex> child_root;
      for (Vertex u : sub.to_parent) child_root.push_back(to_root[u]);
      d |= sub.lift(solve(sub.graph, child_root, depth + 1), n);
    }
    return d;
  }

  CaseTrace trace;

 private:
  VertexSet finish_terminal(TraceStep step, const VertexSet& d, const std::vector<Vertex>& to_root) {
    step.chosen = lift(d, to_root);
    trace.steps.push_back(std::move(step));
    return d;
  }

  static std::vector<Vertex> lift(const VertexSet& s, const std::vector<Vertex>& to_root) {
    std::vector<Vertex> out;
    s.for_each([&](Vertex u) { out.push_back(to_root[u]); });
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Vertices of a connected graph with max degree <= 2 in path/cycle order.
  static std::vector<Vertex> walk_order(const Graph& g, bool is_cycle) {
    Vertex start = 0;
    if (!is_cycle)
      while (g.degree(start) > 1) ++start;
    std::vector<Vertex> walk{start};
    VertexSet seen = g.empty_set();
    seen.insert(start);
    while (walk.size() < g.order()) {
      auto next = (g.neighbors(walk.back()) - seen).first();
      walk.push_back(*next);
      seen.insert(*next);
    }
    return walk;
  }

};

}  // namespace

IsolationResult isolate_p3_subcubic(const Graph& g) {
  check_isolate_preconditions(g);
  std::vector<Vertex> identity(g.order());
  for (Vertex v = 0; v < g.order(); ++v) identity[v] = v;
  Builder builder;
  IsolationResult result;
  result.certificate.set = builder.solve(g, identity, 0);
  result.certificate.value = result.certificate.set.size();
  result.trace = std::move(builder.trace);
  if (!is_isolating(g, result.certificate.family, result.certificate.set) ||
      result.certificate.value > g.order() / 4) {
    auto cert = isolation_number(g, IsolationFamily::p3(), {.budget = g.order() / 4, .lexicographic = false});
    TraceStep step;
    step.case_id = CaseId::Fallback;
    step.order = g.order();
    step.chosen = cert.set.to_vector();
    step.deleted = identity;
    step.branch = "assembled set failed the final check";
    result.trace.steps = {step};
    result.certificate = cert;
    result.certificate.exact = false;
  }
  return result;
}

std::vector<std::string> validate_trace(const Graph& g, const CaseTrace& trace) {
  std::vector<std::string> problems;
  const std::size_t n = g.order();
  std::vector<int> deleted_by(n, -1);
  VertexSet all_chosen = g.empty_set();
  std::size_t chosen_total = 0;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& s = trace.steps[i];
    const std::string where = "step " + std::to_string(i) + " (" + std::string(to_string(s.case_id)) + ")";
    VertexSet chosen(n), deleted(n);
    for (Vertex v : s.chosen) {
      if (v >= n) {
        problems.push_back(where + ": chosen vertex out of range");
        return problems;
      }
      chosen.insert(v);
    }
    for (Vertex v : s.deleted) {
      if (v >= n) {
        problems.push_back(where + ": deleted vertex out of range");
        return problems;
      }
      deleted.insert(v);
      if (deleted_by[v] >= 0)
        problems.push_back(where + ": vertex " + std::to_string(v + 1) + " already deleted by step " +
                           std::to_string(deleted_by[v]));
      deleted_by[v] = static_cast<int>(i);
    }
    chosen_total += chosen.size();
    all_chosen |= chosen;
    for (const auto& t : s.targets)
      for (Vertex v : t)
        if (v < n && deleted.contains(v)) problems.push_back(where + ": target overlaps the deleted set");
    // Only the cases that name an explicit deletion set may delete outside N[X].
    const bool explicit_set = s.case_id == CaseId::Case1 || s.case_id == CaseId::Case21 ||
                              s.case_id == CaseId::Case222 || s.case_id == CaseId::Case223 ||
                              s.case_id == CaseId::Case224;
    const bool terminal = s.case_id == CaseId::Base15 || s.case_id == CaseId::PathFormula ||
                          s.case_id == CaseId::CycleFormula || s.case_id == CaseId::Fallback;
    if (!terminal && !explicit_set && !deleted.is_subset_of(closed_neighborhood(g, chosen)))
      problems.push_back(where + ": deletes vertices outside N[chosen]");
  }
  for (Vertex v = 0; v < n; ++v)
    if (deleted_by[v] < 0) problems.push_back("vertex " + std::to_string(v + 1) + " never deleted");
  if (chosen_total > n / 4)
    problems.push_back("trace chooses " + std::to_string(chosen_total) + " vertices, more than floor(n/4)");
  if (!is_isolating(g, IsolationFamily::p3(), all_chosen)) problems.push_back("chosen vertices do not isolate");
  return problems;
}

}  // namespace p3iso
