#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"
#include "p3iso/constructive.hpp"
#include "p3iso/enumerate.hpp"
#include "p3iso/generators.hpp"
#include "p3iso/io.hpp"
#include "p3iso/solver.hpp"
#include "p3iso/verify.hpp"

using namespace p3iso;
using nlohmann::json;

namespace {

enum Exit { kPass = 0, kViolation = 1, kInputError = 2, kPrecondition = 3 };

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool looks_like_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    long a, b;
    std::string rest;
    return static_cast<bool>(fields >> a >> b) && !(fields >> rest);
  }
  return false;
}

Graph parse_text(const std::string& text) {
  if (looks_like_edge_list(text)) return parse_edge_list(text);
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty() && line != "\r") return parse_graph6(line);
  throw InputError("no graph in input");
}

/// "-" for stdin, "catalog:<ID>", a file path, or a literal graph6 string.
Graph load_graph(const std::string& spec) {
  if (spec.rfind("catalog:", 0) == 0) {
    auto id = parse_catalog_id(spec.substr(8));
    if (!id) throw InputError("unknown catalog id: " + spec.substr(8));
    return catalog_entry(*id).graph;
  }
  if (spec == "-") {
    std::stringstream buf;
    buf << std::cin.rdbuf();
    return parse_text(buf.str());
  }
  if (std::filesystem::is_regular_file(spec)) {
    std::ifstream in(spec);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_text(buf.str());
  }
  return parse_graph6(spec);
}

std::vector<std::size_t> one_based(const VertexSet& s) {
  std::vector<std::size_t> out;
  s.for_each([&](Vertex v) { out.push_back(v + 1); });
  return out;
}

std::string join(const std::vector<std::size_t>& xs) {
  std::string out;
  for (auto x : xs) out += (out.empty() ? "" : " ") + std::to_string(x);
  return out;
}

json graph_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u + 1, v + 1});
  return {{"order", g.order()}, {"size", g.edge_count()}, {"graph6", emit_graph6(g)}, {"edges", edges}};
}

void print_graph(const Graph& g, const std::string& format, const std::string& label = "") {
  if (format == "graph6") {
    std::cout << emit_graph6(g) << "\n";
  } else if (format == "edges") {
    if (!label.empty()) std::cout << "# " << label << "\n";
    std::cout << emit_edge_list(g);
  } else {
    json j = graph_json(g);
    if (!label.empty()) j["id"] = label;
    std::cout << j.dump() << "\n";
  }
}

Graph generate(const std::string& kind, std::size_t n) {
  if (kind == "path") return path(n);
  if (kind == "cycle") return cycle(n);
  if (kind == "complete") return complete(n);
  if (kind == "bnp3") return construction_B(n, path(3));
  throw InputError("unknown generator: " + kind);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"P3-isolation toolkit for subcubic graphs"};
  app.require_subcommand(1);

  std::string input, family = "p3", format = "graph6", stream_file, gen_kind, catalog_id;
  std::size_t gen_n = 0, min_n = 1, max_n = 9, jobs = 1;
  bool as_json = false, trace = false, large = false, constructive = false, no_c6 = false, counts_only = false;

  auto* iota_cmd = app.add_subcommand("iota", "Exact isolation number with a minimum set");
  iota_cmd->add_option("input", input, "graph6 string, file, '-' or catalog:<ID>")->required();
  iota_cmd->add_option("--family", family, "k1, k2, k3, p3, cycle:K or anycycle");
  iota_cmd->add_flag("--json", as_json);

  auto* isolate_cmd = app.add_subcommand("isolate", "Constructive P3-isolating set of size at most floor(n/4)");
  isolate_cmd->add_option("input", input, "graph6 string, file, '-' or catalog:<ID>")->required();
  isolate_cmd->add_flag("--trace", trace, "Print the case trace as JSON lines");
  isolate_cmd->add_flag("--json", as_json);

  auto* verify_cmd = app.add_subcommand("verify", "Check the floor(n/4) bound over enumerated or streamed graphs");
  verify_cmd->add_option("--min-n", min_n);
  verify_cmd->add_option("--max-n", max_n);
  verify_cmd->add_option("--stream", stream_file, "graph6 file ('-' for stdin) instead of enumeration");
  verify_cmd->add_option("--jobs", jobs);
  verify_cmd->add_flag("--large", large, "Allow orders 10 and 11");
  verify_cmd->add_flag("--constructive", constructive, "Also run and check the constructive algorithm");
  verify_cmd->add_flag("--json", as_json);

  auto* obs_cmd = app.add_subcommand("check-observations", "Machine-check structural facts about the catalog");
  obs_cmd->add_flag("--json", as_json);

  auto* gen_cmd = app.add_subcommand("gen", "Generate path, cycle, complete or bnp3 graphs");
  gen_cmd->add_option("kind", gen_kind)->required()->check(CLI::IsMember({"path", "cycle", "complete", "bnp3"}));
  gen_cmd->add_option("n", gen_n)->required();
  gen_cmd->add_option("--format", format)->check(CLI::IsMember({"graph6", "edges", "json"}));

  auto* catalog_cmd = app.add_subcommand("catalog", "Print the exceptional graphs");
  catalog_cmd->add_option("--id", catalog_id, "Only this entry");
  catalog_cmd->add_option("--format", format)->check(CLI::IsMember({"graph6", "edges", "json"}));

  auto* enum_cmd = app.add_subcommand("enum", "Enumerate connected subcubic graphs");
  enum_cmd->add_option("--min-n", min_n);
  enum_cmd->add_option("--max-n", max_n);
  enum_cmd->add_option("--jobs", jobs);
  enum_cmd->add_flag("--large", large, "Allow orders 10 and 11");
  enum_cmd->add_flag("--no-c6", no_c6, "Skip graphs with an induced C6");
  enum_cmd->add_flag("--count", counts_only, "Print per-order counts only");
  enum_cmd->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (*iota_cmd) {
      const Graph g = load_graph(input);
      const auto fam = IsolationFamily::parse(family);
      const auto cert = isolation_number(g, fam);
      if (as_json)
        std::cout << json{{"family", fam.name()}, {"order", g.order()}, {"iota", cert.value}, {"set", one_based(cert.set)}}.dump()
                  << "\n";
      else
        std::cout << "iota=" << cert.value << "\nset=" << join(one_based(cert.set)) << "\n";
      return kPass;
    }

    if (*isolate_cmd) {
      const Graph g = load_graph(input);
      const auto result = isolate_p3_subcubic(g);
      const std::size_t bound = g.order() / 4;
      const bool ok = verify_certificate(g, result.certificate, bound);
      if (as_json) {
        json j{{"order", g.order()}, {"bound", bound}, {"size", result.certificate.set.size()},
               {"set", one_based(result.certificate.set)}, {"valid", ok},
               {"fallbacks", result.trace.fallback_count()}};
        if (trace) {
          json steps = json::array();
          std::istringstream lines(result.trace.to_json_lines());
          for (std::string line; std::getline(lines, line);)
            if (!line.empty()) steps.push_back(json::parse(line));
          j["trace"] = steps;
        }
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "size=" << result.certificate.set.size() << " bound=" << bound << (ok ? " ok" : " INVALID")
                  << "\nset=" << join(one_based(result.certificate.set)) << "\n";
        if (trace) std::cout << result.trace.to_json_lines();
      }
      return ok ? kPass : kViolation;
    }

    if (*verify_cmd) {
      VerifyOptions opts;
      opts.jobs = jobs;
      opts.allow_large = large;
      opts.check_constructive = constructive;
      opts.progress = [](const std::string& msg) { std::cerr << msg << "\n"; };
      VerificationReport report;
      if (!stream_file.empty()) {
        if (stream_file == "-") {
          report = verify_stream(std::cin, opts);
        } else {
          std::ifstream in(stream_file);
          if (!in) throw InputError("cannot open " + stream_file);
          report = verify_stream(in, opts);
        }
      } else {
        if (min_n > max_n) throw InputError("--min-n exceeds --max-n");
        report = verify_orders(min_n, max_n, opts);
      }
      std::cout << (as_json ? report.to_json().dump(2) + "\n" : report.to_text());
      return report.passed() ? kPass : kViolation;
    }

    if (*obs_cmd) {
      const auto results = check_observations();
      bool all = true;
      json j = json::array();
      for (const auto& r : results) {
        all = all && r.passed;
        if (as_json)
          j.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        else
          std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.detail << ")\n";
      }
      if (as_json) std::cout << j.dump(2) << "\n";
      return all ? kPass : kViolation;
    }

    if (*gen_cmd) {
      print_graph(generate(gen_kind, gen_n), format);
      return kPass;
    }

    if (*catalog_cmd) {
      std::optional<CatalogId> only;
      if (!catalog_id.empty()) {
        only = parse_catalog_id(catalog_id);
        if (!only) throw InputError("unknown catalog id: " + catalog_id);
      }
      for (const auto& e : catalog())
        if (!only || e.id == *only) print_graph(e.graph, format, std::string(to_string(e.id)));
      return kPass;
    }

    if (*enum_cmd) {
      EnumSpec spec;
      spec.min_n = min_n;
      spec.max_n = max_n;
      spec.jobs = jobs;
      spec.allow_large = large;
      spec.filter = no_c6 ? EnumFilter::NoInducedC6 : EnumFilter::None;
      std::vector<std::string> lines;
      GraphSink sink;
      if (!counts_only) sink = [&](const Graph& g) { lines.push_back(emit_graph6(g)); };
      const auto summary = enumerate_connected_subcubic(spec, sink);
      // Workers deliver in nondeterministic order.
      if (jobs > 1) std::sort(lines.begin(), lines.end());
      if (counts_only) {
        if (as_json) {
          json j = json::object();
          for (std::size_t n = min_n; n < summary.per_order.size(); ++n) j[std::to_string(n)] = summary.per_order[n];
          std::cout << j.dump() << "\n";
        } else {
          for (std::size_t n = min_n; n < summary.per_order.size(); ++n)
            std::cout << n << " " << summary.per_order[n] << "\n";
        }
      } else {
        for (const auto& l : lines) std::cout << l << "\n";
      }
      return kPass;
    }
  } catch (const PreconditionViolated& e) {
    std::cerr << "precondition violated: " << to_string(e.which()) << ": " << e.what() << "\n";
    return kPrecondition;
  } catch (const ParseError& e) {
    std::cerr << "parse error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return kInputError;
  } catch (const BadOrder& e) {
    std::cerr << "bad order: " << e.what() << "\n";
    return kInputError;
  } catch (const InputError& e) {
    std::cerr << e.what() << "\n";
    return kInputError;
  } catch (const IoFailure& e) {
    std::cerr << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kInputError;
  }
  return kPass;
}
