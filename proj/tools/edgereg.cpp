#include <edgereg/edgereg.h>

#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitError = 2;

struct Failure {
  er_status status;
  std::string message;
};

void check(er_status s) {
  if (s != ER_OK) throw Failure{s, er_last_error()};
}

std::string take(char* s) {
  std::string out(s ? s : "");
  er_string_free(s);
  return out;
}

using GraphPtr = std::unique_ptr<er_graph, decltype(&er_graph_free)>;

// Cn, Kn, Pn (n vertices) and "house" expand to JSON; anything else is passed
// through as graph6 or JSON.
std::string expand_shorthand(const std::string& text) {
  if (text == "house")
    return R"({"n":5,"edges":[[0,1],[0,4],[1,4],[4,3],[3,2],[2,1]],"names":["t1","t2","t3","t4","t5"]})";
  if (text.size() >= 2 && (text[0] == 'C' || text[0] == 'K' || text[0] == 'P') &&
      text.find_first_not_of("0123456789", 1) == std::string::npos) {
    const int n = std::stoi(text.substr(1));
    json j{{"n", n}, {"edges", json::array()}};
    if (text[0] == 'C') {
      if (n < 3) throw Failure{ER_USAGE_ERROR, "a cycle needs at least 3 vertices"};
      for (int i = 0; i < n; ++i) j["edges"].push_back({i, (i + 1) % n});
    } else if (text[0] == 'P') {
      for (int i = 0; i + 1 < n; ++i) j["edges"].push_back({i, i + 1});
    } else {
      for (int i = 0; i < n; ++i)
        for (int k = i + 1; k < n; ++k) j["edges"].push_back({i, k});
    }
    return j.dump();
  }
  return text;
}

GraphPtr load_graph(const std::string& text) {
  er_graph* g = nullptr;
  check(er_graph_parse(expand_shorthand(text).c_str(), &g));
  return GraphPtr(g, er_graph_free);
}

std::string to_graph6(const std::string& text) {
  GraphPtr g = load_graph(text);
  char* out = nullptr;
  check(er_graph_to_graph6(g.get(), &out));
  return take(out);
}

struct Global {
  std::string field = "qq";
  int jobs = 1;
  bool as_json = false;
  std::uint64_t seed = 1;
  bool guard_override = false;
  bool audit = false;

  er_field code() const {
    if (field == "qq" || field == "QQ") return ER_FIELD_QQ;
    if (field == "gfp" || field == "GFp") return ER_FIELD_GFP;
    throw Failure{ER_USAGE_ERROR, "unknown field '" + field + "' (use qq or gfp)"};
  }
};

struct Family {
  std::optional<int> nmin, nmax, qmax, smax, s3_samples;
  bool connected = false;
  std::vector<std::string> graphs;
  std::vector<std::string> corpora;
  bool csv = false;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--nmin", nmin, "smallest graph order");
    cmd->add_option("--nmax", nmax, "largest graph order");
    cmd->add_option("--qmax", qmax, "largest power q");
    cmd->add_option("--smax", smax, "largest multiset size s");
    cmd->add_option("--s3-samples", s3_samples, "sampled multisets per graph for s >= 3 (0 = all)");
    cmd->add_flag("--connected", connected, "connected graphs only");
    cmd->add_option("--graph", graphs, "explicit instance (graph6, JSON, Cn, Kn, Pn or house); repeatable");
    cmd->add_option("--corpus", corpora, "file of graph6 lines; repeatable")->check(CLI::ExistingFile);
    cmd->add_flag("--csv", csv, "CSV summary instead of text");
  }

  std::string to_json(const Global& g) const {
    json j{{"seed", g.seed}, {"jobs", g.jobs}, {"field", g.field}, {"guard_override", g.guard_override}};
    if (nmin) j["nmin"] = *nmin;
    if (nmax) j["nmax"] = *nmax;
    if (qmax) j["qmax"] = *qmax;
    if (smax) j["smax"] = *smax;
    if (s3_samples) j["s3_samples"] = *s3_samples;
    if (connected) j["connected"] = true;
    std::vector<std::string> g6;
    std::string source;
    for (const std::string& text : graphs) g6.push_back(to_graph6(text));
    if (!graphs.empty()) source = std::to_string(graphs.size()) + " graphs from --graph";
    for (const std::string& path : corpora) {
      std::ifstream in(path);
      std::string line;
      int count = 0;
      while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        g6.push_back(to_graph6(line));
        ++count;
      }
      source += (source.empty() ? "" : ", ") + std::to_string(count) + " graphs from " + path;
    }
    if (!g6.empty()) {
      j["graphs"] = g6;
      j["source"] = source;
    }
    return j.dump();
  }
};

void print_report(const json& r) {
  std::cout << r["id"].get<std::string>() << ": " << r["verdict"].get<std::string>() << "  checked=" << r["checked"]
            << " skipped=" << r["skipped"] << " violations=" << r["violations"].size() << " elapsed_ms="
            << static_cast<long long>(r["elapsed_ms"].get<double>()) << " budget_ms="
            << static_cast<long long>(r["budget_ms"].get<double>())
            << (r["within_budget"].get<bool>() ? "" : " (over budget)") << "\n";
  std::cout << "  statement: " << r["statement"].get<std::string>() << "\n";
  std::cout << "  family:    " << r["family"].get<std::string>() << " (seed " << r["seed"] << ")\n";
  if (!r["evidence"].is_null() && !r["evidence"].empty()) std::cout << "  evidence:  " << r["evidence"].dump() << "\n";
  for (const auto& v : r["violations"])
    std::cout << "  violation: graph6=" << v["graph6"].get<std::string>() << " params=" << v["params"].dump()
              << " lhs=" << v["lhs"].dump() << " rhs=" << v["rhs"].dump() << "\n";
}

// Runs one check; returns true when it found a violation or counterexample.
bool run_verify(const std::string& id, const Family& fam, const Global& g, bool header) {
  const std::string family = fam.to_json(g);
  char* out = nullptr;
  int violations = 0;
  if (fam.csv) {
    check(er_verify(id.c_str(), family.c_str(), header ? ER_FORMAT_CSV_WITH_HEADER : ER_FORMAT_CSV, &out, &violations));
    std::cout << take(out);
    return violations > 0;
  }
  check(er_verify(id.c_str(), family.c_str(), ER_FORMAT_JSON, &out, &violations));
  const json r = json::parse(take(out));
  if (g.as_json)
    std::cout << r.dump() << "\n";
  else
    print_report(r);
  return violations > 0;
}

std::vector<std::string> all_ids() {
  char* out = nullptr;
  check(er_check_ids_json(&out));
  return json::parse(take(out)).get<std::vector<std::string>>();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regularity of powers of edge ideals: invariants, colon graphs and named checks"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("--field", g.field, "coefficient field: qq or gfp")->check(CLI::IsMember({"qq", "gfp", "QQ", "GFp"}));
  app.add_option("--jobs", g.jobs, "worker threads for sweeps")->check(CLI::PositiveNumber);
  app.add_flag("--json", g.as_json, "machine-readable output");
  app.add_option("--seed", g.seed, "seed for sampled families");
  app.add_flag("--guard-override", g.guard_override, "lift the size guards");
  app.add_flag("--audit", g.audit, "compute homology over both fields and report disagreements on stderr");

  std::string graph_text;
  auto* inv = app.add_subcommand("invariants", "graph invariants");
  inv->add_option("graph", graph_text, "graph6, JSON, Cn, Kn, Pn or house")->required();

  int power = 1;
  auto* reg = app.add_subcommand("reg", "regularity of I(G)^q");
  reg->add_option("graph", graph_text, "graph6, JSON, Cn, Kn, Pn or house")->required();
  reg->add_option("--power", power, "q")->check(CLI::PositiveNumber);

  std::string edges;
  auto* col = app.add_subcommand("colon", "colon graph G' of (I^{s+1} : e_1...e_s)");
  col->add_option("graph", graph_text, "graph6, JSON, Cn, Kn, Pn or house")->required();
  col->add_option("--edges", edges, "0-based edges i,j;k,l;...")->required();

  std::string id;
  Family fam;
  auto* ver = app.add_subcommand("verify", "run a named check, or 'all'");
  ver->add_option("id", id, "check id")->required();
  fam.add_to(ver);

  int order = 0;
  bool no_isolated = false;
  auto* en = app.add_subcommand("enumerate", "graphs on n vertices up to isomorphism, as graph6");
  en->add_option("n", order, "number of vertices")->required();
  en->add_flag("--no-isolated", no_isolated, "skip graphs with isolated vertices");

  std::string question;
  Family qfam;
  auto* qu = app.add_subcommand("question", "counterexample search");
  qu->add_option("number", question, "question number (4.10)")->required()->check(CLI::IsMember({"4.10"}));
  qfam.add_to(qu);

  auto* ids = app.add_subcommand("checks", "list check ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  int status = kExitOk;
  try {
    if (g.jobs == 0) g.jobs = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
    if (g.audit) check(er_set_field_audit(1));
    const er_field field = g.code();
    const int over = g.guard_override ? 1 : 0;
    char* out = nullptr;

    if (*inv) {
      GraphPtr gr = load_graph(graph_text);
      check(er_invariants_json(gr.get(), over, &out));
      const json j = json::parse(take(out));
      if (g.as_json) {
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "nu=" << j["nu"] << " zeta=" << j["zeta"] << " cochord=" << j["cochord"]
                  << " min-max=" << j["min_max_matching"] << " chordal=" << j["chordal"]
                  << " vertex-decomposable=" << j["vertex_decomposable"] << "\n";
      }
    } else if (*reg) {
      GraphPtr gr = load_graph(graph_text);
      check(er_power_regularity_json(gr.get(), power, field, over, &out));
      const json j = json::parse(take(out));
      if (g.as_json)
        std::cout << j.dump() << "\n";
      else
        std::cout << j["reg"] << "\n";
    } else if (*col) {
      GraphPtr gr = load_graph(graph_text);
      check(er_colon_json(gr.get(), edges.c_str(), field, over, &out));
      const json j = json::parse(take(out));
      if (g.as_json) {
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "G' graph6: " << j["graph6"].get<std::string>() << "\n";
        std::cout << "vertices:  " << j["vertices"].dump() << "\n";
        std::cout << "edges:     " << j["edges"].dump() << "\n";
        for (const auto& c : j["certificates"])
          std::cout << "even-connection " << c["u"].get<std::string>() << " ~ " << c["v"].get<std::string>()
                    << ": path=" << c["path"].dump() << " entries=" << c["assignment"].dump() << "\n";
        std::cout << "reg: " << j["reg"] << " (colon graph " << j["regularity_via_colon_graph"]["reg"]
                  << ", monomial colon " << j["regularity_via_monomial_colon"]["reg"] << ")\n";
      }
      if (!j["routes_agree"].get<bool>()) status = kExitViolation;
    } else if (*ver) {
      const std::vector<std::string> run = id == "all" ? all_ids() : std::vector<std::string>{id};
      bool first = true;
      for (const std::string& one : run) {
        if (run_verify(one, fam, g, first)) status = kExitViolation;
        first = false;
      }
    } else if (*en) {
      check(er_enumerate(order, no_isolated ? 1 : 0, over, &out));
      std::cout << take(out);
    } else if (*qu) {
      if (run_verify("q-4.10", qfam, g, true)) status = kExitViolation;
    } else if (*ids) {
      for (const std::string& one : all_ids()) std::cout << one << "\n";
    }

    if (g.audit) {
      check(er_field_audit_json(&out));
      std::cerr << "field audit: " << take(out) << "\n";
    }
  } catch (const Failure& f) {
    std::cerr << "error (" << er_status_name(f.status) << "): " << f.message << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return status;
}
