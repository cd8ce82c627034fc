#include "edgereg/edgereg.h"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "edgereg/error.hpp"
#include "edgereg/even_connection.hpp"
#include "edgereg/graph.hpp"
#include "edgereg/invariants.hpp"
#include "edgereg/monomial.hpp"
#include "edgereg/regularity.hpp"
#include "edgereg/verify.hpp"
#include "json.hpp"

struct er_graph {
  edgereg::Graph g;
};

namespace {

using nlohmann::json;
using namespace edgereg;

thread_local std::string t_last_error;

template <class F>
er_status guarded(F&& body) {
  try {
    t_last_error.clear();
    body();
    return ER_OK;
  } catch (const ParseError& e) {
    t_last_error = e.what();
    return ER_PARSE_ERROR;
  } catch (const DomainError& e) {
    t_last_error = e.what();
    return ER_DOMAIN_ERROR;
  } catch (const ResourceError& e) {
    t_last_error = e.what();
    return ER_RESOURCE_ERROR;
  } catch (const UsageError& e) {
    t_last_error = e.what();
    return ER_USAGE_ERROR;
  } catch (const json::exception& e) {
    t_last_error = std::string("invalid JSON argument: ") + e.what();
    return ER_PARSE_ERROR;
  } catch (const std::bad_alloc&) {
    t_last_error = "out of memory";
    return ER_RESOURCE_ERROR;
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return ER_INTERNAL_ERROR;
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void need(const void* p, const char* what) {
  if (!p) throw UsageError(std::string(what) + " must not be NULL");
}

Field to_field(er_field f) {
  switch (f) {
    case ER_FIELD_QQ:
      return Field::QQ;
    case ER_FIELD_GFP:
      return Field::GFp;
  }
  throw UsageError("unknown field code " + std::to_string(static_cast<int>(f)));
}

json names_of(const Graph& g, VertexSet s) {
  json a = json::array();
  for (Vertex v : s) a.push_back(g.name(v));
  return a;
}

int parse_index(std::string_view text, std::size_t offset) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  int v = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || end != text.data() + text.size() || text.empty())
    throw ParseError("expected a vertex index, got '" + std::string(text) + "'", offset);
  return v;
}

// "i,j;k,l" -> multiset of edges.
EdgeMultiset parse_edges(const Graph& g, std::string_view text) {
  std::vector<Edge> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t semi = std::min(text.find(';', pos), text.size());
    const std::string_view item = text.substr(pos, semi - pos);
    if (!item.empty()) {
      const std::size_t comma = item.find(',');
      if (comma == std::string_view::npos) throw ParseError("edge '" + std::string(item) + "' needs the form i,j", pos);
      const int a = parse_index(item.substr(0, comma), pos), b = parse_index(item.substr(comma + 1), pos + comma + 1);
      g.check_vertex(a);
      g.check_vertex(b);
      out.emplace_back(a, b);
    }
    pos = semi + 1;
  }
  EdgeMultiset e(std::move(out));
  e.validate(g);
  return e;
}

FamilySpec family_from_json(const char* text) {
  FamilySpec s;
  if (!text || !*text) return s;
  const json j = json::parse(text);
  if (!j.is_object()) throw UsageError("family must be a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& k = it.key();
    if (k == "nmin")
      s.nmin = it->get<int>();
    else if (k == "nmax")
      s.nmax = it->get<int>();
    else if (k == "qmax")
      s.qmax = it->get<int>();
    else if (k == "smax")
      s.smax = it->get<int>();
    else if (k == "s3_samples")
      s.s3_samples = it->get<int>();
    else if (k == "seed")
      s.seed = it->get<std::uint64_t>();
    else if (k == "connected")
      s.connected = it->get<bool>();
    else if (k == "jobs")
      s.jobs = it->get<int>();
    else if (k == "field")
      s.field = parse_field(it->get<std::string>());
    else if (k == "guard_override")
      s.guard_override = it->get<bool>();
    else if (k == "source")
      s.source = it->get<std::string>();
    else if (k == "graphs")
      for (const auto& g : *it) s.graphs.push_back(parse_graph(g.get<std::string>()));
    else
      throw UsageError("unknown family key '" + k + "'");
  }
  if (s.jobs < 1) throw UsageError("jobs must be at least 1");
  return s;
}

}  // namespace

extern "C" {

const char* er_last_error(void) { return t_last_error.c_str(); }

const char* er_status_name(er_status status) {
  switch (status) {
    case ER_OK:
      return "ok";
    case ER_PARSE_ERROR:
      return "parse error";
    case ER_DOMAIN_ERROR:
      return "domain error";
    case ER_RESOURCE_ERROR:
      return "resource error";
    case ER_USAGE_ERROR:
      return "usage error";
    case ER_INTERNAL_ERROR:
      return "internal error";
  }
  return "unknown status";
}

void er_string_free(char* s) { std::free(s); }

er_status er_graph_parse(const char* text, er_graph** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "out");
    *out = new er_graph{parse_graph(text)};
  });
}

void er_graph_free(er_graph* g) { delete g; }

er_status er_graph_order(const er_graph* g, int* out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = g->g.order();
  });
}

er_status er_graph_to_graph6(const er_graph* g, char** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = dup(to_graph6(g->g));
  });
}

er_status er_graph_to_json(const er_graph* g, char** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = dup(graph_to_json(g->g));
  });
}

er_status er_enumerate(int n, int no_isolated, int guard_override, char** out) {
  return guarded([&] {
    need(out, "out");
    std::string text;
    for (const Graph& g : enumerate_graphs(n, no_isolated != 0, guard_override != 0)) text += to_graph6(g) + "\n";
    *out = dup(text);
  });
}

er_status er_invariants_json(const er_graph* g, int guard_override, char** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    const Graph& h = g->g;
    const bool over = guard_override != 0;
    const ZetaResult z = zeta(h);
    json witness;
    witness["centers"] = json::array();
    for (Vertex v : z.witness.centers) witness["centers"].push_back(h.name(v));
    witness["edges"] = json::array();
    for (const Edge& e : z.witness.residual_edges) witness["edges"].push_back({h.name(e.u), h.name(e.v)});
    json j;
    j["graph6"] = to_graph6(h);
    j["order"] = h.order();
    j["edges"] = h.edge_count();
    j["nu"] = induced_matching_number(h);
    j["matching"] = matching_number(h);
    j["min_max_matching"] = min_max_matching(h);
    j["zeta"] = z.value;
    j["zeta_witness"] = witness;
    j["cochord"] = cochordal_cover_number(h, over);
    j["chordal"] = is_chordal(h);
    const bool vd = is_vertex_decomposable(h, over);
    j["vertex_decomposable"] = vd;
    j["shedding_set"] = vd ? names_of(h, shedding_set(h, over)) : json::array();
    *out = dup(j.dump());
  });
}

er_status er_power_regularity_json(const er_graph* g, int q, er_field field, int guard_override, char** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = dup(power_regularity(g->g, q, to_field(field), guard_override != 0).to_json());
  });
}

er_status er_ideal_regularity_json(const char* ideal_json, er_field field, int guard_override, char** out) {
  return guarded([&] {
    need(ideal_json, "ideal_json");
    need(out, "out");
    *out = dup(regularity(MonomialIdeal::from_json(ideal_json), to_field(field), guard_override != 0).to_json());
  });
}

er_status er_colon_json(const er_graph* g, const char* edges, er_field field, int guard_override, char** out) {
  return guarded([&] {
    need(g, "graph");
    need(edges, "edges");
    need(out, "out");
    const Graph& h = g->g;
    const Field f = to_field(field);
    const bool over = guard_override != 0;
    const EdgeMultiset e = parse_edges(h, edges);
    const ColonGraph cg = colon_graph(h, e);
    json j;
    j["multiset"] = json::array();
    for (const Edge& x : e.edges()) j["multiset"].push_back({h.name(x.u), h.name(x.v)});
    j["graph6"] = to_graph6(cg.graph);
    j["vertices"] = cg.graph.names();
    j["edges"] = json::array();
    for (const Edge& x : cg.graph.edges()) j["edges"].push_back({cg.graph.name(x.u), cg.graph.name(x.v)});
    j["certificates"] = json::array();
    for (const auto& [u, v] : cg.connected) {
      const auto c = find_even_connection(h, e, u, v);
      json cj = json::parse(c->to_json());
      cj["u"] = h.name(u);
      cj["v"] = h.name(v);
      j["certificates"].push_back(cj);
    }
    const RegularityReport via_graph = colon_regularity(h, e, f, over);
    const RegularityReport via_ideal = colon_regularity_monomial(h, e, f, over);
    j["reg"] = via_graph.reg;
    j["regularity_via_colon_graph"] = json::parse(via_graph.to_json());
    j["regularity_via_monomial_colon"] = json::parse(via_ideal.to_json());
    j["routes_agree"] = via_graph.reg == via_ideal.reg;
    *out = dup(j.dump());
  });
}

er_status er_reg_drop_set_json(const er_graph* g, er_field field, char** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    VertexSet degenerate;
    const VertexSet p = reg_drop_set(g->g, &degenerate, to_field(field));
    json j;
    j["P"] = names_of(g->g, p);
    j["degenerate"] = names_of(g->g, p & degenerate);
    *out = dup(j.dump());
  });
}

er_status er_check_ids_json(char** out) {
  return guarded([&] {
    need(out, "out");
    *out = dup(json(check_ids()).dump());
  });
}

er_status er_verify(const char* id, const char* family_json, er_format format, char** out, int* violations) {
  return guarded([&] {
    need(id, "id");
    need(out, "out");
    const CheckReport r = run_check(id, family_from_json(family_json));
    switch (format) {
      case ER_FORMAT_JSON:
        *out = dup(r.to_json());
        break;
      case ER_FORMAT_CSV:
        *out = dup(r.to_csv_row() + "\n");
        break;
      case ER_FORMAT_CSV_WITH_HEADER:
        *out = dup(CheckReport::csv_header() + "\n" + r.to_csv_row() + "\n");
        break;
      default:
        throw UsageError("unknown report format " + std::to_string(static_cast<int>(format)));
    }
    if (violations) *violations = static_cast<int>(r.violations.size());
  });
}

er_status er_set_field_audit(int enabled) {
  return guarded([&] { set_field_audit(enabled != 0); });
}

er_status er_field_audit_json(char** out) {
  return guarded([&] {
    need(out, "out");
    const FieldAudit a = field_audit();
    *out = dup(json{{"complexes", a.complexes}, {"mismatches", a.mismatches}}.dump());
  });
}

er_status er_reset_field_audit(void) {
  return guarded([] { reset_field_audit(); });
}

}  // extern "C"
