#include "hypermorph/hypergraph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace hypermorph {

Hypergraph::Hypergraph(std::size_t vertex_count,
                       const std::vector<std::vector<std::size_t>>& edges)
    : vertex_count_(vertex_count) {
  edge_offsets_.reserve(edges.size() + 1);
  std::vector<std::size_t> degree(vertex_count, 0);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    std::vector<std::size_t> members = edges[k];
    if (members.empty()) {
      throw HypergraphError("edge " + std::to_string(k) + " is empty");
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.back() >= vertex_count) {
      throw HypergraphError("edge " + std::to_string(k) + " references vertex " +
                            std::to_string(members.back()) + " but only " +
                            std::to_string(vertex_count) + " vertices exist");
    }
    for (std::size_t v : members) ++degree[v];
    edge_vertices_.insert(edge_vertices_.end(), members.begin(), members.end());
    edge_offsets_.push_back(edge_vertices_.size());
  }

  vertex_offsets_.assign(vertex_count + 1, 0);
  for (std::size_t v = 0; v < vertex_count; ++v) {
    vertex_offsets_[v + 1] = vertex_offsets_[v] + degree[v];
  }
  vertex_edges_.resize(edge_vertices_.size());
  std::vector<std::size_t> cursor(vertex_offsets_.begin(), vertex_offsets_.end() - 1);
  // Edges are visited in increasing order, so each incidence list ends up sorted.
  for (std::size_t e = 0; e + 1 < edge_offsets_.size(); ++e) {
    for (std::size_t i = edge_offsets_[e]; i < edge_offsets_[e + 1]; ++i) {
      vertex_edges_[cursor[edge_vertices_[i]]++] = e;
    }
  }
}

void Hypergraph::check_vertex(VertexId x) const {
  if (x.value >= vertex_count_) {
    throw std::out_of_range("vertex " + std::to_string(x.value) +
                            " out of range (vertex count " +
                            std::to_string(vertex_count_) + ")");
  }
}

void Hypergraph::check_edge(EdgeId e) const {
  if (e.value >= edge_count()) {
    throw std::out_of_range("edge " + std::to_string(e.value) +
                            " out of range (edge count " +
                            std::to_string(edge_count()) + ")");
  }
}

std::span<const std::size_t> Hypergraph::edge_members(EdgeId e) const {
  check_edge(e);
  return {edge_vertices_.data() + edge_offsets_[e.value],
          edge_offsets_[e.value + 1] - edge_offsets_[e.value]};
}

std::span<const std::size_t> Hypergraph::incident_members(VertexId x) const {
  check_vertex(x);
  return {vertex_edges_.data() + vertex_offsets_[x.value],
          vertex_offsets_[x.value + 1] - vertex_offsets_[x.value]};
}

VertexSet Hypergraph::edge_vertices(EdgeId e) const {
  VertexSet out(vertex_count_);
  for (std::size_t v : edge_members(e)) out.insert(v);
  return out;
}

EdgeSet Hypergraph::incident_edges(VertexId x) const {
  EdgeSet out(edge_count());
  for (std::size_t e : incident_members(x)) out.insert(e);
  return out;
}

bool Hypergraph::is_isolated(VertexId x) const {
  return incident_members(x).empty();
}

VertexSet Hypergraph::isolated_vertices() const {
  VertexSet out(vertex_count_);
  for (std::size_t v = 0; v < vertex_count_; ++v) {
    if (vertex_offsets_[v] == vertex_offsets_[v + 1]) out.insert(v);
  }
  return out;
}

bool Hypergraph::is_k_uniform(std::size_t k) const {
  if (k < 1) throw std::out_of_range("uniformity requires k >= 1");
  for (std::size_t e = 0; e < edge_count(); ++e) {
    if (edge_offsets_[e + 1] - edge_offsets_[e] != k) return false;
  }
  return true;
}

std::vector<std::vector<std::size_t>> Hypergraph::edge_lists() const {
  std::vector<std::vector<std::size_t>> out;
  out.reserve(edge_count());
  for (std::size_t e = 0; e < edge_count(); ++e) {
    auto m = edge_members(EdgeId{e});
    out.emplace_back(m.begin(), m.end());
  }
  return out;
}

bool operator==(const Hypergraph& a, const Hypergraph& b) {
  return a.vertex_count_ == b.vertex_count_ && a.edge_offsets_ == b.edge_offsets_ &&
         a.edge_vertices_ == b.edge_vertices_;
}

Hypergraph dual(const Hypergraph& h) {
  std::vector<std::vector<std::size_t>> edges;
  edges.reserve(h.vertex_count());
  for (std::size_t x = 0; x < h.vertex_count(); ++x) {
    auto inc = h.incident_members(VertexId{x});
    if (inc.empty()) {
      throw HypergraphError("vertex " + std::to_string(x) +
                            " is isolated; its dual edge would be empty");
    }
    edges.emplace_back(inc.begin(), inc.end());
  }
  return Hypergraph(h.edge_count(), edges);
}

RestrictedHypergraph induced_subhypergraph(const Hypergraph& h, const VertexSet& a) {
  if (a.universe_size() != h.vertex_count()) {
    throw std::out_of_range("vertex subset universe does not match hypergraph");
  }
  RestrictedHypergraph out;
  out.vertex_map.assign(h.vertex_count(), std::nullopt);
  std::size_t next = 0;
  a.for_each([&](std::size_t v) { out.vertex_map[v] = next++; });

  out.edge_map.assign(h.edge_count(), std::nullopt);
  std::vector<std::vector<std::size_t>> edges;
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    std::vector<std::size_t> kept;
    for (std::size_t v : h.edge_members(EdgeId{e})) {
      if (out.vertex_map[v]) kept.push_back(*out.vertex_map[v]);
    }
    if (!kept.empty()) {
      out.edge_map[e] = edges.size();
      edges.push_back(std::move(kept));
    }
  }
  out.graph = Hypergraph(next, edges);
  return out;
}

RestrictedHypergraph partial_hypergraph(const Hypergraph& h, const EdgeSet& j) {
  if (j.universe_size() != h.edge_count()) {
    throw std::out_of_range("edge subset universe does not match hypergraph");
  }
  RestrictedHypergraph out;
  out.vertex_map.resize(h.vertex_count());
  for (std::size_t v = 0; v < h.vertex_count(); ++v) out.vertex_map[v] = v;
  out.edge_map.assign(h.edge_count(), std::nullopt);
  std::vector<std::vector<std::size_t>> edges;
  j.for_each([&](std::size_t e) {
    out.edge_map[e] = edges.size();
    auto m = h.edge_members(EdgeId{e});
    edges.emplace_back(m.begin(), m.end());
  });
  out.graph = Hypergraph(h.vertex_count(), edges);
  return out;
}

namespace {

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& s) {
  return s.find_first_not_of(" \t\r") == std::string::npos;
}

std::size_t parse_count(const std::string& token, std::size_t line_no) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    if (token.empty() || token[0] == '-' || token[0] == '+') throw std::invalid_argument(token);
    v = std::stoull(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size() || token.empty()) {
    throw HypergraphError("line " + std::to_string(line_no) +
                          ": expected a non-negative integer, got '" + token + "'");
  }
  return static_cast<std::size_t>(v);
}

}  // namespace

Hypergraph parse_hypergraph_fixture(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  std::optional<std::size_t> vertex_count;
  std::vector<std::vector<std::size_t>> edges;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = strip_comment(raw);
    if (blank(line)) continue;
    std::istringstream ls(line);
    std::string keyword;
    ls >> keyword;
    if (!vertex_count) {
      std::string n;
      if (keyword != "vertices" || !(ls >> n)) {
        throw HypergraphError("line " + std::to_string(line_no) +
                              ": expected 'vertices N'");
      }
      vertex_count = parse_count(n, line_no);
      std::string extra;
      if (ls >> extra) {
        throw HypergraphError("line " + std::to_string(line_no) +
                              ": trailing text after vertex count");
      }
      continue;
    }
    if (keyword != "edge") {
      throw HypergraphError("line " + std::to_string(line_no) +
                            ": expected 'edge id: v v ...'");
    }
    std::string rest;
    std::getline(ls, rest);
    auto colon = rest.find(':');
    if (colon == std::string::npos) {
      throw HypergraphError("line " + std::to_string(line_no) + ": missing ':'");
    }
    std::string id_text = rest.substr(0, colon);
    id_text.erase(0, id_text.find_first_not_of(" \t"));
    id_text.erase(id_text.find_last_not_of(" \t\r") + 1);
    std::size_t id = parse_count(id_text, line_no);
    if (id != edges.size()) {
      throw HypergraphError("line " + std::to_string(line_no) + ": edge id " +
                            std::to_string(id) + " out of sequence (expected " +
                            std::to_string(edges.size()) + ")");
    }
    std::istringstream vs(rest.substr(colon + 1));
    std::vector<std::size_t> members;
    for (std::string tok; vs >> tok;) members.push_back(parse_count(tok, line_no));
    edges.push_back(std::move(members));
  }
  if (!vertex_count) throw HypergraphError("missing 'vertices N' header");
  return Hypergraph(*vertex_count, edges);
}

Hypergraph load_hypergraph_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open hypergraph fixture '" + path + "'");
  return parse_hypergraph_fixture(in);
}

void write_hypergraph_fixture(std::ostream& out, const Hypergraph& h) {
  out << "vertices " << h.vertex_count() << '\n';
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    out << "edge " << e << ':';
    for (std::size_t v : h.edge_members(EdgeId{e})) out << ' ' << v;
    out << '\n';
  }
}

}  // namespace hypermorph
