#include "hypermorph/morphology.hpp"

#include <array>
#include <string>

#include "hypermorph/parallel.hpp"

namespace hypermorph {

namespace {

template <typename Set>
void require_universe(const Set& x, std::size_t n, const char* what) {
  if (x.universe_size() != n) {
    throw std::invalid_argument(std::string(what) + " operand has universe " +
                                std::to_string(x.universe_size()) +
                                ", hypergraph has " + std::to_string(n));
  }
}

// Evaluates out[i] = pred(i) for every index, one aligned chunk per worker.
template <typename Set, typename Pred>
Set tabulate(std::size_t n, Pred&& pred) {
  Set out(n);
  parallel_for_aligned(n, Set::kBlockBits, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      if (pred(i)) out.insert(i);
    }
  });
  return out;
}

}  // namespace

VertexSet edge_to_vertex_dilation(const Hypergraph& h, const EdgeSet& x) {
  require_universe(x, h.edge_count(), "edge");
  return tabulate<VertexSet>(h.vertex_count(), [&](std::size_t v) {
    for (std::size_t e : h.incident_members(VertexId{v})) {
      if (x.contains(e)) return true;
    }
    return false;
  });
}

EdgeSet vertex_to_edge_erosion(const Hypergraph& h, const VertexSet& x) {
  require_universe(x, h.vertex_count(), "vertex");
  return tabulate<EdgeSet>(h.edge_count(), [&](std::size_t e) {
    for (std::size_t v : h.edge_members(EdgeId{e})) {
      if (!x.contains(v)) return false;
    }
    return true;
  });
}

VertexSet edge_to_vertex_erosion(const Hypergraph& h, const EdgeSet& x) {
  require_universe(x, h.edge_count(), "edge");
  return tabulate<VertexSet>(h.vertex_count(), [&](std::size_t v) {
    for (std::size_t e : h.incident_members(VertexId{v})) {
      if (!x.contains(e)) return false;
    }
    return true;
  });
}

EdgeSet vertex_to_edge_dilation(const Hypergraph& h, const VertexSet& x) {
  require_universe(x, h.vertex_count(), "vertex");
  return tabulate<EdgeSet>(h.edge_count(), [&](std::size_t e) {
    for (std::size_t v : h.edge_members(EdgeId{e})) {
      if (x.contains(v)) return true;
    }
    return false;
  });
}

namespace {
constexpr std::array<std::pair<OperatorKind, std::string_view>, 7> kOperatorNames{{
    {OperatorKind::dilate, "dilate"},
    {OperatorKind::erode, "erode"},
    {OperatorKind::open, "open"},
    {OperatorKind::close, "close"},
    {OperatorKind::half_open, "halfopen"},
    {OperatorKind::half_close, "halfclose"},
    {OperatorKind::asf, "asf"},
}};
}  // namespace

std::string_view operator_name(OperatorKind kind) {
  for (const auto& [k, name] : kOperatorNames) {
    if (k == kind) return name;
  }
  return "?";
}

OperatorKind parse_operator_kind(std::string_view name) {
  for (const auto& [k, n] : kOperatorNames) {
    if (n == name) return k;
  }
  throw std::invalid_argument("unknown operator '" + std::string(name) + "'");
}

}  // namespace hypermorph
