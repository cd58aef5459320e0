#include "mbgram/pairing.hpp"

#include <algorithm>

#include "mbgram/errors.hpp"

namespace mbgram {
namespace {

unsigned side_index(Side s) { return s == Side::First ? 0 : 1; }

Edge unordered(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// arcs[v] = the chord of `m` touching v (tail/head as declared), if any.
std::vector<std::optional<Arc>> chord_lookup(const Diagram& m, int size) {
  std::vector<std::optional<Arc>> arcs(size + 1);
  for (const auto& c : m.chords()) arcs[c.tail] = arcs[c.head] = c;
  return arcs;
}

}  // namespace

Vertex PairingGraph::neighbour(Vertex v, Side s) const { return next_[side_index(s)][v]; }

bool PairingGraph::via_chord(Vertex v, Side s) const { return chord_[side_index(s)][v]; }

std::vector<std::vector<Vertex>> PairingGraph::components() const {
  std::vector<std::vector<Vertex>> out;
  std::vector<bool> seen(size_ + 1, false);
  for (Vertex v = 1; v <= size_; ++v) {
    if (seen[v]) continue;
    std::vector<Vertex> cycle;
    Vertex cur = v;
    unsigned side = 0;
    do {
      seen[cur] = true;
      cycle.push_back(cur);
      cur = next_[side][cur];
      side ^= 1u;
      if (cycle.size() > static_cast<std::size_t>(size_))
        throw MalformedComponent("pairing graph walk does not close");
    } while (!(cur == v && side == 0));
    out.push_back(std::move(cycle));
  }
  return out;
}

std::vector<Edge> antipodal_edges(const std::vector<Vertex>& fixed) {
  const std::size_t k = fixed.size();
  if (k % 2 != 0) throw InvalidArgument("odd number of fixed points");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = (i + k / 2) % k;
    if (i < j) edges.push_back(unordered(fixed[i], fixed[j]));
  }
  return edges;
}

PairingGraph build_pairing_graph(const Diagram& m1, const Diagram& m2) {
  if (m1.n() != m2.n())
    throw SizeMismatch("pairing diagrams with n = " + std::to_string(m1.n()) + " and n = " +
                       std::to_string(m2.n()));
  PairingGraph g;
  g.size_ = m1.boundary_size();
  g.ef_first_ = antipodal_edges(m1.fixed());
  g.ef_second_ = antipodal_edges(m2.fixed());

  const Diagram* sides[2] = {&m1, &m2};
  const std::vector<Edge>* ef[2] = {&g.ef_first_, &g.ef_second_};
  for (unsigned s = 0; s < 2; ++s) {
    g.next_[s].assign(g.size_ + 1, 0);
    g.chord_[s].assign(g.size_ + 1, false);
    auto link = [&](Vertex a, Vertex b, bool chord) {
      if (a < 1 || a > g.size_ || b < 1 || b > g.size_ || g.next_[s][a] != 0 ||
          g.next_[s][b] != 0)
        throw InvalidArgument("diagram " + sides[s]->to_string() +
                              " does not partition the boundary");
      g.next_[s][a] = b;
      g.next_[s][b] = a;
      g.chord_[s][a] = g.chord_[s][b] = chord;
    };
    for (const auto& c : sides[s]->chords()) {
      link(c.tail, c.head, true);
      g.chords_.push_back({unordered(c.tail, c.head), s == 0 ? Side::First : Side::Second});
    }
    for (const auto& e : *ef[s]) link(e.u, e.v, false);
    for (Vertex v = 1; v <= g.size_; ++v)
      if (g.next_[s][v] == 0)
        throw InvalidArgument("diagram " + sides[s]->to_string() + " leaves vertex " +
                              std::to_string(v) + " uncovered");
  }
  return g;
}

Variable curve_variable(CurveClass c) {
  switch (c) {
    case CurveClass::d: return Variable::d;
    case CurveClass::x: return Variable::x;
    case CurveClass::y: return Variable::y;
    case CurveClass::w: return Variable::w;
    case CurveClass::z: return Variable::z;
  }
  return Variable::d;
}

char curve_name(CurveClass c) { return variable_name(curve_variable(c)); }

WalkTrace component_walk(const PairingGraph& g, const std::vector<Vertex>& component,
                         const Diagram& m1, const Diagram& m2) {
  const int size = g.boundary_size();
  for (auto v : component)
    if (m1.is_fixed(v) || m2.is_fixed(v))
      throw InvalidArgument("component_walk: component contains a fixed point");

  const auto arcs1 = chord_lookup(m1, size);
  const auto arcs2 = chord_lookup(m2, size);

  std::optional<Vertex> start;
  for (auto v : component)
    if (arcs1[v] && arcs1[v]->tail == v && (!start || v < *start)) start = v;
  if (!start) throw MalformedComponent("component has no first-side chord tail");

  WalkTrace trace;
  trace.vertices.push_back(*start);
  Vertex cur = *start;
  Side side = Side::First;
  const std::size_t limit = component.size();
  do {
    const auto& arc = (side == Side::First ? arcs1 : arcs2)[cur];
    if (!arc) throw MalformedComponent("walk reached a vertex without a chord on the expected side");
    const Vertex next = arc->tail == cur ? arc->head : arc->tail;
    const long span = ccw_position(arc->tail, arc->head, size);
    const long sweep = arc->tail == cur ? span : -span;
    trace.steps.push_back({cur, next, side, sweep});
    trace.psi += sweep;
    trace.vertices.push_back(next);
    cur = next;
    side = side == Side::First ? Side::Second : Side::First;
    if (trace.steps.size() > limit) throw MalformedComponent("alternating walk does not close");
  } while (!(cur == *start && side == Side::First));
  if (trace.steps.size() != limit)
    throw MalformedComponent("walk length differs from the component size");
  return trace;
}

namespace {

struct Classified {
  CurveClass curve;
  std::optional<WalkTrace> walk;
};

Classified classify(const PairingGraph& g, const std::vector<Vertex>& component,
                    const Diagram& m1, const Diagram& m2) {
  bool first = false, second = false;
  for (auto v : component) {
    first |= m1.is_fixed(v);
    second |= m2.is_fixed(v);
  }
  if (first && second) return {CurveClass::w, std::nullopt};
  if (first) return {CurveClass::x, std::nullopt};
  if (second) return {CurveClass::y, std::nullopt};

  WalkTrace walk = component_walk(g, component, m1, m2);
  const long full_turn = g.boundary_size();
  if (walk.psi == 0) return {CurveClass::d, std::move(walk)};
  if (walk.psi == full_turn || walk.psi == -full_turn) return {CurveClass::z, std::move(walk)};
  throw UnclassifiableComponent("component starting at " + std::to_string(walk.vertices.front()) +
                                " has Psi = " + std::to_string(walk.psi) + " for <" +
                                m1.to_string() + ", " + m2.to_string() + ">");
}

}  // namespace

CurveClass classify_component(const PairingGraph& g, const std::vector<Vertex>& component,
                              const Diagram& m1, const Diagram& m2) {
  return classify(g, component, m1, m2).curve;
}

PairingTrace pairing_trace(const Diagram& m1, const Diagram& m2) {
  const PairingGraph g = build_pairing_graph(m1, m2);
  PairingTrace trace;
  std::array<std::uint32_t, 5> exponents{};
  for (auto& component : g.components()) {
    auto [curve, walk] = classify(g, component, m1, m2);
    ++exponents[static_cast<unsigned>(curve_variable(curve))];
    trace.components.push_back({std::move(component), curve, std::move(walk)});
  }
  trace.monomial = Polynomial(Integer(1), Monomial(exponents));
  return trace;
}

Polynomial bilinear_form(const Diagram& m1, const Diagram& m2) {
  return pairing_trace(m1, m2).monomial;
}

nlohmann::json pairing_trace_to_json(const PairingGraph& g, const PairingTrace& t) {
  using nlohmann::json;
  json chords = json::array();
  for (const auto& c : g.chord_edges())
    chords.push_back({{"edge", {c.edge.u, c.edge.v}}, {"side", static_cast<int>(c.side)}});
  auto edges = [](const std::vector<Edge>& es) {
    json a = json::array();
    for (const auto& e : es) a.push_back({e.u, e.v});
    return a;
  };
  json comps = json::array();
  for (const auto& c : t.components) {
    json j = {{"vertices", c.vertices}, {"class", std::string(1, curve_name(c.curve))}};
    if (c.walk) {
      json steps = json::array();
      for (const auto& s : c.walk->steps)
        steps.push_back({{"from", s.from}, {"to", s.to}, {"side", static_cast<int>(s.side)},
                         {"sweep", s.sweep}});
      j["walk"] = c.walk->vertices;
      j["steps"] = std::move(steps);
      j["psi"] = c.walk->psi;
    }
    comps.push_back(std::move(j));
  }
  return {{"monomial", t.monomial.to_string()},
          {"T", std::move(chords)},
          {"EF1", edges(g.crosscap_edges(Side::First))},
          {"EF2", edges(g.crosscap_edges(Side::Second))},
          {"components", std::move(comps)}};
}

}  // namespace mbgram
