#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mbgram/diagram.hpp"
#include "mbgram/polynomial.hpp"

namespace mbgram {

/// Which diagram of the pair an edge comes from.
enum class Side : std::uint8_t { First = 1, Second = 2 };

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// The graph whose cycles are the closed curves of the glued pair.
///
/// Vertices 1..2n. Chord edges come from both diagrams (tagged with their
/// side); crosscap edges join fixed points of one diagram antipodally. Every
/// vertex has exactly one edge from each side, so the graph is a disjoint
/// union of even cycles.
class PairingGraph {
 public:
  struct ChordEdge {
    Edge edge;
    Side side;
  };

  int boundary_size() const { return size_; }
  const std::vector<ChordEdge>& chord_edges() const { return chords_; }
  const std::vector<Edge>& crosscap_edges(Side s) const {
    return s == Side::First ? ef_first_ : ef_second_;
  }

  /// Neighbour of v along its edge from side s.
  Vertex neighbour(Vertex v, Side s) const;
  /// Whether v's edge from side s is a chord (as opposed to a crosscap edge).
  bool via_chord(Vertex v, Side s) const;

  /// Cycles in order of their minimum vertex; each listed from that vertex.
  std::vector<std::vector<Vertex>> components() const;

 private:
  friend PairingGraph build_pairing_graph(const Diagram&, const Diagram&);
  int size_ = 0;
  std::vector<ChordEdge> chords_;
  std::vector<Edge> ef_first_;
  std::vector<Edge> ef_second_;
  std::vector<Vertex> next_[2];
  std::vector<bool> chord_[2];
};

/// Antipodal crosscap pairing of a sorted fixed-point list: the i-th point is
/// joined to the ((i + k/2) mod k)-th. Requires an even count.
std::vector<Edge> antipodal_edges(const std::vector<Vertex>& fixed);

/// Throws SizeMismatch when the diagrams have different n, InvalidArgument
/// when a diagram has an odd number of fixed points.
PairingGraph build_pairing_graph(const Diagram& m1, const Diagram& m2);

/// Curve type of a cycle: trivial (d), essential avoiding the crosscaps (z),
/// through the first diagram's crosscap only (x), the second's only (y), or both (w).
enum class CurveClass { d, x, y, w, z };

Variable curve_variable(CurveClass c);
char curve_name(CurveClass c);

struct WalkStep {
  Vertex from = 0;
  Vertex to = 0;
  Side side = Side::First;
  long sweep = 0;
};

/// Oriented traversal of a crosscap-free cycle with its signed sweep.
///
/// Each arc with tail t and head h sweeps l = (h - t) mod 2n; it contributes
/// +l when walked t -> h and -l when walked h -> t. Psi is the total.
struct WalkTrace {
  std::vector<Vertex> vertices;  ///< closed walk, first == last
  std::vector<WalkStep> steps;
  long psi = 0;
};

/// Walks the component starting at its smallest vertex that is the tail of a
/// first-side chord, leaving along that chord. Throws InvalidArgument if the
/// component contains fixed points and MalformedComponent if the alternating
/// walk does not close up.
WalkTrace component_walk(const PairingGraph& g, const std::vector<Vertex>& component,
                         const Diagram& m1, const Diagram& m2);

/// Class of one cycle. Throws UnclassifiableComponent when a crosscap-free
/// cycle has Psi outside {0, +-2n}.
CurveClass classify_component(const PairingGraph& g, const std::vector<Vertex>& component,
                              const Diagram& m1, const Diagram& m2);

/// Full account of a pairing: the cycles, their classes and Psi values.
struct PairingTrace {
  struct Component {
    std::vector<Vertex> vertices;
    CurveClass curve;
    std::optional<WalkTrace> walk;
  };
  std::vector<Component> components;
  Polynomial monomial;
};

PairingTrace pairing_trace(const Diagram& m1, const Diagram& m2);

/// <m1, m2> as a single monomial in d, w, x, y, z.
Polynomial bilinear_form(const Diagram& m1, const Diagram& m2);

nlohmann::json pairing_trace_to_json(const PairingGraph& g, const PairingTrace& t);

}  // namespace mbgram
