#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace mbgram {

/// Boundary vertex label, 1..2n.
using Vertex = int;

/// An arc running counterclockwise around the crosscap from `tail` to `head`.
/// (a, b) and (b, a) are different arcs.
struct Arc {
  Vertex tail = 0;
  Vertex head = 0;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Counterclockwise distance from `from` to `v` on a boundary of `size` points.
inline int ccw_position(Vertex from, Vertex v, int size) {
  return ((v - from) % size + size) % size;
}

/// True iff the two arcs cannot be drawn disjointly. Arcs are identified with
/// their closed counterclockwise intervals [tail, head]; they are compatible
/// iff one interval is nested in the other or the two are disjoint.
/// Throws SharedEndpoint when the arcs share a vertex.
bool arcs_cross(const Arc& a, const Arc& b, int boundary_size);

/// True iff `f` lies strictly inside the counterclockwise span (tail, head),
/// i.e. the arc separates f from the crosscap.
bool fixed_point_blocked(const Arc& a, Vertex f, int boundary_size);

/// Which family of diagrams: no arc through the crosscap, or exactly one.
enum class Stratum { ZeroCrosscap, OneCrosscap };

std::string_view stratum_name(Stratum s);
std::optional<Stratum> stratum_from_name(std::string_view name);

/// A crossingless connection in involutive notation: oriented chords plus
/// fixed points (boundary vertices joined to the crosscap).
///
/// Stored canonically: chords sorted by tail, fixed points increasing. The
/// constructor only normalizes order; use validate_diagram for the geometric
/// invariants.
class Diagram {
 public:
  Diagram() = default;
  Diagram(int n, std::vector<Arc> chords, std::vector<Vertex> fixed);

  int n() const { return n_; }
  int boundary_size() const { return 2 * n_; }
  const std::vector<Arc>& chords() const { return chords_; }
  const std::vector<Vertex>& fixed() const { return fixed_; }
  bool is_fixed(Vertex v) const;

  /// Stratum from the number of fixed points (0 or 2); nullopt otherwise.
  std::optional<Stratum> stratum() const;

  /// Involutive notation, e.g. "(2 5)(3 4)(1)(6)".
  std::string to_string() const;

  friend bool operator==(const Diagram&, const Diagram&) = default;

 private:
  int n_ = 0;
  std::vector<Arc> chords_;
  std::vector<Vertex> fixed_;
};

std::string diagram_serialize(const Diagram& m);

/// Parses involutive notation. n is inferred from the number of labels
/// (which must be even) unless given. Throws ParseError with a position.
Diagram diagram_parse(std::string_view text, std::optional<int> n = std::nullopt);

nlohmann::json diagram_to_json(const Diagram& m);
Diagram diagram_from_json(const nlohmann::json& j);

/// Whether validate_diagram accepts diagrams outside the two supported strata
/// (more than two fixed points).
enum class StrataPolicy { Supported, AnyEven };

/// Empty on success; otherwise one message per violated invariant.
std::vector<std::string> validate_diagram(const Diagram& m,
                                          StrataPolicy policy = StrataPolicy::Supported);

inline constexpr int kDefaultEnumerationBound = 6;

/// All diagrams of the stratum in canonical order (lexicographic by
/// serialization). Throws BoundExceeded when n > bound.
std::vector<Diagram> enumerate_stratum(int n, Stratum s, int bound = kDefaultEnumerationBound);

/// Basis order used by the Gram matrices: ZeroCrosscap diagrams first.
bool canonical_less(const Diagram& a, const Diagram& b);

}  // namespace mbgram
