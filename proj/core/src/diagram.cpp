#include "mbgram/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "mbgram/errors.hpp"

namespace mbgram {

bool arcs_cross(const Arc& a, const Arc& b, int size) {
  if (a.tail == b.tail || a.tail == b.head || a.head == b.tail || a.head == b.head)
    throw SharedEndpoint("arcs_cross: arcs share an endpoint");
  auto nested = [size](const Arc& inner, const Arc& outer) {
    const int p1 = ccw_position(outer.tail, inner.tail, size);
    const int p2 = ccw_position(outer.tail, inner.head, size);
    const int pe = ccw_position(outer.tail, outer.head, size);
    return 0 < p1 && p1 < p2 && p2 < pe;
  };
  const int pd = ccw_position(b.tail, b.head, size);
  const int pa = ccw_position(b.tail, a.tail, size);
  const int pb = ccw_position(b.tail, a.head, size);
  const bool disjoint = pd < pa && pa < pb;
  return !(nested(a, b) || nested(b, a) || disjoint);
}

bool fixed_point_blocked(const Arc& a, Vertex f, int size) {
  const int pf = ccw_position(a.tail, f, size);
  return 0 < pf && pf < ccw_position(a.tail, a.head, size);
}

std::string_view stratum_name(Stratum s) {
  return s == Stratum::ZeroCrosscap ? "zero" : "one";
}

std::optional<Stratum> stratum_from_name(std::string_view name) {
  if (name == "zero" || name == "0") return Stratum::ZeroCrosscap;
  if (name == "one" || name == "1") return Stratum::OneCrosscap;
  return std::nullopt;
}

// ------------------------------------------------------------------ Diagram

Diagram::Diagram(int n, std::vector<Arc> chords, std::vector<Vertex> fixed)
    : n_(n), chords_(std::move(chords)), fixed_(std::move(fixed)) {
  std::sort(chords_.begin(), chords_.end());
  std::sort(fixed_.begin(), fixed_.end());
}

bool Diagram::is_fixed(Vertex v) const {
  return std::binary_search(fixed_.begin(), fixed_.end(), v);
}

std::optional<Stratum> Diagram::stratum() const {
  if (fixed_.empty()) return Stratum::ZeroCrosscap;
  if (fixed_.size() == 2) return Stratum::OneCrosscap;
  return std::nullopt;
}

std::string Diagram::to_string() const {
  std::string out;
  for (const auto& c : chords_)
    out += '(' + std::to_string(c.tail) + ' ' + std::to_string(c.head) + ')';
  for (auto f : fixed_) out += '(' + std::to_string(f) + ')';
  return out;
}

std::string diagram_serialize(const Diagram& m) { return m.to_string(); }

Diagram diagram_parse(std::string_view text, std::optional<int> n) {
  std::vector<Arc> chords;
  std::vector<Vertex> fixed;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_label = [&]() -> Vertex {
    skip_space();
    const std::size_t start = i;
    long value = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      value = value * 10 + (text[i] - '0');
      if (value > 1'000'000) throw ParseError("vertex label too large", start);
      ++i;
    }
    if (i == start) throw ParseError("expected a vertex label", start);
    if (value == 0) throw ParseError("vertex labels start at 1", start);
    return static_cast<Vertex>(value);
  };

  std::size_t labels = 0;
  skip_space();
  if (i == text.size()) throw ParseError("empty diagram", 0);
  while (true) {
    skip_space();
    if (i == text.size()) break;
    if (text[i] != '(') throw ParseError("expected '('", i);
    ++i;
    const std::size_t group_start = i;
    const Vertex first = read_label();
    skip_space();
    if (i < text.size() && text[i] == ')') {
      ++i;
      fixed.push_back(first);
      ++labels;
      continue;
    }
    const Vertex second = read_label();
    skip_space();
    if (i == text.size() || text[i] != ')') throw ParseError("expected ')'", i);
    ++i;
    if (first == second) throw ParseError("chord joins a vertex to itself", group_start);
    chords.push_back({first, second});
    labels += 2;
  }
  int size = 0;
  if (n) {
    size = 2 * *n;
  } else {
    if (labels % 2 != 0) throw ParseError("odd number of vertex labels", text.size());
    size = static_cast<int>(labels);
  }
  for (const auto& c : chords)
    if (c.tail > size || c.head > size) throw ParseError("vertex label exceeds 2n", 0);
  for (auto f : fixed)
    if (f > size) throw ParseError("vertex label exceeds 2n", 0);
  return Diagram(size / 2, std::move(chords), std::move(fixed));
}

nlohmann::json diagram_to_json(const Diagram& m) {
  nlohmann::json chords = nlohmann::json::array();
  for (const auto& c : m.chords()) chords.push_back({c.tail, c.head});
  return {{"n", m.n()}, {"chords", chords}, {"fixed", m.fixed()}};
}

Diagram diagram_from_json(const nlohmann::json& j) {
  std::vector<Arc> chords;
  for (const auto& c : j.at("chords")) {
    if (!c.is_array() || c.size() != 2) throw InvalidArgument("chord must be a [tail, head] pair");
    chords.push_back({c[0].get<int>(), c[1].get<int>()});
  }
  return Diagram(j.at("n").get<int>(), std::move(chords),
                 j.at("fixed").get<std::vector<Vertex>>());
}

// --------------------------------------------------------------- validation

std::vector<std::string> validate_diagram(const Diagram& m, StrataPolicy policy) {
  std::vector<std::string> errors;
  const int size = m.boundary_size();
  if (m.n() < 1) {
    errors.push_back("n must be positive");
    return errors;
  }
  std::vector<int> uses(size + 1, 0);
  auto touch = [&](Vertex v) {
    if (v < 1 || v > size) {
      errors.push_back("vertex " + std::to_string(v) + " outside 1.." + std::to_string(size));
      return;
    }
    ++uses[v];
  };
  for (const auto& c : m.chords()) {
    if (c.tail == c.head) errors.push_back("chord (" + std::to_string(c.tail) + ' ' +
                                           std::to_string(c.head) + ") is degenerate");
    touch(c.tail);
    touch(c.head);
  }
  for (auto f : m.fixed()) touch(f);
  for (int v = 1; v <= size; ++v) {
    if (uses[v] == 0) errors.push_back("vertex " + std::to_string(v) + " is not covered");
    if (uses[v] > 1) errors.push_back("vertex " + std::to_string(v) + " is used " +
                                      std::to_string(uses[v]) + " times");
  }
  if (!errors.empty()) return errors;

  const auto& chords = m.chords();
  for (std::size_t i = 0; i < chords.size(); ++i)
    for (std::size_t j = i + 1; j < chords.size(); ++j)
      if (arcs_cross(chords[i], chords[j], size))
        errors.push_back("chords (" + std::to_string(chords[i].tail) + ' ' +
                         std::to_string(chords[i].head) + ") and (" +
                         std::to_string(chords[j].tail) + ' ' + std::to_string(chords[j].head) +
                         ") cross");
  for (const auto& c : chords)
    for (auto f : m.fixed())
      if (fixed_point_blocked(c, f, size))
        errors.push_back("fixed point " + std::to_string(f) + " is enclosed by chord (" +
                         std::to_string(c.tail) + ' ' + std::to_string(c.head) + ")");

  const std::size_t nf = m.fixed().size();
  if (policy == StrataPolicy::Supported && nf != 0 && nf != 2)
    errors.push_back(std::to_string(nf) + " fixed points; supported strata have 0 or 2");
  return errors;
}

// -------------------------------------------------------------- enumeration

namespace {

struct Enumerator {
  int size;
  std::vector<Vertex> fixed;
  std::vector<bool> covered;
  std::vector<Arc> chords;
  std::vector<Diagram>* out;

  bool compatible(const Arc& a) const {
    for (const auto& c : chords)
      if (arcs_cross(a, c, size)) return false;
    for (auto f : fixed)
      if (fixed_point_blocked(a, f, size)) return false;
    return true;
  }

  // Pairs the lowest uncovered vertex with every other uncovered vertex, in
  // both orientations, keeping only compatible arcs.
  void run() {
    Vertex v = 1;
    while (v <= size && covered[v]) ++v;
    if (v > size) {
      out->emplace_back(size / 2, chords, fixed);
      return;
    }
    covered[v] = true;
    for (Vertex u = v + 1; u <= size; ++u) {
      if (covered[u]) continue;
      covered[u] = true;
      for (const Arc a : {Arc{v, u}, Arc{u, v}}) {
        if (!compatible(a)) continue;
        chords.push_back(a);
        run();
        chords.pop_back();
      }
      covered[u] = false;
    }
    covered[v] = false;
  }
};

}  // namespace

std::vector<Diagram> enumerate_stratum(int n, Stratum s, int bound) {
  if (n < 1) throw InvalidArgument("enumerate_stratum: n must be positive");
  if (n > bound)
    throw BoundExceeded("enumerate_stratum: n = " + std::to_string(n) + " exceeds bound " +
                        std::to_string(bound));
  const int size = 2 * n;
  std::vector<Diagram> out;
  Enumerator e{size, {}, std::vector<bool>(size + 1, false), {}, &out};
  if (s == Stratum::ZeroCrosscap) {
    e.run();
  } else {
    for (Vertex a = 1; a <= size; ++a)
      for (Vertex b = a + 1; b <= size; ++b) {
        e.fixed = {a, b};
        e.covered[a] = e.covered[b] = true;
        e.run();
        e.covered[a] = e.covered[b] = false;
      }
  }
  std::sort(out.begin(), out.end(), canonical_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool canonical_less(const Diagram& a, const Diagram& b) {
  const bool a_zero = a.fixed().empty();
  const bool b_zero = b.fixed().empty();
  if (a_zero != b_zero) return a_zero;
  return a.to_string() < b.to_string();
}

}  // namespace mbgram
