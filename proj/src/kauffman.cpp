#include "twistknot/kauffman.hpp"

#include <map>
#include <numeric>

#include "twistknot/invariants.hpp"

namespace twistknot::oracle {

PlanarDiagram PlanarDiagram::unknot() {
  PlanarDiagram d;
  d.add_free_loop();
  return d;
}

PlanarDiagram PlanarDiagram::trefoil() {
  // Standard 3-crossing (2,3)-torus diagram; this chirality evaluates to
  // -t^4 + t^3 + t, matching the K_1 invariant under t = q^2.
  PlanarDiagram d;
  d.add_crossing(1, 4, 2, 5, +1);
  d.add_crossing(3, 6, 4, 1, +1);
  d.add_crossing(5, 2, 6, 3, +1);
  return d;
}

PlanarDiagram PlanarDiagram::figure_eight() {
  // Standard 4-crossing diagram, writhe 0.
  PlanarDiagram d;
  d.add_crossing(4, 2, 5, 1, -1);
  d.add_crossing(8, 6, 1, 5, -1);
  d.add_crossing(6, 3, 7, 4, +1);
  d.add_crossing(2, 7, 3, 8, +1);
  return d;
}

PlanarDiagram& PlanarDiagram::add_crossing(int e0, int e1, int e2, int e3,
                                           int sign) {
  crossings_.push_back(Crossing{{e0, e1, e2, e3}, sign});
  return *this;
}

PlanarDiagram& PlanarDiagram::add_free_loop() {
  ++free_loops_;
  return *this;
}

int PlanarDiagram::writhe() const {
  int w = 0;
  for (const auto& c : crossings_) w += c.sign;
  return w;
}

void PlanarDiagram::validate() const {
  if (crossings_.size() > 8)
    throw MalformedDiagram("state sum limited to 8 crossings");
  if (crossings_.empty() && free_loops_ == 0)
    throw MalformedDiagram("empty diagram");
  std::map<int, int> uses;
  for (const auto& c : crossings_) {
    if (c.sign != 1 && c.sign != -1)
      throw MalformedDiagram("crossing sign must be +1 or -1");
    for (int e : c.edges) ++uses[e];
  }
  for (const auto& [edge, count] : uses) {
    if (count != 2)
      throw MalformedDiagram("edge " + std::to_string(edge) +
                             " occurs " + std::to_string(count) +
                             " times (want 2)");
  }
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int x, int y) { parent[find(x)] = find(y); }
};

}  // namespace

LaurentPoly1 kauffman_bracket(const PlanarDiagram& d) {
  d.validate();
  const auto& crossings = d.crossings();
  const int c = static_cast<int>(crossings.size());

  // compact edge labels
  std::map<int, int> edge_index;
  for (const auto& cr : crossings)
    for (int e : cr.edges) edge_index.emplace(e, 0);
  int next = 0;
  for (auto& [label, idx] : edge_index) idx = next++;

  const LaurentPoly1 delta = [] {
    LaurentPoly1 p;
    p.add_term(BigInt(-1), 2);
    p.add_term(BigInt(-1), -2);
    return p;
  }();

  // per-state contribution A^{#A-#B} delta^{loops-1}
  std::vector<LaurentPoly1> delta_pow;  // delta^k by index
  delta_pow.push_back(LaurentPoly1::monomial(BigInt(1), 0));
  auto delta_power = [&](int k) -> const LaurentPoly1& {
    while (static_cast<int>(delta_pow.size()) <= k)
      delta_pow.push_back(delta_pow.back() * delta);
    return delta_pow[k];
  };

  LaurentPoly1 bracket;
  for (unsigned mask = 0; mask < (1u << c); ++mask) {
    UnionFind uf(edge_index.size());
    int a_count = 0;
    for (int ci = 0; ci < c; ++ci) {
      const auto& e = crossings[ci].edges;
      const int e0 = edge_index[e[0]], e1 = edge_index[e[1]];
      const int e2 = edge_index[e[2]], e3 = edge_index[e[3]];
      if (mask & (1u << ci)) {
        // B-smoothing: pair (e0,e1), (e2,e3)
        uf.unite(e0, e1);
        uf.unite(e2, e3);
      } else {
        // A-smoothing: pair (e0,e3), (e1,e2)
        ++a_count;
        uf.unite(e0, e3);
        uf.unite(e1, e2);
      }
    }
    int loops = d.free_loops();
    for (std::size_t v = 0; v < edge_index.size(); ++v)
      if (uf.find(static_cast<int>(v)) == static_cast<int>(v)) ++loops;
    const int a_exp = a_count - (c - a_count);
    LaurentPoly1 term = delta_power(loops - 1);
    LaurentPoly1 state;
    for (const auto& [e, coeffv] : term.terms()) state.add_term(coeffv, e + a_exp);
    bracket += state;
  }
  return bracket;
}

LaurentPoly1 jones_polynomial(const PlanarDiagram& d) {
  const LaurentPoly1 bracket = kauffman_bracket(d);
  const int w = d.writhe();
  // (-A)^{-3w} * bracket, then t = A^{-4}: A-exponent e -> doubled t-exponent
  // -e/2 (e is even for knots).
  const bool neg = (3 * w) % 2 != 0;
  LaurentPoly1 jones;
  for (const auto& [e, cv] : bracket.terms()) {
    const int shifted = e - 3 * w;
    if (shifted % 2 != 0)
      throw MalformedDiagram("non-half-integer Jones exponent");
    BigInt c2 = neg ? BigInt(-cv) : cv;
    jones.add_term(c2, -shifted / 2);
  }
  return jones;
}

std::string jones_str(const LaurentPoly1& doubled) {
  if (doubled.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e2, c] : doubled.terms()) {
    const bool neg = c < 0;
    BigInt mag = abs(c);
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    if (mag != 1 || e2 == 0) {
      out += mag.get_str();
      if (e2 != 0) out += "*";
    }
    if (e2 != 0) {
      out += "t";
      if (e2 != 2) {
        if (e2 % 2 == 0)
          out += "^" + std::to_string(e2 / 2);
        else
          out += "^(" + std::to_string(e2) + "/2)";
      }
    }
  }
  return out;
}

namespace {

// doubled t-exponent D maps to q-exponent dir * D (t = q^{2*dir}).
LaurentPoly1 substitute_t(const LaurentPoly1& doubled, int dir) {
  LaurentPoly1 r;
  for (const auto& [e2, c] : doubled.terms()) r.add_term(c, dir * e2);
  return r;
}

}  // namespace

ConventionReport resolve_jones_convention(
    const std::vector<std::pair<PlanarDiagram, LaurentPoly1>>& knots) {
  bool plus_ok = !knots.empty();
  bool minus_ok = !knots.empty();
  for (const auto& [diagram, expected] : knots) {
    const LaurentPoly1 jones = jones_polynomial(diagram);
    if (substitute_t(jones, +1) != expected) plus_ok = false;
    if (substitute_t(jones, -1) != expected) minus_ok = false;
  }
  ConventionReport r;
  if (plus_ok == minus_ok) {
    throw NoConventionMatches(
        knots.empty() ? "no diagrams to compare"
        : plus_ok     ? "both substitution conventions match (ambiguous)"
                      : "neither substitution convention matches");
  }
  r.resolved = true;
  r.convention = plus_ok ? "t=q^2" : "t=q^-2";
  r.detail = "matched " + std::to_string(knots.size()) + " knot(s)";
  return r;
}

ConventionReport resolve_jones_convention() {
  std::vector<std::pair<PlanarDiagram, LaurentPoly1>> knots;
  knots.emplace_back(PlanarDiagram::trefoil(), inv::colored_jones(1, 1, 2));
  knots.emplace_back(PlanarDiagram::figure_eight(),
                     inv::colored_jones(1, -1, 2));
  return resolve_jones_convention(knots);
}

}  // namespace twistknot::oracle
