#include <doctest.h>

#include "twistknot/invariants.hpp"
#include "twistknot/kauffman.hpp"

using namespace twistknot;
using namespace twistknot::oracle;

namespace {

LaurentPoly1 poly1(std::initializer_list<std::pair<int, long>> terms) {
  LaurentPoly1 p;
  for (const auto& [e, c] : terms) p.add_term(BigInt(c), e);
  return p;
}

}  // namespace

TEST_CASE("unknot normalizations") {
  CHECK(kauffman_bracket(PlanarDiagram::unknot()).is_one());
  CHECK(jones_polynomial(PlanarDiagram::unknot()).is_one());
}

TEST_CASE("trefoil state sum") {
  // V(3_1, this chirality) = -t^4 + t^3 + t; exponents stored doubled
  const LaurentPoly1 v = jones_polynomial(PlanarDiagram::trefoil());
  CHECK(v == poly1({{8, -1}, {6, 1}, {2, 1}}));
  CHECK(jones_str(v) == "-t^4 + t^3 + t");
}

TEST_CASE("figure-eight state sum") {
  // V(4_1) = t^2 - t + 1 - t^-1 + t^-2 (palindromic)
  const LaurentPoly1 v = jones_polynomial(PlanarDiagram::figure_eight());
  CHECK(v == poly1({{4, 1}, {2, -1}, {0, 1}, {-2, -1}, {-4, 1}}));
  CHECK(v == v.mirrored());
  CHECK(jones_str(v) == "t^2 - t + 1 - t^-1 + t^-2");
}

TEST_CASE("disjoint unknot multiplies the bracket by the loop value") {
  PlanarDiagram d = PlanarDiagram::trefoil();
  const LaurentPoly1 base = kauffman_bracket(d);
  d.add_free_loop();
  const LaurentPoly1 delta = poly1({{2, -1}, {-2, -1}});  // -A^2 - A^-2
  CHECK(kauffman_bracket(d) == base * delta);
}

TEST_CASE("diagram validation") {
  PlanarDiagram bad;
  bad.add_crossing(1, 2, 3, 4, +1);  // every edge occurs once only
  CHECK_THROWS_AS(kauffman_bracket(bad), MalformedDiagram);

  PlanarDiagram empty;
  CHECK_THROWS_AS(empty.validate(), MalformedDiagram);

  PlanarDiagram big;
  for (int c = 0; c < 9; ++c)
    big.add_crossing(4 * c + 1, 4 * c + 2, 4 * c + 3, 4 * c + 4, +1);
  CHECK_THROWS_AS(big.validate(), MalformedDiagram);

  PlanarDiagram badsign;
  badsign.add_crossing(1, 2, 2, 1, 3);
  CHECK_THROWS_AS(badsign.validate(), MalformedDiagram);
}

TEST_CASE("jones convention resolution") {
  const ConventionReport rep = resolve_jones_convention();
  CHECK(rep.resolved);
  CHECK(rep.convention == "t=q^2");

  // the figure-eight alone is palindromic: both conventions match
  std::vector<std::pair<PlanarDiagram, LaurentPoly1>> fig8_only;
  fig8_only.emplace_back(PlanarDiagram::figure_eight(),
                         inv::colored_jones(1, -1, 2));
  CHECK_THROWS_AS(resolve_jones_convention(fig8_only), NoConventionMatches);

  // empty diagram set is a failure
  CHECK_THROWS_AS(resolve_jones_convention({}), NoConventionMatches);
}
