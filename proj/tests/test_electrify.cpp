#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gp/coset.hpp"
#include "gp/electrify.hpp"
#include "support/fixtures.hpp"

using namespace gp;
using namespace gp::fixtures;

TEST_CASE("boundedness classification") {
  const auto v4 = classify_boundedness(c4());
  CHECK(v4.bounded);
  CHECK(v4.kind == BoundednessKind::Minsquare);
  CHECK(v4.text == "bounded: minsquare");

  const auto vp = classify_boundedness(p2());
  CHECK(!vp.bounded);

  const auto vj = classify_boundedness(c4_join_k2());
  CHECK(vj.bounded);
  CHECK(vj.kind == BoundednessKind::MinsquareJoinComplete);

  const auto k3 = racg({"a", "b", "c"}, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(classify_boundedness(k3).kind == BoundednessKind::Complete);

  CHECK(!classify_boundedness(c5()).bounded);

  const DefiningGraph zee({"a"}, {}, {VertexGroupSpec::integers()});
  CHECK_THROWS_AS(classify_boundedness(zee), std::invalid_argument);
}

TEST_CASE("quasi-line classification") {
  CHECK(classify_quasiline(p2()).quasi_line);
  CHECK(!classify_quasiline(c4()).quasi_line);
  CHECK(!classify_quasiline(c5()).quasi_line);
  // P2 joined with complete K2 is an infinite dihedral times finite
  const auto g = racg({"a", "b", "k", "l"},
                      {{2, 3}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  CHECK(classify_quasiline(g).quasi_line);
  // a single finite vertex group is bounded, not a line
  const DefiningGraph z5({"a"}, {}, {VertexGroupSpec::cyclic(5)});
  CHECK(!classify_quasiline(z5).quasi_line);
}

TEST_CASE("electrified growth") {
  // C4 is minsquare: everything is one cone step away.
  const auto g4 = electrified_growth(c4(), 4);
  for (int d : g4) CHECK(d <= 1);

  // P2 has no squares: the electrified graph is the syllable graph.
  const auto gp2 = electrified_growth(p2(), 4);
  CHECK(gp2 == std::vector<int>{1, 2, 3, 4});

  // complete K2: two syllable steps reach everything.
  const auto k2 = racg({"a", "b"}, {{0, 1}});
  const auto gk2 = electrified_growth(k2, 4);
  for (int d : gk2) CHECK(d <= 2);
}

TEST_CASE("electrified distances compare with the other metrics") {
  for (const auto& g : {p2(), c4(), p3(), c4_join_k2()}) {
    const auto ball = enumerate_ball(g, NormalForm::identity(g), 3, 1);
    const auto eball = electrify(ball);
    const bool gamma_minsquare =
        !g.minsquare_subgraphs().empty() &&
        g.minsquare_subgraphs().front() == g.all_vertices();
    for (std::size_t i = 0; i < ball.elems.size(); ++i) {
      const int de = eball.edist[i];
      REQUIRE(de >= 0);
      CHECK(de <= ball.dist[i]);  // electrified <= syllable
      CHECK(ball.dist[i] <=
            d_word(NormalForm::identity(g), ball.elems[i]));
      if (!gamma_minsquare) {
        const int dg = d_subgraph(g.all_vertices(),
                                  NormalForm::identity(g), ball.elems[i]);
        CHECK(dg <= de);  // subgraph metric <= electrified
      }
    }
  }
}

TEST_CASE("verdicts agree with growth on the shipped graphs") {
  for (const auto& g : {p2(), c4(), p3(), c5(), c4_join_k2()}) {
    const auto verdict = classify_boundedness(g);
    const auto growth = electrified_growth(g, 4);
    const int last = growth.back();
    if (verdict.bounded)
      CHECK(last < 4);  // eccentricity stabilized inside the horizon
    else
      CHECK(last == 4);  // still growing at the horizon
  }
}

TEST_CASE("dot export of electrified balls") {
  const auto g = c4();
  const auto ball = enumerate_ball(g, NormalForm::identity(g), 2, 1);
  const auto dot = electrified_to_dot(electrify(ball));
  CHECK(dot.find("graph electrified {") == 0);
  CHECK(dot.find("style=dashed") != std::string::npos);
}
