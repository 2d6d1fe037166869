#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gp/proto.hpp"
#include "support/fixtures.hpp"
#include "support/proto_random.hpp"

using namespace gp;

namespace {

// max T with two orthogonal properly nested domains u, q.
ProtoStructure smallest_container_example() {
  ProtoStructure ps(3);
  ps.add_domain({"T", DiamFlag::Unbounded, 0, {}, {}});
  ps.add_domain({"u", DiamFlag::Bounded, 2, {}, {}});
  ps.add_domain({"q", DiamFlag::Bounded, 2, {}, {}});
  ps.set_relation(1, 0, Rel::Nested);
  ps.set_relation(2, 0, Rel::Nested);
  ps.set_relation(1, 2, Rel::Orthogonal);
  ps.set_projection(1, 0, {"rho_u", 1});
  ps.set_projection(2, 0, {"rho_q", 1});
  return ps;
}

}  // namespace

TEST_CASE("validate basics") {
  ProtoStructure single(2);
  single.add_domain({"only", DiamFlag::Point, 0, {}, {}});
  CHECK(validate(single).pass());

  // broken inheritance: v nested in w, w orthogonal to u, v transverse to u
  ProtoStructure bad(3);
  bad.add_domain({"w", DiamFlag::Unbounded, 0, {}, {}});
  bad.add_domain({"v", DiamFlag::Unbounded, 0, {}, {}});
  bad.add_domain({"u", DiamFlag::Unbounded, 0, {}, {}});
  bad.add_domain({"top", DiamFlag::Unbounded, 0, {}, {}});
  bad.set_relation(0, 3, Rel::Nested);
  bad.set_relation(1, 3, Rel::Nested);
  bad.set_relation(2, 3, Rel::Nested);
  bad.set_relation(1, 0, Rel::Nested);
  bad.set_relation(0, 2, Rel::Orthogonal);
  const auto rep = validate(bad);
  CHECK(!rep.pass());
  bool saw_inheritance = false;
  for (const auto& v : rep.violations)
    if (v.find("not inherited") != std::string::npos) saw_inheritance = true;
  CHECK(saw_inheritance);

  // two maximal domains
  ProtoStructure twomax(2);
  twomax.add_domain({"m1", DiamFlag::Point, 0, {}, {}});
  twomax.add_domain({"m2", DiamFlag::Point, 0, {}, {}});
  CHECK(!validate(twomax).pass());
}

TEST_CASE("the graph-product ball structure validates") {
  const auto g = fixtures::c4();
  const ProtoStructure ps = proto_from_graph(g, 2, 1, 3);
  CHECK(ps.size() > 10);
  const auto rep = validate(ps);
  for (const auto& v : rep.violations) MESSAGE(v);
  CHECK(rep.pass());
}

TEST_CASE("completion of the smallest container pair") {
  const auto ps = smallest_container_example();
  const auto done = complete(ps);
  CHECK(done.size() == 5);  // D[T|u] and D[T|q] added
  const auto du = done.find("D[T|u]");
  const auto dq = done.find("D[T|q]");
  REQUIRE(du.has_value());
  REQUIRE(dq.has_value());
  CHECK(done.rel(*done.find("q"), *du) == Rel::Nested);
  CHECK(done.rel(*done.find("u"), *dq) == Rel::Nested);
  CHECK(done.rel(*done.find("u"), *du) == Rel::Orthogonal);
  CHECK(done.rel(*du, *done.find("T")) == Rel::Nested);
  CHECK(check_containers(done).pass());
  CHECK(validate(done).pass());
  CHECK(check_completed_complexity(done).pass());
}

TEST_CASE("completion without orthogonality adds nothing") {
  ProtoStructure ps(2);
  ps.add_domain({"T", DiamFlag::Unbounded, 0, {}, {}});
  ps.add_domain({"u", DiamFlag::Bounded, 1, {}, {}});
  ps.set_relation(1, 0, Rel::Nested);
  ps.set_projection(1, 0, {"rho", 1});
  const auto done = complete(ps);
  CHECK(done.size() == ps.size());
}

TEST_CASE("completion is idempotent") {
  const auto once = complete(smallest_container_example());
  const auto twice = complete(once);
  CHECK(twice.size() == once.size());
  for (int i = 0; i < once.size(); ++i)
    CHECK(twice.domain(i).id == once.domain(i).id);
}

TEST_CASE("completion of the graph-product structure") {
  const auto g = fixtures::c4();
  const ProtoStructure ps = proto_from_graph(g, 2, 1, 3);
  const ProtoStructure done = complete(ps);
  CHECK(done.size() >= ps.size());
  CHECK(check_containers(done).pass());
  CHECK(validate(done).pass());
  CHECK(check_completed_complexity(done).pass());
}

TEST_CASE("chain bound on a synthetic structure with E=3") {
  std::mt19937_64 rng(42);
  for (int iter = 0; iter < 20; ++iter) {
    const auto ps = testgen::random_almost_structure(rng, 12, 3);
    REQUIRE(validate(ps).pass());
    const auto done = complete(ps);
    CHECK(check_completed_complexity(done).pass());
    CHECK(done.longest_nesting_chain() <= 39);  // 27 + 9 + 3
  }
}

TEST_CASE("random almost structures complete correctly") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 25; ++iter) {
    const auto ps = testgen::random_almost_structure(rng);
    REQUIRE(validate(ps).pass());
    const auto done = complete(ps);
    CHECK(check_containers(done).pass());
    const auto rep = validate(done);
    for (const auto& v : rep.violations) MESSAGE(v);
    CHECK(rep.pass());
    CHECK(check_completed_complexity(done).pass());
  }
}

TEST_CASE("combine with single-domain leaves is isomorphic to the base") {
  ProtoStructure rel(2);
  rel.add_domain({"T", DiamFlag::Unbounded, 0, {}, {}});
  rel.add_domain({"v1", DiamFlag::Unbounded, 0, {}, {}});
  rel.add_domain({"v2", DiamFlag::Unbounded, 0, {}, {}});
  rel.set_relation(1, 0, Rel::Nested);
  rel.set_relation(2, 0, Rel::Nested);
  rel.set_relation(1, 2, Rel::Orthogonal);
  rel.set_projection(1, 0, {"r1", 1});
  rel.set_projection(2, 0, {"r2", 1});

  ProtoStructure leaf(2);
  leaf.add_domain({"L", DiamFlag::Point, 0, {}, {}});

  const auto out = combine(rel, {{"v1", leaf}, {"v2", leaf}});
  CHECK(out.size() == rel.size());
  CHECK(out.hierarchy_constant() == 6);  // E0=2 -> E0^2+E0
  const auto t = out.find("T");
  const auto l1 = out.find("v1/L");
  const auto l2 = out.find("v2/L");
  REQUIRE((t && l1 && l2));
  CHECK(out.rel(*l1, *t) == Rel::Nested);
  CHECK(out.rel(*l1, *l2) == Rel::Orthogonal);
  CHECK(validate(out).pass());
}

TEST_CASE("combine applies the cross-leaf orthogonality rule") {
  ProtoStructure rel(2);
  rel.add_domain({"T", DiamFlag::Unbounded, 0, {}, {}});
  rel.add_domain({"v1", DiamFlag::Unbounded, 0, {}, {}});
  rel.add_domain({"v2", DiamFlag::Unbounded, 0, {}, {}});
  rel.set_relation(1, 0, Rel::Nested);
  rel.set_relation(2, 0, Rel::Nested);
  rel.set_relation(1, 2, Rel::Orthogonal);
  rel.set_projection(1, 0, {"r1", 1});
  rel.set_projection(2, 0, {"r2", 1});

  // each leaf is a 2-chain
  ProtoStructure chain(2);
  chain.add_domain({"top", DiamFlag::Unbounded, 0, {}, {}});
  chain.add_domain({"bot", DiamFlag::Point, 0, {}, {}});
  chain.set_relation(1, 0, Rel::Nested);
  chain.set_projection(1, 0, {"rho", 1});

  const auto out = combine(rel, {{"v1", chain}, {"v2", chain}});
  CHECK(out.size() == 5);
  // every domain of one leaf is orthogonal to every domain of the other
  for (const char* a : {"v1/top", "v1/bot"})
    for (const char* b : {"v2/top", "v2/bot"})
      CHECK(out.rel(*out.find(a), *out.find(b)) == Rel::Orthogonal);
  CHECK(out.rel(*out.find("v1/bot"), *out.find("v1/top")) == Rel::Nested);
  CHECK(out.rel(*out.find("v1/top"), *out.find("T")) == Rel::Nested);
  CHECK(validate(out).pass());
  // rank bound from the combination
  CHECK(out.max_orthogonal_family() <=
        4 * out.hierarchy_constant() * out.hierarchy_constant() +
            2 * out.hierarchy_constant());
}

TEST_CASE("combine rejects bad designations") {
  ProtoStructure rel(2);
  rel.add_domain({"T", DiamFlag::Unbounded, 0, {}, {}});
  rel.add_domain({"v", DiamFlag::Unbounded, 0, {}, {}});
  rel.set_relation(1, 0, Rel::Nested);
  rel.set_projection(1, 0, {"r", 1});
  ProtoStructure leaf(2);
  leaf.add_domain({"L", DiamFlag::Point, 0, {}, {}});
  CHECK_THROWS_AS(combine(rel, {{"missing", leaf}}), std::invalid_argument);
  CHECK_THROWS_AS(combine(rel, {{"T", leaf}}), std::invalid_argument);
}

TEST_CASE("combine on the graph-product structure with point leaves") {
  const auto g = fixtures::j2();
  ProtoStructure ps = proto_from_graph(g, 2, 1, 3);
  // designate the single-vertex classes at the identity... find minimal ones
  std::vector<std::pair<std::string, ProtoStructure>> leaves;
  ProtoStructure point(2);
  point.add_domain({"pt", DiamFlag::Point, 0, {}, {}});
  for (int i = 0; i < ps.size(); ++i) {
    bool minimal = true;
    for (int j = 0; j < ps.size(); ++j)
      if (ps.rel(j, i) == Rel::Nested) minimal = false;
    if (minimal) leaves.push_back({ps.domain(i).id, point});
  }
  REQUIRE(!leaves.empty());
  const auto out = combine(ps, leaves);
  const auto rep = validate(out);
  for (const auto& v : rep.violations) MESSAGE(v);
  CHECK(rep.pass());
}

TEST_CASE("json round trip") {
  const auto ps = smallest_container_example();
  const auto text = proto_to_json_text(ps);
  const auto back = proto_from_json_text(text);
  CHECK(back.size() == ps.size());
  for (int i = 0; i < ps.size(); ++i)
    for (int j = 0; j < ps.size(); ++j)
      CHECK(back.rel(i, j) == ps.rel(i, j));
  CHECK(back.projection(1, 0)->set_id == "rho_u");
  CHECK(validate(back).pass());
}
