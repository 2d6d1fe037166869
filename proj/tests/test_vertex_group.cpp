#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gp/vertex_group.hpp"
#include "support/fixtures.hpp"

using namespace gp;

TEST_CASE("compose basics") {
  const auto z2 = VertexGroupSpec::cyclic(2);
  CHECK(z2.compose(1, 1) == 0);

  const auto z = VertexGroupSpec::integers();
  CHECK(z.compose(3, -5) == -2);

  const auto s3 = fixtures::s3_table();
  CHECK(s3.compose(3, 3) == 0);  // a transposition squares to the identity
}

TEST_CASE("word lengths") {
  const auto z5 = VertexGroupSpec::cyclic(5);
  CHECK(z5.word_length(3) == 2);
  CHECK(z5.word_length(0) == 0);

  const auto z = VertexGroupSpec::integers();
  CHECK(z.word_length(-4) == 4);
  CHECK(z.word_length(0) == 0);

  const auto s3 = fixtures::s3_table();
  CHECK(s3.word_length(0) == 0);
  CHECK(s3.word_length(1) == 1);   // generator r
  CHECK(s3.word_length(2) == 1);   // r^2 = r^-1
  CHECK(s3.word_length(4) == 2);   // sr needs two letters
}

TEST_CASE("enumeration") {
  CHECK(VertexGroupSpec::cyclic(2).enumerate_nonidentity(5) ==
        std::vector<std::int64_t>{1});
  CHECK(VertexGroupSpec::cyclic(4).enumerate_nonidentity(1) ==
        std::vector<std::int64_t>{1, 2, 3});
  CHECK(VertexGroupSpec::integers().enumerate_nonidentity(2) ==
        std::vector<std::int64_t>{-2, -1, 1, 2});
}

TEST_CASE("group laws hold exhaustively for finite kinds") {
  for (const auto& spec :
       {VertexGroupSpec::cyclic(6), fixtures::s3_table()}) {
    std::vector<std::int64_t> all{0};
    for (auto p : spec.enumerate_nonidentity(1)) all.push_back(p);
    for (auto a : all) {
      CHECK(spec.compose(a, spec.inverse(a)) == 0);
      CHECK(spec.compose(0, a) == a);
      for (auto b : all) {
        CHECK(spec.word_length(spec.compose(a, b)) <=
              spec.word_length(a) + spec.word_length(b));
        for (auto c : all)
          CHECK(spec.compose(spec.compose(a, b), c) ==
                spec.compose(a, spec.compose(b, c)));
      }
    }
  }
}

TEST_CASE("sampled laws for the integer backend") {
  const auto z = VertexGroupSpec::integers();
  for (std::int64_t a = -6; a <= 6; ++a) {
    CHECK(z.compose(a, z.inverse(a)) == 0);
    for (std::int64_t b = -6; b <= 6; ++b)
      CHECK(z.word_length(z.compose(a, b)) <=
            z.word_length(a) + z.word_length(b));
  }
}

TEST_CASE("table validation rejects garbage") {
  CHECK_THROWS_AS(VertexGroupSpec::table({{0, 1}, {1, 1}}, {1}),
                  std::invalid_argument);  // 1*1=1 kills inverses
  CHECK_THROWS_AS(VertexGroupSpec::cyclic(1), std::invalid_argument);
  // Z/4 with only the square as generator does not generate.
  CHECK_THROWS_AS(VertexGroupSpec::table({{0, 1, 2, 3},
                                          {1, 2, 3, 0},
                                          {2, 3, 0, 1},
                                          {3, 0, 1, 2}},
                                         {2}),
                  std::invalid_argument);
}
