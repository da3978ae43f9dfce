#include <doctest.h>

#include "susy/json_io.hpp"
#include "test_util.hpp"

using namespace susy;
using namespace susy::test;

TEST_CASE("polynomial round trips") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 40; ++trial) {
    VarSpec spec{static_cast<int>(rng_int(rng, 0, 3)), static_cast<int>(rng_int(rng, 0, 3)),
                 trial % 2 == 0};
    Polynomial p = random_poly(rng, spec, 6, 3);
    Json j = poly_to_json(p);
    CHECK(poly_from_json(j) == p);
    // Emission is deterministic: parse and re-dump byte for byte.
    CHECK(poly_to_json(poly_from_json(j)).dump() == j.dump());
  }
}

TEST_CASE("polynomial parsing errors") {
  CHECK_THROWS_AS(poly_from_json(parse_json_text(R"({"m":1,"n":1})")), parse_error);
  CHECK_THROWS_AS(
      poly_from_json(parse_json_text(
          R"({"m":1,"n":1,"laurent":false,"terms":[{"c":"1","x":[-1],"y":[0]}]})")),
      parse_error);
  CHECK_THROWS_AS(
      poly_from_json(parse_json_text(
          R"({"m":1,"n":1,"laurent":false,"terms":[{"c":"1","x":[1,2],"y":[0]}]})")),
      parse_error);
  CHECK_THROWS_AS(
      poly_from_json(parse_json_text(
          R"({"m":1,"n":1,"laurent":false,"terms":[{"c":"x","x":[1],"y":[0]}]})")),
      parse_error);
  CHECK_THROWS_AS(parse_json_text("{"), parse_error);

  // Duplicate monomials accumulate; zero coefficients are dropped.
  Polynomial p = poly_from_json(parse_json_text(
      R"({"m":1,"n":0,"laurent":false,
          "terms":[{"c":"2","x":[1],"y":[]},{"c":"3","x":[1],"y":[]},{"c":"0","x":[0],"y":[]}]})"));
  VarSpec spec{1, 0, false};
  CHECK(p == Rational(5) * X(spec, 1));
}

TEST_CASE("coefficient strings") {
  VarSpec spec{1, 0, false};
  Polynomial p(spec);
  p.add_term(Monomial{{1}, {}}, Rational(-7, 2));
  Json j = poly_to_json(p);
  CHECK(j["terms"][0]["c"] == "-7/2");
  CHECK(poly_from_json(j) == p);
}

TEST_CASE("partitions and signatures") {
  Partition lambda = Partition::of({3, 1});
  CHECK(partition_from_json(partition_to_json(lambda)) == lambda);
  CHECK_THROWS_AS(partition_from_json(parse_json_text("[1,2]")), parse_error);
  IntegerSignature sig = IntegerSignature::of({2, -1});
  CHECK(signature_from_json(signature_to_json(sig)) == sig);
  SignaturePair pair{IntegerSignature::of({1}), IntegerSignature::of({-2})};
  SignaturePair back = signature_pair_from_json(signature_pair_to_json(pair));
  CHECK(back.lambda == pair.lambda);
  CHECK(back.mu == pair.mu);
}

TEST_CASE("decompositions") {
  BasisDecomposition dec;
  dec.m = dec.n = 1;
  dec.coeffs.emplace(Partition::of({2}), Rational(1));
  dec.coeffs.emplace(Partition::of({1, 1}), Rational(-1, 3));
  CHECK(decomposition_from_json(decomposition_to_json(dec)) == dec);
  CHECK_THROWS_AS(
      decomposition_from_json(parse_json_text(
          R"({"m":1,"n":1,"coeffs":[{"partition":[2,2],"c":"1"}]})")),
      parse_error);
}

TEST_CASE("points and point sets") {
  Point p = Point::make({Rational(3), Rational(1, 2)}, {Rational(-3), Rational(5)}, false);
  CHECK(point_from_json(point_to_json(p)) == p);
  // The multiplicative flag defaults to false.
  Point q = point_from_json(parse_json_text(R"({"x":["1","2"],"y":["-1","-2"]})"));
  CHECK_FALSE(q.multiplicative);
  CHECK_THROWS_AS(point_from_json(parse_json_text(R"({"x":["0"],"y":["1"],"multiplicative":true})")),
                  parse_error);
  PointSet v;
  v.insert(p);
  v.insert(Point::make({Rational(1), Rational(1)}, {Rational(2), Rational(2)}, false));
  CHECK(point_set_from_json(point_set_to_json(v)) == v);
}

TEST_CASE("display names annotation") {
  VarSpec spec{1, 1, false};
  Polynomial p = X(spec, 1) + Y(spec, 1);
  Json j = poly_to_json(p, "h", "h'");
  CHECK(j["names"]["x"] == "h");
  CHECK(poly_from_json(j) == p);  // annotation is ignored on input
}
