#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "carpets/carpet.hpp"
#include "carpets/errors.hpp"
#include "carpets/examples.hpp"
#include "instances.hpp"

using namespace carpets;

TEST_CASE("GL-EX classifies as Gatzouras-Lalley") {
  const DiagonalIFS ifs = gl_example();
  const auto rep = validate_and_classify(ifs);
  CHECK(rep.kind == CarpetKind::GatzourasLalley);
  CHECK(rep.interiors_disjoint);
  CHECK(rep.columns_aligned_or_disjoint_axis1);
  CHECK(rep.strict_domination);
  // Columns A=[0,1/2] and B=[1/2,3/4] touch, so the projected SSC fails.
  CHECK_FALSE(rep.proj_ssc_axis1);
}

TEST_CASE("delta=1/40 instance is Baranski with SSC on both projections") {
  const auto rep = validate_and_classify(baranski_example(Rational(1, 40)));
  CHECK(rep.kind == CarpetKind::Baranski);
  CHECK(rep.proj_ssc_axis1);
  CHECK(rep.proj_ssc_axis2);
}

TEST_CASE("delta=0 instance tiles the square: SSC fails on both projections") {
  const auto rep = validate_and_classify(baranski_example(Rational(0, 1)));
  CHECK(rep.kind == CarpetKind::Baranski);
  CHECK_FALSE(rep.proj_ssc_axis1);
  CHECK_FALSE(rep.proj_ssc_axis2);
}

TEST_CASE("column structure of GL-EX") {
  const ColumnStructure cs = column_structure(gl_example(), 1);
  REQUIRE(cs.classes.size() == 2);
  CHECK(cs.classes[0] == std::vector<int>{0, 1});
  CHECK(cs.classes[1] == std::vector<int>{2});
  CHECK(cs.class_ratio[0] == doctest::Approx(0.5));
  CHECK(cs.class_ratio[1] == doctest::Approx(0.25));
}

TEST_CASE("column structure of the delta=1/40 instance") {
  const DiagonalIFS ifs = baranski_example(Rational(1, 40));
  const ColumnStructure rows = column_structure(ifs, 2);
  REQUIRE(rows.classes.size() == 4);
  for (const auto &cls : rows.classes)
    CHECK(cls.size() == 3);
  for (double r : rows.class_ratio)
    CHECK(r == doctest::Approx(9.0 / 40.0));

  const ColumnStructure cols = column_structure(ifs, 1);
  REQUIRE(cols.classes.size() == 5);
  std::vector<std::size_t> sizes;
  for (const auto &cls : cols.classes)
    sizes.push_back(cls.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{2, 2, 2, 2, 4});
}

TEST_CASE("classification is invariant under map permutation") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    DiagonalIFS ifs = trial % 2 == 0 ? test_instances::random_gl(rng)
                                     : test_instances::random_baranski(rng);
    const auto before = validate_and_classify(ifs);
    std::shuffle(ifs.maps.begin(), ifs.maps.end(), rng);
    const auto after = validate_and_classify(ifs);
    CHECK(before.kind == after.kind);
    CHECK(before.proj_ssc_axis1 == after.proj_ssc_axis1);
    CHECK(before.proj_ssc_axis2 == after.proj_ssc_axis2);
  }
}

TEST_CASE("GL classification implies strict domination") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const DiagonalIFS ifs = test_instances::random_gl(rng);
    REQUIRE(validate_and_classify(ifs).kind == CarpetKind::GatzourasLalley);
    double margin = 1.0;
    for (int i = 0; i < ifs.size(); ++i)
      margin = std::min(margin, ifs.a(i) - ifs.b(i));
    CHECK(margin > 0.0);
  }
}

TEST_CASE("column classes partition the alphabet") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const DiagonalIFS ifs = test_instances::random_baranski(rng);
    for (int axis : {1, 2}) {
      const ColumnStructure cs = column_structure(ifs, axis);
      std::vector<int> seen;
      for (const auto &cls : cs.classes)
        seen.insert(seen.end(), cls.begin(), cls.end());
      std::sort(seen.begin(), seen.end());
      std::vector<int> expect(std::size_t(ifs.size()));
      for (int i = 0; i < ifs.size(); ++i)
        expect[std::size_t(i)] = i;
      CHECK(seen == expect);
    }
  }
}

TEST_CASE("invalid maps are rejected") {
  DiagonalIFS bad = gl_example();
  bad.maps[0].a = Number(1.5);
  CHECK_THROWS_AS(validate_and_classify(bad), InvalidMap);

  DiagonalIFS escape = gl_example();
  escape.maps[0].dx = Number(0.9); // image [0.9, 1.4] leaves the unit square
  CHECK_THROWS_AS(validate_and_classify(escape), InvalidMap);

  DiagonalIFS single;
  single.maps.push_back({0.5, 0.25, 0.0, 0.0});
  CHECK_THROWS_AS(validate_and_classify(single), InvalidMap);
}

TEST_CASE("overlapping interiors classify as Neither") {
  DiagonalIFS ifs;
  ifs.maps.push_back({0.6, 0.6, 0.0, 0.0});
  ifs.maps.push_back({0.6, 0.6, 0.3, 0.3});
  CHECK(validate_and_classify(ifs).kind == CarpetKind::Neither);
}

TEST_CASE("misaligned columns classify as Neither") {
  DiagonalIFS ifs;
  // Same footprint overlap in x without identical projected maps.
  ifs.maps.push_back({0.4, 0.2, 0.0, 0.0});
  ifs.maps.push_back({0.3, 0.2, 0.1, 0.5});
  ifs.maps.push_back({0.3, 0.2, 0.6, 0.0});
  const auto rep = validate_and_classify(ifs);
  CHECK(rep.kind == CarpetKind::Neither);
  CHECK(rep.interiors_disjoint);
  CHECK_FALSE(rep.columns_aligned_or_disjoint_axis1);
}

TEST_CASE("delta example rejects parameters outside [0,1/6)") {
  CHECK_THROWS_AS(baranski_example(0.2), DomainError);
  CHECK_THROWS_AS(baranski_example(-0.01), DomainError);
}
