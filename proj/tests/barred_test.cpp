#include <doctest.h>

#include "knotprime/barred.hpp"
#include "knotprime/corpus.hpp"
#include "knotprime/engine.hpp"
#include "support.hpp"

using namespace knotprime;
using knotprime::testing::Rng;

namespace {

FilteredComplex single_bar(int top, int bottom, int grading) {
  return FilteredComplex({{"z", 0, 0}, {"x", grading + 1, top}, {"y", grading, bottom}},
                         {{"x", "y"}});
}

bool has_kind(const std::vector<Violation>& v, Violation::Kind kind) {
  for (const auto& x : v) {
    if (x.kind == kind) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("validation") {
  CHECK(validate(corpus::torus_staircase(3)).empty());
  CHECK(validate(corpus::figure_eight_complex()).empty());

  FilteredComplex chain({{"x", 1, 0}, {"y", 0, 0}, {"z", -1, 0}}, {{"x", "y"}, {"y", "z"}});
  auto v = validate(chain);
  REQUIRE(has_kind(v, Violation::Kind::BoundarySquared));
  CHECK(to_string(v.front()).find('x') != std::string::npos);

  FilteredComplex up({{"a", 0, 0}, {"x", 1, 0}, {"y", 0, 1}}, {{"x", "y"}});
  CHECK(has_kind(validate(up), Violation::Kind::FiltrationIncrease));

  FilteredComplex skew({{"a", 0, 0}, {"x", 2, 1}, {"y", 0, 0}}, {{"x", "y"}});
  CHECK(has_kind(validate(skew), Violation::Kind::GradingMismatch));

  FilteredComplex two({{"a", 0, 0}, {"b", 0, 1}}, {});
  CHECK(has_kind(validate(two), Violation::Kind::NotKnotLike));
  FilteredComplex shifted({{"a", 1, 0}}, {});
  CHECK(has_kind(validate(shifted), Violation::Kind::NotKnotLike));

  CHECK_THROWS_AS(reduce(two), InvalidInput);
  CHECK_THROWS_AS(FilteredComplex({{"a", 0, 0}, {"a", 1, 0}}, {}), InvalidInput);
  CHECK_THROWS_AS(FilteredComplex({{"a", 0, 0}}, {{"a", "b"}}), InvalidInput);
}

TEST_CASE("reduction examples") {
  auto t23 = reduce(corpus::torus_staircase(3));
  CHECK(t23.tau_filtration == 1);
  CHECK(t23.bars == std::vector<Bar>{{0, -1, -2}});
  CHECK(t23.bars[0].even());

  auto fig8 = reduce(corpus::figure_eight_complex());
  CHECK(fig8.tau_filtration == 0);
  CHECK(fig8.bars == std::vector<Bar>{{0, -1, -1}, {1, 0, 0}});

  auto unknot = reduce(corpus::unknot_complex());
  CHECK(unknot.tau_filtration == 0);
  CHECK(unknot.bars.empty());

  for (const auto& c : {corpus::torus_staircase(3), corpus::figure_eight_complex(),
                        corpus::unknot_complex()}) {
    CHECK(barcode_via_ranks(c) == reduce(c));
  }
}

TEST_CASE("equal-filtration pairs cancel") {
  FilteredComplex c({{"z", 0, 2}, {"x", 3, 1}, {"y", 2, 1}}, {{"x", "y"}});
  auto b = reduce(c);
  CHECK(b.tau_filtration == 2);
  CHECK(b.bars.empty());
  CHECK(counts(b) == BarCounts{1, 0, 0});
}

TEST_CASE("persistence matches the rank-function oracle on arbitrary complexes") {
  Rng rng(31);
  for (int k = 0; k < 150; ++k) {
    auto c = testing::random_basis_change(testing::random_knot_complex(rng), rng, 12);
    CHECK(persistence(c) == barcode_from_ranks(c));
  }
  // Not knot-like: two essential classes.
  FilteredComplex loose({{"a", 0, 1}, {"b", 3, -2}, {"x", 1, 4}, {"y", 0, 0}}, {{"x", "y"}});
  CHECK(persistence(loose) == barcode_from_ranks(loose));
  CHECK(persistence(loose).essential.size() == 2);
}

TEST_CASE("reduction is invariant under filtered basis changes") {
  Rng rng(32);
  for (int k = 0; k < 150; ++k) {
    auto c = testing::random_knot_complex(rng);
    auto changed = testing::random_basis_change(c, rng, 20);
    REQUIRE(validate(changed).empty());
    auto expected = reduce(c);
    CHECK(reduce(changed) == expected);
    CHECK(barcode_via_ranks(changed) == expected);
  }
}

TEST_CASE("tensor") {
  auto t23 = corpus::torus_staircase(3);
  CHECK(reduce(tensor(corpus::unknot_complex(), t23)) == reduce(t23));
  CHECK(tensor(corpus::unknot_complex(), t23).size() == t23.size());

  auto granny = tensor(t23, t23);
  CHECK(granny.size() == 9);
  CHECK(validate(granny).empty());
  CHECK(counts(reduce(granny)) == BarCounts{9, 3, 1});
  for (const auto& g : t23.generators()) CHECK(granny.index_of(g.id + "|" + g.id).has_value());
}

TEST_CASE("bar times bar") {
  FilteredComplex a({{"b1", 0, 0}, {"t1", 1, 1}}, {{"t1", "b1"}});
  FilteredComplex b({{"b2", 0, 0}, {"t2", 1, 2}}, {{"t2", "b2"}});
  auto code = persistence(tensor(a, b));
  CHECK(code.essential.empty());
  CHECK(code.bars == std::vector<Bar>{{1, 0, 0}, {3, 2, 1}});
}

TEST_CASE("bar tensor products over a small window") {
  auto report = check_bar_tensor_products(-2, 2);
  CHECK(report.cases > 0);
  CHECK(report.failures == 0);
}

TEST_CASE("counts and predictions") {
  CHECK(counts(reduce(corpus::torus_staircase(3))) == BarCounts{3, 1, 0});
  CHECK(counts(reduce(corpus::figure_eight_complex())) == BarCounts{5, 1, 1});
  CHECK(counts(reduce(corpus::unknot_complex())) == BarCounts{1, 0, 0});

  CHECK(predict_sum_counts({3, 1, 0}, {3, 1, 0}) == BarCounts{9, 3, 1});
  CHECK(predict_sum_counts({1, 0, 0}, {5, 1, 1}) == BarCounts{5, 1, 1});
  CHECK(predict_sum_counts({5, 1, 1}, {3, 1, 0}) == BarCounts{15, 4, 3});
  CHECK(counts(reduce(tensor(corpus::figure_eight_complex(), corpus::torus_staircase(3)))) ==
        BarCounts{15, 4, 3});
}

TEST_CASE("sum counts match on random pairs") {
  Rng rng(33);
  for (int k = 0; k < 60; ++k) {
    auto a = testing::random_basis_change(testing::random_knot_complex(rng, 8), rng, 6);
    auto b = testing::random_basis_change(testing::random_knot_complex(rng, 8), rng, 6);
    auto predicted = predict_sum_counts(counts(reduce(a)), counts(reduce(b)));
    CHECK(predicted.consistent());
    CHECK(counts(reduce(tensor(a, b))) == predicted);
  }
}

TEST_CASE("inequality test") {
  CHECK(bar_count_test({3, 1, 0}) == BarTest::Prime);
  CHECK(bar_count_test({9, 3, 1}) == BarTest::Inconclusive);
  CHECK(bar_count_test({9, 4, 0}) == BarTest::Prime);
  CHECK(bar_count_test({49, 2, 10}) == BarTest::Prime);
  CHECK(bar_count_test({15, 4, 3}) == BarTest::Inconclusive);
  CHECK(bar_count_test({1, 0, 0}) == BarTest::Inconclusive);
  for (long long b = 1; b < 40; ++b) CHECK(bar_count_test({1 + 2 * b, b, 0}) == BarTest::Prime);
}

TEST_CASE("L-space pattern") {
  CHECK(l_space_pattern({7, 3, 0}));
  CHECK_FALSE(l_space_pattern({5, 1, 1}));
  CHECK_FALSE(l_space_pattern({1, 0, 0}));
}

TEST_CASE("mirroring flips parity") {
  auto t23 = corpus::torus_staircase(3);
  auto m = mirror(t23);
  CHECK(validate(m).empty());
  CHECK(counts(reduce(m)) == BarCounts{3, 0, 1});
  CHECK(reduce(m).tau_filtration == -1);
  CHECK(mirror(m) == t23);
  auto fig8 = corpus::figure_eight_complex();
  CHECK(counts(reduce(mirror(fig8))) == counts(reduce(fig8)));
  for (int n : {5, 7}) {
    auto c = counts(reduce(corpus::torus_staircase(n)));
    auto mc = counts(reduce(mirror(corpus::torus_staircase(n))));
    CHECK(mc.b_even == c.b_odd);
    CHECK(mc.b_odd == c.b_even);
  }
}

TEST_CASE("graded ranks of tensors multiply") {
  std::vector<FilteredComplex> pieces = {corpus::torus_staircase(3),
                                         mirror(corpus::torus_staircase(3)),
                                         corpus::figure_eight_complex(), corpus::torus_staircase(5)};
  for (const auto& a : pieces) {
    for (const auto& b : pieces) {
      CHECK(build_omega(graded_ranks(tensor(a, b))) ==
            build_omega(graded_ranks(a)) * build_omega(graded_ranks(b)));
    }
  }
}

TEST_CASE("single bars") {
  auto b = reduce(single_bar(2, -1, 3));
  CHECK(b.bars == std::vector<Bar>{{2, -1, 3}});
  CHECK_FALSE(b.bars[0].even());
}
