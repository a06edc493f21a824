#include "oracles.hpp"

#include "wham/error.hpp"
#include "wham/random.hpp"
#include "wham/wspace.hpp"

#include <doctest.h>

using wham::Elem;
using wham::Field;
using wham::Matrix;
using wham::Rational;
using wham::Vec;
using wham::WeightedSpace;

namespace {

Vec v(std::initializer_list<int> xs)
{
    Vec out;
    for (int x : xs)
        out.push_back(Elem{static_cast<std::uint8_t>(x)});
    return out;
}

WeightedSpace mixed() { return WeightedSpace::numbered({Rational(1), Rational(3, 2), Rational(2)}); }

} // namespace

TEST_SUITE("wspace") {

TEST_CASE("weighted space validation")
{
    CHECK_THROWS_AS(WeightedSpace({}, {}), wham::InvalidArgument);
    CHECK_THROWS_AS(WeightedSpace({"a", "a"}, {1, 1}), wham::InvalidArgument);
    CHECK_THROWS_AS(WeightedSpace({"a"}, {0}), wham::InvalidArgument);
    CHECK_THROWS_AS(WeightedSpace({"a"}, {Rational(-1, 2)}), wham::InvalidArgument);
    CHECK_THROWS_AS(WeightedSpace({"a", "b"}, {1}), wham::InvalidArgument);
    const WeightedSpace s({"x", "y"}, {Rational(1, 3), 2});
    CHECK(s.index_of("y") == 1);
    CHECK(s.total() == Rational(7, 3));
    CHECK_THROWS_AS(s.index_of("z"), wham::InvalidArgument);
}

TEST_CASE("support")
{
    CHECK(wham::support(v({0, 0, 0})).empty());
    CHECK(wham::support(v({0, 1, 0})) == wham::LabelSet{1});
    CHECK(wham::support(v({1, 0, 2})) == wham::LabelSet{0, 2});
}

TEST_CASE("joint support")
{
    const auto f2 = Field::of_order(2);
    CHECK(wham::joint_support(Matrix(f2, 1, 3)).empty());
    CHECK(wham::joint_support(Matrix::from_rows(f2, 3, {v({1, 0, 0}), v({0, 0, 1})})) == wham::LabelSet{0, 2});
    const auto m = Matrix::from_rows(f2, 3, {v({1, 1, 0}), v({0, 1, 1})});
    CHECK(wham::joint_support(m) == wham::LabelSet{0, 1, 2});
    CHECK(wham::set_weight(m, WeightedSpace::uniform(3)) == oracle::enumerated_span_weight(m, WeightedSpace::uniform(3)));
}

TEST_CASE("weights")
{
    const auto s = mixed();
    CHECK(wham::vector_weight(v({0, 0, 0}), s) == 0);
    CHECK(wham::vector_weight(v({1, 1, 0}), s) == Rational(5, 2));
    CHECK(wham::vector_weight(v({1, 0, 1}), WeightedSpace::uniform(3)) == 2);
    const auto f2 = Field::of_order(2);
    CHECK(wham::set_weight(Matrix(f2, 1, 3), s) == 0);
    CHECK(wham::set_weight(Matrix::identity(f2, 3), s) == s.total());
    CHECK(wham::set_weight(Matrix::from_rows(f2, 3, {v({1, 1, 0})}), s) == Rational(5, 2));
    CHECK(wham::distance(v({1, 0, 0}), v({0, 1, 0}), s, f2) == Rational(5, 2));
    CHECK(wham::distance(v({1, 1, 1}), v({1, 1, 1}), s, f2) == 0);
    CHECK(wham::distance(v({0, 0, 0}), v({0, 1, 1}), s, f2) == Rational(7, 2));
}

TEST_CASE("set weight matches enumeration of the span")
{
    wham::InstanceRng rng(5);
    const int orders[] = {2, 3, 4, 5};
    for (int trial = 0; trial < 200; ++trial) {
        const auto f = wham::random_field(rng, orders);
        const std::size_t n = 1 + rng.below(6);
        const auto space = wham::random_space(rng, n, 10, 10);
        const auto m = wham::random_matrix(rng, f, 1 + rng.below(3), n);
        CHECK(wham::set_weight(m, space) == oracle::enumerated_span_weight(m, space));
    }
}

TEST_CASE("metric axioms")
{
    wham::InstanceRng rng(13);
    const int orders[] = {2, 3, 4, 5};
    for (int trial = 0; trial < 300; ++trial) {
        const auto f = wham::random_field(rng, orders);
        const std::size_t n = 1 + rng.below(6);
        const auto space = wham::random_space(rng, n, 10, 10);
        const auto m = wham::random_matrix(rng, f, 3, n);
        const auto a = m.row_vec(0);
        const auto b = m.row_vec(1);
        const auto c = m.row_vec(2);
        const auto ab = wham::distance(a, b, space, f);
        CHECK(ab >= 0);
        CHECK((ab == 0) == (a == b));
        CHECK(ab == wham::distance(b, a, space, f));
        CHECK(wham::distance(a, c, space, f) <= ab + wham::distance(b, c, space, f));
        CHECK(wham::distance(Vec(n, wham::kZero), b, space, f) == wham::vector_weight(b, space));
    }
}

TEST_CASE("column map")
{
    const auto f2 = Field::of_order(2);
    const wham::CodeMatrix zero(WeightedSpace::uniform(2), Matrix(f2, 2, 2));
    CHECK(wham::column_map(zero) == std::vector<Vec>{v({0, 0}), v({0, 0})});
    const wham::CodeMatrix id(WeightedSpace::uniform(2), Matrix::identity(f2, 2));
    CHECK(wham::column_map(id) == std::vector<Vec>{v({1, 0}), v({0, 1})});
    const wham::CodeMatrix g(WeightedSpace::uniform(3), Matrix::from_rows(f2, 3, {v({1, 1, 0}), v({0, 1, 1})}));
    CHECK(wham::column_map(g) == std::vector<Vec>{v({1, 0}), v({1, 1}), v({0, 1})});
    CHECK_THROWS_AS(wham::CodeMatrix(WeightedSpace::uniform(2), Matrix(f2, 1, 3)), wham::InvalidArgument);
}

TEST_CASE("point classes and sums")
{
    const auto f3 = Field::of_order(3);
    const wham::ProjectiveSpace ps(f3, 2);
    const wham::CodeMatrix g(WeightedSpace::numbered({1, 2, 3}),
                             Matrix::from_rows(f3, 3, {v({1, 2, 0}), v({0, 0, 0})}));
    const auto classes = wham::point_classes(g, ps);
    REQUIRE(classes[0].has_value());
    CHECK(classes[0] == classes[1]);
    CHECK_FALSE(classes[2].has_value());
    const auto sums = wham::point_weight_sums(g, ps);
    CHECK(sums[*classes[0]] == 3);
    Rational total = 0;
    for (const auto& s : sums)
        total += s;
    CHECK(total == 3);
}

}
