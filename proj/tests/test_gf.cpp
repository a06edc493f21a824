#include "oracles.hpp"

#include "wham/error.hpp"
#include "wham/gf.hpp"

#include <doctest.h>

using wham::Elem;
using wham::Field;

namespace {

const int kOrders[] = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32};

} // namespace

TEST_SUITE("gf") {

TEST_CASE("field creation")
{
    const auto f2 = Field::create(2, 1);
    CHECK(f2.q() == 2);
    const auto f4 = Field::create(2, 2);
    CHECK(f4.q() == 4);
    CHECK(f4.modulus() == std::vector<int>{1, 1, 1});
    CHECK_THROWS_AS(Field::create(4, 1), wham::InvalidArgument);
    CHECK_THROWS_AS(Field::create(2, 0), wham::InvalidArgument);
    CHECK_THROWS_AS(Field::create(2, 9), wham::InvalidArgument);
    CHECK_THROWS_AS(Field::of_order(6), wham::InvalidArgument);
    // x^2 + 1 = (x + 1)^2 over GF(2)
    CHECK_THROWS_AS(Field::create(2, 2, std::vector<int>{1, 0, 1}), wham::InvalidArgument);
    // not monic
    CHECK_THROWS_AS(Field::create(3, 2, std::vector<int>{1, 0, 2}), wham::InvalidArgument);
    CHECK_THROWS_AS(Field::create(2, 2, std::vector<int>{1, 1}), wham::InvalidArgument);
}

TEST_CASE("the only irreducible monic quadratic over GF(2)")
{
    int irreducible = 0;
    for (int c0 = 0; c0 < 2; ++c0)
        for (int c1 = 0; c1 < 2; ++c1) {
            const std::vector<int> poly{c0, c1, 1};
            CHECK(wham::is_irreducible(poly, 2) == oracle::irreducible_by_products(poly, 2));
            if (oracle::irreducible_by_products(poly, 2)) {
                ++irreducible;
                CHECK(poly == std::vector<int>{1, 1, 1});
            }
        }
    CHECK(irreducible == 1);
}

TEST_CASE("irreducibility agrees with product enumeration")
{
    for (int p : {2, 3, 5})
        for (int d = 1; d <= 4; ++d) {
            int count = 1;
            for (int i = 0; i < d; ++i)
                count *= p;
            for (int code = 0; code < count; ++code) {
                std::vector<int> poly;
                int c = code;
                for (int i = 0; i < d; ++i) {
                    poly.push_back(c % p);
                    c /= p;
                }
                poly.push_back(1);
                CHECK(wham::is_irreducible(poly, p) == oracle::irreducible_by_products(poly, p));
            }
        }
}

TEST_CASE("small examples")
{
    const auto f2 = Field::of_order(2);
    CHECK(f2.add(wham::kOne, wham::kOne) == wham::kZero);
    const auto f4 = Field::of_order(4);
    CHECK(f4.mul(Elem{2}, Elem{2}) == Elem{3});
    CHECK(f2.elements() == std::vector<Elem>{Elem{0}, Elem{1}});
    CHECK(Field::of_order(3).elements() == std::vector<Elem>{Elem{0}, Elem{1}, Elem{2}});
    CHECK(f4.elements() == std::vector<Elem>{Elem{0}, Elem{1}, Elem{2}, Elem{3}});
    CHECK_THROWS_AS(f4.inv(wham::kZero), wham::InvalidArgument);
    CHECK_THROWS_AS(f4.element(4), wham::InvalidArgument);
    CHECK_THROWS_AS(f4.add(Elem{5}, wham::kOne), wham::InvalidArgument);
}

TEST_CASE("multiplication table matches polynomial arithmetic")
{
    for (int q : kOrders) {
        const auto f = Field::of_order(q);
        for (auto a : f.elements())
            for (auto b : f.elements())
                REQUIRE(f.mul(a, b).index == oracle::poly_mul(a.index, b.index, f.p(), f.modulus()));
    }
}

TEST_CASE("field axioms")
{
    for (int q : kOrders) {
        CAPTURE(q);
        const auto f = Field::of_order(q);
        const auto els = f.elements();
        for (auto a : els) {
            REQUIRE(f.add(a, wham::kZero) == a);
            REQUIRE(f.mul(a, wham::kOne) == a);
            REQUIRE(f.add(a, f.neg(a)) == wham::kZero);
            if (!a.is_zero()) {
                REQUIRE(f.mul(a, f.inv(a)) == wham::kOne);
                REQUIRE(f.pow(a, static_cast<std::uint64_t>(q - 1)) == wham::kOne);
            }
            REQUIRE(f.pow(a, static_cast<std::uint64_t>(q)) == a);
            // Frobenius is additive
            for (auto b : els)
                REQUIRE(f.pow(f.add(a, b), static_cast<std::uint64_t>(f.p()))
                        == f.add(f.pow(a, static_cast<std::uint64_t>(f.p())), f.pow(b, static_cast<std::uint64_t>(f.p()))));
        }
        if (q > 16)
            continue;
        for (auto a : els)
            for (auto b : els) {
                REQUIRE(f.add(a, b) == f.add(b, a));
                REQUIRE(f.mul(a, b) == f.mul(b, a));
                REQUIRE(f.sub(f.add(a, b), b) == a);
                for (auto c : els) {
                    REQUIRE(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                    REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
    }
}

TEST_CASE("explicit modulus and field equality")
{
    const auto a = Field::create(3, 2, std::vector<int>{1, 0, 1});
    const auto b = Field::create(3, 2, std::vector<int>{2, 1, 1});
    CHECK(a == Field::of_order(9));
    CHECK_FALSE(a == b);
    for (auto x : b.elements())
        for (auto y : b.elements())
            REQUIRE(b.mul(x, y).index == oracle::poly_mul(x.index, y.index, 3, b.modulus()));
}

}
