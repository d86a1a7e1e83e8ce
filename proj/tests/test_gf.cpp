#include <doctest.h>

#include <random>
#include <set>

#include <veron/gf.hpp>

using namespace veron;

TEST_CASE("prime fields need no modulus choice") {
    const Field f2(2, 1);
    CHECK(f2.order() == 2);
    CHECK(f2.characteristic() == 2);
    const Field f3(3, 1);
    CHECK(f3.order() == 3);
}

TEST_CASE("GF(4) picks the only irreducible monic quadratic") {
    const Field f4(2, 2);
    CHECK(f4.order() == 4);
    CHECK(f4.modulus() == std::vector<std::uint32_t>{1, 1, 1});  // 1 + x + x^2
}

TEST_CASE("GF(9) accepts x^2 + 1 as modulus") {
    // oracle: x^2 + 1 has no root in GF(3)
    for (std::uint32_t x : {0u, 1u, 2u}) CHECK((x * x + 1) % 3 != 0);
    const Field f9(3, 2, {1, 0, 1});
    CHECK(f9.order() == 9);
}

TEST_CASE("construction rejects bad parameters") {
    CHECK_THROWS_AS(Field(4, 1), NonPrimeCharacteristic);
    CHECK_THROWS_AS(Field(1, 1), NonPrimeCharacteristic);
    CHECK_THROWS_AS(Field(2, 2, {1, 0, 1}), ReducibleModulus);  // (x+1)^2
    CHECK_THROWS_AS(Field(2, 0), ParamOutOfRange);
    CHECK_THROWS_AS(Field(2, 17), ParamOutOfRange);  // 2^17 > 2^16
    CHECK_THROWS_AS(Field(2, 3, {1, 1}), ParamOutOfRange);  // wrong degree
}

TEST_CASE("arithmetic matches worked examples") {
    const Field f4(2, 2);
    const FieldElement x{2}, x_plus_1{3};
    CHECK(f4.mul(x, x) == x_plus_1);  // reduction by x^2+x+1

    const Field f3(3, 1);
    CHECK(f3.inv({2}) == FieldElement{2});  // 2*2 = 4 = 1

    const Field f2(2, 1);
    CHECK(f2.pow({1}, 5) == f2.one());
}

TEST_CASE("pow(a, 0) is 1 for every a, including 0") {
    const Field f9(3, 2);
    for (const auto a : f9.elements()) CHECK(f9.pow(a, 0) == f9.one());
}

TEST_CASE("division by zero and out-of-range codes are rejected") {
    const Field f4(2, 2);
    CHECK_THROWS_AS(f4.inv(f4.zero()), DivisionByZero);
    CHECK_THROWS_AS(f4.add({7}, {1}), FieldMismatch);
    CHECK_THROWS_AS(f4.mul({1}, {4}), FieldMismatch);
}

TEST_CASE("element enumeration is deterministic and complete") {
    const Field f2(2, 1);
    CHECK(f2.elements() == std::vector<FieldElement>{{0}, {1}});

    const Field f4(2, 2);
    const auto e4 = f4.elements();
    REQUIRE(e4.size() == 4);
    CHECK(f4.to_string(e4[0]) == "0");
    CHECK(f4.to_string(e4[1]) == "1");
    CHECK(f4.to_string(e4[2]) == "x");
    CHECK(f4.to_string(e4[3]) == "x+1");

    const Field f3(3, 1);
    CHECK(f3.elements() == std::vector<FieldElement>{{0}, {1}, {2}});

    const Field f27(3, 3);
    const auto e27 = f27.elements();
    CHECK(std::set<FieldElement>(e27.begin(), e27.end()).size() == 27);
}

TEST_CASE("field axioms hold exhaustively for q <= 16") {
    for (const Field f : {Field(2, 1), Field(3, 1), Field(2, 2), Field(5, 1), Field(7, 1),
                          Field(2, 3), Field(3, 2), Field(11, 1), Field(13, 1), Field(2, 4)}) {
        const auto elems = f.elements();
        for (const auto a : elems) {
            CHECK(f.add(a, f.zero()) == a);
            CHECK(f.mul(a, f.one()) == a);
            CHECK(f.add(a, f.neg(a)) == f.zero());
            if (!f.is_zero(a)) CHECK(f.mul(a, f.inv(a)) == f.one());
            for (const auto b : elems) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                for (const auto c : elems) {
                    CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("Fermat identity pow(a, q) = a holds exhaustively for q <= 64") {
    for (const Field f : {Field(2, 1), Field(3, 1), Field(2, 2), Field(5, 1), Field(2, 3),
                          Field(3, 2), Field(2, 4), Field(5, 2), Field(3, 3), Field(2, 5),
                          Field(7, 2), Field(2, 6), Field(61, 1)}) {
        for (const auto a : f.elements()) CHECK(f.pow(a, f.order()) == a);
    }
}

TEST_CASE("large fields beyond the table limit use the slow path correctly") {
    std::mt19937 rng(20240811);
    for (const Field f : {Field(2, 11), Field(13, 3), Field(251, 2)}) {
        REQUIRE(f.order() > 1024);
        std::uniform_int_distribution<std::uint32_t> dist(0, f.order() - 1);
        for (int i = 0; i < 200; ++i) {
            const FieldElement a{dist(rng)}, b{dist(rng)}, c{dist(rng)};
            CHECK(f.mul(a, b) == f.mul(b, a));
            CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            CHECK(f.pow(a, f.order()) == a);
            if (!f.is_zero(a)) CHECK(f.mul(a, f.inv(a)) == f.one());
        }
    }
}

TEST_CASE("coefficients round-trip through element") {
    const Field f8(2, 3);
    for (const auto a : f8.elements()) CHECK(f8.element(f8.coefficients(a)) == a);
    CHECK_THROWS_AS(f8.element({1, 1, 1, 1}), ParamOutOfRange);
    CHECK_THROWS_AS(f8.element({2}), ParamOutOfRange);
}

TEST_CASE("prime subfield embedding") {
    const Field f4(2, 2);
    CHECK(f4.from_int(2) == f4.zero());
    CHECK(f4.from_int(3) == f4.one());
    CHECK(f4.from_int(-1) == f4.one());  // -1 = 1 in characteristic 2
    const Field f7(7, 1);
    CHECK(f7.from_int(-3) == FieldElement{4});
}

TEST_CASE("field spec strings parse and round-trip") {
    CHECK(Field::parse("2") == Field(2, 1));
    CHECK(Field::parse("2^2") == Field(2, 2));
    CHECK(Field::parse("3^2/1,0,1") == Field(3, 2, {1, 0, 1}));
    CHECK(Field::parse(Field(5, 2).to_string()) == Field(5, 2));
    CHECK_THROWS_AS(Field::parse("abc"), ParamOutOfRange);
    CHECK_THROWS_AS(Field::parse("2^"), ParamOutOfRange);
    CHECK_THROWS_AS(Field::parse("4^2"), NonPrimeCharacteristic);
}
