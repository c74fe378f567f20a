#include "doctest.h"

#include <random>

#include "stdiv/exact_element.hpp"
#include "stdiv/residue.hpp"

using namespace stdiv;

namespace {
const Int P13(13);

ExactElement rand_element(std::mt19937& rng, long e, bool allow_zero = true) {
    std::uniform_int_distribution<long> num(-40, 40), den(1, 12);
    while (true) {
        std::vector<Rat> c;
        for (long i = 0; i < e; ++i) c.push_back(Rat(num(rng), den(rng)));
        ExactElement a(c, e, P13);
        if (allow_zero || !a.is_zero()) return a;
    }
}
}  // namespace

TEST_CASE("construction produces canonical representatives") {
    ExactElement unit({Rat(1)}, 2, P13);
    CHECK(unit.valuation() == ExtRat(Rat(0)));

    ExactElement pi({Rat(0), Rat(1)}, 2, P13);
    CHECK(pi.valuation() == ExtRat(Rat(1, 2)));

    // min(ord 13 + 0, ord 1 + 1/2) = 1/2
    ExactElement mixed({Rat(13), Rat(1)}, 2, P13);
    CHECK(mixed.valuation() == ExtRat(Rat(1, 2)));

    // pi^2 folds to p
    ExactElement sq({Rat(0), Rat(0), Rat(1)}, 2, P13);
    CHECK(sq == ExactElement::from_rat(Rat(13), 2, P13));

    CHECK_THROWS(ExactElement({Rat(1)}, 0, P13));
    CHECK_THROWS(ExactElement({Rat(1)}, 2, Int(12)));
}

TEST_CASE("valuation normalization and edge values") {
    CHECK(ExactElement::from_rat(Rat(13), 1, P13).valuation() == ExtRat(Rat(1)));
    CHECK(ExactElement::zero(2, P13).valuation().is_infinite());
    CHECK(ExactElement::from_rat(Rat(1, 6), 1, P13).valuation() == ExtRat(Rat(0)));
}

TEST_CASE("valuation is multiplicative and ultrametric") {
    std::mt19937 rng(7);
    for (int it = 0; it < 1000; ++it) {
        ExactElement a = rand_element(rng, 2, false), b = rand_element(rng, 2, false);
        ExtRat va = a.valuation(), vb = b.valuation();
        CHECK((a * b).valuation() == ExtRat(va.value() + vb.value()));
        ExtRat vs = (a + b).valuation();
        CHECK(vs >= min(va, vb));
        if (va != vb) CHECK(vs == min(va, vb));
    }
}

TEST_CASE("ring axioms hold exactly") {
    std::mt19937 rng(11);
    for (int it = 0; it < 300; ++it) {
        ExactElement a = rand_element(rng, 2), b = rand_element(rng, 2), c = rand_element(rng, 2);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) + c == a + (b + c));
    }
}

TEST_CASE("inverse and division") {
    std::mt19937 rng(3);
    for (int it = 0; it < 200; ++it) {
        ExactElement a = rand_element(rng, 2, false);
        CHECK(a * a.inverse() == ExactElement::one(2, P13));
    }
    CHECK_THROWS(ExactElement::zero(2, P13).inverse());
}

TEST_CASE("residue map") {
    ResidueField F(13, 1);

    // 4 + 13*(2/3) -> 4
    ExactElement a = ExactElement::from_rat(Rat(4) + Rat(13) * Rat(2, 3), 1, P13);
    CHECK(residue(a, F) == F.from_int(4));

    // pi has positive valuation -> 0
    ExactElement pi({Rat(0), Rat(1)}, 2, P13);
    ResidueField F2(13, 2);
    CHECK(residue(pi, F2).is_zero());

    // 17/6 -> 17 * 6^{-1} = 5 mod 13
    CHECK(residue(ExactElement::from_rat(Rat(17, 6), 1, P13), F) == F.from_int(5));

    ExactElement neg = ExactElement::from_rat(Rat(1, 13), 1, P13);
    CHECK_THROWS(residue(neg, F));
}

TEST_CASE("residue is a ring homomorphism on the valuation ring") {
    ResidueField F(13, 2);
    std::mt19937 rng(5);
    int done = 0;
    while (done < 300) {
        ExactElement a = rand_element(rng, 2), b = rand_element(rng, 2);
        auto ok = [](const ExactElement& x) {
            auto v = x.valuation();
            return v.is_infinite() || v.value() >= 0;
        };
        if (!ok(a) || !ok(b)) continue;
        CHECK(residue(a * b, F) == residue(a, F) * residue(b, F));
        CHECK(residue(a + b, F) == residue(a, F) + residue(b, F));
        ++done;
    }
}

TEST_CASE("residue field basics") {
    ResidueField F(13, 2);
    CHECK(F.order_long() == 169);
    ResidueElement g = F.from_coeffs({0, 1});
    CHECK(g * g.inverse() == F.one());
    // brute-force sqrt agrees with squaring
    ResidueElement x = F.from_coeffs({3, 5});
    auto s = (x * x).sqrt();
    REQUIRE(s.has_value());
    CHECK((*s) * (*s) == x * x);
}

TEST_CASE("exact square roots in the quadratic Eisenstein extension") {
    // rational square
    auto r = sqrt_exact(ExactElement::from_rat(Rat(9, 4), 2, P13));
    REQUIRE(r.has_value());
    CHECK(*r * *r == ExactElement::from_rat(Rat(9, 4), 2, P13));

    // p * square needs pi
    auto s = sqrt_exact(ExactElement::from_rat(Rat(13 * 25), 2, P13));
    REQUIRE(s.has_value());
    CHECK(*s * *s == ExactElement::from_rat(Rat(13 * 25), 2, P13));

    // (1 + pi)^2 recovered from its square
    ExactElement t({Rat(1), Rat(1)}, 2, P13);
    auto u = sqrt_exact(t * t);
    REQUIRE(u.has_value());
    CHECK(*u * *u == t * t);

    // no root in E: 2 is not a square mod 13
    SqrtFailure why;
    auto none = sqrt_exact(ExactElement::from_rat(Rat(2), 2, P13), &why);
    CHECK(!none.has_value());
    CHECK(!why.reason.empty());
}

TEST_CASE("extended rationals order and absorb") {
    ExtRat inf = ExtRat::infinity();
    CHECK(ExtRat(Rat(5)) < inf);
    CHECK(inf + ExtRat(Rat(-3)) == inf);
    CHECK(min(ExtRat(Rat(1, 2)), inf) == ExtRat(Rat(1, 2)));
}
