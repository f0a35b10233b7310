#include "gzfloer/novikov.hpp"
#include "gzfloer/json_io.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <optional>
#include <random>
#include <vector>

using gzfloer::ComplexRational;
using gzfloer::NovikovElement;
using gzfloer::NovikovTerm;
using gzfloer::Rational;

namespace {

Rational rat(long p, long q = 1) { return Rational(p, q); }

NovikovElement elt(std::vector<std::pair<Rational, ComplexRational>> ts, Rational trunc) {
    std::vector<NovikovTerm> terms;
    for (auto& [e, c] : ts) terms.push_back({e, c});
    return NovikovElement(std::move(terms), std::move(trunc));
}

} // namespace

TEST_CASE("construction normalizes terms") {
    auto x = elt({{rat(1), ComplexRational(2)}, {rat(0), ComplexRational(3)}, {rat(1), ComplexRational(-2)}}, rat(10));
    // merged T-coefficients cancel, order sorted
    REQUIRE(x.terms().size() == 1);
    CHECK(x.terms()[0].exp == rat(0));
    CHECK(x.terms()[0].coeff == ComplexRational(3));

    auto dropped = elt({{rat(12), ComplexRational(1)}}, rat(10));
    CHECK(dropped.is_zero());

    auto z = NovikovElement::zero(rat(10));
    CHECK(z.is_zero());
    CHECK(z.terms().empty());
}

TEST_CASE("valuation") {
    auto x = elt({{rat(1, 2), ComplexRational(2)}, {rat(1), ComplexRational(3)}}, rat(10));
    REQUIRE(x.valuation().has_value());
    CHECK(*x.valuation() == rat(1, 2));

    CHECK(!NovikovElement::zero(rat(10)).valuation().has_value());

    auto u = elt({{rat(0), ComplexRational(-1)}, {rat(3, 2), ComplexRational(-1)}}, rat(10));
    REQUIRE(u.valuation().has_value());
    CHECK(*u.valuation() == rat(0));
    CHECK(u.is_unit());
    CHECK(!x.is_unit());
    CHECK(!NovikovElement::zero(rat(10)).is_unit());
}

TEST_CASE("addition") {
    auto one_plus_T = elt({{rat(0), ComplexRational(1)}, {rat(1), ComplexRational(1)}}, rat(10));
    auto minus_one = NovikovElement::constant(ComplexRational(-1), rat(10));
    auto s = one_plus_T + minus_one;
    CHECK(s == NovikovElement::monomial(ComplexRational(1), rat(1), rat(10)));

    auto x = elt({{rat(1, 3), ComplexRational(7)}}, rat(10));
    CHECK(x + NovikovElement::zero(rat(10)) == x);
    CHECK((x + (-x)).is_zero());

    auto other_trunc = NovikovElement::one(rat(5));
    CHECK_THROWS_AS(x + other_trunc, std::invalid_argument);
}

TEST_CASE("multiplication") {
    auto one_plus_T = elt({{rat(0), ComplexRational(1)}, {rat(1), ComplexRational(1)}}, rat(10));
    auto one_minus_T = elt({{rat(0), ComplexRational(1)}, {rat(1), ComplexRational(-1)}}, rat(10));
    auto p = one_plus_T * one_minus_T;
    CHECK(p == elt({{rat(0), ComplexRational(1)}, {rat(2), ComplexRational(-1)}}, rat(10)));

    auto x = elt({{rat(1, 2), ComplexRational(Rational(2), Rational(1))}}, rat(10));
    CHECK(x * NovikovElement::one(rat(10)) == x);

    auto half = NovikovElement::monomial(ComplexRational(1), rat(1, 2), rat(10));
    CHECK(half * half == NovikovElement::monomial(ComplexRational(1), rat(1), rat(10)));

    CHECK_THROWS_AS(x * NovikovElement::one(rat(5)), std::invalid_argument);

    // truncation drops high-order part of products
    auto near = NovikovElement::monomial(ComplexRational(1), rat(6), rat(10));
    CHECK((near * near).is_zero());
}

TEST_CASE("invert_unit on pinned examples") {
    Rational tr(4);
    auto one_plus_T = elt({{rat(0), ComplexRational(1)}, {rat(1), ComplexRational(1)}}, tr);
    auto inv = one_plus_T.invert_unit();
    CHECK(inv == elt({{rat(0), ComplexRational(1)},
                      {rat(1), ComplexRational(-1)},
                      {rat(2), ComplexRational(1)},
                      {rat(3), ComplexRational(-1)}},
                     tr));

    auto minus_one = NovikovElement::constant(ComplexRational(-1), tr);
    CHECK(minus_one.invert_unit() == minus_one);

    auto u = elt({{rat(0), ComplexRational(-1)}, {rat(3, 2), ComplexRational(-1)}}, tr);
    auto uinv = u.invert_unit();
    CHECK(uinv == elt({{rat(0), ComplexRational(-1)},
                       {rat(3, 2), ComplexRational(1)},
                       {rat(3), ComplexRational(-1)}},
                      tr));
    auto residual = u * uinv - NovikovElement::one(tr);
    CHECK(residual.is_zero());

    CHECK_THROWS_AS(NovikovElement::monomial(ComplexRational(1), rat(1, 2), tr).invert_unit(),
                    std::domain_error);
    CHECK_THROWS_AS(NovikovElement::zero(tr).invert_unit(), std::domain_error);
}

TEST_CASE("power") {
    Rational tr(4);
    auto one_plus_T = elt({{rat(0), ComplexRational(1)}, {rat(1), ComplexRational(1)}}, tr);
    CHECK(one_plus_T.power(2) == elt({{rat(0), ComplexRational(1)},
                                      {rat(1), ComplexRational(2)},
                                      {rat(2), ComplexRational(1)}},
                                     tr));
    auto x = elt({{rat(1, 2), ComplexRational(5)}}, tr);
    CHECK(x.power(0) == NovikovElement::one(tr));

    auto m = elt({{rat(0), ComplexRational(-1)}, {rat(1), ComplexRational(-1)}}, tr);
    CHECK(m.power(-2) == elt({{rat(0), ComplexRational(1)},
                              {rat(1), ComplexRational(-2)},
                              {rat(2), ComplexRational(3)},
                              {rat(3), ComplexRational(-4)}},
                             tr));
    // multiply back twice: residual vanishes modulo truncation
    CHECK((m.power(-2) * m * m - NovikovElement::one(tr)).is_zero());

    CHECK_THROWS_AS(x.power(-1), std::domain_error);
}

TEST_CASE("shift and truncate_to") {
    auto x = elt({{rat(1), ComplexRational(1)}, {rat(2), ComplexRational(2)}}, rat(4));
    auto up = x.shift(rat(1, 2));
    CHECK(up.truncation() == rat(9, 2));
    REQUIRE(up.terms().size() == 2);
    CHECK(up.terms()[0].exp == rat(3, 2));

    auto down = x.shift(rat(-1));
    CHECK(down.truncation() == rat(3));
    CHECK(*down.valuation() == rat(0));

    auto cut = x.truncate_to(rat(2));
    CHECK(cut.truncation() == rat(2));
    CHECK(cut.terms().size() == 1);
    CHECK_THROWS_AS(x.truncate_to(rat(5)), std::invalid_argument);
}

TEST_CASE("json round trip") {
    Rational tr(4);
    auto x = elt({{rat(0), ComplexRational(Rational(-1), Rational(1, 2))},
                  {rat(3, 2), ComplexRational(Rational(2, 3))}},
                 tr);
    nlohmann::ordered_json j = gzfloer::to_json(x);
    CHECK(j["trunc"] == "4");
    REQUIRE(j["terms"].size() == 2);
    CHECK(j["terms"][0]["exp"] == "0");
    CHECK(j["terms"][0]["re"] == "-1");
    CHECK(j["terms"][0]["im"] == "1/2");
    CHECK(j["terms"][1]["exp"] == "3/2");
    CHECK(j["terms"][1]["re"] == "2/3");
    CHECK(j["terms"][1]["im"] == "0");
    auto back = gzfloer::novikov_from_json(j);
    CHECK(back == x);

    auto z = NovikovElement::zero(tr);
    CHECK(gzfloer::novikov_from_json(gzfloer::to_json(z)) == z);
}

namespace {

struct RandomNovikov {
    std::mt19937_64 rng{0x9e3779b97f4a7c15ull};
    Rational trunc{4};

    Rational random_exp() {
        static const int dens[] = {1, 2, 3, 4, 6};
        std::uniform_int_distribution<int> dd(0, 4);
        std::uniform_int_distribution<int> nn(0, 20);
        return Rational(nn(rng), dens[dd(rng)]);
    }

    ComplexRational random_coeff() {
        std::uniform_int_distribution<int> cc(-3, 3);
        return {Rational(cc(rng)), Rational(cc(rng))};
    }

    NovikovElement random_element() {
        std::uniform_int_distribution<int> tn(0, 5);
        int k = tn(rng);
        std::vector<NovikovTerm> ts;
        for (int i = 0; i < k; ++i) {
            auto c = random_coeff();
            if (c.is_zero()) continue;
            ts.push_back({random_exp(), c});
        }
        return NovikovElement(std::move(ts), trunc);
    }

    NovikovElement random_unit() {
        auto x = random_element();
        auto v = x.valuation();
        if (v && *v == 0) return x;
        return x + NovikovElement::constant(ComplexRational(1), trunc);
    }
};

std::optional<Rational> val(const NovikovElement& x) { return x.valuation(); }

} // namespace

TEST_CASE("randomized ring and valuation properties") {
    RandomNovikov gen;
    const Rational tr = gen.trunc;
    int failures = 0;
    for (int iter = 0; iter < 1000; ++iter) {
        auto x = gen.random_element();
        auto y = gen.random_element();
        auto z = gen.random_element();

        if (!((x + y) + z == x + (y + z))) ++failures;
        if (!(x * (y + z) == x * y + x * z)) ++failures;
        if (!((x * y) * z == x * (y * z))) ++failures;

        // valuation multiplicativity modulo truncation
        auto vx = val(x), vy = val(y);
        auto p = x * y;
        if (vx && vy) {
            if (*vx + *vy < tr) {
                if (!(val(p) && *val(p) == *vx + *vy)) ++failures;
            } else if (!p.is_zero()) {
                ++failures;
            }
        } else if (!p.is_zero()) {
            ++failures;
        }

        // ultrametric inequality, with equality at distinct valuations
        auto s = x + y;
        if (!s.is_zero()) {
            Rational vs = *val(s);
            if (vx && vy) {
                if (vs < std::min(*vx, *vy)) ++failures;
                if (*vx != *vy && vs != std::min(*vx, *vy)) ++failures;
            } else if (vx || vy) {
                Rational only = vx ? *vx : *vy;
                if (vs != only) ++failures;
            }
        }

        // unit inversion round trip
        auto u = gen.random_unit();
        auto r = u * u.invert_unit() - NovikovElement::one(tr);
        if (!r.is_zero()) {
            auto vr = val(r);
            if (!vr || *vr < tr) ++failures;
        }

        // power consistency
        if (!(x.power(2) == x * x)) ++failures;
    }
    CHECK(failures == 0);
}
