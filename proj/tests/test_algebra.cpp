#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fano/jacobian.hpp"
#include "fano/parse.hpp"
#include "fano/polynomial.hpp"
#include "fano/rng.hpp"

#include <sstream>

using namespace fano;

namespace {

RingPtr ring_xy_fp(std::uint32_t p = 32003) { return make_ring({"x", "y"}, FieldDesc::prime(p)); }

PolyFp parse_fp(const RingPtr& R, const std::string& s) { return detail::parse_poly_line<Fp>(R, s, 1); }

PolyFp random_poly(const RingPtr& R, Rng& rng, int max_terms = 6, int max_exp = 4) {
    std::vector<Term<Fp>> ts;
    int nt = 1 + static_cast<int>(rng.mod(max_terms));
    for (int i = 0; i < nt; ++i) {
        std::vector<std::uint16_t> e;
        for (std::size_t v = 0; v < R->arity(); ++v) e.push_back(static_cast<std::uint16_t>(rng.mod(max_exp + 1)));
        ts.push_back({Monomial(std::move(e)), Fp(rng.mod(R->field.p), R->field.p)});
    }
    return PolyFp::from_terms(R, std::move(ts));
}

std::vector<Fp> random_point(const RingPtr& R, Rng& rng) {
    std::vector<Fp> pt;
    for (std::size_t v = 0; v < R->arity(); ++v) pt.emplace_back(rng.mod(R->field.p), R->field.p);
    return pt;
}

}  // namespace

TEST_CASE("prime field inverse") {
    CHECK(Fp(3, 7).inverse() == Fp(5, 7));
    CHECK(Fp(1, 7).inverse() == Fp(1, 7));
    CHECK(Fp(1, 32003).inverse() == Fp(1, 32003));
    CHECK_THROWS_AS(Fp(0, 7).inverse(), DivisionByZero);
    for (std::uint32_t a = 1; a < 101; ++a) CHECK((Fp(a, 101) * Fp(a, 101).inverse()).is_one());
}

TEST_CASE("rational inverse and canonical form") {
    Rational q(2, 3);
    CHECK(q.inverse() == Rational(3, 2));
    CHECK(Rational(-4, -6) == Rational(2, 3));
    CHECK(Rational(1).inverse() == Rational(1));
    CHECK_THROWS_AS(Rational(0).inverse(), DivisionByZero);
}

TEST_CASE("field construction rejects composite characteristic") {
    CHECK_THROWS_AS(FieldDesc::prime(32001), std::invalid_argument);
    CHECK_NOTHROW(FieldDesc::prime(32003));
    CHECK_NOTHROW(FieldDesc::prime(31013));
}

TEST_CASE("polynomial add and mul") {
    auto R = ring_xy_fp();
    auto x = PolyFp::variable(R, 0), y = PolyFp::variable(R, 1);
    CHECK((x + y) + (x - y) == x.scaled(Fp(2, 32003)));
    CHECK((x + y) * (x - y) == x * x - y * y);
    CHECK((x * y * y + x).is_zero() == false);
    CHECK(((x + y) * PolyFp::zero(R)).is_zero());
    // ring mismatch
    auto R2 = make_ring({"x", "y", "z"}, FieldDesc::prime(32003));
    CHECK_THROWS_AS(x + PolyFp::variable(R2, 0), RingMismatch);
}

TEST_CASE("no zero terms are stored") {
    auto R = ring_xy_fp(7);
    auto x = PolyFp::variable(R, 0);
    auto f = x.scaled(Fp(3, 7)) + x.scaled(Fp(4, 7));
    CHECK(f.is_zero());
    CHECK(f.term_count() == 0);
}

TEST_CASE("evaluate") {
    auto R6 = make_ring({"z00", "z01", "z02", "z10", "z11", "z12"}, FieldDesc::prime(32003));
    auto q = parse_fp(R6, "z00*z11 - z01*z10");
    std::vector<Fp> e00;
    for (int i = 0; i < 6; ++i) e00.emplace_back(i == 0 ? 1 : 0, 32003);
    CHECK(q.evaluate(e00).is_zero());

    auto R1 = make_ring({"x"}, FieldDesc::prime(7));
    auto f = parse_fp(R1, "x^2");
    CHECK(f.evaluate({Fp(3, 7)}) == Fp(2, 7));

    auto c = PolyFp::constant(R1, 5);
    CHECK(c.evaluate({Fp(123, 7)}) == Fp(5, 7));
}

TEST_CASE("substitute: scroll relations vanish on the scroll parametrization") {
    auto Rz = make_ring({"z00", "z01", "z02", "z10", "z11", "z12"}, FieldDesc::prime(32003));
    auto Rxy = make_ring({"x0", "x1", "y0", "y1"}, FieldDesc::prime(32003));
    // z_ij -> x_i y0^{2-j} y1^j
    std::vector<PolyFp> scroll;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) {
            auto f = PolyFp::variable(Rxy, i) * PolyFp::variable(Rxy, 2, static_cast<std::uint16_t>(2 - j)) *
                     PolyFp::variable(Rxy, 3, static_cast<std::uint16_t>(j));
            scroll.push_back(f);
        }
    CHECK(parse_fp(Rz, "z00*z02 - z01^2").substitute(scroll).is_zero());
    CHECK(parse_fp(Rz, "z00*z12 - z01*z11").substitute(scroll).is_zero());
    auto f = parse_fp(Rz, "z00*z11 - z01*z10 + z02");
    // identity substitution
    std::vector<PolyFp> id;
    for (std::size_t i = 0; i < 6; ++i) id.push_back(PolyFp::variable(Rz, i));
    CHECK(f.substitute(id) == f);
    CHECK_THROWS_AS(f.substitute(std::vector<PolyFp>{}), ArityMismatch);
}

TEST_CASE("jacobian examples") {
    auto R = ring_xy_fp();
    auto f = parse_fp(R, "x^2 + y^2 - 1");
    auto J = jacobian_matrix<Fp>({f}, {Fp(1, 32003), Fp(0, 32003)});
    CHECK(J.at(0, 0) == Fp(2, 32003));
    CHECK(J.at(0, 1) == Fp(0, 32003));

    auto g = parse_fp(R, "x*y");
    auto J2 = jacobian_matrix<Fp>({g}, {Fp(0, 32003), Fp(0, 32003)});
    CHECK(J2.at(0, 0).is_zero());
    CHECK(J2.at(0, 1).is_zero());

    auto R6 = make_ring({"z00", "z01", "z02", "z10", "z11", "z12"}, FieldDesc::prime(32003));
    auto q = parse_fp(R6, "z00*z11 - z01*z10");
    std::vector<Fp> e00;
    for (int i = 0; i < 6; ++i) e00.emplace_back(i == 0 ? 1 : 0, 32003);
    auto J3 = jacobian_matrix<Fp>({q}, e00);
    for (int j = 0; j < 6; ++j) {
        if (j == 4)
            CHECK(J3.at(0, j).is_one());
        else
            CHECK(J3.at(0, j).is_zero());
    }
}

TEST_CASE("evaluate and substitute are ring homomorphisms on random inputs") {
    auto R = make_ring({"x", "y", "z"}, FieldDesc::prime(32003));
    Rng rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        auto f = random_poly(R, rng), g = random_poly(R, rng);
        auto P = random_point(R, rng);
        CHECK((f + g).evaluate(P) == f.evaluate(P) + g.evaluate(P));
        CHECK((f * g).evaluate(P) == f.evaluate(P) * g.evaluate(P));
    }
    auto T = ring_xy_fp();
    for (int trial = 0; trial < 15; ++trial) {
        auto f = random_poly(R, rng, 4, 3), g = random_poly(R, rng, 4, 3);
        std::vector<PolyFp> images;
        for (int i = 0; i < 3; ++i) images.push_back(random_poly(T, rng, 3, 2));
        CHECK((f * g).substitute(images) == f.substitute(images) * g.substitute(images));
        CHECK((f + g).substitute(images) == f.substitute(images) + g.substitute(images));
    }
}

TEST_CASE("jacobian agrees with symbolic derivative then evaluate") {
    auto R = make_ring({"x", "y", "z"}, FieldDesc::prime(32003));
    Rng rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        auto f = random_poly(R, rng);
        auto P = random_point(R, rng);
        auto J = jacobian_matrix<Fp>({f}, P);
        for (std::size_t j = 0; j < 3; ++j) CHECK(J.at(0, j) == f.derivative(j).evaluate(P));
    }
}

TEST_CASE("monomial order axioms on random triples") {
    Rng rng(7);
    std::vector<MonomialOrder> orders = {MonomialOrder::lex(), MonomialOrder::grevlex(), MonomialOrder::block_elim(2)};
    auto random_monomial = [&](std::size_t n) {
        std::vector<std::uint16_t> e;
        for (std::size_t i = 0; i < n; ++i) e.push_back(static_cast<std::uint16_t>(rng.mod(5)));
        return Monomial(std::move(e));
    };
    for (const auto& ord : orders) {
        int checked = 0;
        for (int trial = 0; trial < 1100; ++trial) {
            auto a = random_monomial(4), b = random_monomial(4), c = random_monomial(4);
            // totality
            int cmp = ord.compare(a, b);
            CHECK(((cmp == 0) == (a == b)));
            // multiplicativity: a < b implies ac < bc
            if (cmp < 0) CHECK(ord.compare(a * c, b * c) < 0);
            // 1 <= m in global orders
            Monomial one(4);
            CHECK(ord.compare(one, a) <= 0);
            ++checked;
        }
        CHECK(checked >= 1000);
    }
}

TEST_CASE("block elimination order property") {
    auto ord = MonomialOrder::block_elim(2);
    Rng rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::uint16_t> a{static_cast<std::uint16_t>(1 + rng.mod(4)), static_cast<std::uint16_t>(rng.mod(4)),
                                     static_cast<std::uint16_t>(rng.mod(4)), static_cast<std::uint16_t>(rng.mod(4))};
        std::vector<std::uint16_t> b{0, 0, static_cast<std::uint16_t>(rng.mod(9)),
                                     static_cast<std::uint16_t>(rng.mod(9))};
        CHECK(ord.greater(Monomial(a), Monomial(b)));
    }
}

TEST_CASE("text format round trip and canonical form") {
    std::istringstream in(
        "ring vars=x,y field=Fp:32003 order=grevlex\n"
        "ideal\n"
        "x^2 + y^2 - 1\n"
        " x - y\n");
    auto file = parse_ideal_file(in);
    const auto& polys = std::get<std::vector<PolyFp>>(file.polys);
    REQUIRE(polys.size() == 2);
    // F_p coefficients serialize as canonical representatives in [0, p)
    CHECK(to_string(polys[0]) == "x^2 + y^2 + 32002");
    CHECK(to_string(polys[1]) == "x + 32002*y");
    // whitespace-insensitive
    auto R = file.ring;
    CHECK(parse_fp(R, "x ^ 2+y^2- 1") == polys[0]);
    CHECK(parse_fp(R, "3*x*y^2") == parse_fp(R, "3 * x * y ^ 2"));
}

TEST_CASE("parse errors carry position") {
    auto R = ring_xy_fp();
    CHECK_THROWS_AS(parse_fp(R, "x^^2"), ParseError);
    CHECK_THROWS_AS(parse_fp(R, "x++y"), ParseError);
    CHECK_THROWS_AS(parse_fp(R, "w"), ParseError);
    try {
        parse_fp(R, "x^^2");
    } catch (const ParseError& e) {
        CHECK(e.line == 1);
        CHECK(e.col == 3);
    }
}

TEST_CASE("rational polynomial text") {
    std::istringstream in(
        "ring vars=x,y field=QQ order=lex\n"
        "2/3*x - y\n");
    auto file = parse_ideal_file(in);
    const auto& polys = std::get<std::vector<PolyQ>>(file.polys);
    REQUIRE(polys.size() == 1);
    CHECK(to_string(polys[0], file.order) == "2/3*x - y");
}
