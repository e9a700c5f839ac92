#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fano/groebner.hpp"
#include "fano/parse.hpp"

#include <set>

using namespace fano;

namespace {

constexpr std::uint32_t P = 32003;

PolyFp pf(const RingPtr& R, const std::string& s) { return detail::parse_poly_line<Fp>(R, s, 1); }

Ideal<Fp> ideal_of(const RingPtr& R, std::initializer_list<std::string> gens) {
    std::vector<PolyFp> v;
    for (const auto& s : gens) v.push_back(pf(R, s));
    return Ideal<Fp>(R, std::move(v));
}

/// Scroll label pairs (00,01,02,10,11,12); Plucker ring for G(1,5).
RingPtr plucker_ring() {
    std::vector<std::string> vars;
    const char* labels[6] = {"00", "01", "02", "10", "11", "12"};
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b) vars.push_back(std::string("p") + labels[a] + "_" + labels[b]);
    return make_ring(std::move(vars), FieldDesc::prime(P));
}

std::size_t pair_index(int a, int b) {
    // index of (a,b), a<b, in lexicographic pair order over 6 labels
    std::size_t idx = 0;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) {
            if (i == a && j == b) return idx;
            ++idx;
        }
    throw std::logic_error("bad pair");
}

/// The 15 three-term Grassmann-Plucker relations of G(1,5).
std::vector<PolyFp> plucker_relations(const RingPtr& R) {
    std::vector<PolyFp> rels;
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b)
            for (int c = b + 1; c < 6; ++c)
                for (int d = c + 1; d < 6; ++d) {
                    auto p = [&](int i, int j) { return PolyFp::variable(R, pair_index(i, j)); };
                    rels.push_back(p(a, b) * p(c, d) - p(a, c) * p(b, d) + p(a, d) * p(b, c));
                }
    return rels;
}

bool reduces_to_zero(const PolyFp& f, const GroebnerBasis<Fp>& G) { return normal_form(f, G).is_zero(); }

void check_spolys_reduce(const GroebnerBasis<Fp>& G) {
    for (std::size_t i = 0; i < G.elements.size(); ++i)
        for (std::size_t j = i + 1; j < G.elements.size(); ++j) {
            const auto& f = G.elements[i];
            const auto& g = G.elements[j];
            auto ltf = f.leading_term(G.order);
            auto ltg = g.leading_term(G.order);
            Monomial l = ltf.m.lcm(ltg.m);
            PolyFp s = f.times_term(ltf.c.inverse(), l / ltf.m) - g.times_term(ltg.c.inverse(), l / ltg.m);
            CHECK(reduces_to_zero(s, G));
        }
}

}  // namespace

TEST_CASE("buchberger hand oracle: circle and diagonal, lex") {
    auto R = make_ring({"x", "y"}, FieldDesc::prime(P));
    auto I = ideal_of(R, {"x^2 + y^2 - 1", "x - y"});
    const auto& G = I.groebner(MonomialOrder::lex());
    REQUIRE(G.elements.size() == 2);
    std::set<std::string> got;
    for (const auto& g : G.elements) got.insert(to_string(g, G.order));
    // 2^{-1} mod 32003 = 16002
    std::set<std::string> want = {"x + 32002*y", "y^2 + 16001"};
    CHECK(got == want);
    check_spolys_reduce(G);
}

TEST_CASE("buchberger: principal ideal") {
    auto R = make_ring({"x", "y"}, FieldDesc::prime(P));
    auto I = ideal_of(R, {"3*x"});
    for (auto ord : {MonomialOrder::lex(), MonomialOrder::grevlex()}) {
        const auto& G = I.groebner(ord);
        REQUIRE(G.elements.size() == 1);
        CHECK(to_string(G.elements[0], ord) == "x");
    }
}

TEST_CASE("normal form examples") {
    auto R = make_ring({"x", "y"}, FieldDesc::prime(P));
    auto I = ideal_of(R, {"x^2 + y^2 - 1", "x - y"});
    const auto& G = I.groebner(MonomialOrder::lex());
    CHECK(normal_form(pf(R, "x^2 + y^2 - 1"), G).is_zero());
    CHECK(normal_form(PolyFp::constant(R, 1), G) == PolyFp::constant(R, 1));

    auto J = ideal_of(R, {"x - y"});
    const auto& GJ = J.groebner(MonomialOrder::lex());
    CHECK(normal_form(pf(R, "x^2"), GJ) == pf(R, "y^2"));
}

TEST_CASE("membership via normal form for random combinations of generators") {
    auto R = make_ring({"x", "y", "z"}, FieldDesc::prime(P));
    auto I = ideal_of(R, {"x*y - z^2", "x^2 - y*z", "y^2 - x*z"});
    const auto& G = I.groebner(MonomialOrder::grevlex());
    check_spolys_reduce(G);
    Rng rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        PolyFp combo = PolyFp::zero(R);
        for (const auto& g : I.generators()) {
            std::vector<Term<Fp>> ts;
            for (int t = 0; t < 3; ++t) {
                std::vector<std::uint16_t> e{static_cast<std::uint16_t>(rng.mod(3)),
                                             static_cast<std::uint16_t>(rng.mod(3)),
                                             static_cast<std::uint16_t>(rng.mod(3))};
                ts.push_back({Monomial(std::move(e)), Fp(rng.mod(P), P)});
            }
            combo += g * PolyFp::from_terms(R, std::move(ts));
        }
        CHECK(normal_form(combo, G).is_zero());
    }
}

TEST_CASE("deterministic canonical output") {
    auto R = make_ring({"x", "y", "z"}, FieldDesc::prime(P));
    auto mk = [&] { return ideal_of(R, {"x*y - z^2", "x^2 - y*z", "y^2 - x*z"}); };
    auto I1 = mk();
    auto I2 = Ideal<Fp>(R, {pf(R, "y^2 - x*z"), pf(R, "x^2 - y*z"), pf(R, "x*y - z^2")});  // permuted gens
    const auto& G1 = I1.groebner(MonomialOrder::grevlex());
    const auto& G2 = I2.groebner(MonomialOrder::grevlex());
    REQUIRE(G1.elements.size() == G2.elements.size());
    for (std::size_t i = 0; i < G1.elements.size(); ++i) CHECK(G1.elements[i] == G2.elements[i]);
}

TEST_CASE("eliminate: cuspidal cubic") {
    auto R = make_ring({"t", "x", "y"}, FieldDesc::prime(P));
    auto I = ideal_of(R, {"x - t^2", "y - t^3"});
    auto E = eliminate(I, 1);
    REQUIRE(E.generators().size() == 1);
    CHECK(to_string(E.generators()[0]) == "x^3 + 32002*y^2");
}

TEST_CASE("eliminate block 0 is identity") {
    auto R = make_ring({"x", "y"}, FieldDesc::prime(P));
    auto I = ideal_of(R, {"x - y"});
    auto E = eliminate(I, 0);
    CHECK(E.generators().size() == 1);
    CHECK(E.generators()[0] == I.generators()[0]);
}

TEST_CASE("eliminate: scroll graph ideal contains the paper quadrics") {
    // graph ideal z_ij - x_i y0^{2-j} y1^j, eliminate {x0,x1,y0,y1}
    auto R = make_ring({"x0", "x1", "y0", "y1", "z00", "z01", "z02", "z10", "z11", "z12"}, FieldDesc::prime(P));
    std::vector<PolyFp> gens;
    int zbase = 4;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) {
            auto rhs = PolyFp::variable(R, i) * PolyFp::variable(R, 2, static_cast<std::uint16_t>(2 - j)) *
                       PolyFp::variable(R, 3, static_cast<std::uint16_t>(j));
            gens.push_back(PolyFp::variable(R, zbase + 3 * i + j) - rhs);
        }
    auto E = eliminate(Ideal<Fp>(R, std::move(gens)), 4);
    const auto& G = E.groebner(MonomialOrder::grevlex());
    auto Rz = E.ring();
    CHECK(normal_form(pf(Rz, "z00*z11 - z01*z10"), G).is_zero());
    CHECK(normal_form(pf(Rz, "z00*z02 - z01^2"), G).is_zero());
    CHECK(normal_form(pf(Rz, "z10*z12 - z11^2"), G).is_zero());
    // elimination soundness: generators vanish at random image points
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        Fp x0(rng.mod(P), P), x1(rng.mod(P), P), y0(rng.mod(P), P), y1(rng.mod(P), P);
        std::vector<Fp> z;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 3; ++j) {
                Fp xi = i == 0 ? x0 : x1;
                Fp val = xi;
                for (int k = 0; k < 2 - j; ++k) val *= y0;
                for (int k = 0; k < j; ++k) val *= y1;
                z.push_back(val);
            }
        for (const auto& g : E.generators()) CHECK(g.evaluate(z).is_zero());
    }
}

TEST_CASE("saturate examples") {
    auto R = make_ring({"x", "y", "z"}, FieldDesc::prime(P));
    auto I = ideal_of(R, {"x*z", "y*z"});
    auto S = saturate(I, pf(R, "z"));
    const auto& G = S.groebner(MonomialOrder::grevlex());
    CHECK(normal_form(pf(R, "x"), G).is_zero());
    CHECK(normal_form(pf(R, "y"), G).is_zero());
    CHECK(!normal_form(pf(R, "z"), G).is_zero());

    auto S1 = saturate(I, PolyFp::constant(R, 1));
    const auto& G1 = S1.groebner(MonomialOrder::grevlex());
    for (const auto& g : I.generators()) CHECK(normal_form(g, G1).is_zero());
    const auto& GI = I.groebner(MonomialOrder::grevlex());
    for (const auto& g : S1.generators()) CHECK(normal_form(g, GI).is_zero());

    auto R1 = make_ring({"x"}, FieldDesc::prime(P));
    auto T = saturate(ideal_of(R1, {"x^2"}), pf(R1, "x"));
    CHECK(T.groebner(MonomialOrder::grevlex()).contains_one());
}

TEST_CASE("count_points") {
    auto R = make_ring({"x", "y"}, FieldDesc::prime(P));
    CHECK(count_points(ideal_of(R, {"x^2 - 1", "y^2 - 1"})) == 4);
    auto R1 = make_ring({"x"}, FieldDesc::prime(P));
    CHECK(count_points(ideal_of(R1, {"x"})) == 1);
    CHECK(count_points(ideal_of(R1, {"x^2"})) == 2);
    CHECK_THROWS_AS(count_points(ideal_of(R, {"x - y"})), NotZeroDimensional);
    // invariant under monomial order
    auto I = ideal_of(R, {"x^2 + y - 3", "y^3 - x"});
    CHECK(count_points(I, Budget(), MonomialOrder::grevlex()) == count_points(I, Budget(), MonomialOrder::lex()));
}

TEST_CASE("is_radical_zero_dim") {
    auto R1 = make_ring({"x"}, FieldDesc::prime(P));
    CHECK(is_radical_zero_dim(ideal_of(R1, {"x^2 - 1"}), Rng(1)));
    CHECK(!is_radical_zero_dim(ideal_of(R1, {"x^2"}), Rng(1)));
    auto R = make_ring({"x", "y"}, FieldDesc::prime(P));
    CHECK(is_radical_zero_dim(ideal_of(R, {"x^2 - 1", "y^2 - y"}), Rng(1)));
    CHECK(!is_radical_zero_dim(ideal_of(R, {"x^2 - 1", "y^2"}), Rng(1)));
}

TEST_CASE("plucker ideal of G(1,5): S-polynomials reduce to zero") {
    auto R = plucker_ring();
    Ideal<Fp> I(R, plucker_relations(R));
    CHECK(I.generators().size() == 15);
    const auto& G = I.groebner(MonomialOrder::grevlex());
    check_spolys_reduce(G);
}

TEST_CASE("timeout reports instead of returning a partial basis") {
    // random dense cubics in 6 variables with a pair budget of 1
    auto R = make_ring({"a", "b", "c", "d", "e", "f"}, FieldDesc::prime(P));
    Rng rng(3);
    std::vector<PolyFp> gens;
    for (int g = 0; g < 4; ++g) {
        std::vector<Term<Fp>> ts;
        for (int t = 0; t < 25; ++t) {
            std::vector<std::uint16_t> ex(6, 0);
            for (int d = 0; d < 3; ++d) ex[rng.mod(6)]++;
            ts.push_back({Monomial(std::move(ex)), Fp(rng.mod(P), P)});
        }
        gens.push_back(PolyFp::from_terms(R, std::move(ts)));
    }
    Ideal<Fp> I(R, std::move(gens));
    CHECK_THROWS_AS(I.groebner(MonomialOrder::grevlex(), Budget(600.0, 1)), GroebnerTimeout);
}
