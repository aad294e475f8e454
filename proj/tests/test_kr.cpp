#include <doctest.h>

#include "commat/kr.hpp"
#include "commat/parse.hpp"
#include "test_util.hpp"

using namespace commat;

namespace {

bool is_canonical(const KRElement& e) {
    for (const auto& [m, c] : e.terms()) {
        if (c == 0) return false;
        if (m.a_exp >= 1 && m.w_exp >= 1) return false;
        if (m.w_exp >= 2) return false;
        if (m.a_exp >= 3 && m.v_exp >= 1) return false;
        if (m.a_exp >= 1 && c != 1) return false;
    }
    return true;
}

KRElement recanonicalize(const KRElement& e) {
    KRElement out;
    for (const auto& [m, c] : e.terms()) out.add_term(m, c);
    return out;
}

}  // namespace

TEST_SUITE("kr") {

TEST_CASE("defining relations") {
    KRElement a = KRElement::gen_a();
    KRElement w = KRElement::gen_w();
    KRElement U = KRElement::gen_u_cap();
    KRElement vb = KRElement::gen_vb();

    CHECK(kr_mul(w, w) == Int(4) * U);                                    // w^2 = 4U
    CHECK(kr_mul(a, w).is_zero());                                        // aw = 0
    CHECK((Int(2) * a).is_zero());                                        // 2a = 0
    CHECK(kr_mul(kr_mul(kr_pow(a, 3), vb), KRElement::one()).is_zero());  // a^3 vb = 0

    // unit
    KRElement au = kr_mul(a, U);
    CHECK(kr_mul(KRElement::one(), au) == au);
}

TEST_CASE("ko subring presentation") {
    KRElement eta = kr_mul(KRElement::gen_a(), KRElement::gen_vb());
    KRElement x = kr_mul(KRElement::gen_w(), kr_pow(KRElement::gen_vb(), 2));
    KRElement y = kr_mul(KRElement::gen_u_cap(), kr_pow(KRElement::gen_vb(), 4));

    CHECK((Int(2) * eta).is_zero());    // 2 eta = 0
    CHECK(kr_mul(eta, x).is_zero());    // eta x = 0
    CHECK(kr_pow(eta, 3).is_zero());    // eta^3 = 0
    CHECK(kr_mul(x, x) == Int(4) * y);  // x^2 = 4y
    CHECK(!kr_pow(eta, 2).is_zero());
}

TEST_CASE("group_at examples") {
    CHECK(kr_group_at({0, -1}) == FinAbGroup{0, 1});  // the class a
    CHECK(kr_group_at({1, 1}) == FinAbGroup{1, 0});   // the Bott class
    CHECK(kr_group_at({2, -2}) == FinAbGroup{1, 0});  // the class w
    CHECK(kr_group_at({0, 0}) == FinAbGroup{1, 0});   // the unit
    CHECK_THROWS_AS(kr_group_at({0, 5}), OutOfRegion);
}

TEST_CASE("ko bott pattern") {
    const FinAbGroup pattern[8] = {{1, 0}, {0, 1}, {0, 1}, {0, 0},
                                   {1, 0}, {0, 0}, {0, 0}, {0, 0}};
    for (int d = 0; d <= 48; ++d) CHECK(ko_group(d) == pattern[d % 8]);
    CHECK(ko_group(-1) == FinAbGroup{});
    CHECK(ko_group(1) == FinAbGroup{0, 1});  // eta
    CHECK(ko_group(4) == FinAbGroup{1, 0});  // x
    CHECK(ko_group(3) == FinAbGroup{});
}

TEST_CASE("parse examples") {
    KRElement e = parse_kr("a^2*U*vb");
    CHECK(e == KRElement::monomial({.a_exp = 2, .w_exp = 0, .u_cap_exp = 1, .v_exp = 1}, 1));
    CHECK(parse_kr("2*a").is_zero());
    CHECK(parse_kr("w^2") == parse_kr("4*U"));
    CHECK(render(parse_kr("w^2")) == "4*U");
}

TEST_CASE("canonicalization is idempotent and products are canonical") {
    testutil::Rng rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        KRElement x = testutil::random_kr_element(rng);
        KRElement y = testutil::random_kr_element(rng);
        KRElement p = kr_mul(x, y);
        CHECK(is_canonical(p));
        CHECK(recanonicalize(p) == p);
        CHECK(is_canonical(x));
        CHECK(recanonicalize(x) == x);
    }
}

TEST_CASE("associativity and commutativity on random triples") {
    testutil::Rng rng(37);
    for (int trial = 0; trial < 200; ++trial) {
        KRElement x = testutil::random_kr_element(rng);
        KRElement y = testutil::random_kr_element(rng);
        KRElement z = testutil::random_kr_element(rng);
        CHECK(kr_mul(x, y) == kr_mul(y, x));
        CHECK(kr_mul(kr_mul(x, y), z) == kr_mul(x, kr_mul(y, z)));
    }
}

TEST_CASE("degree additivity on homogeneous inputs") {
    testutil::Rng rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        KRElement x = testutil::random_kr_monomial(rng);
        KRElement y = testutil::random_kr_monomial(rng);
        if (x.is_zero() || y.is_zero()) continue;
        KRElement p = kr_mul(x, y);
        if (p.is_zero()) continue;
        CHECK(p.is_homogeneous());
        CHECK(*p.degree() == *x.degree() + *y.degree());
    }
}

TEST_CASE("figure window") {
    auto cells = testutil::load_window("fig1_window.dat");
    for (int p = -12; p <= 12; ++p)
        for (int q = -12; q <= std::min(p, 12); ++q) {
            FinAbGroup expected = testutil::window_lookup(cells, p, q);
            FinAbGroup actual = kr_group_at({p, q});
            CAPTURE(p);
            CAPTURE(q);
            CHECK(expected == actual);
        }
}

}
