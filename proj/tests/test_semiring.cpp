#include <doctest.h>

#include "resmat/catalog.hpp"
#include "resmat/errors.hpp"
#include "resmat/oracle.hpp"
#include "resmat/semiring.hpp"

using namespace resmat;

namespace {

// Componentwise product B x B with elements 00, 01, 10, 11.
SemiringPtr bool_squared() {
    std::vector<Element> add(16), mul(16);
    for (Element x = 0; x < 4; ++x)
        for (Element y = 0; y < 4; ++y) {
            add[x * 4 + y] = x | y;
            mul[x * 4 + y] = x & y;
        }
    return validate_semiring({"00", "01", "10", "11"}, add, mul, 0, 3);
}

std::vector<SemiringPtr> catalog_semirings() {
    std::vector<SemiringPtr> out;
    for (const auto &e : catalog::entries())
        if (e.kind == catalog::Kind::Semiring) out.push_back(e.semiring());
    out.push_back(bool_squared());
    return out;
}

} // namespace

TEST_CASE("validate_semiring") {
    CHECK_NOTHROW(validate_semiring({"0", "1"}, {0, 1, 1, 1}, {0, 0, 0, 1}, 0, 1));

    try {
        validate_semiring({"0", "1"}, {0, 1, 1, 0}, {0, 0, 0, 1}, 0, 1);
        FAIL("Z/2 is not additively idempotent");
    } catch (const AxiomViolation &e) {
        CHECK(e.axiom() == "additive idempotence");
        CHECK(e.witness() == std::vector<std::size_t>{1});
    }

    try {
        validate_semiring({"0", "1"}, {0, 1, 1, 1}, {1, 1, 1, 0}, 0, 1);
        FAIL("swapped multiplication table");
    } catch (const AxiomViolation &e) {
        CHECK(e.axiom() == "zero is multiplicatively absorbing");
    }

    CHECK_THROWS_AS(validate_semiring({"0", "1"}, {0, 1, 1}, {0, 0, 0, 1}, 0, 1), Error);
    CHECK_THROWS_AS(validate_semiring({"0", "0"}, {0, 1, 1, 1}, {0, 0, 0, 1}, 0, 1), Error);
}

TEST_CASE("validate_semiring catches a distributivity failure") {
    // {0, 1, 2} with max as addition and a multiplication that is not monotone
    std::vector<Element> add(9), mul(9);
    for (Element x = 0; x < 3; ++x)
        for (Element y = 0; y < 3; ++y) {
            add[x * 3 + y] = std::max(x, y);
            mul[x * 3 + y] = (x == 0 || y == 0) ? 0 : (x == 1 ? y : (y == 1 ? 2 : 1));
        }
    try {
        validate_semiring({"0", "1", "2"}, add, mul, 0, 1);
        FAIL("expected an axiom violation");
    } catch (const AxiomViolation &e) {
        CHECK(e.witness().size() == 3);
    }
}

TEST_CASE("natural_order_lattice") {
    auto B = catalog::boolean();
    auto L = natural_order_lattice(*B);
    CHECK(L->size() == 2);
    CHECK(L->leq(0, 1));
    CHECK_FALSE(L->leq(1, 0));

    // Res(2-chain) = {zero, id}
    auto res2 = full_residuated_semiring(catalog::chain(2)).to_semiring();
    auto L2 = natural_order_lattice(*res2);
    CHECK(find_isomorphism(*L2, *catalog::chain(2)));
    CHECK(L2->bottom() == res2->zero());

    for (const auto &R : catalog_semirings()) {
        auto N = natural_order_lattice(*R);
        for (Element x = 0; x < R->size(); ++x)
            for (Element y = 0; y < R->size(); ++y) CHECK(N->join(x, y) == R->add(x, y));
        CHECK(N->bottom() == R->zero());
    }
}

TEST_CASE("embed") {
    auto B = catalog::boolean();
    auto T = embed(*B);
    CHECK(T.maps[0].is_zero());
    CHECK(T.maps[1].is_identity());

    for (const auto &R : catalog_semirings()) {
        CAPTURE(R->size());
        auto E = embed(*R);
        CHECK(E.maps[R->one()].is_identity());
        CHECK(E.maps[R->zero()].is_zero());
        for (Element r = 0; r < R->size(); ++r) {
            CHECK(pullback_element(E.maps[r], *R) == r);
            for (Element s = 0; s < R->size(); ++s) {
                if (r != s) CHECK_FALSE(E.maps[r] == E.maps[s]);
                CHECK(E.maps[R->add(r, s)] == pointwise_join(E.maps[r], E.maps[s]));
                CHECK(E.maps[R->mul(r, s)] == compose(E.maps[r], E.maps[s]));
            }
        }
    }
}

TEST_CASE("pullback_element rejects maps outside the image") {
    auto R = bool_squared();
    auto E = embed(*R);
    std::size_t outside = 0;
    for (const auto &f : all_residuated_maps(E.lattice)) {
        bool in_image = std::find(E.maps.begin(), E.maps.end(), f) != E.maps.end();
        if (in_image) {
            CHECK_NOTHROW(pullback_element(f, *R));
            continue;
        }
        ++outside;
        try {
            pullback_element(f, *R);
            FAIL("expected NotInImage");
        } catch (const Error &e) {
            CHECK(e.kind() == ErrorKind::NotInImage);
        }
    }
    // Res(B2) has 16 maps and T(B x B) has 4
    CHECK(outside == 12);
    CHECK(pullback_element(ResiduatedMap::identity(E.lattice), *R) == R->one());
}

TEST_CASE("generate_simple_semiring") {
    auto g2 = generate_simple_semiring(catalog::chain(2));
    CHECK(g2.size() == 2);
    REQUIRE(g2.one);
    CHECK(g2.elements[g2.zero].is_zero());

    auto c3 = catalog::chain(3);
    auto g3 = generate_simple_semiring(c3);
    CHECK(g3.size() == 6);
    auto all = all_residuated_maps(c3);
    for (const auto &f : all) CHECK(std::find(g3.elements.begin(), g3.elements.end(), f) != g3.elements.end());
    CHECK_NOTHROW(g3.to_semiring());

    auto sq = catalog::square();
    auto gs = generate_simple_semiring(sq, {ResiduatedMap::identity(sq)});
    CHECK(gs.one.has_value());
    CHECK(gs.size() == 16);

    try {
        generate_simple_semiring(catalog::chain(4), {}, 5);
        FAIL("expected ClosureTooLarge");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::ClosureTooLarge);
    }
}

TEST_CASE("generated closure is closed and lacks a one when identity is unreachable") {
    // A single-element lattice: every map is both zero and identity.
    auto g1 = generate_simple_semiring(catalog::chain(1));
    CHECK(g1.size() == 1);
    CHECK(g1.one.has_value());

    for (const auto &L : {catalog::chain(2), catalog::chain(3), catalog::chain(4), catalog::square(), catalog::m3()}) {
        auto g = generate_simple_semiring(L);
        for (std::size_t i = 0; i < g.size(); ++i)
            for (std::size_t j = 0; j < g.size(); ++j) {
                CHECK(g.elements[g.add[i * g.size() + j]] == pointwise_join(g.elements[i], g.elements[j]));
                CHECK(g.elements[g.mul[i * g.size() + j]] == compose(g.elements[i], g.elements[j]));
            }
    }
}

TEST_CASE("property: generated semirings on lattices with at most 4 elements are simple") {
    for (const auto &L : {catalog::chain(2), catalog::chain(3), catalog::chain(4), catalog::square()}) {
        auto g = generate_simple_semiring(L);
        if (!g.one) continue;
        CAPTURE(g.size());
        if (g.size() <= oracle::max_congruence_semiring) {
            const auto congs = oracle::semiring_congruences(g);
            CHECK(congs.size() == 2);
        }
        CHECK(oracle::is_simple(g.size(), g.add, g.mul));
    }
}
