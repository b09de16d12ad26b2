#include <doctest.h>

#include <algorithm>

#include "resmat/catalog.hpp"
#include "resmat/errors.hpp"
#include "resmat/oracle.hpp"
#include "support.hpp"

using namespace resmat;

TEST_CASE("TupleSpace") {
    oracle::TupleSpace space(catalog::chain(3), 2);
    CHECK(space.size() == 9);
    CHECK(space.tuple(5) == std::vector<Element>{1, 2});
    for (std::size_t i = 0; i < space.size(); ++i) CHECK(space.index(space.tuple(i)) == i);

    try {
        oracle::TupleSpace(catalog::cube(), 7);
        FAIL("expected SpaceTooLarge");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::SpaceTooLarge);
    }
}

TEST_CASE("oracle::is_invertible on small examples") {
    auto c2 = catalog::chain(2);
    auto id = ResiduatedMap::identity(c2);
    auto zero = ResiduatedMap::zero(c2);
    CHECK(oracle::is_invertible(ResMatrix::identity(c2, 3)));
    CHECK(oracle::is_invertible(ResMatrix(c2, 2, {zero, id, id, zero})));
    CHECK_FALSE(oracle::is_invertible(ResMatrix(c2, 2, {id, id, zero, id})));
    CHECK_FALSE(oracle::is_invertible(ResMatrix::zero(c2, 1)));

    auto sq = catalog::square();
    std::size_t invertible = 0;
    for (const auto &f : all_residuated_maps(sq))
        if (oracle::is_invertible(ResMatrix(sq, 1, {f}))) ++invertible;
    CHECK(invertible == 2);
}

TEST_CASE("oracle::inverse") {
    auto m3 = catalog::m3();
    auto cycle = make_map(m3, {0, *m3->find("b"), *m3->find("c"), *m3->find("a"), m3->top()});
    auto id = ResiduatedMap::identity(m3);
    auto zero = ResiduatedMap::zero(m3);
    ResMatrix M(m3, 2, {zero, cycle, id, zero});
    auto inv = oracle::inverse(M);
    CHECK(mat_mul(M, inv) == ResMatrix::identity(m3, 2));
    CHECK(mat_mul(inv, M) == ResMatrix::identity(m3, 2));

    try {
        oracle::inverse(ResMatrix::zero(m3, 1));
        FAIL("expected NotInvertible");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::NotInvertible);
    }
}

TEST_CASE("oracle::action_table is the same with several threads") {
    auto L = catalog::n5();
    const auto maps = all_residuated_maps(L);
    oracle::TupleSpace space(L, 2);
    for (std::size_t k = 0; k < 10; ++k) {
        const auto M = oracle::sweep_matrix(maps, 2, k * 7919 % (maps.size() * maps.size() * maps.size() * maps.size()));
        CHECK(oracle::action_table(M, space, 1) == oracle::action_table(M, space, 3));
    }
}

TEST_CASE("oracle::enumerate_residuated") {
    CHECK(oracle::enumerate_residuated(catalog::chain(2)).size() == 2);
    CHECK(oracle::enumerate_residuated(catalog::chain(3)).size() == 6);
    CHECK(oracle::enumerate_residuated(catalog::square()).size() == 16);
    for (const auto &L : {catalog::chain(4), catalog::m3(), catalog::n5()}) {
        std::vector<std::vector<Element>> got;
        for (const auto &f : oracle::enumerate_residuated(L)) got.push_back(f.values());
        std::sort(got.begin(), got.end());
        CHECK(got == testing::brute_force_residuated_tables(*L));
    }
    try {
        oracle::enumerate_residuated(catalog::chain(9));
        FAIL("expected LatticeTooLarge");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::LatticeTooLarge);
    }
}

TEST_CASE("oracle::semiring_congruences") {
    auto B = catalog::boolean();
    auto congs = oracle::semiring_congruences(*B);
    REQUIRE(congs.size() == 2);
    CHECK(std::find(congs.begin(), congs.end(), std::vector<std::size_t>{0, 1}) != congs.end());
    CHECK(std::find(congs.begin(), congs.end(), std::vector<std::size_t>{0, 0}) != congs.end());
    CHECK(oracle::is_simple(B->size(), B->add_table(), B->mul_table()));

    std::vector<Element> add(16), mul(16);
    for (Element x = 0; x < 4; ++x)
        for (Element y = 0; y < 4; ++y) {
            add[x * 4 + y] = x | y;
            mul[x * 4 + y] = x & y;
        }
    auto BB = validate_semiring({"00", "01", "10", "11"}, add, mul, 0, 3);
    CHECK(oracle::semiring_congruences(*BB).size() > 2);
    CHECK_FALSE(oracle::is_simple(4, add, mul));

    auto trivial = validate_semiring({"0"}, {0}, {0}, 0, 0);
    CHECK(oracle::semiring_congruences(*trivial).size() == 1);

    try {
        oracle::semiring_congruences(*full_residuated_semiring(catalog::square()).to_semiring());
        FAIL("expected SemiringTooLarge");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::SemiringTooLarge);
    }
}

TEST_CASE("property: principal congruences agree with the partition enumeration") {
    for (const auto &R : {catalog::boolean(), catalog::maxplus3(), catalog::res3chain(), catalog::simple3chain()}) {
        if (R->size() > oracle::max_congruence_semiring) continue;
        const auto congs = oracle::semiring_congruences(*R);
        for (Element x = 0; x < R->size(); ++x)
            for (Element y = 0; y < R->size(); ++y) {
                const auto p = oracle::principal_congruence(R->size(), R->add_table(), R->mul_table(), x, y);
                CHECK(std::find(congs.begin(), congs.end(), p) != congs.end());
                CHECK(p[x] == p[y]);
                // smallest: every enumerated congruence relating x and y contains p
                for (const auto &c : congs) {
                    if (c[x] != c[y]) continue;
                    for (Element u = 0; u < R->size(); ++u)
                        for (Element v = 0; v < R->size(); ++v)
                            if (p[u] == p[v]) CHECK(c[u] == c[v]);
                }
            }
        CHECK(oracle::is_simple(R->size(), R->add_table(), R->mul_table()) == (congs.size() == 2));
    }
}

TEST_CASE("oracle::exhaustive_sweep over the 2-chain") {
    auto c2 = catalog::chain(2);
    const auto maps = all_residuated_maps(c2);
    const auto F = factorize(c2);
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto r = oracle::exhaustive_sweep(maps, n, F, true, 2);
        CHECK(r.disagreements == 0);
        CHECK(r.structural_invertible == r.oracle_invertible);
        CHECK(r.generalized_permutation == r.oracle_invertible);
        CHECK(count_invertible(F, n) == r.oracle_invertible);
    }
}
