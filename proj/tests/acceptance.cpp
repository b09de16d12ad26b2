// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any fail.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "resmat/catalog.hpp"
#include "resmat/errors.hpp"
#include "resmat/factorization.hpp"
#include "resmat/matrix.hpp"
#include "resmat/oracle.hpp"
#include "resmat/random.hpp"
#include "resmat/semiring.hpp"
#include "support.hpp"

using namespace resmat;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Collects failures so a criterion reports the first thing that went wrong.
class Checker {
public:
    void expect(bool ok, const std::string &what) {
        if (!ok && outcome_.pass) {
            outcome_.pass = false;
            outcome_.detail = what;
        }
    }
    void note(const std::string &text) { notes_ << (notes_.tellp() > 0 ? "; " : "") << text; }
    Outcome finish() {
        if (outcome_.pass) outcome_.detail = notes_.str();
        return outcome_;
    }

private:
    Outcome outcome_;
    std::ostringstream notes_;
};

std::string str(const BigCount &c) { return c.str(); }

ResMatrix matrix_number(const std::vector<ResiduatedMap> &alphabet, std::size_t n, std::size_t index) {
    return oracle::sweep_matrix(alphabet, n, index);
}

std::size_t ipow(std::size_t base, std::size_t exp) {
    std::size_t r = 1;
    while (exp--) r *= base;
    return r;
}

// Structural check, oracle, and (optionally) the monomial test over every
// n x n matrix with entries from `alphabet`.
struct SweepCounts {
    std::size_t total = 0, structural = 0, oracle = 0, monomial = 0, disagreements = 0;
};

SweepCounts sweep(const std::vector<ResiduatedMap> &alphabet, std::size_t n, const Factorization &F,
                  bool with_monomial) {
    SweepCounts c;
    const std::size_t total = ipow(alphabet.size(), n * n);
    for (std::size_t m = 0; m < total; ++m) {
        const auto M = matrix_number(alphabet, n, m);
        const bool s = check_invertible(M, F).has_value();
        const bool o = oracle::is_invertible(M);
        const bool g = with_monomial ? is_generalized_permutation(M) : s;
        ++c.total;
        c.structural += s;
        c.oracle += o;
        c.monomial += g;
        if (s != o || g != o) ++c.disagreements;
    }
    return c;
}

Outcome boolean_base() {
    Checker ck;
    const auto c2 = catalog::chain(2);
    const auto F = factorize(c2);
    const auto maps = all_residuated_maps(c2);
    ck.expect(maps.size() == 2, "Res(2-chain) does not have 2 elements");
    const std::size_t expected[] = {1, 2, 6};
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto c = sweep(maps, n, F, false);
        ck.expect(c.total == ipow(2, n * n), "wrong number of matrices for n=" + std::to_string(n));
        ck.expect(c.disagreements == 0, "structural and oracle disagree for n=" + std::to_string(n));
        ck.expect(c.oracle == expected[n - 1], "oracle count for n=" + std::to_string(n) + " is " +
                                                   std::to_string(c.oracle));
        ck.expect(count_invertible(F, n) == c.oracle, "count_invertible differs for n=" + std::to_string(n));
        ck.note("n=" + std::to_string(n) + ": " + std::to_string(c.oracle) + "/" + std::to_string(c.total));
    }
    return ck.finish();
}

Outcome reducible_base() {
    Checker ck;
    const auto sq = catalog::square();
    const auto Fs = factorize(sq);
    const auto res = all_residuated_maps(sq);
    ck.expect(res.size() == 16, "Res(B2) does not have 16 elements");

    const auto one = sweep(res, 1, Fs, false);
    ck.expect(one.disagreements == 0, "1x1 over Res(B2) disagrees with the oracle");
    ck.expect(one.oracle == 2, "1x1 over Res(B2): " + std::to_string(one.oracle) + " invertible, expected 2");
    ck.expect(count_invertible(Fs, 1) == 2, "count_invertible(B2, 1) != 2");
    ck.note("Res(B2) 1x1: " + std::to_string(one.oracle) + "/16");

    const auto two = sweep(res, 2, Fs, false);
    ck.expect(two.disagreements == 0, "2x2 over Res(B2) disagrees with the oracle");
    ck.expect(count_invertible(Fs, 2) == two.oracle, "count_invertible(B2, 2) differs from the oracle");
    ck.note("Res(B2) 2x2: " + std::to_string(two.oracle) + "/" + std::to_string(two.total));

    const auto c3 = catalog::chain(3);
    const auto F3 = factorize(c3);
    const auto res3 = all_residuated_maps(c3);
    const auto three = sweep(res3, 2, F3, false);
    ck.expect(three.total == 1296, "expected 1296 matrices over Res(3-chain)");
    ck.expect(three.disagreements == 0, "2x2 over Res(3-chain) disagrees with the oracle");
    ck.expect(count_invertible(F3, 2) == three.oracle, "count_invertible(3-chain, 2) differs from the oracle");
    ck.note("Res(3-chain) 2x2: " + std::to_string(three.oracle) + "/" + std::to_string(three.total));
    return ck.finish();
}

Outcome inverse_soundness() {
    Checker ck;
    struct Family {
        std::string name;
        LatticePtr lattice;
        std::size_t max_n;
    };
    const std::vector<Family> families{{"chain2", catalog::chain(2), 4},
                                       {"square", catalog::square(), 3},
                                       {"m3", catalog::m3(), 2},
                                       {"chain2 x m3", product({catalog::chain(2), catalog::m3()}).source(), 2}};
    std::size_t checked = 0, oracle_checked = 0;
    for (const auto &fam : families) {
        const auto F = factorize(fam.lattice);
        for (std::size_t n = 1; n <= fam.max_n; ++n) {
            const auto I = ResMatrix::identity(fam.lattice, n);
            const bool oracle_fits = ipow(fam.lattice->size(), n) <= oracle::default_tuple_cap;
            for (std::uint64_t seed = 0; seed < 200; ++seed) {
                const auto M = random_invertible(F, n, seed);
                const auto cert = check_invertible(M, F);
                const std::string where = fam.name + " n=" + std::to_string(n) + " seed=" + std::to_string(seed);
                ck.expect(cert.has_value(), "no certificate for " + where);
                if (!cert) continue;
                const auto inv = invert(M, *cert);
                ck.expect(mat_mul(M, inv) == I, "M * inv(M) != I for " + where);
                ck.expect(mat_mul(inv, M) == I, "inv(M) * M != I for " + where);
                ++checked;
                if (oracle_fits) {
                    ck.expect(oracle::inverse(M) == inv, "oracle inverse differs for " + where);
                    ++oracle_checked;
                }
            }
        }
    }
    ck.note(std::to_string(checked) + " matrices, " + std::to_string(oracle_checked) + " also against the oracle");
    return ck.finish();
}

Outcome factorization_uniqueness() {
    Checker ck;
    const std::vector<std::pair<std::string, LatticePtr>> pool{
        {"chain2", catalog::chain(2)}, {"chain3", catalog::chain(3)}, {"m3", catalog::m3()}, {"n5", catalog::n5()}};
    SeededRng rng(SeededRng::default_seed);
    std::size_t trials = 0;
    while (trials < 50) {
        const std::size_t k = 1 + rng.below(3);
        std::vector<LatticePtr> drawn;
        std::size_t size = 1;
        for (std::size_t i = 0; i < k; ++i) {
            const auto &pick = pool[rng.below(pool.size())].second;
            drawn.push_back(pick);
            size *= pick->size();
        }
        if (size > 24) continue;
        ++trials;
        auto perm = testing::identity_table(size);
        rng.shuffle(perm);
        const auto L = relabel(*product(drawn).source(), perm);
        const auto F = factorize(L);
        ck.expect(F.factor_count() == drawn.size(), "trial " + std::to_string(trials) + ": recovered " +
                                                        std::to_string(F.factor_count()) + " factors, drew " +
                                                        std::to_string(drawn.size()));
        // match recovered factors to drawn ones up to isomorphism
        std::vector<char> taken(drawn.size(), 0);
        for (const auto &f : F.factors) {
            bool matched = false;
            for (std::size_t d = 0; d < drawn.size() && !matched; ++d)
                if (!taken[d] && testing::order_isomorphic(*f, *drawn[d])) matched = taken[d] = 1;
            ck.expect(matched, "trial " + std::to_string(trials) + ": unmatched factor of size " +
                                   std::to_string(f->size()));
        }
    }
    ck.note(std::to_string(trials) + " relabeled products");
    return ck.finish();
}

Outcome aut_formula() {
    Checker ck;
    const std::vector<std::string> names{"chain2", "chain3", "chain4", "chain5", "square", "cube", "m3", "n5"};
    std::vector<LatticePtr> base;
    for (const auto &n : names) base.push_back(catalog::lattice(n));

    // every multiset of catalog lattices whose product has at most 20 elements
    std::vector<std::vector<std::size_t>> families;
    std::vector<std::size_t> current;
    std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t from, std::size_t size) {
        if (!current.empty()) families.push_back(current);
        for (std::size_t i = from; i < base.size(); ++i) {
            if (size * base[i]->size() > 20) continue;
            current.push_back(i);
            extend(i, size * base[i]->size());
            current.pop_back();
        }
    };
    extend(0, 1);

    for (const auto &fam : families) {
        std::vector<LatticePtr> factors;
        std::string label;
        for (std::size_t i : fam) {
            factors.push_back(base[i]);
            label += (label.empty() ? "" : " x ") + names[i];
        }
        const auto L = product(factors).source();
        const auto F = factorize(L);
        const auto formula = aut_count(F.grouped);
        const auto brute = testing::backtracking_automorphism_count(*L);
        ck.expect(formula == brute, label + ": formula " + str(formula) + ", brute force " + std::to_string(brute));
    }

    const auto big = product({catalog::chain(2), catalog::m3(), catalog::m3()}).source();
    const auto Fb = factorize(big);
    const auto formula = aut_count(Fb.grouped);
    const auto brute = testing::backtracking_automorphism_count(*big);
    ck.expect(formula == 72, "chain2 x m3 x m3: formula gives " + str(formula));
    ck.expect(brute == 72, "chain2 x m3 x m3: brute force gives " + std::to_string(brute));
    ck.note(std::to_string(families.size()) + " products up to 20 elements; chain2 x m3 x m3 (" +
            std::to_string(big->size()) + " elements) -> " + str(formula));
    return ck.finish();
}

Outcome embedding() {
    Checker ck;
    std::size_t semirings = 0;
    for (const auto &entry : catalog::entries()) {
        if (entry.kind != catalog::Kind::Semiring) continue;
        ++semirings;
        const auto R = entry.semiring();
        const auto E = embed(*R);
        std::set<std::vector<Element>> images;
        for (Element r = 0; r < R->size(); ++r) {
            images.insert(E.maps[r].values());
            ck.expect(pullback_element(E.maps[r], *R) == r, entry.name + ": pullback(T_r) != r");
            for (Element s = 0; s < R->size(); ++s) {
                ck.expect(E.maps[R->add(r, s)] == pointwise_join(E.maps[r], E.maps[s]),
                          entry.name + ": T does not preserve addition");
                ck.expect(E.maps[R->mul(r, s)] == compose(E.maps[r], E.maps[s]),
                          entry.name + ": T does not preserve multiplication");
            }
        }
        ck.expect(images.size() == R->size(), entry.name + ": T is not injective");
        ck.expect(E.maps[R->zero()].is_zero() && E.maps[R->one()].is_identity(),
                  entry.name + ": T does not send zero and one to the zero map and identity");
    }
    ck.note(std::to_string(semirings) + " catalog semirings");
    return ck.finish();
}

Outcome simple_semirings() {
    Checker ck;
    const std::vector<std::pair<std::string, LatticePtr>> bases{{"3-chain", catalog::chain(3)},
                                                                {"B2", catalog::square()}};
    for (const auto &[name, L] : bases) {
        const auto g = generate_simple_semiring(L);
        std::set<std::vector<Element>> members;
        for (const auto &f : g.elements) members.insert(f.values());
        bool closed = true;
        for (const auto &f : g.elements)
            for (const auto &h : g.elements)
                closed = closed && members.count(pointwise_join(f, h).values()) &&
                         members.count(compose(f, h).values());
        ck.expect(closed, name + ": closure is not closed");
        ck.expect(members.count(ResiduatedMap::zero(L).values()) == 1, name + ": zero map missing");
        std::string evidence;
        if (g.size() <= oracle::max_congruence_semiring) {
            auto congs = oracle::semiring_congruences(g);
            std::sort(congs.begin(), congs.end());
            const std::vector<std::size_t> nabla(g.size(), 0);
            std::vector<std::size_t> delta(g.size());
            for (std::size_t i = 0; i < g.size(); ++i) delta[i] = i;
            auto expected = std::vector<std::vector<std::size_t>>{nabla, delta};
            std::sort(expected.begin(), expected.end());
            ck.expect(congs == expected, name + ": congruences are not exactly {equality, total}");
            evidence = "partition enumeration";
        } else {
            evidence = "principal congruences (above the " + std::to_string(oracle::max_congruence_semiring) +
                       "-element enumeration cap)";
        }
        ck.expect(oracle::is_simple(g.size(), g.add, g.mul), name + ": a principal congruence is proper");
        ck.note(name + ": " + std::to_string(g.size()) + " elements, simple by " + evidence);
    }
    return ck.finish();
}

Outcome irreducible_fast_path() {
    Checker ck;
    for (const auto &[name, L] : std::vector<std::pair<std::string, LatticePtr>>{{"m3", catalog::m3()},
                                                                                {"chain4", catalog::chain(4)}}) {
        const auto F = factorize(L);
        const auto res = all_residuated_maps(L);
        for (std::size_t n = 1; n <= 2; ++n) {
            const auto c = sweep(res, n, F, true);
            ck.expect(c.disagreements == 0, name + " n=" + std::to_string(n) + ": " +
                                                std::to_string(c.disagreements) + " disagreements");
            ck.note(name + " n=" + std::to_string(n) + ": " + std::to_string(c.oracle) + "/" +
                    std::to_string(c.total));
        }
        // sampled beyond the exhaustive range
        SeededRng rng(SeededRng::default_seed);
        std::size_t agree = 0;
        const std::size_t n = 3;
        for (std::size_t trial = 0; trial < 10000; ++trial) {
            std::vector<ResiduatedMap> entries;
            if (trial % 2 == 0) {
                // half the samples start invertible and get one entry replaced
                const auto M = random_invertible(F, n, rng.next());
                entries = M.entries();
                if (trial % 4 == 0) entries[rng.below(n * n)] = res[rng.below(res.size())];
            } else {
                for (std::size_t k = 0; k < n * n; ++k) entries.push_back(res[rng.below(res.size())]);
            }
            const ResMatrix M(L, n, std::move(entries));
            const bool g = is_generalized_permutation(M);
            const bool s = check_invertible(M, F).has_value();
            const bool o = oracle::is_invertible(M);
            agree += (g == s && s == o);
        }
        ck.expect(agree == 10000, name + " n=3 sample: " + std::to_string(10000 - agree) + " disagreements");
        ck.note(name + " n=3: 10000 sampled");
    }
    return ck.finish();
}

struct Criterion {
    int number;
    std::string title;
    double limit_seconds; // 0 means no limit
    std::function<Outcome()> run;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "exhaustive equivalence over Res(2-chain), n <= 3", 5, boolean_base},
        {2, "exhaustive equivalence over Res(B2) and Res(3-chain)", 30, reducible_base},
        {3, "inverse soundness on seeded random invertible matrices", 60, inverse_soundness},
        {4, "factorization recovers factor multisets of relabeled products", 30, factorization_uniqueness},
        {5, "automorphism count formula against brute force", 0, aut_formula},
        {6, "semiring embedding into residuated maps", 0, embedding},
        {7, "generated semirings are closed, contain zero and are simple", 0, simple_semirings},
        {8, "irreducible fast path agrees with the certificate and the oracle", 0, irreducible_fast_path},
    };
    int failures = 0;
    for (const auto &c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception &e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (out.pass && c.limit_seconds > 0 && secs > c.limit_seconds) {
            out.pass = false;
            out.detail = "took longer than " + std::to_string(static_cast<int>(c.limit_seconds)) + " s";
        }
        failures += !out.pass;
        std::printf("[%s] criterion %d: %s (%.2f s) - %s\n", out.pass ? "PASS" : "FAIL", c.number, c.title.c_str(),
                    secs, out.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
