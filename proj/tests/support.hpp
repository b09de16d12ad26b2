#pragma once

// Test-only brute-force helpers. These deliberately avoid the library's
// search and enumeration routines so they can serve as independent checks.

#include <algorithm>
#include <cstdint>
#include <cstddef>
#include <numeric>
#include <vector>

#include "resmat/lattice.hpp"
#include "resmat/residuated.hpp"

namespace resmat::testing {

/// Number of order automorphisms by trying every permutation that fixes
/// bottom and top. Usable up to about 10 elements.
inline std::size_t brute_force_automorphism_count(const FiniteLattice &L) {
    const std::size_t n = L.size();
    std::vector<Element> middle;
    for (Element x = 0; x < n; ++x)
        if (x != L.bottom() && x != L.top()) middle.push_back(x);
    std::vector<Element> image = middle;
    std::sort(image.begin(), image.end());
    std::size_t count = 0;
    std::vector<Element> f(n);
    do {
        f[L.bottom()] = L.bottom();
        f[L.top()] = L.top();
        for (std::size_t k = 0; k < middle.size(); ++k) f[middle[k]] = image[k];
        bool ok = true;
        for (Element x = 0; x < n && ok; ++x)
            for (Element y = 0; y < n && ok; ++y) ok = L.leq(x, y) == L.leq(f[x], f[y]);
        count += ok;
    } while (std::next_permutation(image.begin(), image.end()));
    return count;
}

/// Number of order isomorphisms L -> K (at most `limit`), by assigning
/// images in index order and rejecting any partial map that fails
/// x <= y <=> f(x) <= f(y) on the elements placed so far. Independent of the
/// library's invariant-pruned search and fast enough for about 50 elements.
inline std::size_t backtracking_isomorphism_count(const FiniteLattice &L, const FiniteLattice &K,
                                                  std::size_t limit = SIZE_MAX) {
    const std::size_t n = L.size();
    if (K.size() != n) return 0;
    std::vector<Element> f(n);
    std::vector<char> used(n, 0);
    std::size_t count = 0;
    auto place = [&](auto &&self, Element x) -> void {
        if (count >= limit) return;
        if (x == n) {
            ++count;
            return;
        }
        for (Element y = 0; y < n; ++y) {
            if (used[y]) continue;
            bool ok = true;
            for (Element w = 0; w < x && ok; ++w)
                ok = L.leq(w, x) == K.leq(f[w], y) && L.leq(x, w) == K.leq(y, f[w]);
            if (!ok) continue;
            f[x] = y;
            used[y] = 1;
            self(self, x + 1);
            used[y] = 0;
        }
    };
    place(place, 0);
    return count;
}

inline std::size_t backtracking_automorphism_count(const FiniteLattice &L) {
    return backtracking_isomorphism_count(L, L);
}

inline bool order_isomorphic(const FiniteLattice &L, const FiniteLattice &K) {
    return backtracking_isomorphism_count(L, K, 1) == 1;
}

/// Every bottom-fixing table checked against the join law, |L|^(|L|-1) of them.
inline std::vector<std::vector<Element>> brute_force_residuated_tables(const FiniteLattice &L) {
    const std::size_t n = L.size();
    std::vector<std::vector<Element>> out;
    std::vector<Element> f(n, 0);
    std::size_t total = 1;
    for (std::size_t k = 1; k < n; ++k) total *= n;
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t rest = code;
        for (Element x = 0; x < n; ++x) {
            if (x == L.bottom()) {
                f[x] = L.bottom();
                continue;
            }
            f[x] = static_cast<Element>(rest % n);
            rest /= n;
        }
        bool ok = true;
        for (Element x = 0; x < n && ok; ++x)
            for (Element y = 0; y < n && ok; ++y) ok = f[L.join(x, y)] == L.join(f[x], f[y]);
        if (ok) out.push_back(f);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// lub of x and y computed straight from the order relation, or n if none.
inline std::size_t brute_force_lub(const FiniteLattice &L, Element x, Element y) {
    const std::size_t n = L.size();
    for (Element u = 0; u < n; ++u) {
        if (!L.leq(x, u) || !L.leq(y, u)) continue;
        bool least = true;
        for (Element w = 0; w < n && least; ++w)
            if (L.leq(x, w) && L.leq(y, w)) least = L.leq(u, w);
        if (least) return u;
    }
    return n;
}

inline std::size_t brute_force_glb(const FiniteLattice &L, Element x, Element y) {
    const std::size_t n = L.size();
    for (Element u = 0; u < n; ++u) {
        if (!L.leq(u, x) || !L.leq(u, y)) continue;
        bool greatest = true;
        for (Element w = 0; w < n && greatest; ++w)
            if (L.leq(w, x) && L.leq(w, y)) greatest = L.leq(w, u);
        if (greatest) return u;
    }
    return n;
}

inline std::vector<Element> identity_table(std::size_t n) {
    std::vector<Element> v(n);
    std::iota(v.begin(), v.end(), Element{0});
    return v;
}

} // namespace resmat::testing
