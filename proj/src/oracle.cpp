#include "resmat/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <thread>

#include "resmat/errors.hpp"

namespace resmat::oracle {

namespace {

template <typename Fn>
void parallel_chunks(std::size_t total, unsigned threads, Fn &&fn) {
    threads = std::max(1u, threads);
    if (threads == 1 || total < 2 * threads) {
        fn(std::size_t{0}, total);
        return;
    }
    std::vector<std::thread> pool;
    const std::size_t chunk = (total + threads - 1) / threads;
    for (unsigned w = 0; w < threads; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(total, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&fn, lo, hi] { fn(lo, hi); });
    }
    for (auto &t : pool) t.join();
}

std::vector<std::size_t> normalize(std::vector<std::size_t> blocks) {
    std::vector<std::size_t> seen;
    for (auto &b : blocks) {
        auto it = std::find(seen.begin(), seen.end(), b);
        if (it == seen.end()) {
            seen.push_back(b);
            b = seen.size() - 1;
        } else {
            b = static_cast<std::size_t>(it - seen.begin());
        }
    }
    return blocks;
}

} // namespace

TupleSpace::TupleSpace(LatticePtr lattice, std::size_t arity, std::size_t cap)
    : lattice_(std::move(lattice)), arity_(arity), size_(1) {
    for (std::size_t i = 0; i < arity_; ++i) {
        size_ *= lattice_->size();
        if (size_ > cap)
            throw Error(ErrorKind::SpaceTooLarge, "tuple space exceeds the cap of " + std::to_string(cap));
    }
}

std::size_t TupleSpace::index(std::span<const Element> tuple) const {
    std::size_t idx = 0;
    for (Element v : tuple) idx = idx * lattice_->size() + v;
    return idx;
}

std::vector<Element> TupleSpace::tuple(std::size_t index) const {
    std::vector<Element> out(arity_);
    for (std::size_t i = arity_; i-- > 0;) {
        out[i] = static_cast<Element>(index % lattice_->size());
        index /= lattice_->size();
    }
    return out;
}

std::vector<std::size_t> action_table(const ResMatrix &matrix, const TupleSpace &space, unsigned threads) {
    const auto &L = *matrix.lattice();
    const std::size_t n = matrix.size();
    std::vector<std::size_t> image(space.size());
    parallel_chunks(space.size(), threads, [&](std::size_t lo, std::size_t hi) {
        std::vector<Element> out(n);
        for (std::size_t idx = lo; idx < hi; ++idx) {
            const auto x = space.tuple(idx);
            for (std::size_t i = 0; i < n; ++i) {
                Element acc = L.bottom();
                for (std::size_t j = 0; j < n; ++j) acc = L.join(acc, matrix.at(i, j).values()[x[j]]);
                out[i] = acc;
            }
            image[idx] = space.index(out);
        }
    });
    return image;
}

bool is_invertible(const ResMatrix &matrix, std::size_t cap, unsigned threads) {
    const TupleSpace space(matrix.lattice(), matrix.size(), cap);
    const auto image = action_table(matrix, space, threads);
    std::vector<std::uint8_t> marked(space.size(), 0);
    for (std::size_t y : image) {
        if (marked[y]) return false;
        marked[y] = 1;
    }
    return true;
}

ResMatrix inverse(const ResMatrix &matrix, std::size_t cap) {
    if (!is_invertible(matrix, cap)) throw Error(ErrorKind::NotInvertible, "matrix action is not bijective");
    const TupleSpace space(matrix.lattice(), matrix.size(), cap);
    const auto perm = action_table(matrix, space);

    auto is_identity = [](const std::vector<std::size_t> &p) {
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p[i] != i) return false;
        return true;
    };
    // power = perm^k; stop at the first k with perm^k = id.
    std::vector<std::size_t> previous(perm.size());
    std::iota(previous.begin(), previous.end(), std::size_t{0});
    std::vector<std::size_t> power = perm;
    while (!is_identity(power)) {
        previous = power;
        for (auto &v : power) v = perm[v];
    }
    const auto &inverse_perm = previous;

    const auto &L = *matrix.lattice();
    const std::size_t n = matrix.size();
    std::vector<ResiduatedMap> entries;
    entries.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Element> values(L.size());
            for (Element a = 0; a < L.size(); ++a) {
                std::vector<Element> injected(n, L.bottom());
                injected[j] = a;
                values[a] = space.tuple(inverse_perm[space.index(injected)])[i];
            }
            entries.emplace_back(matrix.lattice(), std::move(values));
        }
    return ResMatrix(matrix.lattice(), n, std::move(entries));
}

std::vector<ResiduatedMap> enumerate_residuated(const LatticePtr &lattice) {
    const auto &L = *lattice;
    const std::size_t n = L.size();
    if (n > max_enumeration_lattice)
        throw Error(ErrorKind::LatticeTooLarge, "enumeration is limited to " +
                                                    std::to_string(max_enumeration_lattice) + " elements");
    std::vector<Element> order(n);
    std::iota(order.begin(), order.end(), Element{0});
    std::stable_sort(order.begin(), order.end(), [&](Element a, Element b) { return L.height(a) < L.height(b); });

    std::vector<Element> value(n, 0);
    std::vector<std::uint8_t> assigned(n, 0);
    std::vector<ResiduatedMap> out;

    auto consistent = [&](Element x) {
        for (Element y = 0; y < n; ++y) {
            if (!assigned[y]) continue;
            const Element j = L.join(x, y);
            if (assigned[j] && value[j] != L.join(value[x], value[y])) return false;
            // x may itself be the join of two assigned elements.
            for (Element z = y; z < n; ++z)
                if (assigned[z] && L.join(y, z) == x && value[x] != L.join(value[y], value[z])) return false;
        }
        return true;
    };

    auto recurse = [&](auto &&self, std::size_t pos) -> void {
        if (pos == n) {
            out.emplace_back(lattice, value);
            return;
        }
        const Element x = order[pos];
        for (Element v = 0; v < n; ++v) {
            if (x == L.bottom() && v != L.bottom()) continue;
            value[x] = v;
            assigned[x] = 1;
            if (consistent(x)) self(self, pos + 1);
            assigned[x] = 0;
        }
    };
    recurse(recurse, 0);
    std::sort(out.begin(), out.end(),
              [](const ResiduatedMap &a, const ResiduatedMap &b) { return a.values() < b.values(); });
    return out;
}

namespace {

std::vector<std::vector<std::size_t>> congruences_of_tables(std::size_t n, std::span<const Element> add,
                                                            std::span<const Element> mul) {
    if (n > max_congruence_semiring)
        throw Error(ErrorKind::SemiringTooLarge, "congruence enumeration is limited to " +
                                                     std::to_string(max_congruence_semiring) + " elements");
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> block(n, 0);

    auto compatible = [&]() {
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                if (block[p] != block[q]) continue;
                for (std::size_t r = 0; r < n; ++r) {
                    if (block[add[p * n + r]] != block[add[q * n + r]]) return false;
                    if (block[mul[p * n + r]] != block[mul[q * n + r]]) return false;
                    if (block[mul[r * n + p]] != block[mul[r * n + q]]) return false;
                }
            }
        return true;
    };

    // Restricted growth strings enumerate each partition exactly once.
    auto recurse = [&](auto &&self, std::size_t pos, std::size_t blocks_used) -> void {
        if (pos == n) {
            if (compatible()) out.push_back(block);
            return;
        }
        for (std::size_t b = 0; b <= blocks_used; ++b) {
            block[pos] = b;
            self(self, pos + 1, std::max(blocks_used, b + 1));
        }
    };
    if (n == 0) return out;
    block[0] = 0;
    recurse(recurse, 1, 1);
    return out;
}

} // namespace

std::vector<std::vector<std::size_t>> semiring_congruences(const FiniteSemiring &semiring) {
    return congruences_of_tables(semiring.size(), semiring.add_table(), semiring.mul_table());
}

std::vector<std::vector<std::size_t>> semiring_congruences(const GeneratedSemiring &semiring) {
    return congruences_of_tables(semiring.size(), semiring.add, semiring.mul);
}

std::vector<std::size_t> principal_congruence(std::size_t n, std::span<const Element> add,
                                              std::span<const Element> mul, Element x, Element y) {
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    bool changed = false;
    auto unite = [&](std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        parent[std::max(a, b)] = std::min(a, b);
        changed = true;
    };
    unite(x, y);
    do {
        changed = false;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                if (find(p) != find(q)) continue;
                for (std::size_t r = 0; r < n; ++r) {
                    unite(add[p * n + r], add[q * n + r]);
                    unite(mul[p * n + r], mul[q * n + r]);
                    unite(mul[r * n + p], mul[r * n + q]);
                }
            }
    } while (changed);
    std::vector<std::size_t> blocks(n);
    for (std::size_t a = 0; a < n; ++a) blocks[a] = find(a);
    return normalize(std::move(blocks));
}

bool is_simple(std::size_t n, std::span<const Element> add, std::span<const Element> mul) {
    for (Element x = 0; x < n; ++x)
        for (Element y = x + 1; y < n; ++y) {
            const auto blocks = principal_congruence(n, add, mul, x, y);
            if (std::any_of(blocks.begin(), blocks.end(), [](std::size_t b) { return b != 0; })) return false;
        }
    return true;
}

ResMatrix sweep_matrix(const std::vector<ResiduatedMap> &alphabet, std::size_t n, std::size_t index) {
    std::vector<ResiduatedMap> entries(n * n, alphabet.front());
    for (std::size_t k = n * n; k-- > 0;) {
        entries[k] = alphabet[index % alphabet.size()];
        index /= alphabet.size();
    }
    return ResMatrix(alphabet.front().lattice(), n, std::move(entries));
}

SweepResult exhaustive_sweep(const std::vector<ResiduatedMap> &alphabet, std::size_t n,
                             const Factorization &factorization, bool check_generalized, unsigned threads) {
    if (alphabet.empty()) throw Error(ErrorKind::InvalidInput, "empty alphabet");
    std::size_t total = 1;
    for (std::size_t k = 0; k < n * n; ++k) {
        if (total > SIZE_MAX / alphabet.size()) throw Error(ErrorKind::SpaceTooLarge, "matrix space too large");
        total *= alphabet.size();
    }
    SweepResult result;
    result.total = total;
    std::mutex guard;
    parallel_chunks(total, threads, [&](std::size_t lo, std::size_t hi) {
        SweepResult local;
        for (std::size_t m = lo; m < hi; ++m) {
            const auto M = sweep_matrix(alphabet, n, m);
            const bool structural = check_invertible(M, factorization).has_value();
            const bool brute = is_invertible(M);
            bool agree = structural == brute;
            local.structural_invertible += structural;
            local.oracle_invertible += brute;
            if (check_generalized) {
                const bool gp = is_generalized_permutation(M);
                local.generalized_permutation += gp;
                agree = agree && gp == brute;
            }
            if (!agree) {
                ++local.disagreements;
                if (!local.first_disagreement) local.first_disagreement = m;
            }
        }
        std::lock_guard lock(guard);
        result.structural_invertible += local.structural_invertible;
        result.oracle_invertible += local.oracle_invertible;
        result.generalized_permutation += local.generalized_permutation;
        result.disagreements += local.disagreements;
        if (local.first_disagreement &&
            (!result.first_disagreement || *local.first_disagreement < *result.first_disagreement))
            result.first_disagreement = local.first_disagreement;
    });
    return result;
}

} // namespace resmat::oracle
