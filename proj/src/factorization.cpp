#include "resmat/factorization.hpp"

#include <optional>

#include "resmat/errors.hpp"

namespace resmat {

Congruence::Congruence(LatticePtr lattice, std::vector<std::size_t> block_of)
    : lattice_(std::move(lattice)), block_of_(std::move(block_of)) {
    if (block_of_.size() != lattice_->size())
        throw Error(ErrorKind::InvalidInput, "partition does not cover the lattice");
    std::vector<std::size_t> seen_old;
    for (auto &b : block_of_) {
        std::size_t k = 0;
        while (k < seen_old.size() && seen_old[k] != b) ++k;
        if (k == seen_old.size()) seen_old.push_back(b);
        b = k;
    }
    block_count_ = seen_old.size();
}

Congruence Congruence::equality(LatticePtr lattice) {
    std::vector<std::size_t> b(lattice->size());
    for (std::size_t i = 0; i < b.size(); ++i) b[i] = i;
    return Congruence(std::move(lattice), std::move(b));
}

Congruence Congruence::total(LatticePtr lattice) {
    std::vector<std::size_t> b(lattice->size(), 0);
    return Congruence(std::move(lattice), std::move(b));
}

bool Congruence::is_compatible() const {
    const auto &L = *lattice_;
    const Element n = static_cast<Element>(L.size());
    // It suffices to check one argument at a time: x ~ x' implies x v y ~ x' v y.
    for (Element x = 0; x < n; ++x)
        for (Element xp = x + 1; xp < n; ++xp) {
            if (!related(x, xp)) continue;
            for (Element y = 0; y < n; ++y) {
                if (!related(L.join(x, y), L.join(xp, y))) return false;
                if (!related(L.meet(x, y), L.meet(xp, y))) return false;
            }
        }
    return true;
}

Congruence intersect(const std::vector<Congruence> &family) {
    if (family.empty()) throw Error(ErrorKind::InvalidInput, "intersection of an empty family");
    const auto &lattice = family.front().lattice();
    std::vector<std::vector<std::size_t>> keys(lattice->size());
    for (const auto &c : family) {
        if (!same_lattice(c.lattice(), lattice)) throw Error(ErrorKind::DomainMismatch, "partitions on different lattices");
        for (std::size_t x = 0; x < keys.size(); ++x) keys[x].push_back(c.blocks()[x]);
    }
    std::vector<std::size_t> block(keys.size());
    for (std::size_t x = 0; x < keys.size(); ++x) {
        std::size_t y = 0;
        while (keys[y] != keys[x]) ++y;
        block[x] = y;
    }
    return Congruence(lattice, std::move(block));
}

// ---------------------------------------------------------------------------

namespace {

struct Split {
    Interval lower_u;
    Interval lower_v;
    std::vector<Element> to_u;
    std::vector<Element> to_v;
};

std::optional<Split> try_split(const FiniteLattice &L, Element u, Element v) {
    const std::size_t n = L.size();
    if (L.meet(u, v) != L.bottom() || L.join(u, v) != L.top()) return std::nullopt;
    Split s{interval(L, L.bottom(), u), interval(L, L.bottom(), v), {}, {}};
    const std::size_t nu = s.lower_u.lattice->size();
    const std::size_t nv = s.lower_v.lattice->size();
    if (nu * nv != n) return std::nullopt;

    std::vector<Element> pos_u(n, 0), pos_v(n, 0);
    for (std::size_t k = 0; k < nu; ++k) pos_u[s.lower_u.to_parent[k]] = static_cast<Element>(k);
    for (std::size_t k = 0; k < nv; ++k) pos_v[s.lower_v.to_parent[k]] = static_cast<Element>(k);

    std::vector<std::uint8_t> hit(n, 0);
    s.to_u.resize(n);
    s.to_v.resize(n);
    for (Element x = 0; x < n; ++x) {
        s.to_u[x] = pos_u[L.meet(x, u)];
        s.to_v[x] = pos_v[L.meet(x, v)];
        auto &h = hit[s.to_u[x] * nv + s.to_v[x]];
        if (h) return std::nullopt;
        h = 1;
    }
    // Bijective and meet-preserving already makes it an order isomorphism; joins
    // are verified anyway so that every accepted split is checked on all pairs.
    for (Element x = 0; x < n; ++x)
        for (Element y = x + 1; y < n; ++y) {
            const Element j = L.join(x, y);
            if (L.meet(j, u) != L.join(L.meet(x, u), L.meet(y, u))) return std::nullopt;
            if (L.meet(j, v) != L.join(L.meet(x, v), L.meet(y, v))) return std::nullopt;
        }
    return s;
}

struct RawFactors {
    std::vector<LatticePtr> factors;
    std::vector<std::vector<Element>> codes;
};

RawFactors split_recursively(const LatticePtr &lattice) {
    const auto &L = *lattice;
    const std::size_t n = L.size();
    if (n == 1) return {{}, {std::vector<Element>{}}};

    for (Element u = 0; u < n; ++u) {
        if (u == L.bottom() || u == L.top()) continue;
        for (Element v = u + 1; v < n; ++v) {
            if (v == L.bottom() || v == L.top()) continue;
            auto split = try_split(L, u, v);
            if (!split) continue;
            auto left = split_recursively(split->lower_u.lattice);
            auto right = split_recursively(split->lower_v.lattice);
            RawFactors out;
            out.factors = left.factors;
            out.factors.insert(out.factors.end(), right.factors.begin(), right.factors.end());
            out.codes.resize(n);
            for (Element x = 0; x < n; ++x) {
                auto &c = out.codes[x];
                c = left.codes[split->to_u[x]];
                const auto &r = right.codes[split->to_v[x]];
                c.insert(c.end(), r.begin(), r.end());
            }
            return out;
        }
    }
    RawFactors out;
    out.factors.push_back(lattice);
    out.codes.resize(n);
    for (Element x = 0; x < n; ++x) out.codes[x] = {x};
    return out;
}

} // namespace

Factorization factorize(const LatticePtr &lattice) {
    auto raw = split_recursively(lattice);
    Factorization F{lattice, raw.factors, CoordinateMap(lattice, raw.factors, std::move(raw.codes)), {}, {}, {}};

    for (std::size_t t = 0; t < F.factors.size(); ++t) {
        bool placed = false;
        for (std::size_t g = 0; g < F.grouped.size() && !placed; ++g) {
            auto iso = find_isomorphism(*F.factors[t], *F.grouped[g].representative);
            if (!iso) continue;
            F.grouped[g].multiplicity += 1;
            F.grouped[g].members.push_back(t);
            F.group_of.push_back(g);
            F.to_representative.push_back(std::move(*iso));
            placed = true;
        }
        if (placed) continue;
        F.grouped.push_back({F.factors[t], 1, {t}});
        F.group_of.push_back(F.grouped.size() - 1);
        Bijection id(F.factors[t]->size());
        for (Element x = 0; x < id.size(); ++x) id[x] = x;
        F.to_representative.push_back(std::move(id));
    }
    return F;
}

Bijection Factorization::factor_isomorphism(std::size_t s, std::size_t t) const {
    if (group_of.at(s) != group_of.at(t))
        throw Error(ErrorKind::InvalidInput, "factors are not isomorphic");
    const auto back = inverse_bijection(to_representative[t]);
    Bijection out(factors[s]->size());
    for (Element x = 0; x < out.size(); ++x) out[x] = back[to_representative[s][x]];
    return out;
}

bool is_irreducible(const LatticePtr &lattice) {
    return lattice->size() >= 2 && factorize(lattice).factor_count() == 1;
}

std::vector<Congruence> factor_congruences(const Factorization &factorization) {
    std::vector<Congruence> out;
    const std::size_t n = factorization.source->size();
    for (std::size_t t = 0; t < factorization.factor_count(); ++t) {
        std::vector<std::size_t> block(n);
        for (Element x = 0; x < n; ++x) block[x] = factorization.coordinates.project(x, t);
        out.emplace_back(factorization.source, std::move(block));
    }
    return out;
}

Congruence congruence_product(const Congruence &theta_l, const Congruence &theta_k, const CoordinateMap &product_map) {
    if (product_map.factor_count() != 2 || !same_lattice(product_map.factors()[0], theta_l.lattice()) ||
        !same_lattice(product_map.factors()[1], theta_k.lattice()))
        throw Error(ErrorKind::DomainMismatch, "product map does not match the congruences' lattices");
    const std::size_t n = product_map.source()->size();
    std::vector<std::size_t> block(n);
    for (Element x = 0; x < n; ++x) {
        const auto c = product_map.encode(x);
        block[x] = theta_l.block(c[0]) * theta_k.block_count() + theta_k.block(c[1]);
    }
    return Congruence(product_map.source(), std::move(block));
}

BigCount factorial(std::size_t n) {
    BigCount r = 1;
    for (std::size_t k = 2; k <= n; ++k) r *= k;
    return r;
}

BigCount aut_count(const std::vector<FactorGroup> &grouped) {
    for (std::size_t a = 0; a < grouped.size(); ++a)
        for (std::size_t b = a + 1; b < grouped.size(); ++b)
            if (find_isomorphism(*grouped[a].representative, *grouped[b].representative))
                throw Error(ErrorKind::DuplicateFactorClass,
                            "entries " + std::to_string(a) + " and " + std::to_string(b) + " are isomorphic");
    BigCount total = 1;
    for (const auto &g : grouped) {
        const BigCount aut = automorphisms(*g.representative).size();
        total *= factorial(g.multiplicity) * boost::multiprecision::pow(aut, static_cast<unsigned>(g.multiplicity));
    }
    return total;
}

} // namespace resmat
