#include "resmat/residuated.hpp"

#include <cassert>
#include <string>

#include "resmat/errors.hpp"

namespace resmat {

namespace {

void require_same_domain(const ResiduatedMap &f, const ResiduatedMap &g) {
    if (!same_lattice(f.lattice(), g.lattice()))
        throw Error(ErrorKind::DomainMismatch, "maps are defined on different lattices");
}

#ifndef NDEBUG
bool table_is_residuated(const FiniteLattice &L, const std::vector<Element> &v) {
    if (v[L.bottom()] != L.bottom()) return false;
    for (Element x = 0; x < L.size(); ++x)
        for (Element y = x + 1; y < L.size(); ++y)
            if (v[L.join(x, y)] != L.join(v[x], v[y])) return false;
    return true;
}
#endif

} // namespace

ResiduatedMap::ResiduatedMap(LatticePtr lattice, std::vector<Element> values)
    : lattice_(std::move(lattice)), values_(std::move(values)) {
    if (!lattice_) throw Error(ErrorKind::InvalidInput, "map without a lattice");
    const auto &L = *lattice_;
    if (values_.size() != L.size())
        throw Error(ErrorKind::InvalidInput, "value table has " + std::to_string(values_.size()) +
                                                 " entries, lattice has " + std::to_string(L.size()));
    for (Element v : values_)
        if (v >= L.size()) throw Error(ErrorKind::InvalidInput, "value out of range");
    if (values_[L.bottom()] != L.bottom())
        throw NotResiduated(L.bottom(), L.bottom(), true,
                            "bottom '" + L.label(L.bottom()) + "' maps to '" + L.label(values_[L.bottom()]) + "'");
    for (Element x = 0; x < L.size(); ++x)
        for (Element y = x + 1; y < L.size(); ++y) {
            const Element lhs = values_[L.join(x, y)];
            const Element rhs = L.join(values_[x], values_[y]);
            if (lhs != rhs)
                throw NotResiduated(x, y, false,
                                    "join of '" + L.label(x) + "' and '" + L.label(y) + "' maps to '" +
                                        L.label(lhs) + "' but the join of the images is '" + L.label(rhs) + "'");
        }
}

ResiduatedMap ResiduatedMap::identity(LatticePtr lattice) {
    std::vector<Element> v(lattice->size());
    for (Element x = 0; x < v.size(); ++x) v[x] = x;
    return ResiduatedMap(Trusted{}, std::move(lattice), std::move(v));
}

ResiduatedMap ResiduatedMap::zero(LatticePtr lattice) {
    std::vector<Element> v(lattice->size(), lattice->bottom());
    return ResiduatedMap(Trusted{}, std::move(lattice), std::move(v));
}

bool ResiduatedMap::is_zero() const {
    for (Element v : values_)
        if (v != lattice_->bottom()) return false;
    return true;
}

bool ResiduatedMap::is_identity() const {
    for (Element x = 0; x < values_.size(); ++x)
        if (values_[x] != x) return false;
    return true;
}

std::size_t ResiduatedMapHash::operator()(const ResiduatedMap &f) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Element v : f.values()) {
        h ^= v;
        h *= 1099511628211ull;
    }
    return h;
}

ResiduatedMap make_map(LatticePtr lattice, std::vector<Element> values) {
    return ResiduatedMap(std::move(lattice), std::move(values));
}

ResiduatedMap e_map(const LatticePtr &lattice, Element a, Element b) {
    const auto &L = *lattice;
    if (a >= L.size() || b >= L.size()) throw Error(ErrorKind::InvalidInput, "e_map argument out of range");
    std::vector<Element> v(L.size());
    for (Element x = 0; x < L.size(); ++x) v[x] = L.leq(x, a) ? L.bottom() : b;
    return ResiduatedMap(ResiduatedMap::Trusted{}, lattice, std::move(v));
}

ResiduatedMap compose(const ResiduatedMap &f, const ResiduatedMap &g) {
    require_same_domain(f, g);
    std::vector<Element> v(g.values().size());
    for (std::size_t x = 0; x < v.size(); ++x) v[x] = f.values()[g.values()[x]];
    assert(table_is_residuated(*f.lattice(), v));
    return ResiduatedMap(ResiduatedMap::Trusted{}, f.lattice(), std::move(v));
}

ResiduatedMap pointwise_join(const ResiduatedMap &f, const ResiduatedMap &g) {
    require_same_domain(f, g);
    const auto &L = *f.lattice();
    std::vector<Element> v(L.size());
    for (std::size_t x = 0; x < v.size(); ++x) v[x] = L.join(f.values()[x], g.values()[x]);
    assert(table_is_residuated(L, v));
    return ResiduatedMap(ResiduatedMap::Trusted{}, f.lattice(), std::move(v));
}

bool is_lattice_automorphism(const ResiduatedMap &f) {
    std::vector<std::uint8_t> seen(f.values().size(), 0);
    for (Element v : f.values()) {
        if (seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

std::size_t map_order(const ResiduatedMap &f) {
    if (!is_lattice_automorphism(f)) throw Error(ErrorKind::NotInvertible, "map is not bijective");
    std::size_t k = 1;
    ResiduatedMap power = f;
    while (!power.is_identity()) {
        power = compose(power, f);
        ++k;
    }
    return k;
}

ResiduatedMap invert_map(const ResiduatedMap &f) {
    const std::size_t k = map_order(f);
    ResiduatedMap result = ResiduatedMap::identity(f.lattice());
    for (std::size_t i = 1; i < k; ++i) result = compose(result, f);
#ifndef NDEBUG
    std::vector<Element> direct(f.values().size());
    for (Element x = 0; x < direct.size(); ++x) direct[f.values()[x]] = x;
    assert(direct == result.values());
#endif
    return result;
}

std::vector<Element> extend_from_join_irreducibles(const FiniteLattice &lattice, std::span<const Element> jis,
                                                   std::span<const Element> ji_values) {
    std::vector<Element> v(lattice.size(), lattice.bottom());
    for (Element x = 0; x < lattice.size(); ++x)
        for (std::size_t k = 0; k < jis.size(); ++k)
            if (lattice.leq(jis[k], x)) v[x] = lattice.join(v[x], ji_values[k]);
    return v;
}

std::vector<ResiduatedMap> all_residuated_maps(const LatticePtr &lattice) {
    const auto &L = *lattice;
    const auto jis = L.join_irreducibles();
    std::vector<Element> assignment(jis.size(), 0);
    std::vector<ResiduatedMap> out;

    // Join-irreducibles come out of join_irreducibles() in index order, which need
    // not be a linear extension; monotonicity is checked against every assigned
    // comparable join-irreducible regardless of direction.
    auto recurse = [&](auto &&self, std::size_t k) -> void {
        if (k == jis.size()) {
            auto values = extend_from_join_irreducibles(L, jis, assignment);
            try {
                out.emplace_back(lattice, std::move(values));
            } catch (const NotResiduated &) {
            }
            return;
        }
        for (Element y = 0; y < L.size(); ++y) {
            bool monotone = true;
            for (std::size_t p = 0; p < k && monotone; ++p) {
                if (L.leq(jis[p], jis[k]) && !L.leq(assignment[p], y)) monotone = false;
                if (L.leq(jis[k], jis[p]) && !L.leq(y, assignment[p])) monotone = false;
            }
            if (!monotone) continue;
            assignment[k] = y;
            self(self, k + 1);
        }
    };
    recurse(recurse, 0);
    return out;
}

} // namespace resmat
