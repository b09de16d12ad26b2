#include "resmat/catalog.hpp"

#include "resmat/errors.hpp"

namespace resmat::catalog {

LatticePtr chain(std::size_t k) {
    if (k == 0) throw Error(ErrorKind::InvalidInput, "a chain needs at least one element");
    std::vector<std::string> labels;
    std::vector<std::pair<Element, Element>> covers;
    for (std::size_t i = 0; i < k; ++i) {
        labels.push_back(std::to_string(i));
        if (i) covers.emplace_back(static_cast<Element>(i - 1), static_cast<Element>(i));
    }
    return FiniteLattice::from_cover_indices(std::move(labels), covers);
}

LatticePtr square() {
    return FiniteLattice::from_covers({"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
}

LatticePtr cube() {
    return FiniteLattice::from_covers({"0", "a", "b", "c", "ab", "ac", "bc", "1"},
                                      {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "ab"}, {"a", "ac"}, {"b", "ab"},
                                       {"b", "bc"}, {"c", "ac"}, {"c", "bc"}, {"ab", "1"}, {"ac", "1"}, {"bc", "1"}});
}

LatticePtr m3() {
    return FiniteLattice::from_covers({"0", "a", "b", "c", "1"},
                                      {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}});
}

LatticePtr n5() {
    return FiniteLattice::from_covers({"0", "a", "b", "c", "1"},
                                      {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}});
}

SemiringPtr boolean() {
    return validate_semiring({"0", "1"}, {0, 1, 1, 1}, {0, 0, 0, 1}, 0, 1);
}

SemiringPtr maxplus3() {
    // index 0 = -inf, 1 = 0, 2 = 1
    std::vector<Element> add(9), mul(9);
    for (Element x = 0; x < 3; ++x)
        for (Element y = 0; y < 3; ++y) {
            add[x * 3 + y] = std::max(x, y);
            mul[x * 3 + y] = (x == 0 || y == 0) ? 0 : std::min<Element>(x + y - 1, 2);
        }
    return validate_semiring({"-inf", "0", "1"}, std::move(add), std::move(mul), 0, 1);
}

SemiringPtr res3chain() { return full_residuated_semiring(chain(3)).to_semiring(); }

SemiringPtr simple3chain() { return generate_simple_semiring(chain(3)).to_semiring(); }

SemiringPtr simplesquare() { return generate_simple_semiring(square()).to_semiring(); }

const std::vector<CatalogEntry> &entries() {
    static const std::vector<CatalogEntry> all = [] {
        std::vector<CatalogEntry> v;
        for (std::size_t k = 2; k <= 5; ++k)
            v.push_back({"chain" + std::to_string(k), Kind::Lattice, [k] { return chain(k); }, {}});
        v.push_back({"square", Kind::Lattice, square, {}});
        v.push_back({"cube", Kind::Lattice, cube, {}});
        v.push_back({"m3", Kind::Lattice, m3, {}});
        v.push_back({"n5", Kind::Lattice, n5, {}});
        v.push_back({"bool", Kind::Semiring, {}, boolean});
        v.push_back({"maxplus3", Kind::Semiring, {}, maxplus3});
        v.push_back({"res3chain", Kind::Semiring, {}, res3chain});
        v.push_back({"simple3chain", Kind::Semiring, {}, simple3chain});
        v.push_back({"simplesquare", Kind::Semiring, {}, simplesquare});
        return v;
    }();
    return all;
}

LatticePtr lattice(const std::string &name) {
    for (const auto &e : entries())
        if (e.name == name) {
            if (e.kind == Kind::Lattice) return e.lattice();
            return natural_order_lattice(*e.semiring());
        }
    throw Error(ErrorKind::InvalidInput, "unknown builtin '" + name + "'");
}

SemiringPtr semiring(const std::string &name) {
    for (const auto &e : entries())
        if (e.name == name && e.kind == Kind::Semiring) return e.semiring();
    throw Error(ErrorKind::InvalidInput, "unknown builtin semiring '" + name + "'");
}

const std::vector<std::string> &irreducible_names() {
    static const std::vector<std::string> names{"chain2", "chain3", "chain4", "chain5", "m3", "n5"};
    return names;
}

std::string describe(const FiniteLattice &lattice) {
    for (const auto &name : irreducible_names()) {
        const auto candidate = catalog::lattice(name);
        if (candidate->size() == lattice.size() && find_isomorphism(lattice, *candidate)) return name;
    }
    return "L" + std::to_string(lattice.size());
}

} // namespace resmat::catalog
