#include "resmat/semiring.hpp"

#include <cassert>
#include <unordered_map>

#include "resmat/errors.hpp"

namespace resmat {

std::optional<Element> FiniteSemiring::find(const std::string &label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return static_cast<Element>(i);
    return std::nullopt;
}

bool same_semiring(const SemiringPtr &a, const SemiringPtr &b) noexcept {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->labels() == b->labels() && a->zero() == b->zero() && a->one() == b->one() &&
           a->add_table() == b->add_table() && a->mul_table() == b->mul_table();
}

SemiringPtr validate_semiring(std::vector<std::string> labels, std::vector<Element> add, std::vector<Element> mul,
                              Element zero, Element one) {
    const std::size_t n = labels.size();
    if (n == 0) throw Error(ErrorKind::InvalidInput, "a semiring needs at least one element");
    if (add.size() != n * n || mul.size() != n * n)
        throw Error(ErrorKind::InvalidInput, "operation tables must be " + std::to_string(n) + "x" + std::to_string(n));
    for (Element v : add)
        if (v >= n) throw Error(ErrorKind::InvalidInput, "addition table entry out of range");
    for (Element v : mul)
        if (v >= n) throw Error(ErrorKind::InvalidInput, "multiplication table entry out of range");
    if (zero >= n || one >= n) throw Error(ErrorKind::InvalidInput, "zero or one out of range");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (labels[i] == labels[j]) throw Error(ErrorKind::DuplicateLabel, "label '" + labels[i] + "' appears twice");

    auto A = [&](std::size_t x, std::size_t y) { return add[x * n + y]; };
    auto M = [&](std::size_t x, std::size_t y) { return mul[x * n + y]; };
    auto fail = [&](const char *axiom, std::vector<std::size_t> w, const std::string &detail) {
        throw AxiomViolation(axiom, std::move(w), detail);
    };
    auto L = [&](std::size_t x) -> const std::string & { return labels[x]; };

    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (A(x, y) != A(y, x))
                fail("additive commutativity", {x, y},
                     L(x) + "+" + L(y) + "=" + L(A(x, y)) + " but " + L(y) + "+" + L(x) + "=" + L(A(y, x)));
    for (std::size_t x = 0; x < n; ++x)
        if (A(x, x) != x) fail("additive idempotence", {x}, L(x) + "+" + L(x) + "=" + L(A(x, x)) + "!=" + L(x));
    for (std::size_t x = 0; x < n; ++x)
        if (A(zero, x) != x) fail("zero is additive identity", {x}, L(zero) + "+" + L(x) + "=" + L(A(zero, x)));
    for (std::size_t x = 0; x < n; ++x) {
        if (M(zero, x) != zero) fail("zero is multiplicatively absorbing", {x}, L(zero) + "*" + L(x) + "=" + L(M(zero, x)));
        if (M(x, zero) != zero) fail("zero is multiplicatively absorbing", {x}, L(x) + "*" + L(zero) + "=" + L(M(x, zero)));
    }
    for (std::size_t x = 0; x < n; ++x)
        if (M(one, x) != x || M(x, one) != x) fail("one is multiplicative identity", {x}, "fails at " + L(x));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                if (A(A(x, y), z) != A(x, A(y, z)))
                    fail("additive associativity", {x, y, z}, "(x+y)+z != x+(y+z)");
            }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                if (M(M(x, y), z) != M(x, M(y, z)))
                    fail("multiplicative associativity", {x, y, z}, "(x*y)*z != x*(y*z)");
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                if (M(x, A(y, z)) != A(M(x, y), M(x, z)))
                    fail("left distributivity", {x, y, z}, "x*(y+z) != x*y+x*z");
            }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                if (M(A(y, z), x) != A(M(y, x), M(z, x)))
                    fail("right distributivity", {x, y, z}, "(y+z)*x != y*x+z*x");

    auto r = std::shared_ptr<FiniteSemiring>(new FiniteSemiring());
    r->n_ = n;
    r->labels_ = std::move(labels);
    r->add_ = std::move(add);
    r->mul_ = std::move(mul);
    r->zero_ = zero;
    r->one_ = one;
    return r;
}

LatticePtr natural_order_lattice(const FiniteSemiring &semiring) {
    const std::size_t n = semiring.size();
    std::vector<std::uint8_t> leq(n * n);
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y) leq[x * n + y] = semiring.add(x, y) == y;
    auto lattice = FiniteLattice::from_order(semiring.labels(), std::move(leq));
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
            if (lattice->join(x, y) != semiring.add(x, y))
                throw Error(ErrorKind::NotALattice, "natural order join disagrees with addition");
    return lattice;
}

Embedding embed(const FiniteSemiring &semiring) {
    Embedding out;
    out.lattice = natural_order_lattice(semiring);
    const std::size_t n = semiring.size();
    out.maps.reserve(n);
    for (Element r = 0; r < n; ++r) {
        std::vector<Element> values(n);
        for (Element x = 0; x < n; ++x) values[x] = semiring.mul(r, x);
        out.maps.emplace_back(out.lattice, std::move(values));
    }
    // T is injective because T_r(one) = r.
    for (Element r = 0; r < n; ++r) assert(out.maps[r](semiring.one()) == r);
    return out;
}

Element pullback_element(const ResiduatedMap &f, const FiniteSemiring &semiring) {
    const std::size_t n = semiring.size();
    if (f.values().size() != n) throw Error(ErrorKind::NotInImage, "map lives on a lattice of the wrong size");
    const Element r = f(semiring.one());
    for (Element x = 0; x < n; ++x)
        if (f(x) != semiring.mul(r, x))
            throw Error(ErrorKind::NotInImage, "map is not left multiplication by any element");
    return r;
}

std::string GeneratedSemiring::element_label(std::size_t k) const {
    std::string s = "[";
    const auto &v = elements[k].values();
    for (std::size_t x = 0; x < v.size(); ++x) {
        if (x) s += ",";
        s += lattice->label(v[x]);
    }
    return s + "]";
}

SemiringPtr GeneratedSemiring::to_semiring() const {
    if (!one) throw Error(ErrorKind::NoMultiplicativeOne, "closure does not contain the identity map");
    std::vector<std::string> labels(size());
    for (std::size_t k = 0; k < size(); ++k) labels[k] = element_label(k);
    return validate_semiring(std::move(labels), add, mul, zero, *one);
}

GeneratedSemiring generate_simple_semiring(const LatticePtr &lattice, const std::vector<ResiduatedMap> &extra_generators,
                                           std::size_t cap) {
    for (const auto &g : extra_generators)
        if (!same_lattice(g.lattice(), lattice))
            throw Error(ErrorKind::DomainMismatch, "extra generator lives on a different lattice");

    GeneratedSemiring out;
    out.lattice = lattice;
    std::unordered_map<ResiduatedMap, Element, ResiduatedMapHash> index;
    auto intern = [&](ResiduatedMap f) -> Element {
        auto it = index.find(f);
        if (it != index.end()) return it->second;
        if (out.elements.size() >= cap)
            throw Error(ErrorKind::ClosureTooLarge, "closure exceeds " + std::to_string(cap) + " elements");
        const auto k = static_cast<Element>(out.elements.size());
        index.emplace(f, k);
        out.elements.push_back(std::move(f));
        return k;
    };

    out.zero = intern(ResiduatedMap::zero(lattice));
    const auto n = static_cast<Element>(lattice->size());
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) intern(e_map(lattice, a, b));
    for (const auto &g : extra_generators) intern(g);

    // Worklist closure: element i is combined with every j <= i in both orders.
    for (std::size_t i = 0; i < out.elements.size(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            intern(pointwise_join(out.elements[i], out.elements[j]));
            intern(compose(out.elements[i], out.elements[j]));
            intern(compose(out.elements[j], out.elements[i]));
        }
    }

    const std::size_t m = out.elements.size();
    out.add.assign(m * m, 0);
    out.mul.assign(m * m, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            out.add[i * m + j] = index.at(pointwise_join(out.elements[i], out.elements[j]));
            out.mul[i * m + j] = index.at(compose(out.elements[i], out.elements[j]));
        }
    auto id = index.find(ResiduatedMap::identity(lattice));
    if (id != index.end()) out.one = id->second;
    return out;
}

GeneratedSemiring full_residuated_semiring(const LatticePtr &lattice) {
    GeneratedSemiring out;
    out.lattice = lattice;
    out.elements = all_residuated_maps(lattice);
    std::unordered_map<ResiduatedMap, Element, ResiduatedMapHash> index;
    for (std::size_t k = 0; k < out.elements.size(); ++k) index.emplace(out.elements[k], static_cast<Element>(k));
    const std::size_t m = out.elements.size();
    out.add.assign(m * m, 0);
    out.mul.assign(m * m, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            out.add[i * m + j] = index.at(pointwise_join(out.elements[i], out.elements[j]));
            out.mul[i * m + j] = index.at(compose(out.elements[i], out.elements[j]));
        }
    out.zero = index.at(ResiduatedMap::zero(lattice));
    out.one = index.at(ResiduatedMap::identity(lattice));
    return out;
}

} // namespace resmat
