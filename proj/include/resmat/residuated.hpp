#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "resmat/lattice.hpp"

namespace resmat {

/// A join- and bottom-preserving self-map of a finite lattice, stored as a
/// dense value table. These are the elements of the semiring Res(L) with
/// pointwise join as addition and composition as multiplication.
class ResiduatedMap {
public:
    /// Validates the table. Throws NotResiduated with a witness pair, or
    /// InvalidInput when the table is not total on the lattice.
    ResiduatedMap(LatticePtr lattice, std::vector<Element> values);

    static ResiduatedMap identity(LatticePtr lattice);
    static ResiduatedMap zero(LatticePtr lattice);

    const LatticePtr &lattice() const noexcept { return lattice_; }
    const std::vector<Element> &values() const noexcept { return values_; }
    Element operator()(Element x) const { return values_[x]; }

    bool is_zero() const;
    bool is_identity() const;

    friend bool operator==(const ResiduatedMap &a, const ResiduatedMap &b) {
        return a.values_ == b.values_ && same_lattice(a.lattice_, b.lattice_);
    }

private:
    struct Trusted {};
    ResiduatedMap(Trusted, LatticePtr lattice, std::vector<Element> values)
        : lattice_(std::move(lattice)), values_(std::move(values)) {}

    friend ResiduatedMap compose(const ResiduatedMap &, const ResiduatedMap &);
    friend ResiduatedMap pointwise_join(const ResiduatedMap &, const ResiduatedMap &);
    friend ResiduatedMap e_map(const LatticePtr &, Element, Element);

    LatticePtr lattice_;
    std::vector<Element> values_;
};

struct ResiduatedMapHash {
    std::size_t operator()(const ResiduatedMap &f) const noexcept;
};

/// Validating constructor, spelled as a function.
ResiduatedMap make_map(LatticePtr lattice, std::vector<Element> values);

/// x -> bottom if x <= a, else b.
ResiduatedMap e_map(const LatticePtr &lattice, Element a, Element b);

/// f o g. Throws DomainMismatch when the lattices differ.
ResiduatedMap compose(const ResiduatedMap &f, const ResiduatedMap &g);

/// x -> f(x) v g(x). Throws DomainMismatch when the lattices differ.
ResiduatedMap pointwise_join(const ResiduatedMap &f, const ResiduatedMap &g);

/// A residuated self-map is a lattice automorphism iff it is bijective.
bool is_lattice_automorphism(const ResiduatedMap &f);

/// Inverse of an automorphism, found as f^(k-1) where k is the order of f
/// under composition. Throws NotInvertible when f is not bijective.
ResiduatedMap invert_map(const ResiduatedMap &f);

/// Multiplicative order of an automorphism (least k >= 1 with f^k = id).
std::size_t map_order(const ResiduatedMap &f);

/// Rebuilds a map from its values on the join-irreducibles (`jis` order as
/// returned by FiniteLattice::join_irreducibles) by taking joins. The result
/// is not validated.
std::vector<Element> extend_from_join_irreducibles(const FiniteLattice &lattice,
                                                   std::span<const Element> jis,
                                                   std::span<const Element> ji_values);

/// Every residuated self-map of `lattice`. Assignments to join-irreducibles
/// are enumerated with monotonicity pruning, then extended by joins and
/// filtered for validity. Order is lexicographic in the join-irreducible values.
std::vector<ResiduatedMap> all_residuated_maps(const LatticePtr &lattice);

} // namespace resmat
