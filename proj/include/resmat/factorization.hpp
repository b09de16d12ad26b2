#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "resmat/lattice.hpp"

namespace resmat {

/// Exact integer used for group orders and matrix counts.
using BigCount = boost::multiprecision::cpp_int;

/// A partition of a lattice's elements. Blocks are numbered in order of first
/// appearance, so two equal partitions have equal block vectors.
class Congruence {
public:
    /// Normalizes block numbering. Does not check compatibility.
    Congruence(LatticePtr lattice, std::vector<std::size_t> block_of);

    static Congruence equality(LatticePtr lattice);
    static Congruence total(LatticePtr lattice);

    const LatticePtr &lattice() const noexcept { return lattice_; }
    const std::vector<std::size_t> &blocks() const noexcept { return block_of_; }
    std::size_t block(Element x) const { return block_of_[x]; }
    std::size_t block_count() const noexcept { return block_count_; }
    bool related(Element x, Element y) const { return block_of_[x] == block_of_[y]; }

    /// Join and meet respect the partition.
    bool is_compatible() const;

    friend bool operator==(const Congruence &a, const Congruence &b) { return a.block_of_ == b.block_of_; }

private:
    LatticePtr lattice_;
    std::vector<std::size_t> block_of_;
    std::size_t block_count_ = 0;
};

/// Intersection of a family of partitions on the same lattice.
Congruence intersect(const std::vector<Congruence> &family);

struct FactorGroup {
    LatticePtr representative;
    std::size_t multiplicity = 0;
    /// Indices into Factorization::factors of the members of this class.
    std::vector<std::size_t> members;
};

/// Decomposition of a lattice into irreducible direct factors.
struct Factorization {
    LatticePtr source;
    std::vector<LatticePtr> factors;
    CoordinateMap coordinates;
    std::vector<FactorGroup> grouped;
    /// group_of[t] is the index in `grouped` of factor t's isomorphism class.
    std::vector<std::size_t> group_of;
    /// to_representative[t] is an isomorphism factor t -> its group representative.
    std::vector<Bijection> to_representative;

    std::size_t factor_count() const noexcept { return factors.size(); }

    /// An isomorphism factor s -> factor t (they must share a class).
    Bijection factor_isomorphism(std::size_t s, std::size_t t) const;
};

/// Factors L into irreducibles.
///
/// A split is a pair (u, v) with u meet v = bottom and u join v = top such that
/// x -> (x meet u, x meet v) is an isomorphism onto [bottom,u] x [bottom,v].
/// Pairs are scanned in index order and the first valid split is taken; both
/// halves are then factored recursively. A one-element lattice has no factors.
Factorization factorize(const LatticePtr &lattice);

bool is_irreducible(const LatticePtr &lattice);

/// The kernel congruence of each coordinate projection.
std::vector<Congruence> factor_congruences(const Factorization &factorization);

/// Product congruence on product({theta_l.lattice(), theta_k.lattice()}).
/// `product_map` must be that product.
Congruence congruence_product(const Congruence &theta_l, const Congruence &theta_k, const CoordinateMap &product_map);

/// prod_t e_t! * |Aut(L_t)|^e_t. Throws DuplicateFactorClass when two entries
/// have isomorphic representatives.
BigCount aut_count(const std::vector<FactorGroup> &grouped);

BigCount factorial(std::size_t n);

} // namespace resmat
