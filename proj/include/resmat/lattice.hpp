#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace resmat {

/// Elements of a finite structure are dense indices 0..n-1; labels are only
/// used for I/O.
using Element = std::uint32_t;

/// A bijection between two finite structures, as a value table.
using Bijection = std::vector<Element>;

class FiniteLattice;
using LatticePtr = std::shared_ptr<const FiniteLattice>;

/// A finite lattice with precomputed order, join and meet tables.
///
/// Instances are immutable and always valid: the only ways to obtain one are
/// the factories below, which verify that every pair has a unique least upper
/// bound and greatest lower bound.
class FiniteLattice {
public:
    /// Builds the lattice whose order is the reflexive-transitive closure of
    /// `covers` (pairs of (lower, upper) labels). Element order follows
    /// `labels`. Throws DuplicateLabel, UnknownLabel, CyclicCovers or
    /// NotALattice.
    static LatticePtr from_covers(std::vector<std::string> labels,
                                  const std::vector<std::pair<std::string, std::string>> &covers);

    /// Same as from_covers with index pairs.
    static LatticePtr from_cover_indices(std::vector<std::string> labels,
                                         const std::vector<std::pair<Element, Element>> &covers);

    /// Builds from a full order relation given as a row-major n*n table.
    /// Throws NotALattice when the relation is not a partial order or some pair
    /// lacks a unique lub or glb.
    static LatticePtr from_order(std::vector<std::string> labels, std::vector<std::uint8_t> leq);

    std::size_t size() const noexcept { return n_; }
    Element bottom() const noexcept { return bottom_; }
    Element top() const noexcept { return top_; }

    bool leq(Element x, Element y) const noexcept { return leq_[x * n_ + y] != 0; }
    Element join(Element x, Element y) const noexcept { return join_[x * n_ + y]; }
    Element meet(Element x, Element y) const noexcept { return meet_[x * n_ + y]; }

    const std::string &label(Element x) const { return labels_[x]; }
    const std::vector<std::string> &labels() const noexcept { return labels_; }
    std::optional<Element> find(const std::string &label) const;

    /// Cover pairs (lower, upper) in lexicographic index order.
    const std::vector<std::pair<Element, Element>> &covers() const noexcept { return covers_; }
    const std::vector<Element> &upper_covers(Element x) const { return upper_[x]; }
    const std::vector<Element> &lower_covers(Element x) const { return lower_[x]; }

    /// Length of the longest chain from bottom to x.
    std::size_t height(Element x) const { return height_[x]; }

    /// Elements with exactly one lower cover.
    std::vector<Element> join_irreducibles() const;

    /// Same carrier size and identical order relation (labels ignored).
    bool same_structure(const FiniteLattice &other) const noexcept {
        return n_ == other.n_ && leq_ == other.leq_;
    }

private:
    FiniteLattice() = default;

    std::size_t n_ = 0;
    std::vector<std::string> labels_;
    std::vector<std::uint8_t> leq_;
    std::vector<Element> join_;
    std::vector<Element> meet_;
    Element bottom_ = 0;
    Element top_ = 0;
    std::vector<std::pair<Element, Element>> covers_;
    std::vector<std::vector<Element>> upper_;
    std::vector<std::vector<Element>> lower_;
    std::vector<std::size_t> height_;
};

/// True when both pointers denote the same lattice, structurally.
bool same_lattice(const LatticePtr &a, const LatticePtr &b) noexcept;

/// Explicit bijection between a lattice and a direct product of factors.
///
/// Factor tuples are enumerated in mixed radix with the first factor most
/// significant. `encode(x)[t]` is the projection onto factor t; `inject` is the
/// canonical injection that places bottoms in every other coordinate.
class CoordinateMap {
public:
    CoordinateMap(LatticePtr source, std::vector<LatticePtr> factors,
                  std::vector<std::vector<Element>> codes);

    const LatticePtr &source() const noexcept { return source_; }
    const std::vector<LatticePtr> &factors() const noexcept { return factors_; }
    std::size_t factor_count() const noexcept { return factors_.size(); }

    std::span<const Element> encode(Element x) const { return codes_[x]; }
    Element project(Element x, std::size_t t) const { return codes_[x][t]; }
    Element decode(std::span<const Element> tuple) const;
    Element inject(std::size_t t, Element a) const;

private:
    LatticePtr source_;
    std::vector<LatticePtr> factors_;
    std::vector<std::vector<Element>> codes_;
    std::vector<Element> decode_;
};

/// Direct product of the given factors with lexicographic enumeration and
/// componentwise operations. The returned map's source is the product.
CoordinateMap product(const std::vector<LatticePtr> &factors);

/// n-th direct power of a lattice.
CoordinateMap power(const LatticePtr &lattice, std::size_t n);

struct Interval {
    LatticePtr lattice;
    std::vector<Element> to_parent;
};

/// The sublattice {x : lo <= x <= hi}. Throws NotComparable unless lo <= hi.
Interval interval(const FiniteLattice &lattice, Element lo, Element hi);

/// An order isomorphism L -> K if one exists. Deterministic: candidates are
/// tried in ascending index order.
std::optional<Bijection> find_isomorphism(const FiniteLattice &from, const FiniteLattice &to);

/// All automorphisms, sorted lexicographically (so the identity comes first).
std::vector<Bijection> automorphisms(const FiniteLattice &lattice);

/// True when `map` is a bijection from `from` onto `to` preserving join and meet.
bool is_lattice_isomorphism(const FiniteLattice &from, const FiniteLattice &to,
                            std::span<const Element> map);

Bijection inverse_bijection(std::span<const Element> map);

/// Copy of `lattice` with elements renumbered: element x of the input becomes
/// element perm[x] of the result. Labels travel with their elements.
LatticePtr relabel(const FiniteLattice &lattice, std::span<const Element> perm);

} // namespace resmat
