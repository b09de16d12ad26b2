#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "resmat/factorization.hpp"
#include "resmat/lattice.hpp"
#include "resmat/residuated.hpp"
#include "resmat/semiring.hpp"

namespace resmat {

/// Square matrix over Res(L), stored row-major.
class ResMatrix {
public:
    /// Throws ShapeMismatch unless entries has n*n elements and n >= 1, and
    /// DomainMismatch unless every entry lives on `lattice`.
    ResMatrix(LatticePtr lattice, std::size_t n, std::vector<ResiduatedMap> entries);

    static ResMatrix identity(LatticePtr lattice, std::size_t n);
    static ResMatrix zero(LatticePtr lattice, std::size_t n);

    const LatticePtr &lattice() const noexcept { return lattice_; }
    std::size_t size() const noexcept { return n_; }
    const ResiduatedMap &at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    const std::vector<ResiduatedMap> &entries() const noexcept { return entries_; }

    friend bool operator==(const ResMatrix &a, const ResMatrix &b) {
        return a.n_ == b.n_ && a.entries_ == b.entries_;
    }

private:
    LatticePtr lattice_;
    std::size_t n_;
    std::vector<ResiduatedMap> entries_;
};

/// Square matrix over a finite semiring, stored row-major.
class SemiringMatrix {
public:
    SemiringMatrix(SemiringPtr semiring, std::size_t n, std::vector<Element> entries);

    static SemiringMatrix identity(SemiringPtr semiring, std::size_t n);

    const SemiringPtr &semiring() const noexcept { return semiring_; }
    std::size_t size() const noexcept { return n_; }
    Element at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    const std::vector<Element> &entries() const noexcept { return entries_; }

    friend bool operator==(const SemiringMatrix &a, const SemiringMatrix &b) {
        return same_semiring(a.semiring_, b.semiring_) && a.n_ == b.n_ && a.entries_ == b.entries_;
    }

private:
    SemiringPtr semiring_;
    std::size_t n_;
    std::vector<Element> entries_;
};

/// Entry (i,j) of A*B is the pointwise join over k of a_{i,k} o b_{k,j}.
ResMatrix mat_mul(const ResMatrix &a, const ResMatrix &b);
SemiringMatrix mat_mul(const SemiringMatrix &a, const SemiringMatrix &b);

/// The residuated self-map of L^n induced by a matrix:
/// (x_j)_j -> (join_j m_{i,j}(x_j))_i.
class MatrixAction {
public:
    explicit MatrixAction(const ResMatrix &matrix) : matrix_(&matrix) {}

    std::size_t arity() const noexcept { return matrix_->size(); }
    std::vector<Element> operator()(std::span<const Element> tuple) const;

private:
    const ResMatrix *matrix_;
};

inline MatrixAction phi_of_matrix(const ResMatrix &matrix) { return MatrixAction(matrix); }

/// A coordinate of L^n seen as the product of all (factor, row) pairs.
struct CoordinatePair {
    std::size_t factor = 0;
    std::size_t row = 0;

    friend bool operator==(const CoordinatePair &, const CoordinatePair &) = default;
};

/// Witness that a matrix is invertible.
///
/// Coordinates of L^n are the pairs (t,i); index them as t * n + i. Output
/// coordinate (t,i) of the matrix action depends only on input coordinate
/// sigma[(t,i)] = (s,j), through the isomorphism
/// phi[(s,j)] : L_s -> L_t. In other words phi is indexed by the source pair
/// and maps it onto the factor of its preimage under sigma.
struct InvertibilityCertificate {
    std::shared_ptr<const Factorization> factorization;
    std::size_t n = 0;
    std::vector<CoordinatePair> sigma;
    std::vector<Bijection> phi;

    std::size_t pair_index(CoordinatePair p) const noexcept { return p.factor * n + p.row; }
    CoordinatePair pair_at(std::size_t index) const noexcept { return {index / n, index % n}; }

    /// sigma^{-1} as a table over pair indices.
    std::vector<std::size_t> sigma_inverse() const;
};

/// Component map pi_t o m o eps_s : L_s -> L_t of a single entry.
std::vector<Element> component_map(const ResiduatedMap &entry, const Factorization &factorization, std::size_t t,
                                   std::size_t s);

/// Decides invertibility structurally and returns a certificate when the
/// matrix is invertible. Only entries evaluated on canonical injections are
/// inspected. Throws FactorizationMismatch when F does not factor M's lattice.
std::optional<InvertibilityCertificate> check_invertible(const ResMatrix &matrix, const Factorization &factorization);

/// Assembles the inverse from a certificate. Throws CertificateMismatch when
/// the certificate does not belong to the matrix.
ResMatrix invert(const ResMatrix &matrix, const InvertibilityCertificate &certificate);

/// Exactly one nonzero entry per row and column, each of them bijective.
bool is_generalized_permutation(const ResMatrix &matrix);

/// Invertibility over an irreducible lattice, which reduces to
/// is_generalized_permutation. Throws LatticeNotIrreducible otherwise.
bool check_invertible_fast_irreducible(const ResMatrix &matrix);
bool check_invertible_fast_irreducible(const ResMatrix &matrix, const Factorization &factorization);

/// Number of invertible n x n matrices over Res(L):
/// prod_t (e_t n)! * |Aut(L_t)|^(e_t n).
BigCount count_invertible(const Factorization &factorization, std::size_t n);

/// Inverse of a matrix over an abstract semiring, computed through the
/// embedding into residuated maps on its natural order lattice.
std::optional<SemiringMatrix> semiring_matrix_invert(const SemiringMatrix &matrix);

/// Embeds a semiring matrix entrywise into Res of the natural order lattice.
ResMatrix embed_matrix(const SemiringMatrix &matrix, const Embedding &embedding);

/// Builds a uniformly random invertible matrix: sigma is uniform among
/// permutations of (t,i) that respect isomorphism classes, each phi is uniform
/// among the isomorphisms it may be. Deterministic in `seed`.
ResMatrix random_invertible(const Factorization &factorization, std::size_t n, std::uint64_t seed);

/// Generalized permutation matrix with the given row -> column permutation
/// and nonzero entries.
ResMatrix monomial_matrix(const LatticePtr &lattice, std::span<const std::size_t> column_of_row,
                          const std::vector<ResiduatedMap> &entries);

} // namespace resmat
