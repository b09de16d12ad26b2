#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "resmat/factorization.hpp"
#include "resmat/lattice.hpp"
#include "resmat/matrix.hpp"
#include "resmat/residuated.hpp"
#include "resmat/semiring.hpp"

// Brute-force ground truth. Nothing here calls the structural invertibility
// path; agreement between the two is the evidence the test suites rely on.
namespace resmat::oracle {

inline constexpr std::size_t default_tuple_cap = 1'000'000;
inline constexpr std::size_t max_enumeration_lattice = 8;
inline constexpr std::size_t max_congruence_semiring = 10;

/// L^n enumerated lexicographically (first coordinate most significant).
class TupleSpace {
public:
    /// Throws SpaceTooLarge when |L|^n exceeds cap.
    TupleSpace(LatticePtr lattice, std::size_t arity, std::size_t cap = default_tuple_cap);

    const LatticePtr &lattice() const noexcept { return lattice_; }
    std::size_t arity() const noexcept { return arity_; }
    std::size_t size() const noexcept { return size_; }

    std::size_t index(std::span<const Element> tuple) const;
    std::vector<Element> tuple(std::size_t index) const;

private:
    LatticePtr lattice_;
    std::size_t arity_;
    std::size_t size_;
};

/// Image of every tuple under the matrix action, as tuple indices.
std::vector<std::size_t> action_table(const ResMatrix &matrix, const TupleSpace &space, unsigned threads = 1);

/// True iff the matrix action is a bijection of L^n.
bool is_invertible(const ResMatrix &matrix, std::size_t cap = default_tuple_cap, unsigned threads = 1);

/// Inverse via the order of the action permutation: phi^(k-1) where phi^k = id,
/// with entries read off on canonical injections. Throws NotInvertible.
ResMatrix inverse(const ResMatrix &matrix, std::size_t cap = default_tuple_cap);

/// All residuated self-maps by backtracking over value assignments with
/// join-law pruning. Throws LatticeTooLarge above 8 elements.
std::vector<ResiduatedMap> enumerate_residuated(const LatticePtr &lattice);

/// Every partition of R compatible with + and *, as normalized block vectors
/// (blocks numbered by first appearance). Throws SemiringTooLarge above 10.
std::vector<std::vector<std::size_t>> semiring_congruences(const FiniteSemiring &semiring);

/// Same as semiring_congruences for a generated subsemiring of Res(L).
std::vector<std::vector<std::size_t>> semiring_congruences(const GeneratedSemiring &semiring);

/// Smallest congruence containing (x, y), as a normalized block vector.
std::vector<std::size_t> principal_congruence(std::size_t size, std::span<const Element> add,
                                              std::span<const Element> mul, Element x, Element y);

/// True iff every pair of distinct elements generates the total congruence.
/// Polynomial, so it has no size cap.
bool is_simple(std::size_t size, std::span<const Element> add, std::span<const Element> mul);

struct SweepResult {
    std::size_t total = 0;
    std::size_t structural_invertible = 0;
    std::size_t oracle_invertible = 0;
    std::size_t generalized_permutation = 0;
    std::size_t disagreements = 0;
    std::optional<std::size_t> first_disagreement;
};

/// Runs both invertibility routes on every n x n matrix with entries drawn
/// from `alphabet` (matrix number m uses digit m_k of m in base |alphabet| for
/// entry k, row-major, most significant first). With `check_generalized`,
/// is_generalized_permutation must also agree. Work is split across threads.
SweepResult exhaustive_sweep(const std::vector<ResiduatedMap> &alphabet, std::size_t n,
                             const Factorization &factorization, bool check_generalized = false,
                             unsigned threads = 1);

/// Matrix number `index` of the sweep enumeration.
ResMatrix sweep_matrix(const std::vector<ResiduatedMap> &alphabet, std::size_t n, std::size_t index);

} // namespace resmat::oracle
