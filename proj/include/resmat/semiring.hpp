#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "resmat/lattice.hpp"
#include "resmat/residuated.hpp"

namespace resmat {

class FiniteSemiring;
using SemiringPtr = std::shared_ptr<const FiniteSemiring>;

/// Finite additively idempotent semiring with zero and one, given by Cayley
/// tables. Always validated: construct through validate_semiring.
class FiniteSemiring {
public:
    std::size_t size() const noexcept { return n_; }
    Element zero() const noexcept { return zero_; }
    Element one() const noexcept { return one_; }
    Element add(Element x, Element y) const noexcept { return add_[x * n_ + y]; }
    Element mul(Element x, Element y) const noexcept { return mul_[x * n_ + y]; }

    const std::string &label(Element x) const { return labels_[x]; }
    const std::vector<std::string> &labels() const noexcept { return labels_; }
    std::optional<Element> find(const std::string &label) const;

    const std::vector<Element> &add_table() const noexcept { return add_; }
    const std::vector<Element> &mul_table() const noexcept { return mul_; }

private:
    friend SemiringPtr validate_semiring(std::vector<std::string>, std::vector<Element>, std::vector<Element>,
                                         Element, Element);
    FiniteSemiring() = default;

    std::size_t n_ = 0;
    std::vector<std::string> labels_;
    std::vector<Element> add_;
    std::vector<Element> mul_;
    Element zero_ = 0;
    Element one_ = 0;
};

/// Checks every axiom exhaustively and returns the validated semiring.
///
/// Axioms are checked in this order, and the first failure is reported as an
/// AxiomViolation carrying the axiom name and the witness elements:
/// "additive commutativity", "additive idempotence", "zero is additive
/// identity", "zero is multiplicatively absorbing", "one is multiplicative
/// identity", "additive associativity", "multiplicative associativity",
/// "left distributivity", "right distributivity".
SemiringPtr validate_semiring(std::vector<std::string> labels, std::vector<Element> add, std::vector<Element> mul,
                              Element zero, Element one);

/// Same labels, zero, one and tables.
bool same_semiring(const SemiringPtr &a, const SemiringPtr &b) noexcept;

/// The lattice on R's carrier with x <= y iff x + y = y. Join equals +,
/// bottom is zero; meets come from the order.
LatticePtr natural_order_lattice(const FiniteSemiring &semiring);

/// The left-regular representation r -> T_r, T_r(x) = r * x, as residuated
/// maps on the natural order lattice. Entry r of the result is T_r.
struct Embedding {
    LatticePtr lattice;
    std::vector<ResiduatedMap> maps;
};
Embedding embed(const FiniteSemiring &semiring);

/// The unique r with T_r = f, namely f(one). Throws NotInImage otherwise.
Element pullback_element(const ResiduatedMap &f, const FiniteSemiring &semiring);

/// A finite subsemiring of Res(L) given by its elements and Cayley tables.
struct GeneratedSemiring {
    LatticePtr lattice;
    std::vector<ResiduatedMap> elements;
    std::vector<Element> add;
    std::vector<Element> mul;
    Element zero = 0;
    std::optional<Element> one;

    std::size_t size() const noexcept { return elements.size(); }

    /// Label of element k: its value table as "[v0,v1,...]" in lattice labels.
    std::string element_label(std::size_t k) const;

    /// Runs the tables through validate_semiring. Throws NoMultiplicativeOne
    /// when the identity map is not in the closure.
    SemiringPtr to_semiring() const;
};

inline constexpr std::size_t default_closure_cap = 4096;

/// Smallest subset of Res(L) that contains the zero map, every e_{a,b} and
/// the extra generators and is closed under pointwise join and composition.
/// Throws ClosureTooLarge when more than `cap` elements appear.
GeneratedSemiring generate_simple_semiring(const LatticePtr &lattice,
                                           const std::vector<ResiduatedMap> &extra_generators = {},
                                           std::size_t cap = default_closure_cap);

/// All of Res(L) with its Cayley tables.
GeneratedSemiring full_residuated_semiring(const LatticePtr &lattice);

} // namespace resmat
