#pragma once

#include <functional>
#include <string>
#include <vector>

#include "resmat/lattice.hpp"
#include "resmat/semiring.hpp"

namespace resmat::catalog {

/// k-element chain labelled "0" < "1" < ... < "k-1".
LatticePtr chain(std::size_t k);
/// Boolean square: 0 < a, b < 1.
LatticePtr square();
/// Boolean cube on atoms a, b, c.
LatticePtr cube();
/// Diamond with three atoms a, b, c.
LatticePtr m3();
/// Pentagon: 0 < a < b < 1 and 0 < c < 1.
LatticePtr n5();

/// {0, 1} with OR and AND.
SemiringPtr boolean();
/// Max-plus on {-inf, 0, 1}: addition is max, multiplication is the sum
/// capped at 1, -inf is the zero and 0 is the one.
SemiringPtr maxplus3();
/// Res of the 3-chain, all 6 maps.
SemiringPtr res3chain();
/// Closure of the e-maps over the 3-chain.
SemiringPtr simple3chain();
/// Closure of the e-maps over the square.
SemiringPtr simplesquare();

enum class Kind { Lattice, Semiring };

struct CatalogEntry {
    std::string name;
    Kind kind;
    std::function<LatticePtr()> lattice;
    std::function<SemiringPtr()> semiring;
};

const std::vector<CatalogEntry> &entries();

/// Throws InvalidInput for unknown names.
LatticePtr lattice(const std::string &name);
SemiringPtr semiring(const std::string &name);

/// Names of the irreducible catalog lattices, used to name factors.
const std::vector<std::string> &irreducible_names();

/// Name of the first irreducible catalog lattice isomorphic to `lattice`, or
/// "L<size>" when there is none.
std::string describe(const FiniteLattice &lattice);

} // namespace resmat::catalog
