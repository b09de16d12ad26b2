#include "resmat/matrix.hpp"

#include <numeric>

#include "resmat/errors.hpp"
#include "resmat/random.hpp"

namespace resmat {

ResMatrix::ResMatrix(LatticePtr lattice, std::size_t n, std::vector<ResiduatedMap> entries)
    : lattice_(std::move(lattice)), n_(n), entries_(std::move(entries)) {
    if (n_ == 0) throw Error(ErrorKind::ShapeMismatch, "matrix size must be at least 1");
    if (entries_.size() != n_ * n_)
        throw Error(ErrorKind::ShapeMismatch, "expected " + std::to_string(n_ * n_) + " entries, got " +
                                                  std::to_string(entries_.size()));
    for (const auto &e : entries_)
        if (!same_lattice(e.lattice(), lattice_))
            throw Error(ErrorKind::DomainMismatch, "matrix entry lives on a different lattice");
}

ResMatrix ResMatrix::identity(LatticePtr lattice, std::size_t n) {
    std::vector<ResiduatedMap> e;
    e.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            e.push_back(i == j ? ResiduatedMap::identity(lattice) : ResiduatedMap::zero(lattice));
    return ResMatrix(std::move(lattice), n, std::move(e));
}

ResMatrix ResMatrix::zero(LatticePtr lattice, std::size_t n) {
    std::vector<ResiduatedMap> e(n * n, ResiduatedMap::zero(lattice));
    return ResMatrix(std::move(lattice), n, std::move(e));
}

SemiringMatrix::SemiringMatrix(SemiringPtr semiring, std::size_t n, std::vector<Element> entries)
    : semiring_(std::move(semiring)), n_(n), entries_(std::move(entries)) {
    if (n_ == 0) throw Error(ErrorKind::ShapeMismatch, "matrix size must be at least 1");
    if (entries_.size() != n_ * n_) throw Error(ErrorKind::ShapeMismatch, "entry count does not match size");
    for (Element e : entries_)
        if (e >= semiring_->size()) throw Error(ErrorKind::InvalidInput, "matrix entry out of range");
}

SemiringMatrix SemiringMatrix::identity(SemiringPtr semiring, std::size_t n) {
    std::vector<Element> e(n * n, semiring->zero());
    for (std::size_t i = 0; i < n; ++i) e[i * n + i] = semiring->one();
    return SemiringMatrix(std::move(semiring), n, std::move(e));
}

ResMatrix mat_mul(const ResMatrix &a, const ResMatrix &b) {
    if (a.size() != b.size()) throw Error(ErrorKind::ShapeMismatch, "matrix sizes differ");
    if (!same_lattice(a.lattice(), b.lattice())) throw Error(ErrorKind::ShapeMismatch, "matrices over different lattices");
    const std::size_t n = a.size();
    std::vector<ResiduatedMap> out;
    out.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            ResiduatedMap acc = ResiduatedMap::zero(a.lattice());
            for (std::size_t k = 0; k < n; ++k) acc = pointwise_join(acc, compose(a.at(i, k), b.at(k, j)));
            out.push_back(std::move(acc));
        }
    return ResMatrix(a.lattice(), n, std::move(out));
}

SemiringMatrix mat_mul(const SemiringMatrix &a, const SemiringMatrix &b) {
    if (a.size() != b.size() || !same_semiring(a.semiring(), b.semiring()))
        throw Error(ErrorKind::ShapeMismatch, "matrices have different shapes or semirings");
    const auto &R = *a.semiring();
    const std::size_t n = a.size();
    std::vector<Element> out(n * n, R.zero());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Element acc = R.zero();
            for (std::size_t k = 0; k < n; ++k) acc = R.add(acc, R.mul(a.at(i, k), b.at(k, j)));
            out[i * n + j] = acc;
        }
    return SemiringMatrix(a.semiring(), n, std::move(out));
}

std::vector<Element> MatrixAction::operator()(std::span<const Element> tuple) const {
    const auto &M = *matrix_;
    const auto &L = *M.lattice();
    const std::size_t n = M.size();
    if (tuple.size() != n) throw Error(ErrorKind::ShapeMismatch, "tuple arity does not match matrix size");
    std::vector<Element> out(n, L.bottom());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i] = L.join(out[i], M.at(i, j)(tuple[j]));
    return out;
}

std::vector<std::size_t> InvertibilityCertificate::sigma_inverse() const {
    std::vector<std::size_t> inv(sigma.size());
    for (std::size_t p = 0; p < sigma.size(); ++p) inv[pair_index(sigma[p])] = p;
    return inv;
}

std::vector<Element> component_map(const ResiduatedMap &entry, const Factorization &factorization, std::size_t t,
                                   std::size_t s) {
    const auto &coords = factorization.coordinates;
    const std::size_t m = factorization.factors[s]->size();
    std::vector<Element> psi(m);
    for (Element a = 0; a < m; ++a) psi[a] = coords.project(entry(coords.inject(s, a)), t);
    return psi;
}

namespace {

bool is_constant_bottom(const std::vector<Element> &map, const FiniteLattice &target) {
    for (Element v : map)
        if (v != target.bottom()) return false;
    return true;
}

void require_factorization_of(const ResMatrix &matrix, const Factorization &factorization) {
    if (!same_lattice(matrix.lattice(), factorization.source))
        throw Error(ErrorKind::FactorizationMismatch, "factorization is of a different lattice");
}

} // namespace

std::optional<InvertibilityCertificate> check_invertible(const ResMatrix &matrix, const Factorization &factorization) {
    require_factorization_of(matrix, factorization);
    const std::size_t k = factorization.factor_count();
    const std::size_t n = matrix.size();
    const std::size_t pairs = k * n;

    InvertibilityCertificate cert;
    cert.n = n;
    cert.sigma.resize(pairs);
    cert.phi.resize(pairs);
    std::vector<std::uint8_t> taken(pairs, 0);

    // Each output coordinate (t,i) must see exactly one isomorphic component
    // map and constant-bottom ones everywhere else; any other nonzero map fails.
    for (std::size_t t = 0; t < k; ++t) {
        const auto &target = *factorization.factors[t];
        for (std::size_t i = 0; i < n; ++i) {
            std::optional<CoordinatePair> source;
            std::vector<Element> iso;
            for (std::size_t s = 0; s < k; ++s) {
                const auto &domain = *factorization.factors[s];
                for (std::size_t j = 0; j < n; ++j) {
                    auto psi = component_map(matrix.at(i, j), factorization, t, s);
                    if (is_constant_bottom(psi, target)) continue;
                    if (source || !is_lattice_isomorphism(domain, target, psi)) return std::nullopt;
                    source = CoordinatePair{s, j};
                    iso = std::move(psi);
                }
            }
            if (!source) return std::nullopt;
            const std::size_t q = cert.pair_index(*source);
            if (taken[q]) return std::nullopt;
            taken[q] = 1;
            cert.sigma[t * n + i] = *source;
            cert.phi[q] = std::move(iso);
        }
    }
    cert.factorization = std::make_shared<const Factorization>(factorization);
    return cert;
}

ResMatrix invert(const ResMatrix &matrix, const InvertibilityCertificate &certificate) {
    if (!certificate.factorization) throw Error(ErrorKind::CertificateMismatch, "certificate has no factorization");
    const auto &F = *certificate.factorization;
    const std::size_t n = matrix.size();
    const std::size_t k = F.factor_count();
    if (!same_lattice(matrix.lattice(), F.source) || certificate.n != n || certificate.sigma.size() != k * n ||
        certificate.phi.size() != k * n)
        throw Error(ErrorKind::CertificateMismatch, "certificate does not fit the matrix");
    for (std::size_t p = 0; p < k * n; ++p) {
        const auto out = certificate.pair_at(p);
        const auto in = certificate.sigma[p];
        if (in.factor >= k || in.row >= n)
            throw Error(ErrorKind::CertificateMismatch, "certificate permutation out of range");
        const auto psi = component_map(matrix.at(out.row, in.row), F, out.factor, in.factor);
        if (psi != certificate.phi[certificate.pair_index(in)])
            throw Error(ErrorKind::CertificateMismatch, "certificate isomorphism disagrees with the matrix");
    }

    const auto sigma_inv = certificate.sigma_inverse();
    std::vector<Bijection> phi_inverse(k * n);
    for (std::size_t p = 0; p < k * n; ++p) phi_inverse[p] = inverse_bijection(certificate.phi[p]);

    const auto &L = *matrix.lattice();
    std::vector<ResiduatedMap> entries;
    entries.reserve(n * n);
    std::vector<Element> tuple(k);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Element> values(L.size());
            for (Element x = 0; x < L.size(); ++x) {
                const auto code = F.coordinates.encode(x);
                for (std::size_t t = 0; t < k; ++t) {
                    const std::size_t p = t * n + i;
                    const auto pre = certificate.pair_at(sigma_inv[p]);
                    tuple[t] = pre.row == j ? phi_inverse[p][code[pre.factor]] : F.factors[t]->bottom();
                }
                values[x] = F.coordinates.decode(tuple);
            }
            entries.emplace_back(matrix.lattice(), std::move(values));
        }
    return ResMatrix(matrix.lattice(), n, std::move(entries));
}

bool is_generalized_permutation(const ResMatrix &matrix) {
    const std::size_t n = matrix.size();
    std::vector<std::size_t> per_column(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t per_row = 0;
        for (std::size_t j = 0; j < n; ++j) {
            const auto &e = matrix.at(i, j);
            if (e.is_zero()) continue;
            if (!is_lattice_automorphism(e)) return false;
            ++per_row;
            ++per_column[j];
        }
        if (per_row != 1) return false;
    }
    for (auto c : per_column)
        if (c != 1) return false;
    return true;
}

bool check_invertible_fast_irreducible(const ResMatrix &matrix, const Factorization &factorization) {
    require_factorization_of(matrix, factorization);
    if (factorization.factor_count() != 1)
        throw Error(ErrorKind::LatticeNotIrreducible,
                    "lattice splits into " + std::to_string(factorization.factor_count()) + " factors");
    return is_generalized_permutation(matrix);
}

bool check_invertible_fast_irreducible(const ResMatrix &matrix) {
    return check_invertible_fast_irreducible(matrix, factorize(matrix.lattice()));
}

BigCount count_invertible(const Factorization &factorization, std::size_t n) {
    BigCount total = 1;
    for (const auto &g : factorization.grouped) {
        const std::size_t coords = g.multiplicity * n;
        const BigCount aut = automorphisms(*g.representative).size();
        total *= factorial(coords) * boost::multiprecision::pow(aut, static_cast<unsigned>(coords));
    }
    return total;
}

ResMatrix embed_matrix(const SemiringMatrix &matrix, const Embedding &embedding) {
    std::vector<ResiduatedMap> entries;
    entries.reserve(matrix.entries().size());
    for (Element e : matrix.entries()) entries.push_back(embedding.maps.at(e));
    return ResMatrix(embedding.lattice, matrix.size(), std::move(entries));
}

std::optional<SemiringMatrix> semiring_matrix_invert(const SemiringMatrix &matrix) {
    const auto &R = *matrix.semiring();
    const auto embedding = embed(R);
    const auto lifted = embed_matrix(matrix, embedding);
    const auto F = factorize(embedding.lattice);
    auto cert = check_invertible(lifted, F);
    if (!cert) return std::nullopt;
    const auto inverse = invert(lifted, *cert);
    std::vector<Element> entries;
    entries.reserve(inverse.entries().size());
    for (const auto &f : inverse.entries()) entries.push_back(pullback_element(f, R));
    return SemiringMatrix(matrix.semiring(), matrix.size(), std::move(entries));
}

ResMatrix random_invertible(const Factorization &F, std::size_t n, std::uint64_t seed) {
    if (n == 0) throw Error(ErrorKind::ShapeMismatch, "matrix size must be at least 1");
    SeededRng rng(seed);
    const std::size_t k = F.factor_count();
    const std::size_t pairs = k * n;

    std::vector<CoordinatePair> sigma(pairs);
    for (const auto &g : F.grouped) {
        std::vector<CoordinatePair> cls;
        for (std::size_t t : g.members)
            for (std::size_t i = 0; i < n; ++i) cls.push_back({t, i});
        auto image = cls;
        rng.shuffle(image);
        for (std::size_t c = 0; c < cls.size(); ++c) sigma[cls[c].factor * n + cls[c].row] = image[c];
    }

    std::vector<std::vector<Bijection>> group_auts;
    for (const auto &g : F.grouped) group_auts.push_back(automorphisms(*g.representative));

    // psi[(t,i)] : L_s -> L_t for (s,j) = sigma(t,i), uniform among isomorphisms.
    std::vector<Bijection> psi(pairs);
    for (std::size_t p = 0; p < pairs; ++p) {
        const std::size_t t = p / n;
        const std::size_t s = sigma[p].factor;
        const auto &auts = group_auts[F.group_of[t]];
        const auto &alpha = auts[rng.below(auts.size())];
        const auto back = inverse_bijection(F.to_representative[t]);
        Bijection map(F.factors[s]->size());
        for (Element a = 0; a < map.size(); ++a) map[a] = back[alpha[F.to_representative[s][a]]];
        psi[p] = std::move(map);
    }

    const auto &L = *F.source;
    std::vector<ResiduatedMap> entries;
    entries.reserve(n * n);
    std::vector<Element> tuple(k);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Element> values(L.size());
            for (Element x = 0; x < L.size(); ++x) {
                const auto code = F.coordinates.encode(x);
                for (std::size_t t = 0; t < k; ++t) {
                    const std::size_t p = t * n + i;
                    tuple[t] = sigma[p].row == j ? psi[p][code[sigma[p].factor]] : F.factors[t]->bottom();
                }
                values[x] = F.coordinates.decode(tuple);
            }
            entries.emplace_back(F.source, std::move(values));
        }
    return ResMatrix(F.source, n, std::move(entries));
}

ResMatrix monomial_matrix(const LatticePtr &lattice, std::span<const std::size_t> column_of_row,
                          const std::vector<ResiduatedMap> &entries) {
    const std::size_t n = column_of_row.size();
    if (entries.size() != n) throw Error(ErrorKind::ShapeMismatch, "one entry per row expected");
    std::vector<ResiduatedMap> all(n * n, ResiduatedMap::zero(lattice));
    for (std::size_t i = 0; i < n; ++i) {
        if (column_of_row[i] >= n) throw Error(ErrorKind::ShapeMismatch, "column index out of range");
        all[i * n + column_of_row[i]] = entries[i];
    }
    return ResMatrix(lattice, n, std::move(all));
}

} // namespace resmat
