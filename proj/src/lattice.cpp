#include "resmat/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>
#include <unordered_map>

#include "resmat/errors.hpp"

namespace resmat {

namespace {

// Elements sorted so that every element comes after everything strictly below it.
std::vector<Element> linear_extension(std::size_t n, const std::vector<std::uint8_t> &leq) {
    std::vector<std::size_t> below(n, 0);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (leq[y * n + x]) ++below[x];
    std::vector<Element> order(n);
    std::iota(order.begin(), order.end(), Element{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Element a, Element b) { return below[a] < below[b]; });
    return order;
}

std::string pair_text(const std::vector<std::string> &labels, std::size_t x, std::size_t y) {
    return "(" + labels[x] + ", " + labels[y] + ")";
}

} // namespace

LatticePtr FiniteLattice::from_covers(std::vector<std::string> labels,
                                      const std::vector<std::pair<std::string, std::string>> &covers) {
    std::unordered_map<std::string, Element> index;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (!index.emplace(labels[i], static_cast<Element>(i)).second)
            throw Error(ErrorKind::DuplicateLabel, "label '" + labels[i] + "' appears twice");
    }
    std::vector<std::pair<Element, Element>> pairs;
    pairs.reserve(covers.size());
    for (const auto &[lo, hi] : covers) {
        auto a = index.find(lo);
        auto b = index.find(hi);
        if (a == index.end()) throw Error(ErrorKind::UnknownLabel, "cover mentions unknown label '" + lo + "'");
        if (b == index.end()) throw Error(ErrorKind::UnknownLabel, "cover mentions unknown label '" + hi + "'");
        pairs.emplace_back(a->second, b->second);
    }
    return from_cover_indices(std::move(labels), pairs);
}

LatticePtr FiniteLattice::from_cover_indices(std::vector<std::string> labels,
                                             const std::vector<std::pair<Element, Element>> &covers) {
    const std::size_t n = labels.size();
    if (n == 0) throw Error(ErrorKind::NotALattice, "a lattice needs at least one element");
    {
        std::vector<std::string> sorted = labels;
        std::sort(sorted.begin(), sorted.end());
        auto dup = std::adjacent_find(sorted.begin(), sorted.end());
        if (dup != sorted.end()) throw Error(ErrorKind::DuplicateLabel, "label '" + *dup + "' appears twice");
    }
    std::vector<std::uint8_t> reach(n * n, 0);
    for (auto [lo, hi] : covers) {
        if (lo >= n || hi >= n) throw Error(ErrorKind::UnknownLabel, "cover index out of range");
        reach[lo * n + hi] = 1;
    }
    // Warshall closure without reflexivity, so a cycle shows up on the diagonal.
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (reach[i * n + k])
                for (std::size_t j = 0; j < n; ++j)
                    if (reach[k * n + j]) reach[i * n + j] = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (reach[i * n + i])
            throw Error(ErrorKind::CyclicCovers, "cover relation has a cycle through '" + labels[i] + "'");
        reach[i * n + i] = 1;
    }
    return from_order(std::move(labels), std::move(reach));
}

LatticePtr FiniteLattice::from_order(std::vector<std::string> labels, std::vector<std::uint8_t> leq) {
    const std::size_t n = labels.size();
    if (n == 0) throw Error(ErrorKind::NotALattice, "a lattice needs at least one element");
    if (leq.size() != n * n) throw Error(ErrorKind::InvalidInput, "order table has wrong size");
    for (auto &v : leq) v = v ? 1 : 0;

    for (std::size_t x = 0; x < n; ++x) {
        if (!leq[x * n + x]) throw Error(ErrorKind::NotALattice, "order is not reflexive at '" + labels[x] + "'");
        for (std::size_t y = 0; y < n; ++y) {
            if (x != y && leq[x * n + y] && leq[y * n + x])
                throw Error(ErrorKind::NotALattice, "order is not antisymmetric on " + pair_text(labels, x, y));
            if (!leq[x * n + y]) continue;
            for (std::size_t z = 0; z < n; ++z)
                if (leq[y * n + z] && !leq[x * n + z])
                    throw Error(ErrorKind::NotALattice, "order is not transitive through '" + labels[y] + "'");
        }
    }

    auto lattice = std::shared_ptr<FiniteLattice>(new FiniteLattice());
    auto &L = *lattice;
    L.n_ = n;
    L.labels_ = std::move(labels);
    L.leq_ = std::move(leq);
    L.join_.assign(n * n, 0);
    L.meet_.assign(n * n, 0);

    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = x; y < n; ++y) {
            std::optional<Element> lub;
            std::optional<Element> glb;
            for (std::size_t u = 0; u < n; ++u) {
                if (L.leq_[x * n + u] && L.leq_[y * n + u]) {
                    if (!lub || L.leq_[u * n + *lub]) {
                        lub = static_cast<Element>(u);
                    }
                }
                if (L.leq_[u * n + x] && L.leq_[u * n + y]) {
                    if (!glb || L.leq_[*glb * n + u]) glb = static_cast<Element>(u);
                }
            }
            // The running minimum is only a candidate; it must lie below every bound.
            bool ok_lub = lub.has_value();
            bool ok_glb = glb.has_value();
            for (std::size_t u = 0; u < n && (ok_lub || ok_glb); ++u) {
                if (ok_lub && L.leq_[x * n + u] && L.leq_[y * n + u] && !L.leq_[*lub * n + u]) ok_lub = false;
                if (ok_glb && L.leq_[u * n + x] && L.leq_[u * n + y] && !L.leq_[u * n + *glb]) ok_glb = false;
            }
            if (!ok_lub)
                throw Error(ErrorKind::NotALattice, "no least upper bound for " + pair_text(L.labels_, x, y));
            if (!ok_glb)
                throw Error(ErrorKind::NotALattice, "no greatest lower bound for " + pair_text(L.labels_, x, y));
            L.join_[x * n + y] = L.join_[y * n + x] = *lub;
            L.meet_[x * n + y] = L.meet_[y * n + x] = *glb;
        }
    }

    L.bottom_ = L.meet_[0];
    L.top_ = L.join_[0];
    for (std::size_t x = 1; x < n; ++x) {
        L.bottom_ = L.meet_[L.bottom_ * n + x];
        L.top_ = L.join_[L.top_ * n + x];
    }

    // Upper covers of x are the minimal elements strictly above x; scanning in a
    // linear extension, z is minimal iff no cover found so far lies below it.
    const auto order = linear_extension(n, L.leq_);
    L.upper_.assign(n, {});
    L.lower_.assign(n, {});
    for (std::size_t x = 0; x < n; ++x) {
        auto &ups = L.upper_[x];
        for (Element z : order) {
            if (z == x || !L.leq_[x * n + z]) continue;
            bool minimal = std::none_of(ups.begin(), ups.end(), [&](Element c) { return L.leq_[c * n + z]; });
            if (minimal) ups.push_back(z);
        }
        std::sort(ups.begin(), ups.end());
        for (Element z : ups) {
            L.covers_.emplace_back(static_cast<Element>(x), z);
            L.lower_[z].push_back(static_cast<Element>(x));
        }
    }
    L.height_.assign(n, 0);
    for (Element x : order)
        for (Element c : L.lower_[x]) L.height_[x] = std::max(L.height_[x], L.height_[c] + 1);
    return lattice;
}

std::optional<Element> FiniteLattice::find(const std::string &label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<Element>(it - labels_.begin());
}

std::vector<Element> FiniteLattice::join_irreducibles() const {
    std::vector<Element> out;
    for (std::size_t x = 0; x < n_; ++x)
        if (lower_[x].size() == 1) out.push_back(static_cast<Element>(x));
    return out;
}

bool same_lattice(const LatticePtr &a, const LatticePtr &b) noexcept {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->same_structure(*b);
}

// ---------------------------------------------------------------------------

CoordinateMap::CoordinateMap(LatticePtr source, std::vector<LatticePtr> factors,
                             std::vector<std::vector<Element>> codes)
    : source_(std::move(source)), factors_(std::move(factors)), codes_(std::move(codes)) {
    std::size_t total = 1;
    for (const auto &f : factors_) total *= f->size();
    if (codes_.size() != source_->size() || total != source_->size())
        throw Error(ErrorKind::InvalidInput, "coordinate map is not a bijection");
    decode_.assign(total, 0);
    std::vector<std::uint8_t> hit(total, 0);
    for (std::size_t x = 0; x < codes_.size(); ++x) {
        if (codes_[x].size() != factors_.size())
            throw Error(ErrorKind::InvalidInput, "coordinate tuple has wrong arity");
        std::size_t idx = 0;
        for (std::size_t t = 0; t < factors_.size(); ++t) {
            if (codes_[x][t] >= factors_[t]->size())
                throw Error(ErrorKind::InvalidInput, "coordinate out of range");
            idx = idx * factors_[t]->size() + codes_[x][t];
        }
        if (hit[idx]) throw Error(ErrorKind::InvalidInput, "coordinate map is not injective");
        hit[idx] = 1;
        decode_[idx] = static_cast<Element>(x);
    }
}

Element CoordinateMap::decode(std::span<const Element> tuple) const {
    std::size_t idx = 0;
    for (std::size_t t = 0; t < factors_.size(); ++t) idx = idx * factors_[t]->size() + tuple[t];
    return decode_[idx];
}

Element CoordinateMap::inject(std::size_t t, Element a) const {
    std::size_t idx = 0;
    for (std::size_t s = 0; s < factors_.size(); ++s)
        idx = idx * factors_[s]->size() + (s == t ? a : factors_[s]->bottom());
    return decode_[idx];
}

CoordinateMap product(const std::vector<LatticePtr> &factors) {
    if (factors.empty()) throw Error(ErrorKind::InvalidInput, "product of an empty family");
    std::size_t total = 1;
    for (const auto &f : factors) total *= f->size();
    const std::size_t k = factors.size();

    std::vector<std::vector<Element>> codes(total, std::vector<Element>(k));
    std::vector<std::string> labels(total);
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t rest = idx;
        for (std::size_t t = k; t-- > 0;) {
            codes[idx][t] = static_cast<Element>(rest % factors[t]->size());
            rest /= factors[t]->size();
        }
        if (k == 1) {
            labels[idx] = factors[0]->label(codes[idx][0]);
        } else {
            std::string s = "(";
            for (std::size_t t = 0; t < k; ++t) {
                if (t) s += ",";
                s += factors[t]->label(codes[idx][t]);
            }
            labels[idx] = s + ")";
        }
    }
    std::vector<std::uint8_t> leq(total * total, 0);
    for (std::size_t x = 0; x < total; ++x)
        for (std::size_t y = 0; y < total; ++y) {
            bool le = true;
            for (std::size_t t = 0; t < k && le; ++t) le = factors[t]->leq(codes[x][t], codes[y][t]);
            leq[x * total + y] = le;
        }
    auto source = FiniteLattice::from_order(std::move(labels), std::move(leq));
    return CoordinateMap(std::move(source), factors, std::move(codes));
}

CoordinateMap power(const LatticePtr &lattice, std::size_t n) {
    return product(std::vector<LatticePtr>(n, lattice));
}

Interval interval(const FiniteLattice &lattice, Element lo, Element hi) {
    if (lo >= lattice.size() || hi >= lattice.size())
        throw Error(ErrorKind::InvalidInput, "interval bound out of range");
    if (!lattice.leq(lo, hi))
        throw Error(ErrorKind::NotComparable,
                    "'" + lattice.label(lo) + "' is not below '" + lattice.label(hi) + "'");
    Interval out;
    for (std::size_t x = 0; x < lattice.size(); ++x)
        if (lattice.leq(lo, x) && lattice.leq(x, hi)) out.to_parent.push_back(static_cast<Element>(x));
    const std::size_t m = out.to_parent.size();
    std::vector<std::string> labels(m);
    std::vector<std::uint8_t> leq(m * m);
    for (std::size_t i = 0; i < m; ++i) {
        labels[i] = lattice.label(out.to_parent[i]);
        for (std::size_t j = 0; j < m; ++j) leq[i * m + j] = lattice.leq(out.to_parent[i], out.to_parent[j]);
    }
    out.lattice = FiniteLattice::from_order(std::move(labels), std::move(leq));
    return out;
}

// ---------------------------------------------------------------------------
// Isomorphism search: backtracking in height order, pruned by per-element
// invariants and by order consistency against every element already mapped.

namespace {

using Signature = std::tuple<std::size_t, std::size_t, std::size_t, std::size_t, std::size_t, std::size_t>;

std::vector<Signature> signatures(const FiniteLattice &L) {
    const std::size_t n = L.size();
    std::vector<std::size_t> below(n, 0), above(n, 0), depth(n, 0);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (L.leq(static_cast<Element>(x), static_cast<Element>(y))) {
                ++above[x];
                ++below[y];
            }
    // depth = longest chain to top; process by decreasing "above" count's inverse
    std::vector<Element> order(n);
    std::iota(order.begin(), order.end(), Element{0});
    std::sort(order.begin(), order.end(), [&](Element a, Element b) { return above[a] < above[b]; });
    for (Element x : order)
        for (Element c : L.upper_covers(x)) depth[x] = std::max(depth[x], depth[c] + 1);
    std::vector<Signature> sig(n);
    for (std::size_t x = 0; x < n; ++x) {
        auto e = static_cast<Element>(x);
        sig[x] = {L.height(e), depth[x], L.lower_covers(e).size(), L.upper_covers(e).size(), below[x], above[x]};
    }
    return sig;
}

class IsoSearch {
public:
    IsoSearch(const FiniteLattice &from, const FiniteLattice &to, bool want_all)
        : from_(from), to_(to), want_all_(want_all) {}

    std::vector<Bijection> run() {
        const std::size_t n = from_.size();
        if (n != to_.size() || from_.covers().size() != to_.covers().size()) return {};
        sig_from_ = signatures(from_);
        sig_to_ = signatures(to_);
        {
            auto a = sig_from_, b = sig_to_;
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            if (a != b) return {};
        }
        order_.resize(n);
        std::iota(order_.begin(), order_.end(), Element{0});
        std::stable_sort(order_.begin(), order_.end(),
                         [&](Element a, Element b) { return from_.height(a) < from_.height(b); });
        map_.assign(n, 0);
        used_.assign(n, 0);
        search(0);
        return std::move(found_);
    }

private:
    bool search(std::size_t pos) {
        if (pos == order_.size()) {
            found_.push_back(map_);
            return !want_all_;
        }
        const Element x = order_[pos];
        for (std::size_t y = 0; y < to_.size(); ++y) {
            if (used_[y] || sig_to_[y] != sig_from_[x]) continue;
            const auto ey = static_cast<Element>(y);
            bool consistent = true;
            for (std::size_t p = 0; p < pos && consistent; ++p) {
                const Element z = order_[p];
                consistent = from_.leq(z, x) == to_.leq(map_[z], ey) && from_.leq(x, z) == to_.leq(ey, map_[z]);
            }
            if (!consistent) continue;
            map_[x] = ey;
            used_[y] = 1;
            bool stop = search(pos + 1);
            used_[y] = 0;
            if (stop) return true;
        }
        return false;
    }

    const FiniteLattice &from_;
    const FiniteLattice &to_;
    bool want_all_;
    std::vector<Signature> sig_from_;
    std::vector<Signature> sig_to_;
    std::vector<Element> order_;
    Bijection map_;
    std::vector<std::uint8_t> used_;
    std::vector<Bijection> found_;
};

} // namespace

std::optional<Bijection> find_isomorphism(const FiniteLattice &from, const FiniteLattice &to) {
    auto found = IsoSearch(from, to, false).run();
    if (found.empty()) return std::nullopt;
    return std::move(found.front());
}

std::vector<Bijection> automorphisms(const FiniteLattice &lattice) {
    auto all = IsoSearch(lattice, lattice, true).run();
    std::sort(all.begin(), all.end());
    return all;
}

bool is_lattice_isomorphism(const FiniteLattice &from, const FiniteLattice &to, std::span<const Element> map) {
    const std::size_t n = from.size();
    if (map.size() != n || to.size() != n) return false;
    std::vector<std::uint8_t> seen(n, 0);
    for (Element v : map) {
        if (v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            auto ex = static_cast<Element>(x), ey = static_cast<Element>(y);
            if (map[from.join(ex, ey)] != to.join(map[x], map[y])) return false;
            if (map[from.meet(ex, ey)] != to.meet(map[x], map[y])) return false;
        }
    return true;
}

Bijection inverse_bijection(std::span<const Element> map) {
    Bijection inv(map.size());
    for (std::size_t x = 0; x < map.size(); ++x) inv[map[x]] = static_cast<Element>(x);
    return inv;
}

LatticePtr relabel(const FiniteLattice &lattice, std::span<const Element> perm) {
    const std::size_t n = lattice.size();
    if (perm.size() != n) throw Error(ErrorKind::InvalidInput, "relabeling has wrong size");
    std::vector<std::string> labels(n);
    std::vector<std::uint8_t> leq(n * n);
    for (std::size_t x = 0; x < n; ++x) {
        labels[perm[x]] = lattice.label(static_cast<Element>(x));
        for (std::size_t y = 0; y < n; ++y)
            leq[perm[x] * n + perm[y]] = lattice.leq(static_cast<Element>(x), static_cast<Element>(y));
    }
    return FiniteLattice::from_order(std::move(labels), std::move(leq));
}

} // namespace resmat
