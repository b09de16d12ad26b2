#include "resmat/io.hpp"

#include <fstream>

#include "resmat/catalog.hpp"
#include "resmat/errors.hpp"

namespace resmat::io {

namespace {

std::vector<std::string> read_labels(const json &doc) {
    if (!doc.contains("labels") || !doc["labels"].is_array())
        throw Error(ErrorKind::InvalidInput, "missing \"labels\" array");
    std::vector<std::string> labels;
    for (const auto &l : doc["labels"]) {
        if (!l.is_string()) throw Error(ErrorKind::InvalidInput, "labels must be strings");
        labels.push_back(l.get<std::string>());
    }
    return labels;
}

template <typename Finder>
Element lookup(const Finder &finder, const json &label, const char *what) {
    if (!label.is_string()) throw Error(ErrorKind::InvalidInput, std::string(what) + " must be a label string");
    auto idx = finder(label.get<std::string>());
    if (!idx) throw Error(ErrorKind::UnknownLabel, std::string(what) + " '" + label.get<std::string>() + "' is unknown");
    return *idx;
}

std::vector<Element> read_table(const json &doc, const char *key, const std::vector<std::string> &labels) {
    const std::size_t n = labels.size();
    if (!doc.contains(key) || !doc[key].is_array() || doc[key].size() != n)
        throw Error(ErrorKind::InvalidInput, std::string("\"") + key + "\" must be an " + std::to_string(n) + "x" +
                                                 std::to_string(n) + " array");
    auto find = [&](const std::string &s) -> std::optional<Element> {
        for (std::size_t i = 0; i < n; ++i)
            if (labels[i] == s) return static_cast<Element>(i);
        return std::nullopt;
    };
    std::vector<Element> table;
    for (const auto &row : doc[key]) {
        if (!row.is_array() || row.size() != n)
            throw Error(ErrorKind::InvalidInput, std::string("\"") + key + "\" row has wrong length");
        for (const auto &cell : row) table.push_back(lookup(find, cell, key));
    }
    return table;
}

bool is_builtin_spec(const std::string &spec, std::string &name) {
    constexpr std::string_view prefix = "builtin:";
    if (spec.rfind(prefix, 0) == 0) {
        name = spec.substr(prefix.size());
        return true;
    }
    return false;
}

std::filesystem::path resolve(const std::string &spec, const std::filesystem::path &relative_to) {
    std::filesystem::path p(spec);
    if (p.is_relative() && !relative_to.empty()) p = relative_to / p;
    return p;
}

bool is_bare_builtin(const std::string &spec, const std::filesystem::path &relative_to) {
    if (std::filesystem::exists(resolve(spec, relative_to))) return false;
    for (const auto &e : catalog::entries())
        if (e.name == spec) return true;
    return false;
}

} // namespace

json lattice_to_json(const FiniteLattice &lattice) {
    json covers = json::array();
    for (auto [lo, hi] : lattice.covers()) covers.push_back({lattice.label(lo), lattice.label(hi)});
    return {{"labels", lattice.labels()}, {"covers", covers}};
}

LatticePtr lattice_from_json(const json &doc) {
    if (!doc.is_object()) throw Error(ErrorKind::InvalidInput, "lattice document must be an object");
    auto labels = read_labels(doc);
    if (!doc.contains("covers") || !doc["covers"].is_array())
        throw Error(ErrorKind::InvalidInput, "missing \"covers\" array");
    std::vector<std::pair<std::string, std::string>> covers;
    for (const auto &c : doc["covers"]) {
        if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
            throw Error(ErrorKind::InvalidInput, "each cover must be a [lower, upper] pair of labels");
        covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
    }
    return FiniteLattice::from_covers(std::move(labels), covers);
}

json semiring_to_json(const FiniteSemiring &semiring) {
    const std::size_t n = semiring.size();
    json add = json::array(), mul = json::array();
    for (Element x = 0; x < n; ++x) {
        json ra = json::array(), rm = json::array();
        for (Element y = 0; y < n; ++y) {
            ra.push_back(semiring.label(semiring.add(x, y)));
            rm.push_back(semiring.label(semiring.mul(x, y)));
        }
        add.push_back(ra);
        mul.push_back(rm);
    }
    return {{"labels", semiring.labels()},
            {"add", add},
            {"mul", mul},
            {"zero", semiring.label(semiring.zero())},
            {"one", semiring.label(semiring.one())}};
}

SemiringPtr semiring_from_json(const json &doc) {
    if (!doc.is_object()) throw Error(ErrorKind::InvalidInput, "semiring document must be an object");
    auto labels = read_labels(doc);
    auto add = read_table(doc, "add", labels);
    auto mul = read_table(doc, "mul", labels);
    auto find = [&](const std::string &s) -> std::optional<Element> {
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == s) return static_cast<Element>(i);
        return std::nullopt;
    };
    if (!doc.contains("zero") || !doc.contains("one"))
        throw Error(ErrorKind::InvalidInput, "semiring needs \"zero\" and \"one\"");
    const Element zero = lookup(find, doc["zero"], "zero");
    const Element one = lookup(find, doc["one"], "one");
    return validate_semiring(std::move(labels), std::move(add), std::move(mul), zero, one);
}

json generated_semiring_to_json(const GeneratedSemiring &semiring) {
    const std::size_t m = semiring.size();
    std::vector<std::string> labels(m);
    for (std::size_t k = 0; k < m; ++k) labels[k] = semiring.element_label(k);
    json add = json::array(), mul = json::array();
    for (std::size_t x = 0; x < m; ++x) {
        json ra = json::array(), rm = json::array();
        for (std::size_t y = 0; y < m; ++y) {
            ra.push_back(labels[semiring.add[x * m + y]]);
            rm.push_back(labels[semiring.mul[x * m + y]]);
        }
        add.push_back(ra);
        mul.push_back(rm);
    }
    json doc = {{"labels", labels}, {"add", add}, {"mul", mul}, {"zero", labels[semiring.zero]}};
    doc["one"] = semiring.one ? json(labels[*semiring.one]) : json(nullptr);
    return doc;
}

json map_to_json(const ResiduatedMap &map) {
    json out = json::array();
    for (Element v : map.values()) out.push_back(map.lattice()->label(v));
    return out;
}

ResiduatedMap map_from_json(const LatticePtr &lattice, const json &doc) {
    if (!doc.is_array() || doc.size() != lattice->size())
        throw Error(ErrorKind::InvalidInput,
                    "a map must be an array of " + std::to_string(lattice->size()) + " value labels");
    std::vector<Element> values;
    for (const auto &v : doc) values.push_back(lookup([&](const std::string &s) { return lattice->find(s); }, v, "value"));
    return make_map(lattice, std::move(values));
}

json read_json_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::InvalidInput, "cannot open '" + path.string() + "'");
    try {
        return json::parse(in);
    } catch (const json::exception &e) {
        throw Error(ErrorKind::InvalidInput, "'" + path.string() + "' is not valid JSON: " + e.what());
    }
}

LatticePtr load_lattice(const std::string &spec, const std::filesystem::path &relative_to) {
    std::string name;
    if (is_builtin_spec(spec, name)) return catalog::lattice(name);
    if (is_bare_builtin(spec, relative_to)) return catalog::lattice(spec);
    const auto doc = read_json_file(resolve(spec, relative_to));
    if (doc.contains("add")) return natural_order_lattice(*semiring_from_json(doc));
    return lattice_from_json(doc);
}

SemiringPtr load_semiring(const std::string &spec, const std::filesystem::path &relative_to) {
    std::string name;
    if (is_builtin_spec(spec, name)) return catalog::semiring(name);
    if (is_bare_builtin(spec, relative_to)) return catalog::semiring(spec);
    return semiring_from_json(read_json_file(resolve(spec, relative_to)));
}

MatrixDocument matrix_from_json(const json &doc, const std::filesystem::path &base_dir) {
    if (!doc.is_object() || !doc.contains("base") || !doc["base"].is_string() || !doc.contains("kind") ||
        !doc.contains("n") || !doc.contains("entries"))
        throw Error(ErrorKind::InvalidInput, "matrix document needs \"base\", \"kind\", \"n\" and \"entries\"");
    const auto base = doc["base"].get<std::string>();
    const auto kind = doc["kind"].get<std::string>();
    if (!doc["n"].is_number_unsigned()) throw Error(ErrorKind::InvalidInput, "\"n\" must be a positive integer");
    const auto n = doc["n"].get<std::size_t>();
    const auto &rows = doc["entries"];
    if (!rows.is_array() || rows.size() != n)
        throw Error(ErrorKind::ShapeMismatch, "\"entries\" must have n rows");
    for (const auto &row : rows)
        if (!row.is_array() || row.size() != n) throw Error(ErrorKind::ShapeMismatch, "every row must have n entries");

    if (kind == "res") {
        auto lattice = load_lattice(base, base_dir);
        std::vector<ResiduatedMap> entries;
        for (const auto &row : rows)
            for (const auto &cell : row) entries.push_back(map_from_json(lattice, cell));
        return {base, ResMatrix(lattice, n, std::move(entries))};
    }
    if (kind == "semiring") {
        auto semiring = load_semiring(base, base_dir);
        std::vector<Element> entries;
        for (const auto &row : rows)
            for (const auto &cell : row)
                entries.push_back(lookup([&](const std::string &s) { return semiring->find(s); }, cell, "entry"));
        return {base, SemiringMatrix(semiring, n, std::move(entries))};
    }
    throw Error(ErrorKind::InvalidInput, "\"kind\" must be \"res\" or \"semiring\"");
}

MatrixDocument load_matrix(const std::filesystem::path &path) {
    return matrix_from_json(read_json_file(path), path.parent_path());
}

json matrix_to_json(const ResMatrix &matrix, const std::string &base) {
    json rows = json::array();
    for (std::size_t i = 0; i < matrix.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < matrix.size(); ++j) row.push_back(map_to_json(matrix.at(i, j)));
        rows.push_back(row);
    }
    return {{"base", base}, {"kind", "res"}, {"n", matrix.size()}, {"entries", rows}};
}

json matrix_to_json(const SemiringMatrix &matrix, const std::string &base) {
    json rows = json::array();
    for (std::size_t i = 0; i < matrix.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < matrix.size(); ++j) row.push_back(matrix.semiring()->label(matrix.at(i, j)));
        rows.push_back(row);
    }
    return {{"base", base}, {"kind", "semiring"}, {"n", matrix.size()}, {"entries", rows}};
}

json matrix_to_json(const MatrixDocument &doc) {
    return std::visit([&](const auto &m) { return matrix_to_json(m, doc.base); }, doc.matrix);
}

std::string sigma_cycles(const InvertibilityCertificate &certificate) {
    const std::size_t total = certificate.sigma.size();
    std::vector<std::uint8_t> done(total, 0);
    auto name = [&](std::size_t p) {
        const auto c = certificate.pair_at(p);
        return "(" + std::to_string(c.factor) + "," + std::to_string(c.row) + ")";
    };
    std::string out;
    for (std::size_t start = 0; start < total; ++start) {
        if (done[start]) continue;
        std::vector<std::size_t> cycle;
        for (std::size_t p = start; !done[p]; p = certificate.pair_index(certificate.sigma[p])) {
            done[p] = 1;
            cycle.push_back(p);
        }
        if (cycle.size() < 2) continue;
        out += "(";
        for (std::size_t k = 0; k < cycle.size(); ++k) out += (k ? " " : "") + name(cycle[k]);
        out += ")";
    }
    return out.empty() ? "()" : out;
}

json certificate_to_json(const InvertibilityCertificate &certificate) {
    const auto &F = *certificate.factorization;
    json sigma = json::array();
    json phi = json::array();
    const auto sigma_inv = certificate.sigma_inverse();
    for (std::size_t p = 0; p < certificate.sigma.size(); ++p) {
        const auto from = certificate.pair_at(p);
        const auto to = certificate.sigma[p];
        sigma.push_back({{"from", {from.factor, from.row}}, {"to", {to.factor, to.row}}});
        // phi[p] : L_{p.factor} -> L_{sigma^{-1}(p).factor}
        const auto target = certificate.pair_at(sigma_inv[p]);
        json table = json::object();
        const auto &dom = *F.factors[from.factor];
        const auto &cod = *F.factors[target.factor];
        for (Element a = 0; a < dom.size(); ++a) table[dom.label(a)] = cod.label(certificate.phi[p][a]);
        phi.push_back({{"pair", {from.factor, from.row}}, {"onto", {target.factor, target.row}}, {"map", table}});
    }
    return {{"factors", F.factor_count()}, {"n", certificate.n}, {"cycles", sigma_cycles(certificate)},
            {"sigma", sigma}, {"phi", phi}};
}

} // namespace resmat::io
