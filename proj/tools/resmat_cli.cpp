#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "resmat/catalog.hpp"
#include "resmat/errors.hpp"
#include "resmat/factorization.hpp"
#include "resmat/io.hpp"
#include "resmat/matrix.hpp"
#include "resmat/oracle.hpp"
#include "resmat/random.hpp"
#include "resmat/semiring.hpp"

namespace fs = std::filesystem;
using namespace resmat;
using io::json;

namespace {

enum Exit : int { ok = 0, negative = 1, input_error = 2, inconsistent = 3 };

struct Options {
    bool json = false;
    unsigned threads = 1;
    std::string output;
};

Options opts;

void emit(const std::string &text) {
    if (opts.output.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(opts.output);
    if (!out) throw Error(ErrorKind::InvalidInput, "cannot write '" + opts.output + "'");
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
}

// Like dump(2), but arrays of scalars stay on one line.
void format_json(std::ostream &out, const json &doc, int depth) {
    const std::string pad(2 * (depth + 1), ' '), close(2 * depth, ' ');
    if (doc.is_array()) {
        const bool flat = std::all_of(doc.begin(), doc.end(), [](const json &v) { return v.is_primitive(); });
        if (doc.empty() || flat) {
            out << doc.dump();
            return;
        }
        out << "[\n";
        for (std::size_t i = 0; i < doc.size(); ++i) {
            out << pad;
            format_json(out, doc[i], depth + 1);
            out << (i + 1 < doc.size() ? ",\n" : "\n");
        }
        out << close << "]";
    } else if (doc.is_object() && !doc.empty()) {
        out << "{\n";
        std::size_t i = 0;
        for (auto it = doc.begin(); it != doc.end(); ++it, ++i) {
            out << pad << json(it.key()).dump() << ": ";
            format_json(out, it.value(), depth + 1);
            out << (i + 1 < doc.size() ? ",\n" : "\n");
        }
        out << close << "}";
    } else {
        out << doc.dump();
    }
}

void emit(const json &doc) {
    std::ostringstream out;
    format_json(out, doc, 0);
    emit(out.str());
}

bool is_builtin_ref(const std::string &spec) {
    if (spec.rfind("builtin:", 0) == 0) return true;
    if (fs::exists(spec)) return false;
    for (const auto &e : catalog::entries())
        if (e.name == spec) return true;
    return false;
}

// A base reference from a document in `from_dir`, rewritten so it still
// resolves from wherever the output goes.
std::string rebase(const std::string &base, const fs::path &from_dir) {
    if (base.rfind("builtin:", 0) == 0) return base;
    const fs::path resolved = fs::path(base).is_absolute() ? fs::path(base) : from_dir / base;
    if (!fs::exists(resolved)) return base; // a bare builtin name
    const fs::path to_dir = opts.output.empty() ? fs::current_path() : fs::absolute(opts.output).parent_path();
    return fs::proximate(fs::absolute(resolved), to_dir).generic_string();
}

std::string join_labels(const std::vector<std::string> &items, const std::string &sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
    return out;
}

std::string cover_list(const FiniteLattice &L) {
    std::vector<std::string> items;
    for (auto [lo, hi] : L.covers()) items.push_back(L.label(lo) + "<" + L.label(hi));
    std::sort(items.begin(), items.end());
    return items.empty() ? "(none)" : join_labels(items, " ");
}

std::string map_text(const FiniteLattice &dom, const FiniteLattice &cod, const std::vector<Element> &table) {
    std::vector<std::string> items;
    for (Element x = 0; x < dom.size(); ++x) items.push_back(dom.label(x) + "->" + cod.label(table[x]));
    return join_labels(items, " ");
}

std::string values_text(const ResiduatedMap &f) {
    std::vector<std::string> items;
    for (Element v : f.values()) items.push_back(f.lattice()->label(v));
    return "[" + join_labels(items, ",") + "]";
}

std::string permutation_cycles(const FiniteLattice &L, const Bijection &p) {
    std::vector<char> seen(p.size(), 0);
    std::string out;
    for (Element s = 0; s < p.size(); ++s) {
        if (seen[s] || p[s] == s) continue;
        std::vector<std::string> cycle;
        for (Element x = s; !seen[x]; x = p[x]) {
            seen[x] = 1;
            cycle.push_back(L.label(x));
        }
        out += "(" + join_labels(cycle, " ") + ")";
    }
    return out.empty() ? "()" : out;
}

// ---- lattice ---------------------------------------------------------------

int lattice_validate(const std::string &spec) {
    const auto L = io::load_lattice(spec);
    if (opts.json) {
        emit(json{{"valid", true},
                  {"size", L->size()},
                  {"height", L->height(L->top())},
                  {"join_irreducibles", L->join_irreducibles().size()},
                  {"bottom", L->label(L->bottom())},
                  {"top", L->label(L->top())},
                  {"lattice", io::lattice_to_json(*L)}});
    } else {
        std::ostringstream out;
        out << "valid lattice: " << L->size() << " elements, " << L->covers().size() << " covers, height "
            << L->height(L->top()) << ", " << L->join_irreducibles().size() << " join-irreducibles, bottom "
            << L->label(L->bottom()) << ", top " << L->label(L->top());
        emit(out.str());
    }
    return ok;
}

int lattice_factor(const std::string &spec) {
    const auto L = io::load_lattice(spec);
    const auto F = factorize(L);
    const auto count = aut_count(F.grouped);
    std::vector<std::string> names;
    for (const auto &f : F.factors) names.push_back(catalog::describe(*f));

    if (opts.json) {
        json factors = json::array(), classes = json::array();
        for (std::size_t t = 0; t < F.factor_count(); ++t)
            factors.push_back({{"name", names[t]}, {"lattice", io::lattice_to_json(*F.factors[t])}});
        for (const auto &g : F.grouped)
            classes.push_back({{"name", catalog::describe(*g.representative)},
                               {"multiplicity", g.multiplicity},
                               {"members", g.members},
                               {"automorphisms", automorphisms(*g.representative).size()}});
        emit(json{{"factors", factors}, {"classes", classes}, {"aut_count", count.str()}});
        return ok;
    }

    std::ostringstream out;
    const std::size_t k = F.factor_count();
    out << k << (k == 1 ? " factor" : " factors");
    if (k > 0) out << ": " << join_labels(names, " × ");
    out << "; |Aut| = " << count << "\n";
    for (std::size_t t = 0; t < k; ++t)
        out << "factor " << t << ": " << names[t] << ", " << F.factors[t]->size()
            << " elements, covers " << cover_list(*F.factors[t]) << "\n";
    for (const auto &g : F.grouped)
        out << "class " << catalog::describe(*g.representative) << ": multiplicity " << g.multiplicity
            << ", |Aut| = " << automorphisms(*g.representative).size() << "\n";
    emit(out.str());
    return ok;
}

int lattice_aut(const std::string &spec, std::size_t limit) {
    const auto L = io::load_lattice(spec);
    const auto auts = automorphisms(*L);
    if (opts.json) {
        json list = json::array();
        for (std::size_t i = 0; i < auts.size() && i < limit; ++i) {
            json m = json::object();
            for (Element x = 0; x < L->size(); ++x) m[L->label(x)] = L->label(auts[i][x]);
            list.push_back(m);
        }
        emit(json{{"count", auts.size()}, {"automorphisms", list}});
        return ok;
    }
    std::ostringstream out;
    out << "|Aut| = " << auts.size() << "\n";
    for (std::size_t i = 0; i < auts.size() && i < limit; ++i) out << permutation_cycles(*L, auts[i]) << "\n";
    if (auts.size() > limit) out << "(" << auts.size() - limit << " more)\n";
    emit(out.str());
    return ok;
}

// ---- semiring --------------------------------------------------------------

int semiring_validate(const std::string &spec) {
    const auto R = io::load_semiring(spec);
    if (opts.json)
        emit(json{{"valid", true}, {"size", R->size()}, {"semiring", io::semiring_to_json(*R)}});
    else
        emit("valid semiring: " + std::to_string(R->size()) + " elements, zero " + R->label(R->zero()) + ", one " +
             R->label(R->one()));
    return ok;
}

int semiring_order_lattice(const std::string &spec) {
    const auto R = io::load_semiring(spec);
    const auto L = natural_order_lattice(*R);
    if (opts.json)
        emit(io::lattice_to_json(*L));
    else
        emit(std::to_string(L->size()) + " elements, covers " + cover_list(*L));
    return ok;
}

int semiring_embed(const std::string &spec) {
    const auto R = io::load_semiring(spec);
    const auto E = embed(*R);
    if (opts.json) {
        json maps = json::object();
        for (Element r = 0; r < R->size(); ++r) maps[R->label(r)] = io::map_to_json(E.maps[r]);
        emit(json{{"lattice", io::lattice_to_json(*E.lattice)}, {"maps", maps}});
        return ok;
    }
    std::ostringstream out;
    out << "order lattice labels " << join_labels(E.lattice->labels(), ",") << "\n";
    for (Element r = 0; r < R->size(); ++r) out << R->label(r) << " -> " << values_text(E.maps[r]) << "\n";
    emit(out.str());
    return ok;
}

int semiring_generate(const std::string &lattice_spec, bool with_identity, std::size_t cap) {
    const auto L = io::load_lattice(lattice_spec);
    std::vector<ResiduatedMap> extras;
    if (with_identity) extras.push_back(ResiduatedMap::identity(L));
    const auto g = generate_simple_semiring(L, extras, cap);
    if (opts.json) {
        emit(io::generated_semiring_to_json(g));
        return ok;
    }
    std::ostringstream out;
    out << g.size() << " elements, " << (g.one ? "has a one" : "no multiplicative one") << "\n";
    for (std::size_t k = 0; k < g.size(); ++k) {
        out << g.element_label(k);
        if (k == g.zero) out << " (zero)";
        if (g.one && k == *g.one) out << " (one)";
        out << "\n";
    }
    emit(out.str());
    return ok;
}

// ---- matrix ----------------------------------------------------------------

// A loaded matrix as a matrix of residuated maps, embedding semiring matrices.
struct ResView {
    std::optional<ResMatrix> matrix;
    std::shared_ptr<const Factorization> factorization;
};

ResView res_view(const io::MatrixDocument &doc) {
    ResView v;
    if (doc.is_res()) {
        v.matrix = std::get<ResMatrix>(doc.matrix);
    } else {
        const auto &S = std::get<SemiringMatrix>(doc.matrix);
        v.matrix = embed_matrix(S, embed(*S.semiring()));
    }
    v.factorization = std::make_shared<const Factorization>(factorize(v.matrix->lattice()));
    return v;
}

std::string certificate_text(const InvertibilityCertificate &cert) {
    const auto &F = *cert.factorization;
    std::ostringstream out;
    out << "sigma: " << io::sigma_cycles(cert) << "\n";
    const auto sigma_inv = cert.sigma_inverse();
    for (std::size_t p = 0; p < cert.sigma.size(); ++p) {
        const auto from = cert.pair_at(p);
        const auto onto = cert.pair_at(sigma_inv[p]);
        out << "phi (" << from.factor << "," << from.row << ") -> (" << onto.factor << "," << onto.row
            << "): " << map_text(*F.factors[from.factor], *F.factors[onto.factor], cert.phi[p]) << "\n";
    }
    return out.str();
}

int matrix_check(const std::string &path) {
    const auto doc = io::load_matrix(path);
    const auto view = res_view(doc);
    const auto cert = check_invertible(*view.matrix, *view.factorization);
    if (opts.json) {
        json out{{"invertible", cert.has_value()}};
        if (cert) out["certificate"] = io::certificate_to_json(*cert);
        emit(out);
    } else {
        emit(cert ? "invertible\n" + certificate_text(*cert) : std::string("not invertible"));
    }
    return cert ? ok : negative;
}

int matrix_invert(const std::string &path) {
    const auto doc = io::load_matrix(path);
    const auto base = rebase(doc.base, fs::absolute(path).parent_path());
    if (!doc.is_res()) {
        const auto inv = semiring_matrix_invert(std::get<SemiringMatrix>(doc.matrix));
        if (!inv) {
            std::cerr << "not invertible\n";
            return negative;
        }
        emit(io::matrix_to_json(*inv, base));
        return ok;
    }
    const auto &M = std::get<ResMatrix>(doc.matrix);
    const auto F = factorize(M.lattice());
    const auto cert = check_invertible(M, F);
    if (!cert) {
        std::cerr << "not invertible\n";
        return negative;
    }
    emit(io::matrix_to_json(invert(M, *cert), base));
    return ok;
}

int matrix_mul(const std::string &left, const std::string &right) {
    const auto a = io::load_matrix(left);
    const auto b = io::load_matrix(right);
    if (a.is_res() != b.is_res()) throw Error(ErrorKind::ShapeMismatch, "cannot multiply a res matrix by a semiring matrix");
    const auto base = rebase(a.base, fs::absolute(left).parent_path());
    if (a.is_res())
        emit(io::matrix_to_json(mat_mul(std::get<ResMatrix>(a.matrix), std::get<ResMatrix>(b.matrix)), base));
    else
        emit(io::matrix_to_json(mat_mul(std::get<SemiringMatrix>(a.matrix), std::get<SemiringMatrix>(b.matrix)), base));
    return ok;
}

int matrix_count(const std::string &spec, std::size_t n, bool brute_force) {
    if (n == 0) throw Error(ErrorKind::InvalidInput, "--n must be at least 1");
    const auto L = io::load_lattice(spec);
    const auto F = factorize(L);
    const auto formula = count_invertible(F, n);
    if (!brute_force) {
        emit(opts.json ? json{{"n", n}, {"count", formula.str()}}.dump(2) : formula.str());
        return ok;
    }
    const auto alphabet = all_residuated_maps(L);
    double matrices = 1;
    for (std::size_t k = 0; k < n * n; ++k) matrices *= static_cast<double>(alphabet.size());
    if (matrices > 5e7)
        throw Error(ErrorKind::SpaceTooLarge, "brute force would enumerate " + std::to_string(matrices) + " matrices");
    const auto r = oracle::exhaustive_sweep(alphabet, n, F, false, opts.threads);
    const bool agree = formula == r.oracle_invertible;
    if (opts.json)
        emit(json{{"n", n}, {"count", formula.str()}, {"brute_force", r.oracle_invertible}, {"matrices", r.total}});
    else
        emit("formula: " + formula.str() + "\nbrute force: " + std::to_string(r.oracle_invertible) + " of " +
             std::to_string(r.total));
    return agree ? ok : inconsistent;
}

// ---- oracle ----------------------------------------------------------------

int oracle_check(const std::string &path, bool compare) {
    const auto doc = io::load_matrix(path);
    const auto view = res_view(doc);
    const bool by_oracle = oracle::is_invertible(*view.matrix, oracle::default_tuple_cap, opts.threads);
    std::optional<bool> structural;
    if (compare) structural = check_invertible(*view.matrix, *view.factorization).has_value();
    if (opts.json) {
        json out{{"invertible", by_oracle}};
        if (structural) out["structural"] = *structural;
        emit(out);
    } else {
        std::string text = std::string("oracle: ") + (by_oracle ? "invertible" : "not invertible");
        if (structural) text += std::string("\nstructural: ") + (*structural ? "invertible" : "not invertible");
        emit(text);
    }
    if (structural && *structural != by_oracle) return inconsistent;
    return by_oracle ? ok : negative;
}

int oracle_invert(const std::string &path, bool compare) {
    const auto doc = io::load_matrix(path);
    const auto view = res_view(doc);
    const auto &M = *view.matrix;
    if (!oracle::is_invertible(M, oracle::default_tuple_cap, opts.threads)) {
        std::cerr << "not invertible\n";
        return negative;
    }
    const auto inv = oracle::inverse(M);
    if (compare) {
        const auto cert = check_invertible(M, *view.factorization);
        if (!cert || !(invert(M, *cert) == inv)) {
            std::cerr << "structural inverse differs from the oracle\n";
            return inconsistent;
        }
    }
    const auto base = rebase(doc.base, fs::absolute(path).parent_path());
    if (doc.is_res()) {
        emit(io::matrix_to_json(inv, base));
        return ok;
    }
    const auto &S = std::get<SemiringMatrix>(doc.matrix);
    std::vector<Element> entries;
    for (const auto &f : inv.entries()) entries.push_back(pullback_element(f, *S.semiring()));
    emit(io::matrix_to_json(SemiringMatrix(S.semiring(), S.size(), std::move(entries)), base));
    return ok;
}

int oracle_sweep(const std::string &spec, std::size_t n, bool generalized) {
    const auto L = io::load_lattice(spec);
    const auto F = factorize(L);
    if (generalized && F.factor_count() != 1)
        throw Error(ErrorKind::LatticeNotIrreducible,
                    "--generalized only applies to irreducible lattices; this one has " +
                        std::to_string(F.factor_count()) + " factors");
    const auto alphabet = all_residuated_maps(L);
    double matrices = 1;
    for (std::size_t k = 0; k < n * n; ++k) matrices *= static_cast<double>(alphabet.size());
    if (matrices > 5e7)
        throw Error(ErrorKind::SpaceTooLarge, "sweep would enumerate " + std::to_string(matrices) + " matrices");
    const auto r = oracle::exhaustive_sweep(alphabet, n, F, generalized, opts.threads);
    if (opts.json) {
        json out{{"matrices", r.total},
                 {"structural_invertible", r.structural_invertible},
                 {"oracle_invertible", r.oracle_invertible},
                 {"disagreements", r.disagreements}};
        if (generalized) out["generalized_permutation"] = r.generalized_permutation;
        if (r.first_disagreement) out["first_disagreement"] = *r.first_disagreement;
        emit(out);
    } else {
        std::ostringstream out;
        out << "matrices: " << r.total << "\nstructural invertible: " << r.structural_invertible
            << "\noracle invertible: " << r.oracle_invertible << "\n";
        if (generalized) out << "generalized permutation: " << r.generalized_permutation << "\n";
        out << "disagreements: " << r.disagreements << "\n";
        if (r.first_disagreement) out << "first disagreement: matrix #" << *r.first_disagreement << "\n";
        emit(out.str());
    }
    return r.disagreements == 0 ? ok : inconsistent;
}

// ---- gen -------------------------------------------------------------------

int gen_random_invertible(const std::string &spec, std::size_t n, std::uint64_t seed) {
    if (n == 0) throw Error(ErrorKind::InvalidInput, "--n must be at least 1");
    const auto L = io::load_lattice(spec);
    const auto F = factorize(L);
    const auto M = random_invertible(F, n, seed);
    const std::string base = is_builtin_ref(spec) && spec.rfind("builtin:", 0) != 0 ? "builtin:" + spec
                                                                                      : rebase(spec, fs::current_path());
    emit(io::matrix_to_json(M, base));
    return ok;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Finite lattices, residuated maps, semirings and invertible matrices"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", opts.json, "Machine-readable JSON output");
    app.add_option("--threads", opts.threads, "Worker threads for oracle sweeps")->check(CLI::Range(1u, 256u));
    app.add_option("-o,--output", opts.output, "Write the result to a file instead of stdout");

    int code = ok;
    auto set = [&code](auto fn) { return [&code, fn] { code = fn(); }; };

    std::string target, lattice_spec;
    std::size_t n = 1, limit = 100, cap = 4096;
    std::uint64_t seed = SeededRng::default_seed;
    bool with_identity = false, compare = false, brute_force = false, generalized = false;

    auto *lattice = app.add_subcommand("lattice", "Lattice operations")->require_subcommand(1);
    auto *lv = lattice->add_subcommand("validate", "Check that a file describes a lattice");
    lv->add_option("lattice", target, "File or builtin name")->required();
    lv->callback(set([&] { return lattice_validate(target); }));
    auto *lf = lattice->add_subcommand("factor", "Factor into irreducible direct factors");
    lf->add_option("lattice", target, "File or builtin name")->required();
    lf->callback(set([&] { return lattice_factor(target); }));
    auto *la = lattice->add_subcommand("aut", "List automorphisms");
    la->add_option("lattice", target, "File or builtin name")->required();
    la->add_option("--limit", limit, "Print at most this many automorphisms");
    la->callback(set([&] { return lattice_aut(target, limit); }));

    auto *semiring = app.add_subcommand("semiring", "Semiring operations")->require_subcommand(1);
    auto *sv = semiring->add_subcommand("validate", "Check the semiring axioms");
    sv->add_option("semiring", target, "File or builtin name")->required();
    sv->callback(set([&] { return semiring_validate(target); }));
    auto *so = semiring->add_subcommand("order-lattice", "Natural order lattice");
    so->add_option("semiring", target, "File or builtin name")->required();
    so->callback(set([&] { return semiring_order_lattice(target); }));
    auto *se = semiring->add_subcommand("embed", "Embedding into residuated maps");
    se->add_option("semiring", target, "File or builtin name")->required();
    se->callback(set([&] { return semiring_embed(target); }));
    auto *sg = semiring->add_subcommand("generate", "Closure of the e-maps of a lattice");
    sg->add_option("--lattice", lattice_spec, "File or builtin name")->required();
    sg->add_flag("--with-identity", with_identity, "Add the identity map as a generator");
    sg->add_option("--cap", cap, "Maximum closure size");
    sg->callback(set([&] { return semiring_generate(lattice_spec, with_identity, cap); }));

    auto *matrix = app.add_subcommand("matrix", "Matrix operations")->require_subcommand(1);
    auto *mc = matrix->add_subcommand("check", "Decide invertibility and print a certificate");
    mc->add_option("file", target, "Matrix file")->required();
    mc->callback(set([&] { return matrix_check(target); }));
    auto *mi = matrix->add_subcommand("invert", "Write the inverse in the same format");
    mi->add_option("file", target, "Matrix file")->required();
    mi->callback(set([&] { return matrix_invert(target); }));
    std::string second;
    auto *mm = matrix->add_subcommand("mul", "Product of two matrices over the same base");
    mm->add_option("left", target, "Matrix file")->required();
    mm->add_option("right", second, "Matrix file")->required();
    mm->callback(set([&] { return matrix_mul(target, second); }));
    auto *mn = matrix->add_subcommand("count", "Number of invertible n x n matrices");
    mn->add_option("lattice", target, "File or builtin name")->required();
    mn->add_option("--n", n, "Matrix size")->required();
    mn->add_flag("--brute-force", brute_force, "Also count by exhaustive enumeration");
    mn->callback(set([&] { return matrix_count(target, n, brute_force); }));

    auto *orc = app.add_subcommand("oracle", "Brute-force checks on the tuple space")->require_subcommand(1);
    auto *oc = orc->add_subcommand("check", "Invertibility by bijectivity of the action");
    oc->add_option("file", target, "Matrix file")->required();
    oc->add_flag("--compare", compare, "Also run the structural check");
    oc->callback(set([&] { return oracle_check(target, compare); }));
    auto *oi = orc->add_subcommand("invert", "Inverse by the order of the action");
    oi->add_option("file", target, "Matrix file")->required();
    oi->add_flag("--compare", compare, "Also compare with the structural inverse");
    oi->callback(set([&] { return oracle_invert(target, compare); }));
    auto *os = orc->add_subcommand("sweep", "Compare both routes on every n x n matrix");
    os->add_option("--lattice", lattice_spec, "File or builtin name")->required();
    os->add_option("--n", n, "Matrix size")->required();
    os->add_flag("--generalized", generalized, "Also compare the generalized-permutation test");
    os->callback(set([&] { return oracle_sweep(lattice_spec, n, generalized); }));

    auto *gen = app.add_subcommand("gen", "Generators")->require_subcommand(1);
    auto *gr = gen->add_subcommand("random-invertible", "Seeded random invertible matrix");
    gr->add_option("--lattice", lattice_spec, "File or builtin name")->required();
    gr->add_option("--n", n, "Matrix size")->required();
    gr->add_option("--seed", seed, "Random seed");
    gr->callback(set([&] { return gen_random_invertible(lattice_spec, n, seed); }));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        std::cerr << app.help();
        return input_error;
    } catch (const AxiomViolation &e) {
        const std::string message = e.what();
        const auto open = message.find(e.axiom() + " (");
        std::cerr << "error: axiom violated: " << e.axiom() << "\n";
        if (open != std::string::npos && message.back() == ')') {
            const auto from = open + e.axiom().size() + 2;
            std::cerr << "witness: " << message.substr(from, message.size() - from - 1) << "\n";
        }
        return input_error;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return input_error;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return input_error;
    }
    return code;
}
