#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "resmat/catalog.hpp"
#include "resmat/errors.hpp"
#include "resmat/factorization.hpp"
#include "resmat/matrix.hpp"
#include "resmat/oracle.hpp"
#include "resmat/random.hpp"
#include "resmat/semiring.hpp"

namespace py = pybind11;
using namespace resmat;

namespace {

// pybind11 needs a mutable holder; only const members are exposed.
using Handle = std::shared_ptr<FiniteLattice>;
Handle handle(const LatticePtr &L) { return std::const_pointer_cast<FiniteLattice>(L); }

using Table = std::vector<Element>;
using Entries = std::vector<std::vector<Table>>;

py::int_ to_python(const BigCount &c) { return py::reinterpret_steal<py::int_>(PyLong_FromString(c.str().c_str(), nullptr, 10)); }

ResMatrix to_matrix(const LatticePtr &L, const Entries &rows) {
    const std::size_t n = rows.size();
    std::vector<ResiduatedMap> entries;
    for (const auto &row : rows) {
        if (row.size() != n) throw Error(ErrorKind::ShapeMismatch, "matrix must be square");
        for (const auto &t : row) entries.push_back(make_map(L, t));
    }
    return ResMatrix(L, n, std::move(entries));
}

Entries from_matrix(const ResMatrix &M) {
    Entries rows(M.size());
    for (std::size_t i = 0; i < M.size(); ++i)
        for (std::size_t j = 0; j < M.size(); ++j) rows[i].push_back(M.at(i, j).values());
    return rows;
}

} // namespace

PYBIND11_MODULE(_resmat, m) {
    m.doc() = "Finite lattices, residuated maps and invertible matrices";

    // Messages start with the error kind, e.g. "NotResiduated: ...".
    py::register_exception<Error>(m, "Error", PyExc_ValueError);

    py::class_<FiniteLattice, Handle>(m, "Lattice")
        .def_static(
            "from_covers",
            [](std::vector<std::string> labels, std::vector<std::pair<std::string, std::string>> covers) {
                return handle(FiniteLattice::from_covers(std::move(labels), std::move(covers)));
            },
            py::arg("labels"), py::arg("covers"))
        .def_static("builtin", [](const std::string &name) { return handle(catalog::lattice(name)); }, py::arg("name"))
        .def_property_readonly("size", &FiniteLattice::size)
        .def_property_readonly("labels", &FiniteLattice::labels)
        .def_property_readonly("bottom", &FiniteLattice::bottom)
        .def_property_readonly("top", &FiniteLattice::top)
        .def("leq", &FiniteLattice::leq)
        .def("join", &FiniteLattice::join)
        .def("meet", &FiniteLattice::meet)
        .def("find", &FiniteLattice::find)
        .def("__len__", &FiniteLattice::size)
        .def("__repr__", [](const FiniteLattice &L) { return "<Lattice " + catalog::describe(L) + ">"; });

    m.def("product", [](const std::vector<Handle> &factors) {
        return handle(product(std::vector<LatticePtr>(factors.begin(), factors.end())).source());
    });

    m.def(
        "factor",
        [](const Handle &L) {
            std::vector<std::pair<std::string, std::size_t>> out;
            for (const auto &g : factorize(L).grouped)
                out.emplace_back(catalog::describe(*g.representative), g.multiplicity);
            return out;
        },
        "Irreducible factor classes as (name, multiplicity) pairs.");
    m.def("aut_count", [](const Handle &L) { return to_python(aut_count(factorize(L).grouped)); });
    m.def("is_irreducible", [](const Handle &L) { return is_irreducible(L); });

    m.def("residuated_maps", [](const Handle &L) {
        std::vector<Table> out;
        for (const auto &f : all_residuated_maps(L)) out.push_back(f.values());
        return out;
    });

    m.def("count_invertible",
          [](const Handle &L, std::size_t n) { return to_python(count_invertible(factorize(L), n)); });
    m.def("is_invertible", [](const Handle &L, const Entries &rows) {
        return check_invertible(to_matrix(L, rows), factorize(L)).has_value();
    });
    m.def(
        "invert",
        [](const Handle &L, const Entries &rows) -> std::optional<Entries> {
            const auto M = to_matrix(L, rows);
            const auto cert = check_invertible(M, factorize(L));
            if (!cert) return std::nullopt;
            return from_matrix(invert(M, *cert));
        },
        "Inverse as value tables, or None.");
    m.def("mat_mul", [](const Handle &L, const Entries &a, const Entries &b) {
        return from_matrix(mat_mul(to_matrix(L, a), to_matrix(L, b)));
    });
    m.def(
        "random_invertible",
        [](const Handle &L, std::size_t n, std::uint64_t seed) {
            return from_matrix(random_invertible(factorize(L), n, seed));
        },
        py::arg("lattice"), py::arg("n"), py::arg("seed") = SeededRng::default_seed);
    m.def("oracle_is_invertible",
          [](const Handle &L, const Entries &rows) { return oracle::is_invertible(to_matrix(L, rows)); });

    m.def(
        "validate_semiring",
        [](std::vector<std::string> labels, Table add, Table mul, Element zero, Element one) {
            validate_semiring(std::move(labels), std::move(add), std::move(mul), zero, one);
        },
        "Raises Error naming the first failing axiom.");
    m.def(
        "generated_semiring_size",
        [](const Handle &L) {
            const auto g = generate_simple_semiring(L);
            return std::make_pair(g.size(), g.one.has_value());
        },
        "Size of the closure of the e-maps and whether it has a one.");
}
