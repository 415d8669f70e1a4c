// Python bindings: the main operations as plain functions returning python
//-native structures (dicts, lists, ints), mirroring the CLI's JSON shapes.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <vector>

#include "spherebasis/bases.hpp"
#include "spherebasis/cells.hpp"
#include "spherebasis/complex.hpp"
#include "spherebasis/conjectures.hpp"
#include "spherebasis/counting.hpp"
#include "spherebasis/decompose.hpp"
#include "spherebasis/serialize.hpp"

namespace py = pybind11;
using namespace sphb;

namespace {

Family family_of(const std::string& name) {
    if (name == "cube") return Family::cube;
    if (name == "simplex") return Family::simplex;
    throw std::invalid_argument("unknown family '" + name + "' (expected cube or simplex)");
}

py::object to_pyint(const counting::Count& value) {
    const std::string digits = value.str();
    PyObject* p = PyLong_FromString(digits.c_str(), nullptr, 10);
    if (p == nullptr) throw py::error_already_set();
    return py::reinterpret_steal<py::object>(p);
}

std::vector<std::string> chain_texts(const Chain& chain) {
    std::vector<std::string> out;
    out.reserve(chain.size());
    for (const auto& cell : chain.cells()) out.push_back(format_cell(cell));
    return out;
}

Chain chain_from_texts(const Ambient& ambient, int k,
                       const std::vector<std::string>& texts) {
    std::vector<Cell> cells;
    cells.reserve(texts.size());
    for (const auto& text : texts) {
        Cell cell = parse_cell(text, ambient);
        if (cell.dim() != k)
            throw std::invalid_argument("cell '" + text + "' has dimension " +
                                        std::to_string(cell.dim()) + ", expected " +
                                        std::to_string(k));
        cells.push_back(std::move(cell));
    }
    return Chain::from_cells(ambient, k, cells);
}

py::dict decomposition_dict(const DecompositionResult& result) {
    py::dict d;
    d["indices"] = result.indices;
    d["method"] = result.method;
    d["residual"] = chain_texts(result.residual);
    return d;
}

py::dict certificate_dict(const SurfaceCertificate& cert) {
    py::dict d;
    d["closed_surface"] = cert.closed_surface;
    d["connected"] = cert.connected;
    d["euler"] = cert.euler;
    d["betti"] = cert.betti;
    return d;
}

SphereBasis basis_of(const std::string& family, int n, int k) {
    return family_of(family) == Family::cube ? cube_basis(n, k) : simplex_basis(n, k);
}

}  // namespace

PYBIND11_MODULE(_spherebasis, m) {
    m.doc() = "canonical sphere bases for skeleta of the cube and the simplex over Z2";

    py::register_exception<NotACycleError>(m, "NotACycleError", PyExc_ValueError);

    m.def(
        "cells",
        [](const std::string& family, int n, int j) {
            std::vector<std::string> out;
            for (const auto& cell : enumerate_cells(Ambient{family_of(family), n}, j))
                out.push_back(format_cell(cell));
            return out;
        },
        py::arg("family"), py::arg("n"), py::arg("j"),
        "All j-cells of the ambient, in canonical order.");

    m.def(
        "betti",
        [](const std::string& family, int n, int k) {
            return betti_profile(SkeletonSpec{{family_of(family), n}, k});
        },
        py::arg("family"), py::arg("n"), py::arg("k"),
        "Unreduced Z2 Betti numbers b_0..b_k of the k-skeleton.");

    m.def(
        "basis",
        [](const std::string& family, int n, int k) {
            const SphereBasis basis = basis_of(family, n, k);
            py::list out;
            for (const auto& e : basis.elements) {
                py::dict d;
                d["generator"] = format_cell(e.generator);
                d["private_face"] = format_cell(e.private_face);
                d["level"] = e.level;
                d["cells"] = chain_texts(e.chain);
                out.append(std::move(d));
            }
            return out;
        },
        py::arg("family"), py::arg("n"), py::arg("k"),
        "The canonical sphere basis of the k-skeleton, one dict per element.");

    m.def(
        "coverage",
        [](const std::string& family, int n, int k) {
            return coverage_check(basis_of(family, n, k));
        },
        py::arg("family"), py::arg("n"), py::arg("k"),
        "True iff the union of the basis element chains is the whole set of k-cells.");

    m.def(
        "decompose",
        [](const std::string& family, int n, int k, const std::vector<std::string>& cells,
           const std::string& method) {
            const Family fam = family_of(family);
            const Ambient ambient{fam, n};
            const Chain z = chain_from_texts(ambient, k, cells);
            const SphereBasis basis = basis_of(family, n, k);
            DecompositionResult result{{}, Chain(ambient, k), ""};
            if (method == "solve") {
                result = oracle_decompose(z, basis);
            } else if (method == "cone" ||
                       (method == "auto" && fam == Family::simplex)) {
                if (fam != Family::simplex)
                    throw std::invalid_argument("method cone applies to the simplex family only");
                result = simplex_decompose(z, basis);
            } else if (method == "peel" || (method == "auto" && fam == Family::cube)) {
                if (fam != Family::cube)
                    throw std::invalid_argument("method peel applies to the cube family only");
                result = cube_decompose(z, basis);
            } else {
                throw std::invalid_argument("unknown method '" + method +
                                            "' (expected auto, cone, peel, or solve)");
            }
            return decomposition_dict(result);
        },
        py::arg("family"), py::arg("n"), py::arg("k"), py::arg("cells"),
        py::arg("method") = "auto",
        "Decompose an even complex (given as a list of k-cell texts) over the basis.");

    m.def(
        "surface_certificate",
        [](const std::string& family, int n, int k, const std::vector<std::string>& cells) {
            const Ambient ambient{family_of(family), n};
            return certificate_dict(surface_certificate(chain_from_texts(ambient, k, cells)));
        },
        py::arg("family"), py::arg("n"), py::arg("k"), py::arg("cells"),
        "Closed-surface evidence for a k-chain (Z2 invariants only).");

    // exact counting: python ints of unbounded size
    m.def("binomial", [](int n, int k) { return to_pyint(counting::binomial(n, k)); },
          py::arg("n"), py::arg("k"));
    m.def("s", [](int n, int k) { return to_pyint(counting::s(n, k)); }, py::arg("n"),
          py::arg("k"), "Number of spheres in the cube basis of the k-skeleton.");
    m.def("m", [](int n, int k) { return to_pyint(counting::m(n, k)); }, py::arg("n"),
          py::arg("k"));
    m.def("mprime", [](int n, int k) { return to_pyint(counting::m_prime(n, k)); },
          py::arg("n"), py::arg("k"));
    m.def("bw", [](int n, int k) { return to_pyint(counting::bw(n, k)); }, py::arg("n"),
          py::arg("k"));
    m.def("gr", [](int n, int k) { return to_pyint(counting::gr(n, k)); }, py::arg("n"),
          py::arg("k"));

    m.def(
        "verify_identities",
        [](int nmax_sm, int nmax_bw) {
            py::list out;
            for (const auto& r : counting::verify_identities(nmax_sm, nmax_bw)) {
                py::dict d;
                d["name"] = r.name;
                d["holds"] = r.holds;
                if (!r.holds) {
                    d["n"] = r.n;
                    d["k"] = r.k;
                }
                out.append(std::move(d));
            }
            return out;
        },
        py::arg("nmax_sm") = 25, py::arg("nmax_bw") = 20,
        "Sweep the counting identities; each report carries name and verdict.");

    m.def(
        "torus_build",
        []() {
            const TorusReport r = torus_build();
            py::dict d;
            d["pair_found"] = r.pair_found;
            d["excluded"] = r.excluded;
            d["squares"] = chain_texts(r.torus);
            d["decomposition"] = decomposition_dict(r.decomposition);
            d["certificate"] = certificate_dict(r.certificate);
            d["note"] = r.note;
            return d;
        },
        "Exclusion search for a toroidal sum over the (4,2) cube basis.");

    m.def(
        "robust_check_all",
        [](int n, std::size_t budget) {
            const RobustReport r = robust_check_all(n, budget);
            py::dict d;
            d["n"] = r.n;
            d["circuits"] = r.circuits;
            d["verified"] = r.verified;
            d["failed"] = r.failed;
            d["inconclusive"] = r.inconclusive;
            return d;
        },
        py::arg("n"), py::arg("budget") = std::size_t{1000000},
        "Connected-sum orderings for every circuit of the complete graph on n+1 vertices.");

    m.def(
        "spanning_tree_check",
        [](const std::string& family, int n, int k) {
            const TreeCheckReport r = spanning_tree_check(family_of(family), n, k);
            py::dict d;
            d["facet_count"] = r.facet_count;
            d["boundary_rank"] = r.boundary_rank;
            d["independent"] = r.independent;
            d["verdict"] = r.verdict;
            d["z2_analog_only"] = r.z2_analog_only;
            return d;
        },
        py::arg("family"), py::arg("n"), py::arg("k"),
        "Spanning-tree analogy check for the k-skeleton (Z2 analog only).");

    m.def(
        "off_export",
        [](int n, const std::vector<std::string>& cells) {
            const Ambient ambient{Family::cube, n};
            return io::off_export(chain_from_texts(ambient, 2, cells));
        },
        py::arg("n"), py::arg("cells"),
        "OFF mesh text for a nonempty 2-chain in the n-cube.");
}
