// Python bindings for the main operations: graphs and flag complexes,
// Coxeter systems, graph-product words, the adjoint-group pullback model,
// polyhedral-product Betti numbers and the spectral-sequence page.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "raq/coxeter.hpp"
#include "raq/io.hpp"
#include "raq/polyhedral.hpp"
#include "raq/quandle.hpp"
#include "raq/spectral.hpp"
#include "raq/verify.hpp"
#include "raq/words.hpp"

namespace py = pybind11;
using namespace raq;

namespace {

SimpleGraph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    return SimpleGraph(n, edges);
}

MobiusModel parse_model(const std::string& name) {
    if (name == "cw6") return MobiusModel::cw6;
    if (name == "simplicial20") return MobiusModel::simplicial20;
    throw std::invalid_argument("model must be 'cw6' or 'simplicial20'");
}

CellComplexPair pair_for_space(const std::string& space, int degree,
                               const std::string& model) {
    if (space == "BW") return model_rp_pair(degree + 1);
    if (space == "BA") return model_circle_pair();
    if (space == "BAd") return model_mobius_pair(parse_model(model));
    throw std::invalid_argument("space must be 'BW', 'BA' or 'BAd'");
}

std::vector<Syllable> to_syllables(const std::vector<std::pair<int, long long>>& word) {
    std::vector<Syllable> out;
    out.reserve(word.size());
    for (auto [g, e] : word) out.push_back({g, e});
    return out;
}

std::vector<std::pair<int, long long>> from_syllables(const std::vector<Syllable>& word) {
    std::vector<std::pair<int, long long>> out;
    out.reserve(word.size());
    for (const auto& s : word) out.emplace_back(s.gen, s.exp);
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "invariants of right-angled Coxeter groups, their Artin groups, and the "
              "adjoint groups of their Coxeter quandles";

    py::register_exception<CellCapExceeded>(m, "CellCapError", PyExc_RuntimeError);

    py::class_<SimpleGraph>(m, "SimpleGraph")
        .def(py::init(&make_graph), py::arg("n"),
             py::arg("edges") = std::vector<std::pair<int, int>>{})
        .def_property_readonly("n", &SimpleGraph::vertex_count)
        .def_property_readonly("edges",
                               [](const SimpleGraph& g) { return g.edges(); })
        .def("adjacent", &SimpleGraph::adjacent)
        .def("__eq__", [](const SimpleGraph& a, const SimpleGraph& b) { return a == b; })
        .def("__repr__", [](const SimpleGraph& g) {
            return "SimpleGraph(n=" + std::to_string(g.vertex_count()) + ", edges=" +
                   std::to_string(g.edges().size()) + ")";
        });

    py::class_<SimplicialComplex>(m, "SimplicialComplex")
        .def(py::init<int, const std::vector<std::vector<int>>&>(), py::arg("m"),
             py::arg("faces"))
        .def_property_readonly("m", &SimplicialComplex::vertex_count)
        .def("faces", &SimplicialComplex::faces)
        .def("contains", &SimplicialComplex::contains)
        .def("__eq__", [](const SimplicialComplex& a, const SimplicialComplex& b) {
            return a == b;
        });

    m.def("flag_complex", &raq::flag_complex);
    m.def("full_subcomplex",
          py::overload_cast<const SimplicialComplex&, const std::vector<int>&>(
              &raq::full_subcomplex));
    m.def("link", &raq::link);
    m.def("deletion", &raq::deletion);
    m.def("is_flag", &raq::is_flag);
    m.def("clique_count_by_size", &raq::clique_count_by_size);

    m.def("parse_graph", &parse_graph_json, "parse a graph from its JSON form");
    m.def("graph_to_json", &graph_to_json);

    py::class_<CoxeterMatrix>(m, "CoxeterMatrix")
        .def(py::init<int, std::vector<int>>(), py::arg("s_count"), py::arg("entries"),
             "row-major entries; use INFINITE_ORDER for ∞")
        .def_static("symmetric_group", &CoxeterMatrix::symmetric_group)
        .def_static("right_angled", &CoxeterMatrix::right_angled)
        .def_property_readonly("s_count", &CoxeterMatrix::size)
        .def("order", &CoxeterMatrix::order)
        .def("is_right_angled", &CoxeterMatrix::is_right_angled);
    m.attr("INFINITE_ORDER") = kInfiniteOrder;

    py::class_<CoxeterSystem>(m, "CoxeterSystem")
        .def_readonly("gamma", &CoxeterSystem::gamma)
        .def_readonly("classes", &CoxeterSystem::classes)
        .def_readonly("class_of", &CoxeterSystem::class_of)
        .def_readonly("representatives", &CoxeterSystem::representatives)
        .def_readonly("right_angled", &CoxeterSystem::right_angled)
        .def_property_readonly("c", &CoxeterSystem::class_count)
        .def_property_readonly("size", &CoxeterSystem::size);

    m.def("build_system", &build_system);
    m.def("build_right_angled_system", &build_right_angled_system);

    // Words: plain (generator, exponent) lists in and out.
    m.def(
        "normalize",
        [](const SimpleGraph& g, const std::string& coeff,
           const std::vector<std::pair<int, long long>>& word) {
            auto c = coeff == "Z2" ? Coeff::Z2 : Coeff::Z;
            return from_syllables(
                NormalForm::from_word(g, c, to_syllables(word)).syllables());
        },
        py::arg("graph"), py::arg("coeff"), py::arg("word"),
        "canonical form of a word in the graph product; coeff is 'Z2' or 'Z'");
    m.def("word_equals", [](const SimpleGraph& g, const std::string& coeff,
                            const std::vector<std::pair<int, long long>>& a,
                            const std::vector<std::pair<int, long long>>& b) {
        auto c = coeff == "Z2" ? Coeff::Z2 : Coeff::Z;
        return equals(NormalForm::from_word(g, c, to_syllables(a)),
                      NormalForm::from_word(g, c, to_syllables(b)));
    });
    m.def("abelianize", [](const SimpleGraph& g, const std::string& coeff,
                           const std::vector<std::pair<int, long long>>& word) {
        auto c = coeff == "Z2" ? Coeff::Z2 : Coeff::Z;
        return abelianize(NormalForm::from_word(g, c, to_syllables(word)));
    });
    m.def("tits_matrix", [](const SimpleGraph& g,
                            const std::vector<std::pair<int, long long>>& word) {
        auto mat = tits_eval(NormalForm::from_word(g, Coeff::Z2, to_syllables(word)));
        std::vector<std::vector<long long>> rows;
        for (int i = 0; i < mat.size(); ++i) {
            std::vector<long long> row;
            for (int j = 0; j < mat.size(); ++j) row.push_back(mat.at(i, j));
            rows.push_back(std::move(row));
        }
        return rows;
    });

    // The adjoint group in the pullback model: (coxeter word, vector).
    m.def(
        "adjoint_product",
        [](const SimpleGraph& g, const std::string& expression) {
            auto sys = build_right_angled_system(g);
            auto acc = AdElement::identity(sys);
            for (const auto& factor : parse_adjoint_expression(expression)) {
                auto word =
                    NormalForm::from_word(sys.gamma, Coeff::Z2, factor.reflection_word);
                auto refl = as_reflection(sys, word);
                if (!refl)
                    throw std::invalid_argument("e(" + word.str() + "): not a reflection");
                auto gen = adjoint_generator(sys, *refl);
                auto power = AdElement::identity(sys);
                long long reps = factor.exp < 0 ? -factor.exp : factor.exp;
                for (long long i = 0; i < reps; ++i) power = ad_multiply(power, gen);
                if (factor.exp < 0) power = ad_invert(power);
                acc = ad_multiply(acc, power);
            }
            return py::make_tuple(acc.w().str(), acc.v());
        },
        py::arg("graph"), py::arg("expression"),
        "evaluate a product of e(<reflection word>)^k factors; returns (w, v)");
    m.def("reflections", [](const SimpleGraph& g, int max_conjugator_length) {
        auto sys = build_right_angled_system(g);
        std::vector<std::string> out;
        for (const auto& r : enumerate_reflections(sys, max_conjugator_length))
            out.push_back(r.element().str());
        return out;
    });

    // Homology and the page.
    m.def(
        "betti",
        [](const SimpleGraph& g, const std::string& space, int degree,
           const std::string& model, std::size_t cell_cap) {
            auto complex = polyhedral_product_complex(
                flag_complex(g), pair_for_space(space, degree, model), degree + 1, cell_cap);
            return betti(complex, degree);
        },
        py::arg("graph"), py::arg("space"), py::arg("degree") = 6,
        py::arg("model") = "cw6", py::arg("cell_cap") = kDefaultCellCap,
        "mod-2 Betti numbers of BW, BA or BAd up to the given degree");
    m.def(
        "e3_hilbert",
        [](const SimpleGraph& g, int degree) { return E3Page(g, degree).hilbert(); },
        py::arg("graph"), py::arg("degree") = 6);
    m.def("sr_dim", &sr_dim);
    m.def(
        "collapse_crosscheck",
        [](const SimpleGraph& g, int degree, const std::string& model) {
            auto report = collapse_crosscheck(g, degree, parse_model(model));
            std::vector<long long> e3, b;
            for (const auto& row : report.rows) {
                e3.push_back(row.lhs);
                b.push_back(row.rhs);
            }
            py::dict out;
            out["e3"] = e3;
            out["betti"] = b;
            out["pass"] = report.pass;
            return out;
        },
        py::arg("graph"), py::arg("degree") = 5, py::arg("model") = "cw6");
    m.def(
        "bbcg_check",
        [](const SimpleGraph& g, const std::string& pair, int degree) {
            auto p = pair == "circle" ? model_circle_pair()
                                      : model_mobius_pair(MobiusModel::cw6);
            auto report = bbcg_check(flag_complex(g), p, degree);
            std::vector<long long> lhs, rhs;
            for (const auto& row : report.rows) {
                lhs.push_back(row.lhs);
                rhs.push_back(row.rhs);
            }
            py::dict out;
            out["z_reduced"] = lhs;
            out["summand_sum"] = rhs;
            out["pass"] = report.pass;
            return out;
        },
        py::arg("graph"), py::arg("pair") = "mobius", py::arg("degree") = 5);
    m.def(
        "generation_check",
        [](const SimpleGraph& g, int degree) {
            E3Page page(g, degree);
            auto report = generation_check(page, degree);
            std::vector<long long> span, dims;
            for (const auto& row : report.rows) {
                span.push_back(row.lhs);
                dims.push_back(row.rhs);
            }
            py::dict out;
            out["span"] = span;
            out["e3"] = dims;
            out["pass"] = report.pass;
            return out;
        },
        py::arg("graph"), py::arg("degree") = 6);
}
