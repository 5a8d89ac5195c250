// Python bindings: a thin, file-oriented surface over the C++ core.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "homcat/accover.hpp"
#include "homcat/cochain.hpp"
#include "homcat/homotopy.hpp"
#include "homcat/io.hpp"
#include "homcat/mackey.hpp"

namespace py = pybind11;
using namespace homcat;

namespace {

ContraFun index_coefficients(const TransporterData& td, const HomotopicSystem& sys,
                             const Ring& ring) {
    const FinCat& quot = sys.quot.quot;
    ContraFun a;
    a.base = &quot;
    a.ring = ring;
    Module m = Module::free(ring, 1);
    a.on_obj.assign(quot.num_objects(), m);
    for (int i = 0; i < quot.num_morphisms(); ++i) {
        Int s = Int(td.objects[quot.dst(i)].size()) / Int(td.objects[quot.src(i)].size());
        a.on_mor.push_back(Hom::identity(m).scaled(s));
    }
    return a;
}

TransferFun index_companion(const TransporterData& td, const HomotopicSystem& sys,
                            const Ring& ring) {
    const FinCat& quot = sys.quot.quot;
    TransferFun c;
    c.base = &quot;
    c.ring = ring;
    Module m = Module::free(ring, 1);
    c.on_obj.assign(quot.num_objects(), m);
    for (int i = 0; i < quot.num_morphisms(); ++i) c.on_mor.push_back(Hom::identity(m));
    return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact-arithmetic functor cohomology on finite categories";

    m.def(
        "validate_category",
        [](const std::string& path) {
            ParsedCategory pc = load_category_file(path);
            return validate_category(pc.cat);
        },
        py::arg("path"),
        "Load a category file and return the list of axiom violations (empty iff valid).");

    m.def(
        "is_ordered",
        [](const std::string& path) {
            ParsedCategory pc = load_category_file(path);
            return is_ordered(pc.cat);
        },
        py::arg("path"));

    m.def(
        "check_multiplicative",
        [](const std::string& path) {
            ParsedCategory pc = load_category_file(path);
            MultReport rep = check_multiplicative(pc.cat);
            return std::make_pair(rep.ok, rep.witness);
        },
        py::arg("path"),
        "Whether the additive cover has all direct products; returns (ok, witness).");

    m.def(
        "cohomology",
        [](const std::string& cat_path, const std::string& fun_path, const std::string& ring,
           int degree) {
            ParsedCategory pc = load_category_file(cat_path);
            ContraFun f = load_functor_file(fun_path, pc.cat, parse_ring(ring));
            std::vector<char> g = pc.marks.sub_G;
            if (!pc.has_g) {
                g.assign(pc.cat.num_morphisms(), 0);
                for (int o = 0; o < pc.cat.num_objects(); ++o) g[pc.cat.identity(o)] = 1;
            }
            return canonical_form(stable_cohomology(pc.cat, g, f, degree)).to_string();
        },
        py::arg("cat_path"), py::arg("fun_path"), py::arg("ring") = "Z", py::arg("degree") = 1,
        "Stable cochain cohomology in one degree, as a module literal like 'Z/2'.");

    m.def(
        "verify_homotopy",
        [](const std::string& cat_path, const std::string& fun_path, const std::string& ring,
           int max_degree) {
            ParsedCategory pc = load_category_file(cat_path);
            ContraFun a_tilde = load_functor_file(fun_path, pc.cat, parse_ring(ring));
            MultReport mult = check_multiplicative(pc.cat);
            if (!mult.ok) return std::make_pair(false, "not multiplicative: " + mult.witness);
            auto p_obj = final_object_in(pc.cat, pc.marks.sub_A);
            if (!p_obj) return std::make_pair(false, std::string("no final object"));
            MPFunctor mp = m_p_functor(pc.cat, pc.marks.sub_A, pc.marks.sub_G, *p_obj);
            HomotopicSystem sys =
                direct_product_system(pc.cat, pc.marks.sub_A, pc.marks.sub_G, mp);
            auto errs = validate_system(sys);
            if (!errs.empty()) return std::make_pair(false, errs.front());
            ContraFun big = product_functor(sys, mp, a_tilde);
            ContraFun a_base = pullback_functor(sys.base, sys.quot, big);
            HFunctor hf = build_H_functor(sys, big);
            NatMap delta = delta_H(sys, big, a_base, hf);
            NatMap theta = canonical_section(sys, mp, a_tilde, a_base, hf);
            std::string witness;
            if (!check_section(sys, a_base, hf, delta, theta, &witness))
                return std::make_pair(false, witness);
            TheoremReport rep = verify_contraction(sys, a_base, hf, theta, max_degree);
            return std::make_pair(rep.ok, rep.detail);
        },
        py::arg("cat_path"), py::arg("fun_path"), py::arg("ring") = "Z",
        py::arg("max_degree") = 2,
        "Run the product-system pipeline; returns (ok, report text).");

    m.def(
        "verify_mackey",
        [](const std::string& grp_path, const std::string& ring, int max_degree) {
            GroupData gd = load_group_file(grp_path);
            TransporterData td = transporter_categories(gd);
            HomotopicSystem sys = mackey_system(td);
            Ring r = parse_ring(ring);
            ContraFun a = index_coefficients(td, sys, r);
            TransferFun comp = index_companion(td, sys, r);
            TheoremReport rep = verify_splitting(td, sys, a, comp, max_degree);
            return std::make_pair(rep.ok, rep.detail);
        },
        py::arg("grp_path"), py::arg("ring") = "Z", py::arg("max_degree") = 2,
        "Run the transporter-category splitting pipeline; returns (ok, report text).");
}
