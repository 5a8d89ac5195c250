#include "homcat/functorlib.hpp"

#include <stdexcept>

namespace homcat {

std::vector<std::string> ContraFun::validate() const {
    std::vector<std::string> report;
    const FinCat& cat = *base;
    if (on_obj.size() != static_cast<size_t>(cat.num_objects()) ||
        on_mor.size() != static_cast<size_t>(cat.num_morphisms())) {
        report.push_back("functor data does not match the category");
        return report;
    }
    for (int m = 0; m < cat.num_morphisms(); ++m) {
        const Hom& h = on_mor[m];
        if (!(h.dom == on_obj[cat.dst(m)]) || !(h.cod == on_obj[cat.src(m)])) {
            report.push_back("hom for " + cat.mor_name(m) + " has wrong endpoints");
            continue;
        }
        if (!h.is_valid())
            report.push_back("hom for " + cat.mor_name(m) + " does not respect torsion");
    }
    if (!report.empty()) return report;
    for (int o = 0; o < cat.num_objects(); ++o)
        if (!hom_is_identity(on_mor[cat.identity(o)]))
            report.push_back("identity of " + cat.obj_name(o) + " is not the identity hom");
    for (int g = 0; g < cat.num_morphisms(); ++g)
        for (int f = 0; f < cat.num_morphisms(); ++f) {
            if (!cat.composable(g, f)) continue;
            // Contravariance: F(g∘f) = F(f) ∘ F(g).
            Hom lhs = on_mor[cat.compose(g, f)];
            Hom rhs = on_mor[f].compose_after(on_mor[g]);
            if (!homs_equal(lhs, rhs))
                report.push_back("functoriality fails at (" + cat.mor_name(g) + ", " +
                                 cat.mor_name(f) + ")");
        }
    return report;
}

ContraFun constant_functor(const FinCat& cat, const Module& m) {
    ContraFun f;
    f.base = &cat;
    f.ring = m.ring;
    f.on_obj.assign(cat.num_objects(), m);
    f.on_mor.assign(cat.num_morphisms(), Hom::identity(m));
    return f;
}

bool check_natural(const NatMap& eta, std::string* witness) {
    const ContraFun& s = *eta.src;
    const ContraFun& d = *eta.dst;
    const FinCat& cat = *s.base;
    if (eta.components.size() != static_cast<size_t>(cat.num_objects())) {
        if (witness) *witness = "component count mismatch";
        return false;
    }
    for (int o = 0; o < cat.num_objects(); ++o) {
        const Hom& c = eta.components[o];
        if (!(c.dom == s.on_obj[o]) || !(c.cod == d.on_obj[o]) || !c.is_valid()) {
            if (witness) *witness = "bad component at " + cat.obj_name(o);
            return false;
        }
    }
    for (int m = 0; m < cat.num_morphisms(); ++m) {
        int r = cat.src(m), q = cat.dst(m);
        // eta_R ∘ F(phi) = G(phi) ∘ eta_Q for phi: R -> Q.
        Hom lhs = eta.components[r].compose_after(s.on_mor[m]);
        Hom rhs = d.on_mor[m].compose_after(eta.components[q]);
        if (!homs_equal(lhs, rhs)) {
            if (witness) *witness = "naturality square fails at " + cat.mor_name(m);
            return false;
        }
    }
    return true;
}

Module ac_value(const ContraFun& f, const AcObject& obj) {
    Module m = Module::zero(f.ring);
    for (int q : obj.terms) m = Module::direct_sum(m, f.on_obj[q]);
    return m;
}

std::vector<int> ac_offsets(const ContraFun& f, const AcObject& obj) {
    std::vector<int> off;
    int pos = 0;
    for (int q : obj.terms) {
        off.push_back(pos);
        pos += f.on_obj[q].gens();
    }
    off.push_back(pos);
    return off;
}

Hom ac_hom(const ContraFun& f, const AcMorphism& m) {
    if (!ac_valid(*f.base, m)) throw std::invalid_argument("ac_hom: invalid ac-morphism");
    Module dom_val = ac_value(f, m.cod);  // contravariant: value on cod is the hom's domain
    Module cod_val = ac_value(f, m.dom);
    auto cod_off = ac_offsets(f, m.cod);
    auto dom_off = ac_offsets(f, m.dom);
    Matrix mat(cod_val.gens(), dom_val.gens());
    for (int j = 0; j < m.dom.size(); ++j) {
        const Hom& h = f.on_mor[m.components[j]];  // F(Q_{f(j)}) -> F(R_j)
        int r0 = dom_off[j];
        int c0 = cod_off[m.index_map[j]];
        for (int r = 0; r < h.mat.rows(); ++r)
            for (int c = 0; c < h.mat.cols(); ++c) mat(r0 + r, c0 + c) += h.mat(r, c);
    }
    return Hom{dom_val, cod_val, mat};
}

}  // namespace homcat
