#pragma once

#include "homcat/accover.hpp"
#include "homcat/fincat.hpp"
#include "homcat/module.hpp"

#include <string>
#include <vector>

namespace homcat {

/// Contravariant functor base -> modules: each object gets a module and
/// each morphism phi: R -> Q a hom F(phi): F(Q) -> F(R).
struct ContraFun {
    const FinCat* base = nullptr;
    Ring ring;
    std::vector<Module> on_obj;  // per object id
    std::vector<Hom> on_mor;     // per morphism id, mapping on_obj[dst] -> on_obj[src]

    const Module& at(int obj) const { return on_obj[obj]; }
    const Hom& at_mor(int m) const { return on_mor[m]; }

    /// All functoriality violations, with the composable pair as witness.
    std::vector<std::string> validate() const;
};

/// Constant functor: every object mapped to m, every morphism to id.
ContraFun constant_functor(const FinCat& cat, const Module& m);

/// Natural transformation between contravariant functors on one base.
struct NatMap {
    const ContraFun* src = nullptr;
    const ContraFun* dst = nullptr;
    std::vector<Hom> components;  // per object: src(Q) -> dst(Q)
};

/// Exact commutation of every naturality square; optional witness names
/// the offending morphism.
bool check_natural(const NatMap& eta, std::string* witness = nullptr);

/// Additive extension of F to the additive cover, evaluated on demand.
/// Value on ⊕_i Q_i is the product module in term order.
Module ac_value(const ContraFun& f, const AcObject& obj);
/// Generator offset of term i inside ac_value(f, obj).
std::vector<int> ac_offsets(const ContraFun& f, const AcObject& obj);
/// Contravariant value on an ac-morphism: F(cod) -> F(dom); block row j
/// reads block index_map[j] of the codomain value through F(components[j]).
Hom ac_hom(const ContraFun& f, const AcMorphism& m);

}  // namespace homcat
