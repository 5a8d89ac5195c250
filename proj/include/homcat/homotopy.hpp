#pragma once

#include "homcat/accover.hpp"
#include "homcat/cochain.hpp"
#include "homcat/fincat.hpp"
#include "homcat/functorlib.hpp"
#include "homcat/module.hpp"

#include <string>
#include <vector>

namespace homcat {

/// The full contraction datum over a marked category: a bi-interior
/// structure, a finite index functor s, a functor n from the semidirect
/// product into the marked part of the quotient, and a connecting
/// natural map nu from n to the quotient projection.
struct HomotopicSystem {
    FinCat base;
    Markings marks;  // A- and G-markings plus the bi-interior structure

    /// Bi-exterior quotient of base by (interior, cointerior), with the
    /// image markings, the final marked object P, and the unique marked
    /// morphism to P from every object.
    QuotientResult quot;
    std::vector<char> quot_a;
    std::vector<char> quot_g;
    int p_obj = -1;
    std::vector<int> unique_a_to_p;

    /// Index functor on base: fiber sizes and fiber maps per morphism.
    std::vector<int> s_size;
    std::vector<std::vector<int>> s_mor;

    /// n on objects/morphisms of the semidirect product, valued in the
    /// quotient: n_obj[Q][s] is a quotient object; n_mor[phi][t] is the
    /// quotient morphism n(t, phi): n(t, src phi) -> n(s_phi(t), dst phi).
    std::vector<std::vector<int>> n_obj;
    std::vector<std::vector<int>> n_mor;

    /// nu[Q][s]: the quotient morphism n(s, Q) -> Q.
    std::vector<std::vector<int>> nu;
};

/// Every violated system axiom with a witness; empty iff valid.
std::vector<std::string> validate_system(const HomotopicSystem& H);

/// The averaged functor on the base: Q maps to the interior-fixed part
/// of the product over the fiber of the pulled-back values.
struct HFunctor {
    ContraFun fun;                          // on the base category
    std::vector<Module> full;               // per object: the fiber product
    std::vector<std::vector<int>> offsets;  // generator offsets per fiber element (+ total)
    std::vector<Hom> embed;                 // fixed part -> full product
};

HFunctor build_H_functor(const HomotopicSystem& H, const ContraFun& a_tilde);

/// The diagonal-style natural map from a = a_tilde pulled back to the
/// base into the averaged functor; naturality and landing in the fixed
/// part are verified (throws with a witness otherwise).
NatMap delta_H(const HomotopicSystem& H, const ContraFun& a_tilde, const ContraFun& a_base,
               const HFunctor& hf);

/// True iff theta is natural and a componentwise retraction of delta_H.
bool check_section(const HomotopicSystem& H, const ContraFun& a_base, const HFunctor& hf,
                   const NatMap& delta, const NatMap& theta, std::string* witness = nullptr);

/// A base chain with the fiber element carried along each vertex.
struct LiftedChain {
    Chain q;
    std::vector<int> fibers;  // one per vertex; determined by fibers[0]
};

/// The unique lift of q starting at fiber element s over q(0).
LiftedChain lift_chain(const HomotopicSystem& H, const Chain& q, int s);

/// The degree-(n+1) quotient chain that follows n over the first ell
/// vertices, crosses to the projected chain via nu at position ell, and
/// for ell = n+1 instead extends the n-side chain to P by the unique
/// marked morphism.
Chain interpolated_chain(const HomotopicSystem& H, const LiftedChain& lc, int ell);

/// The degree-lowering homotopy operator on stable cochain coordinates:
/// input lives in `from` (degree n+1), output in `to` (degree n). Throws
/// when an inner sum leaves the fixed part or the output fails to be
/// stable.
Matrix homotopy_map(const HomotopicSystem& H, const HFunctor& hf, const NatMap& theta,
                    const StableLevel& from, const StableLevel& to, const Matrix& coords);

struct TheoremReport {
    bool ok = false;
    std::string detail;  // per-degree lines; byte-stable for fixed input
};

/// Checks d o h + h o d = id on a basis of every stable level up to
/// max_degree, and independently that the stable cohomology vanishes in
/// degrees 1..max_degree.
TheoremReport verify_contraction(const HomotopicSystem& H, const ContraFun& a_base,
                                 const HFunctor& hf, const NatMap& theta, int max_degree);

/// The canonical system attached to a product-with-P functor on a
/// multiplicative marked category: trivial bi-interior structure, the
/// index sets of the product functor, first legs as nu.
HomotopicSystem direct_product_system(const FinCat& cat, const std::vector<char>& sub_a,
                                      const std::vector<char>& sub_g, const MPFunctor& mp);

/// The composite functor (additive extension of a_tilde after the
/// product functor), expressed on the system's quotient category.
ContraFun product_functor(const HomotopicSystem& sys, const MPFunctor& mp,
                          const ContraFun& a_tilde);

/// The canonical section of delta_H for the product system: projection
/// onto the identity-triple component in every fiber block.
NatMap canonical_section(const HomotopicSystem& sys, const MPFunctor& mp,
                         const ContraFun& a_tilde, const ContraFun& a_base, const HFunctor& hf);

}  // namespace homcat
