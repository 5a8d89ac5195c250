#pragma once

#include "homcat/fincat.hpp"

#include <string>
#include <vector>

namespace homcat {

/// Object of the additive cover: a finite ordered sequence of base objects.
struct AcObject {
    std::vector<int> terms;

    int size() const { return static_cast<int>(terms.size()); }
    bool operator==(const AcObject& o) const { return terms == o.terms; }
    std::string to_string(const FinCat& cat) const;
};

/// Morphism of the additive cover: an index map together with one base
/// morphism per domain index, phi_j: dom[j] -> cod[index_map[j]].
struct AcMorphism {
    AcObject dom, cod;
    std::vector<int> index_map;
    std::vector<int> components;

    bool operator==(const AcMorphism& o) const {
        return dom == o.dom && cod == o.cod && index_map == o.index_map &&
               components == o.components;
    }
    std::string to_string(const FinCat& cat) const;
};

/// Endpoint/alignment validity of an ac-morphism.
bool ac_valid(const FinCat& cat, const AcMorphism& m);

AcMorphism ac_identity(const FinCat& cat, const AcObject& obj);
/// g ∘ f (apply f first).
AcMorphism ac_compose(const FinCat& cat, const AcMorphism& g, const AcMorphism& f);
AcObject ac_direct_sum(const AcObject& a, const AcObject& b);
/// Block-diagonal sum of two ac-morphisms.
AcMorphism ac_morphism_sum(const AcMorphism& a, const AcMorphism& b);
/// Inclusion of term i of obj as a one-term ac-morphism.
AcMorphism ac_inclusion(const FinCat& cat, const AcObject& obj, int i);

/// Whether every morphism of the category is an epimorphism.
bool all_epi(const FinCat& cat);

/// The morphisms beta: Q -> T that cannot be extended, even partially,
/// via alpha: Q -> R; i.e. hom(Q, T) minus the union of hom(Q', T)∘theta'
/// over non-isomorphisms theta' dividing alpha. Requires all_epi.
std::vector<int> nonextendable(const FinCat& cat, int t_obj, int alpha);

/// A strict triple: an apex with mutually nonextendable legs.
struct StrictTriple {
    int apex = -1;
    int to_r = -1;  // apex -> R
    int to_t = -1;  // apex -> T

    bool operator==(const StrictTriple& o) const {
        return apex == o.apex && to_r == o.to_r && to_t == o.to_t;
    }
    bool operator<(const StrictTriple& o) const {
        if (apex != o.apex) return apex < o.apex;
        if (to_r != o.to_r) return to_r < o.to_r;
        return to_t < o.to_t;
    }
};

/// All strict triples to (R, T), uncollapsed.
std::vector<StrictTriple> strict_triple_candidates(const FinCat& cat, int r_obj, int t_obj);
/// Whether two strict triples are related by an apex isomorphism.
bool triples_equivalent(const FinCat& cat, const StrictTriple& a, const StrictTriple& b);
/// One lexicographically least representative per equivalence class.
std::vector<StrictTriple> strict_triples(const FinCat& cat, int r_obj, int t_obj);

/// The epimorphism condition plus the divisor partition of every hom-set
/// (cover and disjointness); witness names the failing data.
struct MultReport {
    bool ok = false;
    std::string witness;
};
MultReport check_multiplicative(const FinCat& cat);

/// Direct product of two base objects inside the additive cover, with
/// its structural projections.
struct ProductData {
    AcObject object;
    std::vector<StrictTriple> triples;
    AcMorphism proj_r;  // object -> R (one-term codomain)
    AcMorphism proj_t;  // object -> T
};
ProductData direct_product(const FinCat& cat, int r_obj, int t_obj);
/// Exhaustive universal-property check over all cones from base objects;
/// empty string when it holds, otherwise a witness.
std::string check_product_universal(const FinCat& cat, const ProductData& p, int r_obj, int t_obj);

/// Pull-back of alpha: Q -> T and beta: R -> T: the sub-sum of Q x R on
/// the indices whose structural square commutes.
struct PullbackData {
    AcObject object;
    AcMorphism to_q;
    AcMorphism to_r;
    std::vector<int> kept_indices;  // indices of Q x R that survive
};
PullbackData pull_back(const FinCat& cat, int alpha, int beta);
/// Universal property over single-object cones; empty when it holds.
std::string check_pullback_universal(const FinCat& cat, const PullbackData& pb, int alpha,
                                     int beta);

/// Multiplicativity of a bi-exterior quotient, cross-checked against the
/// base: quotient strict triples must be exactly the images of base
/// strict triples (both directions).
struct ExtMultReport {
    bool ok = false;
    std::string witness;
};
ExtMultReport exterior_multiplicative(const FinCat& base, const QuotientResult& q);

/// The product-with-P functor on a multiplicative quotient category with
/// a final object P of the marked A-subcategory. Triples are normalized
/// so the second leg is the unique A-morphism to P.
struct MPFunctor {
    int p_obj = -1;
    /// Per object: the unique marked morphism to P.
    std::vector<int> unique_a_to_p;
    /// Per object Q: the normalized index triples of Q x P.
    std::vector<std::vector<StrictTriple>> index_data;
    std::vector<AcObject> value;    // per object: Q x P
    std::vector<AcMorphism> proj_r; // per object: first projection (natural in Q)
    std::vector<AcMorphism> proj_p; // per object: second projection
    std::vector<AcMorphism> on_mor; // per morphism phi: phi x id_P
    /// The index maps of on_mor, packaged as a covariant set functor.
    SetFunctor index_functor;
};

/// Builds the functor; throws with a witness when P is not final in the
/// marked subcategory, when the identity triple is missing, or when a
/// marked isomorphism has a non-marked component (the G-compatibility
/// condition on components).
MPFunctor m_p_functor(const FinCat& quot, const std::vector<char>& sub_a,
                      const std::vector<char>& sub_g, int p_obj);

}  // namespace homcat
