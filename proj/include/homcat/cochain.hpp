#pragma once

#include "homcat/fincat.hpp"
#include "homcat/functorlib.hpp"
#include "homcat/module.hpp"

#include <string>
#include <vector>

namespace homcat {

/// A degree-n chain: n composable arrows (identities allowed), i.e. a
/// functor from the order 0 < 1 < ... < n into the category.
struct Chain {
    std::vector<int> objs;    // n+1 objects
    std::vector<int> arrows;  // arrows[i]: objs[i] -> objs[i+1]

    int degree() const { return static_cast<int>(arrows.size()); }
    bool operator==(const Chain& o) const { return objs == o.objs && arrows == o.arrows; }
    bool operator<(const Chain& o) const {
        if (arrows != o.arrows) return arrows < o.arrows;
        return objs < o.objs;
    }
    std::string to_string(const FinCat& cat) const;
};

/// All degree-n chains, duplicate-free, sorted (lexicographic in arrow
/// ids; degree 0 by object id).
std::vector<Chain> enumerate_chains(const FinCat& cat, int n);

/// The i-th face: composes out vertex i (end faces drop an end arrow).
Chain face(const FinCat& cat, const Chain& c, int i);

/// One level C^n of the full cochain complex: the product of F(q(0))
/// over all degree-n chains, with generator offsets per chain.
struct CochainLevel {
    std::vector<Chain> chains;
    Module module;
    std::vector<int> offsets;  // per chain; one extra trailing total
};

CochainLevel cochain_level(const FinCat& cat, const ContraFun& f, int n);

/// The differential C^n -> C^{n+1}:
/// d(a)_r = F(r(0,1))(a_{face_0 r}) + sum_{i=1}^{n+1} (-1)^i a_{face_i r}.
Hom cochain_differential(const FinCat& cat, const ContraFun& f, const CochainLevel& lvl_n,
                         const CochainLevel& lvl_np1);

/// Orbit decomposition of degree-n chains under natural isomorphisms
/// whose components all lie in the marked subcategory G.
struct StableDecomposition {
    std::vector<Chain> chains;
    std::vector<int> rep_of;       // chain index -> representative chain index
    std::vector<int> chi0_to_rep;  // chain index -> morphism chi_0: q(0) -> rep(0)
    std::vector<int> reps;         // representative chain indices, ascending
    /// Per representative: the distinct chi_0 components of its natural
    /// G-automorphisms (these drive the fixed-submodule computation).
    std::vector<std::vector<int>> auto_chi0;
};

StableDecomposition g_stable_decomposition(const FinCat& cat, const std::vector<char>& g_marks,
                                           int n);

/// The G-stable cochain module in degree n together with its embedding
/// into the full level: one fixed-submodule block per orbit
/// representative, transported to the other orbit members via the
/// connecting isomorphisms.
struct StableLevel {
    CochainLevel full;
    StableDecomposition dec;
    Module module;
    Hom embedding;                 // module -> full.module
    std::vector<int> rep_offsets;  // generator offset per representative block
};

StableLevel stable_cochain_level(const FinCat& cat, const std::vector<char>& g_marks,
                                 const ContraFun& f, int n);

/// The embedding applied to stable coordinates, exploiting the orbit
/// block structure (blocks with zero coordinates are skipped).
Matrix stable_expand(const StableLevel& lvl, const Matrix& coords);

/// Stable coordinates of a full-level vector, or nothing when the vector
/// lies outside the stable submodule. Solved orbit block by orbit block:
/// a small system on the representative chain's rows, then a consistency
/// check on the transported rows of the other orbit members.
std::optional<Matrix> stable_preimage(const StableLevel& lvl, const Matrix& full_vec);

/// The differential restricted to stable levels; throws (with the first
/// offending generator as witness) if the differential fails to map the
/// stable submodule into the stable submodule.
Hom stable_differential(const FinCat& cat, const ContraFun& f, const StableLevel& from,
                        const StableLevel& to);

/// H^n of the G-stable complex, by Smith normal form.
Module stable_cohomology(const FinCat& cat, const std::vector<char>& g_marks, const ContraFun& f,
                         int n);

/// Pull a functor on a bi-exterior quotient back to the base category.
ContraFun pullback_functor(const FinCat& base, const QuotientResult& q, const ContraFun& f_tilde);

/// The identification between the stable cochain module of the quotient
/// (with the image marking of G) and the stable cochain module of the
/// base (values transported along e): both directions materialized as
/// mutually inverse homs.
struct QuotientIdentification {
    StableLevel base_level;
    StableLevel quot_level;
    Hom to_base;  // quot stable module -> base stable module
    Hom to_quot;
};

QuotientIdentification identify_quotient_cochains(const FinCat& base, const QuotientResult& q,
                                                  const std::vector<char>& g_base,
                                                  const ContraFun& f_tilde, int n);

}  // namespace homcat
