#pragma once

#include <optional>
#include <string>
#include <vector>

namespace homcat {

/// A finite category given by an explicit composition table.
/// Objects and morphisms are dense integer ids; names are kept for
/// reporting only. comp(g, f) is defined exactly when dst(f) == src(g).
class FinCat {
public:
    struct Mor {
        std::string name;
        int src = -1;
        int dst = -1;
    };

    std::vector<std::string> object_names;
    std::vector<Mor> morphisms;
    /// comp_[g * num_mor + f] = g∘f, or -1 when not composable.
    std::vector<int> comp_;
    /// idmap_[obj] = identity morphism id.
    std::vector<int> idmap_;

    int num_objects() const { return static_cast<int>(object_names.size()); }
    int num_morphisms() const { return static_cast<int>(morphisms.size()); }

    int src(int m) const { return morphisms[m].src; }
    int dst(int m) const { return morphisms[m].dst; }
    int identity(int obj) const { return idmap_[obj]; }
    bool composable(int g, int f) const { return dst(f) == src(g); }
    /// g∘f (apply f first); -1 when not composable.
    int compose(int g, int f) const { return comp_[static_cast<size_t>(g) * morphisms.size() + f]; }

    /// Morphisms R -> Q, ascending by id. (Hom-sets are derived, not stored.)
    std::vector<int> hom(int r, int q) const;
    /// Endomorphisms of q that have a two-sided inverse.
    bool is_iso(int m) const;
    /// The inverse of m, or -1.
    int inverse(int m) const;

    const std::string& mor_name(int m) const { return morphisms[m].name; }
    const std::string& obj_name(int o) const { return object_names[o]; }
};

/// Optional structure markings on a category: distinguished wide
/// subcategories and object-wise automorphism subgroups.
struct Markings {
    std::vector<char> sub_A;  // per morphism id
    std::vector<char> sub_G;  // per morphism id
    /// interior[q] / cointerior[q]: automorphism subgroup of q, by morphism id.
    std::vector<std::vector<int>> interior;
    std::vector<std::vector<int>> cointerior;
};

/// Covariant functor to finite sets: fiber sizes per object and the
/// induced map on fibers per morphism.
struct SetFunctor {
    const FinCat* base = nullptr;
    std::vector<int> fiber_size;               // per object
    std::vector<std::vector<int>> on_mor;      // per morphism: fiber(src) -> fiber(dst)

    /// Empty report iff functorial (identities and composition respected).
    std::vector<std::string> validate() const;
};

/// Every violated category axiom, with a witness; empty iff valid.
std::vector<std::string> validate_category(const FinCat& cat);

/// Whether every hom-set between mutually connected objects consists of
/// isomorphisms.
bool is_ordered(const FinCat& cat);

/// Subcategory predicate used for A and G markings: identities present,
/// composition-closed. `require_isos` additionally demands closed inverses.
std::vector<std::string> validate_subcategory(const FinCat& cat, const std::vector<char>& subset,
                                              bool require_isos);

/// Factorization witnesses: for each morphism phi a pair (iso, a_mor)
/// with phi = a_mor ∘ iso and a_mor in the marked subcategory.
struct AFactorization {
    bool ok = false;
    std::string failure;
    std::vector<std::pair<int, int>> factor;  // per morphism: (iso, a-part)
};

/// Checks that (cat, sub_A) is an A-category: every morphism factors as
/// an iso followed by an A-morphism, and any iso landing in A under an
/// A-postcomposition is itself an A-iso. Factorizations are cached for
/// reuse by the product machinery.
AFactorization check_a_category(const FinCat& cat, const std::vector<char>& sub_A);

/// Subgroup-of-automorphisms sanity for an interior-style structure.
std::vector<std::string> validate_subgroups(const FinCat& cat,
                                            const std::vector<std::vector<int>>& groups);

/// Transportability of an interior structure: for every phi: R -> Q and
/// rho in I(R) there is chi in I(Q) with phi∘rho = chi∘phi.
bool check_interior(const FinCat& cat, const std::vector<std::vector<int>>& interior);
/// The same condition in the opposite category: for every phi: R -> Q
/// and chi in I°(Q) there is rho in I°(R) with chi∘phi = phi∘rho.
bool check_cointerior(const FinCat& cat, const std::vector<std::vector<int>>& cointerior);

/// The quotient by a bi-interior structure, with translation data.
struct QuotientResult {
    FinCat quot;                 // same objects; morphisms are double cosets
    std::vector<int> mor_map;    // base morphism -> quotient morphism
    std::vector<int> section;    // quotient morphism -> least base representative
};

/// Hom-sets I(Q)\B(Q,R)/I°(R) with the induced composition. Requires a
/// bi-interior structure (both transport checks pass and the two groups
/// centralize each other); well-definedness of composition is asserted
/// on every pair rather than trusted.
QuotientResult bi_exterior_quotient(const FinCat& cat,
                                    const std::vector<std::vector<int>>& interior,
                                    const std::vector<std::vector<int>>& cointerior);

/// Push a morphism marking through a quotient (image marking).
std::vector<char> quotient_marking(const QuotientResult& q, const std::vector<char>& marks);

/// The object P with exactly one morphism from every object, if any
/// (first in object order).
std::optional<int> has_final_object(const FinCat& cat);

/// Restriction of the final-object search to a marked subcategory:
/// P such that every object has exactly one marked morphism to P.
std::optional<int> final_object_in(const FinCat& cat, const std::vector<char>& marks);

/// The semidirect product s⋊B together with the forgetful functor p.
struct SemidirectProduct {
    FinCat cat;
    /// Object (fiber element t, base object Q) per s⋊B object id.
    std::vector<std::pair<int, int>> obj_pair;
    /// obj_id(t, Q): reverse lookup; -1 when out of range.
    std::vector<std::vector<int>> obj_index;  // [base obj][fiber elt]
    /// Per s⋊B morphism: (fiber element at source, base morphism).
    std::vector<std::pair<int, int>> mor_pair;
    /// Forgetful functor p on objects / morphisms.
    std::vector<int> p_obj;
    std::vector<int> p_mor;
};

SemidirectProduct semidirect_product(const SetFunctor& s, const FinCat& cat);

}  // namespace homcat
