#pragma once

#include "homcat/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace homcat {

/// Coefficient ring: the integers, or Z/m with m a prime power.
struct Ring {
    Int modulus = 0;  // 0 means Z

    bool is_integers() const { return modulus == 0; }
    bool is_unit(const Int& x) const;
    /// Inverse of a unit mod m; throws for Z unless x = +-1.
    Int unit_inverse(const Int& x) const;
    bool operator==(const Ring& o) const { return modulus == o.modulus; }
    std::string to_string() const;
};

/// Checks that m >= 2 is a prime power.
bool is_prime_power(const Int& m);

/// Finitely generated module over the ring, presented by one generator
/// per entry of `orders`: order 0 means a free generator, order d >= 2
/// a generator of order d. Not necessarily in canonical form; see
/// canonical_form(). Elements are integer coordinate vectors (column
/// matrices) read modulo the generator orders.
struct Module {
    Ring ring;
    std::vector<Int> orders;

    int gens() const { return static_cast<int>(orders.size()); }
    int rank() const;                       // number of free generators
    std::vector<Int> torsion() const;       // nonzero orders in stored sequence
    bool is_trivial() const;                // the zero module
    /// Total number of elements of the torsion part (free part excluded).
    Int torsion_size() const;

    /// Relation matrix: columns orders[i] * e_i for the torsion generators.
    Matrix relations() const;

    bool operator==(const Module& o) const { return ring == o.ring && orders == o.orders; }
    std::string to_string() const;

    static Module free(const Ring& r, int rank);
    static Module zero(const Ring& r) { return Module{r, {}}; }
    static Module direct_sum(const Module& a, const Module& b);
};

/// Canonical invariant-factor form: free generators first, then torsion
/// orders d_1 | d_2 | ... with each d_i > 1. Equality of canonical forms
/// is the isomorphism test used throughout.
Module canonical_form(const Module& m);

/// A homomorphism between modules, as the integer matrix of generator
/// images. Column j is the image of generator j of dom in cod coordinates.
struct Hom {
    Module dom, cod;
    Matrix mat;

    static Hom identity(const Module& m) { return Hom{m, m, Matrix::identity(m.gens())}; }
    static Hom zero(const Module& dom, const Module& cod) {
        return Hom{dom, cod, Matrix(cod.gens(), dom.gens())};
    }

    /// Well-definedness: the image of each torsion generator is killed by
    /// its order in cod.
    bool is_valid() const;
    Hom compose_after(const Hom& inner) const;  // this o inner
    Hom operator+(const Hom& o) const { return Hom{dom, cod, mat + o.mat}; }
    Hom operator-(const Hom& o) const { return Hom{dom, cod, mat - o.mat}; }
    Hom scaled(const Int& c) const;
    bool is_zero_hom() const;

    Matrix apply(const Matrix& x) const { return mat * x; }
};

/// y == 0 as an element of m (i.e. y lies in the relation lattice).
bool element_is_zero(const Module& m, const Matrix& y);
/// Pointwise equality of homs modulo cod relations.
bool homs_equal(const Hom& a, const Hom& b);
bool hom_is_identity(const Hom& a);

/// A submodule-style result: the abstract module plus its structure map.
struct SubQuotient {
    Module module;  // canonical form
    Hom map;        // inclusion (kernel/image) or projection (cokernel)
};

/// Kernel of h, with its inclusion into dom.
SubQuotient kernel(const Hom& h);
/// Image of h, with its inclusion into cod.
SubQuotient image(const Hom& h);
/// Cokernel of h, with the projection cod -> coker.
SubQuotient cokernel(const Hom& h);

/// ker(d_next) / im(d_prev) for a two-step complex; requires
/// d_next o d_prev == 0 (throws with a witness otherwise).
Module complex_cohomology(const Hom& d_prev, const Hom& d_next);

/// Simultaneous fixed submodule {x : g(x) = x for all g}, with inclusion.
/// Every generator must be an automorphism of m.
SubQuotient fixed_submodule(const Module& m, const std::vector<Hom>& gens);

/// Solve incl * x = v in cod(incl); used to re-express values in
/// submodule coordinates. Returns nothing when v is not in the image.
std::optional<Matrix> preimage(const Hom& h, const Matrix& v);

/// Whether h (necessarily square dom == cod gens not required) is an
/// isomorphism of modules.
bool is_automorphism(const Hom& h);

/// Parse a module literal like "Z^2 + Z/4 + Z/8" or "0"; throws on syntax
/// errors or order/ring mismatches.
Module parse_module_literal(const std::string& text, const Ring& ring);

}  // namespace homcat
