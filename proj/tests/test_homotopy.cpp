#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "homcat/accover.hpp"
#include "homcat/cochain.hpp"
#include "homcat/homotopy.hpp"

using namespace homcat;
using namespace homcat::fixtures;

namespace {

// Identity-like system on the two-object poset: trivial bi-interior
// structure, singleton fibers, n the identity embedding, nu identities.
HomotopicSystem poset_system() {
    HomotopicSystem H;
    H.base = poset2();
    const FinCat& b = H.base;
    H.marks.sub_A.assign(b.num_morphisms(), 1);
    H.marks.sub_G.assign(b.num_morphisms(), 0);
    for (int o = 0; o < b.num_objects(); ++o) H.marks.sub_G[b.identity(o)] = 1;
    H.marks.interior = trivial_groups(b);
    H.marks.cointerior = trivial_groups(b);
    H.quot = bi_exterior_quotient(b, H.marks.interior, H.marks.cointerior);
    H.quot_a.assign(H.quot.quot.num_morphisms(), 0);
    H.quot_g.assign(H.quot.quot.num_morphisms(), 0);
    for (int m = 0; m < b.num_morphisms(); ++m) {
        if (H.marks.sub_A[m]) H.quot_a[H.quot.mor_map[m]] = 1;
        if (H.marks.sub_G[m]) H.quot_g[H.quot.mor_map[m]] = 1;
    }
    H.p_obj = 1;
    H.unique_a_to_p.resize(b.num_objects());
    for (int o = 0; o < b.num_objects(); ++o)
        for (int m : H.quot.quot.hom(o, H.p_obj))
            if (H.quot_a[m]) H.unique_a_to_p[o] = m;
    H.s_size.assign(b.num_objects(), 1);
    H.s_mor.assign(b.num_morphisms(), {0});
    H.n_obj.resize(b.num_objects());
    H.n_mor.resize(b.num_morphisms());
    H.nu.resize(b.num_objects());
    for (int o = 0; o < b.num_objects(); ++o) {
        H.n_obj[o] = {o};
        H.nu[o] = {H.quot.quot.identity(o)};
    }
    for (int m = 0; m < b.num_morphisms(); ++m) H.n_mor[m] = {H.quot.mor_map[m]};
    return H;
}

// A system over the order-2 group with a nontrivial interior: the fiber
// has two points swapped by the nonidentity element, the quotient
// collapses to a single morphism, and the fixed part is the diagonal.
HomotopicSystem swap_system() {
    HomotopicSystem H;
    H.base = grp_c2();
    const FinCat& b = H.base;
    int e = b.identity(0);
    int s = (e == 0) ? 1 : 0;
    H.marks.sub_A.assign(b.num_morphisms(), 1);
    H.marks.sub_G.assign(b.num_morphisms(), 1);
    H.marks.interior = {{e, s}};
    H.marks.cointerior = {{e}};
    H.quot = bi_exterior_quotient(b, H.marks.interior, H.marks.cointerior);
    H.quot_a.assign(H.quot.quot.num_morphisms(), 1);
    H.quot_g.assign(H.quot.quot.num_morphisms(), 1);
    H.p_obj = 0;
    H.unique_a_to_p = {H.quot.quot.identity(0)};
    H.s_size = {2};
    H.s_mor.resize(b.num_morphisms());
    H.s_mor[e] = {0, 1};
    H.s_mor[s] = {1, 0};
    H.n_obj = {{0, 0}};
    int qid = H.quot.quot.identity(0);
    H.n_mor.assign(b.num_morphisms(), {qid, qid});
    H.nu = {{qid, qid}};
    return H;
}

ContraFun negation_functor(const FinCat& cat, int modulus) {
    Ring ring{modulus};
    ContraFun f;
    f.base = &cat;
    f.ring = ring;
    Module m{ring, {modulus}};
    f.on_obj.assign(cat.num_objects(), m);
    f.on_mor.resize(cat.num_morphisms());
    for (int i = 0; i < cat.num_morphisms(); ++i) {
        bool ident = false;
        for (int o = 0; o < cat.num_objects(); ++o) ident = ident || (cat.identity(o) == i);
        f.on_mor[i] = Hom{m, m, Matrix(1, 1, {ident ? Int(1) : Int(-1)})};
    }
    return f;
}

NatMap invert_natmap(const NatMap& d) {
    NatMap theta;
    theta.src = d.dst;
    theta.dst = d.src;
    for (const Hom& c : d.components) {
        Matrix inv;
        REQUIRE(solve_integer(c.mat, Matrix::identity(c.mat.rows()), inv));
        theta.components.push_back(Hom{c.cod, c.dom, inv});
    }
    return theta;
}

}  // namespace

TEST_CASE("identity-like system validates and contracts the poset nerve") {
    HomotopicSystem H = poset_system();
    auto report = validate_system(H);
    CHECK(report.empty());

    ContraFun a_tilde = constant_functor(H.quot.quot, Module::free(Ring{0}, 1));
    ContraFun a_base = pullback_functor(H.base, H.quot, a_tilde);
    HFunctor hf = build_H_functor(H, a_tilde);
    // Singleton fibers and trivial interior: H(a) has the same values as a.
    for (int o = 0; o < H.base.num_objects(); ++o)
        CHECK(canonical_form(hf.fun.on_obj[o]) == canonical_form(a_base.at(o)));

    NatMap d = delta_H(H, a_tilde, a_base, hf);
    CHECK(check_natural(d));
    NatMap theta = invert_natmap(d);
    CHECK(check_section(H, a_base, hf, d, theta));

    TheoremReport rep = verify_contraction(H, a_base, hf, theta, 2);
    CHECK(rep.ok);
    CHECK(rep.detail.find("H^1 = 0") != std::string::npos);
    CHECK(rep.detail.find("H^2 = 0") != std::string::npos);
}

TEST_CASE("nontrivial interior produces the diagonal fixed part") {
    HomotopicSystem H = swap_system();
    auto report = validate_system(H);
    CHECK(report.empty());

    ContraFun a_tilde = constant_functor(H.quot.quot, Module{Ring{4}, {4}});
    ContraFun a_base = pullback_functor(H.base, H.quot, a_tilde);
    HFunctor hf = build_H_functor(H, a_tilde);
    // Full product Z/4 x Z/4; the swap-fixed part is the diagonal Z/4.
    CHECK(hf.full[0].gens() == 2);
    CHECK(canonical_form(hf.fun.on_obj[0]) == canonical_form(Module{Ring{4}, {4}}));

    NatMap d = delta_H(H, a_tilde, a_base, hf);
    // The diagonal map lands on the diagonal: composing with the
    // embedding doubles into equal components.
    Matrix emb = hf.embed[0].mat * d.components[0].mat;
    CHECK(emb(0, 0) == emb(1, 0));

    // Section: read off the first component.
    NatMap theta;
    theta.src = &hf.fun;
    theta.dst = &a_base;
    Matrix first = Matrix::zero(1, 2);
    first(0, 0) = 1;
    theta.components = {Hom{hf.fun.on_obj[0], a_base.at(0), first * hf.embed[0].mat}};
    CHECK(check_section(H, a_base, hf, d, theta));

    TheoremReport rep = verify_contraction(H, a_base, hf, theta, 2);
    CHECK(rep.ok);
}

TEST_CASE("product system over the order-2 group: validation and contraction") {
    FinCat cat = grp_c2();
    std::vector<char> sub_a(cat.num_morphisms(), 0);
    sub_a[cat.identity(0)] = 1;
    std::vector<char> sub_g(cat.num_morphisms(), 1);
    MPFunctor mp = m_p_functor(cat, sub_a, sub_g, 0);
    HomotopicSystem sys = direct_product_system(cat, sub_a, sub_g, mp);
    auto report = validate_system(sys);
    for (auto& r : report) MESSAGE(r);
    CHECK(report.empty());

    for (int modulus : {0, 4}) {
        CAPTURE(modulus);
        ContraFun a_tilde = (modulus == 0)
                                ? constant_functor(cat, Module::free(Ring{0}, 1))
                                : negation_functor(cat, modulus);
        ContraFun big = product_functor(sys, mp, a_tilde);
        ContraFun a_base = pullback_functor(sys.base, sys.quot, big);
        HFunctor hf = build_H_functor(sys, big);
        NatMap d = delta_H(sys, big, a_base, hf);
        NatMap theta = canonical_section(sys, mp, a_tilde, a_base, hf);
        CHECK(check_section(sys, a_base, hf, d, theta));

        TheoremReport rep = verify_contraction(sys, a_base, hf, theta, 2);
        CHECK(rep.ok);
        CHECK(rep.detail.find("H^1 = 0") != std::string::npos);
        CHECK(rep.detail.find("H^2 = 0") != std::string::npos);
    }
}

TEST_CASE("product system over the order-3 group") {
    FinCat cat = grp_c3();
    std::vector<char> sub_a(cat.num_morphisms(), 0);
    sub_a[cat.identity(0)] = 1;
    std::vector<char> sub_g(cat.num_morphisms(), 1);
    MPFunctor mp = m_p_functor(cat, sub_a, sub_g, 0);
    HomotopicSystem sys = direct_product_system(cat, sub_a, sub_g, mp);
    CHECK(validate_system(sys).empty());

    ContraFun a_tilde = constant_functor(cat, Module{Ring{9}, {9}});
    ContraFun big = product_functor(sys, mp, a_tilde);
    ContraFun a_base = pullback_functor(sys.base, sys.quot, big);
    HFunctor hf = build_H_functor(sys, big);
    NatMap d = delta_H(sys, big, a_base, hf);
    NatMap theta = canonical_section(sys, mp, a_tilde, a_base, hf);
    CHECK(check_section(sys, a_base, hf, d, theta));
    TheoremReport rep = verify_contraction(sys, a_base, hf, theta, 1);
    CHECK(rep.ok);
}

TEST_CASE("scaled section fails the retraction identity") {
    FinCat cat = grp_c2();
    std::vector<char> sub_a(cat.num_morphisms(), 0);
    sub_a[cat.identity(0)] = 1;
    std::vector<char> sub_g(cat.num_morphisms(), 1);
    MPFunctor mp = m_p_functor(cat, sub_a, sub_g, 0);
    HomotopicSystem sys = direct_product_system(cat, sub_a, sub_g, mp);
    ContraFun a_tilde = constant_functor(cat, Module::free(Ring{0}, 1));
    ContraFun big = product_functor(sys, mp, a_tilde);
    ContraFun a_base = pullback_functor(sys.base, sys.quot, big);
    HFunctor hf = build_H_functor(sys, big);
    NatMap d = delta_H(sys, big, a_base, hf);
    NatMap theta = canonical_section(sys, mp, a_tilde, a_base, hf);
    for (auto& c : theta.components) c = c.scaled(2);
    std::string witness;
    CHECK_FALSE(check_section(sys, a_base, hf, d, theta, &witness));
    CHECK(witness.find("retraction") != std::string::npos);
}

TEST_CASE("corrupted system data is reported with witnesses") {
    FinCat cat = grp_c2();
    std::vector<char> sub_a(cat.num_morphisms(), 0);
    sub_a[cat.identity(0)] = 1;
    std::vector<char> sub_g(cat.num_morphisms(), 1);
    MPFunctor mp = m_p_functor(cat, sub_a, sub_g, 0);
    HomotopicSystem sys = direct_product_system(cat, sub_a, sub_g, mp);
    REQUIRE(validate_system(sys).empty());

    SUBCASE("nu replaced by a wrong morphism") {
        HomotopicSystem bad = sys;
        // Duplicating one leg breaks naturality against the projection.
        bad.nu[0][1] = bad.nu[0][0];
        auto report = validate_system(bad);
        bool found = false;
        for (auto& r : report) found = found || r.find("nu not natural") != std::string::npos;
        CHECK(found);
    }
    SUBCASE("non-functorial fiber map") {
        HomotopicSystem bad = sys;
        std::reverse(bad.s_mor[bad.base.identity(0)].begin(),
                     bad.s_mor[bad.base.identity(0)].end());
        auto report = validate_system(bad);
        bool found = false;
        for (auto& r : report) found = found || r.find("identity") != std::string::npos;
        CHECK(found);
    }
    SUBCASE("non-functorial n") {
        HomotopicSystem bad = sys;
        int e = bad.base.identity(0);
        int s = (e == 0) ? 1 : 0;
        // Point one component of n at the wrong quotient morphism.
        bad.n_mor[s][0] = bad.quot.mor_map[s];
        auto report = validate_system(bad);
        bool found = false;
        for (auto& r : report)
            found = found || r.find("n not functorial") != std::string::npos ||
                    r.find("nu not natural") != std::string::npos;
        CHECK(found);
    }
}

TEST_CASE("lifted chains: uniqueness and face compatibility") {
    FinCat cat = grp_c2();
    std::vector<char> sub_a(cat.num_morphisms(), 0);
    sub_a[cat.identity(0)] = 1;
    std::vector<char> sub_g(cat.num_morphisms(), 1);
    MPFunctor mp = m_p_functor(cat, sub_a, sub_g, 0);
    HomotopicSystem sys = direct_product_system(cat, sub_a, sub_g, mp);

    for (int n : {1, 2}) {
        for (const Chain& r : enumerate_chains(sys.base, n)) {
            for (int s = 0; s < sys.s_size[r.objs[0]]; ++s) {
                LiftedChain lc = lift_chain(sys, r, s);
                // Fibers are forced: pushing forward along each arrow.
                for (int i = 0; i < n; ++i)
                    CHECK(lc.fibers[i + 1] == sys.s_mor[r.arrows[i]][lc.fibers[i]]);
                // Lifting commutes with faces away from the start.
                for (int i = 1; i <= n; ++i) {
                    LiftedChain fl = lift_chain(sys, face(sys.base, r, i), s);
                    LiftedChain lf = lift_chain(sys, r, s);
                    Chain top_face =
                        face(sys.quot.quot, interpolated_chain(sys, lf, n + 1), i);
                    Chain face_top = interpolated_chain(sys, fl, n);
                    CHECK(top_face == face_top);
                }
            }
        }
    }
}

TEST_CASE("interpolated chain shapes at the boundary positions") {
    HomotopicSystem sys = poset_system();
    Chain q;
    q.objs = {0};
    LiftedChain lc = lift_chain(sys, q, 0);
    Chain c0 = interpolated_chain(sys, lc, 0);
    // Position 0: the single-arrow chain nu: n(s, q(0)) -> q(0).
    CHECK(c0.degree() == 1);
    CHECK(c0.objs[0] == sys.n_obj[0][0]);
    CHECK(c0.objs[1] == 0);
    CHECK(c0.arrows[0] == sys.nu[0][0]);
    Chain c1 = interpolated_chain(sys, lc, 1);
    // Top position: extended to the final object by the marked morphism.
    CHECK(c1.objs[1] == sys.p_obj);
    CHECK(c1.arrows[0] == sys.unique_a_to_p[sys.n_obj[0][0]]);
}

TEST_CASE("zero cochains map to zero under the homotopy operator") {
    HomotopicSystem sys = poset_system();
    ContraFun a_tilde = constant_functor(sys.quot.quot, Module::free(Ring{0}, 1));
    ContraFun a_base = pullback_functor(sys.base, sys.quot, a_tilde);
    HFunctor hf = build_H_functor(sys, a_tilde);
    NatMap d = delta_H(sys, a_tilde, a_base, hf);
    NatMap theta = invert_natmap(d);
    StableLevel l0 = stable_cochain_level(sys.base, sys.marks.sub_G, a_base, 0);
    StableLevel l1 = stable_cochain_level(sys.base, sys.marks.sub_G, a_base, 1);
    Matrix zero = Matrix::zero(l1.module.gens(), 1);
    Matrix out = homotopy_map(sys, hf, theta, l1, l0, zero);
    CHECK(out.is_zero());
}
