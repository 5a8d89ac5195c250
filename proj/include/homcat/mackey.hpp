#pragma once

#include "homcat/accover.hpp"
#include "homcat/fincat.hpp"
#include "homcat/functorlib.hpp"
#include "homcat/homotopy.hpp"
#include "homcat/module.hpp"

#include <string>
#include <utility>
#include <vector>

namespace homcat {

/// A finite group with a distinguished p-subgroup P and a biset Omega:
/// G acts on the left, P on the right, and the actions commute.
struct GroupData {
    std::vector<std::vector<int>> mult;  // G multiplication table; 0 is the unit
    std::vector<int> p_elems;            // the subgroup P, ascending, contains 0
    /// left_g[g]: the permutation of Omega induced by g.
    std::vector<std::vector<int>> left_g;
    /// right_p[u]: the right action of u; rows are only meaningful for
    /// u in p_elems.
    std::vector<std::vector<int>> right_p;

    int order() const { return static_cast<int>(mult.size()); }
    int omega_size() const { return left_g.empty() ? 0 : static_cast<int>(left_g[0].size()); }
    int inverse(int g) const;
    int conj(int g, int h) const;  // g h g^{-1}
};

/// Group axioms, subgroup axioms, action axioms, commuting actions.
std::vector<std::string> validate_group_data(const GroupData& gd);

/// All subgroups of P, each as an ascending element list; sorted by
/// (size, elements) so index 0 is the trivial subgroup and the last
/// entry is P itself.
std::vector<std::vector<int>> subgroups_of_p(const GroupData& gd);

/// The transporter category pair: objects are the subgroups of P,
/// morphisms R -> Q are pairs (x, u) with x in the G-transporter from R
/// to Q and u in P; the A-marking selects the pairs with x in P, and the
/// bi-interior structure is (Q x P, C_G(Q) x {1}).
struct TransporterData {
    GroupData gd;
    std::vector<std::vector<int>> objects;
    FinCat cat;
    std::vector<std::pair<int, int>> mor_rep;  // per morphism: (x, u)
    std::vector<char> sub_a;                   // x in P
    std::vector<char> iso_g;                   // all isomorphisms (default G-marking)
    std::vector<std::vector<int>> interior;    // Q x P
    std::vector<std::vector<int>> cointerior;  // C_G(Q) x {1}

    /// Morphism id of (x, u): objects[r] -> objects[q]; -1 if absent.
    int mor_id(int q, int r, int x, int u) const;
    /// Object index of the given subgroup; -1 if it is not an object.
    int obj_of(const std::vector<int>& elems) const;
};

TransporterData transporter_categories(const GroupData& gd);

/// The stabilizer of omega in Q x P as a twisted diagonal: the subgroup
/// Q_omega of P and a twisting element t with stabilizer
/// {(t v t^{-1}, v) : v in Q_omega}. Throws when the stabilizer is not
/// of this form (the biset is not basic).
struct StabilizerResult {
    std::vector<int> q_omega;
    int t = -1;
};
StabilizerResult stabilizer_data(const GroupData& gd, const std::vector<int>& q_elems, int omega);

/// A commutative square in the additive cover of the quotient: alpha,
/// beta into Q, double-coset data W, apex sum of the U_w, and the two
/// leg families gamma (to R) and delta (to T).
struct SpecialSquare {
    int q_obj = -1, r_obj = -1, t_obj = -1;
    int alpha = -1, beta = -1;  // quotient morphisms R -> Q, T -> Q
    std::vector<int> w_reps;    // double-coset representatives in Q
    AcObject apex;              // one term per w
    AcMorphism gamma;           // apex -> R
    AcMorphism delta;           // apex -> T
};

/// Builds the square from chosen representatives and asserts its
/// commutativity in the additive cover of the quotient.
SpecialSquare special_square(const TransporterData& td, const HomotopicSystem& sys, int alpha,
                             int beta);

/// A covariant (transfer-direction) companion functor: on_mor[m] maps
/// on_obj[src(m)] -> on_obj[dst(m)].
struct TransferFun {
    const FinCat* base = nullptr;
    Ring ring;
    std::vector<Module> on_obj;
    std::vector<Hom> on_mor;
};

/// Whether comp is a compatible complement of a: equal object values,
/// composite with a equal to the index scalar, the exchange square for
/// every generating special square, covariant functoriality, and the
/// inverse identity on isomorphisms.
bool check_compatible_complement(const TransporterData& td, const HomotopicSystem& sys,
                                 const ContraFun& a, const TransferFun& comp,
                                 std::string* witness = nullptr);

/// The transporter homotopic system: bi-interior (Q x P, C_G(Q) x {1}),
/// constant fiber Omega, n(omega, R) = R_omega, nu the class of the
/// twisting element. The G-marking defaults to all isomorphisms.
HomotopicSystem mackey_system(const TransporterData& td);

/// The averaging section: theta_Q = (|P|/|Omega|) * sum over orbit
/// representatives of the transfer along the twisting element. Throws
/// when |Omega|/|P| is not a unit in the coefficient ring; verifies
/// independence of the representative choice.
NatMap mackey_section(const TransporterData& td, const HomotopicSystem& sys, const ContraFun& a,
                      const TransferFun& comp, const ContraFun& a_base, const HFunctor& hf);

/// End-to-end verification: system validation, section check, the
/// contraction identity per degree, and the independent vanishing of
/// stable cohomology in degrees 1..max_degree.
TheoremReport verify_splitting(const TransporterData& td, const HomotopicSystem& sys,
                               const ContraFun& a, const TransferFun& comp, int max_degree);

}  // namespace homcat
