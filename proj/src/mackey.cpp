#include "homcat/mackey.hpp"

#include "homcat/cochain.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace homcat {

namespace {

std::string join_elems(const std::vector<int>& elems) {
    std::ostringstream out;
    out << "{";
    for (size_t i = 0; i < elems.size(); ++i) {
        if (i) out << ",";
        out << elems[i];
    }
    out << "}";
    return out.str();
}

bool is_perm(const std::vector<int>& row, int n) {
    if (static_cast<int>(row.size()) != n) return false;
    std::vector<char> seen(n, 0);
    for (int v : row) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

std::vector<int> closure(const GroupData& gd, std::vector<int> elems) {
    std::set<int> s(elems.begin(), elems.end());
    s.insert(0);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> cur(s.begin(), s.end());
        for (int a : cur)
            for (int b : cur)
                if (s.insert(gd.mult[a][b]).second) grew = true;
    }
    return std::vector<int>(s.begin(), s.end());
}

AcMorphism ac_single(const FinCat& cat, int m) {
    AcMorphism r;
    r.dom = AcObject{{cat.src(m)}};
    r.cod = AcObject{{cat.dst(m)}};
    r.index_map = {0};
    r.components = {m};
    return r;
}

/// Orbits of Q x P on Omega under w -> g.w.v^{-1}; returns the orbit id
/// per point.
std::vector<int> orbit_ids(const GroupData& gd, const std::vector<int>& q_elems) {
    int om = gd.omega_size();
    std::vector<int> orbit(om, -1);
    int next = 0;
    for (int w0 = 0; w0 < om; ++w0) {
        if (orbit[w0] >= 0) continue;
        std::vector<int> stack = {w0};
        orbit[w0] = next;
        while (!stack.empty()) {
            int w = stack.back();
            stack.pop_back();
            for (int g : q_elems)
                for (int v : gd.p_elems) {
                    int img = gd.left_g[g][gd.right_p[gd.inverse(v)][w]];
                    if (orbit[img] < 0) {
                        orbit[img] = next;
                        stack.push_back(img);
                    }
                }
        }
        ++next;
    }
    return orbit;
}

/// The value of the covariant companion on an ac-morphism with a
/// one-term codomain: the row-concatenated transfer along each component.
Hom transfer_ac(const TransferFun& f, const AcMorphism& m) {
    Module dom = Module::zero(f.ring);
    std::vector<int> offs;
    for (int t : m.dom.terms) {
        offs.push_back(dom.gens());
        dom = Module::direct_sum(dom, f.on_obj[t]);
    }
    const Module& cod = f.on_obj[m.cod.terms.at(0)];
    Matrix mat(cod.gens(), dom.gens());
    for (size_t j = 0; j < m.components.size(); ++j) {
        const Hom& h = f.on_mor[m.components[j]];
        for (int i = 0; i < h.mat.rows(); ++i)
            for (int k = 0; k < h.mat.cols(); ++k) mat(i, offs[j] + k) = h.mat(i, k);
    }
    return Hom{dom, cod, mat};
}

}  // namespace

int GroupData::inverse(int g) const {
    for (int h = 0; h < order(); ++h)
        if (mult[g][h] == 0) return h;
    throw std::invalid_argument("element has no inverse");
}

int GroupData::conj(int g, int h) const { return mult[mult[g][h]][inverse(g)]; }

std::vector<std::string> validate_group_data(const GroupData& gd) {
    std::vector<std::string> errs;
    int n = gd.order();
    if (n == 0) return {"empty group"};
    for (const auto& row : gd.mult) {
        if (static_cast<int>(row.size()) != n) return {"multiplication table is not square"};
        for (int v : row)
            if (v < 0 || v >= n) return {"multiplication table entry out of range"};
    }
    for (int g = 0; g < n && errs.empty(); ++g)
        if (gd.mult[0][g] != g || gd.mult[g][0] != g)
            errs.push_back("element 0 is not a two-sided unit");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (gd.mult[gd.mult[a][b]][c] != gd.mult[a][gd.mult[b][c]]) {
                    errs.push_back("multiplication is not associative");
                    a = b = n;
                    break;
                }
    for (int g = 0; g < n; ++g) {
        bool inv = false;
        for (int h = 0; h < n; ++h) inv = inv || gd.mult[g][h] == 0;
        if (!inv) errs.push_back("element " + std::to_string(g) + " has no inverse");
    }
    if (!errs.empty()) return errs;

    if (!std::is_sorted(gd.p_elems.begin(), gd.p_elems.end()) ||
        std::find(gd.p_elems.begin(), gd.p_elems.end(), 0) == gd.p_elems.end())
        errs.push_back("the distinguished subgroup must be ascending and contain 0");
    else {
        std::set<int> p(gd.p_elems.begin(), gd.p_elems.end());
        for (int a : gd.p_elems)
            for (int b : gd.p_elems)
                if (!p.count(gd.mult[a][b]))
                    errs.push_back("the distinguished subgroup is not closed under products");
    }
    if (!errs.empty()) return errs;

    int om = gd.omega_size();
    if (om <= 0) errs.push_back("the point set must be nonempty");
    if (static_cast<int>(gd.left_g.size()) != n) errs.push_back("left action table has wrong size");
    if (static_cast<int>(gd.right_p.size()) != n)
        errs.push_back("right action table has wrong size");
    if (!errs.empty()) return errs;
    for (int g = 0; g < n; ++g)
        if (!is_perm(gd.left_g[g], om))
            errs.push_back("left action of " + std::to_string(g) + " is not a permutation");
    for (int u : gd.p_elems)
        if (!is_perm(gd.right_p[u], om))
            errs.push_back("right action of " + std::to_string(u) + " is not a permutation");
    if (!errs.empty()) return errs;
    for (int w = 0; w < om; ++w) {
        if (gd.left_g[0][w] != w) errs.push_back("left action of the unit is not the identity");
        if (gd.right_p[0][w] != w) errs.push_back("right action of the unit is not the identity");
    }
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int w = 0; w < om; ++w)
                if (gd.left_g[gd.mult[g][h]][w] != gd.left_g[g][gd.left_g[h][w]]) {
                    errs.push_back("left action is not a homomorphism");
                    g = h = n;
                    break;
                }
    for (int u : gd.p_elems)
        for (int v : gd.p_elems)
            for (int w = 0; w < om; ++w)
                if (gd.right_p[gd.mult[u][v]][w] != gd.right_p[v][gd.right_p[u][w]]) {
                    errs.push_back("right action is not a right action");
                    u = v = n;
                    break;
                }
    for (int g = 0; g < n; ++g)
        for (int u : gd.p_elems)
            for (int w = 0; w < om; ++w)
                if (gd.left_g[g][gd.right_p[u][w]] != gd.right_p[u][gd.left_g[g][w]]) {
                    errs.push_back("the two actions do not commute");
                    g = n;
                    break;
                }
    return errs;
}

std::vector<std::vector<int>> subgroups_of_p(const GroupData& gd) {
    std::set<std::vector<int>> found;
    found.insert(closure(gd, {}));
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<int>> cur(found.begin(), found.end());
        for (const auto& s : cur)
            for (int g : gd.p_elems) {
                std::vector<int> bigger = s;
                bigger.push_back(g);
                if (found.insert(closure(gd, bigger)).second) grew = true;
            }
    }
    std::vector<std::vector<int>> out(found.begin(), found.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

int TransporterData::mor_id(int q, int r, int x, int u) const {
    for (int m = 0; m < cat.num_morphisms(); ++m)
        if (cat.src(m) == r && cat.dst(m) == q && mor_rep[m] == std::make_pair(x, u)) return m;
    return -1;
}

int TransporterData::obj_of(const std::vector<int>& elems) const {
    for (size_t i = 0; i < objects.size(); ++i)
        if (objects[i] == elems) return static_cast<int>(i);
    return -1;
}

TransporterData transporter_categories(const GroupData& gd) {
    auto errs = validate_group_data(gd);
    if (!errs.empty()) throw std::invalid_argument("invalid group data: " + errs.front());

    TransporterData td;
    td.gd = gd;
    td.objects = subgroups_of_p(gd);
    int nobj = static_cast<int>(td.objects.size());
    std::set<int> p(gd.p_elems.begin(), gd.p_elems.end());

    FinCat& cat = td.cat;
    for (const auto& s : td.objects) cat.object_names.push_back(join_elems(s));
    // Morphisms R -> Q: (x, u) with x R x^{-1} inside Q and u in P.
    for (int q = 0; q < nobj; ++q)
        for (int r = 0; r < nobj; ++r)
            for (int x = 0; x < gd.order(); ++x) {
                bool transports = true;
                for (int e : td.objects[r])
                    transports = transports &&
                                 std::binary_search(td.objects[q].begin(), td.objects[q].end(),
                                                    gd.conj(x, e));
                if (!transports) continue;
                for (int u : gd.p_elems) {
                    FinCat::Mor m;
                    m.name = "(g" + std::to_string(x) + ",u" + std::to_string(u) + "):" +
                             cat.object_names[r] + "->" + cat.object_names[q];
                    m.src = r;
                    m.dst = q;
                    cat.morphisms.push_back(m);
                    td.mor_rep.emplace_back(x, u);
                }
            }
    int nm = cat.num_morphisms();
    cat.idmap_.assign(nobj, -1);
    for (int o = 0; o < nobj; ++o) cat.idmap_[o] = td.mor_id(o, o, 0, 0);
    cat.comp_.assign(static_cast<size_t>(nm) * nm, -1);
    for (int g = 0; g < nm; ++g)
        for (int f = 0; f < nm; ++f) {
            if (!cat.composable(g, f)) continue;
            int id = td.mor_id(cat.dst(g), cat.src(f), gd.mult[td.mor_rep[g].first][td.mor_rep[f].first],
                               gd.mult[td.mor_rep[g].second][td.mor_rep[f].second]);
            if (id < 0) throw std::logic_error("transporter composition left the category");
            cat.comp_[static_cast<size_t>(g) * nm + f] = id;
        }

    td.sub_a.resize(nm);
    td.iso_g.resize(nm);
    for (int m = 0; m < nm; ++m) {
        td.sub_a[m] = p.count(td.mor_rep[m].first) ? 1 : 0;
        td.iso_g[m] = cat.is_iso(m) ? 1 : 0;
    }

    td.interior.resize(nobj);
    td.cointerior.resize(nobj);
    for (int o = 0; o < nobj; ++o) {
        for (int x : td.objects[o])
            for (int u : gd.p_elems) td.interior[o].push_back(td.mor_id(o, o, x, u));
        for (int c = 0; c < gd.order(); ++c) {
            bool central = true;
            for (int e : td.objects[o]) central = central && gd.mult[c][e] == gd.mult[e][c];
            if (central) td.cointerior[o].push_back(td.mor_id(o, o, c, 0));
        }
        std::sort(td.interior[o].begin(), td.interior[o].end());
        std::sort(td.cointerior[o].begin(), td.cointerior[o].end());
    }
    return td;
}

StabilizerResult stabilizer_data(const GroupData& gd, const std::vector<int>& q_elems, int omega) {
    std::map<int, int> by_v;  // P-part -> Q-part
    int pairs = 0;
    for (int g : q_elems)
        for (int v : gd.p_elems)
            if (gd.left_g[g][gd.right_p[gd.inverse(v)][omega]] == omega) {
                ++pairs;
                auto it = by_v.find(v);
                if (it != by_v.end() && it->second != g)
                    throw std::invalid_argument(
                        "the point set is not basic: the stabilizer of point " +
                        std::to_string(omega) + " in " + join_elems(q_elems) +
                        " x P is not the graph of a function");
                by_v.emplace(v, g);
            }
    StabilizerResult res;
    for (const auto& kv : by_v) res.q_omega.push_back(kv.first);
    if (pairs != static_cast<int>(by_v.size()))
        throw std::invalid_argument("the point set is not basic at point " + std::to_string(omega));
    for (int t = 0; t < gd.order(); ++t) {
        bool match = true;
        for (const auto& kv : by_v) match = match && gd.conj(t, kv.first) == kv.second;
        if (match) {
            res.t = t;
            return res;
        }
    }
    throw std::invalid_argument("the point set is not basic: the stabilizer of point " +
                                std::to_string(omega) + " in " + join_elems(q_elems) +
                                " x P is not a twisted diagonal");
}

SpecialSquare special_square(const TransporterData& td, const HomotopicSystem& sys, int alpha,
                             int beta) {
    const FinCat& quot = sys.quot.quot;
    if (quot.dst(alpha) != quot.dst(beta))
        throw std::invalid_argument("the two morphisms must share their target");
    const GroupData& gd = td.gd;
    SpecialSquare sq;
    sq.alpha = alpha;
    sq.beta = beta;
    sq.q_obj = quot.dst(alpha);
    sq.r_obj = quot.src(alpha);
    sq.t_obj = quot.src(beta);
    int x = td.mor_rep[sys.quot.section[alpha]].first;
    int y = td.mor_rep[sys.quot.section[beta]].first;

    std::vector<int> a_img, b_img;  // the images x R x^{-1} and y T y^{-1}
    for (int e : td.objects[sq.r_obj]) a_img.push_back(gd.conj(x, e));
    for (int e : td.objects[sq.t_obj]) b_img.push_back(gd.conj(y, e));
    std::sort(a_img.begin(), a_img.end());
    std::sort(b_img.begin(), b_img.end());

    // Double cosets a_img \ Q / b_img, least representative first.
    std::set<int> placed;
    for (int w : td.objects[sq.q_obj]) {
        if (placed.count(w)) continue;
        sq.w_reps.push_back(w);
        for (int a : a_img)
            for (int b : b_img) placed.insert(gd.mult[gd.mult[a][w]][b]);
    }

    sq.gamma.cod = AcObject{{sq.r_obj}};
    sq.delta.cod = AcObject{{sq.t_obj}};
    for (int w : sq.w_reps) {
        std::vector<int> u_w;  // w^{-1} a_img w intersected with b_img
        for (int b : b_img)
            if (std::binary_search(a_img.begin(), a_img.end(), gd.conj(w, b))) u_w.push_back(b);
        int u_obj = td.obj_of(u_w);
        if (u_obj < 0) throw std::logic_error("double-coset intersection is not an object");
        sq.apex.terms.push_back(u_obj);
        int g_mor = td.mor_id(sq.r_obj, u_obj, gd.mult[gd.inverse(x)][w], 0);
        int d_mor = td.mor_id(sq.t_obj, u_obj, gd.inverse(y), 0);
        if (g_mor < 0 || d_mor < 0) throw std::logic_error("square leg left the category");
        sq.gamma.components.push_back(sys.quot.mor_map[g_mor]);
        sq.delta.components.push_back(sys.quot.mor_map[d_mor]);
        sq.gamma.index_map.push_back(0);
        sq.delta.index_map.push_back(0);
    }
    sq.gamma.dom = sq.apex;
    sq.delta.dom = sq.apex;

    AcMorphism left = ac_compose(quot, ac_single(quot, alpha), sq.gamma);
    AcMorphism right = ac_compose(quot, ac_single(quot, beta), sq.delta);
    if (!(left == right))
        throw std::logic_error("special square does not commute over " + quot.obj_name(sq.q_obj));
    return sq;
}

bool check_compatible_complement(const TransporterData& td, const HomotopicSystem& sys,
                                 const ContraFun& a, const TransferFun& comp,
                                 std::string* witness) {
    const FinCat& quot = sys.quot.quot;
    auto fail = [&](const std::string& msg) {
        if (witness) *witness = msg;
        return false;
    };
    if (comp.base != &quot || a.base != &quot) return fail("functors live on the wrong category");

    for (int o = 0; o < quot.num_objects(); ++o)
        if (!(a.on_obj[o] == comp.on_obj[o]))
            return fail("object values differ at " + quot.obj_name(o));

    for (int o = 0; o < quot.num_objects(); ++o)
        if (!hom_is_identity(comp.on_mor[quot.identity(o)]))
            return fail("companion does not preserve the identity of " + quot.obj_name(o));
    for (int g = 0; g < quot.num_morphisms(); ++g)
        for (int f = 0; f < quot.num_morphisms(); ++f) {
            if (!quot.composable(g, f)) continue;
            if (!homs_equal(comp.on_mor[quot.compose(g, f)],
                            comp.on_mor[g].compose_after(comp.on_mor[f])))
                return fail("companion is not functorial at " + quot.mor_name(g) + " after " +
                            quot.mor_name(f));
        }

    for (int m = 0; m < quot.num_morphisms(); ++m) {
        Int scalar = Int(td.objects[quot.dst(m)].size()) / Int(td.objects[quot.src(m)].size());
        Hom round = comp.on_mor[m].compose_after(a.at_mor(m));
        if (!homs_equal(round, Hom::identity(a.at(quot.dst(m))).scaled(scalar)))
            return fail("composite with the companion is not the index scalar at " +
                        quot.mor_name(m));
        if (quot.is_iso(m) && !homs_equal(comp.on_mor[m], a.at_mor(quot.inverse(m))))
            return fail("companion of the isomorphism " + quot.mor_name(m) +
                        " is not the value on its inverse");
    }

    // The exchange square for each generating special square; general
    // special squares are direct sums of these, so additivity covers them.
    for (int alpha = 0; alpha < quot.num_morphisms(); ++alpha)
        for (int beta = 0; beta < quot.num_morphisms(); ++beta) {
            if (quot.dst(alpha) != quot.dst(beta)) continue;
            SpecialSquare sq = special_square(td, sys, alpha, beta);
            Hom lhs = a.at_mor(beta).compose_after(comp.on_mor[alpha]);
            Hom rhs = transfer_ac(comp, sq.delta).compose_after(ac_hom(a, sq.gamma));
            if (!homs_equal(lhs, rhs))
                return fail("exchange square fails for " + quot.mor_name(alpha) + " and " +
                            quot.mor_name(beta));
        }
    return true;
}

HomotopicSystem mackey_system(const TransporterData& td) {
    const GroupData& gd = td.gd;
    HomotopicSystem H;
    H.base = td.cat;
    H.marks.sub_A = td.sub_a;
    H.marks.sub_G = td.iso_g;
    H.marks.interior = td.interior;
    H.marks.cointerior = td.cointerior;
    H.quot = bi_exterior_quotient(td.cat, td.interior, td.cointerior);
    H.quot_a = quotient_marking(H.quot, td.sub_a);
    H.quot_g = quotient_marking(H.quot, td.iso_g);

    // The G-marking must contain Q C_G(Q) x P as automorphisms of Q and
    // every marked isomorphism of the A-part.
    for (int o = 0; o < td.cat.num_objects(); ++o)
        for (int i : td.interior[o])
            for (int c : td.cointerior[o]) {
                int m = td.cat.compose(i, c);
                if (!H.marks.sub_G[m])
                    throw std::logic_error("G-marking misses the automorphism " +
                                           td.cat.mor_name(m));
            }

    H.p_obj = td.obj_of(gd.p_elems);
    const FinCat& quot = H.quot.quot;
    H.unique_a_to_p.assign(quot.num_objects(), -1);
    for (int o = 0; o < quot.num_objects(); ++o) {
        for (int m : quot.hom(o, H.p_obj))
            if (H.quot_a[m]) {
                if (H.unique_a_to_p[o] >= 0)
                    throw std::logic_error("two marked morphisms from " + quot.obj_name(o) +
                                           " to the full subgroup");
                H.unique_a_to_p[o] = m;
            }
        if (H.unique_a_to_p[o] < 0)
            throw std::logic_error("no marked morphism from " + quot.obj_name(o) +
                                   " to the full subgroup");
    }

    int om = gd.omega_size();
    int nobj = td.cat.num_objects();
    H.s_size.assign(nobj, om);
    H.n_obj.resize(nobj);
    H.nu.resize(nobj);
    for (int o = 0; o < nobj; ++o)
        for (int w = 0; w < om; ++w) {
            StabilizerResult st = stabilizer_data(gd, td.objects[o], w);
            int sub = td.obj_of(st.q_omega);
            if (sub < 0) throw std::logic_error("stabilizer subgroup is not an object");
            H.n_obj[o].push_back(sub);
            int t_mor = td.mor_id(o, sub, st.t, 0);
            if (t_mor < 0) throw std::logic_error("twisting element does not transport");
            H.nu[o].push_back(H.quot.mor_map[t_mor]);
        }

    int nm = td.cat.num_morphisms();
    H.s_mor.resize(nm);
    H.n_mor.resize(nm);
    for (int m = 0; m < nm; ++m) {
        int x = td.mor_rep[m].first, u = td.mor_rep[m].second;
        int src = td.cat.src(m), dst = td.cat.dst(m);
        for (int w = 0; w < om; ++w) {
            int img = gd.left_g[x][gd.right_p[gd.inverse(u)][w]];
            H.s_mor[m].push_back(img);
            int c_mor = td.mor_id(H.n_obj[dst][img], H.n_obj[src][w], u, 0);
            if (c_mor < 0)
                throw std::logic_error("conjugation by the P-part does not map the stabilizer of " +
                                       std::to_string(w) + " into its image stabilizer along " +
                                       td.cat.mor_name(m));
            H.n_mor[m].push_back(H.quot.mor_map[c_mor]);
        }
    }
    return H;
}

NatMap mackey_section(const TransporterData& td, const HomotopicSystem& sys, const ContraFun& a,
                      const TransferFun& comp, const ContraFun& a_base, const HFunctor& hf) {
    const GroupData& gd = td.gd;
    Int p_size = Int(gd.p_elems.size());
    Int om = Int(gd.omega_size());
    if (om % p_size != 0)
        throw std::invalid_argument("the number of points is not divisible by the subgroup order");
    Int k = om / p_size;
    if (!a.ring.is_unit(k))
        throw std::invalid_argument(
            "the scalar |Omega|/|P| = " + k.str() + " is not a unit in the coefficient ring " +
            a.ring.to_string() + "; choose a coefficient ring in which it is invertible");
    Int c = a.ring.unit_inverse(k);

    auto build = [&](bool largest_rep) {
        std::vector<Hom> comps;
        for (int o = 0; o < td.cat.num_objects(); ++o) {
            std::vector<int> orbit = orbit_ids(gd, td.objects[o]);
            int norb = 1 + *std::max_element(orbit.begin(), orbit.end());
            std::vector<int> rep(norb, -1);
            for (int w = 0; w < gd.omega_size(); ++w)
                if (rep[orbit[w]] < 0 || largest_rep) rep[orbit[w]] = w;
            const Module& target = a_base.at(o);
            Matrix full(target.gens(), hf.offsets[o].back());
            for (int r : rep) {
                const Hom& tr = comp.on_mor[sys.nu[o][r]];
                for (int i = 0; i < tr.mat.rows(); ++i)
                    for (int j = 0; j < tr.mat.cols(); ++j)
                        full(i, hf.offsets[o][r] + j) = c * tr.mat(i, j);
            }
            comps.push_back(Hom{hf.fun.at(o), target, full * hf.embed[o].mat});
        }
        return comps;
    };
    std::vector<Hom> comps = build(false);
    std::vector<Hom> other = build(true);
    for (int o = 0; o < td.cat.num_objects(); ++o)
        if (!homs_equal(comps[o], other[o]))
            throw std::logic_error("the section depends on the orbit representatives at " +
                                   td.cat.obj_name(o));
    return NatMap{&hf.fun, &a_base, comps};
}

TheoremReport verify_splitting(const TransporterData& td, const HomotopicSystem& sys,
                               const ContraFun& a, const TransferFun& comp, int max_degree) {
    TheoremReport report;
    auto errs = validate_system(sys);
    if (!errs.empty()) {
        report.ok = false;
        report.detail = "system invalid: " + errs.front() + "\n";
        return report;
    }
    std::string w;
    if (!check_compatible_complement(td, sys, a, comp, &w)) {
        report.ok = false;
        report.detail = "companion incompatible: " + w + "\n";
        return report;
    }
    ContraFun a_base = pullback_functor(td.cat, sys.quot, a);
    HFunctor hf = build_H_functor(sys, a);
    NatMap delta = delta_H(sys, a, a_base, hf);
    NatMap theta = mackey_section(td, sys, a, comp, a_base, hf);
    if (!check_section(sys, a_base, hf, delta, theta, &w)) {
        report.ok = false;
        report.detail = "section check failed: " + w + "\n";
        return report;
    }
    report = verify_contraction(sys, a_base, hf, theta, max_degree);
    report.detail = "system valid; companion compatible; section verified\n" + report.detail;
    return report;
}

}  // namespace homcat
