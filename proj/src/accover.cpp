#include "homcat/accover.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace homcat {

std::string AcObject::to_string(const FinCat& cat) const {
    if (terms.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < terms.size(); ++i) {
        if (i) out += " + ";
        out += cat.obj_name(terms[i]);
    }
    return out;
}

std::string AcMorphism::to_string(const FinCat& cat) const {
    std::string out = "(";
    for (size_t j = 0; j < index_map.size(); ++j) {
        if (j) out += ", ";
        out += std::to_string(j) + "->" + std::to_string(index_map[j]) + ":" +
               cat.mor_name(components[j]);
    }
    return out + ")";
}

bool ac_valid(const FinCat& cat, const AcMorphism& m) {
    if (m.index_map.size() != m.dom.terms.size() || m.components.size() != m.dom.terms.size())
        return false;
    for (size_t j = 0; j < m.index_map.size(); ++j) {
        int i = m.index_map[j];
        if (i < 0 || i >= m.cod.size()) return false;
        int phi = m.components[j];
        if (phi < 0 || phi >= cat.num_morphisms()) return false;
        if (cat.src(phi) != m.dom.terms[j] || cat.dst(phi) != m.cod.terms[i]) return false;
    }
    return true;
}

AcMorphism ac_identity(const FinCat& cat, const AcObject& obj) {
    AcMorphism m;
    m.dom = m.cod = obj;
    for (int j = 0; j < obj.size(); ++j) {
        m.index_map.push_back(j);
        m.components.push_back(cat.identity(obj.terms[j]));
    }
    return m;
}

AcMorphism ac_compose(const FinCat& cat, const AcMorphism& g, const AcMorphism& f) {
    if (!(f.cod == g.dom)) throw std::invalid_argument("ac_compose: endpoint mismatch");
    AcMorphism out;
    out.dom = f.dom;
    out.cod = g.cod;
    for (int j = 0; j < f.dom.size(); ++j) {
        int mid = f.index_map[j];
        out.index_map.push_back(g.index_map[mid]);
        out.components.push_back(cat.compose(g.components[mid], f.components[j]));
    }
    return out;
}

AcObject ac_direct_sum(const AcObject& a, const AcObject& b) {
    AcObject out = a;
    out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
    return out;
}

AcMorphism ac_morphism_sum(const AcMorphism& a, const AcMorphism& b) {
    AcMorphism out;
    out.dom = ac_direct_sum(a.dom, b.dom);
    out.cod = ac_direct_sum(a.cod, b.cod);
    out.index_map = a.index_map;
    out.components = a.components;
    for (size_t j = 0; j < b.index_map.size(); ++j) {
        out.index_map.push_back(b.index_map[j] + a.cod.size());
        out.components.push_back(b.components[j]);
    }
    return out;
}

AcMorphism ac_inclusion(const FinCat& cat, const AcObject& obj, int i) {
    AcMorphism m;
    m.dom.terms = {obj.terms[i]};
    m.cod = obj;
    m.index_map = {i};
    m.components = {cat.identity(obj.terms[i])};
    return m;
}

namespace {

AcMorphism ac_single(const FinCat& cat, int m) {
    AcMorphism out;
    out.dom.terms = {cat.src(m)};
    out.cod.terms = {cat.dst(m)};
    out.index_map = {0};
    out.components = {m};
    return out;
}

}  // namespace

bool all_epi(const FinCat& cat) {
    for (int psi = 0; psi < cat.num_morphisms(); ++psi)
        for (int phi = 0; phi < cat.num_morphisms(); ++phi) {
            if (!cat.composable(phi, psi)) continue;
            for (int phi2 = phi + 1; phi2 < cat.num_morphisms(); ++phi2) {
                if (cat.src(phi2) != cat.src(phi) || cat.dst(phi2) != cat.dst(phi)) continue;
                if (cat.compose(phi, psi) == cat.compose(phi2, psi)) return false;
            }
        }
    return true;
}

std::vector<int> nonextendable(const FinCat& cat, int t_obj, int alpha) {
    int q = cat.src(alpha), r = cat.dst(alpha);
    std::set<int> excluded;
    for (int theta = 0; theta < cat.num_morphisms(); ++theta) {
        if (cat.src(theta) != q || cat.is_iso(theta)) continue;
        bool divides = false;
        for (int ap : cat.hom(cat.dst(theta), r))
            if (cat.compose(ap, theta) == alpha) {
                divides = true;
                break;
            }
        if (!divides) continue;
        for (int bp : cat.hom(cat.dst(theta), t_obj)) excluded.insert(cat.compose(bp, theta));
    }
    std::vector<int> out;
    for (int beta : cat.hom(q, t_obj))
        if (!excluded.count(beta)) out.push_back(beta);
    return out;
}

std::vector<StrictTriple> strict_triple_candidates(const FinCat& cat, int r_obj, int t_obj) {
    std::vector<StrictTriple> out;
    for (int apex = 0; apex < cat.num_objects(); ++apex) {
        for (int ar : cat.hom(apex, r_obj)) {
            std::set<int> ne_t;
            for (int b : nonextendable(cat, t_obj, ar)) ne_t.insert(b);
            for (int bt : cat.hom(apex, t_obj)) {
                if (!ne_t.count(bt)) continue;
                // Mutual nonextendability (equivalent under all-epi; check anyway).
                auto ne_r = nonextendable(cat, r_obj, bt);
                if (std::find(ne_r.begin(), ne_r.end(), ar) == ne_r.end()) continue;
                out.push_back({apex, ar, bt});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool triples_equivalent(const FinCat& cat, const StrictTriple& a, const StrictTriple& b) {
    for (int theta : cat.hom(a.apex, b.apex)) {
        if (!cat.is_iso(theta)) continue;
        if (cat.compose(b.to_r, theta) == a.to_r && cat.compose(b.to_t, theta) == a.to_t)
            return true;
    }
    return false;
}

std::vector<StrictTriple> strict_triples(const FinCat& cat, int r_obj, int t_obj) {
    std::vector<StrictTriple> reps;
    for (const StrictTriple& c : strict_triple_candidates(cat, r_obj, t_obj)) {
        bool seen = false;
        for (const StrictTriple& r : reps)
            if (triples_equivalent(cat, c, r)) {
                seen = true;
                break;
            }
        if (!seen) reps.push_back(c);
    }
    return reps;
}

MultReport check_multiplicative(const FinCat& cat) {
    MultReport rep;
    if (!all_epi(cat)) {
        rep.witness = "a morphism is not an epimorphism";
        return rep;
    }
    for (int q = 0; q < cat.num_objects(); ++q)
        for (int r = 0; r < cat.num_objects(); ++r)
            for (int alpha : cat.hom(q, r)) {
                // Divisors of alpha, up to post-composition isomorphism.
                std::vector<std::pair<int, int>> divisors;  // (theta, alpha/theta)
                for (int theta = 0; theta < cat.num_morphisms(); ++theta) {
                    if (cat.src(theta) != q) continue;
                    for (int ap : cat.hom(cat.dst(theta), r))
                        if (cat.compose(ap, theta) == alpha) {
                            divisors.push_back({theta, ap});
                            break;
                        }
                }
                std::vector<std::pair<int, int>> div_reps;
                for (auto& d : divisors) {
                    bool seen = false;
                    for (auto& e : div_reps) {
                        for (int sigma : cat.hom(cat.dst(d.first), cat.dst(e.first)))
                            if (cat.is_iso(sigma) && cat.compose(sigma, d.first) == e.first) {
                                seen = true;
                                break;
                            }
                        if (seen) break;
                    }
                    if (!seen) div_reps.push_back(d);
                }
                for (int t = 0; t < cat.num_objects(); ++t) {
                    std::map<int, int> covered;  // beta -> covering divisor
                    for (auto& [theta, ap] : div_reps)
                        for (int bp : nonextendable(cat, t, ap)) {
                            int beta = cat.compose(bp, theta);
                            auto it = covered.find(beta);
                            if (it != covered.end()) {
                                rep.witness = "partition not disjoint: " + cat.mor_name(beta) +
                                              " covered by divisors " +
                                              cat.mor_name(it->second) + " and " +
                                              cat.mor_name(theta) + " of " + cat.mor_name(alpha);
                                return rep;
                            }
                            covered[beta] = theta;
                        }
                    for (int beta : cat.hom(q, t))
                        if (!covered.count(beta)) {
                            rep.witness = "partition does not cover " + cat.mor_name(beta) +
                                          " for alpha = " + cat.mor_name(alpha);
                            return rep;
                        }
                }
            }
    rep.ok = true;
    return rep;
}

ProductData direct_product(const FinCat& cat, int r_obj, int t_obj) {
    ProductData p;
    p.triples = strict_triples(cat, r_obj, t_obj);
    for (const auto& t : p.triples) p.object.terms.push_back(t.apex);
    p.proj_r.dom = p.object;
    p.proj_r.cod.terms = {r_obj};
    p.proj_t.dom = p.object;
    p.proj_t.cod.terms = {t_obj};
    for (const auto& t : p.triples) {
        p.proj_r.index_map.push_back(0);
        p.proj_r.components.push_back(t.to_r);
        p.proj_t.index_map.push_back(0);
        p.proj_t.components.push_back(t.to_t);
    }
    return p;
}

std::string check_product_universal(const FinCat& cat, const ProductData& p, int r_obj,
                                    int t_obj) {
    for (int u = 0; u < cat.num_objects(); ++u)
        for (int gamma : cat.hom(u, r_obj))
            for (int delta : cat.hom(u, t_obj)) {
                int count = 0;
                for (size_t i = 0; i < p.triples.size(); ++i)
                    for (int e : cat.hom(u, p.triples[i].apex))
                        if (cat.compose(p.triples[i].to_r, e) == gamma &&
                            cat.compose(p.triples[i].to_t, e) == delta)
                            ++count;
                if (count != 1)
                    return "cone (" + cat.mor_name(gamma) + ", " + cat.mor_name(delta) +
                           ") from " + cat.obj_name(u) + " has " + std::to_string(count) +
                           " factorizations";
            }
    return "";
}

PullbackData pull_back(const FinCat& cat, int alpha, int beta) {
    if (cat.dst(alpha) != cat.dst(beta))
        throw std::invalid_argument("pull_back: morphisms must share a target");
    int q = cat.src(alpha), r = cat.src(beta);
    ProductData prod = direct_product(cat, q, r);
    PullbackData pb;
    pb.to_q.cod.terms = {q};
    pb.to_r.cod.terms = {r};
    for (size_t i = 0; i < prod.triples.size(); ++i) {
        const auto& t = prod.triples[i];
        if (cat.compose(alpha, t.to_r) != cat.compose(beta, t.to_t)) continue;
        pb.kept_indices.push_back(static_cast<int>(i));
        pb.object.terms.push_back(t.apex);
        pb.to_q.index_map.push_back(0);
        pb.to_q.components.push_back(t.to_r);
        pb.to_r.index_map.push_back(0);
        pb.to_r.components.push_back(t.to_t);
    }
    pb.to_q.dom = pb.object;
    pb.to_r.dom = pb.object;
    return pb;
}

std::string check_pullback_universal(const FinCat& cat, const PullbackData& pb, int alpha,
                                     int beta) {
    int q = cat.src(alpha), r = cat.src(beta);
    for (int u = 0; u < cat.num_objects(); ++u)
        for (int gamma : cat.hom(u, q))
            for (int delta : cat.hom(u, r)) {
                if (cat.compose(alpha, gamma) != cat.compose(beta, delta)) continue;
                int count = 0;
                for (size_t i = 0; i < pb.object.terms.size(); ++i)
                    for (int e : cat.hom(u, pb.object.terms[i]))
                        if (cat.compose(pb.to_q.components[i], e) == gamma &&
                            cat.compose(pb.to_r.components[i], e) == delta)
                            ++count;
                if (count != 1)
                    return "pull-back cone (" + cat.mor_name(gamma) + ", " + cat.mor_name(delta) +
                           ") from " + cat.obj_name(u) + " has " + std::to_string(count) +
                           " factorizations";
            }
    return "";
}

ExtMultReport exterior_multiplicative(const FinCat& base, const QuotientResult& q) {
    ExtMultReport out;
    MultReport mq = check_multiplicative(q.quot);
    if (!mq.ok) {
        out.witness = "quotient not multiplicative: " + mq.witness;
        return out;
    }
    for (int r = 0; r < base.num_objects(); ++r)
        for (int t = 0; t < base.num_objects(); ++t) {
            std::set<StrictTriple> images;
            for (const auto& c : strict_triple_candidates(base, r, t))
                images.insert({c.apex, q.mor_map[c.to_r], q.mor_map[c.to_t]});
            std::set<StrictTriple> quots;
            for (const auto& c : strict_triple_candidates(q.quot, r, t)) quots.insert(c);
            if (images != quots) {
                out.witness = "strict triples to (" + base.obj_name(r) + ", " + base.obj_name(t) +
                              ") do not match between base and quotient";
                return out;
            }
        }
    out.ok = true;
    return out;
}

MPFunctor m_p_functor(const FinCat& quot, const std::vector<char>& sub_a,
                      const std::vector<char>& sub_g, int p_obj) {
    MPFunctor mp;
    mp.p_obj = p_obj;
    // Unique marked morphism to P per object.
    mp.unique_a_to_p.assign(quot.num_objects(), -1);
    for (int o = 0; o < quot.num_objects(); ++o) {
        for (int m : quot.hom(o, p_obj))
            if (sub_a[m]) {
                if (mp.unique_a_to_p[o] != -1)
                    throw std::invalid_argument("object " + quot.obj_name(o) +
                                                " has several marked morphisms to " +
                                                quot.obj_name(p_obj));
                mp.unique_a_to_p[o] = m;
            }
        if (mp.unique_a_to_p[o] == -1)
            throw std::invalid_argument("object " + quot.obj_name(o) +
                                        " has no marked morphism to " + quot.obj_name(p_obj));
    }

    // Normalized strict triples per object.
    mp.index_data.resize(quot.num_objects());
    mp.value.resize(quot.num_objects());
    for (int qo = 0; qo < quot.num_objects(); ++qo) {
        auto cands = strict_triple_candidates(quot, qo, p_obj);
        std::vector<char> assigned(cands.size(), 0);
        for (size_t i = 0; i < cands.size(); ++i) {
            if (assigned[i]) continue;
            // Collect the class of cands[i] and pick a normalized member.
            std::vector<StrictTriple> cls;
            for (size_t j = i; j < cands.size(); ++j)
                if (!assigned[j] && triples_equivalent(quot, cands[i], cands[j])) {
                    assigned[j] = 1;
                    cls.push_back(cands[j]);
                }
            StrictTriple pick{-1, -1, -1};
            for (const auto& c : cls) {
                if (c.to_t != mp.unique_a_to_p[c.apex]) continue;
                // Prefer an identity first leg, else the least normalized member.
                bool ident = (c.apex == qo && c.to_r == quot.identity(qo));
                if (pick.apex == -1 || ident ||
                    (!(pick.apex == qo && pick.to_r == quot.identity(qo)) && c < pick))
                    pick = c;
            }
            if (pick.apex == -1)
                throw std::invalid_argument(
                    "no normalized representative (second leg to " + quot.obj_name(p_obj) +
                    ") in a strict-triple class of " + quot.obj_name(qo));
            mp.index_data[qo].push_back(pick);
        }
        std::sort(mp.index_data[qo].begin(), mp.index_data[qo].end());
        // The identity-legged triple must be present.
        StrictTriple ident{qo, quot.identity(qo), mp.unique_a_to_p[qo]};
        bool has_ident = false;
        for (const auto& c : mp.index_data[qo]) has_ident = has_ident || (c == ident);
        if (!has_ident)
            throw std::invalid_argument("identity triple missing from the index set of " +
                                        quot.obj_name(qo));
        for (const auto& t : mp.index_data[qo]) mp.value[qo].terms.push_back(t.apex);
    }

    // Projections.
    mp.proj_r.resize(quot.num_objects());
    mp.proj_p.resize(quot.num_objects());
    for (int qo = 0; qo < quot.num_objects(); ++qo) {
        AcMorphism& pr = mp.proj_r[qo];
        AcMorphism& pp = mp.proj_p[qo];
        pr.dom = pp.dom = mp.value[qo];
        pr.cod.terms = {qo};
        pp.cod.terms = {p_obj};
        for (const auto& t : mp.index_data[qo]) {
            pr.index_map.push_back(0);
            pr.components.push_back(t.to_r);
            pp.index_map.push_back(0);
            pp.components.push_back(t.to_t);
        }
    }

    // Morphism map phi x id_P via the universal property, term by term.
    mp.on_mor.resize(quot.num_morphisms());
    for (int phi = 0; phi < quot.num_morphisms(); ++phi) {
        int r = quot.src(phi), qo = quot.dst(phi);
        AcMorphism m;
        m.dom = mp.value[r];
        m.cod = mp.value[qo];
        for (const auto& tr : mp.index_data[r]) {
            int gamma = quot.compose(phi, tr.to_r);  // apex -> Q
            int delta = tr.to_t;                     // apex -> P
            int found_i = -1, found_e = -1, count = 0;
            for (size_t i = 0; i < mp.index_data[qo].size(); ++i) {
                const auto& tq = mp.index_data[qo][i];
                for (int e : quot.hom(tr.apex, tq.apex))
                    if (quot.compose(tq.to_r, e) == gamma && quot.compose(tq.to_t, e) == delta) {
                        found_i = static_cast<int>(i);
                        found_e = e;
                        ++count;
                    }
            }
            if (count != 1)
                throw std::logic_error("product universal property fails while extending " +
                                       quot.mor_name(phi) + " (" + std::to_string(count) +
                                       " factorizations)");
            m.index_map.push_back(found_i);
            m.components.push_back(found_e);
        }
        mp.on_mor[phi] = m;
    }

    // Functoriality, identities, naturality of the first projection.
    for (int o = 0; o < quot.num_objects(); ++o)
        if (!(mp.on_mor[quot.identity(o)] == ac_identity(quot, mp.value[o])))
            throw std::logic_error("product functor does not preserve the identity of " +
                                   quot.obj_name(o));
    for (int g = 0; g < quot.num_morphisms(); ++g)
        for (int f = 0; f < quot.num_morphisms(); ++f) {
            if (!quot.composable(g, f)) continue;
            if (!(mp.on_mor[quot.compose(g, f)] ==
                  ac_compose(quot, mp.on_mor[g], mp.on_mor[f])))
                throw std::logic_error("product functor not functorial at (" + quot.mor_name(g) +
                                       ", " + quot.mor_name(f) + ")");
        }
    for (int phi = 0; phi < quot.num_morphisms(); ++phi) {
        AcMorphism lhs = ac_compose(quot, mp.proj_r[quot.dst(phi)], mp.on_mor[phi]);
        AcMorphism rhs = ac_compose(quot, ac_single(quot, phi), mp.proj_r[quot.src(phi)]);
        if (!(lhs == rhs))
            throw std::logic_error("first projection not natural at " + quot.mor_name(phi));
    }

    // Marked isomorphisms must have marked isomorphism components.
    for (int phi = 0; phi < quot.num_morphisms(); ++phi) {
        if (!sub_g[phi] || !quot.is_iso(phi)) continue;
        for (int c : mp.on_mor[phi].components)
            if (!sub_g[c] || !quot.is_iso(c))
                throw std::invalid_argument("component " + quot.mor_name(c) + " of " +
                                            quot.mor_name(phi) +
                                            " x id is not a marked isomorphism");
    }

    // Index maps as a covariant set functor.
    mp.index_functor.base = &quot;
    mp.index_functor.fiber_size.resize(quot.num_objects());
    for (int o = 0; o < quot.num_objects(); ++o)
        mp.index_functor.fiber_size[o] = static_cast<int>(mp.index_data[o].size());
    mp.index_functor.on_mor.resize(quot.num_morphisms());
    for (int phi = 0; phi < quot.num_morphisms(); ++phi)
        mp.index_functor.on_mor[phi] = mp.on_mor[phi].index_map;
    {
        auto rep = mp.index_functor.validate();
        if (!rep.empty()) throw std::logic_error("index data is not functorial: " + rep.front());
    }
    return mp;
}

}  // namespace homcat
