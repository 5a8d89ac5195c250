#include "homcat/fincat.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace homcat {

std::vector<int> FinCat::hom(int r, int q) const {
    std::vector<int> out;
    for (int m = 0; m < num_morphisms(); ++m)
        if (src(m) == r && dst(m) == q) out.push_back(m);
    return out;
}

int FinCat::inverse(int m) const {
    int s = src(m), d = dst(m);
    for (int g : hom(d, s))
        if (compose(g, m) == identity(s) && compose(m, g) == identity(d)) return g;
    return -1;
}

bool FinCat::is_iso(int m) const { return inverse(m) != -1; }

std::vector<std::string> validate_category(const FinCat& cat) {
    std::vector<std::string> report;
    const int nm = cat.num_morphisms();
    const int no = cat.num_objects();
    if (static_cast<int>(cat.idmap_.size()) != no) {
        report.push_back("identity map does not cover all objects");
        return report;
    }
    if (cat.comp_.size() != static_cast<size_t>(nm) * nm) {
        report.push_back("composition table has wrong size");
        return report;
    }
    for (int m = 0; m < nm; ++m) {
        if (cat.src(m) < 0 || cat.src(m) >= no || cat.dst(m) < 0 || cat.dst(m) >= no)
            report.push_back("morphism " + cat.mor_name(m) + " has dangling endpoint");
    }
    if (!report.empty()) return report;
    for (int o = 0; o < no; ++o) {
        int e = cat.identity(o);
        if (e < 0 || e >= nm || cat.src(e) != o || cat.dst(e) != o) {
            report.push_back("identity of object " + cat.obj_name(o) + " is not an endomorphism");
        }
    }
    if (!report.empty()) return report;
    // Totality and closure of composition.
    for (int g = 0; g < nm; ++g)
        for (int f = 0; f < nm; ++f) {
            int c = cat.compose(g, f);
            if (cat.composable(g, f)) {
                if (c < 0 || c >= nm)
                    report.push_back("composition undefined for composable pair (" +
                                     cat.mor_name(g) + ", " + cat.mor_name(f) + ")");
                else if (cat.src(c) != cat.src(f) || cat.dst(c) != cat.dst(g))
                    report.push_back("composition not closed at (" + cat.mor_name(g) + ", " +
                                     cat.mor_name(f) + ")");
            } else if (c != -1) {
                report.push_back("composition defined for non-composable pair (" +
                                 cat.mor_name(g) + ", " + cat.mor_name(f) + ")");
            }
        }
    if (!report.empty()) return report;
    // Identity laws.
    for (int m = 0; m < nm; ++m) {
        if (cat.compose(m, cat.identity(cat.src(m))) != m)
            report.push_back("identity law at " + cat.mor_name(m) + " (right)");
        if (cat.compose(cat.identity(cat.dst(m)), m) != m)
            report.push_back("identity law at " + cat.mor_name(m) + " (left)");
    }
    // Associativity.
    for (int h = 0; h < nm; ++h)
        for (int g = 0; g < nm; ++g) {
            if (!cat.composable(h, g)) continue;
            for (int f = 0; f < nm; ++f) {
                if (!cat.composable(g, f)) continue;
                if (cat.compose(cat.compose(h, g), f) != cat.compose(h, cat.compose(g, f)))
                    report.push_back("associativity fails at (" + cat.mor_name(h) + ", " +
                                     cat.mor_name(g) + ", " + cat.mor_name(f) + ")");
            }
        }
    return report;
}

bool is_ordered(const FinCat& cat) {
    for (int q = 0; q < cat.num_objects(); ++q)
        for (int r = 0; r < cat.num_objects(); ++r) {
            auto fwd = cat.hom(r, q);
            if (fwd.empty()) continue;
            if (cat.hom(q, r).empty()) continue;
            for (int m : fwd)
                if (!cat.is_iso(m)) return false;
        }
    return true;
}

std::vector<std::string> validate_subcategory(const FinCat& cat, const std::vector<char>& subset,
                                              bool require_isos) {
    std::vector<std::string> report;
    if (subset.size() != static_cast<size_t>(cat.num_morphisms())) {
        report.push_back("marking size does not match morphism count");
        return report;
    }
    for (int o = 0; o < cat.num_objects(); ++o)
        if (!subset[cat.identity(o)])
            report.push_back("marking misses identity of " + cat.obj_name(o));
    for (int g = 0; g < cat.num_morphisms(); ++g)
        for (int f = 0; f < cat.num_morphisms(); ++f) {
            if (!subset[g] || !subset[f] || !cat.composable(g, f)) continue;
            if (!subset[cat.compose(g, f)])
                report.push_back("marking not closed under composition at (" + cat.mor_name(g) +
                                 ", " + cat.mor_name(f) + ")");
        }
    if (require_isos)
        for (int m = 0; m < cat.num_morphisms(); ++m) {
            if (!subset[m]) continue;
            int inv = cat.inverse(m);
            if (inv == -1)
                report.push_back("marked morphism " + cat.mor_name(m) + " is not invertible");
            else if (!subset[inv])
                report.push_back("inverse of marked morphism " + cat.mor_name(m) +
                                 " is not marked");
        }
    return report;
}

AFactorization check_a_category(const FinCat& cat, const std::vector<char>& sub_A) {
    AFactorization out;
    out.factor.assign(cat.num_morphisms(), {-1, -1});
    // Factor every morphism phi: R -> Q as phi = iota ∘ phi* with phi* an
    // iso out of R and iota a marked morphism.
    for (int phi = 0; phi < cat.num_morphisms(); ++phi) {
        int r = cat.src(phi);
        bool found = false;
        for (int mid = 0; mid < cat.num_objects() && !found; ++mid) {
            for (int star : cat.hom(r, mid)) {
                if (!cat.is_iso(star)) continue;
                for (int iota : cat.hom(mid, cat.dst(phi))) {
                    if (!sub_A[iota]) continue;
                    if (cat.compose(iota, star) == phi) {
                        out.factor[phi] = {star, iota};
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
        }
        if (!found) {
            out.failure = "no iso/A factorization for " + cat.mor_name(phi);
            return out;
        }
    }
    // Rigidity: an iso tau with iota' ∘ tau marked for some marked iota'
    // must itself be a marked iso.
    for (int tau = 0; tau < cat.num_morphisms(); ++tau) {
        if (!cat.is_iso(tau)) continue;
        for (int iota = 0; iota < cat.num_morphisms(); ++iota) {
            if (!sub_A[iota] || !cat.composable(iota, tau)) continue;
            if (sub_A[cat.compose(iota, tau)] && !sub_A[tau]) {
                out.failure = "iso " + cat.mor_name(tau) + " absorbed by " + cat.mor_name(iota) +
                              " but not marked";
                return out;
            }
        }
    }
    out.ok = true;
    return out;
}

std::vector<std::string> validate_subgroups(const FinCat& cat,
                                            const std::vector<std::vector<int>>& groups) {
    std::vector<std::string> report;
    if (groups.size() != static_cast<size_t>(cat.num_objects())) {
        report.push_back("subgroup list does not match object count");
        return report;
    }
    for (int q = 0; q < cat.num_objects(); ++q) {
        std::set<int> g(groups[q].begin(), groups[q].end());
        if (!g.count(cat.identity(q)))
            report.push_back("subgroup at " + cat.obj_name(q) + " misses the identity");
        for (int a : g) {
            if (cat.src(a) != q || cat.dst(a) != q || !cat.is_iso(a)) {
                report.push_back("subgroup member " + cat.mor_name(a) + " at " + cat.obj_name(q) +
                                 " is not an automorphism");
                continue;
            }
            if (!g.count(cat.inverse(a)))
                report.push_back("subgroup at " + cat.obj_name(q) + " not inverse-closed at " +
                                 cat.mor_name(a));
            for (int b : g)
                if (!g.count(cat.compose(a, b)))
                    report.push_back("subgroup at " + cat.obj_name(q) + " not closed at (" +
                                     cat.mor_name(a) + ", " + cat.mor_name(b) + ")");
        }
    }
    return report;
}

bool check_interior(const FinCat& cat, const std::vector<std::vector<int>>& interior) {
    for (int phi = 0; phi < cat.num_morphisms(); ++phi) {
        int r = cat.src(phi), q = cat.dst(phi);
        for (int rho : interior[r]) {
            bool found = false;
            for (int chi : interior[q])
                if (cat.compose(phi, rho) == cat.compose(chi, phi)) {
                    found = true;
                    break;
                }
            if (!found) return false;
        }
    }
    return true;
}

bool check_cointerior(const FinCat& cat, const std::vector<std::vector<int>>& cointerior) {
    for (int phi = 0; phi < cat.num_morphisms(); ++phi) {
        int r = cat.src(phi), q = cat.dst(phi);
        for (int chi : cointerior[q]) {
            bool found = false;
            for (int rho : cointerior[r])
                if (cat.compose(chi, phi) == cat.compose(phi, rho)) {
                    found = true;
                    break;
                }
            if (!found) return false;
        }
    }
    return true;
}

QuotientResult bi_exterior_quotient(const FinCat& cat,
                                    const std::vector<std::vector<int>>& interior,
                                    const std::vector<std::vector<int>>& cointerior) {
    {
        auto rep1 = validate_subgroups(cat, interior);
        auto rep2 = validate_subgroups(cat, cointerior);
        if (!rep1.empty() || !rep2.empty())
            throw std::invalid_argument("bi_exterior_quotient: structures are not subgroups: " +
                                        (rep1.empty() ? rep2.front() : rep1.front()));
    }
    if (!check_interior(cat, interior))
        throw std::invalid_argument("bi_exterior_quotient: interior transport condition fails");
    if (!check_cointerior(cat, cointerior))
        throw std::invalid_argument("bi_exterior_quotient: co-interior transport condition fails");
    for (int q = 0; q < cat.num_objects(); ++q)
        for (int a : interior[q])
            for (int b : cointerior[q])
                if (cat.compose(a, b) != cat.compose(b, a))
                    throw std::invalid_argument(
                        "bi_exterior_quotient: non-centralizing pair at " + cat.obj_name(q) +
                        ": " + cat.mor_name(a) + " vs " + cat.mor_name(b));

    const int nm = cat.num_morphisms();
    // Double coset of phi: R -> Q is I(Q) ∘ phi ∘ I°(R).
    std::vector<int> rep(nm);
    for (int phi = 0; phi < nm; ++phi) {
        int best = phi;
        for (int chi : interior[cat.dst(phi)])
            for (int rho : cointerior[cat.src(phi)])
                best = std::min(best, cat.compose(chi, cat.compose(phi, rho)));
        rep[phi] = best;
    }
    // Representative of a representative must be itself.
    for (int phi = 0; phi < nm; ++phi)
        if (rep[rep[phi]] != rep[phi])
            throw std::logic_error("double coset representatives are inconsistent");

    QuotientResult out;
    out.mor_map.assign(nm, -1);
    std::vector<int> reps;
    for (int phi = 0; phi < nm; ++phi)
        if (rep[phi] == phi) {
            out.mor_map[phi] = static_cast<int>(reps.size());
            reps.push_back(phi);
        }
    for (int phi = 0; phi < nm; ++phi) out.mor_map[phi] = out.mor_map[rep[phi]];
    out.section = reps;

    FinCat& q = out.quot;
    q.object_names = cat.object_names;
    for (int m : reps)
        q.morphisms.push_back({"[" + cat.mor_name(m) + "]", cat.src(m), cat.dst(m)});
    int qn = static_cast<int>(reps.size());
    q.comp_.assign(static_cast<size_t>(qn) * qn, -1);
    for (int g = 0; g < qn; ++g)
        for (int f = 0; f < qn; ++f)
            if (q.composable(g, f))
                q.comp_[static_cast<size_t>(g) * qn + f] = out.mor_map[cat.compose(reps[g], reps[f])];
    q.idmap_.resize(cat.num_objects());
    for (int o = 0; o < cat.num_objects(); ++o) q.idmap_[o] = out.mor_map[cat.identity(o)];

    // Well-definedness of the induced composition: assert, don't trust.
    for (int g = 0; g < nm; ++g)
        for (int f = 0; f < nm; ++f) {
            if (!cat.composable(g, f)) continue;
            int expect = q.compose(out.mor_map[g], out.mor_map[f]);
            if (out.mor_map[cat.compose(g, f)] != expect)
                throw std::logic_error("quotient composition not well-defined at (" +
                                       cat.mor_name(g) + ", " + cat.mor_name(f) + ")");
        }
    auto rep_check = validate_category(q);
    if (!rep_check.empty())
        throw std::logic_error("bi-exterior quotient is not a category: " + rep_check.front());
    return out;
}

std::vector<char> quotient_marking(const QuotientResult& q, const std::vector<char>& marks) {
    std::vector<char> out(q.quot.num_morphisms(), 0);
    for (size_t m = 0; m < marks.size(); ++m)
        if (marks[m]) out[q.mor_map[m]] = 1;
    return out;
}

std::optional<int> has_final_object(const FinCat& cat) {
    for (int p = 0; p < cat.num_objects(); ++p) {
        bool final_obj = true;
        for (int q = 0; q < cat.num_objects() && final_obj; ++q)
            if (cat.hom(q, p).size() != 1) final_obj = false;
        if (final_obj) return p;
    }
    return std::nullopt;
}

std::optional<int> final_object_in(const FinCat& cat, const std::vector<char>& marks) {
    for (int p = 0; p < cat.num_objects(); ++p) {
        bool final_obj = true;
        for (int q = 0; q < cat.num_objects() && final_obj; ++q) {
            int count = 0;
            for (int m : cat.hom(q, p))
                if (marks[m]) ++count;
            if (count != 1) final_obj = false;
        }
        if (final_obj) return p;
    }
    return std::nullopt;
}

std::vector<std::string> SetFunctor::validate() const {
    std::vector<std::string> report;
    const FinCat& cat = *base;
    if (fiber_size.size() != static_cast<size_t>(cat.num_objects()) ||
        on_mor.size() != static_cast<size_t>(cat.num_morphisms())) {
        report.push_back("set functor data does not match the category");
        return report;
    }
    for (int m = 0; m < cat.num_morphisms(); ++m) {
        if (static_cast<int>(on_mor[m].size()) != fiber_size[cat.src(m)]) {
            report.push_back("fiber map of " + cat.mor_name(m) + " has wrong source size");
            continue;
        }
        for (int t : on_mor[m])
            if (t < 0 || t >= fiber_size[cat.dst(m)])
                report.push_back("fiber map of " + cat.mor_name(m) + " leaves the target fiber");
    }
    if (!report.empty()) return report;
    for (int o = 0; o < cat.num_objects(); ++o) {
        const auto& idm = on_mor[cat.identity(o)];
        for (int t = 0; t < fiber_size[o]; ++t)
            if (idm[t] != t) {
                report.push_back("identity of " + cat.obj_name(o) + " does not act as identity");
                break;
            }
    }
    for (int g = 0; g < cat.num_morphisms(); ++g)
        for (int f = 0; f < cat.num_morphisms(); ++f) {
            if (!cat.composable(g, f)) continue;
            const auto& gf = on_mor[cat.compose(g, f)];
            for (int t = 0; t < fiber_size[cat.src(f)]; ++t)
                if (gf[t] != on_mor[g][on_mor[f][t]]) {
                    report.push_back("set functor not functorial at (" + cat.mor_name(g) + ", " +
                                     cat.mor_name(f) + ")");
                    break;
                }
        }
    return report;
}

SemidirectProduct semidirect_product(const SetFunctor& s, const FinCat& cat) {
    {
        auto rep = s.validate();
        if (!rep.empty())
            throw std::invalid_argument("semidirect_product: " + rep.front());
    }
    SemidirectProduct out;
    out.obj_index.assign(cat.num_objects(), {});
    for (int q = 0; q < cat.num_objects(); ++q) {
        out.obj_index[q].assign(s.fiber_size[q], -1);
        for (int t = 0; t < s.fiber_size[q]; ++t) {
            out.obj_index[q][t] = static_cast<int>(out.obj_pair.size());
            out.obj_pair.push_back({t, q});
            out.cat.object_names.push_back("(" + std::to_string(t) + "," + cat.obj_name(q) + ")");
            out.p_obj.push_back(q);
        }
    }
    // Morphism (t, phi): (t, src(phi)) -> (s_phi(t), dst(phi)).
    for (int phi = 0; phi < cat.num_morphisms(); ++phi)
        for (int t = 0; t < s.fiber_size[cat.src(phi)]; ++t) {
            out.mor_pair.push_back({t, phi});
            int a = out.obj_index[cat.src(phi)][t];
            int b = out.obj_index[cat.dst(phi)][s.on_mor[phi][t]];
            out.cat.morphisms.push_back(
                {"(" + std::to_string(t) + "," + cat.mor_name(phi) + ")", a, b});
            out.p_mor.push_back(phi);
        }
    const int nm = out.cat.num_morphisms();
    // Index of the pair (t, phi) among s⋊B morphisms.
    std::map<std::pair<int, int>, int> pair_index;
    for (int m = 0; m < nm; ++m) pair_index[out.mor_pair[m]] = m;
    out.cat.comp_.assign(static_cast<size_t>(nm) * nm, -1);
    for (int g = 0; g < nm; ++g)
        for (int f = 0; f < nm; ++f) {
            if (!out.cat.composable(g, f)) continue;
            auto [t, phi] = out.mor_pair[f];
            auto [u, psi] = out.mor_pair[g];
            out.cat.comp_[static_cast<size_t>(g) * nm + f] =
                pair_index.at({t, cat.compose(psi, phi)});
        }
    out.cat.idmap_.resize(out.cat.num_objects());
    for (int o = 0; o < out.cat.num_objects(); ++o) {
        auto [t, q] = out.obj_pair[o];
        out.cat.idmap_[o] = pair_index.at({t, cat.identity(q)});
    }
    auto rep = validate_category(out.cat);
    if (!rep.empty()) throw std::logic_error("semidirect product is not a category: " + rep.front());
    return out;
}

}  // namespace homcat
