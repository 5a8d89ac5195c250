#include "homcat/cochain.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace homcat {

namespace {

void set_block(Matrix& m, int r0, int c0, const Matrix& sub) {
    for (int r = 0; r < sub.rows(); ++r)
        for (int c = 0; c < sub.cols(); ++c) m(r0 + r, c0 + c) = sub(r, c);
}

void add_block(Matrix& m, int r0, int c0, const Matrix& sub, int sign) {
    for (int r = 0; r < sub.rows(); ++r)
        for (int c = 0; c < sub.cols(); ++c) m(r0 + r, c0 + c) += sign > 0 ? sub(r, c) : -sub(r, c);
}

}  // namespace

std::string Chain::to_string(const FinCat& cat) const {
    std::string out = cat.obj_name(objs[0]);
    for (size_t i = 0; i < arrows.size(); ++i)
        out += " -" + cat.mor_name(arrows[i]) + "-> " + cat.obj_name(objs[i + 1]);
    return out;
}

std::vector<Chain> enumerate_chains(const FinCat& cat, int n) {
    std::vector<Chain> out;
    if (n == 0) {
        for (int q = 0; q < cat.num_objects(); ++q) out.push_back({{q}, {}});
        return out;
    }
    // Extend arrow sequences one slot at a time.
    std::vector<Chain> partial;
    for (int m = 0; m < cat.num_morphisms(); ++m)
        partial.push_back({{cat.src(m), cat.dst(m)}, {m}});
    for (int step = 1; step < n; ++step) {
        std::vector<Chain> next;
        for (const Chain& c : partial)
            for (int m = 0; m < cat.num_morphisms(); ++m) {
                if (cat.src(m) != c.objs.back()) continue;
                Chain e = c;
                e.objs.push_back(cat.dst(m));
                e.arrows.push_back(m);
                next.push_back(std::move(e));
            }
        partial = std::move(next);
    }
    std::sort(partial.begin(), partial.end());
    return partial;
}

Chain face(const FinCat& cat, const Chain& c, int i) {
    int n = c.degree();
    if (i < 0 || i > n) throw std::out_of_range("face index");
    if (n == 0) throw std::out_of_range("degree-0 chain has no faces");
    Chain out;
    if (i == 0) {
        out.objs.assign(c.objs.begin() + 1, c.objs.end());
        out.arrows.assign(c.arrows.begin() + 1, c.arrows.end());
    } else if (i == n) {
        out.objs.assign(c.objs.begin(), c.objs.end() - 1);
        out.arrows.assign(c.arrows.begin(), c.arrows.end() - 1);
    } else {
        out.objs = c.objs;
        out.objs.erase(out.objs.begin() + i);
        out.arrows = c.arrows;
        out.arrows[i - 1] = cat.compose(c.arrows[i], c.arrows[i - 1]);
        out.arrows.erase(out.arrows.begin() + i);
    }
    return out;
}

CochainLevel cochain_level(const FinCat& cat, const ContraFun& f, int n) {
    CochainLevel lvl;
    lvl.chains = enumerate_chains(cat, n);
    lvl.module = Module::zero(f.ring);
    int pos = 0;
    for (const Chain& c : lvl.chains) {
        lvl.offsets.push_back(pos);
        lvl.module = Module::direct_sum(lvl.module, f.on_obj[c.objs[0]]);
        pos += f.on_obj[c.objs[0]].gens();
    }
    lvl.offsets.push_back(pos);
    return lvl;
}

Hom cochain_differential(const FinCat& cat, const ContraFun& f, const CochainLevel& lvl_n,
                         const CochainLevel& lvl_np1) {
    std::map<Chain, int> index;
    for (size_t i = 0; i < lvl_n.chains.size(); ++i) index[lvl_n.chains[i]] = static_cast<int>(i);
    Matrix mat(lvl_np1.module.gens(), lvl_n.module.gens());
    for (size_t ri = 0; ri < lvl_np1.chains.size(); ++ri) {
        const Chain& r = lvl_np1.chains[ri];
        int row0 = lvl_np1.offsets[ri];
        // Leading face, twisted by the functor along r(0,1).
        {
            Chain f0 = face(cat, r, 0);
            int ci = index.at(f0);
            add_block(mat, row0, lvl_n.offsets[ci], f.on_mor[r.arrows[0]].mat, +1);
        }
        for (int i = 1; i <= r.degree(); ++i) {
            Chain fi = face(cat, r, i);
            int ci = index.at(fi);
            int gens = f.on_obj[fi.objs[0]].gens();
            add_block(mat, row0, lvl_n.offsets[ci], Matrix::identity(gens), (i % 2) ? -1 : +1);
        }
    }
    return Hom{lvl_n.module, lvl_np1.module, mat};
}

StableDecomposition g_stable_decomposition(const FinCat& cat, const std::vector<char>& g_marks,
                                           int n) {
    StableDecomposition dec;
    dec.chains = enumerate_chains(cat, n);
    const int nc = static_cast<int>(dec.chains.size());
    dec.rep_of.assign(nc, -1);
    dec.chi0_to_rep.assign(nc, -1);
    std::map<Chain, int> index;
    for (int i = 0; i < nc; ++i) index[dec.chains[i]] = i;

    // Marked isomorphisms out of each object.
    std::vector<std::vector<int>> g_isos(cat.num_objects());
    for (int m = 0; m < cat.num_morphisms(); ++m)
        if (g_marks[m] && cat.is_iso(m)) g_isos[cat.src(m)].push_back(m);

    for (int ci = 0; ci < nc; ++ci) {
        if (dec.rep_of[ci] != -1) continue;
        const Chain& rep = dec.chains[ci];
        dec.rep_of[ci] = ci;
        dec.chi0_to_rep[ci] = cat.identity(rep.objs[0]);
        dec.reps.push_back(ci);
        std::set<int> autos;

        // Enumerate all component tuples (chi_0, ..., chi_n); each
        // determines the target chain chi . rep . chi^{-1}.
        std::vector<int> tuple(n + 1);
        auto visit_tuple = [&]() {
            Chain target;
            target.objs.resize(n + 1);
            target.arrows.resize(n);
            for (int i = 0; i <= n; ++i) target.objs[i] = cat.dst(tuple[i]);
            for (int i = 0; i < n; ++i) {
                int inv = cat.inverse(tuple[i]);
                target.arrows[i] = cat.compose(cat.compose(tuple[i + 1], rep.arrows[i]), inv);
            }
            int ti = index.at(target);
            if (ti == ci) {
                autos.insert(tuple[0]);
            } else if (dec.rep_of[ti] == -1) {
                dec.rep_of[ti] = ci;
                dec.chi0_to_rep[ti] = cat.inverse(tuple[0]);
            } else if (dec.rep_of[ti] != ci) {
                throw std::logic_error("inconsistent chain orbits (marking not a subgroupoid?)");
            }
        };
        std::vector<size_t> pick(n + 1, 0);
        // Odometer over the per-position iso lists.
        while (true) {
            bool ok = true;
            for (int i = 0; i <= n && ok; ++i) {
                if (g_isos[rep.objs[i]].empty()) ok = false;
                else tuple[i] = g_isos[rep.objs[i]][pick[i]];
            }
            if (!ok) break;  // some position has no marked isos at all (cannot happen: identity)
            visit_tuple();
            int pos = n;
            while (pos >= 0) {
                if (++pick[pos] < g_isos[rep.objs[pos]].size()) break;
                pick[pos] = 0;
                --pos;
            }
            if (pos < 0) break;
        }
        dec.auto_chi0.push_back(std::vector<int>(autos.begin(), autos.end()));
    }
    return dec;
}

StableLevel stable_cochain_level(const FinCat& cat, const std::vector<char>& g_marks,
                                 const ContraFun& f, int n) {
    StableLevel lvl;
    lvl.full = cochain_level(cat, f, n);
    lvl.dec = g_stable_decomposition(cat, g_marks, n);
    lvl.module = Module::zero(f.ring);

    // Fixed submodule per representative.
    std::vector<SubQuotient> fixed;
    int pos = 0;
    for (size_t r = 0; r < lvl.dec.reps.size(); ++r) {
        const Chain& rep = lvl.dec.chains[lvl.dec.reps[r]];
        const Module& value = f.on_obj[rep.objs[0]];
        std::vector<Hom> gens;
        for (int chi0 : lvl.dec.auto_chi0[r])
            if (chi0 != cat.identity(rep.objs[0])) gens.push_back(f.on_mor[chi0]);
        fixed.push_back(fixed_submodule(value, gens));
        lvl.rep_offsets.push_back(pos);
        pos += fixed.back().module.gens();
        lvl.module = Module::direct_sum(lvl.module, fixed.back().module);
    }
    lvl.rep_offsets.push_back(pos);

    // Embedding: block at chain q in orbit of rep is F(chi_0) ∘ incl_rep.
    Matrix emb(lvl.full.module.gens(), lvl.module.gens());
    std::map<int, int> rep_slot;  // chain index of rep -> position among reps
    for (size_t r = 0; r < lvl.dec.reps.size(); ++r) rep_slot[lvl.dec.reps[r]] = static_cast<int>(r);
    for (size_t c = 0; c < lvl.dec.chains.size(); ++c) {
        int r = rep_slot.at(lvl.dec.rep_of[c]);
        Matrix block = f.on_mor[lvl.dec.chi0_to_rep[c]].mat * fixed[r].map.mat;
        set_block(emb, lvl.full.offsets[c], lvl.rep_offsets[r], block);
    }
    lvl.embedding = Hom{lvl.module, lvl.full.module, std::move(emb)};
    return lvl;
}

namespace {

/// Chain indices per orbit representative slot.
std::vector<std::vector<int>> orbit_members(const StableDecomposition& dec) {
    std::map<int, int> slot;
    for (size_t r = 0; r < dec.reps.size(); ++r) slot[dec.reps[r]] = static_cast<int>(r);
    std::vector<std::vector<int>> mem(dec.reps.size());
    for (size_t c = 0; c < dec.chains.size(); ++c)
        mem[slot.at(dec.rep_of[c])].push_back(static_cast<int>(c));
    return mem;
}

Module row_slice(const Module& m, int lo, int hi) {
    return Module{m.ring, std::vector<Int>(m.orders.begin() + lo, m.orders.begin() + hi)};
}

}  // namespace

Matrix stable_expand(const StableLevel& lvl, const Matrix& coords) {
    Matrix full(lvl.full.module.gens(), 1);
    std::vector<std::vector<int>> members = orbit_members(lvl.dec);
    for (size_t s = 0; s < lvl.dec.reps.size(); ++s) {
        int c0 = lvl.rep_offsets[s], c1 = lvl.rep_offsets[s + 1];
        bool zero = true;
        for (int k = c0; k < c1 && zero; ++k) zero = coords(k, 0) == 0;
        if (zero) continue;
        for (int c : members[s]) {
            int lo = lvl.full.offsets[c], hi = lvl.full.offsets[c + 1];
            for (int i = lo; i < hi; ++i) {
                Int acc = 0;
                for (int k = c0; k < c1; ++k) acc += lvl.embedding.mat(i, k) * coords(k, 0);
                full(i, 0) = acc;
            }
        }
    }
    return full;
}

std::optional<Matrix> stable_preimage(const StableLevel& lvl, const Matrix& full_vec) {
    Matrix out(lvl.module.gens(), 1);
    std::vector<std::vector<int>> members = orbit_members(lvl.dec);
    for (size_t s = 0; s < lvl.dec.reps.size(); ++s) {
        int rep = lvl.dec.reps[s];
        int c0 = lvl.rep_offsets[s], c1 = lvl.rep_offsets[s + 1];
        bool untouched = true;
        for (int c : members[s])
            for (int i = lvl.full.offsets[c]; i < lvl.full.offsets[c + 1] && untouched; ++i)
                untouched = full_vec(i, 0) == 0;
        if (untouched) continue;  // zero coordinates solve this block
        int lo = lvl.full.offsets[rep], hi = lvl.full.offsets[rep + 1];
        Matrix incl(hi - lo, c1 - c0);
        Matrix vrep(hi - lo, 1);
        for (int i = lo; i < hi; ++i) {
            for (int k = c0; k < c1; ++k) incl(i - lo, k - c0) = lvl.embedding.mat(i, k);
            vrep(i - lo, 0) = full_vec(i, 0);
        }
        Hom h{row_slice(lvl.module, c0, c1), row_slice(lvl.full.module, lo, hi), incl};
        auto x = preimage(h, vrep);
        if (!x) return std::nullopt;
        for (int c : members[s]) {
            if (c == rep) continue;
            int mlo = lvl.full.offsets[c], mhi = lvl.full.offsets[c + 1];
            Matrix resid(mhi - mlo, 1);
            for (int i = mlo; i < mhi; ++i) {
                Int acc = -full_vec(i, 0);
                for (int k = c0; k < c1; ++k) acc += lvl.embedding.mat(i, k) * (*x)(k - c0, 0);
                resid(i - mlo, 0) = acc;
            }
            if (!element_is_zero(row_slice(lvl.full.module, mlo, mhi), resid))
                return std::nullopt;
        }
        for (int k = c0; k < c1; ++k) out(k, 0) = (*x)(k - c0, 0);
    }
    return out;
}

Hom stable_differential(const FinCat& cat, const ContraFun& f, const StableLevel& from,
                        const StableLevel& to) {
    // Sparse description of the full differential: per degree-n chain, the
    // row offsets it feeds in the (n+1)-level, with the twisting morphism
    // for the leading face (mor >= 0) or a bare sign for the others.
    struct Feed {
        int row0;
        int sign;
        int mor;
    };
    std::map<Chain, int> index;
    for (size_t i = 0; i < from.full.chains.size(); ++i)
        index[from.full.chains[i]] = static_cast<int>(i);
    std::vector<std::vector<Feed>> feeds(from.full.chains.size());
    for (size_t ri = 0; ri < to.full.chains.size(); ++ri) {
        const Chain& r = to.full.chains[ri];
        int row0 = to.full.offsets[ri];
        feeds[index.at(face(cat, r, 0))].push_back({row0, +1, r.arrows[0]});
        for (int i = 1; i <= r.degree(); ++i)
            feeds[index.at(face(cat, r, i))].push_back({row0, (i % 2) ? -1 : +1, -1});
    }
    std::vector<std::vector<int>> members = orbit_members(from.dec);

    Matrix mat(to.module.gens(), from.module.gens());
    for (size_t s = 0; s < from.dec.reps.size(); ++s) {
        for (int j = from.rep_offsets[s]; j < from.rep_offsets[s + 1]; ++j) {
            Matrix v(to.full.module.gens(), 1);
            for (int c : members[s]) {
                int lo = from.full.offsets[c], hi = from.full.offsets[c + 1];
                Matrix seg(hi - lo, 1);
                bool zero = true;
                for (int i = lo; i < hi; ++i) {
                    seg(i - lo, 0) = from.embedding.mat(i, j);
                    if (seg(i - lo, 0) != 0) zero = false;
                }
                if (zero) continue;
                for (const Feed& fd : feeds[c]) {
                    if (fd.mor >= 0) {
                        const Matrix& blk = f.on_mor[fd.mor].mat;
                        for (int r2 = 0; r2 < blk.rows(); ++r2) {
                            Int acc = 0;
                            for (int k = 0; k < blk.cols(); ++k) acc += blk(r2, k) * seg(k, 0);
                            v(fd.row0 + r2, 0) += fd.sign > 0 ? acc : -acc;
                        }
                    } else {
                        for (int i = 0; i < hi - lo; ++i)
                            v(fd.row0 + i, 0) += fd.sign > 0 ? seg(i, 0) : -seg(i, 0);
                    }
                }
            }
            auto x = stable_preimage(to, v);
            if (!x)
                throw std::runtime_error(
                    "differential leaves the stable submodule; witness: stable generator " +
                    std::to_string(j) + " in degree " +
                    std::to_string(from.full.chains.empty() ? 0
                                                            : from.full.chains[0].degree()));
            set_block(mat, 0, j, *x);
        }
    }
    return Hom{from.module, to.module, mat};
}

Module stable_cohomology(const FinCat& cat, const std::vector<char>& g_marks, const ContraFun& f,
                         int n) {
    StableLevel mid = stable_cochain_level(cat, g_marks, f, n);
    StableLevel above = stable_cochain_level(cat, g_marks, f, n + 1);
    Hom d_next = stable_differential(cat, f, mid, above);
    Hom d_prev;
    if (n == 0) {
        d_prev = Hom::zero(Module::zero(f.ring), mid.module);
    } else {
        StableLevel below = stable_cochain_level(cat, g_marks, f, n - 1);
        d_prev = stable_differential(cat, f, below, mid);
    }
    return complex_cohomology(d_prev, d_next);
}

ContraFun pullback_functor(const FinCat& base, const QuotientResult& q, const ContraFun& f_tilde) {
    ContraFun f;
    f.base = &base;
    f.ring = f_tilde.ring;
    f.on_obj = f_tilde.on_obj;  // objects are shared between base and quotient
    for (int m = 0; m < base.num_morphisms(); ++m) f.on_mor.push_back(f_tilde.on_mor[q.mor_map[m]]);
    return f;
}

QuotientIdentification identify_quotient_cochains(const FinCat& base, const QuotientResult& q,
                                                  const std::vector<char>& g_base,
                                                  const ContraFun& f_tilde, int n) {
    QuotientIdentification out;
    ContraFun f_base = pullback_functor(base, q, f_tilde);
    std::vector<char> g_quot = quotient_marking(q, g_base);
    out.base_level = stable_cochain_level(base, g_base, f_base, n);
    out.quot_level = stable_cochain_level(*&q.quot, g_quot, f_tilde, n);

    // Index quotient chains.
    std::map<Chain, int> quot_index;
    for (size_t i = 0; i < out.quot_level.full.chains.size(); ++i)
        quot_index[out.quot_level.full.chains[i]] = static_cast<int>(i);

    auto project_chain = [&](const Chain& c) {
        Chain t = c;
        for (int& a : t.arrows) a = q.mor_map[a];
        return t;
    };
    auto lift_chain_via_section = [&](const Chain& c) {
        Chain t = c;
        for (int& a : t.arrows) a = q.section[a];
        return t;
    };
    std::map<Chain, int> base_index;
    for (size_t i = 0; i < out.base_level.full.chains.size(); ++i)
        base_index[out.base_level.full.chains[i]] = static_cast<int>(i);

    // Quotient stable generator -> base stable coordinates: read the base
    // value at every base chain from the quotient value at its image chain.
    Matrix to_base(out.base_level.module.gens(), out.quot_level.module.gens());
    for (int j = 0; j < out.quot_level.module.gens(); ++j) {
        Matrix qfull = out.quot_level.embedding.mat.column(j);
        Matrix bfull(out.base_level.full.module.gens(), 1);
        for (size_t c = 0; c < out.base_level.full.chains.size(); ++c) {
            int qi = quot_index.at(project_chain(out.base_level.full.chains[c]));
            int src = out.quot_level.full.offsets[qi];
            int dst = out.base_level.full.offsets[c];
            int gens = f_base.on_obj[out.base_level.full.chains[c].objs[0]].gens();
            for (int g = 0; g < gens; ++g) bfull(dst + g, 0) = qfull(src + g, 0);
        }
        auto x = preimage(out.base_level.embedding, bfull);
        if (!x) throw std::runtime_error("quotient cochain does not pull back to a stable cochain");
        set_block(to_base, 0, j, *x);
    }
    out.to_base = Hom{out.quot_level.module, out.base_level.module, to_base};

    // Base stable generator -> quotient stable coordinates via a section lift.
    Matrix to_quot(out.quot_level.module.gens(), out.base_level.module.gens());
    for (int j = 0; j < out.base_level.module.gens(); ++j) {
        Matrix bfull = out.base_level.embedding.mat.column(j);
        Matrix qfull(out.quot_level.full.module.gens(), 1);
        for (size_t c = 0; c < out.quot_level.full.chains.size(); ++c) {
            int bi = base_index.at(lift_chain_via_section(out.quot_level.full.chains[c]));
            int src = out.base_level.full.offsets[bi];
            int dst = out.quot_level.full.offsets[c];
            int gens = f_tilde.on_obj[out.quot_level.full.chains[c].objs[0]].gens();
            for (int g = 0; g < gens; ++g) qfull(dst + g, 0) = bfull(src + g, 0);
        }
        auto x = preimage(out.quot_level.embedding, qfull);
        if (!x) throw std::runtime_error("base stable cochain does not descend to the quotient");
        set_block(to_quot, 0, j, *x);
    }
    out.to_quot = Hom{out.base_level.module, out.quot_level.module, to_quot};

    if (!hom_is_identity(out.to_quot.compose_after(out.to_base)) ||
        !hom_is_identity(out.to_base.compose_after(out.to_quot)))
        throw std::logic_error("quotient cochain identification is not invertible");
    return out;
}

}  // namespace homcat
