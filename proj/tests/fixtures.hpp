#pragma once

// Programmatic fixture categories shared across test binaries.

#include "homcat/fincat.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace homcat::fixtures {

struct CatBuilder {
    FinCat cat;
    std::map<std::string, int> obj_ids;
    std::map<std::string, int> mor_ids;
    std::map<std::pair<int, int>, int> comp;

    int obj(const std::string& name) {
        auto it = obj_ids.find(name);
        if (it != obj_ids.end()) return it->second;
        int id = static_cast<int>(cat.object_names.size());
        cat.object_names.push_back(name);
        obj_ids[name] = id;
        return id;
    }
    int mor(const std::string& name, const std::string& s, const std::string& d) {
        auto it = mor_ids.find(name);
        if (it != mor_ids.end()) return it->second;
        int id = static_cast<int>(cat.morphisms.size());
        cat.morphisms.push_back({name, obj(s), obj(d)});
        mor_ids[name] = id;
        return id;
    }
    void set_comp(const std::string& g, const std::string& f, const std::string& r) {
        comp[{mor_ids.at(g), mor_ids.at(f)}] = mor_ids.at(r);
    }
    void set_identity(const std::string& o, const std::string& m) {
        cat.idmap_.resize(cat.object_names.size(), -1);
        cat.idmap_[obj_ids.at(o)] = mor_ids.at(m);
    }
    /// Finalize: fill the composition table, defaulting identity
    /// compositions that were not listed explicitly.
    FinCat build() {
        int nm = cat.num_morphisms();
        cat.comp_.assign(static_cast<size_t>(nm) * nm, -1);
        cat.idmap_.resize(cat.object_names.size(), -1);
        for (auto& [pair, r] : comp) cat.comp_[static_cast<size_t>(pair.first) * nm + pair.second] = r;
        for (int m = 0; m < nm; ++m) {
            int es = cat.idmap_[cat.src(m)];
            int ed = cat.idmap_[cat.dst(m)];
            if (es >= 0 && cat.comp_[static_cast<size_t>(m) * nm + es] == -1)
                cat.comp_[static_cast<size_t>(m) * nm + es] = m;
            if (ed >= 0 && cat.comp_[static_cast<size_t>(ed) * nm + m] == -1)
                cat.comp_[static_cast<size_t>(ed) * nm + m] = m;
        }
        return cat;
    }
};

/// Two objects X, Y; one non-identity arrow X -> Y.
inline FinCat poset2() {
    CatBuilder b;
    b.mor("idX", "X", "X");
    b.mor("idY", "Y", "Y");
    b.mor("f", "X", "Y");
    b.set_identity("X", "idX");
    b.set_identity("Y", "idY");
    return b.build();
}

/// One object, automorphism group from a multiplication table.
/// table[i][j] = i*j, element 0 must be the unit.
inline FinCat group_category(const std::vector<std::vector<int>>& table,
                             const std::vector<std::string>& names) {
    CatBuilder b;
    int n = static_cast<int>(table.size());
    for (int i = 0; i < n; ++i) b.mor(names[i], "Q", "Q");
    b.set_identity("Q", names[0]);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b.set_comp(names[i], names[j], names[table[i][j]]);
    return b.build();
}

/// The cyclic group of order 2 as a one-object category.
inline FinCat grp_c2() { return group_category({{0, 1}, {1, 0}}, {"e", "s"}); }

/// The cyclic group of order 3 as a one-object category.
inline FinCat grp_c3() {
    return group_category({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, {"e", "r", "r2"});
}

/// Three-object chain X -> Y -> Z with the composite.
inline FinCat chain3() {
    CatBuilder b;
    b.mor("idX", "X", "X");
    b.mor("idY", "Y", "Y");
    b.mor("idZ", "Z", "Z");
    b.mor("f", "X", "Y");
    b.mor("g", "Y", "Z");
    b.mor("gf", "X", "Z");
    b.set_identity("X", "idX");
    b.set_identity("Y", "idY");
    b.set_identity("Z", "idZ");
    b.set_comp("g", "f", "gf");
    return b.build();
}

/// One object with a non-invertible idempotent endomorphism.
inline FinCat idempotent_cat() {
    CatBuilder b;
    b.mor("e", "Q", "Q");
    b.mor("p", "Q", "Q");
    b.set_identity("Q", "e");
    b.set_comp("p", "p", "p");
    return b.build();
}

/// One object, Klein four-group C2 x C2, elements e, a, b, ab.
inline FinCat grp_klein() {
    return group_category(
        {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}, {"e", "a", "b", "ab"});
}

inline std::vector<char> all_marks(const FinCat& cat) {
    return std::vector<char>(cat.num_morphisms(), 1);
}
inline std::vector<char> identity_marks(const FinCat& cat) {
    std::vector<char> m(cat.num_morphisms(), 0);
    for (int o = 0; o < cat.num_objects(); ++o) m[cat.identity(o)] = 1;
    return m;
}
inline std::vector<std::vector<int>> trivial_groups(const FinCat& cat) {
    std::vector<std::vector<int>> g(cat.num_objects());
    for (int o = 0; o < cat.num_objects(); ++o) g[o] = {cat.identity(o)};
    return g;
}
/// Full automorphism group at every object.
inline std::vector<std::vector<int>> full_auto_groups(const FinCat& cat) {
    std::vector<std::vector<int>> g(cat.num_objects());
    for (int m = 0; m < cat.num_morphisms(); ++m)
        if (cat.src(m) == cat.dst(m) && cat.is_iso(m)) g[cat.src(m)].push_back(m);
    return g;
}

}  // namespace homcat::fixtures
