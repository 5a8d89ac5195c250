#include "homcat/io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace homcat {

namespace {

constexpr int kMorphismCap = 10000;

struct Line {
    int number = 0;
    std::vector<std::string> tokens;
};

[[noreturn]] void fail(const std::string& path, int line, const std::string& msg) {
    throw std::runtime_error(path + ":" + std::to_string(line) + ": " + msg);
}

/// Tokenized non-empty lines, with `#` comments stripped.
std::vector<Line> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open file");
    std::vector<Line> out;
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.resize(hash);
        std::istringstream ss(raw);
        Line line;
        line.number = number;
        std::string tok;
        while (ss >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) out.push_back(line);
    }
    return out;
}

int parse_int(const std::string& path, int line, const std::string& tok) {
    try {
        size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        fail(path, line, "expected an integer, got '" + tok + "'");
    }
}

/// Single all-uppercase words of length >= 2 are reserved for section
/// headers, so an unknown one is a format error rather than a name.
bool reserved_word(const std::string& tok) {
    if (tok.size() < 2) return false;
    for (char c : tok)
        if (c < 'A' || c > 'Z') return false;
    return true;
}

int lookup(const std::string& path, int line, const std::map<std::string, int>& names,
           const std::string& tok, const std::string& kind) {
    auto it = names.find(tok);
    if (it == names.end()) fail(path, line, "unknown " + kind + " '" + tok + "'");
    return it->second;
}

}  // namespace

ParsedCategory load_category_file(const std::string& path) {
    ParsedCategory out;
    std::map<std::string, int> objs, mors;
    std::string section;
    struct Deferred {
        int line;
        std::vector<std::string> tokens;
        std::string section;
    };
    std::vector<Deferred> deferred;  // resolved after all names are known

    for (const Line& line : read_lines(path)) {
        const std::string& head = line.tokens.front();
        if (line.tokens.size() == 1 &&
            (head == "OBJECTS" || head == "MORPHISMS" || head == "IDENT" || head == "COMP" ||
             head == "A" || head == "G" || head == "INTERIOR" || head == "COINTERIOR")) {
            section = head;
            continue;
        }
        if (line.tokens.size() == 1 && reserved_word(head))
            fail(path, line.number, "unknown section '" + head + "'");
        if (section.empty()) fail(path, line.number, "content before the first section header");
        if (section == "OBJECTS") {
            for (const std::string& tok : line.tokens) {
                if (!objs.emplace(tok, static_cast<int>(objs.size())).second)
                    fail(path, line.number, "duplicate object '" + tok + "'");
                out.cat.object_names.push_back(tok);
            }
        } else if (section == "MORPHISMS") {
            if (line.tokens.size() != 3)
                fail(path, line.number, "expected: name source target");
            FinCat::Mor m;
            m.name = line.tokens[0];
            if (!mors.emplace(m.name, static_cast<int>(mors.size())).second)
                fail(path, line.number, "duplicate morphism '" + m.name + "'");
            m.src = lookup(path, line.number, objs, line.tokens[1], "object");
            m.dst = lookup(path, line.number, objs, line.tokens[2], "object");
            out.cat.morphisms.push_back(m);
            if (out.cat.num_morphisms() > kMorphismCap)
                fail(path, line.number, "more than " + std::to_string(kMorphismCap) +
                                            " morphisms; this tool targets desk-scale inputs");
        } else {
            deferred.push_back({line.number, line.tokens, section});
        }
    }

    int nm = out.cat.num_morphisms();
    out.cat.idmap_.assign(out.cat.num_objects(), -1);
    out.cat.comp_.assign(static_cast<size_t>(nm) * nm, -1);
    out.marks.sub_A.assign(nm, 0);
    out.marks.sub_G.assign(nm, 0);
    out.marks.interior.assign(out.cat.num_objects(), {});
    out.marks.cointerior.assign(out.cat.num_objects(), {});

    for (const Deferred& d : deferred) {
        if (d.section == "IDENT") {
            if (d.tokens.size() != 2) fail(path, d.line, "expected: object morphism");
            int o = lookup(path, d.line, objs, d.tokens[0], "object");
            int m = lookup(path, d.line, mors, d.tokens[1], "morphism");
            if (out.cat.idmap_[o] != -1)
                fail(path, d.line, "duplicate identity for object '" + d.tokens[0] + "'");
            out.cat.idmap_[o] = m;
        } else if (d.section == "COMP") {
            if (d.tokens.size() != 3) fail(path, d.line, "expected: outer inner result");
            int g = lookup(path, d.line, mors, d.tokens[0], "morphism");
            int f = lookup(path, d.line, mors, d.tokens[1], "morphism");
            int r = lookup(path, d.line, mors, d.tokens[2], "morphism");
            if (!out.cat.composable(g, f))
                fail(path, d.line, "'" + d.tokens[0] + "' and '" + d.tokens[1] +
                                       "' are not composable");
            size_t idx = static_cast<size_t>(g) * nm + f;
            if (out.cat.comp_[idx] != -1) fail(path, d.line, "duplicate composition entry");
            out.cat.comp_[idx] = r;
        } else if (d.section == "A" || d.section == "G") {
            auto& marks = d.section == "A" ? out.marks.sub_A : out.marks.sub_G;
            (d.section == "A" ? out.has_a : out.has_g) = true;
            for (const std::string& tok : d.tokens)
                marks[lookup(path, d.line, mors, tok, "morphism")] = 1;
        } else {  // INTERIOR / COINTERIOR
            auto& groups = d.section == "INTERIOR" ? out.marks.interior : out.marks.cointerior;
            (d.section == "INTERIOR" ? out.has_interior : out.has_cointerior) = true;
            if (d.tokens.size() < 2) fail(path, d.line, "expected: object morphism...");
            int o = lookup(path, d.line, objs, d.tokens[0], "object");
            for (size_t i = 1; i < d.tokens.size(); ++i)
                groups[o].push_back(lookup(path, d.line, mors, d.tokens[i], "morphism"));
        }
    }
    return out;
}

ContraFun load_functor_file(const std::string& path, const FinCat& base, const Ring& ring) {
    std::map<std::string, int> objs, mors;
    for (int o = 0; o < base.num_objects(); ++o) objs[base.obj_name(o)] = o;
    for (int m = 0; m < base.num_morphisms(); ++m) mors[base.mor_name(m)] = m;

    ContraFun f;
    f.base = &base;
    f.ring = ring;
    f.on_obj.assign(base.num_objects(), Module::zero(ring));
    std::vector<char> have_obj(base.num_objects(), 0), have_mor(base.num_morphisms(), 0);
    f.on_mor.resize(base.num_morphisms());

    std::string section;
    for (const Line& line : read_lines(path)) {
        const std::string& head = line.tokens.front();
        if (line.tokens.size() == 1 && (head == "OBJECTS" || head == "MORPHISMS")) {
            section = head;
            continue;
        }
        if (line.tokens.size() == 1 && reserved_word(head))
            fail(path, line.number, "unknown section '" + head + "'");
        if (section.empty()) fail(path, line.number, "content before the first section header");
        if (section == "OBJECTS") {
            int o = lookup(path, line.number, objs, head, "object");
            if (have_obj[o]) fail(path, line.number, "duplicate value for object '" + head + "'");
            have_obj[o] = 1;
            std::string literal;
            for (size_t i = 1; i < line.tokens.size(); ++i) {
                if (i > 1) literal += " ";
                literal += line.tokens[i];
            }
            try {
                f.on_obj[o] = parse_module_literal(literal, ring);
            } catch (const std::exception& e) {
                fail(path, line.number, e.what());
            }
        } else {
            int m = lookup(path, line.number, mors, head, "morphism");
            if (have_mor[m]) fail(path, line.number, "duplicate matrix for '" + head + "'");
            have_mor[m] = 1;
            const Module& dom = f.on_obj[base.dst(m)];
            const Module& cod = f.on_obj[base.src(m)];
            size_t need = static_cast<size_t>(dom.gens()) * cod.gens();
            if (line.tokens.size() - 1 != need)
                fail(path, line.number,
                     "expected " + std::to_string(need) + " entries (" +
                         std::to_string(cod.gens()) + " x " + std::to_string(dom.gens()) +
                         " row-major), got " + std::to_string(line.tokens.size() - 1));
            Matrix mat(cod.gens(), dom.gens());
            size_t k = 1;
            for (int i = 0; i < cod.gens(); ++i)
                for (int j = 0; j < dom.gens(); ++j)
                    mat(i, j) = Int(parse_int(path, line.number, line.tokens[k++]));
            f.on_mor[m] = Hom{dom, cod, mat};
            if (!f.on_mor[m].is_valid())
                fail(path, line.number,
                     "the matrix for '" + head + "' does not respect the generator orders");
        }
    }
    for (int o = 0; o < base.num_objects(); ++o)
        if (!have_obj[o])
            throw std::runtime_error(path + ": no module for object '" + base.obj_name(o) + "'");
    for (int m = 0; m < base.num_morphisms(); ++m) {
        if (have_mor[m]) continue;
        const Module& dom = f.on_obj[base.dst(m)];
        const Module& cod = f.on_obj[base.src(m)];
        if (!(dom == cod))
            throw std::runtime_error(path + ": no matrix for '" + base.mor_name(m) +
                                     "' and its endpoint values differ, so there is no default");
        f.on_mor[m] = Hom::identity(dom);
    }
    auto errs = f.validate();
    if (!errs.empty()) throw std::runtime_error(path + ": not a functor: " + errs.front());
    return f;
}

GroupData load_group_file(const std::string& path) {
    GroupData gd;
    int omega = -1;
    std::vector<std::pair<int, std::vector<int>>> left, right;
    bool in_mult = false;
    for (const Line& line : read_lines(path)) {
        const std::string& head = line.tokens.front();
        if (head == "MULT" && line.tokens.size() == 1) {
            in_mult = true;
            continue;
        }
        if (head == "P" || head == "OMEGA" || head == "LEFT" || head == "RIGHT") in_mult = false;
        if (in_mult) {
            std::vector<int> row;
            for (const std::string& tok : line.tokens)
                row.push_back(parse_int(path, line.number, tok));
            gd.mult.push_back(row);
        } else if (head == "P") {
            for (size_t i = 1; i < line.tokens.size(); ++i)
                gd.p_elems.push_back(parse_int(path, line.number, line.tokens[i]));
        } else if (head == "OMEGA") {
            if (line.tokens.size() != 2) fail(path, line.number, "expected: OMEGA size");
            omega = parse_int(path, line.number, line.tokens[1]);
        } else if (head == "LEFT" || head == "RIGHT") {
            if (line.tokens.size() < 2) fail(path, line.number, "expected: element permutation...");
            std::vector<int> perm;
            for (size_t i = 2; i < line.tokens.size(); ++i)
                perm.push_back(parse_int(path, line.number, line.tokens[i]));
            int g = parse_int(path, line.number, line.tokens[1]);
            (head == "LEFT" ? left : right).emplace_back(g, perm);
        } else {
            fail(path, line.number, "unknown section '" + head + "'");
        }
    }
    if (gd.mult.empty()) throw std::runtime_error(path + ": missing MULT section");
    if (omega < 0) throw std::runtime_error(path + ": missing OMEGA size");
    int n = gd.order();
    gd.left_g.assign(n, {});
    gd.right_p.assign(n, {});
    for (auto& kv : left) {
        if (kv.first < 0 || kv.first >= n)
            throw std::runtime_error(path + ": LEFT element out of range");
        gd.left_g[kv.first] = kv.second;
    }
    for (auto& kv : right) {
        if (kv.first < 0 || kv.first >= n)
            throw std::runtime_error(path + ": RIGHT element out of range");
        gd.right_p[kv.first] = kv.second;
    }
    auto errs = validate_group_data(gd);
    if (!errs.empty()) throw std::runtime_error(path + ": " + errs.front());
    if (gd.omega_size() != omega)
        throw std::runtime_error(path + ": OMEGA size disagrees with the action tables");
    return gd;
}

Ring parse_ring(const std::string& text) {
    if (text == "Z") return Ring{0};
    const std::string prefix = "Zmod:";
    if (text.rfind(prefix, 0) == 0) {
        Int m(text.substr(prefix.size()));
        if (!is_prime_power(m))
            throw std::runtime_error("ring modulus must be a prime power >= 2, got " + m.str());
        return Ring{m};
    }
    throw std::runtime_error("unknown ring '" + text + "'; use Z or Zmod:m");
}

}  // namespace homcat
