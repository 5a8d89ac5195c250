#include "CLI11.hpp"
#include "homcat/accover.hpp"
#include "homcat/cochain.hpp"
#include "homcat/fincat.hpp"
#include "homcat/functorlib.hpp"
#include "homcat/homotopy.hpp"
#include "homcat/io.hpp"
#include "homcat/mackey.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace homcat;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr int kDegreeCap = 6;

struct Output {
    std::ostringstream body;
    bool failed = false;

    void line(const std::string& s) { body << s << "\n"; }
    void check(bool ok, const std::string& what, const std::string& witness) {
        if (ok) {
            line("ok: " + what);
        } else {
            line("FAIL: " + what + (witness.empty() ? "" : ": " + witness));
            failed = true;
        }
    }
};

int find_object(const FinCat& cat, const std::string& name) {
    for (int o = 0; o < cat.num_objects(); ++o)
        if (cat.obj_name(o) == name) return o;
    throw std::runtime_error("unknown object '" + name + "'");
}

int find_morphism(const FinCat& cat, const std::string& name) {
    for (int m = 0; m < cat.num_morphisms(); ++m)
        if (cat.mor_name(m) == name) return m;
    throw std::runtime_error("unknown morphism '" + name + "'");
}

/// Loads and structurally validates; throws (input error) when invalid.
ParsedCategory load_valid_category(const std::string& path) {
    ParsedCategory pc = load_category_file(path);
    auto errs = validate_category(pc.cat);
    if (!errs.empty()) throw std::runtime_error(path + ": " + errs.front());
    return pc;
}

void cmd_validate(Output& out, const std::string& path) {
    ParsedCategory pc = load_category_file(path);
    auto errs = validate_category(pc.cat);
    out.check(errs.empty(), "category axioms", errs.empty() ? "" : errs.front());
    if (!errs.empty()) return;
    if (pc.has_a) {
        auto a = validate_subcategory(pc.cat, pc.marks.sub_A, false);
        out.check(a.empty(), "A-subcategory", a.empty() ? "" : a.front());
    }
    if (pc.has_g) {
        auto g = validate_subcategory(pc.cat, pc.marks.sub_G, true);
        out.check(g.empty(), "G-subcategory", g.empty() ? "" : g.front());
    }
    if (pc.has_interior) {
        auto i = validate_subgroups(pc.cat, pc.marks.interior);
        out.check(i.empty(), "interior subgroups", i.empty() ? "" : i.front());
        if (i.empty())
            out.check(check_interior(pc.cat, pc.marks.interior), "interior transport", "");
    }
    if (pc.has_cointerior) {
        auto c = validate_subgroups(pc.cat, pc.marks.cointerior);
        out.check(c.empty(), "co-interior subgroups", c.empty() ? "" : c.front());
        if (c.empty())
            out.check(check_cointerior(pc.cat, pc.marks.cointerior), "co-interior transport", "");
    }
}

void cmd_check_ordered(Output& out, const std::string& path) {
    ParsedCategory pc = load_valid_category(path);
    out.check(is_ordered(pc.cat), "ordered category", "a hom-pair fails the isomorphism condition");
}

void cmd_check_a_category(Output& out, const std::string& path) {
    ParsedCategory pc = load_valid_category(path);
    if (!pc.has_a) throw std::runtime_error(path + ": no A section");
    AFactorization fac = check_a_category(pc.cat, pc.marks.sub_A);
    out.check(fac.ok, "A-category factorization and rigidity", fac.failure);
}

void cmd_check_mult(Output& out, const std::string& path) {
    ParsedCategory pc = load_valid_category(path);
    MultReport rep = check_multiplicative(pc.cat);
    out.check(rep.ok, "multiplicative (divisor partitions)", rep.witness);
}

void cmd_product(Output& out, const std::string& path, const std::string& r_name,
                 const std::string& t_name) {
    ParsedCategory pc = load_valid_category(path);
    MultReport mult = check_multiplicative(pc.cat);
    if (!mult.ok) throw std::runtime_error(path + ": not multiplicative: " + mult.witness);
    int r = find_object(pc.cat, r_name), t = find_object(pc.cat, t_name);
    ProductData p = direct_product(pc.cat, r, t);
    out.line("product " + r_name + " x " + t_name + " = " + p.object.to_string(pc.cat));
    for (size_t i = 0; i < p.triples.size(); ++i)
        out.line("  term " + std::to_string(i) + ": apex " +
                 pc.cat.obj_name(p.triples[i].apex) + ", legs " +
                 pc.cat.mor_name(p.triples[i].to_r) + ", " + pc.cat.mor_name(p.triples[i].to_t));
    std::string uni = check_product_universal(pc.cat, p, r, t);
    out.check(uni.empty(), "universal property", uni);
}

void cmd_pullback(Output& out, const std::string& path, const std::string& a_name,
                  const std::string& b_name) {
    ParsedCategory pc = load_valid_category(path);
    MultReport mult = check_multiplicative(pc.cat);
    if (!mult.ok) throw std::runtime_error(path + ": not multiplicative: " + mult.witness);
    int a = find_morphism(pc.cat, a_name), b = find_morphism(pc.cat, b_name);
    PullbackData pb = pull_back(pc.cat, a, b);
    out.line("pull-back of " + a_name + " and " + b_name + " = " + pb.object.to_string(pc.cat) +
             " (" + std::to_string(pb.kept_indices.size()) + " of the product terms)");
    std::string uni = check_pullback_universal(pc.cat, pb, a, b);
    out.check(uni.empty(), "universal property", uni);
}

void cmd_cohomology(Output& out, const std::string& cat_path, const std::string& fun_path,
                    const Ring& ring, int max_degree) {
    ParsedCategory pc = load_valid_category(cat_path);
    ContraFun f = load_functor_file(fun_path, pc.cat, ring);
    std::vector<char> g = pc.marks.sub_G;
    if (!pc.has_g) {
        g.assign(pc.cat.num_morphisms(), 0);
        for (int o = 0; o < pc.cat.num_objects(); ++o) g[pc.cat.identity(o)] = 1;
    }
    std::vector<StableLevel> levels;
    for (int n = 0; n <= max_degree + 1; ++n)
        levels.push_back(stable_cochain_level(pc.cat, g, f, n));
    for (int n = 0; n <= max_degree; ++n) {
        Hom d = stable_differential(pc.cat, f, levels[n], levels[n + 1]);
        if (n + 1 <= max_degree) {
            Hom d2 = stable_differential(pc.cat, f, levels[n + 1], levels[n + 2]);
            out.check(d2.compose_after(d).is_zero_hom(),
                      "d∘d = 0 out of degree " + std::to_string(n), "nonzero composite");
        }
    }
    for (int n = 0; n <= max_degree; ++n)
        out.line("H^" + std::to_string(n) + " = " +
                 stable_cohomology(pc.cat, g, f, n).to_string());
}

void cmd_verify_homotopy(Output& out, const std::string& cat_path, const std::string& fun_path,
                         const Ring& ring, int max_degree) {
    ParsedCategory pc = load_valid_category(cat_path);
    if (!pc.has_a || !pc.has_g) throw std::runtime_error(cat_path + ": A and G sections required");
    MultReport mult = check_multiplicative(pc.cat);
    if (!mult.ok) throw std::runtime_error(cat_path + ": not multiplicative: " + mult.witness);
    auto p_obj = final_object_in(pc.cat, pc.marks.sub_A);
    if (!p_obj) throw std::runtime_error(cat_path + ": no final object in the A-part");

    ContraFun a_tilde = load_functor_file(fun_path, pc.cat, ring);
    MPFunctor mp = m_p_functor(pc.cat, pc.marks.sub_A, pc.marks.sub_G, *p_obj);
    HomotopicSystem sys = direct_product_system(pc.cat, pc.marks.sub_A, pc.marks.sub_G, mp);
    auto errs = validate_system(sys);
    out.check(errs.empty(), "homotopic system axioms", errs.empty() ? "" : errs.front());
    if (!errs.empty()) return;

    ContraFun big = product_functor(sys, mp, a_tilde);
    ContraFun a_base = pullback_functor(sys.base, sys.quot, big);
    HFunctor hf = build_H_functor(sys, big);
    NatMap delta = delta_H(sys, big, a_base, hf);
    NatMap theta = canonical_section(sys, mp, a_tilde, a_base, hf);
    std::string w;
    out.check(check_section(sys, a_base, hf, delta, theta, &w), "natural section of the diagonal",
              w);
    if (out.failed) return;

    TheoremReport rep = verify_contraction(sys, a_base, hf, theta, max_degree);
    std::istringstream lines(rep.detail);
    std::string l;
    while (std::getline(lines, l)) out.line((rep.ok ? "PASS: " : "") + l);
    out.check(rep.ok, "contraction identity and vanishing cohomology", rep.detail);
}

void cmd_verify_mackey(Output& out, const std::string& grp_path, const Ring& ring,
                       int max_degree) {
    GroupData gd = load_group_file(grp_path);
    TransporterData td = transporter_categories(gd);
    HomotopicSystem sys = mackey_system(td);

    const FinCat& quot = sys.quot.quot;
    ContraFun a;
    a.base = &quot;
    a.ring = ring;
    TransferFun comp;
    comp.base = &quot;
    comp.ring = ring;
    Module m = Module::free(ring, 1);
    a.on_obj.assign(quot.num_objects(), m);
    comp.on_obj.assign(quot.num_objects(), m);
    for (int i = 0; i < quot.num_morphisms(); ++i) {
        Int s = Int(td.objects[quot.dst(i)].size()) / Int(td.objects[quot.src(i)].size());
        a.on_mor.push_back(Hom::identity(m).scaled(s));
        comp.on_mor.push_back(Hom::identity(m));
    }

    out.line("group of order " + std::to_string(gd.order()) + ", subgroup of order " +
             std::to_string(gd.p_elems.size()) + ", " + std::to_string(gd.omega_size()) +
             " points, " + std::to_string(td.cat.num_objects()) + " subgroup objects");
    TheoremReport rep = verify_splitting(td, sys, a, comp, max_degree);
    std::istringstream lines(rep.detail);
    std::string l;
    while (std::getline(lines, l)) out.line((rep.ok ? "PASS: " : "") + l);
    out.check(rep.ok, "splitting verified", "");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact checker for marked finite categories, stable cohomology, and splitting"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string ring_text = "Z";
    int max_degree = 2;
    std::string fixture_dir, report_path;
    app.add_option("--ring", ring_text, "coefficient ring: Z or Zmod:m (m a prime power)");
    app.add_option("--max-degree", max_degree, "largest cochain degree to examine")
        ->check(CLI::Range(0, kDegreeCap));
    app.add_option("--fixture-dir", fixture_dir, "directory prepended to input paths");
    app.add_option("--report", report_path, "also write the report to this file");

    std::string cat_path, fun_path, grp_path, arg1, arg2;
    CLI::App* validate = app.add_subcommand("validate", "category axioms and markings");
    validate->add_option("category", cat_path)->required();
    CLI::App* ordered = app.add_subcommand("check-ordered", "ordered-category condition");
    ordered->add_option("category", cat_path)->required();
    CLI::App* acat = app.add_subcommand("check-a-category", "A-factorization and rigidity");
    acat->add_option("category", cat_path)->required();
    CLI::App* mult = app.add_subcommand("check-mult", "divisor partitions of every hom-set");
    mult->add_option("category", cat_path)->required();
    CLI::App* product = app.add_subcommand("product", "direct product in the additive cover");
    product->add_option("category", cat_path)->required();
    product->add_option("R", arg1)->required();
    product->add_option("T", arg2)->required();
    CLI::App* pullback = app.add_subcommand("pullback", "pull-back in the additive cover");
    pullback->add_option("category", cat_path)->required();
    pullback->add_option("alpha", arg1)->required();
    pullback->add_option("beta", arg2)->required();
    CLI::App* cohom = app.add_subcommand("cohomology", "stable cohomology of a functor");
    cohom->add_option("category", cat_path)->required();
    cohom->add_option("functor", fun_path)->required();
    CLI::App* homot = app.add_subcommand("verify-homotopy",
                                         "product-system contraction on a multiplicative category");
    homot->add_option("category", cat_path)->required();
    homot->add_option("functor", fun_path)->required();
    CLI::App* mackey = app.add_subcommand("verify-mackey",
                                          "transporter-system splitting for a group action");
    mackey->add_option("group", grp_path)->required();

    CLI11_PARSE(app, argc, argv);

    auto resolve = [&](const std::string& p) {
        return (fixture_dir.empty() || p.empty()) ? p : fixture_dir + "/" + p;
    };

    Output out;
    int status = kExitPass;
    try {
        Ring ring = parse_ring(ring_text);
        if (validate->parsed()) cmd_validate(out, resolve(cat_path));
        else if (ordered->parsed()) cmd_check_ordered(out, resolve(cat_path));
        else if (acat->parsed()) cmd_check_a_category(out, resolve(cat_path));
        else if (mult->parsed()) cmd_check_mult(out, resolve(cat_path));
        else if (product->parsed()) cmd_product(out, resolve(cat_path), arg1, arg2);
        else if (pullback->parsed()) cmd_pullback(out, resolve(cat_path), arg1, arg2);
        else if (cohom->parsed())
            cmd_cohomology(out, resolve(cat_path), resolve(fun_path), ring, max_degree);
        else if (homot->parsed())
            cmd_verify_homotopy(out, resolve(cat_path), resolve(fun_path), ring, max_degree);
        else if (mackey->parsed()) cmd_verify_mackey(out, resolve(grp_path), ring, max_degree);
        if (out.failed) status = kExitFail;
    } catch (const std::exception& e) {
        out.line(std::string("error: ") + e.what());
        status = kExitInput;
    }

    std::cout << out.body.str();
    if (!report_path.empty()) {
        std::ofstream rep(report_path);
        rep << out.body.str();
    }
    return status;
}
