#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "homcat/cochain.hpp"
#include "homcat/io.hpp"

using namespace homcat;

namespace {

std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

std::string write_temp(const std::string& name, const std::string& body) {
    std::string path =
        (std::filesystem::temp_directory_path() / ("homcat_io_" + name)).string();
    std::ofstream out(path);
    out << body;
    return path;
}

}  // namespace

TEST_CASE("every bundled category file loads and validates") {
    for (const char* name : {"cat_poset2.cat", "cat_grpc2.cat", "cat_grpc3.cat", "cat_chain3.cat",
                             "cat_klein.cat", "cat_idem.cat"}) {
        CAPTURE(name);
        ParsedCategory pc = load_category_file(fixture(name));
        CHECK(validate_category(pc.cat).empty());
    }
    ParsedCategory bad = load_category_file(fixture("cat_badcomp.cat"));
    CHECK_FALSE(validate_category(bad.cat).empty());
}

TEST_CASE("category markings round-trip") {
    ParsedCategory pc = load_category_file(fixture("cat_poset2.cat"));
    REQUIRE(pc.has_a);
    REQUIRE(pc.has_g);
    CHECK(pc.marks.sub_A == std::vector<char>{1, 1, 1});
    CHECK(pc.marks.sub_G == std::vector<char>{1, 1, 0});
    CHECK_FALSE(pc.has_interior);
}

TEST_CASE("category parse errors carry the line number") {
    std::string p1 = write_temp("unknown_section.cat", "OBJECTS\nX\nWEIRD\nstuff\n");
    CHECK_THROWS_WITH_AS(load_category_file(p1), doctest::Contains(":3:"), std::runtime_error);

    std::string p2 = write_temp("unknown_name.cat",
                                "OBJECTS\nX\nMORPHISMS\nf X Y\n");
    CHECK_THROWS_WITH_AS(load_category_file(p2), doctest::Contains("unknown object 'Y'"),
                         std::runtime_error);

    std::string p3 = write_temp("dup.cat", "OBJECTS\nX\nX\n");
    CHECK_THROWS_WITH_AS(load_category_file(p3), doctest::Contains("duplicate object"),
                         std::runtime_error);

    std::string p4 = write_temp("headless.cat", "X Y\n");
    CHECK_THROWS_WITH_AS(load_category_file(p4), doctest::Contains("before the first section"),
                         std::runtime_error);
}

TEST_CASE("every bundled functor file loads against its category") {
    struct Pair {
        const char* cat;
        const char* fun;
        const char* ring;
    };
    for (const Pair& p : {Pair{"cat_poset2.cat", "fun_poset2_const.fun", "Z"},
                          Pair{"cat_poset2.cat", "fun_poset2_proj.fun", "Z"},
                          Pair{"cat_grpc2.cat", "fun_grpc2_negation.fun", "Zmod:4"},
                          Pair{"cat_grpc2.cat", "fun_grpc2_regular.fun", "Z"},
                          Pair{"cat_grpc2.cat", "fun_grpc2_mixed.fun", "Z"},
                          Pair{"cat_grpc3.cat", "fun_grpc3_rot.fun", "Z"},
                          Pair{"cat_chain3.cat", "fun_chain3_steps.fun", "Z"},
                          Pair{"cat_chain3.cat", "fun_chain3_zero.fun", "Z"},
                          Pair{"cat_klein.cat", "fun_klein_sign.fun", "Z"}}) {
        CAPTURE(p.fun);
        ParsedCategory pc = load_category_file(fixture(p.cat));
        REQUIRE(validate_category(pc.cat).empty());
        ContraFun f = load_functor_file(fixture(p.fun), pc.cat, parse_ring(p.ring));
        CHECK(f.validate().empty());
    }
}

TEST_CASE("functor file failure modes") {
    ParsedCategory pc = load_category_file(fixture("cat_grpc2.cat"));

    CHECK_THROWS_WITH_AS(load_functor_file(fixture("fun_grpc2_broken.fun"), pc.cat, Ring{0}),
                         doctest::Contains("not a functor"), std::runtime_error);

    std::string missing = write_temp("missing_default.fun", "OBJECTS\nQ Z^2\n");
    // s defaults to the identity only because the endpoint values agree...
    CHECK_NOTHROW(load_functor_file(missing, pc.cat, Ring{0}));

    ParsedCategory chain = load_category_file(fixture("cat_chain3.cat"));
    std::string nodefault =
        write_temp("no_default.fun", "OBJECTS\nX Z^1\nY Z^2\nZ Z^1\nMORPHISMS\ng 1 1\nh 1\n");
    // ...while f: X -> Y has differing endpoint values and no matrix.
    CHECK_THROWS_WITH_AS(load_functor_file(nodefault, chain.cat, Ring{0}),
                         doctest::Contains("no default"), std::runtime_error);

    std::string badshape = write_temp("bad_shape.fun", "OBJECTS\nQ Z^2\nMORPHISMS\ns 1 0 0\n");
    CHECK_THROWS_WITH_AS(load_functor_file(badshape, pc.cat, Ring{0}),
                         doctest::Contains("expected 4 entries"), std::runtime_error);

    ParsedCategory chain2 = load_category_file(fixture("cat_chain3.cat"));
    std::string torsion =
        write_temp("torsion.fun", "OBJECTS\nX Z^1\nY Z/3\nZ Z^1\nMORPHISMS\nf 1\ng 1\nh 1\n");
    CHECK_THROWS_WITH_AS(load_functor_file(torsion, chain2.cat, Ring{0}),
                         doctest::Contains("generator orders"), std::runtime_error);
}

TEST_CASE("group files load, validate, and reject corruption") {
    for (const char* name : {"grp_c2_regular.grp", "grp_c2_pxp.grp", "grp_c3_pxp.grp",
                             "grp_c2_nonbasic.grp"}) {
        CAPTURE(name);
        GroupData gd = load_group_file(fixture(name));
        CHECK(validate_group_data(gd).empty());
    }
    GroupData pxp = load_group_file(fixture("grp_c2_pxp.grp"));
    CHECK(pxp.omega_size() == 4);

    std::string bad = write_temp("bad.grp", "MULT\n0 1\n1 1\nP 0 1\nOMEGA 1\nLEFT 0 0\nLEFT 1 0\n"
                                            "RIGHT 0 0\nRIGHT 1 0\n");
    CHECK_THROWS_AS(load_group_file(bad), std::runtime_error);

    std::string mismatch = write_temp("mismatch.grp",
                                      "MULT\n0 1\n1 0\nP 0 1\nOMEGA 3\nLEFT 0 0 1\nLEFT 1 1 0\n"
                                      "RIGHT 0 0 1\nRIGHT 1 1 0\n");
    CHECK_THROWS_WITH_AS(load_group_file(mismatch), doctest::Contains("disagrees"),
                         std::runtime_error);
}

TEST_CASE("ring parsing") {
    CHECK(parse_ring("Z") == Ring{0});
    CHECK(parse_ring("Zmod:4") == Ring{4});
    CHECK(parse_ring("Zmod:9") == Ring{9});
    CHECK_THROWS_WITH_AS(parse_ring("Zmod:6"), doctest::Contains("prime power"),
                         std::runtime_error);
    CHECK_THROWS_AS(parse_ring("Q"), std::runtime_error);
}

TEST_CASE("classical oracle through files: the negation module over the order-2 group") {
    ParsedCategory pc = load_category_file(fixture("cat_grpc2.cat"));
    ContraFun f = load_functor_file(fixture("fun_grpc2_negation.fun"), pc.cat, Ring{4});
    std::vector<char> trivial_g(pc.cat.num_morphisms(), 0);
    trivial_g[pc.cat.identity(0)] = 1;
    CHECK(canonical_form(stable_cohomology(pc.cat, trivial_g, f, 1)) ==
          canonical_form(Module{Ring{4}, {2}}));
}
