#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "boxdim/extension.hpp"
#include "boxdim/subgroup.hpp"

#include <memory>

using namespace boxdim;

TEST_CASE("built-in extensions validate") {
    CHECK_NOTHROW(make_extension_z2().validate());
    CHECK_NOTHROW(make_extension_dihedral().validate());
    CHECK_NOTHROW(make_extension_lamp(2).validate(2));
    CHECK_NOTHROW(make_extension_semidirect({{1, 1}, {0, 1}}).validate(2));
}

TEST_CASE("rho tables on the worked examples") {
    SUBCASE("Z^2 over 3Z+2Z: six cosets over two, fibers of three") {
        auto ext = make_extension_z2();
        auto rt = rho_map(ext, congruence_spec(ext.G, {3, 2}));
        CHECK(rt.QG.size() == 6);
        CHECK(rt.QK.size() == 2);
        REQUIRE(rt.fibers.size() == 2);
        for (const auto& f : rt.fibers) CHECK(f.size() == 3);
    }
    SUBCASE("D_inf over <r^4>: eight cosets over two, fibers of four") {
        auto ext = make_extension_dihedral();
        auto rt = rho_map(ext, dihedral_spec(ext.G, 4));
        CHECK(rt.QG.size() == 8);
        CHECK(rt.QK.size() == 2);
        for (const auto& f : rt.fibers) CHECK(f.size() == 4);
    }
    SUBCASE("lamplighter over the level-3 subgroup: fibers of eight") {
        auto ext = make_extension_lamp(2);
        auto rt = rho_map(ext, wreath_spec(ext.G, 3));
        CHECK(rt.QG.size() == 24);
        CHECK(rt.QK.size() == 3);
        for (const auto& f : rt.fibers) CHECK(f.size() == 8);
    }
}

TEST_CASE("rho is equivariant-consistent and 1-Lipschitz") {
    auto ext = make_extension_z2();
    auto rt = rho_map(ext, congruence_spec(ext.G, {3, 2}));
    // Fibers partition G/H.
    std::vector<int> hit(rt.QG.size(), 0);
    for (const auto& f : rt.fibers)
        for (int x : f) ++hit[x];
    for (int h : hit) CHECK(h == 1);
    for (int x = 0; x < rt.QG.size(); ++x)
        for (int y = 0; y < rt.QG.size(); ++y)
            CHECK(rt.QK.dist(rt.rho[x], rt.rho[y]) <= rt.QG.dist(x, y));
}

TEST_CASE("index product: [G:H] = [K:pi(H)] * fiber size") {
    auto d = make_extension_dihedral();
    auto l = make_extension_lamp(2);
    auto z = make_extension_z2();
    struct Row {
        const ExtensionData& ext;
        SubgroupSpec H;
    };
    std::vector<Row> rows = {
        {z, congruence_spec(z.G, {3, 2})}, {z, congruence_spec(z.G, {4, 4})},
        {d, dihedral_spec(d.G, 4)},        {d, dihedral_spec(d.G, 3, 0)},
        {l, wreath_spec(l.G, 2)},          {l, wreath_spec(l.G, 3)},
    };
    for (const auto& row : rows) {
        auto rt = rho_map(row.ext, row.H);
        REQUIRE(!rt.fibers.empty());
        size_t fiber = rt.fibers.front().size();
        for (const auto& f : rt.fibers) CHECK(f.size() == fiber);
        CHECK(static_cast<size_t>(rt.QG.size()) ==
              static_cast<size_t>(rt.QK.size()) * fiber);
    }
}

TEST_CASE("key lemma passes on catalog samples") {
    auto z = make_extension_z2();
    for (const auto& H : {congruence_spec(z.G, {3, 2}), congruence_spec(z.G, {5, 4})}) {
        auto rep = verify_key_lemma(z, H, Rat(2));
        INFO(rep.detail);
        CHECK(rep.all_pass());
    }
    auto d = make_extension_dihedral();
    auto repd = verify_key_lemma(d, dihedral_spec(d.G, 5), Rat(2));
    INFO(repd.detail);
    CHECK(repd.all_pass());
    auto l = make_extension_lamp(2);
    auto repl = verify_key_lemma(l, wreath_spec(l.G, 2), Rat(1));
    INFO(repl.detail);
    CHECK(repl.all_pass());
    auto s = make_extension_semidirect({{1, 1}, {0, 1}});
    auto reps = verify_key_lemma(s, congruence_spec(s.G, 3), Rat(1));
    INFO(reps.detail);
    CHECK(reps.all_pass());
}

TEST_CASE("key lemma on the trivial subgroup H = G") {
    auto z = make_extension_z2();
    auto rep = verify_key_lemma(z, full_spec(z.G), Rat(1));
    INFO(rep.detail);
    CHECK(rep.all_pass());
}

TEST_CASE("fiber product covers") {
    auto ext = make_extension_z2();
    auto rt = rho_map(ext, congruence_spec(ext.G, {3, 2}));

    auto fiber_space = [&](int y) {
        return std::make_shared<FiniteMetricSpace>(
            rt.QG.space->restrict(rt.fibers[y], "fiber"));
    };

    SUBCASE("trivial base and whole-fiber members") {
        Cover base{rt.QK.space, {{0, 1}}, Rat(0), rt.QK.space->diameter()};
        std::vector<Cover> fibers;
        for (int y = 0; y < rt.QK.size(); ++y) {
            auto fs = fiber_space(y);
            std::vector<int> all;
            for (size_t i = 0; i < fs->size(); ++i) all.push_back(static_cast<int>(i));
            fibers.push_back({fs, {all}, Rat(0), fs->diameter()});
        }
        auto c = fiber_product_cover(rt, base, fibers);
        validate_cover(c);
        CHECK(multiplicity(c) <= 1 * 1);
    }
    SUBCASE("singleton fibers give multiplicity of the base") {
        Cover base{rt.QK.space, {{0}, {0, 1}}, Rat(0), rt.QK.space->diameter()};
        std::vector<Cover> fibers;
        for (int y = 0; y < rt.QK.size(); ++y) {
            auto fs = fiber_space(y);
            std::vector<std::vector<int>> members;
            for (size_t i = 0; i < fs->size(); ++i) members.push_back({static_cast<int>(i)});
            fibers.push_back({fs, std::move(members), Rat(0), Rat(0)});
        }
        auto c = fiber_product_cover(rt, base, fibers);
        validate_cover(c);
        CHECK(bound(c) == Rat(0));
        CHECK(multiplicity(c) <= multiplicity(base));
    }
}

TEST_CASE("pushforward of a non-finitely-generated kernel is a domain error") {
    auto l = make_extension_lamp(2);
    CHECK_THROWS_AS(pushforward_family(l, {wreath_spec(l.G, 2)}), std::domain_error);
}
