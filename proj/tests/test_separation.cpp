#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "boxdim/ball.hpp"
#include "boxdim/separation.hpp"
#include "boxdim/subgroup.hpp"

#include <random>

using namespace boxdim;

namespace {

GroupPtr make(const char* s) { return std::make_shared<MarkedGroup>(parse_group(s)); }

GroupElement zel(long long v) {
    GroupElement e;
    e.vec = {v};
    return e;
}

GroupElement del(long long r, bool s) {
    GroupElement e;
    e.vec = {r};
    e.flag = s;
    return e;
}

}  // namespace

TEST_CASE("separating-family verdicts on the worked examples") {
    auto Z = make("z");
    SUBCASE("both members contain 6") {
        auto rep = is_separating({congruence_spec(Z, 2), congruence_spec(Z, 3)}, {zel(6)});
        CHECK_FALSE(rep.verdict);
    }
    SUBCASE("4Z avoids {2,3}") {
        auto rep = is_separating({congruence_spec(Z, 4)}, {zel(2), zel(3)});
        CHECK(rep.verdict);
        CHECK(rep.witness == 0);
        CHECK(rep.witness_label == congruence_spec(Z, 4).label);
    }
    SUBCASE("every <r^n, s> contains s") {
        auto D = make("infinite_dihedral");
        std::vector<SubgroupSpec> sigma;
        for (long long n = 1; n <= 8; ++n) sigma.push_back(dihedral_spec(D, n, 0));
        CHECK_FALSE(is_separating(sigma, {del(0, true)}).verdict);
    }
    SUBCASE("identity alone is ignored") {
        CHECK(is_separating({congruence_spec(Z, 2)}, {zel(0)}).verdict);
    }
}

TEST_CASE("semi-conjugacy-separation worked examples, all modes agreeing") {
    SUBCASE("abelian separating family") {
        auto Z = make("z");
        std::vector<SubgroupSpec> sigma = {congruence_spec(Z, 4), congruence_spec(Z, 9)};
        std::vector<GroupElement> F = {zel(2), zel(3), zel(-5)};
        for (int mode : {1, 2, 3}) CHECK(is_semi_conjugacy_separating(sigma, F, mode).verdict);
    }
    SUBCASE("Heisenberg normal congruence family, F = B_3(e)") {
        auto H = make("heisenberg3");
        std::vector<SubgroupSpec> sigma;
        for (long long m = 2; m <= 6; ++m) sigma.push_back(congruence_spec(H, m));
        std::vector<GroupElement> F;
        for (const auto& [el, len] : cayley_ball(*H, Rat(3)).lengths) F.push_back(el);
        for (int mode : {1, 2, 3}) CHECK(is_semi_conjugacy_separating(sigma, F, mode).verdict);
    }
    SUBCASE("dihedral non-normal counterexample: p(e) = p(s)") {
        auto D = make("infinite_dihedral");
        std::vector<SubgroupSpec> sigma = {dihedral_spec(D, 3, 0)};
        std::vector<GroupElement> F = {D->identity(), del(0, true)};
        for (int mode : {1, 2, 3}) {
            auto rep = is_semi_conjugacy_separating(sigma, F, mode);
            CHECK_FALSE(rep.verdict);
        }
    }
}

TEST_CASE("mode agreement on a randomized corpus") {
    std::mt19937 rng(20240817);
    auto Z = make("z");
    auto Z2 = make("free_abelian(2)");
    auto H = make("heisenberg3");
    auto D = make("infinite_dihedral");
    auto W = make("wreath_lamp(2)");

    struct Host {
        GroupPtr g;
        std::vector<SubgroupSpec> pool;
    };
    std::vector<Host> hosts;
    hosts.push_back({Z, {congruence_spec(Z, 2), congruence_spec(Z, 6), congruence_spec(Z, 9)}});
    hosts.push_back({Z2, {congruence_spec(Z2, {2, 2}), congruence_spec(Z2, {3, 4})}});
    hosts.push_back({H, {congruence_spec(H, 2), congruence_spec(H, 3), congruence_spec(H, 4)}});
    hosts.push_back({D,
                     {dihedral_spec(D, 3), dihedral_spec(D, 4), dihedral_spec(D, 3, 0),
                      dihedral_spec(D, 4, 1), dihedral_spec(D, 5, 2)}});
    hosts.push_back({W, {wreath_spec(W, 2), wreath_spec(W, 3)}});

    int instances = 0;
    for (const auto& host : hosts) {
        std::vector<GroupElement> ball;
        for (const auto& [el, len] : cayley_ball(*host.g, Rat(3)).lengths) ball.push_back(el);
        std::uniform_int_distribution<size_t> pick(0, ball.size() - 1);
        std::uniform_int_distribution<size_t> nsub(1, host.pool.size());
        for (int t = 0; t < 8; ++t) {
            std::vector<SubgroupSpec> sigma(host.pool.begin(),
                                            host.pool.begin() + nsub(rng));
            std::vector<GroupElement> F;
            for (int i = 0; i < 4; ++i) F.push_back(ball[pick(rng)]);
            auto r1 = is_semi_conjugacy_separating(sigma, F, 1);
            auto r2 = is_semi_conjugacy_separating(sigma, F, 2);
            auto r3 = is_semi_conjugacy_separating(sigma, F, 3);
            CHECK(r1.verdict == r2.verdict);
            CHECK(r2.verdict == r3.verdict);
            // Mode 2 with k = e implies the family separates F.
            if (r2.verdict) CHECK(is_separating(sigma, F).verdict);
            ++instances;
        }
    }
    CHECK(instances == 40);
}

TEST_CASE("injectivity radii match the closed form and the worked examples") {
    auto Z = make("z");
    CHECK(injectivity_radius(build_quotient(congruence_spec(Z, 12))) == Rat(5));
    CHECK(injectivity_radius(build_quotient(congruence_spec(Z, 2))) == Rat(0));
    auto D = make("infinite_dihedral");
    CHECK(injectivity_radius(build_quotient(dihedral_spec(D, 3, 0))) == Rat(0));
    // Z -> Z/n: the map is injective on B_R iff 2R < n.
    for (long long n = 2; n <= 64; ++n) {
        auto Q = build_quotient(congruence_spec(Z, n));
        CHECK(injectivity_radius(Q) == Rat((n - 1) / 2));
        CHECK(shortest_schreier_return(Q) == Rat(n));
    }
}

TEST_CASE("isometry lemma verdicts") {
    auto Z = make("z");
    auto Q64 = build_quotient(congruence_spec(Z, 64));
    auto r = verify_isometry_lemma(Q64, Rat(10));
    CHECK(r.holds);
    CHECK_FALSE(r.vacuous);

    auto Q12 = build_quotient(congruence_spec(Z, 12));
    auto rv = verify_isometry_lemma(Q12, Rat(3));  // 3R = 9 > radius 5
    CHECK(rv.holds);
    CHECK(rv.vacuous);

    auto r0 = verify_isometry_lemma(Q12, Rat(0));
    CHECK(r0.holds);

    // Whenever 3R is within the injectivity radius the lemma holds
    // non-vacuously (here across hosts).
    auto H = make("heisenberg3");
    for (const auto& spec :
         {congruence_spec(Z, 30), congruence_spec(H, 4), congruence_spec(H, 8)}) {
        auto Q = build_quotient(spec);
        Rat inj = injectivity_radius(Q);
        Rat R = inj / 3;
        auto rep = verify_isometry_lemma(Q, R);
        CHECK(rep.holds);
        if (R > Rat(0)) CHECK_FALSE(rep.vacuous);
    }
}
