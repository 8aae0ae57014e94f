#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "boxdim/ball.hpp"
#include "boxdim/extension.hpp"
#include "boxdim/quotient.hpp"
#include "boxdim/subgroup.hpp"

#include <random>
#include <sstream>

using namespace boxdim;

namespace {

GroupPtr make(const char* s) { return std::make_shared<MarkedGroup>(parse_group(s)); }

// Independent oracle: d(x,y) = min{|g|_G : g moves coset y onto coset x},
// found by enumerating G in nondecreasing word length. Shares no code with
// the Schreier-graph shortest-path solver.
std::vector<Rat> enumeration_distance_oracle(const FiniteQuotient& Q) {
    int n = Q.size();
    std::vector<Rat> d(static_cast<size_t>(n) * n, Rat(-1));
    int remaining = n * n;
    CayleyEnumerator it(*Q.spec.host, 500000);
    CayleyEnumerator::Entry e;
    while (remaining > 0 && it.next(e)) {
        for (int y = 0; y < n; ++y) {
            int x = Q.act(e.element, y);
            Rat& slot = d[static_cast<size_t>(x) * n + y];
            if (slot < Rat(0)) {
                slot = e.length;
                --remaining;
            }
        }
    }
    REQUIRE(remaining == 0);
    return d;
}

void check_against_oracle(const FiniteQuotient& Q) {
    auto oracle = enumeration_distance_oracle(Q);
    int n = Q.size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            CHECK(Q.dist(x, y) == oracle[static_cast<size_t>(x) * n + y]);
}

}  // namespace

TEST_CASE("Z mod 12 is the 12-cycle with cycle distances") {
    auto Q = build_quotient(congruence_spec(make("z"), 12));
    REQUIRE(Q.size() == 12);
    CHECK(Q.dist(1, 11) == Rat(2));
    CHECK(Q.dist(0, 6) == Rat(6));
    CHECK(Q.dist(2, 11) == Rat(3));
    CHECK(Q.space->product.has_value());
    CHECK(Q.space->product->dims == std::vector<long long>{12});
}

TEST_CASE("coset counts match the worked examples") {
    CHECK(build_quotient(congruence_spec(make("heisenberg3"), 2)).size() == 8);
    CHECK(build_quotient(wreath_spec(make("wreath_lamp(2)"), 3)).size() == 24);
    CHECK(build_quotient(congruence_spec(make("free_abelian(2)"), {3, 2})).size() == 6);
    CHECK(build_quotient(dihedral_spec(make("infinite_dihedral"), 4)).size() == 8);
}

TEST_CASE("Z^2/(3Z+2Z): d((0,0),(2,1)) = 2 via the representative (-1,1)") {
    auto G = make("free_abelian(2)");
    auto Q = build_quotient(congruence_spec(G, {3, 2}));
    GroupElement g;
    g.vec = {2, 1};
    int x = Q.coset_of(g);
    CHECK(Q.dist(Q.basepoint, x) == Rat(2));
}

TEST_CASE("Schreier distances equal the enumeration oracle on all small quotients") {
    auto Z = make("z");
    auto Z2 = make("free_abelian(2)");
    auto H = make("heisenberg3");
    auto D = make("infinite_dihedral");
    auto W = make("wreath_lamp(2)");
    auto SD = make("semidirect_znz(1,1,0,1)");
    std::vector<SubgroupSpec> corpus = {
        congruence_spec(Z, 12),       congruence_spec(Z, 60),
        congruence_spec(Z2, {3, 2}),  congruence_spec(Z2, {7, 7}),
        congruence_spec(H, 2),        congruence_spec(H, 3),
        dihedral_spec(D, 4),          dihedral_spec(D, 5),
        dihedral_spec(D, 3, 0),       wreath_spec(W, 2),
        wreath_spec(W, 3),            congruence_spec(SD, 3),
        full_spec(Z2),
    };
    for (const auto& spec : corpus) {
        auto Q = build_quotient(spec);
        REQUIRE(Q.size() <= 60);
        INFO("spec ", spec.label);
        check_against_oracle(Q);
    }
}

TEST_CASE("quotient maps are 1-Lipschitz on sampled pairs") {
    auto H = make("heisenberg3");
    auto Q = build_quotient(congruence_spec(H, 3));
    auto ball = cayley_ball(*H, Rat(3));
    std::vector<GroupElement> pts;
    for (const auto& [el, len] : ball.lengths) pts.push_back(el);
    std::mt19937 rng(99);
    std::uniform_int_distribution<size_t> pick(0, pts.size() - 1);
    for (int t = 0; t < 200; ++t) {
        const auto& a = pts[pick(rng)];
        const auto& b = pts[pick(rng)];
        CHECK(Q.dist(Q.coset_of(a), Q.coset_of(b)) <= word_distance(*H, a, b));
    }
}

TEST_CASE("edge-list export round-trips through the loader") {
    auto Q = build_quotient(congruence_spec(make("free_abelian(2)"), {3, 2}));
    std::ostringstream out;
    export_edge_list(Q, out);
    std::istringstream in(out.str());
    auto X = load_edge_list_space(in, "reload");
    REQUIRE(X->size() == Q.space->size());
    for (size_t i = 0; i < X->size(); ++i)
        for (size_t j = 0; j < X->size(); ++j) CHECK(X->d(i, j) == Q.space->d(i, j));

    // Single cycles regain their product structure.
    auto C = build_quotient(congruence_spec(make("z"), 12));
    std::ostringstream outc;
    export_edge_list(C, outc);
    std::istringstream inc(outc.str());
    auto XC = load_edge_list_space(inc, "c12");
    REQUIRE(XC->product.has_value());
    CHECK(XC->product->dims == std::vector<long long>{12});
}

TEST_CASE("pushforward families match the worked examples") {
    SUBCASE("abelian: conjugation is trivial") {
        auto ext = make_extension_z2();
        auto H = congruence_spec(ext.G, {3, 2});
        auto fam = pushforward_family(ext, {H});
        REQUIRE(fam.on_K.size() == 1);
        CHECK(fam.on_K[0].index() == 2);  // pi(sigma) = {2Z}
        REQUIRE(fam.on_N.size() == 1);
        CHECK(fam.on_N[0].index() == 3);  // sigma-hat = {3Z}
    }
    SUBCASE("dihedral: pi onto K of index 1, sigma-hat = <r^3>") {
        auto ext = make_extension_dihedral();
        auto H = dihedral_spec(ext.G, 3, 0);  // <r^3, s>
        auto fam = pushforward_family(ext, {H});
        REQUIRE(fam.on_K.size() == 1);
        CHECK(fam.on_K[0].index() == 1);
        REQUIRE(fam.on_N.size() == 1);
        CHECK(fam.on_N[0].index() == 3);
    }
    SUBCASE("repeated members are coalesced") {
        auto ext = make_extension_z2();
        auto H = congruence_spec(ext.G, {3, 2});
        auto fam = pushforward_family(ext, {H, H});
        CHECK(fam.on_N.size() == 1);
    }
}

TEST_CASE("index cap raises a resource error") {
    CHECK_THROWS_AS(build_quotient(congruence_spec(make("z"), 1000), 100), ResourceError);
}

TEST_CASE("basepoint is the coset of H and reps are consistent") {
    auto Q = build_quotient(congruence_spec(make("heisenberg3"), 2));
    CHECK(Q.coset_of(Q.spec.host->identity()) == Q.basepoint);
    for (int x = 0; x < Q.size(); ++x) CHECK(Q.coset_of(Q.rep[x]) == x);
}
