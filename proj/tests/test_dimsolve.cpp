#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "boxdim/dimsolve.hpp"
#include "boxdim/quotient.hpp"
#include "boxdim/subgroup.hpp"

#include <vector>

using namespace boxdim;

namespace {

GroupPtr make(const char* s) { return std::make_shared<MarkedGroup>(parse_group(s)); }

SpacePtr cycle(long long n) {
    return build_quotient(congruence_spec(make("z"), n)).space;
}

SpacePtr torus(long long a, long long b) {
    return build_quotient(congruence_spec(make("free_abelian(2)"), {a, b})).space;
}

// Independent oracle: try every assignment of points to k color families and
// accept when each family's R-components have diameter <= S. Exponential, so
// only for spaces with <= 9 points.
bool colorable_naive(const FiniteMetricSpace& X, int k, const Rat& R, const Rat& S) {
    size_t n = X.size();
    std::vector<int> color(n, 0);
    while (true) {
        bool ok = true;
        for (int c = 0; c < k && ok; ++c) {
            std::vector<int> cls;
            for (size_t i = 0; i < n; ++i)
                if (color[i] == c) cls.push_back(static_cast<int>(i));
            if (cls.empty()) continue;
            auto sub = X.restrict(cls, "cls");
            for (const auto& comp : sub.scale_components(R))
                if (sub.diameter_of(comp) > S) ok = false;
        }
        if (ok) return true;
        size_t i = 0;
        while (i < n && color[i] == k - 1) color[i++] = 0;
        if (i == n) return false;
        ++color[i];
    }
}

int min_colors_naive(const FiniteMetricSpace& X, const Rat& R, const Rat& S) {
    for (int k = 1;; ++k)
        if (colorable_naive(X, k, R, S)) return k;
}

}  // namespace

TEST_CASE("exact_min_colors equals the exhaustive oracle on small spaces") {
    std::vector<SpacePtr> spaces = {cycle(5), cycle(7), cycle(9), torus(3, 3),
                                    torus(2, 4)};
    std::vector<std::pair<Rat, Rat>> params = {{Rat(1), Rat(1)}, {Rat(1), Rat(2)},
                                               {Rat(2), Rat(3)}, {Rat(1), Rat(4)}};
    for (const auto& X : spaces)
        for (const auto& [R, S] : params) {
            auto w = exact_min_colors(X, R, S);
            INFO(X->label(), " R=", R, " S=", S);
            CHECK(w.exact);
            CHECK(w.value == min_colors_naive(*X, R, S));
            validate_coloring(w);
        }
}

TEST_CASE("coloring worked examples") {
    SUBCASE("C12 at (R,S) = (3,5) needs exactly two families") {
        auto w = exact_min_colors(cycle(12), Rat(3), Rat(5));
        CHECK(w.value == 2);
        CHECK(w.exact);
        validate_coloring(w);
    }
    SUBCASE("diameter within the bound means one family") {
        auto w = exact_min_colors(cycle(8), Rat(1), Rat(4));
        CHECK(w.value == 1);
        CHECK(w.exact);
    }
    SUBCASE("two points far apart at a large scale") {
        auto X = cycle(2);
        CHECK(exact_min_colors(X, Rat(1), Rat(1)).value == 1);
        CHECK(exact_min_colors(X, Rat(1), Rat(0)).value == 2);
    }
}

TEST_CASE("colorings convert to verified covers") {
    auto w = exact_min_colors(cycle(12), Rat(3), Rat(5));
    auto c = colors_to_cover(w);
    validate_cover(c);
    CHECK(multiplicity(c) <= w.value);
    CHECK(bound(c) <= w.S + w.R);
    CHECK(lebesgue_at_least(c, w.R / 2));
}

TEST_CASE("validate_coloring rejects tampered witnesses") {
    auto w = exact_min_colors(cycle(12), Rat(3), Rat(5));
    SUBCASE("oversized cluster") {
        auto bad = w;
        bad.S = Rat(2);
        CHECK_THROWS_AS(validate_coloring(bad), std::invalid_argument);
    }
    SUBCASE("merged families") {
        auto bad = w;
        for (auto& c : bad.color_of_member) c = 0;
        CHECK_THROWS_AS(validate_coloring(bad), std::invalid_argument);
    }
}

TEST_CASE("exact minimal multiplicity in the declared shape classes") {
    SUBCASE("C12 arcs at (3,5): two") {
        auto w = exact_min_multiplicity(cycle(12), Rat(3), Rat(5), CoverShape::Arcs);
        CHECK(w.value == 2);
        CHECK(w.exact);
        validate_cover(w.certificate);
        CHECK(multiplicity(w.certificate) == 2);
        CHECK(bound(w.certificate) <= Rat(5));
        CHECK(lebesgue_at_least(w.certificate, Rat(3)));
    }
    SUBCASE("C4 arcs at (1,3): two") {
        CHECK(exact_min_multiplicity(cycle(4), Rat(1), Rat(3), CoverShape::Arcs).value == 2);
    }
    SUBCASE("arc and subset searches agree on tiny cycles") {
        // Only cycles of diameter > S: below that the subset search may use
        // the whole space as a single member, which is never a proper arc.
        for (long long n : {6, 7, 8}) {
            auto a = exact_min_multiplicity(cycle(n), Rat(1), Rat(2), CoverShape::Arcs);
            auto b = exact_min_multiplicity(cycle(n), Rat(1), Rat(2),
                                            CoverShape::AllSubsets);
            CHECK(a.value == b.value);
        }
    }
    SUBCASE("one-point space") {
        auto X = build_quotient(full_spec(make("free_abelian(2)"))).space;
        REQUIRE(X->size() == 1);
        CHECK(exact_min_multiplicity(X, Rat(1), Rat(1), CoverShape::AllSubsets).value == 1);
    }
    SUBCASE("arcs need a cycle structure") {
        auto H = make("heisenberg3");
        auto X = build_quotient(congruence_spec(H, 2)).space;
        CHECK_THROWS_AS(exact_min_multiplicity(X, Rat(1), Rat(1), CoverShape::Arcs),
                        std::invalid_argument);
    }
}

TEST_CASE("monotonicity of the minimum in R and S") {
    auto X = cycle(12);
    std::vector<Rat> Rs = {Rat(1), Rat(2), Rat(3)};
    std::vector<Rat> Ss = {Rat(2), Rat(3), Rat(5), Rat(7)};
    for (size_t i = 0; i < Rs.size(); ++i)
        for (size_t j = 0; j + 1 < Ss.size(); ++j) {
            CHECK(exact_min_colors(X, Rs[i], Ss[j]).value >=
                  exact_min_colors(X, Rs[i], Ss[j + 1]).value);
            if (i + 1 < Rs.size())
                CHECK(exact_min_colors(X, Rs[i], Ss[j]).value <=
                      exact_min_colors(X, Rs[i + 1], Ss[j]).value);
        }
}

TEST_CASE("long cycles admit no single-family certificate") {
    // m > 2(S+1) forces at least two arc families at any positive scale.
    for (long long m : {8, 10, 12, 16}) {
        Rat S(2);
        REQUIRE(m > 2 * (2 + 1));
        CHECK(exact_min_multiplicity(cycle(m), Rat(1), S, CoverShape::Arcs).value >= 2);
        CHECK(exact_min_colors(cycle(m), Rat(1), S).value >= 2);
    }
}

TEST_CASE("multiplicity-one bound equals the component diameter") {
    CHECK(min_bound_multiplicity_one(*cycle(12), Rat(1)) == Rat(6));
    // At R = 0 every point is its own component.
    CHECK(min_bound_multiplicity_one(*cycle(12), Rat(0)) == Rat(0));
}

TEST_CASE("uniform profiles over cycle families") {
    SUBCASE("large cycles: n = 1 with a proven lower bound") {
        std::vector<SpacePtr> fam = {cycle(16), cycle(32), cycle(64)};
        auto p = dim_profile(fam, Rat(2), Rat(8));
        CHECK(p.n == 1);
        CHECK(p.lower_bound_proven);
        CHECK(p.S <= Rat(8));
        REQUIRE(p.witnesses.size() == fam.size());
        for (size_t i = 0; i < fam.size(); ++i) {
            validate_cover(p.witnesses[i]);
            CHECK(multiplicity(p.witnesses[i]) <= 2);
            CHECK(bound(p.witnesses[i]) <= p.S);
            CHECK(lebesgue_at_least(p.witnesses[i], Rat(2)));
        }
    }
    SUBCASE("small diameters: n = 0") {
        std::vector<SpacePtr> fam = {cycle(3), cycle(4), cycle(6)};
        auto p = dim_profile(fam, Rat(1), Rat(3));
        CHECK(p.n == 0);
    }
}
