#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "boxdim/ball.hpp"
#include "boxdim/group.hpp"

#include <map>
#include <queue>
#include <random>
#include <set>

using namespace boxdim;

namespace {

// Independent oracle for Heisenberg3: (a,b,c) as the upper-triangular matrix
// [[1,a,c],[0,1,b],[0,0,1]], multiplied with plain matrix arithmetic.
struct HeisMat {
    long long a, b, c;
    friend HeisMat operator*(const HeisMat& x, const HeisMat& y) {
        return {x.a + y.a, x.b + y.b, x.c + y.c + x.a * y.b};
    }
};

GroupElement heis(long long a, long long b, long long c) {
    GroupElement e;
    e.vec = {a, b, c};
    return e;
}

// Independent breadth-first search over the Cayley graph (unit weights),
// using only multiply/identity — no shared code with CayleyEnumerator's
// Dijkstra.
std::map<GroupElement, long long> bfs_ball(const MarkedGroup& g, long long R) {
    std::map<GroupElement, long long> dist;
    std::queue<GroupElement> q;
    dist[g.identity()] = 0;
    q.push(g.identity());
    while (!q.empty()) {
        GroupElement cur = q.front();
        q.pop();
        long long d = dist.at(cur);
        if (d == R) continue;
        for (const auto& mg : g.marked_generators()) {
            GroupElement nb = g.multiply(cur, mg.element);
            if (!dist.count(nb)) {
                dist[nb] = d + 1;
                q.push(nb);
            }
        }
    }
    return dist;
}

}  // namespace

TEST_CASE("free abelian arithmetic is componentwise") {
    MarkedGroup g = MarkedGroup::free_abelian(2);
    GroupElement a, b;
    a.vec = {1, 2};
    b.vec = {3, -2};
    CHECK(g.multiply(a, b).vec == std::vector<long long>{4, 0});
    CHECK(g.is_identity(g.multiply(a, g.inverse(a))));
}

TEST_CASE("Heisenberg commutator is the central element, against the matrix oracle") {
    MarkedGroup g = MarkedGroup::heisenberg3();
    GroupElement x = heis(1, 0, 0), y = heis(0, 1, 0);
    GroupElement comm =
        g.multiply(g.multiply(x, y), g.multiply(g.inverse(x), g.inverse(y)));
    CHECK(comm.vec == std::vector<long long>{0, 0, 1});

    // Random products agree with 3x3 matrix arithmetic.
    std::mt19937 rng(12345);
    std::uniform_int_distribution<long long> coef(-5, 5);
    for (int trial = 0; trial < 200; ++trial) {
        HeisMat ma{coef(rng), coef(rng), coef(rng)};
        HeisMat mb{coef(rng), coef(rng), coef(rng)};
        HeisMat mc = ma * mb;
        GroupElement p = g.multiply(heis(ma.a, ma.b, ma.c), heis(mb.a, mb.b, mb.c));
        CHECK(p.vec == std::vector<long long>{mc.a, mc.b, mc.c});
    }
}

TEST_CASE("infinite dihedral relation s r s = r^-1") {
    MarkedGroup g = MarkedGroup::infinite_dihedral();
    GroupElement r, s;
    r.vec = {1};
    s.vec = {0};
    s.flag = true;
    GroupElement srs = g.multiply(g.multiply(s, r), s);
    CHECK(srs == g.inverse(r));
}

TEST_CASE("word distances match the spec values and the BFS oracle") {
    MarkedGroup z = MarkedGroup::free_abelian(1);
    GroupElement five;
    five.vec = {5};
    CHECK(word_distance(z, z.identity(), five) == Rat(5));

    MarkedGroup h = MarkedGroup::heisenberg3();
    CHECK(word_distance(h, h.identity(), heis(0, 0, 1)) == Rat(4));

    MarkedGroup d = MarkedGroup::infinite_dihedral();
    GroupElement r2s;
    r2s.vec = {2};
    r2s.flag = true;
    CHECK(word_distance(d, d.identity(), r2s) == Rat(3));

    // Full agreement with an independent BFS on a radius-4 Heisenberg ball.
    auto oracle = bfs_ball(h, 4);
    auto ball = cayley_ball(h, Rat(4));
    size_t within = 0;
    for (const auto& [el, dist] : oracle)
        if (dist <= 4) {
            ++within;
            REQUIRE(ball.lengths.count(el));
            CHECK(ball.lengths.at(el) == Rat(dist));
        }
    CHECK(ball.lengths.size() == within);
}

TEST_CASE("word balls: sizes, metric, and required members") {
    MarkedGroup z = MarkedGroup::free_abelian(1);
    auto b3 = word_ball(z, z.identity(), Rat(3));
    REQUIRE(b3.space->size() == 7);
    for (size_t i = 0; i < 7; ++i)
        for (size_t j = 0; j < 7; ++j) {
            long long vi = b3.elements[i].vec[0], vj = b3.elements[j].vec[0];
            CHECK(b3.space->d(i, j) == Rat(std::abs(vi - vj)));
        }

    MarkedGroup h = MarkedGroup::heisenberg3();
    auto oracle = bfs_ball(h, 2);
    size_t count2 = 0;
    for (const auto& [el, dist] : oracle)
        if (dist <= 2) ++count2;
    auto hb = word_ball(h, h.identity(), Rat(2));
    CHECK(hb.space->size() == count2);

    MarkedGroup w = MarkedGroup::wreath_lamp(2);
    auto wb = cayley_ball(w, Rat(2));
    auto lamp_elem = [&](std::vector<std::pair<long long, long long>> lamps,
                         long long shift) {
        GroupElement e;
        e.lamps = std::move(lamps);
        e.shift = shift;
        return e;
    };
    CHECK(wb.lengths.count(lamp_elem({{0, 1}}, 0)));
    CHECK(wb.lengths.count(lamp_elem({}, 1)));
    CHECK(wb.lengths.count(lamp_elem({}, -1)));
    CHECK(wb.lengths.count(lamp_elem({}, 2)));
    CHECK(wb.lengths.count(lamp_elem({}, -2)));
    CHECK(wb.lengths.count(lamp_elem({{0, 1}}, 1)));
    CHECK(wb.lengths.count(lamp_elem({{0, 1}}, -1)));
}

TEST_CASE("right invariance, triangle inequality, and the l1 closed form") {
    MarkedGroup g = MarkedGroup::free_abelian(2);
    auto ball = cayley_ball(g, Rat(3));
    std::vector<GroupElement> pts;
    for (const auto& [el, len] : ball.lengths) pts.push_back(el);
    std::mt19937 rng(777);
    std::uniform_int_distribution<size_t> pick(0, pts.size() - 1);
    for (int trial = 0; trial < 100; ++trial) {
        const auto& a = pts[pick(rng)];
        const auto& b = pts[pick(rng)];
        const auto& k = pts[pick(rng)];
        Rat d = word_distance(g, a, b);
        CHECK(word_distance(g, g.multiply(a, k), g.multiply(b, k)) == d);
        // l1 closed form for Z^2 with standard generators.
        CHECK(d == Rat(std::abs(a.vec[0] - b.vec[0]) + std::abs(a.vec[1] - b.vec[1])));
        CHECK(d <= word_distance(g, a, k) + word_distance(g, k, b));
    }
}

TEST_CASE("ball sizes are finite and monotone in R") {
    MarkedGroup h = MarkedGroup::heisenberg3();
    size_t prev = 0;
    for (long long R = 0; R <= 4; ++R) {
        size_t sz = cayley_ball(h, Rat(R)).lengths.size();
        CHECK(sz >= prev);
        prev = sz;
    }
}

TEST_CASE("wreath support window overflow is a resource error, not truncation") {
    MarkedGroup w = MarkedGroup::wreath_lamp(2, 8);
    GroupElement far, lamp0;
    far.shift = 100;
    lamp0.lamps = {{0, 1}};
    // Shift far out, then light a lamp there: position 100 is outside the
    // configured support window of 8.
    CHECK_THROWS_AS((void)w.multiply(far, lamp0), ResourceError);
}

TEST_CASE("mismatched families raise a domain error") {
    MarkedGroup z = MarkedGroup::free_abelian(1);
    MarkedGroup d = MarkedGroup::infinite_dihedral();
    GroupElement s;
    s.vec = {0};
    s.flag = true;
    CHECK_THROWS(z.multiply(z.identity(), s));
    CHECK_FALSE(z.valid_element(s));
    CHECK(d.valid_element(s));
}

TEST_CASE("group spec parsing: inline and record forms") {
    CHECK(parse_group("z").describe() == "free_abelian(1)");
    CHECK(parse_group("free_abelian(3)").describe() == "free_abelian(3)");
    CHECK(parse_group("finite_cyclic(2,3)").describe() == "finite_cyclic(2,3)");
    CHECK(parse_group("heisenberg3").describe() == "heisenberg3");
    CHECK(parse_group("wreath_lamp(2)").describe() == "wreath_lamp(2)");
    CHECK(parse_group("semidirect_znz(1,1,0,1)").describe() == "semidirect_znz(1,1,0,1)");

    MarkedGroup rec = parse_group(
        "family = free_abelian\n"
        "params = 2\n"
        "generators = (1,0); (0,1); (1,1)\n"
        "weights = 1, 1, 2\n");
    CHECK(rec.describe() == "free_abelian(2)");
    // 3 generators plus inverses.
    CHECK(rec.marked_generators().size() == 6);
    GroupElement diag;
    diag.vec = {1, 1};
    CHECK(word_distance(rec, rec.identity(), diag) == Rat(2));

    CHECK_THROWS_AS(parse_group("no_such_family(3)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_group("family = free_abelian\nparams = 1,2\n"),
                    std::invalid_argument);
}

TEST_CASE("element parsing round-trips through to_string") {
    for (const char* name :
         {"free_abelian(2)", "heisenberg3", "infinite_dihedral", "wreath_lamp(3)",
          "semidirect_znz(1,1,0,1)"}) {
        MarkedGroup g = parse_group(name);
        auto ball = cayley_ball(g, Rat(3));
        for (const auto& [el, len] : ball.lengths)
            CHECK(g.parse_element(g.to_string(el)) == el);
    }
}

TEST_CASE("CayleyEnumerator emits nondecreasing lengths and honors its cap") {
    MarkedGroup g = MarkedGroup::free_abelian(2);
    CayleyEnumerator it(g, 50);
    CayleyEnumerator::Entry e;
    Rat prev(0);
    CHECK_THROWS_AS(
        [&] {
            while (it.next(e)) {
                CHECK(e.length >= prev);
                prev = e.length;
            }
        }(),
        ResourceError);
}
