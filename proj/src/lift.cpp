#include "boxdim/lift.hpp"

#include "boxdim/separation.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace boxdim {

LiftedCover lift_cover(GroupPtr G, const FiniteQuotient& Q, const Cover& U,
                       const WordBall& W, const Rat& S) {
    if (Q.spec.host != G)
        throw std::invalid_argument("lift_cover: Q is not a quotient of G");
    if (U.space != Q.space)
        throw std::invalid_argument("lift_cover: U does not cover Q");
    validate_cover(U);
    if (bound(U) > S)
        throw std::invalid_argument("lift_cover: U is not S-bounded");
    Rat inj = injectivity_radius(Q);
    if (inj < Rat(3) * S)
        throw std::invalid_argument(
            "lift_cover: quotient map injectivity radius is " + to_string(inj) +
            ", need >= 3S = " + to_string(Rat(3) * S));
    if (W.radius < S)
        throw std::invalid_argument("lift_cover: window radius below the S-margin");
    Rat nominal = W.radius - S;

    size_t nw = W.elements.size();
    std::vector<int> pi(nw);  // window point -> coset
    for (size_t w = 0; w < nw; ++w) pi[w] = Q.coset_of(W.elements[w]);

    LiftedCover lc;
    lc.nominal_radius = nominal;
    lc.cover.space = W.space;
    lc.cover.R = U.R;
    for (size_t j = 0; j < U.members.size(); ++j) {
        std::vector<char> in_member(Q.size(), 0);
        for (int q : U.members[j]) in_member[q] = 1;
        std::vector<int> pts;
        for (size_t w = 0; w < nw; ++w)
            if (in_member[pi[w]]) pts.push_back(static_cast<int>(w));
        if (pts.empty()) continue;
        // Sheets: components of the "distance <= S" relation. The 3S
        // injectivity radius forces a gap — preimages of the same member are
        // either within S (one sheet) or more than 3S apart — so the
        // components are exactly the sheets.
        std::vector<int> parent(pts.size());
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) {
            return parent[x] == x ? x : parent[x] = find(parent[x]);
        };
        for (size_t a = 0; a < pts.size(); ++a)
            for (size_t b = a + 1; b < pts.size(); ++b)
                if (W.space->d(pts[a], pts[b]) <= S) parent[find(a)] = find(b);
        std::vector<std::vector<int>> sheets(pts.size());
        for (size_t a = 0; a < pts.size(); ++a) sheets[find(a)].push_back(pts[a]);
        for (auto& sheet : sheets) {
            if (sheet.empty()) continue;
            // Isometric lifting: within a sheet, window distances must equal
            // the quotient distances of the images (this also certifies the
            // diameter equality and that no two sheet points share an image).
            for (size_t a = 0; a < sheet.size(); ++a)
                for (size_t b = a + 1; b < sheet.size(); ++b)
                    if (W.space->d(sheet[a], sheet[b]) != Q.dist(pi[sheet[a]], pi[sheet[b]]))
                        throw std::logic_error("lift_cover: sheet is not isometric to its image");
            lc.cover.members.push_back(std::move(sheet));
            lc.base_member.push_back(static_cast<int>(j));
        }
    }

    validate_cover(lc.cover);
    if (multiplicity(lc.cover) > multiplicity(U))
        throw std::logic_error("lift_cover: multiplicity exceeds the base cover's");
    lc.cover.S = bound(lc.cover);
    if (lc.cover.S > S)
        throw std::logic_error("lift_cover: bound exceeds S");

    // Lebesgue >= R on the nominal window: restrict both the space and the
    // members to points within the nominal radius; containment of a nominal
    // subset in a restricted member is containment in the full member.
    int center_idx = -1;
    for (size_t w = 0; w < nw; ++w)
        if (W.elements[w] == W.center) center_idx = static_cast<int>(w);
    if (center_idx < 0) throw std::logic_error("lift_cover: window lost its center");
    std::vector<int> nominal_pts;
    std::vector<int> new_index(nw, -1);
    for (size_t w = 0; w < nw; ++w)
        if (W.space->d(center_idx, w) <= nominal) {
            new_index[w] = static_cast<int>(nominal_pts.size());
            nominal_pts.push_back(static_cast<int>(w));
        }
    Cover restricted;
    restricted.space = std::make_shared<FiniteMetricSpace>(
        W.space->restrict(nominal_pts, W.space->label() + "|nominal"));
    restricted.R = U.R;
    for (const auto& member : lc.cover.members) {
        std::vector<int> cut;
        for (int w : member)
            if (new_index[w] >= 0) cut.push_back(new_index[w]);
        if (!cut.empty()) restricted.members.push_back(std::move(cut));
    }
    validate_cover(restricted);
    if (!lebesgue_at_least(restricted, U.R))
        throw std::logic_error("lift_cover: Lebesgue guarantee fails on the nominal window");
    return lc;
}

}  // namespace boxdim
