#include "boxdim/slab.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace boxdim {

namespace {

long long ceil_int(const Rat& r) {
    long long q = r.numerator() / r.denominator();
    if (q * r.denominator() < r.numerator()) ++q;
    return q;
}

// Balanced partition of m into k parts (sizes differ by at most 1).
std::vector<long long> balanced_sizes(long long m, long long k) {
    std::vector<long long> sizes(k, m / k);
    for (long long i = 0; i < m % k; ++i) ++sizes[i];
    return sizes;
}

Cover finish_checked(Cover c, int max_mult, const Rat& max_bound) {
    validate_cover(c);
    if (multiplicity(c) > max_mult)
        throw std::logic_error("slab cover multiplicity above the declared bound");
    Rat S = bound(c);
    if (max_bound >= Rat(0) && S > max_bound)
        throw std::logic_error("slab cover member diameter above the declared bound");
    if (!lebesgue_at_least(c, c.R))
        throw std::logic_error("slab cover fails its Lebesgue guarantee");
    c.S = S;
    return c;
}

Cover cycle_arc_cover(SpacePtr space, const Rat& R, long long m) {
    long long r = std::max<long long>(1, ceil_int(R));
    Cover c;
    c.space = space;
    c.R = R;
    long long k = m / r;
    if (k <= 2) {
        std::vector<int> all(m);
        std::iota(all.begin(), all.end(), 0);
        c.members.push_back(all);
        return finish_checked(std::move(c), 1, Rat(-1));
    }
    auto sizes = balanced_sizes(m, k);
    std::vector<long long> start(k + 1, 0);
    for (long long i = 0; i < k; ++i) start[i + 1] = start[i] + sizes[i];
    for (long long i = 0; i < k; ++i) {
        std::vector<int> arc;
        long long len = sizes[i] + sizes[(i + 1) % k];
        for (long long t = 0; t < len; ++t)
            arc.push_back(static_cast<int>((start[i] + t) % m));
        std::sort(arc.begin(), arc.end());
        c.members.push_back(std::move(arc));
    }
    return finish_checked(std::move(c), 2, Rat(4) * R);
}

}  // namespace

Cover greedy_slab_cover(SpacePtr space, const Rat& R) {
    if (!space->product)
        throw std::invalid_argument("greedy_slab_cover: space has no product structure");
    const auto& dims = space->product->dims;
    size_t n = dims.size();
    if (n == 1) return cycle_arc_cover(space, R, dims[0]);

    long long r = std::max<long long>(1, ceil_int(R));
    long long L = 3 * r;
    Cover c;
    c.space = space;
    c.R = R;
    // Blocks per dimension; a short cycle becomes a single wrap-around block.
    std::vector<long long> blocks(n);
    int effective = 0;
    for (size_t d = 0; d < n; ++d) {
        // The seam-offset argument needs an even number of equal blocks with
        // size in [2r+1, 3r+1]: adjacent rows (including the torus wrap) then
        // differ by exactly L/2, which stays r away from every block edge.
        blocks[d] = 1;
        for (long long s = 2 * r + 1; s <= 3 * r + 1; ++s) {
            if (dims[d] % s != 0) continue;
            long long e = dims[d] / s;
            if (e >= 2 && e % 2 == 0) {
                blocks[d] = e;
                break;
            }
        }
        if (blocks[d] >= 2) ++effective;
    }
    // Enumerate bricks: block index per dim, with each dimension's grid
    // rotated by floor(L/2) * (sum of block indices chosen in earlier dims),
    // so vertical edges of consecutive rows never align within r.
    std::vector<long long> idx(n, 0);
    std::vector<std::pair<long long, long long>> interval(n);  // (start, length) mod dims[d]
    std::function<void(size_t, long long)> rec = [&](size_t d, long long prev_sum) {
        if (d == n) {
            // Inflate by r in the positive direction of every coordinate.
            std::vector<int> member;
            std::vector<long long> coord(n);
            std::function<void(size_t)> emit = [&](size_t e) {
                if (e == n) {
                    member.push_back(static_cast<int>(space->product->point_of(coord)));
                    return;
                }
                auto [st, len] = interval[e];
                long long ext = std::min(dims[e], len + r);
                for (long long t = 0; t < ext; ++t) {
                    coord[e] = (st + t) % dims[e];
                    emit(e + 1);
                }
            };
            emit(0);
            std::sort(member.begin(), member.end());
            member.erase(std::unique(member.begin(), member.end()), member.end());
            c.members.push_back(std::move(member));
            return;
        }
        // Parity offsets: with an even block count every adjacent row pair
        // (torus wrap included) is shifted by exactly L/2.
        long long shift = (L / 2) * (prev_sum % 2);
        auto sizes = balanced_sizes(dims[d], blocks[d]);
        long long start = shift;
        for (long long b = 0; b < blocks[d]; ++b) {
            idx[d] = b;
            interval[d] = {start % dims[d], sizes[b]};
            rec(d + 1, prev_sum + b);
            start += sizes[b];
        }
    };
    rec(0, 0);
    return finish_checked(std::move(c), effective + 1,
                          Rat(4 * static_cast<long long>(n)) * Rat(std::max<long long>(r, 1)));
}

Cover shell_chain_cover(SpacePtr space, const Rat& R) {
    size_t n = space->size();
    Cover c;
    c.space = space;
    c.R = R;
    if (R <= Rat(0)) {
        for (size_t i = 0; i < n; ++i) c.members.push_back({static_cast<int>(i)});
        c.S = Rat(0);
        validate_cover(c);
        return c;
    }
    // Pseudo-peripheral root by a double sweep.
    size_t a = 0;
    for (size_t i = 0; i < n; ++i)
        if (space->d(0, i) > space->d(0, a)) a = i;
    // Bands of f = d(root, .) with width 3R and stride 2R.
    Rat fmax(0);
    for (size_t i = 0; i < n; ++i) fmax = std::max(fmax, space->d(a, i));
    long long nbands = ceil_int(fmax / (Rat(2) * R)) + 1;
    for (long long band = 0; band < nbands; ++band) {
        Rat lo = Rat(2) * R * Rat(band);
        Rat hi = lo + Rat(3) * R;
        std::vector<int> pts;
        for (size_t i = 0; i < n; ++i) {
            const Rat& f = space->d(a, i);
            if (f >= lo && f < hi) pts.push_back(static_cast<int>(i));
        }
        if (pts.empty()) continue;
        // Split the band into R-connected components (union-find).
        std::vector<int> parent(pts.size());
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) {
            return parent[x] == x ? x : parent[x] = find(parent[x]);
        };
        for (size_t i = 0; i < pts.size(); ++i)
            for (size_t j = i + 1; j < pts.size(); ++j)
                if (space->d(pts[i], pts[j]) <= R) parent[find(i)] = find(j);
        std::map<int, std::vector<int>> comps;
        for (size_t i = 0; i < pts.size(); ++i) comps[find(i)].push_back(pts[i]);
        for (auto& [root, comp] : comps) c.members.push_back(std::move(comp));
    }
    return finish_checked(std::move(c), 2, Rat(-1));
}

}  // namespace boxdim
