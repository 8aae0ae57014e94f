#include "boxdim/dimsolve.hpp"

#include "boxdim/slab.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace boxdim {

namespace {

long long ceil_int(const Rat& r) {
    long long q = r.numerator() / r.denominator();
    if (q * r.denominator() < r.numerator()) ++q;
    return q;
}

// Points ordered by decreasing eccentricity, ties by index (deterministic).
std::vector<int> eccentricity_order(const FiniteMetricSpace& X) {
    size_t n = X.size();
    std::vector<Rat> ecc(n, Rat(0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) ecc[i] = std::max(ecc[i], X.d(i, j));
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return ecc[a] > ecc[b]; });
    return order;
}

enum class TriState { Feasible, Infeasible, Unknown };

// DFS for a k-coloring where every R-component of a color class has
// diameter <= S. Branches on the point with the most already-colored
// R-neighbors, propagates forced colors to a fixpoint, and undoes work via
// an assignment trail. The first point is pinned to color 0.
class ColorSearch {
  public:
    ColorSearch(const FiniteMetricSpace& X, const std::vector<int>& order, int k,
                const Rat& R, const Rat& S, size_t budget)
        : X_(X), order_(order), k_(k), R_(R), S_(S), budget_(budget),
          n_(X.size()), colors_(X.size(), -1) {
        near_.assign(n_, {});
        for (size_t i = 0; i < n_; ++i)
            for (size_t j = 0; j < n_; ++j)
                if (i != j && X_.d(i, j) <= R_) near_[i].push_back(static_cast<int>(j));
    }

    TriState run(std::vector<int>& out) {
        std::vector<int> trail;
        assign(order_[0], 0, trail);
        TriState res = dfs();
        if (res == TriState::Feasible) out = colors_;
        return res;
    }

  private:
    // Diameter check of the R-component of p inside color class c, assuming
    // colors_[p] is already set to c.
    bool component_ok(int p) {
        int c = colors_[p];
        std::vector<int> comp{p};
        std::vector<char> in_comp(n_, 0);
        in_comp[p] = 1;
        for (size_t head = 0; head < comp.size(); ++head)
            for (int q : near_[comp[head]])
                if (!in_comp[q] && colors_[q] == c) {
                    in_comp[q] = 1;
                    comp.push_back(q);
                }
        for (size_t a = 0; a < comp.size(); ++a)
            for (size_t b = a + 1; b < comp.size(); ++b)
                if (X_.d(comp[a], comp[b]) > S_) return false;
        return true;
    }

    bool color_allowed(int p, int c) {
        colors_[p] = c;
        bool ok = component_ok(p);
        colors_[p] = -1;
        return ok;
    }

    void assign(int p, int c, std::vector<int>& trail) {
        colors_[p] = c;
        trail.push_back(p);
        --assigned_left_;
    }

    void undo(std::vector<int>& trail, size_t mark) {
        while (trail.size() > mark) {
            colors_[trail.back()] = -1;
            trail.pop_back();
            ++assigned_left_;
        }
    }

    // Forced-assignment propagation; returns false on a dead end.
    bool propagate(std::vector<int>& trail) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t p = 0; p < n_; ++p) {
                if (colors_[p] != -1) continue;
                bool frontier = false;
                for (int q : near_[p])
                    if (colors_[q] != -1) {
                        frontier = true;
                        break;
                    }
                if (!frontier) continue;
                int valid = -1, count = 0;
                for (int c = 0; c < k_; ++c)
                    if (color_allowed(static_cast<int>(p), c)) {
                        valid = c;
                        if (++count > 1) break;
                    }
                if (count == 0) return false;
                if (count == 1) {
                    if (budget_ == 0) return false;
                    --budget_;
                    assign(static_cast<int>(p), valid, trail);
                    changed = true;
                }
            }
        }
        return true;
    }

    int pick_branch_point() const {
        int best = -1, best_score = -1;
        for (size_t p = 0; p < n_; ++p) {
            if (colors_[p] != -1) continue;
            int score = 0;
            for (int q : near_[p])
                if (colors_[q] != -1) ++score;
            if (score > best_score) {
                best_score = score;
                best = static_cast<int>(p);
            }
        }
        return best;
    }

    TriState dfs() {
        if (budget_ == 0) return TriState::Unknown;
        --budget_;
        std::vector<int> trail;
        if (!propagate(trail)) {
            undo(trail, 0);
            return TriState::Infeasible;
        }
        if (assigned_left_ == 0) return TriState::Feasible;
        int p = pick_branch_point();
        bool unknown = false;
        for (int c = 0; c < k_; ++c) {
            if (!color_allowed(p, c)) continue;
            size_t mark = trail.size();
            assign(p, c, trail);
            TriState res = dfs();
            if (res == TriState::Feasible) return res;
            if (res == TriState::Unknown) unknown = true;
            undo(trail, mark);
            if (budget_ == 0) unknown = true;
            if (unknown) break;
        }
        undo(trail, 0);
        return unknown ? TriState::Unknown : TriState::Infeasible;
    }

    const FiniteMetricSpace& X_;
    const std::vector<int>& order_;
    int k_;
    Rat R_, S_;
    size_t budget_;
    size_t n_;
    std::vector<int> colors_;
    std::vector<std::vector<int>> near_;
    size_t assigned_left_ = 0;

  public:
    void init_counters() { assigned_left_ = n_; }
};

TriState try_colors(const FiniteMetricSpace& X, const std::vector<int>& order, int k,
                    const Rat& R, const Rat& S, size_t& budget, std::vector<int>& colors) {
    ColorSearch cs(X, order, k, R, S, budget);
    cs.init_counters();
    return cs.run(colors);
}

// Clusters (R-components per color class) of a complete coloring.
std::pair<std::vector<std::vector<int>>, std::vector<int>> clusters_of(
    const FiniteMetricSpace& X, const std::vector<int>& colors, const Rat& R) {
    size_t n = X.size();
    std::vector<std::vector<int>> members;
    std::vector<int> member_color;
    std::vector<char> done(n, 0);
    for (size_t i = 0; i < n; ++i) {
        if (done[i]) continue;
        int c = colors[i];
        std::vector<int> comp{static_cast<int>(i)};
        done[i] = 1;
        for (size_t head = 0; head < comp.size(); ++head)
            for (size_t q = 0; q < n; ++q)
                if (!done[q] && colors[q] == c && X.d(comp[head], q) <= R) {
                    done[q] = 1;
                    comp.push_back(static_cast<int>(q));
                }
        std::sort(comp.begin(), comp.end());
        members.push_back(std::move(comp));
        member_color.push_back(c);
    }
    return {members, member_color};
}

}  // namespace

Rat min_bound_multiplicity_one(const FiniteMetricSpace& X, const Rat& R) {
    Rat best(0);
    for (const auto& comp : X.scale_components(R))
        best = std::max(best, X.diameter_of(comp));
    return best;
}

ScaleDimWitness exact_min_colors(SpacePtr X, const Rat& R, const Rat& S,
                                 size_t node_cap) {
    ScaleDimWitness w;
    w.space_label = X->label();
    w.R = R;
    w.S = S;
    w.kind = "coloring";
    auto order = eccentricity_order(*X);
    std::vector<int> colors;
    bool any_unknown = false;
    size_t budget = node_cap;  // shared across the k-loop
    for (int k = 1; k <= static_cast<int>(X->size()); ++k) {
        TriState res = budget > 0 ? try_colors(*X, order, k, R, S, budget, colors)
                                  : TriState::Unknown;
        if (res == TriState::Unknown) {
            any_unknown = true;
            if (budget > 0) continue;
            // Budget exhausted: greedy first-fit still yields a valid (not
            // necessarily minimal) coloring as an upper-bound witness.
            int n = X->size();
            colors.assign(n, -1);
            for (int p : order) {
                for (int c = 0;; ++c) {
                    colors[p] = c;
                    // The merged R-component of p within color c must have
                    // diameter <= S; a fresh color always works.
                    std::vector<int> comp{p};
                    bool grew = true;
                    while (grew) {
                        grew = false;
                        for (int q = 0; q < n; ++q) {
                            if (colors[q] != c ||
                                std::find(comp.begin(), comp.end(), q) != comp.end())
                                continue;
                            for (int x : comp)
                                if (X->d(x, q) <= R) {
                                    comp.push_back(q);
                                    grew = true;
                                    break;
                                }
                        }
                    }
                    if (X->diameter_of(comp) <= S) break;
                    colors[p] = -1;
                }
            }
            res = TriState::Feasible;
            k = 1 + *std::max_element(colors.begin(), colors.end());
        }
        if (res == TriState::Infeasible) continue;
        w.value = k;
        w.exact = !any_unknown;
        auto [members, member_color] = clusters_of(*X, colors, R);
        w.certificate.space = X;
        w.certificate.members = std::move(members);
        w.certificate.R = R;
        w.certificate.S = S;
        w.color_of_member = std::move(member_color);
        validate_coloring(w);
        return w;
    }
    throw std::runtime_error("exact_min_colors: no coloring found (unreachable)");
}

void validate_coloring(const ScaleDimWitness& w) {
    if (w.kind != "coloring") throw std::invalid_argument("witness is not a coloring");
    validate_cover(w.certificate);
    const auto& X = *w.certificate.space;
    const auto& members = w.certificate.members;
    if (w.color_of_member.size() != members.size())
        throw std::invalid_argument("coloring: missing member colors");
    int maxc = 0;
    for (size_t i = 0; i < members.size(); ++i) {
        maxc = std::max(maxc, w.color_of_member[i] + 1);
        if (X.diameter_of(members[i]) > w.S)
            throw std::invalid_argument("coloring: cluster diameter above S");
        for (size_t j = i + 1; j < members.size(); ++j) {
            if (w.color_of_member[i] != w.color_of_member[j]) continue;
            for (int a : members[i])
                for (int b : members[j])
                    if (X.d(a, b) <= w.R)
                        throw std::invalid_argument(
                            "coloring: same-family clusters within R");
        }
    }
    if (maxc > w.value) throw std::invalid_argument("coloring: more families than value");
}

Cover colors_to_cover(const ScaleDimWitness& w) {
    validate_coloring(w);
    const auto& X = *w.certificate.space;
    Rat half = w.R / Rat(2);
    Cover c;
    c.space = w.certificate.space;
    c.R = half;
    for (const auto& cluster : w.certificate.members) {
        std::vector<int> member;
        for (size_t p = 0; p < X.size(); ++p) {
            for (int q : cluster)
                if (X.d(p, q) <= half) {
                    member.push_back(static_cast<int>(p));
                    break;
                }
        }
        c.members.push_back(std::move(member));
    }
    validate_cover(c);
    if (multiplicity(c) > w.value)
        throw std::logic_error("colors_to_cover: multiplicity above color count");
    c.S = bound(c);
    if (c.S > w.S + w.R)
        throw std::logic_error("colors_to_cover: bound above S+R");
    if (!lebesgue_at_least(c, half))
        throw std::logic_error("colors_to_cover: Lebesgue below R/2");
    return c;
}

namespace {

// Arc [start, start+len) on the cycle of size m, as a sorted point set.
std::vector<int> arc_points(long long m, long long start, long long len) {
    std::vector<int> pts;
    for (long long t = 0; t < len; ++t)
        pts.push_back(static_cast<int>(((start + t) % m + m) % m));
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

bool cover_passes(const Cover& c, int max_mult, const Rat& R, const Rat& S) {
    try {
        validate_cover(c);
    } catch (const std::invalid_argument&) {
        return false;
    }
    return multiplicity(c) <= max_mult && bound(c) <= S && lebesgue_at_least(c, R);
}

// Multiplicity-2 arc cover search: overlapping arcs of length L at stride t,
// checker-verified; lengths from large to small for fat members first.
std::optional<Cover> find_mult2_arcs(SpacePtr X, long long m, const Rat& R,
                                     const Rat& S) {
    long long Lmax = std::min<long long>(m - 1, ceil_int(S) + 1);
    long long r = std::max<long long>(1, ceil_int(R));
    for (long long L = Lmax; L >= 2; --L) {
        for (long long t = L - r; t >= 1; --t) {
            long long k = (m + t - 1) / t;
            if (k < 2) continue;
            Cover c;
            c.space = X;
            c.R = R;
            for (long long i = 0; i < k; ++i) c.members.push_back(arc_points(m, i * t, L));
            if (cover_passes(c, 2, R, S)) {
                c.S = bound(c);
                return c;
            }
        }
    }
    // Block-pair arcs (balanced blocks of size >= r, member = two blocks).
    long long k = m / r;
    if (k >= 3) {
        std::vector<long long> sizes(k, m / k);
        for (long long i = 0; i < m % k; ++i) ++sizes[i];
        std::vector<long long> start(k + 1, 0);
        for (long long i = 0; i < k; ++i) start[i + 1] = start[i] + sizes[i];
        Cover c;
        c.space = X;
        c.R = R;
        for (long long i = 0; i < k; ++i)
            c.members.push_back(arc_points(m, start[i], sizes[i] + sizes[(i + 1) % k]));
        if (cover_passes(c, 2, R, S)) {
            c.S = bound(c);
            return c;
        }
    }
    return std::nullopt;
}

// Exhaustive minimal-multiplicity search over all-subset covers: every
// maximal R-clique is assigned to a member (members are unions of their
// cliques of diameter <= S). Only for very small spaces.
int all_subsets_search(const FiniteMetricSpace& X, const Rat& R, const Rat& S,
                       std::vector<std::vector<int>>& best_members, size_t cap) {
    size_t n = X.size();
    if (n > 16) throw ResourceError("all-subsets search limited to 16 points", Rat(0));
    // Maximal cliques of the R-proximity graph, via bitmask expansion.
    std::vector<unsigned> cliques;
    std::vector<unsigned> adj(n, 0);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (X.d(i, j) <= R) adj[i] |= 1u << j;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        bool clique = true;
        for (size_t i = 0; i < n && clique; ++i)
            if (mask & (1u << i))
                if ((mask & adj[i]) != mask) clique = false;
        if (!clique) continue;
        bool maximal = true;
        for (size_t v = 0; v < n && maximal; ++v)
            if (!(mask & (1u << v)) && (mask & adj[v]) == mask) maximal = false;
        if (maximal) cliques.push_back(mask);
    }
    auto diam_ok = [&](unsigned mask) {
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j)
                if ((mask & (1u << i)) && (mask & (1u << j)) && X.d(i, j) > S)
                    return false;
        return true;
    };
    int best = static_cast<int>(cliques.size()) + 1;
    std::vector<unsigned> members;
    size_t nodes = 0;
    std::function<void(size_t)> rec = [&](size_t ci) {
        if (++nodes > cap) throw ResourceError("all-subsets search cap exceeded", Rat(0));
        std::vector<int> count(n, 0);
        for (unsigned mem : members)
            for (size_t p = 0; p < n; ++p)
                if (mem & (1u << p)) ++count[p];
        int mult = 0;
        for (size_t p = 0; p < n; ++p) mult = std::max(mult, count[p]);
        if (mult >= best) return;
        if (ci == cliques.size()) {
            best = std::max(mult, 1);
            best_members.clear();
            for (unsigned mem : members) {
                std::vector<int> pts;
                for (size_t p = 0; p < n; ++p)
                    if (mem & (1u << p)) pts.push_back(static_cast<int>(p));
                best_members.push_back(std::move(pts));
            }
            return;
        }
        unsigned cq = cliques[ci];
        for (size_t mi = 0; mi < members.size(); ++mi) {
            unsigned merged = members[mi] | cq;
            if (!diam_ok(merged)) continue;
            unsigned saved = members[mi];
            members[mi] = merged;
            rec(ci + 1);
            members[mi] = saved;
        }
        if (diam_ok(cq)) {
            members.push_back(cq);
            rec(ci + 1);
            members.pop_back();
        }
    };
    rec(0);
    if (best > static_cast<int>(cliques.size()))
        throw std::runtime_error("no S-bounded cover exists for this R");
    return best;
}

}  // namespace

ScaleDimWitness exact_min_multiplicity(SpacePtr X, const Rat& R, const Rat& S,
                                       CoverShape shape, size_t cap) {
    ScaleDimWitness w;
    w.space_label = X->label();
    w.R = R;
    w.S = S;
    w.kind = "cover";
    size_t n = X->size();
    if (n == 1) {
        w.value = 1;
        w.certificate = {X, {{0}}, R, Rat(0)};
        return w;
    }
    if (shape == CoverShape::AllSubsets) {
        std::vector<std::vector<int>> members;
        w.value = all_subsets_search(*X, R, S, members, cap);
        w.certificate = {X, std::move(members), R, S};
        validate_cover(w.certificate);
        w.certificate.S = bound(w.certificate);
        return w;
    }
    // Arcs: members are proper cyclic intervals of a single cycle.
    if (!X->product || X->product->dims.size() != 1)
        throw std::invalid_argument("arcs shape requires a cycle structure");
    long long m = X->product->dims[0];
    // Smallest positive distance decides whether scale R is trivial.
    Rat minpos(-1);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (minpos < Rat(0) || X->d(i, j) < minpos) minpos = X->d(i, j);
    if (R < minpos) {
        // Singleton partition: Lebesgue >= R holds vacuously.
        w.value = 1;
        w.certificate.space = X;
        w.certificate.R = R;
        for (size_t i = 0; i < n; ++i)
            w.certificate.members.push_back({static_cast<int>(i)});
        w.certificate.S = Rat(0);
        return w;
    }
    // Multiplicity 1 needs a partition into proper arcs; with >= 2 arcs some
    // boundary pair (distance minpos <= R) straddles two members, violating
    // the Lebesgue condition. Hence the minimum is at least 2.
    auto two = find_mult2_arcs(X, m, R, S);
    if (two) {
        w.value = 2;
        w.certificate = std::move(*two);
        return w;
    }
    throw std::runtime_error(
        "exact_min_multiplicity: no multiplicity-2 arc cover found for these parameters");
}

DimProfile dim_profile(const std::vector<SpacePtr>& family, const Rat& R,
                       const Rat& S_cap, size_t color_node_cap) {
    return dim_profile(family, R, S_cap, color_node_cap, {});
}

DimProfile dim_profile(const std::vector<SpacePtr>& family, const Rat& R,
                       const Rat& S_cap, size_t color_node_cap,
                       const std::vector<std::vector<Cover>>& hints) {
    DimProfile prof;
    bool zero_excluded = false;
    for (size_t xi = 0; xi < family.size(); ++xi) {
        const auto& X = family[xi];
        Cover chosen;
        int mult_used = 0;
        // n = 0: the exact minimal bound of a multiplicity-1 cover is the
        // largest R-component diameter.
        Rat m1 = min_bound_multiplicity_one(*X, R);
        if (m1 <= S_cap) {
            chosen.space = X;
            chosen.R = R;
            for (auto& comp : X->scale_components(R)) {
                std::sort(comp.begin(), comp.end());
                chosen.members.push_back(comp);
            }
            chosen.S = bound(chosen);
            if (!lebesgue_at_least(chosen, R))
                throw std::logic_error("component cover fails Lebesgue check");
            mult_used = 1;
        } else {
            zero_excluded = true;
        }
        if (mult_used == 0 && xi < hints.size()) {
            for (const Cover& cand : hints[xi]) {
                if (cand.space != X) continue;
                try {
                    validate_cover(cand);
                } catch (const std::invalid_argument&) {
                    continue;
                }
                if (bound(cand) > S_cap || !lebesgue_at_least(cand, R)) continue;
                int m = multiplicity(cand);
                if (mult_used == 0 || m < mult_used) {
                    chosen = cand;
                    chosen.S = bound(cand);
                    mult_used = m;
                }
            }
        }
        if (mult_used == 0 && X->product) {
            try {
                Cover c = greedy_slab_cover(X, R);
                if (c.S <= S_cap) {
                    chosen = std::move(c);
                    mult_used = multiplicity(chosen);
                }
            } catch (const std::exception&) {
            }
        }
        if (mult_used == 0) {
            try {
                Cover c = shell_chain_cover(X, R);
                if (c.S <= S_cap) {
                    chosen = std::move(c);
                    mult_used = multiplicity(chosen);
                }
            } catch (const std::exception&) {
            }
        }
        if (mult_used == 0) {
            // Coloring fallback: k families at scale 2R give Lebesgue >= R
            // and bound <= S_color + 2R after inflation.
            Rat Sc = S_cap - Rat(2) * R;
            if (Sc < Rat(0))
                throw std::runtime_error("dim_profile: S budget below 2R");
            auto col = exact_min_colors(X, Rat(2) * R, Sc, color_node_cap);
            Cover c = colors_to_cover(col);
            c.R = R;  // inflation by R certifies Lebesgue >= R as well
            if (!lebesgue_at_least(c, R))
                throw std::logic_error("inflated coloring fails Lebesgue at R");
            chosen = std::move(c);
            mult_used = multiplicity(chosen);
        }
        prof.n = std::max(prof.n, mult_used - 1);
        prof.S = std::max(prof.S, bound(chosen));
        prof.witnesses.push_back(std::move(chosen));
    }
    prof.lower_bound_proven = (prof.n == 0) || (prof.n == 1 && zero_excluded);
    return prof;
}

}  // namespace boxdim
