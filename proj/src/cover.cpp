#include "boxdim/cover.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace boxdim {

void validate_cover(const Cover& c) {
    if (!c.space) throw std::invalid_argument("cover has no space");
    size_t n = c.space->size();
    std::vector<char> hit(n, 0);
    for (const auto& m : c.members) {
        if (m.empty()) throw std::invalid_argument("empty cover member");
        if (!std::is_sorted(m.begin(), m.end()))
            throw std::invalid_argument("cover member not sorted");
        for (int p : m) {
            if (p < 0 || static_cast<size_t>(p) >= n)
                throw std::invalid_argument("cover member point out of range");
            hit[p] = 1;
        }
    }
    for (size_t p = 0; p < n; ++p)
        if (!hit[p])
            throw std::invalid_argument("point " + std::to_string(p) + " not covered");
}

int multiplicity(const Cover& c) {
    std::vector<int> count(c.space->size(), 0);
    for (const auto& m : c.members)
        for (int p : m) ++count[p];
    return count.empty() ? 0 : *std::max_element(count.begin(), count.end());
}

bool empty_intersections(const Cover& c, int k) {
    size_t n = c.space->size();
    int mcount = static_cast<int>(c.members.size());
    if (k > mcount) return true;
    // Intersect incrementally over k-subsets of members, pruning on empty.
    std::vector<int> chosen;
    std::function<bool(int, std::vector<char>)> rec = [&](int start,
                                                          std::vector<char> common) {
        if (static_cast<int>(chosen.size()) == k) return false;  // nonempty k-fold found
        for (int i = start; i < mcount; ++i) {
            std::vector<char> next(n, 0);
            bool any = false;
            for (int p : c.members[i])
                if (common[p]) {
                    next[p] = 1;
                    any = true;
                }
            if (!any) continue;
            chosen.push_back(i);
            if (!rec(i + 1, std::move(next))) return false;
            chosen.pop_back();
        }
        return true;
    };
    return rec(0, std::vector<char>(n, 1));
}

Rat bound(const Cover& c) {
    Rat best(0);
    for (const auto& m : c.members) best = std::max(best, c.space->diameter_of(m));
    return best;
}

bool lebesgue_at_least(const Cover& c, const Rat& R, size_t clique_cap) {
    size_t n = c.space->size();
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) adj[i][j] = (c.space->d(i, j) <= R);
    // Member bitmap per point for the containment test.
    size_t mcount = c.members.size();
    std::vector<std::vector<char>> in_member(mcount, std::vector<char>(n, 0));
    for (size_t m = 0; m < mcount; ++m)
        for (int p : c.members[m]) in_member[m][p] = 1;

    size_t visited = 0;
    bool ok = true;
    // Bron-Kerbosch with pivoting over the R-proximity graph.
    std::function<void(std::vector<int>&, std::vector<int>, std::vector<int>)> bk =
        [&](std::vector<int>& cur, std::vector<int> cand, std::vector<int> excl) {
            if (!ok) return;
            if (cand.empty() && excl.empty()) {
                if (++visited > clique_cap)
                    throw ResourceError("maximal clique cap exceeded", R);
                for (size_t m = 0; m < mcount; ++m) {
                    bool inside = true;
                    for (int p : cur)
                        if (!in_member[m][p]) {
                            inside = false;
                            break;
                        }
                    if (inside) return;
                }
                ok = false;
                return;
            }
            int pivot = -1;
            size_t best = 0;
            for (int u : cand) {
                size_t deg = 0;
                for (int v : cand)
                    if (adj[u][v] && u != v) ++deg;
                if (pivot == -1 || deg > best) pivot = u, best = deg;
            }
            for (int u : excl) {
                size_t deg = 0;
                for (int v : cand)
                    if (adj[u][v] && u != v) ++deg;
                if (pivot == -1 || deg > best) pivot = u, best = deg;
            }
            std::vector<int> branch;
            for (int v : cand)
                if (v == pivot || !adj[pivot][v]) branch.push_back(v);
            for (int v : branch) {
                std::vector<int> nc, ne;
                for (int w : cand)
                    if (w != v && adj[v][w]) nc.push_back(w);
                for (int w : excl)
                    if (adj[v][w]) ne.push_back(w);
                cur.push_back(v);
                bk(cur, std::move(nc), std::move(ne));
                cur.pop_back();
                if (!ok) return;
                cand.erase(std::find(cand.begin(), cand.end(), v));
                excl.push_back(v);
            }
        };
    std::vector<int> cur, cand(n), excl;
    for (size_t i = 0; i < n; ++i) cand[i] = static_cast<int>(i);
    bk(cur, std::move(cand), std::move(excl));
    return ok;
}

void write_cover(const Cover& c, std::ostream& out) {
    out << "space=" << c.space->label() << " R=" << to_string(c.R)
        << " S=" << to_string(c.S) << "\n";
    for (size_t m = 0; m < c.members.size(); ++m) {
        out << m << ":";
        for (int p : c.members[m]) out << " " << p;
        out << "\n";
    }
}

void write_cover(const Cover& c, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    write_cover(c, out);
}

Cover read_cover(std::istream& in, SpacePtr space, bool ignore_label) {
    Cover c;
    c.space = space;
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("cover file empty");
    std::istringstream hs(line);
    std::string tok;
    while (hs >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) continue;
        std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
        if (key == "space") {
            // The label may contain spaces only if it is the final token set;
            // labels written by this tool are space-free in headers.
            if (!ignore_label && val != space->label())
                throw std::runtime_error("cover header space label mismatch: " + val);
        } else if (key == "R") {
            c.R = parse_rat(val);
        } else if (key == "S") {
            c.S = parse_rat(val);
        }
    }
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw std::runtime_error("bad cover member line: " + line);
        std::istringstream ls(line.substr(colon + 1));
        std::vector<int> pts;
        int p;
        while (ls >> p) pts.push_back(p);
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        c.members.push_back(std::move(pts));
    }
    validate_cover(c);
    return c;
}

Cover read_cover(const std::string& path, SpacePtr space, bool ignore_label) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    return read_cover(in, space, ignore_label);
}

}  // namespace boxdim
