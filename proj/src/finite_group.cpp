#include "boxdim/finite_group.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace boxdim {

std::shared_ptr<FiniteGroup> FiniteGroup::closure(const std::vector<Code>& generators,
                                                  MulFn mul, InvFn inv, Code identity,
                                                  size_t element_cap) {
    std::set<Code> seen{identity};
    std::deque<Code> frontier{identity};
    std::vector<Code> gens = generators;
    for (const auto& g : generators) gens.push_back(inv(g));
    while (!frontier.empty()) {
        Code c = frontier.front();
        frontier.pop_front();
        for (const auto& g : gens) {
            Code p = mul(c, g);
            if (seen.insert(p).second) {
                if (seen.size() > element_cap)
                    throw std::runtime_error("finite group closure exceeds element cap");
                frontier.push_back(p);
            }
        }
    }
    auto out = std::make_shared<FiniteGroup>();
    out->codes_.assign(seen.begin(), seen.end());
    for (int i = 0; i < out->size(); ++i) out->index_[out->codes_[i]] = i;
    out->mul_ = std::move(mul);
    out->inv_ = std::move(inv);
    out->id_ = out->index_.at(identity);
    return out;
}

int FiniteGroup::mul(int a, int b) const { return index_.at(mul_(codes_[a], codes_[b])); }

int FiniteGroup::inv(int a) const { return index_.at(inv_(codes_[a])); }

int FiniteGroup::index_of(const Code& c) const {
    auto it = index_.find(c);
    if (it == index_.end()) throw std::out_of_range("code not in finite group");
    return it->second;
}

bool FiniteGroup::is_subgroup(const std::vector<int>& elems) const {
    std::set<int> s(elems.begin(), elems.end());
    if (!s.count(id_)) return false;
    for (int a : s) {
        if (!s.count(inv(a))) return false;
        for (int b : s)
            if (!s.count(mul(a, b))) return false;
    }
    return true;
}

std::vector<int> FiniteGroup::subgroup_closure(std::vector<int> gens) const {
    std::set<int> s{id_};
    std::deque<int> frontier{id_};
    std::vector<int> step = gens;
    for (int g : gens) step.push_back(inv(g));
    while (!frontier.empty()) {
        int c = frontier.front();
        frontier.pop_front();
        for (int g : step) {
            int p = mul(c, g);
            if (s.insert(p).second) frontier.push_back(p);
        }
    }
    return {s.begin(), s.end()};
}

std::vector<int> FiniteGroup::normal_closure(std::vector<int> gens) const {
    std::set<int> seeds;
    for (int g : gens)
        for (int t = 0; t < size(); ++t) seeds.insert(mul(mul(t, g), inv(t)));
    return subgroup_closure({seeds.begin(), seeds.end()});
}

std::vector<int> FiniteGroup::conjugacy_class(int g) const {
    std::set<int> s;
    for (int t = 0; t < size(); ++t) s.insert(mul(mul(t, g), inv(t)));
    return {s.begin(), s.end()};
}

std::vector<int> FiniteGroup::conjugate_subgroup(const std::vector<int>& sub, int t) const {
    std::set<int> s;
    int ti = inv(t);
    for (int a : sub) s.insert(mul(mul(t, a), ti));
    return {s.begin(), s.end()};
}

std::vector<int> FiniteGroup::product_set(const std::vector<int>& A,
                                          const std::vector<int>& B) const {
    std::set<int> s;
    for (int a : A)
        for (int b : B) s.insert(mul(a, b));
    return {s.begin(), s.end()};
}

FiniteGroup::Cosets FiniteGroup::left_cosets(const std::vector<int>& subgroup) const {
    std::vector<int> coset_of(size(), -1);
    std::vector<int> rep;
    for (int t = 0; t < size(); ++t) {
        if (coset_of[t] != -1) continue;
        int c = static_cast<int>(rep.size());
        rep.push_back(t);
        for (int s : subgroup) coset_of[mul(t, s)] = c;
        if (coset_of[t] != c) throw std::logic_error("left_cosets: not a subgroup");
    }
    return {std::move(coset_of), std::move(rep)};
}

std::pair<std::shared_ptr<FiniteGroup>, std::map<int, int>> FiniteGroup::as_group(
    const std::vector<int>& elems) const {
    if (!is_subgroup(elems)) throw std::invalid_argument("as_group: not a subgroup");
    std::vector<Code> codes;
    for (int e : elems) codes.push_back(codes_[e]);
    auto sub = std::make_shared<FiniteGroup>();
    std::sort(codes.begin(), codes.end());
    sub->codes_ = std::move(codes);
    for (int i = 0; i < sub->size(); ++i) sub->index_[sub->codes_[i]] = i;
    sub->mul_ = mul_;
    sub->inv_ = inv_;
    sub->id_ = sub->index_.at(codes_[id_]);
    std::map<int, int> remap;
    for (int e : elems) remap[e] = sub->index_.at(codes_[e]);
    return {sub, remap};
}

}  // namespace boxdim
