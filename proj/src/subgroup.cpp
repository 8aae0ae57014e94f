#include "boxdim/subgroup.hpp"

#include "boxdim/ball.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace boxdim {

namespace {

long long mod_pos(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

using Code = FiniteGroup::Code;

std::vector<std::vector<long long>> mat_mod(const std::vector<std::vector<long long>>& A,
                                            long long m) {
    auto B = A;
    for (auto& row : B)
        for (auto& x : row) x = mod_pos(x, m);
    return B;
}

std::vector<std::vector<long long>> mat_mul_mod(const std::vector<std::vector<long long>>& A,
                                                const std::vector<std::vector<long long>>& B,
                                                long long m) {
    size_t n = A.size();
    std::vector<std::vector<long long>> C(n, std::vector<long long>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k)
            for (size_t j = 0; j < n; ++j)
                C[i][j] = mod_pos(C[i][j] + A[i][k] * B[k][j], m);
    return C;
}

}  // namespace

bool SubgroupSpec::contains(const GroupElement& g) const {
    int image = elem_hom(g);
    return std::binary_search(subgroup.begin(), subgroup.end(), image);
}

void SubgroupSpec::validate(int sample_radius) const {
    if (!host || !target) throw std::invalid_argument("spec missing host or target");
    if (!std::is_sorted(subgroup.begin(), subgroup.end()))
        throw std::invalid_argument("spec subgroup ids must be sorted");
    if (!target->is_subgroup(subgroup))
        throw std::invalid_argument("spec subgroup fails closure/identity/inverse checks");
    const auto& gens = host->marked_generators();
    if (gen_images.size() != gens.size())
        throw std::invalid_argument("gen_images size mismatch");
    std::vector<int> imgs;
    for (size_t i = 0; i < gens.size(); ++i) {
        if (elem_hom(gens[i].element) != gen_images[i])
            throw std::invalid_argument("elem_hom disagrees with gen_images");
        imgs.push_back(gen_images[i]);
    }
    if (target->subgroup_closure(imgs).size() != static_cast<size_t>(target->size()))
        throw std::invalid_argument("hom is not onto its target");
    // Multiplicativity on a sample ball (the relation checklist per family).
    CayleyBall ball = cayley_ball(*host, Rat(sample_radius), 20000);
    for (const auto& [a, len] : ball.lengths)
        for (size_t i = 0; i < gens.size(); ++i) {
            GroupElement prod = host->multiply(a, gens[i].element);
            if (elem_hom(prod) != target->mul(elem_hom(a), gen_images[i]))
                throw std::invalid_argument("elem_hom is not multiplicative");
        }
}

SubgroupSpec congruence_spec(GroupPtr host, long long level) {
    std::vector<long long> levels;
    switch (host->family()) {
        case Family::FreeAbelian:
        case Family::FiniteCyclicProduct:
            levels.assign(host->rank(), level);
            break;
        default:
            levels = {level};
            break;
    }
    return congruence_spec(host, levels);
}

SubgroupSpec congruence_spec(GroupPtr host, const std::vector<long long>& levels) {
    SubgroupSpec spec;
    spec.host = host;
    for (long long m : levels)
        if (m < 1) throw std::invalid_argument("congruence level must be >= 1");
    switch (host->family()) {
        case Family::FreeAbelian:
        case Family::FiniteCyclicProduct: {
            int n = host->rank();
            if (static_cast<int>(levels.size()) != n)
                throw std::invalid_argument("need one level per coordinate");
            if (host->family() == Family::FiniteCyclicProduct)
                for (int i = 0; i < n; ++i)
                    if (host->cyclic_orders()[i] % levels[i] != 0)
                        throw std::invalid_argument("level must divide the cyclic order");
            auto ls = levels;
            auto mul = [ls, n](const Code& a, const Code& b) {
                Code c(n);
                for (int i = 0; i < n; ++i) c[i] = mod_pos(a[i] + b[i], ls[i]);
                return c;
            };
            auto inv = [ls, n](const Code& a) {
                Code c(n);
                for (int i = 0; i < n; ++i) c[i] = mod_pos(-a[i], ls[i]);
                return c;
            };
            std::vector<Code> gens;
            for (int i = 0; i < n; ++i) {
                Code g(n, 0);
                g[i] = 1 % ls[i];
                gens.push_back(g);
            }
            spec.target = FiniteGroup::closure(gens, mul, inv, Code(n, 0));
            spec.elem_hom = [target = spec.target, ls, n](const GroupElement& g) {
                Code c(n);
                for (int i = 0; i < n; ++i) c[i] = mod_pos(g.vec[i], ls[i]);
                return target->index_of(c);
            };
            spec.product_levels = ls;
            break;
        }
        case Family::Heisenberg3: {
            long long m = levels[0];
            auto mul = [m](const Code& a, const Code& b) {
                return Code{mod_pos(a[0] + b[0], m), mod_pos(a[1] + b[1], m),
                            mod_pos(a[2] + b[2] + a[0] * b[1], m)};
            };
            auto inv = [m](const Code& a) {
                return Code{mod_pos(-a[0], m), mod_pos(-a[1], m),
                            mod_pos(-a[2] + a[0] * a[1], m)};
            };
            spec.target = FiniteGroup::closure({{1 % m, 0, 0}, {0, 1 % m, 0}}, mul, inv,
                                               Code{0, 0, 0});
            spec.elem_hom = [target = spec.target, m](const GroupElement& g) {
                return target->index_of(
                    Code{mod_pos(g.vec[0], m), mod_pos(g.vec[1], m), mod_pos(g.vec[2], m)});
            };
            break;
        }
        case Family::SemidirectZnZ: {
            long long m = levels[0];
            int n = host->rank();
            // Powers of A mod m; the shift is reduced modulo the order of A.
            std::vector<std::vector<std::vector<long long>>> powers{
                mat_mod(std::vector<std::vector<long long>>(
                            n, std::vector<long long>(n, 0)),
                        m)};
            for (int i = 0; i < n; ++i) powers[0][i][i] = 1 % m;
            auto Am = mat_mod(host->matrix(), m);
            long long ord = 0;
            auto cur = powers[0];
            do {
                cur = mat_mul_mod(cur, Am, m);
                powers.push_back(cur);
                ++ord;
                if (ord > 1000000) throw std::runtime_error("order of A mod m too large");
            } while (cur != powers[0]);
            powers.pop_back();
            auto mul = [m, n, ord, powers](const Code& a, const Code& b) {
                Code c(n + 1);
                const auto& P = powers[a[n]];
                for (int i = 0; i < n; ++i) {
                    long long acc = a[i];
                    for (int j = 0; j < n; ++j) acc += P[i][j] * b[j];
                    c[i] = mod_pos(acc, m);
                }
                c[n] = mod_pos(a[n] + b[n], ord);
                return c;
            };
            auto inv = [m, n, ord, powers, mul](const Code& a) {
                Code c(n + 1);
                const auto& P = powers[mod_pos(-a[n], ord)];
                for (int i = 0; i < n; ++i) {
                    long long acc = 0;
                    for (int j = 0; j < n; ++j) acc += P[i][j] * a[j];
                    c[i] = mod_pos(-acc, m);
                }
                c[n] = mod_pos(-a[n], ord);
                return c;
            };
            std::vector<Code> gens;
            for (int i = 0; i < n; ++i) {
                Code g(n + 1, 0);
                g[i] = 1 % m;
                gens.push_back(g);
            }
            Code t(n + 1, 0);
            t[n] = 1 % ord;
            gens.push_back(t);
            spec.target = FiniteGroup::closure(gens, mul, inv, Code(n + 1, 0));
            spec.elem_hom = [target = spec.target, m, n, ord](const GroupElement& g) {
                Code c(n + 1);
                for (int i = 0; i < n; ++i) c[i] = mod_pos(g.vec[i], m);
                c[n] = mod_pos(g.shift, ord);
                return target->index_of(c);
            };
            break;
        }
        default:
            throw std::invalid_argument("congruence_spec: unsupported family " +
                                        family_name(host->family()));
    }
    spec.subgroup = {spec.target->id()};
    std::ostringstream lb;
    lb << host->describe() << "/cong(";
    for (size_t i = 0; i < levels.size(); ++i) lb << (i ? "," : "") << levels[i];
    lb << ")";
    spec.label = lb.str();
    for (const auto& mg : host->marked_generators())
        spec.gen_images.push_back(spec.elem_hom(mg.element));
    return spec;
}

SubgroupSpec wreath_spec(GroupPtr host, long long n) {
    if (host->family() != Family::WreathLamp)
        throw std::invalid_argument("wreath_spec needs a WreathLamp host");
    if (n < 1) throw std::invalid_argument("wreath level must be >= 1");
    long long k = host->lamp_modulus();
    SubgroupSpec spec;
    spec.host = host;
    // Code = (lamp_0..lamp_{n-1}, shift).
    auto mul = [k, n](const Code& a, const Code& b) {
        Code c(n + 1);
        for (long long q = 0; q < n; ++q)
            c[q] = mod_pos(a[q] + b[mod_pos(q - a[n], n)], k);
        c[n] = mod_pos(a[n] + b[n], n);
        return c;
    };
    auto inv = [k, n](const Code& a) {
        Code c(n + 1);
        for (long long p = 0; p < n; ++p) c[p] = mod_pos(-a[mod_pos(p + a[n], n)], k);
        c[n] = mod_pos(-a[n], n);
        return c;
    };
    Code t(n + 1, 0), lamp(n + 1, 0);
    t[n] = 1 % n;
    lamp[0] = 1;
    spec.target = FiniteGroup::closure({t, lamp}, mul, inv, Code(n + 1, 0));
    spec.elem_hom = [target = spec.target, k, n](const GroupElement& g) {
        Code c(n + 1, 0);
        for (const auto& [p, v] : g.lamps) {
            long long q = mod_pos(p, n);
            c[q] = mod_pos(c[q] + v, k);
        }
        c[n] = mod_pos(g.shift, n);
        return target->index_of(c);
    };
    spec.subgroup = {spec.target->id()};
    spec.label = host->describe() + "/wreath(" + std::to_string(n) + ")";
    for (const auto& mg : host->marked_generators())
        spec.gen_images.push_back(spec.elem_hom(mg.element));
    return spec;
}

SubgroupSpec dihedral_spec(GroupPtr host, long long n, long long j) {
    if (host->family() != Family::InfiniteDihedral)
        throw std::invalid_argument("dihedral_spec needs an InfiniteDihedral host");
    if (n < 1) throw std::invalid_argument("dihedral level must be >= 1");
    SubgroupSpec spec;
    spec.host = host;
    auto mul = [n](const Code& a, const Code& b) {
        return Code{mod_pos(a[0] + (a[1] ? -b[0] : b[0]), n), a[1] ^ b[1]};
    };
    auto inv = [n](const Code& a) {
        return a[1] ? a : Code{mod_pos(-a[0], n), 0};
    };
    spec.target = FiniteGroup::closure({{1 % n, 0}, {0, 1}}, mul, inv, Code{0, 0});
    spec.elem_hom = [target = spec.target, n](const GroupElement& g) {
        return target->index_of(Code{mod_pos(g.vec[0], n), g.flag ? 1 : 0});
    };
    if (j < 0) {
        spec.subgroup = {spec.target->id()};
        spec.label = host->describe() + "/<r^" + std::to_string(n) + ">";
    } else {
        int refl = spec.target->index_of(Code{mod_pos(j, n), 1});
        std::vector<int> sub{spec.target->id(), refl};
        std::sort(sub.begin(), sub.end());
        spec.subgroup = sub;
        spec.label = host->describe() + "/<r^" + std::to_string(n) + ",r^" +
                     std::to_string(mod_pos(j, n)) + "s>";
    }
    for (const auto& mg : host->marked_generators())
        spec.gen_images.push_back(spec.elem_hom(mg.element));
    return spec;
}

SubgroupSpec full_spec(GroupPtr host) {
    SubgroupSpec spec;
    spec.host = host;
    auto one = [](const Code&, const Code&) { return Code{0}; };
    auto oneinv = [](const Code&) { return Code{0}; };
    spec.target = FiniteGroup::closure({}, one, oneinv, Code{0});
    spec.elem_hom = [target = spec.target](const GroupElement&) { return target->id(); };
    spec.subgroup = {spec.target->id()};
    spec.label = host->describe() + "/full";
    for (size_t i = 0; i < host->marked_generators().size(); ++i)
        spec.gen_images.push_back(spec.target->id());
    return spec;
}

SubgroupSpec with_subgroup(const SubgroupSpec& spec, std::vector<int> subgroup,
                           std::string label) {
    SubgroupSpec out = spec;
    std::sort(subgroup.begin(), subgroup.end());
    subgroup.erase(std::unique(subgroup.begin(), subgroup.end()), subgroup.end());
    if (!spec.target->is_subgroup(subgroup))
        throw std::invalid_argument("with_subgroup: not a subgroup of the target");
    out.subgroup = std::move(subgroup);
    out.label = std::move(label);
    if (out.subgroup != std::vector<int>{spec.target->id()}) out.product_levels.clear();
    return out;
}

SubgroupSpec restrict_to_image(SubgroupSpec spec) {
    std::vector<int> image = spec.target->subgroup_closure(spec.gen_images);
    if (image.size() == static_cast<size_t>(spec.target->size())) return spec;
    auto [sub, remap] = spec.target->as_group(image);
    SubgroupSpec out;
    out.host = spec.host;
    out.target = sub;
    std::set<int> img(image.begin(), image.end());
    for (int s : spec.subgroup)
        if (img.count(s)) out.subgroup.push_back(remap.at(s));
    std::sort(out.subgroup.begin(), out.subgroup.end());
    for (int gi : spec.gen_images) out.gen_images.push_back(remap.at(gi));
    auto old_target = spec.target;
    auto old_hom = spec.elem_hom;
    out.elem_hom = [sub = out.target, old_target, old_hom](const GroupElement& g) {
        return sub->index_of(old_target->code(old_hom(g)));
    };
    out.label = spec.label;
    return out;
}

}  // namespace boxdim
