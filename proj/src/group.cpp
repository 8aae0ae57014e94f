#include "boxdim/group.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace boxdim {

namespace {

long long mod_pos(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

std::vector<std::vector<long long>> mat_mul(const std::vector<std::vector<long long>>& A,
                                            const std::vector<std::vector<long long>>& B) {
    size_t n = A.size();
    std::vector<std::vector<long long>> C(n, std::vector<long long>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k)
            for (size_t j = 0; j < n; ++j) C[i][j] += A[i][k] * B[k][j];
    return C;
}

std::vector<std::vector<long long>> mat_identity(size_t n) {
    std::vector<std::vector<long long>> I(n, std::vector<long long>(n, 0));
    for (size_t i = 0; i < n; ++i) I[i][i] = 1;
    return I;
}

long long mat_det(std::vector<std::vector<long long>> A) {
    // Fraction-free Gaussian elimination (Bareiss) on small integer matrices.
    size_t n = A.size();
    long long prev = 1;
    long long sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (A[k][k] == 0) {
            size_t p = k + 1;
            while (p < n && A[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(A[k], A[p]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) / prev;
        prev = A[k][k];
    }
    return sign * A[n - 1][n - 1];
}

// Integer inverse for |det| = 1 matrices via adjugate.
std::vector<std::vector<long long>> mat_inverse_unimodular(
    const std::vector<std::vector<long long>>& A) {
    size_t n = A.size();
    long long det = mat_det(A);
    if (det != 1 && det != -1) throw std::invalid_argument("matrix is not unimodular");
    std::vector<std::vector<long long>> adj(n, std::vector<long long>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            std::vector<std::vector<long long>> minor;
            for (size_t r = 0; r < n; ++r) {
                if (r == j) continue;
                std::vector<long long> row;
                for (size_t c = 0; c < n; ++c)
                    if (c != i) row.push_back(A[r][c]);
                minor.push_back(std::move(row));
            }
            long long m = n == 1 ? 1 : mat_det(minor);
            adj[i][j] = (((i + j) % 2 == 0) ? m : -m) * det;  // det = 1/det here
        }
    return adj;
}

std::vector<long long> mat_apply(const std::vector<std::vector<long long>>& A,
                                 const std::vector<long long>& v) {
    size_t n = A.size();
    std::vector<long long> w(n, 0);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) w[i] += A[i][j] * v[j];
    return w;
}

void normalize_lamps(std::vector<std::pair<long long, long long>>& lamps, long long k) {
    for (auto& [p, v] : lamps) v = mod_pos(v, k);
    std::sort(lamps.begin(), lamps.end());
    lamps.erase(std::remove_if(lamps.begin(), lamps.end(),
                               [](const auto& pv) { return pv.second == 0; }),
                lamps.end());
}

}  // namespace

std::string family_name(Family f) {
    switch (f) {
        case Family::FreeAbelian: return "free_abelian";
        case Family::FiniteCyclicProduct: return "finite_cyclic";
        case Family::Heisenberg3: return "heisenberg3";
        case Family::InfiniteDihedral: return "infinite_dihedral";
        case Family::WreathLamp: return "wreath_lamp";
        case Family::SemidirectZnZ: return "semidirect_znz";
    }
    return "?";
}

MarkedGroup MarkedGroup::free_abelian(int n) {
    if (n < 1) throw std::invalid_argument("free_abelian rank must be >= 1");
    MarkedGroup g;
    g.family_ = Family::FreeAbelian;
    g.n_ = n;
    g.install_default_generators();
    return g;
}

MarkedGroup MarkedGroup::finite_cyclic(std::vector<long long> ks) {
    if (ks.empty()) throw std::invalid_argument("finite_cyclic needs at least one factor");
    for (long long k : ks)
        if (k < 1) throw std::invalid_argument("finite_cyclic orders must be >= 1");
    MarkedGroup g;
    g.family_ = Family::FiniteCyclicProduct;
    g.n_ = static_cast<int>(ks.size());
    g.ks_ = std::move(ks);
    g.install_default_generators();
    return g;
}

MarkedGroup MarkedGroup::heisenberg3() {
    MarkedGroup g;
    g.family_ = Family::Heisenberg3;
    g.n_ = 3;
    g.install_default_generators();
    return g;
}

MarkedGroup MarkedGroup::infinite_dihedral() {
    MarkedGroup g;
    g.family_ = Family::InfiniteDihedral;
    g.n_ = 1;
    g.install_default_generators();
    return g;
}

MarkedGroup MarkedGroup::wreath_lamp(long long k, long long support_cap) {
    if (k < 2) throw std::invalid_argument("wreath_lamp modulus must be >= 2");
    MarkedGroup g;
    g.family_ = Family::WreathLamp;
    g.lamp_k_ = k;
    g.support_cap_ = support_cap;
    g.install_default_generators();
    return g;
}

MarkedGroup MarkedGroup::semidirect_znz(std::vector<std::vector<long long>> A) {
    size_t n = A.size();
    for (const auto& row : A)
        if (row.size() != n) throw std::invalid_argument("semidirect matrix must be square");
    MarkedGroup g;
    g.family_ = Family::SemidirectZnZ;
    g.n_ = static_cast<int>(n);
    g.mat_inv_ = mat_inverse_unimodular(A);
    g.mat_ = std::move(A);
    g.install_default_generators();
    return g;
}

void MarkedGroup::install_default_generators() {
    std::vector<GroupElement> gens;
    std::vector<std::string> labels;
    switch (family_) {
        case Family::FreeAbelian:
        case Family::FiniteCyclicProduct:
            for (int i = 0; i < n_; ++i) {
                GroupElement e;
                e.vec.assign(n_, 0);
                e.vec[i] = 1;
                gens.push_back(e);
                labels.push_back("e" + std::to_string(i + 1));
            }
            break;
        case Family::Heisenberg3: {
            GroupElement x, y;
            x.vec = {1, 0, 0};
            y.vec = {0, 1, 0};
            gens = {x, y};
            labels = {"x", "y"};
            break;
        }
        case Family::InfiniteDihedral: {
            GroupElement r, s;
            r.vec = {1};
            s.vec = {0};
            s.flag = true;
            gens = {r, s};
            labels = {"r", "s"};
            break;
        }
        case Family::WreathLamp: {
            GroupElement t, a;
            t.shift = 1;
            a.lamps = {{0, 1}};
            gens = {t, a};
            labels = {"t", "a"};
            break;
        }
        case Family::SemidirectZnZ: {
            for (int i = 0; i < n_; ++i) {
                GroupElement e;
                e.vec.assign(n_, 0);
                e.vec[i] = 1;
                gens.push_back(e);
                labels.push_back("e" + std::to_string(i + 1));
            }
            GroupElement t;
            t.vec.assign(n_, 0);
            t.shift = 1;
            gens.push_back(t);
            labels.push_back("t");
            break;
        }
    }
    set_generators(gens, std::vector<Rat>(gens.size(), Rat(1)), labels);
}

void MarkedGroup::set_generators(const std::vector<GroupElement>& gens,
                                 const std::vector<Rat>& weights,
                                 const std::vector<std::string>& labels) {
    if (gens.empty()) throw std::invalid_argument("empty generating set");
    if (gens.size() != weights.size())
        throw std::invalid_argument("generator/weight count mismatch");
    marked_.clear();
    for (size_t i = 0; i < gens.size(); ++i) {
        if (weights[i] <= Rat(0)) throw std::invalid_argument("weights must be positive");
        if (!valid_element(gens[i])) throw std::invalid_argument("invalid generator element");
        if (is_identity(gens[i])) throw std::invalid_argument("identity cannot be a generator");
        std::string label = i < labels.size() ? labels[i] : "g" + std::to_string(i + 1);
        marked_.push_back({gens[i], weights[i], label});
        GroupElement inv = inverse(gens[i]);
        if (inv != gens[i]) marked_.push_back({inv, weights[i], label + "^-1"});
    }
    // De-duplicate, keeping the lightest weight per element.
    std::map<GroupElement, MarkedGenerator> uniq;
    for (const auto& mg : marked_) {
        auto it = uniq.find(mg.element);
        if (it == uniq.end() || mg.weight < it->second.weight) uniq[mg.element] = mg;
    }
    marked_.clear();
    for (auto& [el, mg] : uniq) marked_.push_back(mg);
}

Rat MarkedGroup::min_generator_weight() const {
    Rat m = marked_.front().weight;
    for (const auto& mg : marked_) m = std::min(m, mg.weight);
    return m;
}

GroupElement MarkedGroup::identity() const {
    GroupElement e;
    if (family_ != Family::WreathLamp) e.vec.assign(n_, 0);
    return e;
}

bool MarkedGroup::is_identity(const GroupElement& a) const { return a == identity(); }

bool MarkedGroup::valid_element(const GroupElement& a) const {
    switch (family_) {
        case Family::FreeAbelian:
            return a.vec.size() == static_cast<size_t>(n_) && a.lamps.empty() &&
                   a.shift == 0 && !a.flag;
        case Family::FiniteCyclicProduct: {
            if (a.vec.size() != static_cast<size_t>(n_) || !a.lamps.empty() || a.shift != 0 ||
                a.flag)
                return false;
            for (int i = 0; i < n_; ++i)
                if (a.vec[i] < 0 || a.vec[i] >= ks_[i]) return false;
            return true;
        }
        case Family::Heisenberg3:
            return a.vec.size() == 3 && a.lamps.empty() && a.shift == 0 && !a.flag;
        case Family::InfiniteDihedral:
            return a.vec.size() == 1 && a.lamps.empty() && a.shift == 0;
        case Family::WreathLamp: {
            if (!a.vec.empty()) return false;
            long long prev = std::numeric_limits<long long>::min();
            for (const auto& [p, v] : a.lamps) {
                if (p <= prev || v <= 0 || v >= lamp_k_) return false;
                prev = p;
            }
            return true;
        }
        case Family::SemidirectZnZ:
            return a.vec.size() == static_cast<size_t>(n_) && a.lamps.empty() && !a.flag;
    }
    return false;
}

std::vector<std::vector<long long>> MarkedGroup::matrix_power(long long e) const {
    const auto& base = e >= 0 ? mat_ : mat_inv_;
    long long k = e >= 0 ? e : -e;
    auto result = mat_identity(n_);
    auto b = base;
    while (k > 0) {
        if (k & 1) result = mat_mul(result, b);
        b = mat_mul(b, b);
        k >>= 1;
    }
    return result;
}

GroupElement MarkedGroup::multiply(const GroupElement& a, const GroupElement& b) const {
    if (!valid_element(a) || !valid_element(b))
        throw std::domain_error("multiply: element does not belong to " + describe());
    GroupElement c;
    switch (family_) {
        case Family::FreeAbelian: {
            c.vec.resize(n_);
            for (int i = 0; i < n_; ++i) c.vec[i] = a.vec[i] + b.vec[i];
            break;
        }
        case Family::FiniteCyclicProduct: {
            c.vec.resize(n_);
            for (int i = 0; i < n_; ++i) c.vec[i] = mod_pos(a.vec[i] + b.vec[i], ks_[i]);
            break;
        }
        case Family::Heisenberg3: {
            c.vec = {a.vec[0] + b.vec[0], a.vec[1] + b.vec[1],
                     a.vec[2] + b.vec[2] + a.vec[0] * b.vec[1]};
            break;
        }
        case Family::InfiniteDihedral: {
            c.vec = {a.vec[0] + (a.flag ? -b.vec[0] : b.vec[0])};
            c.flag = a.flag != b.flag;
            break;
        }
        case Family::WreathLamp: {
            c.lamps = a.lamps;
            for (const auto& [p, v] : b.lamps) c.lamps.emplace_back(p + a.shift, v);
            // Merge duplicate positions before normalizing.
            std::map<long long, long long> merged;
            for (const auto& [p, v] : c.lamps) merged[p] += v;
            c.lamps.assign(merged.begin(), merged.end());
            normalize_lamps(c.lamps, lamp_k_);
            c.shift = a.shift + b.shift;
            for (const auto& [p, v] : c.lamps)
                if (p > support_cap_ || p < -support_cap_)
                    throw ResourceError("wreath lamp support exceeds configured window",
                                        Rat(support_cap_));
            break;
        }
        case Family::SemidirectZnZ: {
            auto Asb = mat_apply(matrix_power(a.shift), b.vec);
            c.vec.resize(n_);
            for (int i = 0; i < n_; ++i) c.vec[i] = a.vec[i] + Asb[i];
            c.shift = a.shift + b.shift;
            break;
        }
    }
    return c;
}

GroupElement MarkedGroup::inverse(const GroupElement& a) const {
    if (!valid_element(a))
        throw std::domain_error("inverse: element does not belong to " + describe());
    GroupElement c;
    switch (family_) {
        case Family::FreeAbelian: {
            c.vec.resize(n_);
            for (int i = 0; i < n_; ++i) c.vec[i] = -a.vec[i];
            break;
        }
        case Family::FiniteCyclicProduct: {
            c.vec.resize(n_);
            for (int i = 0; i < n_; ++i) c.vec[i] = mod_pos(-a.vec[i], ks_[i]);
            break;
        }
        case Family::Heisenberg3: {
            c.vec = {-a.vec[0], -a.vec[1], -a.vec[2] + a.vec[0] * a.vec[1]};
            break;
        }
        case Family::InfiniteDihedral: {
            c.vec = {a.flag ? a.vec[0] : -a.vec[0]};
            c.flag = a.flag;
            break;
        }
        case Family::WreathLamp: {
            for (const auto& [p, v] : a.lamps) c.lamps.emplace_back(p - a.shift, -v);
            normalize_lamps(c.lamps, lamp_k_);
            c.shift = -a.shift;
            break;
        }
        case Family::SemidirectZnZ: {
            auto w = mat_apply(matrix_power(-a.shift), a.vec);
            c.vec.resize(n_);
            for (int i = 0; i < n_; ++i) c.vec[i] = -w[i];
            c.shift = -a.shift;
            break;
        }
    }
    return c;
}

std::string MarkedGroup::to_string(const GroupElement& a) const {
    std::ostringstream os;
    switch (family_) {
        case Family::FreeAbelian:
        case Family::FiniteCyclicProduct:
        case Family::Heisenberg3: {
            os << "(";
            for (int i = 0; i < n_; ++i) os << (i ? "," : "") << a.vec[i];
            os << ")";
            break;
        }
        case Family::InfiniteDihedral:
            os << "(" << a.vec[0] << "," << (a.flag ? 1 : 0) << ")";
            break;
        case Family::WreathLamp: {
            os << "(";
            bool first = true;
            for (const auto& [p, v] : a.lamps) {
                if (!first) os << ",";
                os << p << ":" << v;
                first = false;
            }
            os << ";" << a.shift << ")";
            break;
        }
        case Family::SemidirectZnZ: {
            os << "(";
            for (int i = 0; i < n_; ++i) os << (i ? "," : "") << a.vec[i];
            os << ";" << a.shift << ")";
            break;
        }
    }
    return os.str();
}

GroupElement MarkedGroup::parse_element(const std::string& s) const {
    std::string body = s;
    if (!body.empty() && body.front() == '(') body = body.substr(1);
    if (!body.empty() && body.back() == ')') body.pop_back();
    auto split = [](const std::string& str, char sep) {
        std::vector<std::string> out;
        std::string cur;
        for (char ch : str) {
            if (ch == sep) {
                out.push_back(cur);
                cur.clear();
            } else if (ch != ' ')
                cur += ch;
        }
        out.push_back(cur);
        return out;
    };
    GroupElement e;
    switch (family_) {
        case Family::FreeAbelian:
        case Family::FiniteCyclicProduct:
        case Family::Heisenberg3: {
            for (const auto& tok : split(body, ','))
                if (!tok.empty()) e.vec.push_back(std::stoll(tok));
            if (family_ == Family::FiniteCyclicProduct)
                for (int i = 0; i < n_ && i < static_cast<int>(e.vec.size()); ++i)
                    e.vec[i] = mod_pos(e.vec[i], ks_[i]);
            break;
        }
        case Family::InfiniteDihedral: {
            auto parts = split(body, ',');
            if (parts.size() != 2) throw std::invalid_argument("dihedral element is (r,s)");
            e.vec = {std::stoll(parts[0])};
            e.flag = std::stoll(parts[1]) != 0;
            break;
        }
        case Family::WreathLamp: {
            auto semi = split(body, ';');
            if (semi.size() != 2) throw std::invalid_argument("wreath element is (p:v,...;shift)");
            if (!semi[0].empty())
                for (const auto& tok : split(semi[0], ',')) {
                    if (tok.empty()) continue;
                    auto pv = split(tok, ':');
                    if (pv.size() != 2) throw std::invalid_argument("lamp entry is p:v");
                    e.lamps.emplace_back(std::stoll(pv[0]), std::stoll(pv[1]));
                }
            normalize_lamps(e.lamps, lamp_k_);
            e.shift = std::stoll(semi[1]);
            break;
        }
        case Family::SemidirectZnZ: {
            auto semi = split(body, ';');
            if (semi.size() != 2) throw std::invalid_argument("semidirect element is (v,...;t)");
            for (const auto& tok : split(semi[0], ','))
                if (!tok.empty()) e.vec.push_back(std::stoll(tok));
            e.shift = std::stoll(semi[1]);
            break;
        }
    }
    if (!valid_element(e)) throw std::invalid_argument("malformed element: " + s);
    return e;
}

std::string MarkedGroup::describe() const {
    std::ostringstream os;
    os << family_name(family_);
    switch (family_) {
        case Family::FreeAbelian: os << "(" << n_ << ")"; break;
        case Family::FiniteCyclicProduct: {
            os << "(";
            for (size_t i = 0; i < ks_.size(); ++i) os << (i ? "," : "") << ks_[i];
            os << ")";
            break;
        }
        case Family::WreathLamp: os << "(" << lamp_k_ << ")"; break;
        case Family::SemidirectZnZ: {
            os << "(";
            for (int i = 0; i < n_; ++i)
                for (int j = 0; j < n_; ++j)
                    os << ((i + j) ? "," : "") << mat_[i][j];
            os << ")";
            break;
        }
        default: break;
    }
    return os.str();
}

bool MarkedGroup::same_group_as(const MarkedGroup& other) const {
    return family_ == other.family_ && n_ == other.n_ && ks_ == other.ks_ &&
           lamp_k_ == other.lamp_k_ && mat_ == other.mat_;
}

namespace {

std::vector<std::string> split_trim(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    auto flush = [&] {
        size_t a = cur.find_first_not_of(" \t");
        size_t b = cur.find_last_not_of(" \t");
        out.push_back(a == std::string::npos ? "" : cur.substr(a, b - a + 1));
        cur.clear();
    };
    for (char ch : s) {
        if (ch == sep)
            flush();
        else
            cur += ch;
    }
    flush();
    return out;
}

MarkedGroup group_from_params(const std::string& name, const std::vector<long long>& p) {
    if (name == "z" && p.empty()) return MarkedGroup::free_abelian(1);
    if (name == "free_abelian") {
        if (p.size() != 1) throw std::invalid_argument("free_abelian takes one param");
        return MarkedGroup::free_abelian(static_cast<int>(p[0]));
    }
    if (name == "finite_cyclic") {
        if (p.empty()) throw std::invalid_argument("finite_cyclic needs orders");
        return MarkedGroup::finite_cyclic(p);
    }
    if (name == "heisenberg3") {
        if (!p.empty()) throw std::invalid_argument("heisenberg3 takes no params");
        return MarkedGroup::heisenberg3();
    }
    if (name == "infinite_dihedral") {
        if (!p.empty()) throw std::invalid_argument("infinite_dihedral takes no params");
        return MarkedGroup::infinite_dihedral();
    }
    if (name == "wreath_lamp") {
        if (p.size() == 1) return MarkedGroup::wreath_lamp(p[0]);
        if (p.size() == 2) return MarkedGroup::wreath_lamp(p[0], p[1]);
        throw std::invalid_argument("wreath_lamp takes k [support_cap]");
    }
    if (name == "semidirect_znz") {
        auto n = static_cast<size_t>(std::llround(std::sqrt(double(p.size()))));
        if (n * n != p.size() || n == 0)
            throw std::invalid_argument("semidirect_znz takes a square row-major matrix");
        std::vector<std::vector<long long>> A(n, std::vector<long long>(n));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) A[i][j] = p[i * n + j];
        return MarkedGroup::semidirect_znz(A);
    }
    throw std::invalid_argument("unknown group family: " + name);
}

}  // namespace

MarkedGroup parse_group(const std::string& text) {
    auto parse_ints = [](const std::string& s) {
        std::vector<long long> out;
        for (const auto& tok : split_trim(s, ','))
            if (!tok.empty()) out.push_back(std::stoll(tok));
        return out;
    };
    if (text.find('=') == std::string::npos) {
        // Inline form: name or name(ints).
        std::string t = text;
        t.erase(std::remove_if(t.begin(), t.end(), ::isspace), t.end());
        auto open = t.find('(');
        if (open == std::string::npos) return group_from_params(t, {});
        if (t.back() != ')') throw std::invalid_argument("malformed group: " + text);
        return group_from_params(t.substr(0, open),
                                 parse_ints(t.substr(open + 1, t.size() - open - 2)));
    }
    // Record form: key = value lines.
    std::string family, params, generators = "default", weights;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto kv = split_trim(line, '=');
        const std::string& key = kv[0];
        std::string value = line.substr(eq + 1);
        size_t a = value.find_first_not_of(" \t");
        size_t b = value.find_last_not_of(" \t\r");
        value = a == std::string::npos ? "" : value.substr(a, b - a + 1);
        if (key == "family")
            family = value;
        else if (key == "params")
            params = value;
        else if (key == "generators")
            generators = value;
        else if (key == "weights")
            weights = value;
        else
            throw std::invalid_argument("unknown group spec key: " + key);
    }
    if (family.empty()) throw std::invalid_argument("group spec needs a family line");
    MarkedGroup g = group_from_params(family, parse_ints(params));
    if (generators != "default") {
        std::vector<GroupElement> gens;
        for (const auto& tok : split_trim(generators, ';'))
            if (!tok.empty()) gens.push_back(g.parse_element(tok));
        std::vector<Rat> w(gens.size(), Rat(1));
        if (!weights.empty()) {
            auto toks = split_trim(weights, ',');
            w.clear();
            for (const auto& tok : toks)
                if (!tok.empty()) w.push_back(parse_rat(tok));
        }
        g.set_generators(gens, w);
    }
    return g;
}

}  // namespace boxdim
