#include "boxdim/hirsch.hpp"

#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace boxdim {

void ExtensionTree::check() const {
    switch (kind) {
        case Kind::AbelianLeaf:
            if (free_rank < 0) throw std::invalid_argument("negative free rank");
            for (long long t : torsion)
                if (t < 1) throw std::invalid_argument("torsion order < 1");
            break;
        case Kind::FiniteLeaf:
            if (order < 1) throw std::invalid_argument("finite leaf order < 1");
            break;
        case Kind::Extension:
            if (children.size() != 2)
                throw std::invalid_argument("extension needs normal and quotient");
            break;
        case Kind::DirectedUnion:
            if (children.empty())
                throw std::invalid_argument("directed union must be nonempty");
            break;
    }
    for (const auto& c : children) c.check();
}

HirschValue hirsch_length(const ExtensionTree& t) {
    t.check();
    switch (t.kind) {
        case ExtensionTree::Kind::AbelianLeaf:
            return {true, t.free_rank};
        case ExtensionTree::Kind::FiniteLeaf:
            return {true, 0};
        case ExtensionTree::Kind::Extension: {
            HirschValue a = hirsch_length(t.children[0]);
            HirschValue b = hirsch_length(t.children[1]);
            if (!a.finite || !b.finite) return {false, 0};
            return {true, a.value + b.value};
        }
        case ExtensionTree::Kind::DirectedUnion: {
            HirschValue sup{true, 0};
            HirschValue prev{true, -1};
            bool strictly_increasing = true;
            for (const auto& c : t.children) {
                HirschValue h = hirsch_length(c);
                if (!h.finite) return {false, 0};
                if (h.value > sup.value) sup.value = h.value;
                strictly_increasing = strictly_increasing && h.value > prev.value;
                prev = h;
            }
            // A cofinal increasing chain that never stabilizes is unbounded.
            if (t.monotone && t.children.size() >= 2 && strictly_increasing)
                return {false, 0};
            return sup;
        }
    }
    throw std::logic_error("unreachable");
}

namespace {

struct Parser {
    const std::string& s;
    size_t i = 0;

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) {
            std::ostringstream err;
            err << "expected '" << c << "' at position " << i;
            throw std::invalid_argument(err.str());
        }
    }
    std::string word() {
        skip();
        size_t start = i;
        while (i < s.size() && (std::isalpha(static_cast<unsigned char>(s[i])) ||
                                s[i] == '.'))
            ++i;
        return s.substr(start, i - start);
    }
    long long number() {
        skip();
        size_t start = i;
        if (i < s.size() && s[i] == '-') ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) throw std::invalid_argument("expected a number");
        return std::stoll(s.substr(start, i - start));
    }

    ExtensionTree tree() {
        std::string w = word();
        ExtensionTree t;
        if (w == "ab") {
            t.kind = ExtensionTree::Kind::AbelianLeaf;
            expect('(');
            t.free_rank = number();
            if (eat(';')) {
                t.torsion.push_back(number());
                while (eat(',')) t.torsion.push_back(number());
            }
            expect(')');
        } else if (w == "fin") {
            t.kind = ExtensionTree::Kind::FiniteLeaf;
            expect('(');
            t.order = number();
            expect(')');
        } else if (w == "ext") {
            t.kind = ExtensionTree::Kind::Extension;
            expect('(');
            t.children.push_back(tree());
            expect(',');
            t.children.push_back(tree());
            expect(')');
        } else if (w == "union") {
            t.kind = ExtensionTree::Kind::DirectedUnion;
            expect('(');
            t.children.push_back(tree());
            while (eat(',')) {
                skip();
                if (s.compare(i, 3, "...") == 0) {
                    i += 3;
                    t.monotone = true;
                    break;
                }
                t.children.push_back(tree());
            }
            expect(')');
        } else {
            throw std::invalid_argument("unknown node kind '" + w + "'");
        }
        return t;
    }
};

}  // namespace

ExtensionTree parse_tree(const std::string& text) {
    Parser p{text};
    ExtensionTree t = p.tree();
    p.skip();
    if (p.i != text.size())
        throw std::invalid_argument("trailing characters after the tree");
    t.check();
    return t;
}

std::string tree_to_string(const ExtensionTree& t) {
    std::ostringstream out;
    switch (t.kind) {
        case ExtensionTree::Kind::AbelianLeaf:
            out << "ab(" << t.free_rank;
            for (size_t j = 0; j < t.torsion.size(); ++j)
                out << (j == 0 ? ";" : ",") << t.torsion[j];
            out << ")";
            break;
        case ExtensionTree::Kind::FiniteLeaf:
            out << "fin(" << t.order << ")";
            break;
        case ExtensionTree::Kind::Extension:
            out << "ext(" << tree_to_string(t.children[0]) << ","
                << tree_to_string(t.children[1]) << ")";
            break;
        case ExtensionTree::Kind::DirectedUnion:
            out << "union(";
            for (size_t j = 0; j < t.children.size(); ++j)
                out << (j ? "," : "") << tree_to_string(t.children[j]);
            if (t.monotone) out << ",...";
            out << ")";
            break;
    }
    return out.str();
}

ExtensionTree canonical_tree(const MarkedGroup& g) {
    auto ab = [](long long rank) {
        ExtensionTree t;
        t.kind = ExtensionTree::Kind::AbelianLeaf;
        t.free_rank = rank;
        return t;
    };
    auto fin = [](long long order) {
        ExtensionTree t;
        t.kind = ExtensionTree::Kind::FiniteLeaf;
        t.order = order;
        return t;
    };
    auto ext = [](ExtensionTree n, ExtensionTree q) {
        ExtensionTree t;
        t.kind = ExtensionTree::Kind::Extension;
        t.children = {std::move(n), std::move(q)};
        return t;
    };
    switch (g.family()) {
        case Family::FreeAbelian:
            return ab(g.rank());
        case Family::FiniteCyclicProduct: {
            long long order = 1;
            for (long long k : g.cyclic_orders()) order *= k;
            return fin(order);
        }
        case Family::Heisenberg3:
            // Center Z under Z^2.
            return ext(ab(1), ab(2));
        case Family::InfiniteDihedral:
            // Rotation subgroup Z under Z/2.
            return ext(ab(1), fin(2));
        case Family::WreathLamp: {
            // Lamps: directed union of finite powers of Z/k, under the shift Z.
            ExtensionTree lamps;
            lamps.kind = ExtensionTree::Kind::DirectedUnion;
            lamps.monotone = true;
            long long k = g.lamp_modulus();
            long long pw = k;
            for (int j = 0; j < 3; ++j, pw *= k) lamps.children.push_back(fin(pw));
            return ext(std::move(lamps), ab(1));
        }
        case Family::SemidirectZnZ:
            return ext(ab(g.rank()), ab(1));
    }
    throw std::logic_error("unreachable");
}

long long hirsch_of_builtin(const MarkedGroup& g) {
    HirschValue h = hirsch_length(canonical_tree(g));
    if (!h.finite) throw std::logic_error("built-in trees are finite-valued");
    return h.value;
}

}  // namespace boxdim
