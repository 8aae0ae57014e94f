// Command-line front end: every module behind scriptable subcommands with
// deterministic artifacts and a JSON summary on stdout.
// Exit codes: 0 success, 1 verified-false verdict, 2 errors.

#include "boxdim/ball.hpp"
#include "boxdim/boxspace.hpp"
#include "boxdim/cover.hpp"
#include "boxdim/dimsolve.hpp"
#include "boxdim/extension.hpp"
#include "boxdim/hirsch.hpp"
#include "boxdim/lift.hpp"
#include "boxdim/quotient.hpp"
#include "boxdim/separation.hpp"
#include "boxdim/slab.hpp"
#include "boxdim/subgroup.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace boxdim;
using nlohmann::json;

namespace {

GroupPtr load_group(const std::string& arg) {
    std::ifstream f(arg);
    if (f) {
        std::stringstream ss;
        ss << f.rdbuf();
        return std::make_shared<MarkedGroup>(parse_group(ss.str()));
    }
    return std::make_shared<MarkedGroup>(parse_group(arg));
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else
            cur += ch;
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

/// One subgroup spec from a compact token, interpreted by host family:
/// InfiniteDihedral: "n" or "n:j"; WreathLamp: "n"; otherwise a
/// comma-separated congruence level list (a single level broadcasts).
SubgroupSpec spec_from_token(GroupPtr host, const std::string& token) {
    if (host->family() == Family::InfiniteDihedral) {
        auto parts = split(token, ':');
        long long n = std::stoll(parts[0]);
        long long j = parts.size() > 1 ? std::stoll(parts[1]) : -1;
        return dihedral_spec(host, n, j);
    }
    if (host->family() == Family::WreathLamp) return wreath_spec(host, std::stoll(token));
    std::vector<long long> levels;
    for (const auto& t : split(token, ',')) levels.push_back(std::stoll(t));
    if (levels.size() == 1) return congruence_spec(host, levels[0]);
    return congruence_spec(host, levels);
}

std::vector<SubgroupSpec> specs_from_list(GroupPtr host, const std::string& list) {
    std::vector<SubgroupSpec> out;
    for (const auto& token : split(list, ';'))
        if (!token.empty()) out.push_back(spec_from_token(host, token));
    if (out.empty()) throw std::invalid_argument("empty subgroup family");
    return out;
}

ExtensionData extension_from_name(const std::string& name) {
    if (name == "z2") return make_extension_z2();
    if (name == "dihedral") return make_extension_dihedral();
    auto open = name.find('(');
    if (open != std::string::npos && name.back() == ')') {
        std::string head = name.substr(0, open);
        std::string body = name.substr(open + 1, name.size() - open - 2);
        if (head == "lamp") return make_extension_lamp(std::stoll(body));
        if (head == "semidirect") {
            std::vector<long long> p;
            for (const auto& t : split(body, ',')) p.push_back(std::stoll(t));
            size_t n = 1;
            while (n * n < p.size()) ++n;
            if (n * n != p.size())
                throw std::invalid_argument("semidirect matrix must be square");
            std::vector<std::vector<long long>> A(n, std::vector<long long>(n));
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j) A[i][j] = p[i * n + j];
            return make_extension_semidirect(A);
        }
    }
    throw std::invalid_argument(
        "unknown extension (use z2, dihedral, lamp(k), semidirect(a,b,c,d)): " + name);
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

const char* verdict_str(ClauseVerdict v) {
    switch (v) {
        case ClauseVerdict::Pass: return "pass";
        case ClauseVerdict::Fail: return "fail";
        default: return "inconclusive";
    }
}

void write_witness(const ScaleDimWitness& w, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << "witness space=" << w.space_label << " R=" << to_string(w.R)
        << " S=" << to_string(w.S) << " kind=" << w.kind << " value=" << w.value
        << " exact=" << (w.exact ? 1 : 0) << "\n";
    if (w.kind == "coloring") {
        out << "colors:";
        for (int c : w.color_of_member) out << " " << c;
        out << "\n";
    }
    write_cover(w.certificate, out);
    if (!out) throw std::runtime_error("write failed: " + path);
}

int run(int argc, char** argv) {
    CLI::App app{"Exact coarse-geometry toolkit: box spaces of residually "
                 "finite groups, scale-R dimension profiles, key-lemma checks"};
    app.require_subcommand(1);

    std::string group_arg, sigma_arg, token_arg, out_path, space_path;
    std::string mode_arg, shape_arg, tree_arg, builtin_arg, ext_arg, elems_arg;
    std::string lambda_arg, scales_arg, r_arg = "1", s_arg = "-1", window_arg = "0";
    int pi = 0, pj = 0, scs_mode = 1;

    // group ball
    auto* cball = app.add_subcommand("group", "Group-level operations")
                      ->require_subcommand(1)
                      ->add_subcommand("ball", "Elements of B_R(e) with word lengths");
    cball->add_option("--group", group_arg, "Group (inline form or spec file)")->required();
    cball->add_option("--R", r_arg, "Radius (rational p/q)")->required();
    cball->add_option("--out", out_path, "Output path (default stdout)");

    // quotient build
    auto* cquot = app.add_subcommand("quotient", "Finite quotients")
                      ->require_subcommand(1)
                      ->add_subcommand("build", "Build G/H and export the Schreier edge list");
    cquot->add_option("--group", group_arg)->required();
    cquot->add_option("--level", token_arg, "Subgroup token (levels / n:j / n)")->required();
    cquot->add_option("--out", out_path, "Edge list path (default stdout)");

    // metric dist
    auto* cdist = app.add_subcommand("metric", "Metric queries")
                      ->require_subcommand(1)
                      ->add_subcommand("dist", "Distance between two points of a space file");
    cdist->add_option("--space", space_path, "Edge-list space file")->required();
    cdist->add_option("--i", pi)->required();
    cdist->add_option("--j", pj)->required();

    // check separating | scs
    auto* ccheck = app.add_subcommand("check", "Separation conditions")->require_subcommand(1);
    auto* csep = ccheck->add_subcommand("separating", "Separating-family check");
    auto* cscs = ccheck->add_subcommand("scs", "Semi-conjugacy-separating check");
    for (auto* c : {csep, cscs}) {
        c->add_option("--group", group_arg)->required();
        c->add_option("--sigma", sigma_arg, "Subgroup family, ';'-separated tokens")->required();
        c->add_option("--F", elems_arg, "Test elements, ';'-separated")->required();
    }
    cscs->add_option("--mode", scs_mode, "Equivalent condition 1|2|3")->check(CLI::Range(1, 3));

    // radius inj | iso
    auto* cradius = app.add_subcommand("radius", "Injectivity / isometry radii")
                        ->require_subcommand(1);
    auto* cinj = cradius->add_subcommand("inj", "Injectivity radius of a quotient");
    auto* ciso = cradius->add_subcommand("iso", "3R-injectivity => R-isometry check");
    for (auto* c : {cinj, ciso}) {
        c->add_option("--group", group_arg)->required();
        c->add_option("--level", token_arg)->required();
    }
    ciso->add_option("--R", r_arg)->required();

    // dim-at-scale
    auto* cdim = app.add_subcommand("dim-at-scale", "Scale-R dimension witness on a space");
    cdim->add_option("--space", space_path, "Edge-list space file")->required();
    cdim->add_option("--R", r_arg)->required();
    cdim->add_option("--S", s_arg)->required();
    cdim->add_option("--mode", mode_arg, "exact|greedy")
        ->check(CLI::IsMember({"exact", "greedy"}))
        ->required();
    cdim->add_option("--shape", shape_arg, "arcs|all (exact mode)")
        ->check(CLI::IsMember({"arcs", "all"}));
    cdim->add_option("--out", out_path, "Witness file path");

    // lift-cover
    auto* clift = app.add_subcommand("lift-cover", "Lift a quotient cover to a window in G");
    clift->add_option("--group", group_arg)->required();
    clift->add_option("--level", token_arg)->required();
    clift->add_option("--R", r_arg, "Lebesgue target of the base cover")->required();
    clift->add_option("--window", window_arg, "Window radius around the identity")->required();
    clift->add_option("--out", out_path, "Lifted cover path");

    // verify key-lemma
    auto* cverify = app.add_subcommand("verify", "Lemma verification")
                        ->require_subcommand(1)
                        ->add_subcommand("key-lemma", "Per-clause key-lemma report");
    cverify->add_option("--ext", ext_arg, "z2|dihedral|lamp(k)|semidirect(...)")->required();
    cverify->add_option("--H", token_arg, "Subgroup token on G")->required();
    cverify->add_option("--R", r_arg)->required();
    cverify->add_option("--out", out_path, "Report file path");

    // hirsch
    auto* chirsch = app.add_subcommand("hirsch", "Hirsch length of a tree or built-in group");
    chirsch->add_option("--tree", tree_arg, "Extension-tree expression");
    chirsch->add_option("--builtin", builtin_arg, "Built-in group (inline form)");

    // box assemble | export | report
    auto* cbox = app.add_subcommand("box", "Box space operations")->require_subcommand(1);
    auto* cassemble = cbox->add_subcommand("assemble", "Assemble and check the glued metric");
    auto* cexport = cbox->add_subcommand("export", "Export the R-proximity graph");
    auto* creport = cbox->add_subcommand("report", "Per-scale dimension profile report");
    for (auto* c : {cassemble, cexport, creport}) {
        c->add_option("--group", group_arg)->required();
        c->add_option("--sigma", sigma_arg, "Subgroup family, ';'-separated tokens")->required();
    }
    for (auto* c : {cassemble, cexport})
        c->add_option("--lambda", lambda_arg, "Gap sequence (default 2^k)");
    cexport->add_option("--R", r_arg)->required();
    cexport->add_option("--out", out_path);
    creport->add_option("--scales", scales_arg, "Comma-separated scales")->required();

    CLI11_PARSE(app, argc, argv);

    if (*cball) {
        auto G = load_group(group_arg);
        auto ball = cayley_ball(*G, parse_rat(r_arg));
        std::ostringstream body;
        for (const auto& [g, len] : ball.lengths)
            body << G->to_string(g) << " " << to_string(len) << "\n";
        if (out_path.empty())
            std::cout << body.str();
        else {
            std::ofstream f(out_path);
            f << body.str();
            if (!f) throw std::runtime_error("write failed: " + out_path);
        }
        emit({{"group", G->describe()},
              {"radius", to_string(ball.radius)},
              {"count", ball.lengths.size()}});
        return 0;
    }
    if (*cquot) {
        auto G = load_group(group_arg);
        auto Q = build_quotient(spec_from_token(G, token_arg));
        if (out_path.empty())
            export_edge_list(Q, std::cout);
        else
            export_edge_list(Q, out_path);
        emit({{"label", Q.spec.label},
              {"index", Q.size()},
              {"basepoint", Q.basepoint},
              {"edges", Q.edges.size()}});
        return 0;
    }
    if (*cdist) {
        auto X = load_edge_list_space(space_path);
        if (pi < 0 || pj < 0 || pi >= static_cast<int>(X->size()) ||
            pj >= static_cast<int>(X->size()))
            throw std::invalid_argument("point index out of range");
        emit({{"space", X->label()}, {"i", pi}, {"j", pj}, {"d", to_string(X->d(pi, pj))}});
        return 0;
    }
    if (*csep || *cscs) {
        auto G = load_group(group_arg);
        auto sigma = specs_from_list(G, sigma_arg);
        std::vector<GroupElement> F;
        for (const auto& t : split(elems_arg, ';'))
            if (!t.empty()) F.push_back(G->parse_element(t));
        SeparationReport rep = *csep ? is_separating(sigma, F)
                                     : is_semi_conjugacy_separating(sigma, F, scs_mode);
        emit({{"condition", rep.condition},
              {"verdict", rep.verdict},
              {"witness", rep.witness},
              {"witness_label", rep.witness_label}});
        return rep.verdict ? 0 : 1;
    }
    if (*cinj || *ciso) {
        auto G = load_group(group_arg);
        auto Q = build_quotient(spec_from_token(G, token_arg));
        if (*cinj) {
            emit({{"label", Q.spec.label},
                  {"injectivity_radius", to_string(injectivity_radius(Q))}});
            return 0;
        }
        auto rep = verify_isometry_lemma(Q, parse_rat(r_arg));
        emit({{"label", Q.spec.label},
              {"R", r_arg},
              {"holds", rep.holds},
              {"vacuous", rep.vacuous}});
        return rep.holds ? 0 : 1;
    }
    if (*cdim) {
        auto X = load_edge_list_space(space_path);
        Rat R = parse_rat(r_arg), S = parse_rat(s_arg);
        ScaleDimWitness w;
        if (mode_arg == "exact") {
            if (shape_arg.empty())
                throw std::invalid_argument("--shape is required with --mode exact");
            w = exact_min_multiplicity(
                X, R, S, shape_arg == "arcs" ? CoverShape::Arcs : CoverShape::AllSubsets);
        } else {
            Cover c = X->product ? greedy_slab_cover(X, R) : shell_chain_cover(X, R);
            if (S >= Rat(0) && bound(c) > S)
                throw std::runtime_error("greedy cover exceeds the requested bound S");
            w.space_label = X->label();
            w.R = R;
            w.S = bound(c);
            w.kind = "cover";
            w.value = multiplicity(c);
            w.certificate = std::move(c);
            w.exact = false;
        }
        if (!out_path.empty()) write_witness(w, out_path);
        emit({{"space", w.space_label},
              {"R", to_string(w.R)},
              {"S", to_string(w.S)},
              {"kind", w.kind},
              {"value", w.value},
              {"exact", w.exact}});
        return 0;
    }
    if (*clift) {
        auto G = load_group(group_arg);
        auto Q = build_quotient(spec_from_token(G, token_arg));
        Rat R = parse_rat(r_arg);
        Cover U = Q.space->product ? greedy_slab_cover(Q.space, R)
                                   : shell_chain_cover(Q.space, R);
        auto W = word_ball(*G, G->identity(), parse_rat(window_arg));
        auto L = lift_cover(G, Q, U, W, bound(U));
        if (!out_path.empty()) write_cover(L.cover, out_path);
        emit({{"quotient", Q.spec.label},
              {"base_multiplicity", multiplicity(U)},
              {"base_bound", to_string(U.S)},
              {"window_radius", to_string(W.radius)},
              {"nominal_radius", to_string(L.nominal_radius)},
              {"members", L.cover.members.size()},
              {"multiplicity", multiplicity(L.cover)},
              {"bound", to_string(L.cover.S)}});
        return 0;
    }
    if (*cverify) {
        auto ext = extension_from_name(ext_arg);
        auto H = spec_from_token(ext.G, token_arg);
        auto rep = verify_key_lemma(ext, H, parse_rat(r_arg));
        json j = {{"extension", ext.label},
                  {"H", H.label},
                  {"R", r_arg},
                  {"clause1", verdict_str(rep.clause1)},
                  {"clause2", verdict_str(rep.clause2)},
                  {"clause3", verdict_str(rep.clause3)},
                  {"clause4", verdict_str(rep.clause4)},
                  {"clause5", verdict_str(rep.clause5)},
                  {"window_limited", rep.window_limited},
                  {"detail", rep.detail}};
        if (!out_path.empty()) {
            std::ofstream f(out_path);
            f << j.dump(2) << "\n";
            if (!f) throw std::runtime_error("write failed: " + out_path);
        }
        emit(j);
        bool failed = rep.clause1 == ClauseVerdict::Fail || rep.clause2 == ClauseVerdict::Fail ||
                      rep.clause3 == ClauseVerdict::Fail || rep.clause4 == ClauseVerdict::Fail ||
                      rep.clause5 == ClauseVerdict::Fail;
        return failed ? 1 : 0;
    }
    if (*chirsch) {
        if (tree_arg.empty() == builtin_arg.empty())
            throw std::invalid_argument("pass exactly one of --tree / --builtin");
        HirschValue h;
        std::string subject;
        if (!tree_arg.empty()) {
            h = hirsch_length(parse_tree(tree_arg));
            subject = tree_arg;
        } else {
            auto G = load_group(builtin_arg);
            h = HirschValue{true, hirsch_of_builtin(*G)};
            subject = G->describe();
        }
        emit({{"subject", subject},
              {"finite", h.finite},
              {"value", h.finite ? std::to_string(h.value) : "infinity"}});
        return 0;
    }
    if (*cassemble || *cexport || *creport) {
        auto G = load_group(group_arg);
        auto fam = build_box_family(G, specs_from_list(G, sigma_arg));
        if (*creport) {
            std::vector<Rat> scales;
            for (const auto& t : split(scales_arg, ',')) scales.push_back(parse_rat(t));
            auto rep = box_dim_report(fam, scales);
            json jr = json::array();
            for (const auto& sr : rep.scales)
                jr.push_back({{"R", to_string(sr.R)},
                              {"S_cap", to_string(sr.S_cap)},
                              {"n", sr.profile.n},
                              {"S", to_string(sr.profile.S)},
                              {"lower_bound_proven", sr.profile.lower_bound_proven},
                              {"complete", sr.complete},
                              {"note", sr.note}});
            json ji = json::array();
            for (const auto& r : rep.injectivity_radii) ji.push_back(to_string(r));
            emit({{"members", fam.labels}, {"scales", jr}, {"injectivity_radii", ji}});
            return 0;
        }
        std::vector<Rat> lambda;
        if (lambda_arg.empty())
            for (size_t k = 0; k < fam.members.size(); ++k)
                lambda.push_back(Rat(1LL << (k + 1)));
        else
            for (const auto& t : split(lambda_arg, ',')) lambda.push_back(parse_rat(t));
        auto b = assemble_box(fam, lambda);
        if (*cexport) {
            if (out_path.empty())
                export_scale_graph(b, parse_rat(r_arg), std::cout);
            else
                export_scale_graph(b, parse_rat(r_arg), out_path);
        }
        json jl = json::array();
        for (const auto& l : b.lambda) jl.push_back(to_string(l));
        int total = 0;
        for (const auto& q : fam.members) total += q.size();
        emit({{"members", fam.labels}, {"lambda", jl}, {"points", total}});
        return 0;
    }
    throw std::logic_error("unhandled subcommand");
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
