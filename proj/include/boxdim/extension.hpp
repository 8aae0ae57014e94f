#pragma once

#include "boxdim/cover.hpp"
#include "boxdim/quotient.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace boxdim {

/// A split short exact sequence 1 -> N -> G -> K -> 1 of marked groups.
/// N is the normal closure in G of `n_seeds`; when N is finitely generated
/// it also carries its own marking (`N`) with an embedding into G.
struct ExtensionData {
    GroupPtr G;
    GroupPtr K;
    std::function<GroupElement(const GroupElement&)> project;  // pi: G -> K
    std::function<GroupElement(const GroupElement&)> section;  // split K -> G
    std::function<bool(const GroupElement&)> in_N;             // membership in ker pi
    std::vector<GroupElement> n_seeds;  // N = normal closure of these in G
    std::optional<MarkedGroup> N;       // marking of N when finitely generated
    std::function<GroupElement(const GroupElement&)> embed_N;  // N -> G
    std::string label;

    /// Checks pi is a homomorphism with kernel N and section a right inverse,
    /// and that N-seeds conjugated by generators stay in N. Sample-based on a
    /// Cayley ball of the given radius; throws on failure.
    void validate(int sample_radius = 3) const;
};

/// Built-in extensions: Z^2 = Z x Z (N the first factor), D_inf = Z x| Z/2,
/// Z/k wr Z = (sum Z/k) x| Z (N not finitely generated), Z^n x| Z.
ExtensionData make_extension_z2();
ExtensionData make_extension_dihedral();
ExtensionData make_extension_lamp(long long k);
ExtensionData make_extension_semidirect(const std::vector<std::vector<long long>>& A);

struct PushforwardFamily {
    std::vector<SubgroupSpec> on_K;  // pi(sigma)
    std::vector<SubgroupSpec> on_N;  // sigma-hat = (N n gHg^-1), coalesced
};

/// The induced families of the paper's extension construction. sigma-hat
/// requires N to be finitely generated (domain error otherwise); conjugates
/// are enumerated over coset representatives of G mod N*G_alpha inside the
/// finite target.
PushforwardFamily pushforward_family(const ExtensionData& ext,
                                     const std::vector<SubgroupSpec>& sigma);

/// pi(H) alone, as a spec on K.
SubgroupSpec pushforward_spec(const ExtensionData& ext, const SubgroupSpec& H);

/// The G-equivariant map rho: G/H -> K/pi(H) with its fiber decomposition.
struct RhoTable {
    ExtensionData ext;
    FiniteQuotient QG;                    // G/H
    FiniteQuotient QK;                    // K/pi(H)
    std::vector<int> rho;                 // G/H coset -> K/pi(H) coset
    std::vector<std::vector<int>> fibers; // K/pi(H) coset -> G/H cosets
};

/// Builds rho from coset representatives and verifies equivariance
/// rho(g * x) = pi(g) * rho(x) for every generator and coset (throws on
/// failure: the table would be inconsistent).
RhoTable rho_map(const ExtensionData& ext, const SubgroupSpec& H);

enum class ClauseVerdict { Pass, Fail, Inconclusive };

/// Per-clause report of the key lemma at scale R. Clause 5's set equality is
/// certified inside a finite window of G; when the window is exhausted before
/// the equality is established the clause is Inconclusive (never a false
/// pass).
struct KeyLemmaReport {
    ClauseVerdict clause1 = ClauseVerdict::Fail;  // rho exists, equivariant
    ClauseVerdict clause2 = ClauseVerdict::Fail;  // fibers are p_G(gN), N-invariant
    ClauseVerdict clause3 = ClauseVerdict::Fail;  // index product, constant fibers
    ClauseVerdict clause4 = ClauseVerdict::Fail;  // quotient-metric identity
    ClauseVerdict clause5 = ClauseVerdict::Fail;  // R-neighborhood equality + R-net
    bool window_limited = false;                  // clause 5 certified in a window
    std::string detail;

    bool all_pass() const {
        return clause1 == ClauseVerdict::Pass && clause2 == ClauseVerdict::Pass &&
               clause3 == ClauseVerdict::Pass && clause4 == ClauseVerdict::Pass &&
               clause5 == ClauseVerdict::Pass;
    }
};

KeyLemmaReport verify_key_lemma(const ExtensionData& ext, const SubgroupSpec& H,
                                const Rat& R, size_t element_cap = 200000);

/// {rho^-1(U) n V : U in base, V in a fiber cover over a coset meeting U}.
/// `fiber_covers[y]` covers fiber y as a subspace (point i of the subspace is
/// rt.fibers[y][i]). Verified: covering, multiplicity <= mult(base) * max
/// fiber multiplicity.
Cover fiber_product_cover(const RhoTable& rt, const Cover& base_cover,
                          const std::vector<Cover>& fiber_covers);

}  // namespace boxdim
