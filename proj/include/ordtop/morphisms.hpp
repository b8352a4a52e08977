#ifndef ORDTOP_MORPHISMS_HPP
#define ORDTOP_MORPHISMS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ordtop/semilattice.hpp"

namespace ordtop {

/// A total map {0..n_X-1} -> {0..n_Y-1}.
struct SemilatticeHom {
    std::vector<std::uint8_t> map;

    int domain_size() const { return static_cast<int>(map.size()); }
    int apply(int x) const { return map[static_cast<std::size_t>(x)]; }
    SubsetMask image(int n_y) const;
    SubsetMask preimage(SubsetMask b) const;
};

/// A multi-valued map: one value set over Y per point of X. Value sets may
/// be empty unless a caller works in nonempty mode.
struct Multimorphism {
    std::vector<SubsetMask> values;

    int domain_size() const { return static_cast<int>(values.size()); }
    SubsetMask image(int n_y) const;
    /// {x : values[x] meets f}.
    SubsetMask preimage(SubsetMask f) const;
    bool all_values_nonempty() const;
};

bool is_homomorphism(const SemilatticeHom& h, const Semilattice& sx, const Semilattice& sy);
bool is_continuous(const SemilatticeHom& h, const FiniteTopology& tx, const FiniteTopology& ty);
bool is_monotone(const SemilatticeHom& h, const FinitePoset& px, const FinitePoset& py);

struct ImageClosedness {
    bool closed;
    /// A point of closure(image) \ image when not closed (smallest index).
    std::optional<int> witness;
};

ImageClosedness image_closed(const SemilatticeHom& h, const TopologizedSemilattice& x,
                             const TopologizedSemilattice& y);

struct InfFiberReport {
    int b_c;                    // meet of the fiber over c
    bool maps_back_to_c;        // h(b_c) = c
    bool equals_inf_upper_fiber; // b_c = inf of the preimage of the upper cone of c
};

/// Computes the meet of the fiber h^{-1}(c) and checks the two equalities
/// above. Requires h to be a continuous surjective homomorphism and Y to be
/// weakly up-closed (throws HypothesisUnmet otherwise). An equality failure
/// would falsify a verified statement and raises LemmaViolation with a full
/// structure dump.
InfFiberReport hom_inf_fiber(const SemilatticeHom& h, const TopologizedSemilattice& x,
                             const TopologizedSemilattice& y, int c);

bool is_multimorphism(const Multimorphism& phi, const Semilattice& sx, const Semilattice& sy);
/// Preimages of closed sets are closed.
bool is_upper_semicontinuous(const Multimorphism& phi, const FiniteTopology& tx,
                             const FiniteTopology& ty);
/// Every value set is T1-closed (i = 1) or T2-closed (i = 2) in Y.
bool is_ti_multimorphism(const Multimorphism& phi, const TopologizedSemilattice& y, int i);

enum class TheoremProfile { cf, ct, multi_t1, multi_t2, gdelta };

const char* profile_name(TheoremProfile p);
std::optional<TheoremProfile> profile_from_name(const std::string& name);

enum class HypStatus { holds, fails, holds_degenerate, unevaluated };

struct Hypothesis {
    std::string name;
    HypStatus status;
};

struct Verdict {
    std::vector<Hypothesis> hypotheses;
    bool conclusion;   // the image is closed in Y
    bool consistent;   // not (all hypotheses hold and the conclusion fails)
    std::optional<int> witness;

    bool hypotheses_hold() const;
    bool any_hypothesis_failed() const;
};

/// Evaluates every hypothesis of the named closed-image statement literally
/// and the closed-image conclusion, for single-valued maps (profiles cf,
/// ct, gdelta). Throws ProfileMismatch for multimorphism profiles.
Verdict verify_theorem(TheoremProfile profile, const TopologizedSemilattice& x,
                       const TopologizedSemilattice& y, const SemilatticeHom& h);

/// Multimorphism profiles multi_t1 and multi_t2.
Verdict verify_theorem(TheoremProfile profile, const TopologizedSemilattice& x,
                       const TopologizedSemilattice& y, const Multimorphism& phi);

struct GdeltaClaimViolation {
    int point;
    SubsetMask neighborhood;
};

struct GdeltaClaimReport {
    int points_checked = 0;
    std::uint64_t families_checked = 0;
    std::vector<GdeltaClaimViolation> violations;
};

/// For Z = h(X), every point y of closure(Z) and every closed-neighborhood
/// family of y whose intersection is a subsemilattice, checks that the
/// intersection meets Z. Families are represented by their achievable
/// intersections (closed neighborhoods of y). Requires h to be a continuous
/// homomorphism.
GdeltaClaimReport verify_gdelta_claim(const TopologizedSemilattice& x,
                                      const TopologizedSemilattice& y, const SemilatticeHom& h);

} // namespace ordtop

#endif
