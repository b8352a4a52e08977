#include "ordtop/morphisms.hpp"

#include <sstream>

namespace ordtop {

namespace {

void check_map_sizes(const SemilatticeHom& h, int n_x, int n_y, const char* what) {
    if (h.domain_size() != n_x)
        throw InputError(std::string(what) + ": map has " + std::to_string(h.domain_size()) +
                         " entries, domain has " + std::to_string(n_x) + " points");
    for (std::uint8_t v : h.map)
        if (v >= n_y) throw InputError(std::string(what) + ": map value out of codomain range");
}

void check_phi_sizes(const Multimorphism& phi, int n_x, int n_y, const char* what) {
    if (phi.domain_size() != n_x)
        throw InputError(std::string(what) + ": multimap has " + std::to_string(phi.domain_size()) +
                         " entries, domain has " + std::to_string(n_x) + " points");
    for (SubsetMask v : phi.values)
        if (v.ground_size() != n_y)
            throw InputError(std::string(what) + ": value mask does not fit the codomain");
}

/// Chain-finiteness evaluated literally: every chain of the natural order
/// is finite. Constant on finite carriers; kept literal so the audits
/// verify rather than assume it.
bool chain_finite(const TopologizedSemilattice& ts) {
    for (SubsetMask c : ts.natural_order().chains())
        if (c.count() > ts.ground_size()) return false;
    return true;
}

ImageClosedness closedness_of(SubsetMask image, const FiniteTopology& ty) {
    if (ty.is_closed(image)) return {true, std::nullopt};
    const SubsetMask extra = ty.closure(image).minus(image);
    return {false, extra.first()};
}

std::string dump_structures(const TopologizedSemilattice& x, const TopologizedSemilattice& y,
                            const SemilatticeHom& h) {
    std::ostringstream os;
    os << "h = [";
    for (int i = 0; i < h.domain_size(); ++i) os << (i ? "," : "") << static_cast<int>(h.map[static_cast<std::size_t>(i)]);
    os << "], X.op = [";
    for (int a = 0; a < x.ground_size(); ++a)
        for (int b = 0; b < x.ground_size(); ++b) os << x.semilattice().op(a, b) << ((a + 1 == x.ground_size() && b + 1 == x.ground_size()) ? "" : ",");
    os << "], X.opens = [";
    for (std::uint16_t u : x.topology().open_bits()) os << u << ",";
    os << "], Y.op = [";
    for (int a = 0; a < y.ground_size(); ++a)
        for (int b = 0; b < y.ground_size(); ++b) os << y.semilattice().op(a, b) << ",";
    os << "], Y.opens = [";
    for (std::uint16_t u : y.topology().open_bits()) os << u << ",";
    os << "]";
    return os.str();
}

} // namespace

SubsetMask SemilatticeHom::image(int n_y) const {
    std::uint16_t out = 0;
    for (std::uint8_t v : map) out |= static_cast<std::uint16_t>(1u << v);
    return SubsetMask(out, n_y);
}

SubsetMask SemilatticeHom::preimage(SubsetMask b) const {
    std::uint16_t out = 0;
    for (int x = 0; x < domain_size(); ++x)
        if (b.contains(apply(x))) out |= static_cast<std::uint16_t>(1u << x);
    return SubsetMask(out, domain_size());
}

SubsetMask Multimorphism::image(int n_y) const {
    std::uint16_t out = 0;
    for (SubsetMask v : values) out |= v.bits();
    return SubsetMask(out, n_y);
}

SubsetMask Multimorphism::preimage(SubsetMask f) const {
    std::uint16_t out = 0;
    for (int x = 0; x < domain_size(); ++x)
        if (values[static_cast<std::size_t>(x)].intersects(f)) out |= static_cast<std::uint16_t>(1u << x);
    return SubsetMask(out, domain_size());
}

bool Multimorphism::all_values_nonempty() const {
    for (SubsetMask v : values)
        if (v.empty()) return false;
    return true;
}

bool is_homomorphism(const SemilatticeHom& h, const Semilattice& sx, const Semilattice& sy) {
    check_map_sizes(h, sx.ground_size(), sy.ground_size(), "is_homomorphism");
    for (int a = 0; a < sx.ground_size(); ++a)
        for (int b = 0; b < sx.ground_size(); ++b)
            if (h.apply(sx.op(a, b)) != sy.op(h.apply(a), h.apply(b))) return false;
    return true;
}

bool is_continuous(const SemilatticeHom& h, const FiniteTopology& tx, const FiniteTopology& ty) {
    check_map_sizes(h, tx.ground_size(), ty.ground_size(), "is_continuous");
    for (std::uint16_t u : ty.open_bits())
        if (!tx.is_open(h.preimage(SubsetMask(u, ty.ground_size())))) return false;
    return true;
}

bool is_monotone(const SemilatticeHom& h, const FinitePoset& px, const FinitePoset& py) {
    check_map_sizes(h, px.ground_size(), py.ground_size(), "is_monotone");
    for (int a = 0; a < px.ground_size(); ++a)
        for (int b = 0; b < px.ground_size(); ++b)
            if (px.leq(a, b) && !py.leq(h.apply(a), h.apply(b))) return false;
    return true;
}

ImageClosedness image_closed(const SemilatticeHom& h, const TopologizedSemilattice& x,
                             const TopologizedSemilattice& y) {
    check_map_sizes(h, x.ground_size(), y.ground_size(), "image_closed");
    return closedness_of(h.image(y.ground_size()), y.topology());
}

InfFiberReport hom_inf_fiber(const SemilatticeHom& h, const TopologizedSemilattice& x,
                             const TopologizedSemilattice& y, int c) {
    check_map_sizes(h, x.ground_size(), y.ground_size(), "hom_inf_fiber");
    if (c < 0 || c >= y.ground_size()) throw InputError("hom_inf_fiber: point outside codomain");

    if (!is_homomorphism(h, x.semilattice(), y.semilattice()))
        throw HypothesisUnmet("hom_inf_fiber: map is not a homomorphism");
    if (!h.image(y.ground_size()).full())
        throw HypothesisUnmet("hom_inf_fiber: map is not surjective");
    if (!is_continuous(h, x.topology(), y.topology()))
        throw HypothesisUnmet("hom_inf_fiber: map is not continuous");
    const TopologizedPoset ytp = y.as_topologized_poset();
    if (!ytp.closedness_profile().weakly_up_closed)
        throw HypothesisUnmet("hom_inf_fiber: codomain is not weakly up-closed");

    const SubsetMask fiber = h.preimage(SubsetMask::singleton(c, y.ground_size()));
    const int b_c = x.semilattice().meet_of_subset(fiber);

    InfFiberReport report{b_c, h.apply(b_c) == c, false};
    const SubsetMask upper_fiber = h.preimage(y.natural_order().up_set(c));
    report.equals_inf_upper_fiber = (x.semilattice().meet_of_subset(upper_fiber) == b_c);

    if (!report.maps_back_to_c || !report.equals_inf_upper_fiber)
        throw LemmaViolation("hom_inf_fiber: fiber-meet equality failed at c=" + std::to_string(c) +
                             "; " + dump_structures(x, y, h));
    return report;
}

bool is_multimorphism(const Multimorphism& phi, const Semilattice& sx, const Semilattice& sy) {
    check_phi_sizes(phi, sx.ground_size(), sy.ground_size(), "is_multimorphism");
    for (int a = 0; a < sx.ground_size(); ++a)
        for (int b = 0; b < sx.ground_size(); ++b) {
            const SubsetMask prod = sy.op_image(phi.values[static_cast<std::size_t>(a)],
                                                phi.values[static_cast<std::size_t>(b)]);
            if (!prod.subset_of(phi.values[static_cast<std::size_t>(sx.op(a, b))])) return false;
        }
    return true;
}

bool is_upper_semicontinuous(const Multimorphism& phi, const FiniteTopology& tx,
                             const FiniteTopology& ty) {
    check_phi_sizes(phi, tx.ground_size(), ty.ground_size(), "is_upper_semicontinuous");
    for (std::uint16_t u : ty.open_bits()) {
        const SubsetMask f = SubsetMask(u, ty.ground_size()).complement();
        if (!tx.is_closed(phi.preimage(f))) return false;
    }
    return true;
}

bool is_ti_multimorphism(const Multimorphism& phi, const TopologizedSemilattice& y, int i) {
    check_phi_sizes(phi, phi.domain_size(), y.ground_size(), "is_ti_multimorphism");
    if (i != 1 && i != 2) throw InputError("is_ti_multimorphism: i must be 1 or 2");
    for (SubsetMask v : phi.values) {
        if (i == 1 && !y.topology().is_t1_closed_set(v)) return false;
        if (i == 2 && !y.topology().is_t2_closed_set(v)) return false;
    }
    return true;
}

const char* profile_name(TheoremProfile p) {
    switch (p) {
        case TheoremProfile::cf: return "cf";
        case TheoremProfile::ct: return "ct";
        case TheoremProfile::multi_t1: return "multi_T1";
        case TheoremProfile::multi_t2: return "multi_T2";
        case TheoremProfile::gdelta: return "gdelta";
    }
    return "?";
}

std::optional<TheoremProfile> profile_from_name(const std::string& name) {
    if (name == "cf") return TheoremProfile::cf;
    if (name == "ct") return TheoremProfile::ct;
    if (name == "multi_T1") return TheoremProfile::multi_t1;
    if (name == "multi_T2") return TheoremProfile::multi_t2;
    if (name == "gdelta") return TheoremProfile::gdelta;
    return std::nullopt;
}

bool Verdict::hypotheses_hold() const {
    for (const Hypothesis& h : hypotheses)
        if (h.status != HypStatus::holds && h.status != HypStatus::holds_degenerate) return false;
    return true;
}

bool Verdict::any_hypothesis_failed() const {
    for (const Hypothesis& h : hypotheses)
        if (h.status == HypStatus::fails) return true;
    return false;
}

namespace {

HypStatus as_status(bool v) { return v ? HypStatus::holds : HypStatus::fails; }
HypStatus as_degenerate(bool v) { return v ? HypStatus::holds_degenerate : HypStatus::fails; }

HypStatus joint_continuity_status(const TopologizedSemilattice& y) {
    const ContinuityProfile cp = y.continuity_profile();
    if (!cp.jointly_continuous.has_value()) return HypStatus::unevaluated;
    return as_status(*cp.jointly_continuous);
}

Verdict finish(std::vector<Hypothesis> hyps, ImageClosedness img) {
    Verdict v;
    v.hypotheses = std::move(hyps);
    v.conclusion = img.closed;
    v.witness = img.witness;
    v.consistent = !(v.hypotheses_hold() && !v.conclusion);
    return v;
}

} // namespace

Verdict verify_theorem(TheoremProfile profile, const TopologizedSemilattice& x,
                       const TopologizedSemilattice& y, const SemilatticeHom& h) {
    if (profile == TheoremProfile::multi_t1 || profile == TheoremProfile::multi_t2)
        throw ProfileMismatch("profile " + std::string(profile_name(profile)) +
                              " needs a multimorphism");
    check_map_sizes(h, x.ground_size(), y.ground_size(), "verify_theorem");

    std::vector<Hypothesis> hyps;
    hyps.push_back({"h homomorphism", as_status(is_homomorphism(h, x.semilattice(), y.semilattice()))});

    switch (profile) {
        case TheoremProfile::cf:
            hyps.push_back({"X chain-finite", as_degenerate(chain_finite(x))});
            hyps.push_back({"Y Hausdorff", as_status(y.topology().separation_profile().t2)});
            hyps.push_back(
                {"Y semitopological", as_status(y.continuity_profile().separately_continuous)});
            break;
        case TheoremProfile::ct:
            hyps.push_back({"h continuous", as_status(is_continuous(h, x.topology(), y.topology()))});
            hyps.push_back({"X complete", as_degenerate(x.as_topologized_poset().is_complete())});
            hyps.push_back({"Y Hausdorff", as_status(y.topology().separation_profile().t2)});
            hyps.push_back({"Y topological", joint_continuity_status(y)});
            break;
        case TheoremProfile::gdelta:
            hyps.push_back({"h continuous", as_status(is_continuous(h, x.topology(), y.topology()))});
            hyps.push_back({"X complete", as_degenerate(x.as_topologized_poset().is_complete())});
            hyps.push_back({"Y Gdelta-separated", as_status(y.is_gdelta_separated())});
            hyps.push_back(
                {"Y semitopological", as_status(y.continuity_profile().separately_continuous)});
            break;
        default:
            break;
    }
    return finish(std::move(hyps), image_closed(h, x, y));
}

Verdict verify_theorem(TheoremProfile profile, const TopologizedSemilattice& x,
                       const TopologizedSemilattice& y, const Multimorphism& phi) {
    if (profile != TheoremProfile::multi_t1 && profile != TheoremProfile::multi_t2)
        throw ProfileMismatch("profile " + std::string(profile_name(profile)) +
                              " needs a single-valued map");
    check_phi_sizes(phi, x.ground_size(), y.ground_size(), "verify_theorem");

    std::vector<Hypothesis> hyps;
    hyps.push_back(
        {"Phi multimorphism", as_status(is_multimorphism(phi, x.semilattice(), y.semilattice()))});
    if (profile == TheoremProfile::multi_t1) {
        hyps.push_back({"Phi values T1-closed", as_status(is_ti_multimorphism(phi, y, 1))});
        hyps.push_back({"X chain-finite", as_degenerate(chain_finite(x))});
    } else {
        hyps.push_back({"Phi upper semicontinuous",
                        as_status(is_upper_semicontinuous(phi, x.topology(), y.topology()))});
        hyps.push_back({"Phi values T2-closed", as_status(is_ti_multimorphism(phi, y, 2))});
        hyps.push_back({"X complete", as_degenerate(x.as_topologized_poset().is_complete())});
    }
    hyps.push_back({"Y topological", joint_continuity_status(y)});

    return finish(std::move(hyps), closedness_of(phi.image(y.ground_size()), y.topology()));
}

GdeltaClaimReport verify_gdelta_claim(const TopologizedSemilattice& x,
                                      const TopologizedSemilattice& y, const SemilatticeHom& h) {
    check_map_sizes(h, x.ground_size(), y.ground_size(), "verify_gdelta_claim");
    if (!is_homomorphism(h, x.semilattice(), y.semilattice()))
        throw HypothesisUnmet("verify_gdelta_claim: map is not a homomorphism");
    if (!is_continuous(h, x.topology(), y.topology()))
        throw HypothesisUnmet("verify_gdelta_claim: map is not continuous");

    const int n = y.ground_size();
    const SubsetMask z = h.image(n);
    const SubsetMask zbar = y.topology().closure(z);

    GdeltaClaimReport report;
    zbar.for_each([&](int point) {
        ++report.points_checked;
        const SubsetMask base = y.topology().min_nbhd(point);
        const std::uint32_t limit = 1u << n;
        for (std::uint32_t m = 0; m < limit; ++m) {
            const SubsetMask nb(static_cast<std::uint16_t>(m), n);
            if (!base.subset_of(nb)) continue;
            if (!y.topology().is_closed(nb)) continue;
            if (!y.semilattice().is_subsemilattice(nb)) continue;
            ++report.families_checked;
            if (!z.intersects(nb)) report.violations.push_back({point, nb});
        }
    });
    return report;
}

} // namespace ordtop
