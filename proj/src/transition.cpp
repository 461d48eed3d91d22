#include "leonard/transition.hpp"

#include <sstream>
#include <utility>

namespace leonard {

// ---------------------------------------------------------------------------
// tags
// ---------------------------------------------------------------------------

const std::array<BasisTag, 24>& all_basis_tags() {
    static const std::array<BasisTag, 24> tags = [] {
        std::array<BasisTag, 24> t;
        std::size_t k = 0;
        for (BasisFamily fam : {BasisFamily::E, BasisFamily::Es, BasisFamily::TauA,
                                BasisFamily::EtaA, BasisFamily::TauAs, BasisFamily::EtaAs}) {
            bool a_side = fam == BasisFamily::E || fam == BasisFamily::TauA ||
                          fam == BasisFamily::EtaA;
            for (Orientation o : {Orientation::Forward, Orientation::Reversed}) {
                if (a_side) {
                    t[k++] = {fam, o, AnchorId::Xis0};
                    t[k++] = {fam, o, AnchorId::Xisd};
                } else {
                    t[k++] = {fam, o, AnchorId::Xi0};
                    t[k++] = {fam, o, AnchorId::Xid};
                }
            }
        }
        return t;
    }();
    return tags;
}

namespace {

const char* family_name(BasisFamily f) {
    switch (f) {
        case BasisFamily::E: return "E";
        case BasisFamily::Es: return "Es";
        case BasisFamily::TauA: return "tauA";
        case BasisFamily::EtaA: return "etaA";
        case BasisFamily::TauAs: return "tauAs";
        case BasisFamily::EtaAs: return "etaAs";
    }
    return "?";
}

const char* anchor_name(AnchorId a) {
    switch (a) {
        case AnchorId::Xi0: return "xi0";
        case AnchorId::Xid: return "xid";
        case AnchorId::Xis0: return "xis0";
        case AnchorId::Xisd: return "xisd";
    }
    return "?";
}

std::size_t tag_index(const BasisTag& tag) {
    const auto& all = all_basis_tags();
    for (std::size_t i = 0; i < all.size(); ++i)
        if (all[i] == tag) return i;
    throw Error("illegal basis tag " + tag_name(tag));
}

} // namespace

std::string tag_name(const BasisTag& tag) {
    return std::string(family_name(tag.family)) + "." +
           (tag.orientation == Orientation::Forward ? "fwd" : "rev") + "." +
           anchor_name(tag.anchor);
}

BasisTag parse_tag(const std::string& text) {
    for (const auto& tag : all_basis_tags())
        if (tag_name(tag) == text) return tag;
    std::string legal;
    for (const auto& tag : all_basis_tags()) legal += tag_name(tag) + " ";
    throw ParseError("unknown basis tag '" + text + "'; legal tags: " + legal);
}

// ---------------------------------------------------------------------------
// basis enumeration
// ---------------------------------------------------------------------------

namespace {

const Vector& anchor_of(const AnchorVectors& anchors, AnchorId a) {
    switch (a) {
        case AnchorId::Xi0: return anchors.xi0;
        case AnchorId::Xid: return anchors.xid;
        case AnchorId::Xis0: return anchors.xis0;
        case AnchorId::Xisd: return anchors.xisd;
    }
    throw Error("bad anchor id");
}

const Matrix& family_matrix(const LeonardSystem& sys, BasisFamily fam, std::size_t i) {
    switch (fam) {
        case BasisFamily::E: return sys.E(i);
        case BasisFamily::Es: return sys.Estar(i);
        case BasisFamily::TauA: return sys.tau_A(i);
        case BasisFamily::EtaA: return sys.eta_A(i);
        case BasisFamily::TauAs: return sys.tau_Astar(i);
        case BasisFamily::EtaAs: return sys.eta_Astar(i);
    }
    throw Error("bad basis family");
}

} // namespace

std::map<std::size_t, BasisSet> enumerate_bases(const LeonardSystem& sys,
                                                const AnchorVectors& anchors) {
    std::size_t d = sys.d();
    std::map<std::size_t, BasisSet> out;
    for (const auto& tag : all_basis_tags()) {
        BasisSet set;
        set.tag = tag;
        if (tag.orientation == Orientation::Reversed) {
            // the forward set precedes its reversal in tag order; reuse it
            BasisTag fwd = tag;
            fwd.orientation = Orientation::Forward;
            const BasisSet& base = out.at(tag_index(fwd));
            set.vectors.assign(base.vectors.rbegin(), base.vectors.rend());
        } else {
            const Vector& xi = anchor_of(anchors, tag.anchor);
            for (std::size_t i = 0; i <= d; ++i)
                set.vectors.push_back(family_matrix(sys, tag.family, i) * xi);
        }
        if (!is_basis(set.vectors))
            throw Error("sequence " + tag_name(tag) + " failed the rank check");
        out.emplace(tag_index(tag), std::move(set));
    }
    return out;
}

// ---------------------------------------------------------------------------
// the formula table
// ---------------------------------------------------------------------------

namespace {

using WK = WordFactor::Kind;
using CK = TermCoeff::Kind;

struct Template {
    GlobalScalar global;
    TermCoeff coeff;
    std::vector<WordFactor> word;
};

GlobalScalar g_plain() { return {}; }

// the form is symmetric, so each pair is stored in a fixed order
InnerRatio normalized_inner(InnerRatio ir) {
    if (static_cast<int>(ir.num_u) > static_cast<int>(ir.num_v)) std::swap(ir.num_u, ir.num_v);
    if (static_cast<int>(ir.den_u) > static_cast<int>(ir.den_v)) std::swap(ir.den_u, ir.den_v);
    return ir;
}

GlobalScalar g_inner(AnchorId nu, AnchorId nv, AnchorId du, AnchorId dv) {
    GlobalScalar g;
    g.inner = normalized_inner(InnerRatio{nu, nv, du, dv});
    return g;
}

GlobalScalar g_poly(PolyAtom p, SeqProduct s, AnchorId nu, AnchorId nv, AnchorId du,
                    AnchorId dv) {
    GlobalScalar g = g_inner(nu, nv, du, dv);
    g.poly_over = {p, s};
    return g;
}

GlobalScalar g_recip(Corner c) {
    GlobalScalar g;
    g.recip_corner_trace = c;
    return g;
}

TermCoeff c_one() { return {}; }
TermCoeff c_tr(TraceFace f) { return {CK::RecipTrace, f, SeqProduct::Varphi, false}; }
TermCoeff c_eigA() { return {CK::EigProdA, TraceFace::ErEs0, SeqProduct::Varphi, false}; }
TermCoeff c_eigAs() { return {CK::EigProdAstar, TraceFace::ErEs0, SeqProduct::Varphi, false}; }
TermCoeff c_up(SeqProduct s) { return {CK::RecipSeqUp, TraceFace::ErEs0, s, false}; }
TermCoeff c_down(SeqProduct s) { return {CK::RecipSeqDown, TraceFace::ErEs0, s, false}; }

WordFactor w(WK k, bool flip = false) { return {k, flip}; }

constexpr AnchorId X0 = AnchorId::Xi0;
constexpr AnchorId Xd = AnchorId::Xid;
constexpr AnchorId Xs0 = AnchorId::Xis0;
constexpr AnchorId Xsd = AnchorId::Xisd;
constexpr SeqProduct VP = SeqProduct::Varphi;
constexpr SeqProduct PH = SeqProduct::Phi;

// display group selected by the source family and anchor
std::size_t display_group_of(BasisFamily fam, AnchorId anchor) {
    bool at_d = anchor == AnchorId::Xisd || anchor == AnchorId::Xid;
    switch (fam) {
        case BasisFamily::E: return at_d ? 1 : 0;
        case BasisFamily::Es: return at_d ? 3 : 2;
        case BasisFamily::TauA: return at_d ? 6 : 4;
        case BasisFamily::EtaA: return at_d ? 7 : 5;
        case BasisFamily::TauAs: return at_d ? 10 : 8;
        case BasisFamily::EtaAs: return at_d ? 11 : 9;
    }
    throw Error("bad family");
}

// Display selector: each group has four displays, keyed by the target
// anchor (the target side is implied by it).  Transcribed display by
// display from the closed forms; every descriptor is
//   kappa * sum_r c_r X_{s(r)} W(r).
Template display(std::size_t group, AnchorId target_anchor) {
    bool to_xis0 = target_anchor == Xs0, to_xisd = target_anchor == Xsd;
    bool to_xi0 = target_anchor == X0;
    switch (group) {
        case 0: // sources {E_i xis0} / {E_{d-i} xis0}
            if (to_xis0) return {g_plain(), c_tr(TraceFace::ErEs0), {w(WK::Es0), w(WK::Er)}};
            if (to_xisd)
                return {g_poly(PolyAtom::TauStarD, PH, Xd, Xsd, Xd, Xs0), c_eigA(),
                        {w(WK::Esd), w(WK::Er)}};
            if (to_xi0)
                return {g_inner(X0, X0, X0, Xs0), c_tr(TraceFace::ErEs0),
                        {w(WK::E0), w(WK::Es0), w(WK::Er)}};
            return {g_inner(Xd, Xd, Xd, Xs0), c_tr(TraceFace::ErEs0),
                    {w(WK::Ed), w(WK::Es0), w(WK::Er)}};
        case 1: // sources {E_i xisd} / {E_{d-i} xisd}
            if (to_xis0)
                return {g_poly(PolyAtom::EtaStarD, VP, Xd, Xs0, Xd, Xsd), c_eigA(),
                        {w(WK::Es0), w(WK::Er)}};
            if (to_xisd) return {g_plain(), c_tr(TraceFace::ErEsd), {w(WK::Esd), w(WK::Er)}};
            if (to_xi0)
                return {g_inner(X0, X0, X0, Xsd), c_tr(TraceFace::ErEsd),
                        {w(WK::E0), w(WK::Esd), w(WK::Er)}};
            return {g_inner(Xd, Xd, Xd, Xsd), c_tr(TraceFace::ErEsd),
                    {w(WK::Ed), w(WK::Esd), w(WK::Er)}};
        case 2: // sources {E*_i xi0} / {E*_{d-i} xi0}
            if (to_xis0)
                return {g_inner(Xs0, Xs0, X0, Xs0), c_tr(TraceFace::EsrE0),
                        {w(WK::Es0), w(WK::E0), w(WK::Esr)}};
            if (to_xisd)
                return {g_inner(Xsd, Xsd, X0, Xsd), c_tr(TraceFace::EsrE0),
                        {w(WK::Esd), w(WK::E0), w(WK::Esr)}};
            if (to_xi0) return {g_plain(), c_tr(TraceFace::EsrE0), {w(WK::E0), w(WK::Esr)}};
            return {g_poly(PolyAtom::TauD, PH, Xd, Xsd, X0, Xsd), c_eigAs(),
                    {w(WK::Ed), w(WK::Esr)}};
        case 3: // sources {E*_i xid} / {E*_{d-i} xid}
            if (to_xis0)
                return {g_inner(Xs0, Xs0, Xd, Xs0), c_tr(TraceFace::EsrEd),
                        {w(WK::Es0), w(WK::Ed), w(WK::Esr)}};
            if (to_xisd)
                return {g_inner(Xsd, Xsd, Xd, Xsd), c_tr(TraceFace::EsrEd),
                        {w(WK::Esd), w(WK::Ed), w(WK::Esr)}};
            if (to_xi0)
                return {g_poly(PolyAtom::EtaD, VP, X0, Xsd, Xd, Xsd), c_eigAs(),
                        {w(WK::E0), w(WK::Esr)}};
            return {g_plain(), c_tr(TraceFace::EsrEd), {w(WK::Ed), w(WK::Esr)}};
        case 4: // sources {tau_i(A) xis0} / {tau_{d-i}(A) xis0}
            if (to_xis0)
                return {g_recip(Corner::E0Es0), c_up(VP),
                        {w(WK::Es0), w(WK::E0), w(WK::TauAs)}};
            if (to_xisd)
                return {g_poly(PolyAtom::TauStarD, VP, X0, Xsd, X0, Xs0), c_one(),
                        {w(WK::Esd), w(WK::EtaA, true)}};
            if (to_xi0)
                return {g_inner(X0, X0, X0, Xs0), c_up(VP), {w(WK::E0), w(WK::TauAs)}};
            return {g_poly(PolyAtom::TauStarD, PH, Xd, Xd, Xd, Xs0), c_one(),
                    {w(WK::Ed), w(WK::Esd), w(WK::EtaA, true)}};
        case 5: // sources {eta_i(A) xis0} / {eta_{d-i}(A) xis0}
            if (to_xis0)
                return {g_recip(Corner::EdEs0), c_up(PH),
                        {w(WK::Es0), w(WK::Ed), w(WK::TauAs)}};
            if (to_xisd)
                return {g_poly(PolyAtom::TauStarD, PH, Xd, Xsd, Xd, Xs0), c_one(),
                        {w(WK::Esd), w(WK::TauA, true)}};
            if (to_xi0)
                return {g_poly(PolyAtom::TauStarD, VP, X0, X0, X0, Xs0), c_one(),
                        {w(WK::E0), w(WK::Esd), w(WK::TauA, true)}};
            return {g_inner(Xd, Xd, Xd, Xs0), c_up(PH), {w(WK::Ed), w(WK::TauAs)}};
        case 6: // sources {tau_i(A) xisd} / {tau_{d-i}(A) xisd}
            if (to_xis0)
                return {g_poly(PolyAtom::EtaStarD, PH, X0, Xs0, X0, Xsd), c_one(),
                        {w(WK::Es0), w(WK::EtaA, true)}};
            if (to_xisd)
                return {g_recip(Corner::E0Esd), c_down(PH),
                        {w(WK::Esd), w(WK::E0), w(WK::EtaAs)}};
            if (to_xi0)
                return {g_inner(X0, X0, X0, Xsd), c_down(PH), {w(WK::E0), w(WK::EtaAs)}};
            return {g_poly(PolyAtom::EtaStarD, VP, Xd, Xd, Xd, Xsd), c_one(),
                    {w(WK::Ed), w(WK::Es0), w(WK::EtaA, true)}};
        case 7: // sources {eta_i(A) xisd} / {eta_{d-i}(A) xisd}
            if (to_xis0)
                return {g_poly(PolyAtom::EtaStarD, VP, Xd, Xs0, Xd, Xsd), c_one(),
                        {w(WK::Es0), w(WK::TauA, true)}};
            if (to_xisd)
                return {g_recip(Corner::EdEsd), c_down(VP),
                        {w(WK::Esd), w(WK::Ed), w(WK::EtaAs)}};
            if (to_xi0)
                return {g_poly(PolyAtom::EtaStarD, PH, X0, X0, X0, Xsd), c_one(),
                        {w(WK::E0), w(WK::Es0), w(WK::TauA, true)}};
            return {g_inner(Xd, Xd, Xd, Xsd), c_down(VP), {w(WK::Ed), w(WK::EtaAs)}};
        case 8: // sources {tau*_i(A*) xi0} / {tau*_{d-i}(A*) xi0}
            if (to_xis0)
                return {g_inner(Xs0, Xs0, X0, Xs0), c_up(VP), {w(WK::Es0), w(WK::TauA)}};
            if (to_xisd)
                return {g_poly(PolyAtom::TauD, PH, Xsd, Xsd, X0, Xsd), c_one(),
                        {w(WK::Esd), w(WK::Ed), w(WK::EtaAs, true)}};
            if (to_xi0)
                return {g_recip(Corner::E0Es0), c_up(VP),
                        {w(WK::E0), w(WK::Es0), w(WK::TauA)}};
            return {g_poly(PolyAtom::TauD, VP, Xd, Xs0, X0, Xs0), c_one(),
                    {w(WK::Ed), w(WK::EtaAs, true)}};
        case 9: // sources {eta*_i(A*) xi0} / {eta*_{d-i}(A*) xi0}
            if (to_xis0)
                return {g_poly(PolyAtom::TauD, VP, Xs0, Xs0, X0, Xs0), c_one(),
                        {w(WK::Es0), w(WK::Ed), w(WK::TauAs, true)}};
            if (to_xisd)
                return {g_inner(Xsd, Xsd, X0, Xsd), c_down(PH), {w(WK::Esd), w(WK::TauA)}};
            if (to_xi0)
                return {g_recip(Corner::E0Esd), c_down(PH),
                        {w(WK::E0), w(WK::Esd), w(WK::TauA)}};
            return {g_poly(PolyAtom::TauD, PH, Xd, Xsd, X0, Xsd), c_one(),
                    {w(WK::Ed), w(WK::TauAs, true)}};
        case 10: // sources {tau*_i(A*) xid} / {tau*_{d-i}(A*) xid}
            if (to_xis0)
                return {g_inner(Xs0, Xs0, Xd, Xs0), c_up(PH), {w(WK::Es0), w(WK::EtaA)}};
            if (to_xisd)
                return {g_poly(PolyAtom::EtaD, VP, Xsd, Xsd, Xd, Xsd), c_one(),
                        {w(WK::Esd), w(WK::E0), w(WK::EtaAs, true)}};
            if (to_xi0)
                return {g_poly(PolyAtom::EtaD, PH, X0, Xs0, Xd, Xs0), c_one(),
                        {w(WK::E0), w(WK::EtaAs, true)}};
            return {g_recip(Corner::EdEs0), c_up(PH), {w(WK::Ed), w(WK::Es0), w(WK::EtaA)}};
        case 11: // sources {eta*_i(A*) xid} / {eta*_{d-i}(A*) xid}
            if (to_xis0)
                return {g_poly(PolyAtom::EtaD, PH, Xs0, Xs0, Xd, Xs0), c_one(),
                        {w(WK::Es0), w(WK::E0), w(WK::TauAs, true)}};
            if (to_xisd)
                return {g_inner(Xsd, Xsd, Xd, Xsd), c_down(VP), {w(WK::Esd), w(WK::EtaA)}};
            if (to_xi0)
                return {g_poly(PolyAtom::EtaD, VP, X0, Xsd, Xd, Xsd), c_one(),
                        {w(WK::E0), w(WK::TauAs, true)}};
            return {g_recip(Corner::EdEsd), c_down(VP), {w(WK::Ed), w(WK::Esd), w(WK::EtaA)}};
    }
    throw Error("bad display group");
}

std::string source_display_name(std::size_t group, Orientation o) {
    static const char* fwd[12] = {"Eivs0",     "Eivsd",     "Esiv0",      "Esivd",
                                  "tauiAvs0",  "etaiAvs0",  "tauiAvsd",   "etaiAvsd",
                                  "tausiAsv0", "etasiAsv0", "tausiAsvd",  "etasiAsvd"};
    static const char* rev[12] = {"Ed-ivs0",     "Ed-ivsd",     "Esd-iv0",      "Esd-ivd",
                                  "taud-iAvs0",  "etad-iAvs0",  "taud-iAvsd",   "etad-iAvsd",
                                  "tausd-iAsv0", "etasd-iAsv0", "tausd-iAsvd",  "etasd-iAsvd"};
    return (o == Orientation::Forward ? fwd : rev)[group];
}

std::string target_display_name(AnchorId a) {
    switch (a) {
        case AnchorId::Xis0: return "Xivs0";
        case AnchorId::Xisd: return "Xivsd";
        case AnchorId::Xi0: return "Xiv0";
        case AnchorId::Xid: return "Xivd";
    }
    return "?";
}

} // namespace

bool TransitionFormula::same_content(const TransitionFormula& o) const {
    return same_summation(o) && global == o.global;
}

bool TransitionFormula::same_summation(const TransitionFormula& o) const {
    return source == o.source && target == o.target && coeff == o.coeff && word == o.word &&
           reverse_x == o.reverse_x;
}

TransitionFormula formula(const BasisTag& source, const BasisTag& target) {
    tag_index(source); // validates legality
    tag_index(target);
    std::size_t group = display_group_of(source.family, source.anchor);
    Template t = display(group, target.anchor);
    TransitionFormula f;
    f.source = source;
    f.target = target;
    f.global = t.global;
    f.coeff = t.coeff;
    f.word = t.word;
    f.reverse_x = source.orientation == Orientation::Reversed;
    f.equation_tag = "eq:" + source_display_name(group, source.orientation) + "to" +
                     target_display_name(target.anchor);
    return f;
}

// ---------------------------------------------------------------------------
// evaluation
// ---------------------------------------------------------------------------

TransitionContext::TransitionContext(const LeonardSystem& sys, GramForm gram,
                                     AnchorVectors anchors)
    : sys_(sys), gram_(std::move(gram)), anchors_(std::move(anchors)), pa_(parameter_array(sys)),
      bases_(enumerate_bases(sys_, anchors_)) {
    std::size_t d = sys_.d();
    for (BasisFamily fam : {BasisFamily::E, BasisFamily::Es, BasisFamily::TauA,
                            BasisFamily::EtaA, BasisFamily::TauAs, BasisFamily::EtaAs}) {
        std::vector<Matrix> list;
        for (std::size_t i = 0; i <= d; ++i) list.push_back(family_matrix(sys_, fam, i));
        x_.push_back(std::move(list));
    }
    for (TraceFace face : {TraceFace::ErEs0, TraceFace::ErEsd, TraceFace::EsrE0,
                           TraceFace::EsrEd}) {
        std::vector<FieldElement> tr;
        for (std::size_t r = 0; r <= d; ++r) {
            switch (face) {
                case TraceFace::ErEs0: tr.push_back(trace_of_product(sys_.E(r), sys_.Estar(0))); break;
                case TraceFace::ErEsd: tr.push_back(trace_of_product(sys_.E(r), sys_.Estar(d))); break;
                case TraceFace::EsrE0: tr.push_back(trace_of_product(sys_.Estar(r), sys_.E(0))); break;
                case TraceFace::EsrEd: tr.push_back(trace_of_product(sys_.Estar(r), sys_.E(d))); break;
            }
        }
        traces_.push_back(std::move(tr));
    }
}

const Vector& TransitionContext::anchor(AnchorId a) const { return anchor_of(anchors_, a); }

const Matrix& TransitionContext::x_factor(BasisFamily fam, std::size_t i) const {
    return x_[static_cast<std::size_t>(fam)].at(i);
}

const BasisSet& TransitionContext::basis(const BasisTag& tag) const {
    return bases_.at(tag_index(tag));
}

FieldElement TransitionContext::inner_of(AnchorId u, AnchorId v) const {
    return inner(gram_, anchor(u), anchor(v));
}

FieldElement TransitionContext::trace_at(TraceFace face, std::size_t r) const {
    return traces_[static_cast<std::size_t>(face)].at(r);
}

FieldElement TransitionContext::corner_trace(Corner c) const {
    std::size_t d = sys_.d();
    switch (c) {
        case Corner::E0Es0: return trace_at(TraceFace::ErEs0, 0);
        case Corner::E0Esd: return trace_at(TraceFace::ErEsd, 0);
        case Corner::EdEs0: return trace_at(TraceFace::ErEs0, d);
        case Corner::EdEsd: return trace_at(TraceFace::ErEsd, d);
    }
    throw Error("bad corner");
}

FieldElement TransitionContext::poly_atom(PolyAtom p) const {
    std::size_t d = sys_.d();
    switch (p) {
        case PolyAtom::TauD: return sys_.tau_scalar(d, sys_.theta(d));
        case PolyAtom::EtaD: return sys_.eta_scalar(d, sys_.theta(0));
        case PolyAtom::TauStarD: return sys_.tau_star_scalar(d, sys_.theta_star(d));
        case PolyAtom::EtaStarD: return sys_.eta_star_scalar(d, sys_.theta_star(0));
    }
    throw Error("bad poly atom");
}

FieldElement TransitionContext::seq_product(SeqProduct s) const {
    return s == SeqProduct::Varphi ? pa_.varphi_product() : pa_.phi_product();
}

FieldElement TransitionContext::seq_prefix(SeqProduct s, std::size_t r) const {
    const auto& seq = s == SeqProduct::Varphi ? pa_.varphi() : pa_.phi();
    FieldElement p = field_one(sys_.field());
    for (std::size_t k = 0; k < r; ++k) p *= seq[k];
    return p;
}

FieldElement TransitionContext::seq_suffix(SeqProduct s, std::size_t r) const {
    const auto& seq = s == SeqProduct::Varphi ? pa_.varphi() : pa_.phi();
    FieldElement p = field_one(sys_.field());
    for (std::size_t k = 0; k < r; ++k) p *= seq[seq.size() - 1 - k];
    return p;
}

namespace {

FieldElement nonzero_or_throw(FieldElement v, const char* what) {
    if (v.is_zero()) throw Error(std::string("zero denominator: ") + what);
    return v;
}

FieldElement term_coeff_value(const TermCoeff& c, std::size_t r, std::size_t d,
                              const TransitionContext& ctx) {
    std::size_t rr = c.idx_flipped ? d - r : r;
    const LeonardSystem& sys = ctx.system();
    switch (c.kind) {
        case CK::One: return field_one(sys.field());
        case CK::RecipTrace:
            return nonzero_or_throw(ctx.trace_at(c.face, rr), "per-term trace").inverse();
        case CK::EigProdA:
            return sys.tau_scalar(rr, sys.theta(rr)) * sys.eta_scalar(d - rr, sys.theta(rr));
        case CK::EigProdAstar:
            return sys.tau_star_scalar(rr, sys.theta_star(rr)) *
                   sys.eta_star_scalar(d - rr, sys.theta_star(rr));
        case CK::RecipSeqUp: return ctx.seq_prefix(c.seq, rr).inverse();
        case CK::RecipSeqDown: return ctx.seq_suffix(c.seq, rr).inverse();
    }
    throw Error("bad coefficient kind");
}

const Matrix& word_factor_matrix(const WordFactor& wf, std::size_t r, std::size_t d,
                                 const LeonardSystem& sys) {
    std::size_t rr = wf.idx_flipped ? d - r : r;
    switch (wf.kind) {
        case WK::E0: return sys.E(0);
        case WK::Ed: return sys.E(d);
        case WK::Es0: return sys.Estar(0);
        case WK::Esd: return sys.Estar(d);
        case WK::Er: return sys.E(rr);
        case WK::Esr: return sys.Estar(rr);
        case WK::TauA: return sys.tau_A(rr);
        case WK::EtaA: return sys.eta_A(rr);
        case WK::TauAs: return sys.tau_Astar(rr);
        case WK::EtaAs: return sys.eta_Astar(rr);
    }
    throw Error("bad word factor");
}

} // namespace

FieldElement global_scalar_value(const TransitionFormula& f, const TransitionContext& ctx) {
    const FieldSpec& fld = ctx.system().field();
    FieldElement kappa = field_one(fld);
    if (f.global.poly_over)
        kappa *= ctx.poly_atom(f.global.poly_over->first) /
                 nonzero_or_throw(ctx.seq_product(f.global.poly_over->second),
                                  "split-sequence product");
    if (f.global.inner) {
        const InnerRatio& ir = *f.global.inner;
        kappa *= ctx.inner_of(ir.num_u, ir.num_v) /
                 nonzero_or_throw(ctx.inner_of(ir.den_u, ir.den_v), "anchor inner product");
    }
    if (f.global.recip_corner_trace)
        kappa *= nonzero_or_throw(ctx.corner_trace(*f.global.recip_corner_trace),
                                  "corner trace").inverse();
    return kappa;
}

Matrix evaluate(const TransitionFormula& f, const TransitionContext& ctx) {
    const LeonardSystem& sys = ctx.system();
    std::size_t d = ctx.d();
    const FieldSpec& fld = sys.field();

    FieldElement kappa = global_scalar_value(f, ctx);
    if (f.global_extra.field() == fld) kappa *= f.global_extra;

    Matrix acc = Matrix::zero(d + 1, d + 1, fld);
    for (std::size_t r = 0; r <= d; ++r) {
        std::size_t s = f.reverse_x ? d - r : r;
        std::size_t x_idx = f.target.orientation == Orientation::Forward ? s : d - s;
        Matrix term = ctx.x_factor(f.target.family, x_idx);
        for (const auto& wf : f.word) term = term * word_factor_matrix(wf, r, d, sys);
        FieldElement c = term_coeff_value(f.coeff, r, d, ctx);
        if (r < f.term_extras.size() && f.term_extras[r].field() == fld) c *= f.term_extras[r];
        acc = acc + term.scaled(c);
    }
    return acc.scaled(kappa);
}

Matrix evaluate(const TransitionFormula& f, const LeonardSystem& sys, const GramForm& gram,
                const AnchorVectors& anchors) {
    return evaluate(f, TransitionContext(sys, gram, anchors));
}

Matrix oracle_change_of_basis(const BasisSet& u, const BasisSet& v) {
    Matrix U = Matrix::from_columns(u.vectors);
    Matrix V = Matrix::from_columns(v.vectors);
    return V * inverse(U);
}

TransitionReport verify_all(const TransitionContext& ctx) {
    TransitionReport rep;
    for (const auto& src : all_basis_tags()) {
        for (const auto& tgt : all_basis_tags()) {
            TransitionFormula f = formula(src, tgt);
            Matrix T = evaluate(f, ctx);
            Matrix oracle = oracle_change_of_basis(ctx.basis(src), ctx.basis(tgt));
            PairVerdict pv{src, tgt, f.equation_tag, T == oracle};
            if (pv.pass) ++rep.passed;
            rep.pairs.push_back(std::move(pv));
        }
    }
    return rep;
}

TransitionReport verify_all(const LeonardSystem& sys, const GramForm& gram,
                            const AnchorVectors& anchors) {
    return verify_all(TransitionContext(sys, gram, anchors));
}

// ---------------------------------------------------------------------------
// dihedral relabeling
// ---------------------------------------------------------------------------

namespace {

enum class Gen { Down, Ddown, Star };

AnchorId relabel_anchor(Gen g, AnchorId a) {
    switch (g) {
        case Gen::Down:
            if (a == AnchorId::Xis0) return AnchorId::Xisd;
            if (a == AnchorId::Xisd) return AnchorId::Xis0;
            return a;
        case Gen::Ddown:
            if (a == AnchorId::Xi0) return AnchorId::Xid;
            if (a == AnchorId::Xid) return AnchorId::Xi0;
            return a;
        case Gen::Star:
            switch (a) {
                case AnchorId::Xi0: return AnchorId::Xis0;
                case AnchorId::Xid: return AnchorId::Xisd;
                case AnchorId::Xis0: return AnchorId::Xi0;
                case AnchorId::Xisd: return AnchorId::Xid;
            }
    }
    return a;
}

BasisTag relabel_tag_gen(Gen g, BasisTag t) {
    switch (g) {
        case Gen::Down:
            if (t.family == BasisFamily::Es)
                t.orientation = t.orientation == Orientation::Forward ? Orientation::Reversed
                                                                      : Orientation::Forward;
            else if (t.family == BasisFamily::TauAs) t.family = BasisFamily::EtaAs;
            else if (t.family == BasisFamily::EtaAs) t.family = BasisFamily::TauAs;
            break;
        case Gen::Ddown:
            if (t.family == BasisFamily::E)
                t.orientation = t.orientation == Orientation::Forward ? Orientation::Reversed
                                                                      : Orientation::Forward;
            else if (t.family == BasisFamily::TauA) t.family = BasisFamily::EtaA;
            else if (t.family == BasisFamily::EtaA) t.family = BasisFamily::TauA;
            break;
        case Gen::Star:
            switch (t.family) {
                case BasisFamily::E: t.family = BasisFamily::Es; break;
                case BasisFamily::Es: t.family = BasisFamily::E; break;
                case BasisFamily::TauA: t.family = BasisFamily::TauAs; break;
                case BasisFamily::TauAs: t.family = BasisFamily::TauA; break;
                case BasisFamily::EtaA: t.family = BasisFamily::EtaAs; break;
                case BasisFamily::EtaAs: t.family = BasisFamily::EtaA; break;
            }
            break;
    }
    t.anchor = relabel_anchor(g, t.anchor);
    return t;
}

PolyAtom relabel_poly(Gen g, PolyAtom p) {
    switch (g) {
        case Gen::Down:
            if (p == PolyAtom::TauStarD) return PolyAtom::EtaStarD;
            if (p == PolyAtom::EtaStarD) return PolyAtom::TauStarD;
            return p;
        case Gen::Ddown:
            if (p == PolyAtom::TauD) return PolyAtom::EtaD;
            if (p == PolyAtom::EtaD) return PolyAtom::TauD;
            return p;
        case Gen::Star:
            switch (p) {
                case PolyAtom::TauD: return PolyAtom::TauStarD;
                case PolyAtom::TauStarD: return PolyAtom::TauD;
                case PolyAtom::EtaD: return PolyAtom::EtaStarD;
                case PolyAtom::EtaStarD: return PolyAtom::EtaD;
            }
    }
    return p;
}

SeqProduct relabel_seq_product(Gen g, SeqProduct s) {
    // full products: down and ddown swap them, star leaves both fixed
    if (g == Gen::Star) return s;
    return s == SeqProduct::Varphi ? SeqProduct::Phi : SeqProduct::Varphi;
}

Corner relabel_corner(Gen g, Corner c) {
    switch (g) {
        case Gen::Down:
            switch (c) {
                case Corner::E0Es0: return Corner::E0Esd;
                case Corner::E0Esd: return Corner::E0Es0;
                case Corner::EdEs0: return Corner::EdEsd;
                case Corner::EdEsd: return Corner::EdEs0;
            }
            break;
        case Gen::Ddown:
            switch (c) {
                case Corner::E0Es0: return Corner::EdEs0;
                case Corner::EdEs0: return Corner::E0Es0;
                case Corner::E0Esd: return Corner::EdEsd;
                case Corner::EdEsd: return Corner::E0Esd;
            }
            break;
        case Gen::Star:
            switch (c) {
                case Corner::E0Esd: return Corner::EdEs0;
                case Corner::EdEs0: return Corner::E0Esd;
                default: return c;
            }
    }
    return c;
}

TermCoeff relabel_coeff(Gen g, TermCoeff c) {
    switch (c.kind) {
        case CK::One: break;
        case CK::RecipTrace:
            switch (g) {
                case Gen::Down:
                    if (c.face == TraceFace::ErEs0) c.face = TraceFace::ErEsd;
                    else if (c.face == TraceFace::ErEsd) c.face = TraceFace::ErEs0;
                    else c.idx_flipped = !c.idx_flipped; // E*_{d-r} faces
                    break;
                case Gen::Ddown:
                    if (c.face == TraceFace::EsrE0) c.face = TraceFace::EsrEd;
                    else if (c.face == TraceFace::EsrEd) c.face = TraceFace::EsrE0;
                    else c.idx_flipped = !c.idx_flipped;
                    break;
                case Gen::Star:
                    switch (c.face) {
                        case TraceFace::ErEs0: c.face = TraceFace::EsrE0; break;
                        case TraceFace::EsrE0: c.face = TraceFace::ErEs0; break;
                        case TraceFace::ErEsd: c.face = TraceFace::EsrEd; break;
                        case TraceFace::EsrEd: c.face = TraceFace::ErEsd; break;
                    }
                    break;
            }
            break;
        case CK::EigProdA:
            if (g == Gen::Ddown) c.idx_flipped = !c.idx_flipped;
            if (g == Gen::Star) c.kind = CK::EigProdAstar;
            break;
        case CK::EigProdAstar:
            if (g == Gen::Down) c.idx_flipped = !c.idx_flipped;
            if (g == Gen::Star) c.kind = CK::EigProdA;
            break;
        case CK::RecipSeqUp:
        case CK::RecipSeqDown: {
            bool up = c.kind == CK::RecipSeqUp;
            switch (g) {
                case Gen::Down:
                    // varphi'_1..r = phi_d..d-r+1 etc: direction and sequence flip
                    c.kind = up ? CK::RecipSeqDown : CK::RecipSeqUp;
                    c.seq = c.seq == SeqProduct::Varphi ? SeqProduct::Phi : SeqProduct::Varphi;
                    break;
                case Gen::Ddown:
                    c.seq = c.seq == SeqProduct::Varphi ? SeqProduct::Phi : SeqProduct::Varphi;
                    break;
                case Gen::Star:
                    if (c.seq == SeqProduct::Phi) c.kind = up ? CK::RecipSeqDown : CK::RecipSeqUp;
                    break;
            }
            break;
        }
    }
    return c;
}

WordFactor relabel_word(Gen g, WordFactor f) {
    switch (g) {
        case Gen::Down:
            switch (f.kind) {
                case WK::Es0: f.kind = WK::Esd; break;
                case WK::Esd: f.kind = WK::Es0; break;
                case WK::Esr: f.idx_flipped = !f.idx_flipped; break;
                case WK::TauAs: f.kind = WK::EtaAs; break;
                case WK::EtaAs: f.kind = WK::TauAs; break;
                default: break;
            }
            break;
        case Gen::Ddown:
            switch (f.kind) {
                case WK::E0: f.kind = WK::Ed; break;
                case WK::Ed: f.kind = WK::E0; break;
                case WK::Er: f.idx_flipped = !f.idx_flipped; break;
                case WK::TauA: f.kind = WK::EtaA; break;
                case WK::EtaA: f.kind = WK::TauA; break;
                default: break;
            }
            break;
        case Gen::Star:
            switch (f.kind) {
                case WK::E0: f.kind = WK::Es0; break;
                case WK::Es0: f.kind = WK::E0; break;
                case WK::Ed: f.kind = WK::Esd; break;
                case WK::Esd: f.kind = WK::Ed; break;
                case WK::Er: f.kind = WK::Esr; break;
                case WK::Esr: f.kind = WK::Er; break;
                case WK::TauA: f.kind = WK::TauAs; break;
                case WK::TauAs: f.kind = WK::TauA; break;
                case WK::EtaA: f.kind = WK::EtaAs; break;
                case WK::EtaAs: f.kind = WK::EtaA; break;
            }
            break;
    }
    return f;
}

TransitionFormula relabel_formula_gen(Gen g, TransitionFormula f) {
    f.source = relabel_tag_gen(g, f.source);
    f.target = relabel_tag_gen(g, f.target);
    if (f.global.poly_over)
        f.global.poly_over = {relabel_poly(g, f.global.poly_over->first),
                              relabel_seq_product(g, f.global.poly_over->second)};
    if (f.global.inner) {
        InnerRatio ir = *f.global.inner;
        ir.num_u = relabel_anchor(g, ir.num_u);
        ir.num_v = relabel_anchor(g, ir.num_v);
        ir.den_u = relabel_anchor(g, ir.den_u);
        ir.den_v = relabel_anchor(g, ir.den_v);
        f.global.inner = normalized_inner(ir);
    }
    if (f.global.recip_corner_trace)
        f.global.recip_corner_trace = relabel_corner(g, *f.global.recip_corner_trace);
    f.coeff = relabel_coeff(g, f.coeff);
    for (auto& wf : f.word) wf = relabel_word(g, wf);
    return f;
}

} // namespace

BasisTag relabel_tag(const D4Element& g, const BasisTag& tag) {
    BasisTag t = tag;
    // the word down^a ddown^b star^c is applied left to right, so the
    // vocabulary unwinds star first
    if (g.has_star()) t = relabel_tag_gen(Gen::Star, t);
    if (g.has_ddown()) t = relabel_tag_gen(Gen::Ddown, t);
    if (g.has_down()) t = relabel_tag_gen(Gen::Down, t);
    return t;
}

TransitionFormula relabel_formula(const D4Element& g, const TransitionFormula& f) {
    TransitionFormula out = f;
    if (g.has_star()) out = relabel_formula_gen(Gen::Star, out);
    if (g.has_ddown()) out = relabel_formula_gen(Gen::Ddown, out);
    if (g.has_down()) out = relabel_formula_gen(Gen::Down, out);
    return out;
}

TransitionFormula flip_summation(const TransitionFormula& f, std::size_t) {
    TransitionFormula out = f;
    out.reverse_x = !out.reverse_x;
    if (out.coeff.kind != CK::One) out.coeff.idx_flipped = !out.coeff.idx_flipped;
    for (auto& wf : out.word)
        if (wf.kind == WK::Er || wf.kind == WK::Esr || wf.kind == WK::TauA ||
            wf.kind == WK::EtaA || wf.kind == WK::TauAs || wf.kind == WK::EtaAs)
            wf.idx_flipped = !wf.idx_flipped;
    return out;
}

// ---------------------------------------------------------------------------
// formatting
// ---------------------------------------------------------------------------

namespace {

std::string coeff_text(const TermCoeff& c) {
    auto idx = [&](const char* plain, const char* flipped) {
        return std::string(c.idx_flipped ? flipped : plain);
    };
    switch (c.kind) {
        case CK::One: return "1";
        case CK::RecipTrace:
            switch (c.face) {
                case TraceFace::ErEs0: return "1/tr(E_" + idx("r", "d-r") + " E*_0)";
                case TraceFace::ErEsd: return "1/tr(E_" + idx("r", "d-r") + " E*_d)";
                case TraceFace::EsrE0: return "1/tr(E*_" + idx("r", "d-r") + " E_0)";
                case TraceFace::EsrEd: return "1/tr(E*_" + idx("r", "d-r") + " E_d)";
            }
            break;
        case CK::EigProdA:
            return c.idx_flipped ? "tau_{d-r}(th_{d-r}) eta_r(th_{d-r})"
                                 : "tau_r(th_r) eta_{d-r}(th_r)";
        case CK::EigProdAstar:
            return c.idx_flipped ? "tau*_{d-r}(th*_{d-r}) eta*_r(th*_{d-r})"
                                 : "tau*_r(th*_r) eta*_{d-r}(th*_r)";
        case CK::RecipSeqUp: {
            std::string s = c.seq == SeqProduct::Varphi ? "varphi" : "phi";
            return "1/(" + s + "_1..." + s + "_" + idx("r", "d-r") + ")";
        }
        case CK::RecipSeqDown: {
            std::string s = c.seq == SeqProduct::Varphi ? "varphi" : "phi";
            return "1/(" + s + "_d..." + s + "_{d-" + idx("r", "d-r") + "+1})";
        }
    }
    return "?";
}

std::string word_text(const WordFactor& f) {
    auto idx = [&](const char* plain, const char* flipped) {
        return std::string(f.idx_flipped ? flipped : plain);
    };
    switch (f.kind) {
        case WK::E0: return "E_0";
        case WK::Ed: return "E_d";
        case WK::Es0: return "E*_0";
        case WK::Esd: return "E*_d";
        case WK::Er: return "E_" + idx("r", "d-r");
        case WK::Esr: return "E*_" + idx("r", "d-r");
        case WK::TauA: return "tau_" + idx("r", "d-r") + "(A)";
        case WK::EtaA: return "eta_" + idx("r", "d-r") + "(A)";
        case WK::TauAs: return "tau*_" + idx("r", "d-r") + "(A*)";
        case WK::EtaAs: return "eta*_" + idx("r", "d-r") + "(A*)";
    }
    return "?";
}

std::string poly_text(PolyAtom p) {
    switch (p) {
        case PolyAtom::TauD: return "tau_d(th_d)";
        case PolyAtom::EtaD: return "eta_d(th_0)";
        case PolyAtom::TauStarD: return "tau*_d(th*_d)";
        case PolyAtom::EtaStarD: return "eta*_d(th*_0)";
    }
    return "?";
}

std::string corner_text(Corner c) {
    switch (c) {
        case Corner::E0Es0: return "tr(E_0 E*_0)";
        case Corner::E0Esd: return "tr(E_0 E*_d)";
        case Corner::EdEs0: return "tr(E_d E*_0)";
        case Corner::EdEsd: return "tr(E_d E*_d)";
    }
    return "?";
}

} // namespace

std::string format_formula(const TransitionFormula& f) {
    std::ostringstream os;
    os << f.equation_tag << "  [" << tag_name(f.source) << " -> " << tag_name(f.target) << "]\n";
    os << "  T = ";
    bool have_global = false;
    if (f.global.poly_over) {
        os << poly_text(f.global.poly_over->first) << "/"
           << (f.global.poly_over->second == SeqProduct::Varphi ? "varphi" : "phi");
        have_global = true;
    }
    if (f.global.inner) {
        if (have_global) os << " * ";
        const InnerRatio& ir = *f.global.inner;
        os << "<" << anchor_name(ir.num_u) << "," << anchor_name(ir.num_v) << ">/<"
           << anchor_name(ir.den_u) << "," << anchor_name(ir.den_v) << ">";
        have_global = true;
    }
    if (f.global.recip_corner_trace) {
        if (have_global) os << " * ";
        os << "1/" << corner_text(*f.global.recip_corner_trace);
        have_global = true;
    }
    if (have_global) os << " * ";
    os << "sum_r " << coeff_text(f.coeff) << " X_" << (f.reverse_x ? "{d-r}" : "r");
    for (const auto& wf : f.word) os << " " << word_text(wf);
    os << "\n  with X_i = " << family_name(f.target.family) << "_"
       << (f.target.orientation == Orientation::Forward ? "i" : "{d-i}") << "\n";
    return os.str();
}

} // namespace leonard
