#ifndef LEONARD_TRANSITION_HPP
#define LEONARD_TRANSITION_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "leonard/dagger.hpp"
#include "leonard/relatives.hpp"
#include "leonard/system.hpp"

namespace leonard {

// ---------------------------------------------------------------------------
// The 24 distinguished bases
// ---------------------------------------------------------------------------

/// Vector family generating a basis: spectral projections of A or A*, or
/// the monic prefix/suffix products tau/eta evaluated at A or A*.
enum class BasisFamily { E, Es, TauA, EtaA, TauAs, EtaAs };

enum class Orientation { Forward, Reversed };

enum class AnchorId { Xi0, Xid, Xis0, Xisd };

/// Names one of the 24 bases: vector i of (family X, orientation, anchor xi)
/// is X_i xi (forward) or X_{d-i} xi (reversed).  A-side families (E, TauA,
/// EtaA) combine with the dual anchors xis0/xisd; A*-side families with
/// xi0/xid.  Exactly 24 legal combinations.
struct BasisTag {
    BasisFamily family = BasisFamily::E;
    Orientation orientation = Orientation::Forward;
    AnchorId anchor = AnchorId::Xis0;

    bool operator==(const BasisTag&) const = default;
    bool is_a_side() const {
        return family == BasisFamily::E || family == BasisFamily::TauA ||
               family == BasisFamily::EtaA;
    }
};

/// All 24 legal tags in fixed report order.
const std::array<BasisTag, 24>& all_basis_tags();

/// Dot-joined text form, e.g. "E.fwd.xis0", "tauAs.rev.xid".
std::string tag_name(const BasisTag& tag);
/// Parses the dot-joined form; throws ParseError on unknown names or an
/// illegal family/anchor combination.
BasisTag parse_tag(const std::string& text);

struct BasisSet {
    BasisTag tag;
    std::vector<Vector> vectors;
};

/// Builds all 24 bases and checks each with is_basis; a rank failure on a
/// validated system cannot happen for genuine instances, so it throws.
std::map<std::size_t, BasisSet> enumerate_bases(const LeonardSystem& sys,
                                                const AnchorVectors& anchors);

// ---------------------------------------------------------------------------
// Transition formula descriptors
// ---------------------------------------------------------------------------

/// Scalar evaluations of the extreme tau/eta products:
/// tau_d(theta_d), eta_d(theta_0), tau*_d(theta*_d), eta*_d(theta*_0).
enum class PolyAtom { TauD, EtaD, TauStarD, EtaStarD };

/// varphi = varphi_1...varphi_d or phi = phi_1...phi_d.
enum class SeqProduct { Varphi, Phi };

/// Corner products whose reciprocal traces appear as global factors.
enum class Corner { E0Es0, E0Esd, EdEs0, EdEsd };

/// r-indexed traces appearing as per-term reciprocals.
enum class TraceFace { ErEs0, ErEsd, EsrE0, EsrEd };

/// Per-term scalar coefficient c_r.  `idx_flipped` substitutes r -> d-r
/// inside the atom (used when deriving one group.s display from
/// another via the dihedral relabeling).
struct TermCoeff {
    enum class Kind {
        One,
        RecipTrace,   // 1 / tr(face at r)
        EigProdA,     // tau_r(theta_r) eta_{d-r}(theta_r)
        EigProdAstar, // tau*_r(theta*_r) eta*_{d-r}(theta*_r)
        RecipSeqUp,   // 1 / (seq_1 ... seq_r)
        RecipSeqDown, // 1 / (seq_d ... seq_{d-r+1})
    };
    Kind kind = Kind::One;
    TraceFace face = TraceFace::ErEs0; // valid for RecipTrace
    SeqProduct seq = SeqProduct::Varphi; // valid for RecipSeq*
    bool idx_flipped = false;

    bool operator==(const TermCoeff&) const = default;
};

/// One matrix factor of the word multiplied on the right of X.
struct WordFactor {
    enum class Kind {
        E0, Ed, Es0, Esd, // fixed extreme idempotents
        Er, Esr,          // r-indexed idempotents
        TauA, EtaA,       // tau_r(A) / eta_r(A)   (index r, or d-r when flipped)
        TauAs, EtaAs,     // starred analogues at A*
    };
    Kind kind = Kind::E0;
    bool idx_flipped = false; // index d-r instead of r (r-indexed kinds only)

    bool operator==(const WordFactor&) const = default;
};

/// B(num_u, num_v) / B(den_u, den_v), a ratio of anchor inner products.
struct InnerRatio {
    AnchorId num_u = AnchorId::Xi0, num_v = AnchorId::Xi0;
    AnchorId den_u = AnchorId::Xi0, den_v = AnchorId::Xi0;
    bool operator==(const InnerRatio&) const = default;
};

/// The r-independent prefactor kappa.
struct GlobalScalar {
    /// poly_over = (P, s) contributes P / (product of s).
    std::optional<std::pair<PolyAtom, SeqProduct>> poly_over;
    std::optional<InnerRatio> inner;
    std::optional<Corner> recip_corner_trace; // contributes 1 / tr(corner)

    bool operator==(const GlobalScalar&) const = default;
};

/// One displayed transition-map equation, fully evaluatable:
///   T = kappa * sum_r c_r X_{s(r)} W_1(r) W_2(r) ...
/// where s(r) = r, or d-r when reverse_x is set, and X runs over the
/// family named by `target` (its orientation included).  Applying T to
/// vector i of the source basis yields vector i of the target basis.
///
/// `global_extra` and `term_extras` are neutral (1) in every table entry;
/// they exist so tests can inject single-coefficient mutations.
struct TransitionFormula {
    BasisTag source, target;
    std::string equation_tag;
    GlobalScalar global;
    TermCoeff coeff;
    std::vector<WordFactor> word;
    bool reverse_x = false;

    FieldElement global_extra = FieldElement::from_int(1, FieldSpec::rationals());
    std::vector<FieldElement> term_extras; // empty = all ones

    /// Structural equality of the mathematical content (tags, scalar,
    /// coefficient, word, X substitution); ignores the mutation hooks
    /// and the equation tag string.
    bool same_content(const TransitionFormula& o) const;

    /// Same, but ignoring the global prefactor.  Relabeled displays can
    /// carry a prefactor that differs from the printed one by an identity
    /// between the anchor inner products, so table cross-checks compare
    /// the summation structurally and the prefactor by value.
    bool same_summation(const TransitionFormula& o) const;
};

/// The descriptor for an ordered pair of the 24 bases, transcribed from
/// the displayed closed forms; total on all 576 pairs.
TransitionFormula formula(const BasisTag& source, const BasisTag& target);

/// Human-readable rendering of the descriptor (used by the CLI and the
/// generated formula-table document).
std::string format_formula(const TransitionFormula& f);

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

/// Shared read-only evaluation state: the system, the bilinear form, the
/// anchors, the parameter array, the six X-family matrix lists, the
/// anchor inner products, and the r-indexed traces.  Building it once
/// amortizes the precomputation across all 576 evaluations.
class TransitionContext {
  public:
    TransitionContext(const LeonardSystem& sys, GramForm gram, AnchorVectors anchors);

    const LeonardSystem& system() const { return sys_; }
    const GramForm& gram() const { return gram_; }
    const AnchorVectors& anchors() const { return anchors_; }
    const ParameterArray& array() const { return pa_; }
    std::size_t d() const { return sys_.d(); }

    const Vector& anchor(AnchorId a) const;
    const Matrix& x_factor(BasisFamily fam, std::size_t i) const; // forward index
    const BasisSet& basis(const BasisTag& tag) const;

    FieldElement inner_of(AnchorId u, AnchorId v) const;
    FieldElement trace_at(TraceFace face, std::size_t r) const;
    FieldElement corner_trace(Corner c) const;
    FieldElement poly_atom(PolyAtom p) const;
    FieldElement seq_product(SeqProduct s) const;
    /// seq_1 ... seq_r (r = 0 gives 1).
    FieldElement seq_prefix(SeqProduct s, std::size_t r) const;
    /// seq_d ... seq_{d-r+1} (r = 0 gives 1).
    FieldElement seq_suffix(SeqProduct s, std::size_t r) const;

  private:
    LeonardSystem sys_;
    GramForm gram_;
    AnchorVectors anchors_;
    ParameterArray pa_;
    std::vector<std::vector<Matrix>> x_; // [family][i]
    std::map<std::size_t, BasisSet> bases_;
    std::vector<std::vector<FieldElement>> traces_; // [face][r]
};

/// Evaluates the descriptor to its matrix.  Throws Error on a zero trace
/// or inner-product denominator (possible only on invalid input systems).
Matrix evaluate(const TransitionFormula& f, const TransitionContext& ctx);

/// The r-independent prefactor of a descriptor, as a field value.
FieldElement global_scalar_value(const TransitionFormula& f, const TransitionContext& ctx);
Matrix evaluate(const TransitionFormula& f, const LeonardSystem& sys, const GramForm& gram,
                const AnchorVectors& anchors);

/// The unique T with T u_i = v_i, computed as V U^{-1} from the column
/// matrices; the generic change-of-basis oracle the formulas are checked
/// against.
Matrix oracle_change_of_basis(const BasisSet& u, const BasisSet& v);

/// Verdict for one ordered pair.
struct PairVerdict {
    BasisTag source, target;
    std::string equation_tag;
    bool pass = false;
};

struct TransitionReport {
    std::vector<PairVerdict> pairs; // all 576, in tag order
    std::size_t passed = 0;
    bool all_pass() const { return passed == pairs.size(); }
};

/// Evaluates every ordered pair of the 24 bases and compares with the
/// change-of-basis oracle, exactly.
TransitionReport verify_all(const TransitionContext& ctx);
TransitionReport verify_all(const LeonardSystem& sys, const GramForm& gram,
                            const AnchorVectors& anchors);

// ---------------------------------------------------------------------------
// Dihedral relabeling of tags and descriptors
// ---------------------------------------------------------------------------

/// Expresses a tag of the relative system g(Phi) in the vocabulary of Phi
/// (e.g. under star, E.fwd.xis0 becomes Es.fwd.xi0).
BasisTag relabel_tag(const D4Element& g, const BasisTag& tag);

/// Rewrites a descriptor over g(Phi) into one over Phi by relabeling
/// every atom.  The result equals formula(relabel_tag(g, source),
/// relabel_tag(g, target)) up to the global substitution r -> d-r;
/// asserting that is a transcription cross-check of the whole table.
TransitionFormula relabel_formula(const D4Element& g, const TransitionFormula& f);

/// The descriptor with r -> d-r applied throughout (same operator).
TransitionFormula flip_summation(const TransitionFormula& f, std::size_t unused = 0);

} // namespace leonard

#endif
