#ifndef LEONARD_SYSTEM_HPP
#define LEONARD_SYSTEM_HPP

#include <optional>
#include <string>
#include <vector>

#include "leonard/matrix.hpp"
#include "leonard/parameter_array.hpp"

namespace leonard {

/// A validated Leonard system: a pair of multiplicity-free matrices
/// together with orderings of both primitive idempotent families such
/// that each matrix acts tridiagonally on the other's eigenspaces
/// (E_i A* E_j = 0 for |i-j| > 1 and != 0 for |i-j| = 1, and dually).
///
/// Immutable after construction.  The monic products
/// tau_i = (x-theta_0)...(x-theta_{i-1}) and
/// eta_i = (x-theta_d)...(x-theta_{d-i+1}) evaluated at A (and the
/// starred analogues at A*) are precomputed since nearly every
/// downstream formula uses them.
class LeonardSystem {
  public:
    std::size_t d() const { return theta_.size() - 1; }
    const FieldSpec& field() const { return A_.field(); }

    const Matrix& A() const { return A_; }
    const Matrix& Astar() const { return Astar_; }
    const Matrix& E(std::size_t i) const { return E_.at(i); }
    const Matrix& Estar(std::size_t i) const { return Estar_.at(i); }
    const FieldElement& theta(std::size_t i) const { return theta_.at(i); }
    const FieldElement& theta_star(std::size_t i) const { return theta_star_.at(i); }
    const std::vector<FieldElement>& eigenvalues() const { return theta_; }
    const std::vector<FieldElement>& dual_eigenvalues() const { return theta_star_; }

    /// tau_i(A), eta_i(A), tau*_i(A*), eta*_i(A*) for 0 <= i <= d.
    const Matrix& tau_A(std::size_t i) const { return tau_A_.at(i); }
    const Matrix& eta_A(std::size_t i) const { return eta_A_.at(i); }
    const Matrix& tau_Astar(std::size_t i) const { return tau_Astar_.at(i); }
    const Matrix& eta_Astar(std::size_t i) const { return eta_Astar_.at(i); }

    /// Scalar evaluations tau_i(x), eta_i(x), tau*_i(x), eta*_i(x).
    FieldElement tau_scalar(std::size_t i, const FieldElement& x) const;
    FieldElement eta_scalar(std::size_t i, const FieldElement& x) const;
    FieldElement tau_star_scalar(std::size_t i, const FieldElement& x) const;
    FieldElement eta_star_scalar(std::size_t i, const FieldElement& x) const;

    /// Assembles a system from already-verified parts.  Callers are the
    /// construction/validation routines and the relative-relabeling map,
    /// which permute verified data without recomputation.
    static LeonardSystem from_parts(Matrix A, Matrix Astar, std::vector<Matrix> E,
                                    std::vector<Matrix> Estar, std::vector<FieldElement> theta,
                                    std::vector<FieldElement> theta_star);

  private:
    LeonardSystem() = default;

    Matrix A_{0, 0, FieldSpec::rationals()};
    Matrix Astar_{0, 0, FieldSpec::rationals()};
    std::vector<Matrix> E_, Estar_;
    std::vector<FieldElement> theta_, theta_star_;
    std::vector<Matrix> tau_A_, eta_A_, tau_Astar_, eta_Astar_;
};

/// E_i = prod_{j != i} (A - theta_j I) / (theta_i - theta_j).
/// Requires distinct theta_i that are exactly the eigenvalues of a
/// multiplicity-free A; this is detected (A E_i = theta_i E_i and
/// sum E_i = I are checked) and violations throw.
std::vector<Matrix> primitive_idempotents(const Matrix& A,
                                          const std::vector<FieldElement>& theta);

/// Builds the split-form candidate pair (A lower bidiagonal with diagonal
/// theta and subdiagonal 1; A* upper bidiagonal with diagonal theta* and
/// superdiagonal varphi), computes both idempotent families, and checks
/// every Leonard-system condition plus the round trip of the first split
/// sequence.  Throws Error when the input is not a genuine parameter
/// array.  The second split sequence of the result equals pa.phi or an
/// Error is thrown.
LeonardSystem from_split_form(const ParameterArray& pa);

/// Same construction from (theta, theta*, varphi) alone; the second split
/// sequence is derived.  Returns the system and the completed array.
std::pair<LeonardSystem, ParameterArray> from_split_form(std::vector<FieldElement> theta,
                                                         std::vector<FieldElement> theta_star,
                                                         std::vector<FieldElement> varphi);

/// First and second split sequences of a validated system, from the
/// trace-ratio definitions
///   varphi_i = (theta*_0 - theta*_i) tr(tau_i(A) E*_0) / tr(tau_{i-1}(A) E*_0),
///   phi_i    = (theta*_0 - theta*_i) tr(eta_i(A) E*_0) / tr(eta_{i-1}(A) E*_0).
struct SplitSequences {
    std::vector<FieldElement> varphi, phi;
};
SplitSequences split_sequences(const LeonardSystem& sys);

/// The parameter array (theta; theta*; varphi; phi) of a validated system.
ParameterArray parameter_array(const LeonardSystem& sys);

/// One named check of the Leonard-system conditions.
struct ConditionVerdict {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Outcome of checking a raw matrix pair against the Leonard-system
/// conditions.  Failures are verdict entries, never exceptions.  When the
/// pair passes, `systems` holds every admissible pair of idempotent
/// orderings (found by requiring the off-diagonal support of each matrix,
/// viewed on the other's eigenspaces, to be exactly a Hamiltonian path),
/// and `system` is the canonical one.
struct ValidationReport {
    std::vector<ConditionVerdict> conditions;
    std::vector<LeonardSystem> systems;
    std::optional<LeonardSystem> system;

    bool all_pass() const;
};

ValidationReport validate_system(const Matrix& A, const Matrix& Astar);

/// Convenience: checks that an assembled system satisfies the
/// Leonard-system conditions with its stated orderings (used to
/// revalidate constructed or relabeled systems in tests and reports).
ValidationReport validate_system(const LeonardSystem& sys);

} // namespace leonard

#endif
