#ifndef LEONARD_IDENTITIES_HPP
#define LEONARD_IDENTITIES_HPP

#include <string>
#include <vector>

#include "leonard/system.hpp"

namespace leonard {

/// One verified matrix identity: both sides evaluated by independent
/// routes (left as the written product, right as a scalar coefficient
/// times a short product).
struct IdentityReport {
    std::string id; // equation tag plus indices, e.g. "eq:basic[i=1,j=1]"
    Matrix lhs{0, 0, FieldSpec::rationals()};
    Matrix rhs{0, 0, FieldSpec::rationals()};
    bool pass = false;
};

bool all_pass(const std::vector<IdentityReport>& reports);

/// S = sum_i (phi_d...phi_{d-i+1}) / (varphi_1...varphi_i) E_i.
Matrix s_element(const LeonardSystem& sys);

/// The eight delta-structured reduction rules
///   E_0 tau*_i(A*) tau_j(A) E*_0 = delta_ij varphi_1...varphi_i E_0 E*_0
/// and companions, for all 0 <= i, j <= d: 8 (d+1)^2 reports.
std::vector<IdentityReport> verify_reduction_rules(const LeonardSystem& sys);

/// The eight four-idempotent simplification rules
///   E*_0 E_d E*_d E_r = [varphi / (tau_d(theta_d) tau*_d(theta*_d))]
///                       [(phi_d...phi_{d-r+1}) / (varphi_1...varphi_r)] E*_0 E_r
/// and companions for 0 <= r <= d, plus the three S-element auxiliaries
/// (S E*_0, E*_0 S E_r, S E_r in closed form).
std::vector<IdentityReport> verify_simplify_rules(const LeonardSystem& sys);

/// E*_d E_0 tau*_r(A*) = (varphi_1...varphi_r / eta_d(theta_0)) E*_d eta_{d-r}(A)
/// for 0 <= r <= d.
std::vector<IdentityReport> verify_mu_identity(const LeonardSystem& sys);

} // namespace leonard

#endif
