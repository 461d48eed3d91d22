#include "leonard/identities.hpp"

namespace leonard {

namespace {

// varphi_1 ... varphi_r style prefix products; r = 0 gives 1
FieldElement prefix_product(const std::vector<FieldElement>& seq, std::size_t r,
                            const FieldSpec& f) {
    FieldElement p = field_one(f);
    for (std::size_t k = 0; k < r; ++k) p *= seq[k];
    return p;
}

// seq_d seq_{d-1} ... seq_{d-r+1}
FieldElement suffix_product(const std::vector<FieldElement>& seq, std::size_t r,
                            const FieldSpec& f) {
    FieldElement p = field_one(f);
    for (std::size_t k = 0; k < r; ++k) p *= seq[seq.size() - 1 - k];
    return p;
}

struct Coeffs {
    ParameterArray pa;
    FieldElement varphi, phi;                     // full products
    FieldElement tau_d, eta_d, tau_star_d, eta_star_d; // extreme scalar evals

    explicit Coeffs(const LeonardSystem& sys)
        : pa(parameter_array(sys)), varphi(pa.varphi_product()), phi(pa.phi_product()),
          tau_d(sys.tau_scalar(sys.d(), sys.theta(sys.d()))),
          eta_d(sys.eta_scalar(sys.d(), sys.theta(0))),
          tau_star_d(sys.tau_star_scalar(sys.d(), sys.theta_star(sys.d()))),
          eta_star_d(sys.eta_star_scalar(sys.d(), sys.theta_star(0))) {}
};

} // namespace

bool all_pass(const std::vector<IdentityReport>& reports) {
    for (const auto& r : reports)
        if (!r.pass) return false;
    return true;
}

Matrix s_element(const LeonardSystem& sys) {
    std::size_t d = sys.d();
    const FieldSpec& f = sys.field();
    ParameterArray pa = parameter_array(sys);
    Matrix S = Matrix::zero(d + 1, d + 1, f);
    for (std::size_t i = 0; i <= d; ++i) {
        FieldElement c = suffix_product(pa.phi(), i, f) / prefix_product(pa.varphi(), i, f);
        S = S + sys.E(i).scaled(c);
    }
    return S;
}

std::vector<IdentityReport> verify_reduction_rules(const LeonardSystem& sys) {
    std::size_t d = sys.d();
    const FieldSpec& f = sys.field();
    Coeffs c(sys);
    const auto& vp = c.pa.varphi();
    const auto& ph = c.pa.phi();

    const Matrix &E0 = sys.E(0), &Ed = sys.E(d), &Es0 = sys.Estar(0), &Esd = sys.Estar(d);

    std::vector<IdentityReport> out;
    out.reserve(8 * (d + 1) * (d + 1));

    auto emit = [&](const char* tag, std::size_t i, std::size_t j, const Matrix& lhs,
                    const FieldElement& coeff, const Matrix& L, const Matrix& R) {
        Matrix rhs = (i == j) ? (L * R).scaled(coeff) : Matrix::zero(d + 1, d + 1, f);
        IdentityReport rep;
        rep.id = std::string(tag) + "[i=" + std::to_string(i) + ",j=" + std::to_string(j) + "]";
        rep.pass = lhs == rhs;
        rep.lhs = std::move(lhs);
        rep.rhs = std::move(rhs);
        out.push_back(std::move(rep));
    };

    for (std::size_t i = 0; i <= d; ++i) {
        for (std::size_t j = 0; j <= d; ++j) {
            emit("eq:basic", i, j, E0 * sys.tau_Astar(i) * sys.tau_A(j) * Es0,
                 prefix_product(vp, i, f), E0, Es0);
            emit("eq:basicd", i, j, E0 * sys.eta_Astar(i) * sys.tau_A(j) * Esd,
                 suffix_product(ph, i, f), E0, Esd);
            emit("eq:basicD", i, j, Ed * sys.tau_Astar(i) * sys.eta_A(j) * Es0,
                 prefix_product(ph, i, f), Ed, Es0);
            emit("eq:basicdD", i, j, Ed * sys.eta_Astar(i) * sys.eta_A(j) * Esd,
                 suffix_product(vp, i, f), Ed, Esd);
            emit("eq:basics", i, j, Es0 * sys.tau_A(i) * sys.tau_Astar(j) * E0,
                 prefix_product(vp, i, f), Es0, E0);
            emit("eq:basicsds", i, j, Es0 * sys.eta_A(i) * sys.tau_Astar(j) * Ed,
                 prefix_product(ph, i, f), Es0, Ed);
            emit("eq:basicsDs", i, j, Esd * sys.tau_A(i) * sys.eta_Astar(j) * E0,
                 suffix_product(ph, i, f), Esd, E0);
            emit("eq:basicdDs", i, j, Esd * sys.eta_A(i) * sys.eta_Astar(j) * Ed,
                 suffix_product(vp, i, f), Esd, Ed);
        }
    }
    return out;
}

std::vector<IdentityReport> verify_simplify_rules(const LeonardSystem& sys) {
    std::size_t d = sys.d();
    const FieldSpec& f = sys.field();
    Coeffs c(sys);
    const auto& vp = c.pa.varphi();
    const auto& ph = c.pa.phi();

    const Matrix &E0 = sys.E(0), &Ed = sys.E(d), &Es0 = sys.Estar(0), &Esd = sys.Estar(d);

    std::vector<IdentityReport> out;
    auto emit = [&](std::string id, Matrix lhs, Matrix rhs) {
        IdentityReport rep;
        rep.id = std::move(id);
        rep.pass = lhs == rhs;
        rep.lhs = std::move(lhs);
        rep.rhs = std::move(rhs);
        out.push_back(std::move(rep));
    };

    FieldElement vp_over_tt = c.varphi / (c.tau_d * c.tau_star_d);
    FieldElement vp_over_et = c.varphi / (c.eta_d * c.tau_star_d);
    FieldElement vp_over_te = c.varphi / (c.tau_d * c.eta_star_d);
    FieldElement ph_over_te = c.phi / (c.tau_d * c.eta_star_d);
    FieldElement ph_over_et = c.phi / (c.eta_d * c.tau_star_d);
    FieldElement ph_over_ee = c.phi / (c.eta_d * c.eta_star_d);

    for (std::size_t r = 0; r <= d; ++r) {
        std::string at = "[r=" + std::to_string(r) + "]";
        FieldElement up_vp = prefix_product(vp, r, f);
        FieldElement up_ph = prefix_product(ph, r, f);
        FieldElement down_ph = suffix_product(ph, r, f);

        emit("eq:Es0EdEsdEr" + at, Es0 * Ed * Esd * sys.E(r),
             (Es0 * sys.E(r)).scaled(vp_over_tt * down_ph / up_vp));
        emit("eq:Es0E0EsdEr" + at, Es0 * E0 * Esd * sys.E(r),
             (Es0 * sys.E(r)).scaled(vp_over_et * down_ph / up_vp));
        emit("eq:EsdEdEs0Er" + at, Esd * Ed * Es0 * sys.E(r),
             (Esd * sys.E(r)).scaled(ph_over_te * up_vp / down_ph));
        emit("eq:EsdE0Es0Er" + at, Esd * E0 * Es0 * sys.E(r),
             (Esd * sys.E(r)).scaled(ph_over_ee * up_vp / down_ph));
        emit("eq:E0EsdEdEsr" + at, E0 * Esd * Ed * sys.Estar(r),
             (E0 * sys.Estar(r)).scaled(vp_over_tt * up_ph / up_vp));
        emit("eq:E0Es0EdEsr" + at, E0 * Es0 * Ed * sys.Estar(r),
             (E0 * sys.Estar(r)).scaled(vp_over_te * up_ph / up_vp));
        emit("eq:EdEsdE0Esr" + at, Ed * Esd * E0 * sys.Estar(r),
             (Ed * sys.Estar(r)).scaled(ph_over_et * up_vp / up_ph));
        emit("eq:EdEs0E0Esr" + at, Ed * Es0 * E0 * sys.Estar(r),
             (Ed * sys.Estar(r)).scaled(ph_over_ee * up_vp / up_ph));
    }

    // S-element auxiliaries
    Matrix S = s_element(sys);
    FieldElement tt_over_vp = (c.tau_d * c.tau_star_d) / c.varphi;
    emit("eq:simplifyaux1", S * Es0, (Esd * Ed * Es0).scaled(tt_over_vp));
    for (std::size_t r = 0; r <= d; ++r) {
        std::string at = "[r=" + std::to_string(r) + "]";
        emit("eq:simplifyaux3" + at, Es0 * S * sys.E(r),
             (Es0 * Ed * Esd * sys.E(r)).scaled(tt_over_vp));
        emit("eq:simplifyaux4" + at, S * sys.E(r),
             sys.E(r).scaled(suffix_product(ph, r, f) / prefix_product(vp, r, f)));
    }
    return out;
}

std::vector<IdentityReport> verify_mu_identity(const LeonardSystem& sys) {
    std::size_t d = sys.d();
    const FieldSpec& f = sys.field();
    ParameterArray pa = parameter_array(sys);
    FieldElement eta_d0 = sys.eta_scalar(d, sys.theta(0));

    std::vector<IdentityReport> out;
    for (std::size_t r = 0; r <= d; ++r) {
        IdentityReport rep;
        rep.id = "eq:mu[r=" + std::to_string(r) + "]";
        rep.lhs = sys.Estar(d) * sys.E(0) * sys.tau_Astar(r);
        rep.rhs = (sys.Estar(d) * sys.eta_A(d - r))
                      .scaled(prefix_product(pa.varphi(), r, f) / eta_d0);
        rep.pass = rep.lhs == rep.rhs;
        out.push_back(std::move(rep));
    }
    return out;
}

} // namespace leonard
