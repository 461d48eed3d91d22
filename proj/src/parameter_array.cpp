#include "leonard/parameter_array.hpp"

namespace leonard {

ParameterArray::ParameterArray(std::vector<FieldElement> theta,
                               std::vector<FieldElement> theta_star,
                               std::vector<FieldElement> varphi, std::vector<FieldElement> phi)
    : field_(theta.empty() ? FieldSpec::rationals() : theta.front().field()),
      theta_(std::move(theta)), theta_star_(std::move(theta_star)), varphi_(std::move(varphi)),
      phi_(std::move(phi)) {
    if (theta_.empty()) throw Error("parameter array needs at least theta_0");
    std::size_t dd = theta_.size() - 1;
    if (theta_star_.size() != dd + 1) throw Error("theta_star length must be d+1");
    if (varphi_.size() != dd) throw Error("varphi length must be d");
    if (phi_.size() != dd) throw Error("phi length must be d");

    auto check_field = [&](const std::vector<FieldElement>& v) {
        for (const auto& x : v)
            if (x.field() != field_) throw Error("parameter array mixes fields");
    };
    check_field(theta_);
    check_field(theta_star_);
    check_field(varphi_);
    check_field(phi_);

    auto check_distinct = [](const std::vector<FieldElement>& v, const char* what) {
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = i + 1; j < v.size(); ++j)
                if (v[i] == v[j])
                    throw Error(std::string(what) + " entries are not mutually distinct");
    };
    check_distinct(theta_, "theta");
    check_distinct(theta_star_, "theta_star");

    for (const auto& x : varphi_)
        if (x.is_zero()) throw Error("varphi entries must be nonzero");
    for (const auto& x : phi_)
        if (x.is_zero()) throw Error("phi entries must be nonzero");
}

FieldElement ParameterArray::varphi_product() const {
    FieldElement p = field_one(field_);
    for (const auto& x : varphi_) p *= x;
    return p;
}

FieldElement ParameterArray::phi_product() const {
    FieldElement p = field_one(field_);
    for (const auto& x : phi_) p *= x;
    return p;
}

bool ParameterArray::operator==(const ParameterArray& o) const {
    return theta_ == o.theta_ && theta_star_ == o.theta_star_ && varphi_ == o.varphi_ &&
           phi_ == o.phi_;
}

} // namespace leonard
