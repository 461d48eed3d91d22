#ifndef LEONARD_PARAMETER_ARRAY_HPP
#define LEONARD_PARAMETER_ARRAY_HPP

#include <cstddef>
#include <vector>

#include "leonard/field.hpp"

namespace leonard {

/// The quadruple (theta; theta*; varphi; phi): eigenvalue sequence, dual
/// eigenvalue sequence, first and second split sequences.
///
/// Invariants enforced at construction: the theta_i are mutually
/// distinct, the theta*_i are mutually distinct, every varphi_i and
/// phi_i is nonzero, and all entries share one field.
class ParameterArray {
  public:
    /// theta, theta_star have length d+1; varphi, phi have length d
    /// (entry k holds the sequence member with subscript k+1).
    ParameterArray(std::vector<FieldElement> theta, std::vector<FieldElement> theta_star,
                   std::vector<FieldElement> varphi, std::vector<FieldElement> phi);

    std::size_t d() const { return theta_.size() - 1; }
    const FieldSpec& field() const { return field_; }

    const std::vector<FieldElement>& theta() const { return theta_; }
    const std::vector<FieldElement>& theta_star() const { return theta_star_; }
    const std::vector<FieldElement>& varphi() const { return varphi_; }
    const std::vector<FieldElement>& phi() const { return phi_; }

    /// varphi_1 varphi_2 ... varphi_d
    FieldElement varphi_product() const;
    /// phi_1 phi_2 ... phi_d
    FieldElement phi_product() const;

    bool operator==(const ParameterArray& o) const;
    bool operator!=(const ParameterArray& o) const { return !(*this == o); }

  private:
    FieldSpec field_;
    std::vector<FieldElement> theta_, theta_star_, varphi_, phi_;
};

} // namespace leonard

#endif
