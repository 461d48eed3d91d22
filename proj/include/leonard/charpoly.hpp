#ifndef LEONARD_CHARPOLY_HPP
#define LEONARD_CHARPOLY_HPP

#include <vector>

#include "leonard/matrix.hpp"

namespace leonard {

/// Coefficients of det(xI - M), ascending degree, monic (division-free
/// Samuelson-Berkowitz, so it works over any field including GF(p) with
/// small p).
std::vector<FieldElement> characteristic_polynomial(const Matrix& M);

/// All roots of the polynomial that lie in its coefficient field, with
/// multiplicity, found by candidate search (rational-root enumeration
/// over Q, exhaustive scan over GF(p)) and repeated deflation.
///
/// `split` is set when the polynomial factors completely into linear
/// factors over the field, i.e. when the returned roots account for the
/// whole degree.
struct FieldRoots {
    std::vector<FieldElement> roots; // with multiplicity
    bool split = false;
};
FieldRoots roots_in_field(const std::vector<FieldElement>& coeffs);

} // namespace leonard

#endif
