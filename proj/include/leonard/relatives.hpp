#ifndef LEONARD_RELATIVES_HPP
#define LEONARD_RELATIVES_HPP

#include <array>
#include <string>

#include "leonard/system.hpp"

namespace leonard {

/// An element of the dihedral group of order 8 acting on Leonard systems,
/// generated by three involutions:
///   star  - swap the roles of A and A*,
///   down  - reverse the ordering of the dual idempotents,
///   ddown - reverse the ordering of the idempotents.
/// The relations are star^2 = down^2 = ddown^2 = 1, ddown star = star down,
/// down star = star ddown, down ddown = ddown down.  Canonical form is the
/// word down^a ddown^b star^c applied left to right, giving the 8 elements
/// {1, down, ddown, down ddown, star, down star, ddown star, down ddown star}.
class D4Element {
  public:
    constexpr D4Element() = default;
    constexpr D4Element(bool down, bool ddown, bool star)
        : down_(down), ddown_(ddown), star_(star) {}

    static constexpr D4Element identity() { return {}; }
    static constexpr D4Element star() { return {false, false, true}; }
    static constexpr D4Element down() { return {true, false, false}; }
    static constexpr D4Element ddown() { return {false, true, false}; }

    bool has_down() const { return down_; }
    bool has_ddown() const { return ddown_; }
    bool has_star() const { return star_; }

    /// Composition in application order: (g * h) applied to a system is
    /// h applied to the result of g.
    D4Element operator*(const D4Element& h) const;

    bool operator==(const D4Element&) const = default;

    /// "1", "down", "ddown star", ...
    std::string name() const;
    /// Superscript form used in tables: "", "d", "D", "dD", "s", "ds", ...
    std::string short_name() const;

    static const std::array<D4Element, 8>& all();

  private:
    bool down_ = false, ddown_ = false, star_ = false;
};

/// The relative of a Leonard system: star swaps (A, {E_i}) with
/// (A*, {E*_i}), down replaces {E*_i} by {E*_{d-i}}, ddown replaces
/// {E_i} by {E_{d-i}}.  Pure relabeling; nothing is recomputed.
LeonardSystem apply(const D4Element& g, const LeonardSystem& sys);

/// The parameter array of the relative, by the closed-form rules
///   star:  (theta*; theta; varphi; phi reversed)
///   down:  (theta; theta* reversed; phi reversed; varphi reversed)
///   ddown: (theta reversed; theta*; phi; varphi)
/// composed along the canonical word.
ParameterArray transform_parameter_array(const D4Element& g, const ParameterArray& pa);

/// All 8 relatives keyed by canonical element, in table order.
std::array<std::pair<D4Element, LeonardSystem>, 8> orbit(const LeonardSystem& sys);

} // namespace leonard

#endif
