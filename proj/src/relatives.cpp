#include "leonard/relatives.hpp"

#include <algorithm>

namespace leonard {

namespace {

// the tuple (slot1; slot2) a word produces, tracked symbolically
struct Action {
    bool swapped = false; // slot1 holds the dual operator
    bool rev1 = false;    // slot1 idempotent list reversed
    bool rev2 = false;

    void apply_down() { rev2 = !rev2; }
    void apply_ddown() { rev1 = !rev1; }
    void apply_star() {
        swapped = !swapped;
        std::swap(rev1, rev2);
    }
    void apply(const D4Element& g) {
        if (g.has_down()) apply_down();
        if (g.has_ddown()) apply_ddown();
        if (g.has_star()) apply_star();
    }
};

D4Element canonical(const Action& a) {
    if (!a.swapped) return D4Element(a.rev2, a.rev1, false);
    return D4Element(a.rev1, a.rev2, true);
}

template <typename T>
std::vector<T> reversed(const std::vector<T>& v) {
    return {v.rbegin(), v.rend()};
}

} // namespace

D4Element D4Element::operator*(const D4Element& h) const {
    Action a;
    a.apply(*this);
    a.apply(h);
    return canonical(a);
}

std::string D4Element::name() const {
    if (*this == identity()) return "1";
    std::string s;
    if (down_) s += "down ";
    if (ddown_) s += "ddown ";
    if (star_) s += "star ";
    s.pop_back();
    return s;
}

std::string D4Element::short_name() const {
    std::string s;
    if (down_) s += 'd';
    if (ddown_) s += 'D';
    if (star_) s += 's';
    return s;
}

const std::array<D4Element, 8>& D4Element::all() {
    static const std::array<D4Element, 8> elems = {
        D4Element(false, false, false), D4Element(true, false, false),
        D4Element(false, true, false),  D4Element(true, true, false),
        D4Element(false, false, true),  D4Element(true, false, true),
        D4Element(false, true, true),   D4Element(true, true, true),
    };
    return elems;
}

LeonardSystem apply(const D4Element& g, const LeonardSystem& sys) {
    std::size_t d = sys.d();
    std::vector<Matrix> E, Estar;
    std::vector<FieldElement> th, ths;
    for (std::size_t i = 0; i <= d; ++i) {
        E.push_back(sys.E(i));
        Estar.push_back(sys.Estar(i));
        th.push_back(sys.theta(i));
        ths.push_back(sys.theta_star(i));
    }
    if (g.has_down()) {
        Estar = reversed(Estar);
        ths = reversed(ths);
    }
    if (g.has_ddown()) {
        E = reversed(E);
        th = reversed(th);
    }
    Matrix A = sys.A(), Astar = sys.Astar();
    if (g.has_star()) {
        std::swap(A, Astar);
        std::swap(E, Estar);
        std::swap(th, ths);
    }
    return LeonardSystem::from_parts(std::move(A), std::move(Astar), std::move(E),
                                     std::move(Estar), std::move(th), std::move(ths));
}

ParameterArray transform_parameter_array(const D4Element& g, const ParameterArray& pa) {
    std::vector<FieldElement> th = pa.theta(), ths = pa.theta_star();
    std::vector<FieldElement> vp = pa.varphi(), ph = pa.phi();
    if (g.has_down()) {
        ths = reversed(ths);
        std::swap(vp, ph);
        vp = reversed(vp);
        ph = reversed(ph);
    }
    if (g.has_ddown()) {
        th = reversed(th);
        std::swap(vp, ph);
    }
    if (g.has_star()) {
        std::swap(th, ths);
        ph = reversed(ph);
    }
    return ParameterArray(std::move(th), std::move(ths), std::move(vp), std::move(ph));
}

std::array<std::pair<D4Element, LeonardSystem>, 8> orbit(const LeonardSystem& sys) {
    const auto& elems = D4Element::all();
    return {std::pair{elems[0], apply(elems[0], sys)}, {elems[1], apply(elems[1], sys)},
            {elems[2], apply(elems[2], sys)},          {elems[3], apply(elems[3], sys)},
            {elems[4], apply(elems[4], sys)},          {elems[5], apply(elems[5], sys)},
            {elems[6], apply(elems[6], sys)},          {elems[7], apply(elems[7], sys)}};
}

} // namespace leonard
