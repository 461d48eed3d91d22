#include "leonard/field.hpp"

#include <cctype>

namespace leonard {

namespace {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    if (n < (1ull << 40)) {
        // trial division; moduli at desk scale make this cheap
        for (std::uint64_t q = 11; q <= n / q; q += 2) {
            if (n % q == 0) return false;
        }
        return true;
    }
    // out of desk range: Miller-Rabin via GMP rather than minutes of division
    mpz_class m(static_cast<unsigned long>(n));
    return mpz_probab_prime_p(m.get_mpz_t(), 40) != 0;
}

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    // extended Euclid over signed 128-bit to dodge overflow near 2^62
    __int128 t = 0, new_t = 1;
    __int128 r = static_cast<__int128>(p), new_r = static_cast<__int128>(a);
    while (new_r != 0) {
        __int128 q = r / new_r;
        __int128 tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw Error("element not invertible mod p");
    if (t < 0) t += static_cast<__int128>(p);
    return static_cast<std::uint64_t>(t);
}

std::uint64_t reduce_mpz(const mpz_class& v, std::uint64_t p) {
    mpz_class m = v % static_cast<unsigned long>(p);
    if (m < 0) m += static_cast<unsigned long>(p);
    return m.get_ui();
}

} // namespace

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
    if (p >= (1ull << 62)) throw Error("prime modulus too large (>= 2^62)");
    if (!is_prime_u64(p)) throw Error("modulus " + std::to_string(p) + " is not prime");
    return FieldSpec(p);
}

std::string FieldSpec::name() const {
    return is_rational() ? "Q" : "GF(" + std::to_string(p_) + ")";
}

FieldElement FieldElement::from_int(long v, const FieldSpec& f) {
    if (f.is_rational()) return FieldElement(f, mpq_class(v), 0);
    return from_mpz(mpz_class(v), f);
}

FieldElement FieldElement::from_rational(mpq_class v) {
    v.canonicalize();
    return FieldElement(FieldSpec::rationals(), std::move(v), 0);
}

FieldElement FieldElement::from_mpz(const mpz_class& v, const FieldSpec& f) {
    if (f.is_rational()) return FieldElement(f, mpq_class(v), 0);
    return FieldElement(f, mpq_class(0), reduce_mpz(v, f.modulus()));
}

bool FieldElement::is_zero() const {
    return spec_.is_rational() ? rat_ == 0 : res_ == 0;
}

bool FieldElement::is_one() const {
    return spec_.is_rational() ? rat_ == 1 : res_ == 1;
}

void FieldElement::require_same_field(const FieldElement& o) const {
    if (spec_ != o.spec_)
        throw Error("cannot combine elements of " + spec_.name() + " and " + o.spec_.name());
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    require_same_field(o);
    if (spec_.is_rational()) return FieldElement(spec_, rat_ + o.rat_, 0);
    std::uint64_t s = res_ + o.res_; // p < 2^62, no overflow
    if (s >= spec_.modulus()) s -= spec_.modulus();
    return FieldElement(spec_, mpq_class(0), s);
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    require_same_field(o);
    if (spec_.is_rational()) return FieldElement(spec_, rat_ - o.rat_, 0);
    std::uint64_t s = res_ >= o.res_ ? res_ - o.res_ : res_ + spec_.modulus() - o.res_;
    return FieldElement(spec_, mpq_class(0), s);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    require_same_field(o);
    if (spec_.is_rational()) return FieldElement(spec_, rat_ * o.rat_, 0);
    return FieldElement(spec_, mpq_class(0), mod_mul(res_, o.res_, spec_.modulus()));
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    require_same_field(o);
    if (o.is_zero()) throw Error("division by zero in " + spec_.name());
    if (spec_.is_rational()) return FieldElement(spec_, rat_ / o.rat_, 0);
    return FieldElement(spec_, mpq_class(0),
                        mod_mul(res_, mod_inverse(o.res_, spec_.modulus()), spec_.modulus()));
}

FieldElement FieldElement::operator-() const {
    if (spec_.is_rational()) return FieldElement(spec_, -rat_, 0);
    return FieldElement(spec_, mpq_class(0), res_ == 0 ? 0 : spec_.modulus() - res_);
}

FieldElement FieldElement::inverse() const {
    return field_one(spec_) / *this;
}

bool FieldElement::operator==(const FieldElement& o) const {
    if (spec_ != o.spec_) return false;
    return spec_.is_rational() ? rat_ == o.rat_ : res_ == o.res_;
}

const mpq_class& FieldElement::rational_value() const {
    if (!spec_.is_rational()) throw Error("not a rational element");
    return rat_;
}

std::uint64_t FieldElement::residue() const {
    if (!spec_.is_prime_field()) throw Error("not a prime-field element");
    return res_;
}

namespace {

bool is_integer_text(std::string_view s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

mpz_class parse_integer(std::string_view s) {
    return mpz_class(std::string(s), 10);
}

} // namespace

FieldElement parse_element(std::string_view text, const FieldSpec& f) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!is_integer_text(text))
            throw ParseError("malformed scalar '" + std::string(text) + "'");
        return FieldElement::from_mpz(parse_integer(text), f);
    }
    if (!f.is_rational())
        throw ParseError("fraction '" + std::string(text) + "' is not a valid " + f.name() +
                         " element");
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (!is_integer_text(num) || !is_integer_text(den))
        throw ParseError("malformed scalar '" + std::string(text) + "'");
    mpz_class d = parse_integer(den);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return FieldElement::from_rational(mpq_class(parse_integer(num), d));
}

std::string format_element(const FieldElement& a) {
    if (a.field().is_prime_field()) return std::to_string(a.residue());
    const mpq_class& q = a.rational_value();
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

FieldElement field_zero(const FieldSpec& f) { return FieldElement::from_int(0, f); }
FieldElement field_one(const FieldSpec& f) { return FieldElement::from_int(1, f); }

} // namespace leonard
