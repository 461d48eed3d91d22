#include "leonard/charpoly.hpp"

#include <algorithm>
#include <map>

namespace leonard {

namespace {

// synthetic division by (x - r); returns quotient, requires zero remainder
std::vector<FieldElement> deflate(const std::vector<FieldElement>& coeffs,
                                  const FieldElement& r) {
    std::size_t n = coeffs.size() - 1; // degree
    std::vector<FieldElement> q(n, field_zero(r.field()));
    FieldElement carry = coeffs[n];
    for (std::size_t i = n; i-- > 0;) {
        q[i] = carry;
        carry = coeffs[i] + carry * r;
    }
    if (!carry.is_zero()) throw Error("deflation by a non-root");
    return q;
}

FieldElement eval_poly(const std::vector<FieldElement>& coeffs, const FieldElement& x) {
    FieldElement acc = field_zero(x.field());
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
    return acc;
}

// ---- integer factorization for rational-root candidates ----

mpz_class pollard_rho(const mpz_class& n) {
    if (n % 2 == 0) return 2;
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0xC0FFEEul);
    while (true) {
        mpz_class x = rng.get_z_range(n - 2) + 2, y = x, c = rng.get_z_range(n - 1) + 1;
        mpz_class d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            mpz_class diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d;
    }
}

void factorize(mpz_class n, std::map<mpz_class, unsigned>& out) {
    if (n < 0) n = -n;
    if (n <= 1) return;
    for (unsigned long q = 2; q <= 100000 && mpz_class(q) * q <= n; q == 2 ? q = 3 : q += 2) {
        while (n % q == 0) {
            ++out[mpz_class(q)];
            n /= q;
        }
    }
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
        ++out[n];
        return;
    }
    mpz_class d = pollard_rho(n);
    factorize(d, out);
    factorize(n / d, out);
}

std::vector<mpz_class> positive_divisors(const mpz_class& n) {
    std::map<mpz_class, unsigned> f;
    factorize(n, f);
    std::vector<mpz_class> divs{1};
    for (const auto& [p, e] : f) {
        std::size_t base = divs.size();
        if (base * (e + 1) > 200000)
            throw Error("coefficient too composite for rational root search");
        mpz_class pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

// clears denominators: returns integer coefficient list (same roots)
std::vector<mpz_class> to_integer_poly(const std::vector<FieldElement>& coeffs) {
    mpz_class lcm = 1;
    for (const auto& c : coeffs) {
        const mpz_class& den = c.rational_value().get_den();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        lcm = lcm / g * den;
    }
    std::vector<mpz_class> out;
    out.reserve(coeffs.size());
    for (const auto& c : coeffs) {
        mpq_class scaled = c.rational_value() * mpq_class(lcm);
        out.push_back(scaled.get_num()); // denominator is 1 by construction
    }
    return out;
}

// all rational roots of one squarefree-or-not integer polynomial step
std::vector<FieldElement> rational_root_candidates(const std::vector<FieldElement>& coeffs) {
    std::vector<mpz_class> ip = to_integer_poly(coeffs);
    // strip trailing zero coefficients already handled by caller (x = 0 root)
    const mpz_class& lead = ip.back();
    const mpz_class& constant = ip.front();
    std::vector<FieldElement> cands;
    for (const mpz_class& u : positive_divisors(constant))
        for (const mpz_class& v : positive_divisors(lead)) {
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t());
            if (g != 1) continue;
            cands.push_back(FieldElement::from_rational(mpq_class(u, v)));
            cands.push_back(FieldElement::from_rational(mpq_class(-u, v)));
        }
    return cands;
}

} // namespace

std::vector<FieldElement> characteristic_polynomial(const Matrix& M) {
    if (M.rows() != M.cols()) throw Error("characteristic polynomial of non-square matrix");
    std::size_t n = M.rows();
    const FieldSpec& f = M.field();
    // Samuelson-Berkowitz: iterate over leading principal submatrices,
    // multiplying the coefficient vector by a Toeplitz column at each step.
    std::vector<FieldElement> p{field_one(f)}; // descending-degree coefficients
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<FieldElement> t(k + 1, field_zero(f));
        t[0] = field_one(f);
        t[1] = -M.at(k - 1, k - 1);
        if (k >= 2) {
            std::vector<FieldElement> v(k - 1); // starts as the column above M[k-1][k-1]
            for (std::size_t i = 0; i < k - 1; ++i) v[i] = M.at(i, k - 1);
            for (std::size_t j = 2; j <= k; ++j) {
                FieldElement dot = field_zero(f);
                for (std::size_t i = 0; i < k - 1; ++i) dot += M.at(k - 1, i) * v[i];
                t[j] = -dot;
                if (j == k) break;
                std::vector<FieldElement> nv(k - 1, field_zero(f));
                for (std::size_t i = 0; i < k - 1; ++i)
                    for (std::size_t l = 0; l < k - 1; ++l) nv[i] += M.at(i, l) * v[l];
                v = std::move(nv);
            }
        }
        std::vector<FieldElement> np(k + 1, field_zero(f));
        for (std::size_t i = 0; i <= k; ++i)
            for (std::size_t j = 0; j < p.size() && j <= i; ++j)
                np[i] += t[i - j] * p[j];
        p = std::move(np);
    }
    std::reverse(p.begin(), p.end()); // ascending degree
    return p;
}

FieldRoots roots_in_field(const std::vector<FieldElement>& coeffs_in) {
    if (coeffs_in.empty()) throw Error("empty polynomial");
    const FieldSpec& f = coeffs_in.front().field();
    std::vector<FieldElement> cur = coeffs_in;
    FieldRoots out;

    auto try_root = [&](const FieldElement& r) {
        while (cur.size() > 1 && eval_poly(cur, r).is_zero()) {
            out.roots.push_back(r);
            cur = deflate(cur, r);
        }
    };

    // x = 0 roots first
    try_root(field_zero(f));

    while (cur.size() > 1) {
        std::size_t before = out.roots.size();
        if (f.is_prime_field()) {
            if (f.modulus() > 1000000)
                throw Error("root scan over GF(p) limited to p <= 10^6");
            for (std::uint64_t r = 0; r < f.modulus() && cur.size() > 1; ++r)
                try_root(FieldElement::from_int(static_cast<long>(r), f));
            break; // the scan is exhaustive
        }
        for (const auto& cand : rational_root_candidates(cur)) {
            try_root(cand);
            if (cur.size() == 1) break;
        }
        if (out.roots.size() == before) break; // no further roots in the field
    }
    out.split = cur.size() == 1;
    return out;
}

} // namespace leonard
