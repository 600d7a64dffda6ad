#pragma once

#include "arith.hpp"
#include "poly.hpp"

#include <cstdint>
#include <random>
#include <tuple>
#include <utility>
#include <vector>

namespace adelic {

/// Polynomial over F_p, coefficients in [0, p), low degree first; zero is empty.
using FpPoly = std::vector<std::uint64_t>;

namespace fp {

inline void trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int degree(const FpPoly& a) {
    return static_cast<int>(a.size()) - 1;
}

inline FpPoly from_z(const ZPoly& a, std::uint64_t p) {
    FpPoly out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = arith::residue(a[i], p);
    trim(out);
    return out;
}

/// Reduction of a rational polynomial whose denominators are prime to p.
inline FpPoly from_q(const QPoly& a, std::uint64_t p) {
    FpPoly out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = arith::residue(a[i], p);
    trim(out);
    return out;
}

inline ZPoly lift(const FpPoly& a) {
    ZPoly out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = arith::from_u64(a[i]);
    return out;
}

inline FpPoly add(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
    FpPoly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = (out[i] + b[i]) % p;
    trim(out);
    return out;
}

inline FpPoly sub(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
    FpPoly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = (out[i] + p - b[i]) % p;
    trim(out);
    return out;
}

inline FpPoly scale(const FpPoly& a, std::uint64_t s, std::uint64_t p) {
    FpPoly out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = arith::mul_mod(a[i], s, p);
    trim(out);
    return out;
}

inline FpPoly mul(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    FpPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + arith::mul_mod(a[i], b[j], p)) % p;
    }
    trim(out);
    return out;
}

inline std::pair<FpPoly, FpPoly> divmod(FpPoly a, const FpPoly& b, std::uint64_t p) {
    const int db = degree(b);
    if (db < 0) throw std::domain_error("division by zero polynomial mod p");
    const std::uint64_t inv = arith::inv_mod(b[db], p);
    FpPoly q(std::max(0, degree(a) - db + 1), 0);
    for (int i = degree(a); i >= db; --i) {
        if (a[i] == 0) continue;
        std::uint64_t c = arith::mul_mod(a[i], inv, p);
        q[i - db] = c;
        for (int j = 0; j <= db; ++j) a[i - db + j] = (a[i - db + j] + p - arith::mul_mod(c, b[j], p)) % p;
    }
    if (static_cast<int>(a.size()) > db) a.resize(db);
    trim(a);
    trim(q);
    return {q, a};
}

inline FpPoly rem(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
    return divmod(a, b, p).second;
}

inline FpPoly quo(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
    return divmod(a, b, p).first;
}

inline FpPoly monic(const FpPoly& a, std::uint64_t p) {
    if (a.empty()) return a;
    return scale(a, arith::inv_mod(a.back(), p), p);
}

inline FpPoly gcd(FpPoly a, FpPoly b, std::uint64_t p) {
    while (!b.empty()) {
        FpPoly r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a, p);
}

/// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic.
inline std::tuple<FpPoly, FpPoly, FpPoly> xgcd(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
    FpPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        auto [q, r] = divmod(r0, r1, p);
        r0 = std::move(r1);
        r1 = std::move(r);
        FpPoly s2 = sub(s0, mul(q, s1, p), p);
        FpPoly t2 = sub(t0, mul(q, t1, p), p);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.empty()) return {r0, s0, t0};
    std::uint64_t inv = arith::inv_mod(r0.back(), p);
    return {scale(r0, inv, p), scale(s0, inv, p), scale(t0, inv, p)};
}

inline FpPoly derivative(const FpPoly& a, std::uint64_t p) {
    if (a.size() <= 1) return {};
    FpPoly out(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = arith::mul_mod(a[i], i % p, p);
    trim(out);
    return out;
}

inline std::uint64_t eval(const FpPoly& a, std::uint64_t x, std::uint64_t p) {
    std::uint64_t acc = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = (arith::mul_mod(acc, x, p) + *it) % p;
    return acc;
}

/// base^e mod (m, p), exponent given as a big integer.
inline FpPoly pow_mod(FpPoly base, const BigInt& e, const FpPoly& m, std::uint64_t p) {
    FpPoly result{1};
    result = rem(result, m, p);
    base = rem(base, m, p);
    const std::size_t bits = e == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = rem(mul(result, result, p), m, p);
        if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, base, p), m, p);
    }
    return result;
}

namespace detail {

inline FpPoly pth_root(const FpPoly& a, std::uint64_t p) {
    FpPoly out;
    for (std::size_t i = 0; i < a.size(); i += p) out.push_back(a[i]);
    trim(out);
    return out;
}

inline void squarefree(const FpPoly& f, std::uint64_t p, std::uint64_t mult, std::vector<std::pair<FpPoly, int>>& out) {
    if (degree(f) < 1) return;
    FpPoly g = derivative(f, p);
    if (g.empty()) {
        squarefree(pth_root(f, p), p, mult * p, out);
        return;
    }
    FpPoly c = gcd(f, g, p);
    FpPoly w = quo(f, c, p);
    int i = 1;
    while (degree(w) > 0) {
        FpPoly y = gcd(w, c, p);
        FpPoly z = quo(w, y, p);
        if (degree(z) > 0) out.emplace_back(monic(z, p), static_cast<int>(i * mult));
        ++i;
        w = y;
        c = quo(c, y, p);
    }
    if (degree(c) > 0) squarefree(pth_root(c, p), p, mult * p, out);
}

inline void equal_degree(const FpPoly& g, int d, std::uint64_t p, std::mt19937_64& rng, std::vector<FpPoly>& out) {
    if (degree(g) == d) {
        out.push_back(g);
        return;
    }
    std::uniform_int_distribution<std::uint64_t> coeff(0, p - 1);
    const BigInt half = (arith::pow(arith::from_u64(p), static_cast<unsigned long>(d)) - 1) / 2;
    for (;;) {
        FpPoly a(degree(g));
        for (auto& c : a) c = coeff(rng);
        trim(a);
        if (degree(a) < 1) continue;
        FpPoly b;
        if (p == 2) {
            FpPoly term = rem(a, g, p);
            b = term;
            for (int k = 1; k < d; ++k) {
                term = rem(mul(term, term, p), g, p);
                b = add(b, term, p);
            }
        } else {
            b = sub(pow_mod(a, half, g, p), FpPoly{1}, p);
        }
        FpPoly h = gcd(g, b, p);
        if (degree(h) > 0 && degree(h) < degree(g)) {
            equal_degree(h, d, p, rng, out);
            equal_degree(quo(g, h, p), d, p, rng, out);
            return;
        }
    }
}

} // namespace detail

/// Squarefree decomposition of a monic polynomial: pairs (squarefree part, multiplicity).
inline std::vector<std::pair<FpPoly, int>> squarefree_decomposition(const FpPoly& f, std::uint64_t p) {
    std::vector<std::pair<FpPoly, int>> out;
    detail::squarefree(monic(f, p), p, 1, out);
    return out;
}

/// Complete factorization of f mod p into monic irreducibles with multiplicities.
/// Order is unspecified; callers impose their own canonical ordering.
inline std::vector<std::pair<FpPoly, int>> factor(const FpPoly& f, std::uint64_t p) {
    std::vector<std::pair<FpPoly, int>> out;
    std::mt19937_64 rng(0x5eed ^ p);
    for (const auto& [sq, mult] : squarefree_decomposition(f, p)) {
        FpPoly rest = sq;
        FpPoly h{0, 1};
        for (int i = 1; 2 * i <= degree(rest); ++i) {
            h = pow_mod(h, arith::from_u64(p), rest, p);
            FpPoly g = gcd(rest, sub(h, FpPoly{0, 1}, p), p);
            if (degree(g) > 0) {
                std::vector<FpPoly> parts;
                detail::equal_degree(g, i, p, rng, parts);
                for (auto& part : parts) out.emplace_back(std::move(part), mult);
                rest = quo(rest, g, p);
                h = rem(h, rest, p);
            }
        }
        if (degree(rest) > 0) out.emplace_back(rest, mult);
    }
    return out;
}

} // namespace fp
} // namespace adelic
