#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace adelic {

using BigInt = mpz_class;
using Rational = mpq_class;

namespace arith {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mul_mod(r, b, m);
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    return r;
}

/// Inverse of a modulo prime p; a must be nonzero mod p.
inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) throw std::domain_error("inv_mod: zero has no inverse");
    return pow_mod(a, p - 2, p);
}

/// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

inline std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
    std::vector<std::uint64_t> out;
    if (bound < 2) return out;
    std::vector<bool> composite(bound + 1, false);
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
    }
    return out;
}

inline std::uint64_t next_prime(std::uint64_t n) {
    std::uint64_t c = n + 1;
    while (!is_prime(c)) ++c;
    return c;
}

/// Exponent of p in n (n != 0).
inline long valuation(const BigInt& n, std::uint64_t p) {
    if (n == 0) throw std::domain_error("valuation of zero");
    BigInt q = n;
    BigInt pp = static_cast<unsigned long>(p);
    return static_cast<long>(mpz_remove(q.get_mpz_t(), q.get_mpz_t(), pp.get_mpz_t()));
}

inline long valuation(const Rational& r, std::uint64_t p) {
    return valuation(r.get_num(), p) - valuation(r.get_den(), p);
}

inline bool fits_u64(const BigInt& n) {
    return n >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64;
}

inline std::uint64_t to_u64(const BigInt& n) {
    if (!fits_u64(n)) throw std::overflow_error("integer does not fit in 64 bits");
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, n.get_mpz_t());
    return out;
}

inline BigInt from_u64(std::uint64_t v) {
    BigInt out;
    mpz_import(out.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
    return out;
}

/// n mod p as a residue in [0, p).
inline std::uint64_t residue(const BigInt& n, std::uint64_t p) {
    BigInt r = n % from_u64(p);
    if (r < 0) r += from_u64(p);
    return to_u64(r);
}

inline std::uint64_t residue(const Rational& r, std::uint64_t p) {
    std::uint64_t den = residue(r.get_den(), p);
    return mul_mod(residue(r.get_num(), p), inv_mod(den, p), p);
}

inline BigInt pow(const BigInt& b, unsigned long e) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), e);
    return out;
}

namespace detail {

inline bool probable_prime(const BigInt& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

// Brent's variant of Pollard rho; returns a nontrivial factor of composite odd n.
inline BigInt pollard_brent(const BigInt& n) {
    for (unsigned long c = 1;; ++c) {
        BigInt y = 2, x, g = 1, q = 1, ys;
        unsigned long r = 1;
        const unsigned long m = 64;
        auto step = [&](const BigInt& v) { return BigInt((v * v + c) % n); };
        while (g == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = step(y);
            unsigned long k = 0;
            while (k < r && g == 1) {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = step(y);
                    BigInt diff = x - y;
                    q = (q * abs(diff)) % n;
                }
                g = gcd(q, n);
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            do {
                ys = step(ys);
                BigInt diff = x - ys;
                g = gcd(BigInt(abs(diff)), n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

inline void collect_factors(BigInt n, std::vector<BigInt>& out) {
    if (n == 1) return;
    if (probable_prime(n)) {
        out.push_back(n);
        return;
    }
    BigInt d = pollard_brent(n);
    collect_factors(d, out);
    collect_factors(BigInt(n / d), out);
}

} // namespace detail

/// Distinct prime divisors of |n| in increasing order (n != 0).
inline std::vector<BigInt> prime_factors(BigInt n) {
    if (n == 0) throw std::domain_error("prime_factors of zero");
    n = abs(n);
    std::vector<BigInt> out;
    static const std::vector<std::uint64_t> small = primes_up_to(20000);
    for (std::uint64_t p : small) {
        if (n == 1) break;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            out.push_back(from_u64(p));
            while (mpz_divisible_ui_p(n.get_mpz_t(), p)) mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        }
    }
    if (n != 1) {
        std::vector<BigInt> rest;
        detail::collect_factors(n, rest);
        out.insert(out.end(), rest.begin(), rest.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace arith
} // namespace adelic
