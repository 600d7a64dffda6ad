#pragma once

#include "arith.hpp"

#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace adelic {

/// Dense polynomials, coefficient of x^i at index i. The zero polynomial is empty.
using ZPoly = std::vector<BigInt>;
using QPoly = std::vector<Rational>;

namespace poly {

template <class P>
void trim(P& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

template <class P>
int degree(const P& a) {
    return static_cast<int>(a.size()) - 1;
}

template <class P>
P add(const P& a, const P& b) {
    P out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    trim(out);
    return out;
}

template <class P>
P sub(const P& a, const P& b) {
    P out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    trim(out);
    return out;
}

template <class P>
P mul(const P& a, const P& b) {
    if (a.empty() || b.empty()) return {};
    P out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
}

template <class P, class S>
P scale(const P& a, const S& s) {
    P out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * s;
    trim(out);
    return out;
}

/// Remainder of a modulo a monic polynomial f (works over Z and Q).
template <class P, class F>
P rem_monic(P a, const F& f) {
    const int n = degree(f);
    for (int i = degree(a); i >= n; --i) {
        if (a[i] == 0) continue;
        auto c = a[i];
        for (int j = 0; j <= n; ++j) a[i - n + j] -= c * f[j];
    }
    if (static_cast<int>(a.size()) > n) a.resize(n);
    trim(a);
    return a;
}

/// Quotient and remainder over Q; b nonzero.
inline std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
    const int db = degree(b);
    if (db < 0) throw std::domain_error("division by zero polynomial");
    QPoly q(std::max(0, degree(a) - db + 1));
    for (int i = degree(a); i >= db; --i) {
        if (a[i] == 0) continue;
        Rational c = a[i] / b[db];
        q[i - db] = c;
        for (int j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    if (static_cast<int>(a.size()) > db) a.resize(db);
    trim(a);
    trim(q);
    return {q, a};
}

inline QPoly gcd(QPoly a, QPoly b) {
    while (!b.empty()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rational lc = a.back();
        for (auto& c : a) c /= lc;
    }
    return a;
}

template <class P>
P derivative(const P& a) {
    if (a.size() <= 1) return {};
    P out(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = a[i] * static_cast<long>(i);
    trim(out);
    return out;
}

inline QPoly to_q(const ZPoly& a) {
    return QPoly(a.begin(), a.end());
}

template <class P, class T>
T eval(const P& a, const T& x) {
    T acc = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * x + *it;
    return acc;
}

/// Determinant of a square integer matrix by fraction-free Bareiss elimination.
inline BigInt determinant(std::vector<std::vector<BigInt>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap = k + 1;
            while (swap < n && m[swap][k] == 0) ++swap;
            if (swap == n) return 0;
            std::swap(m[k], m[swap]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = t;
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

/// Resultant of two integer polynomials via the Sylvester matrix.
inline BigInt resultant(const ZPoly& a, const ZPoly& b) {
    const int da = degree(a), db = degree(b);
    if (da < 0 || db < 0) return 0;
    if (da == 0) return arith::pow(a[0], static_cast<unsigned long>(db));
    if (db == 0) return arith::pow(b[0], static_cast<unsigned long>(da));
    const std::size_t n = static_cast<std::size_t>(da + db);
    std::vector<std::vector<BigInt>> s(n, std::vector<BigInt>(n, 0));
    for (int r = 0; r < db; ++r)
        for (int i = 0; i <= da; ++i) s[r][r + da - i] = a[i];
    for (int r = 0; r < da; ++r)
        for (int i = 0; i <= db; ++i) s[db + r][r + db - i] = b[i];
    return determinant(std::move(s));
}

/// Number of distinct real roots, by Sturm's theorem.
inline int count_real_roots(const ZPoly& f) {
    std::vector<QPoly> seq{to_q(f), derivative(to_q(f))};
    while (!seq.back().empty()) {
        auto r = divmod(seq[seq.size() - 2], seq.back()).second;
        for (auto& c : r) c = -c;
        if (r.empty()) break;
        seq.push_back(std::move(r));
    }
    auto changes = [&](bool at_plus_infinity) {
        int count = 0, last = 0;
        for (const auto& p : seq) {
            if (p.empty()) continue;
            int s = sgn(p.back());
            if (!at_plus_infinity && degree(p) % 2 == 1) s = -s;
            if (last != 0 && s != last) ++count;
            last = s;
        }
        return count;
    };
    return changes(false) - changes(true);
}

template <class P>
std::string to_string(const P& a, const std::string& var = "x") {
    if (a.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(a); i >= 0; --i) {
        if (a[i] == 0) continue;
        auto c = a[i];
        bool negative = c < 0;
        if (negative) c = -c;
        if (!first) os << (negative ? "-" : "+");
        else if (negative) os << "-";
        first = false;
        bool unit = (c == 1);
        if (!unit || i == 0) os << c;
        if (i >= 1) os << var;
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

} // namespace poly
} // namespace adelic
