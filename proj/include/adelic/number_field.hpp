#pragma once

#include "arith.hpp"
#include "errors.hpp"
#include "fp_poly.hpp"
#include "poly.hpp"

#include <complex>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace adelic {

/// A number field Q(theta) given by the monic irreducible minimal polynomial of theta.
class NumberField {
public:
    static constexpr int max_degree = 12;

    static std::shared_ptr<const NumberField> make(ZPoly f) {
        poly::trim(f);
        if (f.size() < 2) throw std::invalid_argument("defining polynomial must have degree >= 1");
        if (f.back() != 1) throw std::invalid_argument("defining polynomial must be monic");
        if (poly::degree(f) > max_degree) throw std::invalid_argument("defining polynomial degree exceeds " + std::to_string(max_degree));
        return std::shared_ptr<const NumberField>(new NumberField(std::move(f)));
    }

    static std::shared_ptr<const NumberField> rationals() {
        static const auto q = make(ZPoly{0, 1});
        return q;
    }

    const ZPoly& polynomial() const { return f_; }
    int degree() const { return poly::degree(f_); }
    const BigInt& discriminant() const { return disc_; }
    int real_embeddings() const { return s1_; }
    int complex_pairs() const { return s2_; }
    int archimedean_count() const { return s1_ + s2_; }
    bool is_rationals() const { return degree() == 1; }
    std::string name() const { return poly::to_string(f_); }

    bool operator==(const NumberField& other) const { return f_ == other.f_; }

    /// Dedekind's criterion: Z[theta] is maximal at p iff gcd(F, g, h) = 1 mod p,
    /// where g = rad(f mod p), h = (f mod p)/g and F = (g h - f)/p over Z.
    bool is_p_maximal(std::uint64_t p) const {
        if (!arith::is_prime(p)) throw not_prime(std::to_string(p) + " is not prime");
        if (!mpz_divisible_ui_p(disc_.get_mpz_t(), p) || degree() == 1) return true;
        FpPoly fbar = fp::from_z(f_, p);
        FpPoly g{1}, h{1};
        for (const auto& [factor, mult] : fp::factor(fbar, p)) {
            g = fp::mul(g, factor, p);
            for (int i = 1; i < mult; ++i) h = fp::mul(h, factor, p);
        }
        ZPoly big = poly::sub(poly::mul(fp::lift(g), fp::lift(h)), f_);
        for (auto& c : big) mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), p);
        FpPoly fbig = fp::from_z(big, p);
        FpPoly common = fp::gcd(fp::gcd(fbig, g, p), h, p);
        return fp::degree(common) == 0;
    }

    /// Primes dividing the index [o_K : Z[theta]].
    std::vector<std::uint64_t> index_primes() const {
        std::vector<std::uint64_t> out;
        for (const auto& q : ramified_primes()) {
            if (!is_p_maximal(q)) out.push_back(q);
        }
        return out;
    }

    /// Prime divisors of the polynomial discriminant.
    std::vector<std::uint64_t> ramified_primes() const {
        std::vector<std::uint64_t> out;
        if (abs(disc_) == 1) return out;
        for (const auto& q : arith::prime_factors(disc_)) out.push_back(arith::to_u64(q));
        return out;
    }

    bool equation_order_is_maximal() const { return index_primes().empty(); }

private:
    explicit NumberField(ZPoly f) : f_(std::move(f)) {
        const int n = degree();
        BigInt res = poly::resultant(f_, poly::derivative(f_));
        disc_ = ((n * (n - 1) / 2) % 2 == 0) ? res : BigInt(-res);
        if (disc_ == 0) throw not_irreducible(name() + " has a repeated root");
        check_irreducible();
        s1_ = poly::count_real_roots(f_);
        s2_ = (n - s1_) / 2;
    }

    void check_irreducible() const;

    ZPoly f_;
    BigInt disc_;
    int s1_ = 0;
    int s2_ = 0;
};

using FieldPtr = std::shared_ptr<const NumberField>;

namespace detail {

// Degrees d in [1, n/2] that a rational factor could have, given factor degrees mod p.
inline std::set<int> admissible_degrees(const std::vector<int>& degs, int n) {
    std::set<int> sums{0};
    for (int d : degs) {
        std::set<int> next = sums;
        for (int s : sums) next.insert(s + d);
        sums = std::move(next);
    }
    std::set<int> out;
    for (int s : sums)
        if (s >= 1 && 2 * s <= n) out.insert(s);
    return out;
}

inline std::vector<std::complex<long double>> complex_roots(const ZPoly& f) {
    using C = std::complex<long double>;
    const int n = poly::degree(f);
    std::vector<C> coeffs(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) coeffs[i] = C(static_cast<long double>(f[i].get_d()), 0);
    auto eval = [&](C x) {
        C acc = 0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
        return acc;
    };
    long double radius = 1;
    for (int i = 0; i < n; ++i) radius = std::max(radius, 1 + std::abs(coeffs[i].real()));
    std::vector<C> z(n);
    const C seed(0.4L, 0.9L);
    for (int i = 0; i < n; ++i) z[i] = std::pow(seed, i) * std::min(radius, 2.0L);
    for (int iter = 0; iter < 5000; ++iter) {
        long double delta = 0;
        for (int i = 0; i < n; ++i) {
            C denom = 1;
            for (int j = 0; j < n; ++j)
                if (j != i) denom *= (z[i] - z[j]);
            if (std::abs(denom) == 0) denom = C(1e-30L, 0);
            C step = eval(z[i]) / denom;
            z[i] -= step;
            delta = std::max(delta, std::abs(step));
        }
        if (delta < 1e-30L) break;
    }
    return z;
}

} // namespace detail

// Trial factorization: a degree sieve over small primes, then a search over products of
// numerically located roots, each candidate verified by exact division.
inline void NumberField::check_irreducible() const {
    const int n = degree();
    if (n == 1) return;
    std::set<int> candidates;
    for (int d = 1; 2 * d <= n; ++d) candidates.insert(d);
    int used = 0;
    for (std::uint64_t p = 2; used < 40 && !candidates.empty(); p = arith::next_prime(p)) {
        if (mpz_divisible_ui_p(disc_.get_mpz_t(), p)) continue;
        std::vector<int> degs;
        for (const auto& [factor, mult] : fp::factor(fp::from_z(f_, p), p))
            for (int i = 0; i < mult; ++i) degs.push_back(fp::degree(factor));
        std::set<int> allowed = detail::admissible_degrees(degs, n);
        std::set<int> keep;
        for (int d : candidates)
            if (allowed.count(d)) keep.insert(d);
        candidates = std::move(keep);
        ++used;
    }
    if (candidates.empty()) return;
    const auto roots = detail::complex_roots(f_);
    for (int d : candidates) {
        std::vector<int> pick(d);
        for (int i = 0; i < d; ++i) pick[i] = i;
        for (;;) {
            std::vector<std::complex<long double>> prod{1};
            for (int idx : pick) {
                std::vector<std::complex<long double>> next(prod.size() + 1, 0);
                for (std::size_t k = 0; k < prod.size(); ++k) {
                    next[k + 1] += prod[k];
                    next[k] -= prod[k] * roots[idx];
                }
                prod = std::move(next);
            }
            bool integral = true;
            ZPoly g(prod.size());
            for (std::size_t k = 0; k < prod.size(); ++k) {
                long double re = prod[k].real(), im = prod[k].imag();
                long double r = std::round(re);
                if (std::abs(im) > 1e-6L * (1 + std::abs(re)) || std::abs(re - r) > 1e-6L * (1 + std::abs(re))) {
                    integral = false;
                    break;
                }
                g[k] = BigInt(static_cast<double>(r));
            }
            if (integral && poly::rem_monic(f_, g).empty())
                throw not_irreducible(name() + " is divisible by " + poly::to_string(g));
            int i = d - 1;
            while (i >= 0 && pick[i] == n - d + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < d; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
}

/// An element of K written as a polynomial in theta of degree < n with rational coefficients.
class KElement {
public:
    KElement() = default;
    explicit KElement(FieldPtr field) : field_(std::move(field)) {}

    KElement(FieldPtr field, QPoly coeffs) : field_(std::move(field)), c_(std::move(coeffs)) { reduce(); }

    static KElement rational(FieldPtr field, const Rational& r) { return KElement(std::move(field), QPoly{r}); }
    static KElement integer(FieldPtr field, long v) { return rational(std::move(field), Rational(v)); }
    static KElement theta(FieldPtr field) { return KElement(std::move(field), QPoly{0, 1}); }
    static KElement from_z(FieldPtr field, const ZPoly& a) { return KElement(std::move(field), poly::to_q(a)); }

    const FieldPtr& field() const { return field_; }
    const QPoly& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool is_rational() const { return c_.size() <= 1; }
    Rational rational_value() const { return c_.empty() ? Rational(0) : c_[0]; }

    friend KElement operator+(const KElement& a, const KElement& b) {
        check_same(a, b);
        return KElement(a.field_, poly::add(a.c_, b.c_));
    }
    friend KElement operator-(const KElement& a, const KElement& b) {
        check_same(a, b);
        return KElement(a.field_, poly::sub(a.c_, b.c_));
    }
    friend KElement operator*(const KElement& a, const KElement& b) {
        check_same(a, b);
        return KElement(a.field_, poly::mul(a.c_, b.c_));
    }
    KElement operator-() const { return KElement(field_, poly::scale(c_, Rational(-1))); }

    friend bool operator==(const KElement& a, const KElement& b) {
        return a.c_ == b.c_ && (a.field_ == b.field_ || *a.field_ == *b.field_);
    }

    KElement pow(unsigned long e) const {
        KElement result = integer(field_, 1), base = *this;
        while (e) {
            if (e & 1) result = result * base;
            base = base * base;
            e >>= 1;
        }
        return result;
    }

    KElement inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        // Extended Euclid over Q against the defining polynomial.
        QPoly r0 = poly::to_q(field_->polynomial()), r1 = c_, s0{}, s1{1};
        while (poly::degree(r1) > 0) {
            auto [q, r] = poly::divmod(r0, r1);
            QPoly s2 = poly::sub(s0, poly::mul(q, s1));
            r0 = std::move(r1);
            r1 = std::move(r);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        return KElement(field_, poly::scale(s1, Rational(1) / r1[0]));
    }

    /// (b, d) with this = b(theta)/d, b integral, d > 0 minimal.
    std::pair<ZPoly, BigInt> integral_form() const {
        BigInt d = 1;
        for (const auto& c : c_) d = lcm(d, BigInt(c.get_den()));
        ZPoly b(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) b[i] = BigInt(c_[i].get_num() * (d / c_[i].get_den()));
        return {b, d};
    }

    Rational norm() const {
        auto [b, d] = integral_form();
        Rational out(poly::resultant(field_->polynomial(), b), arith::pow(d, static_cast<unsigned long>(field_->degree())));
        out.canonicalize();
        return out;
    }

    /// Rational primes below the places where this nonzero element has nonzero valuation.
    std::vector<std::uint64_t> support_primes() const {
        if (is_zero()) throw std::domain_error("support of zero");
        auto [b, d] = integral_form();
        BigInt n = poly::resultant(field_->polynomial(), b);
        std::set<std::uint64_t> out;
        if (abs(n) != 1)
            for (const auto& q : arith::prime_factors(n)) out.insert(arith::to_u64(q));
        if (d != 1)
            for (const auto& q : arith::prime_factors(d)) out.insert(arith::to_u64(q));
        return {out.begin(), out.end()};
    }

private:
    static void check_same(const KElement& a, const KElement& b) {
        if (a.field_ != b.field_ && !(*a.field_ == *b.field_)) throw field_mismatch("elements of different number fields");
    }

    void reduce() {
        poly::trim(c_);
        if (poly::degree(c_) >= field_->degree()) c_ = poly::rem_monic(std::move(c_), field_->polynomial());
    }

    FieldPtr field_;
    QPoly c_;
};

} // namespace adelic
