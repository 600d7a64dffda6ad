#pragma once

#include "place.hpp"

namespace adelic {

inline constexpr int default_precision = 32;

namespace local_detail {

inline BigInt prime_power(std::uint64_t p, long k) {
    return arith::pow(arith::from_u64(p), static_cast<unsigned long>(std::max(0L, k)));
}

inline ZPoly reduce(ZPoly a, const BigInt& modulus) {
    for (auto& c : a) {
        c %= modulus;
        if (c < 0) c += modulus;
    }
    poly::trim(a);
    return a;
}

inline ZPoly mulmod(const ZPoly& a, const ZPoly& b, const ZPoly& F, const BigInt& modulus) {
    return reduce(poly::rem_monic(poly::mul(a, b), F), modulus);
}

/// Factor of f over Z_p congruent to factor^e, correct modulo p^M.
inline ZPoly hensel_factor(const Place& v, int M) {
    const auto& d = v.finite_data();
    const std::uint64_t p = d.p;
    {
        std::lock_guard<std::mutex> lock(d.mutex);
        if (d.lifted_precision >= M) return reduce(d.lifted, prime_power(p, M));
    }
    const ZPoly& f = v.field()->polynomial();
    FpPoly fbar = fp::from_z(f, p);
    FpPoly a0{1};
    for (int i = 0; i < d.e; ++i) a0 = fp::mul(a0, d.factor, p);
    FpPoly b0 = fp::quo(fbar, a0, p);
    auto [g, s, t] = fp::xgcd(a0, b0, p);
    (void)g;
    (void)s;
    ZPoly A = fp::lift(a0), B = fp::lift(b0);
    BigInt pk = arith::from_u64(p);
    for (int k = 1; k < M; ++k) {
        ZPoly diff = poly::sub(f, poly::mul(A, B));
        for (auto& c : diff) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), pk.get_mpz_t());
        FpPoly c = fp::from_z(diff, p);
        FpPoly a = fp::rem(fp::mul(c, t, p), a0, p);
        FpPoly b = fp::quo(fp::sub(c, fp::mul(a, b0, p), p), a0, p);
        A = poly::add(A, poly::scale(fp::lift(a), pk));
        B = poly::add(B, poly::scale(fp::lift(b), pk));
        pk *= arith::from_u64(p);
    }
    std::lock_guard<std::mutex> lock(d.mutex);
    if (d.lifted_precision < M) {
        d.lifted = A;
        d.lifted_precision = M;
    }
    return A;
}

/// Local data for arithmetic modulo p^M in O_v = Z_p[y]/(F).
struct Ring {
    Place place;
    std::uint64_t p;
    int e;
    int M;
    BigInt modulus;
    ZPoly F;
    ZPoly g;     // residue factor lift (the uniformizer when e > 1)
    ZPoly shift; // g^(e-1): multiplying by it and dividing by p lowers the valuation by one
    ZPoly w;     // g^e / p, a unit, when e > 1

    Ring(const Place& v, int precision) : place(v), p(v.prime()), e(v.e()), M(precision) {
        modulus = prime_power(p, M);
        F = reduce(hensel_factor(v, M + 1), prime_power(p, M + 1));
        g = v.finite_data().g_lift;
        if (e > 1) {
            ZPoly ge{1};
            for (int i = 0; i < e; ++i) ge = poly::mul(ge, g);
            ZPoly diff = poly::sub(ge, F);
            for (auto& c : diff) mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), p);
            w = reduce(poly::rem_monic(diff, F), modulus);
            shift = ZPoly{1};
            for (int i = 0; i + 1 < e; ++i) shift = poly::mul(shift, g);
            shift = reduce(poly::rem_monic(shift, F), modulus);
        }
    }

    ZPoly mul(const ZPoly& a, const ZPoly& b) const { return mulmod(a, b, F, modulus); }

    bool is_unit(const ZPoly& a) const {
        FpPoly r = fp::rem(fp::from_z(a, p), place.factor(), p);
        return !r.empty();
    }

    /// pi^k modulo p^M.
    ZPoly pi_pow(long k) const {
        if (k >= static_cast<long>(e) * M) return {};
        if (e == 1) return reduce(ZPoly{prime_power(p, k)}, modulus);
        ZPoly out{1}, base = reduce(poly::rem_monic(g, F), modulus);
        while (k) {
            if (k & 1) out = mul(out, base);
            base = mul(base, base);
            k >>= 1;
        }
        return out;
    }

    /// Inverse of a unit by Newton iteration.
    ZPoly inverse(const ZPoly& u) const {
        FpPoly Fbar = fp::from_z(F, p);
        auto [gcd, s, t] = fp::xgcd(fp::from_z(u, p), Fbar, p);
        (void)t;
        if (fp::degree(gcd) != 0) throw std::domain_error("local inverse of a non-unit");
        ZPoly x = fp::lift(s);
        for (int k = 1; k < M; k *= 2) {
            ZPoly ux = mul(u, x);
            ZPoly two_minus = poly::sub(ZPoly{2}, ux);
            x = mul(x, two_minus);
        }
        return reduce(x, modulus);
    }
};

} // namespace local_detail

/// An element of the completion K_v stored as pi^valuation * unit, the unit known modulo p^precision.
class LocalElement {
public:
    LocalElement() = default;

    static LocalElement zero(const Place& v, int precision = default_precision) {
        LocalElement out;
        out.place_ = v;
        out.valuation_ = Valuation::infinity();
        out.precision_ = precision;
        out.exact_ = KElement::integer(v.field(), 0);
        return out;
    }

    static LocalElement embed(const KElement& x, const Place& v, int precision = default_precision) {
        if (!v.is_finite()) throw std::invalid_argument("embedding into an archimedean place");
        if (precision < 1) throw std::invalid_argument("precision must be positive");
        if (x.is_zero()) return zero(v, precision);
        LocalElement out;
        out.place_ = v;
        out.precision_ = precision;
        out.exact_ = x;
        out.valuation_ = v.valuation(x);
        const long val = out.valuation_.value();
        KElement u = x;
        if (val != 0) {
            KElement pi = v.uniformizer();
            KElement adjust = val > 0 ? pi.inverse().pow(static_cast<unsigned long>(val)) : pi.pow(static_cast<unsigned long>(-val));
            u = u * adjust;
        }
        auto [b, den] = u.integral_form();
        const std::uint64_t p = v.prime();
        BigInt dp = den;
        long k = static_cast<long>(mpz_remove(dp.get_mpz_t(), dp.get_mpz_t(), arith::from_u64(p).get_mpz_t()));
        local_detail::Ring ring(v, precision + static_cast<int>(k));
        ZPoly r = local_detail::reduce(poly::rem_monic(b, ring.F), ring.modulus);
        BigInt pk = local_detail::prime_power(p, k);
        for (auto& c : r) {
            if (!mpz_divisible_p(c.get_mpz_t(), pk.get_mpz_t())) throw precision_loss("unit part not certified at this precision");
            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), pk.get_mpz_t());
        }
        BigInt modulus = local_detail::prime_power(p, precision);
        BigInt inv;
        mpz_invert(inv.get_mpz_t(), dp.get_mpz_t(), modulus.get_mpz_t());
        out.unit_ = local_detail::reduce(poly::scale(r, inv), modulus);
        return out;
    }

    const Place& place() const { return place_; }
    const Valuation& valuation() const { return valuation_; }
    const ZPoly& unit() const { return unit_; }
    int precision() const { return precision_; }
    bool is_zero() const { return valuation_.is_infinite(); }
    bool in_ring() const { return valuation_ >= Valuation(0); }
    bool in_maximal_ideal() const { return valuation_ >= Valuation(1); }
    const std::optional<KElement>& exact() const { return exact_; }

    /// The same element with its exact provenance forgotten.
    LocalElement without_exact() const {
        LocalElement out = *this;
        if (!is_zero()) out.exact_.reset();
        return out;
    }

    /// Multiply by pi^k.
    LocalElement shifted(long k) const {
        LocalElement out = *this;
        if (is_zero()) return out;
        out.valuation_ = Valuation(valuation_.value() + k);
        if (exact_) out.exact_ = *exact_ * (k >= 0 ? place_.uniformizer().pow(k) : place_.uniformizer().inverse().pow(-k));
        return out;
    }

    /// Multiply by pi^k without computing an exact provenance; suited to huge k.
    LocalElement shifted_inexact(long k) const {
        LocalElement out = without_exact();
        if (!is_zero()) out.valuation_ = Valuation(valuation_.value() + k);
        return out;
    }

    LocalElement operator-() const {
        LocalElement out = *this;
        if (is_zero()) return out;
        BigInt modulus = local_detail::prime_power(place_.prime(), precision_);
        out.unit_ = local_detail::reduce(poly::scale(unit_, BigInt(-1)), modulus);
        if (exact_) out.exact_ = -*exact_;
        return out;
    }

    friend LocalElement operator+(const LocalElement& a, const LocalElement& b) {
        check_same(a, b);
        const int N = std::min(a.precision_, b.precision_);
        if (a.exact_ && b.exact_) return embed(*a.exact_ + *b.exact_, a.place_, N);
        if (a.is_zero()) return b.with_precision(N);
        if (b.is_zero()) return a.with_precision(N);
        const long va = a.valuation_.value(), vb = b.valuation_.value();
        const long k = std::min(va, vb);
        local_detail::Ring ring(a.place_, N);
        ZPoly sa = ring.mul(a.unit_, ring.pi_pow(va - k));
        ZPoly sb = ring.mul(b.unit_, ring.pi_pow(vb - k));
        ZPoly s = local_detail::reduce(poly::add(sa, sb), ring.modulus);
        LocalElement out = from_raw(a.place_, s, N, k);
        return out;
    }

    friend LocalElement operator-(const LocalElement& a, const LocalElement& b) { return a + (-b); }

    friend LocalElement operator*(const LocalElement& a, const LocalElement& b) {
        check_same(a, b);
        const int N = std::min(a.precision_, b.precision_);
        if (a.exact_ && b.exact_) return embed(*a.exact_ * *b.exact_, a.place_, N);
        if (a.is_zero() || b.is_zero()) return zero(a.place_, N);
        local_detail::Ring ring(a.place_, N);
        LocalElement out;
        out.place_ = a.place_;
        out.precision_ = N;
        out.valuation_ = a.valuation_ + b.valuation_;
        out.unit_ = ring.mul(a.unit_, b.unit_);
        return out;
    }

    LocalElement inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        if (exact_) return embed(exact_->inverse(), place_, precision_);
        local_detail::Ring ring(place_, precision_);
        LocalElement out;
        out.place_ = place_;
        out.precision_ = precision_;
        out.valuation_ = Valuation(-valuation_.value());
        out.unit_ = ring.inverse(unit_);
        return out;
    }

    LocalElement with_precision(int N) const {
        LocalElement out = *this;
        if (N >= precision_) return out;
        out.precision_ = N;
        if (!is_zero()) out.unit_ = local_detail::reduce(unit_, local_detail::prime_power(place_.prime(), N));
        return out;
    }

    /// Equality to the common certified precision; exact when both provenances are known.
    bool agrees(const LocalElement& other) const {
        check_same(*this, other);
        if (exact_ && other.exact_) return *exact_ == *other.exact_;
        if (valuation_ != other.valuation_) return false;
        if (is_zero()) return true;
        const int N = std::min(precision_, other.precision_);
        BigInt modulus = local_detail::prime_power(place_.prime(), N);
        return local_detail::reduce(unit_, modulus) == local_detail::reduce(other.unit_, modulus);
    }

    /// Build pi^k * s from a raw ring element s known modulo p^N.
    static LocalElement from_raw(const Place& v, ZPoly s, int N, long k) {
        local_detail::Ring ring(v, N);
        s = local_detail::reduce(std::move(s), ring.modulus);
        int M = N;
        long j = 0;
        BigInt modulus = ring.modulus;
        const std::uint64_t p = v.prime();
        while (!ring.is_unit(s)) {
            if (s.empty()) throw precision_loss("addition cancelled every certified digit at " + v.label());
            if (M <= 1) throw precision_loss("valuation not certified at " + v.label());
            if (ring.e > 1) s = ring.mul(s, ring.shift);
            for (auto& c : s) {
                if (!mpz_divisible_ui_p(c.get_mpz_t(), p)) throw std::logic_error("local shift left a non-divisible coefficient");
                mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), p);
            }
            --M;
            modulus = local_detail::prime_power(p, M);
            s = local_detail::reduce(std::move(s), modulus);
            ++j;
        }
        if (ring.e > 1 && j > 0) {
            local_detail::Ring low(v, M);
            ZPoly winv = low.inverse(local_detail::reduce(ring.w, low.modulus));
            ZPoly scale{1};
            for (long i = 0; i < j; ++i) scale = low.mul(scale, winv);
            s = low.mul(s, scale);
        }
        LocalElement out;
        out.place_ = v;
        out.precision_ = M;
        out.valuation_ = Valuation(k + j);
        out.unit_ = std::move(s);
        return out;
    }

private:
    static void check_same(const LocalElement& a, const LocalElement& b) {
        if (!(a.place_ == b.place_)) throw field_mismatch("local elements at different places");
    }

    Place place_;
    Valuation valuation_ = Valuation::infinity();
    ZPoly unit_;
    int precision_ = default_precision;
    std::optional<KElement> exact_;
};

} // namespace adelic
