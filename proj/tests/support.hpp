#pragma once

// Shared fixtures for the unit tests and the acceptance binary: catalogue universes,
// random generators, and oracles that do not go through the library's own algorithms.

#include <adelic/adelic.hpp>

#include <random>

namespace support {

using namespace adelic;

// ---------------------------------------------------------------------------------------
// Oracle: polynomial arithmetic over F_p written independently of fp_poly.hpp.

namespace modp {

using Poly = std::vector<long long>;

inline long long md(long long a, long long p) { return ((a % p) + p) % p; }

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly reduce(const ZPoly& f, long long p) {
    Poly out;
    for (const auto& c : f) {
        const BigInt modulus(static_cast<long>(p));
        BigInt r = c % modulus;
        if (r < 0) r += modulus;
        out.push_back(r.get_si());
    }
    trim(out);
    return out;
}

inline Poly mul(const Poly& a, const Poly& b, long long p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    trim(out);
    return out;
}

inline long long inv(long long a, long long p) {
    long long r = 1, b = md(a, p), e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

inline Poly rem(Poly a, const Poly& m, long long p) {
    const long long lead = inv(m.back(), p);
    while (a.size() >= m.size()) {
        const long long q = a.back() * lead % p;
        const std::size_t shift = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] = md(a[shift + i] - q * m[i], p);
        trim(a);
    }
    return a;
}

inline Poly sub(Poly a, const Poly& b, long long p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = md(a[i] - b[i], p);
    trim(a);
    return a;
}

inline Poly gcd(Poly a, Poly b, long long p) {
    while (!b.empty()) {
        Poly r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const long long l = inv(a.back(), p);
        for (auto& c : a) c = c * l % p;
    }
    return a;
}

/// x^(p^k) mod m by repeated p-th powering.
inline Poly frobenius_power(const Poly& m, long long p, int k) {
    Poly x = rem(Poly{0, 1}, m, p);
    for (int step = 0; step < k; ++step) {
        Poly result{1}, base = x;
        long long e = p;
        while (e) {
            if (e & 1) result = rem(mul(result, base, p), m, p);
            base = rem(mul(base, base, p), m, p);
            e >>= 1;
        }
        x = result;
    }
    return x;
}

/// Rabin's irreducibility test for a monic g of degree d.
inline bool irreducible(const Poly& g, long long p) {
    const int d = static_cast<int>(g.size()) - 1;
    if (d <= 0) return false;
    if (d == 1) return true;
    const Poly x{0, 1};
    if (sub(frobenius_power(g, p, d), rem(x, g, p), p).size() != 0) return false;
    for (long long q = 2; q <= d; ++q) {
        if (d % q != 0) continue;
        bool prime = true;
        for (long long r = 2; r * r <= q; ++r)
            if (q % r == 0) prime = false;
        if (!prime) continue;
        Poly h = sub(frobenius_power(g, p, static_cast<int>(d / q)), rem(x, g, p), p);
        if (gcd(g, h, p).size() != 1) return false;
    }
    return true;
}

inline int count_roots(const Poly& f, long long p) {
    int n = 0;
    for (long long x = 0; x < p; ++x) {
        long long acc = 0;
        for (auto it = f.rbegin(); it != f.rend(); ++it) acc = (acc * x + *it) % p;
        if (acc == 0) ++n;
    }
    return n;
}

} // namespace modp

/// Valuation of a rational at p by repeated division.
inline long rational_valuation(const Rational& r, long p) {
    if (r == 0) throw std::invalid_argument("valuation of zero");
    long v = 0;
    BigInt n = r.get_num(), d = r.get_den();
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    while (d % p == 0) {
        d /= p;
        --v;
    }
    return v;
}

// ---------------------------------------------------------------------------------------
// Catalogue.

inline ZPoly poly_of(std::initializer_list<long> c) {
    ZPoly out;
    for (long x : c) out.push_back(BigInt(x));
    return out;
}

inline const ZPoly& gaussian() {
    static const ZPoly f = poly_of({1, 0, 1});
    return f;
}
inline const ZPoly& sqrt2() {
    static const ZPoly f = poly_of({-2, 0, 1});
    return f;
}
inline const ZPoly& cube_root2() {
    static const ZPoly f = poly_of({-2, 0, 0, 1});
    return f;
}
inline const ZPoly& cyclotomic5() {
    static const ZPoly f = poly_of({1, 1, 1, 1, 1});
    return f;
}

/// One universe per catalogue extension, built once and shared.
inline const std::vector<UniversePtr>& catalogue_universes() {
    static const std::vector<UniversePtr> out = [] {
        std::vector<UniversePtr> u;
        for (const auto* f : {&gaussian(), &sqrt2(), &cube_root2(), &cyclotomic5()}) u.push_back(Universe::make({*f}));
        return u;
    }();
    return out;
}

inline UniversePtr gaussian_universe() { return catalogue_universes()[0]; }

/// Principal ultrafilters at a few places plus every free ultrafilter of the field.
inline std::vector<Ultrafilter> catalogue_ultrafilters(const UniversePtr& u, int field) {
    std::vector<Ultrafilter> out;
    for (std::uint64_t p : {2ULL, 5ULL, 13ULL})
        for (const auto& w : u->keys_above(field, p)) out.push_back(Ultrafilter::principal(u, field, w));
    for (int c = 0; c < u->cell_count(field); ++c) out.push_back(Ultrafilter::free(u, field, c));
    return out;
}

/// Prime ideals of one field: zero-at ideals at a few places and four ideals per free ultrafilter.
inline std::vector<PrimeIdeal> catalogue_ideals(const UniversePtr& u, int field) {
    std::vector<PrimeIdeal> out;
    out.push_back(PrimeIdeal::zero_at(u, field, PlaceKey{0, 0}));
    for (std::uint64_t p : {2ULL, 5ULL, 7ULL})
        for (const auto& w : u->keys_above(field, p)) out.push_back(PrimeIdeal::zero_at(u, field, w));
    for (int c = 0; c < u->cell_count(field); ++c) {
        auto U = Ultrafilter::free(u, field, c);
        out.push_back(PrimeIdeal::max_at(U));
        out.push_back(PrimeIdeal::min_at(U));
        out.push_back(PrimeIdeal::between(U, Adele::uniformizer(u, field)));
        out.push_back(PrimeIdeal::between(U, Adele::uniformizer_power(u, field, Exponent::p_power(1))));
    }
    return out;
}

// ---------------------------------------------------------------------------------------
// Random generators.

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }
inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

template <class T>
const T& pick(Rng& rng, const std::vector<T>& xs) {
    return xs.at(static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(xs.size()) - 1)));
}

/// Small nonzero element of K with integer coefficients, occasionally divided by 2.
inline KElement random_nonzero(Rng& rng, const FieldPtr& K, bool allow_fractions = true) {
    for (;;) {
        QPoly c;
        for (int i = 0; i < K->degree(); ++i) c.push_back(Rational(i == 0 || coin(rng, 0.3) ? uniform(rng, -3, 3) : 0));
        KElement x(K, c);
        if (x.is_zero()) continue;
        if (allow_fractions && coin(rng, 0.1)) x = x * KElement::rational(K, Rational(1, 2));
        return x;
    }
}

/// Exponents of degree at most one so products of two random tails stay within range.
inline Exponent random_exponent(Rng& rng) {
    static const std::vector<Exponent> pool{Exponent(), Exponent(1), Exponent(2), Exponent::p_power(1), Exponent({1, 1}),
                                            Exponent::p_power(1, 2)};
    return pick(rng, pool);
}

inline Tail random_tail(Rng& rng, const FieldPtr& K) {
    if (coin(rng, 0.15)) return Tail();
    Tail t;
    const long terms = uniform(rng, 1, 2);
    for (long i = 0; i < terms; ++i) t.add_term(random_exponent(rng), random_nonzero(rng, K, false));
    return t;
}

/// A random adele: random tail per cell, a few exceptional components at small places.
inline Adele random_adele(Rng& rng, const UniversePtr& u, int field) {
    const auto& K = u->field(field);
    std::vector<KElement> arch;
    for (int i = 0; i < K->archimedean_count(); ++i) arch.push_back(coin(rng, 0.2) ? KElement::integer(K, 0) : random_nonzero(rng, K));
    std::map<int, Tail> cells;
    for (int c = 0; c < u->cell_count(field); ++c)
        if (coin(rng, 0.4)) cells[c] = random_tail(rng, K);
    std::map<PlaceKey, Component> exc;
    const auto small = u->first_places(field, 12);
    const long n = uniform(rng, 0, 2);
    for (long i = 0; i < n; ++i) exc[pick(rng, small)] = coin(rng, 0.3) ? KElement::integer(K, 0) : random_nonzero(rng, K);
    return Adele::from_parts(u, field, std::move(arch), std::move(exc), random_tail(rng, K), std::move(cells));
}

/// Random describable set: random cells and toggles among small and non-generic places.
inline DescribableSet random_set(Rng& rng, const UniversePtr& u, int field) {
    std::vector<bool> cells;
    for (int c = 0; c < u->cell_count(field); ++c) cells.push_back(coin(rng));
    std::set<PlaceKey> toggles;
    auto pool = u->first_places(field, 40);
    for (const auto& w : pool)
        if (coin(rng, 0.15)) toggles.insert(w);
    return DescribableSet::from_parts(u, field, std::move(cells), std::move(toggles));
}

/// Adele equal to 0 on s and 1 off s.
inline Adele indicator_off(const DescribableSet& s) {
    const auto& u = s.universe();
    const int field = s.field();
    const auto& K = u->field(field);
    const KElement one = KElement::integer(K, 1), zero = KElement::integer(K, 0);
    std::map<int, Tail> cells;
    for (int c = 0; c < u->cell_count(field); ++c) cells[c] = s.has_cell(c) ? Tail() : Tail::constant(one);
    std::map<PlaceKey, Component> exc;
    for (const auto& w : s.toggles()) exc[w] = s.contains(w) ? zero : one;
    for (const auto& w : u->nongeneric_places(field)) exc[w] = s.contains(w) ? zero : one;
    std::vector<KElement> arch(static_cast<std::size_t>(K->archimedean_count()), one);
    return Adele::from_parts(u, field, std::move(arch), std::move(exc), Tail::constant(one), std::move(cells));
}

/// An element guaranteed to lie in P, used to bias samples toward members.
inline Adele seed_member(const PrimeIdeal& P) {
    const auto& u = P.universe();
    const int field = P.field();
    switch (P.kind()) {
    case PrimeIdeal::Kind::zero_at:
        return *generator(P);
    case PrimeIdeal::Kind::max_at:
        return Adele::uniformizer(u, field);
    case PrimeIdeal::Kind::min_at:
        return indicator_off(P.ultrafilter().support());
    case PrimeIdeal::Kind::between:
        return P.beta();
    }
    throw std::logic_error("unknown kind");
}

/// Random adele that is a member of P about half the time.
inline Adele biased_sample(Rng& rng, const PrimeIdeal& P) {
    Adele a = random_adele(rng, P.universe(), P.field());
    if (coin(rng)) return a;
    // Multiplying by a seed with a tail of degree <= 1 keeps products inside the exponent range.
    return seed_member(P) * a;
}

// ---------------------------------------------------------------------------------------
// Oracle: pointwise evaluation of membership predicates.

inline bool pointwise_zero(const Adele& a, const PlaceKey& w) { return component::is_zero(a.component(w)); }

inline bool pointwise_in_m(const Adele& a, const PlaceKey& w) {
    return component::valuation(a.component(w), a.place(w)) >= Valuation(1);
}

} // namespace support
