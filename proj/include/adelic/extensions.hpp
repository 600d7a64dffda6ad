#pragma once

#include "spectrum.hpp"

namespace adelic {

/// The restriction map from places of an extension to places of Q.
inline PlaceKey restrict_place(const PlaceKey& w) { return w.is_archimedean() ? PlaceKey{0, 0} : PlaceKey{w.p, 0}; }

namespace detail {

inline KElement to_field(const KElement& rational, const FieldPtr& K) {
    if (!rational.is_rational()) throw field_mismatch("expected a rational number");
    return KElement::rational(K, rational.rational_value());
}

inline Tail tail_to_field(const Tail& t, const FieldPtr& K) {
    Tail out;
    for (const auto& [e, c] : t.terms()) out.add_term(e, to_field(c, K));
    return out;
}

// Value of a Q_p component inside K_w.
inline Component component_to_field(const Component& c, const Place& w, int precision) {
    if (auto e = component::exact(c)) return to_field(*e, w.field());
    const auto& local = std::get<LocalElement>(c);
    if (local.is_zero()) return LocalElement::zero(w, precision);
    BigInt unit = local.unit().empty() ? BigInt(0) : local.unit()[0];
    LocalElement u = LocalElement::from_raw(w, ZPoly{unit}, local.precision(), 0);
    KElement scale = KElement::rational(w.field(), Rational(arith::from_u64(w.prime()))).pow(static_cast<unsigned long>(std::max(0L, local.valuation().value())));
    if (local.valuation().value() < 0) scale = scale.inverse().pow(static_cast<unsigned long>(-local.valuation().value()));
    return (LocalElement::embed(scale, w, precision) * u);
}

} // namespace detail

/// The inclusion of the adeles of Q into the adeles of field j.
inline Adele include_adele(const Adele& alpha, int field) {
    if (alpha.field() != 0) throw field_mismatch("include_adele expects an adele over Q");
    const auto& u = alpha.universe();
    const auto& K = u->field(field);
    std::vector<KElement> arch(static_cast<std::size_t>(K->archimedean_count()), detail::to_field(alpha.archimedean().at(0), K));
    Tail tail = detail::tail_to_field(alpha.tail(), K);
    std::map<int, Tail> cells;
    for (const auto& [c, t] : alpha.cell_tails())
        for (int kc : u->cells_of_atom(field, c)) cells[kc] = detail::tail_to_field(t, K);
    std::map<PlaceKey, Component> exceptional;
    for (const auto& [q, c] : alpha.exceptional())
        for (const auto& w : u->keys_above(field, q.p)) exceptional[w] = detail::component_to_field(c, u->place(field, w), u->precision());
    // At ramified places the fixed uniformizer of K is not p, so carry the value explicitly.
    for (auto p : u->nongeneric_primes()) {
        PlaceKey q{p, 0};
        for (const auto& w : u->keys_above(field, p)) {
            if (exceptional.count(w)) continue;
            Place v = u->place(field, w);
            if (v.e() == 1) continue;
            exceptional[w] = detail::component_to_field(alpha.component(q), v, u->precision());
        }
    }
    return Adele::from_parts(u, field, std::move(arch), std::move(exceptional), std::move(tail), std::move(cells));
}

/// Intersection of a prime of field j with the adeles of Q.
inline PrimeIdeal contract_prime(const PrimeIdeal& P) {
    const auto& u = P.universe();
    if (P.field() == 0) return P;
    switch (P.kind()) {
    case PrimeIdeal::Kind::zero_at:
        return PrimeIdeal::zero_at(u, 0, restrict_place(P.place()));
    case PrimeIdeal::Kind::max_at:
        return PrimeIdeal::max_at(P.ultrafilter().pushforward());
    case PrimeIdeal::Kind::min_at:
        return PrimeIdeal::min_at(P.ultrafilter().pushforward());
    case PrimeIdeal::Kind::between: {
        // Descent: Pi^E on the image atom with E the leading exponent of beta, 0 elsewhere.
        const Ultrafilter base = P.ultrafilter().pushforward();
        const Tail& t = P.beta().tail_for_cell(P.ultrafilter().cell());
        const auto& Q = u->field(0);
        Tail on_atom = t.is_zero() ? Tail() : Tail::term(t.leading().first, KElement::integer(Q, 1));
        Adele beta = Adele::from_parts(u, 0, {KElement::integer(Q, 0)}, {}, Tail(), {{base.cell(), on_atom}});
        return PrimeIdeal::between(base, beta);
    }
    }
    throw std::logic_error("unknown ideal kind");
}

/// Every prime of field j contracting to the given prime of Q.
inline std::vector<PrimeIdeal> fiber_of_spec(const PrimeIdeal& P, int field) {
    if (P.field() != 0) throw field_mismatch("fiber_of_spec expects a prime over Q");
    const auto& u = P.universe();
    std::vector<PrimeIdeal> out;
    switch (P.kind()) {
    case PrimeIdeal::Kind::zero_at:
        if (P.place().is_archimedean()) {
            for (const auto& w : u->archimedean_keys(field)) out.push_back(PrimeIdeal::zero_at(u, field, w));
        } else {
            for (const auto& w : u->keys_above(field, P.place().p)) out.push_back(PrimeIdeal::zero_at(u, field, w));
        }
        break;
    case PrimeIdeal::Kind::max_at:
        for (const auto& U : P.ultrafilter().lifts(field)) out.push_back(PrimeIdeal::max_at(U));
        break;
    case PrimeIdeal::Kind::min_at:
        for (const auto& U : P.ultrafilter().lifts(field)) out.push_back(PrimeIdeal::min_at(U));
        break;
    case PrimeIdeal::Kind::between: {
        Adele lifted = include_adele(P.beta(), field);
        for (const auto& U : P.ultrafilter().lifts(field)) out.push_back(PrimeIdeal::between(U, lifted));
        break;
    }
    }
    return out;
}

/// Rank over F_p of the images of 1, theta, ..., theta^(n-1) in the product of O_w / p O_w over w | p.
inline int power_basis_rank(const FieldPtr& K, std::uint64_t p) {
    const int n = K->degree();
    std::vector<std::vector<std::uint64_t>> rows(static_cast<std::size_t>(n));
    for (const auto& w : factor_prime(K, p)) {
        FpPoly modulus{1};
        for (int i = 0; i < w.e(); ++i) modulus = fp::mul(modulus, w.factor(), p);
        const int width = fp::degree(modulus);
        FpPoly power{1};
        for (int i = 0; i < n; ++i) {
            FpPoly r = fp::rem(power, modulus, p);
            for (int j = 0; j < width; ++j) rows[i].push_back(j < static_cast<int>(r.size()) ? r[j] : 0);
            power = fp::mul(power, FpPoly{0, 1}, p);
        }
    }
    int rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t col = 0; col < cols && rank < n; ++col) {
        int pivot = -1;
        for (int r = rank; r < n; ++r)
            if (rows[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        const std::uint64_t inv = arith::inv_mod(rows[rank][col], p);
        for (int r = 0; r < n; ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            const std::uint64_t factor = arith::mul_mod(rows[r][col], inv, p);
            for (std::size_t c = col; c < cols; ++c) rows[r][c] = (rows[r][c] + p - arith::mul_mod(factor, rows[rank][c], p)) % p;
        }
        ++rank;
    }
    return rank;
}

} // namespace adelic
