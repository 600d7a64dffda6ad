#pragma once

#include "adele.hpp"
#include "ultrafilter.hpp"

namespace adelic {

struct Classification {
    bool is_maximal = false;
    bool is_minimal = false;
    friend bool operator==(const Classification&, const Classification&) = default;
};

/// Prime ideals of the adele ring of one field.
///
/// zero_at(v): components vanishing at v (v may be archimedean). max_at(U) / min_at(U): the
/// maximal and minimal primes of a free ultrafilter. between(U, beta): elements alpha with
/// n v(alpha) >= v(beta) on some member of U, for some n.
class PrimeIdeal {
public:
    enum class Kind { zero_at, max_at, min_at, between };

    static PrimeIdeal zero_at(UniversePtr u, int field, const PlaceKey& w) {
        u->place(field, w);
        PrimeIdeal out;
        out.kind_ = Kind::zero_at;
        out.u_ = std::move(u);
        out.field_ = field;
        out.place_ = w;
        return out;
    }

    static PrimeIdeal max_at(const Ultrafilter& U) { return from_free(Kind::max_at, U); }
    static PrimeIdeal min_at(const Ultrafilter& U) { return from_free(Kind::min_at, U); }

    /// Requires beta in the maximal ideal of U.
    static PrimeIdeal between(const Ultrafilter& U, const Adele& beta);

    Kind kind() const { return kind_; }
    const UniversePtr& universe() const { return u_; }
    int field() const { return field_; }
    const PlaceKey& place() const {
        if (kind_ != Kind::zero_at) throw std::logic_error("ideal is not attached to a place");
        return place_;
    }
    const Ultrafilter& ultrafilter() const {
        if (kind_ == Kind::zero_at) throw std::logic_error("ideal has no ultrafilter");
        return ultrafilter_;
    }
    const Adele& beta() const {
        if (kind_ != Kind::between) throw std::logic_error("ideal has no generator beta");
        return *beta_;
    }

private:
    static PrimeIdeal from_free(Kind kind, const Ultrafilter& U) {
        if (!U.is_free()) throw std::invalid_argument("ultrafilter ideals need a free ultrafilter");
        PrimeIdeal out;
        out.kind_ = kind;
        out.u_ = U.universe();
        out.field_ = U.field();
        out.ultrafilter_ = U;
        return out;
    }

    Kind kind_ = Kind::zero_at;
    UniversePtr u_;
    int field_ = 0;
    PlaceKey place_;
    Ultrafilter ultrafilter_;
    std::shared_ptr<const Adele> beta_;
};

namespace detail {

inline void check_field(const Adele& a, const UniversePtr& u, int field) {
    if (a.universe() != u || a.field() != field) throw field_mismatch("adele and ideal over different fields");
}

/// Rank of the ideal between m_U (-1) and M_U (0): the degree of the eventual exponent of beta.
inline int between_rank(const Tail& beta_tail) {
    if (beta_tail.is_zero()) return -1;
    return beta_tail.leading().first.degree();
}

} // namespace detail

/// Decides whether alpha lies in the ideal p^beta of the free ultrafilter U.
///
/// On U's cell the valuations of alpha and beta are eventually e_a(p) and e_b(p) for the
/// leading exponents of their tails, so the finite exceptions can be dropped from Y and
/// n chosen afterwards: the answer only depends on the degrees of those exponents.
inline bool member_between(const Adele& alpha, const Ultrafilter& U, const Adele& beta) {
    if (!U.is_free()) throw std::invalid_argument("member_between needs a free ultrafilter");
    detail::check_field(alpha, U.universe(), U.field());
    detail::check_field(beta, U.universe(), U.field());
    if (!U.contains(beta.membership_set(Predicate::in_maximal_ideal)))
        throw degenerate_generator("beta does not lie in the maximal ideal of the ultrafilter");
    const Tail& ta = alpha.tail_for_cell(U.cell());
    const Tail& tb = beta.tail_for_cell(U.cell());
    if (tb.is_zero()) return ta.is_zero();
    if (ta.is_zero()) return true;
    const Exponent& ea = ta.leading().first;
    if (ea.is_zero()) return false;
    return ea.degree() >= tb.leading().first.degree();
}

inline PrimeIdeal PrimeIdeal::between(const Ultrafilter& U, const Adele& beta) {
    detail::check_field(beta, U.universe(), U.field());
    PrimeIdeal out = from_free(Kind::between, U);
    if (!U.contains(beta.membership_set(Predicate::in_maximal_ideal)))
        throw degenerate_generator("beta does not lie in the maximal ideal of the ultrafilter");
    out.beta_ = std::make_shared<const Adele>(beta);
    return out;
}

inline bool member(const Adele& alpha, const PrimeIdeal& P) {
    detail::check_field(alpha, P.universe(), P.field());
    switch (P.kind()) {
    case PrimeIdeal::Kind::zero_at:
        return alpha.is_zero_at(P.place());
    case PrimeIdeal::Kind::max_at:
        return P.ultrafilter().contains(alpha.membership_set(Predicate::in_maximal_ideal));
    case PrimeIdeal::Kind::min_at:
        return P.ultrafilter().contains(alpha.membership_set(Predicate::is_zero));
    case PrimeIdeal::Kind::between:
        return member_between(alpha, P.ultrafilter(), P.beta());
    }
    return false;
}

/// The set witnessing membership for ultrafilter ideals.
inline std::optional<DescribableSet> membership_witness(const Adele& alpha, const PrimeIdeal& P) {
    switch (P.kind()) {
    case PrimeIdeal::Kind::max_at:
        return alpha.membership_set(Predicate::in_maximal_ideal);
    case PrimeIdeal::Kind::min_at:
        return alpha.membership_set(Predicate::is_zero);
    default:
        return std::nullopt;
    }
}

/// Rank of an ultrafilter ideal: -1 minimal, 0 maximal, d >= 1 strictly between.
inline int ideal_rank(const PrimeIdeal& P) {
    switch (P.kind()) {
    case PrimeIdeal::Kind::max_at:
        return 0;
    case PrimeIdeal::Kind::min_at:
        return -1;
    case PrimeIdeal::Kind::between:
        return detail::between_rank(P.beta().tail_for_cell(P.ultrafilter().cell()));
    default:
        throw std::logic_error("ideal has no ultrafilter rank");
    }
}

inline Classification classify(const PrimeIdeal& P) {
    if (P.kind() == PrimeIdeal::Kind::zero_at) return {true, true};
    const int rank = ideal_rank(P);
    return {rank == 0, rank == -1};
}

/// Equality of ideals as sets.
inline bool same_ideal(const PrimeIdeal& a, const PrimeIdeal& b) {
    if (a.universe() != b.universe() || a.field() != b.field()) return false;
    const bool az = a.kind() == PrimeIdeal::Kind::zero_at, bz = b.kind() == PrimeIdeal::Kind::zero_at;
    if (az || bz) return az && bz && a.place() == b.place();
    return a.ultrafilter() == b.ultrafilter() && ideal_rank(a) == ideal_rank(b);
}

/// A generator of a principal prime: 1 everywhere except 0 at the place.
inline std::optional<Adele> generator(const PrimeIdeal& P) {
    if (P.kind() != PrimeIdeal::Kind::zero_at) return std::nullopt;
    const auto& K = P.universe()->field(P.field());
    return Adele::one(P.universe(), P.field()).with_component(P.place(), KElement::integer(K, 0));
}

inline bool is_closed(const PrimeIdeal& P) { return P.kind() == PrimeIdeal::Kind::zero_at; }

/// Image of alpha in the completion at w, i.e. in the quotient by the zero-at-w ideal.
inline Component quotient_eval(const Adele& alpha, const PlaceKey& w, int precision) {
    Component c = alpha.component(w);
    if (const auto* local = std::get_if<LocalElement>(&c)) return local->with_precision(precision);
    return c;
}

inline bool same_image(const Component& a, const Component& b, const Place& v, int precision) {
    if (v.is_archimedean()) return std::get<KElement>(a) == std::get<KElement>(b);
    return component::equal(a, b, v, precision);
}

// ---------------------------------------------------------------------------------------
// Level rings: adeles integral outside a finite set S containing the archimedean places.

struct Level {
    std::set<PlaceKey> places;

    bool contains(const PlaceKey& w) const { return places.count(w) > 0; }
    bool subset_of(const Level& other) const {
        return std::includes(other.places.begin(), other.places.end(), places.begin(), places.end());
    }
    std::vector<PlaceKey> finite_places() const {
        std::vector<PlaceKey> out;
        for (const auto& w : places)
            if (!w.is_archimedean()) out.push_back(w);
        return out;
    }
};

inline void check_level(const UniversePtr& u, int field, const Level& S) {
    for (const auto& w : u->archimedean_keys(field))
        if (!S.contains(w)) throw invalid_level("level misses archimedean place " + w.label());
    for (const auto& w : S.places) u->place(field, w);
}

/// Prime ideals of the level ring at S.
class LevelIdeal {
public:
    enum class Kind { zero, max_at_place, max_u, min_u, between };

    static LevelIdeal zero(UniversePtr u, int field, Level S, const PlaceKey& w) {
        LevelIdeal out = base(Kind::zero, std::move(u), field, std::move(S));
        out.u_->place(field, w);
        out.place_ = w;
        return out;
    }
    static LevelIdeal max_at_place(UniversePtr u, int field, Level S, const PlaceKey& w) {
        if (w.is_archimedean() || S.contains(w)) throw invalid_level("maximal ideal at a place needs a finite place outside the level");
        LevelIdeal out = base(Kind::max_at_place, std::move(u), field, std::move(S));
        out.u_->place(field, w);
        out.place_ = w;
        return out;
    }
    static LevelIdeal max_u(const Ultrafilter& U, Level S) { return from_free(Kind::max_u, U, std::move(S), nullptr); }
    static LevelIdeal min_u(const Ultrafilter& U, Level S) { return from_free(Kind::min_u, U, std::move(S), nullptr); }
    static LevelIdeal between(const Ultrafilter& U, Level S, const Adele& beta) {
        Adele b = integral_outside(beta, S);
        if (!U.contains(b.membership_set(Predicate::in_maximal_ideal))) throw degenerate_generator("beta does not lie in the maximal ideal");
        return from_free(Kind::between, U, std::move(S), std::make_shared<const Adele>(std::move(b)));
    }

    Kind kind() const { return kind_; }
    const Level& level() const { return level_; }
    const UniversePtr& universe() const { return u_; }
    int field() const { return field_; }
    const PlaceKey& place() const { return place_; }
    const Ultrafilter& ultrafilter() const { return ultrafilter_; }
    const Adele& beta() const { return *beta_; }

    /// Replace components that are not integral outside S by 0, a finite modification.
    static Adele integral_outside(const Adele& a, const Level& S) {
        Adele out = a;
        for (const auto& [w, c] : a.exceptional())
            if (!S.contains(w) && component::valuation(c, a.place(w)) < Valuation(0))
                out = out.with_component(w, KElement::integer(a.number_field(), 0));
        return out;
    }

private:
    static LevelIdeal base(Kind kind, UniversePtr u, int field, Level S) {
        check_level(u, field, S);
        LevelIdeal out;
        out.kind_ = kind;
        out.u_ = std::move(u);
        out.field_ = field;
        out.level_ = std::move(S);
        return out;
    }
    static LevelIdeal from_free(Kind kind, const Ultrafilter& U, Level S, std::shared_ptr<const Adele> beta) {
        if (!U.is_free()) throw std::invalid_argument("ultrafilter ideals need a free ultrafilter");
        LevelIdeal out = base(kind, U.universe(), U.field(), std::move(S));
        out.ultrafilter_ = U;
        out.beta_ = std::move(beta);
        return out;
    }

    Kind kind_ = Kind::zero;
    UniversePtr u_;
    int field_ = 0;
    Level level_;
    PlaceKey place_;
    Ultrafilter ultrafilter_;
    std::shared_ptr<const Adele> beta_;
};

/// Membership of an element of the level ring.
inline bool level_member(const Adele& alpha, const LevelIdeal& L) {
    detail::check_field(alpha, L.universe(), L.field());
    if (!alpha.integral_outside(L.level().places)) throw std::invalid_argument("adele is not in the level ring");
    auto outside_level = [&](const DescribableSet& s) {
        return s.minus(DescribableSet::finite(L.universe(), L.field(), L.level().finite_places()));
    };
    switch (L.kind()) {
    case LevelIdeal::Kind::zero:
        return alpha.is_zero_at(L.place());
    case LevelIdeal::Kind::max_at_place:
        return alpha.valuation_at(L.place()) >= Valuation(1);
    case LevelIdeal::Kind::max_u:
        return L.ultrafilter().contains(outside_level(alpha.membership_set(Predicate::in_maximal_ideal)));
    case LevelIdeal::Kind::min_u:
        return L.ultrafilter().contains(outside_level(alpha.membership_set(Predicate::is_zero)));
    case LevelIdeal::Kind::between:
        return member_between(alpha, L.ultrafilter(), L.beta());
    }
    return false;
}

inline Classification classify(const LevelIdeal& L) {
    switch (L.kind()) {
    case LevelIdeal::Kind::zero:
        return {L.level().contains(L.place()), true};
    case LevelIdeal::Kind::max_at_place:
    case LevelIdeal::Kind::max_u:
        return {true, false};
    case LevelIdeal::Kind::min_u:
        return {false, true};
    case LevelIdeal::Kind::between: {
        int rank = detail::between_rank(L.beta().tail_for_cell(L.ultrafilter().cell()));
        return {rank == 0, rank == -1};
    }
    }
    return {};
}

/// The level-S ideal whose preimage in the full adele ring is P intersected with the level ring.
inline LevelIdeal restrict_to_level(const PrimeIdeal& P, const Level& S) {
    check_level(P.universe(), P.field(), S);
    switch (P.kind()) {
    case PrimeIdeal::Kind::zero_at:
        return LevelIdeal::zero(P.universe(), P.field(), S, P.place());
    case PrimeIdeal::Kind::max_at:
        return LevelIdeal::max_u(P.ultrafilter(), S);
    case PrimeIdeal::Kind::min_at:
        return LevelIdeal::min_u(P.ultrafilter(), S);
    case PrimeIdeal::Kind::between:
        return LevelIdeal::between(P.ultrafilter(), S, P.beta());
    }
    throw std::logic_error("unknown ideal kind");
}

/// Preimage of a level ideal under the inclusion of a smaller level.
inline LevelIdeal restrict_level(const LevelIdeal& L, const Level& smaller) {
    if (!smaller.subset_of(L.level())) throw invalid_level("target level is not contained in the source level");
    check_level(L.universe(), L.field(), smaller);
    switch (L.kind()) {
    case LevelIdeal::Kind::zero:
        return LevelIdeal::zero(L.universe(), L.field(), smaller, L.place());
    case LevelIdeal::Kind::max_at_place:
        return LevelIdeal::max_at_place(L.universe(), L.field(), smaller, L.place());
    case LevelIdeal::Kind::max_u:
        return LevelIdeal::max_u(L.ultrafilter(), smaller);
    case LevelIdeal::Kind::min_u:
        return LevelIdeal::min_u(L.ultrafilter(), smaller);
    case LevelIdeal::Kind::between:
        return LevelIdeal::between(L.ultrafilter(), smaller, L.beta());
    }
    throw std::logic_error("unknown level ideal kind");
}

// ---------------------------------------------------------------------------------------
// Topology.

/// Numerical value of x under the archimedean embedding with the given index.
/// Real embeddings come first in increasing order, then complex ones with positive imaginary part.
inline std::complex<long double> embedding_value(const KElement& x, int index) {
    const auto& K = x.field();
    if (index < 0 || index >= K->archimedean_count()) throw std::out_of_range("archimedean index out of range");
    auto roots = detail::complex_roots(K->polynomial());
    std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) { return std::abs(a.imag()) < std::abs(b.imag()); });
    const int s1 = K->real_embeddings();
    std::vector<std::complex<long double>> real(roots.begin(), roots.begin() + s1), cplx;
    for (auto& r : real) r = {r.real(), 0};
    for (std::size_t i = static_cast<std::size_t>(s1); i < roots.size(); ++i)
        if (roots[i].imag() > 0) cplx.push_back(roots[i]);
    std::sort(real.begin(), real.end(), [](const auto& a, const auto& b) { return a.real() < b.real(); });
    std::sort(cplx.begin(), cplx.end(), [](const auto& a, const auto& b) { return a.real() < b.real(); });
    const auto theta = index < s1 ? real[index] : cplx.at(static_cast<std::size_t>(index - s1));
    std::complex<long double> acc = 0;
    const auto& c = x.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * theta + static_cast<long double>(it->get_d());
    return acc;
}

/// A basic open condition on one component of an adele.
struct Constraint {
    enum class Kind { congruence, exact, archimedean_ball };
    Kind kind = Kind::congruence;
    PlaceKey place;
    KElement target;     // congruence target, exact value, or ball center
    int exponent = 1;    // congruence modulo p^exponent
    double radius = 1.0; // archimedean ball radius

    static Constraint congruence(const PlaceKey& w, const KElement& target, int exponent) {
        return {Kind::congruence, w, target, exponent, 1.0};
    }
    static Constraint exact_value(const PlaceKey& w, const KElement& value) { return {Kind::exact, w, value, 1, 1.0}; }
    static Constraint ball(int arch_index, const KElement& center, double radius) {
        return {Kind::archimedean_ball, PlaceKey{0, arch_index}, center, 1, radius};
    }
};

inline bool satisfies(const Component& value, const Constraint& c, const Place& v, int precision) {
    switch (c.kind) {
    case Constraint::Kind::exact:
        if (v.is_archimedean()) return std::get<KElement>(value) == c.target;
        return component::equal(value, c.target, v, precision);
    case Constraint::Kind::congruence: {
        if (v.is_archimedean()) throw std::invalid_argument("congruence constraint at an archimedean place");
        Component diff = component::add(value, component::neg(Component(c.target)), v, precision);
        return component::valuation(diff, v) >= Valuation(static_cast<long>(v.e()) * c.exponent);
    }
    case Constraint::Kind::archimedean_ball: {
        if (!v.is_archimedean()) throw std::invalid_argument("ball constraint at a finite place");
        const auto& x = std::get<KElement>(value);
        return std::abs(embedding_value(x, v.index()) - embedding_value(c.target, v.index())) < static_cast<long double>(c.radius);
    }
    }
    return false;
}

/// An element of m_U close to 1: 0 on U's cell away from the constrained places, 1 elsewhere.
inline Adele density_witness(const Ultrafilter& U, const std::vector<Constraint>& nbhd) {
    if (!U.is_free()) throw std::invalid_argument("density witness needs a free ultrafilter");
    const auto& u = U.universe();
    const int field = U.field();
    const auto& K = u->field(field);
    const KElement one = KElement::integer(K, 1);
    for (const auto& c : nbhd) {
        Place v = u->place(field, c.place);
        if (!satisfies(Component(one), c, v, u->precision()))
            throw inconsistent_neighborhood("constraint at " + c.place.label() + " excludes the value 1");
    }
    Adele out = Adele::one(u, field).with_cell_tail(U.cell(), Tail());
    for (const auto& c : nbhd)
        if (!c.place.is_archimedean()) out = out.with_component(c.place, one);
    return out;
}

/// The closed ideal of adeles vanishing on a set of places.
class ClosedIdeal {
public:
    ClosedIdeal(DescribableSet finite_part, std::set<int> archimedean = {})
        : z_(std::move(finite_part)), arch_(std::move(archimedean)) {}

    static ClosedIdeal of_places(UniversePtr u, int field, const std::vector<PlaceKey>& places) {
        std::vector<PlaceKey> finite;
        std::set<int> arch;
        for (const auto& w : places) {
            if (w.is_archimedean()) arch.insert(w.index);
            else finite.push_back(w);
        }
        return ClosedIdeal(DescribableSet::finite(std::move(u), field, finite), std::move(arch));
    }

    const DescribableSet& zero_set() const { return z_; }

    bool member(const Adele& alpha) const {
        detail::check_field(alpha, z_.universe(), z_.field());
        for (int i : arch_)
            if (!alpha.archimedean().at(static_cast<std::size_t>(i)).is_zero()) return false;
        return z_.subset_of(alpha.membership_set(Predicate::is_zero));
    }

private:
    DescribableSet z_;
    std::set<int> arch_;
};

} // namespace adelic
