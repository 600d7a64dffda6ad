#pragma once

#include "describable.hpp"
#include "tail.hpp"

#include <variant>

namespace adelic {

/// Value of an adele at a finite place: exact when known in K, otherwise a local approximation.
using Component = std::variant<KElement, LocalElement>;

namespace component {

inline LocalElement to_local(const Component& c, const Place& v, int precision) {
    if (const auto* k = std::get_if<KElement>(&c)) return LocalElement::embed(*k, v, precision);
    return std::get<LocalElement>(c);
}

inline Valuation valuation(const Component& c, const Place& v) {
    if (const auto* k = std::get_if<KElement>(&c)) return v.valuation(*k);
    return std::get<LocalElement>(c).valuation();
}

inline bool is_zero(const Component& c) {
    if (const auto* k = std::get_if<KElement>(&c)) return k->is_zero();
    return std::get<LocalElement>(c).is_zero();
}

/// Exact K-value when one is known.
inline std::optional<KElement> exact(const Component& c) {
    if (const auto* k = std::get_if<KElement>(&c)) return *k;
    return std::get<LocalElement>(c).exact();
}

inline Component add(const Component& a, const Component& b, const Place& v, int precision) {
    auto ea = exact(a), eb = exact(b);
    if (ea && eb) return *ea + *eb;
    return to_local(a, v, precision) + to_local(b, v, precision);
}

inline Component mul(const Component& a, const Component& b, const Place& v, int precision) {
    auto ea = exact(a), eb = exact(b);
    if (ea && eb) return *ea * *eb;
    return to_local(a, v, precision) * to_local(b, v, precision);
}

inline Component neg(const Component& a) {
    if (const auto* k = std::get_if<KElement>(&a)) return -*k;
    return -std::get<LocalElement>(a);
}

inline bool equal(const Component& a, const Component& b, const Place& v, int precision) {
    auto ea = exact(a), eb = exact(b);
    if (ea && eb) return *ea == *eb;
    return to_local(a, v, precision).agrees(to_local(b, v, precision));
}

} // namespace component

namespace detail {

// Rough bit size of pi^k, used to decide between exact and local evaluation.
inline double uniformizer_bits(const Place& v) {
    if (v.e() == 1) return std::log2(static_cast<double>(v.prime())) + 1;
    double bits = v.field()->degree();
    for (const auto& c : v.finite_data().g_lift) bits += static_cast<double>(mpz_sizeinbase(c.get_mpz_t(), 2));
    return bits;
}

inline constexpr double exact_bit_budget = 65536;

} // namespace detail

/// Value of a tail at a finite place: exact if the powers of pi stay small, local otherwise.
inline Component tail_value(const Tail& t, const Place& v, int precision) {
    const auto& field = v.field();
    if (t.is_zero()) return KElement::integer(field, 0);
    const std::uint64_t p = v.prime();
    std::vector<std::pair<long, const KElement*>> terms;
    long largest = 0;
    for (const auto& [e, c] : t.terms()) {
        terms.emplace_back(e.eval(p), &c);
        largest = std::max(largest, terms.back().first);
    }
    const KElement pi = v.uniformizer();
    if (static_cast<double>(largest) * detail::uniformizer_bits(v) <= detail::exact_bit_budget) {
        KElement sum = KElement::integer(field, 0);
        for (const auto& [ev, c] : terms) sum = sum + *c * pi.pow(static_cast<unsigned long>(ev));
        return sum;
    }
    // Cluster exponents that lie close together; distant clusters cannot cancel.
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    LocalElement total = LocalElement::zero(v, precision);
    std::size_t i = 0;
    while (i < terms.size()) {
        std::size_t j = i + 1;
        while (j < terms.size() && terms[j].first - terms[j - 1].first <= 4096) ++j;
        const long base = terms[i].first;
        KElement cluster = KElement::integer(field, 0);
        for (std::size_t k = i; k < j; ++k) cluster = cluster + *terms[k].second * pi.pow(static_cast<unsigned long>(terms[k].first - base));
        if (!cluster.is_zero()) {
            LocalElement part = LocalElement::embed(cluster, v, precision).shifted_inexact(base);
            total = total.is_zero() ? part : (total.without_exact() + part);
        }
        i = j;
    }
    return total;
}

enum class Predicate { is_zero, in_maximal_ideal };

/// An adele of one field of a universe, given by finite data.
///
/// The value at a finite place w is, in order of precedence: an exceptional component;
/// the tail attached to w's cell; the default tail. Places above non-generic primes use
/// the default tail. Archimedean components are exact elements of K.
class Adele {
public:
    Adele() = default;

    static Adele from_parts(UniversePtr u, int field, std::vector<KElement> arch, std::map<PlaceKey, Component> exceptional, Tail tail,
                            std::map<int, Tail> cell_tails = {}) {
        Adele out;
        out.u_ = std::move(u);
        out.field_ = field;
        const auto& K = out.u_->field(field);
        if (arch.size() != static_cast<std::size_t>(K->archimedean_count())) throw std::invalid_argument("wrong number of archimedean components");
        out.arch_ = std::move(arch);
        out.exceptional_ = std::move(exceptional);
        out.tail_ = std::move(tail);
        out.cell_tails_ = std::move(cell_tails);
        for (const auto& [c, t] : out.cell_tails_)
            if (c < 0 || c >= out.u_->cell_count(field)) throw std::out_of_range("cell index out of range");
        for (const auto& [w, v] : out.exceptional_)
            if (w.is_archimedean()) throw std::invalid_argument("archimedean component stored as exceptional");
        out.normalize();
        return out;
    }

    /// Image of x under the diagonal embedding.
    static Adele diagonal(UniversePtr u, int field, const KElement& x) {
        const int n = u->field(field)->archimedean_count();
        return from_parts(u, field, std::vector<KElement>(static_cast<std::size_t>(n), x), {}, Tail::constant(x));
    }
    static Adele constant(UniversePtr u, int field, long c) { return diagonal(u, field, KElement::integer(u->field(field), c)); }
    static Adele zero(UniversePtr u, int field) { return constant(std::move(u), field, 0); }
    static Adele one(UniversePtr u, int field) { return constant(std::move(u), field, 1); }

    /// Pi^E at every finite place, 1 at the archimedean places.
    static Adele uniformizer_power(UniversePtr u, int field, const Exponent& e) {
        const auto& K = u->field(field);
        std::vector<KElement> arch(static_cast<std::size_t>(K->archimedean_count()), KElement::integer(K, 1));
        return from_parts(u, field, std::move(arch), {}, Tail::term(e, KElement::integer(K, 1)));
    }
    static Adele uniformizer(UniversePtr u, int field) { return uniformizer_power(std::move(u), field, Exponent(1)); }

    const UniversePtr& universe() const { return u_; }
    int field() const { return field_; }
    const FieldPtr& number_field() const { return u_->field(field_); }
    const std::vector<KElement>& archimedean() const { return arch_; }
    const std::map<PlaceKey, Component>& exceptional() const { return exceptional_; }
    const Tail& tail() const { return tail_; }
    const std::map<int, Tail>& cell_tails() const { return cell_tails_; }

    const Tail& tail_for_cell(int c) const {
        auto it = cell_tails_.find(c);
        return it == cell_tails_.end() ? tail_ : it->second;
    }

    /// Tail governing a finite place.
    const Tail& tail_at(const PlaceKey& w) const {
        auto c = u_->cell_of(field_, w);
        return c ? tail_for_cell(*c) : tail_;
    }

    Place place(const PlaceKey& w) const { return u_->place(field_, w); }

    Component component(const PlaceKey& w) const {
        if (w.is_archimedean()) return arch_.at(static_cast<std::size_t>(w.index));
        auto it = exceptional_.find(w);
        if (it != exceptional_.end()) return it->second;
        return tail_value(tail_at(w), place(w), u_->precision());
    }

    Valuation valuation_at(const PlaceKey& w) const {
        if (w.is_archimedean()) throw std::invalid_argument("no valuation at an archimedean place");
        auto it = exceptional_.find(w);
        if (it != exceptional_.end()) return component::valuation(it->second, place(w));
        return tail_at(w).valuation(place(w));
    }

    bool is_zero_at(const PlaceKey& w) const {
        if (w.is_archimedean()) return arch_.at(static_cast<std::size_t>(w.index)).is_zero();
        return valuation_at(w).is_infinite();
    }

    /// Replace one component; archimedean places take exact values only.
    Adele with_component(const PlaceKey& w, const Component& value) const {
        Adele out = *this;
        if (w.is_archimedean()) {
            const auto* k = std::get_if<KElement>(&value);
            if (!k) throw std::invalid_argument("archimedean components must be exact");
            out.arch_.at(static_cast<std::size_t>(w.index)) = *k;
            return out;
        }
        u_->place(field_, w);
        out.exceptional_[w] = value;
        out.normalize();
        return out;
    }

    Adele with_cell_tail(int c, const Tail& t) const {
        Adele out = *this;
        if (c < 0 || c >= u_->cell_count(field_)) throw std::out_of_range("cell index out of range");
        out.cell_tails_[c] = t;
        out.normalize();
        return out;
    }

    friend Adele operator+(const Adele& a, const Adele& b) {
        return combine(a, b, [](const KElement& x, const KElement& y) { return x + y; }, [](const Tail& x, const Tail& y) { return x + y; },
                       [&](const Component& x, const Component& y, const Place& v) { return component::add(x, y, v, a.u_->precision()); });
    }
    friend Adele operator*(const Adele& a, const Adele& b) {
        return combine(a, b, [](const KElement& x, const KElement& y) { return x * y; }, [](const Tail& x, const Tail& y) { return x * y; },
                       [&](const Component& x, const Component& y, const Place& v) { return component::mul(x, y, v, a.u_->precision()); });
    }
    Adele operator-() const {
        Adele out = *this;
        for (auto& x : out.arch_) x = -x;
        for (auto& [w, c] : out.exceptional_) c = component::neg(c);
        out.tail_ = -tail_;
        for (auto& [c, t] : out.cell_tails_) t = -t;
        return out;
    }
    friend Adele operator-(const Adele& a, const Adele& b) { return a + (-b); }

    friend bool operator==(const Adele& a, const Adele& b) {
        if (a.u_ != b.u_ || a.field_ != b.field_) return false;
        if (a.arch_ != b.arch_ || !(a.tail_ == b.tail_) || a.cell_tails_ != b.cell_tails_) return false;
        if (a.exceptional_.size() != b.exceptional_.size()) return false;
        for (auto ia = a.exceptional_.begin(), ib = b.exceptional_.begin(); ia != a.exceptional_.end(); ++ia, ++ib) {
            if (!(ia->first == ib->first)) return false;
            if (!component::equal(ia->second, ib->second, a.place(ia->first), a.u_->precision())) return false;
        }
        return true;
    }

    /// Finite places where the predicate holds, as a describable set.
    DescribableSet membership_set(Predicate pred) const {
        std::vector<bool> cells(static_cast<std::size_t>(u_->cell_count(field_)));
        for (int c = 0; c < u_->cell_count(field_); ++c) {
            const Tail& t = tail_for_cell(c);
            cells[c] = pred == Predicate::is_zero ? t.is_zero() : !t.has_constant_term();
        }
        std::set<PlaceKey> candidates;
        for (const auto& [w, v] : exceptional_) candidates.insert(w);
        for (const auto& w : u_->nongeneric_places(field_)) candidates.insert(w);
        auto add_special = [&](const Tail& t, std::optional<int> only_cell) {
            std::set<std::uint64_t> primes = t.support_primes();
            if (pred == Predicate::is_zero) {
                auto ties = t.tie_primes();
                primes.insert(ties.begin(), ties.end());
            }
            for (auto p : primes)
                for (const auto& w : u_->keys_above(field_, p)) {
                    auto c = u_->cell_of(field_, w);
                    if (only_cell ? (c == only_cell) : (!c || !cell_tails_.count(*c))) candidates.insert(w);
                }
        };
        add_special(tail_, std::nullopt);
        for (const auto& [c, t] : cell_tails_) add_special(t, c);
        return DescribableSet::from_predicate(u_, field_, cells, {candidates.begin(), candidates.end()}, [&](const PlaceKey& w) {
            Valuation v = valuation_at(w);
            return pred == Predicate::is_zero ? v.is_infinite() : v >= Valuation(1);
        });
    }

    /// True when every component outside `level` is integral.
    bool integral_outside(const std::set<PlaceKey>& level) const {
        for (const auto& [w, c] : exceptional_)
            if (!level.count(w) && component::valuation(c, place(w)) < Valuation(0)) return false;
        return true;
    }

private:
    template <class ArchOp, class TailOp, class CompOp>
    static Adele combine(const Adele& a, const Adele& b, ArchOp arch_op, TailOp tail_op, CompOp comp_op) {
        if (a.u_ != b.u_ || a.field_ != b.field_) throw field_mismatch("adeles over different fields");
        Adele out;
        out.u_ = a.u_;
        out.field_ = a.field_;
        for (std::size_t i = 0; i < a.arch_.size(); ++i) out.arch_.push_back(arch_op(a.arch_[i], b.arch_[i]));
        out.tail_ = tail_op(a.tail_, b.tail_);
        std::set<int> cells;
        for (const auto& [c, t] : a.cell_tails_) cells.insert(c);
        for (const auto& [c, t] : b.cell_tails_) cells.insert(c);
        for (int c : cells) out.cell_tails_[c] = tail_op(a.tail_for_cell(c), b.tail_for_cell(c));
        std::set<PlaceKey> places;
        for (const auto& [w, v] : a.exceptional_) places.insert(w);
        for (const auto& [w, v] : b.exceptional_) places.insert(w);
        for (const auto& w : places) out.exceptional_[w] = comp_op(a.component(w), b.component(w), a.place(w));
        out.normalize();
        return out;
    }

    void normalize() {
        for (auto it = cell_tails_.begin(); it != cell_tails_.end();) {
            if (it->second == tail_) it = cell_tails_.erase(it);
            else ++it;
        }
        // Absorb places where a tail fails to be integral.
        auto absorb = [&](const Tail& t, std::optional<int> only_cell) {
            for (auto p : t.support_primes())
                for (const auto& w : u_->keys_above(field_, p)) {
                    if (exceptional_.count(w)) continue;
                    auto c = u_->cell_of(field_, w);
                    bool governed = only_cell ? (c == only_cell) : (!c || !cell_tails_.count(*c));
                    if (!governed) continue;
                    Place v = place(w);
                    if (t.valuation(v) < Valuation(0)) exceptional_[w] = tail_value(t, v, u_->precision());
                }
        };
        absorb(tail_, std::nullopt);
        for (const auto& [c, t] : cell_tails_) absorb(t, c);
        for (auto it = exceptional_.begin(); it != exceptional_.end();) {
            const Tail& t = tail_at(it->first);
            Place v = place(it->first);
            auto mine = component::exact(it->second);
            bool redundant = false;
            if (mine && t.valuation(v) >= Valuation(0)) {
                Component tv = tail_value(t, v, u_->precision());
                auto theirs = component::exact(tv);
                redundant = theirs && *theirs == *mine;
            }
            if (redundant) it = exceptional_.erase(it);
            else ++it;
        }
    }

    UniversePtr u_;
    int field_ = 0;
    std::vector<KElement> arch_;
    std::map<PlaceKey, Component> exceptional_;
    Tail tail_;
    std::map<int, Tail> cell_tails_;
};

} // namespace adelic
