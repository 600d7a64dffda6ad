#pragma once

#include "number_field.hpp"

#include <algorithm>
#include <compare>
#include <limits>
#include <mutex>
#include <optional>
#include <ostream>

namespace adelic {

/// Largest rational prime accepted by the factorization routines.
inline constexpr std::uint64_t max_supported_prime = 1000000;

/// Normalized valuation, +infinity for exact zero.
class Valuation {
public:
    Valuation() = default;
    Valuation(long v) : value_(v) {}
    static Valuation infinity() {
        Valuation out;
        out.infinite_ = true;
        return out;
    }

    bool is_infinite() const { return infinite_; }
    long value() const {
        if (infinite_) throw std::domain_error("valuation is infinite");
        return value_;
    }

    friend bool operator==(const Valuation& a, const Valuation& b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }
    friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
        if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
        return a.value_ <=> b.value_;
    }
    friend Valuation operator+(const Valuation& a, const Valuation& b) {
        if (a.infinite_ || b.infinite_) return infinity();
        return Valuation(a.value_ + b.value_);
    }
    friend std::ostream& operator<<(std::ostream& os, const Valuation& v) {
        if (v.infinite_) return os << "inf";
        return os << v.value_;
    }
    std::string to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

private:
    long value_ = 0;
    bool infinite_ = false;
};

namespace detail {

struct FiniteData {
    std::uint64_t p = 0;
    int e = 1;
    int f = 1;
    FpPoly factor;  // monic irreducible factor of f mod p
    ZPoly g_lift;   // factor lifted with coefficients in [0, p)
    ZPoly cofactor; // lift of (f mod p) / factor
    // Hensel-lifted local factor of f matching factor^e, cached per precision.
    mutable std::mutex mutex;
    mutable int lifted_precision = 0;
    mutable ZPoly lifted;
};

} // namespace detail

/// A place of a number field: an archimedean embedding or a prime above a rational prime.
class Place {
public:
    Place() = default;

    static Place archimedean(FieldPtr field, int index) {
        Place out;
        out.field_ = std::move(field);
        out.index_ = index;
        if (index < 0 || index >= out.field_->archimedean_count()) throw std::out_of_range("archimedean index out of range");
        return out;
    }

    static Place finite(FieldPtr field, std::shared_ptr<const detail::FiniteData> data) {
        Place out;
        out.field_ = std::move(field);
        out.index_ = 0;
        out.data_ = std::move(data);
        return out;
    }

    const FieldPtr& field() const { return field_; }
    bool is_archimedean() const { return data_ == nullptr; }
    bool is_finite() const { return data_ != nullptr; }
    bool is_real() const { return is_archimedean() && index_ < field_->real_embeddings(); }
    /// Archimedean embedding index, or ordinal within the canonical fiber.
    int index() const { return data_ ? fiber_index_ : index_; }
    std::uint64_t prime() const { return data_ ? data_->p : 0; }
    int e() const { return finite_data().e; }
    int f() const { return finite_data().f; }
    const FpPoly& factor() const { return finite_data().factor; }
    const detail::FiniteData& finite_data() const {
        if (!data_) throw std::logic_error("archimedean place has no finite data");
        return *data_;
    }

    std::string label() const {
        return (is_archimedean() ? std::string("inf") : std::to_string(prime())) + "." + std::to_string(index());
    }

    friend bool operator==(const Place& a, const Place& b) {
        if (a.is_archimedean() != b.is_archimedean() || a.index() != b.index() || a.prime() != b.prime()) return false;
        return a.field_ == b.field_ || *a.field_ == *b.field_;
    }

    /// Exact normalized valuation of a field element.
    Valuation valuation(const KElement& x) const;

    /// The fixed uniformizer: p when unramified, the lifted factor evaluated at theta otherwise.
    KElement uniformizer() const {
        const auto& d = finite_data();
        if (d.e == 1) return KElement::rational(field_, Rational(arith::from_u64(d.p)));
        return KElement::from_z(field_, d.g_lift);
    }

    void set_fiber_index(int i) { fiber_index_ = i; }

private:
    FieldPtr field_;
    int index_ = 0;
    int fiber_index_ = 0;
    std::shared_ptr<const detail::FiniteData> data_;
};

inline Valuation Place::valuation(const KElement& x) const {
    const auto& d = finite_data();
    if (x.is_zero()) return Valuation::infinity();
    if (field_->is_rationals()) return Valuation(arith::valuation(x.rational_value(), d.p));
    auto [b, den] = x.integral_form();
    const ZPoly& f = field_->polynomial();
    BigInt content = 0;
    for (const auto& c : b) content = gcd(content, c);
    long c = arith::valuation(content, d.p);
    if (c > 0) {
        BigInt pc = arith::pow(arith::from_u64(d.p), static_cast<unsigned long>(c));
        for (auto& coeff : b) mpz_divexact(coeff.get_mpz_t(), coeff.get_mpz_t(), pc.get_mpz_t());
    }
    long count = 0;
    // b * cofactor / p stays integral exactly while b lies in the prime.
    for (;;) {
        ZPoly t = poly::rem_monic(poly::mul(b, d.cofactor), f);
        bool divisible = std::all_of(t.begin(), t.end(), [&](const BigInt& v) { return mpz_divisible_ui_p(v.get_mpz_t(), d.p) != 0; });
        if (!divisible) break;
        for (auto& coeff : t) mpz_divexact_ui(coeff.get_mpz_t(), coeff.get_mpz_t(), d.p);
        b = std::move(t);
        ++count;
    }
    return Valuation(static_cast<long>(d.e) * (c - arith::valuation(den, d.p)) + count);
}

/// Multiset of (e, f) pairs of the places above a rational prime, sorted.
struct SplittingClass {
    std::vector<std::pair<int, int>> parts;

    friend bool operator==(const SplittingClass&, const SplittingClass&) = default;
    friend auto operator<=>(const SplittingClass&, const SplittingClass&) = default;

    int degree() const {
        int n = 0;
        for (auto [e, f] : parts) n += e * f;
        return n;
    }
    int fiber_size() const { return static_cast<int>(parts.size()); }
    bool ramified() const {
        return std::any_of(parts.begin(), parts.end(), [](auto ef) { return ef.first > 1; });
    }

    /// "split", "inert", "f1.2" for unramified mixtures, "ram:e2f1" style otherwise.
    std::string name() const {
        const int n = degree();
        if (!ramified()) {
            if (fiber_size() == n) return "split";
            if (fiber_size() == 1) return "inert";
            std::string out = "f";
            for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "." : "") + std::to_string(parts[i].second);
            return out;
        }
        std::string out = "ram:";
        for (std::size_t i = 0; i < parts.size(); ++i)
            out += (i ? "." : "") + std::string("e") + std::to_string(parts[i].first) + "f" + std::to_string(parts[i].second);
        return out;
    }

    std::string multiset() const {
        std::string out = "{";
        for (std::size_t i = 0; i < parts.size(); ++i)
            out += (i ? "," : "") + std::string("(") + std::to_string(parts[i].first) + "," + std::to_string(parts[i].second) + ")";
        return out + "}";
    }
};

/// Places above p in canonical order (e, f, factor coefficients low degree first).
inline std::vector<Place> factor_prime(const FieldPtr& field, std::uint64_t p) {
    if (!arith::is_prime(p)) throw not_prime(std::to_string(p) + " is not prime");
    if (p >= max_supported_prime) throw unsupported_prime("prime " + std::to_string(p) + " exceeds the supported bound");
    if (!field->is_p_maximal(p))
        throw unsupported_prime("prime " + std::to_string(p) + " divides the index of Z[theta] in " + field->name());
    FpPoly fbar = fp::from_z(field->polynomial(), p);
    auto factors = fp::factor(fbar, p);
    std::sort(factors.begin(), factors.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second < b.second;
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        return a.first < b.first;
    });
    std::vector<Place> out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        auto data = std::make_shared<detail::FiniteData>();
        data->p = p;
        data->e = factors[i].second;
        data->f = fp::degree(factors[i].first);
        data->factor = factors[i].first;
        data->g_lift = fp::lift(factors[i].first);
        data->cofactor = fp::lift(fp::quo(fbar, factors[i].first, p));
        Place w = Place::finite(field, std::move(data));
        w.set_fiber_index(static_cast<int>(i));
        out.push_back(std::move(w));
    }
    return out;
}

inline SplittingClass splitting_class(const FieldPtr& field, std::uint64_t p) {
    SplittingClass out;
    for (const auto& w : factor_prime(field, p)) out.parts.emplace_back(w.e(), w.f());
    std::sort(out.parts.begin(), out.parts.end());
    return out;
}

inline std::vector<Place> archimedean_places(const FieldPtr& field) {
    std::vector<Place> out;
    for (int i = 0; i < field->archimedean_count(); ++i) out.push_back(Place::archimedean(field, i));
    return out;
}

} // namespace adelic
