#pragma once

#include "universe.hpp"

namespace adelic {

/// Exponent of the formal uniformizer: a polynomial E in the residue prime p with
/// nonnegative integer coefficients. At a place above p the term Pi^E means pi_v^(E(p)).
class Exponent {
public:
    static constexpr int max_degree = 4;

    Exponent() = default;
    Exponent(unsigned long constant) {
        if (constant) c_.push_back(constant);
    }
    explicit Exponent(std::vector<unsigned long> coeffs) : c_(std::move(coeffs)) {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
        if (degree() > max_degree) throw std::invalid_argument("exponent degree exceeds " + std::to_string(max_degree));
    }
    static Exponent p_power(int k, unsigned long coeff = 1) {
        std::vector<unsigned long> c(static_cast<std::size_t>(k) + 1, 0);
        c[k] = coeff;
        return Exponent(std::move(c));
    }

    const std::vector<unsigned long>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    long eval(std::uint64_t p) const {
        __int128 acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc = acc * static_cast<__int128>(p) + *it;
            if (acc > static_cast<__int128>(std::numeric_limits<long>::max() / 4)) throw std::overflow_error("exponent value overflows");
        }
        return static_cast<long>(acc);
    }

    friend Exponent operator+(const Exponent& a, const Exponent& b) {
        std::vector<unsigned long> out(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
        return Exponent(std::move(out));
    }

    friend bool operator==(const Exponent&, const Exponent&) = default;

    /// Eventual order: a < b iff a(p) < b(p) for all large p.
    friend std::strong_ordering operator<=>(const Exponent& a, const Exponent& b) {
        if (a.c_.size() != b.c_.size()) return a.c_.size() <=> b.c_.size();
        for (std::size_t i = a.c_.size(); i-- > 0;)
            if (a.c_[i] != b.c_[i]) return a.c_[i] <=> b.c_[i];
        return std::strong_ordering::equal;
    }

    /// Primes p with a(p) == b(p), for a != b.
    static std::vector<std::uint64_t> tie_primes(const Exponent& a, const Exponent& b) {
        std::vector<long> d(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) d[i] += static_cast<long>(a.c_[i]);
        for (std::size_t i = 0; i < b.c_.size(); ++i) d[i] -= static_cast<long>(b.c_[i]);
        std::size_t lo = 0;
        while (lo < d.size() && d[lo] == 0) ++lo;
        std::vector<std::uint64_t> out;
        if (lo == d.size()) return out;
        BigInt c0 = d[lo];
        if (abs(c0) == 1) return out;
        for (const auto& q : arith::prime_factors(c0)) {
            const std::uint64_t p = arith::to_u64(q);
            __int128 acc = 0;
            for (std::size_t i = d.size(); i-- > lo;) acc = acc * static_cast<__int128>(p) + d[i];
            if (acc == 0) out.push_back(p);
        }
        return out;
    }

    std::string to_string() const {
        if (c_.empty()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            if (c_[i] == 0) continue;
            if (!out.empty()) out += "+";
            if (i == 0 || c_[i] != 1) out += std::to_string(c_[i]);
            if (i >= 1) out += "p";
            if (i >= 2) out += "^" + std::to_string(i);
        }
        return out;
    }

private:
    std::vector<unsigned long> c_;
};

/// A finite sum of terms a * Pi^E with coefficients a in K, keyed by exponent in eventual order.
class Tail {
public:
    Tail() = default;

    static Tail constant(const KElement& a) { return term(Exponent(), a); }
    static Tail term(const Exponent& e, const KElement& a) {
        Tail out;
        if (!a.is_zero()) out.terms_.emplace(e, a);
        return out;
    }

    const std::map<Exponent, KElement>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Eventually minimal exponent and its coefficient.
    const std::pair<const Exponent, KElement>& leading() const {
        if (terms_.empty()) throw std::logic_error("zero tail has no leading term");
        return *terms_.begin();
    }
    bool has_constant_term() const { return terms_.count(Exponent()) > 0; }

    friend Tail operator+(const Tail& a, const Tail& b) {
        Tail out = a;
        for (const auto& [e, c] : b.terms_) out.add_term(e, c);
        return out;
    }
    Tail operator-() const {
        Tail out = *this;
        for (auto& [e, c] : out.terms_) c = -c;
        return out;
    }
    friend Tail operator-(const Tail& a, const Tail& b) { return a + (-b); }
    friend Tail operator*(const Tail& a, const Tail& b) {
        Tail out;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
        return out;
    }
    friend bool operator==(const Tail& a, const Tail& b) { return a.terms_ == b.terms_; }

    void add_term(const Exponent& e, const KElement& c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_.emplace(e, c);
            return;
        }
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    /// Primes where some coefficient has nonzero valuation.
    std::set<std::uint64_t> support_primes() const {
        std::set<std::uint64_t> out;
        for (const auto& [e, c] : terms_)
            for (auto p : c.support_primes()) out.insert(p);
        return out;
    }

    /// Primes where two exponents take the same value.
    std::set<std::uint64_t> tie_primes() const {
        std::set<std::uint64_t> out;
        for (auto i = terms_.begin(); i != terms_.end(); ++i)
            for (auto j = std::next(i); j != terms_.end(); ++j)
                for (auto p : Exponent::tie_primes(i->first, j->first)) out.insert(p);
        return out;
    }

    /// Exact valuation at a finite place above p.
    Valuation valuation(const Place& v) const {
        if (terms_.empty()) return Valuation::infinity();
        const std::uint64_t p = v.prime();
        struct Entry {
            long total;
            long exponent;
            const KElement* coeff;
        };
        std::vector<Entry> entries;
        for (const auto& [e, c] : terms_) {
            long ev = e.eval(p);
            entries.push_back({v.valuation(c).value() + ev, ev, &c});
        }
        std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.total < b.total; });
        std::size_t used = 0;
        while (used < entries.size()) {
            const long level = entries[used].total;
            while (used < entries.size() && entries[used].total == level) ++used;
            if (used == 1 && (used == entries.size() || entries[1].total > level)) return Valuation(level);
            // Sum the terms taken so far exactly, with the smallest power of pi factored out.
            long m = entries[0].exponent;
            for (std::size_t i = 0; i < used; ++i) m = std::min(m, entries[i].exponent);
            KElement sum = KElement::integer(v.field(), 0);
            KElement pi = v.uniformizer();
            for (std::size_t i = 0; i < used; ++i) {
                long shift = entries[i].exponent - m;
                if (shift > (1L << 16)) throw precision_loss("exponent gap too large to resolve a valuation tie");
                sum = sum + *entries[i].coeff * pi.pow(static_cast<unsigned long>(shift));
            }
            Valuation partial = sum.is_zero() ? Valuation::infinity() : Valuation(v.valuation(sum).value() + m);
            if (used == entries.size()) return partial;
            if (partial < Valuation(entries[used].total)) return partial;
        }
        return Valuation::infinity();
    }

private:
    std::map<Exponent, KElement> terms_;
};

} // namespace adelic
