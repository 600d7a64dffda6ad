#pragma once

#include "extensions.hpp"

#include <cctype>

namespace adelic::text {

// ---------------------------------------------------------------------------------------
// Printing.

inline std::string to_text(const Rational& r) { return r.get_str(); }

inline std::string to_text(const KElement& x) {
    if (x.is_zero()) return "(0)";
    std::string out = "(";
    for (std::size_t i = 0; i < x.coeffs().size(); ++i) out += (i ? "," : "") + to_text(x.coeffs()[i]);
    return out + ")";
}

inline std::string to_text(const Exponent& e) { return e.to_string(); }
inline std::string to_text(const PlaceKey& w) { return w.label(); }

inline std::string to_text(const Tail& t) {
    std::string out = "{";
    bool first = true;
    for (const auto& [e, c] : t.terms()) {
        out += (first ? "" : ";") + to_text(e) + ":" + to_text(c);
        first = false;
    }
    return out + "}";
}

inline std::string to_text(const LocalElement& x) {
    if (x.is_zero()) return "local(v=inf;N=" + std::to_string(x.precision()) + ")";
    std::string u = "(";
    for (std::size_t i = 0; i < x.unit().size(); ++i) u += (i ? "," : "") + x.unit()[i].get_str();
    if (x.unit().empty()) u += "0";
    return "local(v=" + x.valuation().to_string() + ";u=" + u + ");N=" + std::to_string(x.precision()) + ")";
}

inline std::string to_text(const Component& c) {
    if (const auto* k = std::get_if<KElement>(&c)) return to_text(*k);
    return to_text(std::get<LocalElement>(c));
}

inline std::string to_text(const DescribableSet& s) {
    std::string out = "set{cells=[";
    bool first = true;
    for (int c = 0; c < s.universe()->cell_count(s.field()); ++c) {
        if (!s.has_cell(c)) continue;
        out += (first ? "" : ",") + s.universe()->cell_name(s.field(), c);
        first = false;
    }
    out += "];xor=[";
    first = true;
    for (const auto& w : s.toggles()) {
        out += (first ? "" : ",") + w.label();
        first = false;
    }
    return out + "]}";
}

inline std::string to_text(const Ultrafilter& U) {
    if (U.is_principal()) return "principal(" + U.place().label() + ")";
    return "free(" + U.universe()->cell_name(U.field(), U.cell()) + ")";
}

inline std::string to_text(const Adele& a) {
    std::string out = "adele{arch=[";
    for (std::size_t i = 0; i < a.archimedean().size(); ++i) out += (i ? "," : "") + to_text(a.archimedean()[i]);
    out += "];exc=[";
    bool first = true;
    for (const auto& [w, c] : a.exceptional()) {
        out += (first ? "" : ",") + w.label() + "=" + to_text(c);
        first = false;
    }
    out += "];tail=" + to_text(a.tail()) + ";cells=[";
    first = true;
    for (const auto& [c, t] : a.cell_tails()) {
        out += (first ? "" : ",") + a.universe()->cell_name(a.field(), c) + "=" + to_text(t);
        first = false;
    }
    return out + "]}";
}

inline std::string to_text(const PrimeIdeal& P) {
    switch (P.kind()) {
    case PrimeIdeal::Kind::zero_at:
        return "M(" + P.place().label() + ")";
    case PrimeIdeal::Kind::max_at:
        return "Mu(" + to_text(P.ultrafilter()) + ")";
    case PrimeIdeal::Kind::min_at:
        return "mu(" + to_text(P.ultrafilter()) + ")";
    case PrimeIdeal::Kind::between:
        return "p(" + to_text(P.ultrafilter()) + ";beta=" + to_text(P.beta()) + ")";
    }
    return "";
}

// ---------------------------------------------------------------------------------------
// Parsing.

/// Cursor over a textual value; every parse function consumes exactly one item.
class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    bool done() const { return pos_ >= s_.size(); }
    char peek() const { return done() ? '\0' : s_[pos_]; }
    bool starts_with(std::string_view lit) const { return s_.substr(pos_, lit.size()) == lit; }

    bool accept(std::string_view lit) {
        if (!starts_with(lit)) return false;
        pos_ += lit.size();
        return true;
    }
    void expect(std::string_view lit) {
        if (!accept(lit)) fail("expected '" + std::string(lit) + "'");
    }
    void finish() {
        if (!done()) fail("trailing characters");
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw parse_error(what + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
    }

    std::string take_while(const std::function<bool(char)>& pred) {
        std::size_t start = pos_;
        while (!done() && pred(s_[pos_])) ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }

    BigInt integer() {
        std::string sign = accept("-") ? "-" : "";
        std::string digits = take_while([](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
        if (digits.empty()) fail("expected an integer");
        return BigInt(sign + digits);
    }

    std::uint64_t unsigned_integer() {
        std::string digits = take_while([](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
        if (digits.empty() || digits.size() > 18) fail("expected a small nonnegative integer");
        return std::stoull(digits);
    }

    Rational rational() {
        BigInt num = integer();
        BigInt den = 1;
        if (accept("/")) {
            den = integer();
            if (den == 0) fail("zero denominator");
        }
        Rational out(num, den);
        out.canonicalize();
        return out;
    }

    KElement kelement(const FieldPtr& K) {
        if (!accept("(")) return KElement::rational(K, rational());
        QPoly c;
        do {
            c.push_back(rational());
        } while (accept(","));
        expect(")");
        if (static_cast<int>(c.size()) > K->degree()) fail("too many coefficients for a field of degree " + std::to_string(K->degree()));
        return KElement(K, std::move(c));
    }

    Exponent exponent() {
        std::vector<unsigned long> c(Exponent::max_degree + 1, 0);
        do {
            unsigned long coeff = 1;
            bool has_coeff = false;
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                coeff = unsigned_integer();
                has_coeff = true;
            }
            int degree = 0;
            if (accept("p")) {
                degree = 1;
                if (accept("^")) degree = static_cast<int>(unsigned_integer());
            } else if (!has_coeff) {
                fail("expected an exponent term");
            }
            if (degree > Exponent::max_degree) fail("exponent degree too large");
            c[degree] += coeff;
        } while (accept("+"));
        return Exponent(std::move(c));
    }

    Tail tail(const FieldPtr& K) {
        expect("{");
        Tail out;
        if (accept("}")) return out;
        do {
            Exponent e = exponent();
            expect(":");
            out.add_term(e, kelement(K));
        } while (accept(";"));
        expect("}");
        return out;
    }

    PlaceKey place_key() {
        PlaceKey out;
        if (accept("inf")) out.p = 0;
        else out.p = unsigned_integer();
        expect(".");
        out.index = static_cast<int>(unsigned_integer());
        return out;
    }

    /// Cell or atom names run up to a delimiter.
    std::string name() {
        std::string out = take_while([](char c) { return c != ',' && c != ']' && c != ')' && c != '=' && c != ';'; });
        if (out.empty()) fail("expected a name");
        return out;
    }

    LocalElement local(const UniversePtr& u, int field, const PlaceKey& w) {
        Place v = u->place(field, w);
        expect("local(v=");
        if (accept("inf")) {
            expect(";N=");
            int N = static_cast<int>(unsigned_integer());
            expect(")");
            return LocalElement::zero(v, N);
        }
        long val = static_cast<long>(integer().get_si());
        expect(";u=(");
        ZPoly unit;
        do {
            unit.push_back(integer());
        } while (accept(","));
        expect(");N=");
        int N = static_cast<int>(unsigned_integer());
        expect(")");
        if (N < 1) fail("precision must be positive");
        return LocalElement::from_raw(v, unit, N, val);
    }

    Component component(const UniversePtr& u, int field, const PlaceKey& w) {
        if (starts_with("local(")) return local(u, field, w);
        return kelement(u->field(field));
    }

    DescribableSet describable_set(const UniversePtr& u, int field) {
        if (accept("all")) return DescribableSet::all(u, field);
        if (accept("empty")) return DescribableSet::empty(u, field);
        if (accept("cell(")) {
            auto out = DescribableSet::cell(u, field, u->cell_by_name(field, name()));
            expect(")");
            return out;
        }
        if (accept("atom(")) {
            auto out = DescribableSet::atom(u, field, u->atom_by_name(name()));
            expect(")");
            return out;
        }
        const bool co = accept("cofinite(");
        if (co || accept("finite(")) {
            std::vector<PlaceKey> places;
            if (!accept(")")) {
                do {
                    places.push_back(place_key());
                } while (accept(","));
                expect(")");
            }
            return co ? DescribableSet::cofinite(u, field, places) : DescribableSet::finite(u, field, places);
        }
        expect("set{cells=[");
        std::vector<bool> cells(static_cast<std::size_t>(u->cell_count(field)), false);
        if (!accept("]")) {
            do {
                cells[u->cell_by_name(field, name())] = true;
            } while (accept(","));
            expect("]");
        }
        expect(";xor=[");
        std::set<PlaceKey> toggles;
        if (!accept("]")) {
            do {
                toggles.insert(place_key());
            } while (accept(","));
            expect("]");
        }
        expect("}");
        return DescribableSet::from_parts(u, field, std::move(cells), std::move(toggles));
    }

    Ultrafilter ultrafilter(const UniversePtr& u, int field) {
        if (accept("principal(")) {
            PlaceKey w = place_key();
            expect(")");
            return Ultrafilter::principal(u, field, w);
        }
        expect("free(");
        std::string cell = name();
        expect(")");
        return Ultrafilter::free(u, field, u->cell_by_name(field, cell));
    }

    Adele adele(const UniversePtr& u, int field) {
        const auto& K = u->field(field);
        if (accept("zero")) return Adele::zero(u, field);
        if (accept("one")) return Adele::one(u, field);
        if (accept("uniformizer")) {
            if (!accept("(")) return Adele::uniformizer(u, field);
            Exponent e = exponent();
            expect(")");
            return Adele::uniformizer_power(u, field, e);
        }
        if (accept("diagonal(")) {
            KElement x = kelement(K);
            expect(")");
            return Adele::diagonal(u, field, x);
        }
        expect("adele{arch=[");
        std::vector<KElement> arch;
        if (!accept("]")) {
            do {
                arch.push_back(kelement(K));
            } while (accept(","));
            expect("]");
        }
        expect(";exc=[");
        std::map<PlaceKey, Component> exc;
        if (!accept("]")) {
            do {
                PlaceKey w = place_key();
                expect("=");
                exc[w] = component(u, field, w);
            } while (accept(","));
            expect("]");
        }
        expect(";tail=");
        Tail t = tail(K);
        expect(";cells=[");
        std::map<int, Tail> cells;
        if (!accept("]")) {
            do {
                int c = u->cell_by_name(field, name());
                expect("=");
                cells[c] = tail(K);
            } while (accept(","));
            expect("]");
        }
        expect("}");
        return Adele::from_parts(u, field, std::move(arch), std::move(exc), std::move(t), std::move(cells));
    }

    PrimeIdeal ideal(const UniversePtr& u, int field) {
        if (accept("M(")) {
            PlaceKey w = place_key();
            expect(")");
            return PrimeIdeal::zero_at(u, field, w);
        }
        if (accept("Mu(")) {
            auto U = ultrafilter(u, field);
            expect(")");
            return PrimeIdeal::max_at(U);
        }
        if (accept("mu(")) {
            auto U = ultrafilter(u, field);
            expect(")");
            return PrimeIdeal::min_at(U);
        }
        expect("p(");
        auto U = ultrafilter(u, field);
        expect(";beta=");
        Adele beta = adele(u, field);
        expect(")");
        return PrimeIdeal::between(U, beta);
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

template <class F>
auto parse_whole(std::string_view s, F f) {
    Parser p(s);
    auto out = f(p);
    p.finish();
    return out;
}

inline KElement parse_kelement(std::string_view s, const FieldPtr& K) {
    return parse_whole(s, [&](Parser& p) { return p.kelement(K); });
}
inline Exponent parse_exponent(std::string_view s) {
    return parse_whole(s, [](Parser& p) { return p.exponent(); });
}
inline Tail parse_tail(std::string_view s, const FieldPtr& K) {
    return parse_whole(s, [&](Parser& p) { return p.tail(K); });
}
inline PlaceKey parse_place(std::string_view s) {
    return parse_whole(s, [](Parser& p) { return p.place_key(); });
}
inline DescribableSet parse_set(std::string_view s, const UniversePtr& u, int field) {
    return parse_whole(s, [&](Parser& p) { return p.describable_set(u, field); });
}
inline Ultrafilter parse_ultrafilter(std::string_view s, const UniversePtr& u, int field) {
    return parse_whole(s, [&](Parser& p) { return p.ultrafilter(u, field); });
}
inline Adele parse_adele(std::string_view s, const UniversePtr& u, int field) {
    return parse_whole(s, [&](Parser& p) { return p.adele(u, field); });
}
inline PrimeIdeal parse_ideal(std::string_view s, const UniversePtr& u, int field) {
    return parse_whole(s, [&](Parser& p) { return p.ideal(u, field); });
}
inline Component parse_component(std::string_view s, const UniversePtr& u, int field, const PlaceKey& w) {
    return parse_whole(s, [&](Parser& p) { return p.component(u, field, w); });
}

/// Integer coefficient list, low degree first, e.g. "1,0,1" for x^2+1.
inline ZPoly parse_polynomial(std::string_view s) {
    ZPoly out;
    Parser p(s);
    do {
        out.push_back(p.integer());
    } while (p.accept(","));
    p.finish();
    return out;
}

} // namespace adelic::text
