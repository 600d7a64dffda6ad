#pragma once

#include "local.hpp"

#include <compare>
#include <iostream>
#include <map>

namespace adelic {

/// Identifies a place of one field of a universe: p == 0 marks an archimedean place.
struct PlaceKey {
    std::uint64_t p = 0;
    int index = 0;

    bool is_archimedean() const { return p == 0; }
    friend auto operator<=>(const PlaceKey&, const PlaceKey&) = default;
    friend bool operator==(const PlaceKey&, const PlaceKey&) = default;

    std::string label() const { return (p == 0 ? std::string("inf") : std::to_string(p)) + "." + std::to_string(index); }
};

/// A joint splitting signature of generic primes across every registered extension.
struct Atom {
    std::string name;
    std::vector<SplittingClass> classes; // one per extension, in registration order
    std::size_t witnesses = 0;           // generic primes up to the bound with this signature
    std::uint64_t first_witness = 0;
};

/// Atoms with fewer witnesses than this are reported as sparsely witnessed.
inline constexpr std::size_t min_atom_witnesses = 25;

inline constexpr std::uint64_t default_prime_bound = 10000;

/// The rationals (field 0) together with registered extensions of Q (fields 1..m).
///
/// A rational prime is generic when it divides no extension discriminant. Generic primes
/// fall into atoms by joint splitting signature; a cell of field j is an atom together with
/// a position k inside the canonically ordered fiber. Places above non-generic primes lie in
/// no cell and are handled pointwise.
class Universe {
public:
    static std::shared_ptr<const Universe> make(const std::vector<ZPoly>& extensions, std::uint64_t prime_bound = default_prime_bound,
                                                 int precision = default_precision) {
        return std::shared_ptr<const Universe>(new Universe(extensions, prime_bound, precision));
    }

    static std::shared_ptr<const Universe> rationals(std::uint64_t prime_bound = default_prime_bound) { return make({}, prime_bound); }

    int field_count() const { return static_cast<int>(fields_.size()); }
    int extension_count() const { return field_count() - 1; }
    const FieldPtr& field(int id) const {
        check_field(id);
        return fields_[id];
    }
    void check_field(int id) const {
        if (id < 0 || id >= field_count()) throw std::out_of_range("no field with id " + std::to_string(id));
    }
    int degree(int id) const { return field(id)->degree(); }

    std::uint64_t prime_bound() const { return prime_bound_; }
    int precision() const { return precision_; }

    const std::vector<std::uint64_t>& nongeneric_primes() const { return nongeneric_; }
    bool is_generic(std::uint64_t p) const { return !std::binary_search(nongeneric_.begin(), nongeneric_.end(), p); }

    int atom_count() const { return static_cast<int>(atoms_.size()); }
    const Atom& atom(int a) const { return atoms_.at(static_cast<std::size_t>(a)); }
    bool atom_is_sparse(int a) const { return atom(a).witnesses < min_atom_witnesses; }

    int atom_by_name(const std::string& name) const {
        for (int a = 0; a < atom_count(); ++a)
            if (atoms_[a].name == name) return a;
        throw parse_error("unknown atom '" + name + "'");
    }

    /// Atom of a generic prime.
    int atom_of(std::uint64_t p) const {
        if (!is_generic(p)) throw std::invalid_argument("prime " + std::to_string(p) + " is not generic");
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto it = atom_cache_.find(p);
            if (it != atom_cache_.end()) return it->second;
        }
        std::vector<SplittingClass> sig = signature(p);
        int found = -1;
        for (int a = 0; a < atom_count(); ++a)
            if (atoms_[a].classes == sig) found = a;
        if (found < 0)
            throw unwitnessed_signature("prime " + std::to_string(p) + " has a splitting signature not witnessed below " +
                                        std::to_string(prime_bound_));
        std::lock_guard<std::mutex> lock(mutex_);
        atom_cache_[p] = found;
        return found;
    }

    /// Number of places of field j above primes of atom a.
    int fiber_size(int field_id, int a) const {
        check_field(field_id);
        if (field_id == 0) return 1;
        return atom(a).classes[field_id - 1].fiber_size();
    }

    const std::vector<Place>& places_above(int field_id, std::uint64_t p) const {
        check_field(field_id);
        std::lock_guard<std::mutex> lock(mutex_);
        auto key = std::make_pair(field_id, p);
        auto it = place_cache_.find(key);
        if (it != place_cache_.end()) return it->second;
        auto places = factor_prime(fields_[field_id], p);
        return place_cache_.emplace(key, std::move(places)).first->second;
    }

    int fiber_size_at(int field_id, std::uint64_t p) const { return static_cast<int>(places_above(field_id, p).size()); }

    Place place(int field_id, const PlaceKey& key) const {
        if (key.is_archimedean()) return Place::archimedean(field(field_id), key.index);
        const auto& fiber = places_above(field_id, key.p);
        if (key.index < 0 || key.index >= static_cast<int>(fiber.size()))
            throw std::out_of_range("no place " + key.label() + " in " + field(field_id)->name());
        return fiber[key.index];
    }

    std::vector<PlaceKey> keys_above(int field_id, std::uint64_t p) const {
        std::vector<PlaceKey> out;
        for (int i = 0; i < fiber_size_at(field_id, p); ++i) out.push_back({p, i});
        return out;
    }

    std::vector<PlaceKey> archimedean_keys(int field_id) const {
        std::vector<PlaceKey> out;
        for (int i = 0; i < field(field_id)->archimedean_count(); ++i) out.push_back({0, i});
        return out;
    }

    int cell_count(int field_id) const {
        check_field(field_id);
        return static_cast<int>(cells_[field_id].size());
    }
    /// (atom, position in fiber) of a cell.
    std::pair<int, int> cell_parts(int field_id, int cell) const {
        check_field(field_id);
        return cells_[field_id].at(static_cast<std::size_t>(cell));
    }
    int cell_index(int field_id, int a, int k) const {
        check_field(field_id);
        const auto& list = cells_[field_id];
        for (std::size_t c = 0; c < list.size(); ++c)
            if (list[c].first == a && list[c].second == k) return static_cast<int>(c);
        throw std::out_of_range("no cell for atom " + std::to_string(a) + " position " + std::to_string(k));
    }
    std::vector<int> cells_of_atom(int field_id, int a) const {
        std::vector<int> out;
        for (int k = 0; k < fiber_size(field_id, a); ++k) out.push_back(cell_index(field_id, a, k));
        return out;
    }

    /// Cell of a finite place, or nothing above a non-generic prime.
    std::optional<int> cell_of(int field_id, const PlaceKey& key) const {
        if (key.is_archimedean()) throw std::invalid_argument("archimedean places lie in no cell");
        if (!is_generic(key.p)) return std::nullopt;
        return cell_index(field_id, atom_of(key.p), key.index);
    }

    std::string cell_name(int field_id, int cell) const {
        auto [a, k] = cell_parts(field_id, cell);
        if (field_id == 0) return atoms_[a].name;
        return "s" + std::to_string(k + 1) + ":" + atoms_[a].name;
    }

    int cell_by_name(int field_id, const std::string& name) const {
        for (int c = 0; c < cell_count(field_id); ++c)
            if (cell_name(field_id, c) == name) return c;
        throw parse_error("unknown cell '" + name + "' for field " + std::to_string(field_id));
    }

    /// Finite places above non-generic primes.
    std::vector<PlaceKey> nongeneric_places(int field_id) const {
        std::vector<PlaceKey> out;
        for (auto p : nongeneric_)
            for (const auto& k : keys_above(field_id, p)) out.push_back(k);
        return out;
    }

    /// The first `count` finite places, ordered by prime then fiber position.
    std::vector<PlaceKey> first_places(int field_id, std::size_t count) const {
        std::vector<PlaceKey> out;
        for (std::uint64_t p = 2; out.size() < count; p = arith::next_prime(p))
            for (const auto& k : keys_above(field_id, p)) {
                if (out.size() == count) break;
                out.push_back(k);
            }
        return out;
    }

    /// Generic primes of atom a in [lo, hi].
    std::vector<std::uint64_t> atom_primes(int a, std::uint64_t lo, std::uint64_t hi) const {
        std::vector<std::uint64_t> out;
        for (std::uint64_t p = lo < 2 ? 2 : lo; p <= hi; ++p)
            if (arith::is_prime(p) && is_generic(p) && atom_of(p) == a) out.push_back(p);
        return out;
    }

    /// Field id of a registered field.
    int field_id(const FieldPtr& f) const {
        for (int i = 0; i < field_count(); ++i)
            if (fields_[i] == f || *fields_[i] == *f) return i;
        throw field_mismatch("field " + f->name() + " is not registered");
    }

private:
    Universe(const std::vector<ZPoly>& extensions, std::uint64_t prime_bound, int precision)
        : prime_bound_(prime_bound), precision_(precision) {
        if (precision < 1) throw std::invalid_argument("precision must be positive");
        if (prime_bound < 2 || prime_bound >= max_supported_prime) throw std::invalid_argument("prime bound out of range");
        fields_.push_back(NumberField::rationals());
        std::set<std::uint64_t> bad;
        for (const auto& poly : extensions) {
            auto field = NumberField::make(poly);
            if (field->is_rationals()) throw std::invalid_argument("extensions must have degree at least 2");
            for (auto q : field->index_primes())
                throw unsupported_prime("prime " + std::to_string(q) + " divides the index of Z[theta] in " + field->name());
            for (auto q : field->ramified_primes()) {
                if (q >= max_supported_prime) throw unsupported_prime("discriminant prime " + std::to_string(q) + " is too large");
                bad.insert(q);
            }
            fields_.push_back(std::move(field));
        }
        nongeneric_.assign(bad.begin(), bad.end());
        for (auto p : arith::primes_up_to(prime_bound_)) {
            if (!is_generic(p)) continue;
            auto sig = signature(p);
            auto it = std::find_if(atoms_.begin(), atoms_.end(), [&](const Atom& a) { return a.classes == sig; });
            if (it == atoms_.end()) {
                Atom atom;
                atom.classes = sig;
                atom.first_witness = p;
                atoms_.push_back(std::move(atom));
                it = atoms_.end() - 1;
            }
            ++it->witnesses;
            atom_cache_[p] = static_cast<int>(it - atoms_.begin());
        }
        for (auto& atom : atoms_) {
            if (atom.classes.empty()) {
                atom.name = "all";
                continue;
            }
            for (std::size_t i = 0; i < atom.classes.size(); ++i) atom.name += (i ? "*" : "") + atom.classes[i].name();
        }
        cells_.resize(fields_.size());
        for (int j = 0; j < field_count(); ++j)
            for (int a = 0; a < atom_count(); ++a)
                for (int k = 0; k < fiber_size(j, a); ++k) cells_[j].emplace_back(a, k);
    }

    std::vector<SplittingClass> signature(std::uint64_t p) const {
        std::vector<SplittingClass> out;
        for (std::size_t j = 1; j < fields_.size(); ++j) out.push_back(splitting_class(fields_[j], p));
        return out;
    }

    std::vector<FieldPtr> fields_;
    std::uint64_t prime_bound_;
    int precision_;
    std::vector<std::uint64_t> nongeneric_;
    std::vector<Atom> atoms_;
    std::vector<std::vector<std::pair<int, int>>> cells_;
    mutable std::mutex mutex_;
    mutable std::map<std::uint64_t, int> atom_cache_;
    mutable std::map<std::pair<int, std::uint64_t>, std::vector<Place>> place_cache_;
};

using UniversePtr = std::shared_ptr<const Universe>;

} // namespace adelic
