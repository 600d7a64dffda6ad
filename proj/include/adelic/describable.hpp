#pragma once

#include "universe.hpp"

#include <functional>

namespace adelic {

/// A set of finite places of one field, drawn from the decidable algebra generated by
/// finite sets and cells.
///
/// Canonical form: the set of cells it contains cofinitely, plus the finite set of places
/// whose membership differs from that cell pattern. Places above non-generic primes belong
/// to no cell, so their membership is recorded in the toggles alone.
class DescribableSet {
public:
    DescribableSet() = default;

    static DescribableSet empty(UniversePtr u, int field) {
        DescribableSet out;
        out.cells_.assign(static_cast<std::size_t>(u->cell_count(field)), false);
        out.u_ = std::move(u);
        out.field_ = field;
        return out;
    }

    static DescribableSet all(UniversePtr u, int field) { return empty(u, field).complement(); }

    static DescribableSet finite(UniversePtr u, int field, const std::vector<PlaceKey>& places) {
        DescribableSet out = empty(std::move(u), field);
        for (const auto& w : places) {
            out.check_place(w);
            out.toggles_.insert(w);
        }
        return out;
    }

    static DescribableSet cofinite(UniversePtr u, int field, const std::vector<PlaceKey>& missing) {
        return finite(std::move(u), field, missing).complement();
    }

    static DescribableSet cell(UniversePtr u, int field, int c) {
        DescribableSet out = empty(std::move(u), field);
        out.cells_.at(static_cast<std::size_t>(c)) = true;
        return out;
    }

    /// Every place above primes of atom a.
    static DescribableSet atom(UniversePtr u, int field, int a) {
        DescribableSet out = empty(u, field);
        for (int c : u->cells_of_atom(field, a)) out.cells_[c] = true;
        return out;
    }

    /// Build from explicit parts, as produced by the text form.
    static DescribableSet from_parts(UniversePtr u, int field, std::vector<bool> cells, std::set<PlaceKey> toggles) {
        DescribableSet out = empty(std::move(u), field);
        if (cells.size() != out.cells_.size()) throw std::invalid_argument("cell vector has the wrong size");
        out.cells_ = std::move(cells);
        for (const auto& w : toggles) out.check_place(w);
        out.toggles_ = std::move(toggles);
        return out;
    }

    /// Set given by a pointwise predicate on the cells and on finitely many candidate places.
    static DescribableSet from_predicate(UniversePtr u, int field, const std::vector<bool>& cells,
                                         const std::vector<PlaceKey>& candidates, const std::function<bool(const PlaceKey&)>& member) {
        DescribableSet out = empty(std::move(u), field);
        out.cells_ = cells;
        for (const auto& w : candidates)
            if (member(w) != out.base(w)) out.toggles_.insert(w);
        return out;
    }

    const UniversePtr& universe() const { return u_; }
    int field() const { return field_; }
    const std::vector<bool>& cells() const { return cells_; }
    const std::set<PlaceKey>& toggles() const { return toggles_; }

    bool has_cell(int c) const { return cells_.at(static_cast<std::size_t>(c)); }

    bool contains(const PlaceKey& w) const { return base(w) != (toggles_.count(w) > 0); }

    bool is_empty() const { return is_finite() && toggles_.empty(); }
    bool is_finite() const { return std::none_of(cells_.begin(), cells_.end(), [](bool b) { return b; }); }
    bool is_all() const { return complement().is_empty(); }

    /// The finitely many members of a finite set.
    std::vector<PlaceKey> finite_members() const {
        if (!is_finite()) throw std::logic_error("set is infinite");
        return {toggles_.begin(), toggles_.end()};
    }

    DescribableSet complement() const {
        DescribableSet out = *this;
        out.cells_.flip();
        for (const auto& w : u_->nongeneric_places(field_)) {
            if (out.toggles_.count(w)) out.toggles_.erase(w);
            else out.toggles_.insert(w);
        }
        return out;
    }

    DescribableSet intersect(const DescribableSet& other) const {
        return combine(other, [](bool a, bool b) { return a && b; });
    }
    DescribableSet unite(const DescribableSet& other) const {
        return combine(other, [](bool a, bool b) { return a || b; });
    }
    DescribableSet minus(const DescribableSet& other) const {
        return combine(other, [](bool a, bool b) { return a && !b; });
    }
    DescribableSet symmetric_difference(const DescribableSet& other) const {
        return combine(other, [](bool a, bool b) { return a != b; });
    }

    bool subset_of(const DescribableSet& other) const { return minus(other).is_empty(); }

    friend bool operator==(const DescribableSet& a, const DescribableSet& b) {
        return a.field_ == b.field_ && a.cells_ == b.cells_ && a.toggles_ == b.toggles_;
    }

    void check_same(const DescribableSet& other) const {
        if (u_ != other.u_ || field_ != other.field_) throw field_mismatch("describable sets over different fields");
    }

    /// Membership ignoring toggles.
    bool base(const PlaceKey& w) const {
        auto c = u_->cell_of(field_, w);
        return c && cells_[*c];
    }

private:
    template <class Op>
    DescribableSet combine(const DescribableSet& other, Op op) const {
        check_same(other);
        DescribableSet out = *this;
        for (std::size_t c = 0; c < cells_.size(); ++c) out.cells_[c] = op(cells_[c], other.cells_[c]);
        out.toggles_.clear();
        std::set<PlaceKey> candidates = toggles_;
        candidates.insert(other.toggles_.begin(), other.toggles_.end());
        for (const auto& w : candidates)
            if (op(contains(w), other.contains(w)) != out.base(w)) out.toggles_.insert(w);
        return out;
    }

    void check_place(const PlaceKey& w) const {
        if (w.is_archimedean()) throw std::invalid_argument("describable sets contain finite places only");
        if (w.index < 0 || w.index >= u_->fiber_size_at(field_, w.p)) throw std::out_of_range("no place " + w.label());
    }

    UniversePtr u_;
    int field_ = 0;
    std::vector<bool> cells_;
    std::set<PlaceKey> toggles_;
};

/// Places of field j whose restriction to Q lies in t.
inline DescribableSet preimage(const DescribableSet& t, int field) {
    if (t.field() != 0) throw field_mismatch("preimage expects a set over Q");
    const auto& u = t.universe();
    std::vector<bool> cells(static_cast<std::size_t>(u->cell_count(field)));
    for (int c = 0; c < u->cell_count(field); ++c) cells[c] = t.has_cell(u->cell_parts(field, c).first);
    std::vector<PlaceKey> candidates;
    for (const auto& w : t.toggles())
        for (const auto& k : u->keys_above(field, w.p)) candidates.push_back(k);
    return DescribableSet::from_predicate(u, field, cells, candidates, [&](const PlaceKey& k) { return t.contains({k.p, 0}); });
}

/// Restriction to Q of a set of places of an extension.
inline DescribableSet image(const DescribableSet& s) {
    const auto& u = s.universe();
    const int field = s.field();
    std::vector<bool> cells(static_cast<std::size_t>(u->cell_count(0)), false);
    for (int c = 0; c < u->cell_count(field); ++c)
        if (s.has_cell(c)) cells[u->cell_parts(field, c).first] = true;
    std::set<PlaceKey> candidates;
    for (const auto& w : s.toggles()) candidates.insert({w.p, 0});
    return DescribableSet::from_predicate(u, 0, cells, {candidates.begin(), candidates.end()}, [&](const PlaceKey& k) {
        for (const auto& w : u->keys_above(field, k.p))
            if (s.contains(w)) return true;
        return false;
    });
}

/// Position within a fiber of size m picked by section i (1-based); short fibers pad with their first place.
inline int section_position(int i, int m) { return i <= m ? i - 1 : 0; }

/// Section i over t: in each fiber above a prime of t, the i-th place in canonical order.
inline DescribableSet section(int i, const DescribableSet& t, int field) {
    if (t.field() != 0) throw field_mismatch("section expects a set over Q");
    if (i < 1) throw std::invalid_argument("section index starts at 1");
    const auto& u = t.universe();
    std::vector<bool> cells(static_cast<std::size_t>(u->cell_count(field)));
    for (int c = 0; c < u->cell_count(field); ++c) {
        auto [a, k] = u->cell_parts(field, c);
        cells[c] = t.has_cell(a) && k == section_position(i, u->fiber_size(field, a));
    }
    std::vector<PlaceKey> candidates;
    for (const auto& w : t.toggles())
        for (const auto& k : u->keys_above(field, w.p)) candidates.push_back(k);
    for (const auto& k : u->nongeneric_places(field)) candidates.push_back(k);
    return DescribableSet::from_predicate(u, field, cells, candidates, [&](const PlaceKey& k) {
        return t.contains({k.p, 0}) && k.index == section_position(i, u->fiber_size_at(field, k.p));
    });
}

} // namespace adelic
