#pragma once

#include "describable.hpp"

namespace adelic {

/// Ultrafilter on the describable algebra of one field: generated by a place, or free on a cell.
class Ultrafilter {
public:
    Ultrafilter() = default;

    static Ultrafilter principal(UniversePtr u, int field, const PlaceKey& w) {
        if (w.is_archimedean()) throw std::invalid_argument("principal ultrafilters live on finite places");
        u->place(field, w);
        Ultrafilter out;
        out.u_ = std::move(u);
        out.field_ = field;
        out.principal_ = true;
        out.place_ = w;
        return out;
    }

    /// Free ultrafilter on a cell; warns when the cell's atom is sparsely witnessed.
    static Ultrafilter free(UniversePtr u, int field, int cell) {
        auto [a, k] = u->cell_parts(field, cell);
        (void)k;
        if (u->atom_is_sparse(a))
            std::clog << "warning: atom " << u->atom(a).name << " has only " << u->atom(a).witnesses
                      << " witnesses; treating it as infinite\n";
        Ultrafilter out;
        out.u_ = std::move(u);
        out.field_ = field;
        out.cell_ = cell;
        return out;
    }

    /// Free ultrafilter on Q concentrated on an atom.
    static Ultrafilter free_on_atom(UniversePtr u, int a) { return free(std::move(u), 0, a); }

    /// The i-th lift (1-based) of a free ultrafilter over Q to field j, with padding for short fibers.
    static Ultrafilter lift(int i, const Ultrafilter& base, int field) {
        if (base.field_ != 0 || base.principal_) throw std::invalid_argument("lift expects a free ultrafilter over Q");
        const int a = base.cell_;
        const int k = section_position(i, base.u_->fiber_size(field, a));
        return free(base.u_, field, base.u_->cell_index(field, a, k));
    }

    const UniversePtr& universe() const { return u_; }
    int field() const { return field_; }
    bool is_principal() const { return principal_; }
    bool is_free() const { return !principal_; }
    const PlaceKey& place() const {
        if (!principal_) throw std::logic_error("free ultrafilter has no generating place");
        return place_;
    }
    int cell() const {
        if (principal_) throw std::logic_error("principal ultrafilter has no cell");
        return cell_;
    }
    int atom() const { return u_->cell_parts(field_, cell()).first; }

    bool contains(const DescribableSet& s) const {
        if (s.universe() != u_ || s.field() != field_) throw field_mismatch("set and ultrafilter over different fields");
        return principal_ ? s.contains(place_) : s.has_cell(cell_);
    }

    /// Smallest describable member: the generator, or the cell.
    DescribableSet support() const {
        if (principal_) return DescribableSet::finite(u_, field_, {place_});
        return DescribableSet::cell(u_, field_, cell_);
    }

    /// Image under the restriction map to Q.
    Ultrafilter pushforward() const {
        if (field_ == 0) return *this;
        if (principal_) return principal(u_, 0, {place_.p, 0});
        return free(u_, 0, atom());
    }

    /// All ultrafilters of field j whose pushforward is this one.
    std::vector<Ultrafilter> lifts(int field) const {
        if (field_ != 0) throw field_mismatch("lifts start from an ultrafilter over Q");
        std::vector<Ultrafilter> out;
        if (principal_) {
            for (const auto& k : u_->keys_above(field, place_.p)) out.push_back(principal(u_, field, k));
            return out;
        }
        for (int i = 1; i <= u_->fiber_size(field, cell_); ++i) out.push_back(lift(i, *this, field));
        return out;
    }

    friend bool operator==(const Ultrafilter& a, const Ultrafilter& b) {
        if (a.u_ != b.u_ || a.field_ != b.field_ || a.principal_ != b.principal_) return false;
        return a.principal_ ? a.place_ == b.place_ : a.cell_ == b.cell_;
    }

private:
    UniversePtr u_;
    int field_ = 0;
    bool principal_ = false;
    PlaceKey place_;
    int cell_ = 0;
};

/// A describable set in a but not in b, when the two differ.
inline std::optional<DescribableSet> distinguishing_set(const Ultrafilter& a, const Ultrafilter& b) {
    if (a == b) return std::nullopt;
    DescribableSet s = a.support();
    if (!b.contains(s)) return s;
    s = b.support().complement();
    if (a.contains(s)) return s;
    return std::nullopt;
}

/// Index of the unique part lying in u.
inline std::size_t partition_pick(const Ultrafilter& u, const std::vector<DescribableSet>& parts) {
    if (parts.empty()) throw not_a_partition("empty partition");
    DescribableSet covered = DescribableSet::empty(u.universe(), u.field());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (!covered.intersect(parts[i]).is_empty()) throw not_a_partition("parts overlap");
        covered = covered.unite(parts[i]);
    }
    if (!covered.is_all()) throw not_a_partition("parts do not cover every finite place");
    std::optional<std::size_t> found;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (u.contains(parts[i])) {
            if (found) throw not_a_partition("two parts lie in the ultrafilter");
            found = i;
        }
    }
    if (!found) throw not_a_partition("no part lies in the ultrafilter");
    return *found;
}

/// A member of u inside w meeting each fiber of the restriction map at most once.
inline DescribableSet section_refine(const Ultrafilter& u, const DescribableSet& w) {
    if (!u.is_free()) throw std::invalid_argument("section_refine expects a free ultrafilter");
    if (!u.contains(w)) throw not_member("set does not lie in the ultrafilter");
    if (u.field() == 0) return w;
    const auto& uni = u.universe();
    const int k = uni->cell_parts(u.field(), u.cell()).second;
    DescribableSet sec = section(k + 1, DescribableSet::all(uni, 0), u.field());
    return w.intersect(sec);
}

} // namespace adelic
