#include "support.hpp"

#include <gtest/gtest.h>

using namespace adelic;

TEST(Ultrafilters, Containment) {
    auto u = support::gaussian_universe();
    const int split_cell = u->cell_by_name(1, "s1:split");
    auto U = Ultrafilter::free(u, 1, split_cell);
    EXPECT_TRUE(U.contains(DescribableSet::cell(u, 1, split_cell)));
    EXPECT_FALSE(U.contains(DescribableSet::finite(u, 1, u->first_places(1, 50))));
    auto P = Ultrafilter::principal(u, 0, PlaceKey{5, 0});
    EXPECT_TRUE(P.contains(DescribableSet::finite(u, 0, {PlaceKey{5, 0}})));
    EXPECT_FALSE(P.contains(DescribableSet::cofinite(u, 0, {PlaceKey{5, 0}})));
}

TEST(Ultrafilters, PartitionPick) {
    auto u = support::gaussian_universe();
    const int split = u->atom_by_name("split"), inert = u->atom_by_name("inert");
    std::vector<DescribableSet> parts{DescribableSet::atom(u, 0, split), DescribableSet::atom(u, 0, inert),
                                      DescribableSet::finite(u, 0, {PlaceKey{2, 0}})};
    EXPECT_EQ(partition_pick(Ultrafilter::free_on_atom(u, split), parts), 0u);
    EXPECT_EQ(partition_pick(Ultrafilter::principal(u, 0, PlaceKey{7, 0}), parts), 1u);
    EXPECT_EQ(partition_pick(Ultrafilter::principal(u, 0, PlaceKey{2, 0}), parts), 2u);
    parts.pop_back();
    EXPECT_THROW(partition_pick(Ultrafilter::free_on_atom(u, split), parts), not_a_partition);
    parts.push_back(DescribableSet::all(u, 0));
    EXPECT_THROW(partition_pick(Ultrafilter::free_on_atom(u, split), parts), not_a_partition);
}

TEST(Ultrafilters, Pushforward) {
    auto u = support::gaussian_universe();
    EXPECT_EQ(Ultrafilter::principal(u, 1, PlaceKey{5, 1}).pushforward(), Ultrafilter::principal(u, 0, PlaceKey{5, 0}));
    auto lifted = Ultrafilter::free(u, 1, u->cell_by_name(1, "s1:split"));
    EXPECT_EQ(lifted.pushforward(), Ultrafilter::free_on_atom(u, u->atom_by_name("split")));
    auto base = Ultrafilter::free_on_atom(u, 0);
    EXPECT_EQ(base.pushforward(), base);
}

TEST(Ultrafilters, Lifts) {
    auto u = support::gaussian_universe();
    auto split = Ultrafilter::free_on_atom(u, u->atom_by_name("split"));
    auto lifts = split.lifts(1);
    ASSERT_EQ(lifts.size(), 2u);
    EXPECT_FALSE(lifts[0] == lifts[1]);
    EXPECT_EQ(Ultrafilter::free_on_atom(u, u->atom_by_name("inert")).lifts(1).size(), 1u);
    auto principal = Ultrafilter::principal(u, 0, PlaceKey{13, 0}).lifts(1);
    ASSERT_EQ(principal.size(), 2u);
    EXPECT_EQ(principal[0].place(), (PlaceKey{13, 0}));
    EXPECT_EQ(principal[1].place(), (PlaceKey{13, 1}));
}

TEST(Ultrafilters, SectionRefine) {
    auto u = support::gaussian_universe();
    auto U = Ultrafilter::free(u, 1, u->cell_by_name(1, "s2:split"));
    auto refined = section_refine(U, DescribableSet::all(u, 1));
    EXPECT_TRUE(U.contains(refined));
    EXPECT_EQ(refined, section(2, DescribableSet::all(u, 0), 1));
    EXPECT_EQ(section_refine(U, refined), refined);
    EXPECT_THROW(section_refine(U, DescribableSet::finite(u, 1, {PlaceKey{5, 1}})), not_member);
}

TEST(Ultrafilters, DistinguishingSet) {
    auto u = support::gaussian_universe();
    auto a = Ultrafilter::free(u, 1, 0), b = Ultrafilter::principal(u, 1, PlaceKey{5, 0});
    auto D = distinguishing_set(a, b);
    ASSERT_TRUE(D.has_value());
    EXPECT_TRUE(a.contains(*D));
    EXPECT_FALSE(b.contains(*D));
    EXPECT_FALSE(distinguishing_set(a, a).has_value());
}
