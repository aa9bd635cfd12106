#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "oracles.h"
#include "pargi/generators.h"
#include "pargi/permgroup.h"
#include "pargi/permutation.h"

namespace pargi {
namespace {

using testing::Perm;

Permutation Cyc(std::size_t n, std::vector<std::vector<Point>> cycles) {
  return Permutation::FromCycles(n, cycles);
}

std::vector<Perm> Images(const GeneratingSet& gs) {
  std::vector<Perm> out;
  for (const auto& g : gs.gens()) out.push_back(g.images());
  return out;
}

Permutation RandomPerm(std::size_t n, SplitMix64& rng) {
  auto v = RandomPermutation(n, rng);
  return Permutation(std::vector<Point>(v.begin(), v.end()));
}

TEST(Permutation, Construction) {
  EXPECT_THROW(Permutation({0, 0, 1}), std::invalid_argument);
  EXPECT_THROW(Permutation({0, 3}), std::invalid_argument);
  EXPECT_THROW(Cyc(3, {{0, 1}, {1, 2}}), std::invalid_argument);
  EXPECT_EQ(Cyc(4, {{0, 1, 2}}).images(), (std::vector<Point>{1, 2, 0, 3}));
  EXPECT_EQ(Permutation::Identity(3).CycleNotation(), "()");
  EXPECT_EQ(Cyc(5, {{3, 4}, {0, 2, 1}}).CycleNotation(), "(0 2 1)(3 4)");
}

TEST(Permutation, ComposeConvention) {
  // i -> b[a[i]]: (0 1) first, then (1 2).
  const Permutation c = Compose(Cyc(3, {{0, 1}}), Cyc(3, {{1, 2}}));
  EXPECT_EQ(c.images(), (std::vector<Point>{2, 0, 1}));
  EXPECT_EQ(c, Cyc(3, {{0, 2, 1}}));
  EXPECT_THROW(Compose(Permutation::Identity(2), Permutation::Identity(3)),
               std::invalid_argument);
}

TEST(Permutation, InverseLaws) {
  SplitMix64 rng(1);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + rng.Below(10);
    const Permutation p = RandomPerm(n, rng);
    EXPECT_TRUE(Compose(p, Inverse(p)).IsIdentity());
    EXPECT_TRUE(Compose(Inverse(p), p).IsIdentity());
  }
  EXPECT_EQ(Inverse(Permutation::Identity(4)), Permutation::Identity(4));
}

TEST(GeneratingSet, DropsIdentityAndChecksDegree) {
  const GeneratingSet gs(3, {Permutation::Identity(3), Cyc(3, {{0, 1}})});
  EXPECT_EQ(gs.size(), 1u);
  EXPECT_THROW(GeneratingSet(3, {Permutation::Identity(4)}), std::invalid_argument);
}

TEST(Orbits, Examples) {
  EXPECT_EQ(Orbits(GeneratingSet(5, {Cyc(5, {{0, 1}}), Cyc(5, {{2, 3}})})),
            (std::vector<std::vector<Point>>{{0, 1}, {2, 3}, {4}}));
  EXPECT_TRUE(IsTransitive(GeneratingSet(4, {Cyc(4, {{0, 1, 2, 3}})})));
  EXPECT_EQ(Orbits(GeneratingSet(3)).size(), 3u);
  EXPECT_FALSE(IsTransitive(GeneratingSet(3)));
}

TEST(Blocks, Examples) {
  const auto c4 = MinimalBlockSystem(GeneratingSet(4, {Cyc(4, {{0, 1, 2, 3}})}));
  EXPECT_EQ(c4.blocks, (std::vector<std::vector<Point>>{{0, 2}, {1, 3}}));
  EXPECT_FALSE(c4.primitive);

  const auto c3 = MinimalBlockSystem(GeneratingSet(3, {Cyc(3, {{0, 1, 2}})}));
  EXPECT_TRUE(c3.primitive);
  EXPECT_EQ(c3.blocks.size(), 3u);

  EXPECT_TRUE(
      MinimalBlockSystem(GeneratingSet(4, {Cyc(4, {{0, 1}}), Cyc(4, {{0, 1, 2, 3}})})).primitive);
  EXPECT_THROW(MinimalBlockSystem(GeneratingSet(3, {Cyc(3, {{0, 1}})})), std::invalid_argument);
}

TEST(Blocks, InvariantUnderConjugation) {
  SplitMix64 rng(8);
  const GeneratingSet d4(4, {Cyc(4, {{0, 1, 2, 3}}), Cyc(4, {{0, 2}})});
  for (int t = 0; t < 10; ++t) {
    const Permutation c = RandomPerm(4, rng);
    std::vector<Permutation> conj;
    for (const auto& g : d4.gens()) conj.push_back(Compose(Compose(Inverse(c), g), c));
    const auto a = MinimalBlockSystem(d4);
    const auto b = MinimalBlockSystem(GeneratingSet(4, conj));
    std::set<std::vector<Point>> mapped;
    for (const auto& block : a.blocks) {
      std::vector<Point> img;
      for (Point p : block) img.push_back(c[p]);
      std::sort(img.begin(), img.end());
      mapped.insert(img);
    }
    EXPECT_EQ(std::set<std::vector<Point>>(b.blocks.begin(), b.blocks.end()), mapped);
  }
}

TEST(Sift, Examples) {
  StabilizerChain empty(3);
  const SiftResult id = Sift(Permutation::Identity(3), empty);
  EXPECT_TRUE(id.member);
  EXPECT_EQ(id.drop_level, -1);
  EXPECT_TRUE(id.residue.IsIdentity());

  const SiftResult swap = Sift(Cyc(3, {{0, 1}}), empty);
  EXPECT_FALSE(swap.member);
  EXPECT_EQ(swap.drop_level, 0);
  EXPECT_EQ(swap.residue, Cyc(3, {{0, 1}}));

  StabilizerChain chain(3);
  chain.InsertRepresentative(0, Cyc(3, {{0, 1}}));
  EXPECT_TRUE(Sift(Cyc(3, {{0, 1}}), chain).member);
  const SiftResult other = Sift(Cyc(3, {{0, 2}}), chain);
  EXPECT_FALSE(other.member);
  EXPECT_EQ(other.drop_level, 0);
  EXPECT_EQ(other.residue, Cyc(3, {{0, 2}}));
  EXPECT_TRUE(chain.CheckInvariants());
}

TEST(Sift, ResidueFixesPrefixAndTracksCoset) {
  const StabilizerChain s4 =
      SchreierSims(GeneratingSet(4, {Cyc(4, {{0, 1}}), Cyc(4, {{0, 1, 2, 3}})}));
  StabilizerChain partial(4);
  partial.InsertRepresentative(0, Cyc(4, {{0, 1}}));
  const Permutation x = Cyc(4, {{0, 1}, {2, 3}});
  const SiftResult r = Sift(x, partial);
  EXPECT_FALSE(r.member);
  EXPECT_EQ(r.drop_level, 2);
  EXPECT_EQ(r.residue[0], 0u);
  EXPECT_EQ(r.residue[1], 1u);
  EXPECT_TRUE(Contains(s4, r.residue));
}

TEST(StabilizerChain, InsertRepresentativeValidates) {
  StabilizerChain chain(4);
  EXPECT_THROW(chain.InsertRepresentative(1, Cyc(4, {{0, 1}})), std::invalid_argument);
  chain.InsertRepresentative(0, Cyc(4, {{0, 1}}));
  EXPECT_THROW(chain.InsertRepresentative(0, Cyc(4, {{0, 1}, {2, 3}})), std::invalid_argument);
  EXPECT_EQ(chain.NumRepresentatives(0), 1u);
}

TEST(SchreierSims, Examples) {
  const GeneratingSet s4(4, {Cyc(4, {{0, 1}}), Cyc(4, {{0, 1, 2, 3}})});
  EXPECT_EQ(GroupOrder(SchreierSims(s4)), 24);
  EXPECT_EQ(GroupOrder(SchreierSims(GeneratingSet(5))), 1);
  const StabilizerChain a4 = SchreierSims(GeneratingSet(4, {Cyc(4, {{0, 1, 2}}), Cyc(4, {{1, 2, 3}})}));
  EXPECT_EQ(GroupOrder(a4), 12);
  EXPECT_FALSE(Contains(a4, Cyc(4, {{0, 1}})));
  EXPECT_TRUE(Contains(a4, Cyc(4, {{0, 1}, {2, 3}})));
  EXPECT_TRUE(a4.CheckInvariants());
}

TEST(SchreierSims, LargeSymmetricGroupOrder) {
  const std::size_t n = 30;
  std::vector<Point> cycle(n);
  for (Point i = 0; i < n; ++i) cycle[i] = i;
  const GeneratingSet sn(n, {Cyc(n, {{0, 1}}), Cyc(n, {cycle})});
  BigInt factorial = 1;
  for (std::size_t i = 2; i <= n; ++i) factorial *= static_cast<unsigned>(i);
  EXPECT_EQ(GroupOrder(SchreierSims(sn)), factorial);
}

TEST(SchreierSims, MatchesBruteForceOnRandomGroups) {
  SplitMix64 rng(31);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + rng.Below(6);
    std::vector<Permutation> gens;
    for (std::size_t i = 0, m = 1 + rng.Below(3); i < m; ++i) gens.push_back(RandomPerm(n, rng));
    const GeneratingSet gs(n, gens);
    const auto elements = testing::GroupElements(n, Images(gs));
    const StabilizerChain chain = SchreierSims(gs);
    EXPECT_EQ(GroupOrder(chain), elements.size());
    EXPECT_TRUE(chain.CheckInvariants());
    for (int q = 0; q < 20; ++q) {
      const Permutation x = RandomPerm(n, rng);
      EXPECT_EQ(Contains(chain, x), elements.count(x.images()) == 1);
    }
  }
}

TEST(RefineGeneratingSet, AllOfS4) {
  const auto all = testing::GroupElements(4, {{1, 0, 2, 3}, {1, 2, 3, 0}});
  std::vector<Permutation> gens;
  for (const auto& e : all) gens.emplace_back(e);
  const GeneratingSet gs(4, gens);
  for (std::optional<std::uint64_t> seed : {std::optional<std::uint64_t>{}, std::optional<std::uint64_t>{5}}) {
    RefineGeneratorsOptions o;
    o.seed = seed;
    o.workers = 3;
    const RefinedGenerators r = RefineGeneratingSet(gs, o);
    EXPECT_LE(r.gens.size(), 5u);
    EXPECT_EQ(GroupOrder(r.chain), 24);
    EXPECT_EQ(testing::GroupElements(4, Images(r.gens)), all);
  }
}

TEST(RefineGeneratingSet, TrivialAndCyclic) {
  const GeneratingSet ids(4, std::vector<Permutation>(100, Permutation::Identity(4)));
  EXPECT_EQ(RefineGeneratingSet(ids).gens.size(), 0u);

  SplitMix64 rng(4);
  const Permutation c = Cyc(5, {{0, 1, 2, 3, 4}});
  std::vector<Permutation> elems;
  for (int i = 0; i < 50; ++i) {
    Permutation x = Permutation::Identity(5);
    for (std::uint64_t p = rng.Below(5); p > 0; --p) x = Compose(x, c);
    elems.push_back(x);
  }
  const RefinedGenerators r = RefineGeneratingSet(GeneratingSet(5, elems));
  EXPECT_LE(r.gens.size(), 3u);
  EXPECT_EQ(testing::GroupElements(5, Images(r.gens)).size(), 5u);
}

TEST(RefineGeneratingSet, ResidueOnlyVariantKeepsChainInvariants) {
  SplitMix64 rng(9);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 2 + rng.Below(5);
    std::vector<Permutation> gens;
    for (int i = 0; i < 30; ++i) gens.push_back(RandomPerm(n, rng));
    RefineGeneratorsOptions o;
    o.close_chain = false;
    const RefinedGenerators r = RefineGeneratingSet(GeneratingSet(n, gens), o);
    EXPECT_TRUE(r.chain.CheckInvariants());
    EXPECT_LE(r.gens.size(), n * (n - 1) / 2);
    // Every input sifts through the final chain.
    for (const auto& g : gens) EXPECT_TRUE(Sift(g, r.chain).member);
  }
}

TEST(RefineGeneratingSet, DeterministicAcrossWorkers) {
  SplitMix64 rng(12);
  std::vector<Permutation> gens;
  for (int i = 0; i < 200; ++i) gens.push_back(RandomPerm(7, rng));
  const GeneratingSet gs(7, gens);
  for (std::optional<std::uint64_t> seed : {std::optional<std::uint64_t>{}, std::optional<std::uint64_t>{77}}) {
    RefineGeneratorsOptions one, many;
    one.seed = many.seed = seed;
    many.workers = 8;
    EXPECT_EQ(RefineGeneratingSet(gs, one).gens.gens(), RefineGeneratingSet(gs, many).gens.gens());
  }
}

}  // namespace
}  // namespace pargi
