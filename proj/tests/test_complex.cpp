#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sc/complex.hpp"
#include "sc/generators.hpp"

using namespace sc;
using F = std::vector<std::vector<Vertex>>;

namespace {

SimplicialComplex cx(const F& f) { return SimplicialComplex::from_facets(f); }

const SimplicialComplex kCycle = cx({{1, 2}, {1, 3}, {2, 3}});

} // namespace

TEST(Face, BitOperations)
{
    Face a{1, 3, 5};
    EXPECT_EQ(a.size(), 3);
    EXPECT_EQ(a.dim(), 2);
    EXPECT_EQ(Face{}.dim(), -1);
    EXPECT_TRUE(Face({1, 3}).is_subset_of(a));
    EXPECT_EQ((a - Face{3}), (Face{1, 5}));
    EXPECT_EQ(a.vertices(), (std::vector<Vertex>{1, 3, 5}));
    EXPECT_THROW(Face{64}, Error);
    EXPECT_THROW(Face{-1}, Error);
    EXPECT_NO_THROW(Face{63});
}

TEST(Face, LexicographicOrder)
{
    EXPECT_LT((Face{1, 2}), (Face{1, 3}));
    EXPECT_LT((Face{1, 2}), (Face{1, 2, 3}));
    EXPECT_LT((Face{1, 9}), (Face{2}));
    EXPECT_LT(Face{}, Face{0});
}

TEST(FromFacets, RemovesDuplicatesAndSubsets)
{
    const auto x = cx({{1, 2}, {2}, {1, 2}});
    ASSERT_EQ(x.num_facets(), 1u);
    EXPECT_EQ(x.facets()[0], (Face{1, 2}));
    EXPECT_TRUE(cx({}).empty());
}

TEST(FromFacets, V6F10)
{
    const auto x = named_complex("v6f10-6");
    EXPECT_EQ(x.num_vertices(), 6);
    EXPECT_EQ(x.num_facets(), 10u);
    EXPECT_EQ(x.dim(), 2);
}

TEST(Faces, ByDimension)
{
    const auto tri = SimplicialComplex::simplex({1, 2, 3});
    EXPECT_EQ(faces(tri, 1), (std::vector<Face>{{1, 2}, {1, 3}, {2, 3}}));
    EXPECT_EQ(faces(tri, -1), std::vector<Face>{Face{}});
    EXPECT_TRUE(faces(cx({}), -1).empty());

    const auto x = named_complex("v6f10-6");
    EXPECT_EQ(faces(x, 2), x.facets());
    // every pair of the six vertices lies in some triple
    const auto fs = oracle::faces_of(x);
    int edges = 0;
    for (auto f : fs)
        edges += oracle::popcount(f) == 2;
    EXPECT_EQ(edges, 15);
    EXPECT_EQ(faces(x, 1).size(), 15u);
}

TEST(Link, Examples)
{
    const auto x = named_complex("v6f10-6");
    EXPECT_EQ(link(x, Face{}), x);
    EXPECT_EQ(link(x, Face{1, 5}), cx({{2}}));
    EXPECT_THROW(link(kCycle, Face{1, 2, 3}), Error);

    // lk(1) has vertices 2..6 and contains an induced cycle
    const auto lk1 = link(x, Face{1});
    EXPECT_EQ(lk1.vertex_set(), (Face{2, 3, 4, 5, 6}));
    bool found_cycle = false;
    for_each_subset(lk1.vertex_set(), [&](Face a) {
        if (a.size() < 3)
            return;
        const auto sub = induced(lk1, a);
        bool all_deg2 = sub.dim() == 1 && sub.vertex_set() == a;
        for (Vertex v : a.vertices()) {
            int deg = 0;
            for (Face f : sub.facets())
                deg += f.contains(v);
            all_deg2 = all_deg2 && deg == 2;
        }
        found_cycle = found_cycle || (all_deg2 && static_cast<int>(sub.num_facets()) == a.size());
    });
    EXPECT_TRUE(found_cycle);
}

TEST(Deletion, Examples)
{
    const auto x = named_complex("v6f10-6");
    EXPECT_EQ(deletion(x, Face{1, 5}),
              cx({{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {1, 3, 6}, {2, 4, 5}, {2, 5, 6}, {3, 4, 6}, {3, 5, 6}, {4, 5, 6}}));
    EXPECT_EQ(deletion(SimplicialComplex::simplex({1, 2, 3, 4}), Face{2}), SimplicialComplex::simplex({1, 3, 4}));
    EXPECT_EQ(deletion(x, Face{9}), x);
    EXPECT_THROW(deletion(x, Face{}), Error);
}

TEST(Induced, Examples)
{
    const auto x = named_complex("v6f10-6");
    EXPECT_EQ(induced(x, x.vertex_set()), x);
    EXPECT_EQ(induced(kCycle, Face{1, 2}), cx({{1, 2}}));
    EXPECT_EQ(induced(x, Face{1, 2, 3, 4}), cx({{1, 2, 3}, {1, 2, 4}, {1, 3, 4}}));
    EXPECT_EQ(induced(kCycle, Face{1, 2, 40}), cx({{1, 2}}));
}

TEST(OpenFaces, Examples)
{
    const auto s = SimplicialComplex::simplex({1, 2, 3, 4});
    for (int k = 0; k <= 3; ++k)
        EXPECT_TRUE(open_k_faces(s, k).empty());
    const auto x = named_complex("v6f10-6");
    const auto o1 = open_k_faces(x, 1);
    EXPECT_NE(std::find(o1.begin(), o1.end(), Face{1, 5}), o1.end());
    EXPECT_NE(link(x, Face{1, 5}), induced(x, Face{2, 3, 4, 6}));
}

TEST(FreePairs, Examples)
{
    const auto s = SimplicialComplex::simplex({1, 2, 3});
    const auto p0 = free_pairs(s, 0);
    ASSERT_EQ(p0.size(), 1u);
    EXPECT_EQ(p0[0], (FreePair{Face{}, Face{1, 2, 3}}));

    EXPECT_TRUE(free_pairs(kCycle, 1).empty());
    const auto p2 = free_pairs(kCycle, 2);
    EXPECT_EQ(p2, (std::vector<FreePair>{{{1, 2}, {1, 2}}, {{1, 3}, {1, 3}}, {{2, 3}, {2, 3}}}));
}

TEST(ElementaryCollapse, Examples)
{
    EXPECT_TRUE(elementary_collapse(SimplicialComplex::simplex({1, 2}), {Face{}, Face{1, 2}}).empty());
    const auto path = elementary_collapse(kCycle, {Face{1, 2}, Face{1, 2}});
    EXPECT_EQ(path, cx({{1, 3}, {2, 3}}));
    EXPECT_EQ(elementary_collapse(path, {Face{1}, Face{1, 3}}), cx({{2, 3}}));
    EXPECT_THROW(elementary_collapse(kCycle, {Face{1}, Face{1, 2}}), Error);
}

TEST(Constructions, JoinSkeletonBoundary)
{
    EXPECT_EQ(boundary(Face{1, 2, 3}), kCycle);
    const auto cone = join(cx({{4}}), kCycle);
    EXPECT_TRUE(is_pure(cone));
    EXPECT_EQ(cone.dim(), 2);
    EXPECT_EQ(cone, cx({{1, 2, 4}, {1, 3, 4}, {2, 3, 4}}));
    EXPECT_THROW(join(kCycle, kCycle), Error);

    const auto x = named_complex("v6f10-6");
    EXPECT_EQ(pure_skeleton(x, 2), x);
    EXPECT_THROW(pure_skeleton(x, 3), Error);
    EXPECT_THROW(skeleton(x, 3), Error);
    EXPECT_EQ(skeleton(SimplicialComplex::simplex({1, 2, 3}), 1), kCycle);

    // the pure 1-skeleton drops an isolated vertex, the 1-skeleton keeps it
    const auto mixed = cx({{1, 2, 3}, {4}});
    EXPECT_EQ(pure_skeleton(mixed, 1), kCycle);
    EXPECT_EQ(skeleton(mixed, 1), cx({{1, 2}, {1, 3}, {2, 3}, {4}}));
    EXPECT_FALSE(is_pure(mixed));
}

// Property tests over random complexes, each checked against face-set oracles.
class RandomComplexes : public ::testing::TestWithParam<int> {};

TEST_P(RandomComplexes, OperationsMatchOracle)
{
    std::mt19937_64 rng(static_cast<std::uint64_t>(GetParam()));
    const auto x = oracle::random_complex(rng, 6, 5, 4);
    const auto fx = oracle::faces_of(x);

    // canonical antichain, sorted
    for (std::size_t i = 0; i < x.facets().size(); ++i)
        for (std::size_t j = 0; j < x.facets().size(); ++j) {
            if (i != j) {
                ASSERT_FALSE(x.facets()[i].is_subset_of(x.facets()[j]));
            }
        }
    ASSERT_TRUE(std::is_sorted(x.facets().begin(), x.facets().end()));

    const auto all = all_faces(x);
    ASSERT_EQ(all.size(), fx.size());
    for (Face s : all) {
        ASSERT_TRUE(oracle::same_complex(oracle::link(fx, s.bits()), link(x, s)));
        if (!s.empty()) {
            ASSERT_TRUE(oracle::same_complex(oracle::del(fx, s.bits()), deletion(x, s)));
        }
    }
    for_each_subset(x.vertex_set(), [&](Face a) {
        ASSERT_TRUE(oracle::same_complex(oracle::induced(fx, a.bits()), induced(x, a)));
    });
}

TEST_P(RandomComplexes, VertexDeletionIsInducedComplement)
{
    std::mt19937_64 rng(static_cast<std::uint64_t>(GetParam()) + 1000);
    const auto x = oracle::random_complex(rng, 7, 6, 4);
    for (Vertex v : x.vertex_set().vertices()) {
        EXPECT_EQ(deletion(x, Face{v}), induced(x, x.vertex_set().without(v)));
        // open 0-faces are exactly the vertices with lk != del
        const auto o = open_k_faces(x, 0);
        const bool open = std::find(o.begin(), o.end(), Face{v}) != o.end();
        EXPECT_EQ(open, link(x, Face{v}) != deletion(x, Face{v}));
    }
}

TEST_P(RandomComplexes, LinkDeletionCommute)
{
    std::mt19937_64 rng(static_cast<std::uint64_t>(GetParam()) + 2000);
    const auto x = oracle::random_complex(rng, 6, 5, 4);
    const auto fs = all_faces(x);
    for (Face s : fs) {
        if (s.empty())
            continue;
        const auto del = deletion(x, s);
        for (Face t : fs) {
            if (!s.intersects(t) && del.contains(t)) {
                ASSERT_EQ(link(del, t), deletion(link(x, t), s)) << to_string(s) << " " << to_string(t);
            }
        }
    }
}

TEST_P(RandomComplexes, NoOpenFacesMeansSimplex)
{
    std::mt19937_64 rng(static_cast<std::uint64_t>(GetParam()) + 3000);
    // small vertex pools make cones and simplices common
    const auto x = oracle::random_complex(rng, 4, 2, 4);
    for (int k = 0; k <= x.dim(); ++k) {
        if (open_k_faces(x, k).empty()) {
            EXPECT_TRUE(x.is_simplex()) << to_string(x) << " k=" << k;
        }
    }
}

TEST_P(RandomComplexes, CollapseShrinksAndStaysCanonical)
{
    std::mt19937_64 rng(static_cast<std::uint64_t>(GetParam()) + 4000);
    auto x = oracle::random_complex(rng, 6, 5, 4);
    while (!x.empty()) {
        const auto pairs = free_pairs(x, x.dim() + 1);
        ASSERT_FALSE(pairs.empty());
        const auto& p = pairs[std::uniform_int_distribution<std::size_t>(0, pairs.size() - 1)(rng)];
        auto fx = oracle::faces_of(x);
        const auto y = elementary_collapse(x, p);
        ASSERT_LT(all_faces(y).size(), all_faces(x).size());
        // interval removal
        for (auto it = fx.begin(); it != fx.end();)
            it = (oracle::subset(p.free_face.bits(), *it) && oracle::subset(*it, p.maximal_face.bits())) ? fx.erase(it)
                                                                                                           : ++it;
        ASSERT_TRUE(oracle::same_complex(fx, y));
        x = y;
    }
}

TEST_P(RandomComplexes, FreePairsMatchDefinition)
{
    std::mt19937_64 rng(static_cast<std::uint64_t>(GetParam()) + 5000);
    const auto x = oracle::random_complex(rng, 6, 4, 3);
    for (int d = 0; d <= 3; ++d) {
        std::vector<FreePair> expect;
        for (Face g : all_faces(x)) {
            if (g.size() > d)
                continue;
            std::vector<Face> tops;
            for (Face f : x.facets())
                if (g.is_subset_of(f))
                    tops.push_back(f);
            if (tops.size() == 1)
                expect.push_back({g, tops[0]});
        }
        auto got = free_pairs(x, d);
        auto key = [](const FreePair& a, const FreePair& b) {
            return std::tie(a.free_face, a.maximal_face) < std::tie(b.free_face, b.maximal_face);
        };
        std::sort(expect.begin(), expect.end(), key);
        std::sort(got.begin(), got.end(), key);
        EXPECT_EQ(got, expect);
    }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomComplexes, ::testing::Range(0, 200));
