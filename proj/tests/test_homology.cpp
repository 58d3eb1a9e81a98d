#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sc/collapse.hpp"
#include "sc/decomposability.hpp"
#include "sc/generators.hpp"
#include "sc/homology.hpp"
#include "sc/mk.hpp"

using namespace sc;
using F = std::vector<std::vector<Vertex>>;

namespace {

SimplicialComplex cx(const F& f) { return SimplicialComplex::from_facets(f); }

const SimplicialComplex kCycle = cx({{1, 2}, {1, 3}, {2, 3}});
const SimplicialComplex kTwoEdges = cx({{1, 2}, {3, 4}});
const SimplicialComplex kSphere = cx({{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
// RP^2, six vertices: torsion in H_1 over Z, so Q and GF(2) differ.
const SimplicialComplex kRP2 = cx({{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6}, {2, 3, 5}, {3, 4, 6},
                                   {2, 4, 5}, {3, 5, 6}, {2, 4, 6}});

constexpr long long kBigPrime = 1'000'003;

std::vector<int> as_vector(const BettiVector& b)
{
    std::vector<int> v{b.minus_one};
    v.insert(v.end(), b.ranks.begin(), b.ranks.end());
    return v;
}

std::vector<int> trimmed(std::vector<int> v)
{
    while (v.size() > 1 && v.back() == 0)
        v.pop_back();
    return v;
}

} // namespace

TEST(Betti, Examples)
{
    auto b = reduced_betti(kCycle);
    EXPECT_EQ(b[-1], 0);
    EXPECT_EQ(b[0], 0);
    EXPECT_EQ(b[1], 1);
    EXPECT_EQ(b.top_nonzero(), 1);

    b = reduced_betti(kSphere);
    EXPECT_EQ(b[1], 0);
    EXPECT_EQ(b[2], 1);

    b = reduced_betti(cx({}));
    EXPECT_EQ(b[-1], 1);
    EXPECT_EQ(b.top_nonzero(), -1);

    b = reduced_betti(kTwoEdges);
    EXPECT_EQ(b[0], 1);
    EXPECT_EQ(b[1], 0);

    EXPECT_EQ(reduced_betti(SimplicialComplex::simplex({1, 2, 3})).top_nonzero(), -2);
}

TEST(Betti, FieldDependence)
{
    const auto q = reduced_betti(kRP2, Field::rationals());
    const auto two = reduced_betti(kRP2, Field::gf2());
    EXPECT_EQ(q[1], 0);
    EXPECT_EQ(q[2], 0);
    EXPECT_EQ(two[1], 1);
    EXPECT_EQ(two[2], 1);
    EXPECT_EQ(q.reduced_euler(), two.reduced_euler());
    EXPECT_EQ(leray_number(kRP2, Field::rationals()), 2); // a Moebius strip is induced
    EXPECT_EQ(leray_number(kRP2, Field::gf2()), 3);
    EXPECT_EQ(trimmed(as_vector(reduced_betti(kRP2, Field::prime(3)))), trimmed(as_vector(q)));
}

TEST(Field, Parse)
{
    EXPECT_EQ(Field::parse("rational"), Field::rationals());
    EXPECT_EQ(Field::parse("gf2"), Field::gf2());
    EXPECT_EQ(Field::parse("gf7"), Field::prime(7));
    EXPECT_THROW(Field::parse("gf4"), Error);
    EXPECT_THROW(Field::parse("reals"), Error);
}

TEST(HomologicallyConnected, Examples)
{
    EXPECT_FALSE(is_homologically_connected(cx({}), -1));
    EXPECT_TRUE(is_homologically_connected(kCycle, 0));
    EXPECT_FALSE(is_homologically_connected(kCycle, 1));
    EXPECT_FALSE(is_homologically_connected(kTwoEdges, 0));
    EXPECT_TRUE(is_homologically_connected(kTwoEdges, -1));
    EXPECT_TRUE(is_homologically_connected(kSphere, 1));
    EXPECT_TRUE(is_homologically_connected(kSphere, -5));
}

TEST(Leray, Examples)
{
    EXPECT_EQ(leray_number(SimplicialComplex::simplex({1, 2, 3})), 0);
    EXPECT_EQ(leray_number(cx({})), 0);
    EXPECT_EQ(leray_number(kCycle), 2);
    EXPECT_EQ(leray_number(kSphere), 3);
    EXPECT_EQ(leray_number(kTwoEdges), 1);
    EXPECT_EQ(leray_number(named_complex("v6f10-6")), 2);
    // two points: induced on both gives b_0 = 1
    EXPECT_EQ(leray_number(cx({{1}, {2}})), 1);
}

TEST(Leray, BruteForceCap)
{
    F points;
    for (Vertex v = 1; v <= 15; ++v)
        points.push_back({v});
    const auto big = cx(points);
    EXPECT_THROW(leray_number_brute_force(big), Error);
    EXPECT_EQ(leray_number(big), 1);
}

TEST(CohenMacaulay, Examples)
{
    EXPECT_TRUE(is_cohen_macaulay(SimplicialComplex::simplex({1, 2, 3})));
    EXPECT_TRUE(is_cohen_macaulay(cx({})));
    EXPECT_FALSE(is_cohen_macaulay(kTwoEdges));
    EXPECT_TRUE(is_cohen_macaulay(kCycle));
    EXPECT_TRUE(is_cohen_macaulay(kSphere));
    EXPECT_TRUE(is_cohen_macaulay(named_complex("v6f10-6")));
    EXPECT_FALSE(is_cohen_macaulay(cx({{1, 2, 3}, {3, 4}})));
    EXPECT_TRUE(is_cohen_macaulay(kRP2, Field::prime(3)));
    EXPECT_FALSE(is_cohen_macaulay(kRP2, Field::gf2()));
}

// The induced-subcomplex form asks every induced X[A] to be (dim X[A] - 1)-connected.
// On a path of triangles, A = {1,2,3,6} induces a triangle plus an isolated point,
// which is disconnected, while every link is fine. The two predicates disagree.
TEST(CohenMacaulay, InducedFormDisagreesOnStrip)
{
    const auto strip = named_complex("strip");
    EXPECT_TRUE(is_cohen_macaulay(strip));
    EXPECT_FALSE(is_cohen_macaulay_induced(strip));
    const auto sub = induced(strip, Face{1, 2, 3, 6});
    EXPECT_EQ(sub.dim(), 2);
    EXPECT_EQ(reduced_betti(sub)[0], 1);
    EXPECT_FALSE(is_cohen_macaulay_induced(named_complex("v6f10-6")));
}

TEST(CohenMacaulay, InducedFormAgreesOnSimplexAndCycle)
{
    EXPECT_TRUE(is_cohen_macaulay_induced(SimplicialComplex::simplex({1, 2, 3})));
    EXPECT_FALSE(is_cohen_macaulay_induced(kTwoEdges));
}

TEST(Shellable, Examples)
{
    auto r = is_shellable(kCycle);
    ASSERT_TRUE(r.shellable);
    EXPECT_EQ(r.order->size(), 3u);
    EXPECT_FALSE(is_shellable(kTwoEdges).shellable);
    EXPECT_TRUE(is_shellable(kSphere).shellable);
    r = is_shellable(named_complex("v6f10-6"));
    ASSERT_TRUE(r.shellable);
    std::vector<Face> placed;
    for (Face f : *r.order) {
        if (!placed.empty()) {
            EXPECT_TRUE(shelling_step_ok(placed, f));
        }
        placed.push_back(f);
    }
    EXPECT_EQ(SimplicialComplex::from_facets(placed), named_complex("v6f10-6"));
    EXPECT_FALSE(shelling_step_ok({Face{1, 2}}, Face{3, 4}));
}

TEST(Kvd, Examples)
{
    const auto v6 = named_complex("v6f10-6");
    const auto k1 = is_k_vertex_decomposable(v6, 1);
    ASSERT_TRUE(k1.decomposable);
    EXPECT_TRUE(replay_shedding_sequence(v6, 1, *k1.witness));
    EXPECT_FALSE(is_k_vertex_decomposable(v6, 0).decomposable);

    const auto k0 = is_k_vertex_decomposable(kCycle, 0);
    ASSERT_TRUE(k0.decomposable);
    EXPECT_TRUE(replay_shedding_sequence(kCycle, 0, *k0.witness));
    EXPECT_FALSE(replay_shedding_sequence(kCycle, 1, *k0.witness));

    EXPECT_FALSE(is_k_vertex_decomposable(kTwoEdges, 1).decomposable);
    EXPECT_TRUE(is_k_vertex_decomposable(SimplicialComplex::simplex({1, 2}), 0).decomposable);
    EXPECT_THROW(is_k_vertex_decomposable(cx({{1, 2, 3}, {3, 4}}), 0), Error);

    auto bad = *k1.witness;
    bad.pop_back();
    EXPECT_FALSE(replay_shedding_sequence(v6, 1, bad));
}

TEST(Kvd, SheddingFace)
{
    EXPECT_TRUE(is_shedding_face(kCycle, Face{1}, 0));
    EXPECT_FALSE(is_shedding_face(kCycle, Face{1, 2}, 0));
    EXPECT_FALSE(is_shedding_face(kCycle, Face{}, 0));
    EXPECT_TRUE(is_shedding_face(kSphere, Face{1, 2, 3}, 2));
    EXPECT_FALSE(is_shedding_face(kSphere, Face{1, 2, 3}, 1));
    EXPECT_FALSE(is_shedding_face(cx({{1, 2, 3}, {3, 4, 5}}), Face{3}, 0)); // deletion drops to an edge pair
}

class RandomHomology : public ::testing::TestWithParam<int> {};

TEST_P(RandomHomology, BettiMatchesOracle)
{
    std::mt19937_64 rng(static_cast<std::uint64_t>(GetParam()));
    const auto x = oracle::random_complex(rng, 7, 6, 4);
    const auto fx = oracle::faces_of(x);
    const auto want = trimmed(oracle::betti_mod_p(fx, kBigPrime));
    EXPECT_EQ(trimmed(as_vector(reduced_betti(x, Field::rationals()))), want) << to_string(x);
    EXPECT_EQ(trimmed(as_vector(reduced_betti(x, Field::prime(kBigPrime)))), want);
    EXPECT_EQ(trimmed(as_vector(reduced_betti(x, Field::gf2()))), trimmed(oracle::betti_mod_p(fx, 2)));
}

TEST_P(RandomHomology, EulerCharacteristic)
{
    std::mt19937_64 rng(static_cast<std::uint64_t>(GetParam()) + 300);
    const auto x = oracle::random_complex(rng, 8, 7, 5);
    long long chi = -1;
    for (Face f : all_faces(x))
        if (!f.empty())
            chi += (f.size() % 2 == 1) ? 1 : -1;
    for (const auto& f : {Field::rationals(), Field::gf2(), Field::prime(3)})
        EXPECT_EQ(reduced_betti(x, f).reduced_euler(), chi);
}

TEST_P(RandomHomology, LerayMethodsAgree)
{
    std::mt19937_64 rng(static_cast<std::uint64_t>(GetParam()) + 600);
    const auto x = oracle::random_complex(rng, 7, 6, 4);
    const int l = leray_number_links(x);
    EXPECT_EQ(leray_number_brute_force(x), l);
    EXPECT_EQ(oracle::leray(oracle::faces_of(x), kBigPrime), l);
    EXPECT_EQ(leray_number_links(x, Field::gf2()), oracle::leray(oracle::faces_of(x), 2));
    EXPECT_LE(l, x.dim() + 1);
}

// kvd_0 => kvd_1 => ... => shellable => CM
TEST_P(RandomHomology, ImplicationChain)
{
    std::mt19937_64 rng(static_cast<std::uint64_t>(GetParam()) + 900);
    const auto x = oracle::random_pure(rng, 6, 5, 3);
    bool prev = false;
    for (int k = 0; k <= x.dim(); ++k) {
        const auto r = is_k_vertex_decomposable(x, k);
        if (prev) {
            EXPECT_TRUE(r.decomposable) << to_string(x) << " k=" << k;
        }
        if (r.decomposable) {
            EXPECT_TRUE(replay_shedding_sequence(x, k, *r.witness));
        }
        prev = r.decomposable;
    }
    const auto sh = is_shellable(x);
    if (prev) {
        EXPECT_TRUE(sh.shellable) << to_string(x);
    }
    if (sh.shellable) {
        EXPECT_TRUE(is_cohen_macaulay(x)) << to_string(x);
        EXPECT_TRUE(is_cohen_macaulay(x, Field::gf2()));
    }
}

// For k-vertex decomposable X: L(X) = C(X) = M_k(X).
TEST_P(RandomHomology, KvdEquality)
{
    GeneratorSpec spec;
    spec.kind = "random-kvd";
    spec.n = 7;
    spec.k = GetParam() % 3;
    spec.seed = static_cast<std::uint64_t>(GetParam());
    const auto x = std::get<SimplicialComplex>(generate(spec));
    const int k = spec.k;
    ASSERT_TRUE(is_k_vertex_decomposable(x, k).decomposable) << to_string(x);
    const int l = leray_number(x);
    MkEvaluator ev;
    EXPECT_EQ(collapsibility_number(x).value, l);
    EXPECT_EQ(ev.mk(x, k), l) << to_string(x) << " k=" << k;
    EXPECT_GE(ev.mk_prime(x, k), l);
}

// A path is 1-vertex decomposable only through a vertex: deleting either edge
// leaves a non-pure complex. Each edge is still an open 1-face, so M'_1 pays
// L(lk) + 2 = 2 while C = M_1 = L = 1. Equality with M'_k fails here.
TEST(KvdEquality, PathSeparatesPrimedBound)
{
    const auto path = cx({{1, 6}, {4, 6}});
    ASSERT_TRUE(is_k_vertex_decomposable(path, 1).decomposable);
    EXPECT_FALSE(is_shedding_face(path, Face{1, 6}, 1));
    EXPECT_FALSE(is_shedding_face(path, Face{4, 6}, 1));
    EXPECT_TRUE(is_shedding_face(path, Face{1}, 1));
    EXPECT_EQ(collapsibility_number(path).value, 1);
    EXPECT_EQ(leray_number(path), 1);
    EXPECT_EQ(mk(path, 1), 1);
    EXPECT_EQ(mk_prime(path, 1), 2);
    oracle::Mk o;
    EXPECT_EQ(o.mp(oracle::faces_of(path), 1), 2);
}

TEST_P(RandomHomology, SheddingLeray)
{
    std::mt19937_64 rng(static_cast<std::uint64_t>(GetParam()) + 1200);
    const auto x = oracle::random_pure(rng, 6, 5, 3);
    for (int k = 0; k <= x.dim(); ++k)
        for (Face s : faces(x, k))
            EXPECT_NE(shedding_leray_inequality_check(x, s), CheckOutcome::Violated) << to_string(x) << " "
                                                                                      << to_string(s);
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomHomology, ::testing::Range(0, 120));
