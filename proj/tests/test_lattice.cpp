#include <doctest.h>

#include <algorithm>
#include <random>

#include "ctrust/experiment.hpp"
#include "ctrust/lattice.hpp"

using namespace ctrust;

namespace {

std::vector<AutonomousSystem> make_systems(const std::vector<std::vector<double>>& vecs) {
    std::vector<AutonomousSystem> out;
    for (std::size_t i = 0; i < vecs.size(); ++i)
        out.push_back({static_cast<int>(i), AttributeVector{vecs[i]}, {}});
    return out;
}

// brute-force strict dominance, independent of compare()
bool dominates_brute(const AttributeVector& a, const AttributeVector& b) {
    bool ge = true, gt = false;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (a[i] < b[i]) ge = false;
        if (a[i] > b[i]) gt = true;
    }
    return ge && gt;
}

} // namespace

TEST_CASE("compare on fixture vehicles") {
    AttributeVector v1{{1271, 53.3}}, v2{{3766, 66.7}}, v4{{915, 60}};
    CHECK(compare(v2, v1) == DominanceRelation::StrictlyBetter);
    CHECK(compare(v1, v2) == DominanceRelation::StrictlyWorse);
    CHECK(compare(v1, v4) == DominanceRelation::Incomparable);
    CHECK(compare(v1, v1) == DominanceRelation::Equal);
    CHECK_THROWS_AS(compare(v1, AttributeVector{{1.0}}), DimensionMismatch);
}

TEST_CASE("fixture partial order: vehicle 2 uniquely maximal") {
    Scenario s = intersection_fixture();
    PartialOrder po = build_partial_order(s.systems);
    CHECK(po.depth_rank[1] == 1);
    for (int i : {0, 2, 3, 4})
        CHECK(po.depth_rank[i] > 1);
    // published ranks for vehicles 1-4 follow from depth
    CHECK(po.depth_rank[0] == 2);
    CHECK(po.depth_rank[2] == 3);
    CHECK(po.depth_rank[3] == 2);
}

TEST_CASE("antichain of equals: no cover edges, all rank 1") {
    auto systems = make_systems({{5, 5}, {5, 5}, {5, 5}});
    PartialOrder po = build_partial_order(systems);
    CHECK(po.cover_edges.empty());
    CHECK(po.depth_rank == std::vector<int>{1, 1, 1});
}

TEST_CASE("chain of three: 2 cover edges, ranks 1,2,3") {
    auto systems = make_systems({{3, 3}, {2, 2}, {1, 1}});
    PartialOrder po = build_partial_order(systems);
    CHECK(po.cover_edges.size() == 2);
    CHECK(po.depth_rank == std::vector<int>{1, 2, 3});
    CHECK(linear_extensions(po, 10).size() == 1);
}

TEST_CASE("join and meet") {
    Scenario s = intersection_fixture();
    auto [join, meet] = join_meet(s.systems);
    CHECK(join.values == std::vector<double>{3766, 66.7});
    CHECK(meet.values == std::vector<double>{0, 22.2});

    auto two = make_systems({{1, 4}, {3, 2}});
    auto [j2, m2] = join_meet(two);
    CHECK(j2.values == std::vector<double>{3, 4});
    CHECK(m2.values == std::vector<double>{1, 2});

    auto one = make_systems({{7, 9}});
    auto [j1, m1] = join_meet(one);
    CHECK(j1.values == m1.values);
    CHECK_THROWS_AS(join_meet({}), EmptyInput);
}

TEST_CASE("fixture extensions all start with vehicle 2") {
    Scenario s = intersection_fixture();
    PartialOrder po = build_partial_order(s.systems);
    auto exts = linear_extensions(po, 10);
    CHECK(exts.size() == 4);
    for (const auto& e : exts)
        CHECK(e.sequence.front() == 1);
}

TEST_CASE("three-agent antichain has 6 extensions") {
    auto systems = make_systems({{1, 9}, {5, 5}, {9, 1}});
    PartialOrder po = build_partial_order(systems);
    CHECK(linear_extensions(po, 10).size() == 6);
    CHECK(linear_extensions(po, 0).empty());
    CHECK(linear_extensions(po, 4).size() == 4);
}

TEST_CASE("compare antisymmetry and transitivity, randomized") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coord(0, 4);
    for (int trial = 0; trial < 500; ++trial) {
        AttributeVector a{{double(coord(rng)), double(coord(rng))}};
        AttributeVector b{{double(coord(rng)), double(coord(rng))}};
        AttributeVector c{{double(coord(rng)), double(coord(rng))}};
        auto ab = compare(a, b);
        auto ba = compare(b, a);
        if (ab == DominanceRelation::StrictlyBetter)
            CHECK(ba == DominanceRelation::StrictlyWorse);
        if (ab == DominanceRelation::Equal) CHECK(ba == DominanceRelation::Equal);
        if (ab == DominanceRelation::Incomparable)
            CHECK(ba == DominanceRelation::Incomparable);
        if (ab == DominanceRelation::StrictlyBetter &&
            compare(b, c) == DominanceRelation::StrictlyBetter)
            CHECK(compare(a, c) == DominanceRelation::StrictlyBetter);
    }
}

TEST_CASE("reachability closure equals brute-force dominance") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> coord(0, 100);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::vector<double>> vecs;
        for (int i = 0; i < 12; ++i) vecs.push_back({coord(rng), coord(rng), coord(rng)});
        auto systems = make_systems(vecs);
        PartialOrder po = build_partial_order(systems);
        for (std::size_t a = 0; a < systems.size(); ++a)
            for (std::size_t b = 0; b < systems.size(); ++b) {
                if (a == b) continue;
                CHECK(po.strictly_dominates(int(a), int(b)) ==
                      dominates_brute(systems[a].attributes, systems[b].attributes));
            }
        // join dominates-or-equals everyone; meet dominated-or-equal
        for (const auto& s : systems) {
            auto rj = compare(po.join, s.attributes);
            CHECK((rj == DominanceRelation::StrictlyBetter || rj == DominanceRelation::Equal));
            auto rm = compare(po.meet, s.attributes);
            CHECK((rm == DominanceRelation::StrictlyWorse || rm == DominanceRelation::Equal));
        }
    }
}

TEST_CASE("returned extensions respect pairwise dominance") {
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> coord(0, 10);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::vector<double>> vecs;
        for (int i = 0; i < 8; ++i) vecs.push_back({coord(rng), coord(rng)});
        auto systems = make_systems(vecs);
        PartialOrder po = build_partial_order(systems);
        for (const auto& order : linear_extensions(po, 16)) {
            std::vector<int> position(order.size());
            for (std::size_t p = 0; p < order.size(); ++p)
                position[order.sequence[p]] = static_cast<int>(p);
            for (std::size_t a = 0; a < systems.size(); ++a)
                for (std::size_t b = 0; b < systems.size(); ++b)
                    if (a != b && dominates_brute(systems[a].attributes, systems[b].attributes))
                        CHECK(position[a] < position[b]);
        }
    }
}

TEST_CASE("default order is a linear extension, most expert first") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> coord(0, 100);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::vector<double>> vecs;
        for (int i = 0; i < 10; ++i) vecs.push_back({coord(rng), coord(rng)});
        auto systems = make_systems(vecs);
        TotalOrder order = default_order(systems);
        std::vector<int> sorted = order.sequence;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i)
            CHECK(sorted[i] == static_cast<int>(i));
        std::vector<int> position(order.size());
        for (std::size_t p = 0; p < order.size(); ++p)
            position[order.sequence[p]] = static_cast<int>(p);
        for (std::size_t a = 0; a < systems.size(); ++a)
            for (std::size_t b = 0; b < systems.size(); ++b)
                if (a != b && dominates_brute(systems[a].attributes, systems[b].attributes))
                    CHECK(position[a] < position[b]);
    }
}
