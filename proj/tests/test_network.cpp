#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "epl/network.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using epl::EvidenceMatrix;
using epl::EvidenceNetwork;
using epl::EvidenceTuple;

TEST_CASE("interning is idempotent and ids are contiguous") {
    EvidenceNetwork net;
    CHECK(net.intern_vertex("a") == 0);
    CHECK(net.intern_vertex("b") == 1);
    CHECK(net.intern_vertex("marko") == net.intern_vertex("marko"));
    CHECK(net.vertex_count() == 3);
    CHECK(net.vertex_name(1) == "b");
    CHECK(net.find_vertex("b") == 1);
    CHECK_FALSE(net.find_vertex("nope").has_value());
    CHECK_THROWS_AS(net.intern_vertex(""), std::invalid_argument);
    CHECK_THROWS_AS(net.intern_vertex("a\tb"), std::invalid_argument);
    CHECK_THROWS_AS(net.intern_vertex("a\nb"), std::invalid_argument);
    CHECK_THROWS_AS(net.vertex_name(3), std::out_of_range);
}

TEST_CASE("assert_evidence revises by summation") {
    EvidenceNetwork net;
    const auto a = net.intern_vertex("a");
    const auto b = net.intern_vertex("b");
    net.assert_evidence(a, "isA", b, {1, 0});
    net.assert_evidence(a, "isA", b, {1, 0});
    CHECK(net.slice("isA").at(a, b) == EvidenceTuple{2, 0});

    net.assert_evidence(a, "wrote", b, {4, 4});
    CHECK(net.slice("wrote").at(a, b) == EvidenceTuple{4, 4});

    // a zero tuple asserts nothing
    net.assert_evidence(b, "isA", a, {0, 0});
    CHECK(net.slice("isA").entry_count() == 1);

    CHECK_THROWS_AS(net.assert_evidence(9, "isA", b, {1, 0}), std::out_of_range);
    CHECK_THROWS_AS(net.assert_evidence(a, "", b, {1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(net.assert_evidence(a, "isA", b, {-1, 0}),
                    std::invalid_argument);
}

TEST_CASE("slices grow as vertices are interned") {
    EvidenceNetwork net;
    const auto a = net.intern_vertex("a");
    const auto b = net.intern_vertex("b");
    net.assert_evidence(a, "isA", b, {1, 0});
    CHECK(net.slice("isA").dim() == 2);
    net.intern_vertex("c");
    CHECK(net.slice("isA").dim() == 3);
    CHECK(net.slice("isA").at(a, b) == EvidenceTuple{1, 0});
}

TEST_CASE("get_slice of an unknown label is an empty n x n matrix") {
    EvidenceNetwork net;
    net.intern_vertex("a");
    net.intern_vertex("b");
    const EvidenceMatrix m = net.slice("unknown");
    CHECK(m.dim() == 2);
    CHECK(m.entry_count() == 0);
}

TEST_CASE("slice returns a snapshot, not a view") {
    EvidenceNetwork net;
    const auto a = net.intern_vertex("a");
    const auto b = net.intern_vertex("b");
    net.assert_evidence(a, "isA", b, {1, 0});
    const EvidenceMatrix snapshot = net.slice("isA");
    net.assert_evidence(a, "isA", b, {5, 0});
    CHECK(snapshot.at(a, b) == EvidenceTuple{1, 0});
}

TEST_CASE("the inheritance fixture stores four isA entries") {
    const EvidenceNetwork net = fixtures::inheritance_network();
    CHECK(net.slice("isA").entry_count() == 4);
    CHECK(net.vertex_count() == 5);
}

TEST_CASE("merge_slice replace and revise") {
    EvidenceNetwork net;
    const auto a = net.intern_vertex("a");
    const auto b = net.intern_vertex("b");
    net.assert_evidence(a, "isA", b, {2, 1});

    SUBCASE("revise with all-zero leaves the slice unchanged") {
        net.merge_slice("isA", EvidenceMatrix(2), EvidenceNetwork::MergeMode::revise);
        CHECK(net.slice("isA").at(a, b) == EvidenceTuple{2, 1});
    }
    SUBCASE("replace with all-zero empties the slice") {
        net.merge_slice("isA", EvidenceMatrix(2), EvidenceNetwork::MergeMode::replace);
        CHECK(net.slice("isA").entry_count() == 0);
        CHECK(net.predicates().empty());
    }
    SUBCASE("replace installs the new slice verbatim") {
        EvidenceMatrix m(2);
        m.set(1, 0, {7, 7});
        net.merge_slice("isA", m, EvidenceNetwork::MergeMode::replace);
        CHECK(net.slice("isA") == m);
    }
    SUBCASE("revise sums entrywise") {
        EvidenceMatrix m(2);
        m.set(0, 1, {1, 1});
        m.set(1, 1, {3, 0});
        net.merge_slice("isA", m, EvidenceNetwork::MergeMode::revise);
        CHECK(net.slice("isA").at(a, b) == EvidenceTuple{3, 2});
        CHECK(net.slice("isA").at(b, b) == EvidenceTuple{3, 0});
    }
    SUBCASE("dimension mismatch is rejected") {
        CHECK_THROWS_AS(
            net.merge_slice("isA", EvidenceMatrix(5), EvidenceNetwork::MergeMode::revise),
            std::invalid_argument);
    }
}

TEST_CASE("assert_evidence is order-insensitive for a fixed multiset") {
    std::mt19937 rng(21);
    std::uniform_real_distribution<double> dist(0.0, 10.0);
    struct Assertion {
        std::size_t s, o;
        EvidenceTuple e;
    };
    std::vector<Assertion> assertions;
    for (int i = 0; i < 40; ++i)
        assertions.push_back({rng() % 4, rng() % 4, {dist(rng), dist(rng)}});

    auto build = [&](const std::vector<Assertion>& order) {
        EvidenceNetwork net;
        for (const char* name : {"a", "b", "c", "d"}) net.intern_vertex(name);
        for (const auto& as : order) net.assert_evidence(as.s, "p", as.o, as.e);
        return net.slice("p");
    };

    const EvidenceMatrix forward = build(assertions);
    std::vector<Assertion> shuffled = assertions;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(approx_equal(forward, build(shuffled)));
}

TEST_CASE("no stored zeros and uniform dimension after random operations") {
    std::mt19937 rng(22);
    EvidenceNetwork net;
    for (const char* name : {"a", "b", "c", "d", "e"}) net.intern_vertex(name);
    net.assert_evidence(0, "p", 1, {1, 2});
    net.merge_slice("q", oracle::random_matrix(rng, 5, 0.4),
                    EvidenceNetwork::MergeMode::revise);
    net.merge_slice("p", oracle::random_matrix(rng, 5, 0.4),
                    EvidenceNetwork::MergeMode::replace);
    for (const std::string& label : net.predicates()) {
        const EvidenceMatrix m = net.slice(label);
        CHECK(m.dim() == net.vertex_count());
        m.for_each([](std::size_t, std::size_t, EvidenceTuple v) {
            CHECK_FALSE(v.is_zero());
        });
    }
}
