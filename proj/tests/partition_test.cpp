#include "chardeg/partition.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <unordered_set>

using namespace chardeg;

namespace {

Partition P(std::string_view text) { return Partition::parse(text); }

std::vector<Partition> stream(int n) {
    std::vector<Partition> out;
    PartitionEnumerator e(n);
    while (auto p = e.next()) {
        out.push_back(*p);
    }
    return out;
}

}  // namespace

TEST_CASE("parse reads plain parts and exponent shorthand") {
    CHECK(oracle::parts(P("3,1,1")) == std::vector<int>{3, 1, 1});
    CHECK(oracle::parts(P("1^5")) == std::vector<int>{1, 1, 1, 1, 1});
    CHECK(oracle::parts(P("2^3,1")) == std::vector<int>{2, 2, 2, 1});
    CHECK(oracle::parts(P(" 4, 2 ")) == std::vector<int>{4, 2});
    CHECK(P("").empty());
    CHECK(P("3,1,1").n() == 5);
    CHECK(P("3,1,1").to_string() == "3,1,1");
    CHECK(P("3,1,1").to_string(';') == "3;1;1");
}

TEST_CASE("parse rejects malformed text") {
    CHECK_THROWS_AS(P("1,3"), std::invalid_argument);
    CHECK_THROWS_AS(P("3,0"), std::invalid_argument);
    CHECK_THROWS_AS(P("3,-1"), std::invalid_argument);
    CHECK_THROWS_AS(P("3,a"), std::invalid_argument);
    CHECK_THROWS_AS(P("3,,1"), std::invalid_argument);
    CHECK_THROWS_AS(P("2^0"), std::invalid_argument);
    CHECK_THROWS_AS(Partition(std::vector<int>{1, 2}), std::invalid_argument);
}

TEST_CASE("row and contains use 1-based coordinates") {
    const auto p = P("3,1");
    CHECK(p.row(1) == 3);
    CHECK(p.row(2) == 1);
    CHECK(p.row(3) == 0);
    CHECK(p.row(0) == 0);
    CHECK(p.contains({1, 3}));
    CHECK_FALSE(p.contains({2, 2}));
    CHECK_FALSE(p.contains({0, 1}));
}

TEST_CASE("enumeration order and edge cases") {
    const auto zero = stream(0);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].empty());

    const std::vector<Partition> four{P("4"), P("3,1"), P("2,2"), P("2,1,1"), P("1^4")};
    CHECK(stream(4) == four);
    CHECK(all_partitions(4) == four);
    CHECK(stream(10).size() == 42);

    PartitionEnumerator e(3);
    for (int i = 0; i < 3; ++i) {
        CHECK(e.next().has_value());
    }
    CHECK_FALSE(e.next().has_value());
    CHECK_FALSE(e.next().has_value());
    CHECK_THROWS_AS(PartitionEnumerator(-1), std::invalid_argument);
}

TEST_CASE("enumeration matches the recursive oracle") {
    for (int n = 0; n <= 22; ++n) {
        const auto expected = oracle::partitions(n);
        const auto got = all_partitions(n);
        REQUIRE(got.size() == expected.size());
        for (std::size_t i = 0; i < got.size(); ++i) {
            CHECK(oracle::parts(got[i]) == expected[i]);
        }
    }
}

TEST_CASE("partition counts") {
    CHECK(count_partitions(0) == 1);
    CHECK(count_partitions(5) == 7);
    CHECK(count_partitions(10) == 42);
    CHECK(count_partitions(50) == 204226);
    CHECK(count_partitions(60) == 966467);
    CHECK(count_partitions(100) == BigNat("190569292"));
    CHECK(count_partitions(-1) == 0);
}

TEST_CASE("conjugate and self-conjugacy") {
    CHECK(conjugate(P("4,1")) == P("2,1,1,1"));
    CHECK(conjugate(P("3,1,1")) == P("3,1,1"));
    CHECK(conjugate(P("2,2")) == P("2,2"));
    CHECK(conjugate(Partition()) == Partition());
    CHECK(is_self_conjugate(P("3,1,1")));
    CHECK_FALSE(is_self_conjugate(P("4,1")));
    CHECK(is_self_conjugate(P("3,2,1")));
    for (int n = 0; n <= 14; ++n) {
        for (const auto& p : all_partitions(n)) {
            CHECK(oracle::parts(conjugate(p)) == oracle::conjugate(oracle::parts(p)));
        }
    }
}

TEST_CASE("addable and removable nodes") {
    CHECK(addable_nodes(Partition()) == NodeSet{{1, 1}});
    CHECK(addable_nodes(P("3,1")) == NodeSet{{1, 4}, {2, 2}, {3, 1}});
    CHECK(addable_nodes(P("2,2")).size() == 2);
    CHECK(removable_nodes(P("6")).size() == 1);
    CHECK(removable_nodes(P("3,1")) == NodeSet{{1, 3}, {2, 1}});
    CHECK(removable_nodes(P("2,2")) == NodeSet{{2, 2}});

    CHECK(add_node(P("3,1"), {2, 2}) == P("3,2"));
    CHECK(remove_node(P("3,1"), {1, 3}) == P("2,1"));
    CHECK_THROWS_AS(add_node(P("3,1"), {2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(remove_node(P("2,2"), {1, 2}), std::invalid_argument);
}

TEST_CASE("up, dn, moved node and the move to row one") {
    CHECK(lambda_up(P("3,1")) == P("4"));
    CHECK_FALSE(lambda_up(P("2,2")).has_value());
    CHECK(lambda_up(P("2,2,1")) == P("3,2"));
    CHECK_FALSE(lambda_up(P("1")).has_value());

    CHECK(lambda_dn(P("4")) == P("3,1"));
    CHECK_FALSE(lambda_dn(P("2,2")).has_value());
    CHECK(lambda_dn(P("3,1")) == P("2,1,1"));
    CHECK_FALSE(lambda_dn(P("1")).has_value());

    CHECK(move_node(P("3,1"), 1, 2) == P("2,2"));
    CHECK(move_node(P("3,1"), 2, 1) == P("4"));
    CHECK_FALSE(move_node(P("2,2"), 1, 2).has_value());
    CHECK(move_node(P("3,1"), 1, 3) == P("2,1,1"));
    CHECK_THROWS_AS(move_node(P("3,1"), 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(move_node(P("3,1"), 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(move_node(P("3,1"), 1, 4), std::invalid_argument);

    CHECK(lambda_to_1(P("2,2,1")) == P("3,1,1"));
    CHECK_FALSE(lambda_to_1(P("3,1")).has_value());
    CHECK(lambda_to_1(P("2,2")) == P("3,1"));
    CHECK_FALSE(lambda_to_1(P("1^4")).has_value());
}

TEST_CASE("property: up and dn are mutually inverse and swap under conjugation") {
    for (int n = 1; n <= 22; ++n) {
        for (const auto& p : all_partitions(n)) {
            if (auto up = lambda_up(p)) {
                REQUIRE(up->n() == n);
                CHECK(lambda_dn(*up) == p);
            }
            if (auto dn = lambda_dn(p)) {
                REQUIRE(dn->n() == n);
                CHECK(lambda_up(*dn) == p);
            }
            const auto c = conjugate(p);
            const auto up = lambda_up(p);
            const auto dn_c = lambda_dn(c);
            REQUIRE(up.has_value() == dn_c.has_value());
            if (up) {
                CHECK(conjugate(*up) == *dn_c);
            }
        }
    }
}

TEST_CASE("property: corner counts and bounds") {
    for (int n = 0; n <= 30; ++n) {
        for (const auto& p : all_partitions(n)) {
            const auto a = addable_nodes(p);
            const auto r = removable_nodes(p);
            CHECK(a.size() == r.size() + 1);
            const auto na = static_cast<int>(a.size());
            const auto nr = static_cast<int>(r.size());
            CHECK(na * na - na <= 2 * n);
            CHECK(nr * nr + nr <= 2 * n);
            if (n <= 12) {
                oracle::Cells oa, orr;
                for (auto x : a) {
                    oa.insert({x.row, x.column});
                }
                for (auto x : r) {
                    orr.insert({x.row, x.column});
                }
                CHECK(oa == oracle::addable(oracle::parts(p)));
                CHECK(orr == oracle::removable(oracle::parts(p)));
            }
        }
    }
}

TEST_CASE("property: enumeration length equals the partition count") {
    for (int n = 0; n <= 60; ++n) {
        std::size_t length = 0;
        PartitionEnumerator e(n);
        while (e.next()) {
            ++length;
        }
        CHECK(BigNat(static_cast<unsigned long>(length)) == count_partitions(n));
    }
}

TEST_CASE("property: moving a node equals removing one corner and adding another") {
    for (int n = 1; n <= 20; ++n) {
        for (const auto& p : all_partitions(n)) {
            std::set<Partition> via_moves;
            for (int from = 1; from <= p.length(); ++from) {
                for (int to = 1; to <= p.length() + 1; ++to) {
                    if (from == to) {
                        continue;
                    }
                    if (auto q = move_node(p, from, to)) {
                        CHECK(q->n() == n);
                        via_moves.insert(*q);
                    }
                }
            }
            std::set<Partition> via_corners;
            for (auto r : removable_nodes(p)) {
                const auto smaller = remove_node(p, r);
                for (auto a : addable_nodes(smaller)) {
                    if (a != r) {
                        via_corners.insert(add_node(smaller, a));
                    }
                }
            }
            CHECK(via_moves == via_corners);
        }
    }
}

TEST_CASE("property: the move to row one is injective and defined exactly off the dn domain") {
    for (int n = 2; n <= 30; ++n) {
        std::unordered_set<Partition, PartitionHash> images;
        for (const auto& p : all_partitions(n)) {
            const auto to1 = lambda_to_1(p);
            const bool single_column = p.row(1) == 1;
            CHECK(to1.has_value() == (!lambda_dn(p).has_value() && !single_column));
            if (to1) {
                CHECK(to1->n() == n);
                CHECK(images.insert(*to1).second);
            }
        }
    }
}
