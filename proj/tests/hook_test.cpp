#include "chardeg/degree_table.hpp"
#include "chardeg/hook.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace chardeg;

namespace {

Partition P(std::string_view text) { return Partition::parse(text); }

}  // namespace

TEST_CASE("hook lengths") {
    CHECK(hook_length(P("2,1"), {1, 1}) == 3);
    CHECK(hook_length(P("7"), {1, 1}) == 7);
    CHECK(hook_length(P("3,2"), {1, 1}) == 4);
    CHECK(hook_length(P("3,2"), {2, 2}) == 1);
    CHECK_THROWS_AS(hook_length(P("3,2"), {2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(hook_length(P("3,2"), {0, 1}), std::invalid_argument);

    for (int n = 1; n <= 12; ++n) {
        for (const auto& p : all_partitions(n)) {
            const auto cells = oracle::cells_of(oracle::parts(p));
            for (const auto& [r, c] : cells) {
                CHECK(hook_length(p, {r, c}) == oracle::hook(cells, r, c));
            }
        }
    }
}

TEST_CASE("hook products") {
    CHECK(hook_product(Partition()) == 1);
    CHECK(hook_product(P("1")) == 1);
    CHECK(hook_product(P("2,1")) == 3);
    CHECK(hook_product(P("3,2")) == 24);
    for (int n = 1; n <= 16; ++n) {
        for (const auto& p : all_partitions(n)) {
            CHECK(hook_product(p) == oracle::hook_product(oracle::parts(p)));
        }
    }
}

TEST_CASE("S_n degrees") {
    CHECK(degree_sn(P("5")) == 1);
    CHECK(degree_sn(P("3,1,1")) == 6);
    CHECK(degree_sn(P("3,2")) == 5);
    CHECK(degree_sn(P("1^5")) == 1);
    CHECK(degree_sn(Partition()) == 1);
    CHECK(degree_sn(P("4,2,1")) == 35);
    CHECK(degree_sn(P("3,2,1")) == 16);
}

TEST_CASE("A_n degrees") {
    CHECK(degrees_an(P("4,1")) == std::vector<AnDegreeEntry>{{4, 1}});
    CHECK(degrees_an(P("3,1,1")) == std::vector<AnDegreeEntry>{{3, 2}});
    CHECK(degrees_an(P("1")) == std::vector<AnDegreeEntry>{{1, 1}});
    CHECK(degrees_an(P("3,2,1")) == std::vector<AnDegreeEntry>{{8, 2}});
    CHECK(degrees_an(P("1,1")) == std::vector<AnDegreeEntry>{{1, 1}});
}

TEST_CASE("SYT counts") {
    CHECK(syt_count_oracle(P("6")) == 1);
    CHECK(syt_count_oracle(P("2,1")) == 2);
    CHECK(syt_count_oracle(P("2,2")) == 2);
    CHECK(syt_count_oracle(Partition()) == 1);
    SytCounter counter;
    CHECK(counter.count(P("3,2")) == 5);
    CHECK(counter.memo_size() > 0);
    for (int n = 1; n <= 9; ++n) {
        for (const auto& p : all_partitions(n)) {
            CHECK(syt_count_oracle(p) == oracle::syt_count(oracle::parts(p)));
        }
    }
}

TEST_CASE("up/dn hook ratios") {
    CHECK(up_dn_ratio(P("2,1")) == BigRational(4));
    CHECK(up_dn_ratio(P("3,1")) == BigRational(3));
    CHECK(up_dn_ratio(P("2,1,1")) == BigRational(3));
    CHECK_FALSE(up_dn_ratio(P("2,2")).has_value());
    CHECK_FALSE(up_dn_ratio(P("4")).has_value());
}

TEST_CASE("property: hook degrees equal SYT counts for n <= 18") {
    for (int n = 0; n <= 18; ++n) {
        SytCounter counter;
        for (const auto& p : all_partitions(n)) {
            REQUIRE(degree_sn(p) == counter.count(p));
        }
    }
}

TEST_CASE("property: conjugate partitions share a degree") {
    for (int n = 1; n <= 30; ++n) {
        const DegreeTable table(n);
        for (std::size_t i = 0; i < table.size(); ++i) {
            const auto j = table.index_of(conjugate(table.partition(i)));
            REQUIRE(j.has_value());
            CHECK(table.degree(*j) == table.degree(i));
        }
    }
}

TEST_CASE("property: sum of squared degrees is n!") {
    for (int n = 0; n <= 50; ++n) {
        const DegreeTable table(n);
        BigNat total = 0;
        for (std::size_t i = 0; i < table.size(); ++i) {
            total += table.degree(i) * table.degree(i);
        }
        REQUIRE(total == factorial(static_cast<unsigned>(n)));
    }
}

TEST_CASE("property: A_n mass is n!/2") {
    for (int n = 2; n <= 40; ++n) {
        BigNat total = 0;
        for (const auto& p : all_partitions(n)) {
            if (p < conjugate(p)) {
                continue;
            }
            for (const auto& e : degrees_an(p)) {
                total += e.count * e.degree * e.degree;
            }
        }
        REQUIRE(total == factorial(static_cast<unsigned>(n)) / 2);
    }
}

TEST_CASE("property: ratio bounds") {
    REQUIRE(all_partitions(3).size() == 3);
    for (const auto& p : all_partitions(3)) {
        if (auto r = up_dn_ratio(p)) {
            CHECK(p == P("2,1"));
            CHECK(*r == 4);
        }
    }
    for (int n = 4; n <= 40; ++n) {
        for (const auto& p : all_partitions(n)) {
            if (auto r = up_dn_ratio(p)) {
                REQUIRE(*r > 1);
                REQUIRE(*r < 4);
            }
        }
    }
}

TEST_CASE("property: the move to row one raises the degree") {
    for (int n = 2; n <= 30; ++n) {
        const DegreeTable table(n);
        for (std::size_t i = 0; i < table.size(); ++i) {
            if (auto q = lambda_to_1(table.partition(i))) {
                CHECK(table.degree(*table.index_of(*q)) > table.degree(i));
            }
        }
    }
}

TEST_CASE("degree table classes") {
    const DegreeTable table(5);
    CHECK(table.size() == 7);
    CHECK(table.distinct_degrees() == std::vector<BigNat>{6, 5, 4, 1});
    CHECK(table.class_size(0) == 1);
    CHECK(table.class_size(1) == 2);
    CHECK(table.members_above(0) == 0);
    CHECK(table.members_above(2) == 3);
    CHECK(table.members_above(4) == 7);
    CHECK(table.class_of_degree(5) == 1u);
    CHECK_FALSE(table.class_of_degree(2).has_value());
    CHECK(table.partition(table.class_members(0).front()) == P("3,1,1"));
    CHECK_THROWS_AS(DegreeTable(61), ResourceGuardError);
    CHECK_NOTHROW(DegreeTable(3, ComputeOptions{1, 3}));
}
