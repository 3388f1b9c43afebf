#include "chardeg/branch.hpp"
#include "chardeg/checks.hpp"
#include "chardeg/spectrum.hpp"

#include <doctest.h>

#include <set>

using namespace chardeg;

namespace {

Partition P(std::string_view text) { return Partition::parse(text); }

std::vector<std::pair<BigNat, std::uint64_t>> pairs(const DegreeSpectrum& s) {
    std::vector<std::pair<BigNat, std::uint64_t>> out;
    for (const auto& c : s.classes) {
        out.emplace_back(c.degree, c.multiplicity);
    }
    return out;
}

using Pairs = std::vector<std::pair<BigNat, std::uint64_t>>;

const Inequality* clause(const VerificationReport& r, std::string_view prefix) {
    for (const auto& c : r.clauses) {
        if (c.label.rfind(prefix, 0) == 0) {
            return &c;
        }
    }
    return nullptr;
}

}  // namespace

TEST_CASE("S_n spectra") {
    const auto s5 = spectrum_sn(5);
    CHECK(pairs(s5) == Pairs{{6, 1}, {5, 2}, {4, 2}, {1, 2}});
    CHECK(s5.largest() == 6);
    CHECK(s5.classes[0].members == std::vector<Partition>{P("3,1,1")});

    const auto s7 = spectrum_sn(7);
    CHECK(s7.largest() == 35);
    CHECK(s7.classes[0].multiplicity == 2);

    CHECK(pairs(spectrum_sn(1)) == Pairs{{1, 1}});
    CHECK_THROWS_AS(spectrum_sn(0), std::invalid_argument);
    CHECK_THROWS_AS(spectrum_sn(61), ResourceGuardError);
}

TEST_CASE("A_n spectra") {
    const auto a5 = spectrum_an(5);
    CHECK(pairs(a5) == Pairs{{5, 1}, {4, 1}, {3, 2}, {1, 1}});
    CHECK(spectrum_an(6).largest() == 10);
    CHECK(pairs(spectrum_an(2)) == Pairs{{1, 1}});
    CHECK_THROWS_AS(spectrum_an(1), std::invalid_argument);
}

TEST_CASE("epsilon") {
    CHECK(epsilon(spectrum_sn(5)) == BigRational(7, 3));
    CHECK(epsilon(spectrum_an(5)) == BigRational(7, 5));
    CHECK(epsilon(spectrum_sn(4)) == BigRational(2, 3));
    CHECK(epsilon(spectrum_an(6)) == BigRational(13, 5));
}

TEST_CASE("mass validation rejects a tampered spectrum") {
    auto s = spectrum_sn(6);
    CHECK_NOTHROW(validate_mass(s));
    s.classes.back().multiplicity += 1;
    CHECK_THROWS_AS(validate_mass(s), std::logic_error);
}

TEST_CASE("member lists are capped above the configured n") {
    SpectrumOptions options;
    options.store_members_up_to = 8;
    const auto s = spectrum_sn(10, options);
    CHECK_FALSE(s.members_complete);
    CHECK_FALSE(s.classes[0].members.empty());
    CHECK_FALSE(s.classes[1].members.empty());
    CHECK(s.classes[2].members.empty());
}

TEST_CASE("property: spectrum mass equals the group order") {
    for (int n = 1; n <= 50; ++n) {
        const DegreeTable table(n);
        const auto s = spectrum_sn(table);
        REQUIRE(s.mass() == factorial(static_cast<unsigned>(n)));
        if (n >= 2) {
            const auto a = spectrum_an(table);
            REQUIRE(a.mass() == factorial(static_cast<unsigned>(n)) / 2);
        }
    }
}

TEST_CASE("theorem checks at small n") {
    const SpectrumContext c5(5), c6(6), c7(7), c8(8), c9(9);
    const auto t7 = verify_theorem2(c7);
    CHECK(t7.status == Status::Pass);
    REQUIRE(t7.clauses.size() == 1);
    CHECK(t7.clauses[0].left == 2590);
    CHECK(t7.clauses[0].right == 2450);
    CHECK(verify_theorem2(c8).status == Status::Pass);
    CHECK_THROWS_AS(verify_theorem2(c6), DomainError);
    CHECK(verify_theorem2(c6, true).status == Status::Informational);

    const auto t5 = verify_theorem1(c5);
    CHECK(t5.status == Status::Pass);
    CHECK(t5.clauses[0].left == 35);
    CHECK(t5.clauses[0].right == 25);
    CHECK(verify_theorem1(c6).status == Status::Pass);
    CHECK(verify_theorem1(c9).status == Status::Pass);
    CHECK_THROWS_AS(verify_theorem1(SpectrumContext(4)), DomainError);
}

TEST_CASE("sandwich") {
    const auto s5 = sandwich_check(SpectrumContext(5));
    CHECK(s5.status == Status::Pass);
    CHECK(s5.clauses[0].left == 10);
    CHECK(s5.clauses[0].right == 6);
    const auto s6 = sandwich_check(SpectrumContext(6));
    CHECK(s6.clauses[0].left == 20);
    CHECK(s6.clauses[0].right == 16);
    const auto s7 = sandwich_check(SpectrumContext(7));
    CHECK(s7.status == Status::Pass);
    bool equality = false;
    for (const auto& [k, v] : s7.notes) {
        equality = equality || (k.find("equal") != std::string::npos && v == "true");
    }
    CHECK(equality);
}

TEST_CASE("ratio lemma boundary") {
    const auto r3 = ratio_lemma_check(SpectrumContext(3), true);
    CHECK(r3.status == Status::Informational);
    CHECK_FALSE(r3.holds());
    CHECK(r3.witnesses == std::vector<Partition>{P("2,1"), P("2,1")});
    const auto* upper = clause(r3, "max");
    REQUIRE(upper != nullptr);
    CHECK(upper->left == 4);
    CHECK_THROWS_AS(ratio_lemma_check(SpectrumContext(3)), DomainError);
    CHECK(ratio_lemma_check(SpectrumContext(4)).status == Status::Pass);
}

TEST_CASE("branch decompositions") {
    const auto d31 = branch_decompose(P("3,1"));
    CHECK(d31.self_multiplicity == 2);
    CHECK(d31.constituents == std::vector<Partition>{P("4"), P("2,2"), P("2,1,1")});
    CHECK(degree_identity_holds(d31));

    const auto d6 = branch_decompose(P("6"));
    CHECK(d6.self_multiplicity == 1);
    CHECK(d6.constituents == std::vector<Partition>{P("5,1")});

    const auto d22 = branch_decompose(P("2,2"));
    CHECK(d22.self_multiplicity == 1);
    CHECK(d22.constituents == std::vector<Partition>{P("3,1"), P("2,1,1")});
    CHECK(degree_identity_holds(d22));
    CHECK_THROWS_AS(branch_decompose(P("1")), std::invalid_argument);
}

TEST_CASE("property: branching identity and constituent bound for n <= 20") {
    for (int n = 2; n <= 20; ++n) {
        for (const auto& p : all_partitions(n)) {
            const auto d = branch_decompose(p);
            REQUIRE(degree_identity_holds(d));
            REQUIRE(d.distinct_count() < static_cast<std::size_t>(2 * n));
            const std::set<Partition> unique(d.constituents.begin(), d.constituents.end());
            REQUIRE(unique.size() == d.constituents.size());
            CHECK(unique.count(p) == 0);
        }
    }
}

TEST_CASE("induced bound") {
    const auto r7 = induced_bound_check(SpectrumContext(7));
    CHECK(r7.acceptable());
    const auto* s = clause(r7, "S:");
    REQUIRE(s != nullptr);
    CHECK(s->right == 2 * 35 * 35);
    CHECK(induced_bound_check(SpectrumContext(10)).acceptable());
}

TEST_CASE("move scans") {
    const SpectrumContext c5(5), c7(7), c9(9);
    const auto a5 = move_scan_verify(c5, Group::Alternating);
    CHECK(a5.status == Status::Pass);
    const auto* case1 = clause(a5, "chi_up");
    REQUIRE(case1 != nullptr);
    CHECK(case1->left == 32);
    CHECK(case1->right == 18);

    const auto s7 = move_scan_verify(c7, Group::Symmetric);
    CHECK(s7.acceptable());
    CHECK(s7.clauses[0].right == 2450);

    CHECK(move_scan_verify(c9, Group::Symmetric).status == Status::Pass);
    CHECK_THROWS_AS(move_scan_verify(SpectrumContext(6), Group::Symmetric), DomainError);
}

TEST_CASE("epsilon bounds") {
    const auto e5 = epsilon_lower_bounds(SpectrumContext(5));
    CHECK(e5.status == Status::Pass);
    const auto e6 = epsilon_lower_bounds(SpectrumContext(6));
    CHECK(e6.status == Status::Pass);
    bool x1 = false, y2 = false;
    for (const auto& [k, v] : e6.notes) {
        x1 = x1 || (k == "x" && v == "1");
        y2 = y2 || (k == "y" && v == "2");
    }
    CHECK(x1);
    CHECK(y2);
}

TEST_CASE("check-set parsing and domains") {
    CHECK(parse_check_set("all").size() == 10);
    CHECK(parse_check_set("move-scan").size() == 2);
    CHECK(parse_check_set("theorem1") == std::vector<CheckKind>{CheckKind::Theorem1});
    CHECK_THROWS_AS(parse_check_set("theorem9"), std::invalid_argument);
    CHECK(domain_start(CheckKind::Theorem2) == 7);
    CHECK(domain_start(CheckKind::Theorem1) == 5);
    CHECK(domain_start(CheckKind::RatioLemma) == 4);
    CHECK(run_check(SpectrumContext(7), CheckKind::Theorem2).check == "theorem2");
}

TEST_CASE("property: theorems, sandwich and epsilon bounds for n <= 40") {
    for (int n = 5; n <= 40; ++n) {
        const SpectrumContext ctx(n);
        INFO("n = " << n);
        if (n >= 7) {
            CHECK(verify_theorem2(ctx).status == Status::Pass);
        }
        CHECK(verify_theorem1(ctx).status == Status::Pass);
        CHECK(sandwich_check(ctx).status == Status::Pass);
        CHECK(epsilon_lower_bounds(ctx).status == Status::Pass);
        CHECK(ratio_lemma_check(ctx).status == Status::Pass);
    }
}

TEST_CASE("property: epsilon trend") {
    BigRational early_s = 0, early_a = 0;
    for (int n = 5; n <= 10; ++n) {
        const SpectrumContext ctx(n);
        early_s = std::max(early_s, epsilon(ctx.symmetric()));
        early_a = std::max(early_a, epsilon(ctx.alternating()));
    }
    for (int n = 30; n <= 40; ++n) {
        const SpectrumContext ctx(n);
        CHECK(epsilon(ctx.symmetric()) > early_s);
        CHECK(epsilon(ctx.alternating()) > early_a);
    }
}
