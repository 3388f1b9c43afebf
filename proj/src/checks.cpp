#include "chardeg/checks.hpp"

#include "chardeg/branch.hpp"
#include "chardeg/graph.hpp"
#include "chardeg/hook.hpp"

#include <chrono>
#include <set>

namespace chardeg {

SpectrumContext::SpectrumContext(int n, const SpectrumOptions& options)
    : table_(n, options.compute), symmetric_(spectrum_sn(table_, options.store_members_up_to)) {
    if (n >= 2) {
        alternating_ = spectrum_an(table_, options.store_members_up_to);
    }
}

const DegreeSpectrum& SpectrumContext::alternating() const {
    if (!alternating_) {
        throw std::invalid_argument("A_n spectrum needs n >= 2");
    }
    return *alternating_;
}

namespace {

using Clock = std::chrono::steady_clock;

class Timer {
public:
    double ms() const { return std::chrono::duration<double, std::milli>(Clock::now() - start_).count(); }

private:
    Clock::time_point start_ = Clock::now();
};

/// Returns true when the check runs outside its domain under the override.
bool enter_domain(const std::string& check, int n, int start, bool override_domain) {
    if (n >= start) {
        return false;
    }
    if (!override_domain) {
        throw DomainError(check + " is stated for n >= " + std::to_string(start) + ", got n = " +
                          std::to_string(n) + " (use --override-domain to evaluate anyway)");
    }
    return true;
}

VerificationReport start_report(std::string check, int n) {
    VerificationReport report;
    report.check = std::move(check);
    report.n = n;
    return report;
}

void finish(VerificationReport& report, bool informational, const Timer& timer) {
    if (informational) {
        report.status = Status::Informational;
        report.note("domain", "outside stated range; informational only");
    }
    report.elapsed_ms = timer.ms();
}

BigRational nat(const BigNat& v) { return BigRational(v); }

BigNat square(const BigNat& v) { return v * v; }

const BigNat& degree_of(const DegreeTable& table, const Partition& p) {
    return table.degree(*table.index_of(p));
}

/// Sum of squared degrees of the distinct irreducible constituents of
/// (chi_lambda restricted)^induced that lie strictly below `ceiling`.
BigNat constituent_sum_below(const DegreeTable& table, const Partition& lambda, const BigNat& ceiling) {
    BigNat sum = 0;
    if (degree_of(table, lambda) < ceiling) {
        sum += square(degree_of(table, lambda));
    }
    for (const auto& q : moved_node_partitions(lambda)) {
        const auto& d = degree_of(table, q);
        if (d < ceiling) {
            sum += square(d);
        }
    }
    return sum;
}

/// Moved-node neighbourhood of lambda: squared S_n degrees below `ceiling`,
/// skipping degrees equal to `excluded`.
BigNat neighbourhood_sum_sn(const DegreeTable& table, const Partition& lambda, const BigNat& excluded) {
    BigNat sum = 0;
    for (const auto& q : moved_node_partitions(lambda)) {
        const auto& d = degree_of(table, q);
        if (d != excluded) {
            sum += square(d);
        }
    }
    return sum;
}

/// Moved-node neighbourhood of lambda seen in A_n: each conjugate pair is one
/// character, a self-conjugate diagram two of half degree. Only A_n degrees
/// strictly below `ceiling` are summed.
BigNat neighbourhood_sum_an(const DegreeTable& table, const Partition& lambda, const BigNat& ceiling) {
    std::set<Partition> seen;
    BigNat sum = 0;
    for (const auto& q : moved_node_partitions(lambda)) {
        const Partition q_bar = conjugate(q);
        if (!seen.insert(std::max(q, q_bar)).second) {
            continue;
        }
        BigNat d = degree_of(table, q);
        int count = 1;
        if (q == q_bar) {
            d /= 2;
            count = 2;
        }
        if (d < ceiling) {
            sum += square(d) * count;
        }
    }
    return sum;
}

/// A rational upper bound of sqrt(2n) good to 1e-6.
BigRational sqrt_2n(int n) { return sqrt_upper_bound(BigNat(2 * n)); }

BigRational clamp_zero(const BigRational& v) { return v < 0 ? BigRational(0) : v; }

/// ((n - sqrt(2n) - offset) / sqrt(2n))^2 with sqrt(2n) rounded up and a
/// negative base clamped to 0, so the value never exceeds the true bound.
BigRational cauchy_schwarz_factor(int n, int offset) {
    const BigRational s = sqrt_2n(n);
    const BigRational base = clamp_zero(BigRational(n) - s - offset);
    const BigRational ratio = base / s;
    return ratio * ratio;
}

std::vector<Partition> class_partitions(const DegreeTable& table, std::size_t r) {
    std::vector<Partition> out;
    for (auto i : table.class_members(r)) {
        out.push_back(table.partition(i));
    }
    return out;
}

}  // namespace

VerificationReport verify_theorem2(const SpectrumContext& ctx, bool override_domain) {
    Timer timer;
    const bool informational = enter_domain("theorem2", ctx.n(), 7, override_domain);
    auto report = start_report("theorem2", ctx.n());
    const auto& s = ctx.symmetric();
    const BigNat& b = s.largest();
    report.clauses.push_back({"sum of chi(1)^2 below b(S_n) > 2 b(S_n)^2", nat(s.mass_below_largest()),
                              Relation::Greater, nat(2 * square(b))});
    report.witnesses = class_partitions(ctx.table(), 0);
    report.note("b(S_n)", to_string(b));
    report.note("|M_1|", std::to_string(s.classes.front().multiplicity));
    report.settle();
    finish(report, informational, timer);
    return report;
}

VerificationReport verify_theorem1(const SpectrumContext& ctx, bool override_domain) {
    Timer timer;
    const bool informational = enter_domain("theorem1", ctx.n(), 5, override_domain);
    auto report = start_report("theorem1", ctx.n());
    const auto& a = ctx.alternating();
    const BigNat& b = a.largest();
    report.clauses.push_back({"sum of psi(1)^2 below b(A_n) > b(A_n)^2", nat(a.mass_below_largest()),
                              Relation::Greater, nat(square(b))});
    report.witnesses = a.classes.front().members;
    report.note("b(A_n)", to_string(b));
    report.settle();
    finish(report, informational, timer);
    return report;
}

VerificationReport sandwich_check(const SpectrumContext& ctx, bool override_domain) {
    Timer timer;
    const bool informational = enter_domain("sandwich", ctx.n(), 5, override_domain);
    auto report = start_report("sandwich", ctx.n());
    const BigNat& bs = ctx.symmetric().largest();
    const BigNat& ba = ctx.alternating().largest();
    report.clauses.push_back({"2 b(A_n) > b(S_n)", nat(2 * ba), Relation::Greater, nat(bs)});
    report.clauses.push_back({"b(A_n) <= b(S_n)", nat(ba), Relation::LessEqual, nat(bs)});
    report.note("b(S_n)", to_string(bs));
    report.note("b(A_n)", to_string(ba));
    report.note("equality", ba == bs ? "true" : "false");
    report.settle();
    finish(report, informational, timer);
    return report;
}

VerificationReport ratio_lemma_check(const SpectrumContext& ctx, bool override_domain) {
    Timer timer;
    const bool informational = enter_domain("ratio-lemma", ctx.n(), 4, override_domain);
    auto report = start_report("ratio-lemma", ctx.n());
    const auto& table = ctx.table();
    std::optional<BigRational> lowest, highest;
    std::optional<std::size_t> lowest_at, highest_at;
    std::uint64_t considered = 0;
    for (std::size_t i = 0; i < table.size(); ++i) {
        const Partition& lambda = table.partition(i);
        auto up = lambda_up(lambda);
        auto dn = lambda_dn(lambda);
        if (!up || !dn) {
            continue;
        }
        ++considered;
        // H = n!/chi, so H(dn) H(up) / H^2 = chi^2 / (chi(dn) chi(up)).
        const BigRational ratio =
            make_rational(square(table.degree(i)), degree_of(table, *dn) * degree_of(table, *up));
        if (!lowest || ratio < *lowest) {
            lowest = ratio;
            lowest_at = i;
        }
        if (!highest || ratio > *highest) {
            highest = ratio;
            highest_at = i;
        }
    }
    if (lowest) {
        report.clauses.push_back({"min ratio > 1", *lowest, Relation::Greater, BigRational(1)});
        report.clauses.push_back({"max ratio < 4", *highest, Relation::Less, BigRational(4)});
        report.witnesses = {table.partition(*lowest_at), table.partition(*highest_at)};
        if (*highest == 4) {
            report.note("boundary", "ratio 4 attained by (" + table.partition(*highest_at).to_string() + ")");
        }
    }
    report.note("vertices_with_d_2", std::to_string(considered));
    report.settle();
    finish(report, informational, timer);
    return report;
}

VerificationReport induced_bound_check(const SpectrumContext& ctx, bool override_domain) {
    Timer timer;
    const bool informational = enter_domain("induced-bound", ctx.n(), 5, override_domain);
    auto report = start_report("induced-bound", ctx.n());
    const auto& table = ctx.table();
    const int n = ctx.n();
    const BigNat& bs = ctx.symmetric().largest();
    const BigNat& ba = ctx.alternating().largest();
    const std::size_t m1 = table.class_size(0);

    // Any maximizer may serve; keep the best and record them all.
    std::optional<BigNat> best;
    std::size_t best_at = 0;
    for (auto i : table.class_members(0)) {
        BigNat sum = constituent_sum_below(table, table.partition(i), bs);
        report.note("S sum for (" + table.partition(i).to_string() + ")", to_string(sum));
        if (!best || sum > *best) {
            best = sum;
            best_at = i;
        }
    }
    report.clauses.push_back({"S: constituent sum below b(S_n) > 2 b(S_n)^2", nat(*best), Relation::Greater,
                              nat(2 * square(bs))});
    report.witnesses.push_back(table.partition(best_at));
    const bool s_hypothesis = n >= 50 && m1 <= 31;
    report.note("S hypothesis (n >= 50, |M_1| <= 31)", s_hypothesis ? "true" : "false");
    report.note("S analytic factor lower bound", to_string(cauchy_schwarz_factor(n, 30)));

    bool a_hypothesis = false;
    const bool a_branch = ba < bs && m1 == 1 && table.class_count() > 1 && table.distinct_degrees()[1] == ba;
    if (a_branch) {
        std::optional<BigNat> best_a;
        std::size_t best_a_at = 0;
        for (auto i : table.class_members(1)) {
            BigNat sum = constituent_sum_below(table, table.partition(i), ba);
            if (!best_a || sum > *best_a) {
                best_a = sum;
                best_a_at = i;
            }
        }
        report.clauses.push_back({"A: constituent sum below b(A_n) > 2 b(A_n)^2", nat(*best_a),
                                  Relation::Greater, nat(2 * square(ba))});
        report.witnesses.push_back(table.partition(best_a_at));
        a_hypothesis = n >= 43 && table.class_size(1) <= 19;
        report.note("A hypothesis (n >= 43, |M_2| <= 19)", a_hypothesis ? "true" : "false");
        report.note("A analytic factor lower bound", to_string(cauchy_schwarz_factor(n, 20)));
    }
    report.note("A branch", a_branch ? "active" : "inactive");

    report.status = Status::Pass;
    for (std::size_t c = 0; c < report.clauses.size(); ++c) {
        if (report.clauses[c].holds()) {
            continue;
        }
        const bool guaranteed = c == 0 ? s_hypothesis : a_hypothesis;
        if (guaranteed) {
            report.status = Status::Fail;
        } else if (report.status == Status::Pass) {
            report.status = Status::Inconclusive;
        }
    }
    finish(report, informational, timer);
    return report;
}

VerificationReport move_scan_verify(const SpectrumContext& ctx, Group group, bool override_domain) {
    Timer timer;
    const std::string name = group == Group::Symmetric ? "move-scan-S" : "move-scan-A";
    const bool informational =
        enter_domain(name, ctx.n(), group == Group::Symmetric ? 7 : 5, override_domain);
    auto report = start_report(name, ctx.n());
    const auto& table = ctx.table();
    const BigNat& bs = ctx.symmetric().largest();
    const auto maximizers = class_partitions(table, 0);

    auto best_sn_scan = [&](const BigNat& target) {
        std::optional<BigNat> best;
        Partition best_lambda;
        for (const auto& lambda : maximizers) {
            BigNat sum = neighbourhood_sum_sn(table, lambda, bs);
            report.note("neighbourhood sum for (" + lambda.to_string() + ")", to_string(sum));
            if (!best || sum > *best) {
                best = sum;
                best_lambda = lambda;
            }
        }
        report.witnesses.push_back(best_lambda);
        return Inequality{"neighbourhood sum of non-maximal chi(1)^2 > 2 b^2", nat(*best), Relation::Greater,
                          nat(target)};
    };

    bool theorem_holds = false;
    if (group == Group::Symmetric) {
        report.clauses.push_back(best_sn_scan(2 * square(bs)));
        theorem_holds = ctx.symmetric().mass_below_largest() > 2 * square(bs);
    } else {
        const auto& a = ctx.alternating();
        const BigNat& ba = a.largest();
        theorem_holds = a.mass_below_largest() > square(ba);
        if (ba == bs) {
            // Restriction halves every sum of squares below b, so the S_n
            // neighbourhood must exceed 2 b(A_n)^2.
            report.note("case", "b(A_n) = b(S_n)");
            report.clauses.push_back(best_sn_scan(2 * square(ba)));
        } else if (maximizers.size() >= 2) {
            report.note("case", "several self-conjugate maximizers");
            report.clauses.push_back({"four characters of degree b(S_n)/2: b(S_n)^2 > b(A_n)^2", nat(square(bs)),
                                      Relation::Greater, nat(square(ba))});
            report.witnesses = maximizers;
        } else if (table.distinct_degrees()[1] > ba) {
            const BigNat& b2 = table.distinct_degrees()[1];
            report.note("case", "self-conjugate degree strictly between b(A_n) and b(S_n)");
            report.clauses.push_back({"(b(S_n)^2 + b_2^2)/2 > b(A_n)^2", make_rational(square(bs) + square(b2), 2),
                                      Relation::Greater, nat(square(ba))});
            report.witnesses = maximizers;
        } else {
            const Partition& lambda = maximizers.front();
            const auto up = lambda_up(lambda);
            const auto dn = lambda_dn(lambda);
            if (!up || !dn) {
                throw std::logic_error("maximizer (" + lambda.to_string() + ") lacks a graph neighbour");
            }
            const BigNat& chi_up = degree_of(table, *up);
            const BigNat& chi_dn = degree_of(table, *dn);
            const bool case_one = ba != chi_up && ba != chi_dn;
            report.note("case", case_one ? "1: b(A_n) is neither chi_up(1) nor chi_dn(1)"
                                         : "2: b(A_n) is chi_up(1) or chi_dn(1)");
            report.note("self-conjugate maximizer", is_self_conjugate(lambda) ? "true" : "false");
            report.note("chi_up(1)", to_string(chi_up));
            report.note("chi_dn(1)", to_string(chi_dn));
            if (case_one) {
                report.clauses.push_back({"chi_up(1)^2 + chi_dn(1)^2 > chi_lambda(1)^2 / 2",
                                          nat(square(chi_up) + square(chi_dn)), Relation::Greater,
                                          make_rational(square(bs), 2)});
            }
            // The two halves of chi_lambda lie below b(A_n) since b(S_n) < 2 b(A_n).
            BigRational total = nat(neighbourhood_sum_an(table, lambda, ba));
            if (bs < 2 * ba) {
                total += make_rational(square(bs), 2);
            }
            report.clauses.push_back(
                {"A_n degrees below b(A_n) in the neighbourhood: sum of squares > b(A_n)^2", total,
                 Relation::Greater, nat(square(ba))});
            report.witnesses = {lambda, *up, *dn};
        }
    }

    report.settle();
    if (!report.holds() && theorem_holds) {
        report.status = Status::Inconclusive;
        report.note("full spectrum", "theorem holds; the neighbourhood alone does not show it");
    }
    finish(report, informational, timer);
    return report;
}

VerificationReport epsilon_lower_bounds(const SpectrumContext& ctx, bool override_domain) {
    Timer timer;
    const bool informational = enter_domain("epsilon-bounds", ctx.n(), 5, override_domain);
    auto report = start_report("epsilon-bounds", ctx.n());
    const int n = ctx.n();
    const auto& s = ctx.symmetric();
    const auto& a = ctx.alternating();
    const BigRational eps_s = epsilon(s);
    const BigRational eps_a = epsilon(a);
    const BigRational root = sqrt_2n(n);
    const BigRational two_n(2 * n);
    const auto m1 = static_cast<long>(s.classes.front().multiplicity);

    report.clauses.push_back({"eps(S_n) >= |M_1|/16", eps_s, Relation::GreaterEqual, make_rational(m1, 16)});
    {
        const BigRational base = clamp_zero(BigRational(n) - root - (m1 - 1));
        report.clauses.push_back({"eps(S_n) >= (n - sqrt(2n) - (|M_1|-1))^2 / 2n", eps_s, Relation::GreaterEqual,
                                  base * base / two_n});
    }
    const BigNat& bs = s.largest();
    const BigNat& ba = a.largest();
    if (ba == bs) {
        report.clauses.push_back({"eps(A_n) >= eps(S_n)/2", eps_a, Relation::GreaterEqual, eps_s / 2});
    } else {
        const auto& table = ctx.table();
        const auto r = *table.class_of_degree(ba);
        const auto x = static_cast<long>(table.members_above(r));
        const auto y = static_cast<long>(table.class_size(r));
        report.note("x", std::to_string(x));
        report.note("y", std::to_string(y));
        report.clauses.push_back({"eps(A_n) >= x/2", eps_a, Relation::GreaterEqual, make_rational(x, 2)});
        report.clauses.push_back({"eps(A_n) >= (y - 4x)/32", eps_a, Relation::GreaterEqual,
                                  clamp_zero(make_rational(y - 4 * x, 32))});
        const BigRational base = clamp_zero(BigRational(n) - root - 2 * x - (y - 1));
        report.clauses.push_back({"eps(A_n) >= (n - sqrt(2n) - 2x - (y-1))^2 / 2n", eps_a, Relation::GreaterEqual,
                                  base * base / two_n});
    }
    report.note("eps(S_n)", to_string(eps_s));
    report.note("eps(A_n)", to_string(eps_a));
    report.note("sqrt(2n) upper bound", to_string(root));
    report.settle();
    finish(report, informational, timer);
    return report;
}

std::string to_string(CheckKind kind) {
    switch (kind) {
        case CheckKind::Theorem1: return "theorem1";
        case CheckKind::Theorem2: return "theorem2";
        case CheckKind::Sandwich: return "sandwich";
        case CheckKind::RatioLemma: return "ratio-lemma";
        case CheckKind::CountLemmas: return "count-lemmas";
        case CheckKind::MoveScanS: return "move-scan-S";
        case CheckKind::MoveScanA: return "move-scan-A";
        case CheckKind::InducedBound: return "induced-bound";
        case CheckKind::EpsilonBounds: return "epsilon-bounds";
        case CheckKind::GraphStructure: return "graph-structure";
    }
    return "?";
}

int domain_start(CheckKind kind) {
    switch (kind) {
        case CheckKind::Theorem1: return 5;
        case CheckKind::Theorem2: return 7;
        case CheckKind::Sandwich: return 5;
        case CheckKind::RatioLemma: return 4;
        case CheckKind::CountLemmas: return 1;
        case CheckKind::MoveScanS: return 7;
        case CheckKind::MoveScanA: return 5;
        case CheckKind::InducedBound: return 5;
        case CheckKind::EpsilonBounds: return 5;
        case CheckKind::GraphStructure: return 1;
    }
    return 1;
}

std::vector<CheckKind> parse_check_set(std::string_view name) {
    if (name == "all") {
        return {CheckKind::Theorem1,     CheckKind::Theorem2,    CheckKind::Sandwich,
                CheckKind::RatioLemma,   CheckKind::CountLemmas, CheckKind::MoveScanS,
                CheckKind::MoveScanA,    CheckKind::InducedBound, CheckKind::EpsilonBounds,
                CheckKind::GraphStructure};
    }
    if (name == "move-scan") {
        return {CheckKind::MoveScanS, CheckKind::MoveScanA};
    }
    if (name == "graph") {
        return {CheckKind::GraphStructure};
    }
    for (auto kind : parse_check_set("all")) {
        if (to_string(kind) == name) {
            return {kind};
        }
    }
    throw std::invalid_argument("unknown check '" + std::string(name) + "'");
}

VerificationReport run_check(const SpectrumContext& ctx, CheckKind kind, bool override_domain) {
    switch (kind) {
        case CheckKind::Theorem1: return verify_theorem1(ctx, override_domain);
        case CheckKind::Theorem2: return verify_theorem2(ctx, override_domain);
        case CheckKind::Sandwich: return sandwich_check(ctx, override_domain);
        case CheckKind::RatioLemma: return ratio_lemma_check(ctx, override_domain);
        case CheckKind::CountLemmas: return count_lemmas_check(ctx.table());
        case CheckKind::MoveScanS: return move_scan_verify(ctx, Group::Symmetric, override_domain);
        case CheckKind::MoveScanA: return move_scan_verify(ctx, Group::Alternating, override_domain);
        case CheckKind::InducedBound: return induced_bound_check(ctx, override_domain);
        case CheckKind::EpsilonBounds: return epsilon_lower_bounds(ctx, override_domain);
        case CheckKind::GraphStructure:
            return graph_structure_check(ctx.table(), PartitionGraph(ctx.table().partitions()));
    }
    throw std::invalid_argument("unknown check kind");
}

}  // namespace chardeg
