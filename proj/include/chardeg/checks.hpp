#pragma once

#include "chardeg/degree_table.hpp"
#include "chardeg/report.hpp"
#include "chardeg/spectrum.hpp"

#include <optional>
#include <string>
#include <vector>

namespace chardeg {

/// Everything the checks at one n need: the per-partition degrees and both
/// spectra (the A_n spectrum only for n >= 2).
class SpectrumContext {
public:
    explicit SpectrumContext(int n, const SpectrumOptions& options = {});

    int n() const { return table_.n(); }
    const DegreeTable& table() const { return table_; }
    const DegreeSpectrum& symmetric() const { return symmetric_; }
    const DegreeSpectrum& alternating() const;

private:
    DegreeTable table_;
    DegreeSpectrum symmetric_;
    std::optional<DegreeSpectrum> alternating_;
};

/// Sum of chi(1)^2 below b(S_n) > 2 b(S_n)^2. Domain n >= 7.
VerificationReport verify_theorem2(const SpectrumContext& ctx, bool override_domain = false);

/// Sum of psi(1)^2 below b(A_n) > b(A_n)^2. Domain n >= 5.
VerificationReport verify_theorem1(const SpectrumContext& ctx, bool override_domain = false);

/// b(S_n)/2 < b(A_n) <= b(S_n); the equality flag is a note. Domain n >= 5.
VerificationReport sandwich_check(const SpectrumContext& ctx, bool override_domain = false);

/// 1 < H(lambda_dn) H(lambda_up) / H(lambda)^2 < 4 over every lambda with
/// d(lambda) = 2. Domain n >= 4; at n = 3 the ratio of (2,1) is exactly 4.
VerificationReport ratio_lemma_check(const SpectrumContext& ctx, bool override_domain = false);

/// Sum of phi(1)^2 over the constituents of the induced-restricted
/// character of a maximizer that lie below b(S_n), against 2 b(S_n)^2; and,
/// when b(A_n) < b(S_n) is the second degree, the same for a member of M_2
/// against 2 b(A_n)^2. Outside the hypotheses under which the bound is
/// guaranteed a failing clause is reported as inconclusive.
VerificationReport induced_bound_check(const SpectrumContext& ctx, bool override_domain = false);

/// Scan every diagram reachable from a maximizer by moving one cell and test
/// the target inequality from that neighbourhood alone. Domain n >= 7 for S,
/// n >= 5 for A. A neighbourhood failure while the full theorem holds is
/// reported as inconclusive.
VerificationReport move_scan_verify(const SpectrumContext& ctx, Group group, bool override_domain = false);

/// epsilon(S_n) >= max{|M_1|/16, (n - sqrt(2n) - (|M_1|-1))^2 / (2n)} and the
/// three A_n bounds when b(A_n) < b(S_n) (else epsilon(A_n) >= epsilon(S_n)/2).
/// sqrt(2n) is replaced by a rational upper bound and negative bases are
/// clamped at 0, which only weakens the bounds. Domain n >= 5.
VerificationReport epsilon_lower_bounds(const SpectrumContext& ctx, bool override_domain = false);

enum class CheckKind {
    Theorem1,
    Theorem2,
    Sandwich,
    RatioLemma,
    CountLemmas,
    MoveScanS,
    MoveScanA,
    InducedBound,
    EpsilonBounds,
    GraphStructure,
};

std::string to_string(CheckKind kind);

/// Smallest n in the stated domain of the check.
int domain_start(CheckKind kind);

/// Expands a check-set name ("theorem1", "move-scan", "all", ...).
std::vector<CheckKind> parse_check_set(std::string_view name);

VerificationReport run_check(const SpectrumContext& ctx, CheckKind kind, bool override_domain = false);

}  // namespace chardeg
