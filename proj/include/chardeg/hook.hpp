#pragma once

#include "chardeg/numeric.hpp"
#include "chardeg/partition.hpp"

#include <optional>
#include <unordered_map>
#include <vector>

namespace chardeg {

/// Arm + leg + 1 of a cell. Throws std::invalid_argument for a cell outside
/// the diagram.
int hook_length(const Partition& lambda, Node node);

/// Product of all hook lengths; 1 for the empty partition.
BigNat hook_product(const Partition& lambda);

/// n! / H(lambda). Throws std::logic_error if the division is not exact.
BigNat degree_sn(const Partition& lambda);

/// Irreducible A_n characters arising from one S_n character (or a conjugate
/// pair of them).
struct AnDegreeEntry {
    BigNat degree;
    int count = 1;

    friend bool operator==(const AnDegreeEntry&, const AnDegreeEntry&) = default;
};

/// For a self-conjugate lambda of n >= 2 the S_n degree is halved and counted
/// twice; otherwise it is passed through once. For n <= 1 the trivial group
/// gets a single entry of degree 1.
std::vector<AnDegreeEntry> degrees_an(const Partition& lambda);

/// Counts standard Young tableaux by peeling removable corners:
/// f(lambda) = sum over corners r of f(lambda \ r), f(()) = 1.
/// The memo table is owned by the instance; use one instance per thread.
class SytCounter {
public:
    BigNat count(const Partition& lambda);
    std::size_t memo_size() const { return memo_.size(); }

private:
    std::unordered_map<Partition, BigNat, PartitionHash> memo_;
};

BigNat syt_count_oracle(const Partition& lambda);

/// H(lambda_dn) H(lambda_up) / H(lambda)^2, defined iff both moves exist.
std::optional<BigRational> up_dn_ratio(const Partition& lambda);

}  // namespace chardeg
