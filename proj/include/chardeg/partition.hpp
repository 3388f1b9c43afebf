#pragma once

#include "chardeg/numeric.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace chardeg {

/// A cell of a Young diagram, 1-based (row, column). Row i holds the
/// columns 1..parts[i-1].
struct Node {
    int row = 0;
    int column = 0;

    auto operator<=>(const Node&) const = default;
};

/// Addable or removable corner cells, sorted by row.
using NodeSet = std::vector<Node>;

/// A weakly decreasing sequence of positive parts. The empty sequence is the
/// unique partition of 0.
///
/// Ordering is lexicographic on the parts, so among partitions of the same n
/// `a > b` means `a` precedes `b` in the enumeration order (4) > (3,1) > ...
class Partition {
public:
    Partition() = default;

    /// Throws std::invalid_argument unless the parts are positive and weakly
    /// decreasing. Parts are never reordered.
    explicit Partition(std::vector<int> parts);

    /// Comma-separated parts with optional exponent shorthand, e.g. "3,1^2".
    static Partition parse(std::string_view text);

    std::span<const int> parts() const { return parts_; }
    int n() const { return n_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// 1-based row length, 0 past the last row.
    int row(int i) const {
        return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
    }

    bool contains(Node node) const {
        return node.row >= 1 && node.column >= 1 && node.column <= row(node.row);
    }

    /// Canonical text, e.g. "4,2,1". The separator is configurable for CSV.
    std::string to_string(char separator = ',') const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int n_ = 0;
};

struct PartitionHash {
    std::size_t operator()(const Partition& p) const noexcept;
};

Partition conjugate(const Partition& lambda);
bool is_self_conjugate(const Partition& lambda);

NodeSet addable_nodes(const Partition& lambda);
NodeSet removable_nodes(const Partition& lambda);

/// The partition with `node` added (must be addable) or removed (must be
/// removable). Throws std::invalid_argument otherwise.
Partition add_node(const Partition& lambda, Node node);
Partition remove_node(const Partition& lambda, Node node);

/// Remove a trailing part 1 and increment the first part. Defined iff there
/// are at least two parts and the last one is 1.
std::optional<Partition> lambda_up(const Partition& lambda);

/// Decrement the first part and append a part 1. Defined iff
/// lambda_1 > lambda_2 (lambda_2 = 0 for one row) and lambda_1 >= 2.
std::optional<Partition> lambda_dn(const Partition& lambda);

/// Move the last cell of row `from` to the end of row `to` (1-based rows,
/// `to` may be length()+1). Absent when the move does not yield a partition.
/// Throws std::invalid_argument on from == to or rows out of range.
std::optional<Partition> move_node(const Partition& lambda, int from, int to);

/// For lambda_1 = ... = lambda_s = t > lambda_{s+1} with s >= 2 and t >= 2:
/// increment lambda_1 and decrement lambda_s. Absent whenever lambda_dn exists
/// or lambda is a single column.
std::optional<Partition> lambda_to_1(const Partition& lambda);

/// Number of partitions of n, by the pentagonal-number recurrence.
BigNat count_partitions(int n);

/// Yields the partitions of n in descending lexicographic order,
/// from (n) to (1^n).
class PartitionEnumerator {
public:
    explicit PartitionEnumerator(int n);

    /// The next partition, or nullopt once the stream is exhausted.
    std::optional<Partition> next();

private:
    std::vector<int> current_;
    bool started_ = false;
    bool done_ = false;
};

std::vector<Partition> all_partitions(int n);

}  // namespace chardeg
