#pragma once

#include "chardeg/numeric.hpp"
#include "chardeg/partition.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chardeg {

enum class Relation { Less, LessEqual, Greater, GreaterEqual, Equal };

std::string to_string(Relation rel);
Relation parse_relation(std::string_view text);

/// One exact inequality `left rel right`, evaluated on demand.
struct Inequality {
    std::string label;
    BigRational left;
    Relation relation = Relation::Greater;
    BigRational right;

    bool holds() const;
};

enum class Status {
    Pass,
    Fail,
    /// The method used for this check does not settle it at this n, though
    /// nothing is contradicted.
    Inconclusive,
    /// Evaluated outside the stated domain; never affects the outcome of a run.
    Informational,
};

std::string to_string(Status status);
Status parse_status(std::string_view text);

/// Thrown when a check is requested outside its stated range of n.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct VerificationReport {
    std::string check;
    int n = 0;
    Status status = Status::Fail;
    std::vector<Inequality> clauses;
    std::vector<Partition> witnesses;
    std::vector<std::pair<std::string, std::string>> notes;
    double elapsed_ms = 0.0;

    /// Conjunction of all clauses, recomputed from the stored values.
    bool holds() const;

    /// True unless the status is Fail.
    bool acceptable() const { return status != Status::Fail; }

    void note(std::string key, std::string value) { notes.emplace_back(std::move(key), std::move(value)); }

    /// Sets status to Pass or Fail from holds().
    void settle();
};

}  // namespace chardeg
