#include "chardeg/report.hpp"

#include <algorithm>

namespace chardeg {

std::string to_string(Relation rel) {
    switch (rel) {
        case Relation::Less: return "<";
        case Relation::LessEqual: return "<=";
        case Relation::Greater: return ">";
        case Relation::GreaterEqual: return ">=";
        case Relation::Equal: return "==";
    }
    return "?";
}

Relation parse_relation(std::string_view text) {
    for (auto rel : {Relation::Less, Relation::LessEqual, Relation::Greater, Relation::GreaterEqual,
                     Relation::Equal}) {
        if (to_string(rel) == text) {
            return rel;
        }
    }
    throw std::invalid_argument("unknown relation '" + std::string(text) + "'");
}

bool Inequality::holds() const {
    const int c = cmp(left, right);
    switch (relation) {
        case Relation::Less: return c < 0;
        case Relation::LessEqual: return c <= 0;
        case Relation::Greater: return c > 0;
        case Relation::GreaterEqual: return c >= 0;
        case Relation::Equal: return c == 0;
    }
    return false;
}

std::string to_string(Status status) {
    switch (status) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Inconclusive: return "inconclusive-at-this-n";
        case Status::Informational: return "informational";
    }
    return "?";
}

Status parse_status(std::string_view text) {
    for (auto s : {Status::Pass, Status::Fail, Status::Inconclusive, Status::Informational}) {
        if (to_string(s) == text) {
            return s;
        }
    }
    throw std::invalid_argument("unknown status '" + std::string(text) + "'");
}

bool VerificationReport::holds() const {
    return std::all_of(clauses.begin(), clauses.end(), [](const Inequality& c) { return c.holds(); });
}

void VerificationReport::settle() { status = holds() ? Status::Pass : Status::Fail; }

}  // namespace chardeg
