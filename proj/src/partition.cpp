#include "chardeg/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace chardeg {

namespace {

int parse_positive(std::string_view token, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw std::invalid_argument(std::string("malformed ") + what + " '" + std::string(token) + "'");
    }
    if (value <= 0) {
        throw std::invalid_argument(std::string(what) + " must be positive, got '" + std::string(token) + "'");
    }
    return value;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) {
            throw std::invalid_argument("partition parts must be positive");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw std::invalid_argument("partition parts not weakly decreasing");
        }
    }
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) {
    std::string compact;
    for (char c : text) {
        if (c != ' ' && c != '\t' && c != '\n' && c != '\r') {
            compact.push_back(c);
        }
    }
    std::vector<int> parts;
    if (compact.empty()) {
        return Partition{};
    }
    std::string_view rest = compact;
    for (;;) {
        auto comma = rest.find(',');
        std::string_view token = rest.substr(0, comma);
        if (token.empty()) {
            throw std::invalid_argument("empty token in partition '" + std::string(text) + "'");
        }
        auto caret = token.find('^');
        if (caret == std::string_view::npos) {
            parts.push_back(parse_positive(token, "part"));
        } else {
            int part = parse_positive(token.substr(0, caret), "part");
            int exponent = parse_positive(token.substr(caret + 1), "exponent");
            parts.insert(parts.end(), static_cast<std::size_t>(exponent), part);
        }
        if (comma == std::string_view::npos) {
            break;
        }
        rest.remove_prefix(comma + 1);
    }
    return Partition(std::move(parts));
}

std::string Partition::to_string(char separator) const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) {
            out.push_back(separator);
        }
        out += std::to_string(parts_[i]);
    }
    return out;
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int part : p.parts()) {
        h ^= static_cast<std::size_t>(part);
        h *= 1099511628211ull;
    }
    return h;
}

Partition conjugate(const Partition& lambda) {
    std::vector<int> columns(static_cast<std::size_t>(lambda.row(1)), 0);
    for (int part : lambda.parts()) {
        for (int c = 0; c < part; ++c) {
            ++columns[static_cast<std::size_t>(c)];
        }
    }
    return Partition(std::move(columns));
}

bool is_self_conjugate(const Partition& lambda) { return conjugate(lambda) == lambda; }

NodeSet addable_nodes(const Partition& lambda) {
    NodeSet nodes;
    for (int i = 1; i <= lambda.length() + 1; ++i) {
        if (i == 1 || lambda.row(i - 1) > lambda.row(i)) {
            nodes.push_back({i, lambda.row(i) + 1});
        }
    }
    return nodes;
}

NodeSet removable_nodes(const Partition& lambda) {
    NodeSet nodes;
    for (int i = 1; i <= lambda.length(); ++i) {
        if (lambda.row(i) > lambda.row(i + 1)) {
            nodes.push_back({i, lambda.row(i)});
        }
    }
    return nodes;
}

Partition add_node(const Partition& lambda, Node node) {
    auto addable = addable_nodes(lambda);
    if (std::find(addable.begin(), addable.end(), node) == addable.end()) {
        throw std::invalid_argument("node is not addable");
    }
    std::vector<int> parts(lambda.parts().begin(), lambda.parts().end());
    if (node.row > lambda.length()) {
        parts.push_back(1);
    } else {
        ++parts[static_cast<std::size_t>(node.row - 1)];
    }
    return Partition(std::move(parts));
}

Partition remove_node(const Partition& lambda, Node node) {
    auto removable = removable_nodes(lambda);
    if (std::find(removable.begin(), removable.end(), node) == removable.end()) {
        throw std::invalid_argument("node is not removable");
    }
    std::vector<int> parts(lambda.parts().begin(), lambda.parts().end());
    if (--parts[static_cast<std::size_t>(node.row - 1)] == 0) {
        parts.pop_back();
    }
    return Partition(std::move(parts));
}

std::optional<Partition> lambda_up(const Partition& lambda) {
    if (lambda.length() < 2 || lambda.parts().back() != 1) {
        return std::nullopt;
    }
    std::vector<int> parts(lambda.parts().begin(), lambda.parts().end() - 1);
    ++parts.front();
    return Partition(std::move(parts));
}

std::optional<Partition> lambda_dn(const Partition& lambda) {
    if (lambda.row(1) < 2 || lambda.row(1) <= lambda.row(2)) {
        return std::nullopt;
    }
    std::vector<int> parts(lambda.parts().begin(), lambda.parts().end());
    --parts.front();
    parts.push_back(1);
    return Partition(std::move(parts));
}

std::optional<Partition> move_node(const Partition& lambda, int from, int to) {
    const int k = lambda.length();
    if (from == to) {
        throw std::invalid_argument("move_node: source and target rows coincide");
    }
    if (from < 1 || from > k || to < 1 || to > k + 1) {
        throw std::invalid_argument("move_node: row index out of range");
    }
    if (lambda.row(from) <= lambda.row(from + 1)) {
        return std::nullopt;
    }
    // Rows 1..k+1, padded with a trailing zero row.
    std::vector<int> rows(lambda.parts().begin(), lambda.parts().end());
    rows.push_back(0);
    --rows[static_cast<std::size_t>(from - 1)];
    auto at = [&](int i) { return i >= 1 && i <= k + 1 ? rows[static_cast<std::size_t>(i - 1)] : 0; };
    if (to > 1 && at(to - 1) <= at(to)) {
        return std::nullopt;
    }
    ++rows[static_cast<std::size_t>(to - 1)];
    while (!rows.empty() && rows.back() == 0) {
        rows.pop_back();
    }
    return Partition(std::move(rows));
}

std::optional<Partition> lambda_to_1(const Partition& lambda) {
    if (lambda.length() < 2 || lambda_dn(lambda)) {
        return std::nullopt;
    }
    const int t = lambda.row(1);
    if (t < 2) {
        return std::nullopt;
    }
    int s = 1;
    while (lambda.row(s + 1) == t) {
        ++s;
    }
    std::vector<int> parts(lambda.parts().begin(), lambda.parts().end());
    ++parts.front();
    --parts[static_cast<std::size_t>(s - 1)];
    return Partition(std::move(parts));
}

BigNat count_partitions(int n) {
    if (n < 0) {
        return 0;
    }
    std::vector<BigNat> p(static_cast<std::size_t>(n) + 1);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        BigNat sum = 0;
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2;
            if (g1 > m) {
                break;
            }
            const int g2 = k * (3 * k + 1) / 2;
            BigNat term = p[static_cast<std::size_t>(m - g1)];
            if (g2 <= m) {
                term += p[static_cast<std::size_t>(m - g2)];
            }
            if (k % 2 == 1) {
                sum += term;
            } else {
                sum -= term;
            }
        }
        p[static_cast<std::size_t>(m)] = sum;
    }
    return p[static_cast<std::size_t>(n)];
}

PartitionEnumerator::PartitionEnumerator(int n) {
    if (n < 0) {
        throw std::invalid_argument("cannot enumerate partitions of a negative integer");
    }
    if (n > 0) {
        current_.push_back(n);
    }
}

std::optional<Partition> PartitionEnumerator::next() {
    if (done_) {
        return std::nullopt;
    }
    if (!started_) {
        started_ = true;
        return Partition(current_);
    }
    // Rightmost part larger than 1.
    std::size_t i = current_.size();
    while (i > 0 && current_[i - 1] == 1) {
        --i;
    }
    if (i == 0) {
        done_ = true;
        return std::nullopt;
    }
    --i;
    int remainder = static_cast<int>(current_.size() - i - 1) + 1;
    const int value = --current_[i];
    current_.resize(i + 1);
    while (remainder >= value) {
        current_.push_back(value);
        remainder -= value;
    }
    if (remainder > 0) {
        current_.push_back(remainder);
    }
    return Partition(current_);
}

std::vector<Partition> all_partitions(int n) {
    std::vector<Partition> out;
    PartitionEnumerator stream(n);
    while (auto p = stream.next()) {
        out.push_back(std::move(*p));
    }
    return out;
}

}  // namespace chardeg
