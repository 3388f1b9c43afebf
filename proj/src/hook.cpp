#include "chardeg/hook.hpp"

#include <cstdint>
#include <stdexcept>

namespace chardeg {

int hook_length(const Partition& lambda, Node node) {
    if (!lambda.contains(node)) {
        throw std::invalid_argument("hook_length: node (" + std::to_string(node.row) + "," +
                                    std::to_string(node.column) + ") outside diagram " +
                                    lambda.to_string());
    }
    const Partition columns = conjugate(lambda);
    const int arm = lambda.row(node.row) - node.column;
    const int leg = columns.row(node.column) - node.row;
    return arm + leg + 1;
}

BigNat hook_product(const Partition& lambda) {
    const Partition columns = conjugate(lambda);
    BigNat product = 1;
    // Hooks are at most n, so batch them into a machine word before touching
    // the big integer.
    std::uint64_t batch = 1;
    const std::uint64_t limit = UINT64_MAX / static_cast<std::uint64_t>(lambda.n() + 1);
    for (int i = 1; i <= lambda.length(); ++i) {
        const int row = lambda.row(i);
        for (int j = 1; j <= row; ++j) {
            const auto hook = static_cast<std::uint64_t>(row - j + columns.row(j) - i + 1);
            if (batch > limit) {
                mpz_mul_ui(product.get_mpz_t(), product.get_mpz_t(), batch);
                batch = 1;
            }
            batch *= hook;
        }
    }
    mpz_mul_ui(product.get_mpz_t(), product.get_mpz_t(), batch);
    return product;
}

BigNat degree_sn(const Partition& lambda) {
    const BigNat hooks = hook_product(lambda);
    const BigNat order = factorial(static_cast<unsigned>(lambda.n()));
    if (!mpz_divisible_p(order.get_mpz_t(), hooks.get_mpz_t())) {
        throw std::logic_error("hook product of " + lambda.to_string() + " does not divide n!");
    }
    BigNat degree;
    mpz_divexact(degree.get_mpz_t(), order.get_mpz_t(), hooks.get_mpz_t());
    return degree;
}

std::vector<AnDegreeEntry> degrees_an(const Partition& lambda) {
    BigNat degree = degree_sn(lambda);
    if (lambda.n() < 2 || !is_self_conjugate(lambda)) {
        return {AnDegreeEntry{std::move(degree), 1}};
    }
    if (mpz_odd_p(degree.get_mpz_t())) {
        throw std::logic_error("self-conjugate " + lambda.to_string() + " has odd degree");
    }
    mpz_divexact_ui(degree.get_mpz_t(), degree.get_mpz_t(), 2);
    return {AnDegreeEntry{std::move(degree), 2}};
}

BigNat SytCounter::count(const Partition& lambda) {
    if (lambda.empty()) {
        return 1;
    }
    if (auto it = memo_.find(lambda); it != memo_.end()) {
        return it->second;
    }
    BigNat total = 0;
    for (const Node& corner : removable_nodes(lambda)) {
        total += count(remove_node(lambda, corner));
    }
    memo_.emplace(lambda, total);
    return total;
}

BigNat syt_count_oracle(const Partition& lambda) {
    SytCounter counter;
    return counter.count(lambda);
}

std::optional<BigRational> up_dn_ratio(const Partition& lambda) {
    auto up = lambda_up(lambda);
    auto dn = lambda_dn(lambda);
    if (!up || !dn) {
        return std::nullopt;
    }
    const BigNat h = hook_product(lambda);
    return make_rational(hook_product(*dn) * hook_product(*up), h * h);
}

}  // namespace chardeg
