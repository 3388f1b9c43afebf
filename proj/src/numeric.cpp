#include "chardeg/numeric.hpp"

#include <cstdio>
#include <stdexcept>
#include <vector>

namespace chardeg {

BigNat factorial(unsigned n) {
    BigNat result;
    mpz_fac_ui(result.get_mpz_t(), n);
    return result;
}

BigRational make_rational(const BigNat& num, const BigNat& den) {
    if (den == 0) {
        throw std::invalid_argument("rational with zero denominator");
    }
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

BigRational sqrt_upper_bound(const BigNat& value, unsigned digits) {
    if (value < 0) {
        throw std::invalid_argument("square root of a negative number");
    }
    BigNat scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    BigNat scaled = value * scale * scale;
    BigNat root;
    mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
    if (root * root != scaled) {
        root += 1;
    }
    return make_rational(root, scale);
}

std::string to_string(const BigNat& value) { return value.get_str(); }

std::string to_string(const BigRational& value) {
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_decimal(const BigRational& value, int significant) {
    // 512 bits comfortably covers 12 significant digits of anything we print.
    mpf_class f(0, 512);
    f = value;
    std::vector<char> buffer(64);
    for (;;) {
        int written = gmp_snprintf(buffer.data(), buffer.size(), "%.*Fg",
                                   significant, f.get_mpf_t());
        if (written < 0) {
            throw std::runtime_error("decimal formatting failed");
        }
        if (static_cast<std::size_t>(written) < buffer.size()) {
            return std::string(buffer.data(), written);
        }
        buffer.resize(written + 1);
    }
}

BigNat parse_natural(std::string_view text) {
    if (text.empty()) {
        throw std::invalid_argument("empty integer");
    }
    for (char c : text) {
        if (c < '0' || c > '9') {
            throw std::invalid_argument("malformed integer '" + std::string(text) + "'");
        }
    }
    return BigNat(std::string(text), 10);
}

BigRational parse_rational(std::string_view text) {
    bool negative = !text.empty() && text.front() == '-';
    if (negative) {
        text.remove_prefix(1);
    }
    auto slash = text.find('/');
    BigNat num = parse_natural(text.substr(0, slash));
    BigNat den = slash == std::string_view::npos ? BigNat(1) : parse_natural(text.substr(slash + 1));
    if (negative) {
        num = -num;
    }
    return make_rational(num, den);
}

}  // namespace chardeg
