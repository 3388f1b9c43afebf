#include "chardeg/spectrum.hpp"

#include "chardeg/hook.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace chardeg {

std::string to_string(Group group) { return group == Group::Symmetric ? "S" : "A"; }

Group parse_group(std::string_view text) {
    if (text == "S" || text == "s") {
        return Group::Symmetric;
    }
    if (text == "A" || text == "a") {
        return Group::Alternating;
    }
    throw std::invalid_argument("unknown group '" + std::string(text) + "' (expected s or a)");
}

BigNat DegreeSpectrum::mass() const {
    BigNat total = 0;
    for (const auto& c : classes) {
        total += c.degree * c.degree * BigNat(c.multiplicity);
    }
    return total;
}

BigNat DegreeSpectrum::group_order() const {
    BigNat order = factorial(static_cast<unsigned>(n));
    if (group == Group::Alternating && n >= 2) {
        order /= 2;
    }
    return order;
}

BigNat DegreeSpectrum::mass_below_largest() const {
    const auto& top = classes.front();
    return mass() - top.degree * top.degree * BigNat(top.multiplicity);
}

namespace {

DegreeSpectrum assemble(int n, Group group, std::map<BigNat, DegreeClass, std::greater<>>& classes,
                        int store_members_up_to) {
    DegreeSpectrum spectrum;
    spectrum.n = n;
    spectrum.group = group;
    spectrum.members_complete = n <= store_members_up_to;
    for (auto& [degree, cls] : classes) {
        if (!spectrum.members_complete && spectrum.classes.size() >= 2) {
            cls.members.clear();
        }
        spectrum.classes.push_back(std::move(cls));
    }
    return spectrum;
}

}  // namespace

DegreeSpectrum spectrum_sn(const DegreeTable& table, int store_members_up_to) {
    if (table.n() < 1) {
        throw std::invalid_argument("spectrum of S_n needs n >= 1");
    }
    std::map<BigNat, DegreeClass, std::greater<>> classes;
    for (std::size_t i = 0; i < table.size(); ++i) {
        auto& cls = classes[table.degree(i)];
        cls.degree = table.degree(i);
        ++cls.multiplicity;
        cls.members.push_back(table.partition(i));
    }
    return assemble(table.n(), Group::Symmetric, classes, store_members_up_to);
}

DegreeSpectrum spectrum_an(const DegreeTable& table, int store_members_up_to) {
    if (table.n() < 2) {
        throw std::invalid_argument("spectrum of A_n needs n >= 2");
    }
    std::map<BigNat, DegreeClass, std::greater<>> classes;
    for (std::size_t i = 0; i < table.size(); ++i) {
        const Partition& lambda = table.partition(i);
        const Partition lambda_bar = conjugate(lambda);
        // One representative per conjugate pair: the one enumerated first.
        if (lambda_bar > lambda) {
            continue;
        }
        BigNat degree = table.degree(i);
        std::uint64_t count = 1;
        if (lambda_bar == lambda) {
            if (mpz_odd_p(degree.get_mpz_t())) {
                throw std::logic_error("self-conjugate " + lambda.to_string() + " has odd degree");
            }
            degree /= 2;
            count = 2;
        }
        auto& cls = classes[degree];
        cls.degree = degree;
        cls.multiplicity += count;
        cls.members.push_back(lambda);
    }
    return assemble(table.n(), Group::Alternating, classes, store_members_up_to);
}

DegreeSpectrum spectrum_sn(int n, const SpectrumOptions& options) {
    if (n < 1) {
        throw std::invalid_argument("spectrum of S_n needs n >= 1");
    }
    return spectrum_sn(DegreeTable(n, options.compute), options.store_members_up_to);
}

DegreeSpectrum spectrum_an(int n, const SpectrumOptions& options) {
    if (n < 2) {
        throw std::invalid_argument("spectrum of A_n needs n >= 2");
    }
    return spectrum_an(DegreeTable(n, options.compute), options.store_members_up_to);
}

BigRational epsilon(const DegreeSpectrum& spectrum) {
    const BigNat& b = spectrum.largest();
    return make_rational(spectrum.mass_below_largest(), b * b);
}

void validate_mass(const DegreeSpectrum& spectrum) {
    if (spectrum.classes.empty()) {
        throw std::logic_error("empty spectrum");
    }
    if (spectrum.mass() != spectrum.group_order()) {
        throw std::logic_error("spectrum of " + to_string(spectrum.group) + "_" + std::to_string(spectrum.n) +
                               " has mass " + to_string(spectrum.mass()) + ", expected " +
                               to_string(spectrum.group_order()));
    }
}

}  // namespace chardeg
