#pragma once

#include "chardeg/degree_table.hpp"
#include "chardeg/numeric.hpp"
#include "chardeg/partition.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace chardeg {

enum class Group { Symmetric, Alternating };

std::string to_string(Group group);  // "S" / "A"
Group parse_group(std::string_view text);

struct DegreeClass {
    BigNat degree;
    /// Number of irreducible characters of this degree.
    std::uint64_t multiplicity = 0;
    /// Partitions labelling them. For A_n one representative per conjugate
    /// pair; a self-conjugate member stands for two characters.
    std::vector<Partition> members;

    friend bool operator==(const DegreeClass&, const DegreeClass&) = default;
};

/// Distinct degrees b_1 > b_2 > ... > b_m of S_n or A_n with multiplicities.
struct DegreeSpectrum {
    int n = 0;
    Group group = Group::Symmetric;
    std::vector<DegreeClass> classes;
    /// False when member lists were only kept for the two largest classes.
    bool members_complete = true;

    const BigNat& largest() const { return classes.front().degree; }

    /// Sum of multiplicity * degree^2.
    BigNat mass() const;

    /// n! for S_n, n!/2 for A_n (n >= 2).
    BigNat group_order() const;

    /// Sum of the squares of all degrees strictly below the largest one.
    BigNat mass_below_largest() const;

    friend bool operator==(const DegreeSpectrum&, const DegreeSpectrum&) = default;
};

struct SpectrumOptions {
    ComputeOptions compute;
    /// Keep every class's member list up to this n; above it only M_1 and M_2.
    int store_members_up_to = 40;
};

DegreeSpectrum spectrum_sn(const DegreeTable& table, int store_members_up_to = 40);
DegreeSpectrum spectrum_an(const DegreeTable& table, int store_members_up_to = 40);

/// Throws ResourceGuardError above the guard, std::invalid_argument for n < 1
/// (S) or n < 2 (A).
DegreeSpectrum spectrum_sn(int n, const SpectrumOptions& options = {});
DegreeSpectrum spectrum_an(int n, const SpectrumOptions& options = {});

/// Sum of squared degrees below b(G), divided by b(G)^2.
BigRational epsilon(const DegreeSpectrum& spectrum);

/// Throws std::logic_error if the spectrum's mass differs from the group order.
void validate_mass(const DegreeSpectrum& spectrum);

}  // namespace chardeg
