#include "chardeg/scan.hpp"

#include "chardeg/io.hpp"

#include <optional>
#include <sstream>

namespace chardeg {

ScanRow scan_row(const DegreeSpectrum& symmetric, const DegreeSpectrum& alternating) {
    ScanRow row;
    row.n = symmetric.n;
    row.b_s = symmetric.largest();
    row.m1 = symmetric.classes.front().multiplicity;
    row.b_a = alternating.largest();
    row.equal = row.b_a == row.b_s;
    row.eps_s = epsilon(symmetric);
    row.eps_a = epsilon(alternating);
    for (const auto& c : symmetric.classes) {
        if (c.degree > row.b_a) {
            row.x += c.multiplicity;
        } else if (c.degree == row.b_a) {
            row.y = c.multiplicity;
        }
    }
    return row;
}

std::vector<ScanRow> scan(int max_n, const SpectrumOptions& options, const SpectrumCache* cache) {
    if (max_n < 5) {
        throw std::invalid_argument("scan needs max-n >= 5");
    }
    check_guard(max_n, options.compute);
    std::vector<ScanRow> rows;
    for (int n = 5; n <= max_n; ++n) {
        const bool complete = n <= options.store_members_up_to;
        std::optional<DegreeSpectrum> s, a;
        if (cache) {
            s = cache->load(n, Group::Symmetric, complete);
            a = cache->load(n, Group::Alternating, complete);
        }
        if (!s || !a) {
            const DegreeTable table(n, options.compute);
            if (!s) {
                s = spectrum_sn(table, options.store_members_up_to);
                validate_mass(*s);
                if (cache) {
                    cache->store(*s);
                }
            }
            if (!a) {
                a = spectrum_an(table, options.store_members_up_to);
                validate_mass(*a);
                if (cache) {
                    cache->store(*a);
                }
            }
        }
        rows.push_back(scan_row(*s, *a));
    }
    return rows;
}

std::string scan_csv(const std::vector<ScanRow>& rows) {
    std::ostringstream out;
    out << "n,b_S,M1,b_A,equal,eps_S,eps_S_decimal,eps_A,eps_A_decimal,x,y\n";
    for (const auto& r : rows) {
        out << r.n << ',' << to_string(r.b_s) << ',' << r.m1 << ',' << to_string(r.b_a) << ','
            << (r.equal ? "true" : "false") << ',' << to_string(r.eps_s) << ',' << to_decimal(r.eps_s) << ','
            << to_string(r.eps_a) << ',' << to_decimal(r.eps_a) << ',' << r.x << ',' << r.y << '\n';
    }
    return out.str();
}

std::vector<ScanRow> parse_scan_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line.rfind("n,b_S,", 0) != 0) {
        throw std::invalid_argument("scan CSV: missing header");
    }
    std::vector<ScanRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> f;
        std::istringstream fields(line);
        for (std::string cell; std::getline(fields, cell, ',');) {
            f.push_back(cell);
        }
        if (f.size() != 11) {
            throw std::invalid_argument("scan CSV: expected 11 fields in '" + line + "'");
        }
        ScanRow r;
        r.n = std::stoi(f[0]);
        r.b_s = parse_natural(f[1]);
        r.m1 = std::stoull(f[2]);
        r.b_a = parse_natural(f[3]);
        r.equal = f[4] == "true";
        r.eps_s = parse_rational(f[5]);
        r.eps_a = parse_rational(f[7]);
        r.x = std::stoull(f[9]);
        r.y = std::stoull(f[10]);
        rows.push_back(std::move(r));
    }
    return rows;
}

void write_scan(const std::filesystem::path& path, int max_n, const SpectrumOptions& options,
                const SpectrumCache* cache) {
    // Everything is computed before the file is touched; the write itself is
    // a rename, so an abort never leaves a partial table.
    const auto rows = scan(max_n, options, cache);
    write_file_atomic(path, scan_csv(rows));
}

}  // namespace chardeg
