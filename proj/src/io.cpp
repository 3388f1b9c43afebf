#include "chardeg/io.hpp"

#include "chardeg/hook.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unistd.h>

#ifndef CHARDEG_VERSION
#define CHARDEG_VERSION "0.0.0"
#endif

namespace chardeg {

using nlohmann::json;

std::string producer_version() { return std::string("chardeg ") + CHARDEG_VERSION; }

namespace {

json rational_json(const BigRational& q) { return to_string(q); }

std::string csv_partitions(const std::vector<Partition>& ps) {
    std::string out;
    for (const auto& p : ps) {
        if (!out.empty()) {
            out.push_back(' ');
        }
        out += p.to_string(';');
    }
    return out;
}

}  // namespace

json spectrum_to_json(const DegreeSpectrum& spectrum) {
    json j;
    j["n"] = spectrum.n;
    j["group"] = to_string(spectrum.group);
    j["b"] = to_string(spectrum.largest());
    const BigRational eps = epsilon(spectrum);
    j["epsilon"] = rational_json(eps);
    j["epsilon_decimal"] = to_decimal(eps);
    j["members_complete"] = spectrum.members_complete;
    json classes = json::array();
    for (const auto& c : spectrum.classes) {
        json members = json::array();
        for (const auto& p : c.members) {
            members.push_back(p.to_string());
        }
        classes.push_back({{"degree", to_string(c.degree)}, {"multiplicity", c.multiplicity}, {"members", members}});
    }
    j["classes"] = std::move(classes);
    return j;
}

DegreeSpectrum spectrum_from_json(const json& j) {
    DegreeSpectrum spectrum;
    spectrum.n = j.at("n").get<int>();
    spectrum.group = parse_group(j.at("group").get<std::string>());
    spectrum.members_complete = j.at("members_complete").get<bool>();
    for (const auto& c : j.at("classes")) {
        DegreeClass cls;
        cls.degree = parse_natural(c.at("degree").get<std::string>());
        cls.multiplicity = c.at("multiplicity").get<std::uint64_t>();
        for (const auto& m : c.at("members")) {
            cls.members.push_back(Partition::parse(m.get<std::string>()));
        }
        spectrum.classes.push_back(std::move(cls));
    }
    if (spectrum.classes.empty()) {
        throw std::invalid_argument("spectrum without classes");
    }
    for (std::size_t i = 1; i < spectrum.classes.size(); ++i) {
        if (!(spectrum.classes[i].degree < spectrum.classes[i - 1].degree)) {
            throw std::invalid_argument("spectrum degrees not strictly decreasing");
        }
    }
    return spectrum;
}

std::string spectrum_json_document(const DegreeSpectrum& spectrum) {
    json doc = {{"schema", kSchemaVersion}};
    doc.update(spectrum_to_json(spectrum));
    return doc.dump(2) + "\n";
}

std::string spectrum_csv(const DegreeSpectrum& spectrum) {
    std::ostringstream out;
    const std::string eps = to_string(epsilon(spectrum));
    out << "n,group,epsilon,degree,multiplicity,members\n";
    for (const auto& c : spectrum.classes) {
        out << spectrum.n << ',' << to_string(spectrum.group) << ',' << eps << ',' << to_string(c.degree) << ','
            << c.multiplicity << ',' << csv_partitions(c.members) << '\n';
    }
    return out.str();
}

std::string spectrum_text(const DegreeSpectrum& spectrum) {
    std::ostringstream out;
    const BigRational eps = epsilon(spectrum);
    out << to_string(spectrum.group) << "_" << spectrum.n << ": " << spectrum.classes.size()
        << " distinct degrees, b = " << to_string(spectrum.largest()) << ", epsilon = " << to_string(eps) << " ~ "
        << to_decimal(eps) << "\n";
    for (const auto& c : spectrum.classes) {
        out << "  " << to_string(c.degree) << " x" << c.multiplicity;
        for (const auto& p : c.members) {
            out << " (" << p.to_string() << ")";
        }
        out << "\n";
    }
    return out.str();
}

json report_to_json(const VerificationReport& report, bool include_timing) {
    json clauses = json::array();
    for (const auto& c : report.clauses) {
        clauses.push_back({{"label", c.label},
                           {"left", rational_json(c.left)},
                           {"relation", to_string(c.relation)},
                           {"right", rational_json(c.right)},
                           {"left_decimal", to_decimal(c.left)},
                           {"right_decimal", to_decimal(c.right)},
                           {"holds", c.holds()}});
    }
    json witnesses = json::array();
    for (const auto& w : report.witnesses) {
        witnesses.push_back(w.to_string());
    }
    json notes = json::array();
    for (const auto& [k, v] : report.notes) {
        notes.push_back({{"key", k}, {"value", v}});
    }
    json j = {{"check", report.check},
              {"n", report.n},
              {"status", to_string(report.status)},
              {"pass", report.holds()},
              {"clauses", clauses},
              {"witnesses", witnesses},
              {"notes", notes}};
    if (include_timing) {
        j["elapsed_ms"] = report.elapsed_ms;
    }
    return j;
}

VerificationReport report_from_json(const json& j) {
    VerificationReport report;
    report.check = j.at("check").get<std::string>();
    report.n = j.at("n").get<int>();
    report.status = parse_status(j.at("status").get<std::string>());
    for (const auto& c : j.at("clauses")) {
        report.clauses.push_back({c.at("label").get<std::string>(), parse_rational(c.at("left").get<std::string>()),
                                  parse_relation(c.at("relation").get<std::string>()),
                                  parse_rational(c.at("right").get<std::string>())});
    }
    for (const auto& w : j.at("witnesses")) {
        report.witnesses.push_back(Partition::parse(w.get<std::string>()));
    }
    for (const auto& note : j.at("notes")) {
        report.note(note.at("key").get<std::string>(), note.at("value").get<std::string>());
    }
    if (j.contains("elapsed_ms")) {
        report.elapsed_ms = j.at("elapsed_ms").get<double>();
    }
    return report;
}

std::string reports_json_document(const std::vector<VerificationReport>& reports, bool include_timing) {
    json list = json::array();
    bool ok = true;
    for (const auto& r : reports) {
        list.push_back(report_to_json(r, include_timing));
        ok = ok && r.acceptable();
    }
    json doc = {{"schema", kSchemaVersion}, {"all_required_pass", ok}, {"reports", list}};
    return doc.dump(2) + "\n";
}

std::string reports_csv(const std::vector<VerificationReport>& reports) {
    std::ostringstream out;
    out << "check,n,status,pass,clause,left,relation,right\n";
    for (const auto& r : reports) {
        for (const auto& c : r.clauses) {
            std::string label = c.label;
            for (char& ch : label) {
                if (ch == ',') {
                    ch = ';';
                }
            }
            out << r.check << ',' << r.n << ',' << to_string(r.status) << ',' << (r.holds() ? "true" : "false")
                << ',' << label << ',' << to_string(c.left) << ',' << to_string(c.relation) << ','
                << to_string(c.right) << '\n';
        }
    }
    return out.str();
}

std::string report_text(const VerificationReport& report) {
    std::ostringstream out;
    out << "[" << to_string(report.status) << "] " << report.check << " n=" << report.n << " ("
        << report.elapsed_ms << " ms)\n";
    for (const auto& c : report.clauses) {
        out << "    " << (c.holds() ? "ok  " : "FAIL") << " " << c.label << ": " << to_decimal(c.left) << " "
            << to_string(c.relation) << " " << to_decimal(c.right) << "\n";
    }
    for (const auto& [k, v] : report.notes) {
        out << "    " << k << " = " << v << "\n";
    }
    if (!report.witnesses.empty()) {
        out << "    witnesses:";
        for (const auto& w : report.witnesses) {
            out << " (" << w.to_string() << ")";
        }
        out << "\n";
    }
    return out.str();
}

std::string graph_dot(const PartitionGraph& graph) {
    std::ostringstream out;
    out << "graph gamma_" << graph.n() << " {\n";
    for (const auto& v : graph.vertices()) {
        out << "  \"" << v.to_string() << "\";\n";
    }
    for (const auto& component : components(graph)) {
        for (std::size_t k = 0; k + 1 < component.vertices.size(); ++k) {
            out << "  \"" << graph.vertex(component.vertices[k]).to_string() << "\" -- \""
                << graph.vertex(component.vertices[k + 1]).to_string() << "\";\n";
        }
    }
    out << "}\n";
    return out.str();
}

json graph_to_json(const PartitionGraph& graph) {
    json list = json::array();
    for (const auto& component : components(graph)) {
        json path = json::array();
        for (auto v : component.vertices) {
            path.push_back(graph.vertex(v).to_string());
        }
        list.push_back(std::move(path));
    }
    return {{"schema", kSchemaVersion}, {"n", graph.n()}, {"components", list}};
}

std::vector<std::vector<Partition>> components_from_json(const json& j) {
    std::vector<std::vector<Partition>> out;
    for (const auto& path : j.at("components")) {
        auto& component = out.emplace_back();
        for (const auto& v : path) {
            component.push_back(Partition::parse(v.get<std::string>()));
        }
    }
    return out;
}

json degree_record(const Partition& lambda) {
    json j;
    j["partition"] = lambda.to_string();
    j["n"] = lambda.n();
    j["hook_product"] = to_string(hook_product(lambda));
    j["degree"] = to_string(degree_sn(lambda));
    j["self_conjugate"] = is_self_conjugate(lambda);
    json an = json::array();
    for (const auto& e : degrees_an(lambda)) {
        an.push_back({{"degree", to_string(e.degree)}, {"count", e.count}});
    }
    j["a_degrees"] = an;
    auto up = lambda_up(lambda);
    auto dn = lambda_dn(lambda);
    j["up"] = up ? json(up->to_string()) : json(nullptr);
    j["dn"] = dn ? json(dn->to_string()) : json(nullptr);
    if (auto ratio = up_dn_ratio(lambda)) {
        j["ratio"] = to_string(*ratio);
        j["ratio_decimal"] = to_decimal(*ratio);
        j["ratio_boundary"] = *ratio == 4;
    } else {
        j["ratio"] = nullptr;
    }
    return j;
}

std::string degree_record_text(const Partition& lambda) {
    const json j = degree_record(lambda);
    std::ostringstream out;
    out << "partition: (" << lambda.to_string() << ")\n";
    out << "n: " << lambda.n() << "\n";
    out << "hook product: " << j["hook_product"].get<std::string>() << "\n";
    out << "degree: " << j["degree"].get<std::string>() << "\n";
    out << "self-conjugate: " << (j["self_conjugate"].get<bool>() ? "yes" : "no") << "\n";
    out << "A_n degrees:";
    for (const auto& e : j["a_degrees"]) {
        out << " " << e["degree"].get<std::string>() << " x" << e["count"].get<int>();
    }
    out << "\n";
    out << "up: " << (j["up"].is_null() ? "-" : "(" + j["up"].get<std::string>() + ")") << "\n";
    out << "dn: " << (j["dn"].is_null() ? "-" : "(" + j["dn"].get<std::string>() + ")") << "\n";
    if (!j["ratio"].is_null()) {
        out << "up/dn ratio: " << j["ratio"].get<std::string>() << " ~ " << j["ratio_decimal"].get<std::string>();
        if (j["ratio_boundary"].get<bool>()) {
            out << " (boundary: equals 4)";
        }
        out << "\n";
    }
    return out.str();
}

json branch_to_json(const BranchDecomposition& d) {
    json constituents = json::array();
    for (const auto& p : d.constituents) {
        constituents.push_back({{"partition", p.to_string()}, {"degree", to_string(degree_sn(p))}});
    }
    return {{"schema", kSchemaVersion},
            {"partition", d.source.to_string()},
            {"degree", to_string(degree_sn(d.source))},
            {"self_multiplicity", d.self_multiplicity},
            {"constituents", constituents},
            {"distinct_constituents", d.distinct_count()},
            {"degree_identity", degree_identity_holds(d)}};
}

std::string branch_text(const BranchDecomposition& d) {
    std::ostringstream out;
    const BigNat chi = degree_sn(d.source);
    out << d.self_multiplicity << " x chi(" << d.source.to_string() << ")";
    BigNat total = chi * d.self_multiplicity;
    for (const auto& p : d.constituents) {
        out << " + chi(" << p.to_string() << ")";
        total += degree_sn(p);
    }
    out << "\n";
    out << "degree check: " << d.source.n() << " * " << to_string(chi) << " = " << to_string(total)
        << (degree_identity_holds(d) ? " (ok)" : " (MISMATCH)") << "\n";
    out << "distinct constituents: " << d.distinct_count() << " (< 2n = " << 2 * d.source.n() << ")\n";
    return out.str();
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    auto temp = path;
    temp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(temp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot write " + temp.string());
        }
        out << content;
        out.flush();
        if (!out) {
            std::filesystem::remove(temp);
            throw std::runtime_error("short write to " + temp.string());
        }
    }
    std::filesystem::rename(temp, path);
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot read " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace chardeg
