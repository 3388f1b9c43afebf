#include "chardeg/graph.hpp"

#include "chardeg/parallel.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

namespace chardeg {

namespace {

bool has_up(const Partition& p) { return p.length() >= 2 && p.parts().back() == 1; }
bool has_dn(const Partition& p) { return p.row(1) >= 2 && p.row(1) > p.row(2); }

double elapsed_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int vertex_degree(const Partition& lambda) { return has_up(lambda) + has_dn(lambda); }

PartitionGraph::PartitionGraph(std::vector<Partition> vertices, unsigned threads)
    : vertices_(std::move(vertices)) {
    n_ = vertices_.empty() ? 0 : vertices_.front().n();
    index_.reserve(vertices_.size());
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (vertices_[i].n() != n_) {
            throw std::invalid_argument("graph vertices must all be partitions of the same n");
        }
        index_.emplace(vertices_[i], i);
    }
    up_.assign(vertices_.size(), npos);
    dn_.assign(vertices_.size(), npos);
    parallel_for(vertices_.size(), threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            if (auto u = lambda_up(vertices_[i])) {
                up_[i] = index_.at(*u);
            }
            if (auto d = lambda_dn(vertices_[i])) {
                dn_[i] = index_.at(*d);
            }
        }
    });
}

PartitionGraph PartitionGraph::build(int n, unsigned threads) {
    if (n < 1) {
        throw std::invalid_argument("graph needs n >= 1");
    }
    return PartitionGraph(all_partitions(n), threads);
}

std::vector<std::size_t> PartitionGraph::neighbors(std::size_t i) const {
    std::vector<std::size_t> out;
    if (up_[i] != npos) {
        out.push_back(up_[i]);
    }
    if (dn_[i] != npos) {
        out.push_back(dn_[i]);
    }
    return out;
}

std::optional<std::size_t> PartitionGraph::find(const Partition& p) const {
    if (auto it = index_.find(p); it != index_.end()) {
        return it->second;
    }
    return std::nullopt;
}

std::vector<PathComponent> components(const PartitionGraph& graph) {
    std::vector<PathComponent> out;
    std::vector<bool> seen(graph.size(), false);
    for (std::size_t i = 0; i < graph.size(); ++i) {
        if (seen[i]) {
            continue;
        }
        std::size_t start = i;
        // lambda_dn strictly lowers the first part, so these walks terminate.
        while (auto u = graph.up(start)) {
            start = *u;
        }
        PathComponent component;
        for (std::optional<std::size_t> v = start; v; v = graph.dn(*v)) {
            seen[*v] = true;
            component.vertices.push_back(*v);
        }
        out.push_back(std::move(component));
    }
    return out;
}

std::vector<Partition> component_partitions(const PartitionGraph& graph, const PathComponent& c) {
    std::vector<Partition> out;
    out.reserve(c.vertices.size());
    for (auto v : c.vertices) {
        out.push_back(graph.vertex(v));
    }
    return out;
}

namespace {

struct LowDegreeCounts {
    std::vector<std::uint64_t> per_class;
    std::vector<std::vector<std::size_t>> witnesses;
};

LowDegreeCounts count_low_degree(const DegreeTable& table) {
    LowDegreeCounts counts;
    counts.per_class.assign(table.class_count(), 0);
    counts.witnesses.assign(table.class_count(), {});
    for (std::size_t i = 0; i < table.size(); ++i) {
        if (vertex_degree(table.partition(i)) < 2) {
            const auto r = table.class_of(i);
            ++counts.per_class[r];
            if (counts.witnesses[r].size() < 8) {
                counts.witnesses[r].push_back(i);
            }
        }
    }
    return counts;
}

void require_class(const DegreeTable& table, std::size_t r) {
    if (r < 1 || r > table.class_count()) {
        throw std::out_of_range("class index " + std::to_string(r) + " outside 1.." +
                                std::to_string(table.class_count()));
    }
}

VerificationReport low_degree_report(const DegreeTable& table, const LowDegreeCounts& counts,
                                     std::size_t r) {
    VerificationReport report;
    report.check = "low-degree-count";
    report.n = table.n();
    const auto low = counts.per_class[r - 1];
    const auto above = table.members_above(r - 1);
    report.clauses.push_back({"|{M_r : d<2}| <= 2|M_<r|", BigRational(BigNat(low)), Relation::LessEqual,
                              BigRational(BigNat(2 * above))});
    if (r == 1) {
        report.clauses.push_back(
            {"every maximizer has d = 2", BigRational(BigNat(low)), Relation::Equal, BigRational(0)});
    }
    if (r == 2 && table.class_size(0) == 1) {
        report.clauses.push_back({"|M_1| = 1: at most two of M_2 have d < 2", BigRational(BigNat(low)),
                                  Relation::LessEqual, BigRational(2)});
    }
    for (auto i : counts.witnesses[r - 1]) {
        report.witnesses.push_back(table.partition(i));
    }
    report.note("r", std::to_string(r));
    report.settle();
    return report;
}

// Number of mu with b_r/4 < chi_mu(1) < b_r, for 0-based class rank r.
std::uint64_t near_max_population(const DegreeTable& table, std::size_t r) {
    const auto& distinct = table.distinct_degrees();
    const BigNat& target = distinct[r];
    // Classes below r with 4 b_j > b_r form a contiguous run r+1..j-1.
    auto first_small = std::partition_point(distinct.begin() + static_cast<std::ptrdiff_t>(r) + 1,
                                            distinct.end(),
                                            [&](const BigNat& b) { return 4 * b > target; });
    const auto j = static_cast<std::size_t>(first_small - distinct.begin());
    return table.members_above(j) - table.members_above(r + 1);
}

VerificationReport near_max_report(const DegreeTable& table, std::size_t r) {
    VerificationReport report;
    report.check = "near-max-count";
    report.n = table.n();
    const auto population = near_max_population(table, r - 1);
    const BigNat bound = BigNat(table.class_size(r - 1)) - 4 * BigNat(table.members_above(r - 1));
    report.clauses.push_back({"|{b_r/4 < chi < b_r}| >= |M_r| - 4|M_<r|", BigRational(BigNat(population)),
                              Relation::GreaterEqual, BigRational(bound)});
    report.note("r", std::to_string(r));
    report.note("b_r", to_string(table.distinct_degrees()[r - 1]));
    report.settle();
    return report;
}

}  // namespace

VerificationReport low_degree_count_check(const DegreeTable& table, std::size_t r) {
    require_class(table, r);
    const auto start = std::chrono::steady_clock::now();
    auto report = low_degree_report(table, count_low_degree(table), r);
    report.elapsed_ms = elapsed_since(start);
    return report;
}

VerificationReport near_max_count_check(const DegreeTable& table, std::size_t r) {
    require_class(table, r);
    const auto start = std::chrono::steady_clock::now();
    auto report = near_max_report(table, r);
    report.elapsed_ms = elapsed_since(start);
    return report;
}

VerificationReport count_lemmas_check(const DegreeTable& table) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.check = "count-lemmas";
    report.n = table.n();
    const auto counts = count_low_degree(table);

    std::optional<VerificationReport> tightest_low;
    std::optional<VerificationReport> tightest_near;
    std::size_t failures = 0;
    auto slack = [](const Inequality& c) { return BigRational(c.right - c.left); };
    for (std::size_t r = 1; r <= table.class_count(); ++r) {
        auto low = low_degree_report(table, counts, r);
        auto near = near_max_report(table, r);
        failures += !low.holds() + !near.holds();
        for (std::size_t c = 1; c < low.clauses.size(); ++c) {
            report.clauses.push_back(low.clauses[c]);
        }
        if (!tightest_low || slack(low.clauses[0]) < slack(tightest_low->clauses[0]) ||
            (!low.holds() && tightest_low->holds())) {
            tightest_low = std::move(low);
        }
        // For ">=" the slack has the opposite sign.
        if (!tightest_near || slack(near.clauses[0]) > slack(tightest_near->clauses[0]) ||
            (!near.holds() && tightest_near->holds())) {
            tightest_near = std::move(near);
        }
    }
    if (tightest_low) {
        auto clause = tightest_low->clauses[0];
        clause.label += " (tightest r=" + tightest_low->notes.front().second + ")";
        report.clauses.insert(report.clauses.begin(), clause);
        report.witnesses = tightest_low->witnesses;
    }
    if (tightest_near) {
        auto clause = tightest_near->clauses[0];
        clause.label += " (tightest r=" + tightest_near->notes.front().second + ")";
        report.clauses.insert(report.clauses.begin() + 1, clause);
    }
    report.note("classes", std::to_string(table.class_count()));
    report.note("failing_class_checks", std::to_string(failures));
    report.settle();
    if (failures > 0) {
        report.status = Status::Fail;
    }
    report.elapsed_ms = elapsed_since(start);
    return report;
}

VerificationReport graph_structure_check(const DegreeTable& table, const PartitionGraph& graph) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.check = "graph-structure";
    report.n = graph.n();
    if (graph.size() != table.size()) {
        throw std::invalid_argument("graph and degree table disagree on n");
    }

    // Undirected adjacency from the edge definition, independent of the
    // stored up/dn links.
    std::vector<std::set<std::size_t>> adjacent(graph.size());
    std::uint64_t asymmetric = 0;
    for (std::size_t i = 0; i < graph.size(); ++i) {
        const Partition& lambda = graph.vertex(i);
        if (auto d = lambda_dn(lambda)) {
            const auto j = *graph.find(*d);
            adjacent[i].insert(j);
            adjacent[j].insert(i);
            if (lambda_up(*d) != lambda) {
                ++asymmetric;
                report.witnesses.push_back(lambda);
            }
        }
        if (auto u = lambda_up(lambda)) {
            const auto j = *graph.find(*u);
            adjacent[i].insert(j);
            adjacent[j].insert(i);
            if (lambda_dn(*u) != lambda) {
                ++asymmetric;
                report.witnesses.push_back(lambda);
            }
        }
    }
    std::size_t max_degree = 0;
    for (const auto& a : adjacent) {
        max_degree = std::max(max_degree, a.size());
    }

    // Components by plain traversal; a connected graph with max degree 2 and
    // |E| = |V| - 1 is a simple path.
    std::uint64_t non_paths = 0;
    std::vector<int> component_of(graph.size(), -1);
    int component_count = 0;
    for (std::size_t s = 0; s < graph.size(); ++s) {
        if (component_of[s] >= 0) {
            continue;
        }
        std::vector<std::size_t> stack{s};
        component_of[s] = component_count;
        std::size_t vertices = 0;
        std::size_t degree_sum = 0;
        bool within_two = true;
        while (!stack.empty()) {
            const auto v = stack.back();
            stack.pop_back();
            ++vertices;
            degree_sum += adjacent[v].size();
            within_two = within_two && adjacent[v].size() <= 2;
            for (auto w : adjacent[v]) {
                if (component_of[w] < 0) {
                    component_of[w] = component_count;
                    stack.push_back(w);
                }
            }
        }
        if (!within_two || degree_sum / 2 != vertices - 1) {
            ++non_paths;
        }
        ++component_count;
    }

    std::map<std::pair<int, std::size_t>, std::uint64_t> per_component_class;
    std::uint64_t worst_overlap = 0;
    for (std::size_t i = 0; i < graph.size(); ++i) {
        auto& count = per_component_class[{component_of[i], table.class_of(i)}];
        worst_overlap = std::max(worst_overlap, ++count);
    }

    // Walk the oriented paths and look for interior strict maxima of H, that
    // is interior vertices whose degree is below both neighbours'.
    std::uint64_t strict_maxima = 0;
    std::uint64_t ties = 0;
    std::uint64_t walked = 0;
    for (const auto& component : components(graph)) {
        const auto& path = component.vertices;
        walked += path.size();
        for (std::size_t k = 0; k + 1 < path.size(); ++k) {
            ties += table.degree(path[k]) == table.degree(path[k + 1]);
        }
        for (std::size_t k = 1; k + 1 < path.size(); ++k) {
            const auto& here = table.degree(path[k]);
            if (here < table.degree(path[k - 1]) && here < table.degree(path[k + 1])) {
                ++strict_maxima;
                report.witnesses.push_back(graph.vertex(path[k]));
            }
        }
    }

    auto nat = [](std::uint64_t v) { return BigRational(BigNat(v)); };
    report.clauses.push_back({"max vertex degree", nat(max_degree), Relation::LessEqual, nat(2)});
    report.clauses.push_back({"asymmetric up/dn links", nat(asymmetric), Relation::Equal, nat(0)});
    report.clauses.push_back({"components that are not simple paths", nat(non_paths), Relation::Equal, nat(0)});
    report.clauses.push_back({"oriented walks cover every vertex", nat(walked), Relation::Equal, nat(graph.size())});
    report.clauses.push_back({"max |C n M_r|", nat(worst_overlap), Relation::LessEqual, nat(2)});
    report.clauses.push_back({"interior strict local maxima of H", nat(strict_maxima), Relation::Equal, nat(0)});
    report.note("components", std::to_string(component_count));
    report.note("adjacent_equal_H", std::to_string(ties));
    report.settle();
    report.elapsed_ms = elapsed_since(start);
    return report;
}

}  // namespace chardeg
