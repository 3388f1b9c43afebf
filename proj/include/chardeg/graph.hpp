#pragma once

#include "chardeg/degree_table.hpp"
#include "chardeg/partition.hpp"
#include "chardeg/report.hpp"

#include <optional>
#include <unordered_map>
#include <vector>

namespace chardeg {

/// Number of defined neighbours among lambda_up and lambda_dn (0, 1 or 2).
int vertex_degree(const Partition& lambda);

/// The graph on the partitions of n joining each lambda to lambda_up and
/// lambda_dn. The two moves are mutually inverse, so neighbours are computed
/// from them and adjacency is symmetric by construction.
class PartitionGraph {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    /// `vertices` must be every partition of one n, in enumeration order.
    explicit PartitionGraph(std::vector<Partition> vertices, unsigned threads = 1);

    static PartitionGraph build(int n, unsigned threads = 1);

    int n() const { return n_; }
    std::size_t size() const { return vertices_.size(); }
    const Partition& vertex(std::size_t i) const { return vertices_[i]; }
    const std::vector<Partition>& vertices() const { return vertices_; }

    std::optional<std::size_t> up(std::size_t i) const { return wrap(up_[i]); }
    std::optional<std::size_t> dn(std::size_t i) const { return wrap(dn_[i]); }
    int degree(std::size_t i) const { return (up_[i] != npos) + (dn_[i] != npos); }
    std::vector<std::size_t> neighbors(std::size_t i) const;

    std::optional<std::size_t> find(const Partition& p) const;

private:
    static std::optional<std::size_t> wrap(std::size_t v) {
        return v == npos ? std::nullopt : std::optional<std::size_t>(v);
    }

    int n_ = 0;
    std::vector<Partition> vertices_;
    std::vector<std::size_t> up_;
    std::vector<std::size_t> dn_;
    std::unordered_map<Partition, std::size_t, PartitionHash> index_;
};

/// One connected component, listed from the vertex without lambda_up along
/// successive lambda_dn moves.
struct PathComponent {
    std::vector<std::size_t> vertices;
};

/// All components, ordered by their earliest vertex in enumeration order.
std::vector<PathComponent> components(const PartitionGraph& graph);

std::vector<Partition> component_partitions(const PartitionGraph& graph, const PathComponent& c);

/// |{lambda in M_r : d(lambda) < 2}| <= 2 |M_1 u ... u M_{r-1}|, with the
/// M_1 and |M_1| = 1 special cases as extra clauses. r is 1-based.
VerificationReport low_degree_count_check(const DegreeTable& table, std::size_t r);

/// |{mu : b_r/4 < chi_mu(1) < b_r}| >= |M_r| - 4 |M_1 u ... u M_{r-1}|.
VerificationReport near_max_count_check(const DegreeTable& table, std::size_t r);

/// Both checks for every class; the stored clauses are the tightest ones, so
/// the report holds iff every per-class check holds.
VerificationReport count_lemmas_check(const DegreeTable& table);

/// Max degree 2, symmetric adjacency, every component a simple path,
/// |C n M_r| <= 2, and no interior strict local maximum of H along a path.
VerificationReport graph_structure_check(const DegreeTable& table, const PartitionGraph& graph);

}  // namespace chardeg
