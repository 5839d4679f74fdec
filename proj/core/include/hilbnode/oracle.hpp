#ifndef HILBNODE_ORACLE_HPP
#define HILBNODE_ORACLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hilbnode/ideal.hpp"

namespace hilbnode {

struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OracleLimits {
    long long max_candidates = 20'000'000;
};

// Exhaustive list of the distinct colength-m ideals of the truncated ring
// over F_q generated by <= g elements, deduplicated by echelon basis and
// returned in a deterministic (key-sorted) order.  Generator tuples are
// searched up to associate-unit action on the first generator and modulo the
// ideal generated so far on later ones.  Makes no use of the classification.
std::vector<NodeIdeal> enumerate_ideals(std::uint64_t q, int m, int g = 2,
                                        const OracleLimits& limits = {});

// Bipartite containment graph between consecutive colength levels.
struct IncidenceGraph {
    struct Node {
        NodeIdeal ideal;
        IdealType label;
    };
    struct Edge {
        int level = 0;  // edge between levels[level] and levels[level+1]
        int from = 0;   // index into nodes[level]
        int to = 0;     // index into nodes[level+1]
    };
    std::vector<int> levels;  // strictly decreasing colengths
    std::vector<std::vector<Node>> nodes;
    std::vector<Edge> edges;  // nodes[l][from] <= nodes[l+1][to]

    // out-neighbors of nodes[level][idx] one level up (super-ideals)
    std::vector<int> supers_of(int level, int idx) const;
};

IncidenceGraph incidence_graph(std::uint64_t q, std::vector<int> levels, int g = 2,
                               const OracleLimits& limits = {});

std::string incidence_to_dot(const IncidenceGraph& graph);

// All nested chains I_{m_1} < I_{m_2} < ... through the given levels with
// every member punctual, grouped by the per-level type pattern ("C[k,i]" with
// the parameter forgotten, or "Q[k,i]").
struct FlagCensus {
    std::vector<int> levels;
    IncidenceGraph graph;
    std::vector<std::vector<int>> chains;  // node indices, one per level

    struct PatternEntry {
        bool is_c = false;
        int i = 0;
        friend auto operator<=>(const PatternEntry&, const PatternEntry&) = default;
    };
    using Pattern = std::vector<PatternEntry>;
    std::vector<Pattern> patterns;          // distinct, sorted
    std::vector<long long> pattern_counts;  // chains per pattern

    // Number of specialization-maximal patterns; ground truth for the
    // component count of the punctual flag locus.
    int component_count() const;
    std::vector<Pattern> maximal_patterns() const;
    static std::string pattern_str(const Pattern& p, const std::vector<int>& levels);
};

FlagCensus flag_point_census(std::uint64_t q, int m, const OracleLimits& limits = {});
FlagCensus flag_census_levels(std::uint64_t q, std::vector<int> levels,
                              const OracleLimits& limits = {});

// Versioned JSON cache for census results.
std::string census_to_json(const FlagCensus& census, std::uint64_t q);
bool census_from_json(const std::string& text, std::uint64_t q,
                      const std::vector<int>& levels, FlagCensus& out);

}  // namespace hilbnode

#endif
