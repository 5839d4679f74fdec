#ifndef HILBNODE_COMBIN_HPP
#define HILBNODE_COMBIN_HPP

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hilbnode {

using BigInt = boost::multiprecision::cpp_int;

// Label grammar: K[m,i] for a single level, K[l1,l2,...;i1,i2,...] for a
// product across levels, K one of C (curve), Q (point), D (germ).
struct ComponentLabel {
    char kind = 'C';
    std::vector<int> levels;
    std::vector<int> indices;

    static ComponentLabel c_curve(int m, int i) { return {'C', {m}, {i}}; }
    static ComponentLabel q_point(int m, int i) { return {'Q', {m}, {i}}; }
    static ComponentLabel d_germ(int m, int i) { return {'D', {m}, {i}}; }
    static ComponentLabel product(char kind, std::vector<int> levels, std::vector<int> indices);

    std::string str() const;
    friend bool operator==(const ComponentLabel&, const ComponentLabel&) = default;
};

// Chain of components with consecutive attachments.
struct ChainGraph {
    struct Component {
        ComponentLabel label;
        int dim = 1;
        std::string note;  // support / projection / signature descriptors
    };
    struct Attachment {
        int a = 0, b = 0;  // component indices
        std::vector<ComponentLabel> locus;
        int locus_dim = 0;
    };
    std::vector<Component> components;
    std::vector<Attachment> attachments;
    // Degenerate cases collapse to a single point.
    std::optional<ComponentLabel> degenerate_point;

    int component_count() const { return static_cast<int>(components.size()); }
};

// The punctual locus at colength m: a chain of m-1 rational curves glued at
// the interior Q-points.
ChainGraph punctual_chain(int m);

// The full colength-m parameter germ: m+1 smooth m-dimensional germs in a
// chain, consecutive members meeting in dimension m-1.
ChainGraph hilb_component_graph(int m);

// Punctual two-step flag locus (m, m-1): 2m-3 rational curves alternating
// between the two levels.
ChainGraph flag_chain_graph(int m);

// Punctual three-step flag locus (m, m-1, m-2): 2m-3 components, the inner
// ones of the top/bottom product type.
ChainGraph lemma6_chain_graph(int m);

// Components of the full punctual flag locus by the triangle rule: columnwise
// products of the per-level chains.  The literal-index variant applies the
// stated min-formula bounds instead; the triangle rule is census-validated.
std::vector<ComponentLabel> fhilb_components(int m, bool literal_index_rule = false);

// Global counts for a curve with c components and nodes of the given local
// multiplicities.
struct GlobalCounts {
    BigInt components;
    std::vector<int> cycle_fibre_chain_lengths;  // one per node, m_i - 1 (0 = point)
    std::vector<std::string> local_model;        // one factor per node
};
GlobalCounts global_counts(int m, int c, const std::vector<int>& node_multiplicities);

BigInt binomial(int n, int k);
// Independent enumerator: number of ways to distribute m points over c
// components, counted by direct recursion.
BigInt stars_and_bars_count(int m, int c);

// Emission helpers.
std::string chain_to_dot(const ChainGraph& g, const std::string& name);
std::string chain_to_ascii(const ChainGraph& g);
// Rows k = 2..m of segment glyphs arranged as an isosceles triangle.
std::string triangle_ascii(int m);

}  // namespace hilbnode

#endif
