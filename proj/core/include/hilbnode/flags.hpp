#ifndef HILBNODE_FLAGS_HPP
#define HILBNODE_FLAGS_HPP

#include <optional>
#include <string>
#include <vector>

#include "hilbnode/charts.hpp"

namespace hilbnode {

// Level pairs (I, I') with colength(I) = m, colength(I') = m-1, centered at
// (Q[m,i], Q[m-1,i]) (SameIndex) or (Q[m,i], Q[m-1,i-1]) (DropIndex).  The
// DropIndex case is the x<->y mirror of SameIndex.
enum class PairKind { SameIndex, DropIndex };

struct FlagPairChart {
    int m = 0;
    int i = 0;
    PairKind kind = PairKind::SameIndex;
    RingMode mode = RingMode::Absolute;

    FlagPairChart(int m_, int i_, PairKind kind_, RingMode mode_);
    // Regular parameters, in the order synthesize_flag_pair consumes them.
    std::vector<std::string> free_names() const;
    int dimension() const;  // m absolute, m+1 relative
};

struct FlagPairPoint {
    FlagPairChart chart;
    QChartCoeffs upper, lower;
    ArtinSeries f, g, f_lower, g_lower;
    ArtinScalar shift;  // x-translation rho (SameIndex) or y-translation delta (DropIndex)
    ArtinScalar s;      // base value; zero required in absolute mode
};

// Build the nested pair from the regular parameters; dependent coefficients
// of both levels are filled through the chart rewrites, the lower transverse
// coordinate through the product relation.
FlagPairPoint synthesize_flag_pair(const FlagPairChart& chart,
                                   const std::vector<ArtinScalar>& free_values, int trunc_order);

// Coefficient relations equivalent to I <= I', checked line by line, next to
// the independent subspace containment; the two verdicts must agree.
struct InclusionCheck {
    RelationReport relations;
    bool by_relations = false;
    bool by_subspace = false;
    bool agree = false;
};
InclusionCheck inclusion_relations(const FlagPairChart& chart, const QChartCoeffs& upper,
                                   const QChartCoeffs& lower, const ArtinScalar& s,
                                   int trunc_order);

// Local models of the flag charts.
struct SingularityModel {
    enum class Kind { Smooth, NormalCrossing, Quadric };
    MPoly equation;
    Kind kind = Kind::Smooth;
    int branch_count = 0;
    int hessian_rank_value = 0;
    struct Branch {
        std::string defining_var;
        std::vector<std::string> implied_vanishing;
        std::string label;
    };
    std::vector<Branch> branches;
    std::string kind_str() const;
};

// Center triples for the three-level analysis.
enum class TripleKind { SameSameSame, SameSameDrop };

// Chart equation and its recomputed singularity type:
//  - pair SameIndex/DropIndex, relative: smooth (m+1)-fold,
//  - pair, absolute: 3-branch normal crossing,
//  - triple (i,i,i): smooth,
//  - triple (i,i,i-1): rank-4 quadric.
SingularityModel flag_chart_equation(const FlagPairChart& chart);
SingularityModel triple_chart_equation(int m, int i, TripleKind kind, RingMode mode);

// Punctual restriction of the SameIndex pair chart: the two-equation display
// and the two branches with their projections.
struct PunctualFlagData {
    std::vector<std::string> equations;
    struct Branch {
        std::string defining;
        std::string proj_upper;
        std::string proj_lower;
    };
    std::vector<Branch> branches;
};
PunctualFlagData punctual_flag_equations(int m, int i);

// The colength-1 ideal (x + rho, y + b'_(i-1) c_(m-i)) annihilating I'/I on
// a SameIndex chart point; must agree with the linear-algebra annihilator.
ArtinIdeal annihilator_on_chart(const FlagPairPoint& point);

// Closed-fibre condition of the annihilator map: f(x,0) = x f'(x,0) and
// g(0,y) = g'(0,y).
bool annihilator_fibre_over_node(const FlagPairPoint& point);

// Three-level synthesis.
struct FlagTriplePoint {
    int m = 0, i = 0;
    TripleKind kind = TripleKind::SameSameSame;
    QChartCoeffs top, mid, bot;
    ArtinSeries f, g, f_mid, g_mid, f_bot, g_bot;
    ArtinScalar s;
};
// Parameter layout per free_names of triple charts; for SameSameDrop the
// parameters must satisfy the quadric relation.
std::vector<std::string> triple_free_names(int m, int i, TripleKind kind);
FlagTriplePoint synthesize_flag_triple(int m, int i, TripleKind kind, RingMode mode,
                                       const std::vector<ArtinScalar>& free_values,
                                       int trunc_order);

// Complete-intersection bookkeeping for the derived charts at small m.
struct LciReport {
    std::string chart;
    int variables = 0;
    int equations = 0;
    int dim = 0;
    int expected_dim = 0;
    bool counts_ok = false;
    bool jacobian_ok = false;
    int generic_fibre_dim = 0;
    int special_fibre_dim = 0;
    bool fibre_dims_agree = false;
};
std::vector<LciReport> lci_check_small_m(int m);

// Symbolic consistency: the product relation c'_(m-i-1) = (a_(m-i) -
// a'_(m-i-1)) c_(m-i) follows from the coefficient relations.
bool eq15_follows_symbolically(int m, int i);

}  // namespace hilbnode

#endif
