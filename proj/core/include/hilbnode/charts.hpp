#ifndef HILBNODE_CHARTS_HPP
#define HILBNODE_CHARTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "hilbnode/artin_ideal.hpp"
#include "hilbnode/mpoly.hpp"

namespace hilbnode {

// Local chart of the length-m locus centered at Q[m,i].  Free coordinates
// a_1..a_(m-i), d_1..d_(i-1) and the two transverse ones B, C; B is b_(i-1)
// for i >= 2 and takes the role of a_0 when i = 1, C is c_(m-i).  The
// remaining coefficients are recovered through the relation rewrite.
struct QChart {
    int m = 0;
    int i = 0;
    RingMode mode = RingMode::Absolute;

    QChart(int m_, int i_, RingMode mode_);

    std::string b_name() const;  // "b{i-1}" or "a0"
    std::string c_name() const;  // "c{m-i}"
    std::vector<std::string> free_names() const;
    int dimension() const;  // m absolute, m+1 relative
};

// Principal chart centered at a C-type point: coordinates
// (a~, a_0..a_(m-i-1), b_1..b_(i-1)), no relations.
struct CChart {
    int m = 0;
    int i = 0;
    RingMode mode = RingMode::Absolute;

    CChart(int m_, int i_, RingMode mode_);
    std::vector<std::string> free_names() const;
    int dimension() const;  // m absolute, m+1 relative (s is free there)
};

// Full coefficient assignment of the generator pair
//   f = x^(m+1-i) + sum a_j x^j + sum b_j y^j
//   g = y^i       + sum c_j x^j + sum d_j y^j
struct QChartCoeffs {
    int m = 0;
    int i = 0;
    std::vector<ArtinScalar> a;  // indices 0..m-i
    std::vector<ArtinScalar> b;  // indices 1..i-1 stored from slot 0
    std::vector<ArtinScalar> c;  // indices 0..m-i
    std::vector<ArtinScalar> d;  // indices 1..i-1 stored from slot 0

    const ArtinScalar& bcoord() const { return i >= 2 ? b.back() : a.front(); }
    const ArtinScalar& ccoord() const { return c.back(); }
};

struct QChartFree {
    std::vector<ArtinScalar> a;  // a_1..a_(m-i)
    std::vector<ArtinScalar> d;  // d_1..d_(i-1)
    ArtinScalar B, C;
};

// Dependent-coefficient fill-in following the relation lines as left-to-right
// rewrite rules; deterministic canonical form of a chart point.
QChartCoeffs coeffs_from_free(const QChart& chart, const QChartFree& free_coords);

// Generator pair of a coefficient assignment; in relative mode the ring
// relation is xy = s with s = B*C.  Deformation values must lie in m_S or in
// the base field.
std::pair<ArtinSeries, ArtinSeries> synthesize_generators(const QChart& chart,
                                                          const QChartCoeffs& coeffs,
                                                          int trunc_order);
std::pair<ArtinSeries, ArtinSeries> synthesize_generators(const QChart& chart,
                                                          const QChartFree& free_coords,
                                                          int trunc_order);

struct RelationLine {
    std::string name;
    bool holds = false;
};
struct RelationReport {
    std::vector<RelationLine> lines;
    bool all_hold = true;
};

// The six-line coefficient relation system (with the stated replacements in
// relative mode, plus the bc = s relation); for i = 1 only the operational
// lines appear.
RelationReport check_relations_7(const QChart& chart, const QChartCoeffs& coeffs,
                                 const ArtinScalar& s);

// The equivalent pair of exact identities y f - B g = 0 = x g - C f,
// evaluated in the (truncated) ring itself.
bool check_relations_8(const QChart& chart, const ArtinSeries& f, const ArtinSeries& g);

// S-freeness of rank m for the ideal (f, g) (+ xy - s in relative mode):
// k-length m * order plus generation by the m standard monomials
// 1, x..x^(m-i), y..y^(i-1).
bool verify_flatness(const std::vector<ArtinSeries>& gens, int m, int i);

int chart_dimension(const QChart& chart);
int chart_dimension(const CChart& chart);

// Local equation of the chart (B*C in absolute mode, B*C - s relative).
MPoly chart_equation(const QChart& chart);

// Vanishing conditions cutting the punctual locus out of the chart, plus the
// residual equation when both transverse coordinates survive.
struct PunctualRestriction {
    std::vector<std::string> vanishing;
    std::vector<std::string> residual_coords;
    std::optional<std::string> node_equation;
};
PunctualRestriction punctual_subscheme_equations(const QChart& chart);

// Branch structure of the absolute chart equation: two components of
// dimension m meeting in dimension m-1.
struct ChartBranchData {
    int branch_count = 0;
    int branch_dim = 0;
    int intersection_dim = 0;
    std::vector<std::string> branch_vars;
};
ChartBranchData absolute_chart_branches(const QChart& chart);

// C-chart generator y^i + a~ x^(m-i) + f_1(x) + f_2(y).
struct CChartFree {
    ArtinScalar a_tilde;         // unit
    std::vector<ArtinScalar> a;  // a_0..a_(m-i-1)
    std::vector<ArtinScalar> b;  // b_1..b_(i-1)
    ArtinScalar s;               // relative mode only; ignored otherwise
};
ArtinSeries synthesize_c_generator(const CChart& chart, const CChartFree& free_coords,
                                   int trunc_order);

}  // namespace hilbnode

#endif
