#include "hilbnode/charts.hpp"

namespace hilbnode {

namespace {

// m_S-valued or base-field-valued; a unit with nilpotent part is outside the
// chart's formal neighborhood.
void require_admissible(const ArtinScalar& v, const std::string& name) {
    if (v.coeff(0).is_zero()) return;
    for (int j = 1; j < v.order(); ++j)
        if (!v.coeff(j).is_zero())
            throw FieldError("chart coordinate " + name + " is a unit-valued deformation");
}

ArtinScalar zero_like_of(const QChartFree& f) { return f.B.zero_like(); }

}  // namespace

QChart::QChart(int m_, int i_, RingMode mode_) : m(m_), i(i_), mode(mode_) {
    if (m < 1 || i < 1 || i > m) throw FieldError("QChart needs 1 <= i <= m");
}

std::string QChart::b_name() const { return i >= 2 ? "b" + std::to_string(i - 1) : "a0"; }
std::string QChart::c_name() const { return "c" + std::to_string(m - i); }

std::vector<std::string> QChart::free_names() const {
    std::vector<std::string> names;
    for (int j = 1; j <= m - i; ++j) names.push_back("a" + std::to_string(j));
    for (int j = 1; j <= i - 1; ++j) names.push_back("d" + std::to_string(j));
    names.push_back(b_name());
    names.push_back(c_name());
    return names;
}

int QChart::dimension() const { return mode == RingMode::Absolute ? m : m + 1; }

CChart::CChart(int m_, int i_, RingMode mode_) : m(m_), i(i_), mode(mode_) {
    if (m < 2 || i < 1 || i > m - 1) throw FieldError("CChart needs 1 <= i <= m-1");
}

std::vector<std::string> CChart::free_names() const {
    std::vector<std::string> names{"a~"};
    for (int j = 0; j <= m - i - 1; ++j) names.push_back("a" + std::to_string(j));
    for (int j = 1; j <= i - 1; ++j) names.push_back("b" + std::to_string(j));
    if (mode == RingMode::Relative) names.push_back("s");
    return names;
}

int CChart::dimension() const { return mode == RingMode::Absolute ? m : m + 1; }

int chart_dimension(const QChart& chart) { return chart.dimension(); }
int chart_dimension(const CChart& chart) { return chart.dimension(); }

QChartCoeffs coeffs_from_free(const QChart& chart, const QChartFree& free_coords) {
    const int m = chart.m, i = chart.i;
    if (static_cast<int>(free_coords.a.size()) != m - i ||
        static_cast<int>(free_coords.d.size()) != i - 1)
        throw FieldError("free coordinate lists have the wrong lengths");
    for (std::size_t k = 0; k < free_coords.a.size(); ++k)
        require_admissible(free_coords.a[k], "a" + std::to_string(k + 1));
    for (std::size_t k = 0; k < free_coords.d.size(); ++k)
        require_admissible(free_coords.d[k], "d" + std::to_string(k + 1));
    require_admissible(free_coords.B, chart.b_name());
    require_admissible(free_coords.C, chart.c_name());

    ArtinScalar zero = zero_like_of(free_coords);
    QChartCoeffs co;
    co.m = m;
    co.i = i;
    co.a.assign(static_cast<std::size_t>(m - i + 1), zero);
    co.c.assign(static_cast<std::size_t>(m - i + 1), zero);
    co.b.assign(static_cast<std::size_t>(i - 1), zero);
    co.d.assign(static_cast<std::size_t>(i - 1), zero);

    for (int j = 1; j <= m - i; ++j) co.a[static_cast<std::size_t>(j)] = free_coords.a[static_cast<std::size_t>(j - 1)];
    for (int j = 1; j <= i - 1; ++j) co.d[static_cast<std::size_t>(j - 1)] = free_coords.d[static_cast<std::size_t>(j - 1)];

    if (i >= 2) {
        co.b[static_cast<std::size_t>(i - 2)] = free_coords.B;                       // b_(i-1)
        for (int j = 1; j <= i - 2; ++j)                                             // b_j = b_(i-1) d_(j+1)
            co.b[static_cast<std::size_t>(j - 1)] = free_coords.B * co.d[static_cast<std::size_t>(j)];
        co.a[0] = free_coords.B * co.d[0];                                           // a_0 = b_(i-1) d_1
    } else {
        co.a[0] = free_coords.B;
    }
    co.c[static_cast<std::size_t>(m - i)] = free_coords.C;                           // c_(m-i)
    for (int j = 0; j <= m - i - 1; ++j)                                             // c_j = c_(m-i) a_(j+1)
        co.c[static_cast<std::size_t>(j)] = free_coords.C * co.a[static_cast<std::size_t>(j + 1)];
    return co;
}

std::pair<ArtinSeries, ArtinSeries> synthesize_generators(const QChart& chart,
                                                          const QChartCoeffs& coeffs,
                                                          int trunc_order) {
    const int m = chart.m, i = chart.i;
    if (coeffs.m != m || coeffs.i != i) throw FieldError("coefficient block shape mismatch");
    if (trunc_order < m + 1 - i || trunc_order < i) throw FieldError("truncation too small for the chart");
    ArtinScalar zero = coeffs.ccoord().zero_like();
    ArtinScalar one = coeffs.ccoord().one_like();
    ArtinScalar t = zero;
    if (chart.mode == RingMode::Relative) t = coeffs.bcoord() * coeffs.ccoord();

    ArtinSeries f(trunc_order, zero, chart.mode, t);
    f.set_x(m + 1 - i, one);
    f.set_c(coeffs.a[0]);
    for (int j = 1; j <= m - i; ++j) f.set_x(j, f.x(j) + coeffs.a[static_cast<std::size_t>(j)]);
    for (int j = 1; j <= i - 1; ++j) f.set_y(j, coeffs.b[static_cast<std::size_t>(j - 1)]);

    ArtinSeries g(trunc_order, zero, chart.mode, t);
    g.set_y(i, one);
    g.set_c(coeffs.c[0]);
    for (int j = 1; j <= m - i; ++j) g.set_x(j, coeffs.c[static_cast<std::size_t>(j)]);
    for (int j = 1; j <= i - 1; ++j) g.set_y(j, g.y(j) + coeffs.d[static_cast<std::size_t>(j - 1)]);
    return {f, g};
}

std::pair<ArtinSeries, ArtinSeries> synthesize_generators(const QChart& chart,
                                                          const QChartFree& free_coords,
                                                          int trunc_order) {
    return synthesize_generators(chart, coeffs_from_free(chart, free_coords), trunc_order);
}

namespace {

void push_line(RelationReport& report, const std::string& name, const ArtinScalar& lhs,
               const ArtinScalar& rhs) {
    bool ok = lhs == rhs;
    report.lines.push_back({name + ": " + lhs.str() + " = " + rhs.str(), ok});
    report.all_hold = report.all_hold && ok;
}

}  // namespace

RelationReport check_relations_7(const QChart& chart, const QChartCoeffs& coeffs,
                                 const ArtinScalar& s) {
    const int m = chart.m, i = chart.i;
    const bool rel = chart.mode == RingMode::Relative;
    RelationReport report;
    ArtinScalar zero = coeffs.ccoord().zero_like();
    auto a = [&](int j) { return coeffs.a.at(static_cast<std::size_t>(j)); };
    auto b = [&](int j) { return coeffs.b.at(static_cast<std::size_t>(j - 1)); };
    auto c = [&](int j) { return coeffs.c.at(static_cast<std::size_t>(j)); };
    auto d = [&](int j) { return coeffs.d.at(static_cast<std::size_t>(j - 1)); };

    if (i == 1) {
        for (int j = 0; j <= m - 2; ++j)
            push_line(report, "line4 j=" + std::to_string(j), c(j), c(m - 1) * a(j + 1));
        if (!rel) {
            push_line(report, "line5", c(m - 1) * a(0), zero);
        } else {
            for (int j = 0; j <= m - 2; ++j)
                push_line(report, "line3' j=" + std::to_string(j), a(0) * c(j), s * a(j + 1));
            push_line(report, "(*)", a(0) * c(m - 1), s);
        }
        return report;
    }

    for (int j = 1; j <= i - 2; ++j)
        push_line(report, "line1 j=" + std::to_string(j), b(j), b(i - 1) * d(j + 1));
    push_line(report, "line2", b(i - 1) * d(1), a(0));
    if (!rel) {
        for (int j = 0; j <= m - i; ++j)
            push_line(report, "line3 j=" + std::to_string(j), b(i - 1) * c(j), zero);
    } else {
        for (int j = 0; j <= m - i - 1; ++j)
            push_line(report, "line3' j=" + std::to_string(j), b(i - 1) * c(j), s * a(j + 1));
    }
    for (int j = 0; j <= m - i - 1; ++j)
        push_line(report, "line4 j=" + std::to_string(j), c(j), c(m - i) * a(j + 1));
    if (!rel) {
        push_line(report, "line5", c(m - i) * a(0), zero);
        for (int j = 1; j <= i - 1; ++j)
            push_line(report, "line6 j=" + std::to_string(j), c(m - i) * b(j), zero);
    } else {
        push_line(report, "line5'", c(m - i) * a(0), s * d(1));
        for (int j = 1; j <= i - 2; ++j)
            push_line(report, "line6' j=" + std::to_string(j), c(m - i) * b(j), s * d(j + 1));
        push_line(report, "(*)", b(i - 1) * c(m - i), s);
    }
    return report;
}

bool check_relations_8(const QChart& chart, const ArtinSeries& f, const ArtinSeries& g) {
    const int m = chart.m, i = chart.i;
    ArtinScalar B = i >= 2 ? f.y(i - 1) : f.c();
    ArtinScalar C = i <= m - 1 ? g.x(m - i) : g.c();
    ArtinScalar one = B.one_like();
    ArtinSeries x = ArtinSeries::monomial_x(f.trunc_order(), 1, one, f.mode(), f.rel_t());
    ArtinSeries y = ArtinSeries::monomial_y(f.trunc_order(), 1, one, f.mode(), f.rel_t());
    return is_zero_in_ring(y * f - g.scalar_mul(B)) && is_zero_in_ring(x * g - f.scalar_mul(C));
}

bool verify_flatness(const std::vector<ArtinSeries>& gens, int m, int i) {
    if (gens.empty()) throw FieldError("verify_flatness needs generators");
    const int order = gens.front().c().order();
    ArtinIdeal ideal(gens, gens.front().trunc_order());
    if (ideal.colength_k() != m * order) return false;
    std::vector<std::pair<int, bool>> monomials{{0, false}};
    for (int k = 1; k <= m - i; ++k) monomials.push_back({k, false});
    for (int k = 1; k <= i - 1; ++k) monomials.push_back({k, true});
    return ideal.monomials_generate_quotient(monomials);
}

MPoly chart_equation(const QChart& chart) {
    FieldCtx q = FieldCtx::rationals();
    MPoly eq = MPoly::var(chart.b_name(), q) * MPoly::var(chart.c_name(), q);
    if (chart.mode == RingMode::Relative) eq = eq - MPoly::var("s", q);
    return eq;
}

PunctualRestriction punctual_subscheme_equations(const QChart& chart) {
    if (chart.mode != RingMode::Absolute)
        throw FieldError("punctual restriction applies to the absolute chart");
    PunctualRestriction out;
    for (int j = 1; j <= chart.m - chart.i; ++j) out.vanishing.push_back("a" + std::to_string(j));
    for (int j = 1; j <= chart.i - 1; ++j) out.vanishing.push_back("d" + std::to_string(j));
    bool b_dead = chart.i == 1;   // f(x,0) = x^(m-i+1) also kills a_0
    bool c_dead = chart.i == chart.m;  // g(0,y) = y^i also kills c_0
    if (b_dead) out.vanishing.push_back("a0");
    if (c_dead) out.vanishing.push_back("c0");
    if (!b_dead) out.residual_coords.push_back(chart.b_name());
    if (!c_dead) out.residual_coords.push_back(chart.c_name());
    if (!b_dead && !c_dead)
        out.node_equation = chart.b_name() + "*" + chart.c_name() + " = 0";
    return out;
}

ChartBranchData absolute_chart_branches(const QChart& chart) {
    if (chart.mode != RingMode::Absolute) throw FieldError("branch data is for the absolute chart");
    ChartBranchData data;
    data.branch_count = 2;
    data.branch_dim = chart.m;          // m+1 free coordinates, one killed per branch
    data.intersection_dim = chart.m - 1;
    data.branch_vars = {chart.b_name(), chart.c_name()};
    return data;
}

ArtinSeries synthesize_c_generator(const CChart& chart, const CChartFree& free_coords,
                                   int trunc_order) {
    const int m = chart.m, i = chart.i;
    if (static_cast<int>(free_coords.a.size()) != m - i ||
        static_cast<int>(free_coords.b.size()) != i - 1)
        throw FieldError("free coordinate lists have the wrong lengths");
    if (!free_coords.a_tilde.is_unit()) throw FieldError("a~ must be a unit on the C chart");
    for (std::size_t k = 0; k < free_coords.a.size(); ++k)
        require_admissible(free_coords.a[k], "a" + std::to_string(k));
    for (std::size_t k = 0; k < free_coords.b.size(); ++k)
        require_admissible(free_coords.b[k], "b" + std::to_string(k + 1));

    ArtinScalar zero = free_coords.a_tilde.zero_like();
    ArtinScalar one = free_coords.a_tilde.one_like();
    ArtinScalar t = chart.mode == RingMode::Relative ? free_coords.s : zero;
    ArtinSeries g(trunc_order, zero, chart.mode, t);
    g.set_y(i, one);
    g.set_x(m - i, free_coords.a_tilde);
    g.set_c(free_coords.a.empty() ? zero : free_coords.a[0]);
    for (int j = 1; j <= m - i - 1; ++j)
        g.set_x(j, g.x(j) + free_coords.a[static_cast<std::size_t>(j)]);
    for (int j = 1; j <= i - 1; ++j) g.set_y(j, g.y(j) + free_coords.b[static_cast<std::size_t>(j - 1)]);
    return g;
}

}  // namespace hilbnode
