#include "hilbnode/node_series.hpp"

namespace hilbnode {

std::string ElementType::str() const {
    if (beta == 0) return "(" + std::to_string(alpha) + ",0)";
    if (alpha == 0) return "(0," + std::to_string(beta) + ")";
    return "(" + std::to_string(alpha) + "," + std::to_string(beta) + "; a=" + param.str() + ")";
}

template <class T>
std::string NodeSeries<T>::str() const {
    std::string s;
    auto term = [&](const T& c, const std::string& mon) {
        if (coeff_is_zero(c)) return;
        if (!s.empty()) s += " + ";
        std::string cs = c.str();
        if (mon.empty()) {
            s += cs;
            return;
        }
        if (cs != "1") s += cs + "*";
        s += mon;
    };
    term(c0_, "");
    for (int i = 1; i <= n_; ++i) term(xc_[i - 1], i == 1 ? "x" : "x^" + std::to_string(i));
    for (int i = 1; i <= n_; ++i) term(yc_[i - 1], i == 1 ? "y" : "y^" + std::to_string(i));
    return s.empty() ? "0" : s;
}

template std::string NodeSeries<Scalar>::str() const;
template std::string NodeSeries<ArtinScalar>::str() const;

std::pair<ElementType, FieldSeries> associate_normal_form(const FieldSeries& z) {
    if (z.mode() != RingMode::Absolute) throw FieldError("associate_normal_form needs absolute mode");
    if (z.is_zero()) throw FieldError("associate_normal_form of zero");
    if (z.is_unit()) throw FieldError("associate_normal_form of a unit");

    const int n = z.trunc_order();
    const FieldCtx ctx = z.c().ctx();
    int alpha = 0, beta = 0;
    for (int i = 1; i <= n; ++i)
        if (!z.x(i).is_zero()) {
            alpha = i;
            break;
        }
    for (int i = 1; i <= n; ++i)
        if (!z.y(i).is_zero()) {
            beta = i;
            break;
        }

    // z = x^alpha U(x) + y^beta V(y); the witness unit is built so that
    // u * (x^alpha + a y^beta) reproduces z exactly within the truncation.
    FieldSeries unit(n, ctx.zero());
    ElementType type;
    type.alpha = alpha;
    type.beta = beta;
    type.param = ctx.zero();

    if (alpha > 0) {
        unit.set_c(z.x(alpha));
        for (int i = alpha + 1; i <= n; ++i) unit.set_x(i - alpha, z.x(i));
    } else {
        unit.set_c(z.y(beta));
    }
    if (beta > 0) {
        if (alpha > 0) {
            // param a = V(0)/U(0); y-tail of the unit is V(y)/a - U(0)
            Scalar a = z.y(beta) / z.x(alpha);
            type.param = a;
            Scalar ai = a.inv();
            for (int i = beta + 1; i <= n; ++i) unit.set_y(i - beta, z.y(i) * ai);
        } else {
            for (int i = beta + 1; i <= n; ++i) unit.set_y(i - beta, z.y(i));
        }
    }
    return {type, unit};
}

FieldSeries normal_form_series(const ElementType& t, int trunc_order, const FieldCtx& ctx) {
    FieldSeries s(trunc_order, ctx.zero());
    if (t.alpha > 0 && t.alpha <= trunc_order) s.set_x(t.alpha, ctx.one());
    if (t.beta > 0 && t.beta <= trunc_order)
        s.set_y(t.beta, t.alpha > 0 ? t.param : ctx.one());
    return s;
}

template <class T>
std::vector<NodeSeries<T>> monomial_multiples(const NodeSeries<T>& z) {
    std::vector<NodeSeries<T>> out;
    if (z.is_zero()) return out;
    const int n = z.trunc_order();
    out.push_back(z);
    NodeSeries<T> x = NodeSeries<T>::monomial_x(n, 1, coeff_one_like(z.c()), z.mode(), z.rel_t());
    NodeSeries<T> y = NodeSeries<T>::monomial_y(n, 1, coeff_one_like(z.c()), z.mode(), z.rel_t());
    NodeSeries<T> cur = z;
    for (int i = 1; i <= n; ++i) {
        cur = cur * x;
        if (cur.is_zero()) break;
        out.push_back(cur);
    }
    cur = z;
    for (int i = 1; i <= n; ++i) {
        cur = cur * y;
        if (cur.is_zero()) break;
        out.push_back(cur);
    }
    return out;
}

template std::vector<NodeSeries<Scalar>> monomial_multiples(const NodeSeries<Scalar>&);
template std::vector<NodeSeries<ArtinScalar>> monomial_multiples(const NodeSeries<ArtinScalar>&);

Vec series_to_vec(const FieldSeries& s) {
    const int n = s.trunc_order();
    Vec v;
    v.reserve(static_cast<std::size_t>(2 * n + 1));
    v.push_back(s.c());
    for (int i = 1; i <= n; ++i) v.push_back(s.x(i));
    for (int i = 1; i <= n; ++i) v.push_back(s.y(i));
    return v;
}

FieldSeries series_from_vec(const Vec& v, int trunc_order, const FieldCtx& ctx) {
    if (static_cast<int>(v.size()) != 2 * trunc_order + 1)
        throw FieldError("series_from_vec: wrong coordinate length");
    FieldSeries s(trunc_order, ctx.zero());
    s.set_c(v[0]);
    for (int i = 1; i <= trunc_order; ++i) {
        s.set_x(i, v[static_cast<std::size_t>(i)]);
        s.set_y(i, v[static_cast<std::size_t>(trunc_order + i)]);
    }
    return s;
}

}  // namespace hilbnode
