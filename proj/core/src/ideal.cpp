#include "hilbnode/ideal.hpp"

#include <algorithm>

#include "hilbnode/upoly.hpp"

namespace hilbnode {

IdealType IdealType::c_type(int m, int i, Scalar a) {
    if (i < 1 || i > m - 1) throw FieldError("C-type index out of range");
    if (a.is_zero()) throw FieldError("C-type parameter must be nonzero");
    IdealType t;
    t.kind = Kind::C;
    t.m = m;
    t.i = i;
    t.param = std::move(a);
    return t;
}

IdealType IdealType::q_type(int m, int i) {
    if (i < 1 || i > m) throw FieldError("Q-type index out of range");
    IdealType t;
    t.kind = Kind::Q;
    t.m = m;
    t.i = i;
    return t;
}

std::string IdealType::str() const {
    std::string s = kind == Kind::Q ? "Q[" : "C[";
    s += std::to_string(m) + "," + std::to_string(i) + "]";
    if (kind == Kind::C) s += "(" + param.str() + ")";
    return s;
}

NodeIdeal NodeIdeal::from_generators(std::vector<FieldSeries> gens, int trunc_order) {
    NodeIdeal ideal;
    ideal.n_ = trunc_order;
    Mat rows;
    for (const auto& g : gens) {
        if (g.trunc_order() != trunc_order) throw FieldError("generator truncation mismatch");
        if (g.mode() != RingMode::Absolute) throw FieldError("NodeIdeal works in absolute mode");
        ideal.ctx_ = g.c().ctx();
        for (const auto& mult : monomial_multiples(g)) rows.push_back(series_to_vec(mult));
    }
    if (gens.empty()) throw FieldError("ideal needs at least one generator");
    ideal.gens_ = std::move(gens);
    ideal.space_ = Subspace::from_rows(2 * trunc_order + 1, ideal.ctx_, std::move(rows));
    ideal.colength_ = 2 * trunc_order + 1 - ideal.space_.dim();
    return ideal;
}

namespace {

Vec unit_vec(int ambient, int pos, const FieldCtx& ctx) {
    Vec v(static_cast<std::size_t>(ambient), ctx.zero());
    v[static_cast<std::size_t>(pos)] = ctx.one();
    return v;
}

// coordinate index of x^k resp. y^k in (1, x..x^N, y..y^N)
int xcoord(int k, int) { return k; }
int ycoord(int k, int n) { return n + k; }

}  // namespace

bool NodeIdeal::colength_faithful() const {
    if (colength_ > n_) return false;
    if (colength_ == 0) return true;
    const int amb = 2 * n_ + 1;
    return space_.contains(unit_vec(amb, xcoord(colength_, n_), ctx_)) &&
           space_.contains(unit_vec(amb, ycoord(colength_, n_), ctx_));
}

bool NodeIdeal::contains_element(const FieldSeries& z) const {
    return space_.contains(series_to_vec(z));
}

bool NodeIdeal::contains_ideal(const NodeIdeal& other) const {
    if (other.n_ != n_) throw FieldError("truncation order mismatch in containment");
    return space_.contains(other.space_);
}

NodeIdeal canonical_ideal(const IdealType& t, const FieldCtx& ctx, int trunc_order) {
    if (trunc_order < t.m) throw FieldError("truncation order below colength");
    std::vector<FieldSeries> gens;
    if (t.kind == IdealType::Kind::Q) {
        gens.push_back(FieldSeries::monomial_x(trunc_order, t.m - t.i + 1, ctx.one()));
        gens.push_back(FieldSeries::monomial_y(trunc_order, t.i, ctx.one()));
    } else {
        FieldSeries g = FieldSeries::monomial_y(trunc_order, t.i, ctx.one());
        Scalar a = t.param;
        if (a.ctx() != ctx) throw FieldError("C-type parameter from a different field");
        if (t.m - t.i == 0)
            g.set_c(a);
        else
            g.set_x(t.m - t.i, a);
        gens.push_back(std::move(g));
    }
    return NodeIdeal::from_generators(std::move(gens), trunc_order);
}

IdealType classify(const NodeIdeal& ideal) {
    const int m = ideal.colength();
    if (m < 1) throw ClassifyError("classify: colength must be >= 1");
    if (!ideal.colength_faithful())
        throw ClassifyError("classify: truncation too small for colength " + std::to_string(m));
    const int n = ideal.trunc_order();
    const int amb = 2 * n + 1;
    const FieldCtx& ctx = ideal.ctx();

    for (int i = 1; i <= m; ++i)
        if (ideal == canonical_ideal(IdealType::q_type(m, i), ctx, n)) return IdealType::q_type(m, i);

    for (int i = 1; i <= m - 1; ++i) {
        // y^i + a x^(m-i) in I for some a != 0  <=>  red(y^i) = -a red(x^(m-i))
        Vec ry = ideal.space().reduce(unit_vec(amb, ycoord(i, n), ctx));
        Vec rx = ideal.space().reduce(unit_vec(amb, xcoord(m - i, n), ctx));
        if (vec_is_zero(rx) || vec_is_zero(ry)) continue;
        std::size_t c = 0;
        while (c < rx.size() && rx[c].is_zero()) ++c;
        if (ry[c].is_zero()) continue;
        Scalar a = -(ry[c] / rx[c]);
        bool proportional = true;
        for (std::size_t j = 0; j < rx.size(); ++j)
            if (ry[j] != -(a * rx[j])) {
                proportional = false;
                break;
            }
        if (!proportional || a.is_zero()) continue;
        IdealType t = IdealType::c_type(m, i, a);
        if (ideal == canonical_ideal(t, ctx, n)) return t;
    }
    throw ClassifyError("classification failure at colength " + std::to_string(m));
}

IdealType classify_by_minimal_element(const NodeIdeal& ideal) {
    const int m = ideal.colength();
    if (m < 1 || !ideal.colength_faithful()) throw ClassifyError("colength not certified");
    const int n = ideal.trunc_order();
    const int amb = 2 * n + 1;
    const FieldCtx& ctx = ideal.ctx();

    int alpha_star = 0, beta_star = 0;
    for (int k = 1; k <= n; ++k)
        if (ideal.space().contains(unit_vec(amb, xcoord(k, n), ctx))) {
            alpha_star = k;
            break;
        }
    for (int k = 1; k <= n; ++k)
        if (ideal.space().contains(unit_vec(amb, ycoord(k, n), ctx))) {
            beta_star = k;
            break;
        }
    if (alpha_star == 0 || beta_star == 0) throw ClassifyError("no pure powers found in ideal");

    NodeIdeal q = NodeIdeal::from_generators(
        {FieldSeries::monomial_x(n, alpha_star, ctx.one()), FieldSeries::monomial_y(n, beta_star, ctx.one())}, n);
    if (ideal == q) return IdealType::q_type(alpha_star - 1 + beta_star, beta_star);

    // minimal mixed element y^(beta*-1) + a x^(alpha*-1)
    const int alpha = alpha_star - 1, beta = beta_star - 1;
    if (alpha < 1 || beta < 1) throw ClassifyError("minimal-element argument failed");
    Vec ry = ideal.space().reduce(unit_vec(amb, ycoord(beta, n), ctx));
    Vec rx = ideal.space().reduce(unit_vec(amb, xcoord(alpha, n), ctx));
    std::size_t c = 0;
    while (c < rx.size() && rx[c].is_zero()) ++c;
    if (c == rx.size() || ry[c].is_zero()) throw ClassifyError("minimal-element argument failed");
    Scalar a = -(ry[c] / rx[c]);
    IdealType t = IdealType::c_type(alpha + beta, beta, a);
    if (ideal != canonical_ideal(t, ctx, n)) throw ClassifyError("minimal-element verification failed");
    return t;
}

namespace {

// a -> 1/b entry-wise: p(a)/q(a) = b^(deg q - deg p) rev(p)(b) / rev(q)(b)
Scalar substitute_inverse(const Scalar& s) {
    if (!s.is_rat_fn()) return s;
    const RatFn& f = s.fn();
    if (f.num.empty()) return s;
    RatFn r;
    r.num = poly_reverse(f.num);
    r.den = poly_reverse(f.den);
    int shift = poly_deg(f.den) - poly_deg(f.num);
    FieldCtx base = f.den.back().ctx();
    UPoly pow(static_cast<std::size_t>(shift >= 0 ? shift : -shift), base.zero());
    pow.push_back(base.one());
    if (shift >= 0)
        r.num = poly_mul(r.num, pow);
    else
        r.den = poly_mul(r.den, pow);
    return Scalar::rat_fn(std::move(r));
}

int ord_at_zero(const Scalar& s) {
    // valuation of a reduced nonzero fraction at a=0
    const RatFn& f = s.fn();
    return poly_ord(f.num) - poly_ord(f.den);
}

// Lattice specialization of a row space over k(a) at a=0: row-wise limits,
// refined whenever evaluation drops rank.
Mat grassmann_limit_at_zero(Mat rows, const FieldCtx& base) {
    const FieldCtx ka = FieldCtx::rat_fn_over(base);
    for (int guard = 0; guard < 1000; ++guard) {
        Mat eval;
        eval.reserve(rows.size());
        for (const auto& r : rows) eval.push_back(rational_function_limit(r, LimitPoint::AtZero));
        Mat checker = eval;
        if (rref(checker) == static_cast<int>(rows.size())) return eval;

        // some k-combination of the evaluated rows vanishes; lift it, divide
        // out the extra power of a, and replace the highest involved row
        Mat constraints;  // transpose: columns of eval as constraint rows
        const std::size_t amb = eval[0].size();
        for (std::size_t c = 0; c < amb; ++c) {
            Vec row(eval.size(), base.zero());
            for (std::size_t r = 0; r < eval.size(); ++r) row[r] = eval[r][c];
            constraints.push_back(std::move(row));
        }
        Mat ker = kernel(std::move(constraints), static_cast<int>(eval.size()), base);
        if (ker.empty()) throw FieldError("grassmann limit refinement failed");
        const Vec& combo = ker[0];
        // normalized row representatives: row_i / a^{v_i}; rebuild them
        std::size_t last = 0;
        Vec lifted(rows[0].size(), ka.zero());
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (combo[r].is_zero()) continue;
            last = r;
            // normalize row r by its own minimal valuation first
            int vmin = 0;
            bool first = true;
            for (const auto& e : rows[r]) {
                if (e.is_zero()) continue;
                int v = ord_at_zero(e);
                if (first || v < vmin) vmin = v, first = false;
            }
            Scalar shift = ka.one();
            Scalar aa = ka.indeterminate();
            for (int q = 0; q < (vmin >= 0 ? vmin : -vmin); ++q) shift *= aa;
            Scalar factor = Scalar::rat_fn_const(combo[r]);
            factor = vmin >= 0 ? factor / shift : factor * shift;
            for (std::size_t c = 0; c < lifted.size(); ++c) lifted[c] += factor * rows[r][c];
        }
        rows[last] = std::move(lifted);
    }
    throw FieldError("grassmann limit did not stabilize");
}

}  // namespace

NodeIdeal flat_limit(int m, int i, LimitPoint at, const FieldCtx& base_ctx, int trunc_order) {
    const FieldCtx ka = FieldCtx::rat_fn_over(base_ctx);
    IdealType family = IdealType::c_type(m, i, ka.indeterminate());
    NodeIdeal over_ka = canonical_ideal(family, ka, trunc_order);

    Mat rows = over_ka.space().basis();
    if (at == LimitPoint::AtInfinity)
        for (auto& row : rows)
            for (auto& e : row) e = substitute_inverse(e);
    Mat limit = grassmann_limit_at_zero(std::move(rows), base_ctx);

    std::vector<FieldSeries> gens;
    for (const auto& row : limit) gens.push_back(series_from_vec(row, trunc_order, base_ctx));
    return NodeIdeal::from_generators(std::move(gens), trunc_order);
}

NodeIdeal annihilator_quotient(const NodeIdeal& i_sub, const NodeIdeal& j_super) {
    if (i_sub.trunc_order() != j_super.trunc_order()) throw FieldError("truncation order mismatch");
    if (!j_super.contains_ideal(i_sub)) throw FieldError("annihilator_quotient requires I <= J");
    if (j_super.colength() + 1 != i_sub.colength())
        throw FieldError("annihilator_quotient requires colength difference 1");

    const int n = i_sub.trunc_order();
    const int amb = 2 * n + 1;
    const FieldCtx& ctx = i_sub.ctx();

    Mat constraints;
    for (const auto& jrow : j_super.space().basis()) {
        FieldSeries r = series_from_vec(jrow, n, ctx);
        // columns: residue of e_k * r modulo I, one constraint row per residue coord
        Mat cols;
        for (int k = 0; k < amb; ++k) {
            FieldSeries ek = series_from_vec(unit_vec(amb, k, ctx), n, ctx);
            cols.push_back(i_sub.space().reduce(series_to_vec(ek * r)));
        }
        for (int c = 0; c < amb; ++c) {
            Vec constraint(static_cast<std::size_t>(amb), ctx.zero());
            bool nonzero = false;
            for (int k = 0; k < amb; ++k) {
                constraint[static_cast<std::size_t>(k)] = cols[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)];
                nonzero = nonzero || !constraint[static_cast<std::size_t>(k)].is_zero();
            }
            if (nonzero) constraints.push_back(std::move(constraint));
        }
    }
    Mat ann = kernel(std::move(constraints), amb, ctx);
    if (ann.empty()) throw FieldError("annihilator computation produced the zero space");
    std::vector<FieldSeries> gens;
    for (const auto& row : ann) gens.push_back(series_from_vec(row, n, ctx));
    return NodeIdeal::from_generators(std::move(gens), n);
}

}  // namespace hilbnode
