#include "hilbnode/artin_ideal.hpp"

namespace hilbnode {

namespace {

ArtinScalar eps_shift(const ArtinScalar& v, int e) {
    // v * eps^e
    std::vector<Scalar> c(static_cast<std::size_t>(v.order()), v.field().zero());
    for (int j = 0; j + e < v.order(); ++j) c[static_cast<std::size_t>(j + e)] = v.coeff(j);
    return ArtinScalar::from_coeffs(std::move(c));
}

}  // namespace

ArtinIdeal::ArtinIdeal(std::vector<ArtinSeries> gens, int trunc_order) {
    if (gens.empty()) throw FieldError("ArtinIdeal needs at least one generator");
    n_ = trunc_order;
    const ArtinSeries& first = gens.front();
    if (first.trunc_order() != trunc_order) throw FieldError("generator truncation mismatch");
    order_ = first.c().order();
    mode_ = first.mode();
    t_ = mode_ == RingMode::Relative ? first.rel_t() : first.c().zero_like();
    ctx_ = first.c().field();
    gens_ = std::move(gens);

    // boundary relations of the truncated relative ring
    if (mode_ == RingMode::Relative && !t_.is_zero()) {
        ArtinScalar tj = t_.one_like();
        for (int j = 1; j <= n_; ++j) {
            tj = tj * t_;
            if (tj.is_zero()) break;
            ArtinSeries bx = ArtinSeries::monomial_x(n_, n_ + 1 - j, tj, mode_, t_);
            ArtinSeries by = ArtinSeries::monomial_y(n_, n_ + 1 - j, tj, mode_, t_);
            for (int e = 0; e < order_; ++e) {
                boundary_rows_.push_back(flatten(bx.scalar_mul(eps_shift(tj.one_like(), e))));
                boundary_rows_.push_back(flatten(by.scalar_mul(eps_shift(tj.one_like(), e))));
            }
        }
    }

    Mat rows = boundary_rows_;
    for (const auto& g : gens_) {
        if (g.trunc_order() != n_ || g.mode() != mode_ || !(g.c().order() == order_))
            throw FieldError("mixed generators in ArtinIdeal");
        for (const auto& mult : monomial_multiples(g))
            for (int e = 0; e < order_; ++e) {
                ArtinSeries shifted = mult.scalar_mul(eps_shift(mult.c().one_like(), e));
                if (!shifted.is_zero()) rows.push_back(flatten(shifted));
            }
    }
    span_ = Subspace::from_rows(flat_ambient(), ctx_, std::move(rows));
}

Vec ArtinIdeal::flatten(const ArtinSeries& z) const {
    Vec v(static_cast<std::size_t>(flat_ambient()), ctx_.zero());
    auto put = [&](int mon, const ArtinScalar& c) {
        for (int e = 0; e < order_; ++e) v[static_cast<std::size_t>(mon * order_ + e)] = c.coeff(e);
    };
    put(0, z.c());
    for (int i = 1; i <= n_; ++i) {
        put(i, z.x(i));
        put(n_ + i, z.y(i));
    }
    return v;
}

ArtinSeries ArtinIdeal::unflatten(const Vec& v) const {
    ArtinSeries z(n_, ArtinScalar(ctx_, order_), mode_, t_);
    auto get = [&](int mon) {
        std::vector<Scalar> c;
        for (int e = 0; e < order_; ++e) c.push_back(v[static_cast<std::size_t>(mon * order_ + e)]);
        return ArtinScalar::from_coeffs(std::move(c));
    };
    z.set_c(get(0));
    for (int i = 1; i <= n_; ++i) {
        z.set_x(i, get(i));
        z.set_y(i, get(n_ + i));
    }
    return z;
}

bool ArtinIdeal::contains(const ArtinSeries& z) const { return span_.contains(flatten(z)); }

bool ArtinIdeal::contains(const ArtinIdeal& other) const {
    if (n_ != other.n_ || order_ != other.order_) throw FieldError("ArtinIdeal shape mismatch");
    return span_.contains(other.span_);
}

bool ArtinIdeal::monomials_generate_quotient(const std::vector<std::pair<int, bool>>& monomials) const {
    Mat extra;
    for (const auto& [k, is_y] : monomials) {
        for (int e = 0; e < order_; ++e) {
            ArtinScalar c = eps_shift(ArtinScalar(ctx_.one(), order_), e);
            ArtinSeries mon = is_y ? ArtinSeries::monomial_y(n_, k, c, mode_, t_)
                                   : ArtinSeries::monomial_x(n_, k, c, mode_, t_);
            if (!mon.is_zero()) extra.push_back(flatten(mon));
        }
    }
    return span_.extended(extra).dim() == flat_ambient();
}

NodeIdeal ArtinIdeal::special_fibre() const {
    std::vector<FieldSeries> gens;
    for (const auto& g : gens_) {
        FieldSeries s(n_, ctx_.zero());
        s.set_c(g.c().residue());
        for (int i = 1; i <= n_; ++i) {
            s.set_x(i, g.x(i).residue());
            s.set_y(i, g.y(i).residue());
        }
        gens.push_back(std::move(s));
    }
    return NodeIdeal::from_generators(std::move(gens), n_);
}

bool is_zero_in_ring(const ArtinSeries& z) {
    if (z.is_zero()) return true;
    if (z.mode() != RingMode::Relative || z.rel_t().is_zero()) return false;
    const int n = z.trunc_order();
    const int order = z.c().order();
    const FieldCtx ctx = z.c().field();
    const ArtinScalar& t = z.rel_t();

    // span of the boundary relations, flattened as in ArtinIdeal
    auto flatten = [&](const ArtinSeries& s) {
        Vec v(static_cast<std::size_t>((2 * n + 1) * order), ctx.zero());
        auto put = [&](int mon, const ArtinScalar& c) {
            for (int e = 0; e < order; ++e) v[static_cast<std::size_t>(mon * order + e)] = c.coeff(e);
        };
        put(0, s.c());
        for (int i = 1; i <= n; ++i) {
            put(i, s.x(i));
            put(n + i, s.y(i));
        }
        return v;
    };
    Mat rows;
    ArtinScalar tj = t.one_like();
    for (int j = 1; j <= n; ++j) {
        tj = tj * t;
        if (tj.is_zero()) break;
        for (int e = 0; e < order; ++e) {
            ArtinScalar c = eps_shift(tj, e);
            if (c.is_zero()) continue;
            rows.push_back(flatten(ArtinSeries::monomial_x(n, n + 1 - j, c, z.mode(), t)));
            rows.push_back(flatten(ArtinSeries::monomial_y(n, n + 1 - j, c, z.mode(), t)));
        }
    }
    if (rows.empty()) return false;
    return Subspace::from_rows((2 * n + 1) * order, ctx, std::move(rows)).contains(flatten(z));
}

ArtinIdeal annihilator_quotient_artin(const ArtinIdeal& i_sub, const ArtinIdeal& j_super) {
    if (!j_super.contains(i_sub)) throw FieldError("annihilator requires I <= J");
    const int amb = i_sub.flat_ambient();
    const FieldCtx ctx = i_sub.span().ctx();

    Mat constraints;
    for (const auto& jrow : j_super.span().basis()) {
        ArtinSeries r = j_super.unflatten(jrow);
        Mat cols;
        for (int k = 0; k < amb; ++k) {
            Vec ek(static_cast<std::size_t>(amb), ctx.zero());
            ek[static_cast<std::size_t>(k)] = ctx.one();
            cols.push_back(i_sub.span().reduce(i_sub.flatten(i_sub.unflatten(ek) * r)));
        }
        for (int c = 0; c < amb; ++c) {
            Vec row(static_cast<std::size_t>(amb), ctx.zero());
            bool nonzero = false;
            for (int k = 0; k < amb; ++k) {
                row[static_cast<std::size_t>(k)] = cols[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)];
                nonzero = nonzero || !row[static_cast<std::size_t>(k)].is_zero();
            }
            if (nonzero) constraints.push_back(std::move(row));
        }
    }
    Mat ann = kernel(std::move(constraints), amb, ctx);
    std::vector<ArtinSeries> gens;
    for (const auto& row : ann) gens.push_back(i_sub.unflatten(row));
    if (gens.empty()) throw FieldError("annihilator computation produced the zero space");
    return ArtinIdeal(std::move(gens), i_sub.trunc_order());
}

}  // namespace hilbnode
