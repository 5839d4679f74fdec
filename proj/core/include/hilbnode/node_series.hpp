#ifndef HILBNODE_NODE_SERIES_HPP
#define HILBNODE_NODE_SERIES_HPP

#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "hilbnode/artin.hpp"
#include "hilbnode/linalg.hpp"
#include "hilbnode/scalar.hpp"

namespace hilbnode {

inline bool coeff_is_zero(const Scalar& s) { return s.is_zero(); }
inline bool coeff_is_unit(const Scalar& s) { return !s.is_zero(); }
inline bool coeff_is_zero(const ArtinScalar& s) { return s.is_zero(); }
inline bool coeff_is_unit(const ArtinScalar& s) { return s.is_unit(); }
inline Scalar coeff_one_like(const Scalar& s) { return s.ctx().one(); }
inline ArtinScalar coeff_one_like(const ArtinScalar& s) { return s.one_like(); }

// xy = 0, or xy = t over an Artinian base (t a fixed non-unit).
enum class RingMode { Absolute, Relative };

// Truncated element c + sum b_i x^i + sum c_i y^i of k[x,y]/(xy - t) with
// powers beyond N dropped.  Coefficients are field scalars or Artin scalars;
// all operations are pure.
template <class T>
class NodeSeries {
public:
    NodeSeries(int trunc_order, T zero, RingMode mode = RingMode::Absolute, T rel_t = T())
        : n_(trunc_order),
          c0_(zero),
          xc_(static_cast<std::size_t>(trunc_order), zero),
          yc_(static_cast<std::size_t>(trunc_order), zero),
          mode_(mode),
          t_(mode == RingMode::Relative ? rel_t : zero) {
        if (trunc_order < 1) throw FieldError("truncation order must be >= 1");
        if (mode_ == RingMode::Relative && coeff_is_unit(t_))
            throw FieldError("relative mode requires a non-unit t");
    }

    static NodeSeries constant(int n, const T& c, RingMode m = RingMode::Absolute, T t = T()) {
        NodeSeries s(n, zero_of(c), m, t);
        s.c0_ = c;
        return s;
    }
    static NodeSeries monomial_x(int n, int k, const T& coeff, RingMode m = RingMode::Absolute, T t = T()) {
        NodeSeries s(n, zero_of(coeff), m, t);
        if (k == 0)
            s.c0_ = coeff;
        else if (k <= n)
            s.xc_[static_cast<std::size_t>(k - 1)] = coeff;
        return s;
    }
    static NodeSeries monomial_y(int n, int k, const T& coeff, RingMode m = RingMode::Absolute, T t = T()) {
        NodeSeries s(n, zero_of(coeff), m, t);
        if (k == 0)
            s.c0_ = coeff;
        else if (k <= n)
            s.yc_[static_cast<std::size_t>(k - 1)] = coeff;
        return s;
    }

    int trunc_order() const { return n_; }
    RingMode mode() const { return mode_; }
    const T& rel_t() const { return t_; }

    const T& c() const { return c0_; }
    const T& x(int i) const { return xc_.at(static_cast<std::size_t>(i - 1)); }
    const T& y(int i) const { return yc_.at(static_cast<std::size_t>(i - 1)); }
    void set_c(const T& v) { c0_ = v; }
    void set_x(int i, const T& v) { xc_.at(static_cast<std::size_t>(i - 1)) = v; }
    void set_y(int i, const T& v) { yc_.at(static_cast<std::size_t>(i - 1)) = v; }

    bool is_zero() const {
        if (!coeff_is_zero(c0_)) return false;
        for (const auto& v : xc_)
            if (!coeff_is_zero(v)) return false;
        for (const auto& v : yc_)
            if (!coeff_is_zero(v)) return false;
        return true;
    }
    bool is_unit() const { return coeff_is_unit(c0_); }

    NodeSeries operator-() const {
        NodeSeries r = *this;
        r.c0_ = neg(r.c0_);
        for (auto& v : r.xc_) v = neg(v);
        for (auto& v : r.yc_) v = neg(v);
        return r;
    }

    NodeSeries operator+(const NodeSeries& o) const {
        check_compatible(o);
        NodeSeries r = *this;
        r.c0_ = r.c0_ + o.c0_;
        for (int i = 0; i < n_; ++i) {
            r.xc_[i] = r.xc_[i] + o.xc_[i];
            r.yc_[i] = r.yc_[i] + o.yc_[i];
        }
        return r;
    }
    NodeSeries operator-(const NodeSeries& o) const { return *this + (-o); }

    NodeSeries operator*(const NodeSeries& o) const {
        check_compatible(o);
        NodeSeries r(n_, zero_of(c0_), mode_, t_);
        // constant * everything
        acc(r.c0_, c0_, o.c0_);
        for (int i = 1; i <= n_; ++i) {
            acc(r.xc_[i - 1], c0_, o.xc_[i - 1]);
            acc(r.xc_[i - 1], xc_[i - 1], o.c0_);
            acc(r.yc_[i - 1], c0_, o.yc_[i - 1]);
            acc(r.yc_[i - 1], yc_[i - 1], o.c0_);
        }
        // x-part * x-part, y-part * y-part
        for (int i = 1; i <= n_; ++i) {
            if (coeff_is_zero(xc_[i - 1]) && coeff_is_zero(yc_[i - 1])) continue;
            for (int j = 1; j <= n_; ++j) {
                if (i + j <= n_) {
                    acc(r.xc_[i + j - 1], xc_[i - 1], o.xc_[j - 1]);
                    acc(r.yc_[i + j - 1], yc_[i - 1], o.yc_[j - 1]);
                }
                if (mode_ == RingMode::Relative) {
                    // x^i y^j = t^min(i,j) x^(i-j) resp. y^(j-i)
                    cross(r, i, j, xc_[i - 1], o.yc_[j - 1]);
                    cross(r, j, i, o.xc_[j - 1], yc_[i - 1]);  // y^i * x^j, same rule
                }
            }
        }
        return r;
    }

    NodeSeries scalar_mul(const T& c) const {
        NodeSeries r = *this;
        r.c0_ = r.c0_ * c;
        for (auto& v : r.xc_) v = v * c;
        for (auto& v : r.yc_) v = v * c;
        return r;
    }

    bool operator==(const NodeSeries& o) const {
        return n_ == o.n_ && mode_ == o.mode_ && t_ == o.t_ && c0_ == o.c0_ && xc_ == o.xc_ && yc_ == o.yc_;
    }
    bool operator!=(const NodeSeries& o) const { return !(*this == o); }

    // x <-> y swap (ring automorphism in either mode).
    NodeSeries swap_xy() const {
        NodeSeries r = *this;
        std::swap(r.xc_, r.yc_);
        return r;
    }

    std::string str() const;

private:
    static T zero_of(const T& v) {
        if constexpr (std::is_same_v<T, Scalar>)
            return v.ctx().zero();
        else
            return v.zero_like();
    }
    static T neg(const T& v) { return -v; }
    static void acc(T& dst, const T& a, const T& b) {
        if (coeff_is_zero(a) || coeff_is_zero(b)) return;
        dst = dst + a * b;
    }
    void cross(NodeSeries& r, int xi, int yj, const T& a, const T& b) const {
        if (coeff_is_zero(a) || coeff_is_zero(b)) return;
        T f = a * b;
        int k = xi < yj ? xi : yj;
        for (int q = 0; q < k; ++q) f = f * t_;
        if (xi == yj)
            r.c0_ = r.c0_ + f;
        else if (xi > yj)
            r.xc_[xi - yj - 1] = r.xc_[xi - yj - 1] + f;
        else
            r.yc_[yj - xi - 1] = r.yc_[yj - xi - 1] + f;
    }
    void check_compatible(const NodeSeries& o) const {
        if (n_ != o.n_ || mode_ != o.mode_ || !(t_ == o.t_))
            throw FieldError("mixed node-ring modes or truncation orders");
    }

    int n_;
    T c0_;
    std::vector<T> xc_, yc_;
    RingMode mode_;
    T t_;
};

using FieldSeries = NodeSeries<Scalar>;
using ArtinSeries = NodeSeries<ArtinScalar>;

// Associate class of a nonzero non-unit: x^alpha, y^beta, or x^alpha + a y^beta.
struct ElementType {
    int alpha = 0;
    int beta = 0;
    Scalar param;  // nonzero iff alpha > 0 and beta > 0
    bool operator==(const ElementType& o) const {
        return alpha == o.alpha && beta == o.beta &&
               ((alpha == 0 || beta == 0) || param == o.param);
    }
    std::string str() const;
};

// Unique associate normal form (absolute mode): returns the type and a unit u
// with z = u * normal_form(type).  Errors on zero or unit input.
std::pair<ElementType, FieldSeries> associate_normal_form(const FieldSeries& z);

// The canonical series x^alpha, y^beta or x^alpha + a y^beta of a type.
FieldSeries normal_form_series(const ElementType& t, int trunc_order, const FieldCtx& ctx);

// z together with all nonzero monomial multiples x^i z, y^j z up to the
// truncation order; spans the ideal (z) as a subspace.
template <class T>
std::vector<NodeSeries<T>> monomial_multiples(const NodeSeries<T>& z);

// Coordinates (1, x, .., x^N, y, .., y^N) of a field series.
Vec series_to_vec(const FieldSeries& s);
FieldSeries series_from_vec(const Vec& v, int trunc_order, const FieldCtx& ctx);

}  // namespace hilbnode

#endif
