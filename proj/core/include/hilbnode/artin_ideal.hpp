#ifndef HILBNODE_ARTIN_IDEAL_HPP
#define HILBNODE_ARTIN_IDEAL_HPP

#include <vector>

#include "hilbnode/ideal.hpp"
#include "hilbnode/node_series.hpp"

namespace hilbnode {

// Ideal of the truncated node ring with coefficients in S = k[eps]/(eps^n),
// handled by exact k-linear algebra on the eps-filtration.  Vectors live in
// the free module on (monomial, eps-power); in relative mode the truncation
// boundary relations t^j x^(N+1-j) = 0 (and the y-side) are adjoined to every
// span, so dimensions are those of the honest quotient ring.
class ArtinIdeal {
public:
    ArtinIdeal(std::vector<ArtinSeries> gens, int trunc_order);

    int trunc_order() const { return n_; }
    int artin_order() const { return order_; }
    int flat_ambient() const { return (2 * n_ + 1) * order_; }
    const std::vector<ArtinSeries>& generators() const { return gens_; }
    const Subspace& span() const { return span_; }  // includes boundary rows

    // dim_k of the quotient ring modulo the ideal.
    int colength_k() const { return flat_ambient() - span_.dim(); }

    bool contains(const ArtinSeries& z) const;
    bool contains(const ArtinIdeal& other) const;
    bool operator==(const ArtinIdeal& o) const { return n_ == o.n_ && span_ == o.span_; }
    bool operator!=(const ArtinIdeal& o) const { return !(*this == o); }

    // Quotient generated over S by the given monomials (exponent, is_y)
    // together with the ideal; the S-free rank-m test combines this with the
    // colength count.
    bool monomials_generate_quotient(const std::vector<std::pair<int, bool>>& monomials) const;

    // Reduction mod eps: an ideal of the absolute ring over k.
    NodeIdeal special_fibre() const;

    Vec flatten(const ArtinSeries& z) const;
    ArtinSeries unflatten(const Vec& v) const;

private:
    int n_ = 0;
    int order_ = 1;
    RingMode mode_ = RingMode::Absolute;
    ArtinScalar t_;
    FieldCtx ctx_ = FieldCtx::rationals();
    std::vector<ArtinSeries> gens_;
    Subspace span_;
    Mat boundary_rows_;
};

// { z : z * J <= I } over S, by exact k-linear algebra; the result is again
// an ideal over S.
ArtinIdeal annihilator_quotient_artin(const ArtinIdeal& i_sub, const ArtinIdeal& j_super);

// Zero test in the truncated ring itself: in relative mode an element may be
// zero only modulo the boundary relations t^j x^(N+1-j) = 0.
bool is_zero_in_ring(const ArtinSeries& z);

}  // namespace hilbnode

#endif
