#ifndef HILBNODE_IDEAL_HPP
#define HILBNODE_IDEAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "hilbnode/linalg.hpp"
#include "hilbnode/node_series.hpp"

namespace hilbnode {

// Symbolic classification tag: C[m,i](a) = (y^i + a x^(m-i)), a != 0,
// 1 <= i <= m-1, or Q[m,i] = (x^(m-i+1), y^i), 1 <= i <= m.
struct IdealType {
    enum class Kind { C, Q };
    Kind kind = Kind::Q;
    int m = 0;
    int i = 0;
    Scalar param;  // C only, nonzero

    static IdealType c_type(int m, int i, Scalar a);
    static IdealType q_type(int m, int i);

    bool operator==(const IdealType& o) const {
        return kind == o.kind && m == o.m && i == o.i && (kind == Kind::Q || param == o.param);
    }
    std::string str() const;
};

// Finite-colength ideal of the truncated node ring, stored as the canonical
// echelon basis of its image in the 2N+1-dimensional truncation.
class NodeIdeal {
public:
    NodeIdeal() = default;
    static NodeIdeal from_generators(std::vector<FieldSeries> gens, int trunc_order);

    int trunc_order() const { return n_; }
    const FieldCtx& ctx() const { return ctx_; }
    const std::vector<FieldSeries>& generators() const { return gens_; }
    const Subspace& space() const { return space_; }

    // dim_k of the quotient at this truncation; faithful only when <= N.
    int colength() const { return colength_; }
    // True when the truncation certifies the colength: colength <= N and
    // x^m, y^m lie in the row space.
    bool colength_faithful() const;

    bool contains_element(const FieldSeries& z) const;
    // Row-space containment other <= this.
    bool contains_ideal(const NodeIdeal& other) const;

    bool operator==(const NodeIdeal& o) const { return n_ == o.n_ && space_ == o.space_; }
    bool operator!=(const NodeIdeal& o) const { return !(*this == o); }

    std::string key() const { return space_.key(); }

private:
    int n_ = 0;
    FieldCtx ctx_ = FieldCtx::rationals();
    std::vector<FieldSeries> gens_;
    Subspace space_;
    int colength_ = 0;
};

struct ClassifyError : FieldError {
    using FieldError::FieldError;
};

// Canonical generators of a type, at truncation order N >= m.
NodeIdeal canonical_ideal(const IdealType& t, const FieldCtx& ctx, int trunc_order);

// Template matching against the canonical generator shapes, solving for the
// C-parameter by linear elimination.  Throws ClassifyError when no type
// matches (which would falsify the classification theorem).
IdealType classify(const NodeIdeal& ideal);

// Independent route following the minimal-associate-type argument; used as a
// cross-check against classify().
IdealType classify_by_minimal_element(const NodeIdeal& ideal);

// Flat limit of the one-parameter family C[m,i](a) as a -> 0 or a -> inf,
// computed over k(a) and specialized by valuation normalization.
NodeIdeal flat_limit(int m, int i, LimitPoint at, const FieldCtx& base_ctx, int trunc_order);

// Ann(J/I) = { z : z*J <= I } for I <= J of colength difference 1.
NodeIdeal annihilator_quotient(const NodeIdeal& i_sub, const NodeIdeal& j_super);

}  // namespace hilbnode

#endif
