#ifndef HILBNODE_MPOLY_HPP
#define HILBNODE_MPOLY_HPP

#include <map>
#include <string>
#include <vector>

#include "hilbnode/linalg.hpp"
#include "hilbnode/scalar.hpp"

namespace hilbnode {

// Sparse multivariate polynomial with string-named variables; sized for the
// handful-of-terms chart equations, not for general computer algebra.
class MPoly {
public:
    using Monomial = std::map<std::string, int>;

    explicit MPoly(FieldCtx ctx = FieldCtx::rationals()) : ctx_(std::move(ctx)) {}
    static MPoly constant(const Scalar& c);
    static MPoly var(const std::string& name, const FieldCtx& ctx);

    const FieldCtx& ctx() const { return ctx_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Scalar>& terms() const { return terms_; }

    MPoly operator-() const;
    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    bool operator==(const MPoly& o) const { return terms_ == o.terms_; }

    MPoly derivative(const std::string& name) const;
    Scalar eval(const std::map<std::string, Scalar>& point) const;
    int total_degree() const;  // -1 for 0
    MPoly homogeneous_part(int degree) const;
    std::vector<std::string> variables() const;

    // Canonical emission: graded-lex monomial order, explicit '*' and '^'.
    std::string str() const;

private:
    void add_term(Monomial m, const Scalar& c);
    FieldCtx ctx_;
    std::map<Monomial, Scalar> terms_;
};

// Rank of the Hessian of the degree-2 part, by exact symmetric elimination.
// Only meaningful away from characteristic 2; callers restrict accordingly.
int hessian_rank(const MPoly& p);

// True when some first partial derivative is a nonzero constant; certifies a
// nowhere-vanishing Jacobian row for a single equation.
bool has_unit_partial(const MPoly& p);

}  // namespace hilbnode

#endif
