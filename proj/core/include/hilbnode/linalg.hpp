#ifndef HILBNODE_LINALG_HPP
#define HILBNODE_LINALG_HPP

#include <string>
#include <vector>

#include "hilbnode/scalar.hpp"

namespace hilbnode {

using Vec = std::vector<Scalar>;
using Mat = std::vector<Vec>;

bool vec_is_zero(const Vec& v);

// In-place reduced row echelon form; drops zero rows, orders rows by pivot
// column.  Returns the rank.
int rref(Mat& m);

// Kernel of the linear map x -> A*x, A given by rows of length ncols.
// Returns a basis (not echelonized) of the solution space.
Mat kernel(Mat a, int ncols, const FieldCtx& ctx);

// Row space in canonical (RREF) form.  Equality of subspaces is structural
// equality of the bases.
class Subspace {
public:
    Subspace() = default;
    Subspace(int ambient, FieldCtx ctx) : ambient_(ambient), ctx_(std::move(ctx)) {}
    static Subspace from_rows(int ambient, const FieldCtx& ctx, Mat rows);

    int ambient() const { return ambient_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const Mat& basis() const { return basis_; }
    const FieldCtx& ctx() const { return ctx_; }

    // Residue of v modulo the row space (canonical coset representative).
    Vec reduce(Vec v) const;
    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    // Span with extra rows adjoined.
    Subspace extended(const Mat& rows) const;

    // Indices of non-pivot coordinates (canonical coset representatives are
    // supported on these).
    std::vector<int> free_coords() const;

    bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    // Stable dedupe/sort key.
    std::string key() const;

private:
    int ambient_ = 0;
    FieldCtx ctx_ = FieldCtx::rationals();
    Mat basis_;
};

}  // namespace hilbnode

#endif
