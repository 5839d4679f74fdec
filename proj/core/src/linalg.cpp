#include "hilbnode/linalg.hpp"

#include <algorithm>

namespace hilbnode {

bool vec_is_zero(const Vec& v) {
    for (const auto& s : v)
        if (!s.is_zero()) return false;
    return true;
}

int rref(Mat& m) {
    if (m.empty()) return 0;
    const std::size_t ncols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
        std::size_t piv = row;
        while (piv < m.size() && m[piv][col].is_zero()) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[row], m[piv]);
        Scalar li = m[row][col].inv();
        for (std::size_t j = col; j < ncols; ++j) m[row][j] *= li;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            Scalar f = m[r][col];
            for (std::size_t j = col; j < ncols; ++j) m[r][j] -= f * m[row][j];
        }
        ++row;
    }
    m.erase(m.begin() + static_cast<std::ptrdiff_t>(row), m.end());
    return static_cast<int>(row);
}

Mat kernel(Mat a, int ncols, const FieldCtx& ctx) {
    rref(a);
    std::vector<int> pivot_col;
    std::vector<bool> is_pivot(static_cast<std::size_t>(ncols), false);
    for (const auto& r : a) {
        for (int c = 0; c < ncols; ++c)
            if (!r[static_cast<std::size_t>(c)].is_zero()) {
                pivot_col.push_back(c);
                is_pivot[static_cast<std::size_t>(c)] = true;
                break;
            }
    }
    Mat basis;
    for (int fc = 0; fc < ncols; ++fc) {
        if (is_pivot[static_cast<std::size_t>(fc)]) continue;
        Vec v(static_cast<std::size_t>(ncols), ctx.zero());
        v[static_cast<std::size_t>(fc)] = ctx.one();
        for (std::size_t r = 0; r < a.size(); ++r)
            v[static_cast<std::size_t>(pivot_col[r])] = -a[r][static_cast<std::size_t>(fc)];
        basis.push_back(std::move(v));
    }
    return basis;
}

Subspace Subspace::from_rows(int ambient, const FieldCtx& ctx, Mat rows) {
    Subspace s(ambient, ctx);
    for (const auto& r : rows)
        if (static_cast<int>(r.size()) != ambient) throw FieldError("row length != ambient dimension");
    rref(rows);
    s.basis_ = std::move(rows);
    return s;
}

Vec Subspace::reduce(Vec v) const {
    for (const auto& row : basis_) {
        std::size_t piv = 0;
        while (piv < row.size() && row[piv].is_zero()) ++piv;
        if (piv == row.size()) continue;
        if (v[piv].is_zero()) continue;
        Scalar f = v[piv];  // pivot entries are 1
        for (std::size_t j = piv; j < v.size(); ++j) v[j] -= f * row[j];
    }
    return v;
}

bool Subspace::contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
    for (const auto& row : other.basis_)
        if (!contains(row)) return false;
    return true;
}

Subspace Subspace::extended(const Mat& rows) const {
    Mat all = basis_;
    all.insert(all.end(), rows.begin(), rows.end());
    return from_rows(ambient_, ctx_, std::move(all));
}

std::vector<int> Subspace::free_coords() const {
    std::vector<bool> is_pivot(static_cast<std::size_t>(ambient_), false);
    for (const auto& row : basis_)
        for (std::size_t c = 0; c < row.size(); ++c)
            if (!row[c].is_zero()) {
                is_pivot[c] = true;
                break;
            }
    std::vector<int> free;
    for (int c = 0; c < ambient_; ++c)
        if (!is_pivot[static_cast<std::size_t>(c)]) free.push_back(c);
    return free;
}

std::string Subspace::key() const {
    std::string k = std::to_string(ambient_) + "|";
    for (const auto& row : basis_) {
        for (const auto& s : row) {
            k += s.str();
            k += ",";
        }
        k += ";";
    }
    return k;
}

}  // namespace hilbnode
