#ifndef HILBNODE_ARTIN_HPP
#define HILBNODE_ARTIN_HPP

#include <string>
#include <vector>

#include "hilbnode/scalar.hpp"

namespace hilbnode {

// Element of S = k[eps]/(eps^n): coeffs[j] on eps^j, fixed length n >= 1.
// Multiplication truncates at eps^n; a value is a unit iff coeffs[0] != 0,
// and the non-units form the maximal ideal (eps).
class ArtinScalar {
public:
    ArtinScalar() = default;
    ArtinScalar(const FieldCtx& k, int order);                   // zero
    ArtinScalar(const Scalar& c0, int order);                    // constant
    static ArtinScalar eps(const FieldCtx& k, int order, int power = 1);
    static ArtinScalar from_coeffs(std::vector<Scalar> coeffs);

    int order() const { return static_cast<int>(coeffs_.size()); }
    const std::vector<Scalar>& coeffs() const { return coeffs_; }
    const Scalar& coeff(int j) const { return coeffs_.at(static_cast<std::size_t>(j)); }
    FieldCtx field() const { return coeffs_.at(0).ctx(); }

    bool is_zero() const;
    bool is_unit() const { return !coeffs_.at(0).is_zero(); }
    Scalar residue() const { return coeffs_.at(0); }  // image in S/(eps) = k

    ArtinScalar operator-() const;
    ArtinScalar operator+(const ArtinScalar& o) const;
    ArtinScalar operator-(const ArtinScalar& o) const;
    ArtinScalar operator*(const ArtinScalar& o) const;
    ArtinScalar inv() const;  // errors on non-units

    ArtinScalar& operator+=(const ArtinScalar& o) { return *this = *this + o; }
    ArtinScalar& operator-=(const ArtinScalar& o) { return *this = *this - o; }
    ArtinScalar& operator*=(const ArtinScalar& o) { return *this = *this * o; }

    bool operator==(const ArtinScalar& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const ArtinScalar& o) const { return !(*this == o); }

    ArtinScalar zero_like() const { return ArtinScalar(field(), order()); }
    ArtinScalar one_like() const { return ArtinScalar(field().one(), order()); }

    std::string str() const;

private:
    std::vector<Scalar> coeffs_;
};

}  // namespace hilbnode

#endif
