#ifndef HILBNODE_SCALAR_HPP
#define HILBNODE_SCALAR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hilbnode {

using Rat = boost::multiprecision::cpp_rational;

// Residue mod a (machine-word) prime.  p == 0 never occurs in a live value.
struct Fp {
    std::uint64_t p = 0;
    std::uint64_t v = 0;
    friend bool operator==(const Fp&, const Fp&) = default;
};

class Scalar;

// Fraction of dense univariate polynomials over the base field (Q or F_p).
// Invariants: num/den coprime, den monic and nonzero, no trailing zero
// coefficients; num empty encodes 0 (den then {1}).
struct RatFn {
    std::vector<Scalar> num;
    std::vector<Scalar> den;
};

struct FieldError : std::domain_error {
    using std::domain_error::domain_error;
};

// Runtime description of a coefficient field.  RatFn kinds layer k(a) over a
// prime field or Q; deeper nesting is rejected.
class FieldCtx {
public:
    enum class Kind { Q, Prime, RatFnQ, RatFnPrime };

    static FieldCtx rationals() { return FieldCtx(Kind::Q, 0); }
    static FieldCtx prime(std::uint64_t p);
    static FieldCtx rat_fn_over(const FieldCtx& base);

    Kind kind() const { return kind_; }
    std::uint64_t p() const { return p_; }
    bool is_rat_fn() const { return kind_ == Kind::RatFnQ || kind_ == Kind::RatFnPrime; }
    FieldCtx base() const;

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long long n) const;
    // The transcendental generator a of k(a); errors on non-RatFn fields.
    Scalar indeterminate() const;

    std::string str() const;
    friend bool operator==(const FieldCtx&, const FieldCtx&) = default;

private:
    FieldCtx(Kind k, std::uint64_t p) : kind_(k), p_(p) {}
    Kind kind_;
    std::uint64_t p_;
};

class Scalar {
public:
    Scalar() : rep_(Rat(0)) {}

    static Scalar rational(long long n, long long d = 1);
    static Scalar rational(Rat r) { return Scalar(std::move(r)); }
    static Scalar fp(std::uint64_t p, long long v);
    static Scalar rat_fn(RatFn f);  // normalizes
    // Constant polynomial-fraction over the given base scalar's field.
    static Scalar rat_fn_const(const Scalar& base_value);
    static Scalar indeterminate(const FieldCtx& base);

    bool is_rational() const { return std::holds_alternative<Rat>(rep_); }
    bool is_fp() const { return std::holds_alternative<Fp>(rep_); }
    bool is_rat_fn() const { return std::holds_alternative<RatFn>(rep_); }

    const Rat& rat() const { return std::get<Rat>(rep_); }
    const Fp& fp_parts() const { return std::get<Fp>(rep_); }
    const RatFn& fn() const { return std::get<RatFn>(rep_); }

    FieldCtx ctx() const;

    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar inv() const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Canonical printable form; doubles as a dedupe key.
    std::string str() const;

private:
    explicit Scalar(Rat r) : rep_(std::move(r)) {}
    explicit Scalar(Fp f) : rep_(f) {}
    explicit Scalar(RatFn f) : rep_(std::move(f)) {}

    std::variant<Rat, Fp, RatFn> rep_;
};

// Valuation-normalized specialization of a vector over k(a) at a=0 or a=inf:
// divides out the extremal power of a, then evaluates.  The Grassmannian
// limit primitive; errors on the zero vector.
enum class LimitPoint { AtZero, AtInfinity };
std::vector<Scalar> rational_function_limit(const std::vector<Scalar>& v, LimitPoint at);

}  // namespace hilbnode

#endif
