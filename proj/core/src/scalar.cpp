#include "hilbnode/scalar.hpp"

#include <algorithm>
#include <utility>

#include "hilbnode/upoly.hpp"

namespace hilbnode {

namespace {

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;  // p fits in 63 bits, no overflow
    return s >= p ? s - p : s;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    if (a == 0) throw FieldError("inverse of zero in F_p");
    // extended Euclid
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1) throw FieldError("modulus not prime in F_p inverse");
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

// Canonical form: num/den coprime, den monic, zero as num={} den={1}.
RatFn normalize(RatFn f) {
    poly_trim(f.num);
    poly_trim(f.den);
    if (poly_is_zero(f.den)) throw FieldError("rational function with zero denominator");
    FieldCtx base = f.den.back().ctx();
    if (base.is_rat_fn()) throw FieldError("nested rational-function fields are not supported");
    if (poly_is_zero(f.num)) return RatFn{{}, {base.one()}};
    UPoly g = poly_gcd(f.num, f.den);
    if (poly_deg(g) > 0) {
        f.num = poly_divmod(f.num, g).first;
        f.den = poly_divmod(f.den, g).first;
    }
    Scalar lead = f.den.back();
    if (!lead.is_one()) {
        Scalar li = lead.inv();
        f.num = poly_scale(f.num, li);
        f.den = poly_scale(f.den, li);
    }
    return f;
}

const Rat& require_rat(const Scalar& s) {
    if (!s.is_rational()) throw FieldError("mixed scalar fields");
    return s.rat();
}

}  // namespace

FieldCtx FieldCtx::prime(std::uint64_t p) {
    if (p < 2 || p >= (1ull << 62)) throw FieldError("prime out of range");
    return FieldCtx(Kind::Prime, p);
}

FieldCtx FieldCtx::rat_fn_over(const FieldCtx& base) {
    switch (base.kind()) {
        case Kind::Q: return FieldCtx(Kind::RatFnQ, 0);
        case Kind::Prime: return FieldCtx(Kind::RatFnPrime, base.p());
        default: throw FieldError("nested rational-function fields are not supported");
    }
}

FieldCtx FieldCtx::base() const {
    switch (kind_) {
        case Kind::RatFnQ: return rationals();
        case Kind::RatFnPrime: return prime(p_);
        default: throw FieldError("base() on a non-RatFn field");
    }
}

Scalar FieldCtx::zero() const { return from_int(0); }
Scalar FieldCtx::one() const { return from_int(1); }

Scalar FieldCtx::from_int(long long n) const {
    switch (kind_) {
        case Kind::Q: return Scalar::rational(n);
        case Kind::Prime: return Scalar::fp(p_, n);
        case Kind::RatFnQ:
        case Kind::RatFnPrime: return Scalar::rat_fn_const(base().from_int(n));
    }
    throw FieldError("bad field kind");
}

Scalar FieldCtx::indeterminate() const {
    if (!is_rat_fn()) throw FieldError("indeterminate() on a non-RatFn field");
    return Scalar::indeterminate(base());
}

std::string FieldCtx::str() const {
    switch (kind_) {
        case Kind::Q: return "Q";
        case Kind::Prime: return "F" + std::to_string(p_);
        case Kind::RatFnQ: return "Q(a)";
        case Kind::RatFnPrime: return "F" + std::to_string(p_) + "(a)";
    }
    return "?";
}

Scalar Scalar::rational(long long n, long long d) {
    if (d == 0) throw FieldError("rational with zero denominator");
    if (d < 0) n = -n, d = -d;
    return Scalar(Rat(n, d));
}

Scalar Scalar::fp(std::uint64_t p, long long v) {
    if (p < 2) throw FieldError("prime out of range");
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    return Scalar(Fp{p, static_cast<std::uint64_t>(r)});
}

Scalar Scalar::rat_fn(RatFn f) { return Scalar(normalize(std::move(f))); }

Scalar Scalar::rat_fn_const(const Scalar& base_value) {
    if (base_value.is_rat_fn()) throw FieldError("nested rational-function fields are not supported");
    RatFn f;
    f.num = poly_const(base_value);
    f.den = {base_value.ctx().one()};
    return Scalar(std::move(f));
}

Scalar Scalar::indeterminate(const FieldCtx& base) {
    RatFn f;
    f.num = poly_x(base);
    f.den = {base.one()};
    return Scalar(std::move(f));
}

FieldCtx Scalar::ctx() const {
    if (is_rational()) return FieldCtx::rationals();
    if (is_fp()) return FieldCtx::prime(fp_parts().p);
    return FieldCtx::rat_fn_over(fn().den.back().ctx());
}

bool Scalar::is_zero() const {
    if (is_rational()) return rat() == 0;
    if (is_fp()) return fp_parts().v == 0;
    return fn().num.empty();
}

bool Scalar::is_one() const {
    if (is_rational()) return rat() == 1;
    if (is_fp()) return fp_parts().v == 1;
    const RatFn& f = fn();
    return f.num.size() == 1 && f.num[0].is_one() && f.den.size() == 1;
}

Scalar Scalar::operator-() const {
    if (is_rational()) return Scalar(Rat(-rat()));
    if (is_fp()) {
        const Fp& a = fp_parts();
        return Scalar(Fp{a.p, a.v == 0 ? 0 : a.p - a.v});
    }
    RatFn f = fn();
    f.num = poly_neg(f.num);
    return Scalar(std::move(f));
}

Scalar Scalar::operator+(const Scalar& o) const {
    if (is_rational()) return Scalar(Rat(rat() + require_rat(o)));
    if (is_fp()) {
        if (!o.is_fp() || o.fp_parts().p != fp_parts().p) throw FieldError("mixed scalar fields");
        return Scalar(Fp{fp_parts().p, add_mod(fp_parts().v, o.fp_parts().v, fp_parts().p)});
    }
    if (!o.is_rat_fn()) throw FieldError("mixed scalar fields");
    const RatFn& a = fn();
    const RatFn& b = o.fn();
    RatFn r;
    r.num = poly_add(poly_mul(a.num, b.den), poly_mul(b.num, a.den));
    r.den = poly_mul(a.den, b.den);
    return Scalar(normalize(std::move(r)));
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    if (is_rational()) return Scalar(Rat(rat() * require_rat(o)));
    if (is_fp()) {
        if (!o.is_fp() || o.fp_parts().p != fp_parts().p) throw FieldError("mixed scalar fields");
        return Scalar(Fp{fp_parts().p, mul_mod(fp_parts().v, o.fp_parts().v, fp_parts().p)});
    }
    if (!o.is_rat_fn()) throw FieldError("mixed scalar fields");
    RatFn r;
    r.num = poly_mul(fn().num, o.fn().num);
    r.den = poly_mul(fn().den, o.fn().den);
    return Scalar(normalize(std::move(r)));
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

Scalar Scalar::inv() const {
    if (is_zero()) throw FieldError("division by zero");
    if (is_rational()) return Scalar(Rat(1 / rat()));
    if (is_fp()) return Scalar(Fp{fp_parts().p, inv_mod(fp_parts().v, fp_parts().p)});
    RatFn r;
    r.num = fn().den;
    r.den = fn().num;
    return Scalar(normalize(std::move(r)));
}

bool Scalar::operator==(const Scalar& o) const {
    if (rep_.index() != o.rep_.index()) return false;
    if (is_rational()) return rat() == o.rat();
    if (is_fp()) return fp_parts() == o.fp_parts();
    return fn().num == o.fn().num && fn().den == o.fn().den;
}

std::string Scalar::str() const {
    if (is_rational()) return rat().str();
    if (is_fp()) return std::to_string(fp_parts().v);
    const RatFn& f = fn();
    std::string num = poly_str(f.num);
    if (f.den.size() == 1) return num;
    return "(" + num + ")/(" + poly_str(f.den) + ")";
}

std::vector<Scalar> rational_function_limit(const std::vector<Scalar>& v, LimitPoint at) {
    bool all_zero = true;
    for (const auto& s : v) all_zero = all_zero && s.is_zero();
    if (v.empty() || all_zero) throw FieldError("rational_function_limit of the zero vector");

    // Normalize each entry to fraction form over the base field.
    struct Frac {
        UPoly num, den;
    };
    std::vector<Frac> fs;
    fs.reserve(v.size());
    FieldCtx base = FieldCtx::rationals();
    for (const auto& s : v) {
        if (s.is_rat_fn()) {
            fs.push_back({s.fn().num, s.fn().den});
            base = s.fn().den.back().ctx();
        } else {
            fs.push_back({poly_const(s), {}});  // den filled below once base is known
        }
    }
    for (auto& f : fs)
        if (f.den.empty()) f.den = {base.one()};

    if (at == LimitPoint::AtInfinity) {
        // a -> 1/b: reverse coefficients, shifting by the degree gap.
        int dmax = 0;
        for (auto& f : fs) dmax = std::max(dmax, std::max(poly_deg(f.num), poly_deg(f.den)));
        for (auto& f : fs) {
            if (poly_is_zero(f.num)) {
                f.den = {base.one()};
                continue;
            }
            int dn = poly_deg(f.num), dd = poly_deg(f.den);
            f.num = poly_reverse(f.num);
            f.den = poly_reverse(f.den);
            // multiply num by b^(dd - dn) symmetrically to keep val_0 = -val_inf
            int shift = dd - dn;
            UPoly& target = shift >= 0 ? f.num : f.den;
            int k = shift >= 0 ? shift : -shift;
            UPoly pow(static_cast<std::size_t>(k), base.zero());
            pow.push_back(base.one());
            target = poly_mul(target, pow);
        }
    }

    // Valuation at 0 of each entry; minimum over the vector.
    int vmin = 0;
    bool first = true;
    for (auto& f : fs) {
        if (poly_is_zero(f.num)) continue;
        int val = poly_ord(f.num) - poly_ord(f.den);
        if (first || val < vmin) vmin = val, first = false;
    }
    // Divide by a^vmin and evaluate at 0: entry a^val*(unit) with val>vmin -> 0.
    std::vector<Scalar> out;
    out.reserve(fs.size());
    for (auto& f : fs) {
        if (poly_is_zero(f.num)) {
            out.push_back(base.zero());
            continue;
        }
        int on = poly_ord(f.num), od = poly_ord(f.den);
        int val = on - od;
        if (val > vmin) {
            out.push_back(base.zero());
            continue;
        }
        // strip a-powers, evaluate lowest coefficients
        out.push_back(f.num[static_cast<std::size_t>(on)] / f.den[static_cast<std::size_t>(od)]);
    }
    return out;
}

}  // namespace hilbnode
