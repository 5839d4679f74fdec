#include "hilbnode/upoly.hpp"

namespace hilbnode {

void poly_trim(UPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

bool poly_is_zero(const UPoly& p) { return p.empty(); }

int poly_deg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

UPoly poly_const(const Scalar& c) {
    if (c.is_zero()) return {};
    return {c};
}

UPoly poly_x(const FieldCtx& ctx) { return {ctx.zero(), ctx.one()}; }

UPoly poly_add(const UPoly& a, const UPoly& b) {
    UPoly r = a.size() >= b.size() ? a : b;
    const UPoly& s = a.size() >= b.size() ? b : a;
    for (std::size_t i = 0; i < s.size(); ++i) r[i] += s[i];
    poly_trim(r);
    return r;
}

UPoly poly_neg(const UPoly& a) {
    UPoly r = a;
    for (auto& c : r) c = -c;
    return r;
}

UPoly poly_sub(const UPoly& a, const UPoly& b) { return poly_add(a, poly_neg(b)); }

UPoly poly_mul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, a[0].ctx().zero());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    poly_trim(r);
    return r;
}

UPoly poly_scale(const UPoly& a, const Scalar& c) {
    if (c.is_zero()) return {};
    UPoly r = a;
    for (auto& x : r) x *= c;
    poly_trim(r);
    return r;
}

std::pair<UPoly, UPoly> poly_divmod(const UPoly& a, const UPoly& b) {
    if (poly_is_zero(b)) throw FieldError("poly_divmod: division by zero polynomial");
    UPoly rem = a;
    if (rem.size() < b.size()) return {{}, rem};
    UPoly quot(rem.size() - b.size() + 1, b.back().ctx().zero());
    Scalar lead_inv = b.back().inv();
    for (int k = static_cast<int>(rem.size()) - static_cast<int>(b.size()); k >= 0; --k) {
        Scalar q = rem[k + b.size() - 1] * lead_inv;
        quot[k] = q;
        if (q.is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) rem[k + j] -= q * b[j];
    }
    poly_trim(quot);
    poly_trim(rem);
    return {quot, rem};
}

UPoly poly_monic(const UPoly& a) {
    if (a.empty()) return a;
    return poly_scale(a, a.back().inv());
}

UPoly poly_gcd(const UPoly& a, const UPoly& b) {
    UPoly x = a, y = b;
    poly_trim(x);
    poly_trim(y);
    while (!poly_is_zero(y)) {
        UPoly r = poly_divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return poly_monic(x);
}

Scalar poly_eval(const UPoly& a, const Scalar& x) {
    Scalar r = x.ctx().zero();
    for (auto it = a.rbegin(); it != a.rend(); ++it) r = r * x + *it;
    return r;
}

int poly_ord(const UPoly& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero()) return static_cast<int>(i);
    return -1;
}

UPoly poly_reverse(const UPoly& a) {
    UPoly r(a.rbegin(), a.rend());
    poly_trim(r);
    return r;
}

std::string poly_str(const UPoly& a, const std::string& var) {
    if (a.empty()) return "0";
    std::string s;
    for (int i = poly_deg(a); i >= 0; --i) {
        if (a[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        if (i == 0 || !a[i].is_one()) s += a[i].str();
        if (i > 0) {
            if (!a[i].is_one()) s += "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

}  // namespace hilbnode
