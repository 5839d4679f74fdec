#include "hilbnode/artin.hpp"

namespace hilbnode {

ArtinScalar::ArtinScalar(const FieldCtx& k, int order) {
    if (order < 1) throw FieldError("Artin algebra order must be >= 1");
    coeffs_.assign(static_cast<std::size_t>(order), k.zero());
}

ArtinScalar::ArtinScalar(const Scalar& c0, int order) : ArtinScalar(c0.ctx(), order) {
    coeffs_[0] = c0;
}

ArtinScalar ArtinScalar::eps(const FieldCtx& k, int order, int power) {
    ArtinScalar r(k, order);
    if (power < 1) throw FieldError("eps power must be >= 1");
    if (power < order) r.coeffs_[static_cast<std::size_t>(power)] = k.one();
    return r;  // eps^power = 0 once power >= order
}

ArtinScalar ArtinScalar::from_coeffs(std::vector<Scalar> coeffs) {
    if (coeffs.empty()) throw FieldError("Artin scalar needs at least one coefficient");
    ArtinScalar r;
    r.coeffs_ = std::move(coeffs);
    return r;
}

bool ArtinScalar::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

ArtinScalar ArtinScalar::operator-() const {
    ArtinScalar r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

ArtinScalar ArtinScalar::operator+(const ArtinScalar& o) const {
    if (order() != o.order()) throw FieldError("mixed Artin algebra orders");
    ArtinScalar r = *this;
    for (int j = 0; j < order(); ++j) r.coeffs_[j] += o.coeffs_[j];
    return r;
}

ArtinScalar ArtinScalar::operator-(const ArtinScalar& o) const { return *this + (-o); }

ArtinScalar ArtinScalar::operator*(const ArtinScalar& o) const {
    if (order() != o.order()) throw FieldError("mixed Artin algebra orders");
    ArtinScalar r = zero_like();
    for (int i = 0; i < order(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (int j = 0; i + j < order(); ++j) r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return r;
}

ArtinScalar ArtinScalar::inv() const {
    if (!is_unit()) throw FieldError("inverse of a non-unit Artin scalar");
    // power-series inversion: solve (sum c_i eps^i)(sum d_j eps^j) = 1 degree by degree
    ArtinScalar r = zero_like();
    Scalar c0i = coeffs_[0].inv();
    r.coeffs_[0] = c0i;
    for (int j = 1; j < order(); ++j) {
        Scalar acc = field().zero();
        for (int i = 1; i <= j; ++i) acc += coeffs_[i] * r.coeffs_[j - i];
        r.coeffs_[j] = -acc * c0i;
    }
    return r;
}

std::string ArtinScalar::str() const {
    std::string s;
    for (int j = 0; j < order(); ++j) {
        if (coeffs_[j].is_zero()) continue;
        if (!s.empty()) s += " + ";
        if (j == 0) {
            s += coeffs_[j].str();
            continue;
        }
        if (!coeffs_[j].is_one()) s += coeffs_[j].str() + "*";
        s += "e";
        if (j > 1) s += "^" + std::to_string(j);
    }
    return s.empty() ? "0" : s;
}

}  // namespace hilbnode
