#include "cct/cochain.hpp"

#include <cassert>
#include <stdexcept>

namespace cct {

Cochain Cochain::unit(const SimplicialComplex& K, const Field& F, Side side) {
    Cochain f(K, F, side, 0);
    for (SimplexId i = 0; i < K.size(); ++i)
        f.coeffs_.emplace(Chain({i}), F.one());
    return f;
}

void Cochain::accumulate(const Chain& c, const Scalar& v) {
    assert(c.degree() == degree_);
    auto it = coeffs_.find(c);
    if (it == coeffs_.end()) {
        if (!field_->is_zero(v)) coeffs_.emplace(c, v);
        return;
    }
    it->second = field_->add(it->second, v);
    if (field_->is_zero(it->second)) coeffs_.erase(it);
}

void Cochain::set(const Chain& c, const Scalar& v) {
    assert(c.degree() == degree_);
    if (field_->is_zero(v))
        coeffs_.erase(c);
    else
        coeffs_.insert_or_assign(c, v);
}

Cochain Cochain::reinterpreted(Side side) const {
    Cochain out = *this;
    out.side_ = side;
    return out;
}

std::string Cochain::dump() const {
    std::string out;
    for (const auto& [c, v] : coeffs_) {
        out += "CHAIN ";
        bool first = true;
        for (SimplexId id : c.entries()) {
            if (!first) out += '|';
            first = false;
            out += complex_->simplex(id).str();
        }
        out += " = " + field_->str(v) + "\n";
    }
    return out;
}

Cochain add(const Cochain& a, const Cochain& b) {
    assert(&a.complex() == &b.complex() && a.side() == b.side());
    if (a.is_zero() && a.degree() != b.degree()) return b;
    if (b.is_zero() && a.degree() != b.degree()) return a;
    if (a.degree() != b.degree())
        throw std::invalid_argument("adding cochains of different degrees");
    Cochain out = a;
    for (const auto& [c, v] : b.coefficients()) out.accumulate(c, v);
    return out;
}

Cochain sub(const Cochain& a, const Cochain& b) { return add(a, negated(b)); }

Cochain negated(const Cochain& a) {
    Cochain out(a.complex(), a.field(), a.side(), a.degree());
    for (const auto& [c, v] : a.coefficients()) out.set(c, a.field().negate(v));
    return out;
}

Cochain scaled(const Cochain& a, const Scalar& s) {
    Cochain out(a.complex(), a.field(), a.side(), a.degree());
    if (a.field().is_zero(s)) return out;
    for (const auto& [c, v] : a.coefficients()) out.set(c, a.field().mul(v, s));
    return out;
}

}  // namespace cct
