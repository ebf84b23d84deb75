#include "ttc/poly.hpp"

#include "ttc/rng.hpp"
#include "ttc/zpoly.hpp"

namespace ttc {

Poly::Poly(FieldPtr field, std::vector<Scalar> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_) field_->check(c);
    trim();
}

void Poly::trim() {
    while (!coeffs_.empty() && field_->is_zero(coeffs_.back())) coeffs_.pop_back();
}

Poly Poly::monomial(const FieldPtr& field, std::size_t degree) {
    return monomial(field, degree, field->one());
}

Poly Poly::monomial(const FieldPtr& field, std::size_t degree, const Scalar& c) {
    std::vector<Scalar> coeffs(degree + 1, field->zero());
    coeffs[degree] = c;
    return Poly(field, std::move(coeffs));
}

Poly Poly::constant(const FieldPtr& field, const Scalar& c) {
    return Poly(field, {c});
}

Scalar Poly::coeff(std::size_t i) const {
    if (i < coeffs_.size()) return coeffs_[i];
    return field_->zero();
}

Poly Poly::operator+(const Poly& o) const {
    check_same_field(field_, o.field_);
    std::vector<Scalar> r(std::max(coeffs_.size(), o.coeffs_.size()), field_->zero());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = field_->add(coeff(i), o.coeff(i));
    return Poly(field_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
    check_same_field(field_, o.field_);
    std::vector<Scalar> r(std::max(coeffs_.size(), o.coeffs_.size()), field_->zero());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = field_->sub(coeff(i), o.coeff(i));
    return Poly(field_, std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
    check_same_field(field_, o.field_);
    if (is_zero() || o.is_zero()) return Poly(field_);
    std::vector<Scalar> r(coeffs_.size() + o.coeffs_.size() - 1, field_->zero());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (field_->is_zero(coeffs_[i])) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            r[i + j] = field_->add(r[i + j], field_->mul(coeffs_[i], o.coeffs_[j]));
    }
    return Poly(field_, std::move(r));
}

Poly Poly::operator-() const {
    std::vector<Scalar> r(coeffs_.size(), field_->zero());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i] = field_->neg(coeffs_[i]);
    return Poly(field_, std::move(r));
}

bool Poly::operator==(const Poly& o) const {
    if (!field_->same(*o.field_)) return false;
    if (coeffs_.size() != o.coeffs_.size()) return false;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (!field_->eq(coeffs_[i], o.coeffs_[i])) return false;
    return true;
}

Poly Poly::scaled(const Scalar& c) const {
    std::vector<Scalar> r(coeffs_.size(), field_->zero());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i] = field_->mul(coeffs_[i], c);
    return Poly(field_, std::move(r));
}

Scalar Poly::eval(const Scalar& x) const {
    Scalar acc = field_->zero();
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = field_->add(field_->mul(acc, x), coeffs_[i]);
    return acc;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        if (field_->is_zero(coeffs_[i])) continue;
        if (!s.empty()) s += " + ";
        std::string c = field_->to_string(coeffs_[i]);
        if (i == 0) {
            s += c;
        } else {
            if (c != "1") s += c + "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
    check_same_field(a.field_, b.field_);
    if (b.is_zero()) throw DivisionByZero();
    const FieldPtr& F = a.field_;
    Poly q(F);
    Poly r = a;
    Scalar lead_inv = F->inv(b.coeffs_.back());
    int db = b.deg();
    if (r.deg() >= db) q.coeffs_.assign(static_cast<std::size_t>(r.deg() - db) + 1, F->zero());
    while (r.deg() >= db) {
        std::size_t shift = static_cast<std::size_t>(r.deg() - db);
        Scalar c = F->mul(r.coeffs_.back(), lead_inv);
        q.coeffs_[shift] = c;
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
            r.coeffs_[shift + i] = F->sub(r.coeffs_[shift + i], F->mul(c, b.coeffs_[i]));
        r.trim();
    }
    q.trim();
    return {q, r};
}

Poly Poly::exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw Error("InexactDivision", "polynomial division left a remainder");
    return q;
}

Poly derivative(const Poly& g, std::size_t order, DerivKind kind) {
    const FieldPtr& F = g.field();
    if (order == 0) return g;
    if (g.deg() < static_cast<int>(order)) return Poly(F);
    std::vector<Scalar> r(static_cast<std::size_t>(g.deg()) - order + 1, F->zero());
    for (std::size_t i = order; i <= static_cast<std::size_t>(g.deg()); ++i) {
        Scalar factor = kind == DerivKind::Hasse ? F->binomial(i, order)
                                                 : F->falling_factorial(i, order);
        r[i - order] = F->mul(g.coeff(i), factor);
    }
    return Poly(F, std::move(r));
}

Poly find_irreducible(u64 p, std::size_t d, u64 seed) {
    if (d < 1) throw DomainError("degree must be at least 1");
    FieldPtr F = Field::prime(p);  // validates primality
    SplitMix64 rng(mix_seed(seed, p, d));
    for (;;) {
        zp::Z f(d + 1, 0);
        f[d] = 1;
        for (std::size_t i = 0; i < d; ++i) f[i] = rng.below(p);
        if (!zp::is_irreducible(f, p)) continue;
        std::vector<Scalar> coeffs;
        coeffs.reserve(d + 1);
        for (u64 c : f) coeffs.push_back(Scalar{c});
        return Poly(F, std::move(coeffs));
    }
}

}  // namespace ttc
