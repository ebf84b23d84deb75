#include "ttc/field.hpp"

#include <sstream>

#include "ttc/modarith.hpp"
#include "ttc/zpoly.hpp"

namespace ttc {

namespace {

constexpr u64 kMaxPrime = 1ULL << 61;

u64 scalar_u64(const Scalar& a) { return std::get<u64>(a); }
const ExtElem& scalar_ext(const Scalar& a) { return std::get<ExtElem>(a); }
const Rat& scalar_rat(const Scalar& a) { return std::get<Rat>(a); }

ExtElem pad_to(zp::Z v, std::size_t k) {
    v.resize(k, 0);
    return v;
}

zp::Z trimmed(const ExtElem& v) {
    zp::Z z = v;
    zp::trim(z);
    return z;
}

u64 mpz_mod_u64(const mpz_class& z, u64 p) {
    // GMP's fdiv gives a nonnegative remainder for negative inputs.
    mpz_class r;
    mpz_class pp;
    mpz_import(pp.get_mpz_t(), 1, -1, sizeof(u64), 0, 0, &p);
    mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), pp.get_mpz_t());
    u64 out = 0;
    mpz_export(&out, nullptr, -1, sizeof(u64), 0, 0, r.get_mpz_t());
    return out;
}

}  // namespace

std::string rat_str(const Rat& r) { return r.get_str(); }

Rat rat_parse(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw Error("BadScalar", "cannot parse rational '" + s + "'");
    if (r.get_den() == 0) throw Error("BadScalar", "zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

FieldPtr Field::prime(u64 p) {
    if (p >= kMaxPrime) throw DomainError("prime modulus must be below 2^61");
    if (!is_prime_u64(p)) throw CompositeModulus(p);
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = FieldKind::Prime;
    f->p_ = p;
    f->ext_degree_ = 1;
    return f;
}

FieldPtr Field::extension(u64 p, const std::vector<u64>& fcoeffs) {
    if (p >= kMaxPrime) throw DomainError("prime modulus must be below 2^61");
    if (!is_prime_u64(p)) throw CompositeModulus(p);
    zp::Z f;
    f.reserve(fcoeffs.size());
    for (u64 c : fcoeffs) f.push_back(c % p);
    zp::trim(f);
    if (zp::deg(f) < 1) throw ReduciblePolynomial("extension modulus must have degree >= 1");
    if (f.back() != 1) throw ReduciblePolynomial("extension modulus must be monic");
    if (!zp::is_irreducible(f, p))
        throw ReduciblePolynomial("extension modulus factors over F_p");
    auto fl = std::shared_ptr<Field>(new Field());
    fl->kind_ = FieldKind::Extension;
    fl->p_ = p;
    fl->ext_degree_ = static_cast<std::size_t>(zp::deg(f));
    fl->modulus_ = f;
    return fl;
}

FieldPtr Field::rationals() {
    static FieldPtr q = std::shared_ptr<Field>(new Field());
    return q;
}

std::optional<u64> Field::size() const {
    switch (kind_) {
        case FieldKind::Prime: return p_;
        case FieldKind::Extension: {
            unsigned __int128 s = 1;
            for (std::size_t i = 0; i < ext_degree_; ++i) {
                s *= p_;
                if (s > (unsigned __int128)~0ULL) return std::nullopt;
            }
            return static_cast<u64>(s);
        }
        case FieldKind::Rationals: return std::nullopt;
    }
    return std::nullopt;
}

Scalar Field::element_at(u64 idx) const {
    switch (kind_) {
        case FieldKind::Prime:
            if (idx >= p_) throw IndexOutOfRange("element index beyond field size");
            return idx;
        case FieldKind::Extension: {
            ExtElem v(ext_degree_, 0);
            for (std::size_t i = 0; i < ext_degree_; ++i) {
                v[i] = idx % p_;
                idx /= p_;
            }
            if (idx != 0) throw IndexOutOfRange("element index beyond field size");
            return v;
        }
        case FieldKind::Rationals:
            throw DomainError("rationals cannot be enumerated");
    }
    throw DomainError("unreachable");
}

Scalar Field::zero() const {
    switch (kind_) {
        case FieldKind::Prime: return u64{0};
        case FieldKind::Extension: return ExtElem(ext_degree_, 0);
        case FieldKind::Rationals: return Rat(0);
    }
    throw DomainError("unreachable");
}

Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(i64 v) const {
    switch (kind_) {
        case FieldKind::Prime: {
            i64 m = v % static_cast<i64>(p_);
            if (m < 0) m += static_cast<i64>(p_);
            return static_cast<u64>(m);
        }
        case FieldKind::Extension: {
            ExtElem e(ext_degree_, 0);
            i64 m = v % static_cast<i64>(p_);
            if (m < 0) m += static_cast<i64>(p_);
            e[0] = static_cast<u64>(m);
            return e;
        }
        case FieldKind::Rationals: return Rat(static_cast<long>(v));
    }
    throw DomainError("unreachable");
}

Scalar Field::binomial(u64 n, u64 k) const {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    if (kind_ == FieldKind::Rationals) return Rat(b);
    u64 r = mpz_mod_u64(b, p_);
    if (kind_ == FieldKind::Prime) return r;
    ExtElem e(ext_degree_, 0);
    e[0] = r;
    return e;
}

Scalar Field::falling_factorial(u64 n, u64 k) const {
    mpz_class f = 1;
    for (u64 i = 0; i < k; ++i) f *= mpz_class(static_cast<unsigned long>(n - i));
    if (kind_ == FieldKind::Rationals) return Rat(f);
    u64 r = mpz_mod_u64(f, p_);
    if (kind_ == FieldKind::Prime) return r;
    ExtElem e(ext_degree_, 0);
    e[0] = r;
    return e;
}

void Field::check(const Scalar& a) const {
    switch (kind_) {
        case FieldKind::Prime:
            if (!std::holds_alternative<u64>(a) || scalar_u64(a) >= p_)
                throw FieldMismatch("scalar is not a residue of this prime field");
            return;
        case FieldKind::Extension:
            if (!std::holds_alternative<ExtElem>(a) || scalar_ext(a).size() != ext_degree_)
                throw FieldMismatch("scalar is not an element of this extension field");
            return;
        case FieldKind::Rationals:
            if (!std::holds_alternative<Rat>(a)) throw FieldMismatch("scalar is not rational");
            return;
    }
}

bool Field::is_zero(const Scalar& a) const {
    check(a);
    switch (kind_) {
        case FieldKind::Prime: return scalar_u64(a) == 0;
        case FieldKind::Extension: {
            for (u64 c : scalar_ext(a))
                if (c != 0) return false;
            return true;
        }
        case FieldKind::Rationals: return scalar_rat(a) == 0;
    }
    return false;
}

bool Field::eq(const Scalar& a, const Scalar& b) const {
    check(a);
    check(b);
    return a == b;
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
    check(a);
    check(b);
    switch (kind_) {
        case FieldKind::Prime: return addmod(scalar_u64(a), scalar_u64(b), p_);
        case FieldKind::Extension: {
            ExtElem r(ext_degree_);
            const ExtElem& x = scalar_ext(a);
            const ExtElem& y = scalar_ext(b);
            for (std::size_t i = 0; i < ext_degree_; ++i) r[i] = addmod(x[i], y[i], p_);
            return r;
        }
        case FieldKind::Rationals: return Rat(scalar_rat(a) + scalar_rat(b));
    }
    throw DomainError("unreachable");
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
    check(a);
    check(b);
    switch (kind_) {
        case FieldKind::Prime: return submod(scalar_u64(a), scalar_u64(b), p_);
        case FieldKind::Extension: {
            ExtElem r(ext_degree_);
            const ExtElem& x = scalar_ext(a);
            const ExtElem& y = scalar_ext(b);
            for (std::size_t i = 0; i < ext_degree_; ++i) r[i] = submod(x[i], y[i], p_);
            return r;
        }
        case FieldKind::Rationals: return Rat(scalar_rat(a) - scalar_rat(b));
    }
    throw DomainError("unreachable");
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
    check(a);
    check(b);
    switch (kind_) {
        case FieldKind::Prime: return mulmod(scalar_u64(a), scalar_u64(b), p_);
        case FieldKind::Extension:
            return pad_to(zp::mulmod_poly(trimmed(scalar_ext(a)), trimmed(scalar_ext(b)), modulus_, p_),
                          ext_degree_);
        case FieldKind::Rationals: return Rat(scalar_rat(a) * scalar_rat(b));
    }
    throw DomainError("unreachable");
}

Scalar Field::neg(const Scalar& a) const {
    check(a);
    switch (kind_) {
        case FieldKind::Prime: return submod(0, scalar_u64(a), p_);
        case FieldKind::Extension: {
            ExtElem r(ext_degree_);
            const ExtElem& x = scalar_ext(a);
            for (std::size_t i = 0; i < ext_degree_; ++i) r[i] = submod(0, x[i], p_);
            return r;
        }
        case FieldKind::Rationals: return Rat(-scalar_rat(a));
    }
    throw DomainError("unreachable");
}

Scalar Field::inv(const Scalar& a) const {
    if (is_zero(a)) throw DivisionByZero();
    switch (kind_) {
        case FieldKind::Prime: return invmod(scalar_u64(a), p_);
        case FieldKind::Extension:
            return pad_to(zp::invmod_poly(trimmed(scalar_ext(a)), modulus_, p_), ext_degree_);
        case FieldKind::Rationals: return Rat(1 / scalar_rat(a));
    }
    throw DomainError("unreachable");
}

Scalar Field::div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

Scalar Field::pow(const Scalar& a, u64 e) const {
    check(a);
    Scalar r = one();
    Scalar base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

std::string Field::to_string(const Scalar& a) const {
    check(a);
    switch (kind_) {
        case FieldKind::Prime: return std::to_string(scalar_u64(a));
        case FieldKind::Extension: {
            std::string s;
            const ExtElem& v = scalar_ext(a);
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i) s += ',';
                s += std::to_string(v[i]);
            }
            return s;
        }
        case FieldKind::Rationals: return rat_str(scalar_rat(a));
    }
    throw DomainError("unreachable");
}

Scalar Field::parse(const std::string& s) const {
    switch (kind_) {
        case FieldKind::Prime: {
            Rat r = rat_parse(s);  // accept "-3" and even "1/2" via rational reduction
            if (r.get_den() == 1) {
                return mpz_mod_u64(r.get_num(), p_);
            }
            u64 num = mpz_mod_u64(r.get_num(), p_);
            u64 den = mpz_mod_u64(r.get_den(), p_);
            if (den == 0) throw DivisionByZero();
            return mulmod(num, invmod(den, p_), p_);
        }
        case FieldKind::Extension: {
            ExtElem v;
            std::string tok;
            std::stringstream ss(s);
            while (std::getline(ss, tok, ',')) {
                Rat r = rat_parse(tok);
                if (r.get_den() != 1) throw Error("BadScalar", "extension coefficients must be integers");
                v.push_back(mpz_mod_u64(r.get_num(), p_));
            }
            if (v.size() > ext_degree_)
                throw Error("BadScalar", "too many coefficients for extension degree");
            v.resize(ext_degree_, 0);
            return v;
        }
        case FieldKind::Rationals: return rat_parse(s);
    }
    throw DomainError("unreachable");
}

bool Field::same(const Field& other) const {
    return kind_ == other.kind_ && p_ == other.p_ && modulus_ == other.modulus_;
}

std::string Field::spec_string() const {
    switch (kind_) {
        case FieldKind::Prime: return std::to_string(p_);
        case FieldKind::Extension: {
            std::string s = std::to_string(p_) + " " + std::to_string(ext_degree_);
            for (u64 c : modulus_) s += " " + std::to_string(c);
            return s;
        }
        case FieldKind::Rationals: return "Q";
    }
    throw DomainError("unreachable");
}

}  // namespace ttc
