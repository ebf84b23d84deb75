#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ttc/errors.hpp"

namespace ttc {

using u64 = std::uint64_t;
using i64 = std::int64_t;

// Exact rational numbers.  GMP keeps fractions canonical (reduced, positive
// denominator), which is exactly the Scalar invariant we need.
using Rat = mpq_class;

std::string rat_str(const Rat& r);
Rat rat_parse(const std::string& s);

enum class FieldKind { Prime, Extension, Rationals };

// A field element.  The active alternative is fixed by the owning Field:
// residue for F_p, coefficient vector of exact length k for F_p[x]/(f),
// reduced fraction for Q.
using ExtElem = std::vector<u64>;
using Scalar = std::variant<u64, ExtElem, Rat>;

class Field;
// All Field methods are const; instances are immutable after construction.
using FieldPtr = std::shared_ptr<Field>;

// Exact arithmetic context.  Immutable after construction; all operations are
// pure, so fields and scalars can be shared freely between workers.
class Field {
public:
    // Validated constructors (the spec's field_make).
    static FieldPtr prime(u64 p);                                  // CompositeModulus
    static FieldPtr extension(u64 p, const std::vector<u64>& f);   // ReduciblePolynomial
    static FieldPtr rationals();

    FieldKind kind() const { return kind_; }
    u64 characteristic() const { return p_; }  // 0 for Q
    // Degree k of the extension (1 for prime fields, 0 for Q).
    std::size_t degree() const { return ext_degree_; }
    // Modulus coefficients c0..ck (lowest first, monic); empty unless extension.
    const std::vector<u64>& modulus() const { return modulus_; }

    // |F| when it fits in a u64 (used by brute-force enumerations).
    std::optional<u64> size() const;
    // idx-th element in the canonical enumeration order, 0 <= idx < size().
    Scalar element_at(u64 idx) const;

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(i64 v) const;
    // Exact binomial C(n, k) and falling factorial n(n-1)...(n-k+1) mapped
    // into this field (used by derivative operators).
    Scalar binomial(u64 n, u64 k) const;
    Scalar falling_factorial(u64 n, u64 k) const;

    bool is_zero(const Scalar& a) const;
    bool eq(const Scalar& a, const Scalar& b) const;

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar div(const Scalar& a, const Scalar& b) const;  // DivisionByZero
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const;                   // DivisionByZero
    Scalar pow(const Scalar& a, u64 e) const;

    // Text form: residue / "a/b" / comma-joined coefficients "c0,c1,...".
    std::string to_string(const Scalar& a) const;
    Scalar parse(const std::string& s) const;

    bool same(const Field& other) const;
    // Header fragment used by the matrix file format:
    // "Q", "p", or "p k c0 c1 ... ck".
    std::string spec_string() const;

    // Throws FieldMismatch unless the scalar structurally belongs here.
    void check(const Scalar& a) const;

private:
    Field() = default;

    FieldKind kind_ = FieldKind::Rationals;
    u64 p_ = 0;
    std::size_t ext_degree_ = 0;
    std::vector<u64> modulus_;
};

inline void check_same_field(const FieldPtr& a, const FieldPtr& b) {
    if (!a->same(*b)) throw FieldMismatch();
}

}  // namespace ttc
