#ifndef POWERCOLOR_FINITE_FIELD_HPP
#define POWERCOLOR_FINITE_FIELD_HPP

#include <optional>
#include <utility>
#include <vector>

#include "powercolor/errors.hpp"

namespace powercolor {

class FiniteField;

/// An element of GF(p^e), identified by its canonical index in [0, q).
/// The index encodes the coefficient vector (c_0, ..., c_{e-1}) of the
/// polynomial representative as index = sum c_i * p^i.
class FieldElement {
public:
    FieldElement() : field_(nullptr), index_(0) {}
    FieldElement(const FiniteField* field, int index) : field_(field), index_(index) {}

    int index() const { return index_; }
    const FiniteField* field() const { return field_; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    bool operator==(const FieldElement& o) const = default;

private:
    const FiniteField* field_;
    int index_;
};

/// Exact arithmetic in GF(q), q = p^e, with a deterministically chosen
/// modulus: the lexicographically least monic irreducible of degree e over
/// GF(p), ordering candidates by the base-p value of their non-leading
/// coefficients. For e = 1 the modulus is x. Immutable after construction.
class FiniteField {
public:
    FiniteField(int p, int e);

    int characteristic() const { return p_; }
    int degree() const { return e_; }
    int order() const { return q_; }

    /// Monic modulus polynomial, little-endian, e+1 coefficients.
    const std::vector<int>& modulus() const { return modulus_; }

    FieldElement element(int index) const;
    FieldElement zero() const { return FieldElement(this, 0); }
    FieldElement one() const { return FieldElement(this, 1); }

    // Index-level arithmetic; all inputs and outputs are canonical indices.
    int add(int a, int b) const;
    int sub(int a, int b) const;
    int neg(int a) const;
    int mul(int a, int b) const;
    int inv(int a) const;  // throws DivisionByZeroError for a = 0

    std::vector<int> coefficients(int index) const;
    int index_of(const std::vector<int>& coeffs) const;

    static bool is_prime(int p);

private:
    void check_index(int a) const;

    int p_, e_, q_;
    std::vector<int> modulus_;
};

/// Builds GF(p^e). Throws NotPrimeError / SizeExceededError.
FiniteField field_new(int p, int e);

/// Factors q as p^e with p prime, or nullopt if q is not a prime power >= 2.
std::optional<std::pair<int, int>> prime_power_decomposition(int q);

}  // namespace powercolor

#endif
