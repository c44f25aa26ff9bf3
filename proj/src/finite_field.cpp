#include "powercolor/finite_field.hpp"

#include <algorithm>

namespace powercolor {

namespace {

// Polynomials over GF(p) as little-endian coefficient vectors without a
// normalized-length requirement; helpers keep leading zeros trimmed.

void trim(std::vector<int>& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int poly_degree(const std::vector<int>& f) { return static_cast<int>(f.size()) - 1; }

// Remainder of f by a monic divisor g.
std::vector<int> poly_mod(std::vector<int> f, const std::vector<int>& g, int p) {
    trim(f);
    const int dg = poly_degree(g);
    while (poly_degree(f) >= dg) {
        int shift = poly_degree(f) - dg;
        int lead = f.back();
        for (int i = 0; i <= dg; ++i) {
            f[i + shift] = ((f[i + shift] - lead * g[i]) % p + p) % p;
        }
        trim(f);
    }
    return f;
}

std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b, int p) {
    if (a.empty() || b.empty()) return {};
    std::vector<int> out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    trim(out);
    return out;
}

// Monic polynomial of degree d whose non-leading coefficients encode `code`
// base p (c_0 = code % p, c_1 = (code/p) % p, ...).
std::vector<int> monic_from_code(long long code, int d, int p) {
    std::vector<int> f(d + 1, 0);
    for (int i = 0; i < d; ++i) {
        f[i] = static_cast<int>(code % p);
        code /= p;
    }
    f[d] = 1;
    return f;
}

bool divides(const std::vector<int>& g, const std::vector<int>& f, int p) {
    return poly_mod(f, g, p).empty();
}

// Irreducibility by trial division by every monic polynomial of degree
// 1..e/2. Sufficient: a reducible polynomial of degree e has a monic factor
// of degree at most e/2.
bool is_irreducible(const std::vector<int>& f, int p) {
    const int e = poly_degree(f);
    for (int d = 1; 2 * d <= e; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long code = 0; code < count; ++code) {
            if (divides(monic_from_code(code, d, p), f, p)) return false;
        }
    }
    return true;
}

std::vector<int> least_irreducible(int p, int e) {
    if (e == 1) return {0, 1};  // the polynomial x
    long long count = 1;
    for (int i = 0; i < e; ++i) count *= p;
    for (long long code = 0; code < count; ++code) {
        std::vector<int> f = monic_from_code(code, e, p);
        if (is_irreducible(f, p)) return f;
    }
    throw Error("no irreducible polynomial found (unreachable for prime p)");
}

}  // namespace

bool FiniteField::is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

FiniteField::FiniteField(int p, int e) : p_(p), e_(e) {
    if (!is_prime(p)) throw NotPrimeError(p);
    if (e < 1) throw SizeExceededError("extension degree must be >= 1");
    long long q = 1;
    for (int i = 0; i < e; ++i) {
        q *= p;
        if (q > (1LL << 16)) throw SizeExceededError("field order exceeds 2^16");
    }
    q_ = static_cast<int>(q);
    modulus_ = least_irreducible(p, e);
}

FiniteField field_new(int p, int e) { return FiniteField(p, e); }

void FiniteField::check_index(int a) const {
    if (a < 0 || a >= q_) throw Error("field element index out of range");
}

std::vector<int> FiniteField::coefficients(int index) const {
    check_index(index);
    std::vector<int> c(e_, 0);
    for (int i = 0; i < e_; ++i) {
        c[i] = index % p_;
        index /= p_;
    }
    return c;
}

int FiniteField::index_of(const std::vector<int>& coeffs) const {
    int idx = 0;
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
        idx = idx * p_ + coeffs[i];
    }
    return idx;
}

FieldElement FiniteField::element(int index) const {
    check_index(index);
    return FieldElement(this, index);
}

int FiniteField::add(int a, int b) const {
    check_index(a);
    check_index(b);
    if (e_ == 1) return (a + b) % p_;
    std::vector<int> ca = coefficients(a), cb = coefficients(b);
    for (int i = 0; i < e_; ++i) ca[i] = (ca[i] + cb[i]) % p_;
    return index_of(ca);
}

int FiniteField::neg(int a) const {
    check_index(a);
    if (e_ == 1) return (p_ - a) % p_;
    std::vector<int> c = coefficients(a);
    for (int& x : c) x = (p_ - x) % p_;
    return index_of(c);
}

int FiniteField::sub(int a, int b) const { return add(a, neg(b)); }

int FiniteField::mul(int a, int b) const {
    check_index(a);
    check_index(b);
    if (e_ == 1) return static_cast<int>(static_cast<long long>(a) * b % p_);
    std::vector<int> prod = poly_mul(coefficients(a), coefficients(b), p_);
    std::vector<int> rem = poly_mod(std::move(prod), modulus_, p_);
    rem.resize(e_, 0);
    return index_of(rem);
}

int FiniteField::inv(int a) const {
    check_index(a);
    if (a == 0) throw DivisionByZeroError();
    // a^(q-2): the multiplicative group has order q-1.
    int result = 1, base = a, exp = q_ - 2;
    while (exp > 0) {
        if (exp & 1) result = mul(result, base);
        base = mul(base, base);
        exp >>= 1;
    }
    return result;
}

namespace {
const FiniteField* same_field(const FieldElement& a, const FieldElement& b) {
    if (a.field() == nullptr || a.field() != b.field()) throw FieldMismatchError();
    return a.field();
}
}  // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
    const FiniteField* f = same_field(*this, o);
    return FieldElement(f, f->add(index_, o.index_));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    const FiniteField* f = same_field(*this, o);
    return FieldElement(f, f->sub(index_, o.index_));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    const FiniteField* f = same_field(*this, o);
    return FieldElement(f, f->mul(index_, o.index_));
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    const FiniteField* f = same_field(*this, o);
    return FieldElement(f, f->mul(index_, f->inv(o.index_)));
}

std::optional<std::pair<int, int>> prime_power_decomposition(int q) {
    if (q < 2) return std::nullopt;
    for (int p = 2; static_cast<long long>(p) * p <= q; ++p) {
        if (q % p != 0) continue;
        int e = 0, rest = q;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        if (rest != 1) return std::nullopt;
        return std::make_pair(p, e);
    }
    return std::make_pair(q, 1);  // q itself is prime
}

}  // namespace powercolor
