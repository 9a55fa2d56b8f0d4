#pragma once

#include <array>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace iwahori {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Inverse of a mod m (m > 1, gcd(a, m) = 1); throws std::domain_error otherwise.
BigInt mod_inverse(const BigInt& a, const BigInt& m);

BigInt pow_bigint(const BigInt& base, unsigned long long e);

/// Exact element of Q_p representable on a desk: value = unit * p^exp where the
/// unit is a rational with numerator and denominator both prime to p.
/// Canonical form: unit == 0 implies exp == 0.
class PadicRational {
public:
    PadicRational() : p_(2), unit_(0), exp_(0) {}
    static PadicRational zero(int p) { return PadicRational(p, 0, 0); }
    static PadicRational one(int p) { return PadicRational(p, 1, 0); }
    static PadicRational from_integer(int p, const BigInt& n);
    static PadicRational from_rational(int p, const BigRat& r);
    static PadicRational p_power(int p, long long e);

    int prime() const { return p_; }
    bool is_zero() const { return unit_ == 0; }
    /// p-adic valuation; nullopt encodes +infinity (the zero element).
    std::optional<long long> val() const;
    const BigRat& unit() const { return unit_; }
    long long exponent() const { return exp_; }
    BigRat to_rational() const;

    PadicRational operator-() const;
    PadicRational operator+(const PadicRational& o) const;
    PadicRational operator-(const PadicRational& o) const;
    PadicRational operator*(const PadicRational& o) const;
    PadicRational operator/(const PadicRational& o) const;
    PadicRational inverse() const;
    bool operator==(const PadicRational& o) const;
    bool operator!=(const PadicRational& o) const { return !(*this == o); }

    /// val >= 0, i.e. lies in Z_p.
    bool is_integral() const { return is_zero() || exp_ >= 0; }
    /// val == 0.
    bool is_unit() const { return !is_zero() && exp_ == 0; }
    /// Value mod p as an element of {0,...,p-1}; requires val >= 0.
    int residue() const;
    /// Residue of the unit part (the value with its p-power stripped); nonzero.
    int unit_residue() const;
    /// Value mod p^k in [0, p^k); requires val >= 0 and k >= 1.
    BigInt residue_mod_pk(long long k) const;

    /// Exact textual form "n", "n/d", "n*p^e" or "n/d*p^e".
    std::string str() const;
    /// Parses the formats produced by str(); throws std::invalid_argument.
    static PadicRational parse(int p, const std::string& s);

private:
    PadicRational(int p, BigRat u, long long e) : p_(p), unit_(std::move(u)), exp_(e) {}
    int p_;
    BigRat unit_;
    long long exp_;
};

inline std::optional<long long> val(const PadicRational& x) { return x.val(); }

/// 2x2 matrix over Q_p with a fixed ambient prime.
class Mat2 {
public:
    Mat2() = default;
    Mat2(int p, PadicRational a, PadicRational b, PadicRational c, PadicRational d)
        : p_(p), e_{std::move(a), std::move(b), std::move(c), std::move(d)} {}
    static Mat2 from_integers(int p, const BigInt& a, const BigInt& b, const BigInt& c,
                              const BigInt& d);
    static Mat2 identity(int p);
    /// alpha = (1 0; 0 p)
    static Mat2 alpha(int p);
    /// beta = (0 1; p 0)
    static Mat2 beta(int p);
    /// w = (0 1; 1 0)
    static Mat2 w(int p);
    /// h_lambda = (lambda 1; 1 0); carries the base edge to the edge toward the
    /// sublattice neighbor indexed by lambda.
    static Mat2 h(int p, int lambda);
    /// (1 x; 0 1)
    static Mat2 upper_unipotent(int p, const BigInt& x);
    /// p^k * identity
    static Mat2 central_p_power(int p, long long k);

    int prime() const { return p_; }
    const PadicRational& a() const { return e_[0]; }
    const PadicRational& b() const { return e_[1]; }
    const PadicRational& c() const { return e_[2]; }
    const PadicRational& d() const { return e_[3]; }
    const PadicRational& at(int row, int col) const { return e_[2 * row + col]; }

    Mat2 operator*(const Mat2& o) const;
    Mat2 scaled(const PadicRational& s) const;
    PadicRational det() const;
    bool invertible() const { return !det().is_zero(); }
    /// Exact inverse; throws std::domain_error on det == 0.
    Mat2 inv() const;
    bool operator==(const Mat2& o) const;
    bool operator!=(const Mat2& o) const { return !(*this == o); }
    std::string str() const;

private:
    int p_ = 2;
    std::array<PadicRational, 4> e_{};
};

inline Mat2 mat_mul(const Mat2& x, const Mat2& y) { return x * y; }
inline Mat2 mat_inv(const Mat2& x) { return x.inv(); }
inline PadicRational mat_det(const Mat2& x) { return x.det(); }

/// Element of GL_2(F_p), entries in {0,...,p-1}.
class Gl2FpMat {
public:
    Gl2FpMat() : p_(2), m_{1, 0, 0, 1} {}
    Gl2FpMat(int p, int a, int b, int c, int d);
    static Gl2FpMat identity(int p) { return Gl2FpMat(p, 1, 0, 0, 1); }

    int prime() const { return p_; }
    int a() const { return m_[0]; }
    int b() const { return m_[1]; }
    int c() const { return m_[2]; }
    int d() const { return m_[3]; }

    Gl2FpMat operator*(const Gl2FpMat& o) const;
    Gl2FpMat inv() const;
    int det() const;
    bool operator==(const Gl2FpMat& o) const { return p_ == o.p_ && m_ == o.m_; }
    bool operator!=(const Gl2FpMat& o) const { return !(*this == o); }

private:
    int p_;
    std::array<int, 4> m_;
};

/// All of GL_2(F_p), in a fixed deterministic order.
std::vector<Gl2FpMat> enumerate_gl2(int p);
/// A generating set of GL_2(F_p): both unipotents, diag(g0, 1) for the smallest
/// primitive root g0, and w.
std::vector<Gl2FpMat> gl2_generators(int p);
int smallest_primitive_root(int p);

/// F_q = F_p[x]/(f), f the monic irreducible of degree k whose coefficient
/// vector (c_0,...,c_{k-1}) has the smallest value as a base-p integer.
class FqField {
public:
    int p;
    int k;
    std::vector<int> modulus;  // length k+1, monic

    static std::shared_ptr<const FqField> get(int p, int k);
    long long q() const;

private:
    FqField(int p_, int k_, std::vector<int> mod) : p(p_), k(k_), modulus(std::move(mod)) {}
};

using FqFieldPtr = std::shared_ptr<const FqField>;

/// Element of F_q as a coefficient vector over F_p of length k.
class FqScalar {
public:
    FqScalar() = default;
    FqScalar(FqFieldPtr field, int value_mod_p);
    static FqScalar zero(const FqFieldPtr& f) { return FqScalar(f, 0); }
    static FqScalar one(const FqFieldPtr& f) { return FqScalar(f, 1); }
    static FqScalar from_coeffs(FqFieldPtr field, std::vector<int> coeffs);

    const FqFieldPtr& field() const { return field_; }
    const std::vector<int>& coeffs() const { return c_; }
    bool is_zero() const;

    FqScalar operator+(const FqScalar& o) const;
    FqScalar operator-(const FqScalar& o) const;
    FqScalar operator-() const;
    FqScalar operator*(const FqScalar& o) const;
    FqScalar inverse() const;
    FqScalar pow(long long e) const;
    bool operator==(const FqScalar& o) const;
    bool operator!=(const FqScalar& o) const { return !(*this == o); }
    bool operator<(const FqScalar& o) const { return c_ < o.c_; }
    std::string str() const;

private:
    FqFieldPtr field_;
    std::vector<int> c_;
};

/// The lift set I_1 = {0, 1, ..., p-1} of F_p into Z.
std::vector<int> lifts(int p);

struct CentralFactorization {
    long long m;  // g = p^m * u
    Mat2 u;
};

/// g = p^m * u with u in GL_2(Z_p), if such a factorization exists.
std::optional<CentralFactorization> factor_KZ(const Mat2& g);
/// g = p^m * u with u in the Iwahori subgroup (upper triangular mod p), if possible.
std::optional<CentralFactorization> factor_IZ(const Mat2& g);

/// Entrywise reduction of u in GL_2(Z_p); throws std::domain_error if an entry is
/// not integral or det is not a unit.
Gl2FpMat reduce_mod_p(const Mat2& u);

enum class CharKind { d, a };

/// Value of the character reading the bottom-right (kind d) or top-left (kind a)
/// entry mod p, raised to the r-th power; defined on IZ with p acting trivially.
/// Throws std::domain_error if g is not in IZ.
FqScalar char_value(const Mat2& g, CharKind kind, long long r, const FqFieldPtr& field);

bool is_prime(int p);

}  // namespace iwahori
