#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "iwahori/fq_linalg.hpp"
#include "iwahori/padic_core.hpp"

namespace iwahori {

/// Homogeneous polynomial of degree r in X, Y over F_q: an element of the
/// symmetric power V_r. Coefficient i belongs to the monomial X^(r-i) Y^i.
class VrElement {
public:
    VrElement() = default;
    VrElement(FqFieldPtr field, long long r);
    static VrElement monomial(const FqFieldPtr& field, long long r, long long ydeg,
                              const FqScalar& coeff);

    long long r() const { return r_; }
    const FqFieldPtr& field() const { return field_; }
    const std::vector<FqScalar>& coeffs() const { return c_; }
    const FqScalar& coeff(long long ydeg) const { return c_.at(static_cast<size_t>(ydeg)); }
    void set_coeff(long long ydeg, const FqScalar& v) { c_.at(static_cast<size_t>(ydeg)) = v; }

    bool is_zero() const;
    VrElement operator+(const VrElement& o) const;
    VrElement operator-(const VrElement& o) const;
    VrElement operator-() const;
    VrElement scaled(const FqScalar& s) const;
    bool operator==(const VrElement& o) const;
    bool operator!=(const VrElement& o) const { return !(*this == o); }

    /// P(x, y) for scalars.
    FqScalar evaluate(const FqScalar& x, const FqScalar& y) const;
    std::string str() const;

private:
    long long r_ = 0;
    FqFieldPtr field_;
    std::vector<FqScalar> c_;
};

/// P(a X + c Y, b X + d Y); the substitution matrix may be singular.
VrElement substitute(const VrElement& P, const FqScalar& a, const FqScalar& b,
                     const FqScalar& c, const FqScalar& d);

/// Left action of GL_2(F_p): (g.P)(X, Y) = P(aX + cY, bX + dY).
VrElement gl2_act(const Gl2FpMat& g, const VrElement& P);

/// Element of V_r / V_r^* in its echelon normal form: the unique representative
/// whose coefficients vanish at the leading monomials of the V_r^* basis.
class QuotElement {
public:
    QuotElement() = default;

    long long r() const { return rep_.r(); }
    const FqFieldPtr& field() const { return rep_.field(); }
    /// The normal-form representative polynomial.
    const VrElement& rep() const { return rep_; }

    bool is_zero() const { return rep_.is_zero(); }
    QuotElement operator+(const QuotElement& o) const;
    QuotElement operator-(const QuotElement& o) const;
    QuotElement scaled(const FqScalar& s) const;
    bool operator==(const QuotElement& o) const { return rep_ == o.rep_; }
    bool operator!=(const QuotElement& o) const { return !(*this == o); }

private:
    friend QuotElement vstar_reduce(const VrElement&);
    explicit QuotElement(VrElement rep) : rep_(std::move(rep)) {}
    VrElement rep_;
};

/// Whether V_r / V_r^* machinery accepts this degree (r >= p+1, or the p = 2
/// boundary case r = 2p-2 = 2 where V_r^* is already zero).
bool quotient_degree_ok(int p, long long r);

/// Canonical representative mod theta * V_{r-p-1}, theta = X^p Y - X Y^p.
/// Throws std::invalid_argument for inadmissible r.
QuotElement vstar_reduce(const VrElement& P);

/// g acting on the quotient (V_r^* is a subrepresentation).
QuotElement quot_act(const Gl2FpMat& g, const QuotElement& x);

/// Indices i (of monomials X^(r-i) Y^i) that survive as free coordinates of the
/// quotient normal form; size p+1.
std::vector<long long> quotient_free_indices(int p, long long r);

/// Free coordinates of x, in quotient_free_indices order.
FqVec quotient_coords(const QuotElement& x);

/// Element of the induction of d^r from the Borel of GL_2(F_p): determined by
/// its values at the p+1 bottom-row representatives (0,1), (1,t) for t in F_p.
class IndBChar {
public:
    IndBChar() = default;
    IndBChar(FqFieldPtr field, int p, long long r, FqVec values);

    int prime() const { return p_; }
    long long r() const { return r_; }  // stored mod p-1
    const FqFieldPtr& field() const { return field_; }
    const FqVec& values() const { return values_; }

    bool is_zero() const;
    IndBChar operator+(const IndBChar& o) const;
    IndBChar scaled(const FqScalar& s) const;
    bool operator==(const IndBChar& o) const;
    bool operator!=(const IndBChar& o) const { return !(*this == o); }

    /// Right translation (g.f)(h) = f(h g).
    IndBChar translate(const Gl2FpMat& g) const;

private:
    FqFieldPtr field_;
    int p_ = 2;
    long long r_ = 0;
    FqVec values_;  // index 0: bottom row (0,1); index 1+t: bottom row (1,t)
};

/// psi_P(g) = P(c, d) on bottom rows; factors through V_r / V_r^*.
IndBChar psi(const VrElement& P);
IndBChar psi(const QuotElement& x);

/// Inverse of psi for r = 2p-2: the unique quotient class with the given values.
QuotElement psi_inverse(const IndBChar& f);

/// The classes generating the two summands of V_{2p-2}/V^*:
/// e0 = [X^{2p-2} - X^{p-1}Y^{p-1} + Y^{2p-2}] spans the trivial summand,
/// [X^{2p-2}] generates the V_{p-1} summand.
QuotElement v0_generator(const FqFieldPtr& field);
QuotElement vp1_generator(const FqFieldPtr& field);

/// x = c * e0 + iota(Q) with Q in V_{p-1}, iota the equivariant embedding
/// sending X^{p-1} to [X^{2p-2}]; requires r = 2p-2.
std::pair<FqScalar, VrElement> decompose_2p2(const QuotElement& x);

/// The embedding iota itself.
QuotElement embed_vp1(const VrElement& q);

/// Dimension of the orbit span of [X^{2p-2}] (the V_{p-1} copy); for checks.
int vp1_copy_dimension(const FqFieldPtr& field);

/// sum over i in {0..p-1} of i^j in F_p; j >= 1 required.
FqScalar sum_powers(long long j, const FqFieldPtr& field);

}  // namespace iwahori
