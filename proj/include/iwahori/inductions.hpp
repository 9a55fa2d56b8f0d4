#pragma once

#include <map>

#include "iwahori/finite_reps.hpp"
#include "iwahori/tree.hpp"

namespace iwahori {

/// Weight of a spherical induction: the symmetric power V_r for 0 <= r <= p-1,
/// or the quotient V_{2p-2}/V_{2p-2}^*.
struct Weight {
    long long r = 0;
    bool quotient = false;

    bool operator==(const Weight& o) const { return r == o.r && quotient == o.quotient; }
    bool operator!=(const Weight& o) const { return !(*this == o); }
};

Weight weight_vr(long long r);
Weight weight_quotient(int p);
/// Weight inferred from a polynomial degree: r <= p-1 plain, r = 2p-2 quotient.
Weight infer_weight(int p, long long r);

/// Element of the compact induction from KZ of the weight: a finitely supported
/// map from tree vertices to weight vectors, each value stored relative to the
/// canonical matrix of its vertex. Quotient values are kept in normal form.
class SphericalElement {
public:
    SphericalElement() = default;
    SphericalElement(FqFieldPtr field, Weight w);
    static SphericalElement single(const FqFieldPtr& field, Weight w, const VertexKey& v,
                                   const VrElement& value);

    int prime() const { return field_->p; }
    const FqFieldPtr& field() const { return field_; }
    const Weight& weight() const { return w_; }
    const std::map<VertexKey, VrElement>& support() const { return sup_; }
    bool is_zero() const { return sup_.empty(); }
    size_t support_size() const { return sup_.size(); }

    SphericalElement operator+(const SphericalElement& o) const;
    SphericalElement operator-(const SphericalElement& o) const;
    SphericalElement scaled(const FqScalar& s) const;
    bool operator==(const SphericalElement& o) const;
    bool operator!=(const SphericalElement& o) const { return !(*this == o); }

    /// Accumulates value at the vertex (assumed already canonical), pruning zeros.
    void add_term(const VertexKey& v, const VrElement& value);

private:
    FqFieldPtr field_;
    Weight w_;
    std::map<VertexKey, VrElement> sup_;
};

/// Element of the compact induction from IZ of the character kind^r: a finitely
/// supported map from oriented edges to F_q, each coefficient relative to
/// coset_rep of its edge. The exponent is stored mod p-1.
class IwahoriElement {
public:
    IwahoriElement() = default;
    IwahoriElement(FqFieldPtr field, CharKind kind, long long r);
    static IwahoriElement indicator(const FqFieldPtr& field, CharKind kind, long long r,
                                    const EdgeKey& e);

    int prime() const { return field_->p; }
    const FqFieldPtr& field() const { return field_; }
    CharKind kind() const { return kind_; }
    long long r() const { return r_; }
    bool char_trivial() const { return r_ == 0; }
    const std::map<EdgeKey, FqScalar>& support() const { return sup_; }
    bool is_zero() const { return sup_.empty(); }
    size_t support_size() const { return sup_.size(); }

    IwahoriElement operator+(const IwahoriElement& o) const;
    IwahoriElement operator-(const IwahoriElement& o) const;
    IwahoriElement scaled(const FqScalar& s) const;
    bool operator==(const IwahoriElement& o) const;
    bool operator!=(const IwahoriElement& o) const { return !(*this == o); }

    void add_term(const EdgeKey& e, const FqScalar& c);

private:
    FqFieldPtr field_;
    CharKind kind_ = CharKind::d;
    long long r_ = 0;
    std::map<EdgeKey, FqScalar> sup_;
};

/// The element [g, v]: value v transported to the canonical representative of
/// the vertex of g. The weight is inferred from deg v.
SphericalElement normalize_spherical(const Mat2& g, const VrElement& v);

/// The element [[g, c]] for the character kind^r.
IwahoriElement normalize_iwahori(const Mat2& g, const FqScalar& c, CharKind kind,
                                 long long r);

/// Left translation h.[g, v] = [hg, v].
SphericalElement act_g(const Mat2& h, const SphericalElement& x);
IwahoriElement act_g(const Mat2& h, const IwahoriElement& x);

/// The spherical Hecke operator:
/// T[id, P] = sum over lifts of [(p l; 0 1), P(X, -lX)] + [(1 0; 0 p), P(0, Y)],
/// extended linearly and G-equivariantly.
SphericalElement T_spherical(const SphericalElement& x);

/// T_{1,0}[[id, 1]] = [[beta, 1]]; needs the character trivial on I.
IwahoriElement T10(const IwahoriElement& x);
/// T_{1,2}[[id, 1]] = sum over lifts of [[(1 0; pl p), 1]].
IwahoriElement T12(const IwahoriElement& x);
/// T_{-1,0}[[id, 1]] = sum over lifts of [[(p l; 0 1), 1]].
IwahoriElement Tm10(const IwahoriElement& x);

/// Smooth character of Q_p^*: eta(x) = t^{v_p(x)} * (unit of x mod p)^a.
struct SmoothCharSymbol {
    FqScalar t;
    long long a = 0;  // mod p-1

    SmoothCharSymbol() = default;
    SmoothCharSymbol(FqScalar t_, long long a_);
    static SmoothCharSymbol trivial(const FqFieldPtr& field);

    bool is_trivial() const;
    FqScalar eval(const PadicRational& x) const;
    SmoothCharSymbol inverse() const;
    SmoothCharSymbol operator*(const SmoothCharSymbol& o) const;
    bool operator==(const SmoothCharSymbol& o) const;
    bool operator!=(const SmoothCharSymbol& o) const { return !(*this == o); }
};

/// Twist by eta(det .) relative to the canonical representatives.
SphericalElement twist_eta(const SphericalElement& x, const SmoothCharSymbol& eta);
IwahoriElement twist_eta(const IwahoriElement& x, const SmoothCharSymbol& eta);

/// Deterministic random elements supported in the radius ball; count support
/// atoms with nonzero coefficients.
IwahoriElement random_iwahori(const FqFieldPtr& field, CharKind kind, long long r,
                              int radius, int count, unsigned long long seed);
SphericalElement random_spherical(const FqFieldPtr& field, Weight w, int radius,
                                  int count, unsigned long long seed);

}  // namespace iwahori
