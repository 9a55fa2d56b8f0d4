#pragma once

#include "iwahori/comparison.hpp"

namespace iwahori {

/// Canonical representative of an integer mod p-1, in {0, ..., p-2}.
long long class_mod(int p, long long a);

int delta(long long a, long long b);

/// mu_t * omega^e: an unramified character times a power of the level-1
/// fundamental character.
struct CharacterSymbol {
    FqScalar t;       // nonzero
    long long e = 0;  // mod p-1

    CharacterSymbol() = default;
    CharacterSymbol(FqScalar t_, long long e_);
    CharacterSymbol operator*(const CharacterSymbol& o) const;
    bool operator==(const CharacterSymbol& o) const;
    bool operator<(const CharacterSymbol& o) const;
    std::string str() const;
};

/// Semi-simple two-dimensional symbol: either an induced level-2 character
/// (irreducible) with a twist, or an unordered sum of two characters.
struct GaloisRepSymbol {
    enum class Kind { irreducible, split };
    Kind kind = Kind::split;
    // irreducible data
    long long c = 0;  // mod p^2-1, p+1 does not divide c
    SmoothCharSymbol twist;
    // split data, sorted for multiset equality
    std::vector<CharacterSymbol> chars;

    static GaloisRepSymbol irreducible(int p, long long c, SmoothCharSymbol twist);
    static GaloisRepSymbol split(CharacterSymbol x, CharacterSymbol y);

    bool operator==(const GaloisRepSymbol& o) const;
    bool operator!=(const GaloisRepSymbol& o) const { return !(*this == o); }

    /// Optional identification c ~ p*c (replaces c by the smaller of the two
    /// representatives); off by default everywhere.
    GaloisRepSymbol canonicalize_frobenius_twist(int p) const;

    std::string str() const;
};

/// Formal element c1*Tm10 + c2*T10 + c3*T12 + c4*1 of the Hecke algebra.
struct RelationExpr {
    FqScalar tm10, t10, t12, one;

    bool operator==(const RelationExpr& o) const;
    std::string str() const;
};

/// ind_{IZ} d^r / (rel1) + (rel2) twisted by eta.
struct IwahoriPresentation {
    int p = 0;
    long long r = 0;
    FqScalar lambda;
    SmoothCharSymbol eta;
    RelationExpr rel1, rel2;

    bool operator==(const IwahoriPresentation& o) const;
};

/// ind_{KZ} V_r / (T - lambda) twisted by eta.
struct SphericalPresentation {
    int p = 0;
    long long r = 0;
    FqScalar lambda;
    SmoothCharSymbol eta;

    bool operator==(const SphericalPresentation& o) const;
};

/// The symbol side of the correspondence; 0 <= r <= p-1, lambda may be zero.
GaloisRepSymbol galois_side(int p, long long r, const FqScalar& lambda,
                            const SmoothCharSymbol& eta);

/// The smooth side as spherical presentations; the second entry exists only
/// when lambda != 0.
std::vector<SphericalPresentation> gl2_side_spherical(int p, long long r,
                                                      const FqScalar& lambda,
                                                      const SmoothCharSymbol& eta);

/// The smooth side as Iwahori presentations with the delta-adjusted relations.
std::vector<IwahoriPresentation> gl2_side_iwahori(int p, long long r,
                                                  const FqScalar& lambda,
                                                  const SmoothCharSymbol& eta);

/// Whether the two parameterizations of the same split symbol agree:
/// (r, lambda, eta) versus ([p-3-r], lambda^-1, eta*omega^(r+1)).
bool symmetry_check(int p, long long r, const FqScalar& lambda,
                    const SmoothCharSymbol& eta);

/// Numeric consistency of the presentation rewrite for the regime of r:
/// the Iwahori relations map into the spherical relation under the matching
/// comparison chain. Deterministic in (inputs, seed).
ComparisonReport consistency_numeric(const FqFieldPtr& field, long long r,
                                     const FqScalar& lambda, int trials,
                                     unsigned long long seed);

}  // namespace iwahori
