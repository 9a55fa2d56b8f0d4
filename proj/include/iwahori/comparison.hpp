#pragma once

#include <optional>
#include <string>

#include "iwahori/inductions.hpp"

namespace iwahori {

/// The comparison map for the trivial character: [[id, 1]] is sent to
/// [id, Y^{2p-2} - X^{p-1}Y^{p-1}] in the quotient weight and the map is
/// extended linearly and equivariantly.
SphericalElement phi(const IwahoriElement& x);

/// Vertexwise projection of a quotient-weight element to its V_0 part, the
/// trivial summand being identified with V_0 through e0 -> 1.
SphericalElement project_V0(const SphericalElement& y);
/// Vertexwise projection to the V_{p-1} part through X^{p-1} -> [X^{2p-2}].
SphericalElement project_Vp1(const SphericalElement& y);

/// The comparison map for 0 < r < p-1 (kind d): [[id, 1]] -> [beta, X^r],
/// extended linearly and equivariantly. Kills the image of T_{-1,0}.
SphericalElement psi_r(const IwahoriElement& x);

/// The order-2 automorphism of the trivial-character induction (equals T10).
IwahoriElement theta(const IwahoriElement& x);

/// The d^r -> a^r isomorphism for 0 < r < p-1: [[g, 1]] -> [[g beta, 1]].
IwahoriElement flip(const IwahoriElement& x);
/// Its inverse (a^r -> d^r), the same formula on the other side.
IwahoriElement flip_back(const IwahoriElement& x);

/// One verified identity inside a report.
struct CheckResult {
    std::string id;
    std::string statement;
    bool pass = false;
    std::optional<unsigned long long> failing_seed;
    std::string detail;  // nonempty only on failure
};

/// Outcome of a verification run; failures carry a reproducing seed.
struct ComparisonReport {
    int p = 0;
    std::string suite;
    unsigned long long seed = 0;
    int radius = 0;
    int trials = 0;
    std::vector<CheckResult> checks;

    bool all_pass() const;
    void append(const ComparisonReport& other);
};

/// TAP-style text rendering ("ok N - id" per check).
std::string report_to_tap(const ComparisonReport& r);

}  // namespace iwahori
