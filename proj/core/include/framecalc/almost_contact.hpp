#pragma once

#include "framecalc/frame_manifold.hpp"

#include <string>
#include <vector>

namespace framecalc {

/// Derived curvature package of one manifold, computed once and shared.
struct GeometryData {
    StructureFunctions c;
    Connection conn;
    TensorField riem;
    TensorField ric;
    Expr scalar;
};

GeometryData compute_geometry(const FrameManifold& m);

/// Almost-contact structure in frame components: phi[i][j] is the E_j
/// component of phi(E_i); zeta is the Reeb field, eta its dual 1-form, and
/// dim = 2n + 1.
struct AlmostContactData {
    FrameManifold::ExprMatrix phi;
    TensorField zeta;
    TensorField eta;
    int n = 0;
};

/// Outcome of one exact residual check. `nonzero` lists offending components
/// as "(indices): value" strings, 1-based, in ascending index order.
struct AxiomCheck {
    std::string id;
    std::string description;
    bool holds = true;
    std::vector<std::string> nonzero;
};

struct StructureReport {
    std::vector<AxiomCheck> axioms;
    bool kenmotsu = false;
    /// The covariant-derivative axiom also exists in a second printed form
    /// with the metric slot swapped; skew-adjointness makes the two agree,
    /// and this records whether the alternative holds as well.
    bool nabla_phi_variant_holds = false;
};

struct IdentitySuiteReport {
    bool informational = false; // set when the structure is not Kenmotsu
    std::vector<AxiomCheck> results;
    bool all_hold() const;
};

/// Evaluates every defining axiom of the almost-contact metric structure and
/// the two Kenmotsu covariant-derivative conditions, exactly, on the frame
/// basis. Failures are reported, never thrown.
StructureReport verify_structure(const FrameManifold& m, const AlmostContactData& a);
StructureReport verify_structure(const FrameManifold& m, const AlmostContactData& a,
                                 const GeometryData& geo);

/// Exact residuals of the standard Kenmotsu curvature and derivative
/// identities (curvature pairings with eta and the Reeb field, the Ricci
/// identities, the covariant derivative of eta, and the Reeb Lie-derivative
/// identities, the last one checked through two independent routes).
IdentitySuiteReport identity_suite(const FrameManifold& m, const AlmostContactData& a);
IdentitySuiteReport identity_suite(const FrameManifold& m, const AlmostContactData& a,
                                   const GeometryData& geo, bool kenmotsu);

/// Star-Ricci tensor from its trace definition:
/// Tstar(E_i,E_j) = (1/2) tr(Z -> phi(R(E_i, phi E_j) Z)).
TensorField star_ricci_direct(const FrameManifold& m, const AlmostContactData& a,
                              const TensorField& riem);

/// Star-Ricci tensor from the Kenmotsu shift of the Ricci tensor:
/// Tstar = Ric + (2n-1) h + eta (x) eta.
TensorField star_ricci_formula(const FrameManifold& m, const AlmostContactData& a,
                               const TensorField& ric);

struct StarScalarResult {
    Expr trace;        // metric trace of Tstar
    Expr scalar_shift; // scalar curvature + 4 n^2
};

StarScalarResult star_scalar(const FrameManifold& m, const AlmostContactData& a,
                             const TensorField& tstar, const Expr& scalar);

/// eta (x) eta as a (0,2) tensor.
TensorField eta_outer_eta(const FrameManifold& m, const AlmostContactData& a);

/// The frame metric as a (0,2) tensor of constant expressions.
TensorField metric_tensor(const FrameManifold& m);

} // namespace framecalc
