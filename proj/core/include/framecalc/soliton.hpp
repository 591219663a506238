#pragma once

#include "framecalc/almost_contact.hpp"
#include "framecalc/linear_solve.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace framecalc {

enum class TensorSelector { Ricci, StarRicci };

/// One fully pinned sign convention for the soliton equation. The residual is
///   sign_lie * [kappa] * (L_V h) + sign_tensor * 2 * T + (omega_coeff * Omega
///   + theta_coeff * theta * S) * h,
/// where T is the Ricci or star-Ricci tensor and S its metric trace. Presets
/// cover every printed variant of the defining equation plus two engine
/// variants that reproduce published closed forms; reports always carry the
/// exact formula so no two presets produce silently comparable numbers.
struct SolitonConvention {
    std::string id;
    TensorSelector tensor = TensorSelector::StarRicci;
    bool kappa_on_lie = false;
    int sign_lie = 1;
    int sign_tensor = 1;
    Rational omega_coeff = 0;
    Rational theta_coeff = 0;
    std::string notes;      // parameter-slot mapping remark
    std::string variant_of; // base preset id when this is an engine variant

    std::string formula() const;
};

const std::vector<SolitonConvention>& preset_registry();
bool is_known_preset(const std::string& id);
const SolitonConvention& preset(const std::string& id);

/// A candidate soliton: potential field plus parameter slots. kappa is present
/// exactly when the convention scales the Lie term; each slot holds a rational
/// constant or a bare parameter symbol.
struct SolitonInstance {
    SolitonConvention convention;
    std::string field_name;
    TensorField v;
    std::optional<Expr> kappa;
    Expr theta;
    Expr omega;
};

/// Selected curvature tensor of the convention together with its metric trace.
struct SelectedTensor {
    TensorField tensor;
    Expr scalar;
};

SelectedTensor select_tensor(const FrameManifold& m, const GeometryData& geo,
                             const AlmostContactData* contact, TensorSelector sel);

/// Exact (0,2) residual of the convention's equation; the zero tensor means
/// the instance is a soliton under that convention.
TensorField soliton_residual(const FrameManifold& m, const GeometryData& geo,
                             const AlmostContactData* contact, const SolitonInstance& inst);

struct OmegaSolution {
    Expr omega;
    std::string equation; // the contracted identity that was solved, "... = 0"
};

/// The unique rate making the metric trace of the residual vanish. Requires
/// the omega slot to be a bare symbol; throws DegenerateTraceError when the
/// omega coefficient of the trace is zero.
OmegaSolution solve_omega_trace(const FrameManifold& m, const GeometryData& geo,
                                const AlmostContactData* contact, const SolitonInstance& inst);

/// Rate from contracting the residual with the Reeb field in the second slot
/// (the potential must equal the Reeb field and the structure must verify).
OmegaSolution solve_omega_reeb(const FrameManifold& m, const GeometryData& geo,
                               const AlmostContactData& contact, const SolitonInstance& inst);

enum class TorseSubtype {
    TorseForming,
    Concircular,
    Concurrent,
    Recurrent,
    Parallel,
    Torqued,
    NotTorseForming,
};

std::string to_string(TorseSubtype t);

/// Witness for nabla_X V = psi X + theta(X) V; re-verified exactly on return.
struct TorseFormingCertificate {
    TorseSubtype subtype = TorseSubtype::NotTorseForming;
    Expr psi;
    TensorField theta_form; // valence (0,1)
    Expr theta_of_v;        // theta applied to the field itself
};

/// Solves the frame-indexed linear system for (psi, theta_1..theta_m) and
/// classifies the special cases. Throws InconclusiveError when elimination
/// leaves the algebra, Error when the field vanishes identically.
TorseFormingCertificate classify_torse_forming(const FrameManifold& m, const GeometryData& geo,
                                               const TensorField& v);

struct EtaEinsteinCertificate {
    Expr alpha;
    Expr beta;
    bool einstein = false; // beta == 0
};

/// Ric = alpha h + beta eta (x) eta, when such exact constants exist.
std::optional<EtaEinsteinCertificate> eta_einstein(const FrameManifold& m, const GeometryData& geo,
                                                   const AlmostContactData& contact);

enum class ConformalClass { Killing, Homothetic, ProperHomothetic, Proper, None };

std::string to_string(ConformalClass c);

struct ConformalKillingCertificate {
    ConformalClass cls = ConformalClass::None;
    std::optional<Expr> lambda;
};

/// Finds lambda with L_V h = 2 lambda h, if one exists, and classifies it:
/// killing (lambda = 0), proper homothetic (nonzero rational constant),
/// homothetic (other constants), proper (coordinate-dependent).
ConformalKillingCertificate conformal_killing(const FrameManifold& m, const GeometryData& geo,
                                              const TensorField& v);

/// Rate solved along a torse-forming potential, with the published closed
/// forms evaluated alongside for comparison.
struct TorseOmegaReport {
    Expr omega;               // exact trace solution under the convention
    std::string equation;     // contracted identity that was solved
    std::optional<Expr> claimed_closed_form;    // theta(rho) entering without kappa
    std::optional<Expr> claimed_contraction;    // kappa theta(rho) variant
    std::optional<Expr> claimed_special_case;   // per-subtype printed formula
};

TorseOmegaReport solve_omega_torse_forming(const FrameManifold& m, const GeometryData& geo,
                                           const AlmostContactData* contact,
                                           const TorseFormingCertificate& cert,
                                           const SolitonInstance& inst);

enum class CheckStatus { Match, Mismatch, NotApplicable };

std::string to_string(CheckStatus s);

struct CheckReport {
    std::string id;
    std::string subject; // field the check ran on, when any
    CheckStatus status = CheckStatus::NotApplicable;
    std::string derived;     // engine's exact value/identity
    std::string claimed;     // closed form under test
    std::string discrepancy; // derived - claimed when they differ
    std::vector<std::string> notes;
};

/// Identifiers accepted by theorem_check, in report order.
const std::vector<std::string>& theorem_ids();

/// Machine-checks one claimed identity under the instance's convention.
/// Hypotheses that fail on (m, contact, inst) yield NotApplicable; exact
/// mismatches carry the discrepancy expression. Throws
/// DivisionByZeroParameterError when a formula divides by a parameter bound
/// to zero.
CheckReport theorem_check(const FrameManifold& m, const GeometryData& geo,
                          const AlmostContactData* contact, const std::string& id,
                          const SolitonInstance& inst);

enum class SolitonSign { Contracting, Steady, Growing, Indeterminate };

std::string to_string(SolitonSign s);

/// Sign trichotomy of the rate: contracting / steady / growing for
/// positive / zero / negative; symbolic rates are indeterminate.
SolitonSign classify_sign(const Expr& omega);

} // namespace framecalc
