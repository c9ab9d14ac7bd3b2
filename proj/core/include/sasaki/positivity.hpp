#ifndef SASAKI_POSITIVITY_HPP
#define SASAKI_POSITIVITY_HPP

#include "sasaki/spectral.hpp"

namespace sasaki {

/// A 4-form on the base whose operator has the quaternionic span as an
/// eigenspace. nu_min is the exact minimal eigenvalue of the operator on
/// Lambda^2 H (never user input); q_eigenvalue is the common eigenvalue on
/// span{Phi_i^H}.
struct AdaptedFourForm {
  PForm omega;           // on the full frame, horizontally supported
  double nu_min = 0.0;
  double q_eigenvalue = 0.0;
  double q_residual = 0.0;  // worst eigenspace residual over the Phi_i^H
};

/// Validates adaptedness; throws if span{Phi_i^H} is not an eigenspace.
AdaptedFourForm make_adapted(const PForm& omega, const PointModel& model);

struct BlockDecomposition {
  Matrix b1;  // 6 x 6 on [Phi_1^H/sqrt(2n), xi_23, ...]
  Matrix b2;
  Matrix b3;
  double offblock_norm = 0.0;
};

BlockDecomposition block_decompose(const SymOp& a, const Lambda2Split& split);

/// The N_i 2x2 matrix of alpha beta Rperp + G_T/4 + (pi* omega)_1 in the
/// basis {Phi_i^H/sqrt(2n), xi_jk}:
/// [[2n a(2d-3a) + nu_p, -sqrt(2n) a(3d-4a)], [ ., d^2]].
Matrix ni_block(const Params& params, double nu_p);

struct CisbigResult {
  double trace_poly = 0.0;  // delta^2 + 4n alpha delta - 6n alpha^2 + nu
  double det_poly = 0.0;    // 4n alpha (delta-2alpha)^3 + delta^2 nu
  bool trace_positive = false;
  bool det_positive = false;
  bool delta_gt_2alpha = false;
  bool all_strict() const { return trace_positive && det_positive && delta_gt_2alpha; }
  bool all_nonstrict() const {
    return trace_poly >= 0.0 && det_poly >= 0.0;
  }
};

CisbigResult cisbig_check(const Params& params, double nu);

enum class ModifierKind { none, sigma_only, sphere_like, custom };
std::string to_string(ModifierKind k);

/// sigma_only: -(1/4+eps) sigma_T;
/// sphere_like: (alpha delta/4) sum_i Phi_i^H ^ Phi_i^H - (1/4+eps) sigma_T.
PForm canonical_modifier(const PointModel& model, ModifierKind kind, double epsilon);

enum class CertificateKind { strongly_positive, strongly_nonnegative, fail };
std::string to_string(CertificateKind k);

struct NiEvidence {
  double trace = 0.0;
  double det = 0.0;
  double lambda_min = 0.0;
};

struct PositivityCertificate {
  CertificateKind kind = CertificateKind::fail;
  ModifierKind modifier = ModifierKind::none;
  double epsilon = 0.0;
  double lambda_min_modified = 0.0;
  double block1_min = 0.0, block2_min = 0.0, block3_min = 0.0;
  std::array<NiEvidence, 3> ni{};
  double offblock_coupling = 0.0;
  double frame_plane_omega_max = 0.0;  // max |<omega(sigma), sigma>| over frame planes
  std::vector<std::string> notes;
};

PositivityCertificate certify(const CurvatureSuite& suite, const PointModel& model,
                              const PForm& modifier, ModifierKind kind = ModifierKind::custom,
                              double epsilon = 0.0);

/// Bisection from eps0 = |alpha beta|/10 until the blocks positive at eps=0
/// keep a positive minimum.
double choose_epsilon(const CurvatureSuite& suite, const PointModel& model,
                      ModifierKind kind);

/// Fatness operator F = (delta^2 / 4 alpha^2) G_3 on the Lambda^2_3 basis.
SymOp fatness_operator(const PointModel& model);

}  // namespace sasaki

#endif
