#ifndef SASAKI_CHECKS_HPP
#define SASAKI_CHECKS_HPP

#include "sasaki/homogeneous.hpp"
#include "sasaki/positivity.hpp"

namespace sasaki {

/// Composite verification suites; each returns measured worst violations so
/// callers (CLI, acceptance runner) only decide how to present them.

CheckList run_structure_checks(const PointModel& model);
CheckList run_torsion_checks(const PointModel& model);
CheckList run_curvature_checks(const PointModel& model, const CurvatureSuite& suite);
CheckList run_spectral_checks(const PointModel& model, const CurvatureSuite& suite);
CheckList run_einstein_checks(const PointModel& model, const CurvatureSuite& suite);
CheckList run_positivity_checks(const PointModel& model, const CurvatureSuite& suite);
CheckList run_homogeneous_checks(const LieModel& lm);

}  // namespace sasaki

#endif
