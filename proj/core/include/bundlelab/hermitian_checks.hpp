#pragma once

#include <functional>
#include <vector>

#include "bundlelab/derivatives.hpp"
#include "bundlelab/metric.hpp"
#include "bundlelab/report.hpp"

namespace bundlelab {

double det_defect(const MetricField& g, const Eigen::VectorXcd& p);
double min_eigenvalue(const MetricField& g, const Eigen::VectorXcd& p);
// max over deck generators of ||gamma^* g - g||_F / ||g||_F
double deck_invariance_defect(const MetricField& g, const Eigen::VectorXcd& p);

// max |d dbar log det g| component
double chern_ricci_defect(const MetricField& g, const Eigen::VectorXcd& p, DiffMethod m = DiffMethod::Jet);
// d dbar (omega ^ omega) against omega_0^3 / 3!  (n = 3)
cplx gauduchon_coefficient(const MetricField& g, const Eigen::VectorXcd& p, DiffMethod m = DiffMethod::Jet);
double gauduchon_defect(const MetricField& g, const Eigen::VectorXcd& p, DiffMethod m = DiffMethod::Jet);
// max |d_i g_{j kbar} - d_j g_{i kbar}|
double kahler_defect(const MetricField& g, const Eigen::VectorXcd& p, DiffMethod m = DiffMethod::Jet);

// Real-coordinate derivatives of all components g_{i jbar}, output index i * n + j.
RealDerivatives component_derivatives(const MetricField& g, const Eigen::VectorXcd& p, int order, DiffMethod m);

// Evaluate a defect over a sample set and compare with a tolerance.
CheckResult sweep(const std::string& name, const std::vector<Eigen::VectorXcd>& pts,
                  const std::function<double(const Eigen::VectorXcd&)>& defect, double tol);

}  // namespace bundlelab
