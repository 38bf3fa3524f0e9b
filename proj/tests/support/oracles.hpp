#pragma once

#include "cdafem/assembly.hpp"
#include "cdafem/mesh.hpp"
#include "cdafem/problems.hpp"
#include "cdafem/quadrature.hpp"

#include <Eigen/Dense>

#include <random>
#include <vector>

// Independent reference implementations used only by tests.
namespace oracles {

/// Conical-product (Duffy) triangle rule with k Gauss-Legendre points per
/// direction; exact for total degree <= 2k-2. Built from a different
/// construction than the tabulated symmetric rules in the library.
std::vector<cdafem::BaryPoint> duffy_rule(int k);

/// Brute-force dense assembly over all vertices using closed-form P1
/// integrals (coefficients taken elementwise constant at the centroid).
Eigen::MatrixXd dense_full_matrix(const cdafem::Mesh& mesh, const cdafem::Problem& problem,
                                  const cdafem::Stabilization& stab);

/// The same matrix restricted to interior vertices in increasing vertex
/// order (the library's DOF order).
Eigen::MatrixXd dense_interior_matrix(const cdafem::Mesh& mesh, const cdafem::Problem& problem,
                                      const cdafem::Stabilization& stab);

/// Bracket-enumeration oracle for the modified maximum marking ladder.
int ladder_count(double eta, double eta_max, int kmax);

/// Mesh produced by `rounds` rounds of random marking (probability 0.3,
/// count 1..2) on a structured n0 x n0 start; deterministic in the seed.
cdafem::Mesh randomly_refined(int n0, int rounds, unsigned seed);

}  // namespace oracles
