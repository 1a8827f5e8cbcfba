// Closed-form illumination-distance bounds and the ladder report that
// compares a measured run against every applicable bound.
#pragma once

#include "illum/types.hpp"

namespace illum {

/// Volume of the unit ball in R^n.
double unit_ball_volume(int n);

/// 2*sqrt(2) n (n + 2^{n-1}) D delta^2 Delta / minA^n.
double generic_bound(int n, double diam, double delta, double det,
                     double min_norm);

/// Generic bound with delta at the Hermite cap (4/3)^{n(n-1)/2}.
double theorem_main_bound(int n, double diam, double det_lattice,
                          double min_norm_lattice);

/// 2^{(2n+3)/2} n (n + 2^{n-1}) D / omega_n (well-rounded lattices).
double wr_bound(int n, double diam);

/// Near-orthogonal lattices; with also_wr the determinant dependence
/// drops out entirely.
double near_orth_bound(int n, double diam, double det_lattice,
                       double min_norm_lattice, bool also_wr);

/// Virtually rectangular lattices: det(L)^n / (|det C|^{n-1} ||L||^n).
double virt_rect_bound(int n, double diam, double det_lattice, double c_abs,
                       double min_norm_lattice);

/// sqrt(n(n+1)/2) D + eps.
double prop1_bound(int n, double diam, double eps);

/// (n+1) R + eps.
double lemma3_bound(int n, double circumradius, double eps);

struct BoundEntry {
  double value = 0.0;
  bool applicable = false;
  bool satisfied = true;  // value >= measured - 1e-9 (when applicable)
};

struct BoundLadder {
  BoundEntry prop1;
  BoundEntry lemma3;
  BoundEntry generic;
  BoundEntry theorem_main;
  BoundEntry wr;
  BoundEntry near_orth;
  BoundEntry wr_near_orth;
  BoundEntry virt_rect;

  bool all_satisfied() const;
};

/// Everything the ladder assembly needs from a finished run.
struct RunSummary {
  enum class Construction { Lattice, Regular, VirtRect };
  Construction construction = Construction::Lattice;
  int n = 0;
  double body_diameter = 0.0;
  double body_circumradius = 0.0;
  double measured_d = 0.0;
  // Lattice invariants (Lattice and VirtRect constructions).
  double det_lattice = 0.0;
  double min_norm_lattice = 0.0;
  bool well_rounded = false;
  bool nearly_orth = false;
  // Construction-basis data feeding the generic bound.
  double delta_basis = 1.0;
  double det_basis = 0.0;
  double min_basis = 0.0;
  // Regular construction.
  double epsilon = 0.0;
  // Virtually rectangular construction.
  double c_abs = 0.0;
};

/// Evaluates every applicable bound and flags violations. Applicability
/// comes from computed flags, never from caller assertion.
BoundLadder compare_report(const RunSummary& run);

}  // namespace illum
