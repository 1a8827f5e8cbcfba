#include "illum/bounds.hpp"

#include <cmath>
#include <numbers>

#include "illum/simplex.hpp"

namespace illum {

namespace {

constexpr double kTwoSqrtTwo = 2.0 * std::numbers::sqrt2;

double pow_int(double base, int e) { return std::pow(base, e); }

}  // namespace

double unit_ball_volume(int n) {
  return std::pow(std::numbers::pi, n / 2.0) / std::tgamma(n / 2.0 + 1.0);
}

double generic_bound(int n, double diam, double delta, double det,
                     double min_norm) {
  return kTwoSqrtTwo * scale_constant(n) * diam * delta * delta * det /
         pow_int(min_norm, n);
}

double theorem_main_bound(int n, double diam, double det_lattice,
                          double min_norm_lattice) {
  return kTwoSqrtTwo * scale_constant(n) * std::pow(4.0 / 3.0, n * (n - 1)) *
         diam * det_lattice / pow_int(min_norm_lattice, n);
}

double wr_bound(int n, double diam) {
  return std::pow(2.0, (2.0 * n + 3.0) / 2.0) * scale_constant(n) * diam /
         unit_ball_volume(n);
}

double near_orth_bound(int n, double diam, double det_lattice,
                       double min_norm_lattice, bool also_wr) {
  if (also_wr) {
    return kTwoSqrtTwo * scale_constant(n) * std::pow(4.0 / 3.0, (n - 1) / 2.0) *
           diam;
  }
  return kTwoSqrtTwo * scale_constant(n) * std::pow(4.0 / 3.0, n - 1) * diam *
         det_lattice / pow_int(min_norm_lattice, n);
}

double virt_rect_bound(int n, double diam, double det_lattice, double c_abs,
                       double min_norm_lattice) {
  return kTwoSqrtTwo * scale_constant(n) * diam * pow_int(det_lattice, n) /
         (pow_int(c_abs, n - 1) * pow_int(min_norm_lattice, n));
}

double prop1_bound(int n, double diam, double eps) {
  return std::sqrt(n * (n + 1) / 2.0) * diam + eps;
}

double lemma3_bound(int n, double circumradius, double eps) {
  return (n + 1) * circumradius + eps;
}

bool BoundLadder::all_satisfied() const {
  for (const BoundEntry* e :
       {&prop1, &lemma3, &generic, &theorem_main, &wr, &near_orth,
        &wr_near_orth, &virt_rect}) {
    if (e->applicable && !e->satisfied) return false;
  }
  return true;
}

BoundLadder compare_report(const RunSummary& run) {
  BoundLadder ladder;
  auto set = [&](BoundEntry& entry, double value) {
    entry.value = value;
    entry.applicable = true;
    entry.satisfied = value >= run.measured_d - 1e-9;
  };

  if (run.construction == RunSummary::Construction::Regular) {
    set(ladder.prop1, prop1_bound(run.n, run.body_diameter, run.epsilon));
    set(ladder.lemma3,
        lemma3_bound(run.n, run.body_circumradius, run.epsilon));
    return ladder;
  }

  set(ladder.generic, generic_bound(run.n, run.body_diameter, run.delta_basis,
                                    run.det_basis, run.min_basis));
  set(ladder.theorem_main,
      theorem_main_bound(run.n, run.body_diameter, run.det_lattice,
                         run.min_norm_lattice));
  if (run.well_rounded) set(ladder.wr, wr_bound(run.n, run.body_diameter));
  if (run.nearly_orth) {
    set(ladder.near_orth, near_orth_bound(run.n, run.body_diameter,
                                          run.det_lattice,
                                          run.min_norm_lattice, false));
  }
  if (run.well_rounded && run.nearly_orth) {
    set(ladder.wr_near_orth,
        near_orth_bound(run.n, run.body_diameter, run.det_lattice,
                        run.min_norm_lattice, true));
  }
  if (run.construction == RunSummary::Construction::VirtRect) {
    set(ladder.virt_rect,
        virt_rect_bound(run.n, run.body_diameter, run.det_lattice, run.c_abs,
                        run.min_norm_lattice));
  }
  return ladder;
}

}  // namespace illum
