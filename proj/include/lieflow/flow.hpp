#pragma once

#include "lieflow/group.hpp"
#include "lieflow/parallel.hpp"

namespace lieflow {

/// linear: the automorphism flow phi_t(g) = exp(tX) g exp(-tX);
/// invariant: the right-invariant flow t -> exp(tX) g.
enum class FlowKind { linear, invariant };

enum class FlowMethod { closed_form, generic_exp, ode_oracle };

const char* to_string(FlowKind k);
const char* to_string(FlowMethod m);
FlowKind flow_kind_from_string(const std::string& s);
FlowMethod flow_method_from_string(const std::string& s);

/// exp(tX) through the generic matrix exponential.
GroupElement group_exp(const AlgebraElement& x, double t);

/// Closed-form exp(tX) on so(3): with v the coordinate vector and theta=|v|,
///   exp(tX) = I + (sin(t theta)/theta) X + ((1-cos(t theta))/theta^2) X^2,
/// the real-arithmetic form of the functional-calculus expression
/// ((cosh(t l1)-1)/l1^2) X^2 + (sinh(t l1)/l1) X + I with l1 = -i theta.
/// For theta < 1e-8 the series limit I + tX + (tX)^2/2 is used.
/// Throws WrongAlgebra off so(3).
GroupElement so3_exp_closed(const AlgebraElement& x, double t);

/// Closed-form exp(tX) on su(2): X^2 = -(theta/2)^2 I, so
/// exp(tX) = cos(t theta/2) I + (2 sin(t theta/2)/theta) X.
GroupElement su2_exp_closed(const AlgebraElement& x, double t);

/// Dispatches to the closed form of the element's algebra; WrongAlgebra when
/// none exists.
GroupElement closed_form_exp(const AlgebraElement& x, double t);

GroupElement invariant_flow(const AlgebraElement& x, const GroupElement& g, double t);
GroupElement linear_flow(const AlgebraElement& x, const GroupElement& g, double t);

/// One flow point with the chosen evaluation method.
GroupElement flow_point(const AlgebraElement& x, const GroupElement& g, double t, FlowKind kind,
                        FlowMethod method = FlowMethod::generic_exp);

/// Classical fixed-step RK4 on dM/dt = X M (invariant) or dM/dt = X M - M X
/// (linear), independent of the matrix-exponential code path.
Matrix rk4_flow_matrix(const AlgebraElement& x, const Matrix& g0, double t, FlowKind kind,
                       double step = 1e-4);

struct Trajectory {
  AlgebraElement generator;
  GroupElement start;
  std::vector<double> times;
  std::vector<GroupElement> points;
  FlowKind kind = FlowKind::invariant;
  FlowMethod method = FlowMethod::generic_exp;
  int reprojection_count = 0;

  double max_membership_residual() const;
};

/// n equally spaced samples on [0, t_max]. Samples whose membership residual
/// exceeds 1e-10 are re-projected onto the group by the polar iteration and
/// counted in reprojection_count.
Trajectory sample_trajectory(const AlgebraElement& x, const GroupElement& g, double t_max,
                             std::size_t n, FlowKind kind,
                             FlowMethod method = FlowMethod::generic_exp,
                             Exec exec = Exec::parallel);

/// CSV export: header row, then t, row-major matrix entries (re/im split for
/// complex groups), membership_residual; 17 significant digits.
std::string trajectory_to_csv(const Trajectory& traj);

}  // namespace lieflow
