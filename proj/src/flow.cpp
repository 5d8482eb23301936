#include "lieflow/flow.hpp"

#include <cmath>
#include <sstream>

#include "lieflow/expm.hpp"
#include "lieflow/format.hpp"

namespace lieflow {

const char* to_string(FlowKind k) { return k == FlowKind::linear ? "linear" : "invariant"; }

const char* to_string(FlowMethod m) {
  switch (m) {
    case FlowMethod::closed_form: return "closed-form";
    case FlowMethod::generic_exp: return "generic-exp";
    case FlowMethod::ode_oracle: return "ode-oracle";
  }
  return "?";
}

FlowKind flow_kind_from_string(const std::string& s) {
  if (s == "linear") return FlowKind::linear;
  if (s == "invariant") return FlowKind::invariant;
  fail(ErrorKind::InvalidArgument, "flow kind must be linear or invariant");
}

FlowMethod flow_method_from_string(const std::string& s) {
  if (s == "closed-form") return FlowMethod::closed_form;
  if (s == "generic-exp") return FlowMethod::generic_exp;
  if (s == "ode-oracle") return FlowMethod::ode_oracle;
  fail(ErrorKind::InvalidArgument, "method must be closed-form, generic-exp or ode-oracle");
}

GroupElement group_exp(const AlgebraElement& x, double t) {
  Matrix arg = x.matrix;
  arg *= t;
  return make_group_element(x.algebra, mat_exp(arg));
}

GroupElement so3_exp_closed(const AlgebraElement& x, double t) {
  if (x.algebra->name() != "so3") fail(ErrorKind::WrongAlgebra, "so3_exp_closed needs so3");
  const double theta = x.coord_norm();
  const Matrix& xm = x.matrix;
  Matrix result = Matrix::identity(3);
  if (theta < 1e-8) {
    result += t * xm;
    result += (0.5 * t * t) * (xm * xm);
  } else {
    const double angle = t * theta;
    result += (std::sin(angle) / theta) * xm;
    result += ((1.0 - std::cos(angle)) / (theta * theta)) * (xm * xm);
  }
  return make_group_element(x.algebra, std::move(result));
}

GroupElement su2_exp_closed(const AlgebraElement& x, double t) {
  if (x.algebra->name() != "su2") fail(ErrorKind::WrongAlgebra, "su2_exp_closed needs su2");
  const double theta = x.coord_norm();
  Matrix result = Matrix::identity(2);
  if (theta < 1e-8) {
    result += t * x.matrix;
    result += (0.5 * t * t) * (x.matrix * x.matrix);
  } else {
    const double half = 0.5 * t * theta;
    result *= std::cos(half);
    result += (2.0 * std::sin(half) / theta) * x.matrix;
  }
  return make_group_element(x.algebra, std::move(result));
}

GroupElement closed_form_exp(const AlgebraElement& x, double t) {
  if (x.algebra->name() == "so3") return so3_exp_closed(x, t);
  if (x.algebra->name() == "su2") return su2_exp_closed(x, t);
  fail(ErrorKind::WrongAlgebra, "no closed-form exponential registered for " + x.algebra->name());
}

GroupElement invariant_flow(const AlgebraElement& x, const GroupElement& g, double t) {
  if (x.algebra->name() != g.algebra->name())
    fail(ErrorKind::MixedGroups, "flow generator and start point disagree on the group");
  GroupElement e = group_exp(x, t);
  return group_mul(e, g);
}

GroupElement linear_flow(const AlgebraElement& x, const GroupElement& g, double t) {
  if (x.algebra->name() != g.algebra->name())
    fail(ErrorKind::MixedGroups, "flow generator and start point disagree on the group");
  GroupElement e = group_exp(x, t);
  GroupElement r;
  r.algebra = g.algebra;
  r.matrix = e.matrix * g.matrix * e.matrix.conj_transpose();
  r.membership_residual = group_membership_residual(*r.algebra, r.matrix);
  return r;
}

GroupElement flow_point(const AlgebraElement& x, const GroupElement& g, double t, FlowKind kind,
                        FlowMethod method) {
  Matrix exp_t;
  switch (method) {
    case FlowMethod::closed_form: exp_t = closed_form_exp(x, t).matrix; break;
    case FlowMethod::generic_exp: exp_t = mat_exp(t * x.matrix); break;
    case FlowMethod::ode_oracle: {
      Matrix m = rk4_flow_matrix(x, g.matrix, t, kind);
      GroupElement r;
      r.algebra = g.algebra;
      r.matrix = std::move(m);
      r.membership_residual = group_membership_residual(*r.algebra, r.matrix);
      return r;
    }
  }
  GroupElement r;
  r.algebra = g.algebra;
  if (kind == FlowKind::invariant)
    r.matrix = exp_t * g.matrix;
  else
    r.matrix = exp_t * g.matrix * exp_t.conj_transpose();
  r.membership_residual = group_membership_residual(*r.algebra, r.matrix);
  return r;
}

Matrix rk4_flow_matrix(const AlgebraElement& x, const Matrix& g0, double t, FlowKind kind,
                       double step) {
  if (step <= 0.0) fail(ErrorKind::InvalidArgument, "RK4 step must be positive");
  const Matrix& xm = x.matrix;
  auto rhs = [&](const Matrix& m) {
    if (kind == FlowKind::invariant) return xm * m;
    return xm * m - m * xm;
  };
  Matrix m = g0;
  if (t == 0.0) return m;
  const std::size_t steps = static_cast<std::size_t>(std::ceil(std::abs(t) / step));
  const double h = t / static_cast<double>(steps);
  for (std::size_t s = 0; s < steps; ++s) {
    const Matrix k1 = rhs(m);
    const Matrix k2 = rhs(m + (0.5 * h) * k1);
    const Matrix k3 = rhs(m + (0.5 * h) * k2);
    const Matrix k4 = rhs(m + h * k3);
    m += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return m;
}

double Trajectory::max_membership_residual() const {
  double best = 0.0;
  for (const GroupElement& p : points) best = std::max(best, p.membership_residual);
  return best;
}

Trajectory sample_trajectory(const AlgebraElement& x, const GroupElement& g, double t_max,
                             std::size_t n, FlowKind kind, FlowMethod method, Exec exec) {
  if (n < 2) fail(ErrorKind::InvalidArgument, "sample_trajectory needs n >= 2");
  if (!(t_max > 0.0)) fail(ErrorKind::InvalidArgument, "sample_trajectory needs t_max > 0");

  Trajectory traj;
  traj.generator = x;
  traj.start = g;
  traj.kind = kind;
  traj.method = method;
  traj.times.resize(n);
  traj.points.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    traj.times[i] = t_max * static_cast<double>(i) / static_cast<double>(n - 1);

  std::vector<int> reprojected(n, 0);
  auto finalize = [&](std::size_t i, GroupElement&& p) {
    if (p.membership_residual > 1e-10) {
      p.matrix = polar_orthonormalize(p.matrix);
      p.membership_residual = group_membership_residual(*p.algebra, p.matrix);
      reprojected[i] = 1;
    }
    traj.points[i] = std::move(p);
  };

  if (method == FlowMethod::ode_oracle) {
    // sequential march, landing exactly on each grid time
    Matrix m = g.matrix;
    GroupElement first;
    first.algebra = g.algebra;
    first.matrix = m;
    first.membership_residual = group_membership_residual(*g.algebra, m);
    finalize(0, std::move(first));
    for (std::size_t i = 1; i < n; ++i) {
      const double dt = traj.times[i] - traj.times[i - 1];
      m = rk4_flow_matrix(x, m, dt, kind);
      GroupElement p;
      p.algebra = g.algebra;
      p.matrix = m;
      p.membership_residual = group_membership_residual(*p.algebra, p.matrix);
      finalize(i, std::move(p));
    }
  } else {
    parallel_for(n, exec, [&](std::size_t i) {
      finalize(i, flow_point(x, g, traj.times[i], kind, method));
    });
  }

  traj.reprojection_count = 0;
  for (int r : reprojected) traj.reprojection_count += r;
  return traj;
}

std::string trajectory_to_csv(const Trajectory& traj) {
  const std::size_t n = traj.start.algebra->matrix_dim();
  const bool complex_field = traj.start.algebra->complex_field();
  std::ostringstream out;
  out << "t";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (complex_field)
        out << ",m" << i << j << "_re,m" << i << j << "_im";
      else
        out << ",m" << i << j;
    }
  out << ",membership_residual\n";
  for (std::size_t k = 0; k < traj.times.size(); ++k) {
    out << fmt17(traj.times[k]);
    const Matrix& m = traj.points[k].matrix;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        out << "," << fmt17(m(i, j).real());
        if (complex_field) out << "," << fmt17(m(i, j).imag());
      }
    out << "," << fmt17(traj.points[k].membership_residual) << "\n";
  }
  return out.str();
}

}  // namespace lieflow
