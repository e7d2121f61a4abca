#include "okb/lp.hpp"

#include "okb/errors.hpp"

// Two-phase primal simplex on a dense exact tableau.
//
// Standard form used internally:  A z = b, z >= 0, b >= 0, maximize c . z,
// with z = (u | w | slacks):  each free variable is split x = u - w and each
// >= constraint gets a subtracted slack.  Phase 1 maximizes minus the sum of
// one artificial per row; feasibility iff that optimum is 0.  Entering and
// leaving variables follow Bland's rule (lowest eligible index), which makes
// the method terminate without any perturbation and keeps runs deterministic.

namespace okb {

namespace {

struct Tableau {
  int m = 0;         // rows
  int n = 0;         // structural + artificial columns
  std::vector<std::vector<Rat>> a;  // m rows, each n+1 wide (last = rhs)
  std::vector<int> basis;           // basis[i] = column basic in row i
  std::vector<Rat> red;             // reduced costs, n wide
  Rat obj = 0;                      // current objective value

  void pivot(int r, int c) {
    Rat p = a[r][c];
    for (int j = 0; j <= n; ++j) a[r][j] /= p;
    for (int i = 0; i < m; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (int j = 0; j <= n; ++j) a[i][j] -= f * a[r][j];
    }
    if (red[c] != 0) {
      Rat f = red[c];
      for (int j = 0; j < n; ++j) red[j] -= f * a[r][j];
      obj += f * a[r][n];
    }
    basis[r] = c;
  }

  // Installs reduced costs for objective `c` (length n, zeros beyond) given
  // the current basis.
  void set_objective(const std::vector<Rat>& c) {
    red.assign(n, Rat(0));
    for (int j = 0; j < static_cast<int>(c.size()); ++j) red[j] = c[j];
    obj = 0;
    for (int i = 0; i < m; ++i) {
      int bc = basis[i];
      Rat cb = bc < static_cast<int>(c.size()) ? c[bc] : Rat(0);
      if (cb == 0) continue;
      for (int j = 0; j < n; ++j) red[j] -= cb * a[i][j];
      obj += cb * a[i][n];
    }
    // Basic columns now carry reduced cost 0 exactly.
  }

  enum class Run { Optimal, Unbounded };

  Run run(int max_col = -1) {
    if (max_col < 0) max_col = n;
    for (;;) {
      int enter = -1;
      for (int j = 0; j < max_col; ++j) {
        if (red[j] > 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return Run::Optimal;
      int leave = -1;
      Rat best;
      for (int i = 0; i < m; ++i) {
        if (a[i][enter] <= 0) continue;
        Rat ratio = a[i][n] / a[i][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return Run::Unbounded;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpResult lp_solve(const LinProgram& p) {
  int nx = static_cast<int>(p.objective.size());
  for (const LinConstraint& c : p.constraints) {
    if (static_cast<int>(c.a.size()) != nx)
      throw InputError("lp_solve: constraint dimension does not match objective");
  }
  int m = static_cast<int>(p.constraints.size());
  int n_ge = 0;
  for (const LinConstraint& c : p.constraints) n_ge += c.rel == Rel::Ge ? 1 : 0;

  int n_struct = 2 * nx + n_ge;  // u, w, slacks
  Tableau t;
  t.m = m;
  t.n = n_struct + m;  // + one artificial per row
  t.a.assign(m, std::vector<Rat>(t.n + 1, Rat(0)));
  t.basis.resize(m);

  int slack = 2 * nx;
  for (int i = 0; i < m; ++i) {
    const LinConstraint& c = p.constraints[i];
    for (int j = 0; j < nx; ++j) {
      t.a[i][j] = c.a[j];
      t.a[i][nx + j] = -c.a[j];
    }
    if (c.rel == Rel::Ge) t.a[i][slack++] = -1;
    t.a[i][t.n] = c.b;
    if (t.a[i][t.n] < 0)
      for (int j = 0; j <= t.n; ++j) t.a[i][j] = -t.a[i][j];
    t.a[i][n_struct + i] = 1;
    t.basis[i] = n_struct + i;
  }

  // Phase 1: maximize -(sum of artificials).
  {
    std::vector<Rat> c1(t.n, Rat(0));
    for (int i = 0; i < m; ++i) c1[n_struct + i] = -1;
    t.set_objective(c1);
    if (t.run() != Tableau::Run::Optimal)
      throw Error("lp_solve: phase 1 cannot be unbounded");  // sum of artificials >= 0
    if (t.obj != 0) return LpResult{LpResult::Status::Infeasible, 0, {}};
  }

  // Drive leftover artificials out of the basis (they sit at value 0); a row
  // with no structural pivot candidate is redundant and is dropped.
  for (int i = 0; i < t.m;) {
    if (t.basis[i] < n_struct) {
      ++i;
      continue;
    }
    int piv = -1;
    for (int j = 0; j < n_struct; ++j) {
      if (t.a[i][j] != 0) {
        piv = j;
        break;
      }
    }
    if (piv >= 0) {
      t.pivot(i, piv);
      ++i;
    } else {
      t.a.erase(t.a.begin() + i);
      t.basis.erase(t.basis.begin() + i);
      --t.m;
    }
  }
  int m2 = t.m;

  // Phase 2 on the structural columns only.
  std::vector<Rat> c2(t.n, Rat(0));
  for (int j = 0; j < nx; ++j) {
    Rat cj = p.sense == Sense::Max ? p.objective[j] : -p.objective[j];
    c2[j] = cj;
    c2[nx + j] = -cj;
  }
  t.set_objective(c2);
  if (t.run(n_struct) == Tableau::Run::Unbounded)
    return LpResult{LpResult::Status::Unbounded, 0, {}};

  RatVec z(n_struct, Rat(0));
  for (int i = 0; i < m2; ++i) {
    if (t.basis[i] < n_struct) z[t.basis[i]] = t.a[i][t.n];
  }
  LpResult out;
  out.status = LpResult::Status::Optimal;
  out.witness.resize(nx);
  for (int j = 0; j < nx; ++j) out.witness[j] = z[j] - z[nx + j];
  out.value = p.sense == Sense::Max ? t.obj : -t.obj;
  return out;
}

}  // namespace okb
