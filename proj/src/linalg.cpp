#include "okb/linalg.hpp"

#include <algorithm>
#include <cassert>

#include "okb/errors.hpp"

namespace okb {

RatMat RatMat::identity(int n) {
  RatMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMat RatMat::from_rows(const std::vector<RatVec>& rows) {
  if (rows.empty()) return RatMat(0, 0);
  RatMat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows; ++i) {
    if (static_cast<int>(rows[i].size()) != m.cols)
      throw InputError("ragged rows in matrix construction");
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

RatVec RatMat::row(int i) const {
  RatVec r(cols);
  for (int j = 0; j < cols; ++j) r[j] = at(i, j);
  return r;
}

static void check_same_dim(const RatVec& a, const RatVec& b, const char* op) {
  if (a.size() != b.size())
    throw InputError(std::string(op) + ": dimension mismatch (" + std::to_string(a.size()) +
                     " vs " + std::to_string(b.size()) + ")");
}

Rat dot(const RatVec& a, const RatVec& b) {
  check_same_dim(a, b, "dot");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVec add(const RatVec& a, const RatVec& b) {
  check_same_dim(a, b, "add");
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVec sub(const RatVec& a, const RatVec& b) {
  check_same_dim(a, b, "sub");
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVec scaled(const RatVec& a, const Rat& s) {
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

RatVec zero_vec(int dim) { return RatVec(static_cast<std::size_t>(dim)); }

bool is_zero(const RatVec& a) {
  return std::all_of(a.begin(), a.end(), [](const Rat& x) { return x == 0; });
}

bool lex_less(const RatVec& a, const RatVec& b) {
  check_same_dim(a, b, "lex_less");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

std::string vec_to_string(const RatVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += to_string(v[i]);
  }
  return s + ")";
}

RatVec apply(const RatMat& m, const RatVec& v) {
  if (static_cast<int>(v.size()) != m.cols) throw InputError("apply: dimension mismatch");
  RatVec out(m.rows);
  for (int i = 0; i < m.rows; ++i) {
    Rat s = 0;
    for (int j = 0; j < m.cols; ++j) s += m.at(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

RatVec primitive(const RatVec& v) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  Int den_lcm = 1, num_gcd = 0;
  for (const Rat& x : v) den_lcm = lcm(den_lcm, denominator(x));
  for (const Rat& x : v) num_gcd = gcd(num_gcd, numerator(x) * (den_lcm / denominator(x)));
  if (num_gcd == 0) return RatVec(v.size(), Rat(0));
  Rat f = Rat(den_lcm) / Rat(num_gcd);
  return scaled(v, f);
}

RatVec primitive_signed(const RatVec& v) {
  RatVec p = primitive(v);
  for (const Rat& x : p) {
    if (x != 0) {
      if (x < 0)
        for (Rat& y : p) y = -y;
      break;
    }
  }
  return p;
}

// --- fraction-free elimination -------------------------------------------

namespace {

using IntMat = std::vector<std::vector<Int>>;

// Scales each row of [a | b] to coprime integers (row scaling preserves the
// solution set) and returns the integer matrix.
IntMat to_int_rows(const RatMat& a, const RatVec* b) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  IntMat m(a.rows);
  int cols = a.cols + (b ? 1 : 0);
  for (int i = 0; i < a.rows; ++i) {
    Int den_lcm = 1;
    for (int j = 0; j < a.cols; ++j) den_lcm = lcm(den_lcm, denominator(a.at(i, j)));
    if (b) den_lcm = lcm(den_lcm, denominator((*b)[i]));
    m[i].resize(cols);
    for (int j = 0; j < a.cols; ++j)
      m[i][j] = numerator(a.at(i, j)) * (den_lcm / denominator(a.at(i, j)));
    if (b) m[i][a.cols] = numerator((*b)[i]) * (den_lcm / denominator((*b)[i]));
  }
  return m;
}

// Bareiss fraction-free forward elimination.  Pivots are restricted to the
// first `pivot_cols` columns; returns the pivot column of each pivot row.
// Each step divides by the previous pivot; the quotient is exact (Sylvester
// identity), which keeps entry growth polynomial.
std::vector<int> bareiss(IntMat& m, int pivot_cols) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  int rows = static_cast<int>(m.size());
  int cols = static_cast<int>(m[0].size());
  Int prev = 1;
  int row = 0;
  for (int col = 0; col < pivot_cols && row < rows; ++col) {
    int p = -1;
    for (int i = row; i < rows; ++i) {
      if (m[i][col] != 0) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    std::swap(m[p], m[row]);
    for (int i = row + 1; i < rows; ++i) {
      for (int j = col + 1; j < cols; ++j) {
        Int t = m[row][col] * m[i][j] - m[i][col] * m[row][j];
        assert(t % prev == 0);
        m[i][j] = t / prev;
      }
      m[i][col] = 0;
    }
    prev = m[row][col];
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int matrix_rank(const RatMat& a) {
  IntMat m = to_int_rows(a, nullptr);
  return static_cast<int>(bareiss(m, a.cols).size());
}

int rank_of(const std::vector<RatVec>& vecs) {
  if (vecs.empty()) return 0;
  return matrix_rank(RatMat::from_rows(vecs));
}

Rat det(const RatMat& a) {
  if (a.rows != a.cols) throw InputError("det: matrix is not square");
  if (a.rows == 0) return 1;
  // Track the row scalings so the determinant of the original matrix comes
  // back out: det(original) = det(int matrix) / prod(row factors).
  using boost::multiprecision::denominator;
  RatMat work = a;
  Rat factor = 1;
  for (int i = 0; i < a.rows; ++i) {
    Int den_lcm = 1;
    for (int j = 0; j < a.cols; ++j) den_lcm = lcm(den_lcm, denominator(work.at(i, j)));
    for (int j = 0; j < a.cols; ++j) work.at(i, j) *= Rat(den_lcm);
    factor *= Rat(den_lcm);
  }
  IntMat m = to_int_rows(work, nullptr);
  // Count row swaps for the sign.
  int swaps = 0;
  Int prev = 1;
  int row = 0;
  for (int col = 0; col < a.cols && row < a.rows; ++col) {
    int p = -1;
    for (int i = row; i < a.rows; ++i)
      if (m[i][col] != 0) {
        p = i;
        break;
      }
    if (p < 0) return 0;  // singular
    if (p != row) {
      std::swap(m[p], m[row]);
      ++swaps;
    }
    for (int i = row + 1; i < a.rows; ++i) {
      for (int j = col + 1; j < a.cols; ++j) {
        Int t = m[row][col] * m[i][j] - m[i][col] * m[row][j];
        assert(t % prev == 0);
        m[i][j] = t / prev;
      }
      m[i][col] = 0;
    }
    prev = m[row][col];
    ++row;
  }
  Rat d = Rat(m[a.rows - 1][a.cols - 1]) / factor;
  return swaps % 2 ? -d : d;
}

LinearSolution solve_linear(const RatMat& a, const RatVec& b) {
  if (static_cast<int>(b.size()) != a.rows) throw InputError("solve_linear: rhs dimension mismatch");
  IntMat m = to_int_rows(a, &b);
  std::vector<int> pivots = bareiss(m, a.cols);
  int rank = static_cast<int>(pivots.size());
  // Rows below the pivot block must have zero rhs, or the system is
  // inconsistent.
  for (int i = rank; i < a.rows; ++i) {
    if (m[i][a.cols] != 0) return LinearSolution{LinearSolution::Kind::Infeasible, {}, {}};
  }

  std::vector<bool> is_pivot(a.cols, false);
  for (int c : pivots) is_pivot[c] = true;

  // Back substitution over Q on the echelon form.  `rhs_col` < 0 solves the
  // homogeneous system with the given free column set to 1.
  auto back_solve = [&](int one_free_col) {
    RatVec x(a.cols, Rat(0));
    if (one_free_col >= 0) x[one_free_col] = 1;
    for (int k = rank - 1; k >= 0; --k) {
      int pc = pivots[k];
      Rat s = one_free_col < 0 ? Rat(m[k][a.cols]) : Rat(0);
      for (int j = pc + 1; j < a.cols; ++j) {
        if (m[k][j] != 0 && x[j] != 0) s -= Rat(m[k][j]) * x[j];
      }
      x[pc] = s / Rat(m[k][pc]);
    }
    return x;
  };

  LinearSolution out;
  out.particular = back_solve(-1);
  for (int f = 0; f < a.cols; ++f) {
    if (!is_pivot[f]) out.nullspace.push_back(primitive_signed(back_solve(f)));
  }
  out.kind = out.nullspace.empty() ? LinearSolution::Kind::Unique : LinearSolution::Kind::Affine;
  return out;
}

std::vector<RatVec> rref_basis(const std::vector<RatVec>& vecs) {
  if (vecs.empty()) return {};
  int cols = static_cast<int>(vecs[0].size());
  std::vector<RatVec> rows;
  for (const RatVec& v : vecs) {
    if (static_cast<int>(v.size()) != cols) throw InputError("rref_basis: ragged input");
    rows.push_back(v);
  }
  int rank = 0;
  for (int col = 0; col < cols && rank < static_cast<int>(rows.size()); ++col) {
    int p = -1;
    for (int i = rank; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][col] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(rows[p], rows[rank]);
    Rat lead = rows[rank][col];
    for (int j = 0; j < cols; ++j) rows[rank][j] /= lead;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      Rat f = rows[i][col];
      for (int j = 0; j < cols; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  rows.resize(rank);
  for (RatVec& r : rows) r = primitive_signed(r);
  return rows;
}

std::vector<RatVec> orth_complement(int dim, const std::vector<RatVec>& vecs) {
  if (!vecs.empty() && static_cast<int>(vecs[0].size()) != dim)
    throw InputError("orth_complement: ambient dimension mismatch");
  std::vector<RatVec> rows = rref_basis(vecs);
  if (rows.empty()) {
    std::vector<RatVec> id;
    for (int i = 0; i < dim; ++i) {
      RatVec e = zero_vec(dim);
      e[i] = 1;
      id.push_back(e);
    }
    return id;
  }
  LinearSolution s = solve_linear(RatMat::from_rows(rows), zero_vec(static_cast<int>(rows.size())));
  return rref_basis(s.nullspace);
}

RatVec project_off(const RatVec& v, const std::vector<RatVec>& basis) {
  // Exact Gram-Schmidt: orthogonalize the basis, then strip each component.
  std::vector<RatVec> ortho;
  for (const RatVec& b : basis) {
    RatVec u = b;
    for (const RatVec& o : ortho) {
      Rat n2 = dot(o, o);
      if (n2 != 0) u = sub(u, scaled(o, dot(u, o) / n2));
    }
    if (!is_zero(u)) ortho.push_back(u);
  }
  RatVec r = v;
  for (const RatVec& o : ortho) r = sub(r, scaled(o, dot(r, o) / dot(o, o)));
  return r;
}

}  // namespace okb
