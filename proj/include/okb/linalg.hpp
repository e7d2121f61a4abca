#pragma once

#include <string>
#include <vector>

#include "okb/rat.hpp"

namespace okb {

// Dense exact vector; the length *is* the recorded dimension and every
// operation checks it.
using RatVec = std::vector<Rat>;

// Dense exact matrix, row-major.
struct RatMat {
  int rows = 0;
  int cols = 0;
  std::vector<Rat> data;

  RatMat() = default;
  RatMat(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c) {}

  Rat& at(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
  const Rat& at(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }

  static RatMat identity(int n);
  static RatMat from_rows(const std::vector<RatVec>& rows);
  RatVec row(int i) const;
};

Rat dot(const RatVec& a, const RatVec& b);
RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec scaled(const RatVec& a, const Rat& s);
RatVec zero_vec(int dim);
bool is_zero(const RatVec& a);

// Numeric lexicographic order; the total order used by every canonical form.
bool lex_less(const RatVec& a, const RatVec& b);

std::string vec_to_string(const RatVec& v);
RatVec apply(const RatMat& m, const RatVec& v);

// Scales v by a positive rational so its entries become coprime integers.
// Preserves orientation; use for ray directions.  Zero stays zero.
RatVec primitive(const RatVec& v);
// Same, then flips sign so the first nonzero entry is positive.  Use for
// directions where both orientations name the same object (lines, normals
// of equations, nullspace vectors).
RatVec primitive_signed(const RatVec& v);

int matrix_rank(const RatMat& a);
int rank_of(const std::vector<RatVec>& vecs);
Rat det(const RatMat& a);  // square input required

struct LinearSolution {
  enum class Kind { Unique, Affine, Infeasible };
  Kind kind = Kind::Infeasible;
  RatVec particular;              // set for Unique / Affine
  std::vector<RatVec> nullspace;  // primitive signed basis, empty for Unique
};

// Exact solve of A x = b via fraction-free (Bareiss) elimination.
LinearSolution solve_linear(const RatMat& a, const RatVec& b);

// Canonical basis of span(vecs): reduced row echelon rows, scaled to
// primitive signed integer vectors, ordered by pivot column.  Unique per
// subspace, so two spans are equal iff their bases are equal lists.
std::vector<RatVec> rref_basis(const std::vector<RatVec>& vecs);

// Canonical basis of the orthogonal complement of span(vecs) inside Q^dim.
std::vector<RatVec> orth_complement(int dim, const std::vector<RatVec>& vecs);

// Component of v orthogonal to span(basis), computed exactly.
RatVec project_off(const RatVec& v, const std::vector<RatVec>& basis);

}  // namespace okb
