#pragma once

#include <string>
#include <vector>

#include "tcheb/poly.hpp"

namespace tcheb {

/// Pyramid operator Pyr(u) = M(u, 1); raises degree by one and doubles
/// U-eigenvalues.
AbPoly pyr(const AbPoly& u);

/// L(u) = (a-b) u; raises degree by one and preserves U-eigenvalues.
AbPoly ell(const AbPoly& u);

enum class PyrL { Pyr, L };

struct EigenVector {
  AbPoly vector;
  Int eigenvalue;  // 2^(#Pyr + 1)
  std::vector<PyrL> construction;
};

/// All 2^n words over {Pyr, L} applied to 1, left to right. Asserts that
/// U fixes each line, that the family has full rank 2^n over the rationals,
/// and that the eigenvalue multiset is binomial.
std::vector<EigenVector> eigenbasis(int n);

/// The 2^n words of degree n in graded-lex order (a < b).
std::vector<Word> word_basis(int n);

/// Matrix of U on degree n in the word basis: entry [i][j] is the
/// coefficient of word i in U(word j).
std::vector<std::vector<Int>> u_matrix(int n);

/// Rank over the rationals, by exact rational Gaussian elimination.
int rational_rank(const std::vector<std::vector<Int>>& rows);

struct SpectrumReport {
  int degree = 0;
  bool eigen_equations_ok = false;
  bool independent = false;
  bool multiplicities_ok = false;
  bool trace_ok = false;
  Int trace = 0;
  std::string detail;
  bool ok() const { return eigen_equations_ok && independent && multiplicities_ok && trace_ok; }
};

/// Re-derives the spectrum of U on degree n: eigen equations, independence,
/// binomial multiplicities, and trace 2 * 3^n.
SpectrumReport verify_spectrum(int n, int max_degree = 8);

}  // namespace tcheb
