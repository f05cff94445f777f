#include "tcheb/spectral.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <sstream>

#include "tcheb/qsym.hpp"
#include "tcheb/transforms.hpp"

namespace tcheb {

AbPoly pyr(const AbPoly& u) { return mix_M(u, AbPoly::unit()); }

AbPoly ell(const AbPoly& u) { return e_power(1) * u; }

std::vector<Word> word_basis(int n) {
  if (n < 0) throw BadParameter("word_basis requires n >= 0");
  if (n > 20) throw BadParameter("word_basis: degree too large");
  std::vector<Word> basis;
  basis.reserve(std::size_t{1} << n);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    Word w(static_cast<std::size_t>(n), 'a');
    for (int i = 0; i < n; ++i)
      if (mask & (1u << (n - 1 - i))) w[i] = 'b';
    basis.push_back(std::move(w));
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

int rational_rank(const std::vector<std::vector<Int>>& rows) {
  if (rows.empty()) return 0;
  std::size_t m = rows.size(), n = rows[0].size();
  std::vector<std::vector<mpq_class>> a(m, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(rows[i][j]);
  int rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t pivot = row;
    while (pivot < m && a[pivot][col] == 0) ++pivot;
    if (pivot == m) continue;
    std::swap(a[pivot], a[row]);
    for (std::size_t i = row + 1; i < m; ++i) {
      if (a[i][col] == 0) continue;
      mpq_class factor = a[i][col] / a[row][col];
      for (std::size_t j = col; j < n; ++j) a[i][j] -= factor * a[row][j];
    }
    ++row;
    ++rank;
  }
  return rank;
}

namespace {

std::vector<Int> coordinates(const AbPoly& u, const std::vector<Word>& basis) {
  std::vector<Int> v;
  v.reserve(basis.size());
  for (const Word& w : basis) v.push_back(u.coeff(w));
  return v;
}

}  // namespace

std::vector<EigenVector> eigenbasis(int n) {
  if (n < 0) throw BadParameter("eigenbasis requires n >= 0");
  std::vector<EigenVector> vectors;
  vectors.reserve(std::size_t{1} << n);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    EigenVector ev;
    ev.vector = AbPoly::unit();
    Int lambda = 2;
    for (int i = 0; i < n; ++i) {
      bool is_pyr = (mask & (1u << i)) != 0;
      ev.construction.push_back(is_pyr ? PyrL::Pyr : PyrL::L);
      ev.vector = is_pyr ? pyr(ev.vector) : ell(ev.vector);
      if (is_pyr) lambda = checked_mul(lambda, 2);
    }
    ev.eigenvalue = lambda;
    vectors.push_back(std::move(ev));
  }

  const auto basis = word_basis(n);
  std::vector<std::vector<Int>> rows;
  rows.reserve(vectors.size());
  for (const auto& ev : vectors) {
    if (tcheb_U(ev.vector) != ev.vector * ev.eigenvalue)
      throw Error("eigenbasis: eigen equation failed at degree " + std::to_string(n), 3);
    rows.push_back(coordinates(ev.vector, basis));
  }
  if (rational_rank(rows) != static_cast<int>(vectors.size()))
    throw Error("eigenbasis: constructed vectors are linearly dependent", 3);

  std::map<Int, Int> mult;
  for (const auto& ev : vectors) ++mult[ev.eigenvalue];
  Int binom = 1;
  for (int i = 0; i <= n; ++i) {
    if (mult[checked_pow(2, i + 1)] != binom)
      throw Error("eigenbasis: multiplicity mismatch", 3);
    binom = binom * (n - i) / (i + 1);
  }
  return vectors;
}

std::vector<std::vector<Int>> u_matrix(int n) {
  const auto basis = word_basis(n);
  std::size_t dim = basis.size();
  std::vector<std::vector<Int>> m(dim, std::vector<Int>(dim, 0));
  for (std::size_t j = 0; j < dim; ++j) {
    AbPoly col = tcheb_U(AbPoly::word(basis[j]));
    for (std::size_t i = 0; i < dim; ++i) m[i][j] = col.coeff(basis[i]);
  }
  return m;
}

SpectrumReport verify_spectrum(int n, int max_degree) {
  if (n < 0 || n > max_degree)
    throw BadParameter("verify_spectrum: degree out of range [0, " + std::to_string(max_degree) +
                       "]");
  SpectrumReport report;
  report.degree = n;
  std::ostringstream detail;
  try {
    auto vectors = eigenbasis(n);  // throws if equations/rank/multiplicities fail
    report.eigen_equations_ok = true;
    report.independent = true;
    report.multiplicities_ok = true;
    auto m = u_matrix(n);
    for (std::size_t i = 0; i < m.size(); ++i)
      report.trace = checked_add(report.trace, m[i][i]);
    Int expected = checked_mul(2, checked_pow(3, n));
    report.trace_ok = report.trace == expected;
    if (!report.trace_ok)
      detail << "trace " << report.trace << " != " << expected << "; ";
    detail << vectors.size() << " eigenvectors verified";
  } catch (const Error& e) {
    detail << e.what();
  }
  report.detail = detail.str();
  return report;
}

}  // namespace tcheb
