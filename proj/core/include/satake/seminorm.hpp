#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "satake/linalg.hpp"

namespace satake {

/// Seminorm on k^{d+1}, diagonal in the tagged basis: the value on the i-th
/// basis vector is q^{exps[i]}, with -inf encoding 0. Not all exponents may
/// be -inf.
struct DiagSeminorm {
  std::vector<ExtRat> exps;
  std::string basis_tag = "standard";
  int dim() const { return (int)exps.size(); }
};

/// Homothety-class representative: shifts the exponents so that the largest
/// finite one becomes 0.
DiagSeminorm normalize_class(const DiagSeminorm& x);

bool is_valid_seminorm(const DiagSeminorm& x);

/// max_i (coeff_vals[i] + exps[i]).
ExtRat eval_vector(const DiagSeminorm& x, const std::vector<ExtRat>& coeff_vals);

/// Polynomial over coefficient valuations only: term multi-index ->
/// valuation exponent (|a_nu| = q^{val}).
struct ValuedPolynomial {
  std::map<std::vector<int>, ExtRat> terms;
};

/// Monomial extension j: max over terms of (val + sum_i nu_i exps[i]).
ExtRat eval_polynomial_j(const DiagSeminorm& x, const ValuedPolynomial& p);

/// Multivariate polynomial over Q, exact arithmetic (used for base change).
struct QPolynomial {
  std::map<std::vector<int>, Rat> terms;  // multi-index -> coefficient

  static QPolynomial variable(int i, int nvars);
  static QPolynomial constant(const Rat& c, int nvars);
  QPolynomial operator+(const QPolynomial& o) const;
  QPolynomial operator*(const QPolynomial& o) const;
  QPolynomial pow(int e, int nvars) const;
  void drop_zeros();
};

/// Seminorm monomial in an arbitrary basis of V: column j of `basis` is the
/// j-th basis vector in standard coordinates and carries exponent exps[j].
struct MonomialBasisSeminorm {
  Mat basis;
  std::vector<ExtRat> exps;
};

/// tau(z): the restriction of z to V, evaluated on the standard basis
/// vectors (diagonal surrogate).
DiagSeminorm tau_restrict(const MonomialBasisSeminorm& z);

/// Exact evaluation of z on a polynomial in the standard coordinates, by
/// expanding into the diagonalizing basis over Q. Nonzero rational
/// coefficients are treated as units (valuation 0).
ExtRat eval_in_basis(const MonomialBasisSeminorm& z, const QPolynomial& p);

/// Domination z <= j(tau(z)): checks the inequality on the given
/// sample polynomials. Throws std::invalid_argument if tau(z) and x disagree
/// on a standard basis vector.
bool domination_check(const MonomialBasisSeminorm& z, const DiagSeminorm& x,
                      const std::vector<QPolynomial>& samples);

struct KernelStratum {
  std::vector<int> kernel;  // indices with exponent -inf
  std::string label;
};
KernelStratum kernel_and_stratum(const DiagSeminorm& x);

struct CanonicalForm {
  DiagSeminorm rep;
  std::vector<int> perm;  // rep.exps[i] = x.exps[perm[i]]
  Rat shift;              // integer homothety applied after sorting
};

/// Sorts the exponents descending (-inf last) and applies the integer shift
/// placing the top exponent in (0, 1].
CanonicalForm canonical_representative(const DiagSeminorm& x);

/// Sum of the m largest exponents; -inf if any of them is -inf.
ExtRat exterior_invariant(const DiagSeminorm& x, int m);

/// Monomial-matrix action: exps'[i] = exps[w^{-1}(i)] + nu[i]. `w` maps
/// index i to w[i].
DiagSeminorm monomial_action(const std::vector<int>& w, const Vec& nu,
                             const DiagSeminorm& x);

/// Family of diagonal seminorms z_n with |e_i|(z_n) = q^{a_i + n b_i}.
struct LogAffineSequence {
  Vec a;
  Vec b;
};

struct SequenceLimitReport {
  std::vector<int> permutation;  // sorts (b, a) lexicographically descending
  std::vector<int> index_set;    // I: indices of maximal slope
  DiagSeminorm limit;            // normalized class
};
SequenceLimitReport classify_sequence(const LogAffineSequence& s);

struct StabilizerDescription {
  std::vector<int> kernel_indices;
  int quotient_rank = 0;
  bool is_vertex = false;
  std::string block_shape;
};
StabilizerDescription stabilizer_description(const DiagSeminorm& x);

}  // namespace satake
