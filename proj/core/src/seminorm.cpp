#include "satake/seminorm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace satake {

bool is_valid_seminorm(const DiagSeminorm& x) {
  return std::any_of(x.exps.begin(), x.exps.end(),
                     [](const ExtRat& e) { return e.is_finite(); });
}

namespace {

ExtRat max_finite_exp(const DiagSeminorm& x) {
  ExtRat m = ExtRat::neg_inf();
  for (const ExtRat& e : x.exps) m = max(m, e);
  return m;
}

}  // namespace

DiagSeminorm normalize_class(const DiagSeminorm& x) {
  ExtRat m = max_finite_exp(x);
  if (!m.is_finite())
    throw std::domain_error("normalize_class: zero seminorm");
  DiagSeminorm out = x;
  for (ExtRat& e : out.exps) e = e + ExtRat(-m.value());
  return out;
}

ExtRat eval_vector(const DiagSeminorm& x, const std::vector<ExtRat>& coeff_vals) {
  if (coeff_vals.size() != x.exps.size())
    throw std::invalid_argument("eval_vector: dimension mismatch");
  ExtRat m = ExtRat::neg_inf();
  for (size_t i = 0; i < x.exps.size(); ++i) m = max(m, coeff_vals[i] + x.exps[i]);
  return m;
}

ExtRat eval_polynomial_j(const DiagSeminorm& x, const ValuedPolynomial& p) {
  ExtRat m = ExtRat::neg_inf();
  for (const auto& [nu, val] : p.terms) {
    if (nu.size() != x.exps.size())
      throw std::invalid_argument("eval_polynomial_j: arity mismatch");
    ExtRat term = val;
    for (size_t i = 0; i < nu.size(); ++i)
      for (int rep = 0; rep < nu[i]; ++rep) term = term + x.exps[i];
    m = max(m, term);
  }
  return m;
}

QPolynomial QPolynomial::variable(int i, int nvars) {
  QPolynomial p;
  std::vector<int> nu(nvars, 0);
  nu[i] = 1;
  p.terms[nu] = 1;
  return p;
}

QPolynomial QPolynomial::constant(const Rat& c, int nvars) {
  QPolynomial p;
  if (c != 0) p.terms[std::vector<int>(nvars, 0)] = c;
  return p;
}

QPolynomial QPolynomial::operator+(const QPolynomial& o) const {
  QPolynomial out = *this;
  for (const auto& [nu, c] : o.terms) out.terms[nu] += c;
  out.drop_zeros();
  return out;
}

QPolynomial QPolynomial::operator*(const QPolynomial& o) const {
  QPolynomial out;
  for (const auto& [nu1, c1] : terms)
    for (const auto& [nu2, c2] : o.terms) {
      std::vector<int> nu(nu1.size());
      for (size_t i = 0; i < nu.size(); ++i) nu[i] = nu1[i] + nu2[i];
      out.terms[nu] += c1 * c2;
    }
  out.drop_zeros();
  return out;
}

QPolynomial QPolynomial::pow(int e, int nvars) const {
  QPolynomial out = constant(1, nvars);
  for (int i = 0; i < e; ++i) out = out * *this;
  return out;
}

void QPolynomial::drop_zeros() {
  for (auto it = terms.begin(); it != terms.end();)
    it = it->second == 0 ? terms.erase(it) : std::next(it);
}

DiagSeminorm tau_restrict(const MonomialBasisSeminorm& z) {
  int n = (int)z.basis.size();
  Mat inv = inverse(z.basis);
  DiagSeminorm out;
  out.exps.resize(n, ExtRat::neg_inf());
  for (int i = 0; i < n; ++i) {
    // e_i = sum_j inv[j][i] f_j; the value is the max exponent over the
    // nonzero coordinates.
    for (int j = 0; j < n; ++j)
      if (inv[j][i] != 0) out.exps[i] = max(out.exps[i], z.exps[j]);
  }
  return out;
}

ExtRat eval_in_basis(const MonomialBasisSeminorm& z, const QPolynomial& p) {
  int n = (int)z.basis.size();
  Mat inv = inverse(z.basis);
  // Substitute X_i -> sum_j inv[j][i] F_j and expand over Q.
  std::vector<QPolynomial> subs(n);
  for (int i = 0; i < n; ++i) {
    QPolynomial s = QPolynomial::constant(0, n);
    for (int j = 0; j < n; ++j)
      if (inv[j][i] != 0)
        s = s + QPolynomial::variable(j, n) * QPolynomial::constant(inv[j][i], n);
    subs[i] = s;
  }
  QPolynomial expanded = QPolynomial::constant(0, n);
  for (const auto& [nu, c] : p.terms) {
    QPolynomial term = QPolynomial::constant(c, n);
    for (int i = 0; i < n; ++i) term = term * subs[i].pow(nu[i], n);
    expanded = expanded + term;
  }
  // Monomial seminorm in the F-variables; nonzero rational coefficients are
  // units (valuation 0).
  ExtRat m = ExtRat::neg_inf();
  for (const auto& [nu, c] : expanded.terms) {
    ExtRat t(Rat(0));
    for (int j = 0; j < n; ++j)
      for (int rep = 0; rep < nu[j]; ++rep) t = t + z.exps[j];
    m = max(m, t);
  }
  return m;
}

bool domination_check(const MonomialBasisSeminorm& z, const DiagSeminorm& x,
                      const std::vector<QPolynomial>& samples) {
  DiagSeminorm tau = tau_restrict(z);
  if (tau.exps.size() != x.exps.size())
    throw std::invalid_argument("domination_check: dimension mismatch");
  for (size_t i = 0; i < x.exps.size(); ++i)
    if (!(tau.exps[i] == x.exps[i]))
      throw std::invalid_argument("domination_check: tau(z) differs from x on a basis vector");
  for (const QPolynomial& p : samples) {
    // j(x) treats every nonzero coefficient as a unit.
    ValuedPolynomial vp;
    for (const auto& [nu, c] : p.terms)
      if (c != 0) vp.terms[nu] = ExtRat(Rat(0));
    ExtRat lhs = eval_in_basis(z, p);
    ExtRat rhs = eval_polynomial_j(x, vp);
    if (rhs < lhs) return false;
  }
  return true;
}

KernelStratum kernel_and_stratum(const DiagSeminorm& x) {
  KernelStratum out;
  for (int i = 0; i < x.dim(); ++i)
    if (!x.exps[i].is_finite()) out.kernel.push_back(i);
  std::ostringstream os;
  if (out.kernel.empty()) {
    os << "open stratum (norms)";
  } else {
    os << "stratum W = span{";
    for (size_t i = 0; i < out.kernel.size(); ++i)
      os << (i ? "," : "") << "e" << out.kernel[i];
    os << "}, building of PGL(V/W), dim V/W = "
       << (x.dim() - (int)out.kernel.size());
  }
  out.label = os.str();
  return out;
}

CanonicalForm canonical_representative(const DiagSeminorm& x) {
  if (!is_valid_seminorm(x))
    throw std::domain_error("canonical_representative: zero seminorm");
  CanonicalForm out;
  out.perm.resize(x.dim());
  std::iota(out.perm.begin(), out.perm.end(), 0);
  std::stable_sort(out.perm.begin(), out.perm.end(), [&](int i, int j) {
    const ExtRat &a = x.exps[i], &b = x.exps[j];
    if (a.is_finite() != b.is_finite()) return a.is_finite();
    if (!a.is_finite()) return false;
    return b.value() < a.value();
  });
  Rat top = x.exps[out.perm[0]].value();
  // Integer shift placing the top exponent in (0, 1].
  Int c = numerator(top) / denominator(top);
  if (Rat(c) < top) c += 1;  // c = ceil(top)
  out.shift = Rat(1 - c);
  out.rep.basis_tag = x.basis_tag;
  for (int i = 0; i < x.dim(); ++i)
    out.rep.exps.push_back(x.exps[out.perm[i]] + ExtRat(out.shift));
  return out;
}

ExtRat exterior_invariant(const DiagSeminorm& x, int m) {
  if (m < 1 || m > x.dim())
    throw std::domain_error("exterior_invariant: index out of range");
  std::vector<ExtRat> sorted = x.exps;
  std::sort(sorted.begin(), sorted.end(),
            [](const ExtRat& a, const ExtRat& b) { return b < a; });
  ExtRat s(Rat(0));
  for (int i = 0; i < m; ++i) s = s + sorted[i];
  return s;
}

DiagSeminorm monomial_action(const std::vector<int>& w, const Vec& nu,
                             const DiagSeminorm& x) {
  int n = x.dim();
  if ((int)w.size() != n || (int)nu.size() != n)
    throw std::invalid_argument("monomial_action: dimension mismatch");
  std::vector<int> winv(n);
  for (int i = 0; i < n; ++i) winv[w[i]] = i;
  DiagSeminorm out;
  out.basis_tag = x.basis_tag;
  out.exps.resize(n);
  for (int i = 0; i < n; ++i) out.exps[i] = x.exps[winv[i]] + ExtRat(nu[i]);
  return out;
}

SequenceLimitReport classify_sequence(const LogAffineSequence& s) {
  int n = (int)s.a.size();
  if ((int)s.b.size() != n)
    throw std::invalid_argument("classify_sequence: dimension mismatch");
  SequenceLimitReport out;
  out.permutation.resize(n);
  std::iota(out.permutation.begin(), out.permutation.end(), 0);
  std::stable_sort(out.permutation.begin(), out.permutation.end(),
                   [&](int i, int j) {
                     if (s.b[i] != s.b[j]) return s.b[j] < s.b[i];
                     return s.a[j] < s.a[i];
                   });
  Rat top_slope = s.b[out.permutation[0]];
  for (int i = 0; i < n; ++i)
    if (s.b[i] == top_slope) out.index_set.push_back(i);
  int anchor = out.permutation[0];  // max offset within the max-slope set
  out.limit.exps.resize(n, ExtRat::neg_inf());
  for (int i : out.index_set) out.limit.exps[i] = ExtRat(s.a[i] - s.a[anchor]);
  return out;
}

StabilizerDescription stabilizer_description(const DiagSeminorm& x) {
  StabilizerDescription out;
  std::optional<Rat> ref;
  bool vertex = true;
  for (int i = 0; i < x.dim(); ++i) {
    if (!x.exps[i].is_finite()) {
      out.kernel_indices.push_back(i);
      continue;
    }
    if (!ref) {
      ref = x.exps[i].value();
    } else {
      Rat d = x.exps[i].value() - *ref;
      if (denominator(d) != 1) vertex = false;
    }
  }
  out.quotient_rank = x.dim() - (int)out.kernel_indices.size();
  out.is_vertex = vertex;
  std::ostringstream os;
  if (out.kernel_indices.empty()) {
    os << "maximal bounded stabilizer of a norm: k^x . GL(" << out.quotient_rank
       << ", k_o)";
  } else {
    os << "block lower triangular: k^x . GL(" << out.quotient_rank
       << ", k_o) on V/W, GL(" << out.kernel_indices.size()
       << ", k) on W, arbitrary lower-left block";
  }
  if (!out.is_vertex) os << " (conjugated by a non-integral diagonal)";
  out.block_shape = os.str();
  return out;
}

}  // namespace satake
