#include <doctest.h>

#include <cmath>

#include "satake/seminorm.hpp"

using namespace satake;

namespace {

DiagSeminorm mk(std::initializer_list<const char*> exps) {
  DiagSeminorm x;
  for (const char* e : exps) x.exps.push_back(extrat_from_string(e));
  return x;
}

std::vector<ExtRat> vals(std::initializer_list<const char*> xs) {
  std::vector<ExtRat> out;
  for (const char* e : xs) out.push_back(extrat_from_string(e));
  return out;
}

}  // namespace

TEST_CASE("vector evaluation is a tropical maximum") {
  DiagSeminorm x = mk({"0", "-1", "-inf"});
  CHECK(is_valid_seminorm(x));
  CHECK(eval_vector(x, vals({"0", "0", "0"})) == ExtRat(0));
  CHECK(eval_vector(x, vals({"-inf", "0", "0"})) == ExtRat(-1));
  CHECK(eval_vector(x, vals({"-inf", "-inf", "5"})).is_neg_inf());
  CHECK(!is_valid_seminorm(mk({"-inf", "-inf"})));
}

TEST_CASE("monomial extension of a diagonal seminorm") {
  DiagSeminorm x = mk({"0", "-1"});
  ValuedPolynomial p;
  p.terms[{1, 0}] = ExtRat(0);
  p.terms[{0, 2}] = ExtRat(0);
  CHECK(eval_polynomial_j(x, p) == ExtRat(0));
  ValuedPolynomial q;
  q.terms[{0, 2}] = ExtRat(Rat(5));
  CHECK(eval_polynomial_j(x, q) == ExtRat(Rat(3)));
  // the Gauss point sends every unit-coefficient polynomial to 1 = q^0
  DiagSeminorm gauss = mk({"0", "0"});
  ValuedPolynomial r;
  r.terms[{3, 1}] = ExtRat(0);
  r.terms[{0, 0}] = ExtRat(0);
  CHECK(eval_polynomial_j(gauss, r) == ExtRat(0));
}

TEST_CASE("extension is multiplicative on monomials") {
  DiagSeminorm x = mk({"1/2", "-2", "0"});
  auto mono = [](std::vector<int> nu, Rat val) {
    ValuedPolynomial p;
    p.terms[std::move(nu)] = ExtRat(std::move(val));
    return p;
  };
  ValuedPolynomial m1 = mono({1, 2, 0}, Rat(1));
  ValuedPolynomial m2 = mono({0, 1, 3}, Rat(0));
  ValuedPolynomial prod = mono({1, 3, 3}, Rat(1));
  CHECK(eval_polynomial_j(x, prod) ==
        eval_polynomial_j(x, m1) + eval_polynomial_j(x, m2));
}

TEST_CASE("canonical representative: sorted window form") {
  CanonicalForm cf = canonical_representative(mk({"0", "2", "-inf"}));
  CHECK(cf.rep.exps == vals({"1", "-1", "-inf"}));
  CHECK(cf.perm == std::vector<int>{1, 0, 2});
  CHECK(cf.shift == Rat(-1));

  CHECK(canonical_representative(mk({"0", "0", "0"})).rep.exps ==
        vals({"1", "1", "1"}));
  CHECK(canonical_representative(mk({"1", "0"})).rep.exps == vals({"1", "0"}));
  // fractional top exponent stays inside the window
  CHECK(canonical_representative(mk({"1/2", "-3"})).rep.exps ==
        vals({"1/2", "-3"}));
  CHECK_THROWS_AS(canonical_representative(mk({"-inf"})), std::domain_error);
}

TEST_CASE("canonical representative is a homothety-class invariant") {
  DiagSeminorm x = mk({"3/4", "-2", "5", "-inf"});
  for (int c : {-3, 0, 4}) {
    DiagSeminorm shifted = x;
    for (ExtRat& e : shifted.exps) e = e + ExtRat(Rat(c));
    CHECK(canonical_representative(shifted).rep.exps ==
          canonical_representative(x).rep.exps);
  }
  // idempotent
  CanonicalForm cf = canonical_representative(x);
  CHECK(canonical_representative(cf.rep).rep.exps == cf.rep.exps);
}

TEST_CASE("exterior invariants") {
  DiagSeminorm x = mk({"0", "1", "-inf"});
  CHECK(exterior_invariant(x, 1) == ExtRat(1));
  CHECK(exterior_invariant(x, 2) == ExtRat(1));
  CHECK(exterior_invariant(x, 3).is_neg_inf());
  CHECK_THROWS_AS(exterior_invariant(x, 0), std::domain_error);
}

TEST_CASE("monomial matrix action") {
  DiagSeminorm x = mk({"10", "20", "30"});
  DiagSeminorm y = monomial_action({1, 2, 0}, {Rat(1), Rat(2), Rat(3)}, x);
  CHECK(y.exps == vals({"31", "12", "23"}));
  // a pure permutation preserves the exterior invariants
  DiagSeminorm z = monomial_action({2, 0, 1}, zero_vec(3), x);
  for (int m = 1; m <= 3; ++m)
    CHECK(exterior_invariant(z, m) == exterior_invariant(x, m));
}

TEST_CASE("restriction of a basis seminorm to the standard frame") {
  MonomialBasisSeminorm z;
  // basis vectors f_0 = e_0 + e_1, f_1 = e_1 (columns)
  z.basis = {{Rat(1), Rat(0)}, {Rat(1), Rat(1)}};
  z.exps = vals({"0", "-1"});
  DiagSeminorm tau = tau_restrict(z);
  // e_0 = f_0 - f_1 -> max(0, -1); e_1 = f_1 -> -1
  CHECK(tau.exps == vals({"0", "-1"}));
}

TEST_CASE("domination by the monomial extension of the restriction") {
  MonomialBasisSeminorm z;
  z.basis = {{Rat(1), Rat(0)}, {Rat(1), Rat(1)}};
  z.exps = vals({"0", "-1"});
  DiagSeminorm tau = tau_restrict(z);
  std::vector<QPolynomial> samples;
  QPolynomial x0 = QPolynomial::variable(0, 2);
  QPolynomial x1 = QPolynomial::variable(1, 2);
  samples.push_back(x0);
  samples.push_back(x1);
  samples.push_back(x0 + x1);
  samples.push_back(x0 * x1 + x1 * x1);
  samples.push_back((x0 + QPolynomial::constant(Rat(2), 2)) * x0);
  CHECK(domination_check(z, tau, samples));
  // mismatching diagonal data is rejected
  CHECK_THROWS_AS(domination_check(z, mk({"5", "-1"}), samples),
                  std::invalid_argument);
}

TEST_CASE("domination is an equality for a diagonal basis") {
  MonomialBasisSeminorm z;
  z.basis = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
  z.exps = vals({"1/3", "0"});
  DiagSeminorm tau = tau_restrict(z);
  QPolynomial p = QPolynomial::variable(0, 2) * QPolynomial::variable(1, 2) +
                  QPolynomial::constant(Rat(7), 2);
  ValuedPolynomial vp;
  for (const auto& [nu, c] : p.terms) vp.terms[nu] = ExtRat(0);
  CHECK(eval_in_basis(z, p) == eval_polynomial_j(tau, vp));
}

TEST_CASE("kernel and stratum description") {
  KernelStratum ks = kernel_and_stratum(mk({"0", "-inf", "3"}));
  CHECK(ks.kernel == std::vector<int>{1});
  CHECK(ks.label.find("dim V/W = 2") != std::string::npos);
  CHECK(kernel_and_stratum(mk({"0", "1"})).kernel.empty());
}

TEST_CASE("classification of log-affine families") {
  SequenceLimitReport r = classify_sequence({{Rat(5), Rat(0)}, {Rat(1), Rat(1)}});
  CHECK(r.index_set == std::vector<int>{0, 1});
  CHECK(r.permutation == std::vector<int>{0, 1});
  CHECK(r.limit.exps == vals({"0", "-5"}));

  r = classify_sequence({{Rat(0), Rat(0)}, {Rat(2), Rat(1)}});
  CHECK(r.index_set == std::vector<int>{0});
  CHECK(r.limit.exps[0] == ExtRat(0));
  CHECK(r.limit.exps[1].is_neg_inf());

  // constant slopes: nothing degenerates
  r = classify_sequence({{Rat(1), Rat(-1), Rat(0)}, {Rat(2), Rat(2), Rat(2)}});
  CHECK(r.index_set == std::vector<int>{0, 1, 2});
  CHECK(r.limit.exps == vals({"0", "-2", "-1"}));
}

TEST_CASE("classification agrees with a numeric simulation") {
  const double q = 2.0;
  const std::vector<LogAffineSequence> cases = {
      {{Rat(5), Rat(0)}, {Rat(1), Rat(1)}},
      {{Rat(0), Rat(2), Rat(-1)}, {Rat(0), Rat(1), Rat(1)}},
      {{Rat(1, 2), Rat(0)}, {Rat(-1), Rat(-1)}},
  };
  for (const auto& s : cases) {
    SequenceLimitReport r = classify_sequence(s);
    double n = 1e6;
    int anchor = r.permutation[0];
    double norm = s.a[anchor].convert_to<double>() +
                  n * s.b[anchor].convert_to<double>();
    for (size_t i = 0; i < s.a.size(); ++i) {
      double e = s.a[i].convert_to<double>() + n * s.b[i].convert_to<double>();
      double val = std::pow(q, e - norm);
      double lim = r.limit.exps[i].is_finite()
                       ? std::pow(q, r.limit.exps[i].value().convert_to<double>())
                       : 0.0;
      CHECK(std::abs(val - lim) < 1e-4);
    }
  }
}

TEST_CASE("stabilizer shape") {
  StabilizerDescription s = stabilizer_description(mk({"0", "0", "-1"}));
  CHECK(s.kernel_indices.empty());
  CHECK(s.quotient_rank == 3);
  CHECK(s.is_vertex);

  s = stabilizer_description(mk({"0", "1/2"}));
  CHECK(!s.is_vertex);

  s = stabilizer_description(mk({"0", "-inf", "2"}));
  CHECK(s.kernel_indices == std::vector<int>{1});
  CHECK(s.quotient_rank == 2);
  CHECK(s.is_vertex);
}
