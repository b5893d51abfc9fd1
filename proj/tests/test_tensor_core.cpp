#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "support/jacobi.hpp"
#include "wfsim/eigen_herm.hpp"
#include "wfsim/random.hpp"

using namespace wfsim;

namespace {

const double kSqrt2 = std::sqrt(2.0);

ComplexMatrix pauli_x() {
  return ComplexMatrix(2, 2, {cd{0}, cd{1}, cd{1}, cd{0}});
}
ComplexMatrix pauli_y() {
  return ComplexMatrix(2, 2, {cd{0}, cd{0, -1}, cd{0, 1}, cd{0}});
}
ComplexMatrix pauli_z() {
  return ComplexMatrix(2, 2, {cd{1}, cd{0}, cd{0}, cd{-1}});
}

ComplexMatrix random_hermitian(CounterRng& rng, std::size_t n) {
  ComplexMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = rng.cgaussian();
  ComplexMatrix h = g + g.adjoint();
  h *= cd{0.5};
  return h;
}

}  // namespace

TEST_CASE("matrix arithmetic basics") {
  ComplexMatrix a(2, 3, {cd{1}, cd{2}, cd{0, 1}, cd{-1}, cd{0}, cd{3, -2}});
  CHECK(a.transpose().rows() == 3);
  CHECK(a.transpose()(2, 1) == cd{3, -2});
  CHECK(a.adjoint()(2, 1) == cd{3, 2});
  CHECK(a.conjugate()(0, 2) == cd{0, -1});

  const ComplexMatrix i3 = ComplexMatrix::identity(3);
  CHECK((a * i3).max_abs_diff(a) == 0.0);

  // associativity/identity of multiplication against a hand computation
  ComplexMatrix b(3, 1, {cd{1}, cd{0, 1}, cd{2}});
  const ComplexMatrix ab = a * b;
  CHECK(ab.rows() == 2);
  CHECK(std::abs(ab(0, 0) - (cd{1} + cd{2} * cd{0, 1} + cd{0, 1} * cd{2})) <
        1e-15);

  CHECK_THROWS_AS(a * a, input_error);  // shape mismatch
  CHECK_THROWS_AS(ComplexMatrix(0, 2), input_error);
}

TEST_CASE("kron and outer") {
  const ComplexMatrix x = pauli_x();
  const ComplexMatrix z = pauli_z();
  const ComplexMatrix xz = kron(x, z);
  CHECK(xz.rows() == 4);
  CHECK(xz(0, 2) == cd{1});
  CHECK(xz(1, 3) == cd{-1});
  CHECK(xz(0, 0) == cd{0});

  // (A⊗B)(C⊗D) = AC ⊗ BD on random 2x2 blocks
  CounterRng rng(21);
  const ComplexMatrix a = random_hermitian(rng, 2);
  const ComplexMatrix b = random_hermitian(rng, 3);
  const ComplexMatrix c = random_hermitian(rng, 2);
  const ComplexMatrix d = random_hermitian(rng, 3);
  CHECK((kron(a, b) * kron(c, d)).max_abs_diff(kron(a * c, b * d)) <= 1e-12);

  // trace multiplicativity
  const cd t1 = kron(a, b).trace();
  const cd t2 = a.trace() * b.trace();
  CHECK(std::abs(t1 - t2) <= 1e-12);

  const std::vector<cd> v{cd{1}, cd{0, 1}};
  const std::vector<cd> w{cd{0.5}, cd{-0.5}};
  const ComplexMatrix ow = outer(v, w);
  CHECK(ow(1, 1) == cd{0, 1} * std::conj(cd{-0.5}));
}

TEST_CASE("hermitian_eigen: Pauli and projector spectra") {
  for (const ComplexMatrix& p : {pauli_x(), pauli_y(), pauli_z()}) {
    const EigenSystem es = hermitian_eigen(p);
    CHECK(es.values[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(es.values[1] == doctest::Approx(-1.0).epsilon(1e-12));
  }

  // |0><0| − |+><+| has eigenvalues ±1/√2
  ComplexMatrix m(2, 2,
                  {cd{1.0 - 0.5}, cd{-0.5}, cd{-0.5}, cd{-0.5}});
  const EigenSystem es = hermitian_eigen(m);
  CHECK(es.values[0] == doctest::Approx(1.0 / kSqrt2).epsilon(1e-12));
  CHECK(es.values[1] == doctest::Approx(-1.0 / kSqrt2).epsilon(1e-12));
}

TEST_CASE("hermitian_eigen: order, reconstruction, gauge") {
  CounterRng rng(22);
  for (std::size_t n : {2, 3, 5, 8}) {
    const ComplexMatrix h = random_hermitian(rng, n);
    const EigenSystem es = hermitian_eigen(h);

    for (std::size_t k = 0; k + 1 < n; ++k)
      CHECK(es.values[k] >= es.values[k + 1]);

    // reconstruction V diag V†
    ComplexMatrix rec(n, n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          rec(i, j) +=
              cd{es.values[k]} * es.vectors(i, k) * std::conj(es.vectors(j, k));
    CHECK(rec.max_abs_diff(h) <= 1e-10);

    // gauge: first entry of modulus > 1e-12 in each column is real positive
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(es.vectors(i, k)) <= 1e-12) continue;
        CHECK(es.vectors(i, k).imag() == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(es.vectors(i, k).real() > 0.0);
        break;
      }

    // orthonormal columns
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = 0; l < n; ++l) {
        cd dot{0.0};
        for (std::size_t i = 0; i < n; ++i)
          dot += std::conj(es.vectors(i, k)) * es.vectors(i, l);
        CHECK(std::abs(dot - (k == l ? cd{1} : cd{0})) <= 1e-10);
      }
  }
}

TEST_CASE("hermitian_eigen agrees with independent Jacobi oracle") {
  CounterRng rng(23);
  for (std::size_t n : {2, 3, 4, 6, 9}) {
    for (int rep = 0; rep < 20; ++rep) {
      const ComplexMatrix h = random_hermitian(rng, n);
      const EigenSystem es = hermitian_eigen(h);
      const std::vector<double> jac =
          wfsim_test::jacobi_eigenvalues(h.entries(), n);
      for (std::size_t k = 0; k < n; ++k)
        CHECK(es.values[k] == doctest::Approx(jac[k]).epsilon(1e-10));
    }
  }
}

TEST_CASE("hermitian_eigen rejects bad input") {
  ComplexMatrix nonherm(2, 2, {cd{0}, cd{1}, cd{2}, cd{0}});
  CHECK_THROWS_AS(hermitian_eigen(nonherm), input_error);

  ComplexMatrix rect(2, 3);
  CHECK_THROWS_AS(hermitian_eigen(rect), input_error);

  ComplexMatrix nan2(2, 2);
  nan2(0, 0) = cd{std::nan("")};
  nan2(1, 1) = cd{0};
  CHECK_THROWS_AS(hermitian_eigen(nan2), input_error);
}

TEST_CASE("schatten1 values and properties") {
  // |0><0| + |1><1| → 2 ; zero matrix → 0 ; |0><0| − |+><+| → √2
  CHECK(schatten1(ComplexMatrix::identity(2)) ==
        doctest::Approx(2.0).epsilon(1e-12));
  CHECK(schatten1(ComplexMatrix(3, 3)) == doctest::Approx(0.0));
  ComplexMatrix m(2, 2, {cd{0.5}, cd{-0.5}, cd{-0.5}, cd{-0.5}});
  CHECK(schatten1(m) == doctest::Approx(kSqrt2).epsilon(1e-12));

  CounterRng rng(24);
  for (int rep = 0; rep < 25; ++rep) {
    const ComplexMatrix a = random_hermitian(rng, 4);
    const ComplexMatrix b = random_hermitian(rng, 4);
    // triangle inequality
    CHECK(schatten1(a + b) <= schatten1(a) + schatten1(b) + 1e-10);
    // unitary invariance
    const ComplexMatrix u = random_unitary(rng, 4);
    CHECK(schatten1(u * a * u.adjoint()) ==
          doctest::Approx(schatten1(a)).epsilon(1e-10));
  }
}

TEST_CASE("tolerance overrides propagate") {
  const Tolerances saved = tolerances();
  tolerances().recon = 1e-30;  // unattainable
  CounterRng rng(25);
  const ComplexMatrix h = random_hermitian(rng, 6);
  CHECK_THROWS_AS(hermitian_eigen(h), numerical_error);
  tolerances() = saved;
  CHECK_NOTHROW(hermitian_eigen(h));
}
