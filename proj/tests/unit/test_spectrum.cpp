#include "doctest.h"

#include <cmath>
#include <limits>
#include <random>

#include "hpineq/error.hpp"
#include "hpineq/linalg/kron.hpp"
#include "hpineq/linalg/random_pd.hpp"
#include "hpineq/linalg/spectrum.hpp"
#include "oracles.hpp"

using namespace hpineq;

TEST_CASE("min eigenvalue examples") {
  CHECK(min_eigenvalue(HermitianMatrix::diagonal(std::vector<double>{3, -1, 2})) == doctest::Approx(-1.0).epsilon(1e-14));
  for (std::size_t m : {1u, 2u, 5u, 17u}) CHECK(min_eigenvalue(HermitianMatrix::identity(m)) == doctest::Approx(1.0).epsilon(1e-14));
  const auto ev = eigenvalues(HermitianMatrix::from_rows({{2, 1}, {1, 2}}));
  CHECK(ev[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(ev[1] == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("2x2 eigenvalues agree with the characteristic polynomial") {
  std::mt19937_64 rng(21);
  std::normal_distribution<double> g;
  for (int t = 0; t < 500; ++t) {
    const double a = g(rng), d = g(rng);
    const cplx b(g(rng), g(rng));
    const auto h = HermitianMatrix::from_rows({{a, b}, {std::conj(b), d}});
    const double mean = 0.5 * (a + d);
    const double rad = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(b));
    const auto ev = eigenvalues(h);
    CHECK(std::abs(ev[0] - (mean - rad)) <= 1e-12);
    CHECK(std::abs(ev[1] - (mean + rad)) <= 1e-12);
  }
}

TEST_CASE("eigenvalues agree with an independent solver") {
  std::mt19937_64 rng(22);
  for (std::size_t m = 1; m <= 40; m += (m < 10 ? 1 : 7)) {
    for (int t = 0; t < 3; ++t) {
      const auto h = oracle::random_hermitian(m, rng);
      const auto ours = eigenvalues(h);
      const auto ref = oracle::eigenvalues(h);
      const double radius = std::max(std::abs(ref.front()), std::abs(ref.back()));
      REQUIRE(ours.size() == m);
      for (std::size_t i = 0; i < m; ++i) CHECK(std::abs(ours[i] - ref[i]) <= 1e-10 * radius);
    }
  }
}

TEST_CASE("complex solver agrees with the real symmetric embedding") {
  std::mt19937_64 rng(23);
  for (std::size_t m : {3u, 8u, 21u}) {
    const auto h = oracle::random_hermitian(m, rng);
    const std::size_t n = 2 * m;
    std::vector<double> emb(n * n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        emb[i * n + j] = emb[(i + m) * n + j + m] = h(i, j).real();
        emb[i * n + j + m] = -h(i, j).imag();
        emb[(i + m) * n + j] = h(i, j).imag();
      }
    const auto doubled = symmetric_eigenvalues(emb, n);
    const auto ev = eigenvalues(h);
    const double radius = std::max(std::abs(ev.front()), std::abs(ev.back()));
    for (std::size_t i = 0; i < m; ++i) {
      CHECK(std::abs(doubled[2 * i] - ev[i]) <= 1e-10 * radius);
      CHECK(std::abs(doubled[2 * i + 1] - ev[i]) <= 1e-10 * radius);
    }
  }
}

TEST_CASE("eigen solver handles structured inputs") {
  // already diagonal, repeated eigenvalues, rank one, zero, tensor powers
  CHECK(eigenvalues(HermitianMatrix::zeros(6)) == std::vector<double>(6, 0.0));
  const auto ev = eigenvalues(HermitianMatrix::diagonal(std::vector<double>{5, -2, 5, 0}));
  CHECK(ev == std::vector<double>{-2, 0, 5, 5});

  std::vector<cplx> u{{1, 2}, {0, -1}, {3, 0.5}};
  std::vector<cplx> e(9);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) e[i * 3 + j] = u[i] * std::conj(u[j]);
  const auto r1 = eigenvalues(HermitianMatrix(ComplexMatrix(3, e)));
  double unorm2 = 0;
  for (auto z : u) unorm2 += std::norm(z);
  CHECK(std::abs(r1[0]) <= 1e-14 * unorm2);
  CHECK(std::abs(r1[1]) <= 1e-14 * unorm2);
  CHECK(r1[2] == doctest::Approx(unorm2).epsilon(1e-14));

  const auto a = random_pd({.dim = 2, .seed = 5});
  const auto p6 = tensor_power(a, 6);
  const auto ours = eigenvalues(p6);
  const auto ref = oracle::eigenvalues(p6);
  for (std::size_t i = 0; i < ours.size(); ++i) CHECK(std::abs(ours[i] - ref[i]) <= 1e-10 * ref.back());
}

TEST_CASE("eigenvalues reject non-finite input and are deterministic") {
  std::vector<double> bad{1, std::numeric_limits<double>::quiet_NaN(), 0, 1};
  CHECK_THROWS_AS(symmetric_eigenvalues(bad, 2), InputError);
  CHECK_THROWS_AS(symmetric_eigenvalues(std::vector<double>(3), 2), InputError);
  std::mt19937_64 rng(24);
  const auto h = oracle::random_hermitian(12, rng);
  CHECK(eigenvalues(h) == eigenvalues(h));
}

TEST_CASE("loewner certificates") {
  std::mt19937_64 rng(25);
  const auto a = oracle::random_hermitian(3, rng);
  CHECK(loewner_geq(a, a, 1e-9).verdict == Verdict::kEquality);

  const auto i3 = HermitianMatrix::identity(3);
  const auto holds = loewner_geq(2.0 * i3, i3, 1e-9);
  CHECK(holds.verdict == Verdict::kHolds);
  CHECK(holds.min_eigenvalue == doctest::Approx(1.0));

  const auto fails = loewner_geq(i3, 2.0 * i3, 1e-9);
  CHECK(fails.verdict == Verdict::kFails);
  CHECK(fails.min_eigenvalue == doctest::Approx(-1.0));
  CHECK_FALSE(fails.holds());

  CHECK_THROWS_AS(loewner_geq(i3, HermitianMatrix::identity(2)), InputError);
  CHECK(to_string(Verdict::kEquality) == "EQUALITY");
}

TEST_CASE("certificate verdict follows the threshold rule") {
  // threshold = tol * max(1, ||D||_inf)
  const auto d = HermitianMatrix::diagonal(std::vector<double>{100.0, -5e-7});
  const auto c = certify_psd(d, 1e-8);
  CHECK(c.scale == 100.0);
  CHECK(c.threshold() == doctest::Approx(1e-6));
  CHECK(c.verdict == Verdict::kHolds);
  CHECK(certify_psd(HermitianMatrix::diagonal(std::vector<double>{100.0, -2e-6}), 1e-8).verdict == Verdict::kFails);
  CHECK(certify_psd(HermitianMatrix::diagonal(std::vector<double>{1e-9, -1e-9}), 1e-8).verdict == Verdict::kEquality);
  CHECK(certify_psd(HermitianMatrix::diagonal(std::vector<double>{2e-8, 0}), 1e-8).verdict == Verdict::kHolds);
  CHECK_THROWS_AS(certify_psd(d, -1.0), InputError);
  CHECK(kDefaultPsdTolerance == 1e-8);

  std::mt19937_64 rng(26);
  for (int t = 0; t < 100; ++t) {
    const auto h = oracle::random_hermitian(4, rng);
    const double tol = std::pow(10.0, -static_cast<double>(t % 9) - 1);
    const auto cert = certify_psd(h, tol);
    const auto ev = oracle::eigenvalues(h);
    const double thr = tol * std::max(1.0, h.infinity_norm());
    const bool holds = ev.front() >= -thr * (1 + 1e-9);
    if (cert.verdict == Verdict::kFails) CHECK(ev.front() < -thr * (1 - 1e-9));
    else CHECK(holds);
    if (cert.verdict == Verdict::kEquality) CHECK(std::max(-ev.front(), ev.back()) <= thr * (1 + 1e-9));
  }
}

TEST_CASE("superadditivity of tensor powers") {
  for (std::uint64_t s = 0; s < 40; ++s) {
    const auto a = random_pd({.dim = 2, .seed = 2 * s});
    const auto b = random_pd({.dim = 2, .seed = 2 * s + 1});
    for (int p = 1; p <= 4; ++p) {
      const auto cert = loewner_geq(tensor_power(a + b, p), tensor_power(a, p) + tensor_power(b, p));
      CHECK(cert.verdict != Verdict::kFails);
      if (p == 1) CHECK(cert.verdict == Verdict::kEquality);
    }
  }
}
