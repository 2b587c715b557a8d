#include <doctest.h>

#include <random>

#include "sfcurve/algebra.hpp"

using namespace sfc;

namespace {

std::mt19937 rng(20240501u);

Mat2C random_quaternion() {
  std::normal_distribution<double> g(0.0, 1.0);
  return quaternion_from_coords(g(rng), g(rng), g(rng), g(rng));
}

Mat2C random_split() {
  std::normal_distribution<double> g(0.0, 1.0);
  return split_from_coords(g(rng), g(rng), g(rng), g(rng));
}

}  // namespace

TEST_CASE("quaternion basis relations") {
  const Mat2C i = mat_i(), j = mat_j(), k = mat_k(), one = mat_one();
  CHECK(approx_equal(i * j, k));
  CHECK(approx_equal(j * k, i));
  CHECK(approx_equal(k * i, j));
  CHECK(approx_equal(i * i, -one));
  CHECK(approx_equal(j * j, -one));
  CHECK(approx_equal(k * k, -one));
  CHECK(approx_equal(i * j, -(j * i)));
}

TEST_CASE("bilinear form values") {
  CHECK(mat_inner(mat_one(), mat_one()) == Complex(1.0));
  // hand computation: tr(i i*)/2 = 1
  CHECK(mat_inner(mat_i(), mat_i()).real() == doctest::Approx(1.0));
  // split signature: tr(s1 s1*)/2 = -1
  CHECK(mat_inner(mat_sigma1(), mat_sigma1()).real() == doctest::Approx(-1.0));
  CHECK(mat_inner(mat_sigma2(), mat_sigma2()).real() == doctest::Approx(-1.0));
  CHECK(mat_inner(mat_k(), mat_k()).real() == doctest::Approx(1.0));
}

TEST_CASE("bilinear form polarizes det") {
  for (int rep = 0; rep < 50; ++rep) {
    const Mat2C f = random_quaternion();
    CHECK(std::abs(mat_inner(f, f) - f.det()) < 1e-12);
    const Mat2C s = random_split();
    CHECK(std::abs(mat_inner(s, s) - s.det()) < 1e-12);
    CHECK(std::abs(s.det().imag()) < 1e-12);  // split-quaternions have real det
    CHECK(f.det().real() > 0.0);
  }
}

TEST_CASE("adjugate identity") {
  for (int rep = 0; rep < 20; ++rep) {
    const Mat2C f = random_quaternion();
    const Mat2C prod = f * f.adjugate();
    CHECK(approx_equal(prod, f.det() * mat_one(), 1e-12));
  }
}

TEST_CASE("trace free component") {
  CHECK(approx_zero(trace_free(mat_one())));
  CHECK(approx_equal(trace_free(mat_k()), mat_k()));
  CHECK(approx_equal(trace_free(mat_one() + 2.0 * mat_k()), 2.0 * mat_k()));
}

TEST_CASE("membership predicates") {
  CHECK(is_quaternion(random_quaternion()));
  CHECK(is_split_quaternion(random_split()));
  CHECK_FALSE(is_quaternion(mat_sigma1()));
  CHECK_FALSE(is_split_quaternion(mat_i()));
  // 1 and k live in both algebras
  CHECK(is_quaternion(mat_k()));
  CHECK(is_split_quaternion(mat_k()));

  CHECK(in_span_ij(3.0 * mat_i() - 2.0 * mat_j()));
  CHECK_FALSE(in_span_ij(mat_k()));
  CHECK(in_span_1k(mat_one() + mat_k()));
  CHECK_FALSE(in_span_1k(mat_i()));
}

TEST_CASE("coordinate round trips") {
  for (int rep = 0; rep < 20; ++rep) {
    const Mat2C f = random_quaternion();
    const auto q = quaternion_coords(f);
    CHECK(approx_equal(quaternion_from_coords(q[0], q[1], q[2], q[3]), f, 1e-12));
    const Mat2C s = random_split();
    const auto c = split_coords(s);
    CHECK(approx_equal(split_from_coords(c[0], c[1], c[2], c[3]), s, 1e-12));
  }
  const auto p = plane_coords(plane_point(0.25, -4.0));
  CHECK(p[0] == doctest::Approx(0.25));
  CHECK(p[1] == doctest::Approx(-4.0));
}
