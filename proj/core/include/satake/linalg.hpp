#pragma once

#include <optional>
#include <vector>

#include "satake/rational.hpp"

namespace satake {

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;

Rat dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Rat& c, const Vec& a);
bool is_zero(const Vec& a);
Vec zero_vec(int n);

/// matrix * column vector
Vec mat_vec(const Mat& m, const Vec& v);
Mat mat_mul(const Mat& a, const Mat& b);
Mat identity(int n);
Mat transpose(const Mat& m);

/// Clears denominators and divides by the content; the first nonzero entry
/// becomes positive. Zero vectors are returned unchanged.
Vec primitive(const Vec& v);

/// Reduced row echelon form in place; returns the rank.
int rref(Mat& m);

int rank_of(Mat m);

/// Basis of the right kernel {x : m x = 0}, one vector per free column.
Mat kernel_basis(const Mat& m);

/// Inverse of a square nonsingular matrix; throws on singular input.
Mat inverse(const Mat& m);

/// Basis of the kernel lattice {x in Z^n : m x = 0} for an integer matrix
/// (given with Rat entries that must be integral). The basis spans the
/// saturated lattice ker(m) ∩ Z^n, computed by integer column reduction.
Mat integer_kernel_basis(const Mat& m);

/// Kernel lattice basis together with complementary lattice vectors; the two
/// lists concatenated form a basis of Z^n.
std::pair<Mat, Mat> integer_kernel_and_complement(const Mat& m);

/// Solves m x = b; returns one solution or nullopt if inconsistent.
std::optional<Vec> solve(Mat m, Vec b);

bool vec_less(const Vec& a, const Vec& b);  // lexicographic

}  // namespace satake
