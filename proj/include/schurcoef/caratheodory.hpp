#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "schurcoef/maps.hpp"
#include "schurcoef/series.hpp"

namespace schurcoef {

inline constexpr double kMembershipTol = 1e-8;

// Leading minors Delta_0..Delta_n of the Hermitian Toeplitz matrix with
// diagonal 2 and first row (2, p_1, ..., p_n).
struct ToeplitzMinorSequence {
    std::vector<double> deltas;
    std::vector<complex> p;
};

enum class MembershipStatus { interior, boundary, rejected };

const char* to_string(MembershipStatus s);

// Verdict of the determinant test for a finite tuple. "interior" and "boundary"
// mean no obstruction through order n: the tuple extends to a Caratheodory
// function as far as the first n minors can tell.
struct MembershipVerdict {
    MembershipStatus status = MembershipStatus::interior;
    std::optional<std::size_t> first_failure;
    ToeplitzMinorSequence minors;
};

// The (k+1)x(k+1) matrix for k = p.size(), row-major.
std::vector<complex> toeplitz_matrix(std::span<const complex> p);

// Determinant by Gaussian elimination with partial pivoting. a is row-major, dim x dim.
complex determinant(std::vector<complex> a, std::size_t dim);

ToeplitzMinorSequence toeplitz_minors(std::span<const complex> p);

MembershipVerdict is_caratheodory(std::span<const complex> p, double tol = kMembershipTol);

// (p_2, p_3) for p_1 in [0, 2] and x, y in the closed disk.
std::pair<complex, complex> lz_parametrize(double p1, complex x, complex y);

// vec_T images of gamma drawn uniformly from the open polydisk. With closed set,
// each coordinate is instead unimodular with probability 1/(n+1).
// Deterministic in seed.
std::vector<CoefficientPoint> sample_body(std::size_t n, std::size_t count, std::uint64_t seed,
                                          bool closed);

// The parameter draws underlying sample_body, same seed, same order.
std::vector<std::vector<complex>> sample_polydisk(std::size_t n, std::size_t count,
                                                  std::uint64_t seed, bool closed);

}  // namespace schurcoef
