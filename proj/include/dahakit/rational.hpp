#pragma once

// Exact rational scalars and small dense linear algebra over them.

#include <gmpxx.h>

#include <string>
#include <vector>

namespace dahakit {

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;  // row-major

/// Parses "p/q", "p" or "-p/q". Throws std::invalid_argument on garbage or a
/// zero denominator.
Rational parse_rational(const std::string& text);

/// Canonical "p/q" form; integers print without the denominator.
std::string format_rational(const Rational& value);

bool is_integer(const Rational& value);

RationalMatrix identity_matrix(std::size_t n);
RationalMatrix transpose(const RationalMatrix& m);
RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);
RationalVector multiply(const RationalMatrix& m, const RationalVector& v);

/// Gauss-Jordan inverse. Throws std::domain_error if the matrix is singular.
RationalMatrix inverse(const RationalMatrix& m);

Rational dot(const RationalVector& a, const RationalVector& b);

}  // namespace dahakit
