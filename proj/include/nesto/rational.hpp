#pragma once

#include <string>

#include <boost/multiprecision/gmp.hpp>

#include "nesto/errors.hpp"

namespace nesto {

/// Exact arbitrary-precision rational; lowest terms, positive denominator.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Accepts "p", "p/q", optional leading sign on either part.
Rational parse_rational(const std::string& text);

/// Always "p/q", q positive, including "1/1".
std::string format_rational(const Rational& r);

}  // namespace nesto
