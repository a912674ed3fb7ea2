#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace tropgroups {

using Rational = mpq_class;
using QVec = std::vector<Rational>;
using ZVec = std::vector<std::int64_t>;

// Canonical "p/q" text form, q >= 1.
std::string to_string(const Rational& q);

// Accepts "p/q" or "p" (optionally signed). Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

QVec to_rational(const ZVec& v);

// Throws std::domain_error if some entry is not an integer or does not fit.
ZVec to_integer(const QVec& v);

bool is_integral(const Rational& q);
bool is_integral(const QVec& v);

// Floor-style reduction of q into [0, modulus).
Rational reduce_mod(const Rational& q, const Rational& modulus);

QVec add(const QVec& a, const QVec& b);
QVec sub(const QVec& a, const QVec& b);
QVec scale(const Rational& c, const QVec& a);
QVec neg(const QVec& a);
bool is_zero(const QVec& a);
bool is_zero(const ZVec& a);

ZVec add(const ZVec& a, const ZVec& b);
ZVec sub(const ZVec& a, const ZVec& b);
ZVec neg(const ZVec& a);

}  // namespace tropgroups
