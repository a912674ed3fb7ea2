#include "tropgroups/rational.hpp"

#include <limits>
#include <stdexcept>

#include "tropgroups/checked.hpp"

namespace tropgroups {

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  auto valid_int = [](const std::string& s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw std::invalid_argument("malformed rational: " + text);
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw std::invalid_argument("zero denominator: " + text);
  Rational q(n, d);
  q.canonicalize();
  return q;
}

QVec to_rational(const ZVec& v) {
  QVec out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(from_int64(x));
  return out;
}

ZVec to_integer(const QVec& v) {
  ZVec out;
  out.reserve(v.size());
  for (const auto& q : v) {
    if (q.get_den() != 1) throw std::domain_error("non-integral entry " + to_string(q));
    out.push_back(to_int64(q.get_num()));
  }
  return out;
}

bool is_integral(const Rational& q) { return q.get_den() == 1; }

bool is_integral(const QVec& v) {
  for (const auto& q : v)
    if (!is_integral(q)) return false;
  return true;
}

Rational reduce_mod(const Rational& q, const Rational& modulus) {
  if (sgn(modulus) <= 0) throw std::invalid_argument("modulus must be positive");
  Rational ratio = q / modulus;
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), ratio.get_num_mpz_t(), ratio.get_den_mpz_t());
  Rational r = q - Rational(f) * modulus;
  r.canonicalize();
  return r;
}

QVec add(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  QVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

QVec sub(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  QVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

QVec scale(const Rational& c, const QVec& a) {
  QVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
  return out;
}

QVec neg(const QVec& a) {
  QVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

bool is_zero(const QVec& a) {
  for (const auto& q : a)
    if (q != 0) return false;
  return true;
}

bool is_zero(const ZVec& a) {
  for (auto x : a)
    if (x != 0) return false;
  return true;
}

ZVec add(const ZVec& a, const ZVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  ZVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked_add(a[i], b[i]);
  return out;
}

ZVec sub(const ZVec& a, const ZVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  ZVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked_sub(a[i], b[i]);
  return out;
}

ZVec neg(const ZVec& a) {
  ZVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked_sub(0, a[i]);
  return out;
}

}  // namespace tropgroups
