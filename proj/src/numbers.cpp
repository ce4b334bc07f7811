#include "toric/numbers.hpp"

#include <sstream>

#include "toric/errors.hpp"

namespace toric {

Rat make_rat(const Int& n, const Int& d) {
  if (d == 0) throw ToricError("rational with zero denominator");
  // Division canonicalizes sign and reduces to lowest terms; the two-argument
  // mpq constructor does not handle negative denominators.
  return Rat(n) / Rat(d);
}

Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

Int floor_div(const Int& a, const Int& b) {
  if (b == 0) throw ToricError("division by zero");
  Int q = a / b;  // truncated
  Int r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

Int ceil_div(const Int& a, const Int& b) { return -floor_div(-a, b); }

Int floor_rat(const Rat& q) { return floor_div(num(q), den(q)); }
Int ceil_rat(const Rat& q) { return ceil_div(num(q), den(q)); }

QVec to_qvec(const Vec& v) {
  QVec out;
  out.reserve(v.size());
  for (const Int& x : v) out.emplace_back(x);
  return out;
}

bool is_integral(const QVec& v) {
  for (const Rat& q : v)
    if (den(q) != 1) return false;
  return true;
}

Vec to_vec(const QVec& v) {
  Vec out;
  out.reserve(v.size());
  for (const Rat& q : v) {
    if (den(q) != 1) throw ToricError("vector is not integral: " + to_string(v));
    out.push_back(num(q));
  }
  return out;
}

Vec negate(const Vec& v) {
  Vec out;
  out.reserve(v.size());
  for (const Int& x : v) out.push_back(-x);
  return out;
}

bool is_zero(const Vec& v) {
  for (const Int& x : v)
    if (x != 0) return false;
  return true;
}

std::string to_string(const Int& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

std::string to_string(const Rat& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

namespace {
template <class T>
std::string join_vec(const std::vector<T>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += to_string(v[i]);
  }
  return s + ")";
}
}  // namespace

std::string to_string(const Vec& v) { return join_vec(v); }
std::string to_string(const QVec& v) { return join_vec(v); }

}  // namespace toric
