#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <vector>

namespace toric {

// All arithmetic is exact: arbitrary-precision integers and rationals.
// There is no floating point anywhere in the library.
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

/// Lattice vector in N or M; which lattice is contextual.
using Vec = std::vector<Int>;
/// Vector with rational entries (element of N_Q or M_Q).
using QVec = std::vector<Rat>;
/// Row-major rectangular integer matrix.
using Mat = std::vector<Vec>;

/// Exact rational n/d with canonical sign and lowest terms. d must be nonzero.
Rat make_rat(const Int& n, const Int& d);

Int num(const Rat& q);
Int den(const Rat& q);  // always positive

/// Floor/ceil division; b must be nonzero.
Int floor_div(const Int& a, const Int& b);
Int ceil_div(const Int& a, const Int& b);

Int floor_rat(const Rat& q);
Int ceil_rat(const Rat& q);

QVec to_qvec(const Vec& v);
bool is_integral(const QVec& v);
/// Pre: is_integral(v).
Vec to_vec(const QVec& v);

Vec negate(const Vec& v);
bool is_zero(const Vec& v);

std::string to_string(const Int& x);
std::string to_string(const Rat& q);
std::string to_string(const Vec& v);
std::string to_string(const QVec& v);

}  // namespace toric
