#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rcf/errors.hpp"

namespace rcf {

using Int = mpz_class;
using Rat = mpq_class;

/// Least non-negative residue of a modulo m (m > 0).
Int mod(const Int & a, const Int & m);
Int gcd(const Int & a, const Int & b);
Int lcm(const Int & a, const Int & b);
/// Returns g = gcd(a, b) and sets u, v with u*a + v*b = g.
Int xgcd(Int & u, Int & v, const Int & a, const Int & b);
Int powmod(const Int & base, const Int & exp, const Int & m);
/// Inverse of a modulo m; throws std::invalid_argument if not invertible.
Int invmod(const Int & a, const Int & m);

Int isqrt(const Int & n);
bool is_square(const Int & n, Int * root = nullptr);

/// Baillie-PSW plus Miller-Rabin rounds (GMP); deterministic below 2^64.
bool is_prime(const Int & n);
Int next_prime(const Int & n);
std::vector<Int> primes_up_to(long bound);

/// Prime factorization of |n| (n != 0) by trial division and Pollard rho.
std::vector<std::pair<Int, unsigned>> factor_integer(const Int & n);
bool is_squarefree(const Int & n);

/// Jacobi symbol (a|m) for odd m >= 1.
int jacobi(const Int & a, const Int & m);

/// Quartic residue symbol (d/n)_4 for a prime n = 1 mod 4. Empty when d is
/// not a quadratic residue mod n, where the symbol is undefined.
std::optional<int> quartic_symbol(const Int & d, const Int & n);

/// Square root of a modulo an odd prime p, normalized to 0 <= r <= (p-1)/2.
std::optional<Int> sqrt_mod(const Int & a, const Int & p);

Int rat_floor(const Rat & x);
Int rat_ceil(const Rat & x);

std::string to_string(const Int & x);
std::string to_string(const Rat & x);

} // namespace rcf
