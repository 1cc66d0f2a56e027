#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace mvf {

using Integer = mpz_class;
using Rat = mpq_class;

// "n" or "n/d", canonical form.
std::string to_string(const Rat& x);
std::string to_string(const Integer& x);

// Accepts "n", "-n", "n/d"; throws ParseError on anything else or d = 0.
Rat parse_rat(const std::string& s);

Rat make_rat(const Integer& num, const Integer& den);

// p-adic valuation; ZeroArgument for 0.
int64_t valuation(const Integer& x, const Integer& p);
int64_t valuation(const Rat& x, const Integer& p);

Integer ipow(const Integer& base, unsigned long e);
Rat rpow(const Rat& base, long e);

// Nonnegative representative of a mod m.
Integer mod(const Integer& a, const Integer& m);
// Image of x in Z/m for x with denominator coprime to m.
Integer mod_rat(const Rat& x, const Integer& m);
Integer inverse_mod(const Integer& a, const Integer& m);

bool is_prime(const Integer& p);

Integer floor_rat(const Rat& x);
Integer ceil_rat(const Rat& x);

}  // namespace mvf
