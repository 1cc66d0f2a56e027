#include "mvf/exact/rational.hpp"

#include "mvf/errors.hpp"

namespace mvf {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::ZeroArgument: return "ZeroArgument";
    case ErrorCode::NonCoprimeModuli: return "NonCoprimeModuli";
    case ErrorCode::UnsupportedRamification: return "UnsupportedRamification";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorCode::ClosureMismatch: return "ClosureMismatch";
    case ErrorCode::ClosureTooSmall: return "ClosureTooSmall";
    case ErrorCode::MaxStepsExceeded: return "MaxStepsExceeded";
    case ErrorCode::InconsistentSamePlace: return "InconsistentSamePlace";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

std::string to_string(const Rat& x) {
  Rat c = x;
  c.canonicalize();
  return c.get_str();
}
std::string to_string(const Integer& x) { return x.get_str(); }

namespace {

bool valid_integer_text(const std::string& s) {
  size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

}  // namespace

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_integer_text(num) || !valid_integer_text(den))
    fail(ErrorCode::ParseError, "not a rational: '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  Integer n(num), d(den);
  if (d == 0) fail(ErrorCode::ParseError, "zero denominator: '" + s + "'");
  return make_rat(n, d);
}

Rat make_rat(const Integer& num, const Integer& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

int64_t valuation(const Integer& x, const Integer& p) {
  if (x == 0) fail(ErrorCode::ZeroArgument, "valuation of zero");
  Integer t = x;
  int64_t v = 0;
  while (mpz_divisible_p(t.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t());
    ++v;
  }
  return v;
}

int64_t valuation(const Rat& x, const Integer& p) {
  if (x == 0) fail(ErrorCode::ZeroArgument, "valuation of zero");
  return valuation(Integer(x.get_num()), p) - valuation(Integer(x.get_den()), p);
}

Integer ipow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rat rpow(const Rat& base, long e) {
  if (e < 0) {
    if (base == 0) fail(ErrorCode::ZeroArgument, "negative power of zero");
    return rpow(Rat(1) / base, -e);
  }
  Rat r = make_rat(ipow(base.get_num(), e), ipow(base.get_den(), e));
  return r;
}

Integer mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer mod_rat(const Rat& x, const Integer& m) {
  Integer den = x.get_den();
  return mod(Integer(x.get_num()) * inverse_mod(den, m), m);
}

Integer inverse_mod(const Integer& a, const Integer& m) {
  Integer r;
  if (m == 1) return 0;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    fail(ErrorCode::InvalidArgument, "not invertible modulo " + m.get_str());
  return r;
}

bool is_prime(const Integer& p) {
  return p >= 2 && mpz_probab_prime_p(p.get_mpz_t(), 40) > 0;
}

Integer floor_rat(const Rat& x) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

Integer ceil_rat(const Rat& x) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

}  // namespace mvf
