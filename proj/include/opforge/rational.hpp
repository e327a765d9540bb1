#pragma once
#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace opforge {

// Exact rationals, canonical reduced form. GMP keeps num/den coprime with a
// positive denominator after canonicalize(); every constructor path below
// canonicalizes, so Rat values can be compared structurally.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "p" or "p/q" with an optional sign on p.
inline Rat rat_parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto bad = [&] { throw std::invalid_argument("bad rational literal: " + s); };
  std::string num = s, den = "1";
  if (auto pos = s.find('/'); pos != std::string::npos) {
    num = s.substr(0, pos);
    den = s.substr(pos + 1);
    if (num.empty() || den.empty() || den.find('/') != std::string::npos) bad();
  }
  auto digits = [&](const std::string& t, bool sign_ok) {
    size_t i = (sign_ok && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  if (!digits(num, true) || !digits(den, false)) bad();
  mpz_class n(num), d(den);
  if (d == 0) throw std::invalid_argument("rational with zero denominator: " + s);
  Rat r(n, d);
  r.canonicalize();
  return r;
}

// "p/q" with q > 0 and gcd(p,q)=1; integers render without the denominator.
inline std::string rat_str(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rat rat_pow(const Rat& base, unsigned e) {
  Rat acc = 1;
  for (unsigned i = 0; i < e; ++i) acc *= base;
  return acc;
}

}  // namespace opforge
