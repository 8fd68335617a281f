#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fairdiv {

using Int = long long;
using Wide = __int128;

enum class Kind { Goods, Chores };

inline const char* kind_name(Kind k) { return k == Kind::Goods ? "goods" : "chores"; }

// Every failure mode the library distinguishes. The CLI maps these onto
// exit statuses: document/validation errors -> 2, class/method mismatches -> 3,
// internal invariant violations -> 4.
enum class Errc {
  InvalidDocument,
  MixedSigns,
  RaggedRows,
  NonInteger,
  EmptyAgents,
  MagnitudeExceeded,
  ZeroValuation,
  NotBivalued,
  NotFactored,
  UnsupportedClass,
  KindMismatch,
  BadArgument,
  Overflow,
  BudgetExceeded,
  InvariantFailure,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::InvalidDocument: return "InvalidDocument";
    case Errc::MixedSigns: return "MixedSigns";
    case Errc::RaggedRows: return "RaggedRows";
    case Errc::NonInteger: return "NonInteger";
    case Errc::EmptyAgents: return "EmptyAgents";
    case Errc::MagnitudeExceeded: return "MagnitudeExceeded";
    case Errc::ZeroValuation: return "ZeroValuation";
    case Errc::NotBivalued: return "NotBivalued";
    case Errc::NotFactored: return "NotFactored";
    case Errc::UnsupportedClass: return "UnsupportedClass";
    case Errc::KindMismatch: return "KindMismatch";
    case Errc::BadArgument: return "BadArgument";
    case Errc::Overflow: return "Overflow";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::InvariantFailure: return "InvariantFailure";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool ok, Errc code, const std::string& what) {
  if (!ok) fail(code, what);
}

// Internal-consistency checks that must survive release builds.
inline void check_invariant(bool ok, const std::string& what) {
  if (!ok) fail(Errc::InvariantFailure, what);
}

inline std::string wide_to_string(Wide v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  std::string s;
  while (u > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) s.push_back('-');
  return std::string(s.rbegin(), s.rend());
}

// Exact fraction with a positive denominator, used for pain-per-buck ratios.
struct Ratio {
  Int num = 0;
  Int den = 1;

  Ratio() = default;
  Ratio(Int n, Int d);

  friend bool operator==(const Ratio& a, const Ratio& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Ratio& a, const Ratio& b) { return !(a == b); }
  friend bool operator<(const Ratio& a, const Ratio& b) {
    return static_cast<Wide>(a.num) * b.den < static_cast<Wide>(b.num) * a.den;
  }
  friend bool operator<=(const Ratio& a, const Ratio& b) { return !(b < a); }

  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

inline Int gcd_int(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline Ratio::Ratio(Int n, Int d) {
  check_invariant(d != 0, "Ratio with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  Int g = gcd_int(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  num = n;
  den = d;
}

}  // namespace fairdiv
