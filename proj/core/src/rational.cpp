#include <ffprog/error.hpp>
#include <ffprog/rational.hpp>

#include <limits>

namespace ffprog {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::BadCharacteristic: return "BadCharacteristic";
    case Errc::Inadmissible: return "Inadmissible";
    case Errc::BadDensity: return "BadDensity";
    case Errc::CharTooSmall: return "CharTooSmall";
    case Errc::EmptyVariety: return "EmptyVariety";
    case Errc::NotMeanZero: return "NotMeanZero";
    case Errc::DegreeTooSmall: return "DegreeTooSmall";
    case Errc::WorkBudgetExceeded: return "WorkBudgetExceeded";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::BadDegrees: return "BadDegrees";
    case Errc::Mismatch: return "Mismatch";
    case Errc::Parse: return "Parse";
    case Errc::Io: return "Io";
  }
  return "Unknown";
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(Errc::DivisionByZero, "rational with zero denominator");
  Rational q(BigInt(std::to_string(num)), BigInt(std::to_string(den)));
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  const auto bad = [&] { return Error(Errc::Parse, "bad rational '" + text + "'"); };
  if (text.empty()) throw bad();
  const auto slash = text.find('/');
  const auto is_int = [](const std::string& s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!is_int(num, true) || !is_int(den, false)) throw bad();
  if (num[0] == '+') num.erase(0, 1);
  BigInt n(num), d(den);
  if (d == 0) throw Error(Errc::DivisionByZero, "rational '" + text + "' has zero denominator");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {
std::int64_t clamp_to_int64(const BigInt& v) {
  if (v > BigInt(std::to_string(std::numeric_limits<std::int64_t>::max())))
    return std::numeric_limits<std::int64_t>::max();
  return std::stoll(v.get_str());
}
}  // namespace

std::int64_t abs_numerator_clamped(const Rational& q) {
  return clamp_to_int64(BigInt(abs(q.get_num())));
}

std::int64_t denominator_clamped(const Rational& q) { return clamp_to_int64(q.get_den()); }

}  // namespace ffprog
