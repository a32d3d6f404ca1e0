#include "rational.hpp"

#include <cctype>
#include <cstdlib>

#include "error.hpp"

namespace expsearch {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::parse: return "Parse";
    case Errc::disconnected: return "Disconnected";
    case Errc::nonpositive_length: return "NonpositiveLength";
    case Errc::missing_root: return "MissingRoot";
    case Errc::duplicate_arc_id: return "DuplicateArcId";
    case Errc::point_is_node: return "PointIsNode";
    case Errc::not_a_tree: return "NotATree";
    case Errc::not_two_arc_connected: return "NotTwoArcConnected";
    case Errc::zero_length: return "ZeroLength";
    case Errc::interrupted_segment: return "InterruptedSegment";
    case Errc::cap_exceeded: return "CapExceeded";
    case Errc::no_convergence: return "NoConvergence";
    case Errc::out_of_range: return "OutOfRange";
    case Errc::bad_argument: return "BadArgument";
    case Errc::internal: return "Internal";
  }
  return "Unknown";
}

namespace {

BigInt parse_int(std::string_view s) {
  if (s.empty()) throw Error(Errc::parse, "empty number");
  size_t i = 0;
  if (s[0] == '+' || s[0] == '-') i = 1;
  if (i == s.size()) throw Error(Errc::parse, "sign without digits");
  for (size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j])))
      throw Error(Errc::parse, "bad digit in number '" + std::string(s) + "'");
  return BigInt(std::string(s));
}

BigInt pow10(long e) {
  BigInt p = 1;
  for (long i = 0; i < e; ++i) p *= 10;
  return p;
}

}  // namespace

Rat rat_parse(std::string_view text) {
  // strip spaces
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw Error(Errc::parse, "empty rational");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_int(text.substr(0, slash));
    BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) throw Error(Errc::parse, "zero denominator in '" + std::string(text) + "'");
    return Rat(num, den);
  }

  // decimal with optional exponent
  long exp10 = 0;
  std::string_view mantissa = text;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    BigInt ev = parse_int(text.substr(e + 1));
    if (ev < -18 || ev > 18) throw Error(Errc::parse, "exponent out of range in '" + std::string(text) + "'");
    exp10 = ev.convert_to<long>();
    mantissa = text.substr(0, e);
  }

  BigInt num;
  long frac_digits = 0;
  if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    std::string digits(mantissa.substr(0, dot));
    std::string_view frac = mantissa.substr(dot + 1);
    frac_digits = static_cast<long>(frac.size());
    if (digits.empty() || digits == "+" || digits == "-") digits += "0";
    bool negative = !digits.empty() && digits[0] == '-';
    BigInt whole = parse_int(digits);
    BigInt frac_val = frac.empty() ? BigInt(0) : parse_int(frac);
    num = whole * pow10(frac_digits);
    num += negative ? -frac_val : frac_val;
  } else {
    num = parse_int(mantissa);
  }

  Rat r(num, pow10(frac_digits));
  if (exp10 > 0) r *= Rat(pow10(exp10));
  if (exp10 < 0) r /= Rat(pow10(-exp10));
  return r;
}

std::string rat_str(const Rat& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

double rat_double(const Rat& value) { return value.convert_to<double>(); }

std::string rat_decimals(const Rat& value, int k) {
  if (k < 0) k = 0;
  BigInt scale = pow10(k);
  Rat scaled = value * Rat(scale);
  BigInt twice = numerator(scaled) * 2;
  BigInt den = denominator(scaled);
  // round half away from zero
  BigInt q;
  if (twice >= 0)
    q = (twice + den) / (2 * den);
  else
    q = -BigInt((-twice + den) / (2 * den));
  bool negative = q < 0;
  BigInt mag = negative ? BigInt(-q) : q;
  std::string digits = mag.str();
  if (static_cast<long>(digits.size()) <= k)
    digits = std::string(k + 1 - digits.size(), '0') + digits;
  std::string out = negative ? "-" : "";
  out += digits.substr(0, digits.size() - k);
  if (k > 0) out += "." + digits.substr(digits.size() - k);
  return out;
}

}  // namespace expsearch
