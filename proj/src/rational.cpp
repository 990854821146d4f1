#include "ksgraph/rational.hpp"

#include "ksgraph/error.hpp"

namespace ksg {

Rat parse_rational(const std::string& text) {
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty rational literal");
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rat(Int(text));
    }
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + text + "'");
    return Rat(num, den);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "bad rational literal '" + text + "'");
  }
}

std::string rational_to_string(const Rat& value) {
  const Int num = boost::multiprecision::numerator(value);
  const Int den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rat& value) { return value.convert_to<double>(); }

}  // namespace ksg
