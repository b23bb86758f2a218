#include "plie/scalar.hpp"

#include <cctype>

#include "plie/errors.hpp"

namespace plie {

namespace {

bool valid_integer_text(const std::string& s) {
  if (s.empty()) return false;
  size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (size_t i = start; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Scalar scalar_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!valid_integer_text(s))
      throw InputError("not a rational number: \"" + s + "\"");
    return Scalar(Integer(s));
  }
  std::string num = s.substr(0, slash);
  std::string den = s.substr(slash + 1);
  if (!valid_integer_text(num) || !valid_integer_text(den))
    throw InputError("not a rational number: \"" + s + "\"");
  Integer d(den);
  if (d == 0) throw InputError("zero denominator: \"" + s + "\"");
  return Scalar(Integer(num), d);
}

std::string scalar_to_string(const Scalar& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

}  // namespace plie
