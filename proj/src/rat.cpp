#include "okb/rat.hpp"

#include <cctype>

#include "okb/errors.hpp"

namespace okb {

std::string to_string(const Rat& r) { return r.str(); }

Rat rat_from_string(std::string_view s) {
  // Accept [+-]digits or [+-]digits/digits; nothing else (no floats).
  auto bad = [&] { throw InputError("not a rational literal: '" + std::string(s) + "'"); };
  bool neg = false;
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
  std::size_t num_start = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == num_start) bad();
  Int num(std::string(s.substr(num_start, i - num_start)));
  if (neg) num = -num;
  if (i == s.size()) return Rat(num);
  if (s[i] != '/') bad();
  std::size_t den_start = ++i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == den_start || i != s.size()) bad();
  Int den(std::string(s.substr(den_start)));
  if (den == 0) throw InputError("zero denominator in '" + std::string(s) + "'");
  return Rat(num) / Rat(den);  // division canonicalizes to lowest terms
}

}  // namespace okb
