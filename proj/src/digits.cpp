#include "chiral/digits.hpp"

namespace chiral {

DigitString concat_right(const DigitString& x, int d) {
  DigitString::check_digit(d);
  std::string s = x.str();
  s.push_back(static_cast<char>('0' + d));
  return DigitString(s);
}

DigitString concat_left(int d, const DigitString& x) {
  DigitString::check_digit(d);
  std::string s(1, static_cast<char>('0' + d));
  s += x.str();
  return DigitString(s);
}

std::optional<DigitString> truncate_left(const DigitString& x, bool strip_leading_zeros) {
  std::string_view rest(x.str());
  rest.remove_prefix(1);
  if (strip_leading_zeros) {
    size_t i = rest.find_first_not_of('0');
    rest = (i == std::string_view::npos) ? std::string_view{} : rest.substr(i);
  }
  if (rest.empty()) return std::nullopt;
  return DigitString(rest);
}

std::optional<DigitString> truncate_right(const DigitString& x) {
  if (x.length() == 1) return std::nullopt;
  return DigitString(std::string_view(x.str()).substr(0, x.length() - 1));
}

}  // namespace chiral
