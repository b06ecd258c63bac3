#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace chiral {

// Base-10 digit sequence, most significant digit first. Concatenation and
// truncation are the primitive operations; conversion to an arbitrary
// precision natural happens only at primality-test boundaries.
//
// Values are immutable after construction and always hold at least one
// digit. Leading zeros are representable (truncating "103" from the left
// yields "03"); is_canonical() distinguishes the canonical form.
class DigitString {
 public:
  explicit DigitString(std::string_view decimal) : digits_(decimal) {
    if (digits_.empty()) throw std::invalid_argument("empty digit string");
    for (char c : digits_)
      if (c < '0' || c > '9')
        throw std::invalid_argument("not a decimal digit string: \"" +
                                    std::string(decimal) + "\"");
  }

  static DigitString single(int d) {
    check_digit(d);
    return DigitString(std::string(1, static_cast<char>('0' + d)));
  }

  static DigitString from_value(const mpz_class& v) {
    if (v < 0) throw std::invalid_argument("negative value");
    return DigitString(v.get_str());
  }

  static DigitString from_value(uint64_t v) { return DigitString(std::to_string(v)); }

  size_t length() const { return digits_.size(); }

  // i = 0 addresses the most significant digit.
  int digit(size_t i) const { return digits_.at(i) - '0'; }
  int first_digit() const { return digits_.front() - '0'; }
  int last_digit() const { return digits_.back() - '0'; }

  bool is_canonical() const { return digits_.size() == 1 || digits_.front() != '0'; }

  // Strips leading zeros; all-zero input collapses to "0".
  DigitString canonicalized() const {
    size_t i = digits_.find_first_not_of('0');
    if (i == std::string::npos) return single(0);
    return DigitString(std::string_view(digits_).substr(i));
  }

  const std::string& str() const { return digits_; }

  mpz_class to_mpz() const { return mpz_class(digits_, 10); }

  // Fits iff the value is < 2^64; 19-digit values may overflow either way.
  std::optional<uint64_t> to_u64() const {
    if (digits_.size() > 20) return std::nullopt;
    uint64_t v = 0;
    for (char c : digits_) {
      uint64_t d = static_cast<uint64_t>(c - '0');
      if (v > (UINT64_MAX - d) / 10) return std::nullopt;
      v = v * 10 + d;
    }
    return v;
  }

  uint32_t digit_sum() const {
    uint32_t s = 0;
    for (char c : digits_) s += static_cast<uint32_t>(c - '0');
    return s;
  }

  bool operator==(const DigitString& o) const = default;

  // Numeric order for canonical values: shorter first, then lexicographic.
  std::strong_ordering operator<=>(const DigitString& o) const {
    if (auto c = digits_.size() <=> o.digits_.size(); c != 0) return c;
    return digits_.compare(o.digits_) <=> 0;
  }

  static void check_digit(int d) {
    if (d < 0 || d > 9) throw std::invalid_argument("digit out of range 0..9");
  }

 private:
  std::string digits_;
};

DigitString concat_right(const DigitString& x, int d);
DigitString concat_left(int d, const DigitString& x);

// Empty (no digits remain) is std::nullopt, a legitimate chain terminator.
std::optional<DigitString> truncate_left(const DigitString& x, bool strip_leading_zeros);
std::optional<DigitString> truncate_right(const DigitString& x);

}  // namespace chiral
