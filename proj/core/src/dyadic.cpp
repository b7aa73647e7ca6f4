#include "haken/dyadic.hpp"

#include <charconv>
#include <ostream>

#include "haken/error.hpp"

namespace haken {

Dyadic::Dyadic(BigInt numerator, unsigned exponent) : num_(std::move(numerator)), exp_(exponent) {
  normalize();
}

void Dyadic::normalize() {
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  if (exp_ == 0) return;
  const unsigned twos = static_cast<unsigned>(boost::multiprecision::lsb(abs(num_)));
  const unsigned shift = std::min(twos, exp_);
  num_ >>= shift;
  exp_ -= shift;
}

Dyadic Dyadic::pow2(int k) {
  if (k >= 0) return Dyadic(BigInt(1) << k);
  return Dyadic(BigInt(1), static_cast<unsigned>(-k));
}

Dyadic Dyadic::scaled(int k) const {
  if (k >= 0) {
    const unsigned ku = static_cast<unsigned>(k);
    if (ku <= exp_) return Dyadic(num_, exp_ - ku);
    return Dyadic(BigInt(num_ << (ku - exp_)), 0);
  }
  return Dyadic(num_, exp_ + static_cast<unsigned>(-k));
}

std::string Dyadic::to_string() const {
  return num_.str() + "/2^" + std::to_string(exp_);
}

Dyadic Dyadic::parse(std::string_view text) {
  const auto slash = text.find("/2^");
  if (slash == std::string_view::npos || slash == 0) throw FormatError("dyadic must look like a/2^k: " + std::string(text));
  const auto num_text = std::string(text.substr(0, slash));
  const auto exp_text = text.substr(slash + 3);
  unsigned exp = 0;
  auto [ptr, ec] = std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), exp);
  if (ec != std::errc() || ptr != exp_text.data() + exp_text.size()) {
    throw FormatError("bad dyadic exponent: " + std::string(text));
  }
  const std::size_t digits_from = (num_text[0] == '-') ? 1 : 0;
  if (num_text.size() == digits_from ||
      num_text.find_first_not_of("0123456789", digits_from) != std::string::npos) {
    throw FormatError("bad dyadic numerator: " + std::string(text));
  }
  return Dyadic(BigInt(num_text), exp);
}

Dyadic Dyadic::operator-() const {
  Dyadic r = *this;
  r.num_ = -r.num_;
  return r;
}

Dyadic& Dyadic::operator+=(const Dyadic& o) {
  if (exp_ >= o.exp_) {
    num_ += o.num_ << (exp_ - o.exp_);
  } else {
    num_ = (num_ << (o.exp_ - exp_)) + o.num_;
    exp_ = o.exp_;
  }
  normalize();
  return *this;
}

Dyadic& Dyadic::operator-=(const Dyadic& o) { return *this += -o; }

Dyadic& Dyadic::operator*=(const Dyadic& o) {
  num_ *= o.num_;
  exp_ += o.exp_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  const unsigned e = std::max(a.exp_, b.exp_);
  const BigInt lhs = a.num_ << (e - a.exp_);
  const BigInt rhs = b.num_ << (e - b.exp_);
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Dyadic& d) { return os << d.to_string(); }

}  // namespace haken
