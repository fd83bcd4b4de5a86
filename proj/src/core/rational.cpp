#include "core/rational.hpp"

#include <boost/integer/common_factor_rt.hpp>

#include <ostream>
#include <stdexcept>

namespace tamp {

Rational::Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

Rational::Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) {
  normalize();
}

void Rational::normalize() {
  if (den_ == 0) throw std::domain_error("Rational: zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Int g = boost::integer::gcd(num_ < 0 ? Int(-num_) : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("Rational: empty text");
  size_t pos = 0;
  bool neg = false;
  if (text[pos] == '+' || text[pos] == '-') {
    neg = text[pos] == '-';
    ++pos;
  }
  if (pos >= text.size())
    throw std::invalid_argument("Rational: malformed '" + text + "'");

  auto isDigits = [](const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };

  std::string body = text.substr(pos);
  Int num, den;
  if (auto slash = body.find('/'); slash != std::string::npos) {
    std::string n = body.substr(0, slash), d = body.substr(slash + 1);
    if (!isDigits(n) || !isDigits(d))
      throw std::invalid_argument("Rational: malformed '" + text + "'");
    num = Int(n);
    den = Int(d);
  } else if (auto dot = body.find('.'); dot != std::string::npos) {
    std::string ip = body.substr(0, dot), fp = body.substr(dot + 1);
    if (ip.empty() && fp.empty())
      throw std::invalid_argument("Rational: malformed '" + text + "'");
    if ((!ip.empty() && !isDigits(ip)) || (!fp.empty() && !isDigits(fp)))
      throw std::invalid_argument("Rational: malformed '" + text + "'");
    num = Int(ip.empty() ? "0" : ip);
    den = 1;
    for (char c : fp) {
      num = num * 10 + (c - '0');
      den *= 10;
    }
  } else {
    if (!isDigits(body))
      throw std::invalid_argument("Rational: malformed '" + text + "'");
    num = Int(body);
    den = 1;
  }
  if (neg) num = -num;
  return Rational(std::move(num), std::move(den));
}

double Rational::toDouble() const {
  return num_.convert_to<double>() / den_.convert_to<double>();
}

std::string Rational::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

Rational Rational::operator+(const Rational& o) const {
  return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
  return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
  return Rational(num_ * o.num_, den_ * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
  return Rational(num_ * o.den_, den_ * o.num_);
}

size_t Rational::hash() const {
  std::hash<std::string> h;
  return h(str());
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace tamp
