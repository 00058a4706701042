#include "symtruss/rational.hpp"

#include <cctype>
#include <vector>

namespace symtruss {

std::pair<Int, Int> int_square_split(Int n) {
  Int s = 1, m = 1;
  if (n <= 0) return {s, n};
  for (Int p = 2; p * p <= n && p < 1 << 20; p = (p == 2 ? Int(3) : Int(p + 2))) {
    unsigned count = 0;
    while (n % p == 0) {
      n /= p;
      ++count;
    }
    for (unsigned k = 0; k + 1 < count; k += 2) s *= p;
    if (count % 2) m *= p;
  }
  if (n > 1) {
    Int r = boost::multiprecision::sqrt(n);
    if (r * r == n)
      s *= r;
    else
      m *= n;
  }
  return {s, m};
}

std::vector<Int> square_free_prime_factors(Int n) {
  std::vector<Int> out;
  if (n <= 1) return out;
  for (Int p = 2; p * p <= n && p < 1 << 20; p = (p == 2 ? Int(3) : Int(p + 2))) {
    if (n % p == 0) {
      out.push_back(p);
      n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::optional<Rat> parse_rational(const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::size_t pos = 0;
  bool neg = false;
  if (text[pos] == '+' || text[pos] == '-') {
    neg = text[pos] == '-';
    ++pos;
  }
  auto digits = [&](std::string& out) {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) out += text[pos++];
    return pos > start;
  };
  std::string ip;
  if (!digits(ip)) return std::nullopt;
  Rat value;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    std::string fp;
    if (!digits(fp)) return std::nullopt;
    if (pos != text.size()) return std::nullopt;
    Int den = 1;
    for (std::size_t k = 0; k < fp.size(); ++k) den *= 10;
    value = Rat(Int(ip + fp), den);
  } else if (pos < text.size() && text[pos] == '/') {
    ++pos;
    std::string dp;
    if (!digits(dp)) return std::nullopt;
    if (pos != text.size()) return std::nullopt;
    Int den(dp);
    if (den == 0) return std::nullopt;
    value = Rat(Int(ip), den);
  } else {
    if (pos != text.size()) return std::nullopt;
    value = Rat(Int(ip));
  }
  if (neg) value = -value;
  return value;
}

std::string rational_to_string(const Rat& q) {
  std::string s = rat_num(q).str();
  if (rat_den(q) != 1) s += "/" + rat_den(q).str();
  return s;
}

}  // namespace symtruss
