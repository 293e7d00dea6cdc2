#include "trop/rational.hpp"

#include <cctype>

#include "trop/errors.hpp"

namespace trop {

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rat parse_rational(const std::string& text) {
  auto bad = [&]() -> MalformedInputError {
    return MalformedInputError("not a rational literal: '" + text + "'");
  };
  std::string s = text;
  if (s.empty()) throw bad();

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den)) throw bad();
    Rat q{mpz_class(num), mpz_class(den)};
    if (q.get_den() == 0) throw bad();
    q.canonicalize();
    return q;
  }

  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
    bool neg = !ip.empty() && ip[0] == '-';
    if (!ip.empty() && (ip[0] == '-' || ip[0] == '+')) ip = ip.substr(1);
    if (ip.empty() && fp.empty()) throw bad();
    for (char c : ip + fp)
      if (!std::isdigit(static_cast<unsigned char>(c))) throw bad();
    mpz_class scale = 1;
    for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
    mpz_class whole = ip.empty() ? mpz_class(0) : mpz_class(ip);
    mpz_class frac = fp.empty() ? mpz_class(0) : mpz_class(fp);
    Rat q(whole * scale + frac, scale);
    if (neg) q = -q;
    q.canonicalize();
    return q;
  }

  if (!is_integer_token(s)) throw bad();
  return Rat(mpz_class(s));
}

std::string rat_to_string(const Rat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

mpz_class rat_floor(const Rat& x) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

mpz_class rat_ceil(const Rat& x) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

int sgn(const Rat& x) { return sgn(x.get_num()); }

}  // namespace trop
