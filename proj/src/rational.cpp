#include "susy/rational.hpp"

#include <cctype>

namespace susy {

Rational::Rational(long num, long den) {
  if (den == 0) throw domain_error("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::from_string(const std::string& text) {
  // mpq_set_str is lenient about whitespace and bases; validate shape first.
  auto digits = [](const std::string& s, size_t from, size_t to) {
    if (from >= to) return false;
    for (size_t i = from; i < to; ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  auto integer_like = [&](const std::string& s) {
    size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    return digits(s, start, s.size());
  };
  size_t slash = text.find('/');
  bool ok;
  if (slash == std::string::npos) {
    ok = integer_like(text);
  } else {
    ok = integer_like(text.substr(0, slash)) && digits(text, slash + 1, text.size());
  }
  if (!ok) throw parse_error("invalid rational literal: '" + text + "'");

  mpq_class v;
  if (v.set_str(text, 10) != 0) throw parse_error("invalid rational literal: '" + text + "'");
  if (v.get_den() == 0) throw parse_error("zero denominator in rational literal: '" + text + "'");
  v.canonicalize();
  return Rational(std::move(v));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw domain_error("inverse of zero");
  return Rational(mpq_class(1) / v_);
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  if (is_zero() && e < 0) throw domain_error("zero raised to a negative power");
  mpq_class base = e < 0 ? (mpq_class(1) / v_) : v_;
  unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  mpq_class out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), k);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), k);
  // base was canonical, so out stays canonical.
  return Rational(std::move(out));
}

}  // namespace susy
