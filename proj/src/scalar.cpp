#include "midconvex/scalar.hpp"

#include <cctype>
#include <cmath>
#include <limits>

namespace midconvex {
namespace {

bool square_free(int d) {
  if (d < 2) return false;
  for (int p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Accepts `[+-]digits` or `[+-]digits/digits` with a nonzero denominator.
mpq_class parse_rational(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!is_digits(num) || !is_digits(den)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  if (!text.empty() && text.front() == '-') n = -n;
  mpq_class q(n, d);
  q.canonicalize();
  return q;
}

}  // namespace

int common_root(int lhs, int rhs) {
  if (lhs == 0) return rhs;
  if (rhs == 0 || rhs == lhs) return lhs;
  throw FieldMismatch("mixed quadratic fields sqrt" + std::to_string(lhs) + " and sqrt" +
                      std::to_string(rhs));
}

Scalar::Scalar(long num, long den) : a_(num, den) {
  if (den == 0) throw std::domain_error("zero denominator");
  a_.canonicalize();
}

Scalar::Scalar(mpq_class a, mpq_class b, int root) : a_(std::move(a)), b_(std::move(b)), root_(root) {
  if (!square_free(root)) {
    throw std::invalid_argument("sqrt" + std::to_string(root) + ": root must be square-free and >= 2");
  }
  a_.canonicalize();
  b_.canonicalize();
  normalize();
}

void Scalar::normalize() {
  if (b_ == 0) root_ = 0;
}

void Scalar::check_field(const Scalar& rhs) const { (void)common_root(root_, rhs.root_); }

int Scalar::sign() const {
  int sa = sgn(a_);
  int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: the term with the larger square wins.
  mpq_class lhs = a_ * a_;
  mpq_class rhs = b_ * b_ * root_;
  return lhs > rhs ? sa : sb;
}

double Scalar::to_double() const {
  double v = a_.get_d();
  if (root_ != 0) v += b_.get_d() * std::sqrt(static_cast<double>(root_));
  return v;
}

Scalar Scalar::inverse() const {
  if (sign() == 0) throw std::domain_error("division by zero");
  if (root_ == 0) {
    Scalar r;
    r.a_ = 1 / a_;
    return r;
  }
  mpq_class norm = a_ * a_ - b_ * b_ * root_;
  Scalar r;
  r.a_ = a_ / norm;
  r.b_ = -b_ / norm;
  r.root_ = root_;
  r.normalize();
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r(*this);
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  root_ = common_root(root_, rhs.root_);
  a_ += rhs.a_;
  if (rhs.root_ != 0) b_ += rhs.b_;
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  root_ = common_root(root_, rhs.root_);
  a_ -= rhs.a_;
  if (rhs.root_ != 0) b_ -= rhs.b_;
  normalize();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  int root = common_root(root_, rhs.root_);
  if (rhs.root_ == 0) {
    a_ *= rhs.a_;
    if (root_ != 0) b_ *= rhs.a_;
  } else if (root_ == 0) {
    b_ = a_ * rhs.b_;
    a_ *= rhs.a_;
  } else {
    mpq_class a = a_ * rhs.a_ + b_ * rhs.b_ * root;
    mpq_class b = a_ * rhs.b_ + b_ * rhs.a_;
    a_ = std::move(a);
    b_ = std::move(b);
  }
  root_ = root;
  normalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  check_field(rhs);
  if (rhs.root_ == 0) {
    if (rhs.a_ == 0) throw std::domain_error("division by zero");
    a_ /= rhs.a_;
    if (root_ != 0) b_ /= rhs.a_;
    normalize();
    return *this;
  }
  return *this *= rhs.inverse();
}

std::strong_ordering operator<=>(const Scalar& lhs, const Scalar& rhs) {
  if (lhs.root_ == 0 && rhs.root_ == 0) {
    int c = cmp(lhs.a_, rhs.a_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  int s = (lhs - rhs).sign();
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string Scalar::to_string() const {
  std::string out = a_.get_str();
  if (root_ == 0) return out;
  if (b_ > 0) {
    out += '+';
    out += b_.get_str();
  } else {
    out += '-';
    out += mpq_class(-b_).get_str();
  }
  out += "*sqrt";
  out += std::to_string(root_);
  return out;
}

Scalar Scalar::parse(std::string_view text) {
  auto star = text.find("*sqrt");
  if (star == std::string_view::npos) return Scalar(parse_rational(text));

  std::string_view root_text = text.substr(star + 5);
  if (!is_digits(root_text) || root_text.size() > 9) {
    throw std::invalid_argument("malformed root in '" + std::string(text) + "'");
  }
  int root = std::stoi(std::string(root_text));

  std::string_view coeffs = text.substr(0, star);
  // The rational part may carry its own leading sign; the separator is the
  // first sign after position 0.
  std::size_t sep = std::string_view::npos;
  for (std::size_t i = 1; i < coeffs.size(); ++i) {
    if (coeffs[i] == '+' || coeffs[i] == '-') {
      sep = i;
      break;
    }
  }
  if (sep == std::string_view::npos) {
    throw std::invalid_argument("quadratic value needs form p/q+r/s*sqrtD: '" + std::string(text) + "'");
  }
  mpq_class a = parse_rational(coeffs.substr(0, sep));
  mpq_class b = parse_rational(coeffs.substr(sep + 1));
  if (coeffs[sep] == '-') b = -b;
  return Scalar(std::move(a), std::move(b), root);
}

mpq_class rationalize(double value, long max_den) {
  if (!std::isfinite(value)) throw std::invalid_argument("cannot rationalize a non-finite value");
  if (max_den < 1) throw std::invalid_argument("denominator bound must be positive");
  bool negative = value < 0;
  double x = std::fabs(value);

  mpz_class h_prev(0), h(1), k_prev(1), k(0);
  double frac = x;
  mpz_class bound(max_den);
  for (int iter = 0; iter < 64; ++iter) {
    double fl = std::floor(frac);
    mpz_class a(fl);
    mpz_class h_next = a * h + h_prev;
    mpz_class k_next = a * k + k_prev;
    if (k_next > bound) {
      // Semiconvergent with the largest admissible multiplier, if it beats h/k.
      mpz_class m = (bound - k_prev) / k;
      if (m > 0) {
        mpq_class semi(m * h + h_prev, m * k + k_prev);
        mpq_class conv(h, k);
        semi.canonicalize();
        conv.canonicalize();
        double es = std::fabs(semi.get_d() - x);
        double ec = std::fabs(conv.get_d() - x);
        if (es < ec) {
          h = semi.get_num();
          k = semi.get_den();
        }
      }
      break;
    }
    h_prev = h;
    k_prev = k;
    h = h_next;
    k = k_next;
    double rest = frac - fl;
    if (rest < std::numeric_limits<double>::epsilon() * std::max(1.0, fl)) break;
    frac = 1.0 / rest;
  }
  mpq_class q(h, k);
  q.canonicalize();
  return negative ? mpq_class(-q) : q;
}

}  // namespace midconvex
