#include "nimrep/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

#include "nimrep/errors.hpp"

namespace nimrep {

IntPolynomial::IntPolynomial(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long long> ascending) {
  for (long long c : ascending) coeffs_.emplace_back(c);
  trim();
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coefficient(int power) const {
  if (power < 0 || power > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(power)];
}

BigInt IntPolynomial::leading() const { return is_zero() ? BigInt(0) : coeffs_.back(); }

IntPolynomial IntPolynomial::derivative() const {
  std::vector<BigInt> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * static_cast<long long>(i));
  return IntPolynomial(std::move(d));
}

BigInt IntPolynomial::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) g = boost::multiprecision::gcd(g, c);
  return boost::multiprecision::abs(g);
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return {};
  BigInt c = content();
  if (leading() < 0) c = -c;
  std::vector<BigInt> out;
  out.reserve(coeffs_.size());
  for (const auto& v : coeffs_) out.push_back(v / c);
  return IntPolynomial(std::move(out));
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double IntPolynomial::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->convert_to<double>();
  return acc;
}

IntMatrix IntPolynomial::evaluate(const IntMatrix& m) const {
  if (!m.is_square()) throw PreconditionError("polynomial evaluated at non-square matrix");
  IntMatrix acc = IntMatrix::zero(m.rows(), m.cols());
  const IntMatrix id = IntMatrix::identity(m.rows());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * m + id * (*it);
  return acc;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] -= b.coeffs_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int p = degree(); p >= 0; --p) {
    BigInt c = coeffs_[static_cast<std::size_t>(p)];
    if (c == 0) continue;
    const bool negative = c < 0;
    BigInt mag = negative ? BigInt(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || p == 0) os << mag;
    if (p >= 1) os << 'x';
    if (p >= 2) os << '^' << p;
  }
  return os.str();
}

IntPolynomial IntPolynomial::parse(std::string_view text) {
  std::vector<BigInt> coeffs;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_int = [&](BigInt& out) {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) return false;
    out = BigInt(std::string(text.substr(start, i - start)));
    return true;
  };
  skip();
  if (i == text.size()) throw ParseError("empty polynomial", 0);
  bool any_term = false;
  while (true) {
    skip();
    if (i == text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (any_term) {
      throw ParseError("expected '+' or '-' in polynomial", i);
    }
    BigInt coeff = 1;
    const bool has_coeff = read_int(coeff);
    skip();
    if (has_coeff && i < text.size() && text[i] == '*') {
      ++i;
      skip();
    }
    int power = 0;
    if (i < text.size() && text[i] == 'x') {
      ++i;
      power = 1;
      skip();
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip();
        BigInt e;
        const std::size_t at = i;
        if (!read_int(e)) throw ParseError("expected exponent", at);
        power = e.convert_to<int>();
      }
    } else if (!has_coeff) {
      throw ParseError("expected coefficient or 'x'", i);
    }
    if (coeffs.size() <= static_cast<std::size_t>(power)) coeffs.resize(static_cast<std::size_t>(power) + 1);
    coeffs[static_cast<std::size_t>(power)] += sign * coeff;
    any_term = true;
  }
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw PreconditionError("division by zero polynomial");
  std::vector<BigInt> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) {
    if (a.is_zero()) return {};
    throw InternalError("inexact polynomial division");
  }
  std::vector<BigInt> quot(static_cast<std::size_t>(a.degree() - db + 1));
  const BigInt lb = b.leading();
  for (int p = a.degree(); p >= db; --p) {
    BigInt& top = rem[static_cast<std::size_t>(p)];
    if (top == 0) continue;
    if (top % lb != 0) throw InternalError("inexact polynomial division");
    BigInt q = top / lb;
    quot[static_cast<std::size_t>(p - db)] = q;
    for (int k = 0; k <= db; ++k) rem[static_cast<std::size_t>(p - db + k)] -= q * b.coefficient(k);
  }
  for (const auto& r : rem)
    if (r != 0) throw InternalError("inexact polynomial division");
  return IntPolynomial(std::move(quot));
}

namespace {

IntPolynomial pseudo_remainder(IntPolynomial a, const IntPolynomial& b) {
  const BigInt lb = b.leading();
  while (!a.is_zero() && a.degree() >= b.degree()) {
    const int shift = a.degree() - b.degree();
    std::vector<BigInt> shifted(static_cast<std::size_t>(shift), BigInt(0));
    for (const auto& c : b.coefficients()) shifted.push_back(c * a.leading());
    a = (a * IntPolynomial::constant(lb)) - IntPolynomial(std::move(shifted));
  }
  return a;
}

}  // namespace

IntPolynomial gcd(IntPolynomial a, IntPolynomial b) {
  a = a.primitive_part();
  b = b.primitive_part();
  while (!b.is_zero()) {
    IntPolynomial r = pseudo_remainder(a, b).primitive_part();
    a = std::move(b);
    b = std::move(r);
  }
  return a.primitive_part();
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
  if (p.degree() <= 0) return p.primitive_part();
  IntPolynomial g = gcd(p, p.derivative());
  return divide_exact(p.primitive_part(), g);
}

IntPolynomial characteristic_polynomial(const IntMatrix& m) {
  if (!m.is_square()) throw PreconditionError("characteristic polynomial of non-square matrix");
  const std::size_t n = m.rows();
  std::vector<BigInt> c(n + 1);
  c[n] = 1;
  IntMatrix mk = IntMatrix::zero(n, n);
  const IntMatrix id = IntMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk + id * c[n - k + 1];
    BigInt t = (m * mk).trace();
    if (t % static_cast<long long>(k) != 0) throw InternalError("Faddeev-LeVerrier division not exact");
    c[n - k] = -t / static_cast<long long>(k);
  }
  return IntPolynomial(std::move(c));
}

}  // namespace nimrep
