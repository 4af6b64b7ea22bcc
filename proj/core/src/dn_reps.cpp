#include "nimrep/dn_reps.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <regex>

#include "nimrep/errors.hpp"

namespace nimrep {

namespace {

constexpr double kMultiplicityTolerance = 1e-6;

double two_cos(int n, int k, int j) { return 2.0 * std::cos(2.0 * std::numbers::pi * k * j / n); }

std::vector<IntMatrix> words_from(const IntMatrix& s, const IntMatrix& t, int n, bool s_first) {
  // result[l] = product of the alternating word of length l starting with the given letter
  std::vector<IntMatrix> out{IntMatrix::identity(s.rows())};
  IntMatrix acc = out.front();
  for (int l = 1; l <= n; ++l) {
    const bool use_s = ((l % 2) == 1) == s_first;
    acc = acc * (use_s ? s : t);
    out.push_back(acc);
  }
  return out;
}

}  // namespace

std::string SimpleModule::name(int n) const {
  if (kind == Kind::ONE_DIM) return "V(" + std::to_string(epsilon) + "," + std::to_string(delta) + ")";
  return "V(" + std::to_string(n) + "," + std::to_string(k) + ")";
}

int SimpleModule::order_key() const noexcept {
  if (kind == Kind::TWO_DIM) return 4 + k;
  return (epsilon == 1 ? 0 : 2) + (delta == 1 ? 0 : 1);
}

std::vector<SimpleModule> simples(int n) {
  if (n < 3) throw PreconditionError("D_n requires n >= 3, got " + std::to_string(n));
  std::vector<SimpleModule> out{SimpleModule::one_dim(1, 1)};
  if (n % 2 == 0) {
    out.push_back(SimpleModule::one_dim(1, -1));
    out.push_back(SimpleModule::one_dim(-1, 1));
  }
  out.push_back(SimpleModule::one_dim(-1, -1));
  const int top = n % 2 == 0 ? (n - 2) / 2 : (n - 1) / 2;
  for (int k = 1; k <= top; ++k) out.push_back(SimpleModule::two_dim(k));
  return out;
}

void validate_simple(int n, const SimpleModule& v) {
  if (n < 3) throw PreconditionError("D_n requires n >= 3, got " + std::to_string(n));
  if (v.kind == SimpleModule::Kind::ONE_DIM) {
    if (std::abs(v.epsilon) != 1 || std::abs(v.delta) != 1)
      throw PreconditionError("one-dimensional module signs must be +1 or -1");
    if (v.epsilon != v.delta && n % 2 == 1)
      throw PreconditionError(v.name(n) + " is not a module for odd n=" + std::to_string(n));
    return;
  }
  const int top = n % 2 == 0 ? (n - 2) / 2 : (n - 1) / 2;
  if (v.k < 1 || v.k > top)
    throw PreconditionError("V(" + std::to_string(n) + ",k) requires 1 <= k <= " + std::to_string(top) + ", got k=" +
                            std::to_string(v.k));
}

SimpleModule parse_simple(int n, const std::string& text) {
  static const std::regex pattern(R"(\s*V\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) throw ParseError("expected V(a,b), got \"" + text + "\"", 0);
  const int a = std::stoi(m[1]);
  const int b = std::stoi(m[2]);
  SimpleModule v = std::abs(a) == 1 ? SimpleModule::one_dim(a, b) : SimpleModule::two_dim(b);
  if (v.kind == SimpleModule::Kind::TWO_DIM && a != n)
    throw PreconditionError(text + " does not belong to D_" + std::to_string(n));
  validate_simple(n, v);
  return v;
}

GeneratorMatrices kl_generator_matrices(int n, const SimpleModule& v) {
  validate_simple(n, v);
  if (v.kind == SimpleModule::Kind::ONE_DIM)
    return {{{1.0 + v.epsilon}}, {{1.0 + v.delta}}};
  const double angle = 2.0 * std::numbers::pi * v.k / n;
  const double c = std::cos(angle), s = std::sin(angle);
  return {{{2.0, 0.0}, {0.0, 0.0}}, {{1.0 + c, s}, {s, 1.0 - c}}};
}

double character(int n, const SimpleModule& v, int length, bool starts_with_s) {
  if (v.kind == SimpleModule::Kind::ONE_DIM) {
    // Alternating word of the given length: count the s and t letters.
    const int first = length - length / 2, second = length / 2;
    const int s_count = starts_with_s ? first : second;
    const int t_count = starts_with_s ? second : first;
    const int e = (s_count % 2 == 0) ? 1 : v.epsilon;
    const int d = (t_count % 2 == 0) ? 1 : v.delta;
    return e * d;
  }
  if (length % 2 == 1) return 0.0;
  return two_cos(n, v.k, length / 2);
}

std::string QuadraticCharPoly::to_string() const {
  if (exact) return exact->to_string();
  char buf[96];
  std::snprintf(buf, sizeof buf, "x^2 - %gx + %.12g", -c1, c0);
  return buf;
}

QuadraticCharPoly char_poly_two_dim(int n, int k) {
  validate_simple(n, SimpleModule::two_dim(k));
  QuadraticCharPoly p;
  p.c1 = -4.0;
  p.c0 = 2.0 - two_cos(n, k, 1);
  std::optional<int> twice_cos;
  if (3 * k == n) twice_cos = -1;
  if (4 * k == n) twice_cos = 0;
  if (6 * k == n) twice_cos = 1;
  if (twice_cos) p.exact = IntPolynomial({2 - *twice_cos, -4, 1});
  return p;
}

void Decomposition::add(const SimpleModule& v, int multiplicity) {
  if (multiplicity < 0) throw PreconditionError("negative multiplicity");
  if (multiplicity == 0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), v,
                             [](const auto& term, const SimpleModule& x) { return term.first < x; });
  if (it != terms_.end() && it->first == v)
    it->second += multiplicity;
  else
    terms_.insert(it, {v, multiplicity});
}

int Decomposition::multiplicity(const SimpleModule& v) const {
  for (const auto& [w, m] : terms_)
    if (w == v) return m;
  return 0;
}

int Decomposition::dimension() const {
  int d = 0;
  for (const auto& [v, m] : terms_) d += m * v.dimension();
  return d;
}

Decomposition& Decomposition::operator+=(const Decomposition& other) {
  if (n_ == 0) n_ = other.n_;
  if (other.n_ != 0 && other.n_ != n_) throw PreconditionError("decompositions over different D_n");
  for (const auto& [v, m] : other.terms_) add(v, m);
  return *this;
}

std::string Decomposition::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [v, m] : terms_) {
    if (!out.empty()) out += " ⊕ ";
    if (m != 1) out += std::to_string(m) + "·";
    out += v.name(n_);
  }
  return out;
}

Decomposition decompose(int n, const IntMatrix& theta_s, const IntMatrix& theta_t) {
  if (n < 3) throw PreconditionError("D_n requires n >= 3, got " + std::to_string(n));
  if (!theta_s.is_square() || theta_s.rows() != theta_t.rows() || theta_s.cols() != theta_t.cols())
    throw PreconditionError("A_s and A_t must be square of the same size");
  const std::size_t r = theta_s.rows();
  const IntMatrix id = IntMatrix::identity(r);
  const IntMatrix s = theta_s - id;
  const IntMatrix t = theta_t - id;
  if (s * s != id) throw NotAModuleError("(A_s - I)^2 = I");
  if (t * t != id) throw NotAModuleError("(A_t - I)^2 = I");
  const auto from_s = words_from(s, t, n, true);
  const auto from_t = words_from(s, t, n, false);
  if ((s * t).pow(static_cast<unsigned>(n)) != id)
    throw NotAModuleError("((A_s - I)(A_t - I))^" + std::to_string(n) + " = I");

  // Traces over all 2n elements: e, then both alternating words of each length 1..n-1, then w0.
  std::vector<std::pair<int, bool>> elements{{0, true}};
  std::vector<double> traces{static_cast<double>(r)};
  for (int l = 1; l < n; ++l) {
    elements.emplace_back(l, true);
    traces.push_back(from_s[l].trace().convert_to<double>());
    elements.emplace_back(l, false);
    traces.push_back(from_t[l].trace().convert_to<double>());
  }
  elements.emplace_back(n, true);
  traces.push_back(from_s[n].trace().convert_to<double>());

  Decomposition out(n);
  for (const auto& v : simples(n)) {
    double sum = 0;
    for (std::size_t i = 0; i < elements.size(); ++i)
      sum += character(n, v, elements[i].first, elements[i].second) * traces[i];
    const double raw = sum / (2.0 * n);
    const double rounded = std::round(raw);
    if (std::abs(raw - rounded) > kMultiplicityTolerance || rounded < 0)
      throw InternalError("multiplicity of " + v.name(n) + " is " + std::to_string(raw) + ", not an integer");
    out.add(v, static_cast<int>(rounded));
  }
  if (out.dimension() != static_cast<int>(r))
    throw InternalError("decomposition dimension " + std::to_string(out.dimension()) + " differs from rank " +
                        std::to_string(r));
  return out;
}

}  // namespace nimrep
