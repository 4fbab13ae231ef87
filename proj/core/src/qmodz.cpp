#include "torusdual/qmodz.hpp"

#include "torusdual/errors.hpp"
#include "torusdual/intlin.hpp"

namespace torusdual {

QmodZ::QmodZ(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw DomainError("QmodZ: zero denominator");
  Integer p = num, q = den;
  if (sgn(q) < 0) {
    p = -p;
    q = -q;
  }
  reduce_mod(p, q);
  Integer g = gcd_of(p, q);
  if (sgn(g) == 0) g = q;
  num_ = p / g;
  den_ = q / g;
}

QmodZ QmodZ::parse(const std::string& text) {
  auto slash = text.find('/');
  Integer p, q = 1;
  try {
    if (slash == std::string::npos) {
      p = Integer(text);
    } else {
      p = Integer(text.substr(0, slash));
      q = Integer(text.substr(slash + 1));
    }
  } catch (const std::invalid_argument&) {
    throw ContractViolation("malformed fraction \"" + text + "\"");
  }
  if (sgn(q) == 0) throw ContractViolation("fraction \"" + text + "\" has zero denominator");
  return {p, q};
}

std::string QmodZ::to_string() const {
  if (is_zero()) return "0";
  return num_.get_str() + "/" + den_.get_str();
}

QmodZ operator+(const QmodZ& a, const QmodZ& b) {
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

QVector zero_qvector(std::size_t n) { return QVector(n); }

bool is_zero(const QVector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

QVector add(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw ContractViolation("QVector add: size mismatch");
  QVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

QVector subtract(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw ContractViolation("QVector subtract: size mismatch");
  QVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Integer common_denominator(const QVector& v) {
  Integer d = 1;
  for (const auto& x : v) d = lcm_of(d, x.denominator());
  return d;
}

namespace {

// Entries of v as integers over a shared denominator d.
IntVector scaled(const QVector& v, const Integer& d) {
  IntVector x(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) x[i] = v[i].numerator() * (d / v[i].denominator());
  return x;
}

}  // namespace

QVector from_scaled(const IntVector& x, const Integer& d) {
  QVector r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = QmodZ(x[i], d);
  return r;
}

QVector multiply(const IntMatrix& m, const QVector& v) {
  if (v.size() != m.cols()) throw ContractViolation("multiply: dimension mismatch");
  Integer d = common_denominator(v);
  return from_scaled(m.apply(scaled(v, d)), d);
}

QmodZ dot(const IntVector& a, const QVector& v) {
  if (a.size() != v.size()) throw ContractViolation("dot: dimension mismatch");
  Integer d = common_denominator(v);
  return {torusdual::dot(a, scaled(v, d)), d};
}

std::optional<QVector> solve_qz(const IntMatrix& m, const QVector& rhs) {
  if (rhs.size() != m.rows()) throw ContractViolation("solve_qz: right-hand side has wrong length");
  SmithDecomposition s = snf(m);
  Integer den = common_denominator(rhs);
  IntVector c = s.U.apply(scaled(rhs, den));
  // Unknowns s = V^{-1} t satisfy D s = U rhs.
  IntVector num(m.cols());
  Integer total = den;
  for (std::size_t i = 0; i < s.rank; ++i) total = lcm_of(total, den * s.D(i, i));
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < s.rank) {
      num[i] = c[i] * (total / (den * s.D(i, i)));
    } else if (!divides(den, c[i])) {
      return std::nullopt;
    }
  }
  return from_scaled(s.V.apply(num), total);
}

}  // namespace torusdual
