#pragma once

#include "torusdual/int_matrix.hpp"
#include "torusdual/integer.hpp"

#include <optional>
#include <string>
#include <vector>

namespace torusdual {

/// Element of Q/Z stored as a reduced fraction p/q with 0 <= p < q.
class QmodZ {
 public:
  QmodZ() = default;
  QmodZ(const Integer& num, const Integer& den);
  /// Parses "p/q" or an integer literal. Throws ContractViolation on malformed input.
  static QmodZ parse(const std::string& text);

  const Integer& numerator() const { return num_; }
  const Integer& denominator() const { return den_; }
  bool is_zero() const { return sgn(num_) == 0; }
  /// Additive order, equal to the reduced denominator.
  const Integer& order() const { return den_; }
  std::string to_string() const;

  QmodZ operator-() const { return {-num_, den_}; }
  friend QmodZ operator+(const QmodZ& a, const QmodZ& b);
  friend QmodZ operator-(const QmodZ& a, const QmodZ& b) { return a + (-b); }
  friend QmodZ operator*(const Integer& k, const QmodZ& a) { return {k * a.num_, a.den_}; }
  QmodZ& operator+=(const QmodZ& b) { return *this = *this + b; }
  friend bool operator==(const QmodZ& a, const QmodZ& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

 private:
  Integer num_ = 0;
  Integer den_ = 1;
};

using QVector = std::vector<QmodZ>;

QVector zero_qvector(std::size_t n);
bool is_zero(const QVector& v);
QVector add(const QVector& a, const QVector& b);
QVector subtract(const QVector& a, const QVector& b);
/// M * v with integer M.
QVector multiply(const IntMatrix& m, const QVector& v);
/// Sum_i a_i v_i for integer a.
QmodZ dot(const IntVector& a, const QVector& v);
/// The element x/d for each integer entry x.
QVector from_scaled(const IntVector& x, const Integer& d);
/// Least common denominator of the entries.
Integer common_denominator(const QVector& v);

/// Some t in (Q/Z)^cols with M t = rhs, or nullopt when rhs is outside the image.
std::optional<QVector> solve_qz(const IntMatrix& m, const QVector& rhs);

}  // namespace torusdual
