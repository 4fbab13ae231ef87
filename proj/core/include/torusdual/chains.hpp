#pragma once

#include "torusdual/group.hpp"
#include "torusdual/integer.hpp"
#include "torusdual/qmodz.hpp"

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace torusdual {

using Tuple = std::vector<Element>;

std::size_t ipow(std::size_t base, std::size_t exp);

/// Function on n-tuples of elements of a group of the given order, with values in Z^rank (or (Q/Z)^rank).
/// Tuples are indexed big-endian: (g_1, ..., g_n) -> sum g_i * order^(n-i).
template <class Value, class Tag>
class Table {
 public:
  Table() = default;
  Table(std::size_t group_order, std::size_t degree, std::size_t rank)
      : order_(group_order), degree_(degree), rank_(rank), data_(ipow(group_order, degree) * rank) {}

  std::size_t group_order() const { return order_; }
  std::size_t degree() const { return degree_; }
  std::size_t rank() const { return rank_; }
  std::size_t cells() const { return rank_ == 0 ? ipow(order_, degree_) : data_.size() / rank_; }

  std::size_t index(const Tuple& t) const {
    std::size_t idx = 0;
    for (Element g : t) idx = idx * order_ + g;
    return idx;
  }
  Tuple tuple(std::size_t idx) const {
    Tuple t(degree_);
    for (std::size_t i = degree_; i-- > 0;) {
      t[i] = idx % order_;
      idx /= order_;
    }
    return t;
  }

  std::span<Value> cell(std::size_t idx) { return {data_.data() + idx * rank_, rank_}; }
  std::span<const Value> cell(std::size_t idx) const { return {data_.data() + idx * rank_, rank_}; }
  std::vector<Value> value(const Tuple& t) const {
    auto c = cell(index(t));
    return {c.begin(), c.end()};
  }
  void set(const Tuple& t, const std::vector<Value>& v) {
    auto c = cell(index(t));
    for (std::size_t j = 0; j < rank_; ++j) c[j] = v[j];
  }
  void add(const Tuple& t, const std::vector<Value>& v) {
    auto c = cell(index(t));
    for (std::size_t j = 0; j < rank_; ++j) c[j] += v[j];
  }

  const std::vector<Value>& data() const { return data_; }
  std::vector<Value>& data() { return data_; }
  bool is_zero() const {
    for (const auto& x : data_)
      if (!(x == Value())) return false;
    return true;
  }

  friend Table operator+(Table a, const Table& b) {
    if (a.data_.size() != b.data_.size()) throw std::invalid_argument("Table: shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend bool operator==(const Table& a, const Table& b) {
    return a.order_ == b.order_ && a.degree_ == b.degree_ && a.rank_ == b.rank_ && a.data_ == b.data_;
  }

 private:
  std::size_t order_ = 1;
  std::size_t degree_ = 0;
  std::size_t rank_ = 0;
  std::vector<Value> data_;
};

struct ChainTag {};
struct CochainTag {};

/// n-chain: finitely supported sum of a (x) [g_1 | ... | g_n].
using Chain = Table<Integer, ChainTag>;
/// n-cochain with module values.
using Cochain = Table<Integer, CochainTag>;
/// n-cochain with values in a Q/Z-dual module, stored as functional coordinates.
using QCochain = Table<QmodZ, CochainTag>;

}  // namespace torusdual
