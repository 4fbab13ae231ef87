#include "torusdual/group.hpp"

#include "torusdual/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace torusdual {

FiniteGroup::FiniteGroup(std::vector<std::vector<Element>> table, std::vector<std::string> labels)
    : table_(std::move(table)), labels_(std::move(labels)) {
  const std::size_t n = table_.size();
  if (n == 0) throw ContractViolation("FiniteGroup: empty table");
  for (const auto& row : table_) {
    if (row.size() != n) throw ContractViolation("FiniteGroup: table is not square");
    for (Element x : row)
      if (x >= n) throw ContractViolation("FiniteGroup: table entry out of range");
  }
  for (Element a = 0; a < n; ++a)
    if (table_[0][a] != a || table_[a][0] != a) throw ContractViolation("FiniteGroup: element 0 is not the identity");
  inverse_.assign(n, n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b)
      if (table_[a][b] == 0) {
        if (table_[b][a] != 0) throw ContractViolation("FiniteGroup: left and right inverses differ");
        inverse_[a] = b;
        break;
      }
    if (inverse_[a] == n) throw ContractViolation("FiniteGroup: element " + std::to_string(a) + " has no inverse");
  }
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
          std::ostringstream os;
          os << "FiniteGroup: associativity fails at (" << a << ", " << b << ", " << c << ")";
          throw ContractViolation(os.str());
        }
  if (labels_.empty())
    for (Element a = 0; a < n; ++a) labels_.push_back(std::to_string(a));
  if (labels_.size() != n) throw ContractViolation("FiniteGroup: wrong number of labels");
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  if (n == 0) throw ContractViolation("cyclic: order must be positive");
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FiniteGroup(std::move(t));
}

namespace {

std::string cycle_notation(const Permutation& p) {
  std::string s;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    s += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) s += " ";
      s += std::to_string(j + 1);
      first = false;
      j = p[j];
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

}  // namespace

FiniteGroup FiniteGroup::from_permutations(const std::vector<Permutation>& generators) {
  std::size_t m = 0;
  for (const auto& p : generators) m = std::max(m, p.size());
  auto pad = [m](Permutation p) {
    for (std::size_t i = p.size(); i < m; ++i) p.push_back(i);
    return p;
  };
  std::vector<Permutation> gens;
  for (const auto& p : generators) {
    Permutation q = pad(p);
    std::vector<bool> hit(m, false);
    for (auto x : q) {
      if (x >= m || hit[x]) throw ContractViolation("from_permutations: generator is not a permutation");
      hit[x] = true;
    }
    gens.push_back(std::move(q));
  }
  Permutation id(m);
  for (std::size_t i = 0; i < m; ++i) id[i] = i;
  std::vector<Permutation> elems{id};
  std::map<Permutation, Element> index{{id, 0}};
  auto compose = [m](const Permutation& p, const Permutation& q) {
    Permutation r(m);
    for (std::size_t i = 0; i < m; ++i) r[i] = p[q[i]];
    return r;
  };
  for (std::size_t k = 0; k < elems.size(); ++k)
    for (const auto& s : gens) {
      Permutation r = compose(elems[k], s);
      if (index.emplace(r, elems.size()).second) elems.push_back(r);
      if (elems.size() > 100000) throw SizeLimitExceeded("from_permutations: group too large");
    }
  const std::size_t n = elems.size();
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = index.at(compose(elems[a], elems[b]));
  std::vector<std::string> labels;
  for (const auto& p : elems) labels.push_back(cycle_notation(p));
  FiniteGroup g(std::move(t), std::move(labels));
  g.permutations_ = std::move(elems);
  return g;
}

FiniteGroup FiniteGroup::symmetric3() { return from_permutations({{1, 0, 2}, {0, 2, 1}}); }

Element FiniteGroup::power(Element a, long k) const {
  Element base = k < 0 ? inv(a) : a;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  Element r = 0;
  for (unsigned long i = 0; i < e % order(); ++i) r = mul(r, base);
  return r;
}

std::size_t FiniteGroup::element_order(Element a) const {
  std::size_t k = 1;
  for (Element x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (Element a = 0; a < order(); ++a)
    for (Element b = 0; b < a; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool FiniteGroup::is_cyclic() const {
  for (Element a = 0; a < order(); ++a)
    if (element_order(a) == order()) return true;
  return false;
}

std::vector<Element> FiniteGroup::generators() const {
  std::vector<Element> gens;
  Subgroup h = generated_subgroup(*this, gens);
  for (Element a = 1; a < order() && h.order() < order(); ++a) {
    if (h.index_of(a) != h.order()) continue;
    gens.push_back(a);
    h = generated_subgroup(*this, gens);
  }
  return gens;
}

std::vector<std::vector<std::size_t>> FiniteGroup::words(const std::vector<Element>& gens) const {
  std::vector<std::vector<std::size_t>> w(order());
  std::vector<bool> seen(order(), false);
  seen[0] = true;
  std::deque<Element> queue{0};
  while (!queue.empty()) {
    Element x = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Element y = mul(x, gens[i]);
      if (seen[y]) continue;
      seen[y] = true;
      w[y] = w[x];
      w[y].push_back(i);
      queue.push_back(y);
    }
  }
  for (Element a = 0; a < order(); ++a)
    if (!seen[a]) throw ContractViolation("FiniteGroup::words: elements do not generate the group");
  return w;
}

std::size_t Subgroup::index_of(Element parent) const {
  auto it = std::lower_bound(embedding.begin(), embedding.end(), parent);
  if (it == embedding.end() || *it != parent) return embedding.size();
  return static_cast<std::size_t>(it - embedding.begin());
}

Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<Element>& gens) {
  std::set<Element> elems{0};
  std::deque<Element> queue{0};
  while (!queue.empty()) {
    Element x = queue.front();
    queue.pop_front();
    for (Element s : gens) {
      Element y = g.mul(x, s);
      if (elems.insert(y).second) queue.push_back(y);
    }
  }
  std::vector<Element> embedding(elems.begin(), elems.end());
  const std::size_t n = embedding.size();
  Subgroup h{nullptr, embedding};
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back(g.label(embedding[a]));
    for (std::size_t b = 0; b < n; ++b) t[a][b] = h.index_of(g.mul(embedding[a], embedding[b]));
  }
  h.group = std::make_shared<const FiniteGroup>(std::move(t), std::move(labels));
  return h;
}

std::vector<Subgroup> subgroups(const FiniteGroup& g, std::size_t bound) {
  const std::size_t n = g.order();
  if (n > bound)
    throw SizeLimitExceeded("subgroups: group order " + std::to_string(n) + " exceeds bound " + std::to_string(bound));
  // Joins <H, a> until no new subgroup appears; every subgroup is reached along a chain of such joins.
  std::set<std::vector<Element>> seen;
  std::vector<Subgroup> out;
  std::vector<std::vector<Element>> gens_of;
  auto consider = [&](const std::vector<Element>& gens) {
    Subgroup h = generated_subgroup(g, gens);
    if (seen.insert(h.embedding).second) {
      out.push_back(std::move(h));
      gens_of.push_back(gens);
    }
  };
  consider({});
  for (std::size_t k = 0; k < out.size(); ++k)
    for (Element a = 1; a < n; ++a) {
      if (out[k].index_of(a) != out[k].order()) continue;
      std::vector<Element> gens = gens_of[k];
      gens.push_back(a);
      consider(gens);
    }
  std::sort(out.begin(), out.end(), [](const Subgroup& x, const Subgroup& y) {
    if (x.order() != y.order()) return x.order() < y.order();
    return x.embedding < y.embedding;
  });
  return out;
}

std::vector<Element> right_coset_representatives(const FiniteGroup& g, const Subgroup& h) {
  std::vector<bool> covered(g.order(), false);
  std::vector<Element> reps;
  for (Element x = 0; x < g.order(); ++x) {
    if (covered[x]) continue;
    reps.push_back(x);
    for (Element k : h.embedding) covered[g.mul(k, x)] = true;
  }
  return reps;
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  for (Element x = 0; x < g.order(); ++x)
    for (Element k : h.embedding)
      if (h.index_of(g.mul(g.mul(x, k), g.inv(x))) == h.order()) return false;
  return true;
}

}  // namespace torusdual
