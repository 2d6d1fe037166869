#include "gp/vertex_group.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>

namespace gp {

VertexGroupSpec VertexGroupSpec::cyclic(int n) {
  if (n < 2) throw std::invalid_argument("cyclic group order must be >= 2");
  VertexGroupSpec s;
  s.kind_ = VertexGroupKind::Cyclic;
  s.modulus_ = n;
  return s;
}

VertexGroupSpec VertexGroupSpec::integers() {
  VertexGroupSpec s;
  s.kind_ = VertexGroupKind::IntCyclic;
  return s;
}

VertexGroupSpec VertexGroupSpec::table(std::vector<std::vector<int>> mul,
                                       std::vector<int> generators) {
  const int n = static_cast<int>(mul.size());
  if (n < 1) throw std::invalid_argument("empty multiplication table");
  for (const auto& row : mul) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("multiplication table is not square");
    for (int x : row)
      if (x < 0 || x >= n)
        throw std::invalid_argument("table entry out of range");
  }
  // Index 0 must act as the identity.
  for (int i = 0; i < n; ++i)
    if (mul[0][i] != i || mul[i][0] != i)
      throw std::invalid_argument("table element 0 is not the identity");
  // Associativity.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
          throw std::invalid_argument("multiplication table is not associative");
  // Inverses.
  std::vector<int> inv(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (mul[a][b] == 0 && mul[b][a] == 0) inv[a] = b;
    if (inv[a] < 0) throw std::invalid_argument("table element has no inverse");
  }
  if (generators.empty())
    throw std::invalid_argument("table group needs at least one generator");
  for (int g : generators)
    if (g <= 0 || g >= n)
      throw std::invalid_argument("table generator index out of range");
  // Closure of the (symmetrised) generators must reach every element,
  // computing word lengths along the way.
  std::vector<int> wlen(n, -1);
  wlen[0] = 0;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int a = queue.front();
    queue.pop_front();
    for (int g : generators) {
      for (int step : {mul[a][g], mul[a][inv[g]]}) {
        if (wlen[step] < 0) {
          wlen[step] = wlen[a] + 1;
          queue.push_back(step);
        }
      }
    }
  }
  if (std::find(wlen.begin(), wlen.end(), -1) != wlen.end())
    throw std::invalid_argument("table generators do not generate the group");

  VertexGroupSpec s;
  s.kind_ = VertexGroupKind::Table;
  s.modulus_ = n;
  s.mul_ = std::move(mul);
  s.inv_ = std::move(inv);
  s.gens_ = std::move(generators);
  s.wlen_ = std::move(wlen);
  return s;
}

std::optional<std::int64_t> VertexGroupSpec::order() const {
  if (kind_ == VertexGroupKind::IntCyclic) return std::nullopt;
  return modulus_;
}

void VertexGroupSpec::check_payload(std::int64_t p) const {
  switch (kind_) {
    case VertexGroupKind::Cyclic:
    case VertexGroupKind::Table:
      if (p < 0 || p >= modulus_)
        throw std::invalid_argument("payload out of range for finite group");
      break;
    case VertexGroupKind::IntCyclic:
      break;
  }
}

std::int64_t VertexGroupSpec::compose(std::int64_t a, std::int64_t b) const {
  check_payload(a);
  check_payload(b);
  switch (kind_) {
    case VertexGroupKind::Cyclic:
      return (a + b) % modulus_;
    case VertexGroupKind::IntCyclic:
      return a + b;
    case VertexGroupKind::Table:
      return mul_[a][b];
  }
  return 0;
}

std::int64_t VertexGroupSpec::inverse(std::int64_t a) const {
  check_payload(a);
  switch (kind_) {
    case VertexGroupKind::Cyclic:
      return a == 0 ? 0 : modulus_ - a;
    case VertexGroupKind::IntCyclic:
      return -a;
    case VertexGroupKind::Table:
      return inv_[a];
  }
  return 0;
}

std::int64_t VertexGroupSpec::word_length(std::int64_t a) const {
  check_payload(a);
  switch (kind_) {
    case VertexGroupKind::Cyclic:
      return std::min(a, modulus_ - a);
    case VertexGroupKind::IntCyclic:
      return std::llabs(a);
    case VertexGroupKind::Table:
      return wlen_[a];
  }
  return 0;
}

std::vector<std::int64_t> VertexGroupSpec::enumerate_nonidentity(int cap) const {
  if (cap < 1) throw std::invalid_argument("enumeration cap must be >= 1");
  std::vector<std::int64_t> out;
  switch (kind_) {
    case VertexGroupKind::Cyclic:
    case VertexGroupKind::Table:
      for (int p = 1; p < modulus_; ++p) out.push_back(p);
      break;
    case VertexGroupKind::IntCyclic:
      for (int p = -cap; p <= cap; ++p)
        if (p != 0) out.push_back(p);
      break;
  }
  return out;
}

std::string VertexGroupSpec::payload_text(std::int64_t p) const {
  return std::to_string(p);
}

bool VertexGroupSpec::operator==(const VertexGroupSpec& o) const {
  return kind_ == o.kind_ && modulus_ == o.modulus_ && mul_ == o.mul_ &&
         gens_ == o.gens_;
}

}  // namespace gp
