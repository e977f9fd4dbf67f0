#include "gclt/group.hpp"

#include <algorithm>
#include <stdexcept>

namespace gclt {

FiniteGroup::FiniteGroup(int order, std::vector<Elem> table, std::string spec)
    : order_(order), table_(std::move(table)), spec_(std::move(spec)) {
  if (order_ < 1) throw std::invalid_argument("group order must be positive");
  if (order_ > kMaxGroupOrder)
    throw std::invalid_argument("group order " + std::to_string(order_) +
                                " exceeds construction cap " +
                                std::to_string(kMaxGroupOrder));
  if (table_.size() != static_cast<std::size_t>(order_) * order_)
    throw std::invalid_argument("Cayley table size does not match order");

  inverse_.assign(order_, -1);
  for (Elem x = 0; x < order_; ++x) {
    for (Elem y = 0; y < order_; ++y) {
      if (mul(x, y) == 0) {
        inverse_[x] = y;
        break;
      }
    }
  }
  validate();
}

void FiniteGroup::validate() const {
  const int n = order_;
  for (const Elem v : table_)
    if (v < 0 || v >= n) throw std::invalid_argument("table entry out of range");

  for (Elem x = 0; x < n; ++x) {
    if (mul(0, x) != x || mul(x, 0) != x)
      throw std::invalid_argument("element 0 is not a two-sided identity");
    if (inverse_[x] < 0 || mul(x, inverse_[x]) != 0 || mul(inverse_[x], x) != 0)
      throw std::invalid_argument("element has no two-sided inverse");
  }

  // Latin-square property: every row and column is a permutation of 0..n-1.
  std::vector<char> seen(n);
  for (Elem x = 0; x < n; ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Elem y = 0; y < n; ++y) {
      if (seen[mul(x, y)]++) throw std::invalid_argument("row is not a permutation");
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (Elem y = 0; y < n; ++y) {
      if (seen[mul(y, x)]++) throw std::invalid_argument("column is not a permutation");
    }
  }

  if (n <= 64) {
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        for (Elem z = 0; z < n; ++z)
          if (mul(mul(x, y), z) != mul(x, mul(y, z)))
            throw std::invalid_argument("table is not associative");
  } else {
    // 10*n^2 seeded random triples above the exhaustive cutoff. Triples are
    // drawn in batches sharing (y, z) so y*z is computed once per batch.
    std::uint64_t state = 0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(n);
    auto next = [&state, n] {
      state ^= state << 13;
      state ^= state >> 7;
      state ^= state << 17;
      return static_cast<Elem>((state >> 16) % static_cast<std::uint64_t>(n));
    };
    for (long long batch = 0; batch < 10LL * n; ++batch) {
      const Elem y = next();
      const Elem z = next();
      const Elem yz = mul(y, z);
      for (int t = 0; t < n; ++t) {
        const Elem x = next();
        if (mul(mul(x, y), z) != mul(x, yz))
          throw std::invalid_argument("table is not associative");
      }
    }
  }
}

Elem FiniteGroup::pow(Elem x, long long e) const {
  if (x < 0 || x >= order_) throw std::out_of_range("element index out of range");
  if (e < 0) {
    x = inv(x);
    e = -e;
  }
  Elem acc = 0;
  Elem base = x;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

int FiniteGroup::element_order(Elem x) const {
  if (x < 0 || x >= order_) throw std::out_of_range("element index out of range");
  int k = 1;
  Elem y = x;
  while (y != 0) {
    y = mul(y, x);
    ++k;
  }
  return k;
}

std::vector<int> FiniteGroup::element_orders() const {
  std::vector<int> out(order_);
  for (Elem x = 0; x < order_; ++x) out[x] = element_order(x);
  return out;
}

std::map<int, int> FiniteGroup::order_profile() const {
  std::map<int, int> profile;
  for (const int o : element_orders()) ++profile[o];
  return profile;
}

nlohmann::json FiniteGroup::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (Elem x = 0; x < order_; ++x) {
    nlohmann::json row = nlohmann::json::array();
    for (Elem y = 0; y < order_; ++y) row.push_back(mul(x, y));
    rows.push_back(std::move(row));
  }
  return nlohmann::json{{"order", order_}, {"spec", spec_}, {"table", rows}};
}

FiniteGroup FiniteGroup::from_json(const nlohmann::json& j) {
  const int n = j.at("order").get<int>();
  const auto& rows = j.at("table");
  if (!rows.is_array() || rows.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("table must have one row per element");
  std::vector<Elem> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
      throw std::invalid_argument("table row has wrong length");
    for (const auto& v : row) flat.push_back(v.get<Elem>());
  }
  return FiniteGroup(n, std::move(flat), j.value("spec", std::string{}));
}

Subgroup::Subgroup(const FiniteGroup& parent, std::vector<Elem> elements)
    : parent_(&parent), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());

  const int n = parent.order();
  if (elements_.empty() || elements_.front() != 0)
    throw std::invalid_argument("subgroup must contain the identity");
  if (elements_.back() >= n || elements_.front() < 0)
    throw std::invalid_argument("subgroup element out of range");

  mask_.assign((static_cast<std::size_t>(n) + 63) / 64, 0);
  for (const Elem x : elements_) mask_[static_cast<std::size_t>(x) >> 6] |= 1ull << (x & 63);

  for (const Elem x : elements_) {
    if (!contains(parent.inv(x)))
      throw std::invalid_argument("subgroup is not closed under inverse");
    for (const Elem y : elements_)
      if (!contains(parent.mul(x, y)))
        throw std::invalid_argument("subgroup is not closed under product");
  }
  if (n % order() != 0)
    throw std::invalid_argument("subgroup order does not divide group order");
}

FiniteGroup Subgroup::as_group() const {
  const int k = order();
  std::vector<int> index(parent_->order(), -1);
  for (int i = 0; i < k; ++i) index[elements_[i]] = i;
  std::vector<Elem> table(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      table[static_cast<std::size_t>(i) * k + j] =
          index[parent_->mul(elements_[i], elements_[j])];
  return FiniteGroup(k, std::move(table));
}

}  // namespace gclt
