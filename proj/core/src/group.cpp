#include "cyclix/group.hpp"

#include <algorithm>
#include <numeric>

#include "cyclix/error.hpp"

namespace cyclix {
namespace {

int parse_positive(const std::string& text, const std::string& context) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw Error(Errc::InvalidInput, "expected a positive integer in " + context);
  }
  if (used != text.size() || value < 1) throw Error(Errc::InvalidInput, "expected a positive integer in " + context);
  return value;
}

}  // namespace

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table, std::vector<std::string> labels, std::string name)
    : table_(std::move(table)), labels_(std::move(labels)), name_(std::move(name)) {
  const int n = order();
  if (n == 0) throw Error(Errc::InvalidGroup, "empty table");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n) throw Error(Errc::InvalidGroup, "table is not square");
    for (int v : row) {
      if (v < 0 || v >= n) throw Error(Errc::InvalidGroup, "product out of range");
    }
  }
  if (labels_.empty()) {
    for (int a = 0; a < n; ++a) labels_.push_back(std::to_string(a));
  }
  if (static_cast<int>(labels_.size()) != n) throw Error(Errc::InvalidGroup, "label count differs from order");
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
          throw Error(Errc::InvalidGroup, "not associative at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                              std::to_string(c) + ")");
        }
      }
    }
  }
  identity_ = -1;
  for (int e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw Error(Errc::InvalidGroup, "no identity element");
  inverse_.assign(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (mul(a, b) == identity_ && mul(b, a) == identity_) inverse_[static_cast<std::size_t>(a)] = b;
    }
    if (inverse_[static_cast<std::size_t>(a)] < 0) throw Error(Errc::InvalidGroup, "element " + std::to_string(a) + " has no inverse");
  }
}

FiniteGroup FiniteGroup::trivial() { return FiniteGroup({{0}}, {"e"}, "trivial"); }

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw Error(Errc::InvalidInput, "cyclic group order must be positive");
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
  }
  return FiniteGroup(std::move(t), {}, "cyclic:" + std::to_string(n));
}

FiniteGroup FiniteGroup::product(const std::vector<int>& orders) {
  if (orders.empty()) throw Error(Errc::InvalidInput, "product needs at least one factor");
  int n = 1;
  std::string name = "product:";
  for (std::size_t k = 0; k < orders.size(); ++k) {
    if (orders[k] < 1) throw Error(Errc::InvalidInput, "factor order must be positive");
    n *= orders[k];
    name += (k ? "," : "") + std::to_string(orders[k]);
  }
  auto digits = [&](int a) {
    std::vector<int> d(orders.size());
    for (std::size_t k = orders.size(); k-- > 0;) {
      d[k] = a % orders[k];
      a /= orders[k];
    }
    return d;
  };
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) {
    const auto da = digits(a);
    std::string label = "(";
    for (std::size_t k = 0; k < da.size(); ++k) label += (k ? "," : "") + std::to_string(da[k]);
    labels.push_back(label + ")");
    for (int b = 0; b < n; ++b) {
      const auto db = digits(b);
      int c = 0;
      for (std::size_t k = 0; k < orders.size(); ++k) c = c * orders[k] + (da[k] + db[k]) % orders[k];
      t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = c;
    }
  }
  return FiniteGroup(std::move(t), std::move(labels), std::move(name));
}

FiniteGroup FiniteGroup::symmetric(int k) {
  if (k < 1 || k > 5) throw Error(Errc::InvalidInput, "symmetric group preset supports 1..5 letters");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(k));
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const auto index_of = [&](const std::vector<int>& q) {
    return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  const std::size_t n = perms.size();
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) {
    std::string label = "[";
    for (int v : perms[a]) label += std::to_string(v);
    labels.push_back(label + "]");
    for (std::size_t b = 0; b < n; ++b) {
      // (a*b)(x) = a(b(x))
      std::vector<int> c(static_cast<std::size_t>(k));
      for (int x = 0; x < k; ++x) c[static_cast<std::size_t>(x)] = perms[a][static_cast<std::size_t>(perms[b][static_cast<std::size_t>(x)])];
      t[a][b] = index_of(c);
    }
  }
  return FiniteGroup(std::move(t), std::move(labels), "symmetric:" + std::to_string(k));
}

FiniteGroup FiniteGroup::from_preset(const std::string& text) {
  if (text == "trivial") return trivial();
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw Error(Errc::InvalidInput, "unknown group preset '" + text + "'");
  const std::string kind = text.substr(0, colon);
  const std::string args = text.substr(colon + 1);
  if (kind == "cyclic") return cyclic(parse_positive(args, text));
  if (kind == "symmetric") return symmetric(parse_positive(args, text));
  if (kind == "product") {
    std::vector<int> orders;
    std::size_t start = 0;
    while (start <= args.size()) {
      const auto comma = args.find(',', start);
      const auto end = comma == std::string::npos ? args.size() : comma;
      orders.push_back(parse_positive(args.substr(start, end - start), text));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return product(orders);
  }
  throw Error(Errc::InvalidInput, "unknown group preset '" + text + "'");
}

bool FiniteGroup::is_central(int z) const {
  if (z < 0 || z >= order()) return false;
  for (int a = 0; a < order(); ++a) {
    if (mul(z, a) != mul(a, z)) return false;
  }
  return true;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order(); ++a) {
    if (!is_central(a)) return false;
  }
  return true;
}

}  // namespace cyclix
