#include "cyclix/algebra.hpp"

#include "cyclix/error.hpp"

namespace cyclix {
namespace {

std::string basis_name(const std::vector<std::string>& labels, std::size_t i) { return labels[i]; }

int parse_count(const std::string& text, const std::string& context) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw Error(Errc::InvalidInput, "expected a positive integer in '" + context + "'");
  }
  if (used != text.size() || value < 1) throw Error(Errc::InvalidInput, "expected a positive integer in '" + context + "'");
  return value;
}

}  // namespace

FiniteAlgebra::FiniteAlgebra(ScalarDomain dom, std::vector<std::string> labels, SparseVec unit,
                             std::vector<std::vector<SparseVec>> table, std::string name)
    : dom_(dom), labels_(std::move(labels)), name_(std::move(name)) {
  const std::size_t d = labels_.size();
  if (d == 0) throw Error(Errc::DimensionMismatch, "algebra of dimension 0");
  if (table.size() != d) throw Error(Errc::DimensionMismatch, "table has " + std::to_string(table.size()) + " rows, expected " + std::to_string(d));
  table_.resize(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (table[i].size() != d) throw Error(Errc::DimensionMismatch, "table row " + std::to_string(i) + " has wrong length");
    for (std::size_t j = 0; j < d; ++j) {
      SparseVec v = canonicalize(std::move(table[i][j]), dom_);
      if (!v.empty() && v.back().index >= d) throw Error(Errc::DimensionMismatch, "product coefficient out of range");
      table_[i].push_back(std::move(v));
    }
  }
  unit_ = canonicalize(std::move(unit), dom_);
  if (!unit_.empty() && unit_.back().index >= d) throw Error(Errc::DimensionMismatch, "unit coefficient out of range");

  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        const SparseVec left = multiply(table_[i][j], unit_vector(k));
        const SparseVec right = multiply(unit_vector(i), table_[j][k]);
        if (left != right) {
          throw Error(Errc::NotAssociative, "(" + basis_name(labels_, i) + " " + basis_name(labels_, j) + ") " +
                                                basis_name(labels_, k) + " != " + basis_name(labels_, i) + " (" +
                                                basis_name(labels_, j) + " " + basis_name(labels_, k) + ")");
        }
      }
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    const SparseVec e = unit_vector(i);
    if (multiply(unit_, e) != e || multiply(e, unit_) != e) {
      throw Error(Errc::NoUnit, "declared unit fails on basis element " + basis_name(labels_, i));
    }
  }
  commutative_ = true;
  for (std::size_t i = 0; i < d && commutative_; ++i) {
    for (std::size_t j = i + 1; j < d && commutative_; ++j) commutative_ = table_[i][j] == table_[j][i];
  }
}

SparseVec FiniteAlgebra::multiply(const SparseVec& a, const SparseVec& b) const {
  std::vector<Entry> raw;
  for (const auto& x : a) {
    for (const auto& y : b) {
      const Rational c = dom_.mul(x.value, y.value);
      for (const auto& z : table_[x.index][y.index]) raw.push_back({z.index, dom_.mul(c, z.value)});
    }
  }
  return canonicalize(std::move(raw), dom_);
}

FiniteAlgebra FiniteAlgebra::in_domain(ScalarDomain dom) const {
  std::vector<std::vector<SparseVec>> t = table_;
  return FiniteAlgebra(dom, labels_, unit_, std::move(t), name_);
}

FiniteAlgebra FiniteAlgebra::ground(ScalarDomain dom) {
  return FiniteAlgebra(dom, {"1"}, unit_vector(0), {{unit_vector(0)}}, "unit");
}

FiniteAlgebra FiniteAlgebra::group_algebra(const FiniteGroup& group, ScalarDomain dom) {
  const auto n = static_cast<std::size_t>(group.order());
  std::vector<std::vector<SparseVec>> t(n, std::vector<SparseVec>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) t[a][b] = unit_vector(static_cast<std::size_t>(group.mul(static_cast<int>(a), static_cast<int>(b))));
  }
  std::vector<std::string> labels;
  for (int a = 0; a < group.order(); ++a) labels.push_back(group.label(a));
  return FiniteAlgebra(dom, std::move(labels), unit_vector(static_cast<std::size_t>(group.identity())), std::move(t),
                       "group:" + group.name());
}

FiniteAlgebra FiniteAlgebra::truncated_polynomial(int k, ScalarDomain dom) {
  if (k < 1) throw Error(Errc::InvalidInput, "truncated polynomial needs k >= 1");
  const auto n = static_cast<std::size_t>(k);
  std::vector<std::vector<SparseVec>> t(n, std::vector<SparseVec>(n));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back(a == 0 ? "1" : a == 1 ? "x" : "x^" + std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) {
      if (a + b < n) t[a][b] = unit_vector(a + b);
    }
  }
  return FiniteAlgebra(dom, std::move(labels), unit_vector(0), std::move(t), "truncpoly:" + std::to_string(k));
}

FiniteAlgebra FiniteAlgebra::product_field(int m, ScalarDomain dom) {
  if (m < 1) throw Error(Errc::InvalidInput, "product of fields needs m >= 1");
  const auto n = static_cast<std::size_t>(m);
  std::vector<std::vector<SparseVec>> t(n, std::vector<SparseVec>(n));
  std::vector<std::string> labels;
  SparseVec unit;
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back("e" + std::to_string(a));
    t[a][a] = unit_vector(a);
    unit.push_back({a, 1});
  }
  return FiniteAlgebra(dom, std::move(labels), std::move(unit), std::move(t), "productfield:" + std::to_string(m));
}

FiniteAlgebra FiniteAlgebra::from_preset(const std::string& text, ScalarDomain dom) {
  if (text == "unit") return ground(dom);
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw Error(Errc::InvalidInput, "unknown algebra preset '" + text + "'");
  const std::string kind = text.substr(0, colon);
  const std::string args = text.substr(colon + 1);
  if (kind == "truncpoly") return truncated_polynomial(parse_count(args, text), dom);
  if (kind == "productfield") return product_field(parse_count(args, text), dom);
  if (kind == "group") return group_algebra(FiniteGroup::from_preset(args), dom);
  throw Error(Errc::InvalidInput, "unknown algebra preset '" + text + "'");
}

}  // namespace cyclix
