#include "cyclix/kaehler.hpp"

#include <algorithm>
#include <numeric>

#include "cyclix/error.hpp"
#include "cyclix/hochschild.hpp"

namespace cyclix {

namespace {

void require_commutative(const FiniteAlgebra& a, const char* what) {
  if (!a.is_commutative()) throw Error(Errc::NotCommutative, std::string(what) + " needs a commutative algebra");
}

std::size_t tensor_count(std::size_t d, int n, std::size_t budget) {
  std::size_t count = 1;
  for (int k = 0; k <= n; ++k) {
    if (count > budget / std::max<std::size_t>(d, 1)) {
      throw Error(Errc::BudgetExceeded, std::to_string(d) + "^" + std::to_string(n + 1) + " basis tensors exceed budget " +
                                            std::to_string(budget));
    }
    count *= d;
  }
  return count;
}

// Slots of a tensor in A^{(x) k}, slot 0 most significant.
struct TensorCodec {
  std::size_t d;
  std::vector<std::size_t> decode(std::size_t x, std::size_t slots) const {
    std::vector<std::size_t> out(slots);
    for (std::size_t k = slots; k-- > 0;) {
      out[k] = x % d;
      x /= d;
    }
    return out;
  }
  std::size_t encode(const std::vector<std::size_t>& digits) const {
    std::size_t x = 0;
    for (std::size_t a : digits) x = x * d + a;
    return x;
  }
};

// Adds scale * (v in slot `slot`, other slots from digits) to raw.
void add_slot_vector(const TensorCodec& codec, std::vector<std::size_t> digits, std::size_t slot, const SparseVec& v,
                     const Rational& scale, std::vector<Entry>& raw) {
  for (const auto& e : v) {
    digits[slot] = e.index;
    raw.push_back({codec.encode(digits), scale * e.value});
  }
}

std::vector<SparseVec> omega_relations(const FiniteAlgebra& a, int n, std::size_t ambient) {
  const ScalarDomain& dom = a.domain();
  const std::size_t d = a.dim();
  const TensorCodec codec{d};
  const auto slots = static_cast<std::size_t>(n) + 1;
  std::vector<SparseVec> out;
  std::vector<Entry> raw;
  for (std::size_t x = 0; x < ambient; ++x) {
    const auto digits = codec.decode(x, slots);
    for (std::size_t k = 1; k < slots; ++k) {
      if (digits[k] != 0) continue;
      // d(bc) = b dc + c db in slot k
      for (std::size_t b = 0; b < d; ++b) {
        for (std::size_t c = b; c < d; ++c) {
          raw.clear();
          add_slot_vector(codec, digits, k, a.product(b, c), 1, raw);
          auto left = digits;
          left[k] = c;
          add_slot_vector(codec, left, 0, a.product(digits[0], b), -1, raw);
          auto right = digits;
          right[k] = b;
          add_slot_vector(codec, right, 0, a.product(digits[0], c), -1, raw);
          auto v = canonicalize(raw, dom);
          if (!v.empty()) out.push_back(std::move(v));
        }
      }
      if (k + 1 == slots || digits[k + 1] != 0) continue;
      for (std::size_t p = 0; p < d; ++p) {
        for (std::size_t q = p; q < d; ++q) {
          auto u = digits;
          u[k] = p;
          u[k + 1] = q;
          raw.clear();
          raw.push_back({codec.encode(u), 1});
          if (p != q) {
            std::swap(u[k], u[k + 1]);
            raw.push_back({codec.encode(u), 1});
          }
          out.push_back(canonicalize(raw, dom));
        }
      }
    }
  }
  return out;
}

}  // namespace

PresentedModule::PresentedModule(ScalarDomain dom, std::size_t ambient, const std::vector<SparseVec>& relations)
    : relations_(dom, ambient, relations), projection_(dom, 0, 0), section_(dom, 0, 0) {
  std::vector<long> pivot_row(ambient, -1);
  const auto& rows = relations_.basis();
  for (std::size_t r = 0; r < rows.size(); ++r) pivot_row[rows[r].front().index] = static_cast<long>(r);
  std::vector<std::size_t> position(ambient, 0);
  for (std::size_t j = 0; j < ambient; ++j) {
    if (pivot_row[j] >= 0) continue;
    position[j] = generators_.size();
    generators_.push_back(j);
  }
  projection_ = Matrix(dom, generators_.size(), ambient);
  section_ = Matrix(dom, ambient, generators_.size());
  for (std::size_t j = 0; j < ambient; ++j) {
    if (pivot_row[j] < 0) {
      projection_.set_column(j, unit_vector(position[j]));
      section_.set_column(position[j], unit_vector(j));
      continue;
    }
    std::vector<Entry> col;
    for (const auto& e : rows[static_cast<std::size_t>(pivot_row[j])]) {
      if (e.index != j) col.push_back({position[e.index], dom.neg(e.value)});
    }
    projection_.set_column(j, canonicalize(std::move(col), dom));
  }
}

PresentedModule omega_power(const FiniteAlgebra& algebra, int n, std::size_t budget) {
  require_commutative(algebra, "Omega^n");
  if (n < 0) throw Error(Errc::RangeExceedsComplex, "negative form degree");
  const std::size_t ambient = tensor_count(algebra.dim(), n, budget);
  return PresentedModule(algebra.domain(), ambient, omega_relations(algebra, n, ambient));
}

PresentedModule kaehler_one(const FiniteAlgebra& algebra) { return omega_power(algebra, 1); }

DifferentialForms::DifferentialForms(FiniteAlgebra algebra, int top, std::size_t budget) : algebra_(std::move(algebra)) {
  require_commutative(algebra_, "differential forms");
  if (top < 0) throw Error(Errc::RangeExceedsComplex, "negative form degree");
  for (int n = 0; n <= top; ++n) forms_.push_back(omega_power(algebra_, n, budget));
  const ScalarDomain& dom = algebra_.domain();
  for (int n = 0; n < top; ++n) {
    const PresentedModule& src = forms_[static_cast<std::size_t>(n)];
    const PresentedModule& dst = forms_[static_cast<std::size_t>(n) + 1];
    // h : (a_0..a_n) -> (1, a_0..a_n) on ambient tensors
    Matrix h(dom, dst.ambient(), src.ambient());
    for (std::size_t x = 0; x < src.ambient(); ++x) {
      SparseVec col;
      for (const auto& e : algebra_.unit()) col.push_back({e.index * src.ambient() + x, e.value});
      h.set_column(x, std::move(col));
    }
    const Matrix ph = dst.projection() * h;
    for (const auto& r : src.relations().basis()) {
      if (!ph.apply(r).empty()) {
        throw Error(Errc::RelationFailure, "d does not preserve the relations of Omega^" + std::to_string(n));
      }
    }
    d_.push_back(ph * src.section());
  }
}

const PresentedModule& DifferentialForms::omega(int n) const {
  if (n < 0 || n > top()) throw Error(Errc::RangeExceedsComplex, "form degree " + std::to_string(n) + " out of range");
  return forms_[static_cast<std::size_t>(n)];
}

const Matrix& DifferentialForms::d(int n) const {
  if (n < 0 || n >= top()) throw Error(Errc::RangeExceedsComplex, "de Rham d_" + std::to_string(n) + " out of range");
  return d_[static_cast<std::size_t>(n)];
}

Matrix DifferentialForms::action(int n, std::size_t i) const {
  const PresentedModule& m = omega(n);
  if (i >= algebra_.dim()) throw Error(Errc::DimensionMismatch, "basis element out of range");
  const ScalarDomain& dom = algebra_.domain();
  const std::size_t rest = m.ambient() / algebra_.dim();
  Matrix mult(dom, m.ambient(), m.ambient());
  for (std::size_t x = 0; x < m.ambient(); ++x) {
    SparseVec col;
    for (const auto& e : algebra_.product(i, x / rest)) col.push_back({e.index * rest + x % rest, e.value});
    mult.set_column(x, std::move(col));
  }
  return m.projection() * mult * m.section();
}

SparseVec DifferentialForms::wedge(int p, const SparseVec& omega_form, int q, const SparseVec& eta) const {
  if (p < 0 || q < 0 || p + q > top()) throw Error(Errc::RangeExceedsComplex, "wedge lands above the top degree");
  const PresentedModule& mp = omega(p);
  const PresentedModule& mq = omega(q);
  const PresentedModule& target = omega(p + q);
  const TensorCodec codec{algebra_.dim()};
  const SparseVec x = mp.section().apply(omega_form);
  const SparseVec y = mq.section().apply(eta);
  const ScalarDomain& dom = algebra_.domain();
  std::vector<Entry> raw;
  for (const auto& ex : x) {
    const auto a = codec.decode(ex.index, static_cast<std::size_t>(p) + 1);
    for (const auto& ey : y) {
      const auto b = codec.decode(ey.index, static_cast<std::size_t>(q) + 1);
      std::vector<std::size_t> digits(a);
      digits.insert(digits.end(), b.begin() + 1, b.end());
      add_slot_vector(codec, digits, 0, algebra_.product(a[0], b[0]), dom.mul(ex.value, ey.value), raw);
    }
  }
  return target.project(canonicalize(std::move(raw), dom));
}

DeRhamResult derham(const FiniteAlgebra& algebra, int top, std::size_t budget) {
  if (top < 0) throw Error(Errc::RangeExceedsComplex, "negative form degree");
  const DifferentialForms forms(algebra, top + 1, budget);
  std::vector<std::size_t> ranks;
  std::vector<Matrix> boundaries;
  for (int k = 0; k <= top + 1; ++k) ranks.push_back(forms.omega(top + 1 - k).dim());
  for (int k = 0; k <= top; ++k) boundaries.push_back(forms.d(top - k));
  ChainComplex complex(algebra.domain(), -(top + 1), std::move(ranks), std::move(boundaries), true);
  HomologyResult h = homology(complex, -top, 0);
  std::reverse(h.groups.begin(), h.groups.end());
  for (auto& g : h.groups) g.degree = -g.degree;
  return {std::move(complex), std::move(h)};
}

Matrix hkr_pi(const FiniteAlgebra& algebra, int n, const PresentedModule& omega_n) {
  require_commutative(algebra, "pi");
  if (n < 0 || omega_n.ambient() != tensor_count(algebra.dim(), n, omega_n.ambient())) {
    throw Error(Errc::DimensionMismatch, "Omega^n does not match the degree");
  }
  return omega_n.projection();
}

Matrix hkr_epsilon(const FiniteAlgebra& algebra, int n, const PresentedModule& omega_n) {
  require_commutative(algebra, "epsilon");
  const ScalarDomain& dom = algebra.domain();
  if (!dom.is_field()) throw Error(Errc::DomainNotField, "epsilon divides by n!");
  if (dom.characteristic() != 0) throw Error(Errc::PositiveCharacteristic, "epsilon divides by n!");
  if (n < 0 || omega_n.ambient() != tensor_count(algebra.dim(), n, omega_n.ambient())) {
    throw Error(Errc::DimensionMismatch, "Omega^n does not match the degree");
  }
  const TensorCodec codec{algebra.dim()};
  const auto slots = static_cast<std::size_t>(n) + 1;
  Rational factorial = 1;
  for (int k = 2; k <= n; ++k) factorial = factorial * k;
  const Rational weight = Rational(1) / factorial;
  Matrix eps(dom, omega_n.ambient(), omega_n.dim());
  std::vector<Entry> raw;
  for (std::size_t g = 0; g < omega_n.dim(); ++g) {
    const auto digits = codec.decode(omega_n.generators()[g], slots);
    std::vector<std::size_t> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), std::size_t{1});
    raw.clear();
    do {
      std::size_t inversions = 0;
      for (std::size_t i = 0; i < perm.size(); ++i) {
        for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j] ? 1 : 0;
      }
      std::vector<std::size_t> u(slots);
      u[0] = digits[0];
      for (std::size_t i = 0; i < perm.size(); ++i) u[i + 1] = digits[perm[i]];
      raw.push_back({codec.encode(u), inversions % 2 == 0 ? weight : -weight});
    } while (std::next_permutation(perm.begin(), perm.end()));
    eps.set_column(g, canonicalize(raw, dom));
  }
  return eps;
}

bool HkrReport::passed() const {
  return std::all_of(degrees.begin(), degrees.end(),
                     [](const HkrDegree& d) { return d.pi_eps_identity && d.eps_cycles && d.pi_kills_boundaries; });
}

HkrReport hkr_check(const FiniteAlgebra& algebra, int max_degree, std::size_t budget) {
  require_commutative(algebra, "HKR");
  if (!algebra.domain().is_field()) throw Error(Errc::DomainNotField, "epsilon divides by n!");
  if (algebra.domain().characteristic() != 0) throw Error(Errc::PositiveCharacteristic, "epsilon divides by n!");
  if (max_degree < 0) throw Error(Errc::RangeExceedsComplex, "negative degree");
  const ScalarDomain& dom = algebra.domain();
  const HochschildModule module(algebra, max_degree + 1, true, budget);
  const ChainComplex chains = chain_complex(module, Normalization::Unnormalized);
  const HomologyResult hh_result = homology(chains, 0, max_degree, {true});
  HkrReport report;
  for (int n = 0; n <= max_degree; ++n) {
    const PresentedModule omega_n = omega_power(algebra, n, budget);
    const Matrix pi = hkr_pi(algebra, n, omega_n);
    const Matrix eps = hkr_epsilon(algebra, n, omega_n);
    const HomologyGroup& group = hh_result.at(n);
    HkrDegree entry;
    entry.degree = n;
    entry.omega_dim = omega_n.dim();
    entry.hh_betti = group.betti;
    entry.pi_eps_identity = pi * eps == Matrix::identity(dom, omega_n.dim());
    entry.eps_cycles = (chains.boundary(n) * eps).is_zero();
    entry.pi_kills_boundaries = (pi * chains.boundary(n + 1)).is_zero();
    if (entry.eps_cycles) {
      const Matrix round_trip = eps * pi;
      std::vector<SparseVec> images;
      for (const auto& z : group.representatives) images.push_back(round_trip.apply(z));
      const auto coords = class_coordinates(group, dom, images);
      entry.eps_pi_identity = true;
      for (std::size_t k = 0; k < coords.size(); ++k) entry.eps_pi_identity &= coords[k] == unit_vector(k);
    }
    report.degrees.push_back(entry);
  }
  return report;
}

}  // namespace cyclix
