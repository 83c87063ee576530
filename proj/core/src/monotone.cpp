#include "cyclix/monotone.hpp"

#include <sstream>

#include "cyclix/error.hpp"

namespace cyclix {

MonotoneMap::MonotoneMap(int source, int target, std::vector<int> images)
    : source_(source), target_(target), images_(std::move(images)) {
  if (source < 0 || target < 0 || images_.size() != static_cast<std::size_t>(source) + 1) {
    throw Error(Errc::ObjectMismatch, "monotone map needs source+1 images");
  }
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (images_[k] < 0 || images_[k] > target || (k > 0 && images_[k] < images_[k - 1])) {
      throw Error(Errc::ObjectMismatch, "images not nondecreasing within [0," + std::to_string(target) + "]");
    }
  }
}

MonotoneMap MonotoneMap::identity(int n) {
  std::vector<int> im(static_cast<std::size_t>(n) + 1);
  for (int x = 0; x <= n; ++x) im[static_cast<std::size_t>(x)] = x;
  return MonotoneMap(n, n, std::move(im));
}

MonotoneMap MonotoneMap::face(int n, int i) {
  if (n < 1 || i < 0 || i > n) throw Error(Errc::ObjectMismatch, "delta_" + std::to_string(i) + " into [" + std::to_string(n) + "]");
  std::vector<int> im;
  for (int x = 0; x < n; ++x) im.push_back(x < i ? x : x + 1);
  return MonotoneMap(n - 1, n, std::move(im));
}

MonotoneMap MonotoneMap::degeneracy(int n, int j) {
  if (n < 0 || j < 0 || j > n) throw Error(Errc::ObjectMismatch, "sigma_" + std::to_string(j) + " onto [" + std::to_string(n) + "]");
  std::vector<int> im;
  for (int x = 0; x <= n + 1; ++x) im.push_back(x <= j ? x : x - 1);
  return MonotoneMap(n + 1, n, std::move(im));
}

std::string MonotoneMap::str() const {
  std::ostringstream os;
  os << "[" << source_ << "]->[" << target_ << "](";
  for (std::size_t k = 0; k < images_.size(); ++k) os << (k ? "," : "") << images_[k];
  os << ")";
  return os.str();
}

MonotoneMap compose(const MonotoneMap& f, const MonotoneMap& g) {
  if (g.target() != f.source()) {
    throw Error(Errc::ObjectMismatch, "cannot compose " + f.str() + " after " + g.str());
  }
  std::vector<int> im;
  im.reserve(g.images().size());
  for (int y : g.images()) im.push_back(f(y));
  return MonotoneMap(g.source(), f.target(), std::move(im));
}

EpiMonoFactorization factorize_epi_mono(const MonotoneMap& f) {
  EpiMonoFactorization out;
  for (int j = f.source() - 1; j >= 0; --j) {
    if (f(j) == f(j + 1)) out.degeneracies.push_back(j);
  }
  std::vector<char> hit(static_cast<std::size_t>(f.target()) + 1, 0);
  for (int y : f.images()) hit[static_cast<std::size_t>(y)] = 1;
  for (int y = 0; y <= f.target(); ++y) {
    if (!hit[static_cast<std::size_t>(y)]) out.faces.push_back(y);
  }
  return out;
}

MonotoneMap from_words(int source, const std::vector<int>& degeneracies, const std::vector<int>& faces) {
  MonotoneMap current = MonotoneMap::identity(source);
  for (int j : degeneracies) current = compose(MonotoneMap::degeneracy(current.target() - 1, j), current);
  for (int i : faces) current = compose(MonotoneMap::face(current.target() + 1, i), current);
  return current;
}

std::vector<MonotoneMap> all_monotone_maps(int m, int n) {
  std::vector<MonotoneMap> out;
  std::vector<int> im(static_cast<std::size_t>(m) + 1, 0);
  for (;;) {
    out.emplace_back(m, n, im);
    int k = m;
    while (k >= 0 && im[static_cast<std::size_t>(k)] == n) --k;
    if (k < 0) break;
    const int v = im[static_cast<std::size_t>(k)] + 1;
    for (int r = k; r <= m; ++r) im[static_cast<std::size_t>(r)] = v;
  }
  return out;
}

}  // namespace cyclix
