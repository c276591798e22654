#include "starblock/perm.hpp"

#include <sstream>

namespace starblock::perm {

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p]) throw PermError("image list is not a bijection");
    seen[p] = true;
  }
}

Perm Perm::identity(std::size_t degree) {
  std::vector<Point> img(degree);
  for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<Point>(i);
  return Perm(std::move(img), Unchecked{});
}

Perm Perm::from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> img = identity(degree).images_;
  std::vector<bool> used(degree, false);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= degree || used[c[i]]) throw PermError("malformed cycle list");
      used[c[i]] = true;
      img[c[i]] = c[(i + 1) % c.size()];
    }
  }
  return Perm(std::move(img), Unchecked{});
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Perm Perm::inverse() const {
  std::vector<Point> img(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) img[images_[i]] = static_cast<Point>(i);
  return Perm(std::move(img), Unchecked{});
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) throw PermError("degree mismatch");
  std::vector<Point> img(a.degree());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = b.images_[a.images_[i]];
  return Perm(std::move(img), Perm::Unchecked{});
}

Perm Perm::conjugate_by(const Perm& g) const {
  // x -> g(this(g^-1(x)))
  std::vector<Point> img(images_.size());
  for (std::size_t i = 0; i < img.size(); ++i) img[g.images_[i]] = g.images_[images_[i]];
  return Perm(std::move(img), Unchecked{});
}

Perm Perm::pow(std::int64_t k) const {
  const std::size_t n = images_.size();
  std::vector<Point> img(n);
  std::vector<bool> done(n, false);
  std::vector<Point> cyc;
  for (std::size_t s = 0; s < n; ++s) {
    if (done[s]) continue;
    cyc.clear();
    for (Point x = static_cast<Point>(s); !done[x]; x = images_[x]) {
      done[x] = true;
      cyc.push_back(x);
    }
    const std::int64_t len = static_cast<std::int64_t>(cyc.size());
    const std::int64_t shift = ((k % len) + len) % len;
    for (std::int64_t i = 0; i < len; ++i) img[cyc[i]] = cyc[(i + shift) % len];
  }
  return Perm(std::move(img), Unchecked{});
}

Perm Perm::pow(const Natural& k) const {
  const std::size_t n = images_.size();
  std::vector<Point> img(n);
  std::vector<bool> done(n, false);
  std::vector<Point> cyc;
  for (std::size_t s = 0; s < n; ++s) {
    if (done[s]) continue;
    cyc.clear();
    for (Point x = static_cast<Point>(s); !done[x]; x = images_[x]) {
      done[x] = true;
      cyc.push_back(x);
    }
    const std::size_t shift = static_cast<std::size_t>(k % cyc.size());
    for (std::size_t i = 0; i < cyc.size(); ++i) img[cyc[i]] = cyc[(i + shift) % cyc.size()];
  }
  return Perm(std::move(img), Unchecked{});
}

Natural Perm::order() const {
  Natural out = 1;
  std::vector<bool> done(images_.size(), false);
  for (std::size_t s = 0; s < images_.size(); ++s) {
    if (done[s]) continue;
    std::uint64_t len = 0;
    for (Point x = static_cast<Point>(s); !done[x]; x = images_[x]) {
      done[x] = true;
      ++len;
    }
    out = out / arith::gcd(out, Natural(len)) * len;
  }
  return out;
}

std::vector<std::vector<Point>> Perm::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> done(images_.size(), false);
  for (std::size_t s = 0; s < images_.size(); ++s) {
    if (done[s] || images_[s] == s) continue;
    std::vector<Point> c;
    for (Point x = static_cast<Point>(s); !done[x]; x = images_[x]) {
      done[x] = true;
      c.push_back(x);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string Perm::to_string() const {
  const auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
    os << ')';
  }
  return os.str();
}

}  // namespace starblock::perm
