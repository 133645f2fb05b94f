#include "solvlen/perm.hpp"

#include <numeric>

#include "solvlen/error.hpp"

namespace solvlen {

Perm::Perm(uint32_t degree) : images_(degree) {
  if (degree == 0) throw Error("permutation degree must be positive");
  std::iota(images_.begin(), images_.end(), 0u);
}

Perm::Perm(std::vector<uint32_t> images) : images_(std::move(images)) {
  if (images_.empty()) throw Error("permutation degree must be positive");
  std::vector<bool> seen(images_.size(), false);
  for (uint32_t v : images_) {
    if (v >= images_.size() || seen[v])
      throw Error("image table is not a permutation");
    seen[v] = true;
  }
}

Perm Perm::unchecked(std::vector<uint32_t> images) {
  return Perm(std::move(images), unchecked_t{});
}

bool Perm::is_identity() const {
  for (uint32_t i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

uint32_t Perm::smallest_moved() const {
  for (uint32_t i = 0; i < degree(); ++i)
    if (images_[i] != i) return i;
  return degree();
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree())
    throw Error("compose: degree mismatch");
  std::vector<uint32_t> img(p.degree());
  for (uint32_t i = 0; i < p.degree(); ++i) img[i] = q[p[i]];
  return Perm::unchecked(std::move(img));
}

Perm inverse(const Perm& p) {
  std::vector<uint32_t> img(p.degree());
  for (uint32_t i = 0; i < p.degree(); ++i) img[p[i]] = i;
  return Perm::unchecked(std::move(img));
}

Perm conjugate(const Perm& x, const Perm& g) {
  if (x.degree() != g.degree())
    throw Error("conjugate: degree mismatch");
  // (g^-1 x g)[i] = g[x[g^-1[i]]]; build without materializing g^-1.
  std::vector<uint32_t> img(x.degree());
  for (uint32_t i = 0; i < x.degree(); ++i) img[g[i]] = g[x[i]];
  return Perm::unchecked(std::move(img));
}

Perm commutator(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree())
    throw Error("commutator: degree mismatch");
  // a^-1 b^-1 a b applied left to right sends a[b[i]] to b[a[i]].
  std::vector<uint32_t> img(a.degree());
  for (uint32_t i = 0; i < a.degree(); ++i) img[a[b[i]]] = b[a[i]];
  return Perm::unchecked(std::move(img));
}

size_t hash_images(const uint32_t* data, size_t size) {
  // FNV-1a over the image words.
  size_t h = 1469598103934665603ull;
  for (size_t i = 0; i < size; ++i) {
    h ^= data[i];
    h *= 1099511628211ull;
  }
  return h;
}

size_t hash_images(const std::vector<uint32_t>& images) {
  return hash_images(images.data(), images.size());
}

} // namespace solvlen
