#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace solvlen {

/// Permutation of {0,...,degree-1} stored as an image table.
/// Immutable value type. Composition is "p first, then q" everywhere:
/// compose(p,q)[i] = q[p[i]].
class Perm {
public:
  explicit Perm(uint32_t degree); // identity
  explicit Perm(std::vector<uint32_t> images); // validates bijectivity

  // Construction from a known-valid image table (results of compose etc.).
  static Perm unchecked(std::vector<uint32_t> images);

  uint32_t degree() const { return static_cast<uint32_t>(images_.size()); }
  uint32_t operator[](uint32_t point) const { return images_[point]; }
  const std::vector<uint32_t>& images() const { return images_; }

  bool is_identity() const;
  // Smallest point i with p[i] != i, or degree() for the identity.
  uint32_t smallest_moved() const;

  friend bool operator==(const Perm&, const Perm&) = default;

private:
  struct unchecked_t {};
  Perm(std::vector<uint32_t> images, unchecked_t)
      : images_(std::move(images)) {}
  std::vector<uint32_t> images_;
};

Perm compose(const Perm& p, const Perm& q); // p first, then q
Perm inverse(const Perm& p);
Perm conjugate(const Perm& x, const Perm& g); // g^-1 x g
Perm commutator(const Perm& a, const Perm& b); // a^-1 b^-1 a b

size_t hash_images(const uint32_t* data, size_t size);
size_t hash_images(const std::vector<uint32_t>& images);

struct PermHash {
  size_t operator()(const Perm& p) const { return hash_images(p.images()); }
};

} // namespace solvlen
