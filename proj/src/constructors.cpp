#include "solvlen/constructors.hpp"

#include <numeric>
#include <sstream>

#include "solvlen/cycles.hpp"
#include "solvlen/error.hpp"

namespace solvlen {

PermutationGroup symmetric_group(uint32_t n) {
  if (n == 0) throw Error("symmetric group: degree must be >= 1");
  if (n == 1) return PermutationGroup(1, {});
  std::vector<uint32_t> t(n), c(n);
  std::iota(t.begin(), t.end(), 0u);
  std::swap(t[0], t[1]);
  for (uint32_t i = 0; i < n; ++i) c[i] = (i + 1) % n;
  return PermutationGroup(n, {Perm(std::move(t)), Perm(std::move(c))});
}

PermutationGroup cyclic_group(uint32_t n) {
  if (n == 0) throw Error("cyclic group: degree must be >= 1");
  if (n == 1) return PermutationGroup(1, {});
  std::vector<uint32_t> c(n);
  for (uint32_t i = 0; i < n; ++i) c[i] = (i + 1) % n;
  return PermutationGroup(n, {Perm(std::move(c))});
}

namespace {

uint64_t checked_point_count(uint32_t p, uint32_t dim) {
  uint64_t n = 1;
  for (uint32_t i = 0; i < dim; ++i) {
    n *= p;
    if (n > (1u << 16))
      throw Error("matrix action: p^dim exceeds the 2^16 degree bound");
  }
  return n;
}

void decode_vector(uint64_t index, uint32_t p, uint32_t dim, uint32_t* out) {
  for (uint32_t i = 0; i < dim; ++i) {
    out[i] = static_cast<uint32_t>(index % p);
    index /= p;
  }
}

uint64_t encode_vector(const uint32_t* v, uint32_t p, uint32_t dim) {
  uint64_t index = 0;
  for (uint32_t i = dim; i-- > 0;) index = index * p + v[i];
  return index;
}

Perm matrix_point_perm(const std::vector<std::vector<uint32_t>>& m, uint32_t p,
                       uint32_t dim, bool skip_zero) {
  uint64_t total = 1;
  for (uint32_t i = 0; i < dim; ++i) total *= p;
  uint64_t n = skip_zero ? total - 1 : total;
  std::vector<uint32_t> img(n);
  std::vector<uint32_t> v(dim), w(dim);
  for (uint64_t idx = skip_zero ? 1 : 0; idx < total; ++idx) {
    decode_vector(idx, p, dim, v.data());
    for (uint32_t i = 0; i < dim; ++i) {
      uint64_t acc = 0;
      for (uint32_t j = 0; j < dim; ++j) acc += uint64_t(m[i][j]) * v[j];
      w[i] = static_cast<uint32_t>(acc % p);
    }
    uint64_t out = encode_vector(w.data(), p, dim);
    img[idx - (skip_zero ? 1 : 0)] =
        static_cast<uint32_t>(out - (skip_zero ? 1 : 0));
  }
  // The Perm constructor validates bijectivity, which is exactly
  // invertibility of the matrix mod p.
  try {
    return Perm(std::move(img));
  } catch (const Error&) {
    throw Error("matrix action: generator is not invertible mod p");
  }
}

} // namespace

PermutationGroup matrix_to_perm(const MatrixGroupSpec& spec,
                                MatrixAction mode) {
  if (spec.p < 2 || spec.dim == 0)
    throw Error("matrix action: need a prime p and a positive dimension");
  for (uint32_t d = 2; d < spec.p; ++d)
    if (spec.p % d == 0) throw Error("matrix action: p must be prime");
  uint64_t total = checked_point_count(spec.p, spec.dim);
  bool skip_zero = (mode == MatrixAction::linear_nonzero);
  if (skip_zero && total < 2)
    throw Error("matrix action: no nonzero vectors");

  std::vector<Perm> gens;
  for (const auto& m : spec.generators) {
    if (m.size() != spec.dim)
      throw Error("matrix action: generator has wrong shape");
    for (const auto& row : m)
      if (row.size() != spec.dim)
        throw Error("matrix action: generator has wrong shape");
    gens.push_back(matrix_point_perm(m, spec.p, spec.dim, skip_zero));
  }

  uint32_t degree = static_cast<uint32_t>(skip_zero ? total - 1 : total);
  if (mode == MatrixAction::affine) {
    std::vector<uint32_t> v(spec.dim);
    for (uint32_t k = 0; k < spec.dim; ++k) {
      std::vector<uint32_t> img(total);
      for (uint64_t idx = 0; idx < total; ++idx) {
        decode_vector(idx, spec.p, spec.dim, v.data());
        v[k] = (v[k] + 1) % spec.p;
        img[idx] = static_cast<uint32_t>(encode_vector(v.data(), spec.p,
                                                       spec.dim));
      }
      gens.push_back(Perm(std::move(img)));
    }
  }
  return PermutationGroup(degree, std::move(gens));
}

namespace {

MatrixGroupSpec gl23_spec() {
  // Two elementary transvections generate SL(2,3); diag(2,1) extends to
  // GL(2,3). Certified by the closure-count test, not assumed.
  MatrixGroupSpec spec;
  spec.p = 3;
  spec.dim = 2;
  spec.generators = {{{1, 1}, {0, 1}}, {{1, 0}, {1, 1}}, {{2, 0}, {0, 1}}};
  return spec;
}

} // namespace

PermutationGroup named_group(NamedGroup name) {
  switch (name) {
    case NamedGroup::G8:
      return matrix_to_perm(gl23_spec(), MatrixAction::linear_nonzero);
    case NamedGroup::G9:
      return matrix_to_perm(gl23_spec(), MatrixAction::affine);
    case NamedGroup::H7: {
      // Frobenius group of order 21: x -> x+1 and x -> 2x on Z_7 (points
      // are residues + 1). Certified by the closure-count test.
      std::vector<Perm> gens{parse_cycles("(2,3,5)(4,7,6)", 7),
                             parse_cycles("(1,2,3,4,5,6,7)", 7)};
      return PermutationGroup(7, std::move(gens));
    }
    case NamedGroup::A3:
      return cyclic_group(3);
    case NamedGroup::S2:
      return symmetric_group(2);
    case NamedGroup::S3:
      return symmetric_group(3);
    case NamedGroup::S4:
      return symmetric_group(4);
  }
  throw Error("named group: unknown name");
}

NamedGroup parse_named_group(const std::string& name) {
  if (name == "G8") return NamedGroup::G8;
  if (name == "G9") return NamedGroup::G9;
  if (name == "H7") return NamedGroup::H7;
  if (name == "A3") return NamedGroup::A3;
  if (name == "S2") return NamedGroup::S2;
  if (name == "S3") return NamedGroup::S3;
  if (name == "S4") return NamedGroup::S4;
  throw Error("named group: unknown name '" + name + "'");
}

PermutationGroup unitriangular(uint32_t p, uint32_t n) {
  if (n == 0) throw Error("unitriangular: dimension must be >= 1");
  MatrixGroupSpec spec;
  spec.p = p;
  spec.dim = n;
  for (uint32_t i = 0; i + 1 < n; ++i) {
    std::vector<std::vector<uint32_t>> m(n, std::vector<uint32_t>(n, 0));
    for (uint32_t k = 0; k < n; ++k) m[k][k] = 1;
    m[i][i + 1] = 1;
    spec.generators.push_back(std::move(m));
  }
  return matrix_to_perm(spec, MatrixAction::linear_all);
}

std::vector<std::vector<uint32_t>> parse_matrix(const std::string& text,
                                                uint32_t p) {
  std::vector<std::vector<uint32_t>> rows;
  std::stringstream ss(text);
  std::string row_text;
  while (std::getline(ss, row_text, ';')) {
    std::vector<uint32_t> row;
    std::stringstream rs(row_text);
    long long v;
    while (rs >> v) {
      if (v < 0) throw Error("matrix entries must be nonnegative residues");
      row.push_back(static_cast<uint32_t>(v % p));
    }
    if (!rs.eof()) throw Error("matrix parse error in row '" + row_text + "'");
    if (row.empty()) throw Error("matrix parse error: empty row");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error("matrix parse error: no rows");
  for (const auto& r : rows)
    if (r.size() != rows.size())
      throw Error("matrix parse error: matrix must be square");
  return rows;
}

} // namespace solvlen
