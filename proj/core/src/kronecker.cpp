#include "kronecker.hpp"

#include <algorithm>
#include <cstdint>

namespace mbgram::detail {
namespace {

constexpr unsigned kLimbBits = GMP_NUMB_BITS;

std::size_t bit_length(const mpz_class& v) {
  return mpz_sgn(v.get_mpz_t()) == 0 ? 0 : mpz_sizeinbase(v.get_mpz_t(), 2);
}

// ORs |value| into buf at bit offset `offset`. Slots never overlap.
void or_into(std::vector<mp_limb_t>& buf, std::size_t offset, const mpz_class& value) {
  const std::size_t n = mpz_size(value.get_mpz_t());
  const mp_limb_t* src = mpz_limbs_read(value.get_mpz_t());
  const std::size_t word = offset / kLimbBits;
  const unsigned shift = offset % kLimbBits;
  for (std::size_t j = 0; j < n; ++j) {
    buf[word + j] |= src[j] << shift;
    if (shift != 0) buf[word + j + 1] |= src[j] >> (kLimbBits - shift);
  }
}

mpz_class from_limbs(std::vector<mp_limb_t>& buf) {
  mpz_class out;
  std::size_t n = buf.size();
  while (n > 0 && buf[n - 1] == 0) --n;
  if (n == 0) return out;
  mp_limb_t* dst = mpz_limbs_write(out.get_mpz_t(), static_cast<mp_size_t>(n));
  std::copy_n(buf.data(), n, dst);
  mpz_limbs_finish(out.get_mpz_t(), static_cast<mp_size_t>(n));
  return out;
}

// Packs sum_i a[i] * 2^(i*slot) for signed a[i] with |a[i]| < 2^(slot-1).
mpz_class pack(std::span<const mpz_class> a, std::size_t slot) {
  const std::size_t limbs = (a.size() * slot) / kLimbBits + 2;
  std::vector<mp_limb_t> pos(limbs, 0), neg(limbs, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int s = mpz_sgn(a[i].get_mpz_t());
    if (s > 0) or_into(pos, i * slot, a[i]);
    if (s < 0) or_into(neg, i * slot, a[i]);
  }
  return from_limbs(pos) - from_limbs(neg);
}

// Bits [offset, offset + width) of the limb array src[0..n).
void extract(const mp_limb_t* src, std::size_t n, std::size_t offset, std::size_t width,
             mpz_class& out) {
  const std::size_t out_limbs = width / kLimbBits + 1;
  std::vector<mp_limb_t> buf(out_limbs, 0);
  const std::size_t word = offset / kLimbBits;
  const unsigned shift = offset % kLimbBits;
  for (std::size_t j = 0; j < out_limbs && word + j < n; ++j) {
    mp_limb_t v = src[word + j] >> shift;
    if (shift != 0 && word + j + 1 < n) v |= src[word + j + 1] << (kLimbBits - shift);
    buf[j] = v;
  }
  const std::size_t top_bits = width % kLimbBits;
  buf[width / kLimbBits] &= (mp_limb_t{1} << top_bits) - 1;
  out = from_limbs(buf);
}

}  // namespace

std::vector<mpz_class> schoolbook_multiply(std::span<const mpz_class> a,
                                           std::span<const mpz_class> b) {
  if (a.empty() || b.empty()) return {};
  std::vector<mpz_class> c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      mpz_addmul(c[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  return c;
}

std::vector<mpz_class> kronecker_multiply(std::span<const mpz_class> a,
                                          std::span<const mpz_class> b) {
  if (a.empty() || b.empty()) return {};
  std::size_t amax = 0, bmax = 0;
  for (const auto& v : a) amax = std::max(amax, bit_length(v));
  for (const auto& v : b) bmax = std::max(bmax, bit_length(v));
  const std::size_t len = a.size() + b.size() - 1;
  if (amax == 0 || bmax == 0) return std::vector<mpz_class>(len);

  const mpz_class terms = static_cast<unsigned long>(std::min(a.size(), b.size()));
  const std::size_t slot = amax + bmax + bit_length(terms) + 2;

  const mpz_class product = pack(a, slot) * pack(b, slot);
  const int sign = mpz_sgn(product.get_mpz_t());
  std::vector<mpz_class> c(len);
  if (sign == 0) return c;

  const mpz_class magnitude = abs(product);
  const mp_limb_t* src = mpz_limbs_read(magnitude.get_mpz_t());
  const std::size_t n = mpz_size(magnitude.get_mpz_t());

  mpz_class half, full;
  mpz_ui_pow_ui(full.get_mpz_t(), 2, slot);
  half = full / 2;
  int carry = 0;
  for (std::size_t k = 0; k < len; ++k) {
    extract(src, n, k * slot, slot, c[k]);
    if (carry) c[k] += 1;
    if (c[k] >= half) {
      c[k] -= full;
      carry = 1;
    } else {
      carry = 0;
    }
    if (sign < 0) c[k] = -c[k];
  }
  return c;
}

}  // namespace mbgram::detail
