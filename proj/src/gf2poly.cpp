#include "lili/gf2poly.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>
#include <set>

#include "lili/error.hpp"

namespace lili::gf2 {

namespace {

constexpr int kWordBits = 64;

}  // namespace

// ---------------------------------------------------------------------------
// FeedbackPolynomial

FeedbackPolynomial FeedbackPolynomial::from_exponents(std::span<const int> exponents) {
  if (exponents.empty()) throw Error(Errc::EmptyExponentSet, "no exponents given");
  std::set<int> seen;
  FeedbackPolynomial p;
  for (int e : exponents) {
    if (e < 0) throw Error(Errc::NegativeExponent, "exponent " + std::to_string(e));
    if (!seen.insert(e).second)
      throw Error(Errc::DuplicateExponent, "exponent " + std::to_string(e) + " repeated",
                  {static_cast<std::size_t>(e)});
    p.flip(e);
  }
  return p;
}

FeedbackPolynomial FeedbackPolynomial::from_exponents(std::initializer_list<int> exponents) {
  return from_exponents(std::span<const int>(exponents.begin(), exponents.size()));
}

FeedbackPolynomial FeedbackPolynomial::monomial(int exponent) {
  FeedbackPolynomial p;
  p.flip(exponent);
  return p;
}

FeedbackPolynomial FeedbackPolynomial::parse(std::string_view text) {
  std::vector<int> exps;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& why) -> void {
    throw Error(Errc::SyntaxError, why + " at position " + std::to_string(i), {i});
  };
  auto read_int = [&]() -> int {
    skip_ws();
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      fail("expected digits");
    long v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i] - '0');
      if (v > 1'000'000) fail("exponent too large");
      ++i;
    }
    return static_cast<int>(v);
  };

  skip_ws();
  if (i < text.size() && text[i] == '0') {
    ++i;
    skip_ws();
    if (i == text.size()) return {};
    fail("unexpected input after 0");
  }
  while (true) {
    skip_ws();
    if (i >= text.size()) fail("expected a term");
    char c = text[i];
    if (c == 'x' || c == 'X') {
      ++i;
      skip_ws();
      if (i < text.size() && text[i] == '^') {
        ++i;
        exps.push_back(read_int());
      } else {
        exps.push_back(1);
      }
    } else if (c == '1') {
      ++i;
      exps.push_back(0);
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '+') fail("expected '+'");
    ++i;
  }
  return from_exponents(exps);
}

int FeedbackPolynomial::degree() const noexcept {
  if (words_.empty()) return -1;
  return static_cast<int>(words_.size() - 1) * kWordBits + (kWordBits - 1 - std::countl_zero(words_.back()));
}

bool FeedbackPolynomial::coeff(int exponent) const noexcept {
  if (exponent < 0) return false;
  auto w = static_cast<std::size_t>(exponent / kWordBits);
  if (w >= words_.size()) return false;
  return (words_[w] >> (exponent % kWordBits)) & 1U;
}

std::size_t FeedbackPolynomial::term_count() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::vector<int> FeedbackPolynomial::exponents() const {
  std::vector<int> out;
  for (int e = degree(); e >= 0; --e)
    if (coeff(e)) out.push_back(e);
  return out;
}

std::string FeedbackPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (int e : exponents()) {
    if (!s.empty()) s += '+';
    if (e == 0)
      s += '1';
    else if (e == 1)
      s += 'x';
    else
      s += "x^" + std::to_string(e);
  }
  return s;
}

FeedbackPolynomial FeedbackPolynomial::reciprocal() const {
  FeedbackPolynomial r;
  const int d = degree();
  for (int e = 0; e <= d; ++e)
    if (coeff(e)) r.flip(d - e);
  return r;
}

FeedbackPolynomial& FeedbackPolynomial::operator+=(const FeedbackPolynomial& rhs) {
  if (rhs.words_.size() > words_.size()) words_.resize(rhs.words_.size(), 0);
  for (std::size_t i = 0; i < rhs.words_.size(); ++i) words_[i] ^= rhs.words_[i];
  trim();
  return *this;
}

void FeedbackPolynomial::flip(int exponent) {
  auto w = static_cast<std::size_t>(exponent / kWordBits);
  if (w >= words_.size()) words_.resize(w + 1, 0);
  words_[w] ^= std::uint64_t{1} << (exponent % kWordBits);
  trim();
}

void FeedbackPolynomial::xor_shifted(const FeedbackPolynomial& other, int shift) {
  if (other.is_zero()) return;
  const auto word_shift = static_cast<std::size_t>(shift / kWordBits);
  const int bit_shift = shift % kWordBits;
  const std::size_t need = other.words_.size() + word_shift + 1;
  if (words_.size() < need) words_.resize(need, 0);
  for (std::size_t i = 0; i < other.words_.size(); ++i) {
    words_[i + word_shift] ^= other.words_[i] << bit_shift;
    if (bit_shift != 0) words_[i + word_shift + 1] ^= other.words_[i] >> (kWordBits - bit_shift);
  }
  trim();
}

void FeedbackPolynomial::trim() noexcept {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

FeedbackPolynomial poly_from_exponents(std::span<const int> exponents) {
  return FeedbackPolynomial::from_exponents(exponents);
}

// ---------------------------------------------------------------------------
// Arithmetic

FeedbackPolynomial multiply(const FeedbackPolynomial& a, const FeedbackPolynomial& b) {
  FeedbackPolynomial out;
  const FeedbackPolynomial& small = a.term_count() <= b.term_count() ? a : b;
  const FeedbackPolynomial& big = &small == &a ? b : a;
  for (int e = small.degree(); e >= 0; --e)
    if (small.coeff(e)) out.xor_shifted(big, e);
  return out;
}

FeedbackPolynomial remainder(const FeedbackPolynomial& a, const FeedbackPolynomial& m) {
  if (m.is_zero()) throw Error(Errc::InvalidArgument, "division by the zero polynomial");
  FeedbackPolynomial r = a;
  const int dm = m.degree();
  for (int dr = r.degree(); dr >= dm; dr = r.degree()) r.xor_shifted(m, dr - dm);
  return r;
}

FeedbackPolynomial polymul_mod(const FeedbackPolynomial& a, const FeedbackPolynomial& b,
                               const FeedbackPolynomial& m) {
  if (m.degree() < 1) throw Error(Errc::InvalidArgument, "modulus must have degree >= 1");
  return remainder(multiply(remainder(a, m), remainder(b, m)), m);
}

FeedbackPolynomial gcd(FeedbackPolynomial a, FeedbackPolynomial b) {
  while (!b.is_zero()) {
    FeedbackPolynomial r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

FeedbackPolynomial x_pow_mod(u128 e, const FeedbackPolynomial& m) {
  FeedbackPolynomial result = remainder(FeedbackPolynomial::one(), m);
  FeedbackPolynomial base = remainder(FeedbackPolynomial::monomial(1), m);
  while (e != 0) {
    if (e & 1U) result = polymul_mod(result, base, m);
    base = polymul_mod(base, base, m);
    e >>= 1;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Integers

namespace {

u128 mulmod(u128 a, u128 b, u128 n) {
  a %= n;
  b %= n;
  if (n <= (u128{1} << 64)) return (a * b) % n;
  // a, b < n <= 2^96: Horner over 32-bit limbs of b keeps every product below 2^128.
  u128 r = 0;
  for (int shift = 64; shift >= 0; shift -= 32) {
    const u128 limb = (b >> shift) & 0xffffffffU;
    r = (r << 32) % n;
    r = (r + (a * limb) % n) % n;
  }
  return r;
}

u128 powmod(u128 base, u128 e, u128 n) {
  u128 result = 1 % n;
  base %= n;
  while (e != 0) {
    if (e & 1U) result = mulmod(result, base, n);
    base = mulmod(base, base, n);
    e >>= 1;
  }
  return result;
}

u128 gcd_int(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

constexpr unsigned kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41,
                               43, 47, 53, 59, 61, 67, 71};

bool strong_probable_prime(u128 n, u128 a) {
  u128 d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1;
    ++s;
  }
  u128 x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int r = 1; r < s; ++r) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

u128 pollard_brent(u128 n, u128 c) {
  auto f = [&](u128 v) { return (mulmod(v, v, n) + c) % n; };
  u128 y = 2, x = 2, q = 1, g = 1, ys = 2;
  constexpr u128 kBatch = 128;
  for (u128 r = 1; g == 1; r <<= 1) {
    x = y;
    for (u128 i = 0; i < r; ++i) y = f(y);
    for (u128 k = 0; k < r && g == 1; k += kBatch) {
      ys = y;
      for (u128 i = 0; i < std::min(kBatch, r - k); ++i) {
        y = f(y);
        q = mulmod(q, x > y ? x - y : y - x, n);
      }
      g = gcd_int(q, n);
    }
  }
  if (g == n) {
    do {
      ys = f(ys);
      g = gcd_int(x > ys ? x - ys : ys - x, n);
    } while (g == 1);
  }
  return g;
}

void factor_into(u128 n, std::vector<u128>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  for (u128 c = 1;; ++c) {
    u128 d = pollard_brent(n, c);
    if (d != n && d != 1) {
      factor_into(d, out);
      factor_into(n / d, out);
      return;
    }
  }
}

}  // namespace

std::vector<u128> FactorSet::distinct() const {
  std::vector<u128> d = primes;
  d.erase(std::unique(d.begin(), d.end()), d.end());
  return d;
}

bool is_prime(u128 n) {
  if (n < 2) return false;
  for (unsigned p : kBases) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  // Sorenson–Webster bound for the first 13 prime bases.
  const u128 proven_bound = parse_u128("3317044064679887385961981");
  const std::size_t bases = n < proven_bound ? 13 : std::size(kBases);
  for (std::size_t i = 0; i < bases; ++i)
    if (!strong_probable_prime(n, kBases[i])) return false;
  return true;
}

FactorSet factorize(u128 n) {
  if (n < 2) throw Error(Errc::InvalidArgument, "factorize requires n >= 2");
  if (n > (u128{1} << kMaxFactorBits))
    throw Error(Errc::InvalidArgument, "factorize supports n <= 2^96");
  FactorSet fs;
  fs.value = n;
  for (u128 p = 2; p < (1U << 16) && p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      fs.primes.push_back(p);
      n /= p;
    }
  }
  factor_into(n, fs.primes);
  std::sort(fs.primes.begin(), fs.primes.end());
  return fs;
}

u128 mersenne(unsigned exponent) {
  if (exponent >= 128) throw Error(Errc::InvalidArgument, "exponent too large");
  return (u128{1} << exponent) - 1;
}

std::string to_string(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v != 0) {
    s += static_cast<char>('0' + static_cast<int>(v % 10));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

u128 parse_u128(std::string_view text) {
  if (text.empty()) throw Error(Errc::InvalidArgument, "empty integer");
  u128 v = 0;
  const u128 limit = ~u128{0} / 10;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw Error(Errc::InvalidArgument, "not a decimal integer: " + std::string(text));
    if (v > limit) throw Error(Errc::InvalidArgument, "integer overflow");
    v = v * 10 + static_cast<unsigned>(c - '0');
  }
  return v;
}

// ---------------------------------------------------------------------------
// Irreducibility and primitivity

namespace {

std::vector<unsigned> prime_divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// x^(2^k) mod f by repeated squaring.
FeedbackPolynomial x_pow_pow2_mod(unsigned k, const FeedbackPolynomial& f) {
  FeedbackPolynomial r = remainder(FeedbackPolynomial::monomial(1), f);
  for (unsigned i = 0; i < k; ++i) r = polymul_mod(r, r, f);
  return r;
}

}  // namespace

bool is_irreducible(const FeedbackPolynomial& f) {
  const int n = f.degree();
  if (n < 1) throw Error(Errc::InvalidArgument, "irreducibility needs degree >= 1");
  const auto x = remainder(FeedbackPolynomial::monomial(1), f);
  if (x_pow_pow2_mod(static_cast<unsigned>(n), f) != x) return false;
  for (unsigned p : prime_divisors(static_cast<unsigned>(n))) {
    FeedbackPolynomial h = x_pow_pow2_mod(static_cast<unsigned>(n) / p, f) + x;
    if (gcd(f, h).degree() != 0) return false;
  }
  return true;
}

bool is_primitive(const FeedbackPolynomial& f, const FactorSet& factors) {
  const int n = f.degree();
  if (n < 1 || n > static_cast<int>(kMaxFactorBits))
    throw Error(Errc::InvalidArgument, "primitivity supports degree 1..96");
  const u128 order = mersenne(static_cast<unsigned>(n));
  u128 product = 1;
  for (u128 p : factors.primes) product *= p;
  if (factors.value != order || product != order)
    throw Error(Errc::WrongFactorTarget, "factors do not describe 2^" + std::to_string(n) + "-1");
  if (!is_irreducible(f)) throw Error(Errc::NotIrreducible, f.to_string());
  const auto one = FeedbackPolynomial::one();
  if (x_pow_mod(order, f) != one) return false;
  for (u128 p : factors.distinct())
    if (x_pow_mod(order / p, f) == one) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Berlekamp–Massey

namespace {

class PackedBits {
 public:
  explicit PackedBits(std::size_t n) : words_((n + kWordBits - 1) / kWordBits + 2, 0) {}

  void set(std::size_t i) { words_[i / kWordBits] |= std::uint64_t{1} << (i % kWordBits); }

  // 64 bits starting at bit offset `pos`.
  std::uint64_t window(std::size_t pos) const {
    const std::size_t w = pos / kWordBits;
    const unsigned b = pos % kWordBits;
    if (b == 0) return words_[w];
    return (words_[w] >> b) | (words_[w + 1] << (kWordBits - b));
  }

 private:
  std::vector<std::uint64_t> words_;
};

}  // namespace

LinearComplexityProfile berlekamp_massey(std::span<const std::uint8_t> bits) {
  if (bits.empty()) throw Error(Errc::EmptyInput, "Berlekamp-Massey needs at least one bit");
  const std::size_t n = bits.size();
  // reversed[j] = bits[n-1-j]; then s_i, s_{i-1}, ..., s_{i-L} is the
  // contiguous run starting at offset n-1-i.
  PackedBits reversed(n);
  for (std::size_t j = 0; j < n; ++j)
    if (bits[n - 1 - j] & 1U) reversed.set(j);

  LinearComplexityProfile out;
  out.complexities.reserve(n);
  FeedbackPolynomial c = FeedbackPolynomial::one();
  FeedbackPolynomial b = FeedbackPolynomial::one();
  int l = 0;
  int shift = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t offset = n - 1 - i;
    const auto cw = c.words();
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < cw.size(); ++k) acc ^= cw[k] & reversed.window(offset + k * kWordBits);
    const bool discrepancy = std::popcount(acc) & 1;
    if (!discrepancy) {
      ++shift;
    } else if (2 * l <= static_cast<int>(i)) {
      FeedbackPolynomial t = c;
      c.xor_shifted(b, shift);
      l = static_cast<int>(i) + 1 - l;
      b = std::move(t);
      shift = 1;
    } else {
      c.xor_shifted(b, shift);
      ++shift;
    }
    out.complexities.push_back(l);
  }
  out.connection = std::move(c);
  return out;
}

bool regenerates(const FeedbackPolynomial& connection, int length,
                 std::span<const std::uint8_t> bits) {
  if (connection.degree() > length || !connection.coeff(0)) return false;
  const auto taps = connection.exponents();
  for (std::size_t j = static_cast<std::size_t>(length); j < bits.size(); ++j) {
    unsigned v = 0;
    for (int e : taps)
      if (e > 0) v ^= bits[j - static_cast<std::size_t>(e)] & 1U;
    if (v != (bits[j] & 1U)) return false;
  }
  return true;
}

}  // namespace lili::gf2
