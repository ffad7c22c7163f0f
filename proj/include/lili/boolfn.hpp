#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lili::boolfn {

/// Bit i-1 set <=> variable x_i present. The empty mask is the constant 1.
__extension__ typedef unsigned __int128 VarMask;

constexpr int kMaxVariables = 128;
constexpr int kMaxTableVariables = 24;

inline int mask_degree(VarMask m) noexcept {
  return __builtin_popcountll(static_cast<std::uint64_t>(m)) +
         __builtin_popcountll(static_cast<std::uint64_t>(m >> 64));
}

inline VarMask var_bit(int index) noexcept { return VarMask{1} << (index - 1); }

class AnfPolynomial {
 public:
  explicit AnfPolynomial(int variables = 0);

  int variables() const noexcept { return n_; }
  const std::set<VarMask>& monomials() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// 0 for the zero function as well as for the constant 1; check is_zero().
  int degree() const noexcept;
  /// Entry d counts monomials of degree d.
  std::vector<std::size_t> degree_profile() const;

  /// XOR in one monomial (GF(2) add; an existing copy cancels).
  void toggle(VarMask monomial);

  /// Throws WidthMismatch if `input` has bits at or above position n.
  bool evaluate(VarMask input) const;
  /// One 0/1 entry per variable, x_1 first. Throws WidthMismatch on size != n.
  bool evaluate(std::span<const std::uint8_t> assignment) const;

  friend bool operator==(const AnfPolynomial&, const AnfPolynomial&) = default;

 private:
  int n_;
  std::set<VarMask> terms_;
};

/// Grammar: terms joined by '+', factors joined by '*', factors are "x<k>"
/// (1 <= k <= n) or the literals 0/1. Case-insensitive; whitespace ignored.
AnfPolynomial parse_anf(std::string_view text, int variables);

/// Ascending degree, then descending index-lexicographic; variables within a
/// monomial in descending index, e.g. "x5+x4+x10*x6".
std::string print_anf(const AnfPolynomial& f);

/// Canonical monomial order used by print_anf.
std::vector<VarMask> canonical_order(const AnfPolynomial& f);

/// ANF file: optional "# n=<k>" first line, then one expression.
/// Without the header the variable count defaults to `default_variables`.
AnfPolynomial read_anf_file(const std::string& path, int default_variables = 10);
AnfPolynomial parse_anf_document(std::string_view document, int default_variables = 10);
std::string format_anf_document(const AnfPolynomial& f);

/// Complete or partial table; index encodes x_1 as the least significant bit.
class TruthTable {
 public:
  explicit TruthTable(int variables = 0);

  int variables() const noexcept { return n_; }
  std::size_t size() const noexcept { return outputs_.size(); }

  bool defined(std::size_t index) const { return defined_[index] != 0; }
  bool output(std::size_t index) const { return outputs_[index] != 0; }
  void set(std::size_t index, bool value) {
    outputs_[index] = value ? 1 : 0;
    defined_[index] = 1;
  }

  std::size_t defined_count() const noexcept;
  bool complete() const noexcept { return defined_count() == size(); }
  std::vector<std::size_t> missing() const;
  std::size_t weight() const noexcept;

  std::span<const std::uint8_t> outputs() const noexcept { return outputs_; }
  std::span<std::uint8_t> outputs_mutable() noexcept { return outputs_; }
  void mark_all_defined();

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

 private:
  int n_;
  std::vector<std::uint8_t> outputs_;
  std::vector<std::uint8_t> defined_;
};

/// Complete table via the zeta butterfly. Throws TooManyVariables for n > 24.
TruthTable anf_to_truth_table(const AnfPolynomial& f);
/// Möbius transform. Throws IncompleteTable (detail = {missing count}).
AnfPolynomial truth_table_to_anf(const TruthTable& t);

/// x_j -> x_{map[j-1]}; result lives over `target_variables` variables.
/// Throws NonInjectiveMap, TargetOutOfRange, WidthMismatch (map size != n).
AnfPolynomial relabel(const AnfPolynomial& f, std::span<const int> map, int target_variables);

using WalshSpectrum = std::vector<std::int64_t>;

/// W(a) = sum_x (-1)^(f(x) xor a.x). Table must be complete.
WalshSpectrum walsh_spectrum(const TruthTable& t);

struct Metrics {
  bool is_zero = false;
  int degree = 0;
  std::size_t term_count = 0;
  std::size_t weight = 0;
  bool balanced = false;
  std::int64_t nonlinearity = 0;
};

Metrics metrics(const AnfPolynomial& f);

}  // namespace lili::boolfn
