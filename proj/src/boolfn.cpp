#include "lili/boolfn.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "lili/error.hpp"
#include "lili/kernels.hpp"

namespace lili::boolfn {

namespace {

VarMask full_mask(int n) { return n >= kMaxVariables ? ~VarMask{0} : (VarMask{1} << n) - 1; }

void check_variables(int n) {
  if (n < 0 || n > kMaxVariables)
    throw Error(Errc::TooManyVariables, "variable count " + std::to_string(n));
}

}  // namespace

// ---------------------------------------------------------------------------
// AnfPolynomial

AnfPolynomial::AnfPolynomial(int variables) : n_(variables) { check_variables(variables); }

int AnfPolynomial::degree() const noexcept {
  int d = 0;
  for (VarMask m : terms_) d = std::max(d, mask_degree(m));
  return d;
}

std::vector<std::size_t> AnfPolynomial::degree_profile() const {
  std::vector<std::size_t> profile(static_cast<std::size_t>(degree()) + 1, 0);
  for (VarMask m : terms_) ++profile[static_cast<std::size_t>(mask_degree(m))];
  return profile;
}

void AnfPolynomial::toggle(VarMask monomial) {
  if ((monomial & ~full_mask(n_)) != 0)
    throw Error(Errc::VariableOutOfRange, "monomial uses a variable above x" + std::to_string(n_));
  if (auto it = terms_.find(monomial); it != terms_.end())
    terms_.erase(it);
  else
    terms_.insert(monomial);
}

bool AnfPolynomial::evaluate(VarMask input) const {
  if ((input & ~full_mask(n_)) != 0)
    throw Error(Errc::WidthMismatch, "input wider than " + std::to_string(n_) + " variables");
  bool v = false;
  for (VarMask m : terms_) v ^= (input & m) == m;
  return v;
}

bool AnfPolynomial::evaluate(std::span<const std::uint8_t> assignment) const {
  if (assignment.size() != static_cast<std::size_t>(n_))
    throw Error(Errc::WidthMismatch, "assignment has " + std::to_string(assignment.size()) +
                                         " entries, expected " + std::to_string(n_));
  VarMask input = 0;
  for (std::size_t i = 0; i < assignment.size(); ++i)
    if (assignment[i] & 1U) input |= VarMask{1} << i;
  return evaluate(input);
}

// ---------------------------------------------------------------------------
// Text

AnfPolynomial parse_anf(std::string_view text, int variables) {
  AnfPolynomial f(variables);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto syntax = [&](const std::string& why) {
    return Error(Errc::SyntaxError, why + " at position " + std::to_string(i), {i});
  };

  while (true) {
    VarMask term = 0;
    bool zero_term = false;
    while (true) {
      skip_ws();
      if (i >= text.size()) throw syntax("expected a factor");
      const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(text[i])));
      if (c == 'x') {
        ++i;
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
          throw syntax("expected a variable index");
        long k = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
          k = std::min(k * 10 + (text[i] - '0'), 1'000'000L);
          ++i;
        }
        if (k < 1 || k > variables)
          throw Error(Errc::VariableOutOfRange, "x" + std::to_string(k) + " with n=" +
                                                    std::to_string(variables),
                      {static_cast<std::size_t>(k)});
        term |= var_bit(static_cast<int>(k));
      } else if (c == '0' || c == '1') {
        zero_term |= c == '0';
        ++i;
      } else {
        throw syntax(std::string("unexpected character '") + text[i] + "'");
      }
      skip_ws();
      if (i < text.size() && text[i] == '*') {
        ++i;
        continue;
      }
      break;
    }
    if (!zero_term) f.toggle(term);
    if (i == text.size()) break;
    if (text[i] != '+') throw syntax("expected '+' or '*'");
    ++i;
  }
  return f;
}

std::vector<VarMask> canonical_order(const AnfPolynomial& f) {
  std::vector<VarMask> order(f.monomials().begin(), f.monomials().end());
  std::sort(order.begin(), order.end(), [](VarMask a, VarMask b) {
    const int da = mask_degree(a);
    const int db = mask_degree(b);
    if (da != db) return da < db;
    return a > b;  // for equal degree, numeric order == index-lexicographic order
  });
  return order;
}

std::string print_anf(const AnfPolynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (VarMask m : canonical_order(f)) {
    if (!out.empty()) out += '+';
    if (m == 0) {
      out += '1';
      continue;
    }
    bool first = true;
    for (int k = kMaxVariables; k >= 1; --k) {
      if ((m & var_bit(k)) == 0) continue;
      if (!first) out += '*';
      out += 'x' + std::to_string(k);
      first = false;
    }
  }
  return out;
}

AnfPolynomial parse_anf_document(std::string_view document, int default_variables) {
  int n = default_variables;
  std::string_view body = document;
  if (!body.empty() && body.front() == '#') {
    const auto eol = body.find('\n');
    std::string header(body.substr(0, eol));
    body = eol == std::string_view::npos ? std::string_view{} : body.substr(eol + 1);
    if (const auto pos = header.find("n="); pos != std::string::npos) {
      std::size_t used = 0;
      try {
        n = std::stoi(header.substr(pos + 2), &used);
      } catch (const std::exception&) {
        throw Error(Errc::SyntaxError, "bad variable count in header: " + header, {0});
      }
    }
  }
  return parse_anf(body, n);
}

AnfPolynomial read_anf_file(const std::string& path, int default_variables) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::InvalidArgument, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_anf_document(buf.str(), default_variables);
}

std::string format_anf_document(const AnfPolynomial& f) {
  return "# n=" + std::to_string(f.variables()) + "\n" + print_anf(f) + "\n";
}

// ---------------------------------------------------------------------------
// TruthTable

namespace {

std::size_t table_size(int n) {
  if (n < 0 || n > kMaxTableVariables)
    throw Error(Errc::TooManyVariables,
                "truth tables support at most " + std::to_string(kMaxTableVariables) + " variables");
  return std::size_t{1} << n;
}

}  // namespace

TruthTable::TruthTable(int variables)
    : n_(variables), outputs_(table_size(variables), 0), defined_(table_size(variables), 0) {}

std::size_t TruthTable::defined_count() const noexcept {
  return static_cast<std::size_t>(std::count(defined_.begin(), defined_.end(), std::uint8_t{1}));
}

std::vector<std::size_t> TruthTable::missing() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < defined_.size(); ++i)
    if (!defined_[i]) out.push_back(i);
  return out;
}

std::size_t TruthTable::weight() const noexcept {
  return static_cast<std::size_t>(std::count(outputs_.begin(), outputs_.end(), std::uint8_t{1}));
}

void TruthTable::mark_all_defined() { std::fill(defined_.begin(), defined_.end(), 1); }

TruthTable anf_to_truth_table(const AnfPolynomial& f) {
  TruthTable t(f.variables());
  auto out = t.outputs_mutable();
  for (VarMask m : f.monomials()) out[static_cast<std::size_t>(m)] = 1;
  kernels::moebius(out);
  t.mark_all_defined();
  return t;
}

AnfPolynomial truth_table_to_anf(const TruthTable& t) {
  if (!t.complete()) {
    const std::size_t missing = t.size() - t.defined_count();
    throw Error(Errc::IncompleteTable, std::to_string(missing) + " entries undefined", {missing});
  }
  std::vector<std::uint8_t> coeffs(t.outputs().begin(), t.outputs().end());
  kernels::moebius(coeffs);
  AnfPolynomial f(t.variables());
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i]) f.toggle(static_cast<VarMask>(i));
  return f;
}

// ---------------------------------------------------------------------------

AnfPolynomial relabel(const AnfPolynomial& f, std::span<const int> map, int target_variables) {
  if (map.size() != static_cast<std::size_t>(f.variables()))
    throw Error(Errc::WidthMismatch, "map has " + std::to_string(map.size()) + " entries, expected " +
                                         std::to_string(f.variables()));
  check_variables(target_variables);
  VarMask used = 0;
  for (int target : map) {
    if (target < 1 || target > target_variables)
      throw Error(Errc::TargetOutOfRange, "target x" + std::to_string(target),
                  {static_cast<std::size_t>(std::max(target, 0))});
    if (used & var_bit(target))
      throw Error(Errc::NonInjectiveMap, "x" + std::to_string(target) + " targeted twice",
                  {static_cast<std::size_t>(target)});
    used |= var_bit(target);
  }
  AnfPolynomial out(target_variables);
  for (VarMask m : f.monomials()) {
    VarMask image = 0;
    for (int j = 1; j <= f.variables(); ++j)
      if (m & var_bit(j)) image |= var_bit(map[static_cast<std::size_t>(j - 1)]);
    out.toggle(image);
  }
  return out;
}

WalshSpectrum walsh_spectrum(const TruthTable& t) {
  if (!t.complete())
    throw Error(Errc::IncompleteTable, "Walsh spectrum needs a complete table",
                {t.size() - t.defined_count()});
  WalshSpectrum w(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) w[i] = t.output(i) ? -1 : 1;
  kernels::walsh(w);
  return w;
}

Metrics metrics(const AnfPolynomial& f) {
  if (f.variables() > kMaxTableVariables)
    throw Error(Errc::TooManyVariables, "metrics support at most " +
                                            std::to_string(kMaxTableVariables) + " variables");
  Metrics m;
  m.is_zero = f.is_zero();
  m.degree = f.degree();
  m.term_count = f.term_count();
  const TruthTable t = anf_to_truth_table(f);
  m.weight = t.weight();
  const std::size_t half = t.size() / 2;
  m.balanced = f.variables() > 0 && m.weight == half;
  std::int64_t peak = 0;
  for (std::int64_t v : walsh_spectrum(t)) peak = std::max(peak, v < 0 ? -v : v);
  m.nonlinearity = static_cast<std::int64_t>(half) - peak / 2;
  return m;
}

}  // namespace lili::boolfn
