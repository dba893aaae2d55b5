#include "arbor/poly.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <sstream>

namespace arbor {

// ---------------------------------------------------------------- VarNames

VarNames::VarNames(std::vector<std::string> names) {
  for (auto& n : names) intern(n);
}

VarId VarNames::intern(std::string_view name) {
  std::string key(name);
  auto it = index_.find(key);
  if (it != index_.end()) return it->second;
  const auto id = static_cast<VarId>(names_.size());
  names_.push_back(key);
  index_.emplace(std::move(key), id);
  return id;
}

std::optional<VarId> VarNames::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string VarNames::name(VarId id) const {
  if (id < names_.size()) return names_[id];
  return "x" + std::to_string(id);
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(VarId v, std::uint32_t exponent) {
  Monomial m;
  if (exponent > 0) {
    m.factors_.emplace_back(v, exponent);
    m.degree_ = exponent;
  }
  return m;
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end());
  Monomial m;
  for (const auto& [v, e] : factors) {
    if (e == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().first == v) {
      m.factors_.back().second += e;
    } else {
      m.factors_.emplace_back(v, e);
    }
    m.degree_ += e;
  }
  return m;
}

std::uint32_t Monomial::exponent(VarId v) const noexcept {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), Factor{v, 0});
  if (it != factors_.end() && it->first == v) return it->second;
  return 0;
}

std::optional<Monomial> Monomial::quotient(const Monomial& divisor) const {
  if (divisor.degree_ > degree_) return std::nullopt;
  Monomial out;
  out.factors_.reserve(factors_.size());
  auto d = divisor.factors_.begin();
  for (const auto& [v, e] : factors_) {
    if (d != divisor.factors_.end() && d->first < v) return std::nullopt;
    if (d != divisor.factors_.end() && d->first == v) {
      if (d->second > e) return std::nullopt;
      if (d->second < e) out.factors_.emplace_back(v, e - d->second);
      ++d;
    } else {
      out.factors_.emplace_back(v, e);
    }
  }
  if (d != divisor.factors_.end()) return std::nullopt;
  out.degree_ = degree_ - divisor.degree_;
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
      out.factors_.push_back(*i++);
    } else if (i == a.factors_.end() || j->first < i->first) {
      out.factors_.push_back(*j++);
    } else {
      out.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  out.degree_ = a.degree_ + b.degree_;
  return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
  if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  for (; i != a.factors_.end() && j != b.factors_.end(); ++i, ++j) {
    // The side holding the smaller variable has the larger exponent there.
    if (i->first != j->first) {
      return i->first < j->first ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    if (i->second != j->second) return i->second <=> j->second;
  }
  if (i != a.factors_.end()) return std::strong_ordering::greater;
  if (j != b.factors_.end()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& [v, e] : factors_) {
    h ^= (static_cast<std::size_t>(v) << 20 | e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

// ---------------------------------------------------------------- IntPoly

namespace {

bool term_greater(const Term& a, const Term& b) { return a.monomial > b.monomial; }

// Merges two canonical term lists, b scaled by `sign`.
std::vector<Term> merge_terms(const std::vector<Term>& a, std::span<const Term> b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->monomial > j->monomial)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->monomial > i->monomial) {
      out.push_back(Term{j->monomial, sign > 0 ? j->coeff : Integer(-j->coeff)});
      ++j;
    } else {
      Integer c = sign > 0 ? Integer(i->coeff + j->coeff) : Integer(i->coeff - j->coeff);
      if (c != 0) out.push_back(Term{i->monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

IntPoly IntPoly::constant(const Integer& c) {
  IntPoly p;
  if (c != 0) p.terms_.push_back(Term{Monomial{}, c});
  return p;
}

IntPoly IntPoly::variable(VarId v) { return monomial(Monomial::variable(v), 1); }

IntPoly IntPoly::monomial(Monomial m, const Integer& c) {
  IntPoly p;
  if (c != 0) p.terms_.push_back(Term{std::move(m), c});
  return p;
}

IntPoly IntPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  IntPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

const Term& IntPoly::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading_term of zero polynomial");
  return terms_.front();
}

Integer IntPoly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.monomial > key; });
  if (it != terms_.end() && it->monomial == m) return it->coeff;
  return 0;
}

std::optional<Integer> IntPoly::constant_value() const {
  if (terms_.empty()) return Integer(0);
  if (terms_.size() == 1 && terms_.front().monomial.is_one()) return terms_.front().coeff;
  return std::nullopt;
}

std::uint32_t IntPoly::total_degree() const noexcept {
  return terms_.empty() ? 0 : terms_.front().monomial.degree();
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  if (other.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, other.terms_, +1);
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
  if (other.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, other.terms_, -1);
  return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& other) {
  *this = *this * other;
  return *this;
}

IntPoly& IntPoly::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    // A monomial factor preserves the order of the other operand.
    const IntPoly& single = a.terms_.size() == 1 ? a : b;
    const IntPoly& other = a.terms_.size() == 1 ? b : a;
    const Term& s = single.terms_.front();
    IntPoly out;
    out.terms_.reserve(other.terms_.size());
    for (const auto& t : other.terms_) out.terms_.push_back(Term{t.monomial * s.monomial, t.coeff * s.coeff});
    return out;
  }
  std::unordered_map<Monomial, Integer, MonomialHash> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  Integer prod;
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      mpz_mul(prod.get_mpz_t(), s.coeff.get_mpz_t(), t.coeff.get_mpz_t());
      acc[s.monomial * t.monomial] += prod;
    }
  }
  IntPoly out;
  out.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) out.terms_.push_back(Term{m, std::move(c)});
  }
  std::sort(out.terms_.begin(), out.terms_.end(), term_greater);
  return out;
}

IntPoly operator-(IntPoly a) {
  for (auto& t : a.terms_) t.coeff = -t.coeff;
  return a;
}

IntPoly exact_div(const IntPoly& p, const IntPoly& q) {
  if (q.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (p.is_zero()) return {};
  const Term& lead = q.leading_term();
  if (q.size() == 1) {
    std::vector<Term> out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) {
      auto m = t.monomial.quotient(lead.monomial);
      if (!m || !mpz_divisible_p(t.coeff.get_mpz_t(), lead.coeff.get_mpz_t())) {
        throw NotDivisible("polynomial is not divisible by the monomial divisor");
      }
      Integer c;
      mpz_divexact(c.get_mpz_t(), t.coeff.get_mpz_t(), lead.coeff.get_mpz_t());
      out.push_back(Term{std::move(*m), std::move(c)});
    }
    return IntPoly::from_terms(std::move(out));
  }

  std::map<Monomial, Integer, std::greater<>> rem;
  for (const auto& t : p.terms()) rem.emplace(t.monomial, t.coeff);
  std::vector<Term> quotient;
  while (!rem.empty()) {
    auto top = rem.begin();
    auto m = top->first.quotient(lead.monomial);
    if (!m || !mpz_divisible_p(top->second.get_mpz_t(), lead.coeff.get_mpz_t())) {
      throw NotDivisible("polynomial division leaves a nonzero remainder");
    }
    Integer c;
    mpz_divexact(c.get_mpz_t(), top->second.get_mpz_t(), lead.coeff.get_mpz_t());
    rem.erase(top);
    Integer prod;
    for (std::size_t i = 1; i < q.size(); ++i) {
      const Term& t = q.terms()[i];
      mpz_mul(prod.get_mpz_t(), c.get_mpz_t(), t.coeff.get_mpz_t());
      auto [it, inserted] = rem.try_emplace(*m * t.monomial);
      it->second -= prod;
      if (it->second == 0) rem.erase(it);
    }
    quotient.push_back(Term{std::move(*m), std::move(c)});
  }
  return IntPoly::from_terms(std::move(quotient));
}

IntPoly exact_div(const IntPoly& p, const Integer& k) {
  if (k == 0) throw DivisionByZero("polynomial division by integer zero");
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    if (!mpz_divisible_p(t.coeff.get_mpz_t(), k.get_mpz_t())) {
      throw NotDivisible("coefficient " + t.coeff.get_str() + " is not divisible by " + k.get_str());
    }
    Integer c;
    mpz_divexact(c.get_mpz_t(), t.coeff.get_mpz_t(), k.get_mpz_t());
    out.push_back(Term{t.monomial, std::move(c)});
  }
  return IntPoly::from_terms(std::move(out));
}

Integer eval_ones(const IntPoly& p) {
  Integer sum = 0;
  for (const auto& t : p.terms()) sum += t.coeff;
  return sum;
}

std::optional<std::uint32_t> homogeneous_degree(const IntPoly& p) {
  if (p.is_zero()) return 0u;
  const auto d = p.terms().front().monomial.degree();
  for (const auto& t : p.terms()) {
    if (t.monomial.degree() != d) return std::nullopt;
  }
  return d;
}

// ---------------------------------------------------------------- text form

std::string to_string(const Monomial& m, const VarNames& names) {
  if (m.is_one()) return "1";
  std::string out;
  for (const auto& [v, e] : m.factors()) {
    if (!out.empty()) out += '*';
    out += names.name(v);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

std::string to_string(const IntPoly& p, const VarNames& names) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool negative = t.coeff < 0;
    Integer magnitude = abs(t.coeff);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.monomial.is_one()) {
      out += magnitude.get_str();
    } else {
      if (magnitude != 1) out += magnitude.get_str() + '*';
      out += to_string(t.monomial, names);
    }
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, VarNames& names) : text_(text), names_(names) {}

  IntPoly parse() {
    std::vector<Term> terms;
    skip_ws();
    int sign = 1;
    if (peek() == '-') {
      sign = -1;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    terms.push_back(parse_term(sign));
    for (;;) {
      skip_ws();
      if (pos_ == text_.size()) break;
      const char c = text_[pos_];
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      ++pos_;
      terms.push_back(parse_term(c == '-' ? -1 : 1));
    }
    return IntPoly::from_terms(std::move(terms));
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw PolyParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  Term parse_term(int sign) {
    Integer coeff = sign;
    std::vector<Monomial::Factor> factors;
    for (;;) {
      skip_ws();
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= parse_integer();
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
          ++pos_;
        }
        const VarId v = names_.intern(text_.substr(start, pos_ - start));
        std::uint32_t e = 1;
        skip_ws();
        if (peek() == '^') {
          ++pos_;
          skip_ws();
          if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
          e = static_cast<std::uint32_t>(parse_integer().get_ui());
        }
        factors.emplace_back(v, e);
      } else {
        fail("expected a coefficient or a variable");
      }
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
    }
    return Term{Monomial::from_factors(std::move(factors)), std::move(coeff)};
  }

  Integer parse_integer() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  VarNames& names_;
  std::size_t pos_ = 0;
};

}  // namespace

IntPoly parse_poly(std::string_view text, VarNames& names) { return PolyParser(text, names).parse(); }

}  // namespace arbor
