#include "torusfill/surd.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <sstream>

#include <mpfr.h>

namespace torusfill {

namespace {

std::uint64_t largest_prime_factor(std::uint64_t n) {
  std::uint64_t largest = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      largest = p;
      n /= p;
    }
  }
  if (n > 1) largest = n;
  return largest;
}

/// Splits x = a + b*sqrt(p) where neither a nor b involves the prime p.
void split_by_prime(const Surd& x, std::uint64_t p, Surd& a, Surd& b) {
  std::vector<std::pair<std::uint64_t, Rational>> at, bt;
  for (const auto& [n, c] : x.terms()) {
    if (n % p == 0) {
      bt.emplace_back(n / p, c);
    } else {
      at.emplace_back(n, c);
    }
  }
  a = Surd::from_terms(at);
  b = Surd::from_terms(bt);
}

std::uint64_t pivot_prime(const Surd& x) {
  std::uint64_t best = 1;
  for (const auto& [n, c] : x.terms()) {
    if (n > 1) best = std::max(best, largest_prime_factor(n));
  }
  return best;
}

}  // namespace

SquarefreeSplit squarefree_split(std::uint64_t n) {
  if (n == 0) throw SurdError("squarefree_split: zero");
  std::uint64_t square = 1;
  std::uint64_t core = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) square *= p;
    if (e % 2 == 1) core *= p;
  }
  core *= n;
  return {square, core};
}

bool is_squarefree(std::uint64_t n) { return n > 0 && squarefree_split(n).square_root == 1; }

Surd::Surd(const Rational& q) {
  if (q != 0) {
    Rational c = q;
    c.canonicalize();
    terms_.emplace(1, c);
  }
}

Surd Surd::rational(long num, long den) {
  if (den == 0) throw SurdError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return Surd(q);
}

Surd Surd::sqrt(std::uint64_t n, const Rational& c) {
  if (n == 0) return Surd();
  auto [s, core] = squarefree_split(n);
  Surd out;
  out.add_term(core, c * Rational(Integer(static_cast<unsigned long>(s))));
  return out;
}

Surd Surd::from_terms(const std::vector<std::pair<std::uint64_t, Rational>>& terms) {
  Surd out;
  for (const auto& [n, c] : terms) {
    if (n == 0) continue;
    auto [s, core] = squarefree_split(n);
    out.add_term(core, c * Rational(Integer(static_cast<unsigned long>(s))));
  }
  return out;
}

void Surd::add_term(std::uint64_t radicand, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(radicand);
  if (it == terms_.end()) {
    Rational v = c;
    v.canonicalize();
    terms_.emplace(radicand, v);
    return;
  }
  it->second += c;
  it->second.canonicalize();
  if (it->second == 0) terms_.erase(it);
}

bool Surd::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

Rational Surd::rational_part() const {
  auto it = terms_.find(1);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Surd::to_rational() const {
  if (!is_rational()) throw SurdError("to_rational on irrational scalar " + to_string());
  return rational_part();
}

Surd Surd::operator-() const {
  Surd out = *this;
  for (auto& [n, c] : out.terms_) c = -c;
  return out;
}

Surd& Surd::operator+=(const Surd& o) {
  for (const auto& [n, c] : o.terms_) add_term(n, c);
  return *this;
}

Surd& Surd::operator-=(const Surd& o) {
  for (const auto& [n, c] : o.terms_) add_term(n, -c);
  return *this;
}

Surd operator*(const Surd& a, const Surd& b) {
  Surd out;
  for (const auto& [m, cm] : a.terms_) {
    for (const auto& [n, cn] : b.terms_) {
      // sqrt(m) sqrt(n) = g sqrt(m n / g^2) for squarefree m, n with g = gcd(m, n).
      const std::uint64_t g = std::gcd(m, n);
      const std::uint64_t core = (m / g) * (n / g);
      out.add_term(core, cm * cn * Rational(Integer(static_cast<unsigned long>(g))));
    }
  }
  return out;
}

Surd& Surd::operator*=(const Surd& o) {
  *this = *this * o;
  return *this;
}

Surd& Surd::operator/=(const Surd& o) {
  *this = *this * o.inverse();
  return *this;
}

int Surd::sign() const {
  if (terms_.empty()) return 0;
  if (is_rational()) return sgn(terms_.begin()->second);
  const std::uint64_t p = pivot_prime(*this);
  Surd a, b;
  split_by_prime(*this, p, a, b);
  const int sa = a.sign();
  const int sb = b.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 with p b^2, both free of sqrt(p).
  const Surd diff = a * a - Surd(Rational(Integer(static_cast<unsigned long>(p)))) * b * b;
  const int sd = diff.sign();
  if (sd == 0) throw SurdError("sign: inconsistent canonical form");
  return sd > 0 ? sa : sb;
}

Surd Surd::inverse() const {
  if (terms_.empty()) throw SurdError("division by zero scalar");
  if (is_rational()) return Surd(Rational(1) / terms_.begin()->second);
  const std::uint64_t p = pivot_prime(*this);
  Surd a, b;
  split_by_prime(*this, p, a, b);
  const Surd root_p = Surd::sqrt(p);
  const Surd conj = a - b * root_p;
  const Surd norm = a * a - Surd(Rational(Integer(static_cast<unsigned long>(p)))) * b * b;
  return conj * norm.inverse();
}

long double Surd::to_long_double() const {
  long double v = 0.0L;
  for (const auto& [n, c] : terms_) {
    v += static_cast<long double>(c.get_d()) * std::sqrt(static_cast<long double>(n));
  }
  return v;
}

double Surd::to_double() const { return static_cast<double>(to_long_double()); }

std::string Surd::to_decimal(int digits) const {
  if (digits < 1) digits = 1;
  const mpfr_prec_t prec = static_cast<mpfr_prec_t>(digits * 3.33) + 64;
  mpfr_t acc, term, root;
  mpfr_inits2(prec, acc, term, root, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_ui(acc, 0, MPFR_RNDN);
  for (const auto& [n, c] : terms_) {
    mpfr_set_ui(root, static_cast<unsigned long>(n), MPFR_RNDN);
    mpfr_sqrt(root, root, MPFR_RNDN);
    mpfr_set_q(term, c.get_mpq_t(), MPFR_RNDN);
    mpfr_mul(term, term, root, MPFR_RNDN);
    mpfr_add(acc, acc, term, MPFR_RNDN);
  }
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", digits, acc);
  std::string out(buf);
  mpfr_free_str(buf);
  mpfr_clears(acc, term, root, static_cast<mpfr_ptr>(nullptr));
  return out;
}

std::string Surd::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [n, c] : terms_) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (n == 1) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << "sqrt(" << n << ")";
    }
  }
  return os.str();
}

std::vector<std::uint64_t> Surd::radicands() const {
  std::vector<std::uint64_t> out;
  for (const auto& [n, c] : terms_) {
    if (n != 1) out.push_back(n);
  }
  return out;
}

Surd min(const Surd& a, const Surd& b) { return a <= b ? a : b; }
Surd max(const Surd& a, const Surd& b) { return a >= b ? a : b; }

std::size_t rational_rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const Rational factor = rows[r][col] / rows[rank][col];
      for (std::size_t c = col; c < cols; ++c) rows[r][c] -= factor * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

std::size_t surd_rank(std::span<const Surd> values) {
  std::map<std::uint64_t, std::size_t> column;
  for (const auto& v : values) {
    for (const auto& [n, c] : v.terms()) column.emplace(n, 0);
  }
  if (column.empty()) return 0;
  std::size_t idx = 0;
  for (auto& [n, i] : column) i = idx++;
  std::vector<std::vector<Rational>> rows(values.size(), std::vector<Rational>(column.size()));
  for (std::size_t r = 0; r < values.size(); ++r) {
    for (const auto& [n, c] : values[r].terms()) rows[r][column.at(n)] = c;
  }
  return rational_rank(std::move(rows));
}

bool rationally_independent(std::span<const Surd> values) {
  if (values.empty()) throw SurdError("rationally_independent: empty list");
  std::map<std::uint64_t, std::size_t> column;
  for (const auto& v : values) {
    for (const auto& [n, c] : v.terms()) column.emplace(n, 0);
  }
  if (column.size() < values.size()) return false;
  std::size_t idx = 0;
  for (auto& [n, i] : column) i = idx++;
  std::vector<std::vector<Rational>> rows(values.size(), std::vector<Rational>(column.size()));
  for (std::size_t r = 0; r < values.size(); ++r) {
    for (const auto& [n, c] : values[r].terms()) rows[r][column.at(n)] = c;
  }
  return rational_rank(std::move(rows)) == values.size();
}

std::uint64_t fresh_prime(std::span<const Surd> used, std::uint64_t start) {
  auto is_prime = [](std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) return false;
    }
    return true;
  };
  for (std::uint64_t p = std::max<std::uint64_t>(start, 2);; ++p) {
    if (!is_prime(p)) continue;
    bool clash = false;
    for (const auto& v : used) {
      for (const auto& [n, c] : v.terms()) {
        if (n % p == 0) clash = true;
      }
    }
    if (!clash) return p;
  }
}

namespace {

Rational parse_rational_token(const std::string& s) {
  if (s.empty()) throw SurdError("empty number");
  const auto slash = s.find('/');
  Rational q;
  try {
    if (slash == std::string::npos) {
      q = Rational(Integer(s));
    } else {
      q = Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
      if (q.get_den() == 0) throw SurdError("zero denominator in '" + s + "'");
    }
  } catch (const std::invalid_argument&) {
    throw SurdError("malformed number '" + s + "'");
  }
  q.canonicalize();
  return q;
}

}  // namespace

Surd parse_surd(const std::string& text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) throw SurdError("empty scalar");
  Surd out;
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    }
    std::size_t j = i;
    while (j < s.size() && s[j] != '+' && s[j] != '-') {
      if (s[j] == '(') {
        j = s.find(')', j);
        if (j == std::string::npos) throw SurdError("unbalanced parenthesis in '" + text + "'");
      }
      ++j;
    }
    const std::string term = s.substr(i, j - i);
    if (term.empty()) throw SurdError("malformed scalar '" + text + "'");
    Rational coeff = 1;
    std::uint64_t radicand = 1;
    const auto sq = term.find("sqrt(");
    if (sq == std::string::npos) {
      coeff = parse_rational_token(term);
    } else {
      std::string head = term.substr(0, sq);
      if (!head.empty()) {
        if (head.back() != '*') throw SurdError("expected '*' before sqrt in '" + term + "'");
        head.pop_back();
        coeff = parse_rational_token(head);
      }
      const auto close = term.find(')', sq);
      if (close == std::string::npos || close + 1 != term.size()) {
        throw SurdError("malformed sqrt in '" + term + "'");
      }
      const std::string arg = term.substr(sq + 5, close - sq - 5);
      if (arg.empty() || !std::all_of(arg.begin(), arg.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        throw SurdError("sqrt argument must be a positive integer in '" + term + "'");
      }
      radicand = std::stoull(arg);
    }
    out += Surd::sqrt(radicand, sign * coeff);
    i = j;
  }
  return out;
}

}  // namespace torusfill
