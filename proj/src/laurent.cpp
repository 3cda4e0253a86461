#include "abcg/laurent.hpp"

#include <cctype>
#include <sstream>

#include "abcg/errors.hpp"

namespace abcg {

LaurentPoly::LaurentPoly(Int c, std::int64_t e) {
  if (c != 0) terms_.emplace(e, std::move(c));
}

std::int64_t LaurentPoly::min_exp() const { return terms_.begin()->first; }
std::int64_t LaurentPoly::max_exp() const { return terms_.rbegin()->first; }

Int LaurentPoly::coeff(std::int64_t e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPoly::add_term(std::int64_t e, const Int& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPoly LaurentPoly::shifted(std::int64_t k) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
  return r;
}

LaurentPoly LaurentPoly::scaled(const Int& c) const {
  LaurentPoly r;
  if (c == 0) return r;
  for (const auto& [e, coef] : terms_) r.terms_.emplace(e, coef * c);
  return r;
}

Int LaurentPoly::evaluate_at_one() const {
  Int s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Int c = it->second;
    if (first) {
      if (c < 0) {
        out << "-";
        c = -c;
      }
    } else {
      out << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    if (c != 1) out << c << "*";
    out << "X^" << it->first;
    first = false;
  }
  return out.str();
}

namespace {

struct PolyScanner {
  std::string_view s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() { return s[i]; }
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg, 0, static_cast<int>(i) + 1);
  }
  Int integer() {
    skip_ws();
    std::size_t start = i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    std::size_t digits = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == digits) fail("expected integer");
    return Int(std::string(s.substr(start, i - start)));
  }
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) {
  PolyScanner sc{text};
  LaurentPoly result;
  bool any = false;
  int sign = 1;
  sc.skip_ws();
  if (sc.done()) sc.fail("empty polynomial");
  while (!sc.done()) {
    if (any) {
      char op = sc.peek();
      if (op != '+' && op != '-') sc.fail("expected '+' or '-'");
      sign = op == '-' ? -1 : 1;
      ++sc.i;
      sc.skip_ws();
      if (sc.done()) sc.fail("dangling operator");
    } else if (sc.peek() == '+' || sc.peek() == '-') {
      sign = sc.peek() == '-' ? -1 : 1;
      ++sc.i;
      sc.skip_ws();
    }
    // term: [int] ['*'] [X ['^' int]]  (at least one of the parts)
    Int c = 1;
    bool saw_coeff = false;
    if (sc.done()) sc.fail("expected term");
    if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
      c = sc.integer();
      saw_coeff = true;
      sc.skip_ws();
      if (!sc.done() && sc.peek() == '*') {
        ++sc.i;
        sc.skip_ws();
      }
    }
    std::int64_t e = 0;
    if (!sc.done() && (sc.peek() == 'X' || sc.peek() == 'x')) {
      ++sc.i;
      sc.skip_ws();
      if (!sc.done() && sc.peek() == '^') {
        ++sc.i;
        Int exp = sc.integer();
        e = static_cast<std::int64_t>(exp);
      } else {
        e = 1;
      }
    } else if (!saw_coeff) {
      sc.fail("expected coefficient or X");
    }
    result.add_term(e, sign * c);
    any = true;
    sign = 1;
  }
  if (!any) sc.fail("empty polynomial");
  return result;
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& p,
                                        const LaurentPoly& f) {
  if (p.is_zero()) {
    if (f.is_zero()) return LaurentPoly();
    return std::nullopt;
  }
  if (f.is_zero()) return LaurentPoly();
  // Shift both operands so their lowest exponent is 0; the shift difference
  // is a unit and is reapplied to the quotient.
  const std::int64_t shift = f.min_exp() - p.min_exp();
  LaurentPoly divisor = p.shifted(-p.min_exp());
  LaurentPoly rem = f.shifted(-f.min_exp());
  const std::int64_t dd = divisor.max_exp();
  const Int lead = divisor.coeff(dd);
  LaurentPoly quot;
  while (!rem.is_zero()) {
    const std::int64_t e = rem.max_exp();
    if (e < dd) return std::nullopt;
    const Int c = rem.coeff(e);
    if (c % lead != 0) return std::nullopt;
    LaurentPoly t(c / lead, e - dd);
    quot += t;
    rem -= t * divisor;
  }
  return quot.shifted(shift);
}

LaurentPoly geometric_sum(std::int64_t d, std::int64_t m) {
  LaurentPoly r;
  if (m >= 0) {
    for (std::int64_t i = 0; i < m; ++i) r += LaurentPoly(1, i * d);
  } else {
    for (std::int64_t i = 1; i <= -m; ++i) r -= LaurentPoly(1, -i * d);
  }
  return r;
}

std::vector<Int> taylor_at_one(const LaurentPoly& f, int k) {
  std::vector<Int> out;
  out.reserve(k);
  for (int j = 0; j < k; ++j) {
    Int v = 0;
    for (const auto& [e, c] : f.terms()) {
      Int falling = 1;  // e*(e-1)*...*(e-j+1)
      for (int t = 0; t < j; ++t) falling *= Int(e - t);
      v += c * falling;
    }
    out.push_back(v);
  }
  return out;
}

LaurentPoly x_minus_one_pow(int k) {
  LaurentPoly xm1 = LaurentPoly::variable() - LaurentPoly(1);
  LaurentPoly r(1);
  for (int i = 0; i < k; ++i) r = r * xm1;
  return r;
}

bool LaurentVec::is_zero() const {
  for (const auto& p : entries_)
    if (!p.is_zero()) return false;
  return true;
}

LaurentVec& LaurentVec::operator+=(const LaurentVec& o) {
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

LaurentVec& LaurentVec::operator-=(const LaurentVec& o) {
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

LaurentVec LaurentVec::operator-() const {
  LaurentVec r(rank());
  for (int i = 0; i < rank(); ++i) r[i] = -entries_[i];
  return r;
}

LaurentVec operator*(const LaurentPoly& s, const LaurentVec& v) {
  LaurentVec r(v.rank());
  for (int i = 0; i < v.rank(); ++i) r[i] = s * v[i];
  return r;
}

LaurentVec LaurentVec::shifted(std::int64_t k) const {
  LaurentVec r(rank());
  for (int i = 0; i < rank(); ++i) r[i] = entries_[i].shifted(k);
  return r;
}

LaurentVec LaurentVec::scaled(const Int& c) const {
  LaurentVec r(rank());
  for (int i = 0; i < rank(); ++i) r[i] = entries_[i].scaled(c);
  return r;
}

std::string LaurentVec::str() const {
  std::string out = "(";
  for (int i = 0; i < rank(); ++i) {
    if (i > 0) out += ", ";
    out += entries_[i].str();
  }
  out += ")";
  return out;
}

LaurentVec unit_vec(int rank, int pos, const LaurentPoly& p) {
  LaurentVec v(rank);
  v[pos] = p;
  return v;
}

}  // namespace abcg
