#include "twistknot/laurent.hpp"

#include <cctype>
#include <sstream>

namespace twistknot {

// ---------------------------------------------------------------------------
// LaurentPoly2

LaurentPoly2 LaurentPoly2::monomial(const BigInt& c, int ea, int eq) {
  LaurentPoly2 p;
  p.add_term(c, ea, eq);
  return p;
}

bool LaurentPoly2::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == Exp2{0, 0} &&
         terms_.begin()->second == 1;
}

BigInt LaurentPoly2::coeff(int ea, int eq) const {
  auto it = terms_.find(Exp2{ea, eq});
  return it == terms_.end() ? BigInt(0) : it->second;
}

void LaurentPoly2::add_term(const BigInt& c, int ea, int eq) {
  if (c == 0) return;
  Exp2 key{ea, eq};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& o) {
  for (const auto& [e, c] : o.terms_) add_term(c, e.a, e.q);
  return *this;
}

LaurentPoly2& LaurentPoly2::operator-=(const LaurentPoly2& o) {
  for (const auto& [e, c] : o.terms_) {
    BigInt nc = -c;
    add_term(nc, e.a, e.q);
  }
  return *this;
}

LaurentPoly2 LaurentPoly2::operator-() const {
  LaurentPoly2 r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, BigInt(-c));
  return r;
}

LaurentPoly2 operator*(const LaurentPoly2& x, const LaurentPoly2& y) {
  LaurentPoly2 r;
  if (x.is_zero() || y.is_zero()) return r;
  for (const auto& [ex, cx] : x.terms_) {
    for (const auto& [ey, cy] : y.terms_) {
      BigInt c = cx * cy;
      r.add_term(c, ex.a + ey.a, ex.q + ey.q);
    }
  }
  return r;
}

LaurentPoly2& LaurentPoly2::operator*=(const LaurentPoly2& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly2& LaurentPoly2::mul_monomial(const BigInt& c, int ea, int eq) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  TermMap out;
  for (const auto& [e, v] : terms_) {
    out.emplace(Exp2{e.a + ea, e.q + eq}, BigInt(v * c));
  }
  terms_ = std::move(out);
  return *this;
}

LaurentPoly2 LaurentPoly2::mirrored() const {
  LaurentPoly2 r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(Exp2{-e.a, -e.q}, c);
  return r;
}

LaurentPoly2 LaurentPoly2::subst_neg_q_inv() const {
  LaurentPoly2 r;
  for (const auto& [e, c] : terms_) {
    BigInt v = (e.q % 2 != 0) ? BigInt(-c) : c;
    r.terms_.emplace(Exp2{e.a, -e.q}, std::move(v));
  }
  return r;
}

LaurentPoly1 LaurentPoly2::substitute_a(int N) const {
  LaurentPoly1 r;
  for (const auto& [e, c] : terms_) r.add_term(c, e.q + N * e.a);
  return r;
}

std::string LaurentPoly2::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool neg = c < 0;
    BigInt mag = abs(c);
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    std::vector<std::string> parts;
    if (mag != 1 || (e.a == 0 && e.q == 0)) parts.push_back(mag.get_str());
    if (e.a != 0)
      parts.push_back(e.a == 1 ? "a" : "a^" + std::to_string(e.a));
    if (e.q != 0)
      parts.push_back(e.q == 1 ? "q" : "q^" + std::to_string(e.q));
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) out += "*";
      out += parts[i];
    }
  }
  return out;
}

LaurentPoly2 LaurentPoly2::parse(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  LaurentPoly2 out;
  if (s.empty() || s == "0") return out;
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+') {
      ++i;
    } else if (s[i] == '-') {
      sign = -1;
      ++i;
    }
    BigInt coeff = 1;
    int ea = 0, eq = 0;
    bool any = false;
    while (i < s.size() && s[i] != '+' && s[i] != '-') {
      if (s[i] == '*') {
        ++i;
        continue;
      }
      if (s[i] == 'a' || s[i] == 'q') {
        const char var = s[i++];
        long e = 1;
        if (i < s.size() && s[i] == '^') {
          ++i;
          bool eneg = false;
          if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
            eneg = (s[i] == '-');
            ++i;
          }
          std::string digits;
          while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            digits += s[i++];
          if (digits.empty())
            throw std::invalid_argument("polynomial parse: missing exponent");
          e = std::stol(digits);
          if (eneg) e = -e;
        }
        (var == 'a' ? ea : eq) += static_cast<int>(e);
        any = true;
      } else if (std::isdigit(static_cast<unsigned char>(s[i]))) {
        std::string digits;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
          digits += s[i++];
        coeff *= BigInt(digits);
        any = true;
      } else {
        throw std::invalid_argument(std::string("polynomial parse: unexpected '") +
                                    s[i] + "'");
      }
    }
    if (!any) throw std::invalid_argument("polynomial parse: empty term");
    if (sign < 0) coeff = -coeff;
    out.add_term(coeff, ea, eq);
  }
  return out;
}

// ---------------------------------------------------------------------------
// LaurentPoly1

LaurentPoly1 LaurentPoly1::monomial(const BigInt& c, int e) {
  LaurentPoly1 p;
  p.add_term(c, e);
  return p;
}

bool LaurentPoly1::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 &&
         terms_.begin()->second == 1;
}

void LaurentPoly1::add_term(const BigInt& c, int e) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly1& LaurentPoly1::operator+=(const LaurentPoly1& o) {
  for (const auto& [e, c] : o.terms_) add_term(c, e);
  return *this;
}

LaurentPoly1 operator*(const LaurentPoly1& x, const LaurentPoly1& y) {
  LaurentPoly1 r;
  for (const auto& [ex, cx] : x.terms_)
    for (const auto& [ey, cy] : y.terms_) {
      BigInt c = cx * cy;
      r.add_term(c, ex + ey);
    }
  return r;
}

LaurentPoly1 LaurentPoly1::mirrored() const {
  LaurentPoly1 r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
  return r;
}

std::string LaurentPoly1::str(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool neg = c < 0;
    BigInt mag = abs(c);
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    if (mag != 1 || e == 0) {
      out += mag.get_str();
      if (e != 0) out += "*";
    }
    if (e != 0) {
      out += var;
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// QFactor

QFactor QFactor::brace(int k) {
  QFactor f;
  f.kind_ = Kind::Brace;
  f.k_ = k;
  return f;
}

QFactor QFactor::brace_a(int k) {
  QFactor f;
  f.kind_ = Kind::BraceA;
  f.k_ = k;
  return f;
}

QFactor QFactor::integer(const BigInt& c) {
  QFactor f;
  f.kind_ = Kind::Int;
  f.c_ = c;
  return f;
}

QFactor QFactor::monomial(int ea, int eq) {
  QFactor f;
  f.kind_ = Kind::Monomial;
  f.ea_ = ea;
  f.eq_ = eq;
  return f;
}

LaurentPoly2 QFactor::expand() const {
  switch (kind_) {
    case Kind::Brace: {
      LaurentPoly2 p;
      p.add_term(BigInt(1), 0, k_);
      p.add_term(BigInt(-1), 0, -k_);
      return p;
    }
    case Kind::BraceA: {
      LaurentPoly2 p;
      p.add_term(BigInt(1), 1, k_);
      p.add_term(BigInt(-1), -1, -k_);
      return p;
    }
    case Kind::Int:
      return LaurentPoly2::monomial(c_, 0, 0);
    case Kind::Monomial:
      return LaurentPoly2::monomial(BigInt(1), ea_, eq_);
  }
  return {};
}

std::string QFactor::str() const {
  switch (kind_) {
    case Kind::Brace:
      return "{" + std::to_string(k_) + "}";
    case Kind::BraceA:
      return "{" + std::to_string(k_) + ";a}";
    case Kind::Int:
      return c_.get_str();
    case Kind::Monomial:
      return LaurentPoly2::monomial(BigInt(1), ea_, eq_).str();
  }
  return "";
}

// ---------------------------------------------------------------------------
// Exact division

namespace {

// Divide p by (q^{m} - 1), m > 0. Layers indexed by e_q; the top layer is
// moved down by m. Exact since the divisor is monic in q; throws when a
// nonzero remainder would be left (span over q inevitably < m).
LaurentPoly2 div_q_binomial(const LaurentPoly2& p, int m) {
  std::map<int, std::map<int, BigInt>> layers;  // e_q -> (e_a -> c)
  for (const auto& [e, c] : p.terms()) layers[e.q][e.a] = c;
  LaurentPoly2 quot;
  while (!layers.empty()) {
    const int top = layers.rbegin()->first;
    const int bot = layers.begin()->first;
    if (top - bot < m)
      throw NotDivisible("not divisible by a q-binomial factor");
    auto layer = std::move(layers.rbegin()->second);
    layers.erase(top);
    const int dst = top - m;
    auto& lower = layers[dst];
    for (auto& [ea, c] : layer) {
      quot.add_term(c, ea, dst);
      auto it = lower.find(ea);
      if (it == lower.end()) {
        lower.emplace(ea, std::move(c));
      } else {
        it->second += c;
        if (it->second == 0) lower.erase(it);
      }
    }
    if (lower.empty()) layers.erase(dst);
  }
  return quot;
}

// Divide p by (a^2 q^{m} - 1) for any integer m. Layers indexed by e_a;
// the top layer is moved down by 2 in a and by m in q.
LaurentPoly2 div_a_binomial(const LaurentPoly2& p, int m) {
  std::map<int, std::map<int, BigInt>> layers;  // e_a -> (e_q -> c)
  for (const auto& [e, c] : p.terms()) layers[e.a][e.q] = c;
  LaurentPoly2 quot;
  while (!layers.empty()) {
    const int top = layers.rbegin()->first;
    const int bot = layers.begin()->first;
    if (top - bot < 2)
      throw NotDivisible("not divisible by an a-binomial factor");
    auto layer = std::move(layers.rbegin()->second);
    layers.erase(top);
    auto& lower = layers[top - 2];
    for (auto& [eq, c] : layer) {
      quot.add_term(c, top - 2, eq - m);
      auto it = lower.find(eq - m);
      if (it == lower.end()) {
        lower.emplace(eq - m, std::move(c));
      } else {
        it->second += c;
        if (it->second == 0) lower.erase(it);
      }
    }
    if (lower.empty()) layers.erase(top - 2);
  }
  return quot;
}

}  // namespace

LaurentPoly2 divide_exact(const LaurentPoly2& num, const QFactor& f) {
  switch (f.kind()) {
    case QFactor::Kind::Int: {
      if (f.value() == 0) throw ZeroFactor("division by integer zero");
      LaurentPoly2 r;
      for (const auto& [e, c] : num.terms()) {
        if (!mpz_divisible_p(c.get_mpz_t(), f.value().get_mpz_t()))
          throw NotDivisible("coefficient not divisible by integer factor");
        BigInt q;
        mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), f.value().get_mpz_t());
        r.add_term(q, e.a, e.q);
      }
      return r;
    }
    case QFactor::Kind::Monomial: {
      LaurentPoly2 r = num;
      r.mul_monomial(BigInt(1), -f.exp_a(), -f.exp_q());
      return r;
    }
    case QFactor::Kind::Brace: {
      int k = f.index();
      if (k == 0) throw ZeroFactor("{0} used as a divisor");
      const bool negate = k < 0;  // {-k} = -{k}
      if (negate) k = -k;
      if (num.is_zero()) return num;
      LaurentPoly2 shifted = num;
      shifted.mul_monomial(BigInt(1), 0, k);  // num / {k} = num*q^k / (q^{2k}-1)
      LaurentPoly2 g = div_q_binomial(shifted, 2 * k);
      return negate ? -g : g;
    }
    case QFactor::Kind::BraceA: {
      const int k = f.index();
      if (num.is_zero()) return num;
      LaurentPoly2 shifted = num;
      shifted.mul_monomial(BigInt(1), 1, k);  // num / {k;a} = num*a*q^k / (a^2 q^{2k}-1)
      return div_a_binomial(shifted, 2 * k);
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// FactorProduct

bool FactorProduct::is_one() const {
  return binomials_.empty() && content_ == 1 && mono_a_ == 0 && mono_q_ == 0;
}

FactorProduct& FactorProduct::mul(const QFactor& f, int multiplicity) {
  if (multiplicity == 0) return *this;
  if (multiplicity < 0) throw std::invalid_argument("negative multiplicity");
  switch (f.kind()) {
    case QFactor::Kind::Brace: {
      int k = f.index();
      if (k == 0) throw ZeroFactor("{0} rejected as a denominator factor");
      if (k < 0) {
        k = -k;
        if (multiplicity % 2 != 0) content_ = -content_;
      }
      binomials_[{false, k}] += multiplicity;
      break;
    }
    case QFactor::Kind::BraceA:
      binomials_[{true, f.index()}] += multiplicity;
      break;
    case QFactor::Kind::Int: {
      if (f.value() == 0) throw ZeroFactor("0 rejected as a denominator factor");
      for (int t = 0; t < multiplicity; ++t) content_ *= f.value();
      break;
    }
    case QFactor::Kind::Monomial:
      mono_a_ += f.exp_a() * multiplicity;
      mono_q_ += f.exp_q() * multiplicity;
      break;
  }
  return *this;
}

FactorProduct& FactorProduct::mul(const FactorProduct& o) {
  for (const auto& [key, mult] : o.binomials_) binomials_[key] += mult;
  content_ *= o.content_;
  mono_a_ += o.mono_a_;
  mono_q_ += o.mono_q_;
  return *this;
}

bool FactorProduct::remove_brace_a(int k) {
  auto it = binomials_.find({true, k});
  if (it == binomials_.end()) return false;
  if (--it->second == 0) binomials_.erase(it);
  return true;
}

LaurentPoly2 FactorProduct::expand() const {
  LaurentPoly2 r = LaurentPoly2::monomial(content_, mono_a_, mono_q_);
  for (const auto& [key, mult] : binomials_) {
    const auto& [is_a, k] = key;
    const LaurentPoly2 base =
        (is_a ? QFactor::brace_a(k) : QFactor::brace(k)).expand();
    for (int t = 0; t < mult; ++t) r *= base;
  }
  return r;
}

FactorProduct FactorProduct::lcm(const FactorProduct& x, const FactorProduct& y) {
  FactorProduct r;
  r.binomials_ = x.binomials_;
  for (const auto& [key, mult] : y.binomials_) {
    int& m = r.binomials_[key];
    if (mult > m) m = mult;
  }
  mpz_lcm(r.content_.get_mpz_t(), x.content_.get_mpz_t(), y.content_.get_mpz_t());
  return r;
}

FactorProduct FactorProduct::cofactor_in(const FactorProduct& super) const {
  FactorProduct r;
  r.binomials_ = super.binomials_;
  for (const auto& [key, mult] : binomials_) {
    auto it = r.binomials_.find(key);
    if (it == r.binomials_.end() || it->second < mult)
      throw std::logic_error("cofactor_in: not a sub-multiset");
    it->second -= mult;
    if (it->second == 0) r.binomials_.erase(it);
  }
  if (!mpz_divisible_p(super.content_.get_mpz_t(), content_.get_mpz_t()))
    throw std::logic_error("cofactor_in: content does not divide");
  mpz_divexact(r.content_.get_mpz_t(), super.content_.get_mpz_t(),
               content_.get_mpz_t());
  r.mono_a_ = super.mono_a_ - mono_a_;
  r.mono_q_ = super.mono_q_ - mono_q_;
  return r;
}

bool operator==(const FactorProduct& x, const FactorProduct& y) {
  return x.binomials_ == y.binomials_ && x.content_ == y.content_ &&
         x.mono_a_ == y.mono_a_ && x.mono_q_ == y.mono_q_;
}

std::string FactorProduct::str() const {
  std::vector<std::string> parts;
  if (content_ != 1) parts.push_back(content_.get_str());
  if (mono_a_ != 0 || mono_q_ != 0)
    parts.push_back(LaurentPoly2::monomial(BigInt(1), mono_a_, mono_q_).str());
  for (const auto& [key, mult] : binomials_) {
    const auto& [is_a, k] = key;
    std::string s = "{" + std::to_string(k) + (is_a ? ";a}" : "}");
    if (mult > 1) s += "^" + std::to_string(mult);
    parts.push_back(s);
  }
  if (parts.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += "*";
    out += parts[i];
  }
  return out;
}

// ---------------------------------------------------------------------------
// QRational

QRational::QRational(LaurentPoly2 num) : num_(std::move(num)) {}

QRational::QRational(LaurentPoly2 num, FactorProduct den)
    : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

QRational QRational::from_int(long c) {
  return QRational(LaurentPoly2::constant(c));
}

const QRational& QRational::one() {
  static const QRational v = from_int(1);
  return v;
}

void QRational::normalize() {
  if (num_.is_zero()) {
    den_ = FactorProduct();
    return;
  }
  if (den_.mono_a_ != 0 || den_.mono_q_ != 0) {
    num_.mul_monomial(BigInt(1), -den_.mono_a_, -den_.mono_q_);
    den_.mono_a_ = 0;
    den_.mono_q_ = 0;
  }
  if (den_.content_ < 0) {
    num_ = -num_;
    den_.content_ = -den_.content_;
  }
}

QRational& QRational::operator+=(const QRational& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) {
    *this = o;
    return *this;
  }
  FactorProduct common = FactorProduct::lcm(den_, o.den_);
  LaurentPoly2 n = num_ * den_.cofactor_in(common).expand() +
                   o.num_ * o.den_.cofactor_in(common).expand();
  num_ = std::move(n);
  den_ = std::move(common);
  normalize();
  return *this;
}

QRational& QRational::operator-=(const QRational& o) {
  *this += -o;
  return *this;
}

QRational QRational::operator-() const {
  QRational r = *this;
  r.num_ = -r.num_;
  return r;
}

QRational& QRational::operator*=(const QRational& o) {
  num_ *= o.num_;
  den_.mul(o.den_);
  normalize();
  return *this;
}

QRational& QRational::mul_poly(const LaurentPoly2& p) {
  num_ *= p;
  normalize();
  return *this;
}

QRational& QRational::mul_monomial(const BigInt& c, int ea, int eq) {
  num_.mul_monomial(c, ea, eq);
  normalize();
  return *this;
}

QRational& QRational::div_factor(const QFactor& f, int multiplicity) {
  den_.mul(f, multiplicity);
  normalize();
  return *this;
}

QRational& QRational::div_factors(const FactorProduct& fp) {
  den_.mul(fp);
  normalize();
  return *this;
}

QRational QRational::mirrored() const {
  QRational r;
  r.num_ = num_.mirrored();
  r.den_ = den_;
  // mirror({k}) = -{k} and mirror({k;a}) = -{k;a}: the factor multiset is
  // unchanged up to one sign per factor copy.
  long flips = 0;
  for (const auto& [key, mult] : den_.binomials_) {
    (void)key;
    flips += mult;
  }
  if (flips % 2 != 0) r.num_ = -r.num_;
  r.den_.mono_a_ = -den_.mono_a_;
  r.den_.mono_q_ = -den_.mono_q_;
  r.normalize();
  return r;
}

QRational QRational::subst_neg_q_inv() const {
  // q -> -q^{-1}: {k} -> (-1)^{k+1}{k}, {k;a} -> (-1)^k {-k;a}.
  QRational r;
  r.num_ = num_.subst_neg_q_inv();
  long flips = 0;
  for (const auto& [key, mult] : den_.binomials_) {
    const auto& [is_a, k] = key;
    if (is_a) {
      r.den_.binomials_[{true, -k}] += mult;
      if (k % 2 != 0) flips += mult;
    } else {
      r.den_.binomials_[{false, k}] += mult;
      if ((k + 1) % 2 != 0) flips += mult;
    }
  }
  if (flips % 2 != 0) r.num_ = -r.num_;
  r.den_.content_ = den_.content_;
  r.den_.mono_a_ = den_.mono_a_;
  r.den_.mono_q_ = -den_.mono_q_;
  if (den_.mono_q_ % 2 != 0) r.num_ = -r.num_;
  r.normalize();
  return r;
}

LaurentPoly2 QRational::reduced() const {
  LaurentPoly2 p = num_;
  for (const auto& [key, mult] : den_.binomials()) {
    const auto& [is_a, k] = key;
    const QFactor f = is_a ? QFactor::brace_a(k) : QFactor::brace(k);
    for (int t = 0; t < mult; ++t) p = divide_exact(p, f);
  }
  if (den_.mono_a() != 0 || den_.mono_q() != 0)
    p.mul_monomial(BigInt(1), -den_.mono_a(), -den_.mono_q());
  if (den_.content() != 1) p = divide_exact(p, QFactor::integer(den_.content()));
  return p;
}

std::string QRational::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

bool rat_eq(const QRational& x, const QRational& y) {
  return x.num_ * y.den_.expand() == y.num_ * x.den_.expand();
}

}  // namespace twistknot
