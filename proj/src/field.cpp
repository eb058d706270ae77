#include "tqdha/field.hpp"

#include <cctype>
#include <cstdlib>
#include <ostream>
#include <sstream>

namespace tqdha {

namespace detail {

struct FieldData {
  int order = 1;
  int degree = 1;
  RationalPoly modulus;                 // monic, size degree + 1
  std::vector<RationalPoly> reduction;  // x^{degree + i} mod modulus, i = 0..degree-2
  bool has_extension = false;
  RationalPoly radicand;  // base-field coefficients of d
  std::string radicand_text;

  bool same_as(const FieldData& o) const {
    return order == o.order && has_extension == o.has_extension && radicand == o.radicand;
  }
};

}  // namespace detail

namespace {

using detail::FieldData;

void trim(RationalPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RationalPoly poly_mul(const RationalPoly& a, const RationalPoly& b) {
  if (a.empty() || b.empty()) return {};
  RationalPoly out(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

// Polynomial long division over Q; divisor must be nonzero after trimming.
void poly_divmod(RationalPoly num, RationalPoly den, RationalPoly& quot, RationalPoly& rem) {
  trim(num);
  trim(den);
  quot.assign(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Rational(0));
  while (!num.empty() && num.size() >= den.size()) {
    size_t shift = num.size() - den.size();
    Rational c = num.back() / den.back();
    quot[shift] = c;
    for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
    trim(num);
  }
  rem = std::move(num);
}

// Reduce an arbitrary-length polynomial to the canonical length-`degree` vector.
RationalPoly reduce(const FieldData& f, RationalPoly p) {
  const size_t d = static_cast<size_t>(f.degree);
  if (p.size() <= d) {
    p.resize(d);
    return p;
  }
  if (p.size() > d + f.reduction.size()) {
    RationalPoly q, rem;
    poly_divmod(std::move(p), f.modulus, q, rem);
    rem.resize(d);
    return rem;
  }
  RationalPoly out(p.begin(), p.begin() + d);
  for (size_t k = d; k < p.size(); ++k) {
    if (p[k] == 0) continue;
    const auto& r = f.reduction[k - d];
    for (size_t i = 0; i < d; ++i) out[i] += p[k] * r[i];
  }
  return out;
}

RationalPoly base_mul(const FieldData& f, const RationalPoly& a, const RationalPoly& b) {
  return reduce(f, poly_mul(a, b));
}

bool all_zero(const RationalPoly& p) {
  for (const auto& c : p)
    if (c != 0) return false;
  return true;
}

RationalPoly base_inverse(const FieldData& f, const RationalPoly& a) {
  RationalPoly r0 = f.modulus, r1 = a;
  trim(r1);
  if (r1.empty()) throw NonInvertible("inverse of zero");
  RationalPoly s0, s1{Rational(1)};
  while (!r1.empty()) {
    RationalPoly q, r;
    poly_divmod(r0, r1, q, r);
    RationalPoly qs = poly_mul(q, s1);
    RationalPoly s2 = s0;
    if (s2.size() < qs.size()) s2.resize(qs.size());
    for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    trim(s2);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) throw NonInvertible("element shares a factor with the cyclotomic modulus");
  Rational c = r0[0];
  for (auto& x : s0) x /= c;
  return reduce(f, s0);
}

std::shared_ptr<const FieldData> make_field_data(int order) {
  if (order < 1) throw Error("InvalidField", "cyclotomic order must be >= 1, got " + std::to_string(order));
  auto f = std::make_shared<FieldData>();
  f->order = order;
  f->modulus = cyclotomic_polynomial(order);
  f->degree = static_cast<int>(f->modulus.size()) - 1;
  const size_t d = static_cast<size_t>(f->degree);
  if (d >= 2) {
    // x^d = -(m_0 + ... + m_{d-1} x^{d-1})
    RationalPoly cur(d);
    for (size_t i = 0; i < d; ++i) cur[i] = -f->modulus[i];
    f->reduction.push_back(cur);
    for (size_t k = 1; k + 1 < d; ++k) {
      RationalPoly next(d);
      Rational top = cur[d - 1];
      for (size_t i = d - 1; i > 0; --i) next[i] = cur[i - 1];
      next[0] = 0;
      for (size_t i = 0; i < d; ++i) next[i] -= top * f->modulus[i];
      f->reduction.push_back(next);
      cur = std::move(next);
    }
  }
  return f;
}

class Parser {
 public:
  Parser(std::string_view text, const Field& field) : s_(text), field_(field) {}

  FieldElement run() {
    FieldElement v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("scalar expression \"" + std::string(s_) + "\": " + msg + " at offset " +
                     std::to_string(pos_));
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool peek_digit() {
    skip_ws();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }
  mpz_class integer() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }

  FieldElement expr() {
    FieldElement v = term();
    for (;;) {
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }
  FieldElement term() {
    FieldElement v = factor();
    while (eat('*')) v *= factor();
    return v;
  }
  // Unary minus applies to the whole factor, so "-z^2" is -(z^2).
  FieldElement factor() {
    if (eat('-')) return -factor();
    FieldElement v = atom();
    if (eat('^')) {
      bool neg = eat('-');
      mpz_class k = integer();
      if (k > 10000) fail("exponent too large");
      long e = k.get_si();
      v = v.pow(neg ? -e : e);
    }
    return v;
  }
  FieldElement atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      FieldElement v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (c == 'z') {
      ++pos_;
      return field_.zeta();
    }
    if (c == 'y') {
      ++pos_;
      if (!field_.has_extension())
        throw ExtensionUnavailable("'y' used but the field has no extension_radicand");
      return field_.root();
    }
    if (peek_digit()) {
      mpz_class num = integer();
      Rational r(num);
      if (eat('/')) {
        mpz_class den = integer();
        if (den == 0) fail("zero denominator");
        r = Rational(num, den);
        r.canonicalize();
      }
      return field_.from_rational(r);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  size_t pos_ = 0;
  const Field& field_;
};

std::string monomial_text(size_t power, bool radical) {
  std::string m;
  if (power == 1)
    m = "z";
  else if (power > 1)
    m = "z^" + std::to_string(power);
  if (radical) m = m.empty() ? "y" : m + "*y";
  return m;
}

}  // namespace

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

RationalPoly cyclotomic_polynomial(int n) {
  // x^n - 1 divided by every Phi_d with d | n, d < n.
  RationalPoly num(static_cast<size_t>(n) + 1);
  num[0] = -1;
  num[static_cast<size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    RationalPoly q, r;
    poly_divmod(num, cyclotomic_polynomial(d), q, r);
    num = std::move(q);
  }
  trim(num);
  return num;
}

// ---------------------------------------------------------------------------
// Field

Field::Field(int cyclotomic_order) : data_(make_field_data(cyclotomic_order)) {}

Field::Field(int cyclotomic_order, std::string_view radicand) {
  auto base = make_field_data(cyclotomic_order);
  Field base_field(base);
  FieldElement d = base_field.parse(radicand);
  auto f = std::make_shared<FieldData>(*base);
  f->has_extension = true;
  f->radicand = d.base_part();
  f->radicand_text = std::string(radicand);
  data_ = std::move(f);
}

int Field::cyclotomic_order() const { return data_->order; }
int Field::degree() const { return data_->degree; }
bool Field::has_extension() const { return data_->has_extension; }
const RationalPoly& Field::modulus() const { return data_->modulus; }
const std::string& Field::radicand_text() const { return data_->radicand_text; }

FieldElement Field::radicand() const {
  if (!data_->has_extension) throw ExtensionUnavailable("field has no extension_radicand");
  return FieldElement(data_, data_->radicand, RationalPoly(static_cast<size_t>(data_->degree)));
}

FieldElement Field::zero() const { return from_rational(Rational(0)); }
FieldElement Field::one() const { return from_rational(Rational(1)); }
FieldElement Field::from_int(long v) const { return from_rational(Rational(v)); }

FieldElement Field::from_rational(const Rational& r) const {
  RationalPoly base(static_cast<size_t>(data_->degree));
  base[0] = r;
  base[0].canonicalize();
  RationalPoly rad;
  if (data_->has_extension) rad.resize(base.size());
  return FieldElement(data_, std::move(base), std::move(rad));
}

FieldElement Field::zeta(long k) const {
  const long n = data_->order;
  long e = ((k % n) + n) % n;
  RationalPoly p(static_cast<size_t>(e) + 1);
  p[static_cast<size_t>(e)] = 1;
  RationalPoly base = reduce(*data_, std::move(p));
  RationalPoly rad;
  if (data_->has_extension) rad.resize(base.size());
  return FieldElement(data_, std::move(base), std::move(rad));
}

FieldElement Field::root() const {
  if (!data_->has_extension) throw ExtensionUnavailable("field has no extension_radicand");
  RationalPoly base(static_cast<size_t>(data_->degree));
  RationalPoly rad(base.size());
  rad[0] = 1;
  return FieldElement(data_, std::move(base), std::move(rad));
}

FieldElement Field::root_of_unity(int r) const {
  if (r < 1 || data_->order % r != 0)
    throw FieldTooSmall("cyclotomic order " + std::to_string(data_->order) +
                        " does not contain primitive " + std::to_string(r) + "-th roots of unity");
  return zeta(data_->order / r);
}

FieldElement Field::parse(std::string_view text) const { return Parser(text, *this).run(); }

bool Field::operator==(const Field& other) const {
  return data_ == other.data_ || data_->same_as(*other.data_);
}

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement(std::shared_ptr<const detail::FieldData> data, RationalPoly base,
                           RationalPoly rad)
    : data_(std::move(data)), base_(std::move(base)), rad_(std::move(rad)) {}

void FieldElement::adopt(const FieldElement& other) {
  if (data_ == nullptr) {
    if (other.data_ == nullptr) return;
    data_ = other.data_;
    base_.assign(static_cast<size_t>(data_->degree), Rational(0));
    if (data_->has_extension) rad_.assign(base_.size(), Rational(0));
  } else if (other.data_ != nullptr && data_ != other.data_ && !data_->same_as(*other.data_)) {
    throw FieldMismatch("arithmetic between elements of different fields");
  }
}

Field FieldElement::field() const {
  if (!data_) throw FieldMismatch("detached zero has no field");
  return Field(data_);
}

bool FieldElement::is_zero() const { return all_zero(base_) && all_zero(rad_); }

bool FieldElement::is_rational() const {
  for (size_t i = 1; i < base_.size(); ++i)
    if (base_[i] != 0) return false;
  return all_zero(rad_);
}

bool FieldElement::is_one() const { return is_rational() && !base_.empty() && base_[0] == 1; }

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  for (auto& c : r.base_) c = -c;
  for (auto& c : r.rad_) c = -c;
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  adopt(rhs);
  if (rhs.data_ == nullptr) return *this;
  for (size_t i = 0; i < base_.size(); ++i) base_[i] += rhs.base_[i];
  for (size_t i = 0; i < rad_.size(); ++i) rad_[i] += rhs.rad_[i];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
  adopt(rhs);
  if (rhs.data_ == nullptr) return *this;
  for (size_t i = 0; i < base_.size(); ++i) base_[i] -= rhs.base_[i];
  for (size_t i = 0; i < rad_.size(); ++i) rad_[i] -= rhs.rad_[i];
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
  adopt(rhs);
  if (data_ == nullptr) return *this;
  if (rhs.data_ == nullptr) {
    *this = Field(data_).zero();
    return *this;
  }
  const FieldData& f = *data_;
  if (!f.has_extension) {
    base_ = base_mul(f, base_, rhs.base_);
    return *this;
  }
  // (a + b y)(c + e y) = (ac + be d) + (ae + bc) y
  RationalPoly ac = base_mul(f, base_, rhs.base_);
  RationalPoly be = base_mul(f, rad_, rhs.rad_);
  RationalPoly bed = base_mul(f, be, f.radicand);
  RationalPoly ae = base_mul(f, base_, rhs.rad_);
  RationalPoly bc = base_mul(f, rad_, rhs.base_);
  for (size_t i = 0; i < ac.size(); ++i) {
    ac[i] += bed[i];
    ae[i] += bc[i];
  }
  base_ = std::move(ac);
  rad_ = std::move(ae);
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) { return *this *= rhs.inverse(); }

FieldElement FieldElement::inverse() const {
  if (data_ == nullptr || is_zero()) throw NonInvertible("inverse of zero");
  const FieldData& f = *data_;
  if (!f.has_extension || all_zero(rad_)) {
    RationalPoly rad;
    if (f.has_extension) rad.resize(base_.size());
    return FieldElement(data_, base_inverse(f, base_), std::move(rad));
  }
  // (a + b y)^{-1} = (a - b y) / (a^2 - b^2 d)
  RationalPoly a2 = base_mul(f, base_, base_);
  RationalPoly b2 = base_mul(f, rad_, rad_);
  RationalPoly b2d = base_mul(f, b2, f.radicand);
  RationalPoly norm = a2;
  for (size_t i = 0; i < norm.size(); ++i) norm[i] -= b2d[i];
  if (all_zero(norm))
    throw NonInvertible("zero divisor in K[y]/(y^2 - d): the radicand is a square in the base field");
  RationalPoly ninv = base_inverse(f, norm);
  RationalPoly nb = base_mul(f, base_, ninv);
  RationalPoly nr = base_mul(f, rad_, ninv);
  for (auto& c : nr) c = -c;
  return FieldElement(data_, std::move(nb), std::move(nr));
}

FieldElement FieldElement::pow(long k) const {
  if (data_ == nullptr) {
    if (k > 0) return *this;
    throw NonInvertible("power of a detached zero");
  }
  if (k < 0) return inverse().pow(-k);
  FieldElement result = Field(data_).one();
  FieldElement base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

bool FieldElement::operator==(const FieldElement& other) const {
  if (data_ == nullptr || other.data_ == nullptr) return is_zero() && other.is_zero();
  if (data_ != other.data_ && !data_->same_as(*other.data_)) return false;
  return base_ == other.base_ && rad_ == other.rad_;
}

std::string FieldElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const Rational& c, size_t power, bool radical) {
    if (c == 0) return;
    bool neg = c < 0;
    Rational a = abs(c);
    std::string mono = monomial_text(power, radical);
    std::string body;
    if (mono.empty())
      body = a.get_str();
    else if (a == 1)
      body = mono;
    else
      body = a.get_str() + "*" + mono;
    if (first)
      os << (neg ? "-" : "") << body;
    else
      os << (neg ? " - " : " + ") << body;
    first = false;
  };
  for (size_t i = 0; i < base_.size(); ++i) emit(base_[i], i, false);
  for (size_t i = 0; i < rad_.size(); ++i) emit(rad_[i], i, true);
  if (first) return "0";
  return os.str();
}

std::string FieldElement::key() const {
  if (is_zero()) return "0";
  std::string k;
  for (const auto& c : base_) k += c.get_str() + ",";
  k += "|";
  for (const auto& c : rad_) k += c.get_str() + ",";
  return k;
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.to_string(); }

}  // namespace tqdha
