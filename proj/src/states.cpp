#include "qcorr/states.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qcorr {

namespace {

const cplx kImag{0.0, 1.0};

std::vector<cplx> zeros16() { return std::vector<cplx>(16, 0.0); }

PureState finish(std::vector<cplx> amps) { return normalize(PureState(4, std::move(amps))); }

}  // namespace

std::size_t family_arity(FamilyName name) {
  switch (name) {
    case FamilyName::gabcd: return 4;
    case FamilyName::labc2: return 3;
    case FamilyName::la2b2: return 2;
    case FamilyName::lab3: return 2;
    case FamilyName::la4: return 1;
    case FamilyName::la2_03p1: return 1;
    case FamilyName::l05p3: return 0;
    case FamilyName::l07p1: return 0;
    case FamilyName::l03p1_03p1bar: return 0;
    case FamilyName::w4: return 4;
    case FamilyName::ghz_n: return 1;
    case FamilyName::explicit_state: return 0;
  }
  throw std::invalid_argument("family_arity: unknown family");
}

FamilyName family_from_name(std::string_view name) {
  std::string key;
  for (char ch : name) key += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  static const std::map<std::string, FamilyName> names = {
      {"gabcd", FamilyName::gabcd},
      {"labc2", FamilyName::labc2},
      {"la2b2", FamilyName::la2b2},
      {"lab3", FamilyName::lab3},
      {"la4", FamilyName::la4},
      {"la2_03p1", FamilyName::la2_03p1},
      {"l05p3", FamilyName::l05p3},
      {"l_05p3", FamilyName::l05p3},
      {"l07p1", FamilyName::l07p1},
      {"l_07p1", FamilyName::l07p1},
      {"l03p1_03p1bar", FamilyName::l03p1_03p1bar},
      {"w4", FamilyName::w4},
      {"ghz", FamilyName::ghz_n},
      {"ghz_n", FamilyName::ghz_n},
      {"explicit", FamilyName::explicit_state},
  };
  const auto it = names.find(key);
  if (it == names.end())
    throw std::invalid_argument("unknown state family: " + std::string(name));
  return it->second;
}

std::string family_name(FamilyName name) {
  switch (name) {
    case FamilyName::gabcd: return "gabcd";
    case FamilyName::labc2: return "labc2";
    case FamilyName::la2b2: return "la2b2";
    case FamilyName::lab3: return "lab3";
    case FamilyName::la4: return "la4";
    case FamilyName::la2_03p1: return "la2_03p1";
    case FamilyName::l05p3: return "l05p3";
    case FamilyName::l07p1: return "l07p1";
    case FamilyName::l03p1_03p1bar: return "l03p1_03p1bar";
    case FamilyName::w4: return "w4";
    case FamilyName::ghz_n: return "ghz";
    case FamilyName::explicit_state: return "explicit";
  }
  return "?";
}

PureState make_gabcd(cplx a, cplx b, cplx c, cplx d) {
  auto amps = zeros16();
  amps[0b0000] = amps[0b1111] = (a + d) / 2.0;
  amps[0b0011] = amps[0b1100] = (a - d) / 2.0;
  amps[0b0101] = amps[0b1010] = (b + c) / 2.0;
  amps[0b0110] = amps[0b1001] = (b - c) / 2.0;
  return finish(std::move(amps));
}

namespace {

PureState make_labc2(cplx a, cplx b, cplx c) {
  auto amps = zeros16();
  amps[0b0000] = amps[0b1111] = (a + b) / 2.0;
  amps[0b0011] = amps[0b1100] = (a - b) / 2.0;
  amps[0b0101] = amps[0b1010] = c;
  amps[0b0110] = 1.0;
  return finish(std::move(amps));
}

PureState make_la2b2(cplx a, cplx b) {
  auto amps = zeros16();
  amps[0b0000] = amps[0b1111] = a;
  amps[0b0101] = amps[0b1010] = b;
  amps[0b0110] = 1.0;
  amps[0b0011] = 1.0;
  return finish(std::move(amps));
}

PureState make_lab3(cplx a, cplx b) {
  auto amps = zeros16();
  amps[0b0000] = amps[0b1111] = a;
  amps[0b0101] = amps[0b1010] = (a + b) / 2.0;
  amps[0b0110] = amps[0b1001] = (a - b) / 2.0;
  const cplx w = kImag / std::sqrt(2.0);
  amps[0b0001] = amps[0b0010] = amps[0b0111] = amps[0b1011] = w;
  return finish(std::move(amps));
}

PureState make_la4(cplx a) {
  auto amps = zeros16();
  amps[0b0000] = amps[0b0101] = amps[0b1010] = amps[0b1111] = a;
  amps[0b0001] = kImag;
  amps[0b0110] = 1.0;
  amps[0b1011] = -kImag;
  return finish(std::move(amps));
}

PureState make_la2_03p1(cplx a) {
  auto amps = zeros16();
  amps[0b0000] = amps[0b1111] = a;
  amps[0b0011] = amps[0b0101] = amps[0b0110] = 1.0;
  return finish(std::move(amps));
}

PureState make_l05p3() {
  auto amps = zeros16();
  amps[0b0000] = amps[0b0101] = amps[0b1000] = amps[0b1110] = 1.0;
  return finish(std::move(amps));
}

PureState make_l07p1() {
  auto amps = zeros16();
  amps[0b0000] = amps[0b1011] = amps[0b1101] = amps[0b1110] = 1.0;
  return finish(std::move(amps));
}

PureState make_l03p1_03p1bar() {
  auto amps = zeros16();
  amps[0b0000] = amps[0b0111] = 1.0;
  return finish(std::move(amps));
}

}  // namespace

PureState make_w4(cplx a1, cplx a2, cplx a3, cplx a4) {
  auto amps = zeros16();
  amps[0b0001] = a1;
  amps[0b0010] = a2;
  amps[0b0100] = a3;
  amps[0b1000] = a4;
  return finish(std::move(amps));
}

PureState make_ghz(std::size_t n_qubits) {
  std::vector<cplx> amps(std::size_t{1} << n_qubits, 0.0);
  amps.front() = 1.0;
  amps.back() = 1.0;
  return normalize(PureState(n_qubits, std::move(amps)));
}

PureState make_family(const StateFamily& family) {
  if (family.name == FamilyName::explicit_state) {
    if (family.amplitudes.empty())
      throw std::invalid_argument("make_family: explicit state needs amplitudes");
    return normalize(PureState(family.n_qubits, family.amplitudes));
  }
  if (family.params.size() != family_arity(family.name))
    throw std::invalid_argument("make_family: wrong parameter count for " +
                                family_name(family.name));
  const auto& p = family.params;
  switch (family.name) {
    case FamilyName::gabcd: return make_gabcd(p[0], p[1], p[2], p[3]);
    case FamilyName::labc2: return make_labc2(p[0], p[1], p[2]);
    case FamilyName::la2b2: return make_la2b2(p[0], p[1]);
    case FamilyName::lab3: return make_lab3(p[0], p[1]);
    case FamilyName::la4: return make_la4(p[0]);
    case FamilyName::la2_03p1: return make_la2_03p1(p[0]);
    case FamilyName::l05p3: return make_l05p3();
    case FamilyName::l07p1: return make_l07p1();
    case FamilyName::l03p1_03p1bar: return make_l03p1_03p1bar();
    case FamilyName::w4: return make_w4(p[0], p[1], p[2], p[3]);
    case FamilyName::ghz_n: {
      const double n = p[0];
      if (n != std::floor(n) || n < 2.0 || n > 14.0)
        throw std::invalid_argument("make_family: ghz qubit count must be an integer in [2, 14]");
      return make_ghz(static_cast<std::size_t>(n));
    }
    case FamilyName::explicit_state: break;  // handled above
  }
  throw std::invalid_argument("make_family: unknown family");
}

KetParseError::KetParseError(const std::string& message, std::size_t position)
    : std::invalid_argument("parse error at position " + std::to_string(position) + ": " +
                            message),
      position_(position) {}

namespace {

// Recursive-descent-free scanner for the minimal ket grammar.
class KetScanner {
 public:
  explicit KetScanner(std::string_view text) : s_(text) {}

  PureState run() {
    skip_ws();
    double global_div = 1.0;
    bool wrapped = false;
    if (peek() == '(') {
      wrapped = true;
      ++pos_;
    }
    parse_terms(wrapped);
    if (wrapped) {
      expect(')');
      skip_ws();
      expect('/');
      global_div = parse_denominator();
      skip_ws();
      if (pos_ != s_.size()) fail("trailing characters");
    }

    if (terms_.empty()) fail("empty expression");
    const std::size_t dim = std::size_t{1} << n_qubits_;
    std::vector<cplx> amps(dim, 0.0);
    for (const auto& [index, coef] : terms_) amps[index] += coef / global_div;
    return normalize(PureState(n_qubits_, std::move(amps)));
  }

 private:
  void parse_terms(bool wrapped) {
    bool first = true;
    while (true) {
      skip_ws();
      if (pos_ >= s_.size()) {
        if (first) fail("empty expression");
        break;
      }
      if (wrapped && peek() == ')') break;
      double sign = 1.0;
      if (peek() == '+' || peek() == '-') {
        if (first && peek() == '+') fail("unexpected '+'");
        sign = (peek() == '-') ? -1.0 : 1.0;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-' between terms");
      }
      parse_term(sign);
      first = false;
    }
  }

  void parse_term(double sign) {
    cplx coef = parse_coefficient();
    skip_ws();
    if (peek() == '*') {
      ++pos_;
      skip_ws();
    }
    if (peek() != '|') fail("expected '|'");
    const std::size_t ket_pos = pos_;
    ++pos_;
    std::size_t index = 0;
    std::size_t bits = 0;
    while (pos_ < s_.size() && (s_[pos_] == '0' || s_[pos_] == '1')) {
      index = (index << 1) | static_cast<std::size_t>(s_[pos_] - '0');
      ++bits;
      ++pos_;
    }
    if (bits == 0) fail("expected bitstring after '|'");
    expect('>');
    if (n_qubits_ == 0) {
      if (bits < kMinQubits || bits > kMaxQubits) {
        pos_ = ket_pos;
        fail("qubit count out of range [2, 14]");
      }
      n_qubits_ = bits;
    } else if (bits != n_qubits_) {
      pos_ = ket_pos;
      fail("inconsistent bitstring length");
    }
    terms_.emplace_back(index, sign * coef);
  }

  // number ['i'] ['/' denominator] | 'i' | nothing (coefficient 1)
  cplx parse_coefficient() {
    skip_ws();
    cplx value = 1.0;
    bool have_number = false;
    if (pos_ < s_.size() &&
        (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.')) {
      value = parse_number();
      have_number = true;
    }
    if (peek() == 'i') {
      ++pos_;
      value *= kImag;
      have_number = true;
    }
    if (have_number && peek() == '/') {
      ++pos_;
      value /= parse_denominator();
    }
    return value;
  }

  // number | sqrt(number)
  double parse_denominator() {
    skip_ws();
    if (s_.substr(pos_).starts_with("sqrt")) {
      pos_ += 4;
      skip_ws();
      expect('(');
      const double v = parse_number();
      skip_ws();
      expect(')');
      if (v <= 0.0) fail("sqrt argument must be positive");
      return std::sqrt(v);
    }
    const double v = parse_number();
    if (v == 0.0) fail("division by zero");
    return v;
  }

  double parse_number() {
    skip_ws();
    const char* begin = s_.data() + pos_;
    const char* end = s_.data() + s_.size();
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr == begin) fail("expected a number");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  void expect(char ch) {
    if (peek() != ch) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) const { throw KetParseError(message, pos_); }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t n_qubits_ = 0;
  std::vector<std::pair<std::size_t, cplx>> terms_;
};

std::string format_coefficient(double value, bool imaginary) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  std::string out(buf);
  if (out == "1")
    out.clear();
  else if (out == "-1")
    out = "-";
  if (imaginary) out += "i";
  return out;
}

}  // namespace

PureState parse_ket_expression(std::string_view text) { return KetScanner(text).run(); }

std::string format_ket_expression(const PureState& state) {
  std::ostringstream out;
  bool first = true;
  auto emit = [&](double value, bool imaginary, std::size_t index) {
    std::string coef = format_coefficient(value, imaginary);
    if (!first) {
      if (!coef.empty() && coef.front() == '-') {
        out << " - ";
        coef.erase(coef.begin());
      } else {
        out << " + ";
      }
    }
    out << coef << '|';
    for (std::size_t q = 0; q < state.n_qubits(); ++q) out << (state.bit(index, q) ? '1' : '0');
    out << '>';
    first = false;
  };
  for (std::size_t i = 0; i < state.dim(); ++i) {
    const cplx a = state.amplitude(i);
    if (std::abs(a.real()) > 1e-15) emit(a.real(), false, i);
    if (std::abs(a.imag()) > 1e-15) emit(a.imag(), true, i);
  }
  if (first) out << "0|" << std::string(state.n_qubits(), '0') << '>';
  return out.str();
}

}  // namespace qcorr
