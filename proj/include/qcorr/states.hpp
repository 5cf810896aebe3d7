// states.hpp
// Constructors for the named four-qubit state families of the SLOCC
// classification (Verstraete, Dehaene, De Moor, Verschelde, Phys. Rev. A 65,
// 052112 (2002)), W and GHZ references, and a small ket-expression parser.
//
// Family forms (all normalized on construction):
//   G_abcd          = (a+d)/2 (|0000>+|1111>) + (a-d)/2 (|0011>+|1100>)
//                   + (b+c)/2 (|0101>+|1010>) + (b-c)/2 (|0110>+|1001>)
//   L_abc2          = (a+b)/2 (|0000>+|1111>) + (a-b)/2 (|0011>+|1100>)
//                   + c (|0101>+|1010>) + |0110>
//   L_a2b2          = a (|0000>+|1111>) + b (|0101>+|1010>) + |0110> + |0011>
//   L_ab3           = a (|0000>+|1111>) + (a+b)/2 (|0101>+|1010>)
//                   + (a-b)/2 (|0110>+|1001>)
//                   + i/sqrt(2) (|0001>+|0010>+|0111>+|1011>)
//   L_a4            = a (|0000>+|0101>+|1010>+|1111>) + i|0001> + |0110> - i|1011>
//   L_a2_03p1       = a (|0000>+|1111>) + |0011> + |0101> + |0110>
//   L_05p3          = |0000> + |0101> + |1000> + |1110>
//   L_07p1          = |0000> + |1011> + |1101> + |1110>
//   L_03p1_03p1bar  = |0000> + |0111>

#pragma once

#include <string>
#include <string_view>

#include "qcorr/state.hpp"

namespace qcorr {

enum class FamilyName {
  gabcd,
  labc2,
  la2b2,
  lab3,
  la4,
  la2_03p1,
  l05p3,
  l07p1,
  l03p1_03p1bar,
  w4,
  ghz_n,
  explicit_state,
};

struct StateFamily {
  FamilyName name = FamilyName::gabcd;
  std::vector<double> params;       // family parameters; for ghz_n, {N}
  std::size_t n_qubits = 0;         // explicit_state only
  std::vector<cplx> amplitudes;     // explicit_state only
};

// Number of real parameters each family takes.
std::size_t family_arity(FamilyName name);
FamilyName family_from_name(std::string_view name);
std::string family_name(FamilyName name);

PureState make_gabcd(cplx a, cplx b, cplx c, cplx d);
PureState make_w4(cplx a1, cplx a2, cplx a3, cplx a4);
PureState make_ghz(std::size_t n_qubits);
PureState make_family(const StateFamily& family);

// Parses a sum of coefficient-ket terms, e.g.
//   "(|0000>+|1111>)/sqrt(2)"   "0.5|00> - 1/3|11>"   "i|01>"
// Coefficients are decimals, rationals p/q, or p/sqrt(q), optionally
// imaginary ("1.5i", "i"); one global (...)/<denominator> wrapper is
// allowed. Repeated kets fold by summation; the result is normalized.
// Errors carry the offending position.
class KetParseError : public std::invalid_argument {
 public:
  KetParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

PureState parse_ket_expression(std::string_view text);

// Inverse of the parser: one term per nonzero real/imaginary part, exact
// round-trip through parse_ket_expression.
std::string format_ket_expression(const PureState& state);

}  // namespace qcorr
