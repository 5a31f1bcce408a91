#pragma once

// Coordinate and vector gadgets for the OV -> edit distance reduction.
//
// Coordinate gadgets are built from runs of length l0 (short) and l1 (long);
// vector gadgets add uniform runs of length l2 around the concatenated
// coordinate gadgets. For every pair of vectors (a, b):
//
//   EDIT(AG1(a), AG2(b)) <= E_s = 2*l2 + l + d*l0          if a.b == 0
//   EDIT(AG1(a), AG2(b))  = E_u = l + 2*l2 + d*l0 + d      otherwise
//
// where l = d*(4*l0 + 2*l1) is the length of the L, R and D blocks.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sethlab/orthogonal_vectors.hpp"
#include "sethlab/sequence.hpp"

namespace sethlab {

namespace checked {

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("gadget parameter overflow");
  return r;
}

inline std::uint64_t add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("gadget parameter overflow");
  return r;
}

}  // namespace checked

struct GadgetParams {
  std::uint64_t d = 0;
  std::uint64_t l0 = 0;
  std::uint64_t l1 = 0;
  std::uint64_t l2 = 0;
  std::uint64_t T = 0;  // length of the '2' runs flanking each vector gadget
  std::string profile_name = "custom";

  /// Length of one coordinate gadget.
  std::uint64_t coordinate_length() const { return checked::add(checked::mul(4, l0), checked::mul(2, l1)); }
  /// |L| = |R| = |D|.
  std::uint64_t l() const { return checked::mul(d, coordinate_length()); }
  std::uint64_t e_s() const { return checked::add(checked::add(checked::mul(2, l2), l()), checked::mul(d, l0)); }
  std::uint64_t e_u() const { return checked::add(e_s(), d); }
  std::uint64_t ag1_length() const { return checked::add(checked::mul(3, l2), checked::mul(2, l())); }
  std::uint64_t ag2_length() const { return checked::add(checked::mul(2, l2), l()); }

  friend bool operator==(const GadgetParams&, const GadgetParams&) = default;
};

/// The original constants: l0 = 1000d, l1 = l0^2, l2 = l0^3, T = 1000d * max(|AG1|, |AG2|).
inline GadgetParams params_paper(std::uint64_t d) {
  if (d == 0) throw std::invalid_argument("params_paper: d must be positive");
  GadgetParams p;
  p.d = d;
  p.l0 = checked::mul(1000, d);
  p.l1 = checked::mul(p.l0, p.l0);
  p.l2 = checked::mul(p.l1, p.l0);
  p.T = checked::mul(checked::mul(1000, d), std::max(p.ag1_length(), p.ag2_length()));
  p.profile_name = "paper";
  return p;
}

struct ConstraintViolation {
  std::string name;
  std::string inequality;
  std::string actual;
};

struct ConstraintReport {
  std::vector<ConstraintViolation> violations;

  bool ok() const { return violations.empty(); }
};

// Gadgets at or below this length are materialised by check_params to count
// their ones instead of trusting the closed forms.
inline constexpr std::uint64_t recount_length_limit = std::uint64_t{1} << 22;
// Refuse to build any single sequence longer than this.
inline constexpr std::uint64_t max_materialized_length = std::uint64_t{1} << 31;

inline void require_materializable(std::uint64_t length, const char* what) {
  if (length > max_materialized_length)
    throw std::length_error(std::string(what) + ": " + std::to_string(length) +
                            " symbols is too large to materialise");
}

inline void require_bit(int x, const char* what) {
  if (x != 0 && x != 1) throw std::invalid_argument(std::string(what) + ": coordinate must be 0 or 1");
}

inline Sequence coordinate_gadget_1(int x, const GadgetParams& p) {
  require_bit(x, "coordinate_gadget_1");
  require_materializable(p.coordinate_length(), "coordinate_gadget_1");
  Sequence s;
  s.reserve(p.coordinate_length());
  append_run(s, symbol::zero, p.l1);
  append_run(s, symbol::zero, p.l0);
  append_run(s, x == 0 ? symbol::one : symbol::zero, 2 * p.l0);
  append_run(s, symbol::one, p.l0);
  append_run(s, symbol::zero, p.l1);
  return s;
}

inline Sequence coordinate_gadget_2(int x, const GadgetParams& p) {
  require_bit(x, "coordinate_gadget_2");
  require_materializable(p.coordinate_length(), "coordinate_gadget_2");
  Sequence s;
  s.reserve(p.coordinate_length());
  append_run(s, symbol::zero, p.l1);
  append_run(s, x == 0 ? symbol::zero : symbol::one, 2 * p.l0);
  append_run(s, symbol::one, 2 * p.l0);
  append_run(s, symbol::zero, p.l1);
  return s;
}

/// 0^{l1/2-1} 1 0^{l1/2} 0^{l0} 1^{3 l0} 0^{l1}. Requires an even l1 >= 2.
inline Sequence gadget_g(const GadgetParams& p) {
  if (p.l1 < 2 || p.l1 % 2 != 0) throw std::invalid_argument("gadget_g: l1 must be even and >= 2");
  require_materializable(p.coordinate_length(), "gadget_g");
  Sequence s;
  s.reserve(p.coordinate_length());
  append_run(s, symbol::zero, p.l1 / 2 - 1);
  s.push_back(symbol::one);
  append_run(s, symbol::zero, p.l1 / 2);
  append_run(s, symbol::zero, p.l0);
  append_run(s, symbol::one, 3 * p.l0);
  append_run(s, symbol::zero, p.l1);
  return s;
}

inline void require_dimension(const BinaryVector& v, const GadgetParams& p, const char* what) {
  if (v.size() != p.d)
    throw std::invalid_argument(std::string(what) + ": vector has dimension " + std::to_string(v.size()) +
                                ", parameters expect " + std::to_string(p.d));
}

/// Z1 L V0 R Z2 with Z = 0^{l2}, V0 = 1^{l2}, L = g^d, R = CG1(a_1)...CG1(a_d).
inline Sequence vector_gadget_1(const BinaryVector& a, const GadgetParams& p) {
  require_dimension(a, p, "vector_gadget_1");
  require_materializable(p.ag1_length(), "vector_gadget_1");
  const Sequence g = gadget_g(p);
  const Sequence cg[2] = {coordinate_gadget_1(0, p), coordinate_gadget_1(1, p)};
  Sequence s;
  s.reserve(p.ag1_length());
  append_run(s, symbol::zero, p.l2);
  for (std::uint64_t i = 0; i < p.d; ++i) s += g;
  append_run(s, symbol::one, p.l2);
  for (auto bit : a) s += cg[bit];
  append_run(s, symbol::zero, p.l2);
  return s;
}

/// V1 D V2 with V = 1^{l2}, D = CG2(b_1)...CG2(b_d).
inline Sequence vector_gadget_2(const BinaryVector& b, const GadgetParams& p) {
  require_dimension(b, p, "vector_gadget_2");
  require_materializable(p.ag2_length(), "vector_gadget_2");
  const Sequence cg[2] = {coordinate_gadget_2(0, p), coordinate_gadget_2(1, p)};
  Sequence s;
  s.reserve(p.ag2_length());
  append_run(s, symbol::one, p.l2);
  for (auto bit : b) s += cg[bit];
  append_run(s, symbol::one, p.l2);
  return s;
}

/// Evaluates the slack inequalities the gadget lemmas rely on.
inline ConstraintReport check_params(const GadgetParams& p) {
  ConstraintReport report;
  auto add = [&](bool holds, std::string name, std::string inequality, std::string actual) {
    if (!holds) report.violations.push_back({std::move(name), std::move(inequality), std::move(actual)});
  };
  auto str = [](std::uint64_t v) { return std::to_string(v); };
  if (p.d == 0 || p.l0 == 0 || p.l1 == 0 || p.l2 == 0 || p.T == 0) {
    add(false, "positive", "d, l0, l1, l2, T > 0",
        "d=" + str(p.d) + " l0=" + str(p.l0) + " l1=" + str(p.l1) + " l2=" + str(p.l2) + " T=" + str(p.T));
    return report;
  }

  const std::uint64_t d = p.d, l0 = p.l0, l1 = p.l1;
  const std::uint64_t l = p.l();
  const std::uint64_t e_u = p.e_u();

  // Ones in L and the most ones R can carry, counted from real gadgets when small.
  std::uint64_t ones_g = 3 * l0 + 1;
  std::uint64_t ones_cg1_max = 3 * l0;
  if (p.coordinate_length() <= recount_length_limit && l1 % 2 == 0) {
    ones_g = count_symbol(gadget_g(p), symbol::one);
    ones_cg1_max = std::max(count_symbol(coordinate_gadget_1(0, p), symbol::one),
                            count_symbol(coordinate_gadget_1(1, p), symbol::one));
  }
  const std::uint64_t ones_l = checked::mul(d, ones_g);
  const std::uint64_t ones_r = checked::mul(d, ones_cg1_max);
  const std::uint64_t dl0_d = checked::add(checked::mul(d, l0), d);

  add(p.l2 > checked::mul(4, l), "(i) long runs dominate", "l2 > 4*l",
      "l2=" + str(p.l2) + " 4*l=" + str(4 * l));
  add(l1 > checked::add(ones_l, dl0_d), "(ii) separator beats ones(L)", "l1 > ones(L) + d*l0 + d",
      "l1=" + str(l1) + " ones(L)=" + str(ones_l) + " d*l0+d=" + str(dl0_d));
  add(l1 >= checked::add(ones_r, dl0_d), "(iii) separator covers ones(R)", "l1 >= ones(R) + d*l0 + d",
      "l1=" + str(l1) + " ones(R)=" + str(ones_r) + " d*l0+d=" + str(dl0_d));
  add(l1 >= checked::mul(3, dl0_d), "(iv) separator third", "l1 >= 3*(d*l0 + d)",
      "l1=" + str(l1) + " 3*(d*l0+d)=" + str(3 * dl0_d));
  add(p.T > e_u, "(v) one padding run exceeds E_u", "T > E_u", "T=" + str(p.T) + " E_u=" + str(e_u));
  add(checked::mul(2, p.T) > e_u, "(vi) two padding runs exceed E_u", "2*T > E_u",
      "2*T=" + str(2 * p.T) + " E_u=" + str(e_u));
  add(l0 >= 4 && l1 >= checked::mul(4, l0), "(vii) run-length floor", "l0 >= 4 and l1 >= 4*l0",
      "l0=" + str(l0) + " l1=" + str(l1));
  add(l1 % 2 == 0, "(viii) g splits its first run evenly", "l1 even", "l1=" + str(l1));
  return report;
}

}  // namespace sethlab
