#pragma once

// Assembly of the reduction sequences and the threshold decision rules.
//
//   AG_k'(v) = 2^T AG_k(v) 2^T
//   P1  = AG_1'(a) for a in A
//   P2  = AG_2'(f)^{|A|-1}  AG_2'(b) for b in B  AG_2'(f)^{|A|-1}     (f = all ones)
//   P2' = P2,  P1' = 3^{|P2'|} P1 3^{|P2'|}
//
// With X = |A| E_u and Y = 2|P2'| + |A| E_u: an orthogonal pair exists iff
// PAT(P1, P2) <= X - d (otherwise PAT = X), and iff EDIT(P1', P2') <= Y - d
// (otherwise EDIT = Y).

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include "sethlab/edit_distance.hpp"
#include "sethlab/gadgets.hpp"
#include "sethlab/orthogonal_vectors.hpp"
#include "sethlab/pattern_distance.hpp"
#include "sethlab/sequence.hpp"

namespace sethlab {

struct ReductionOutput {
  Sequence p1;
  Sequence p2;
  Sequence p1_prime;
  Sequence p2_prime;
  std::uint64_t x = 0;  // PAT threshold |A| E_u
  std::uint64_t y = 0;  // EDIT threshold 2|P2'| + |A| E_u
  GadgetParams params;
  OvInstance normalized_instance;  // |A| <= |B|
  bool swapped = false;            // A and B were exchanged during normalisation
};

struct ReductionLengths {
  std::uint64_t p1 = 0;
  std::uint64_t p2 = 0;
  std::uint64_t p1_prime = 0;
  std::uint64_t p2_prime = 0;
  std::uint64_t x = 0;
  std::uint64_t y = 0;
};

/// Closed-form lengths and thresholds for |A| = n_a, |B| = n_b (normalised so
/// the smaller set plays A). Overflow throws std::overflow_error.
inline ReductionLengths predict_lengths(std::uint64_t n_a, std::uint64_t n_b, const GadgetParams& p) {
  if (n_a == 0 || n_b == 0) throw std::invalid_argument("predict_lengths: set sizes must be positive");
  if (n_a > n_b) std::swap(n_a, n_b);
  using checked::add;
  using checked::mul;
  const std::uint64_t pad = mul(2, p.T);
  ReductionLengths r;
  r.p1 = mul(n_a, add(pad, p.ag1_length()));
  r.p2 = mul(add(n_b, mul(2, n_a - 1)), add(pad, p.ag2_length()));
  r.p2_prime = r.p2;
  r.p1_prime = add(r.p1, mul(2, r.p2_prime));
  r.x = mul(n_a, p.e_u());
  r.y = add(mul(2, r.p2_prime), r.x);
  return r;
}

inline Sequence padded_vector_gadget(int k, const BinaryVector& v, const GadgetParams& p) {
  if (k != 1 && k != 2) throw std::invalid_argument("padded_vector_gadget: k must be 1 or 2");
  const std::uint64_t inner = k == 1 ? p.ag1_length() : p.ag2_length();
  require_materializable(checked::add(inner, checked::mul(2, p.T)), "padded_vector_gadget");
  Sequence s;
  s.reserve(inner + 2 * p.T);
  append_run(s, symbol::pad, p.T);
  s += k == 1 ? vector_gadget_1(v, p) : vector_gadget_2(v, p);
  append_run(s, symbol::pad, p.T);
  return s;
}

inline ReductionOutput build_sequences(const OvInstance& inst, const GadgetParams& p) {
  validate(inst);
  if (inst.d != p.d)
    throw std::invalid_argument("build_sequences: instance dimension " + std::to_string(inst.d) +
                                " does not match parameters (d=" + std::to_string(p.d) + ")");
  ReductionOutput out;
  out.params = p;
  out.normalized_instance = inst;
  if (inst.a.size() > inst.b.size()) {
    std::swap(out.normalized_instance.a, out.normalized_instance.b);
    out.swapped = true;
  }
  const auto& a_set = out.normalized_instance.a;
  const auto& b_set = out.normalized_instance.b;
  const ReductionLengths lengths = predict_lengths(a_set.size(), b_set.size(), p);
  require_materializable(lengths.p1_prime, "build_sequences");

  out.p1.reserve(lengths.p1);
  for (const auto& a : a_set) out.p1 += padded_vector_gadget(1, a, p);

  const Sequence filler = padded_vector_gadget(2, all_ones(p.d), p);
  out.p2.reserve(lengths.p2);
  for (std::size_t i = 0; i + 1 < a_set.size(); ++i) out.p2 += filler;
  for (const auto& b : b_set) out.p2 += padded_vector_gadget(2, b, p);
  for (std::size_t i = 0; i + 1 < a_set.size(); ++i) out.p2 += filler;

  out.p2_prime = out.p2;
  out.p1_prime.reserve(lengths.p1_prime);
  append_run(out.p1_prime, symbol::anchor, out.p2_prime.size());
  out.p1_prime += out.p1;
  append_run(out.p1_prime, symbol::anchor, out.p2_prime.size());

  out.x = lengths.x;
  out.y = lengths.y;
  return out;
}

/// The computed distance fell where the reduction says no value can be:
/// strictly between threshold - d and threshold, or above threshold.
class TheoremViolation : public std::runtime_error {
 public:
  TheoremViolation(const std::string& which, std::uint64_t value, std::uint64_t threshold, std::uint64_t gap)
      : std::runtime_error("theorem violation: " + which + " value " + std::to_string(value) +
                           " is not <= " + std::to_string(threshold - gap) + " and not == " +
                           std::to_string(threshold)),
        value_(value),
        threshold_(threshold) {}

  std::uint64_t value() const { return value_; }
  std::uint64_t threshold() const { return threshold_; }

 private:
  std::uint64_t value_;
  std::uint64_t threshold_;
};

struct Decision {
  bool orthogonal = false;
  std::uint64_t value = 0;      // PAT(P1, P2) or EDIT(P1', P2')
  std::uint64_t threshold = 0;  // X or Y
  std::uint64_t gap = 0;        // E_u - E_s = d
};

/// Applies the two-valued rule: value <= threshold - gap means an orthogonal
/// pair, value == threshold means none, anything else throws.
inline Decision classify(const char* which, std::uint64_t value, std::uint64_t threshold, std::uint64_t gap) {
  Decision dec{false, value, threshold, gap};
  if (threshold >= gap && value <= threshold - gap) {
    dec.orthogonal = true;
  } else if (value != threshold) {
    throw TheoremViolation(which, value, threshold, gap);
  }
  return dec;
}

inline void require_valid_params(const GadgetParams& p) {
  auto report = check_params(p);
  if (!report.ok())
    throw std::invalid_argument("parameters fail constraint " + report.violations.front().name + " (" +
                                report.violations.front().inequality + "; " + report.violations.front().actual +
                                ")");
}

enum class PatEngine { dp, bitparallel };

inline Decision decide_via_pat(const ReductionOutput& r, PatEngine engine = PatEngine::bitparallel) {
  const std::uint64_t v = engine == PatEngine::dp ? pat_distance(r.p1, r.p2) : pat_distance_bitparallel(r.p1, r.p2);
  return classify("PAT", v, r.x, r.params.e_u() - r.params.e_s());
}

inline Decision decide_via_edit(const ReductionOutput& r, Engine engine = Engine::bitparallel) {
  const std::uint64_t gap = r.params.e_u() - r.params.e_s();
  std::uint64_t v = 0;
  if (engine == Engine::banded) {
    // Every legal value is <= Y; a band overflow is itself a violation.
    auto banded = edit_distance_banded(r.p1_prime, r.p2_prime, r.y);
    if (!banded) throw TheoremViolation("EDIT", r.y + 1, r.y, gap);
    v = *banded;
  } else {
    v = edit_distance(r.p1_prime, r.p2_prime, engine);
  }
  return classify("EDIT", v, r.y, gap);
}

inline Decision decide_ov_via_pat(const OvInstance& inst, const GadgetParams& p,
                                  PatEngine engine = PatEngine::bitparallel) {
  require_valid_params(p);
  return decide_via_pat(build_sequences(inst, p), engine);
}

inline Decision decide_ov_via_edit(const OvInstance& inst, const GadgetParams& p,
                                   Engine engine = Engine::bitparallel) {
  require_valid_params(p);
  return decide_via_edit(build_sequences(inst, p), engine);
}

}  // namespace sethlab
