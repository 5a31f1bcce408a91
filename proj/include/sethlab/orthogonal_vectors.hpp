#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace sethlab {

/// A 0/1 vector; each entry is 0 or 1.
using BinaryVector = std::vector<std::uint8_t>;

struct OvInstance {
  std::size_t d = 0;
  std::vector<BinaryVector> a;
  std::vector<BinaryVector> b;

  friend bool operator==(const OvInstance&, const OvInstance&) = default;
};

class OvFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::uint64_t dot(const BinaryVector& a, const BinaryVector& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("dot: length mismatch (" + std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()) + ")");
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<std::uint64_t>(a[i]) * b[i];
  return s;
}

inline BinaryVector all_ones(std::size_t d) { return BinaryVector(d, 1); }

inline void validate(const OvInstance& inst) {
  if (inst.d == 0) throw std::invalid_argument("OV instance: d must be positive");
  if (inst.a.empty() || inst.b.empty())
    throw std::invalid_argument("OV instance: A and B must be non-empty");
  for (const auto* set : {&inst.a, &inst.b})
    for (const auto& v : *set) {
      if (v.size() != inst.d) throw std::invalid_argument("OV instance: vector length differs from d");
      for (auto bit : v)
        if (bit > 1) throw std::invalid_argument("OV instance: entries must be 0 or 1");
    }
}

struct OvAnswer {
  bool found = false;
  std::optional<std::pair<std::size_t, std::size_t>> witness;  // (index in A, index in B)
};

/// Quadratic scan; the witness is the lexicographically first orthogonal pair.
inline OvAnswer solve_ov_bruteforce(const OvInstance& inst) {
  for (std::size_t i = 0; i < inst.a.size(); ++i)
    for (std::size_t j = 0; j < inst.b.size(); ++j)
      if (dot(inst.a[i], inst.b[j]) == 0) return {true, std::pair{i, j}};
  return {};
}

inline constexpr double default_no_pair_density = 0.7;
inline constexpr int pair_free_attempts = 10000;

namespace detail {

// Bit and index draws use raw engine output so instances are identical
// across standard library implementations.
inline bool draw_bit(std::mt19937_64& rng, double p) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return u < p;
}

inline std::size_t draw_index(std::mt19937_64& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % n);
}

inline BinaryVector draw_vector(std::mt19937_64& rng, std::size_t d, double p) {
  BinaryVector v(d);
  for (auto& bit : v) bit = draw_bit(rng, p) ? 1 : 0;
  return v;
}

}  // namespace detail

/// Random instance, a deterministic function of the arguments.
///
/// planted: one random A slot and one random B slot are made orthogonal by
/// clearing B's bits wherever A's are set. Otherwise instances are redrawn
/// until no orthogonal pair exists; GenerationError after pair_free_attempts.
inline OvInstance gen_ov(std::size_t n_a, std::size_t n_b, std::size_t d, bool planted,
                         double one_density, std::uint64_t seed) {
  if (n_a == 0 || n_b == 0) throw std::invalid_argument("gen_ov: set sizes must be positive");
  if (d == 0) throw std::invalid_argument("gen_ov: d must be positive");
  if (!(one_density >= 0.0 && one_density <= 1.0))
    throw std::invalid_argument("gen_ov: density must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  auto draw = [&] {
    OvInstance inst{d, {}, {}};
    for (std::size_t i = 0; i < n_a; ++i) inst.a.push_back(detail::draw_vector(rng, d, one_density));
    for (std::size_t i = 0; i < n_b; ++i) inst.b.push_back(detail::draw_vector(rng, d, one_density));
    return inst;
  };
  if (planted) {
    OvInstance inst = draw();
    const std::size_t ia = detail::draw_index(rng, n_a);
    const std::size_t ib = detail::draw_index(rng, n_b);
    for (std::size_t k = 0; k < d; ++k)
      if (inst.a[ia][k]) inst.b[ib][k] = 0;
    return inst;
  }
  for (int attempt = 0; attempt < pair_free_attempts; ++attempt) {
    OvInstance inst = draw();
    if (!solve_ov_bruteforce(inst).found) return inst;
  }
  throw GenerationError("could not generate pair-free instance");
}

inline std::string to_bit_string(const BinaryVector& v) {
  std::string s;
  s.reserve(v.size());
  for (auto bit : v) s.push_back(bit ? '1' : '0');
  return s;
}

inline BinaryVector parse_bit_string(std::string_view s) {
  BinaryVector v;
  v.reserve(s.size());
  for (char c : s) {
    if (c != '0' && c != '1') throw OvFormatError("vector entries must be '0' or '1'");
    v.push_back(c == '1');
  }
  return v;
}

/// {"d": <int>, "A": ["0101", ...], "B": [...]}
inline nlohmann::json to_json(const OvInstance& inst) {
  nlohmann::json j;
  j["d"] = inst.d;
  j["A"] = nlohmann::json::array();
  j["B"] = nlohmann::json::array();
  for (const auto& v : inst.a) j["A"].push_back(to_bit_string(v));
  for (const auto& v : inst.b) j["B"].push_back(to_bit_string(v));
  return j;
}

inline OvInstance ov_from_json(const nlohmann::json& j) {
  try {
    OvInstance inst;
    const auto d = j.at("d").get<std::int64_t>();
    if (d <= 0) throw OvFormatError("\"d\" must be a positive integer");
    inst.d = static_cast<std::size_t>(d);
    for (const auto& s : j.at("A")) inst.a.push_back(parse_bit_string(s.get<std::string>()));
    for (const auto& s : j.at("B")) inst.b.push_back(parse_bit_string(s.get<std::string>()));
    validate(inst);
    return inst;
  } catch (const nlohmann::json::exception& e) {
    throw OvFormatError(std::string("malformed OV instance: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw OvFormatError(e.what());
  }
}

inline OvInstance parse_ov_instance(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw OvFormatError(std::string("invalid JSON: ") + e.what());
  }
  return ov_from_json(j);
}

}  // namespace sethlab
