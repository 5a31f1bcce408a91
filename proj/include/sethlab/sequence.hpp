#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sethlab {

/// A finite string of byte symbols. The distance engines are alphabet-agnostic;
/// gadget construction only ever emits the ASCII symbols '0'..'3'.
using Sequence = std::string;

namespace symbol {
inline constexpr char zero = '0';
inline constexpr char one = '1';
inline constexpr char pad = '2';     // separates vector gadgets
inline constexpr char anchor = '3';  // flanks P1 in the EDIT instance
}  // namespace symbol

inline bool is_gadget_alphabet(std::string_view s) {
  for (char c : s)
    if (c < '0' || c > '3') return false;
  return true;
}

inline void append_run(Sequence& out, char c, std::uint64_t count) {
  out.append(static_cast<std::size_t>(count), c);
}

inline std::size_t count_symbol(std::string_view s, char c) {
  std::size_t n = 0;
  for (char x : s) n += (x == c);
  return n;
}

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads a raw sequence file. A single trailing newline (LF or CRLF) is dropped.
inline Sequence read_sequence_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  Sequence s((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("error reading " + path.string());
  if (!s.empty() && s.back() == '\n') {
    s.pop_back();
    if (!s.empty() && s.back() == '\r') s.pop_back();
  }
  return s;
}

inline void write_sequence_file(const std::filesystem::path& path, std::string_view s) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out.write(s.data(), static_cast<std::streamsize>(s.size()));
  if (!out) throw IoError("error writing " + path.string());
}

}  // namespace sethlab
