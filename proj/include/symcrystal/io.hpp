// JSON and text serialization shared by the CLI.
#pragma once

#include <stdexcept>
#include <string>

#include "symcrystal/canonical.hpp"

namespace symcrystal {

/// Malformed input, with a 1-based position.
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& msg, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// 1-based (line, column) of a byte offset.
std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t offset);

/// [{"i":-1,"j":1,"mult":2}]; the empty multisegment is [].
std::string multiseg_to_json(const Multisegment& m);
Multisegment multiseg_from_json(const std::string& text);

/// Word expression such as "f[1]·f[3] - q·f[3]·f[1]"; errors carry line/column.
WordVector word_vector_from_text(const std::string& text, const Window& window);

/// "-3,-1,1,3" or "-3..3"; the indices must form a contiguous odd run.
Window parse_window(const std::string& text);

/// Comma separated letters, e.g. "1,1,3": type A content, or in theta mode
/// the multiset of |i|.
BlockKey parse_block(const std::string& text, Kind kind);

}  // namespace symcrystal
