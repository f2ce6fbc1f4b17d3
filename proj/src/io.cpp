#include "symcrystal/io.hpp"

#include <cctype>
#include <json.hpp>

namespace symcrystal {

InputError::InputError(const std::string& msg, std::size_t line, std::size_t column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
      line_(line),
      column_(column) {}

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t offset) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t k = 0; k < offset && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

namespace {

[[noreturn]] void fail_at(const std::string& text, std::size_t offset, const std::string& msg) {
  const auto [l, c] = line_column(text, offset);
  throw InputError(msg, l, c);
}

// Offset of the k-th element of the top-level array (skips strings).
std::size_t element_offset(const std::string& text, std::size_t k) {
  int depth = 0;
  bool in_string = false;
  std::size_t seen = 0;
  bool expect = false;
  for (std::size_t p = 0; p < text.size(); ++p) {
    const char ch = text[p];
    if (in_string) {
      if (ch == '\\') {
        ++p;
      } else if (ch == '"') {
        in_string = false;
      }
      continue;
    }
    if (depth == 1 && expect && !std::isspace(static_cast<unsigned char>(ch)) && ch != ']') {
      if (seen++ == k) return p;
      expect = false;
    }
    if (ch == '"') {
      in_string = true;
    } else if (ch == '[' || ch == '{') {
      if (++depth == 1) expect = true;
    } else if (ch == ']' || ch == '}') {
      --depth;
    } else if (ch == ',' && depth == 1) {
      expect = true;
    }
  }
  return 0;
}

}  // namespace

std::string multiseg_to_json(const Multisegment& m) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& [s, n] : m.entries()) arr.push_back({{"i", s.i}, {"j", s.j}, {"mult", n}});
  return arr.dump();
}

Multisegment multiseg_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // the parser points past the offending token; report where it starts
    std::size_t at = e.byte > 0 ? std::min(e.byte - 1, text.size()) : 0;
    if (at < text.size() && text[at] == '"' && at > 0) {
      std::size_t k = at;
      while (k > 0 && !(text[k - 1] == '"' && (k < 2 || text[k - 2] != '\\'))) --k;
      if (k > 0) at = k - 1;
    } else {
      while (at > 0 && at < text.size() && std::isalnum(static_cast<unsigned char>(text[at - 1])) &&
             std::isalnum(static_cast<unsigned char>(text[at])))
        --at;
    }
    std::string msg = e.what();
    if (auto p = msg.find("syntax error"); p != std::string::npos) msg = msg.substr(p);
    fail_at(text, at, "invalid JSON: " + msg);
  }
  if (!doc.is_array()) fail_at(text, text.find_first_not_of(" \t\r\n"), "a multisegment is a JSON array");
  Multisegment m;
  for (std::size_t k = 0; k < doc.size(); ++k) {
    const auto& e = doc[k];
    auto bad = [&](const std::string& msg) { fail_at(text, element_offset(text, k), msg); };
    if (!e.is_object()) bad("segment must be an object with keys i, j, mult");
    for (const char* key : {"i", "j", "mult"})
      if (!e.contains(key) || !e[key].is_number_integer()) bad(std::string("segment needs an integer \"") + key + "\"");
    for (const auto& [key, v] : e.items())
      if (key != "i" && key != "j" && key != "mult") bad("unknown key \"" + key + "\"");
    const long i = e["i"].get<long>();
    const long j = e["j"].get<long>();
    const long n = e["mult"].get<long>();
    if (std::abs(i) > 1000000 || std::abs(j) > 1000000 || n > 1000000) bad("value out of range");
    if (n <= 0) bad("mult must be positive");
    try {
      m.add(Segment(static_cast<int>(i), static_cast<int>(j)), static_cast<int>(n));
    } catch (const std::exception& ex) {
      bad(ex.what());
    }
  }
  return m;
}

WordVector word_vector_from_text(const std::string& text, const Window& window) {
  try {
    return WordVector::parse(text, window);
  } catch (const ParseError& e) {
    fail_at(text, e.offset(), e.what());
  }
}

Window parse_window(const std::string& text) {
  if (auto dots = text.find(".."); dots != std::string::npos) {
    try {
      std::size_t used = 0;
      const int lo = std::stoi(text.substr(0, dots), &used);
      const int hi = std::stoi(text.substr(dots + 2), &used);
      return Window(lo, hi);
    } catch (const std::invalid_argument& e) {
      fail_at(text, 0, std::string("window: expected lo..hi (") + e.what() + ")");
    } catch (const std::out_of_range&) {
      fail_at(text, 0, "window: number out of range");
    }
  }
  std::vector<int> idx;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find(',', pos), text.size());
    const std::string tok = text.substr(pos, end - pos);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      fail_at(text, pos, "window: expected an odd integer, got '" + tok + "'");
    }
    if (tok.find_first_not_of(" \t", used) != std::string::npos) fail_at(text, pos + used, "window: trailing characters in '" + tok + "'");
    idx.push_back(v);
    pos = end + 1;
  }
  try {
    return Window::from_list(idx);
  } catch (const std::exception& e) {
    fail_at(text, 0, std::string("window: ") + e.what());
  }
}

BlockKey parse_block(const std::string& text, Kind kind) {
  BlockKey key;
  if (text.find_first_not_of(" \t") == std::string::npos) return key;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find(',', pos), text.size());
    const std::string tok = text.substr(pos, end - pos);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      fail_at(text, pos, "block: expected an odd integer, got '" + tok + "'");
    }
    if (!is_odd(v)) fail_at(text, pos, "block: index " + std::to_string(v) + " is not odd");
    ++key[kind == Kind::Theta ? std::abs(v) : v];
    pos = end + 1;
  }
  return key;
}

}  // namespace symcrystal
