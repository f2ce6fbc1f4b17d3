#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <array>
#include <cstdio>
#include <json.hpp>
#include <set>
#include <string>
#include <sys/wait.h>

namespace {

std::string exe;

struct Run {
  int code = -1;
  std::string out;
};

// stderr is folded into the output
Run run(const std::string& args, const std::string& stdin_text = "") {
  std::string cmd = exe + " " + args + " 2>&1";
  if (!stdin_text.empty()) cmd = "printf '%s' '" + stdin_text + "' | " + cmd;
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

// Minimal DOT reader: digraph ID { (node [..]; | ID [..]; | ID -> ID [..];)* }
struct DotGraph {
  std::set<std::string> nodes;
  std::vector<std::pair<std::string, std::string>> edges;
};

class DotReader {
 public:
  explicit DotReader(std::string s) : s_(std::move(s)) {}

  DotGraph read() {
    DotGraph g;
    expect_word("digraph");
    ident();
    expect('{');
    while (true) {
      skip();
      if (peek() == '}') {
        ++p_;
        break;
      }
      const std::string a = ident();
      skip();
      if (a == "node" || a == "edge" || a == "graph") {
        attrs();
      } else if (s_.compare(p_, 2, "->") == 0) {
        p_ += 2;
        const std::string b = ident();
        if (!g.nodes.count(a) || !g.nodes.count(b)) throw std::runtime_error("edge to undeclared node");
        g.edges.emplace_back(a, b);
        skip();
        if (peek() == '[') attrs();
      } else {
        g.nodes.insert(a);
        if (peek() == '[') attrs();
      }
      expect(';');
    }
    skip();
    if (p_ != s_.size()) throw std::runtime_error("trailing text after graph");
    return g;
  }

 private:
  char peek() const { return p_ < s_.size() ? s_[p_] : '\0'; }
  void skip() {
    while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
  }
  void expect(char c) {
    skip();
    if (peek() != c) throw std::runtime_error(std::string("expected ") + c + " at " + std::to_string(p_));
    ++p_;
  }
  void expect_word(const std::string& w) {
    if (ident() != w) throw std::runtime_error("expected " + w);
  }
  std::string ident() {
    skip();
    std::string out;
    if (peek() == '"') {
      ++p_;
      while (p_ < s_.size() && s_[p_] != '"') {
        if (s_[p_] == '\\') ++p_;
        out += s_[p_++];
      }
      if (peek() != '"') throw std::runtime_error("unterminated string");
      ++p_;
      return out;
    }
    while (p_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[p_])) || s_[p_] == '_')) out += s_[p_++];
    if (out.empty()) throw std::runtime_error("expected identifier at " + std::to_string(p_));
    return out;
  }
  void attrs() {
    expect('[');
    while (true) {
      skip();
      if (peek() == ']') {
        ++p_;
        return;
      }
      ident();
      expect('=');
      ident();
      skip();
      if (peek() == ',') ++p_;
    }
  }
  std::string s_;
  std::size_t p_ = 0;
};

}  // namespace

TEST_CASE("expand and coords") {
  auto r = run("expand '[{\"i\":1,\"j\":3,\"mult\":1}]'");
  CHECK(r.code == 0);
  CHECK(r.out == "f[1]·f[3] - q·f[3]·f[1]\n");
  r = run("coords 'f[1]·f[3]'");
  CHECK(r.code == 0);
  CHECK(r.out == "<1,3>: 1\n<3> + <1>: q\n");
  r = run("coords --format json", "f[1]*f[3]");
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  REQUIRE(doc.size() == 2);
  CHECK(doc[1]["coeff"] == "q");
  CHECK(doc[0]["multisegment"] == nlohmann::json::parse(R"([{"i":1,"j":3,"mult":1}])"));
  r = run("theta-coords 'f[-1]'");
  CHECK(r.out == "<1>: 1\n");
  r = run("expand '[]'");
  CHECK(r.out == "1\n");
}

TEST_CASE("global basis for content {1,3}") {
  const auto r = run("global-basis --block 1,3 --format json");
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  const auto m = doc["blocks"][0]["matrix"];
  CHECK(m == nlohmann::json::parse(R"([["1","0"],["q","1"]])"));
}

TEST_CASE("determinism") {
  for (const std::string args : {"verify --suite global-basis --mode theta --max-degree 3 --parallel 3",
                                 "multiplicity --mode theta --index -1 --side F --max-degree 2 --format json",
                                 "crystal-graph --mode theta --max-degree 3 --format dot",
                                 "bar-matrix --max-degree 3"}) {
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("DOT output is valid") {
  for (const std::string args : {"crystal-graph --mode theta --window=-1,1 --max-degree 4 --format dot",
                                 "crystal-graph --mode typeA --max-degree 2 --format dot",
                                 "crystal-graph --mode theta --indices 3,-3 --max-degree 4 --format dot"}) {
    const auto r = run(args);
    REQUIRE(r.code == 0);
    DotGraph g;
    CHECK_NOTHROW(g = DotReader(r.out).read());
    CHECK(!g.nodes.empty());
  }
  const auto r = run("crystal-graph --mode theta --indices 3,-3 --max-degree 4 --format dot");
  const DotGraph g = DotReader(r.out).read();
  CHECK(g.nodes.size() == 5);
  CHECK(g.edges.size() == 8);
}

TEST_CASE("exit codes") {
  CHECK(run("verify --suite serre").code == 0);
  CHECK(run("verify --suite crystal-axioms --mode theta --max-degree 3").code == 0);
  CHECK(run("verify --suite bogus").code == 2);
  CHECK(run("verify --mode theta --window 1,3").code == 2);
  CHECK(run("verify --max-degree -1").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("global-basis --window 1,2").code == 2);
  CHECK(run("expand '[{\"i\":1,\"j\":7,\"mult\":1}]'").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("parse errors carry line and column") {
  auto r = run("expand", "[{\"i\":1,\"j\":3,\"mult\":1},\n {\"i\":3 \"j\":3}]");
  CHECK(r.code == 2);
  CHECK(r.out.find("line 2, column 9") != std::string::npos);
  r = run("expand", "[{\"i\":1,\"j\":3,\"mult\":1},\n {\"i\":3,\"j\":1,\"mult\":1}]");
  CHECK(r.code == 2);
  CHECK(r.out.find("line 2, column 2") != std::string::npos);
  r = run("coords 'f[1]·f[3'");
  CHECK(r.code == 2);
  CHECK(r.out.find("line 1, column") != std::string::npos);
  r = run("coords 'f[9]'");
  CHECK(r.code == 2);
}

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: test_cli <path to symcrystal> [doctest options]\n");
    return 2;
  }
  exe = argv[1];
  doctest::Context ctx;
  ctx.applyCommandLine(argc - 1, argv + 1);
  return ctx.run();
}
