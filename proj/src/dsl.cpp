#include "chromalg/dsl.hpp"

#include <cctype>
#include <map>

namespace chromalg {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  LabelledDigraph parse() {
    auto g = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidArgument("dsl: " + what + " at offset " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string name() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a name");
    return s_.substr(start, pos_ - start);
  }

  int number() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_ || pos_ - start > 3) fail("expected a small positive integer");
    int v = std::stoi(s_.substr(start, pos_ - start));
    if (v < 1) fail("sizes must be positive");
    return v;
  }

  std::vector<int> numbers() {
    std::vector<int> v{number()};
    while (accept(',')) v.push_back(number());
    expect(')');
    return v;
  }

  LabelledDigraph expr() {
    static const std::map<std::string, AtomKind> atoms{
        {"C", AtomKind::kC}, {"P", AtomKind::kP}, {"Q", AtomKind::kQ}, {"K", AtomKind::kK}};
    static const std::map<std::string, SumKind> sums{
        {"U", SumKind::kDisjoint}, {"D", SumKind::kDashed}, {"S", SumKind::kSolid}, {"W", SumKind::kDouble},
        {"Uchain", SumKind::kDisjoint}, {"Dchain", SumKind::kDashed}, {"Schain", SumKind::kSolid},
        {"Wchain", SumKind::kDouble}};
    std::string head = name();
    expect('(');
    if (auto a = atoms.find(head); a != atoms.end()) {
      int n = number();
      expect(')');
      return LabelledDigraph::standard(atom(a->second, n));
    }
    if (head == "grid") return LabelledDigraph::standard(grid(Partition(numbers())));
    if (head == "cgrid") return LabelledDigraph::standard(comp_grid(Composition(numbers()), false));
    if (head == "rcgrid") return LabelledDigraph::standard(comp_grid(Composition(numbers()), true));
    auto s = sums.find(head);
    if (s == sums.end()) fail("unknown constructor '" + head + "'");
    std::vector<LabelledDigraph> parts{expr()};
    while (accept(',')) parts.push_back(expr());
    expect(')');
    LabelledDigraph acc = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) acc = combine_labelled(s->second, acc, parts[i], true);
    return acc;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

LabelledDigraph parse_dsl(const std::string& text) { return Parser(text).parse(); }

}  // namespace chromalg
