#include "gclt/group_spec.hpp"

#include <cctype>

#include "gclt/constructors.hpp"

namespace gclt {

bool SpecProduct::operator==(const SpecProduct& other) const {
  return factors == other.factors;
}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  GroupSpec parse() {
    GroupSpec spec = parse_product();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return spec;
  }

 private:
  GroupSpec parse_product() {
    std::vector<GroupSpec> factors;
    factors.push_back(parse_atom());
    while (true) {
      skip_ws();
      if (!eat('x')) break;
      factors.push_back(parse_atom());
    }
    if (factors.size() == 1) return std::move(factors.front());
    return GroupSpec{SpecProduct{std::move(factors)}};
  }

  GroupSpec parse_atom() {
    skip_ws();
    if (match("Dic")) return GroupSpec{SpecDicyclic{parse_int()}};
    if (match("D")) return GroupSpec{SpecDihedral{parse_int()}};
    if (match("C")) return GroupSpec{SpecCyclic{parse_int()}};
    if (match("Q")) return GroupSpec{SpecGenQuaternion{parse_int()}};
    if (match("SD")) return GroupSpec{SpecSemidihedral{parse_int()}};
    if (match("A")) return parse_abelian();
    if (match("M")) return parse_metacyclic();
    if (match("E")) return parse_elementary();
    if (match("P")) return parse_perm();
    fail("expected a constructor name (C, D, Dic, Q, SD, A, M, E, P)");
  }

  GroupSpec parse_abelian() {
    SpecAbelian a;
    a.parts.push_back(parse_int());
    // Consume an x only when it is followed by a digit; otherwise it
    // separates product factors.
    while (peek() == 'x' && pos_ + 1 < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      ++pos_;
      a.parts.push_back(parse_int());
    }
    return GroupSpec{std::move(a)};
  }

  GroupSpec parse_metacyclic() {
    expect('(');
    const int m = parse_int();
    expect(',');
    const int n = parse_int();
    expect(',');
    const int r = parse_int();
    expect(')');
    return GroupSpec{SpecMetacyclic{m, n, r}};
  }

  GroupSpec parse_elementary() {
    expect('(');
    SpecElementarySemidirect e;
    e.p = parse_int();
    expect(',');
    e.k = parse_int();
    expect(',');
    expect('[');
    while (true) {
      std::vector<int> row;
      row.push_back(parse_int());
      while (eat(',')) row.push_back(parse_int());
      e.mat.push_back(std::move(row));
      if (!eat(';')) break;
    }
    expect(']');
    expect(',');
    e.m = parse_int();
    expect(')');
    return GroupSpec{std::move(e)};
  }

  GroupSpec parse_perm() {
    expect('(');
    SpecPerm p;
    p.degree = parse_int();
    expect(';');
    while (true) {
      p.gens.push_back(parse_cycles(p.degree));
      if (!eat(',')) break;
    }
    expect(')');
    return GroupSpec{std::move(p)};
  }

  // One generator: a sequence of cycles such as (1 2 3)(4 5); () is the
  // identity. Points are 1-based in the text.
  std::vector<int> parse_cycles(int degree) {
    std::vector<int> img(degree);
    std::vector<char> moved(degree, 0);
    for (int i = 0; i < degree; ++i) img[i] = i;
    skip_ws();
    if (peek() != '(') fail("expected a cycle");
    bool any = false;
    while (peek() == '(') {
      ++pos_;
      skip_ws();
      any = true;
      std::vector<int> cycle;
      while (peek() != ')') {
        const int pt = parse_int();
        if (pt < 1 || pt > degree) fail("cycle point out of range");
        if (moved[pt - 1]) fail("point repeated across cycles");
        moved[pt - 1] = 1;
        cycle.push_back(pt - 1);
        skip_ws();
      }
      ++pos_;  // ')'
      for (std::size_t i = 0; i < cycle.size(); ++i)
        img[cycle[i]] = cycle[(i + 1) % cycle.size()];
      skip_ws();
    }
    if (!any) fail("expected a cycle");
    return img;
  }

  int parse_int() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start) fail("expected an integer");
    long long v = 0;
    for (std::size_t i = start; i < pos_; ++i) {
      v = v * 10 + (text_[i] - '0');
      if (v > kMaxGroupOrder * 16LL) fail("integer too large");
    }
    return static_cast<int>(v);
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  bool eat(char c) {
    skip_ws();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  bool match(const std::string& word) {
    if (text_.compare(pos_, word.size(), word) != 0) return false;
    pos_ += word.size();
    return true;
  }

  void skip_ws() {
    while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw SpecParseError(pos_, msg);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

std::string render_perm(const SpecPerm& p) {
  std::string out = "P(" + std::to_string(p.degree) + ";";
  for (std::size_t gi = 0; gi < p.gens.size(); ++gi) {
    if (gi) out += ',';
    const auto& img = p.gens[gi];
    std::string cycles;
    std::vector<char> seen(p.degree, 0);
    for (int start = 0; start < p.degree; ++start) {
      if (seen[start] || img[start] == start) continue;
      cycles += '(';
      int cur = start;
      bool first = true;
      while (!seen[cur]) {
        seen[cur] = 1;
        if (!first) cycles += ' ';
        cycles += std::to_string(cur + 1);
        first = false;
        cur = img[cur];
      }
      cycles += ')';
    }
    if (cycles.empty()) cycles = "()";
    out += cycles;
  }
  out += ')';
  return out;
}

struct Renderer {
  std::string operator()(const SpecCyclic& s) const { return "C" + std::to_string(s.n); }
  std::string operator()(const SpecDihedral& s) const { return "D" + std::to_string(s.n); }
  std::string operator()(const SpecDicyclic& s) const { return "Dic" + std::to_string(s.n); }
  std::string operator()(const SpecGenQuaternion& s) const {
    return "Q" + std::to_string(s.order);
  }
  std::string operator()(const SpecSemidihedral& s) const {
    return "SD" + std::to_string(s.order);
  }
  std::string operator()(const SpecAbelian& s) const {
    std::string out = "A";
    for (std::size_t i = 0; i < s.parts.size(); ++i) {
      if (i) out += 'x';
      out += std::to_string(s.parts[i]);
    }
    return out;
  }
  std::string operator()(const SpecMetacyclic& s) const {
    return "M(" + std::to_string(s.m) + "," + std::to_string(s.n) + "," +
           std::to_string(s.r) + ")";
  }
  std::string operator()(const SpecElementarySemidirect& s) const {
    std::string out = "E(" + std::to_string(s.p) + "," + std::to_string(s.k) + ",[";
    for (std::size_t i = 0; i < s.mat.size(); ++i) {
      if (i) out += ';';
      for (std::size_t j = 0; j < s.mat[i].size(); ++j) {
        if (j) out += ',';
        out += std::to_string(s.mat[i][j]);
      }
    }
    out += "]," + std::to_string(s.m) + ")";
    return out;
  }
  std::string operator()(const SpecPerm& s) const { return render_perm(s); }
  std::string operator()(const SpecProduct& s) const {
    std::string out;
    for (std::size_t i = 0; i < s.factors.size(); ++i) {
      if (i) out += 'x';
      out += render_spec(s.factors[i]);
    }
    return out;
  }
};

struct Builder {
  FiniteGroup operator()(const SpecCyclic& s) const { return cyclic(s.n); }
  FiniteGroup operator()(const SpecDihedral& s) const { return dihedral(s.n); }
  FiniteGroup operator()(const SpecDicyclic& s) const { return dicyclic(s.n); }
  FiniteGroup operator()(const SpecGenQuaternion& s) const {
    return generalized_quaternion(s.order);
  }
  FiniteGroup operator()(const SpecSemidihedral& s) const {
    return semidihedral(s.order);
  }
  FiniteGroup operator()(const SpecAbelian& s) const { return abelian(s.parts); }
  FiniteGroup operator()(const SpecMetacyclic& s) const {
    return metacyclic(s.m, s.n, s.r);
  }
  FiniteGroup operator()(const SpecElementarySemidirect& s) const {
    return elementary_semidirect(s.p, s.k, s.mat, s.m);
  }
  FiniteGroup operator()(const SpecPerm& s) const {
    return from_permutations(s.degree, s.gens, kMaxGroupOrder);
  }
  FiniteGroup operator()(const SpecProduct& s) const {
    FiniteGroup acc = build(s.factors.front());
    for (std::size_t i = 1; i < s.factors.size(); ++i)
      acc = direct_product(acc, build(s.factors[i]));
    return acc;
  }
};

}  // namespace

GroupSpec parse_spec(const std::string& text) { return Parser(text).parse(); }

std::string render_spec(const GroupSpec& spec) {
  return std::visit(Renderer{}, spec.node);
}

FiniteGroup build(const GroupSpec& spec) { return std::visit(Builder{}, spec.node); }

FiniteGroup build_spec(const std::string& text) { return build(parse_spec(text)); }

}  // namespace gclt
