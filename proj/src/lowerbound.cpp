#include "cocoakit/lowerbound.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "graph_internal.hpp"

namespace cocoakit {

std::string LowerBoundViolation::message() const {
  std::string out = kind == Kind::Overlap ? "OVERLAP" : "NOT_CLOSED";
  out += " at level (" + std::to_string(level_i) + "," +
         std::to_string(level_j) + ") states {";
  for (size_t s = 0; s < states.size(); ++s) {
    if (s) out += ',';
    out += std::to_string(states[s]);
  }
  return out + "}";
}

std::vector<int> def2_level_letters(const Alphabet& alphabet, int i, int j,
                                    int k) {
  std::vector<int> out;
  for (int n = i; n <= k + 1; ++n)
    out.push_back(alphabet.require("x_" + std::to_string(n)));
  for (int n = j; n <= k + 1; ++n)
    out.push_back(alphabet.require("y_" + std::to_string(n)));
  return out;
}

bool closed_under(const Automaton& dpw, const Scc& scc,
                  const std::vector<int>& symbols) {
  for (int q : scc.states)
    for (int x : symbols)
      for (const Edge& e : dpw.edges(q, x))
        if (!scc.contains(e.target)) return false;
  return true;
}

namespace {

void check_def2_alphabet(const Automaton& dpw, int k) {
  if (k < 1) throw Error(ErrorCode::IndexOutOfRange, "k must be positive");
  if (dpw.alphabet().size() != 2 * (k + 1))
    throw Error(ErrorCode::AlphabetMismatch,
                "expected the 2(k+1)-letter x/y alphabet");
  def2_level_letters(dpw.alphabet(), 1, 1, k);  // throws on missing symbols
}

// Terminal SCCs of the subgraph spanned by `states` and `symbols`; among
// them the component containing the least state. Exists whenever every
// member state keeps all its `symbols`-successors inside `states`.
Scc terminal_component(const Automaton& dpw, const std::vector<int>& states,
                       const std::vector<int>& symbols) {
  int n = dpw.state_count();
  std::vector<char> in_set(n, 0);
  for (int q : states) in_set[q] = 1;

  std::vector<std::vector<int>> adj(n);
  for (int q : states)
    for (int x : symbols)
      for (const Edge& e : dpw.edges(q, x))
        if (in_set[e.target]) adj[q].push_back(e.target);

  int comp_count = 0;
  std::vector<int> comp = internal::tarjan_components(n, adj, &comp_count);

  std::vector<char> terminal(comp_count, 1), populated(comp_count, 0);
  for (int q : states) {
    populated[comp[q]] = 1;
    for (int x : symbols)
      for (const Edge& e : dpw.edges(q, x))
        if (in_set[e.target] && comp[e.target] != comp[q])
          terminal[comp[q]] = 0;
  }

  int chosen = -1;
  for (int q : states)  // states ascend, so the first hit has the least state
    if (terminal[comp[q]] && populated[comp[q]]) {
      chosen = comp[q];
      break;
    }
  if (chosen < 0)
    throw Error(ErrorCode::Invalid, "subgraph has no terminal component");

  Scc out;
  for (int q : states)
    if (comp[q] == chosen) out.states.push_back(q);
  for (int q : out.states)
    for (int x : symbols)
      for (const Edge& e : dpw.edges(q, x))
        if (comp[e.target] == chosen)
          out.transitions.push_back({q, x, e.target, e.color});
  std::sort(out.transitions.begin(), out.transitions.end());
  return out;
}

}  // namespace

SplitResult lemma1_split(const Automaton& dpw, const Scc& scc, int i, int j,
                         int k) {
  check_def2_alphabet(dpw, k);
  if (i < 1 || j < 1 || std::max(i, j) > k)
    throw Error(ErrorCode::NotApplicable,
                "no split below level (" + std::to_string(i) + "," +
                    std::to_string(j) + ") for k=" + std::to_string(k));

  std::vector<int> letters = def2_level_letters(dpw.alphabet(), i, j, k);
  if (!closed_under(dpw, scc, letters))
    return LowerBoundViolation{LowerBoundViolation::Kind::NotClosed, i, j,
                               scc.states};

  int m = std::max(i, j);
  Scc x_side = terminal_component(
      dpw, scc.states, def2_level_letters(dpw.alphabet(), m + 1, j, k));
  Scc y_side = terminal_component(
      dpw, scc.states, def2_level_letters(dpw.alphabet(), i, m + 1, k));

  std::vector<int> shared;
  std::set_intersection(x_side.states.begin(), x_side.states.end(),
                        y_side.states.begin(), y_side.states.end(),
                        std::back_inserter(shared));
  if (!shared.empty())
    return LowerBoundViolation{LowerBoundViolation::Kind::Overlap, i, j,
                               std::move(shared)};
  return std::pair{std::move(x_side), std::move(y_side)};
}

CertifyResult certify_lower_bound(const Automaton& dpw, int k) {
  check_def2_alphabet(dpw, k);
  if (!is_deterministic(dpw))
    throw Error(ErrorCode::NotDeterministic, "certification needs a DPW");
  if (!validate_automaton(dpw).empty())
    throw Error(ErrorCode::Invalid, "automaton violates basic invariants");

  std::vector<char> seen(dpw.state_count(), 0);
  std::vector<int> reach, stack{dpw.initial()};
  seen[dpw.initial()] = 1;
  while (!stack.empty()) {
    int q = stack.back();
    stack.pop_back();
    for (int x = 0; x < dpw.alphabet().size(); ++x)
      for (const Edge& e : dpw.edges(q, x))
        if (!seen[e.target]) {
          seen[e.target] = 1;
          stack.push_back(e.target);
        }
  }
  for (int q = 0; q < dpw.state_count(); ++q)
    if (seen[q]) reach.push_back(q);

  LowerBoundCertificate cert;
  cert.k = k;

  Scc root = terminal_component(dpw, reach,
                                def2_level_letters(dpw.alphabet(), 1, 1, k));

  // preorder recursion; a violation aborts the whole construction
  std::vector<LowerBoundViolation> failure;
  auto build = [&](auto&& self, Scc scc, int i, int j) -> int {
    int id = static_cast<int>(cert.nodes.size());
    cert.nodes.push_back({scc.states, i, j, -1, -1});
    if (std::max(i, j) > k) {
      ++cert.bound;
      return id;
    }
    SplitResult split = lemma1_split(dpw, scc, i, j, k);
    if (auto* violation = std::get_if<LowerBoundViolation>(&split)) {
      failure.push_back(std::move(*violation));
      return id;
    }
    auto& [x_side, y_side] = std::get<std::pair<Scc, Scc>>(split);
    int m = std::max(i, j);
    int cx = self(self, std::move(x_side), m + 1, j);
    if (!failure.empty()) return id;
    int cy = self(self, std::move(y_side), i, m + 1);
    cert.nodes[id].child_x = cx;
    cert.nodes[id].child_y = cy;
    return id;
  };
  build(build, std::move(root), 1, 1);
  if (!failure.empty()) return std::move(failure.front());
  return cert;
}

std::vector<std::string> verify_certificate(
    const Automaton& dpw, const LowerBoundCertificate& cert) {
  std::vector<std::string> problems;
  auto complain = [&](std::string msg) { problems.push_back(std::move(msg)); };

  try {
    check_def2_alphabet(dpw, cert.k);
  } catch (const Error& e) {
    return {e.what()};
  }
  if (cert.nodes.empty()) return {"certificate has no nodes"};
  if (cert.nodes[0].level_i != 1 || cert.nodes[0].level_j != 1)
    complain("root is not at level (1,1)");

  std::vector<char> reachable(dpw.state_count(), 0);
  std::vector<int> stack{dpw.initial()};
  reachable[dpw.initial()] = 1;
  while (!stack.empty()) {
    int q = stack.back();
    stack.pop_back();
    for (int x = 0; x < dpw.alphabet().size(); ++x)
      for (const Edge& e : dpw.edges(q, x))
        if (!reachable[e.target]) {
          reachable[e.target] = 1;
          stack.push_back(e.target);
        }
  }

  int leaves = 0;
  std::vector<int> referenced(cert.nodes.size(), 0);
  for (size_t id = 0; id < cert.nodes.size(); ++id) {
    const auto& node = cert.nodes[id];
    std::string where = "node " + std::to_string(id);
    if (node.states.empty()) {
      complain(where + ": empty state set");
      continue;
    }
    if (!std::is_sorted(node.states.begin(), node.states.end()))
      complain(where + ": states not sorted");
    bool states_ok = true;
    for (int q : node.states) {
      if (q < 0 || q >= dpw.state_count()) {
        complain(where + ": state out of range");
        states_ok = false;
        break;
      }
      if (!reachable[q]) complain(where + ": unreachable state " +
                                  std::to_string(q));
    }
    if (!states_ok) continue;
    int i = node.level_i, j = node.level_j, m = std::max(i, j);
    if (i < 1 || j < 1 || m > cert.k + 1) {
      complain(where + ": level out of range");
      continue;
    }
    Scc as_scc{node.states, {}};
    if (!closed_under(dpw, as_scc,
                      def2_level_letters(dpw.alphabet(), i, j, cert.k)))
      complain(where + ": not closed under its letter set");

    bool leaf = m > cert.k;
    if (leaf) {
      ++leaves;
      if (node.child_x >= 0 || node.child_y >= 0)
        complain(where + ": leaf with children");
      continue;
    }
    if (node.child_x < 0 || node.child_y < 0 ||
        node.child_x >= static_cast<int>(cert.nodes.size()) ||
        node.child_y >= static_cast<int>(cert.nodes.size())) {
      complain(where + ": inner node lacks two children");
      continue;
    }
    ++referenced[node.child_x];
    ++referenced[node.child_y];
    const auto& cx = cert.nodes[node.child_x];
    const auto& cy = cert.nodes[node.child_y];
    if (cx.level_i != m + 1 || cx.level_j != j || cy.level_i != i ||
        cy.level_j != m + 1)
      complain(where + ": children at wrong levels");
    auto subset = [&](const std::vector<int>& sub) {
      return std::includes(node.states.begin(), node.states.end(), sub.begin(),
                           sub.end());
    };
    if (!subset(cx.states) || !subset(cy.states))
      complain(where + ": children not nested in the parent");
    std::vector<int> shared;
    std::set_intersection(cx.states.begin(), cx.states.end(),
                          cy.states.begin(), cy.states.end(),
                          std::back_inserter(shared));
    if (!shared.empty()) complain(where + ": children overlap");
  }
  for (size_t id = 1; id < cert.nodes.size(); ++id)
    if (referenced[id] != 1)
      complain("node " + std::to_string(id) + " referenced " +
               std::to_string(referenced[id]) + " times");
  if (leaves != cert.bound)
    complain("bound " + std::to_string(cert.bound) + " does not match " +
             std::to_string(leaves) + " leaves");
  return problems;
}

namespace {

std::vector<std::string> level_letter_names(int i, int j, int k) {
  std::vector<std::string> out;
  for (int n = i; n <= k + 1; ++n) out.push_back("x_" + std::to_string(n));
  for (int n = j; n <= k + 1; ++n) out.push_back("y_" + std::to_string(n));
  return out;
}

void serialize_node(const LowerBoundCertificate& cert, int id, int indent,
                    std::string& out) {
  const auto& node = cert.nodes[id];
  out.append(indent, ' ');
  out += "(node (level " + std::to_string(node.level_i) + " " +
         std::to_string(node.level_j) + ") (states";
  for (int q : node.states) out += " " + std::to_string(q);
  out += ") (letters";
  for (const std::string& l :
       level_letter_names(node.level_i, node.level_j, cert.k))
    out += " " + l;
  out += ")";
  if (node.child_x >= 0) {
    out += "\n";
    serialize_node(cert, node.child_x, indent + 2, out);
    out += "\n";
    serialize_node(cert, node.child_y, indent + 2, out);
  }
  out += ")";
}

}  // namespace

std::string serialize_certificate(const LowerBoundCertificate& cert) {
  std::string out = "(lower-bound-certificate (k " + std::to_string(cert.k) +
                    ") (bound " + std::to_string(cert.bound) + ")\n";
  if (!cert.nodes.empty()) serialize_node(cert, 0, 2, out);
  out += ")\n";
  return out;
}

namespace {

struct SExprParser {
  std::string_view text;
  size_t pos = 0;

  void skip_space() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool eat(char c) {
    skip_space();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c))
      throw Error(ErrorCode::Parse,
                  std::string("expected '") + c + "' in certificate");
  }

  std::string atom() {
    skip_space();
    size_t start = pos;
    while (pos < text.size() && text[pos] != '(' && text[pos] != ')' &&
           !std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (start == pos) throw Error(ErrorCode::Parse, "expected atom");
    return std::string(text.substr(start, pos - start));
  }

  int number() {
    std::string a = atom();
    try {
      return std::stoi(a);
    } catch (...) {
      throw Error(ErrorCode::Parse, "expected number, got '" + a + "'");
    }
  }

  bool peek_close() {
    skip_space();
    return pos < text.size() && text[pos] == ')';
  }

  int parse_node(LowerBoundCertificate& cert) {
    expect('(');
    if (atom() != "node") throw Error(ErrorCode::Parse, "expected node");
    int id = static_cast<int>(cert.nodes.size());
    cert.nodes.emplace_back();

    expect('(');
    if (atom() != "level") throw Error(ErrorCode::Parse, "expected level");
    int li = number(), lj = number();
    cert.nodes[id].level_i = li;
    cert.nodes[id].level_j = lj;
    expect(')');

    expect('(');
    if (atom() != "states") throw Error(ErrorCode::Parse, "expected states");
    std::vector<int> states;
    while (!peek_close()) states.push_back(number());
    expect(')');
    cert.nodes[id].states = std::move(states);

    expect('(');
    if (atom() != "letters") throw Error(ErrorCode::Parse, "expected letters");
    std::vector<std::string> letters;
    while (!peek_close()) letters.push_back(atom());
    expect(')');
    if (letters != level_letter_names(li, lj, cert.k))
      throw Error(ErrorCode::Parse,
                  "letter set does not match the node level");

    if (!peek_close()) {
      int cx = parse_node(cert);
      int cy = parse_node(cert);
      cert.nodes[id].child_x = cx;
      cert.nodes[id].child_y = cy;
    }
    expect(')');
    return id;
  }
};

}  // namespace

LowerBoundCertificate parse_certificate(std::string_view text) {
  SExprParser p{text};
  LowerBoundCertificate cert;
  p.expect('(');
  if (p.atom() != "lower-bound-certificate")
    throw Error(ErrorCode::Parse, "not a lower-bound certificate");
  p.expect('(');
  if (p.atom() != "k") throw Error(ErrorCode::Parse, "expected k");
  cert.k = p.number();
  p.expect(')');
  p.expect('(');
  if (p.atom() != "bound") throw Error(ErrorCode::Parse, "expected bound");
  cert.bound = p.number();
  p.expect(')');
  if (!p.peek_close()) p.parse_node(cert);
  p.expect(')');
  return cert;
}

}  // namespace cocoakit
