#include "cocoakit/io.hpp"

#include <sstream>
#include <vector>

namespace cocoakit {

namespace {

std::vector<std::string> split_tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

struct LineCursor {
  std::vector<std::string> lines;
  size_t pos = 0;

  explicit LineCursor(std::string_view text) {
    std::string current;
    for (char c : text) {
      if (c == '\n') {
        lines.push_back(current);
        current.clear();
      } else if (c != '\r') {
        current += c;
      }
    }
    if (!current.empty()) lines.push_back(current);
  }

  // next non-blank line's tokens
  std::vector<std::string> next() {
    while (pos < lines.size()) {
      auto toks = split_tokens(lines[pos++]);
      if (!toks.empty()) return toks;
    }
    throw Error(ErrorCode::Parse, "unexpected end of input");
  }

  std::vector<std::string> peek() {
    size_t saved = pos;
    auto toks = next();
    pos = saved;
    return toks;
  }
};

int parse_int(const std::string& tok, const char* what) {
  try {
    size_t used = 0;
    int value = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return value;
  } catch (...) {
    throw Error(ErrorCode::Parse,
                std::string("expected ") + what + ", got '" + tok + "'");
  }
}

Automaton parse_aut_block(LineCursor& cur, std::string* name_out) {
  auto head = cur.next();
  if (head.size() != 2 || head[0] != "aut")
    throw Error(ErrorCode::Parse, "expected 'aut <name>'");
  if (name_out) *name_out = head[1];

  auto alpha = cur.next();
  if (alpha.size() < 2 || alpha[0] != "alphabet")
    throw Error(ErrorCode::Parse, "expected 'alphabet <sym> ...'");
  Alphabet alphabet(std::vector<std::string>(alpha.begin() + 1, alpha.end()));

  auto states = cur.next();
  if (states.size() != 2 || states[0] != "states")
    throw Error(ErrorCode::Parse, "expected 'states <n>'");
  int n = parse_int(states[1], "state count");
  if (n <= 0) throw Error(ErrorCode::Parse, "state count must be positive");

  auto initial = cur.next();
  if (initial.size() != 2 || initial[0] != "initial")
    throw Error(ErrorCode::Parse, "expected 'initial <q>'");
  int q0 = parse_int(initial[1], "initial state");
  if (q0 < 0 || q0 >= n)
    throw Error(ErrorCode::Parse, "initial state out of range");

  AutomatonBuilder builder(alphabet, n, q0);
  while (true) {
    auto toks = cur.next();
    if (toks.size() == 1 && toks[0] == "end") break;
    if (toks.size() != 5 || toks[0] != "trans")
      throw Error(ErrorCode::Parse,
                  "expected 'trans <src> <sym> <color> <dst>' or 'end'");
    int src = parse_int(toks[1], "source state");
    int sym = alphabet.index_of(toks[2]);
    if (sym < 0)
      throw Error(ErrorCode::Parse, "unknown symbol '" + toks[2] + "'");
    int color = parse_int(toks[3], "color");
    int dst = parse_int(toks[4], "target state");
    if (src < 0 || src >= n || dst < 0 || dst >= n || color < 0)
      throw Error(ErrorCode::Parse, "transition endpoint or color out of range");
    builder.add_edge(src, sym, color, dst);
  }

  Automaton aut = std::move(builder).build();
  std::vector<Diagnostic> problems = validate_automaton(aut);
  if (!problems.empty()) {
    std::string msg = "invalid automaton:";
    for (const Diagnostic& d : problems) msg += " " + d.message(alphabet);
    throw Error(ErrorCode::Parse, msg);
  }
  return aut;
}

}  // namespace

std::string print_aut(const Automaton& aut, std::string_view name) {
  std::string out = "aut " + std::string(name) + "\n";
  out += "alphabet";
  for (const std::string& s : aut.alphabet().symbols()) out += " " + s;
  out += "\nstates " + std::to_string(aut.state_count());
  out += "\ninitial " + std::to_string(aut.initial()) + "\n";
  for (int q = 0; q < aut.state_count(); ++q)
    for (int x = 0; x < aut.alphabet().size(); ++x)
      for (const Edge& e : aut.edges(q, x))
        out += "trans " + std::to_string(q) + " " + aut.alphabet().symbol(x) +
               " " + std::to_string(e.color) + " " + std::to_string(e.target) +
               "\n";
  out += "end\n";
  return out;
}

Automaton parse_aut(std::string_view text) {
  LineCursor cur(text);
  return parse_aut_block(cur, nullptr);
}

std::string print_cocoa(const Cocoa& chain, std::string_view name) {
  std::string out = "cocoa " + std::string(name) + " " +
                    std::to_string(chain.member_count()) + "\n";
  for (int level = 1; level <= chain.member_count(); ++level)
    out += print_aut(chain.member(level),
                     std::string(name) + "_" + std::to_string(level));
  out += "endcocoa\n";
  return out;
}

namespace {

Cocoa parse_cocoa_block(LineCursor& cur, std::string* name_out) {
  auto head = cur.next();
  if (head.size() != 3 || head[0] != "cocoa")
    throw Error(ErrorCode::Parse, "expected 'cocoa <name> <n>'");
  if (name_out) *name_out = head[1];
  int n = parse_int(head[2], "member count");
  if (n <= 0) throw Error(ErrorCode::Parse, "member count must be positive");

  std::vector<Automaton> members;
  for (int i = 0; i < n; ++i) members.push_back(parse_aut_block(cur, nullptr));
  auto tail = cur.next();
  if (tail.size() != 1 || tail[0] != "endcocoa")
    throw Error(ErrorCode::Parse, "expected 'endcocoa'");
  return Cocoa(std::move(members));
}

}  // namespace

Cocoa parse_cocoa(std::string_view text) {
  LineCursor cur(text);
  return parse_cocoa_block(cur, nullptr);
}

ParsedFile parse_aut_or_cocoa(std::string_view text) {
  LineCursor cur(text);
  auto head = cur.peek();
  std::string name;
  if (head[0] == "aut") {
    Automaton aut = parse_aut_block(cur, &name);
    return {std::move(name), std::move(aut)};
  }
  if (head[0] == "cocoa") {
    Cocoa chain = parse_cocoa_block(cur, &name);
    return {std::move(name), std::move(chain)};
  }
  throw Error(ErrorCode::Parse, "expected an 'aut' or 'cocoa' block");
}

std::string print_hoa(const Automaton& aut, std::string_view name) {
  int nsym = aut.alphabet().size();
  int bits = 1;
  while ((1 << bits) < nsym) ++bits;
  int sets = aut.max_color() + 1;

  std::string out = "HOA: v1\n";
  out += "name: \"" + std::string(name) + "\"\n";
  out += "States: " + std::to_string(aut.state_count()) + "\n";
  out += "Start: " + std::to_string(aut.initial()) + "\n";
  out += "AP: " + std::to_string(bits);
  for (int b = 0; b < bits; ++b) out += " \"b" + std::to_string(b) + "\"";
  out += "\nacc-name: parity min even " + std::to_string(sets) + "\n";

  // min-even parity: Inf(0) | (Fin(1) & (Inf(2) | ...))
  std::string acc;
  for (int c = sets - 1; c >= 0; --c) {
    std::string piece = (c % 2 == 0 ? "Inf(" : "Fin(") + std::to_string(c) + ")";
    if (acc.empty())
      acc = piece;
    else if (c % 2 == 0)
      acc = piece + " | (" + acc + ")";
    else
      acc = piece + " & (" + acc + ")";
  }
  out += "Acceptance: " + std::to_string(sets) + " " + acc + "\n";
  out += "properties: trans-labels explicit-labels trans-acc";
  if (is_deterministic(aut)) out += " deterministic";
  out += "\n--BODY--\n";
  for (int q = 0; q < aut.state_count(); ++q) {
    out += "State: " + std::to_string(q);
    std::string label = aut.label(q);
    if (!label.empty()) out += " \"" + label + "\"";
    out += "\n";
    for (int x = 0; x < nsym; ++x) {
      std::string guard;
      for (int b = 0; b < bits; ++b) {
        if (b) guard += "&";
        if (!((x >> b) & 1)) guard += "!";
        guard += std::to_string(b);
      }
      for (const Edge& e : aut.edges(q, x))
        out += "[" + guard + "] " + std::to_string(e.target) + " {" +
               std::to_string(e.color) + "}\n";
    }
  }
  out += "--END--\n";
  return out;
}

}  // namespace cocoakit
