#include "adlab/setio.hpp"

#include <fstream>
#include <sstream>

namespace adlab {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

int64_t parse_int(const std::string& tok, int line) {
  std::string t = trim(tok);
  if (t.empty()) throw ParseError("empty coordinate on line " + std::to_string(line));
  size_t pos = 0;
  long long v;
  try {
    v = std::stoll(t, &pos);
  } catch (const std::out_of_range&) {
    throw Overflow("coordinate out of int64 range on line " + std::to_string(line));
  } catch (const std::exception&) {
    throw ParseError("bad integer '" + t + "' on line " + std::to_string(line));
  }
  if (pos != t.size()) throw ParseError("bad integer '" + t + "' on line " + std::to_string(line));
  return v;
}

Ambient parse_header(const std::string& rest, int line) {
  std::istringstream is(rest);
  std::string kind;
  is >> kind;
  if (kind == "z") {
    std::string d;
    int rank = 1;
    if (is >> d) {
      if (d.rfind("d=", 0) != 0) throw ParseError("expected d=<rank> on line " + std::to_string(line));
      rank = static_cast<int>(parse_int(d.substr(2), line));
    }
    return Ambient::Z(rank);
  }
  if (kind == "mod") {
    std::string n;
    if (!(is >> n)) throw ParseError("missing modulus on line " + std::to_string(line));
    return Ambient::mod(parse_int(n, line));
  }
  throw ParseError("unknown ambient '" + kind + "' on line " + std::to_string(line));
}

}  // namespace

GroundSet parse_set(std::istream& in) {
  Ambient amb = Ambient::Z();
  bool seen_elem = false;
  std::vector<int64_t> flat;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = raw.substr(0, raw.find('#'));
    s = trim(s);
    if (s.empty()) continue;
    if (s[0] == '@') {
      if (s.rfind("@ambient", 0) != 0) throw ParseError("unknown directive on line " + std::to_string(line));
      if (seen_elem) throw ParseError("@ambient after elements on line " + std::to_string(line));
      amb = parse_header(s.substr(8), line);
      continue;
    }
    seen_elem = true;
    std::istringstream is(s);
    std::string tok;
    int count = 0;
    while (std::getline(is, tok, ',')) {
      flat.push_back(parse_int(tok, line));
      ++count;
    }
    if (count != amb.width())
      throw ParseError("line " + std::to_string(line) + " has " + std::to_string(count) +
                       " coordinates, ambient wants " + std::to_string(amb.width()));
  }
  return GroundSet(amb, std::move(flat));
}

GroundSet parse_set_text(const std::string& text) {
  std::istringstream is(text);
  return parse_set(is);
}

GroundSet read_set_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InvalidInput("cannot open " + path);
  return parse_set(f);
}

std::string format_set(const GroundSet& a) {
  std::ostringstream os;
  os << "@ambient " << a.ambient().describe() << "\n";
  for (size_t i = 0; i < a.size(); ++i) {
    auto r = a.at(i);
    for (size_t j = 0; j < r.size(); ++j) os << (j ? "," : "") << r[j];
    os << "\n";
  }
  return os.str();
}

GroundSet parse_inline(const std::string& s, const Ambient& amb) {
  if (amb.width() != 1) throw Unsupported("inline sets are scalar only");
  std::string t = s;
  for (auto& ch : t)
    if (ch == ',' || ch == ';') ch = ' ';
  std::istringstream is(t);
  std::string tok;
  std::vector<int64_t> v;
  while (is >> tok) v.push_back(parse_int(tok, 1));
  return GroundSet(amb, std::move(v));
}

}  // namespace adlab
