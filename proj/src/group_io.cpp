#include "ppfun/group_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "ppfun/construct.hpp"
#include "ppfun/error.hpp"

namespace ppfun {

namespace {

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::string strip_comment(const std::string& line) {
  size_t h = line.find('#');
  return strip(h == std::string::npos ? line : line.substr(0, h));
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(std::stoi(strip(cur)));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!strip(cur).empty()) out.push_back(std::stoi(strip(cur)));
  return out;
}

}  // namespace

AutMap parse_automorphism(const PermGroup& L, const std::string& spec) {
  std::string s = strip(spec);
  if (s == "identity" || s == "id" || s == "1") return AutMap::identity(L);
  std::vector<int> img = parse_int_list(s);
  if (static_cast<long>(img.size()) != L.order())
    fail(errc::parse_error, "automorphism image list must have one entry per group element (" +
                                std::to_string(L.order()) + " expected)");
  AutMap a(L, std::move(img));
  if (!a.is_automorphism()) fail(errc::parse_error, "image list does not define an automorphism");
  return a;
}

PermGroup parse_group_text(const std::string& text, long order_cap) {
  int degree = -1;
  std::vector<Perm> gens;
  std::string name_line, sd_line;
  std::vector<std::string> gen_lines;

  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    std::string line = strip_comment(raw);
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string head;
    ls >> head;
    std::string rest = strip(line.substr(head.size()));
    if (head == "degree") {
      degree = std::stoi(rest);
    } else if (head == "gen") {
      gen_lines.push_back(rest);
    } else if (head == "name") {
      name_line = rest;
    } else if (head == "semidirect") {
      sd_line = rest;
    } else {
      fail(errc::parse_error, "unknown directive in group definition: " + head);
    }
  }

  if (!name_line.empty()) return PermGroup::named(name_line, order_cap);

  if (!sd_line.empty()) {
    std::string base_src, auto_spec;
    std::istringstream ls(sd_line);
    std::string tok;
    while (ls >> tok) {
      if (tok.rfind("base=", 0) == 0) base_src = tok.substr(5);
      else if (tok.rfind("auto=", 0) == 0) auto_spec = tok.substr(5);
      else fail(errc::parse_error, "semidirect expects base=... auto=...: " + tok);
    }
    if (base_src.empty() || auto_spec.empty()) fail(errc::parse_error, "semidirect expects base=... auto=...");
    PermGroup L = load_group(base_src, order_cap);
    AutMap u = parse_automorphism(L, auto_spec);
    if (L.order() * u.order() > order_cap) fail(errc::closure_exceeds_cap, "semidirect product exceeds order cap");
    return semidirect(L, u).group;
  }

  if (degree < 1) fail(errc::parse_error, "group definition needs a degree line");
  for (const std::string& g : gen_lines) gens.push_back(Perm::from_cycles(degree, g));
  if (gens.empty()) gens.push_back(Perm(degree));
  return PermGroup::from_generators(degree, gens, order_cap);
}

PermGroup load_group(const std::string& source, long order_cap) {
  std::ifstream f(source);
  if (f.good()) {
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_group_text(ss.str(), order_cap);
  }
  return PermGroup::named(source, order_cap);
}

}  // namespace ppfun
